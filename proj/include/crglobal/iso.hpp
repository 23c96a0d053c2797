#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "crglobal/table.hpp"

namespace crglobal {

  enum class carrier { elements, subsets, components };

  char const* to_string(carrier c) noexcept;

  // A bijection between two carriers. For subsets, index k stands for the
  // subset with mask k + 1, so a map between power tables is also a map
  // between masks.
  struct IsoMap {
    carrier             domain   = carrier::elements;
    carrier             codomain = carrier::elements;
    std::vector<elem_t> forward;
    std::vector<elem_t> inverse;
    bool                verified = false;

    std::size_t size() const noexcept {
      return forward.size();
    }
    elem_t operator()(elem_t x) const noexcept {
      return forward[x];
    }
    bool operator==(IsoMap const& that) const {
      return forward == that.forward;
    }
  };

  // f is a bijection 0..n-1 -> 0..n-1.
  bool is_bijection(std::vector<elem_t> const& f);

  // f is a bijection with f(xy) = f(x)f(y).
  bool is_isomorphism(CayleyTable const& A, CayleyTable const& B, std::vector<elem_t> const& f);

  // Builds the inverse and sets `verified` from is_isomorphism. Throws
  // out_of_range if f is not a bijection.
  IsoMap make_iso_map(CayleyTable const&  A,
                      CayleyTable const&  B,
                      std::vector<elem_t> f,
                      carrier             c = carrier::elements);

  // Per-element invariants preserved by every isomorphism: row and column
  // profiles, idempotency, Green's class sizes, index and period.
  std::vector<std::vector<std::uint64_t>> element_invariants(CayleyTable const& S);

  inline constexpr std::uint64_t default_search_budget = 50'000'000;

  // Up to `limit` isomorphisms A -> B in lexicographic order of the forward
  // map. An empty result means A and B are not isomorphic. Throws
  // search_budget_exceeded after `budget` search nodes.
  std::vector<IsoMap> find_isomorphisms(CayleyTable const& A,
                                        CayleyTable const& B,
                                        std::size_t        limit,
                                        std::uint64_t      budget = default_search_budget,
                                        carrier            c      = carrier::elements);

}  // namespace crglobal
