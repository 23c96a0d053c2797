#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "crglobal/green.hpp"
#include "crglobal/subset.hpp"
#include "crglobal/table.hpp"

namespace crglobal {

  enum class component_kind { left_zero, right_zero, cs0 };

  char const* to_string(component_kind k) noexcept;

  using comp_t = std::uint32_t;

  // A set of component ids, as a bitmask over the structure semilattice.
  struct IdSet {
    std::uint64_t mask = 0;

    bool contains(comp_t alpha) const noexcept {
      return (mask >> alpha) & 1U;
    }
    std::size_t size() const noexcept;
    std::vector<comp_t> elements() const;
    bool operator==(IdSet const&) const = default;
  };

  // S = [Y; S_alpha]: components are the D-classes, numbered by their smallest
  // element, and Y is the quotient S/D.
  class Decomposition {
   public:
    CayleyTable                       semilattice;
    std::vector<comp_t>               component_of;
    std::vector<std::vector<elem_t>>  components;
    std::vector<component_kind>       classification;
    GreenData                         green;

    std::size_t number_of_components() const noexcept {
      return components.size();
    }

    // alpha <= beta in Y.
    bool leq(comp_t alpha, comp_t beta) const noexcept {
      return semilattice(alpha, beta) == alpha;
    }

    bool less(comp_t alpha, comp_t beta) const noexcept {
      return alpha != beta && leq(alpha, beta);
    }

    bool comparable(comp_t alpha, comp_t beta) const noexcept {
      return leq(alpha, beta) || leq(beta, alpha);
    }

    Subset component_subset(comp_t alpha) const;

    IdSet product(IdSet const& x, IdSet const& y) const;

    // alpha is maximal among the members of ids.
    bool is_maximal_in(comp_t alpha, IdSet const& ids) const;

    bool is_chain(IdSet const& ids) const;
  };

  // Throws not_completely_regular, or not_simple_component if a D-class fails
  // to be a completely simple subsemigroup (which would be a bug).
  Decomposition decompose(CayleyTable const& S);

  IdSet id_set(Subset const& A, Decomposition const& D);

  // A ∩ S_alpha, or nullopt when the intersection is empty.
  std::optional<Subset> component_slice(Subset const&        A,
                                        comp_t               alpha,
                                        Decomposition const& D);

}  // namespace crglobal
