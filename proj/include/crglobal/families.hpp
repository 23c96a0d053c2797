#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "crglobal/kernels.hpp"
#include "crglobal/table.hpp"

namespace crglobal {

  namespace family {
    struct LeftZero {
      std::size_t n;
    };
    struct RightZero {
      std::size_t n;
    };
    struct CyclicGroup {
      std::size_t n;
    };
    struct KleinFour {};
    struct RectBand {
      std::size_t rows;  // (i, λ)(j, μ) = (i, μ)
      std::size_t cols;
    };
    // M[G; I, Λ; P] with P a |Λ| x |I| matrix over G and
    // (i, g, λ)(j, h, μ) = (i, g p_{λ j} h, μ).
    struct ReesMatrix {
      CayleyTable                      group;
      std::vector<std::vector<elem_t>> sandwich;
    };
    // Components indexed like the elements of the semilattice; homs[{α, β}]
    // maps S_α into S_β for β <= α (identity on the diagonal by default).
    struct StrongSemilattice {
      CayleyTable                                           semilattice;
      std::vector<CayleyTable>                              components;
      std::map<std::pair<std::size_t, std::size_t>, std::vector<elem_t>> homs;
    };
    struct DirectProduct {
      CayleyTable left;
      CayleyTable right;
    };
    struct Explicit {
      CayleyTable table;
    };
  }  // namespace family

  using FamilySpec = std::variant<family::LeftZero,
                                  family::RightZero,
                                  family::CyclicGroup,
                                  family::KleinFour,
                                  family::RectBand,
                                  family::ReesMatrix,
                                  family::StrongSemilattice,
                                  family::DirectProduct,
                                  family::Explicit>;

  // Throws bad_spec with a reason.
  CayleyTable build(FamilySpec const& spec);

  // The sandwich matrix with first row and first column equal to the
  // identity of the group; the resulting Rees matrix semigroup is isomorphic.
  std::vector<std::vector<elem_t>> normalise_sandwich(CayleyTable const& group,
                                                      std::vector<std::vector<elem_t>> P);

  // Lexicographically least relabelling of S over all permutations of its
  // elements (n! of them, so small n only).
  CayleyTable canonical_form(CayleyTable const& S);

  // All semigroups of order n <= 3 up to isomorphism that pass the filter, in
  // ascending order of canonical table. Throws order_too_large.
  std::vector<CayleyTable> enumerate_small(
      std::size_t                                   n,
      std::function<bool(CayleyTable const&)> const& filter = {},
      exec                                          e      = exec::parallel);

  struct NamedTable {
    std::string name;
    CayleyTable table;
  };

  enum class corpus_profile { exhaustive3, cr_families, full };

  // Deterministic corpus: "small-<n>-<k>" members from enumerate_small and
  // named constructed families (all completely regular) up to order 10.
  std::vector<NamedTable> corpus(corpus_profile profile);

  // Looks a member of corpus(full) up by name; throws bad_spec if absent.
  CayleyTable corpus_member(std::string const& name);

  // A completely regular semigroup of order 12 outside the corpus: the chain
  // of length two times Z2 x R3. Two components, neither a band nor simple.
  NamedTable order12_member();

}  // namespace crglobal
