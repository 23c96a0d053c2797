#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "crglobal/green.hpp"
#include "crglobal/iso.hpp"
#include "crglobal/power.hpp"
#include "crglobal/structure.hpp"

namespace crglobal {

  inline constexpr std::size_t default_power_table_bound = std::size_t{1} << 15;

  // P(S) as a Cayley table: element k is the subset with mask k + 1.
  // Throws order_too_large when 2^n - 1 > bound.
  CayleyTable power_table(CayleyTable const& S, std::size_t bound = default_power_table_bound);

  // psi(A) = {phi(a) | a in A}.
  IsoMap lift(IsoMap const& phi);

  inline mask_t apply(IsoMap const& psi, mask_t A) noexcept {
    return psi.forward[A - 1] + 1;
  }
  inline mask_t apply_inverse(IsoMap const& psi, mask_t X) noexcept {
    return psi.inverse[X - 1] + 1;
  }

  // A verified isomorphism P(S) -> P(S') between completely regular S, S'.
  // Throws not_completely_regular, parent_mismatch or out_of_range if the
  // arguments do not fit together; never checks the morphism property again.
  // Holds references, so the arguments must outlive it.
  struct GlobalIso {
    PowerSemigroup const& source;
    PowerSemigroup const& target;
    IsoMap const&         psi;

    GlobalIso(PowerSemigroup const& P, PowerSemigroup const& Q, IsoMap const& m);

    Decomposition const& D() const {
      return *source.decomposition();
    }
    Decomposition const& Dt() const {
      return *target.decomposition();
    }
    mask_t operator()(mask_t A) const noexcept {
      return apply(psi, A);
    }
    mask_t inverse(mask_t X) const noexcept {
      return apply_inverse(psi, X);
    }
  };

  // theta(alpha) is the single component met by psi(S_alpha). Throws
  // theta_not_singleton if some id psi(S_alpha) is not a singleton, theta is
  // not a semilattice isomorphism, or psi(P(S_alpha)) != P(S'_theta(alpha)).
  IsoMap extract_theta(GlobalIso const& g);

  // rho_alpha on a left or right zero component alpha. Blocks are sorted,
  // ordered by smallest element; block_of is indexed by elements of S and is
  // npos outside S_alpha.
  struct RhoPartition {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    comp_t                           component = 0;
    std::vector<std::vector<elem_t>> blocks;
    std::vector<std::size_t>         block_of;
    std::vector<bool>                maximal;

    bool related(elem_t a, elem_t b) const noexcept {
      return block_of[a] != npos && block_of[a] == block_of[b];
    }
  };

  // Throws wrong_component_kind for a CS0 component.
  RhoPartition rho_partition(CayleyTable const&   S,
                             Decomposition const& D,
                             comp_t               alpha,
                             NaturalOrder const&  order);

  // eta: S -> S' built from psi: psi itself on CS0 components, and on left or
  // right zero components the pairing of rho blocks (ascending index within
  // size-matched blocks). Throws psi_image_not_singleton,
  // block_size_mismatch or eta_not_morphism; all three falsify a theorem.
  IsoMap construct_eta(GlobalIso const& g);

  struct StatementResult {
    std::string   id;
    std::string   anchor;  // the property in words
    std::uint64_t checked = 0;
    bool          pass    = true;
    std::string   witness;
  };

  // Every statement about psi is evaluated exhaustively; results come in a
  // fixed order of statement ids. Throws order_too_large if |S| exceeds bound.
  std::vector<StatementResult> verify_statement_suite(GlobalIso const& g,
                                                      std::size_t      bound = 6);

  // All statement ids in report order.
  std::vector<std::string> const& statement_ids();

}  // namespace crglobal
