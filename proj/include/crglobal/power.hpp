#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crglobal/kernels.hpp"
#include "crglobal/structure.hpp"
#include "crglobal/subset.hpp"
#include "crglobal/table.hpp"

namespace crglobal {

  // Bound on the order of S for scans over all 2^n - 1 subsets.
  // CRGLOBAL_MAX_ORDER overrides the fallback when set.
  std::size_t default_scan_bound(std::size_t fallback = 16);

  // The global P(S). Never materialised as a table: products are computed from
  // a per-element image table img[a][B] = aB, so AB is the union of img[a][B]
  // over a in A (|A| lookups). The image table is built once, eagerly, and is
  // read-only afterwards, so a PowerSemigroup can be shared between threads.
  class PowerSemigroup {
   public:
    static constexpr std::size_t dense_limit = 16;

    explicit PowerSemigroup(CayleyTable S, exec e = exec::parallel);

    CayleyTable const& base() const noexcept {
      return _S;
    }
    std::size_t order() const noexcept {
      return _S.order();
    }
    // Number of nonempty subsets.
    std::uint64_t size() const noexcept {
      return (std::uint64_t{1} << order()) - 1;
    }
    mask_t full() const noexcept {
      return full_mask(order());
    }

    // Present iff S is completely regular.
    std::optional<Decomposition> const& decomposition() const noexcept {
      return _decomposition;
    }

    mask_t product(mask_t A, mask_t B) const noexcept;
    mask_t product(mask_t A, mask_t B, mask_t C) const noexcept {
      return product(product(A, B), C);
    }

    // Throws parent_mismatch.
    Subset product(Subset const& A, Subset const& B) const;

    bool is_idempotent(mask_t A) const noexcept {
      return product(A, A) == A;
    }
    bool is_subsemigroup(mask_t A) const noexcept {
      return (product(A, A) & ~A) == 0;
    }

    Subset subset(mask_t m) const {
      return Subset(order(), m);
    }

   private:
    CayleyTable                  _S;
    std::vector<mask_t>          _image;  // empty when order() > dense_limit
    std::optional<Decomposition> _decomposition;
  };

  namespace kernels {
    // img[(a << n) | B] = aB for n = S.order().
    std::vector<mask_t> image_table_serial(CayleyTable const& S);
    std::vector<mask_t> image_table_parallel(CayleyTable const& S);
  }  // namespace kernels

  Subset subset_product(PowerSemigroup const& P, Subset const& A, Subset const& B);

  bool is_idempotent_subset(PowerSemigroup const& P, Subset const& A);

  // All A with AA = A, ascending by mask. Throws order_too_large.
  std::vector<Subset> enumerate_ep(PowerSemigroup const& P,
                                   std::size_t           bound = default_scan_bound(),
                                   exec                  e     = exec::parallel);

  // A <= B iff A = AB = BA. Throws not_idempotent.
  bool ep_leq(PowerSemigroup const& P, Subset const& A, Subset const& B);

  enum class cover_kind { ep, a2, a2bar };

  char const* to_string(cover_kind k) noexcept;

  // A < B with no C of the given kind strictly between. Throws not_comparable
  // unless A < B; a2bar needs S completely regular.
  bool covers(PowerSemigroup const& P, Subset const& A, Subset const& B, cover_kind kind);

  // AS and A S^1 = A ∪ AS.
  Subset right_ideal(PowerSemigroup const& P, Subset const& A);
  Subset right_ideal_s1(PowerSemigroup const& P, Subset const& A);
  Subset left_ideal(PowerSemigroup const& P, Subset const& A);

  // Green's relations inside P(S), by definition: A R B iff A P(S)^1 = B P(S)^1.
  bool power_r_related(PowerSemigroup const& P, mask_t A, mask_t B);
  bool power_l_related(PowerSemigroup const& P, mask_t A, mask_t B);

  // The H-class of A in P(S). When S is completely regular the search only
  // visits subsets with the same id set as A.
  std::vector<Subset> power_h_class(PowerSemigroup const& P, Subset const& A);

  // H-class of {e} in P(S). Throws not_idempotent_element.
  std::vector<Subset> power_h_of_idempotent_singleton(PowerSemigroup const& P, elem_t e);

  // H-class of a left zero subsemigroup E in P(S). Throws not_left_zero.
  std::vector<Subset> power_h_of_left_zero_set(PowerSemigroup const& P, Subset const& E);

  // {Ea | a in H_e(S)} for e in E.
  std::vector<Subset> translates_of_left_zero_set(PowerSemigroup const& P,
                                                  Subset const&         E,
                                                  elem_t                e);

}  // namespace crglobal
