#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crglobal/power.hpp"

namespace crglobal {

  // (A_n): every product a_1 ... a_n of elements of A lies in {a_1, ..., a_n}.
  // Throws not_subsemigroup if A is not closed.
  bool satisfies_an(PowerSemigroup const& P, Subset const& A, std::size_t n);

  // Membership tests that never throw.
  bool is_a2(PowerSemigroup const& P, mask_t A);
  bool is_a3(PowerSemigroup const& P, mask_t A);
  bool is_a2bar(PowerSemigroup const& P, mask_t A);  // false unless S is CR

  std::vector<Subset> enumerate_a2(PowerSemigroup const& P,
                                   std::size_t           bound = default_scan_bound(),
                                   exec                  e     = exec::parallel);
  std::vector<Subset> enumerate_a3(PowerSemigroup const& P,
                                   std::size_t           bound = default_scan_bound(),
                                   exec                  e     = exec::parallel);
  // Throws not_completely_regular.
  std::vector<Subset> enumerate_a2bar(PowerSemigroup const& P,
                                      std::size_t           bound = default_scan_bound(),
                                      exec                  e     = exec::parallel);

  enum class chunk_kind { left_zero, right_zero, order_two_group_top };

  char const* to_string(chunk_kind k) noexcept;

  // A subsemigroup satisfying (A_3) as a chain of pairwise disjoint chunks,
  // lowest first. A lower chunk absorbs a higher one on both sides: ab = ba = a.
  struct BreakableForm {
    std::vector<Subset>     chain;
    std::vector<chunk_kind> kinds;

    bool is_breakable() const noexcept {
      return kinds.empty() || kinds.back() != chunk_kind::order_two_group_top;
    }
  };

  // Throws not_a3.
  BreakableForm structural_form(PowerSemigroup const& P, Subset const& A);

  // Checks the form's invariants against S and that the chunks reconstruct A.
  bool verify_form(PowerSemigroup const& P, Subset const& A, BreakableForm const& F);

  struct Characterization {
    bool                  holds = true;
    std::optional<Subset> counterexample;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // For A in EP(S): no B != A with B^2 = BA = A. The smallest counterexample
  // B is reported. Throws not_idempotent or order_too_large.
  Characterization a3_characterization(PowerSemigroup const& P,
                                       Subset const&         A,
                                       std::size_t           bound = default_scan_bound(),
                                       exec                  e     = exec::parallel);

  // For A in A3(S): every B with AS = BS and BA = AB = A is idempotent.
  // Throws not_a3 or order_too_large.
  Characterization a2_characterization(PowerSemigroup const& P,
                                       Subset const&         A,
                                       std::size_t           bound = default_scan_bound(),
                                       exec                  e     = exec::parallel);

}  // namespace crglobal
