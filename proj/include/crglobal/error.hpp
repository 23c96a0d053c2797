#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crglobal {

  enum class error_kind {
    out_of_range,
    not_associative,
    not_completely_regular,
    not_simple_component,
    empty_subset,
    parent_mismatch,
    order_too_large,
    not_idempotent,
    not_comparable,
    not_idempotent_element,
    not_left_zero,
    not_subsemigroup,
    not_a3,
    bad_spec,
    search_budget_exceeded,
    theta_not_singleton,
    wrong_component_kind,
    psi_image_not_singleton,
    block_size_mismatch,
    eta_not_morphism,
    parse_error,
  };

  std::string_view to_string(error_kind k) noexcept;

  // Every failure raised by the library carries its kind so that callers (the
  // CLI in particular) can map it to an exit code without string matching.
  class error : public std::runtime_error {
   public:
    error(error_kind k, std::string const& msg)
        : std::runtime_error(std::string(to_string(k)) + ": " + msg), _kind(k) {}

    error_kind kind() const noexcept {
      return _kind;
    }

    // Errors that falsify a statement about power semigroups, as opposed to
    // bad input or exceeded bounds.
    bool is_falsification() const noexcept {
      return _kind == error_kind::theta_not_singleton
             || _kind == error_kind::psi_image_not_singleton
             || _kind == error_kind::block_size_mismatch
             || _kind == error_kind::eta_not_morphism;
    }

   private:
    error_kind _kind;
  };

}  // namespace crglobal
