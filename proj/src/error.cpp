#include "crglobal/error.hpp"

namespace crglobal {

  std::string_view to_string(error_kind k) noexcept {
    switch (k) {
      case error_kind::out_of_range: return "OutOfRange";
      case error_kind::not_associative: return "NotAssociative";
      case error_kind::not_completely_regular: return "NotCompletelyRegular";
      case error_kind::not_simple_component: return "NotSimpleComponent";
      case error_kind::empty_subset: return "EmptySubset";
      case error_kind::parent_mismatch: return "ParentMismatch";
      case error_kind::order_too_large: return "OrderTooLarge";
      case error_kind::not_idempotent: return "NotIdempotent";
      case error_kind::not_comparable: return "NotComparable";
      case error_kind::not_idempotent_element: return "NotIdempotentElement";
      case error_kind::not_left_zero: return "NotLeftZero";
      case error_kind::not_subsemigroup: return "NotSubsemigroup";
      case error_kind::not_a3: return "NotA3";
      case error_kind::bad_spec: return "BadSpec";
      case error_kind::search_budget_exceeded: return "SearchBudgetExceeded";
      case error_kind::theta_not_singleton: return "ThetaNotSingleton";
      case error_kind::wrong_component_kind: return "WrongComponentKind";
      case error_kind::psi_image_not_singleton: return "PsiImageNotSingleton";
      case error_kind::block_size_mismatch: return "BlockSizeMismatch";
      case error_kind::eta_not_morphism: return "EtaNotMorphism";
      case error_kind::parse_error: return "ParseError";
    }
    return "Unknown";
  }

}  // namespace crglobal
