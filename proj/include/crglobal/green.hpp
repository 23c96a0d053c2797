#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crglobal/table.hpp"

namespace crglobal {

  // Green's relations of a finite semigroup. Class ids are numbered in order
  // of their smallest element, so element 0 is always in class 0.
  struct GreenData {
    std::vector<std::size_t>           lclass;
    std::vector<std::size_t>           rclass;
    std::vector<std::size_t>           hclass;
    std::vector<std::size_t>           dclass;
    std::vector<bool>                  idempotent;
    std::vector<std::optional<elem_t>> local_identity;  // a^0, iff H_a is a group
    std::vector<std::optional<elem_t>> local_inverse;   // a^-1, iff H_a is a group

    std::size_t order() const noexcept {
      return lclass.size();
    }

    std::size_t number_of_l_classes() const;
    std::size_t number_of_r_classes() const;
    std::size_t number_of_h_classes() const;
    std::size_t number_of_d_classes() const;

    // Elements of the class with the given id in ascending order.
    static std::vector<elem_t> members(std::vector<std::size_t> const& cls,
                                       std::size_t                     id);
  };

  GreenData green_relations(CayleyTable const& S);

  // J-classes from two-sided principal ideals S^1 a S^1, computed without
  // reference to L or R.
  std::vector<std::size_t> j_classes(CayleyTable const& S);

  // Every H-class is a group.
  bool is_completely_regular(CayleyTable const& S);
  bool is_completely_regular(GreenData const& g);

  // Checks a = (ax)^0 a for all a, x. Throws not_completely_regular.
  bool is_completely_simple(CayleyTable const& S);

  struct NaturalOrder {
    std::size_t       n = 0;
    std::vector<char> leq;  // row-major, leq[a * n + b] iff a <= b
    std::vector<bool> maximal;

    bool operator()(elem_t a, elem_t b) const noexcept {
      return leq[a * n + b] != 0;
    }
  };

  // a <= b iff a = eb = bf for some e, f in E.
  NaturalOrder natural_order(CayleyTable const& S, std::vector<elem_t> const& E);
  NaturalOrder natural_order(CayleyTable const& S);

}  // namespace crglobal
