#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "crglobal/error.hpp"
#include "crglobal/table.hpp"

namespace crglobal {

  using mask_t = std::uint32_t;

  inline constexpr std::size_t max_subset_order = 31;

  inline mask_t full_mask(std::size_t n) noexcept {
    return static_cast<mask_t>((std::uint64_t{1} << n) - 1);
  }

  // A nonempty subset of a semigroup of order n <= 31, i.e. an element of P(S).
  class Subset {
   public:
    Subset() = default;

    // Throws empty_subset if mask == 0, out_of_range if mask has bits >= n.
    Subset(std::size_t n, mask_t mask);

    static Subset of(std::size_t n, std::initializer_list<elem_t> elems);
    static Subset of(std::size_t n, std::vector<elem_t> const& elems);
    static Subset singleton(std::size_t n, elem_t a) {
      return Subset(n, mask_t{1} << a);
    }
    static Subset full(std::size_t n) {
      return Subset(n, full_mask(n));
    }

    std::size_t parent_order() const noexcept {
      return _n;
    }
    mask_t mask() const noexcept {
      return _mask;
    }
    std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_mask));
    }
    bool contains(elem_t a) const noexcept {
      return (_mask >> a) & 1U;
    }
    bool is_subset_of(Subset const& that) const noexcept {
      return (_mask & ~that._mask) == 0;
    }
    bool is_singleton() const noexcept {
      return std::has_single_bit(_mask);
    }
    elem_t min() const noexcept {
      return static_cast<elem_t>(std::countr_zero(_mask));
    }

    std::vector<elem_t> elements() const;
    std::string         to_string() const;  // "{0,2,3}"

    bool operator==(Subset const&) const = default;
    auto operator<=>(Subset const&) const = default;

   private:
    std::uint8_t _n    = 0;
    mask_t       _mask = 0;
  };

  template <typename F>
  void for_each_bit(mask_t m, F&& f) {
    while (m != 0) {
      f(static_cast<elem_t>(std::countr_zero(m)));
      m &= m - 1;
    }
  }

}  // namespace crglobal
