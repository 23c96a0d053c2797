#include "crglobal/subset.hpp"

namespace crglobal {

  Subset::Subset(std::size_t n, mask_t mask) {
    if (n == 0 || n > max_subset_order) {
      throw error(error_kind::order_too_large,
                  "subsets need 1 <= n <= " + std::to_string(max_subset_order)
                      + ", got " + std::to_string(n));
    }
    if (mask == 0) {
      throw error(error_kind::empty_subset, "elements of P(S) are nonempty");
    }
    if ((mask & ~full_mask(n)) != 0) {
      throw error(error_kind::out_of_range,
                  "mask " + std::to_string(mask) + " exceeds order "
                      + std::to_string(n));
    }
    _n    = static_cast<std::uint8_t>(n);
    _mask = mask;
  }

  Subset Subset::of(std::size_t n, std::initializer_list<elem_t> elems) {
    return of(n, std::vector<elem_t>(elems));
  }

  Subset Subset::of(std::size_t n, std::vector<elem_t> const& elems) {
    mask_t m = 0;
    for (elem_t a : elems) {
      if (a >= n) {
        throw error(error_kind::out_of_range, "element " + std::to_string(a));
      }
      m |= mask_t{1} << a;
    }
    return Subset(n, m);
  }

  std::vector<elem_t> Subset::elements() const {
    std::vector<elem_t> out;
    for_each_bit(_mask, [&out](elem_t a) { out.push_back(a); });
    return out;
  }

  std::string Subset::to_string() const {
    std::string s = "{";
    bool        first = true;
    for_each_bit(_mask, [&](elem_t a) {
      if (!first) {
        s += ',';
      }
      s += std::to_string(a);
      first = false;
    });
    return s + "}";
  }

}  // namespace crglobal
