#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crglobal/error.hpp"

namespace crglobal {

  using elem_t = std::uint32_t;

  // A finite semigroup given by its multiplication table over 0..n-1.
  // Instances are immutable; the only ways to obtain one are validate_table
  // and CayleyTable::trusted (for tables that are associative by
  // construction, such as power semigroups).
  class CayleyTable {
   public:
    CayleyTable() = default;

    static CayleyTable trusted(std::size_t n,
                               std::vector<elem_t> data,
                               std::vector<std::string> labels = {});

    std::size_t order() const noexcept {
      return _n;
    }

    elem_t operator()(elem_t a, elem_t b) const noexcept {
      return _data[a * _n + b];
    }

    std::vector<elem_t> const& data() const noexcept {
      return _data;
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    std::string label(elem_t a) const;

    std::vector<std::vector<long long>> grid() const;

    bool is_idempotent(elem_t a) const noexcept {
      return (*this)(a, a) == a;
    }

    std::vector<elem_t> idempotents() const;

    bool operator==(CayleyTable const& that) const {
      return _n == that._n && _data == that._data;
    }

   private:
    std::size_t              _n = 0;
    std::vector<elem_t>      _data;
    std::vector<std::string> _labels;

    friend CayleyTable validate_table(std::vector<std::vector<long long>> const&,
                                      std::vector<std::string>);
  };

  // Checks shape, range and associativity. Throws error(out_of_range) with the
  // first offending cell, or error(not_associative) with the first failing
  // triple in lexicographic order.
  CayleyTable validate_table(std::vector<std::vector<long long>> const& grid,
                             std::vector<std::string> labels = {});

  // First (i, j, k) with (ij)k != i(jk), or nullopt.
  std::optional<std::array<elem_t, 3>> first_nonassociative_triple(
      std::size_t n,
      std::vector<elem_t> const& data);

  // The table of S restricted to `elements`, relabelled 0..k-1 in ascending
  // order of the original indices. Throws not_subsemigroup if not closed.
  CayleyTable subtable(CayleyTable const& S, std::vector<elem_t> const& elements);

  // Relabels S so that element a becomes perm[a].
  CayleyTable relabel(CayleyTable const& S, std::vector<elem_t> const& perm);

  bool is_left_zero(CayleyTable const& S);
  bool is_right_zero(CayleyTable const& S);
  bool is_commutative(CayleyTable const& S);
  bool is_band(CayleyTable const& S);

}  // namespace crglobal
