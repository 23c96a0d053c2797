#include "crglobal/table.hpp"

#include <algorithm>
#include <string>

namespace crglobal {

  namespace {
    std::string triple(std::size_t i, std::size_t j, std::size_t k) {
      return "(" + std::to_string(i) + "," + std::to_string(j) + ","
             + std::to_string(k) + ")";
    }
  }  // namespace

  CayleyTable CayleyTable::trusted(std::size_t              n,
                                   std::vector<elem_t>      data,
                                   std::vector<std::string> labels) {
    if (n == 0 || data.size() != n * n) {
      throw error(error_kind::out_of_range, "table is not n x n with n >= 1");
    }
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (data[i] >= n) {
        throw error(error_kind::out_of_range,
                    "entry at (" + std::to_string(i / n) + ","
                        + std::to_string(i % n) + ")");
      }
    }
    if (!labels.empty() && labels.size() != n) {
      throw error(error_kind::out_of_range, "label count differs from order");
    }
    CayleyTable t;
    t._n      = n;
    t._data   = std::move(data);
    t._labels = std::move(labels);
    return t;
  }

  std::string CayleyTable::label(elem_t a) const {
    return _labels.empty() ? std::to_string(a) : _labels[a];
  }

  std::vector<std::vector<long long>> CayleyTable::grid() const {
    std::vector<std::vector<long long>> g(_n, std::vector<long long>(_n));
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        g[i][j] = _data[i * _n + j];
      }
    }
    return g;
  }

  std::vector<elem_t> CayleyTable::idempotents() const {
    std::vector<elem_t> out;
    for (elem_t a = 0; a < _n; ++a) {
      if (is_idempotent(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::optional<std::array<elem_t, 3>>
  first_nonassociative_triple(std::size_t n, std::vector<elem_t> const& d) {
    for (elem_t i = 0; i < n; ++i) {
      for (elem_t j = 0; j < n; ++j) {
        elem_t const ij = d[i * n + j];
        for (elem_t k = 0; k < n; ++k) {
          if (d[ij * n + k] != d[i * n + d[j * n + k]]) {
            return std::array<elem_t, 3>{i, j, k};
          }
        }
      }
    }
    return std::nullopt;
  }

  CayleyTable validate_table(std::vector<std::vector<long long>> const& grid,
                             std::vector<std::string>                   labels) {
    std::size_t const n = grid.size();
    if (n == 0) {
      throw error(error_kind::out_of_range, "empty table");
    }
    std::vector<elem_t> data;
    data.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (grid[i].size() != n) {
        throw error(error_kind::out_of_range,
                    "row " + std::to_string(i) + " has "
                        + std::to_string(grid[i].size()) + " entries, expected "
                        + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        long long const v = grid[i][j];
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
          throw error(error_kind::out_of_range,
                      "entry (" + std::to_string(i) + "," + std::to_string(j)
                          + ") = " + std::to_string(v));
        }
        data.push_back(static_cast<elem_t>(v));
      }
    }
    if (auto t = first_nonassociative_triple(n, data)) {
      throw error(error_kind::not_associative,
                  "triple " + triple((*t)[0], (*t)[1], (*t)[2]));
    }
    return CayleyTable::trusted(n, std::move(data), std::move(labels));
  }

  CayleyTable subtable(CayleyTable const& S, std::vector<elem_t> const& elements) {
    std::vector<elem_t> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<long> index(S.order(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      index[sorted[i]] = static_cast<long>(i);
    }
    std::size_t const   k = sorted.size();
    std::vector<elem_t> data(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        long const p = index[S(sorted[i], sorted[j])];
        if (p < 0) {
          throw error(error_kind::not_subsemigroup,
                      "product of " + std::to_string(sorted[i]) + " and "
                          + std::to_string(sorted[j]) + " leaves the subset");
        }
        data[i * k + j] = static_cast<elem_t>(p);
      }
    }
    std::vector<std::string> labels;
    if (!S.labels().empty()) {
      for (auto a : sorted) {
        labels.push_back(S.label(a));
      }
    }
    return CayleyTable::trusted(k, std::move(data), std::move(labels));
  }

  CayleyTable relabel(CayleyTable const& S, std::vector<elem_t> const& perm) {
    std::size_t const   n = S.order();
    std::vector<elem_t> data(n * n);
    for (elem_t a = 0; a < n; ++a) {
      for (elem_t b = 0; b < n; ++b) {
        data[perm[a] * n + perm[b]] = perm[S(a, b)];
      }
    }
    std::vector<std::string> labels;
    if (!S.labels().empty()) {
      labels.resize(n);
      for (elem_t a = 0; a < n; ++a) {
        labels[perm[a]] = S.labels()[a];
      }
    }
    return CayleyTable::trusted(n, std::move(data), std::move(labels));
  }

  bool is_left_zero(CayleyTable const& S) {
    for (elem_t a = 0; a < S.order(); ++a) {
      for (elem_t x = 0; x < S.order(); ++x) {
        if (S(a, x) != a) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_right_zero(CayleyTable const& S) {
    for (elem_t a = 0; a < S.order(); ++a) {
      for (elem_t x = 0; x < S.order(); ++x) {
        if (S(x, a) != a) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_commutative(CayleyTable const& S) {
    for (elem_t a = 0; a < S.order(); ++a) {
      for (elem_t b = a + 1; b < S.order(); ++b) {
        if (S(a, b) != S(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_band(CayleyTable const& S) {
    for (elem_t a = 0; a < S.order(); ++a) {
      if (!S.is_idempotent(a)) {
        return false;
      }
    }
    return true;
  }

}  // namespace crglobal
