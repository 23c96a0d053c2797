#pragma once

// Data-parallel scans over subset masks. Every kernel has a serial reference
// version; the OpenMP versions must return exactly what the serial ones do
// (ascending order, smallest witness), which the tests check.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "crglobal/subset.hpp"

namespace crglobal {

  enum class exec { serial, parallel };

  namespace kernels {

    inline int max_threads() {
#ifdef _OPENMP
      return omp_get_max_threads();
#else
      return 1;
#endif
    }

    // Masks m in [first, last) with pred(m), ascending.
    template <typename Pred>
    std::vector<mask_t> filter_serial(std::uint64_t first, std::uint64_t last, Pred&& pred) {
      std::vector<mask_t> out;
      for (std::uint64_t m = first; m < last; ++m) {
        if (pred(static_cast<mask_t>(m))) {
          out.push_back(static_cast<mask_t>(m));
        }
      }
      return out;
    }

    template <typename Pred>
    std::vector<mask_t> filter_parallel(std::uint64_t first, std::uint64_t last, Pred&& pred) {
      if (last <= first) {
        return {};
      }
      std::vector<char> hit(last - first, 0);
      auto const        count = static_cast<std::int64_t>(last - first);
#pragma omp parallel for schedule(dynamic, 256)
      for (std::int64_t i = 0; i < count; ++i) {
        hit[i] = pred(static_cast<mask_t>(first + i)) ? 1 : 0;
      }
      std::vector<mask_t> out;
      for (std::int64_t i = 0; i < count; ++i) {
        if (hit[i]) {
          out.push_back(static_cast<mask_t>(first + i));
        }
      }
      return out;
    }

    template <typename Pred>
    std::vector<mask_t> filter(exec e, std::uint64_t first, std::uint64_t last, Pred&& pred) {
      return e == exec::serial ? filter_serial(first, last, pred)
                               : filter_parallel(first, last, pred);
    }

    // Same, over an explicit candidate list.
    template <typename Pred>
    std::vector<mask_t> filter_list(exec e, std::vector<mask_t> const& in, Pred&& pred) {
      std::vector<char> hit(in.size(), 0);
      auto const        count = static_cast<std::int64_t>(in.size());
      if (e == exec::serial) {
        for (std::int64_t i = 0; i < count; ++i) {
          hit[i] = pred(in[i]) ? 1 : 0;
        }
      } else {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < count; ++i) {
          hit[i] = pred(in[i]) ? 1 : 0;
        }
      }
      std::vector<mask_t> out;
      for (std::int64_t i = 0; i < count; ++i) {
        if (hit[i]) {
          out.push_back(in[i]);
        }
      }
      return out;
    }

    // Smallest m in [first, last) with pred(m).
    template <typename Pred>
    std::optional<mask_t> find_first_serial(std::uint64_t first, std::uint64_t last, Pred&& pred) {
      for (std::uint64_t m = first; m < last; ++m) {
        if (pred(static_cast<mask_t>(m))) {
          return static_cast<mask_t>(m);
        }
      }
      return std::nullopt;
    }

    template <typename Pred>
    std::optional<mask_t> find_first_parallel(std::uint64_t first, std::uint64_t last, Pred&& pred) {
      std::atomic<std::uint64_t> best{last};
      auto const                 count = static_cast<std::int64_t>(last - first);
#pragma omp parallel for schedule(dynamic, 64)
      for (std::int64_t i = 0; i < count; ++i) {
        std::uint64_t const m = first + static_cast<std::uint64_t>(i);
        if (m >= best.load(std::memory_order_relaxed)) {
          continue;
        }
        if (pred(static_cast<mask_t>(m))) {
          std::uint64_t cur = best.load();
          while (m < cur && !best.compare_exchange_weak(cur, m)) {
          }
        }
      }
      if (best.load() == last) {
        return std::nullopt;
      }
      return static_cast<mask_t>(best.load());
    }

    template <typename Pred>
    std::optional<mask_t> find_first(exec e, std::uint64_t first, std::uint64_t last, Pred&& pred) {
      return e == exec::serial ? find_first_serial(first, last, pred)
                               : find_first_parallel(first, last, pred);
    }

  }  // namespace kernels
}  // namespace crglobal
