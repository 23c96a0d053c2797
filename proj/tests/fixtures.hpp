#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crglobal/families.hpp"
#include "crglobal/green.hpp"

namespace fixtures {

  inline std::vector<crglobal::NamedTable> const& full_corpus() {
    static std::vector<crglobal::NamedTable> const c = crglobal::corpus(crglobal::corpus_profile::full);
    return c;
  }

  // Completely regular corpus members with order <= n.
  inline std::vector<crglobal::NamedTable> cr_members(std::size_t n) {
    std::vector<crglobal::NamedTable> out;
    for (auto const& m : full_corpus()) {
      if (m.table.order() <= n && crglobal::is_completely_regular(m.table)) {
        out.push_back(m);
      }
    }
    return out;
  }

  inline std::vector<crglobal::NamedTable> members(std::size_t n) {
    std::vector<crglobal::NamedTable> out;
    for (auto const& m : full_corpus()) {
      if (m.table.order() <= n) {
        out.push_back(m);
      }
    }
    return out;
  }

  // The kind of crglobal::error thrown by f, or nullopt if none is thrown.
  template <typename F>
  std::optional<crglobal::error_kind> error_of(F&& f) {
    try {
      f();
    } catch (crglobal::error const& e) {
      return e.kind();
    }
    return std::nullopt;
  }

  inline crglobal::CayleyTable const& named(std::string const& name) {
    for (auto const& m : full_corpus()) {
      if (m.name == name) {
        return m.table;
      }
    }
    throw std::runtime_error("no corpus member " + name);
  }

}  // namespace fixtures
