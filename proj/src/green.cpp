#include "crglobal/green.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace crglobal {

  namespace {
    using ideal_t = std::vector<bool>;

    std::vector<std::size_t> classes_from(std::vector<ideal_t> const& ideals) {
      std::map<ideal_t, std::size_t> ids;
      std::vector<std::size_t>       out(ideals.size());
      for (std::size_t a = 0; a < ideals.size(); ++a) {
        auto [it, inserted] = ids.emplace(ideals[a], ids.size());
        out[a]              = it->second;
      }
      return out;
    }

    std::size_t count_classes(std::vector<std::size_t> const& cls) {
      return cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
    }

    // Renumbers a partition given as arbitrary labels so that ids follow the
    // smallest element of each class.
    std::vector<std::size_t> normalise(std::vector<std::size_t> const& labels) {
      std::map<std::size_t, std::size_t> ids;
      std::vector<std::size_t>           out(labels.size());
      for (std::size_t a = 0; a < labels.size(); ++a) {
        out[a] = ids.emplace(labels[a], ids.size()).first->second;
      }
      return out;
    }

    struct union_find {
      std::vector<std::size_t> parent;
      explicit union_find(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          parent[std::max(x, y)] = std::min(x, y);
        }
      }
    };
  }  // namespace

  std::size_t GreenData::number_of_l_classes() const {
    return count_classes(lclass);
  }
  std::size_t GreenData::number_of_r_classes() const {
    return count_classes(rclass);
  }
  std::size_t GreenData::number_of_h_classes() const {
    return count_classes(hclass);
  }
  std::size_t GreenData::number_of_d_classes() const {
    return count_classes(dclass);
  }

  std::vector<elem_t> GreenData::members(std::vector<std::size_t> const& cls,
                                         std::size_t                     id) {
    std::vector<elem_t> out;
    for (elem_t a = 0; a < cls.size(); ++a) {
      if (cls[a] == id) {
        out.push_back(a);
      }
    }
    return out;
  }

  GreenData green_relations(CayleyTable const& S) {
    std::size_t const    n = S.order();
    std::vector<ideal_t> left(n, ideal_t(n)), right(n, ideal_t(n));
    for (elem_t a = 0; a < n; ++a) {
      left[a][a] = right[a][a] = true;
      for (elem_t x = 0; x < n; ++x) {
        left[a][S(x, a)]  = true;
        right[a][S(a, x)] = true;
      }
    }
    GreenData g;
    g.lclass = classes_from(left);
    g.rclass = classes_from(right);

    std::vector<std::size_t> pairs(n);
    {
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
      for (elem_t a = 0; a < n; ++a) {
        pairs[a] = ids.emplace(std::pair(g.lclass[a], g.rclass[a]), ids.size())
                       .first->second;
      }
    }
    g.hclass = pairs;

    union_find uf(n);
    std::vector<long> l_rep(n, -1), r_rep(n, -1);
    for (elem_t a = 0; a < n; ++a) {
      if (l_rep[g.lclass[a]] < 0) {
        l_rep[g.lclass[a]] = a;
      } else {
        uf.unite(a, l_rep[g.lclass[a]]);
      }
      if (r_rep[g.rclass[a]] < 0) {
        r_rep[g.rclass[a]] = a;
      } else {
        uf.unite(a, r_rep[g.rclass[a]]);
      }
    }
    std::vector<std::size_t> roots(n);
    for (elem_t a = 0; a < n; ++a) {
      roots[a] = uf.find(a);
    }
    g.dclass = normalise(roots);

    g.idempotent.resize(n);
    g.local_identity.assign(n, std::nullopt);
    g.local_inverse.assign(n, std::nullopt);
    std::vector<std::optional<elem_t>> h_identity(n);
    for (elem_t a = 0; a < n; ++a) {
      g.idempotent[a] = S.is_idempotent(a);
      if (g.idempotent[a]) {
        h_identity[g.hclass[a]] = a;
      }
    }
    // An H-class containing an idempotent is a group with that identity.
    for (elem_t a = 0; a < n; ++a) {
      auto const& e = h_identity[g.hclass[a]];
      if (!e) {
        continue;
      }
      g.local_identity[a] = e;
      for (elem_t x = 0; x < n; ++x) {
        if (g.hclass[x] == g.hclass[a] && S(a, x) == *e && S(x, a) == *e) {
          g.local_inverse[a] = x;
          break;
        }
      }
    }
    return g;
  }

  std::vector<std::size_t> j_classes(CayleyTable const& S) {
    std::size_t const    n = S.order();
    std::vector<ideal_t> ideals(n, ideal_t(n));
    for (elem_t a = 0; a < n; ++a) {
      ideal_t& I = ideals[a];
      I[a]       = true;
      for (elem_t x = 0; x < n; ++x) {
        elem_t const xa = S(x, a);
        I[xa]           = true;
        I[S(a, x)]      = true;
        for (elem_t y = 0; y < n; ++y) {
          I[S(xa, y)] = true;
        }
      }
    }
    return classes_from(ideals);
  }

  bool is_completely_regular(GreenData const& g) {
    return std::all_of(g.local_identity.begin(),
                       g.local_identity.end(),
                       [](auto const& e) { return e.has_value(); });
  }

  bool is_completely_regular(CayleyTable const& S) {
    return is_completely_regular(green_relations(S));
  }

  bool is_completely_simple(CayleyTable const& S) {
    GreenData const g = green_relations(S);
    if (!is_completely_regular(g)) {
      throw error(error_kind::not_completely_regular,
                  "some H-class is not a group");
    }
    for (elem_t a = 0; a < S.order(); ++a) {
      for (elem_t x = 0; x < S.order(); ++x) {
        elem_t const e = *g.local_identity[S(a, x)];
        if (S(e, a) != a) {
          return false;
        }
      }
    }
    return true;
  }

  NaturalOrder natural_order(CayleyTable const& S, std::vector<elem_t> const& E) {
    std::size_t const n = S.order();
    NaturalOrder      o;
    o.n = n;
    o.leq.assign(n * n, 0);
    o.maximal.assign(n, true);
    for (elem_t a = 0; a < n; ++a) {
      for (elem_t b = 0; b < n; ++b) {
        bool left = false, right = false;
        for (elem_t e : E) {
          left  = left || S(e, b) == a;
          right = right || S(b, e) == a;
        }
        if (left && right) {
          o.leq[a * n + b] = 1;
          if (a != b) {
            o.maximal[a] = false;
          }
        }
      }
    }
    return o;
  }

  NaturalOrder natural_order(CayleyTable const& S) {
    return natural_order(S, S.idempotents());
  }

}  // namespace crglobal
