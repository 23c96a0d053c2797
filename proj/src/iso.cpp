#include "crglobal/iso.hpp"

#include <algorithm>
#include <map>

#include "crglobal/green.hpp"

namespace crglobal {

  char const* to_string(carrier c) noexcept {
    switch (c) {
      case carrier::elements: return "elements";
      case carrier::subsets: return "subsets";
      case carrier::components: return "components";
    }
    return "?";
  }

  bool is_bijection(std::vector<elem_t> const& f) {
    std::vector<bool> hit(f.size(), false);
    for (elem_t y : f) {
      if (y >= f.size() || hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  bool is_isomorphism(CayleyTable const& A, CayleyTable const& B, std::vector<elem_t> const& f) {
    if (A.order() != B.order() || f.size() != A.order() || !is_bijection(f)) {
      return false;
    }
    for (elem_t x = 0; x < A.order(); ++x) {
      for (elem_t y = 0; y < A.order(); ++y) {
        if (f[A(x, y)] != B(f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  }

  IsoMap make_iso_map(CayleyTable const& A, CayleyTable const& B, std::vector<elem_t> f, carrier c) {
    if (!is_bijection(f)) {
      throw error(error_kind::out_of_range, "map is not a bijection");
    }
    IsoMap m;
    m.domain = m.codomain = c;
    m.inverse.resize(f.size());
    for (elem_t x = 0; x < f.size(); ++x) {
      m.inverse[f[x]] = x;
    }
    m.verified = is_isomorphism(A, B, f);
    m.forward  = std::move(f);
    return m;
  }

  std::vector<std::vector<std::uint64_t>> element_invariants(CayleyTable const& S) {
    std::size_t const n = S.order();
    GreenData const   g = green_relations(S);
    auto class_size = [&](std::vector<std::size_t> const& cls, elem_t a) {
      return static_cast<std::uint64_t>(std::count(cls.begin(), cls.end(), cls[a]));
    };
    std::vector<std::uint64_t> occurrences(n, 0);
    for (elem_t v : S.data()) {
      ++occurrences[v];
    }
    std::vector<std::vector<std::uint64_t>> inv(n);
    for (elem_t a = 0; a < n; ++a) {
      std::vector<bool> row(n), col(n);
      std::uint64_t     right_fix = 0, left_fix = 0;
      for (elem_t x = 0; x < n; ++x) {
        row[S(a, x)] = true;
        col[S(x, a)] = true;
        right_fix += S(a, x) == a;
        left_fix += S(x, a) == a;
      }
      // Index and period of the monogenic subsemigroup <a>.
      std::map<elem_t, std::uint64_t> first_seen;
      elem_t                          p = a;
      std::uint64_t                   k = 1;
      while (first_seen.emplace(p, k).second) {
        p = S(p, a);
        ++k;
      }
      std::uint64_t const index  = first_seen[p];
      std::uint64_t const period = k - index;
      inv[a] = {static_cast<std::uint64_t>(std::count(row.begin(), row.end(), true)),
                static_cast<std::uint64_t>(std::count(col.begin(), col.end(), true)),
                right_fix,
                left_fix,
                occurrences[a],
                S.is_idempotent(a) ? 1U : 0U,
                class_size(g.lclass, a),
                class_size(g.rclass, a),
                class_size(g.hclass, a),
                class_size(g.dclass, a),
                index,
                period};
    }
    return inv;
  }

  namespace {
    constexpr elem_t unset = static_cast<elem_t>(-1);

    class searcher {
     public:
      searcher(CayleyTable const& A, CayleyTable const& B, std::size_t limit, std::uint64_t budget)
          : _A(A), _B(B), _n(A.order()), _limit(limit), _budget(budget) {}

      std::vector<std::vector<elem_t>> run() {
        auto const ia = element_invariants(_A);
        auto const ib = element_invariants(_B);
        auto       sa = ia, sb = ib;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) {
          return {};
        }
        std::map<std::vector<std::uint64_t>, std::size_t> ids;
        _class_a.resize(_n);
        _class_b.resize(_n);
        for (elem_t x = 0; x < _n; ++x) {
          _class_a[x] = ids.emplace(ia[x], ids.size()).first->second;
        }
        for (elem_t y = 0; y < _n; ++y) {
          _class_b[y] = ids.at(ib[y]);
        }
        _f.assign(_n, unset);
        _used.assign(_n, false);
        search(0);
        return std::move(_found);
      }

     private:
      CayleyTable const&               _A;
      CayleyTable const&               _B;
      std::size_t                      _n;
      std::size_t                      _limit;
      std::uint64_t                    _budget;
      std::uint64_t                    _nodes = 0;
      std::vector<std::size_t>         _class_a, _class_b;
      std::vector<elem_t>              _f;
      std::vector<bool>                _used;
      std::vector<elem_t>              _trail;
      std::vector<elem_t>              _assigned;
      std::vector<std::vector<elem_t>> _found;

      bool set(elem_t x, elem_t y) {
        if (_f[x] != unset) {
          return _f[x] == y;
        }
        if (_used[y] || _class_a[x] != _class_b[y]) {
          return false;
        }
        _f[x]    = y;
        _used[y] = true;
        _trail.push_back(x);
        return true;
      }

      // Assigns x -> y and closes the partial map under products of
      // assigned elements.
      bool assign(elem_t x, elem_t y) {
        std::size_t queue = _trail.size();
        if (!set(x, y)) {
          return false;
        }
        while (queue < _trail.size()) {
          elem_t const u = _trail[queue++];
          for (std::size_t i = 0; i < queue; ++i) {
            elem_t const v = _trail[i];
            if (!set(_A(u, v), _B(_f[u], _f[v])) || !set(_A(v, u), _B(_f[v], _f[u]))) {
              return false;
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          elem_t const x = _trail.back();
          _trail.pop_back();
          _used[_f[x]] = false;
          _f[x]        = unset;
        }
      }

      void search(elem_t from) {
        if (_found.size() >= _limit) {
          return;
        }
        if (++_nodes > _budget) {
          throw error(error_kind::search_budget_exceeded,
                      "isomorphism search exceeded " + std::to_string(_budget) + " nodes");
        }
        while (from < _n && _f[from] != unset) {
          ++from;
        }
        if (from == _n) {
          _found.push_back(_f);
          return;
        }
        for (elem_t y = 0; y < _n && _found.size() < _limit; ++y) {
          if (_used[y] || _class_a[from] != _class_b[y]) {
            continue;
          }
          std::size_t const mark = _trail.size();
          if (assign(from, y)) {
            search(from + 1);
          }
          undo(mark);
        }
      }
    };
  }  // namespace

  std::vector<IsoMap> find_isomorphisms(CayleyTable const& A,
                                        CayleyTable const& B,
                                        std::size_t        limit,
                                        std::uint64_t      budget,
                                        carrier            c) {
    if (A.order() != B.order() || limit == 0) {
      return {};
    }
    std::vector<IsoMap> out;
    for (auto& f : searcher(A, B, limit, budget).run()) {
      IsoMap m = make_iso_map(A, B, std::move(f), c);
      if (!m.verified) {
        throw error(error_kind::eta_not_morphism, "search produced a non-isomorphism");
      }
      out.push_back(std::move(m));
    }
    return out;
  }

}  // namespace crglobal
