#include "crglobal/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "crglobal/green.hpp"

namespace crglobal {

  namespace {
    [[noreturn]] void bad(std::string const& why) {
      throw error(error_kind::bad_spec, why);
    }

    CayleyTable from_function(std::size_t n, auto&& mul) {
      std::vector<elem_t> data(n * n);
      for (elem_t a = 0; a < n; ++a) {
        for (elem_t b = 0; b < n; ++b) {
          data[a * n + b] = static_cast<elem_t>(mul(a, b));
        }
      }
      return CayleyTable::trusted(n, std::move(data));
    }

    void require_positive(std::size_t n, char const* what) {
      if (n == 0) {
        bad(std::string(what) + " needs a positive order");
      }
    }

    struct group_info {
      elem_t              identity;
      std::vector<elem_t> inverse;
    };

    group_info require_group(CayleyTable const& G) {
      std::size_t const n = G.order();
      if (n == 0 || first_nonassociative_triple(n, G.data())) {
        bad("group table is not associative");
      }
      std::optional<elem_t> id;
      for (elem_t e = 0; e < n && !id; ++e) {
        bool ok = true;
        for (elem_t x = 0; x < n; ++x) {
          ok = ok && G(e, x) == x && G(x, e) == x;
        }
        if (ok) {
          id = e;
        }
      }
      if (!id) {
        bad("group table has no identity");
      }
      group_info info{*id, std::vector<elem_t>(n)};
      for (elem_t x = 0; x < n; ++x) {
        bool found = false;
        for (elem_t y = 0; y < n && !found; ++y) {
          if (G(x, y) == *id && G(y, x) == *id) {
            info.inverse[x] = y;
            found           = true;
          }
        }
        if (!found) {
          bad("group element " + std::to_string(x) + " has no inverse");
        }
      }
      return info;
    }

    CayleyTable build_rees(family::ReesMatrix const& spec) {
      CayleyTable const& G = spec.group;
      require_group(G);
      if (spec.sandwich.empty() || spec.sandwich[0].empty()) {
        bad("empty sandwich matrix");
      }
      std::size_t const rows = spec.sandwich.size();     // |Λ|
      std::size_t const cols = spec.sandwich[0].size();  // |I|
      for (auto const& row : spec.sandwich) {
        if (row.size() != cols) {
          bad("sandwich matrix is ragged");
        }
        for (elem_t g : row) {
          if (g >= G.order()) {
            bad("sandwich entry outside the group");
          }
        }
      }
      auto const        P = normalise_sandwich(G, spec.sandwich);
      std::size_t const m = G.order();
      // (i, g, λ) has index (i * |G| + g) * |Λ| + λ.
      auto decode = [&](elem_t x) {
        return std::array<std::size_t, 3>{x / rows / m, (x / rows) % m, x % rows};
      };
      std::size_t const n = cols * m * rows;
      auto              T = from_function(n, [&](elem_t x, elem_t y) {
        auto const [i, g, lambda] = decode(x);
        auto const [j, h, mu]     = decode(y);
        elem_t const k            = G(G(static_cast<elem_t>(g), P[lambda][j]), static_cast<elem_t>(h));
        return (i * m + k) * rows + mu;
      });
      std::vector<std::string> labels;
      for (elem_t x = 0; x < n; ++x) {
        auto const [i, g, lambda] = decode(x);
        labels.push_back("(" + std::to_string(i) + "," + std::to_string(g) + ","
                         + std::to_string(lambda) + ")");
      }
      return CayleyTable::trusted(n, T.data(), std::move(labels));
    }

    CayleyTable build_strong_semilattice(family::StrongSemilattice const& spec) {
      CayleyTable const& Y = spec.semilattice;
      std::size_t const  k = Y.order();
      if (k == 0 || first_nonassociative_triple(k, Y.data()) || !is_commutative(Y)
          || !is_band(Y)) {
        bad("structure table is not a semilattice");
      }
      if (spec.components.size() != k) {
        bad("need one component per semilattice element");
      }
      auto below = [&](std::size_t b, std::size_t a) { return Y(a, b) == b; };

      std::vector<std::vector<std::vector<elem_t>>> hom(k, std::vector<std::vector<elem_t>>(k));
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          if (!below(b, a)) {
            continue;
          }
          auto const& A  = spec.components[a];
          auto const& B  = spec.components[b];
          auto        it = spec.homs.find({a, b});
          if (it != spec.homs.end()) {
            hom[a][b] = it->second;
          } else if (a == b) {
            hom[a][b].resize(A.order());
            std::iota(hom[a][b].begin(), hom[a][b].end(), 0);
          } else {
            bad("missing structure map " + std::to_string(a) + " -> " + std::to_string(b));
          }
          auto const& f = hom[a][b];
          if (f.size() != A.order()
              || std::any_of(f.begin(), f.end(), [&](elem_t x) { return x >= B.order(); })) {
            bad("structure map " + std::to_string(a) + " -> " + std::to_string(b)
                + " has the wrong shape");
          }
          for (elem_t x = 0; x < A.order(); ++x) {
            for (elem_t y = 0; y < A.order(); ++y) {
              if (f[A(x, y)] != B(f[x], f[y])) {
                bad("structure map " + std::to_string(a) + " -> " + std::to_string(b)
                    + " is not a homomorphism");
              }
            }
          }
        }
      }
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          for (std::size_t c = 0; c < k; ++c) {
            if (!below(b, a) || !below(c, b)) {
              continue;
            }
            for (elem_t x = 0; x < spec.components[a].order(); ++x) {
              if (hom[a][c][x] != hom[b][c][hom[a][b][x]]) {
                bad("structure maps do not compose along " + std::to_string(a) + " >= "
                    + std::to_string(b) + " >= " + std::to_string(c));
              }
            }
          }
        }
      }

      std::vector<std::size_t> offset(k + 1, 0);
      for (std::size_t a = 0; a < k; ++a) {
        offset[a + 1] = offset[a] + spec.components[a].order();
      }
      std::size_t const        n = offset[k];
      std::vector<std::size_t> comp(n), local(n);
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t x = offset[a]; x < offset[a + 1]; ++x) {
          comp[x]  = a;
          local[x] = x - offset[a];
        }
      }
      auto T = from_function(n, [&](elem_t x, elem_t y) {
        std::size_t const a = comp[x], b = comp[y], c = Y(static_cast<elem_t>(a), static_cast<elem_t>(b));
        return offset[c] + spec.components[c](hom[a][c][local[x]], hom[b][c][local[y]]);
      });
      if (first_nonassociative_triple(n, T.data())) {
        bad("strong semilattice is not associative");
      }
      if (!is_completely_regular(T)) {
        bad("components are not completely simple");
      }
      return T;
    }
  }  // namespace

  std::vector<std::vector<elem_t>> normalise_sandwich(CayleyTable const&               G,
                                                      std::vector<std::vector<elem_t>> P) {
    group_info const info = require_group(G);
    // p'_{λ i} = p_{λ 1}^-1 p_{λ i} p_{1 i}^-1 p_{1 1}
    auto const                       old = P;
    for (std::size_t l = 0; l < P.size(); ++l) {
      for (std::size_t i = 0; i < P[l].size(); ++i) {
        elem_t const left  = G(info.inverse[old[l][0]], old[l][i]);
        elem_t const right = G(info.inverse[old[0][i]], old[0][0]);
        P[l][i]            = G(left, right);
      }
    }
    return P;
  }

  CayleyTable build(FamilySpec const& spec) {
    return std::visit(
        [](auto const& s) -> CayleyTable {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, family::LeftZero>) {
            require_positive(s.n, "LeftZero");
            return from_function(s.n, [](elem_t a, elem_t) { return a; });
          } else if constexpr (std::is_same_v<T, family::RightZero>) {
            require_positive(s.n, "RightZero");
            return from_function(s.n, [](elem_t, elem_t b) { return b; });
          } else if constexpr (std::is_same_v<T, family::CyclicGroup>) {
            require_positive(s.n, "CyclicGroup");
            return from_function(s.n, [n = s.n](elem_t a, elem_t b) { return (a + b) % n; });
          } else if constexpr (std::is_same_v<T, family::KleinFour>) {
            return from_function(4, [](elem_t a, elem_t b) { return a ^ b; });
          } else if constexpr (std::is_same_v<T, family::RectBand>) {
            require_positive(s.rows, "RectBand");
            require_positive(s.cols, "RectBand");
            // (i, λ) has index i * cols + λ.
            return from_function(s.rows * s.cols, [c = s.cols](elem_t x, elem_t y) {
              return (x / c) * c + y % c;
            });
          } else if constexpr (std::is_same_v<T, family::ReesMatrix>) {
            return build_rees(s);
          } else if constexpr (std::is_same_v<T, family::StrongSemilattice>) {
            return build_strong_semilattice(s);
          } else if constexpr (std::is_same_v<T, family::DirectProduct>) {
            std::size_t const m = s.right.order();
            if (s.left.order() == 0 || m == 0) {
              bad("empty factor");
            }
            return from_function(s.left.order() * m, [&](elem_t x, elem_t y) {
              return s.left(x / m, y / m) * m + s.right(x % m, y % m);
            });
          } else {
            if (s.table.order() == 0) {
              bad("empty table");
            }
            return s.table;
          }
        },
        spec);
  }

  CayleyTable canonical_form(CayleyTable const& S) {
    std::size_t const   n = S.order();
    std::vector<elem_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    CayleyTable best = S;
    do {
      CayleyTable T = relabel(S, perm);
      if (T.data() < best.data()) {
        best = std::move(T);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return CayleyTable::trusted(n, best.data());
  }

  std::vector<CayleyTable> enumerate_small(std::size_t                                    n,
                                           std::function<bool(CayleyTable const&)> const& filter,
                                           exec                                           e) {
    if (n == 0 || n > 3) {
      throw error(error_kind::order_too_large, "enumerate_small needs 1 <= n <= 3");
    }
    std::size_t const   cells = n * n;
    std::uint64_t       count = 1;
    for (std::size_t i = 0; i < cells; ++i) {
      count *= n;
    }
    auto decode = [n, cells](std::uint64_t code) {
      std::vector<elem_t> data(cells);
      for (std::size_t i = 0; i < cells; ++i) {
        data[i] = static_cast<elem_t>(code % n);
        code /= n;
      }
      return data;
    };
    auto const codes = kernels::filter(e, 0, count, [&](mask_t code) {
      return !first_nonassociative_triple(n, decode(code));
    });
    std::set<std::vector<elem_t>> seen;
    for (mask_t code : codes) {
      seen.insert(canonical_form(CayleyTable::trusted(n, decode(code))).data());
    }
    std::vector<CayleyTable> out;
    for (auto const& data : seen) {
      CayleyTable T = CayleyTable::trusted(n, data);
      if (!filter || filter(T)) {
        out.push_back(std::move(T));
      }
    }
    return out;
  }

  namespace {
    CayleyTable chain(std::size_t k) {
      // 0 is the top; a b = max index.
      return from_function(k, [](elem_t a, elem_t b) { return std::max(a, b); });
    }

    CayleyTable trivial() {
      return build(family::LeftZero{1});
    }

    CayleyTable two_chain_of(CayleyTable const& top, CayleyTable const& bottom,
                             std::vector<elem_t> hom) {
      family::StrongSemilattice s{chain(2), {top, bottom}, {}};
      s.homs[{0, 1}] = std::move(hom);
      return build(s);
    }

    CayleyTable with_identity(CayleyTable const& S) {
      std::size_t const n = S.order() + 1;
      return from_function(n, [&](elem_t a, elem_t b) -> elem_t {
        if (a == 0) {
          return b;
        }
        if (b == 0) {
          return a;
        }
        return S(a - 1, b - 1) + 1;
      });
    }

    std::vector<elem_t> reversal(std::size_t n) {
      std::vector<elem_t> p(n);
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = static_cast<elem_t>(n - 1 - i);
      }
      return p;
    }

    std::vector<NamedTable> cr_families() {
      CayleyTable const L2 = build(family::LeftZero{2});
      CayleyTable const R2 = build(family::RightZero{2});
      CayleyTable const Z2 = build(family::CyclicGroup{2});
      CayleyTable const Z3 = build(family::CyclicGroup{3});
      CayleyTable const T  = trivial();

      std::vector<NamedTable> out;
      auto add = [&out](std::string name, CayleyTable t) {
        out.push_back({std::move(name), std::move(t)});
      };
      add("trivial", T);
      add("L2", L2);
      add("R2", R2);
      add("Z2", Z2);
      add("Z3", Z3);
      add("chain2", chain(2));
      add("clifford3", two_chain_of(Z2, T, {0, 0}));
      add("clifford3-relabelled", relabel(two_chain_of(Z2, T, {0, 0}), {2, 0, 1}));
      add("L2-over-trivial", two_chain_of(L2, T, {0, 0}));
      add("trivial-over-L2", two_chain_of(T, L2, {0}));
      add("L2-monoid", with_identity(L2));
      add("R2-monoid", with_identity(R2));
      add("L3", build(family::LeftZero{3}));
      add("R3", build(family::RightZero{3}));
      add("chain3", chain(3));
      add("semilattice-v", from_function(3, [](elem_t a, elem_t b) -> elem_t {
            return a == b ? a : 2;
          }));
      add("Z4", build(family::CyclicGroup{4}));
      add("klein4", build(family::KleinFour{}));
      add("rectband-2x2", build(family::RectBand{2, 2}));
      add("rees-z2-p00", build(family::ReesMatrix{Z2, {{0}, {0}}}));
      add("L2-over-L2", two_chain_of(L2, L2, {0, 1}));
      add("L2-over-L2-collapse", two_chain_of(L2, L2, {0, 0}));
      add("R2-over-R2", two_chain_of(R2, R2, {0, 1}));
      add("Z2-over-Z2", two_chain_of(Z2, Z2, {0, 1}));
      add("Z2-over-L2", two_chain_of(Z2, L2, {0, 0}));
      add("L2-over-Z2", two_chain_of(L2, Z2, {0, 0}));
      add("Z3-over-trivial", two_chain_of(Z3, T, {0, 0, 0}));
      add("L3-over-trivial", two_chain_of(build(family::LeftZero{3}), T, {0, 0, 0}));
      add("Z2xL2", build(family::DirectProduct{Z2, L2}));
      add("L2-monoid-relabelled", relabel(with_identity(L2), reversal(3)));
      {
        // Y = {α, β, 0} with αβ = 0; L2 at α, trivial at β and 0.
        family::StrongSemilattice s{
            from_function(3, [](elem_t a, elem_t b) -> elem_t { return a == b ? a : 2; }),
            {L2, T, T},
            {}};
        s.homs[{0, 2}] = {0, 0};
        s.homs[{1, 2}] = {0};
        add("L2-trivial-over-trivial", build(s));
      }
      {
        family::StrongSemilattice s{chain(3), {L2, L2, T}, {}};
        s.homs[{0, 1}] = {0, 1};
        s.homs[{0, 2}] = {0, 0};
        s.homs[{1, 2}] = {0, 0};
        add("L2-over-L2-over-trivial", build(s));
      }
      {
        family::StrongSemilattice s{chain(3), {Z2, Z2, T}, {}};
        s.homs[{0, 1}] = {0, 1};
        s.homs[{0, 2}] = {0, 0};
        s.homs[{1, 2}] = {0, 0};
        add("Z2-over-Z2-over-trivial", build(s));
      }
      add("klein4-over-trivial", two_chain_of(build(family::KleinFour{}), T, {0, 0, 0, 0}));
      add("rectband-2x2-monoid", with_identity(build(family::RectBand{2, 2})));
      add("Z5", build(family::CyclicGroup{5}));
      add("rectband-2x3", build(family::RectBand{2, 3}));
      add("Z2xL3", build(family::DirectProduct{Z2, build(family::LeftZero{3})}));
      add("rees-z2-p01", build(family::ReesMatrix{Z2, {{0, 0}, {0, 1}}}));
      add("Z2xrectband-2x2", build(family::DirectProduct{Z2, build(family::RectBand{2, 2})}));
      add("rectband-3x3", build(family::RectBand{3, 3}));
      add("rees-z3-p3x1", build(family::ReesMatrix{Z3, {{0}, {1}, {2}}}));
      return out;
    }
  }  // namespace

  std::vector<NamedTable> corpus(corpus_profile profile) {
    std::vector<NamedTable> out;
    if (profile != corpus_profile::cr_families) {
      for (std::size_t n = 1; n <= 3; ++n) {
        auto const tables = enumerate_small(n);
        for (std::size_t k = 0; k < tables.size(); ++k) {
          out.push_back({"small-" + std::to_string(n) + "-" + std::to_string(k), tables[k]});
        }
      }
    }
    if (profile != corpus_profile::exhaustive3) {
      auto fam = cr_families();
      out.insert(out.end(), fam.begin(), fam.end());
    }
    return out;
  }

  CayleyTable corpus_member(std::string const& name) {
    for (auto& m : corpus(corpus_profile::full)) {
      if (m.name == name) {
        return m.table;
      }
    }
    bad("no corpus member named '" + name + "'");
  }

}  // namespace crglobal

namespace crglobal {

  NamedTable order12_member() {
    CayleyTable const chain2 = validate_table({{0, 1}, {1, 1}});
    CayleyTable const group  = build(family::DirectProduct{build(family::CyclicGroup{2}),
                                                          build(family::RightZero{3})});
    return {"chain2xZ2xR3", build(family::DirectProduct{chain2, group})};
  }

}  // namespace crglobal
