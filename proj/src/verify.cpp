#include "crglobal/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <sstream>

#include <json.hpp>

#include "crglobal/breakable.hpp"

namespace crglobal {

  namespace {
    std::string ms(std::size_t n, mask_t m) {
      return Subset(n, m).to_string();
    }

    template <typename W>
    void expect(Record& r, bool ok, W&& witness) {
      ++r.checked;
      if (!ok && r.pass) {
        r.pass    = false;
        r.witness = witness();
      }
    }

    Record make(std::string check, std::string anchor, std::string instance) {
      Record r;
      r.check    = std::move(check);
      r.anchor   = std::move(anchor);
      r.instance = std::move(instance);
      return r;
    }

    bool is_left_zero_set(CayleyTable const& S, mask_t A) {
      bool ok = true;
      for_each_bit(A, [&](elem_t x) {
        for_each_bit(A, [&](elem_t y) { ok = ok && S(x, y) == x; });
      });
      return ok;
    }

    std::vector<mask_t> masks_of(std::vector<Subset> v) {
      std::vector<mask_t> out;
      for (auto const& s : v) {
        out.push_back(s.mask());
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace

  bool Report::all_pass() const noexcept {
    return std::all_of(records.begin(), records.end(), [](Record const& r) { return r.pass; });
  }

  bool Report::falsified() const noexcept {
    return std::any_of(records.begin(), records.end(),
                       [](Record const& r) { return !r.pass && r.falsifies; });
  }

  std::string Report::to_jsonl() const {
    std::string out;
    for (auto const& r : records) {
      nlohmann::ordered_json j;
      j["check"]    = r.check;
      j["anchor"]   = r.anchor;
      j["instance"] = r.instance;
      j["verdict"]  = r.pass ? "pass" : "fail";
      j["checked"]  = r.checked;
      if (!r.pass) {
        j["witness"] = r.witness;
      }
      out += j.dump();
      out += '\n';
    }
    return out;
  }

  std::string Report::summary() const {
    struct row {
      std::size_t   instances = 0, passed = 0;
      std::uint64_t checked   = 0;
    };
    std::map<std::string, row> rows;
    std::size_t                width = 5;
    for (auto const& r : records) {
      auto& x = rows[r.check];
      ++x.instances;
      x.passed += r.pass;
      x.checked += r.checked;
      width = std::max(width, r.check.size());
    }
    std::ostringstream out;
    auto pad = [&](std::string const& s) { return s + std::string(width - s.size() + 2, ' '); };
    out << pad("check") << "instances  passed  failed  checked\n";
    std::size_t failed = 0;
    for (auto const& [name, x] : rows) {
      out << pad(name) << x.instances << "  " << x.passed << "  " << x.instances - x.passed << "  "
          << x.checked << "\n";
      failed += x.instances - x.passed;
    }
    out << records.size() << " records, " << failed << " failed\n";
    return out.str();
  }

  ProfileBounds bounds_of(profile p) noexcept {
    return p == profile::quick ? ProfileBounds{4, 3, 1} : ProfileBounds{6, 5, 20};
  }

  std::optional<std::string> corrupt_from_env() {
    char const* v = std::getenv("CRGLOBAL_CORRUPT_TABLE");
    if (v == nullptr || *v == '\0') {
      return std::nullopt;
    }
    return std::string(v);
  }

  CayleyTable corrupted_copy(CayleyTable const& S) {
    std::size_t const n = S.order();
    for (std::size_t k = 0; k < n * n; ++k) {
      for (elem_t v = 0; v < n; ++v) {
        if (v == S.data()[k]) {
          continue;
        }
        std::vector<elem_t> data = S.data();
        data[k]                  = v;
        if (first_nonassociative_triple(n, data)) {
          continue;
        }
        CayleyTable T = CayleyTable::trusted(n, std::move(data), S.labels());
        if (is_completely_regular(T)) {
          return T;
        }
      }
    }
    throw error(error_kind::bad_spec, "no single-entry change keeps the table completely regular");
  }

  std::vector<Record> scan_member(NamedTable const& member) {
    CayleyTable const&   S = member.table;
    std::size_t const    n = S.order();
    PowerSemigroup const P(S, exec::serial);
    std::string const&   name = member.name;
    std::vector<Record>  out;

    auto const ep = enumerate_ep(P, n, exec::serial);
    auto const a3 = enumerate_a3(P, n, exec::serial);

    Record c1 = make("a3-characterization",
                     "A in EP(S): no B != A with B^2 = BA = A iff A is a subsemigroup with (A3)", name);
    for (auto const& A : ep) {
      bool const lhs = a3_characterization(P, A, n, exec::serial).holds;
      expect(c1, lhs == is_a3(P, A.mask()), [&] { return "A=" + A.to_string(); });
    }
    out.push_back(std::move(c1));

    Record c2 = make("a2-characterization",
                     "A in A3(S): every B with AS = BS and BA = AB = A is idempotent iff A has (A2)", name);
    Record c3 = make("structural-form",
                     "A in A3(S) is a chain of left or right zero chunks, possibly topped by a group of order "
                     "two, and breakable iff it has (A2)",
                     name);
    for (auto const& A : a3) {
      bool const lhs = a2_characterization(P, A, n, exec::serial).holds;
      expect(c2, lhs == is_a2(P, A.mask()), [&] { return "A=" + A.to_string(); });
      BreakableForm const F = structural_form(P, A);
      expect(c3, verify_form(P, A, F) && F.is_breakable() == is_a2(P, A.mask()),
             [&] { return "A=" + A.to_string(); });
    }
    out.push_back(std::move(c2));
    out.push_back(std::move(c3));

    Record c4 = make("power-h-idempotent", "H_{e}(P(S)) = {{h} | h in H_e(S)} for every idempotent e", name);
    for (elem_t e : S.idempotents()) {
      std::vector<mask_t> expected;
      for (elem_t h = 0; h < n; ++h) {
        if (P.decomposition()->green.hclass[h] == P.decomposition()->green.hclass[e]) {
          expected.push_back(mask_t{1} << h);
        }
      }
      std::sort(expected.begin(), expected.end());
      expect(c4, masks_of(power_h_of_idempotent_singleton(P, e)) == expected,
             [&] { return "e=" + std::to_string(e); });
    }
    out.push_back(std::move(c4));

    Record c5 = make("power-h-left-zero", "H_E(P(S)) = {Ea | a in H_e(S)} for a left zero subsemigroup E and e in E",
                     name);
    for (mask_t E = 1; E <= P.full(); ++E) {
      if (!is_left_zero_set(S, E)) {
        continue;
      }
      auto const h = masks_of(power_h_of_left_zero_set(P, P.subset(E)));
      for_each_bit(E, [&](elem_t e) {
        expect(c5, h == masks_of(translates_of_left_zero_set(P, P.subset(E), e)),
               [&] { return "E=" + ms(n, E) + " e=" + std::to_string(e); });
      });
    }
    out.push_back(std::move(c5));

    Record      c6 = make("cover-implications", "A covers-in-EP B implies A covers-in-A2 B implies A covers-in-A2bar B",
                          name);
    std::size_t separators = 0;
    std::string first_separator;
    for (auto const& A : ep) {
      for (auto const& B : ep) {
        if (A == B || !ep_leq(P, A, B)) {
          continue;
        }
        bool const e  = covers(P, A, B, cover_kind::ep);
        bool const a2 = covers(P, A, B, cover_kind::a2);
        bool const ab = covers(P, A, B, cover_kind::a2bar);
        expect(c6, (!e || a2) && (!a2 || ab), [&] { return "A=" + A.to_string() + " B=" + B.to_string(); });
        if (ab && !e) {
          if (separators++ == 0) {
            first_separator = "A=" + A.to_string() + " B=" + B.to_string();
          }
        }
      }
    }
    out.push_back(std::move(c6));
    // Reported, never asserted.
    Record c7 = make("cover-separators", "pairs covered in A2bar but not in EP (reported only)",
                     name + ": " + std::to_string(separators) + " found"
                         + (separators ? ", first " + first_separator : std::string()));
    c7.checked = separators;
    out.push_back(std::move(c7));

    Record c8 = make("an-reduction", "a subsemigroup has (A4) iff it has (A2), and (A5) iff it has (A3)", name);
    for (mask_t A = 1; A <= P.full(); ++A) {
      if (!P.is_subsemigroup(A)) {
        continue;
      }
      Subset const As = P.subset(A);
      expect(c8,
             satisfies_an(P, As, 4) == satisfies_an(P, As, 2) && satisfies_an(P, As, 5) == satisfies_an(P, As, 3),
             [&] { return "A=" + As.to_string(); });
    }
    out.push_back(std::move(c8));
    return out;
  }

  bool moves_a_singleton(IsoMap const& psi, std::size_t n) {
    for (elem_t a = 0; a < n; ++a) {
      if (!std::has_single_bit(apply(psi, mask_t{1} << a))) {
        return true;
      }
    }
    return false;
  }

  std::vector<PsiInstance> psi_candidates(NamedTable const& S,
                                          NamedTable const& T,
                                          std::size_t       limit,
                                          bool*             exhausted) {
    std::vector<PsiInstance> out;
    std::size_t              k = 0;
    for (auto const& phi : find_isomorphisms(S.table, T.table, limit)) {
      out.push_back({S.name + " -> " + T.name + " lift#" + std::to_string(k++), lift(phi), false});
    }
    CayleyTable const PS = power_table(S.table);
    CayleyTable const PT = power_table(T.table);
    // One more than needed, so that a full page of lifts cannot hide the
    // non-lifted ones from the exhaustion test.
    auto const found = find_isomorphisms(PS, PT, limit + 1, default_search_budget, carrier::subsets);
    if (exhausted != nullptr) {
      *exhausted = found.size() <= limit;
    }
    k = 0;
    for (auto const& psi : found) {
      if (k == limit) {
        break;
      }
      bool const dup = std::any_of(out.begin(), out.end(), [&](PsiInstance const& p) { return p.psi == psi; });
      if (!dup) {
        out.push_back({S.name + " -> " + T.name + " search#" + std::to_string(k++), psi, true});
      }
    }
    return out;
  }

  namespace {
    std::vector<Record> suite_records(PowerSemigroup const& P,
                                      PowerSemigroup const& Q,
                                      PsiInstance const&    inst) {
      std::vector<Record> out;
      try {
        GlobalIso const g(P, Q, inst.psi);
        for (auto& s : verify_statement_suite(g, bounds_of(profile::full).scan)) {
          Record r   = make(s.id, s.anchor, inst.name);
          r.pass     = s.pass;
          r.checked  = s.checked;
          r.witness  = s.witness;
          out.push_back(std::move(r));
        }
      } catch (error const& e) {
        Record r = make("statement-suite", "the statement suite runs to completion", inst.name);
        r.pass    = false;
        r.checked = 1;
        r.witness = e.what();
        r.falsifies = e.is_falsification();
        out.push_back(std::move(r));
      }
      return out;
    }
  }  // namespace

  Report run_verification(VerifyOptions const& opts) {
    ProfileBounds const b = bounds_of(opts.prof);
    Report              report;

    std::vector<NamedTable> members;
    for (auto& m : corpus(corpus_profile::full)) {
      if (m.table.order() <= b.scan && is_completely_regular(m.table)) {
        members.push_back(std::move(m));
      }
    }

    // Corpus scans, one job per member.
    std::vector<std::vector<Record>> scanned(members.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < members.size(); ++i) {
      scanned[i] = scan_member(members[i]);
    }
    for (auto& v : scanned) {
      for (auto& r : v) {
        report.records.push_back(std::move(r));
      }
    }

    if (opts.prof == profile::full) {
      NamedTable const     big = order12_member();
      PowerSemigroup const P(big.table);
      auto const           ep = enumerate_ep(P, big.table.order());
      auto const           a3 = enumerate_a3(P, big.table.order());
      Record               r  = make("order12-scan", "EP(S) and A3(S) enumerate for an order 12 member",
                                     big.name + ": |EP| = " + std::to_string(ep.size())
                                         + ", |A3| = " + std::to_string(a3.size()));
      for (auto const& A : a3) {
        expect(r, is_a3(P, A.mask()) && P.is_idempotent(A.mask()), [&] { return "A=" + A.to_string(); });
      }
      report.records.push_back(std::move(r));
    }

    // psi sweep over ordered pairs of equal order.
    std::vector<NamedTable const*> sweep;
    for (auto const& m : members) {
      if (m.table.order() <= b.sweep) {
        sweep.push_back(&m);
      }
    }
    std::vector<std::pair<NamedTable const*, NamedTable const*>> pairs;
    for (auto const* s : sweep) {
      for (auto const* t : sweep) {
        if (s->table.order() == t->table.order()) {
          pairs.emplace_back(s, t);
        }
      }
    }
    struct pair_result {
      std::vector<PsiInstance> psis;
      std::vector<Record>      records;
    };
    std::vector<pair_result> results(pairs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto const& [S, T] = pairs[i];
      auto&       res    = results[i];
      std::string const pair_name = S->name + " -> " + T->name;
      bool              exhausted = false;
      res.psis = psi_candidates(*S, *T, opts.psi_limit, &exhausted);
      if (exhausted && res.psis.empty()) {
        Record converse = make("converse-sanity",
                               "no isomorphism P(S) -> P(S') means S and S' are not isomorphic", pair_name);
        expect(converse, canonical_form(S->table) != canonical_form(T->table),
               [] { return std::string("S and S' are isomorphic"); });
        res.records.push_back(std::move(converse));
      }

      if (res.psis.empty()) {
        continue;
      }
      PowerSemigroup const P(S->table, exec::serial);
      PowerSemigroup const Q(T->table, exec::serial);
      CayleyTable const    PS = power_table(S->table);
      CayleyTable const    PT = power_table(T->table);
      Record lift_ok = make("lift-valid", "the lift of an isomorphism S -> S' is an isomorphism P(S) -> P(S')",
                            pair_name);
      for (auto const& p : res.psis) {
        if (!p.from_search) {
          expect(lift_ok, is_isomorphism(PS, PT, p.psi.forward), [&] { return p.name; });
        }
      }
      if (lift_ok.checked > 0) {
        res.records.push_back(std::move(lift_ok));
      }
      for (auto const& p : res.psis) {
        for (auto& r : suite_records(P, Q, p)) {
          res.records.push_back(std::move(r));
        }
      }
    }

    std::size_t                         psi_count = 0;
    bool                                moved     = false;
    std::map<std::string, std::uint64_t> coverage;
    for (auto const& id : statement_ids()) {
      coverage[id] = 0;
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      psi_count += results[i].psis.size();
      for (auto const& p : results[i].psis) {
        moved = moved
                || (is_left_zero(pairs[i].first->table) && moves_a_singleton(p.psi, pairs[i].first->table.order()));
      }
      for (auto& r : results[i].records) {
        if (coverage.count(r.check)) {
          coverage[r.check] += r.checked;
        }
        report.records.push_back(std::move(r));
      }
    }

    if (opts.corrupt) {
      NamedTable const     original{*opts.corrupt, corpus_member(*opts.corrupt)};
      PowerSemigroup const P(original.table, exec::serial);
      PowerSemigroup const Q(corrupted_copy(original.table), exec::serial);
      std::vector<elem_t>  id(original.table.order());
      for (elem_t a = 0; a < id.size(); ++a) {
        id[a] = a;
      }
      PsiInstance const inst{original.name + " -> corrupted " + original.name + " lift#0",
                             lift(make_iso_map(original.table, original.table, id)), false};
      for (auto& r : suite_records(P, Q, inst)) {
        report.records.push_back(std::move(r));
      }
    }

    Record cov = make("psi-coverage",
                      "at least the profile minimum of psi instances, one of them moving a singleton of a left zero "
                      "semigroup",
                      std::to_string(psi_count) + " psi instances");
    cov.falsifies = false;
    expect(cov, psi_count >= b.min_psi, [&] { return std::to_string(psi_count) + " psi instances"; });
    expect(cov, moved, [] { return std::string("no psi moves a singleton of a left zero semigroup"); });
    report.records.push_back(std::move(cov));

    Record stc = make("statement-coverage", "every statement is instantiated at least once", "psi sweep");
    stc.falsifies = false;
    for (auto const& [id, n] : coverage) {
      expect(stc, n > 0, [&, id = id] { return id + " never instantiated"; });
    }
    report.records.push_back(std::move(stc));
    return report;
  }

}  // namespace crglobal
