#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "crglobal/verify.hpp"
#include "fixtures.hpp"

using namespace crglobal;
using fixtures::error_of;

TEST_CASE("quick verification passes and is deterministic") {
  VerifyOptions opts;
  opts.prof      = profile::quick;
  Report const a = run_verification(opts);
  Report const b = run_verification(opts);
  CHECK(a.all_pass());
  CHECK_FALSE(a.falsified());
  CHECK(a.to_jsonl() == b.to_jsonl());
  CHECK(a.summary() == b.summary());

  std::istringstream lines(a.to_jsonl());
  std::string        line;
  std::size_t        count = 0;
  while (std::getline(lines, line)) {
    auto const j = nlohmann::json::parse(line);
    CHECK(j.contains("check"));
    CHECK(j.contains("anchor"));
    CHECK(j.contains("instance"));
    CHECK(j.at("verdict") == "pass");
    ++count;
  }
  CHECK(count == a.records.size());
}

TEST_CASE("summary is sorted by check id") {
  Report r;
  r.records.push_back({"zeta", "z", "i", true, 1, "", true});
  r.records.push_back({"alpha", "a", "i", false, 2, "w", true});
  r.records.push_back({"mid", "m", "i", false, 1, "", false});
  CHECK_FALSE(r.all_pass());
  CHECK(r.falsified());
  std::string const s = r.summary();
  CHECK(s.find("alpha") < s.find("mid"));
  CHECK(s.find("mid") < s.find("zeta"));
  CHECK(r.to_jsonl().find("\"witness\":\"w\"") != std::string::npos);

  Report coverage_only;
  coverage_only.records.push_back({"coverage", "c", "i", false, 0, "thin", false});
  CHECK_FALSE(coverage_only.all_pass());
  CHECK_FALSE(coverage_only.falsified());
}

TEST_CASE("a corrupted table is reported as a falsification") {
  CayleyTable const& S = fixtures::named("clifford3");
  CayleyTable const  C = corrupted_copy(S);
  CHECK_FALSE(C == S);
  CHECK(is_completely_regular(C));
  std::size_t diff = 0;
  for (std::size_t i = 0; i < S.data().size(); ++i) {
    diff += S.data()[i] != C.data()[i] ? 1 : 0;
  }
  CHECK(diff == 1);

  VerifyOptions opts;
  opts.prof    = profile::quick;
  opts.corrupt = "clifford3";
  Report const r = run_verification(opts);
  CHECK(r.falsified());
  bool witnessed = false;
  for (auto const& rec : r.records) {
    if (!rec.pass) {
      CHECK_FALSE(rec.witness.empty());
      witnessed = witnessed || rec.falsifies;
    }
  }
  CHECK(witnessed);

  opts.corrupt = "no-such-member";
  CHECK(error_of([&] { run_verification(opts); }) == error_kind::bad_spec);
}

TEST_CASE("psi candidates") {
  NamedTable const L2{"L2", fixtures::named("L2")};
  bool             exhausted = false;
  auto const       psis      = psi_candidates(L2, L2, 8, &exhausted);
  CHECK(exhausted);
  CHECK(psis.size() == 6);
  CHECK_FALSE(psis[0].from_search);
  std::size_t moving = 0;
  for (auto const& p : psis) {
    moving += moves_a_singleton(p.psi, 2) ? 1 : 0;
  }
  CHECK(moving == 4);

  NamedTable const Z2{"Z2", fixtures::named("Z2")};
  CHECK(psi_candidates(Z2, L2, 8, &exhausted).empty());
  CHECK(exhausted);
}
