#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crglobal/families.hpp"
#include "crglobal/globaldet.hpp"

namespace crglobal {

  // One verdict. `check` is a statement id from statement_ids() or one of the
  // corpus-level checks; `instance` names the semigroups (and psi) involved.
  struct Record {
    std::string   check;
    std::string   anchor;
    std::string   instance;
    bool          pass    = true;
    std::uint64_t checked = 0;
    std::string   witness;
    // A failed record that is not a falsification only means the run was
    // too thin (coverage), not that a property broke.
    bool falsifies = true;
  };

  struct Report {
    std::vector<Record> records;

    bool all_pass() const noexcept;
    bool falsified() const noexcept;
    // One JSON object per line, in record order.
    std::string to_jsonl() const;
    // Instances, passes and failures per check, sorted by check id.
    std::string summary() const;
  };

  enum class profile { quick, full };

  // Order bounds per profile.
  struct ProfileBounds {
    std::size_t scan;   // corpus scans over P(S)
    std::size_t sweep;  // psi sweep
    std::size_t min_psi;
  };
  ProfileBounds bounds_of(profile p) noexcept;

  struct VerifyOptions {
    profile                    prof = profile::full;
    std::size_t                psi_limit = 8;
    // Negative control: pair this corpus member with a copy of itself that
    // differs in one table entry, under the identity psi.
    std::optional<std::string> corrupt;
  };

  // Corruption target from CRGLOBAL_CORRUPT_TABLE, if set.
  std::optional<std::string> corrupt_from_env();

  // The first single-entry change of S (row-major, smallest new value first)
  // that is still a completely regular semigroup. Throws bad_spec if none.
  CayleyTable corrupted_copy(CayleyTable const& S);

  // Deterministic: identical options give byte-identical to_jsonl().
  Report run_verification(VerifyOptions const& opts);

  // Corpus-level checks on one completely regular member.
  std::vector<Record> scan_member(NamedTable const& member);

  struct PsiInstance {
    std::string name;
    IsoMap      psi;
    bool        from_search = false;
  };

  // psi candidates for a pair: lifts of isomorphisms S -> S' first, then
  // power-table isomorphisms that are not lifts; at most `limit` of each.
  // `exhausted` is set when the power search ran to completion.
  std::vector<PsiInstance> psi_candidates(NamedTable const& S,
                                          NamedTable const& T,
                                          std::size_t       limit,
                                          bool*             exhausted = nullptr);

  // Some singleton {a} whose image is not a singleton.
  bool moves_a_singleton(IsoMap const& psi, std::size_t n);

}  // namespace crglobal
