#pragma once

// Batch verification of the combinatorial properties of Adm(mu):
//   structure     maximal elements, lengths, weight-support translations, Omega-class
//   s2            every Codim<=1(x) graph is connected
//   codim1_bound  |Irr(x)| <= 2 for codimension-1 x
//   haines        the closed-form Irr(x) agrees with the direct scan

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kradm/admissible.hpp"

namespace kradm {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n, CheckStatus s = CheckStatus::Pass) : name(std::move(n)), status(s) {}

  std::string name;
  CheckStatus status = CheckStatus::Pass;
  Json details = Json::object();
  std::vector<Json> witnesses;
};

struct SweepEntry {
  std::string group;    // "A1", "GL3", ...
  std::string lattice;  // "" for the default
  IntVec mu;
  friend bool operator==(const SweepEntry&, const SweepEntry&) = default;
};

struct VerifyOptions {
  unsigned threads = 1;
  BuildOptions build;
  std::vector<std::string> only;  // empty: every check
};

struct VerificationReport {
  SweepEntry entry;
  std::string type;     // Cartan type, e.g. "A2"
  std::string lattice;  // resolved lattice label
  IntVec mu;            // dominant mu actually used
  std::size_t poset_size = 0;
  std::vector<CheckResult> checks;
  double wall_time_ms = 0.0;
  std::optional<std::string> error;  // construction failure
  bool cap_exceeded = false;

  bool passed() const;
};

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"structure", "s2", "codim1_bound", "haines"};
  return names;
}

/// Runs fn(i) for i in [0, n) on up to `threads` workers.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn);

CheckResult verify_s2(const AdmissiblePoset& p, unsigned threads = 1);
CheckResult verify_codim1_bound(const AdmissiblePoset& p, unsigned threads = 1);
CheckResult verify_haines(const AdmissiblePoset& p, unsigned threads = 1);
CheckResult verify_structure(const AdmissiblePoset& p);

VerificationReport verify_entry(const SweepEntry& entry, const VerifyOptions& options = {});
std::vector<VerificationReport> run_sweep(const std::vector<SweepEntry>& config, const VerifyOptions& options = {});

bool all_pass(const std::vector<VerificationReport>& reports);

Json element_json(const AdmissiblePoset& p, std::size_t i);
Json report_to_json(const VerificationReport& r, bool with_wall_time = true);
Json reports_to_json(const std::vector<VerificationReport>& reports, bool with_wall_time = true);

}  // namespace kradm

#include "kradm/parallel.ipp"
