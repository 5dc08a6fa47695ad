// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>

#include "golden_format.hpp"
#include "kradm/cli.hpp"
#include "kradm/verifier.hpp"
#include "oracles.hpp"

using namespace kradm;

namespace {

int failures = 0;

void report(int n, const std::string& title, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << title << " -- " << detail << "\n";
  if (!ok) ++failures;
}

const CheckResult* find_check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string label(const SweepEntry& e) { return e.group + " " + to_string(e.mu); }

bool is_gl_minuscule(const SweepEntry& e) {
  if (e.group.rfind("GL", 0) != 0 || e.mu.empty() || e.mu[0] != 1) return false;
  return std::all_of(e.mu.begin() + 1, e.mu.end(), [](Int c) { return c == 0; });
}

}  // namespace

int main() {
  cli::SweepConfig cfg;
  try {
    cfg = cli::load_sweep_config(KRADM_DEFAULT_SWEEP);
  } catch (const std::exception& e) {
    std::cout << "[FAIL] cannot load sweep: " << e.what() << "\n";
    return 1;
  }
  VerifyOptions opts = cfg.options;
  opts.threads = std::max(4u, std::thread::hardware_concurrency());

  auto t0 = std::chrono::steady_clock::now();
  auto reports = run_sweep(cfg.entries, opts);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  // Posets are rebuilt here so the oracle comparisons below are independent of the reports.
  std::vector<AdmissiblePoset> posets;
  for (const auto& e : cfg.entries) posets.push_back(build_admissible(parse_group(e.group, e.lattice), e.mu));

  // 1. S2 connectivity
  {
    bool ok = !reports.empty();
    std::size_t graphs = 0;
    std::string bad;
    for (const auto& r : reports) {
      const auto* c = find_check(r, "s2");
      if (!c || c->status != CheckStatus::Pass) {
        ok = false;
        bad += " " + label(r.entry);
      } else
        graphs += c->details["graphs_checked"].get<std::size_t>();
    }
    ok = ok && secs < 300.0;
    report(1, "every Codim<=1(x) graph is connected", ok,
           std::to_string(reports.size()) + " entries, " + std::to_string(graphs) + " graphs, " +
               std::to_string(secs) + " s" + (bad.empty() ? "" : "; failing:" + bad));
  }

  // 2. codim-1 bound, strengthened to exactly two distinct components
  {
    bool ok = true;
    std::size_t n = 0;
    std::string bad;
    for (std::size_t k = 0; k < posets.size(); ++k) {
      const auto& p = posets[k];
      for (std::size_t x = 0; x < p.size(); ++x) {
        if (p.codimension(x) != 1) continue;
        ++n;
        auto irr = irr_bruteforce(p, x);
        std::set<IntVec> distinct(irr.begin(), irr.end());
        if (irr.size() != 2 || distinct.size() != 2) {
          ok = false;
          bad += " " + label(cfg.entries[k]) + "#" + std::to_string(x);
        }
      }
      const auto* c = find_check(reports[k], "codim1_bound");
      if (!c || c->status == CheckStatus::Fail) ok = false;
    }
    report(2, "every codim-1 x has |Irr(x)| = 2, distinct", ok,
           std::to_string(n) + " codim-1 elements" + (bad.empty() ? "" : "; failing:" + bad));
  }

  // 3. Haines formulas
  {
    bool ok = true;
    std::size_t n = 0, case_b = 0, minuscule_b = 0;
    for (std::size_t k = 0; k < posets.size(); ++k) {
      const auto& p = posets[k];
      for (std::size_t x = 0; x < p.size(); ++x) {
        if (p.codimension(x) != 1) continue;
        ++n;
        auto h = irr_haines(p, x);
        auto bf = irr_bruteforce(p, x);
        std::sort(bf.begin(), bf.end());
        auto hs = h.irr;
        std::sort(hs.begin(), hs.end());
        if (hs != bf) ok = false;
        if (h.which == 'b') {
          ++case_b;
          if (is_gl_minuscule(cfg.entries[k])) ++minuscule_b;
        }
      }
      const auto* c = find_check(reports[k], "haines");
      if (!c || c->status == CheckStatus::Fail) ok = false;
    }
    ok = ok && minuscule_b == 0;
    report(3, "Haines formulas match brute force; no case (b) for minuscule mu", ok,
           std::to_string(n) + " elements, " + std::to_string(case_b) + " case (b), " +
               std::to_string(minuscule_b) + " case (b) in minuscule entries");
  }

  // 4. structure
  {
    bool ok = true;
    std::string bad;
    for (std::size_t k = 0; k < posets.size(); ++k) {
      const auto& p = posets[k];
      const auto& rs = p.root_system();
      std::set<IntVec> maxima;
      for (auto i : maximal_elements(p)) {
        if (!p.element(i).is_translation() || p.length(i) != static_cast<std::size_t>(rs.pair_2rho(p.mu()))) ok = false;
        maxima.insert(p.element(i).translation());
      }
      bool k_ok = maxima == oracle::orbit_closure(rs, p.mu());
      for (const auto& nu : oracle::weight_support_box(rs, p.mu(), 6))
        if (!p.find(make_translation(p.group(), nu))) k_ok = false;
      const auto* c = find_check(reports[k], "structure");
      if (!c || c->status != CheckStatus::Pass) k_ok = false;
      if (!k_ok) {
        ok = false;
        bad += " " + label(cfg.entries[k]);
      }
    }
    report(4, "maxima are the orbit translations of length <2rho,mu>; Omega(mu) translations admissible", ok,
           std::to_string(posets.size()) + " posets" + (bad.empty() ? "" : "; failing:" + bad));
  }

  // 5. oracle equivalences
  {
    std::mt19937_64 rng(20261018);
    std::map<std::string, RootSystemPtr> groups;
    for (const auto& p : posets) groups.emplace(p.root_system().descriptor(), p.group());
    std::size_t samples = 0, bad_len = 0;
    for (const auto& [name, rs] : groups)
      for (int i = 0; i < 1000; ++i, ++samples) {
        AffineElt a = oracle::random_element(rs, rng, 4, 12);
        if (length(a) != length_by_hyperplanes(a)) ++bad_len;
      }
    report(5, "(a) length formula = hyperplane count", bad_len == 0,
           std::to_string(samples) + " samples over " + std::to_string(groups.size()) + " groups, " +
               std::to_string(bad_len) + " mismatches");

    std::size_t pairs = 0, bad_bruhat = 0, gap1 = 0, bad_cover = 0, checked = 0;
    for (const auto& p : posets) {
      if (p.size() > 200) continue;
      ++checked;
      for (std::size_t y = 0; y < p.size(); ++y) {
        std::set<AffineElt> covers;
        for (const auto& c : lower_covers(p.element(y))) covers.insert(c.element);
        for (std::size_t x = 0; x < p.size(); ++x) {
          ++pairs;
          bool leq = bruhat_leq(p.element(x), p.element(y));
          if (leq != oracle::subword_leq(p.element(x), p.element(y))) ++bad_bruhat;
          if (leq && p.length(x) + 1 == p.length(y)) {
            ++gap1;
            if (!covers.count(p.element(x))) ++bad_cover;
          }
        }
      }
    }
    report(5, "(b) Bruhat order = subword criterion", bad_bruhat == 0 && checked > 0,
           std::to_string(pairs) + " pairs over " + std::to_string(checked) + " posets, " +
               std::to_string(bad_bruhat) + " mismatches");
    report(5, "(c) lower covers reproduce every length-gap-1 relation", bad_cover == 0 && gap1 > 0,
           std::to_string(gap1) + " relations, " + std::to_string(bad_cover) + " missing");
  }

  // 6. golden cardinalities
  {
    bool ok = true;
    std::string detail;
    const std::map<std::string, std::size_t> expected{
        {"A1_1.json", 5}, {"GL2_1_0.json", 3}, {"GL3_1_0_0.json", 7}, {"GL4_1_0_0_0.json", 15}};
    for (const auto& fx : golden::fixtures()) {
      std::ifstream in(std::string(KRADM_GOLDEN_DIR) + "/" + fx.file);
      if (!in) {
        ok = false;
        detail += " missing " + fx.file;
        continue;
      }
      auto j = nlohmann::json::parse(in);
      auto p = build_admissible(parse_group(fx.group), fx.mu);
      std::vector<std::string> keys;
      for (const auto& a : p.elements()) keys.push_back(golden::element_key(a));
      std::sort(keys.begin(), keys.end());
      bool f_ok = j["size"] == p.size() && j["elements"].get<std::vector<std::string>>() == keys &&
                  p.size() == expected.at(fx.file);
      ok = ok && f_ok;
      detail += " " + fx.group + " " + to_string(fx.mu) + "=" + std::to_string(p.size());
    }
    report(6, "admissible set cardinalities match frozen fixtures", ok, detail.substr(1));
  }

  // 7. determinism
  {
    VerifyOptions serial = cfg.options;
    serial.threads = 1;
    auto a = reports_to_json(run_sweep(cfg.entries, serial), false).dump();
    auto b = reports_to_json(run_sweep(cfg.entries, serial), false).dump();
    auto c = reports_to_json(reports, false).dump();
    report(7, "repeated and parallel sweeps give identical JSON", a == b && a == c,
           std::to_string(a.size()) + " bytes, threads " + std::to_string(opts.threads));
  }

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
