#include "kradm/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace kradm {

namespace {

Json vec_json(const IntVec& v) { return Json(v); }

Json vecs_json(const std::vector<IntVec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

void fail_with(CheckResult& r, Json witness) {
  r.status = CheckStatus::Fail;
  r.witnesses.push_back(std::move(witness));
}

std::vector<std::size_t> codim1_indices(const AdmissiblePoset& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.codimension(i) == 1) out.push_back(i);
  return out;
}

bool wanted(const VerifyOptions& o, const std::string& name) {
  return o.only.empty() || std::find(o.only.begin(), o.only.end(), name) != o.only.end();
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool VerificationReport::passed() const {
  if (error) return false;
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

Json element_json(const AdmissiblePoset& p, std::size_t i) {
  const AffineElt& x = p.element(i);
  Json j;
  j["finite_word"] = canonical_word(p.root_system(), x.finite_part());
  j["translation"] = vec_json(x.translation());
  j["reduced_word"] = word_string(reduced_word(x).word);
  j["length"] = p.length(i);
  return j;
}

CheckResult verify_s2(const AdmissiblePoset& p, unsigned threads) {
  CheckResult r{"s2"};
  struct Outcome {
    bool connected = true;
    bool without_base = true;
    std::size_t vertices = 0;
    std::size_t components_hint = 0;
  };
  std::vector<Outcome> out(p.size());
  parallel_for(p.size(), threads, [&](std::size_t x) {
    StrataGraph g = codim_le1_graph(p, x);
    out[x] = {g.connected(), g.connected_without_base(), g.vertex_count(), g.edges.size()};
  });
  std::size_t without_base = 0;
  std::size_t max_vertices = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (out[x].without_base) ++without_base;
    max_vertices = std::max(max_vertices, out[x].vertices);
    if (!out[x].connected) {
      Json w = element_json(p, x);
      w["codimension"] = p.codimension(x);
      w["vertices"] = out[x].vertices;
      w["edges"] = out[x].components_hint;
      fail_with(r, std::move(w));
    }
  }
  r.details["graphs_checked"] = p.size();
  r.details["disconnected"] = r.witnesses.size();
  r.details["connected_without_base"] = without_base;
  r.details["max_vertices"] = max_vertices;
  return r;
}

CheckResult verify_codim1_bound(const AdmissiblePoset& p, unsigned threads) {
  CheckResult r{"codim1_bound"};
  auto xs = codim1_indices(p);
  if (xs.empty()) {
    r.status = CheckStatus::Skipped;
    r.details["codim1_elements"] = 0;
    return r;
  }
  std::vector<std::vector<IntVec>> irr(xs.size());
  parallel_for(xs.size(), threads, [&](std::size_t k) { irr[k] = irr_bruteforce(p, xs[k]); });
  std::size_t exactly_two = 0;
  Json not_two = Json::array();
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const std::size_t n = irr[k].size();
    if (n == 2 && irr[k][0] != irr[k][1]) ++exactly_two;
    else {
      Json w = element_json(p, xs[k]);
      w["irr"] = vecs_json(irr[k]);
      not_two.push_back(w);
    }
    if (n > 2) {
      Json w = element_json(p, xs[k]);
      w["irr"] = vecs_json(irr[k]);
      fail_with(r, std::move(w));
    }
  }
  r.details["codim1_elements"] = xs.size();
  r.details["exactly_two"] = exactly_two;
  r.details["not_exactly_two"] = not_two;
  return r;
}

CheckResult verify_haines(const AdmissiblePoset& p, unsigned threads) {
  CheckResult r{"haines"};
  auto xs = codim1_indices(p);
  const bool minuscule = is_minuscule(p.root_system(), p.mu());
  r.details["minuscule"] = minuscule;
  if (xs.empty()) {
    r.status = CheckStatus::Skipped;
    r.details["codim1_elements"] = 0;
    return r;
  }
  struct Outcome {
    std::vector<IntVec> brute;
    std::optional<HainesIrr> haines;
    std::string error;
  };
  std::vector<Outcome> out(xs.size());
  parallel_for(xs.size(), threads, [&](std::size_t k) {
    out[k].brute = irr_bruteforce(p, xs[k]);
    try {
      out[k].haines = irr_haines(p, xs[k]);
    } catch (const AdmissibleError& e) {
      out[k].error = e.what();
    }
  });
  std::size_t case_a = 0, case_b = 0, outside_support = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const auto& o = out[k];
    if (!o.haines) {
      Json w = element_json(p, xs[k]);
      w["error"] = o.error;
      fail_with(r, std::move(w));
      continue;
    }
    (o.haines->which == 'a' ? case_a : case_b) += 1;
    if (!o.haines->nu_in_support) ++outside_support;
    const bool b_forbidden = minuscule && o.haines->which == 'b';
    if (o.haines->irr != o.brute || b_forbidden) {
      Json w = element_json(p, xs[k]);
      w["case"] = std::string(1, o.haines->which);
      w["haines"] = vecs_json(o.haines->irr);
      w["brute_force"] = vecs_json(o.brute);
      fail_with(r, std::move(w));
    }
  }
  r.details["codim1_elements"] = xs.size();
  r.details["case_a"] = case_a;
  r.details["case_b"] = case_b;
  r.details["nu_outside_support"] = outside_support;
  return r;
}

CheckResult verify_structure(const AdmissiblePoset& p) {
  CheckResult r{"structure"};
  const RootSystemPtr& rs = p.group();
  const std::size_t expected_len = static_cast<std::size_t>(rs->pair_2rho(p.mu()));
  auto translation_witness = [](const IntVec& nu, const char* what) {
    Json w;
    w["finite_word"] = Json::array();
    w["translation"] = vec_json(nu);
    w["problem"] = what;
    return w;
  };

  std::set<std::size_t> maxima;
  for (std::size_t i : maximal_elements(p)) maxima.insert(i);
  std::set<std::size_t> orbit;
  for (const auto& nu : p.lambda_set()) {
    auto i = p.translation_index(nu);
    if (!i) fail_with(r, translation_witness(nu, "orbit translation missing"));
    else orbit.insert(*i);
  }
  for (std::size_t i : maxima) {
    if (!orbit.count(i)) {
      Json w = element_json(p, i);
      w["problem"] = "maximal element outside the orbit translations";
      fail_with(r, std::move(w));
    }
    if (p.length(i) != expected_len) {
      Json w = element_json(p, i);
      w["problem"] = "maximal element of unexpected length";
      fail_with(r, std::move(w));
    }
  }
  for (std::size_t i : orbit)
    if (!maxima.count(i)) {
      Json w = element_json(p, i);
      w["problem"] = "orbit translation is not maximal";
      fail_with(r, std::move(w));
    }

  std::size_t support_hits = 0;
  for (const auto& nu : p.omega_set()) {
    if (p.translation_index(nu)) ++support_hits;
    else fail_with(r, translation_witness(nu, "weight-support translation missing"));
  }

  const IntVec cls = omega_class(p.element(0));
  std::size_t length_zero = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.length(i) == 0) ++length_zero;
    if (omega_class(p.element(i)) != cls) {
      Json w = element_json(p, i);
      w["problem"] = "element in a different Omega-class";
      fail_with(r, std::move(w));
    }
  }
  if (length_zero != 1) {
    Json w = element_json(p, p.bottom());
    w["problem"] = "expected exactly one length-0 element";
    fail_with(r, std::move(w));
  }

  r.details["maximal_elements"] = maxima.size();
  r.details["orbit_size"] = p.lambda_set().size();
  r.details["max_length"] = expected_len;
  r.details["weight_support_size"] = p.omega_set().size();
  r.details["weight_support_in_poset"] = support_hits;
  r.details["omega_class"] = vec_json(cls);
  return r;
}

VerificationReport verify_entry(const SweepEntry& entry, const VerifyOptions& options) {
  VerificationReport rep;
  rep.entry = entry;
  rep.mu = entry.mu;
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&] {
    rep.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
  };
  auto failed_build = [&](const std::string& message) {
    rep.error = message;
    CheckResult c{"build", CheckStatus::Fail};
    Json w;
    w["mu"] = vec_json(entry.mu);
    w["message"] = message;
    c.witnesses.push_back(std::move(w));
    rep.checks.push_back(std::move(c));
  };

  RootSystemPtr rs;
  try {
    rs = parse_group(entry.group, entry.lattice);
    rep.type = std::string(1, rs->family()) + std::to_string(rs->rank());
    rep.lattice = lattice_label(rs->lattice().kind);
  } catch (const std::exception& e) {
    failed_build(e.what());
    return finish();
  }

  std::optional<AdmissiblePoset> poset;
  try {
    poset.emplace(build_admissible(rs, entry.mu, options.build));
  } catch (const CapExceeded& e) {
    rep.cap_exceeded = true;
    failed_build(e.what());
    return finish();
  } catch (const std::exception& e) {
    failed_build(e.what());
    return finish();
  }
  const AdmissiblePoset& p = *poset;
  rep.mu = p.mu();
  rep.poset_size = p.size();
  if (wanted(options, "structure")) rep.checks.push_back(verify_structure(p));
  if (wanted(options, "s2")) rep.checks.push_back(verify_s2(p, options.threads));
  if (wanted(options, "codim1_bound")) rep.checks.push_back(verify_codim1_bound(p, options.threads));
  if (wanted(options, "haines")) rep.checks.push_back(verify_haines(p, options.threads));
  return finish();
}

std::vector<VerificationReport> run_sweep(const std::vector<SweepEntry>& config, const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  out.reserve(config.size());
  for (const auto& e : config) out.push_back(verify_entry(e, options));
  return out;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed(); });
}

Json report_to_json(const VerificationReport& r, bool with_wall_time) {
  Json j;
  j["group"] = r.entry.group;
  j["type"] = r.type;
  j["lattice"] = r.lattice;
  j["mu"] = vec_json(r.mu);
  if (r.mu != r.entry.mu) j["requested_mu"] = vec_json(r.entry.mu);
  j["poset_size"] = r.poset_size;
  j["status"] = r.passed() ? "pass" : "fail";
  if (r.error) j["error"] = *r.error;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["status"] = to_string(c.status);
    cj["details"] = c.details;
    cj["witnesses"] = Json(c.witnesses);
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  if (with_wall_time) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

Json reports_to_json(const std::vector<VerificationReport>& reports, bool with_wall_time) {
  Json a = Json::array();
  for (const auto& r : reports) a.push_back(report_to_json(r, with_wall_time));
  return a;
}

}  // namespace kradm
