#include "kradm/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kradm/export.hpp"

namespace kradm::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep))
    if (!trim(tok).empty()) out.push_back(trim(tok));
  return out;
}

std::vector<std::string> parse_only(const std::string& value) {
  auto names = split(value, ',');
  for (const auto& n : names)
    if (std::find(check_names().begin(), check_names().end(), n) == check_names().end())
      throw ConfigError("unknown check '" + n + "' (expected structure, s2, codim1_bound or haines)");
  return names;
}

struct Common {
  std::string group;
  std::string lattice;
  std::string mu;
  std::string out;
  std::string format = "json";
  std::size_t cap = BuildOptions{}.cap;
  unsigned threads = 1;
};

void add_group_options(CLI::App* app, Common& c) {
  app->add_option("--group", c.group, "Group descriptor: A1, C2, G2, GL3, ...");
  app->add_option("--lattice", c.lattice, "Lattice override: Qv, Pv or GL");
  app->add_option("--mu", c.mu, "Coweight mu in lattice coordinates, comma separated");
  app->add_option("--out", c.out, "Output file (default: stdout)");
  app->add_option("--cap", c.cap, "Maximal number of poset elements")->check(CLI::PositiveNumber);
}

SweepEntry entry_from(const Common& c) {
  if (c.group.empty()) throw ConfigError("--group is required");
  if (c.mu.empty()) throw ConfigError("--mu is required");
  SweepEntry e;
  e.group = c.group;
  e.lattice = c.lattice;
  try {
    e.mu = parse_intvec(c.mu);
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(std::string("malformed --mu: ") + ex.what());
  }
  validate_entry(e);
  return e;
}

AdmissiblePoset build_from(const Common& c) {
  SweepEntry e = entry_from(c);
  return build_admissible(parse_group(e.group, e.lattice), e.mu, BuildOptions{c.cap});
}

void emit(const Common& c, const std::string& payload, std::ostream& out) {
  if (c.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::ios_base::failure("cannot open " + c.out + " for writing");
  f << payload;
  if (!f) throw std::ios_base::failure("write to " + c.out + " failed");
}

void warn_normalized(const AdmissiblePoset& p, std::ostream& err) {
  if (p.requested_mu())
    err << "warning: mu " << to_string(*p.requested_mu()) << " is not dominant; using " << to_string(p.mu()) << "\n";
}

}  // namespace

void validate_entry(const SweepEntry& entry) {
  RootSystemPtr rs;
  try {
    rs = parse_group(entry.group, entry.lattice);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  if (entry.mu.size() != rs->dim())
    throw ConfigError("mu " + to_string(entry.mu) + " has " + std::to_string(entry.mu.size()) + " entries; " +
                      rs->descriptor() + " needs " + std::to_string(rs->dim()));
}

SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
    if (auto eq = line.find('='); eq != std::string::npos) {
      std::string key = trim(line.substr(0, eq));
      std::string value = trim(line.substr(eq + 1));
      try {
        if (key == "threads") cfg.options.threads = static_cast<unsigned>(std::stoul(value));
        else if (key == "cap") cfg.options.build.cap = std::stoul(value);
        else if (key == "only") cfg.options.only = parse_only(value);
        else throw ConfigError("unknown option '" + key + "'");
      } catch (const ConfigError& e) {
        throw ConfigError(where() + e.what());
      } catch (const std::exception&) {
        throw ConfigError(where() + "bad value '" + value + "' for " + key);
      }
      continue;
    }
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.size() != 2 && tokens.size() != 3)
      throw ConfigError(where() + "expected '<group> [<lattice>] <mu>'");
    SweepEntry e;
    e.group = tokens[0];
    if (tokens.size() == 3) e.lattice = tokens[1];
    try {
      e.mu = parse_intvec(tokens.back());
      validate_entry(e);
    } catch (const std::exception& ex) {
      throw ConfigError(where() + ex.what());
    }
    cfg.entries.push_back(std::move(e));
  }
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::ios_base::failure("cannot read config file " + path);
  return parse_sweep_config(f);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kottwitz-Rapoport admissible sets: enumeration and verification", "kradm"};
  app.require_subcommand(1);

  Common c;
  std::string config_path;
  std::string only;
  bool no_timing = false;
  std::string address;
  bool all_codim1 = false;

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate Adm(mu)");
  add_group_options(enumerate, c);
  enumerate->add_option("--format", c.format, "json, dot or csv")->check(CLI::IsMember({"json", "dot", "csv"}));

  auto* verify = app.add_subcommand("verify", "Verify the admissible-set properties");
  add_group_options(verify, c);
  verify->add_option("--config", config_path, "Sweep file");
  verify->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--only", only, "Comma-separated checks: structure,s2,codim1_bound,haines");
  verify->add_flag("--no-timing", no_timing, "Omit wall_time_ms from the report");
  verify->add_option("--format", c.format, "json")->check(CLI::IsMember({"json"}));

  auto* graph = app.add_subcommand("graph", "DOT export of a Codim<=1(x) graph");
  add_group_options(graph, c);
  graph->add_option("--x", address, "Element: reduced word[@omega], 'e' or t:<coords>");
  graph->add_flag("--all-codim1", all_codim1, "Graph on every element of codimension <= 1");
  graph->add_option("--format", c.format, "dot")->check(CLI::IsMember({"dot"}));

  auto* irr = app.add_subcommand("irr", "Irr(x) by direct scan and by closed formula");
  add_group_options(irr, c);
  irr->add_option("--x", address, "Element: reduced word[@omega], 'e' or t:<coords>")->required();
  irr->add_option("--format", c.format, "json")->check(CLI::IsMember({"json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (*enumerate) {
      AdmissiblePoset p = build_from(c);
      warn_normalized(p, err);
      std::string payload;
      if (c.format == "dot") payload = poset_to_dot(p);
      else if (c.format == "csv") payload = poset_to_csv(p);
      else payload = poset_to_json(p).dump(2) + "\n";
      emit(c, payload, out);
      return kSuccess;
    }

    if (*verify) {
      SweepConfig cfg;
      if (!config_path.empty()) {
        if (!c.group.empty() || !c.mu.empty()) throw ConfigError("use either --config or --group/--mu");
        cfg = load_sweep_config(config_path);
      } else {
        cfg.entries.push_back(entry_from(c));
      }
      if (verify->count("--cap")) cfg.options.build.cap = c.cap;
      if (verify->count("--threads")) cfg.options.threads = c.threads;
      if (!only.empty()) cfg.options.only = parse_only(only);

      auto reports = run_sweep(cfg.entries, cfg.options);
      emit(c, reports_to_json(reports, !no_timing).dump(2) + "\n", out);
      bool cap_hit = false;
      for (const auto& r : reports) {
        err << (r.passed() ? "PASS " : "FAIL ") << r.entry.group
            << (r.entry.lattice.empty() ? "" : "/" + r.entry.lattice) << " mu=" << to_string(r.entry.mu)
            << " |Adm|=" << r.poset_size;
        if (r.error) err << " error: " << *r.error;
        err << "\n";
        cap_hit = cap_hit || r.cap_exceeded;
      }
      if (cap_hit) return kCapExceeded;
      return all_pass(reports) ? kSuccess : kVerificationFailed;
    }

    if (*graph) {
      if (all_codim1 == !address.empty()) throw ConfigError("graph needs exactly one of --x and --all-codim1");
      AdmissiblePoset p = build_from(c);
      warn_normalized(p, err);
      StrataGraph g = all_codim1 ? full_codim_le1_graph(p) : codim_le1_graph(p, parse_element_address(p, address));
      emit(c, strata_graph_to_dot(p, g), out);
      return kSuccess;
    }

    if (*irr) {
      AdmissiblePoset p = build_from(c);
      warn_normalized(p, err);
      std::size_t x = parse_element_address(p, address);
      if (p.codimension(x) != 1)
        throw ConfigError("irr needs an element of codimension 1; " + address + " has codimension " +
                          std::to_string(p.codimension(x)));
      Json j;
      j["x"] = element_json(p, x);
      j["address"] = element_address(p, x);
      j["brute_force"] = irr_bruteforce(p, x);
      HainesIrr h = irr_haines(p, x);
      j["haines"] = h.irr;
      j["case"] = std::string(1, h.which);
      j["nu"] = h.nu;
      j["beta"] = p.root_system().positive_roots()[h.beta];
      emit(c, j.dump(2) + "\n", out);
      return kSuccess;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const CapExceeded& e) {
    err << "resource cap: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::ios_base::failure& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"kradm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace kradm::cli
