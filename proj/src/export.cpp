#include "kradm/export.hpp"

#include <sstream>

namespace kradm {

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string translation_label(const IntVec& nu) { return "t(" + to_string(nu) + ")"; }

}  // namespace

std::string element_address(const AdmissiblePoset& p, std::size_t i) {
  return word_string(reduced_word(p.element(i)).word) + "@" + to_string(omega_class(p.element(i)));
}

std::size_t parse_element_address(const AdmissiblePoset& p, const std::string& address) {
  if (address.rfind("t:", 0) == 0) {
    IntVec nu = parse_intvec(address.substr(2));
    auto i = p.translation_index(nu);
    if (!i) throw AdmissibleError("translation t(" + to_string(nu) + ") is not in Adm(" + to_string(p.mu()) + ")");
    return *i;
  }
  std::string word_part = address;
  std::string label;
  if (auto at = address.find('@'); at != std::string::npos) {
    word_part = address.substr(0, at);
    label = address.substr(at + 1);
  }
  const AffineElt& bottom = p.element(p.bottom());
  if (!label.empty() && parse_intvec(label) != omega_class(bottom))
    throw AdmissibleError("Omega-class label " + label + " differs from that of Adm(" + to_string(p.mu()) + ") (" +
                          to_string(omega_class(bottom)) + ")");
  std::vector<int> word = parse_word(word_part);
  for (int s : word)
    if (s < 0 || s > p.root_system().rank()) throw AdmissibleError("reflection index out of range in '" + address + "'");
  AffineElt x = from_word(p.group(), word, bottom);
  if (length(x) != word.size()) throw AdmissibleError("word '" + word_part + "' is not reduced");
  auto i = p.find(x);
  if (!i) throw AdmissibleError("element '" + address + "' is not in Adm(" + to_string(p.mu()) + ")");
  return *i;
}

Json poset_to_json(const AdmissiblePoset& p) {
  Json j;
  j["group"] = p.root_system().name();
  j["lattice"] = lattice_label(p.root_system().lattice().kind);
  j["mu"] = p.mu();
  if (p.requested_mu()) j["requested_mu"] = *p.requested_mu();
  j["size"] = p.size();
  j["max_length"] = p.max_length();
  j["lambda"] = p.lambda_set();
  j["omega"] = p.omega_set();
  Json elems = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    Json e = element_json(p, i);
    e = Json{{"id", i}, {"finite_word", e["finite_word"]}, {"translation", e["translation"]},
             {"length", p.length(i)}, {"reduced_word", e["reduced_word"]}, {"codimension", p.codimension(i)}};
    elems.push_back(std::move(e));
  }
  j["elements"] = std::move(elems);
  Json covers = Json::array();
  for (const auto& c : p.covers()) covers.push_back(Json::array({c.lower, c.upper}));
  j["covers"] = std::move(covers);
  return j;
}

std::string poset_to_csv(const AdmissiblePoset& p) {
  std::ostringstream os;
  os << "id,length,codimension,reduced_word,translation,finite_word\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    const AffineElt& x = p.element(i);
    os << i << ',' << p.length(i) << ',' << p.codimension(i) << ',' << word_string(reduced_word(x).word) << ','
       << quoted(to_string(x.translation())) << ','
       << word_string(canonical_word(p.root_system(), x.finite_part())) << '\n';
  }
  return os.str();
}

std::string poset_to_dot(const AdmissiblePoset& p) {
  std::ostringstream os;
  os << "digraph adm {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    const AffineElt& x = p.element(i);
    std::string label = x.is_translation() ? translation_label(x.translation()) : word_string(reduced_word(x).word);
    os << "  n" << i << " [label=" << quoted(label) << ", length=" << p.length(i) << "];\n";
  }
  for (const auto& c : p.covers()) os << "  n" << c.lower << " -> n" << c.upper << ";\n";
  os << "}\n";
  return os.str();
}

std::string strata_graph_to_dot(const AdmissiblePoset& p, const StrataGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t t : g.codim0)
    os << "  n" << t << " [label=" << quoted(translation_label(p.element(t).translation()))
       << ", codim=0, shape=box];\n";
  for (std::size_t y : g.codim1)
    os << "  n" << y << " [label=" << quoted(word_string(reduced_word(p.element(y)).word)) << ", codim=1];\n";
  for (const auto& [y, t] : g.edges) os << "  n" << y << " -- n" << t << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace kradm
