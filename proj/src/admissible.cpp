#include "kradm/admissible.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>

#include <boost/pending/disjoint_sets.hpp>

namespace kradm {

std::optional<std::size_t> AdmissiblePoset::find(const AffineElt& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t AdmissiblePoset::index_of(const AffineElt& x) const {
  auto i = find(x);
  if (!i) throw AdmissibleError("element is not in Adm(" + to_string(mu_) + ")");
  return *i;
}

std::optional<std::size_t> AdmissiblePoset::translation_index(const IntVec& nu) const {
  if (nu.size() != rs_->dim()) return std::nullopt;
  return find(make_translation(rs_, nu));
}

AdmissiblePoset build_admissible(const RootSystemPtr& rs, const IntVec& mu_in, const BuildOptions& options) {
  try {
    rs->check_coweight(mu_in);
  } catch (const RootSystemError& e) {
    throw AdmissibleError(e.what());
  }
  AdmissiblePoset p;
  p.rs_ = rs;
  p.mu_ = mu_in;
  if (!rs->is_dominant(mu_in)) {
    p.mu_ = dominant_representative(*rs, mu_in).dominant;
    p.requested_mu_ = mu_in;
  }
  p.lambda_ = weyl_orbit(*rs, p.mu_);
  p.omega_ = weight_support(*rs, p.mu_);
  p.max_length_ = static_cast<std::size_t>(rs->pair_2rho(p.mu_));

  std::vector<AffineElt> found;
  std::unordered_map<AffineElt, std::size_t, AffineEltHash> index;
  std::vector<CoverEdge> edges;

  std::vector<std::size_t> frontier;
  for (const auto& lam : p.lambda_) {
    AffineElt t = make_translation(rs, lam);
    index.emplace(t, found.size());
    frontier.push_back(found.size());
    found.push_back(std::move(t));
  }
  // The frontier always holds elements of one length, so each cover is met
  // exactly once, from its upper end.
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t yi : frontier) {
      for (auto& cover : lower_covers(found[yi])) {
        auto [it, inserted] = index.emplace(cover.element, found.size());
        if (inserted) {
          if (found.size() >= options.cap)
            throw CapExceeded("Adm(" + to_string(p.mu_) + ") in " + rs->descriptor() + " exceeds the cap of " +
                              std::to_string(options.cap) + " elements");
          next.push_back(found.size());
          found.push_back(std::move(cover.element));
        }
        edges.push_back({it->second, yi, cover.reflection});
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::size_t> lens(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) lens[i] = length(found[i]);
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (lens[a] != lens[b]) return lens[a] > lens[b];
    return found[a] < found[b];
  });
  std::vector<std::size_t> rank_of(found.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank_of[order[k]] = k;

  p.elements_.reserve(found.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    p.elements_.push_back(found[order[k]]);
    p.lengths_.push_back(lens[order[k]]);
    p.index_.emplace(p.elements_.back(), k);
  }
  for (auto& e : edges) {
    e.lower = rank_of[e.lower];
    e.upper = rank_of[e.upper];
  }
  std::sort(edges.begin(), edges.end(), [](const CoverEdge& a, const CoverEdge& b) {
    return std::tie(a.upper, a.lower, a.reflection.root, a.reflection.level) <
           std::tie(b.upper, b.lower, b.reflection.root, b.reflection.level);
  });
  p.covers_ = std::move(edges);
  p.down_.assign(p.elements_.size(), {});
  p.up_.assign(p.elements_.size(), {});
  for (const auto& e : p.covers_) {
    p.down_[e.upper].push_back(e.lower);
    p.up_[e.lower].push_back(e.upper);
  }
  for (auto& v : p.up_) std::sort(v.begin(), v.end());
  return p;
}

std::size_t codimension(const AdmissiblePoset& p, const AffineElt& y) { return p.codimension(p.index_of(y)); }

namespace {

bool components_connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& links,
                          std::optional<std::size_t> removed) {
  std::vector<std::size_t> rank(n, 0);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(), parent.data());
  for (const auto& [a, b] : links) {
    if (removed && (a == *removed || b == *removed)) continue;
    sets.union_set(a, b);
  }
  std::optional<std::size_t> root;
  for (std::size_t v = 0; v < n; ++v) {
    if (removed && v == *removed) continue;
    std::size_t r = sets.find_set(v);
    if (!root) root = r;
    else if (*root != r) return false;
  }
  return true;
}

// Local vertex numbering: codim1 vertices first, then codim0.
std::vector<std::pair<std::size_t, std::size_t>> local_links(const StrataGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> links;
  for (const auto& [y, t] : g.edges) {
    auto yi = static_cast<std::size_t>(std::lower_bound(g.codim1.begin(), g.codim1.end(), y) - g.codim1.begin());
    auto ti = static_cast<std::size_t>(std::lower_bound(g.codim0.begin(), g.codim0.end(), t) - g.codim0.begin());
    links.emplace_back(yi, g.codim1.size() + ti);
  }
  return links;
}

std::optional<std::size_t> local_index(const StrataGraph& g, std::size_t poset_index) {
  auto it = std::lower_bound(g.codim1.begin(), g.codim1.end(), poset_index);
  if (it != g.codim1.end() && *it == poset_index) return static_cast<std::size_t>(it - g.codim1.begin());
  it = std::lower_bound(g.codim0.begin(), g.codim0.end(), poset_index);
  if (it != g.codim0.end() && *it == poset_index)
    return g.codim1.size() + static_cast<std::size_t>(it - g.codim0.begin());
  return std::nullopt;
}

StrataGraph graph_on(const AdmissiblePoset& p, std::size_t base, const std::vector<std::size_t>& vertices) {
  StrataGraph g;
  g.base = base;
  for (std::size_t v : vertices) (p.codimension(v) == 0 ? g.codim0 : g.codim1).push_back(v);
  std::sort(g.codim0.begin(), g.codim0.end());
  std::sort(g.codim1.begin(), g.codim1.end());
  for (std::size_t y : g.codim1)
    for (std::size_t t : g.codim0)
      if (bruhat_leq(p.element(y), p.element(t))) g.edges.emplace_back(y, t);
  return g;
}

}  // namespace

bool StrataGraph::connected() const {
  if (vertex_count() == 0) return true;
  return components_connected(vertex_count(), local_links(*this), std::nullopt);
}

bool StrataGraph::connected_without_base() const {
  auto removed = local_index(*this, base);
  if (!removed) return connected();
  if (vertex_count() <= 1) return true;
  return components_connected(vertex_count(), local_links(*this), removed);
}

StrataGraph codim_le1_graph(const AdmissiblePoset& p, std::size_t x) {
  if (x >= p.size()) throw AdmissibleError("codim_le1_graph: element index out of range");
  std::vector<std::size_t> vertices;
  const AffineElt& base = p.element(x);
  for (std::size_t i = 0; i < p.size() && p.codimension(i) <= 1; ++i)
    if (bruhat_leq(base, p.element(i))) vertices.push_back(i);
  return graph_on(p, x, vertices);
}

StrataGraph full_codim_le1_graph(const AdmissiblePoset& p) {
  std::vector<std::size_t> vertices;
  for (std::size_t i = 0; i < p.size() && p.codimension(i) <= 1; ++i) vertices.push_back(i);
  return graph_on(p, p.bottom(), vertices);
}

std::vector<IntVec> irr_bruteforce(const AdmissiblePoset& p, std::size_t x) {
  if (p.codimension(x) != 1)
    throw AdmissibleError("Irr(x) needs codimension 1, got codimension " + std::to_string(p.codimension(x)));
  std::vector<IntVec> out;
  for (const auto& nu : p.lambda_set())
    if (bruhat_leq(p.element(x), make_translation(p.group(), nu))) out.push_back(nu);
  return out;
}

HainesIrr irr_haines(const AdmissiblePoset& p, std::size_t x) {
  if (p.codimension(x) != 1)
    throw AdmissibleError("Irr(x) needs codimension 1, got codimension " + std::to_string(p.codimension(x)));
  const RootSystem& rs = p.root_system();
  const AffineElt& elt = p.element(x);
  HainesIrr h;
  h.beta = rs.reflection_root(elt.finite_part());
  if (h.beta == RootSystem::npos)
    throw AdmissibleError("finite part of a codimension-1 element is not a reflection");
  h.nu = elt.translation();
  h.nu_in_support = std::binary_search(p.omega_set().begin(), p.omega_set().end(), h.nu);

  AffineElt reflected = make_finite(p.group(), rs.reflection_matrix(h.beta)) * elt;
  h.which = length(reflected) > p.length(x) ? 'a' : 'b';
  IntVec base = h.which == 'a' ? h.nu : h.nu + rs.positive_coroots()[h.beta];
  h.irr = {base, rs.reflect(base, h.beta)};
  std::sort(h.irr.begin(), h.irr.end());
  h.irr.erase(std::unique(h.irr.begin(), h.irr.end()), h.irr.end());
  return h;
}

std::vector<std::size_t> maximal_elements(const AdmissiblePoset& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.upper_covers_of(i).empty()) out.push_back(i);
  return out;
}

}  // namespace kradm
