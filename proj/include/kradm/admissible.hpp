#pragma once

// The mu-admissible set Adm(mu): the Bruhat lower set generated by the
// translations t_lambda, lambda in the W0-orbit of mu.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "kradm/affine_weyl.hpp"
#include "kradm/rootsys.hpp"

namespace kradm {

class AdmissibleError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct BuildOptions {
  std::size_t cap = 500000;
};

struct CoverEdge {
  std::size_t lower = 0;
  std::size_t upper = 0;
  Reflection reflection;
};

class AdmissiblePoset {
public:
  const RootSystemPtr& group() const { return rs_; }
  const RootSystem& root_system() const { return *rs_; }
  const IntVec& mu() const { return mu_; }
  /// Set when the requested mu was not dominant and got normalized.
  const std::optional<IntVec>& requested_mu() const { return requested_mu_; }

  std::size_t size() const { return elements_.size(); }
  /// Sorted by decreasing length, then by AffineElt order.
  const std::vector<AffineElt>& elements() const { return elements_; }
  const AffineElt& element(std::size_t i) const { return elements_.at(i); }
  std::size_t length(std::size_t i) const { return lengths_.at(i); }
  std::size_t max_length() const { return max_length_; }
  std::size_t codimension(std::size_t i) const { return max_length_ - lengths_.at(i); }

  const std::vector<CoverEdge>& covers() const { return covers_; }
  const std::vector<std::size_t>& lower_covers_of(std::size_t i) const { return down_.at(i); }
  const std::vector<std::size_t>& upper_covers_of(std::size_t i) const { return up_.at(i); }

  /// Lambda(mu) = W0 mu, sorted.
  const std::vector<IntVec>& lambda_set() const { return lambda_; }
  /// Omega(mu), the weight support, sorted.
  const std::vector<IntVec>& omega_set() const { return omega_; }

  std::optional<std::size_t> find(const AffineElt& x) const;
  std::size_t index_of(const AffineElt& x) const;  // throws AdmissibleError if absent
  /// The unique length-0 element, below everything.
  std::size_t bottom() const { return elements_.size() - 1; }
  std::optional<std::size_t> translation_index(const IntVec& nu) const;

private:
  friend AdmissiblePoset build_admissible(const RootSystemPtr&, const IntVec&, const BuildOptions&);

  RootSystemPtr rs_;
  IntVec mu_;
  std::optional<IntVec> requested_mu_;
  std::vector<AffineElt> elements_;
  std::vector<std::size_t> lengths_;
  std::vector<CoverEdge> covers_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<IntVec> lambda_;
  std::vector<IntVec> omega_;
  std::size_t max_length_ = 0;
  std::unordered_map<AffineElt, std::size_t, AffineEltHash> index_;
};

/// Downward closure of {t_lambda : lambda in W0 mu} by repeated lower covers.
/// A non-dominant mu is replaced by its dominant representative. Throws
/// CapExceeded when more than options.cap elements are reached.
AdmissiblePoset build_admissible(const RootSystemPtr& rs, const IntVec& mu, const BuildOptions& options = {});

std::size_t codimension(const AdmissiblePoset& p, const AffineElt& y);

/// Codim<=1(x) as a bipartite graph between codimension-1 elements and
/// maximal translations, with an edge whenever the first lies below the second.
struct StrataGraph {
  std::size_t base = 0;
  std::vector<std::size_t> codim0;  // poset indices, ascending
  std::vector<std::size_t> codim1;  // poset indices, ascending
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (codim1 index, codim0 index)

  std::size_t vertex_count() const { return codim0.size() + codim1.size(); }
  bool connected() const;
  /// Connectivity after deleting the base vertex (when it is a vertex).
  bool connected_without_base() const;
};

StrataGraph codim_le1_graph(const AdmissiblePoset& p, std::size_t x);

/// The graph on every element of codimension <= 1 (equal to the graph of the bottom element).
StrataGraph full_codim_le1_graph(const AdmissiblePoset& p);

/// {nu in Lambda(mu) : x <= t_nu} for x of codimension 1, by direct scan.
std::vector<IntVec> irr_bruteforce(const AdmissiblePoset& p, std::size_t x);

struct HainesIrr {
  IntVec nu;          // x = t_nu s_beta
  std::size_t beta = 0;  // positive root index
  char which = 'a';   // 'a': x < s_beta x,  'b': s_beta x < x
  bool nu_in_support = false;
  std::vector<IntVec> irr;  // sorted
};

/// Irr(x) from the normal form x = t_nu s_beta:
///   (a) x < s_beta x  ->  { nu, s_beta nu }
///   (b) s_beta x < x  ->  { nu + beta^vee, s_beta(nu + beta^vee) }
HainesIrr irr_haines(const AdmissiblePoset& p, std::size_t x);

std::vector<std::size_t> maximal_elements(const AdmissiblePoset& p);

}  // namespace kradm
