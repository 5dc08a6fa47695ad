#pragma once

// Finite root systems realized on an integral cocharacter lattice X.
//
// Coweights are integer coordinate vectors in a basis of X; roots are integer
// linear functionals on X in the dual basis, so every pairing <lambda, alpha>
// is an ordinary dot product. The basis of X depends on the lattice choice:
//
//   Qv  simple coroots                 (simply connected)
//   Pv  fundamental coweights          (adjoint)
//   explicit generators, given in fundamental-coweight coordinates
//       (the lattice basis is their Hermite normal form)
//   GL  standard basis of Z^n for type A_{n-1} (GL_n)

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "kradm/intmat.hpp"

namespace kradm {

class RootSystemError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class LatticeKind { Coroot, Coweight, Explicit, GL };

struct LatticeChoice {
  LatticeKind kind = LatticeKind::Coroot;
  std::vector<IntVec> generators;  // Explicit only: fundamental-coweight coordinates

  static LatticeChoice coroot() { return {LatticeKind::Coroot, {}}; }
  static LatticeChoice coweight() { return {LatticeKind::Coweight, {}}; }
  static LatticeChoice gl() { return {LatticeKind::GL, {}}; }
  static LatticeChoice explicit_lattice(std::vector<IntVec> gens) { return {LatticeKind::Explicit, std::move(gens)}; }
};

std::string lattice_label(LatticeKind kind);  // "Qv", "Pv", "explicit", "GL"

class RootSystem {
public:
  char family() const { return family_; }
  int rank() const { return rank_; }
  /// Rank of the cocharacter lattice (= rank, except rank + 1 for GL).
  std::size_t dim() const { return dim_; }
  const LatticeChoice& lattice() const { return lattice_; }
  /// "A2", "C2", "GL3", ...
  std::string name() const;
  std::string descriptor() const;  // name plus lattice, e.g. "C2/Qv"

  /// Cartan matrix, entry (i, j) = <alpha_i^vee, alpha_j>.
  const IntMat& cartan() const { return cartan_; }
  const std::vector<IntVec>& simple_roots() const { return simple_roots_; }
  const std::vector<IntVec>& simple_coroots() const { return simple_coroots_; }

  /// Positive roots and their coroots, aligned. The first rank() entries
  /// are the simple ones; the order is by height, then lexicographic.
  const std::vector<IntVec>& positive_roots() const { return pos_roots_; }
  const std::vector<IntVec>& positive_coroots() const { return pos_coroots_; }
  /// Coefficients of each positive root in the simple roots.
  const std::vector<IntVec>& root_coefficients() const { return root_coeffs_; }
  std::size_t highest_root() const { return highest_; }
  int coxeter_number() const { return coxeter_number_; }

  /// 2*rho as a functional on X, and the sum of the positive coroots.
  const IntVec& two_rho() const { return two_rho_; }
  const IntVec& two_rho_check() const { return two_rho_check_; }

  /// [X : Qv]; 0 when infinite (GL lattices).
  Int fundamental_group_order() const { return fundamental_group_order_; }
  std::size_t weyl_group_order() const { return weyl_order_; }

  Int pair(const IntVec& coweight, std::size_t root) const { return dot(coweight, pos_roots_.at(root)); }
  Int pair_2rho(const IntVec& coweight) const { return dot(coweight, two_rho_); }

  /// s_i (lambda), i in [1, rank].
  IntVec reflect_simple(const IntVec& coweight, int i) const;
  IntVec reflect(const IntVec& coweight, std::size_t root) const;

  const IntMat& simple_reflection_matrix(int i) const { return simple_mats_.at(static_cast<std::size_t>(i - 1)); }
  const IntMat& reflection_matrix(std::size_t root) const { return root_mats_.at(root); }
  /// Index of the positive root whose reflection has matrix m, or npos.
  std::size_t reflection_root(const IntMat& m) const;

  bool is_dominant(const IntVec& coweight) const;
  void check_coweight(const IntVec& coweight) const;  // dimension check; throws RootSystemError

  /// Canonical label of the class of lambda in X / Qv.
  IntVec omega_label(const IntVec& coweight) const { return reduce_modulo(coroot_hnf_, coweight); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  friend std::shared_ptr<const RootSystem> build_root_system(char, int, const LatticeChoice&);
  RootSystem() = default;
  void finish();

  char family_ = 'A';
  int rank_ = 0;
  std::size_t dim_ = 0;
  LatticeChoice lattice_;
  IntMat cartan_;
  std::vector<IntVec> simple_roots_;
  std::vector<IntVec> simple_coroots_;
  std::vector<IntVec> pos_roots_;
  std::vector<IntVec> pos_coroots_;
  std::vector<IntVec> root_coeffs_;
  std::vector<IntMat> simple_mats_;
  std::vector<IntMat> root_mats_;
  std::vector<IntVec> coroot_hnf_;
  IntVec two_rho_;
  IntVec two_rho_check_;
  std::size_t highest_ = 0;
  int coxeter_number_ = 0;
  Int fundamental_group_order_ = 1;
  std::size_t weyl_order_ = 1;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Cartan matrix of the irreducible type (Bourbaki numbering). Throws on an
/// invalid (family, rank) pair.
IntMat cartan_matrix(char family, int rank);

RootSystemPtr build_root_system(char family, int rank, const LatticeChoice& lattice);

/// Parses "A1", "C2", "G2", "GL3"; an explicit lattice override ("Qv", "Pv",
/// "GL") takes precedence over the default (GL for "GLn", Qv otherwise).
RootSystemPtr parse_group(const std::string& descriptor, const std::string& lattice_override = "");

/// Element of the finite Weyl group acting on X.
struct FiniteWeylElt {
  std::vector<int> word;  // canonical reduced word, letters in [1, rank]; w = s_word[0] s_word[1] ...
  IntMat matrix;

  static FiniteWeylElt identity(const RootSystem& rs);
  static FiniteWeylElt from_matrix(const RootSystem& rs, IntMat m);
  static FiniteWeylElt from_word(const RootSystem& rs, const std::vector<int>& word);

  std::size_t length() const { return word.size(); }
  friend bool operator==(const FiniteWeylElt& a, const FiniteWeylElt& b) { return a.matrix == b.matrix; }
};

/// Number of positive roots made negative by w^{-1}, i.e. the Coxeter length.
std::size_t finite_length(const RootSystem& rs, const IntMat& w);
/// Smallest-index-first reduced word of w.
std::vector<int> canonical_word(const RootSystem& rs, IntMat w);

struct DominantForm {
  IntVec dominant;
  FiniteWeylElt w;  // w * lambda = dominant
};

DominantForm dominant_representative(const RootSystem& rs, const IntVec& coweight);

/// Full W0-orbit, sorted lexicographically.
std::vector<IntVec> weyl_orbit(const RootSystem& rs, const IntVec& coweight);

/// Weight support of the highest-weight module of highest weight mu: the
/// saturated set generated by mu, sorted lexicographically. Throws if mu is
/// not dominant.
std::vector<IntVec> weight_support(const RootSystem& rs, const IntVec& mu);

bool is_minuscule(const RootSystem& rs, const IntVec& mu);

}  // namespace kradm
