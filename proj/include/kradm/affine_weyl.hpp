#pragma once

// Extended affine Weyl group  X ⋊ W0.
//
// An element t_nu * w is stored as the pair (matrix of w, nu). It acts on the
// apartment X ⊗ Q by  x |-> w(x) - nu,  so the translation t_nu moves points
// by -nu, and
//
//   (t_nu w)(t_nu' w') = t_{nu + w nu'} w w'.
//
// The base alcove is { x : 0 < <x, alpha> < 1 for all alpha > 0 }. Its walls
// give the simple affine reflections s_1..s_r (the finite ones, through 0)
// and s_0 = s_{theta,1} for the highest root theta. The affine reflection in
// the hyperplane <x, alpha> = k is s_{alpha,k} = t_{-k alpha^vee} s_alpha.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kradm/intmat.hpp"
#include "kradm/rootsys.hpp"

namespace kradm {

class GroupMismatch : public std::invalid_argument {
public:
  GroupMismatch() : std::invalid_argument("elements belong to different affine Weyl groups") {}
};

class AffineElt {
public:
  AffineElt(RootSystemPtr rs, IntMat finite, IntVec translation);

  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& group() const { return rs_; }
  const IntMat& finite_part() const { return finite_; }
  const IntVec& translation() const { return translation_; }

  bool is_translation() const { return finite_.is_identity(); }

  friend bool operator==(const AffineElt& a, const AffineElt& b) {
    return a.rs_ == b.rs_ && a.translation_ == b.translation_ && a.finite_ == b.finite_;
  }
  /// Total order used for deterministic output: translation, then matrix.
  friend bool operator<(const AffineElt& a, const AffineElt& b) {
    if (a.translation_ != b.translation_) return a.translation_ < b.translation_;
    return a.finite_.data() < b.finite_.data();
  }

  std::size_t hash() const noexcept;

private:
  RootSystemPtr rs_;
  IntMat finite_;
  IntVec translation_;
};

struct AffineEltHash {
  std::size_t operator()(const AffineElt& a) const noexcept { return a.hash(); }
};

/// Affine reflection s_{alpha,k} in the hyperplane <x, alpha> = k.
struct Reflection {
  std::size_t root = 0;  // index into positive_roots()
  Int level = 0;
  friend bool operator==(const Reflection&, const Reflection&) = default;
};

AffineElt identity_element(const RootSystemPtr& rs);
AffineElt make_translation(const RootSystemPtr& rs, const IntVec& nu);
AffineElt make_finite(const RootSystemPtr& rs, const IntMat& w);
AffineElt make_reflection(const RootSystemPtr& rs, const Reflection& r);
/// Simple affine reflection, i in [0, rank]; 0 is s_{theta,1}.
AffineElt simple_reflection(const RootSystemPtr& rs, int i);

AffineElt compose(const AffineElt& a, const AffineElt& b);
inline AffineElt operator*(const AffineElt& a, const AffineElt& b) { return compose(a, b); }
AffineElt invert(const AffineElt& a);
RatVec apply(const AffineElt& a, const RatVec& point);

/// Coxeter length via the closed formula
///   sum over alpha > 0 of |<nu, alpha>|       if w^{-1} alpha > 0,
///                          |<nu, alpha> + 1|   otherwise,
/// for a = t_nu w.
std::size_t length(const AffineElt& a);

/// Coxeter length as the number of affine hyperplanes separating the base
/// alcove from its image, found by moving an interior point of the alcove.
std::size_t length_by_hyperplanes(const AffineElt& a);

/// Interior point of the base alcove, 2rho^vee / (2h).
RatVec base_alcove_point(const RootSystem& rs);

/// Class of the translation part in X / Qv.
IntVec omega_class(const AffineElt& a);

bool bruhat_leq(const AffineElt& x, const AffineElt& y);

/// Largest |level| of a reflection tried by lower_covers(y).
Int cover_level_bound(const AffineElt& y);

struct LowerCover {
  Reflection reflection;
  AffineElt element;
};

/// All x = s_{alpha,k} y with length(x) = length(y) - 1, ordered by
/// (root, level).
std::vector<LowerCover> lower_covers(const AffineElt& y);
/// Same, but trying every level with |k| <= bound. Used to check the default bound.
std::vector<LowerCover> lower_covers(const AffineElt& y, Int bound);

struct ReducedWord {
  std::vector<int> word;  // a = s_word[0] ... s_word[n-1] * omega
  AffineElt omega;        // the length-0 factor
};

ReducedWord reduced_word(const AffineElt& a);
AffineElt from_word(const RootSystemPtr& rs, const std::vector<int>& word, const AffineElt& omega);

std::string word_string(const std::vector<int>& word);  // "1.0.2", "e" when empty
std::vector<int> parse_word(const std::string& text);

}  // namespace kradm

template <>
struct std::hash<kradm::AffineElt> {
  std::size_t operator()(const kradm::AffineElt& a) const noexcept { return a.hash(); }
};
