#include "kradm/affine_weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace kradm {

namespace {

void same_group(const AffineElt& a, const AffineElt& b) {
  if (a.group() != b.group()) throw GroupMismatch();
}

Int floor_of(const Rational& q) {
  Int f = q.numerator() / q.denominator();
  if (q.numerator() % q.denominator() != 0 && q.numerator() < 0) --f;
  return f;
}

Rational pair_rat(const RatVec& x, const IntVec& alpha) {
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * alpha[i];
  return s;
}

}  // namespace

AffineElt::AffineElt(RootSystemPtr rs, IntMat finite, IntVec translation)
    : rs_(std::move(rs)), finite_(std::move(finite)), translation_(std::move(translation)) {
  if (!rs_) throw std::invalid_argument("AffineElt: null root system");
  rs_->check_coweight(translation_);
  if (finite_.rows() != rs_->dim() || finite_.cols() != rs_->dim())
    throw std::invalid_argument("AffineElt: finite part has wrong shape");
}

std::size_t AffineElt::hash() const noexcept {
  std::size_t seed = IntVecHash{}(translation_);
  for (Int x : finite_.data()) hash_combine(seed, std::hash<Int>{}(x));
  return seed;
}

AffineElt identity_element(const RootSystemPtr& rs) {
  return AffineElt(rs, IntMat::identity(rs->dim()), IntVec(rs->dim(), 0));
}

AffineElt make_translation(const RootSystemPtr& rs, const IntVec& nu) {
  return AffineElt(rs, IntMat::identity(rs->dim()), nu);
}

AffineElt make_finite(const RootSystemPtr& rs, const IntMat& w) { return AffineElt(rs, w, IntVec(rs->dim(), 0)); }

AffineElt make_reflection(const RootSystemPtr& rs, const Reflection& r) {
  return AffineElt(rs, rs->reflection_matrix(r.root), (-r.level) * rs->positive_coroots().at(r.root));
}

AffineElt simple_reflection(const RootSystemPtr& rs, int i) {
  if (i < 0 || i > rs->rank()) throw std::out_of_range("simple affine reflection index " + std::to_string(i));
  if (i == 0) return make_reflection(rs, {rs->highest_root(), 1});
  return make_reflection(rs, {static_cast<std::size_t>(i - 1), 0});
}

AffineElt compose(const AffineElt& a, const AffineElt& b) {
  same_group(a, b);
  return AffineElt(a.group(), a.finite_part() * b.finite_part(),
                   a.translation() + a.finite_part().apply(b.translation()));
}

AffineElt invert(const AffineElt& a) {
  // (t_nu w)^{-1} = t_{-w^{-1} nu} w^{-1}; w^{-1} is found by stepping through
  // the canonical word, since W0 matrices need not be orthogonal in X-coordinates.
  const RootSystem& rs = a.root_system();
  IntMat inv = IntMat::identity(rs.dim());
  for (int i : canonical_word(rs, a.finite_part())) inv = rs.simple_reflection_matrix(i) * inv;
  return AffineElt(a.group(), inv, -inv.apply(a.translation()));
}

RatVec apply(const AffineElt& a, const RatVec& point) {
  RatVec y = a.finite_part().apply(point);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= a.translation()[i];
  return y;
}

std::size_t length(const AffineElt& a) {
  const RootSystem& rs = a.root_system();
  IntVec u = a.finite_part().apply(rs.two_rho_check());
  std::size_t len = 0;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    const IntVec& alpha = rs.positive_roots()[k];
    Int m = dot(a.translation(), alpha);
    // w^{-1} alpha < 0 iff <w(2 rho^vee), alpha> < 0
    if (dot(u, alpha) < 0) ++m;
    len += static_cast<std::size_t>(std::llabs(m));
  }
  return len;
}

RatVec base_alcove_point(const RootSystem& rs) {
  RatVec p(rs.dim());
  const Int denom = 2 * static_cast<Int>(rs.coxeter_number());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = Rational(rs.two_rho_check()[i], denom);
  return p;
}

std::size_t length_by_hyperplanes(const AffineElt& a) {
  const RootSystem& rs = a.root_system();
  RatVec p = base_alcove_point(rs);
  RatVec q = kradm::apply(a, p);
  std::size_t count = 0;
  for (const auto& alpha : rs.positive_roots()) {
    Rational lo = pair_rat(p, alpha);
    Rational hi = pair_rat(q, alpha);
    if (hi < lo) std::swap(lo, hi);
    for (Int k = floor_of(lo); k <= floor_of(hi) + 1; ++k) {
      Rational kk(k);
      if (lo < kk && kk < hi) ++count;
    }
  }
  return count;
}

IntVec omega_class(const AffineElt& a) { return a.root_system().omega_label(a.translation()); }

bool bruhat_leq(const AffineElt& x_in, const AffineElt& y_in) {
  same_group(x_in, y_in);
  if (omega_class(x_in) != omega_class(y_in)) return false;
  const RootSystemPtr& rs = x_in.group();
  AffineElt x = x_in;
  AffineElt y = y_in;
  std::size_t lx = length(x);
  std::size_t ly = length(y);
  for (;;) {
    if (lx > ly) return false;
    if (lx == ly) return x == y;
    // ly > 0 here: pick a left descent s of y
    for (int i = 0; i <= rs->rank(); ++i) {
      AffineElt s = simple_reflection(rs, i);
      AffineElt sy = s * y;
      std::size_t lsy = length(sy);
      if (lsy >= ly) continue;
      AffineElt sx = s * x;
      std::size_t lsx = length(sx);
      if (lsx < lx) {
        x = std::move(sx);
        lx = lsx;
      }
      y = std::move(sy);
      ly = lsy;
      break;
    }
  }
}

Int cover_level_bound(const AffineElt& y) {
  const RootSystem& rs = y.root_system();
  Int m = 0;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) m = std::max<Int>(m, std::llabs(rs.pair(y.translation(), k)));
  return m + 2;
}

std::vector<LowerCover> lower_covers(const AffineElt& y) { return lower_covers(y, cover_level_bound(y)); }

std::vector<LowerCover> lower_covers(const AffineElt& y, Int bound) {
  std::vector<LowerCover> out;
  const std::size_t ly = length(y);
  if (ly == 0) return out;
  const RootSystemPtr& rs = y.group();
  for (std::size_t k = 0; k < rs->positive_roots().size(); ++k)
    for (Int level = -bound; level <= bound; ++level) {
      Reflection r{k, level};
      AffineElt x = make_reflection(rs, r) * y;
      if (length(x) + 1 == ly) out.push_back({r, std::move(x)});
    }
  return out;
}

ReducedWord reduced_word(const AffineElt& a) {
  const RootSystemPtr& rs = a.group();
  std::vector<int> word;
  AffineElt cur = a;
  std::size_t len = length(cur);
  while (len > 0) {
    for (int i = 0; i <= rs->rank(); ++i) {
      AffineElt next = simple_reflection(rs, i) * cur;
      std::size_t l = length(next);
      if (l < len) {
        word.push_back(i);
        cur = std::move(next);
        len = l;
        break;
      }
    }
  }
  return {std::move(word), std::move(cur)};
}

AffineElt from_word(const RootSystemPtr& rs, const std::vector<int>& word, const AffineElt& omega) {
  AffineElt a = identity_element(rs);
  for (int i : word) a = a * simple_reflection(rs, i);
  return a * omega;
}

std::string word_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << '.';
    os << word[i];
  }
  return os.str();
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> word;
  if (text == "e" || text.empty()) return word;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad reduced word '" + text + "'");
    word.push_back(std::stoi(tok));
  }
  return word;
}

}  // namespace kradm
