#include "kradm/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <regex>
#include <unordered_set>

namespace kradm {

namespace {

void link(IntMat& a, int i, int j, Int aij, Int aji) {
  a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = aij;
  a(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) = aji;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

std::size_t weyl_order_for(char family, int n) {
  switch (family) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (std::size_t{1} << n) * factorial(n);
    case 'D': return (std::size_t{1} << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

Int height(const IntVec& coeffs) {
  Int h = 0;
  for (Int c : coeffs) h += c;
  return h;
}

}  // namespace

std::string lattice_label(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::Coroot: return "Qv";
    case LatticeKind::Coweight: return "Pv";
    case LatticeKind::Explicit: return "explicit";
    case LatticeKind::GL: return "GL";
  }
  return "?";
}

IntMat cartan_matrix(char family, int n) {
  auto bad = [&] {
    return RootSystemError("invalid Cartan type " + std::string(1, family) + std::to_string(n));
  };
  switch (family) {
    case 'A': if (n < 1) throw bad(); break;
    case 'B':
    case 'C': if (n < 2) throw bad(); break;
    case 'D': if (n < 3) throw bad(); break;
    case 'E': if (n < 6 || n > 8) throw bad(); break;
    case 'F': if (n != 4) throw bad(); break;
    case 'G': if (n != 2) throw bad(); break;
    default: throw bad();
  }
  IntMat a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) = 2;
  switch (family) {
    case 'A':
      for (int i = 1; i < n; ++i) link(a, i, i + 1, -1, -1);
      break;
    case 'B':
      for (int i = 1; i < n - 1; ++i) link(a, i, i + 1, -1, -1);
      link(a, n - 1, n, -1, -2);  // alpha_n short
      break;
    case 'C':
      for (int i = 1; i < n - 1; ++i) link(a, i, i + 1, -1, -1);
      link(a, n - 1, n, -2, -1);  // alpha_n long
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) link(a, i, i + 1, -1, -1);
      link(a, n - 2, n, -1, -1);
      break;
    case 'E':
      link(a, 1, 3, -1, -1);
      link(a, 2, 4, -1, -1);
      for (int i = 3; i < n; ++i) link(a, i, i + 1, -1, -1);
      break;
    case 'F':
      link(a, 1, 2, -1, -1);
      link(a, 2, 3, -1, -2);  // alpha_3, alpha_4 short
      link(a, 3, 4, -1, -1);
      break;
    case 'G':
      link(a, 1, 2, -1, -3);  // alpha_2 short
      break;
  }
  return a;
}

std::string RootSystem::name() const {
  if (lattice_.kind == LatticeKind::GL) return "GL" + std::to_string(rank_ + 1);
  return std::string(1, family_) + std::to_string(rank_);
}

std::string RootSystem::descriptor() const { return name() + "/" + lattice_label(lattice_.kind); }

RootSystemPtr build_root_system(char family, int rank, const LatticeChoice& lattice) {
  family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  IntMat a = cartan_matrix(family, rank);
  const auto r = static_cast<std::size_t>(rank);

  std::shared_ptr<RootSystem> rs(new RootSystem());
  rs->family_ = family;
  rs->rank_ = rank;
  rs->lattice_ = lattice;
  rs->cartan_ = a;

  if (lattice.kind == LatticeKind::GL) {
    if (family != 'A') throw RootSystemError("GL lattices exist only for type A");
    rs->dim_ = r + 1;
    for (std::size_t i = 0; i < r; ++i) {
      IntVec v(r + 1, 0);
      v[i] = 1;
      v[i + 1] = -1;
      rs->simple_roots_.push_back(v);
      rs->simple_coroots_.push_back(v);
    }
    rs->fundamental_group_order_ = 0;
  } else {
    IntMat basis;
    switch (lattice.kind) {
      case LatticeKind::Coroot: basis = a; break;
      case LatticeKind::Coweight: basis = IntMat::identity(r); break;
      case LatticeKind::Explicit: {
        for (const auto& g : lattice.generators)
          if (g.size() != r) throw RootSystemError("lattice generator has wrong length");
        auto hnf = hermite_normal_form(lattice.generators);
        if (hnf.size() != r) throw RootSystemError("explicit lattice does not contain the coroot lattice");
        basis = IntMat::from_rows(hnf);
        break;
      }
      case LatticeKind::GL: break;
    }
    rs->dim_ = r;
    for (std::size_t j = 0; j < r; ++j) rs->simple_roots_.push_back(basis.col(j));
    for (std::size_t i = 0; i < r; ++i) {
      IntVec c;
      if (!solve_left_integral(basis, a.row(i), c))
        throw RootSystemError("explicit lattice does not contain the coroot lattice");
      rs->simple_coroots_.push_back(c);
    }
    rs->fundamental_group_order_ = std::llabs(determinant(a)) / std::llabs(determinant(basis));
  }
  rs->finish();
  return rs;
}

void RootSystem::finish() {
  const auto r = static_cast<std::size_t>(rank_);

  // Close the simple (root, coroot) pairs under the simple reflections,
  // tracking coefficients in the simple roots / simple coroots.
  struct Pair {
    IntVec root;
    IntVec coroot;
  };
  std::vector<Pair> all;
  std::unordered_set<IntVec, IntVecHash> seen;
  std::deque<Pair> queue;
  for (std::size_t i = 0; i < r; ++i) {
    IntVec e(r, 0);
    e[i] = 1;
    queue.push_back({e, e});
    seen.insert(e);
  }
  while (!queue.empty()) {
    Pair p = queue.front();
    queue.pop_front();
    all.push_back(p);
    for (std::size_t j = 0; j < r; ++j) {
      Int a_root = 0;
      Int a_coroot = 0;
      for (std::size_t k = 0; k < r; ++k) {
        a_root += p.root[k] * cartan_(j, k);
        a_coroot += p.coroot[k] * cartan_(k, j);
      }
      Pair q = p;
      q.root[j] -= a_root;
      q.coroot[j] -= a_coroot;
      if (seen.insert(q.root).second) queue.push_back(q);
    }
  }
  std::vector<Pair> pos;
  for (auto& p : all)
    if (std::all_of(p.root.begin(), p.root.end(), [](Int c) { return c >= 0; })) pos.push_back(p);
  std::sort(pos.begin(), pos.end(), [](const Pair& x, const Pair& y) {
    Int hx = height(x.root), hy = height(y.root);
    if (hx != hy) return hx < hy;
    return x.root > y.root;
  });

  for (const auto& p : pos) {
    IntVec root(dim_, 0);
    IntVec coroot(dim_, 0);
    for (std::size_t k = 0; k < r; ++k) {
      root = root + p.root[k] * simple_roots_[k];
      coroot = coroot + p.coroot[k] * simple_coroots_[k];
    }
    root_coeffs_.push_back(p.root);
    pos_roots_.push_back(root);
    pos_coroots_.push_back(coroot);
  }
  highest_ = pos_roots_.size() - 1;
  coxeter_number_ = static_cast<int>(height(root_coeffs_.back())) + 1;

  for (std::size_t k = 0; k < pos_roots_.size(); ++k) {
    IntMat m = IntMat::identity(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m(i, j) -= pos_coroots_[k][i] * pos_roots_[k][j];
    root_mats_.push_back(m);
  }
  simple_mats_.assign(root_mats_.begin(), root_mats_.begin() + static_cast<std::ptrdiff_t>(r));

  two_rho_.assign(dim_, 0);
  two_rho_check_.assign(dim_, 0);
  for (std::size_t k = 0; k < pos_roots_.size(); ++k) {
    two_rho_ = two_rho_ + pos_roots_[k];
    two_rho_check_ = two_rho_check_ + pos_coroots_[k];
  }
  coroot_hnf_ = hermite_normal_form(simple_coroots_);
  weyl_order_ = weyl_order_for(family_, rank_);
}

IntVec RootSystem::reflect_simple(const IntVec& coweight, int i) const {
  return reflect(coweight, static_cast<std::size_t>(i - 1));
}

IntVec RootSystem::reflect(const IntVec& coweight, std::size_t root) const {
  return coweight - dot(coweight, pos_roots_.at(root)) * pos_coroots_.at(root);
}

std::size_t RootSystem::reflection_root(const IntMat& m) const {
  for (std::size_t k = 0; k < root_mats_.size(); ++k)
    if (root_mats_[k] == m) return k;
  return npos;
}

bool RootSystem::is_dominant(const IntVec& coweight) const {
  for (const auto& a : simple_roots_)
    if (dot(coweight, a) < 0) return false;
  return true;
}

void RootSystem::check_coweight(const IntVec& coweight) const {
  if (coweight.size() != dim_)
    throw RootSystemError("coweight " + to_string(coweight) + " has " + std::to_string(coweight.size()) +
                          " coordinates; " + descriptor() + " needs " + std::to_string(dim_));
}

RootSystemPtr parse_group(const std::string& descriptor, const std::string& lattice_override) {
  static const std::regex gl_re("^[Gg][Ll]([0-9]+)$");
  static const std::regex type_re("^([A-Ga-g])([0-9]+)$");
  std::smatch m;
  std::string lat = lattice_override;
  for (auto& c : lat) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (!lat.empty() && lat != "qv" && lat != "pv" && lat != "gl")
    throw RootSystemError("unknown lattice '" + lattice_override + "' (expected Qv, Pv or GL)");

  if (std::regex_match(descriptor, m, gl_re)) {
    int n = std::stoi(m[1]);
    if (n < 2) throw RootSystemError("GL_n needs n >= 2");
    if (!lat.empty() && lat != "gl") throw RootSystemError(descriptor + " only supports the GL lattice");
    return build_root_system('A', n - 1, LatticeChoice::gl());
  }
  if (std::regex_match(descriptor, m, type_re)) {
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(m[1].str()[0])));
    int rank = std::stoi(m[2]);
    LatticeChoice choice = LatticeChoice::coroot();
    if (lat == "pv") choice = LatticeChoice::coweight();
    if (lat == "gl") choice = LatticeChoice::gl();
    return build_root_system(family, rank, choice);
  }
  throw RootSystemError("cannot parse group descriptor '" + descriptor + "'");
}

std::size_t finite_length(const RootSystem& rs, const IntMat& w) {
  IntVec u = w.apply(rs.two_rho_check());
  std::size_t n = 0;
  for (const auto& a : rs.positive_roots())
    if (dot(u, a) < 0) ++n;
  return n;
}

std::vector<int> canonical_word(const RootSystem& rs, IntMat w) {
  std::vector<int> word;
  IntVec u = w.apply(rs.two_rho_check());
  for (;;) {
    int descent = 0;
    for (int i = 1; i <= rs.rank(); ++i)
      if (dot(u, rs.simple_roots()[static_cast<std::size_t>(i - 1)]) < 0) {
        descent = i;
        break;
      }
    if (descent == 0) break;
    word.push_back(descent);
    u = rs.reflect_simple(u, descent);
  }
  return word;
}

FiniteWeylElt FiniteWeylElt::identity(const RootSystem& rs) { return {{}, IntMat::identity(rs.dim())}; }

FiniteWeylElt FiniteWeylElt::from_matrix(const RootSystem& rs, IntMat m) {
  auto word = canonical_word(rs, m);
  return {std::move(word), std::move(m)};
}

FiniteWeylElt FiniteWeylElt::from_word(const RootSystem& rs, const std::vector<int>& word) {
  IntMat m = IntMat::identity(rs.dim());
  for (int i : word) {
    if (i < 1 || i > rs.rank()) throw RootSystemError("simple reflection index out of range");
    m = m * rs.simple_reflection_matrix(i);
  }
  return from_matrix(rs, std::move(m));
}

DominantForm dominant_representative(const RootSystem& rs, const IntVec& coweight) {
  rs.check_coweight(coweight);
  IntVec lam = coweight;
  IntMat w = IntMat::identity(rs.dim());
  for (;;) {
    int neg = 0;
    for (int i = 1; i <= rs.rank(); ++i)
      if (dot(lam, rs.simple_roots()[static_cast<std::size_t>(i - 1)]) < 0) {
        neg = i;
        break;
      }
    if (neg == 0) break;
    lam = rs.reflect_simple(lam, neg);
    w = rs.simple_reflection_matrix(neg) * w;
  }
  return {lam, FiniteWeylElt::from_matrix(rs, w)};
}

std::vector<IntVec> weyl_orbit(const RootSystem& rs, const IntVec& coweight) {
  rs.check_coweight(coweight);
  std::unordered_set<IntVec, IntVecHash> seen{coweight};
  std::vector<IntVec> frontier{coweight};
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& lam : frontier)
      for (int i = 1; i <= rs.rank(); ++i) {
        IntVec m = rs.reflect_simple(lam, i);
        if (seen.insert(m).second) next.push_back(std::move(m));
      }
    frontier = std::move(next);
  }
  std::vector<IntVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVec> weight_support(const RootSystem& rs, const IntVec& mu) {
  rs.check_coweight(mu);
  if (!rs.is_dominant(mu)) throw RootSystemError("weight_support: " + to_string(mu) + " is not dominant");
  std::unordered_set<IntVec, IntVecHash> seen{mu};
  std::deque<IntVec> queue{mu};
  while (!queue.empty()) {
    IntVec lam = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      Int m = rs.pair(lam, k);
      Int step = m > 0 ? -1 : 1;
      // the whole alpha-string from lam to s_alpha(lam)
      for (Int j = 1; j <= std::llabs(m); ++j) {
        IntVec next = lam + (step * j) * rs.positive_coroots()[k];
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  std::vector<IntVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_minuscule(const RootSystem& rs, const IntVec& mu) {
  rs.check_coweight(mu);
  if (!rs.is_dominant(mu)) throw RootSystemError("is_minuscule: " + to_string(mu) + " is not dominant");
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    Int m = rs.pair(mu, k);
    if (m != 0 && m != 1) return false;
  }
  return true;
}

}  // namespace kradm
