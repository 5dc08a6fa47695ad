#include "kradm/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace kradm {

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy(IntVec& y, Int k, const IntVec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += k * x[i];
}

std::size_t pivot_col(const IntVec& row) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) return j;
  return row.size();
}

}  // namespace

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector add: dimension mismatch");
  IntVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sub: dimension mismatch");
  IntVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IntVec operator-(const IntVec& a) {
  IntVec r(a);
  for (auto& x : r) x = -x;
  return r;
}

IntVec operator*(Int k, const IntVec& a) {
  IntVec r(a);
  for (auto& x : r) x *= k;
  return r;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

IntVec parse_intvec(const std::string& text) {
  IntVec out;
  std::string s = text;
  // tolerate surrounding brackets or parentheses
  if (!s.empty() && (s.front() == '[' || s.front() == '(')) s.erase(s.begin());
  if (!s.empty() && (s.back() == ']' || s.back() == ')')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty integer vector");
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in integer vector '" + text + "'");
    tok = tok.substr(b, e - b + 1);
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("not an integer: '" + tok + "'");
    out.push_back(value);
  }
  if (!s.empty() && s.back() == ',') throw std::invalid_argument("trailing comma in '" + text + "'");
  return out;
}

IntMat::IntMat(std::size_t rows, std::size_t cols, std::vector<Int> data)
    : rows_(rows), cols_(cols), a_(std::move(data)) {
  if (a_.size() != rows * cols) throw std::invalid_argument("IntMat: data size mismatch");
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return {};
  IntMat m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("IntMat: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMat::row(std::size_t i) const {
  return IntVec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVec IntMat::col(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVec IntMat::apply(const IntVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("IntMat::apply: dimension mismatch");
  IntVec r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

RatVec IntMat::apply(const RatVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("IntMat::apply: dimension mismatch");
  RatVec r(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMat product: dimension mismatch");
  IntMat p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Int aik = (*this)(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += aik * o(k, j);
    }
  return p;
}

bool IntMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const IntMat& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ';';
    os << to_string(m.row(i));
  }
  return os << ']';
}

std::vector<IntVec> hermite_normal_form(std::vector<IntVec> rows) {
  if (rows.empty()) return {};
  const std::size_t n = rows.front().size();
  std::size_t top = 0;
  for (std::size_t c = 0; c < n && top < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (best == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[best][c])))
          best = r;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool clean = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        axpy(rows[r], -(rows[r][c] / rows[top][c]), rows[top]);
        if (rows[r][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[top][c] == 0) continue;
    if (rows[top][c] < 0) rows[top] = -rows[top];
    for (std::size_t r = 0; r < top; ++r) axpy(rows[r], -floor_div(rows[r][c], rows[top][c]), rows[top]);
    ++top;
  }
  rows.resize(top);
  return rows;
}

IntVec reduce_modulo(const std::vector<IntVec>& hnf, IntVec v) {
  for (const auto& row : hnf) {
    std::size_t p = pivot_col(row);
    if (p == row.size()) continue;
    axpy(v, -floor_div(v[p], row[p]), row);
  }
  return v;
}

RatVec solve_left(const IntMat& basis, const IntVec& v) {
  // c * B = v  <=>  B^T c = v
  const std::size_t n = basis.rows();
  if (basis.cols() != n || v.size() != n) throw std::invalid_argument("solve_left: shape mismatch");
  std::vector<RatVec> aug(n, RatVec(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = basis(j, i);
    aug[i][n] = v[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug[p][c] == Rational(0)) ++p;
    if (p == n) throw std::invalid_argument("solve_left: singular basis");
    std::swap(aug[p], aug[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == Rational(0)) continue;
      Rational f = aug[r][c] / aug[c][c];
      for (std::size_t k = c; k <= n; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  RatVec out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = aug[i][n] / aug[i][i];
  return out;
}

bool solve_left_integral(const IntMat& basis, const IntVec& v, IntVec& out) {
  RatVec c = solve_left(basis, v);
  out.assign(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].denominator() != 1) return false;
    out[i] = c[i].numerator();
  }
  return true;
}

Int determinant(const IntMat& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant: not square");
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  std::vector<IntVec> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = m.row(i);
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::size_t IntVecHash::operator()(const IntVec& v) const noexcept {
  std::size_t seed = v.size();
  for (Int x : v) hash_combine(seed, std::hash<Int>{}(x));
  return seed;
}

}  // namespace kradm
