#pragma once

// Small exact integer linear algebra used throughout: dense vectors and
// matrices over int64, Hermite normal form, and rational solves.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace kradm {

using Int = std::int64_t;
using IntVec = std::vector<Int>;
using Rational = boost::rational<Int>;
using RatVec = std::vector<Rational>;

Int dot(const IntVec& a, const IntVec& b);
IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
IntVec operator*(Int k, const IntVec& a);

std::string to_string(const IntVec& v);  // "1,0,-1"
IntVec parse_intvec(const std::string& text);  // inverse of to_string; throws std::invalid_argument

class IntMat {
public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  IntMat(std::size_t rows, std::size_t cols, std::vector<Int> data);

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<IntVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  const std::vector<Int>& data() const { return a_; }

  IntMat transpose() const;
  IntVec apply(const IntVec& v) const;      // M v
  RatVec apply(const RatVec& v) const;
  IntMat operator*(const IntMat& other) const;

  bool is_identity() const;

  friend bool operator==(const IntMat&, const IntMat&) = default;
  friend auto operator<=>(const IntMat&, const IntMat&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

std::ostream& operator<<(std::ostream& os, const IntMat& m);

/// Row-style Hermite normal form of the lattice spanned by `generators`
/// (each of length n). Zero rows are dropped; pivots are positive and the
/// entries above each pivot are reduced into [0, pivot).
std::vector<IntVec> hermite_normal_form(std::vector<IntVec> generators);

/// Canonical representative of v modulo the row lattice of an HNF basis.
IntVec reduce_modulo(const std::vector<IntVec>& hnf, IntVec v);

/// Solves c * B = v for c with B square and nonsingular. Throws
/// std::invalid_argument if B is singular.
RatVec solve_left(const IntMat& basis, const IntVec& v);

/// Returns the integer solution of c * B = v, or nothing if c is not integral.
bool solve_left_integral(const IntMat& basis, const IntVec& v, IntVec& out);

Int determinant(const IntMat& m);

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept;
};

inline void hash_combine(std::size_t& seed, std::size_t h) noexcept {
  seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace kradm
