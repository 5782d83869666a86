#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ddrt/errors.hpp"
#include "ddrt/rewriting.hpp"

namespace ddrt {

using Natural = std::uint64_t;

/// Square matrix over the naturals, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0) {}
  Matrix(std::size_t dim, std::vector<Natural> row_major);
  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Natural& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  Natural operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
  const std::vector<Natural>& entries() const { return a_; }
  bool is_zero() const;

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Natural> a_;
};

using Vector = std::vector<Natural>;

Vector operator*(const Matrix& m, const Vector& v);
Vector operator+(const Vector& x, const Vector& y);

/// f(x₁,…,xₙ) = A₁x₁ + … + Aₙxₙ + b
struct SymbolInterpretation {
  std::vector<Matrix> args;
  Vector constant;
};

/// A matrix interpretation of dimension `dim`.  Every argument matrix has
/// an upper-left entry of at least 1, which makes the induced strict order
/// closed under contexts.
struct MatrixInterpretation {
  std::size_t dim = 1;
  std::map<std::string, SymbolInterpretation> symbols;

  /// Throws Error when the upper-left invariant or a dimension is violated.
  void validate() const;
  std::string to_string() const;
};

/// Σ_x C_x·x + c
struct LinearForm {
  std::map<std::string, Matrix> coeffs;
  Vector constant;
};

class MissingSymbol : public Error {
 public:
  using Error::Error;
};

LinearForm interpret_term(const MatrixInterpretation& m, const Term& t);

enum class Orientation { Strict, Weak, Incomparable };

const char* to_string(Orientation o);

/// Weak: every coefficient matrix and the constant of `l` dominate those of
/// `r` entrywise (missing = zero).  Strict: weak and the first constant
/// component of `l` is larger.
Orientation compare_forms(const LinearForm& l, const LinearForm& r);

inline Orientation orient(const MatrixInterpretation& m, const Rule& r) {
  return compare_forms(interpret_term(m, r.lhs), interpret_term(m, r.rhs));
}

}  // namespace ddrt
