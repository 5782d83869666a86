#include "ddrt/matrix_interpretation.hpp"

#include <sstream>

namespace ddrt {

Matrix::Matrix(std::size_t dim, std::vector<Natural> row_major) : dim_(dim), a_(std::move(row_major)) {
  if (a_.size() != dim * dim) throw Error("matrix entry count does not match dimension");
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (Natural x : a_)
    if (x) return false;
  return true;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  Matrix out(x.dim());
  for (std::size_t r = 0; r < x.dim(); ++r)
    for (std::size_t k = 0; k < x.dim(); ++k) {
      if (!x(r, k)) continue;
      for (std::size_t c = 0; c < x.dim(); ++c) out(r, c) += x(r, k) * y(k, c);
    }
  return out;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  Matrix out = x;
  for (std::size_t r = 0; r < x.dim(); ++r)
    for (std::size_t c = 0; c < x.dim(); ++c) out(r, c) += y(r, c);
  return out;
}

Vector operator*(const Matrix& m, const Vector& v) {
  Vector out(m.dim(), 0);
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

Vector operator+(const Vector& x, const Vector& y) {
  Vector out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
  return out;
}

void MatrixInterpretation::validate() const {
  for (const auto& [f, si] : symbols) {
    if (si.constant.size() != dim) throw Error("constant of " + f + " has wrong dimension");
    for (const Matrix& a : si.args) {
      if (a.dim() != dim) throw Error("argument matrix of " + f + " has wrong dimension");
      if (a(0, 0) < 1) throw Error("argument matrix of " + f + " has upper-left entry 0");
    }
  }
}

std::string MatrixInterpretation::to_string() const {
  std::ostringstream out;
  auto vec = [&](const Vector& v) {
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    out << ")";
  };
  for (const auto& [f, si] : symbols) {
    out << f << ":";
    for (const Matrix& a : si.args) {
      out << " [";
      for (std::size_t r = 0; r < dim; ++r) {
        if (r) out << "; ";
        for (std::size_t c = 0; c < dim; ++c) out << (c ? " " : "") << a(r, c);
      }
      out << "]x +";
    }
    out << " ";
    vec(si.constant);
    out << "\n";
  }
  return out.str();
}

LinearForm interpret_term(const MatrixInterpretation& m, const Term& t) {
  if (t.is_var()) return LinearForm{{{t.name(), Matrix::identity(m.dim)}}, Vector(m.dim, 0)};
  auto it = m.symbols.find(t.name());
  if (it == m.symbols.end() || it->second.args.size() != t.arity())
    throw MissingSymbol("no interpretation for " + t.name() + "/" + std::to_string(t.arity()));
  const SymbolInterpretation& si = it->second;
  LinearForm out{{}, si.constant};
  for (std::size_t i = 0; i < t.arity(); ++i) {
    LinearForm arg = interpret_term(m, t.args()[i]);
    const Matrix& a = si.args[i];
    out.constant = out.constant + a * arg.constant;
    for (const auto& [x, c] : arg.coeffs) {
      Matrix scaled = a * c;
      auto [slot, fresh] = out.coeffs.emplace(x, scaled);
      if (!fresh) slot->second = slot->second + scaled;
    }
  }
  return out;
}

const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::Strict:
      return "strict";
    case Orientation::Weak:
      return "weak";
    case Orientation::Incomparable:
      return "incomparable";
  }
  return "?";
}

Orientation compare_forms(const LinearForm& l, const LinearForm& r) {
  for (const auto& [x, rc] : r.coeffs) {
    auto it = l.coeffs.find(x);
    if (it == l.coeffs.end()) {
      if (!rc.is_zero()) return Orientation::Incomparable;
      continue;
    }
    const auto& le = it->second.entries();
    const auto& re = rc.entries();
    for (std::size_t i = 0; i < re.size(); ++i)
      if (le[i] < re[i]) return Orientation::Incomparable;
  }
  for (std::size_t i = 0; i < r.constant.size(); ++i)
    if (l.constant[i] < r.constant[i]) return Orientation::Incomparable;
  return l.constant[0] > r.constant[0] ? Orientation::Strict : Orientation::Weak;
}

}  // namespace ddrt
