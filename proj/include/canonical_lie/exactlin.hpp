#pragma once

// Exact linear algebra over the rationals: dense matrices, reduced row
// echelon form, and a lattice of subspaces kept in canonical RREF form.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace canonical_lie {

/// Exact rational scalar. GMP keeps values in lowest terms with a positive
/// denominator as long as they are built through parse_rational / make_rational.
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RationalParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

/// Parses "p", "p/q" or "-p/q" (decimal integers of any size).
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') {
    throw RationalParseError("not an exact rational: '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) { return s.front() == '+' ? s.substr(1) : s; };
  mpz_class n(std::string(strip_plus(num)), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw RationalParseError("zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// "p/q" for non-integers, "p" for integers.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("row length differs from column count");
      std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  RatVector row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }
  std::vector<RatVector> row_vectors() const {
    std::vector<RatVector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
    return out;
  }

  const std::vector<Rational>& entries() const { return entries_; }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return sgn(x) == 0; });
  }

  Rational trace() const {
    if (rows_ != cols_) throw DimensionMismatch("trace of a non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    a.require_same_shape(b);
    RatMatrix s = a;
    for (std::size_t i = 0; i < s.entries_.size(); ++i) s.entries_[i] += b.entries_[i];
    return s;
  }
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    a.require_same_shape(b);
    RatMatrix s = a;
    for (std::size_t i = 0; i < s.entries_.size(); ++i) s.entries_[i] -= b.entries_[i];
    return s;
  }
  friend RatMatrix operator*(const Rational& k, const RatMatrix& a) {
    RatMatrix s = a;
    for (auto& x : s.entries_) x *= k;
    return s;
  }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    RatMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (sgn(b(k, j)) != 0) p(i, j) += aik * b(k, j);
      }
    return p;
  }

 private:
  void require_same_shape(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

inline RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

struct RrefResult {
  std::size_t rank = 0;
  RatMatrix reduced;  // the rank nonzero rows only
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. The zero rows of the echelon form are dropped,
/// so `reduced` has exactly `rank` rows.
inline RrefResult rref(RatMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != lead)
      for (std::size_t j = c; j < cols; ++j) swap(m(p, j), m(lead, j));
    const Rational inv = 1 / m(lead, c);
    for (std::size_t j = c; j < cols; ++j) m(lead, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(lead, j)) != 0) m(r, j) -= f * m(lead, j);
    }
    pivots.push_back(c);
    ++lead;
  }
  RatMatrix reduced(lead, cols);
  for (std::size_t r = 0; r < lead; ++r)
    for (std::size_t j = 0; j < cols; ++j) reduced(r, j) = m(r, j);
  return {lead, std::move(reduced), std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

/// A subspace of Q^d stored by its unique reduced row-echelon basis, so set
/// equality is entry-wise equality of the stored bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

  static Subspace full(std::size_t ambient_dim) {
    return from_rref(rref(RatMatrix::identity(ambient_dim)), ambient_dim);
  }

  static Subspace span(const std::vector<RatVector>& vectors, std::size_t ambient_dim) {
    return from_rref(rref(RatMatrix::from_rows(vectors, ambient_dim)), ambient_dim);
  }

  static Subspace row_space(const RatMatrix& m) { return from_rref(rref(m), m.cols()); }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<RatVector> basis_vectors() const { return basis_.row_vectors(); }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim_; }

  bool contains(const RatVector& v) const {
    if (v.size() != ambient_dim_) throw DimensionMismatch("vector length differs from ambient dimension");
    RatVector r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const Rational f = r[pivots_[i]];
      if (sgn(f) == 0) continue;
      auto b = basis_.row(i);
      for (std::size_t j = pivots_[i]; j < ambient_dim_; ++j)
        if (sgn(b[j]) != 0) r[j] -= f * b[j];
    }
    return canonical_lie::is_zero(r);
  }

  bool is_subspace_of(const Subspace& other) const {
    require_same_ambient(other);
    for (std::size_t i = 0; i < dim(); ++i)
      if (!other.contains(basis_.row_vector(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

  void require_same_ambient(const Subspace& other) const {
    if (ambient_dim_ != other.ambient_dim_) throw DimensionMismatch("subspaces live in different ambient spaces");
  }

 private:
  static Subspace from_rref(RrefResult r, std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    s.basis_ = std::move(r.reduced);
    s.pivots_ = std::move(r.pivots);
    return s;
  }

  std::size_t ambient_dim_;
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace span(const std::vector<RatVector>& vectors, std::size_t ambient_dim) {
  return Subspace::span(vectors, ambient_dim);
}

/// Null space {x : m x = 0} as a subspace of Q^cols.
inline Subspace kernel(const RatMatrix& m) {
  const RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<RatVector> vectors;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(vectors, cols);
}

/// Vectors y with <y, s> = 0 under the standard dot product.
inline Subspace annihilator(const Subspace& s) {
  if (s.is_zero()) return Subspace::full(s.ambient_dim());
  return kernel(s.basis());
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  a.require_same_ambient(b);
  RatMatrix stacked(a.dim() + b.dim(), a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_dim(); ++j) stacked(i, j) = a.basis()(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.ambient_dim(); ++j) stacked(a.dim() + i, j) = b.basis()(i, j);
  return Subspace::row_space(stacked);
}

inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  a.require_same_ambient(b);
  if (a.is_zero() || b.is_zero()) return Subspace::zero(a.ambient_dim());
  // a ∩ b is cut out by the union of both sets of linear constraints.
  const Subspace constraints = subspace_sum(annihilator(a), annihilator(b));
  if (constraints.is_zero()) return Subspace::full(a.ambient_dim());
  return kernel(constraints.basis());
}

inline bool contains(const Subspace& a, const RatVector& v) { return a.contains(v); }

}  // namespace canonical_lie
