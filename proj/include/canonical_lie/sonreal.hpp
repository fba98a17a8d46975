#pragma once

// so(n) as Λ²Cⁿ: spectra (conjugacy classes of ξ), the split wedge basis with
// rational structure constants, matrix realizations, and exact spectrum
// extraction from rational skew-symmetric matrices.
//
// Cⁿ is modelled in an eigenbasis of ξ. Each magnitude λ > 0 of multiplicity
// m contributes u_{λ,p}, u_{-λ,p} (p < m) with <u_{λ,p}, u_{-λ,q}> = δ_pq;
// the kernel of ξ contributes an orthonormal block. The wedge a∧b acts by
// (a∧b)(c) = <a,c> b - <b,c> a and carries ad ξ-grade λ_a + λ_b.

#include <canonical_lie/exactlin.hpp>
#include <canonical_lie/liegraded.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace canonical_lie {

class InvalidSpectrum : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotSkew : public std::invalid_argument {
 public:
  NotSkew() : std::invalid_argument("matrix is not square skew-symmetric") {}
};
class TooSmall : public std::invalid_argument {
 public:
  explicit TooSmall(std::size_t n) : std::invalid_argument("so(n) requires n >= 3, got n = " + std::to_string(n)) {}
};
class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct SpectrumEntry {
  Rational lambda;
  std::size_t mult;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Conjugacy class of ξ ∈ so(n): eigenvalue magnitudes λ ≥ 0 (ascending) with
/// multiplicities, where a magnitude λ > 0 of multiplicity m stands for m
/// eigenvalues iλ and m eigenvalues -iλ.
class Spectrum {
 public:
  /// Entries may come in any order; duplicates and zero multiplicities are rejected.
  Spectrum(std::size_t n, std::vector<SpectrumEntry> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ < 3) throw InvalidSpectrum("so(n) requires n >= 3, got n = " + std::to_string(n_));
    std::sort(entries_.begin(), entries_.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.lambda < b.lambda; });
    std::size_t total = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const auto& e = entries_[i];
      if (sgn(e.lambda) < 0) throw InvalidSpectrum("negative magnitude " + canonical_lie::to_string(e.lambda));
      if (e.mult == 0) throw InvalidSpectrum("zero multiplicity for magnitude " + canonical_lie::to_string(e.lambda));
      if (i > 0 && entries_[i - 1].lambda == e.lambda) throw InvalidSpectrum("repeated magnitude " + canonical_lie::to_string(e.lambda));
      total += sgn(e.lambda) == 0 ? e.mult : 2 * e.mult;
    }
    if (total != n_)
      throw InvalidSpectrum("multiplicities account for " + std::to_string(total) + " dimensions, expected " +
                            std::to_string(n_));
  }

  /// n inferred from the multiplicities.
  static Spectrum from_entries(std::vector<SpectrumEntry> entries) {
    std::size_t n = 0;
    for (const auto& e : entries) n += sgn(e.lambda) == 0 ? e.mult : 2 * e.mult;
    return Spectrum(n, std::move(entries));
  }

  std::size_t n() const { return n_; }
  const std::vector<SpectrumEntry>& entries() const { return entries_; }

  std::size_t mult(const Rational& lambda) const {
    for (const auto& e : entries_)
      if (e.lambda == lambda) return e.mult;
    return 0;
  }

  /// Same multiplicities with every magnitude multiplied by c.
  Spectrum scaled(const Rational& c) const {
    std::vector<SpectrumEntry> out = entries_;
    for (auto& e : out) e.lambda *= c;
    return Spectrum(n_, std::move(out));
  }

  /// Compact form, largest magnitude first: "{3/2:1, 1/2:1}".
  std::string to_string() const {
    std::string s = "{";
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
      if (it != entries_.rbegin()) s += ", ";
      s += canonical_lie::to_string(it->lambda) + ":" + std::to_string(it->mult);
    }
    return s + "}";
  }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

  /// Deterministic total order: by n, then lexicographically by (λ, mult).
  friend std::strong_ordering operator<=>(const Spectrum& a, const Spectrum& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    const std::size_t k = std::min(a.entries_.size(), b.entries_.size());
    for (std::size_t i = 0; i < k; ++i) {
      const int l = cmp(a.entries_[i].lambda, b.entries_[i].lambda);
      if (l != 0) return l < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
      if (auto c = a.entries_[i].mult <=> b.entries_[i].mult; c != 0) return c;
    }
    return a.entries_.size() <=> b.entries_.size();
  }

 private:
  std::size_t n_;
  std::vector<SpectrumEntry> entries_;
};

struct EigenLabel {
  Rational lambda;  // signed
  std::size_t index;
};

struct WedgeBasis {
  std::vector<EigenLabel> eigen_labels;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // a < b, lexicographic
  RatMatrix gram;

  std::size_t n() const { return eigen_labels.size(); }
  std::size_t dim() const { return pairs.size(); }

  /// Position of e_a∧e_b (a < b) in `pairs`.
  std::size_t pair_index(std::size_t a, std::size_t b) const {
    const std::size_t nn = n();
    return a * nn - a * (a + 1) / 2 + (b - a - 1);
  }

  Rational grade(std::size_t pair) const {
    return eigen_labels[pairs[pair].first].lambda + eigen_labels[pairs[pair].second].lambda;
  }
};

/// Eigen-labels sorted by descending signed λ, then intra-eigenspace index.
inline WedgeBasis wedge_basis(const Spectrum& s) {
  WedgeBasis w;
  const auto& es = s.entries();
  for (const auto& e : es)
    for (std::size_t p = 0; p < e.mult; ++p) {
      w.eigen_labels.push_back(EigenLabel{e.lambda, p});
      if (sgn(e.lambda) > 0) w.eigen_labels.push_back(EigenLabel{-e.lambda, p});
    }
  std::sort(w.eigen_labels.begin(), w.eigen_labels.end(), [](const EigenLabel& a, const EigenLabel& b) {
    if (a.lambda != b.lambda) return a.lambda > b.lambda;
    return a.index < b.index;
  });

  const std::size_t n = w.eigen_labels.size();
  w.gram = RatMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& la = w.eigen_labels[a];
      const auto& lb = w.eigen_labels[b];
      if (la.index == lb.index && la.lambda == -lb.lambda) w.gram(a, b) = 1;
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) w.pairs.emplace_back(a, b);
  return w;
}

/// The n×n matrix of the wedge basis element `pair` in eigen-coordinates:
/// column c is (a∧b)(u_c) = <a,u_c> u_b - <b,u_c> u_a.
inline RatMatrix matrix_of(const WedgeBasis& w, std::size_t pair) {
  if (pair >= w.dim()) throw IndexOutOfRange("wedge basis index " + std::to_string(pair) + " out of range");
  const auto [a, b] = w.pairs[pair];
  const std::size_t n = w.n();
  RatMatrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    m(b, c) += w.gram(a, c);
    m(a, c) -= w.gram(b, c);
  }
  return m;
}

inline RatMatrix matrix_of(const Spectrum& s, std::size_t pair) { return matrix_of(wedge_basis(s), pair); }

namespace detail {

/// Adds k·(x∧y) to a coordinate row, normalising to x < y.
inline void add_wedge(RatVector& row, const WedgeBasis& w, std::size_t x, std::size_t y, const Rational& k) {
  if (x == y || sgn(k) == 0) return;
  if (x < y)
    row[w.pair_index(x, y)] += k;
  else
    row[w.pair_index(y, x)] -= k;
}

}  // namespace detail

/// Structure constants of so(n,C) in the wedge basis of `s`:
/// [a∧b, c∧d] = <a,c> b∧d - <a,d> b∧c - <b,c> a∧d + <b,d> a∧c,
/// graded by λ_a + λ_b, with the trace form tr(XY) of the matrix realization.
inline LieTable realize(const Spectrum& s) {
  const WedgeBasis w = wedge_basis(s);
  const std::size_t d = w.dim();
  const auto& g = w.gram;
  std::vector<RatVector> table(d * d, RatVector(d));
  for (std::size_t i = 0; i < d; ++i) {
    const auto [a, b] = w.pairs[i];
    for (std::size_t j = 0; j < d; ++j) {
      const auto [c, e] = w.pairs[j];
      RatVector& row = table[i * d + j];
      detail::add_wedge(row, w, b, e, g(a, c));
      detail::add_wedge(row, w, b, c, -g(a, e));
      detail::add_wedge(row, w, a, e, -g(b, c));
      detail::add_wedge(row, w, a, c, g(b, e));
    }
  }

  std::vector<RatMatrix> mats;
  mats.reserve(d);
  for (std::size_t i = 0; i < d; ++i) mats.push_back(matrix_of(w, i));
  RatMatrix form(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      form(i, j) = (mats[i] * mats[j]).trace();
      form(j, i) = form(i, j);
    }

  std::vector<Rational> grades(d);
  for (std::size_t i = 0; i < d; ++i) grades[i] = w.grade(i);
  return build_table(d, table, std::move(grades), std::move(form));
}

inline bool is_skew(const RatMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

/// Returned by spectrum_from_matrix when some eigenvalue magnitude is not in
/// (1/2)Z, which already rules out canonicality.
struct NotHalfIntegral {
  std::size_t accounted;  // dimensions explained by half-integral magnitudes
  std::size_t n;
};

using SpectrumExtraction = std::variant<Spectrum, NotHalfIntegral>;

/// Multiplicities by exact kernel dimensions: mult(0) = dim ker m and, for
/// λ > 0, 2·mult(λ) = dim ker(m² + λ²). Candidates are λ = j/2 with
/// λ² ≤ -tr(m²)/2 = Σ mult(λ)·λ².
inline SpectrumExtraction spectrum_from_matrix(const RatMatrix& m) {
  if (!is_skew(m)) throw NotSkew();
  const std::size_t n = m.rows();
  if (n < 3) throw TooSmall(n);

  const RatMatrix sq = m * m;
  const Rational bound = -sq.trace() / 2;
  const RatMatrix id = RatMatrix::identity(n);

  std::vector<SpectrumEntry> entries;
  std::size_t accounted = 0;
  if (const std::size_t z = kernel(m).dim(); z > 0) {
    entries.push_back({Rational(0), z});
    accounted += z;
  }
  for (long j = 1; accounted < n; ++j) {
    const Rational lambda = make_rational(j, 2);
    if (lambda * lambda > bound) break;
    const std::size_t k = kernel(sq + (lambda * lambda) * id).dim();
    if (k > 0) {
      entries.push_back({lambda, k / 2});
      accounted += k;
    }
  }
  if (accounted != n) return NotHalfIntegral{accounted, n};
  return Spectrum(n, std::move(entries));
}

/// Real block normal form: a [[0,-λ],[λ,0]] block per unit of multiplicity
/// (ascending λ), then the zero block.
inline RatMatrix normal_form(const Spectrum& s) {
  const std::size_t n = s.n();
  RatMatrix m(n, n);
  std::size_t at = 0;
  for (const auto& e : s.entries()) {
    if (sgn(e.lambda) == 0) continue;
    for (std::size_t p = 0; p < e.mult; ++p, at += 2) {
      m(at, at + 1) = -e.lambda;
      m(at + 1, at) = e.lambda;
    }
  }
  return m;
}

}  // namespace canonical_lie
