#pragma once

// Test-only reference computations. These deliberately avoid the library's
// graded-table machinery: they work from spectra and n×n matrices directly.

#include <canonical_lie/exactlin.hpp>
#include <canonical_lie/sonreal.hpp>

#include <map>
#include <vector>

namespace oracle {

using canonical_lie::Rational;
using canonical_lie::RatMatrix;
using canonical_lie::RatVector;
using canonical_lie::Spectrum;
using canonical_lie::SpectrumEntry;

/// Signed eigenvalue list of ξ on Cⁿ straight from the multiplicities.
inline std::vector<Rational> signed_eigenvalues(const Spectrum& s) {
  std::vector<Rational> out;
  for (const auto& e : s.entries())
    for (std::size_t p = 0; p < e.mult; ++p) {
      out.push_back(e.lambda);
      if (sgn(e.lambda) != 0) out.push_back(-e.lambda);
    }
  return out;
}

/// dim g_r for every r: count unordered index pairs {a, b} by λ_a + λ_b.
inline std::map<Rational, std::size_t> grade_dims_by_counting(const Spectrum& s) {
  const auto ev = signed_eigenvalues(s);
  std::map<Rational, std::size_t> dims;
  for (std::size_t a = 0; a < ev.size(); ++a)
    for (std::size_t b = a + 1; b < ev.size(); ++b) ++dims[ev[a] + ev[b]];
  return dims;
}

inline RatVector flatten(const RatMatrix& m) { return m.entries(); }

inline RatMatrix unflatten(const RatVector& v, std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

/// Dimension of the matrix Lie algebra generated by `seed` under the
/// commutator, computed in gl(n) rather than through structure constants.
inline std::size_t matrix_closure_dim(const std::vector<RatMatrix>& seed, std::size_t n) {
  std::vector<RatVector> vs;
  for (const auto& m : seed) vs.push_back(flatten(m));
  auto space = canonical_lie::Subspace::span(vs, n * n);
  for (;;) {
    std::vector<RatVector> grown = space.basis_vectors();
    const auto basis = space.basis_vectors();
    for (const auto& x : basis)
      for (const auto& y : basis)
        grown.push_back(flatten(canonical_lie::commutator(unflatten(x, n), unflatten(y, n))));
    auto next = canonical_lie::Subspace::span(grown, n * n);
    if (next.dim() == space.dim()) return space.dim();
    space = std::move(next);
  }
}

/// Every spectrum of so(n) with magnitudes in {0, 1/2, ..., max_twice/2},
/// built by recursion over twice-the-magnitude.
inline void all_spectra(std::size_t n, long max_twice, long j, std::size_t left, std::vector<SpectrumEntry>& cur,
                        std::vector<Spectrum>& out) {
  if (j > max_twice) {
    auto es = cur;
    if (left > 0) es.push_back({Rational(0), left});
    out.emplace_back(n, es);
    return;
  }
  all_spectra(n, max_twice, j + 1, left, cur, out);
  for (std::size_t m = 1; 2 * m <= left; ++m) {
    cur.push_back({canonical_lie::make_rational(j, 2), m});
    all_spectra(n, max_twice, j + 1, left - 2 * m, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Spectrum> all_spectra(std::size_t n, long max_twice) {
  std::vector<Spectrum> out;
  std::vector<SpectrumEntry> cur;
  all_spectra(n, max_twice, 1, n, cur, out);
  return out;
}

inline Spectrum spec(std::size_t n, std::initializer_list<std::pair<const char*, std::size_t>> entries) {
  std::vector<SpectrumEntry> es;
  for (const auto& [l, m] : entries) es.push_back({canonical_lie::parse_rational(l), m});
  return Spectrum(n, es);
}

}  // namespace oracle
