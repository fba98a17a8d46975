#pragma once

// Deciding and constructing canonical elements ξ ∈ so(n).
//
// Two independent routes decide canonicality:
//  * theorem2_check: ad ξ has integral spectrum and g_1 ⊕ g_0 ⊕ g_{-1}
//    generates so(n,C), tested grade by grade as g^1 = g_1,
//    g^{k+1} = [g_1, g^k] and g^k = g_k for every positive grade k;
//  * prop3_check: the closed-form spectral classification (consecutive
//    magnitudes 0..k, or 1/2..k+1/2 with the 1/2-eigenspace of dimension ≥ 2).

#include <canonical_lie/exactlin.hpp>
#include <canonical_lie/liegraded.hpp>
#include <canonical_lie/sonreal.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace canonical_lie {

class NotCanonical : public std::invalid_argument {
 public:
  explicit NotCanonical(const Spectrum& s)
      : std::invalid_argument("spectrum " + s.to_string() + " is not canonical") {}
};

/// Some ad ξ eigenvalue is not in iZ.
struct NonIntegralAdSpectrum {};

/// g^k falls short of g_k at the first positive grade `grade`.
struct GenerationFails {
  long grade;
  std::size_t achieved_dim;
  std::size_t required_dim;
};

struct CanonicalReason {};

using VerdictReason = std::variant<NonIntegralAdSpectrum, GenerationFails, CanonicalReason>;

struct GenerationStep {
  long grade;
  std::size_t generated_dim;  // dim g^k
  std::size_t graded_dim;     // dim g_k
};

struct Verdict {
  bool canonical = false;
  VerdictReason reason;
  std::optional<GradingMap> witness;
  std::vector<GenerationStep> trace;

  std::string reason_name() const {
    return std::visit(
        [](const auto& r) -> std::string {
          using R = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<R, NonIntegralAdSpectrum>) return "NonIntegralAdSpectrum";
          else if constexpr (std::is_same_v<R, GenerationFails>) return "GenerationFails";
          else return "Canonical";
        },
        reason);
  }
};

/// Every grade λ_a + λ_b over distinct eigen-labels a ≠ b is an integer.
inline bool condition1(const Spectrum& s) {
  const auto labels = wedge_basis(s).eigen_labels;
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b)
      if (!is_integer(labels[a].lambda + labels[b].lambda)) return false;
  return true;
}

/// The generation test on an already realized table.
inline Verdict theorem2_check(const LieTable& t) {
  Verdict v;
  for (auto g : t.grades())
    if (!is_integer(g)) {
      v.reason = NonIntegralAdSpectrum{};
      return v;
    }
  GradingMap grading = grading_of(t);
  const Subspace g1 = grading.piece(1);
  const long top = grading.max_grade() ? grading.max_grade()->get_num().get_si() : 0;
  Subspace generated = g1;
  for (long k = 1; k <= top; ++k) {
    const std::size_t required = grading.dim_at(k);
    v.trace.push_back({k, generated.dim(), required});
    // g^k ⊆ g_k always, so equal dimensions mean equal spaces.
    if (generated.dim() < required) {
      v.reason = GenerationFails{k, generated.dim(), required};
      v.witness = std::move(grading);
      return v;
    }
    generated = bracket_spaces(t, g1, generated);
  }
  v.canonical = true;
  v.reason = CanonicalReason{};
  v.witness = std::move(grading);
  return v;
}

inline Verdict theorem2_check(const Spectrum& s) {
  if (!condition1(s)) {
    Verdict v;
    v.reason = NonIntegralAdSpectrum{};
    return v;
  }
  return theorem2_check(realize(s));
}

/// The same generation condition as one closure: does g_1 ⊕ g_0 ⊕ g_{-1}
/// generate the whole algebra?
inline bool generation_by_closure(const LieTable& t) {
  const GradingMap grading = grading_of(t);
  const Subspace seed = grading.sum_where([](const Rational& r) { return r >= -1 && r <= 1; });
  return generated_subalgebra(t, seed).is_full();
}

/// Dimension of the subalgebra generated by g_1 ⊕ g_{-1}.
inline std::size_t strict_generated_dim(const LieTable& t) {
  const GradingMap grading = grading_of(t);
  const Subspace seed = subspace_sum(grading.piece(1), grading.piece(-1));
  return generated_subalgebra(t, seed).dim();
}

/// The stricter condition: g_1 ⊕ g_{-1} alone generates.
inline bool strict_generation_check(const LieTable& t) { return strict_generated_dim(t) == t.dim(); }
inline bool strict_generation_check(const Spectrum& s) { return strict_generation_check(realize(s)); }

/// Closed-form classification: the magnitudes are exactly {0, 1, ..., k}, or
/// exactly {1/2, 3/2, ..., k + 1/2} with mult(1/2) ≥ 2.
inline bool prop3_check(const Spectrum& s) {
  const auto& es = s.entries();
  if (es.empty()) return false;
  const Rational& first = es.front().lambda;
  const bool integral_family = sgn(first) == 0;
  const bool half_family = first == make_rational(1, 2);
  if (!integral_family && !half_family) return false;
  for (std::size_t i = 0; i < es.size(); ++i)
    if (es[i].lambda != first + static_cast<long>(i)) return false;
  return integral_family || es.front().mult >= 2;
}

/// q = Σ_{r≥0} g_r, its nilradical Σ_{r>0} g_r, and the central descending
/// series of the nilradical.
struct ParabolicData {
  Subspace q;
  Subspace nilradical;
  std::vector<Subspace> series;
  GradingMap grading;
};

/// Outcome of checking the grading/series properties on an arbitrary table.
struct Theorem1Report {
  bool integral_grades = false;
  bool series_matches_grading = false;  // n^{(r)} = Σ_{i≥r} g_i for all r ≥ 1
  bool polar_is_nilradical = false;     // q^⊥ = n
  bool nilpotent = false;               // the series reaches zero

  bool all() const { return integral_grades && series_matches_grading && polar_is_nilradical && nilpotent; }
};

inline Theorem1Report theorem1_properties(const LieTable& t) {
  Theorem1Report rep;
  rep.integral_grades = true;
  for (const auto& g : t.grades()) rep.integral_grades = rep.integral_grades && is_integer(g);

  const GradingMap grading = grading_of(t);
  const Subspace q = grading.sum_where([](const Rational& r) { return sgn(r) >= 0; });
  const Subspace nil = grading.sum_where([](const Rational& r) { return sgn(r) > 0; });
  const auto series = descending_series(t, nil);

  rep.nilpotent = series.back().is_zero();
  rep.polar_is_nilradical = polar(t, q) == nil;

  // Compare n^{(r)} with the tail Σ_{i≥r} g_i until both are zero.
  rep.series_matches_grading = true;
  const Rational top = grading.max_grade().value_or(Rational(0));
  for (std::size_t r = 1;; ++r) {
    const Rational rr(static_cast<long>(r));
    const Subspace tail = grading.sum_where([&](const Rational& g) { return g >= rr; });
    const Subspace& term = r <= series.size() ? series[r - 1] : series.back();
    if (!(term == tail)) {
      rep.series_matches_grading = false;
      break;
    }
    if (tail.is_zero() && rr > top) break;
  }
  return rep;
}

inline ParabolicData parabolic_of(const Spectrum& s) {
  if (!theorem2_check(s).canonical) throw NotCanonical(s);
  const LieTable t = realize(s);
  ParabolicData p;
  p.grading = grading_of(t);
  p.q = p.grading.sum_where([](const Rational& r) { return sgn(r) >= 0; });
  p.nilradical = p.grading.sum_where([](const Rational& r) { return sgn(r) > 0; });
  p.series = descending_series(t, p.nilradical);
  for (std::size_t i = 0; i < p.series.size(); ++i) {
    const Rational from(static_cast<long>(i + 1));
    if (!(p.series[i] == p.grading.sum_where([&](const Rational& g) { return g >= from; })))
      throw std::logic_error("descending series does not match the grading of " + s.to_string());
  }
  if (!p.series.back().is_zero()) throw std::logic_error("nilradical of " + s.to_string() + " is not nilpotent");
  return p;
}

inline bool verify_theorem1(const Spectrum& s) {
  if (!theorem2_check(s).canonical) throw NotCanonical(s);
  return theorem1_properties(realize(s)).all();
}

namespace detail {

// All multiplicity vectors (m_1, ..., m_k), each ≥ 1 and m_1 ≥ first_min,
// with 2·Σ m_j = budget, for every k ≥ 1.
inline void compositions(std::size_t budget, std::size_t first_min, std::vector<std::size_t>& cur,
                         const std::function<void(const std::vector<std::size_t>&)>& emit) {
  if (budget == 0) {
    if (!cur.empty()) emit(cur);
    return;
  }
  const std::size_t lo = cur.empty() ? first_min : 1;
  for (std::size_t m = lo; 2 * m <= budget; ++m) {
    cur.push_back(m);
    compositions(budget - 2 * m, first_min, cur, emit);
    cur.pop_back();
  }
}

}  // namespace detail

/// Every canonical conjugacy class in so(n), sorted.
inline std::vector<Spectrum> enumerate_canonical(std::size_t n) {
  if (n < 3) throw TooSmall(n);
  std::vector<Spectrum> out;
  std::vector<std::size_t> cur;
  // Integral family: m_0 ≥ 1 and m_1, ..., m_k ≥ 1.
  for (std::size_t m0 = n; m0 >= 1; m0 -= 1) {
    if ((n - m0) % 2 != 0) continue;
    if (m0 == n) {
      out.emplace_back(n, std::vector<SpectrumEntry>{{Rational(0), n}});
      continue;
    }
    detail::compositions(n - m0, 1, cur, [&](const std::vector<std::size_t>& ms) {
      std::vector<SpectrumEntry> es{{Rational(0), m0}};
      for (std::size_t j = 0; j < ms.size(); ++j) es.push_back({Rational(static_cast<long>(j + 1)), ms[j]});
      out.emplace_back(n, std::move(es));
    });
  }
  // Half-integral family: m_{1/2} ≥ 2.
  if (n % 2 == 0) {
    detail::compositions(n, 2, cur, [&](const std::vector<std::size_t>& ms) {
      std::vector<SpectrumEntry> es;
      for (std::size_t j = 0; j < ms.size(); ++j) es.push_back({make_rational(2 * static_cast<long>(j) + 1, 2), ms[j]});
      out.emplace_back(n, std::move(es));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every spectrum of so(n) whose magnitudes lie in {0, 1/2, 1, ..., max_lambda}.
inline std::vector<Spectrum> half_integral_spectra(std::size_t n, const Rational& max_lambda) {
  if (n < 3) throw TooSmall(n);
  const Rational twice = 2 * max_lambda;
  const long steps = mpz_class(twice.get_num() / twice.get_den()).get_si();
  std::vector<Spectrum> out;
  std::vector<SpectrumEntry> cur;
  // Choose multiplicities for magnitudes j/2, j = steps..1, then the rest goes to 0.
  std::function<void(long, std::size_t)> go = [&](long j, std::size_t remaining) {
    if (j == 0) {
      auto es = cur;
      if (remaining > 0) es.push_back({Rational(0), remaining});
      out.emplace_back(n, std::move(es));
      return;
    }
    go(j - 1, remaining);
    for (std::size_t m = 1; 2 * m <= remaining; ++m) {
      cur.push_back({make_rational(j, 2), m});
      go(j - 1, remaining - 2 * m);
      cur.pop_back();
    }
  };
  go(steps, n);
  std::sort(out.begin(), out.end());
  return out;
}

/// Spectrum extraction followed by theorem2_check.
inline Verdict check_matrix(const RatMatrix& m) {
  auto extracted = spectrum_from_matrix(m);
  if (std::holds_alternative<NotHalfIntegral>(extracted)) {
    Verdict v;
    v.reason = NonIntegralAdSpectrum{};
    return v;
  }
  return theorem2_check(std::get<Spectrum>(extracted));
}

}  // namespace canonical_lie
