#pragma once

// Finite-dimensional graded Lie algebras given by structure constants, and
// the subspace operations the canonical-element machinery is built from.

#include <canonical_lie/exactlin.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace canonical_lie {

/// Raised by build_table. `indices()` names the offending basis elements.
class TableError : public std::invalid_argument {
 public:
  TableError(const std::string& what, std::vector<std::size_t> indices)
      : std::invalid_argument(what + describe(indices)), indices_(std::move(indices)) {}
  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  static std::string describe(const std::vector<std::size_t>& idx) {
    std::string s = " at basis indices (";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + std::to_string(idx[i]);
    return s + ")";
  }
  std::vector<std::size_t> indices_;
};

class AntisymmetryViolation : public TableError {
 public:
  explicit AntisymmetryViolation(std::vector<std::size_t> idx)
      : TableError("bracket is not antisymmetric", std::move(idx)) {}
};
class JacobiViolation : public TableError {
 public:
  explicit JacobiViolation(std::vector<std::size_t> idx)
      : TableError("Jacobi identity fails", std::move(idx)) {}
};
class GradingViolation : public TableError {
 public:
  GradingViolation(const std::string& what, std::vector<std::size_t> idx) : TableError(what, std::move(idx)) {}
};
class FormNotInvariant : public TableError {
 public:
  FormNotInvariant(const std::string& what, std::vector<std::size_t> idx) : TableError(what, std::move(idx)) {}
};

class DegenerateForm : public std::domain_error {
 public:
  DegenerateForm() : std::domain_error("invariant form is degenerate") {}
};

struct Term {
  std::size_t index;
  Rational coeff;
};
using SparseVector = std::vector<Term>;

/// A validated structure-constant table with a grading by Rational labels and
/// an invariant symmetric bilinear form. Only build_table and direct_sum
/// produce instances.
class LieTable {
 public:
  LieTable() = default;

  std::size_t dim() const { return dim_; }
  const Rational& grade(std::size_t i) const { return grades_[i]; }
  const std::vector<Rational>& grades() const { return grades_; }
  const RatMatrix& form() const { return form_; }

  /// Nonzero coordinates of [e_i, e_j], sorted by index.
  const SparseVector& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  RatVector bracket(const RatVector& x, const RatVector& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("bracket argument has wrong length");
    RatVector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (sgn(y[j]) == 0) continue;
        const auto& terms = bracket_basis(i, j);
        if (terms.empty()) continue;
        const Rational c = x[i] * y[j];
        for (const auto& t : terms) out[t.index] += c * t.coeff;
      }
    }
    return out;
  }

  Rational pair(const RatVector& x, const RatVector& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        if (sgn(y[j]) != 0 && sgn(form_(i, j)) != 0) s += x[i] * form_(i, j) * y[j];
    }
    return s;
  }

  friend LieTable build_table(std::size_t, const std::vector<RatVector>&, std::vector<Rational>, RatMatrix);
  friend LieTable direct_sum(const LieTable&, const LieTable&);

 private:
  void validate() const;

  std::size_t dim_ = 0;
  std::vector<SparseVector> table_;
  std::vector<Rational> grades_;
  RatMatrix form_;
};

namespace detail {

inline void accumulate(std::map<std::size_t, Rational>& acc, const SparseVector& v, const Rational& k) {
  for (const auto& t : v) acc[t.index] += k * t.coeff;
}

inline std::vector<std::size_t> nonzero_support(const std::map<std::size_t, Rational>& acc) {
  std::vector<std::size_t> out;
  for (const auto& [i, c] : acc)
    if (sgn(c) != 0) out.push_back(i);
  return out;
}

}  // namespace detail

inline void LieTable::validate() const {
  const std::size_t d = dim_;
  for (std::size_t i = 0; i < d; ++i) {
    if (!bracket_basis(i, i).empty()) throw AntisymmetryViolation({i, i});
    for (std::size_t j = i + 1; j < d; ++j) {
      const auto& a = bracket_basis(i, j);
      const auto& b = bracket_basis(j, i);
      bool ok = a.size() == b.size();
      for (std::size_t k = 0; ok && k < a.size(); ++k) ok = a[k].index == b[k].index && a[k].coeff == -b[k].coeff;
      if (!ok) throw AntisymmetryViolation({i, j});
    }
  }

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : bracket_basis(i, j))
        if (grades_[t.index] != grades_[i] + grades_[j])
          throw GradingViolation("bracket leaves the grade sum", {i, j, t.index});

  // Antisymmetry makes the cyclic Jacobi sum alternating, so i < j < k suffices.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        std::map<std::size_t, Rational> acc;
        auto add_nested = [&](std::size_t a, std::size_t b, std::size_t c) {
          for (const auto& t : bracket_basis(b, c)) detail::accumulate(acc, bracket_basis(a, t.index), t.coeff);
        };
        add_nested(i, j, k);
        add_nested(j, k, i);
        add_nested(k, i, j);
        if (!detail::nonzero_support(acc).empty()) throw JacobiViolation({i, j, k});
      }

  if (form_.rows() != d || form_.cols() != d) throw DimensionMismatch("form has wrong shape");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (form_(i, j) != form_(j, i)) throw FormNotInvariant("form is not symmetric", {i, j});

  // An invariant form pairs grade r only with grade -r.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (sgn(form_(i, j)) != 0 && sgn(grades_[i] + grades_[j]) != 0)
        throw GradingViolation("form pairs grades that do not cancel", {i, j});

  // <[e_i, e_j], e_k> + <e_j, [e_i, e_k]> = 0
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Rational s = 0;
        for (const auto& t : bracket_basis(i, j)) s += t.coeff * form_(t.index, k);
        for (const auto& t : bracket_basis(i, k)) s += t.coeff * form_(j, t.index);
        if (sgn(s) != 0) throw FormNotInvariant("form is not ad-invariant", {i, j, k});
      }
}

/// Builds and eagerly validates a table. `bracket_table[i * dim + j]` holds
/// the coordinates of [e_i, e_j].
inline LieTable build_table(std::size_t dim, const std::vector<RatVector>& bracket_table, std::vector<Rational> grade,
                            RatMatrix form) {
  if (bracket_table.size() != dim * dim) throw DimensionMismatch("bracket table must have dim*dim rows");
  if (grade.size() != dim) throw DimensionMismatch("one grade per basis element is required");
  LieTable t;
  t.dim_ = dim;
  t.grades_ = std::move(grade);
  t.form_ = std::move(form);
  t.table_.resize(dim * dim);
  for (std::size_t p = 0; p < dim * dim; ++p) {
    if (bracket_table[p].size() != dim) throw DimensionMismatch("bracket row has wrong length");
    for (std::size_t k = 0; k < dim; ++k)
      if (sgn(bracket_table[p][k]) != 0) t.table_[p].push_back({k, bracket_table[p][k]});
  }
  t.validate();
  return t;
}

/// Block-diagonal sum; the second summand's basis follows the first's.
inline LieTable direct_sum(const LieTable& a, const LieTable& b) {
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  LieTable t;
  t.dim_ = d;
  t.table_.resize(d * d);
  t.grades_ = a.grades_;
  t.grades_.insert(t.grades_.end(), b.grades_.begin(), b.grades_.end());
  t.form_ = RatMatrix(d, d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      t.table_[i * d + j] = a.bracket_basis(i, j);
      t.form_(i, j) = a.form()(i, j);
    }
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      auto& dst = t.table_[(da + i) * d + (da + j)];
      for (const auto& term : b.bracket_basis(i, j)) dst.push_back({da + term.index, term.coeff});
      t.form_(da + i, da + j) = b.form()(i, j);
    }
  t.validate();
  return t;
}

struct GradedPiece {
  Rational grade;
  Subspace space;
};

/// The decomposition of a table into its grade pieces, ascending by grade.
class GradingMap {
 public:
  GradingMap() = default;
  GradingMap(std::size_t ambient_dim, std::vector<GradedPiece> entries)
      : ambient_dim_(ambient_dim), entries_(std::move(entries)) {}

  const std::vector<GradedPiece>& entries() const { return entries_; }
  std::size_t ambient_dim() const { return ambient_dim_; }

  /// The grade-r piece; zero when r is not a grade.
  Subspace piece(const Rational& r) const {
    for (const auto& e : entries_)
      if (e.grade == r) return e.space;
    return Subspace::zero(ambient_dim_);
  }
  std::size_t dim_at(const Rational& r) const {
    for (const auto& e : entries_)
      if (e.grade == r) return e.space.dim();
    return 0;
  }

  /// Sum of the pieces whose grade satisfies `keep`.
  Subspace sum_where(const std::function<bool(const Rational&)>& keep) const {
    Subspace s = Subspace::zero(ambient_dim_);
    for (const auto& e : entries_)
      if (keep(e.grade)) s = subspace_sum(s, e.space);
    return s;
  }

  std::optional<Rational> max_grade() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.back().grade;
  }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<GradedPiece> entries_;
};

inline GradingMap grading_of(const LieTable& t) {
  std::map<Rational, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < t.dim(); ++i) groups[t.grade(i)].push_back(i);
  std::vector<GradedPiece> entries;
  for (const auto& [r, idx] : groups) {
    std::vector<RatVector> vs;
    for (auto i : idx) {
      RatVector e(t.dim());
      e[i] = 1;
      vs.push_back(std::move(e));
    }
    entries.push_back({r, Subspace::span(vs, t.dim())});
  }
  return GradingMap(t.dim(), std::move(entries));
}

inline Subspace bracket_spaces(const LieTable& t, const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != t.dim() || b.ambient_dim() != t.dim())
    throw DimensionMismatch("subspace is not in this algebra");
  std::vector<RatVector> products;
  const auto as = a.basis_vectors();
  const auto bs = b.basis_vectors();
  for (const auto& x : as)
    for (const auto& y : bs) {
      RatVector z = t.bracket(x, y);
      if (!is_zero(z)) products.push_back(std::move(z));
    }
  return Subspace::span(products, t.dim());
}

/// Smallest subalgebra containing `seed`: iterate s <- s + [s, s].
inline Subspace generated_subalgebra(const LieTable& t, const Subspace& seed) {
  Subspace s = seed;
  for (;;) {
    Subspace next = subspace_sum(s, bracket_spaces(t, s, s));
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

/// n, [n, n], [n, [n, n]], ... up to the first term that would repeat.
/// Total on non-nilpotent input; callers test nilpotency via back().is_zero().
inline std::vector<Subspace> descending_series(const LieTable& t, const Subspace& n) {
  std::vector<Subspace> series{n};
  for (;;) {
    Subspace next = bracket_spaces(t, n, series.back());
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

inline bool form_is_nondegenerate(const LieTable& t) { return rank(t.form()) == t.dim(); }

/// {x : <x, a> = 0} for the table's invariant form.
inline Subspace polar(const LieTable& t, const Subspace& a) {
  if (!form_is_nondegenerate(t)) throw DegenerateForm();
  if (a.is_zero()) return Subspace::full(t.dim());
  return kernel(a.basis() * t.form());
}

}  // namespace canonical_lie
