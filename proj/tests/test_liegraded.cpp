#include <canonical_lie/liegraded.hpp>
#include <canonical_lie/sonreal.hpp>

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace canonical_lie;
using oracle::spec;

namespace {

// so(3) as R³ with the cross product: [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2.
std::vector<RatVector> so3_brackets() {
  std::vector<RatVector> t(9, RatVector(3));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
    t[i * 3 + j][k] = 1;
    t[j * 3 + i][k] = -1;
  };
  set(0, 1, 2);
  set(1, 2, 0);
  set(2, 0, 1);
  return t;
}

LieTable so3() { return build_table(3, so3_brackets(), {0, 0, 0}, make_rational(-2) * RatMatrix::identity(3)); }

Subspace e(std::size_t i, std::size_t dim) {
  RatVector v(dim);
  v[i] = 1;
  return span({v}, dim);
}

Subspace random_subspace(std::mt19937& rng, std::size_t dim, std::size_t gens) {
  std::uniform_int_distribution<int> d(-1, 1);
  std::bernoulli_distribution keep(0.25);
  std::vector<RatVector> vs(gens, RatVector(dim));
  for (auto& v : vs)
    for (auto& x : v)
      if (keep(rng)) x = d(rng);
  return span(vs, dim);
}

}  // namespace

TEST(BuildTable, So3IsValid) {
  const auto t = so3();
  EXPECT_EQ(t.dim(), 3u);
  EXPECT_EQ(t.bracket({1, 0, 0}, {0, 1, 0}), (RatVector{0, 0, 1}));
}

TEST(BuildTable, SignFlipIsAntisymmetryViolation) {
  auto b = so3_brackets();
  b[1 * 3 + 0][2] = 1;  // [e2, e1] = +e3
  try {
    build_table(3, b, {0, 0, 0}, RatMatrix::identity(3));
    FAIL() << "expected AntisymmetryViolation";
  } catch (const AntisymmetryViolation& err) {
    EXPECT_EQ(err.indices(), (std::vector<std::size_t>{0, 1}));
  }
}

TEST(BuildTable, JacobiViolation) {
  // [e1,e2]=e3, [e2,e3]=e3, [e1,e3]=e1: the cyclic sum on (1,2,3) is e1 + e3.
  std::vector<RatVector> b(9, RatVector(3));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
    b[i * 3 + j][k] = 1;
    b[j * 3 + i][k] = -1;
  };
  set(0, 1, 2);
  set(1, 2, 2);
  set(0, 2, 0);
  try {
    build_table(3, b, {0, 0, 0}, RatMatrix(3, 3));
    FAIL() << "expected JacobiViolation";
  } catch (const JacobiViolation& err) {
    EXPECT_EQ(err.indices(), (std::vector<std::size_t>{0, 1, 2}));
  }
}

TEST(BuildTable, GradingViolation) {
  EXPECT_THROW(build_table(3, so3_brackets(), {1, 0, 0}, RatMatrix(3, 3)), GradingViolation);
}

TEST(BuildTable, FormNotInvariant) {
  RatMatrix f(3, 3);
  f(0, 0) = 1;
  f(1, 1) = 2;
  f(2, 2) = 3;
  EXPECT_THROW(build_table(3, so3_brackets(), {0, 0, 0}, f), FormNotInvariant);
  RatMatrix asym = RatMatrix::identity(3);
  asym(0, 1) = 1;
  EXPECT_THROW(build_table(3, so3_brackets(), {0, 0, 0}, asym), FormNotInvariant);
}

TEST(BuildTable, ShapeErrors) {
  EXPECT_THROW(build_table(3, {}, {0, 0, 0}, RatMatrix::identity(3)), DimensionMismatch);
  EXPECT_THROW(build_table(3, so3_brackets(), {0, 0}, RatMatrix::identity(3)), DimensionMismatch);
}

TEST(GradingOf, AllZeroGrades) {
  const auto g = grading_of(so3());
  ASSERT_EQ(g.entries().size(), 1u);
  EXPECT_EQ(g.entries()[0].grade, 0);
  EXPECT_EQ(g.entries()[0].space, Subspace::full(3));
}

TEST(GradingOf, MatchesPairCounting) {
  for (const auto& s : {spec(4, {{"1/2", 2}}), spec(3, {{"1", 1}, {"0", 1}}), spec(7, {{"2", 1}, {"1", 2}, {"0", 1}}),
                        spec(8, {{"3/2", 1}, {"1/2", 3}})}) {
    const auto g = grading_of(realize(s));
    const auto expected = oracle::grade_dims_by_counting(s);
    ASSERT_EQ(g.entries().size(), expected.size()) << s.to_string();
    for (const auto& [r, d] : expected) EXPECT_EQ(g.dim_at(r), d) << s.to_string() << " grade " << to_string(r);
  }
  // Frozen from the counting oracle.
  const auto g4 = grading_of(realize(spec(4, {{"1/2", 2}})));
  EXPECT_EQ(g4.dim_at(-1), 1u);
  EXPECT_EQ(g4.dim_at(0), 4u);
  EXPECT_EQ(g4.dim_at(1), 1u);
  const auto g3 = grading_of(realize(spec(3, {{"1", 1}, {"0", 1}})));
  EXPECT_EQ(g3.dim_at(-1), 1u);
  EXPECT_EQ(g3.dim_at(0), 1u);
  EXPECT_EQ(g3.dim_at(1), 1u);
}

TEST(BracketSpaces, Examples) {
  const auto t4 = realize(spec(4, {{"1/2", 2}}));
  const auto g4 = grading_of(t4);
  EXPECT_EQ(bracket_spaces(t4, Subspace::zero(6), Subspace::full(6)), Subspace::zero(6));
  const auto b4 = bracket_spaces(t4, g4.piece(1), g4.piece(-1));
  EXPECT_EQ(b4.dim(), 1u);
  EXPECT_TRUE(b4.is_subspace_of(g4.piece(0)));

  const auto t3 = realize(spec(3, {{"1", 1}, {"0", 1}}));
  const auto g3 = grading_of(t3);
  EXPECT_EQ(bracket_spaces(t3, g3.piece(1), g3.piece(-1)), g3.piece(0));
}

TEST(GeneratedSubalgebra, So4Examples) {
  const auto s = spec(4, {{"1/2", 2}});
  const auto t = realize(s);
  const auto g = grading_of(t);
  EXPECT_EQ(generated_subalgebra(t, Subspace::full(6)), Subspace::full(6));
  const auto strict = generated_subalgebra(t, subspace_sum(g.piece(1), g.piece(-1)));
  const auto full = generated_subalgebra(t, subspace_sum(strict, g.piece(0)));
  EXPECT_EQ(strict.dim(), 3u);
  EXPECT_EQ(full.dim(), 6u);

  // Independent route: close the same matrices under the gl(4) commutator.
  const auto w = wedge_basis(s);
  std::vector<RatMatrix> seed;
  for (std::size_t i = 0; i < w.dim(); ++i)
    if (w.grade(i) == 1 || w.grade(i) == -1) seed.push_back(matrix_of(w, i));
  EXPECT_EQ(oracle::matrix_closure_dim(seed, 4), 3u);
}

TEST(DescendingSeries, Examples) {
  const auto t3 = realize(spec(3, {{"1", 1}, {"0", 1}}));
  EXPECT_EQ(descending_series(t3, Subspace::zero(3)), std::vector<Subspace>{Subspace::zero(3)});
  const auto g3 = grading_of(t3);
  EXPECT_EQ(descending_series(t3, g3.piece(1)), (std::vector<Subspace>{g3.piece(1), Subspace::zero(3)}));

  const auto t5 = realize(spec(5, {{"1", 1}, {"0", 3}}));
  const auto g5 = grading_of(t5);
  const auto series = descending_series(t5, g5.sum_where([](const Rational& r) { return r > 0; }));
  ASSERT_GE(series.size(), 2u);
  for (std::size_t i = 1; i < series.size(); ++i) EXPECT_LT(series[i].dim(), series[i - 1].dim());
  EXPECT_TRUE(series.back().is_zero());
}

TEST(DescendingSeries, NonNilpotentStopsAtRepeat) {
  const auto t = so3();
  const auto series = descending_series(t, Subspace::full(3));
  EXPECT_EQ(series.size(), 1u);
  EXPECT_TRUE(series.back().is_full());
}

TEST(Polar, Examples) {
  const auto t = realize(spec(4, {{"1/2", 2}}));
  const auto g = grading_of(t);
  EXPECT_EQ(polar(t, Subspace::full(6)), Subspace::zero(6));
  EXPECT_EQ(polar(t, Subspace::zero(6)), Subspace::full(6));
  EXPECT_EQ(polar(t, subspace_sum(g.piece(0), g.piece(1))), g.piece(1));
}

TEST(Polar, DegenerateForm) {
  const auto t = build_table(3, so3_brackets(), {0, 0, 0}, RatMatrix(3, 3));
  EXPECT_THROW(polar(t, e(0, 3)), DegenerateForm);
}

TEST(DirectSum, So3PlusSo3) {
  const auto a = so3();
  const auto t = direct_sum(a, a);
  EXPECT_EQ(t.dim(), 6u);
  EXPECT_EQ(t.bracket({0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}), (RatVector{0, 0, 0, 0, 0, 1}));
  EXPECT_TRUE(is_zero(t.bracket({1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0})));
  // so(3) ⊕ so(3) ≅ so(4): both are 6-dimensional with trivial centre.
  EXPECT_EQ(bracket_spaces(t, Subspace::full(6), Subspace::full(6)), Subspace::full(6));
}

TEST(DirectSum, GradingDimsAdd) {
  const auto a = realize(spec(3, {{"1", 1}, {"0", 1}}));
  const auto b = realize(spec(4, {{"1/2", 2}}));
  const auto ga = grading_of(a), gb = grading_of(b), gs = grading_of(direct_sum(a, b));
  for (long r = -2; r <= 2; ++r) EXPECT_EQ(gs.dim_at(r), ga.dim_at(r) + gb.dim_at(r));
}

TEST(DirectSum, ZeroDimensionalIdentity) {
  const auto zero = build_table(0, {}, {}, RatMatrix(0, 0));
  const auto t = realize(spec(4, {{"1/2", 2}}));
  const auto s = direct_sum(t, zero);
  EXPECT_EQ(s.dim(), t.dim());
  EXPECT_EQ(s.grades(), t.grades());
  EXPECT_EQ(s.form(), t.form());
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j) {
      RatVector x(6), y(6);
      x[i] = 1;
      y[j] = 1;
      EXPECT_EQ(s.bracket(x, y), t.bracket(x, y));
    }
}

TEST(LieProperty, GeneratedSeriesAndPolarInvariants) {
  std::mt19937 rng(5);
  for (const auto& s : {spec(4, {{"1/2", 2}}), spec(5, {{"1", 1}, {"0", 3}}), spec(6, {{"1", 1}, {"1/2", 1}, {"0", 2}}),
                        spec(6, {{"3/2", 1}, {"1/2", 2}})}) {
    const auto t = realize(s);
    const auto g = grading_of(t);
    for (const auto& piece : g.entries()) EXPECT_EQ(piece.space.dim(), g.dim_at(-piece.grade)) << s.to_string();

    for (int trial = 0; trial < 6; ++trial) {
      const auto seed = random_subspace(rng, t.dim(), 1 + trial % 3);
      const auto gen = generated_subalgebra(t, seed);
      EXPECT_TRUE(seed.is_subspace_of(gen));
      EXPECT_EQ(generated_subalgebra(t, gen), gen);
      EXPECT_TRUE(bracket_spaces(t, gen, gen).is_subspace_of(gen));

      const auto series = descending_series(t, gen);
      for (std::size_t i = 0; i < series.size(); ++i) {
        if (i > 0) {
          EXPECT_LE(series[i].dim(), series[i - 1].dim());
        }
        EXPECT_TRUE(bracket_spaces(t, gen, series[i]).is_subspace_of(series[i]));
      }

      EXPECT_EQ(polar(t, polar(t, seed)), seed);
      EXPECT_EQ(polar(t, seed).dim(), t.dim() - seed.dim());
    }
  }
}
