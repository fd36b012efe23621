#include <doctest.h>

#include <random>

#include "qm/chow.hpp"
#include "qm/systems.hpp"

using namespace qm;

namespace {

ChernClassVector chern_from_ints(const std::vector<long>& scalars, std::size_t nvars) {
  // c_k = scalars[k] * h^k over a single weight-1 base variable.
  ChernClassVector chern;
  for (std::size_t k = 0; k < scalars.size(); ++k) {
    IntPolynomial c = IntPolynomial::constant(scalars[k], nvars);
    if (k > 0 && scalars[k] != 0)
      c = c * IntPolynomial::variable(0, nvars, static_cast<unsigned>(k));
    chern.classes.push_back(std::move(c));
  }
  return chern;
}

ChernClassVector trivial_chern(int r, std::size_t nvars) {
  ChernClassVector chern;
  chern.classes.assign(r + 1, IntPolynomial());
  chern.classes[0] = IntPolynomial::constant(1, nvars);
  return chern;
}

bool palindromic(const std::vector<long long>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != v[v.size() - 1 - i]) return false;
  return true;
}

}  // namespace

TEST_CASE("projective space presentations") {
  const GradedPresentation pt = presentation_projective_space(0);
  CHECK(additive_rank(pt).total == 1);

  const GradedPresentation p3 = presentation_projective_space(3);
  const RankReport r = additive_rank(p3);
  CHECK(r.total == 4);
  CHECK(r.per_degree == std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("additive rank by degree") {
  // Z[h]/(h^2).
  const RankReport r1 = additive_rank(presentation_projective_space(1));
  CHECK(r1.total == 2);
  CHECK(r1.per_degree == std::vector<long long>{1, 1});

  // Z[h, T]/(h^2, T^3 + h T^2) with top degree 3.
  GradedPresentation pres;
  pres.vars = {{"h", 1}, {"T", 1}};
  pres.relations = {poly_parse("h^2", pres.vars), poly_parse("T^3 + h*T^2", pres.vars)};
  pres.top_degree = 3;
  const RankReport r2 = additive_rank(pres);
  CHECK(r2.total == 6);
  CHECK(r2.per_degree == std::vector<long long>{1, 2, 2, 1});
}

TEST_CASE("grassmann bundle over a point") {
  const GradedPresentation g =
      grassmann_bundle_presentation(presentation_point(), trivial_chern(2, 0), 1, 2);
  // Z[X1, Y1] / (X1 + Y1, X1 Y1): the rank-2 case.
  CHECK(g.vars.size() == 2);
  const RankReport r = additive_rank(g);
  CHECK(r.total == 2);
  CHECK(r.per_degree == std::vector<long long>{1, 1});
}

TEST_CASE("grassmann bundle is additively free over the base") {
  std::mt19937 rng(83);
  std::uniform_int_distribution<long> coeff(-4, 4);
  for (int N = 0; N <= 2; ++N)
    for (int r = 1; r <= 4; ++r)
      for (int d = 0; d <= std::min(2, r); ++d)
        for (int trial = 0; trial < 3; ++trial) {
          std::vector<long> cs(r + 1, 0);
          cs[0] = 1;
          for (int k = 1; k <= std::min(r, N); ++k) cs[k] = coeff(rng);
          const GradedPresentation base = presentation_projective_space(N);
          const GradedPresentation g =
              grassmann_bundle_presentation(base, chern_from_ints(cs, 1), d, r);
          const BigInt expected = BigInt(N + 1) * binomial(r, d);
          CHECK(bigint_of(additive_rank(g).total) == expected);
        }
}

TEST_CASE("grassmann bundle rejects malformed chern data") {
  const GradedPresentation base = presentation_projective_space(1);
  ChernClassVector short_vec = trivial_chern(1, 1);
  CHECK_THROWS_AS(grassmann_bundle_presentation(base, short_vec, 1, 2), ShapeError);

  ChernClassVector bad0 = trivial_chern(2, 1);
  bad0.classes[0] = IntPolynomial::constant(2, 1);
  CHECK_THROWS_AS(grassmann_bundle_presentation(base, bad0, 1, 2), ShapeError);

  ChernClassVector inhom = trivial_chern(2, 1);
  inhom.classes[2] = IntPolynomial::variable(0, 1, 1);  // weight 1 in slot 2
  CHECK_THROWS_AS(grassmann_bundle_presentation(base, inhom, 1, 2), ShapeError);
}

TEST_CASE("single-input presentation with outputs") {
  // n = 1, p = 1: additive structure of Z[h,T]/(h^2, T^3 + h T^2).
  const GradedPresentation pres = presentation_H_single_input(1, 1);
  CHECK(pres.top_degree == 3);
  const RankReport r = additive_rank(pres);
  CHECK(r.total == 6);
  CHECK(r.per_degree == std::vector<long long>{1, 2, 2, 1});

  CHECK(additive_rank(presentation_H_single_input(1, 2)).total == 12);

  // p = 0 collapses to projective n-space.
  const GradedPresentation p0 = presentation_H_single_input(3, 0);
  CHECK(p0.vars.size() == 1);
  CHECK(additive_rank(p0).total == 4);
}

TEST_CASE("single-input pencil compactification is a projective space") {
  CHECK(additive_rank(presentation_L_single_input(1, 1)).total == 4);
  CHECK(presentation_L_single_input(1, 1).top_degree == 3);
  CHECK(additive_rank(presentation_L_single_input(2, 0)).total == 3);
}

TEST_CASE("rank formulas") {
  CHECK(rank_L_formula(1, 1, 1) == 4);
  CHECK(rank_H_formula(1, 1, 1) == 6);
  CHECK(rank_H_formula(1, 1, 2) == 12);
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) CHECK(rank_L_formula(n, m, 0) == rank_H_formula(n, m, 0));
  CHECK(rank_L_formula(2, 2, 0) == 10);  // binom(5, 2)
}

TEST_CASE("presentation totals match the closed-form ranks") {
  for (int n = 1; n <= 3; ++n)
    for (int p = 0; p <= 2; ++p)
      CHECK(bigint_of(additive_rank(presentation_H_single_input(n, p)).total) ==
            rank_H_formula(n, 1, p));
  for (int n = 1; n <= 4; ++n)
    for (int p = 0; p <= 3; ++p) {
      CHECK(bigint_of(additive_rank(presentation_L_single_input(n, p)).total) ==
            rank_L_formula(n, 1, p));
      CHECK(additive_rank(presentation_L_single_input(n, p)).total ==
            static_cast<long long>(p + 1) * (n + 1));
    }
}

TEST_CASE("per-degree ranks are palindromic") {
  for (int n = 1; n <= 3; ++n)
    for (int p = 0; p <= 2; ++p) {
      CHECK(palindromic(additive_rank(presentation_H_single_input(n, p)).per_degree));
      CHECK(palindromic(additive_rank(presentation_L_single_input(n, p)).per_degree));
    }
}

TEST_CASE("additive rank against direct monomial counting") {
  // Z[x, y] with weights (wx, wy) modulo (x^a, y^b): the graded pieces
  // count exponent pairs directly, an oracle independent of the
  // elimination path.
  std::mt19937 rng(271);
  std::uniform_int_distribution<int> exps(1, 4), weights(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const int a = exps(rng), b = exps(rng);
    const unsigned wx = weights(rng), wy = weights(rng);
    GradedPresentation pres;
    pres.vars = {{"x", wx}, {"y", wy}};
    pres.relations = {IntPolynomial::variable(0, 2, a), IntPolynomial::variable(1, 2, b)};
    pres.top_degree = wx * (a - 1) + wy * (b - 1);
    const RankReport got = additive_rank(pres);

    std::vector<long long> expected(pres.top_degree + 1, 0);
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) ++expected[i * wx + j * wy];
    CHECK(got.per_degree == expected);
    CHECK(got.total == static_cast<long long>(a) * b);
  }
}

TEST_CASE("missing top relations are detected") {
  // Dropping the top relation leaves nonzero pieces above the
  // declared top degree.
  GradedPresentation pres = presentation_H_single_input(1, 1);
  pres.relations.pop_back();
  CHECK_THROWS_AS(additive_rank(pres), PresentationError);
}

TEST_CASE("non-isomorphism certificates") {
  const NonIsoCertificate c = not_isomorphic(1, 1, 1);
  CHECK(c.not_isomorphic);
  CHECK(c.rank_L == 4);
  CHECK(c.rank_H == 6);
  CHECK(!not_isomorphic(2, 3, 0).not_isomorphic);
  CHECK(not_isomorphic(2, 3, 1).not_isomorphic);
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (int p = 0; p <= 4; ++p) {
        if (m + p == 0) continue;
        const NonIsoCertificate cert = not_isomorphic(n, m, p);
        CHECK(cert.not_isomorphic == (p > 0));
        // Without inputs both rank products are zero and certify nothing.
        if (m >= 1) CHECK((cert.rank_L != cert.rank_H) == (p > 0));
      }
}

TEST_CASE("quotient-space dimension") {
  CHECK(quot_dimension(2, 1, 1) == 3);
  CHECK(quot_dimension(1, 0, 5) == 5);
  CHECK_THROWS_AS(quot_dimension(2, 2, 1), ShapeError);
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 5; ++m)
      for (int p = 0; p + m <= 6 && p <= 5; ++p)
        CHECK(quot_dimension(p + m, p, n) == moduli_dimension(n, m, p));
}

TEST_CASE("polynomial strings round-trip") {
  const GradedPresentation pres = presentation_H_single_input(2, 1);
  for (const auto& rel : pres.relations) {
    const std::string s = poly_to_string(rel, pres.vars);
    CHECK(poly_parse(s, pres.vars) == rel);
  }
  const std::vector<GradedPresentation::Var> vars = {{"h", 1}, {"T", 2}};
  CHECK(poly_to_string(poly_parse("-3*h^2 + T - 1", vars), vars) == "-1 + T - 3*h^2");
  CHECK(poly_parse("0", vars).is_zero());
  CHECK_THROWS_AS(poly_parse("q + 1", vars), ParseError);
  CHECK_THROWS_AS(poly_parse("2 *", vars), ParseError);
}
