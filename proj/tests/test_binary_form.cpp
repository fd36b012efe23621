#include <doctest.h>

#include "qm/pencil.hpp"
#include "test_util.hpp"

using namespace qm;
using qmtest::mat;

namespace {

BinaryForm form_s() { return BinaryForm::linear(Rat(1), Rat(0)); }
BinaryForm form_t() { return BinaryForm::linear(Rat(0), Rat(1)); }

}  // namespace

TEST_CASE("binary form basics") {
  CHECK(BinaryForm().is_zero());
  CHECK(BinaryForm().degree() == 0);
  CHECK(BinaryForm::linear(Rat(0), Rat(0)).is_zero());
  const BinaryForm st = form_s() * form_t();
  CHECK(st.degree() == 2);
  CHECK(st.s_multiplicity() == 1);
  CHECK(st.eval(Rat(2), Rat(3)) == Rat(6));
  const BinaryForm sum = st + st;
  CHECK(sum.coeff(1) == Rat(2));
  CHECK((st - st).is_zero());
  CHECK_THROWS_AS(st + form_s(), ShapeError);
  CHECK(st.str() == "s*t");
  CHECK((-st).str() == "-s*t");
}

TEST_CASE("binary form exact division") {
  const BinaryForm s = form_s(), t = form_t();
  const BinaryForm f = (s + t) * (s - t) * t;  // (s^2 - t^2) t
  CHECK(f.div_exact(t) == (s + t) * (s - t));
  CHECK(f.div_exact(s + t) == (s - t) * t);
  CHECK((s * s * t).div_exact(s * t) == s);
  CHECK_THROWS_AS(s.div_exact(BinaryForm()), ShapeError);
  CHECK_THROWS_AS((s * s + t * t).div_exact(s + t), ShapeError);
}

TEST_CASE("form gcd examples") {
  const BinaryForm s = form_s(), t = form_t();
  CHECK(form_gcd(s * t, t * t) == t);
  CHECK(form_gcd(s, t) == BinaryForm(Rat(1)));
  const BinaryForm f = (s + t) * (s + t) * BinaryForm(Rat(-3, 2));
  CHECK(form_gcd(BinaryForm(), f) == (s + t) * (s + t));  // normalized
  CHECK(form_gcd(BinaryForm(), BinaryForm()).is_zero());
  CHECK(form_gcd({s * t, t * t, s * s}).is_constant());
  // Common factor through all three entries.
  CHECK(form_gcd({s * t * (s + t), t * t * (s + t), (s + t) * s * s}) == s + t);
}

TEST_CASE("normalization fixes content and leading sign") {
  const BinaryForm f(2, {Rat(-2, 3), Rat(0), Rat(-4, 3)});
  const BinaryForm n = f.normalized();
  CHECK(n.coeff(0) == Rat(1));
  CHECK(n.coeff(2) == Rat(2));
  // Leading coefficient is the highest s power present.
  const BinaryForm g(2, {Rat(0), Rat(0), Rat(-5)});
  CHECK(g.normalized().coeff(2) == Rat(1));
}

TEST_CASE("pencil generic rank") {
  CHECK(pencil_generic_rank(mat({{1, 0}, {0, 1}}), mat({{0, 0}, {0, 0}})) == 2);
  CHECK(pencil_generic_rank(mat({{0, 0}, {0, 0}}), mat({{0, 0}, {0, 0}})) == 0);
  CHECK(pencil_generic_rank(mat({{1}, {0}}), mat({{0}, {1}})) == 1);
  // Augmented block raises the rank.
  CHECK(pencil_generic_rank(mat({{0}}), mat({{0}}), mat({{1}})) == 1);
  // Nilpotent-style pencil: s*K + t*L = [[s, t], [0, s]] has generic rank 2.
  CHECK(pencil_generic_rank(mat({{1, 0}, {0, 1}}), mat({{0, 1}, {0, 0}})) == 2);
}

TEST_CASE("pencil determinant") {
  const BinaryForm d = pencil_det(mat({{1, 0}, {0, 1}}), mat({{0, 0}, {0, 0}}));
  CHECK(d == form_s() * form_s());
  CHECK(pencil_det(mat({{0}}), mat({{0}})).is_zero());
  const BinaryForm swapped = pencil_det(mat({{0, 1}, {1, 0}}), mat({{0, 0}, {0, 0}}));
  CHECK(swapped == -(form_s() * form_s()));
}

TEST_CASE("pencil minors gcd examples") {
  CHECK(pencil_minors_gcd(mat({{1}, {0}}), mat({{0}, {1}}), std::nullopt, 1) ==
        BinaryForm(Rat(1)));
  CHECK(pencil_minors_gcd(mat({{1}, {0}}), mat({{0}, {0}}), std::nullopt, 1) == form_s());
  CHECK(pencil_minors_gcd(mat({{1}}), mat({{0}}), Matrix<Rat>(mat({{1}})), 1) ==
        BinaryForm(Rat(1)));
  CHECK(pencil_minors_gcd(mat({{0}}), mat({{0}}), std::nullopt, 1).is_zero());
  CHECK_THROWS_AS(pencil_minors_gcd(mat({{1}}), mat({{1}}), std::nullopt, 2), ShapeError);
}

TEST_CASE("minors gcd roots witness rank drops") {
  // K = I2, L = diag(0, -1): pencil diag(s, s - t) loses rank at
  // (0,1) and (1,1), and the 2-minor gcd is exactly s*(s-t).
  const auto K = mat({{1, 0}, {0, 1}});
  const auto L = mat({{0, 0}, {0, -1}});
  const BinaryForm g = pencil_minors_gcd(K, L, std::nullopt, 2);
  const BinaryForm expected = form_s() * (form_s() - form_t());
  CHECK(g == expected.normalized());
  for (auto [s0, t0] : {std::pair<long, long>{0, 1}, {1, 1}}) {
    const auto at = K.scaled(Rat(s0)) + L.scaled(Rat(t0));
    CHECK(rank_bareiss(at) < 2);
  }
  // Degree-zero gcd means no rank drop anywhere: spot-check sample points.
  const BinaryForm h = pencil_minors_gcd(mat({{1}, {0}}), mat({{0}, {1}}), std::nullopt, 1);
  CHECK(h.degree() == 0);
  for (long s0 = -3; s0 <= 3; ++s0)
    for (long t0 = -3; t0 <= 3; ++t0) {
      if (s0 == 0 && t0 == 0) continue;
      CHECK(rank_bareiss(mat({{s0}, {t0}})) == 1);
    }
}

TEST_CASE("gcd divisibility laws on random forms") {
  std::mt19937 rng(929);
  std::uniform_int_distribution<long> coeff(-4, 4);
  auto random_form = [&](int max_deg) {
    const int d = static_cast<int>(rng() % (max_deg + 1));
    std::vector<Rat> c(d + 1);
    for (Rat& x : c) x = Rat(coeff(rng));
    return BinaryForm(d, std::move(c));
  };
  auto divides = [](const BinaryForm& d, const BinaryForm& f) {
    if (f.is_zero()) return true;
    if (d.is_zero()) return false;
    try {
      (void)f.div_exact(d);
      return true;
    } catch (const ShapeError&) {
      return false;
    }
  };
  for (int it = 0; it < 200; ++it) {
    const BinaryForm f = random_form(3), g = random_form(3), h = random_form(2);
    const BinaryForm d = form_gcd(f, g);
    CHECK(divides(d, f));
    CHECK(divides(d, g));
    if (!h.is_zero()) {
      // Common factors survive into the gcd.
      const BinaryForm dh = form_gcd(f * h, g * h);
      CHECK(divides(h.normalized(), dh.is_zero() ? h.normalized() : dh));
      CHECK(divides(dh.is_zero() ? BinaryForm(Rat(1)) : dh, f * h));
    }
  }
}

TEST_CASE("minor size guard") {
  const auto big = Matrix<Rat>(9, 9, Rat());
  CHECK_THROWS_AS(pencil_minors_gcd(big, big, std::nullopt, 9), BudgetError);
}
