#include <doctest.h>

#include <random>

#include "qm/subspace.hpp"
#include "test_util.hpp"

using namespace qm;
using qmtest::fpmat;
using qmtest::mat;
using qmtest::random_mat;

TEST_CASE("rational parsing and canonical strings") {
  CHECK(Rat::parse("3/6").str() == "1/2");
  CHECK(Rat::parse("-4/2").str() == "-2");
  CHECK(Rat::parse("7").str() == "7");
  CHECK(Rat(BigInt(2), BigInt(-4)).str() == "-1/2");
  CHECK_THROWS_AS(Rat::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rat::parse("a"), ParseError);
  CHECK_THROWS_AS(Rat::parse("1/ 2"), ParseError);
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
}

TEST_CASE("prime field arithmetic") {
  const Fp a(5, 7), b(4, 7);
  CHECK((a + b).value() == 2);
  CHECK((a * b).value() == 6);
  CHECK((a / b).value() == 3);            // 4 * 3 = 12 = 5 mod 7
  CHECK(a.inverse().value() == 3);        // 5 * 3 = 15 = 1 mod 7
  CHECK((-Fp(0, 7)).value() == 0);
  CHECK_THROWS_AS(Fp(1, 6), ShapeError);  // not prime
  CHECK_THROWS_AS(Fp(1, 7) + Fp(1, 5), ShapeError);
  CHECK_THROWS_AS(Fp(0, 5).inverse(), ShapeError);
}

TEST_CASE("rank: fraction-free elimination") {
  CHECK(rank_bareiss(Matrix<Rat>::identity(2, Rat())) == 2);
  CHECK(rank_bareiss(Matrix<Rat>(2, 2, Rat())) == 0);
  CHECK(rank_bareiss(mat({{1, 2}, {2, 4}})) == 1);
  CHECK(rank_bareiss(fpmat({{1, 1}, {1, 0}}, 2)) == 2);
  // 0/1 circulant with determinant 2: full rank over Q, rank 2 over F_2.
  const std::vector<std::vector<long>> circ = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  CHECK(rank_bareiss(mat(circ)) == 3);
  CHECK(rank_bareiss(fpmat(circ, 2)) == 2);
}

TEST_CASE("rank equals rank of transpose") {
  std::mt19937 rng(7);
  for (int it = 0; it < 50; ++it) {
    auto m = random_mat(rng, 1 + it % 5, 1 + (it * 3) % 5);
    CHECK(rank_bareiss(m) == rank_bareiss(m.transpose()));
  }
}

TEST_CASE("determinant and inverse") {
  CHECK(det_bareiss(mat({{2, 1}, {1, 1}})) == Rat(1));
  CHECK(det_bareiss(mat({{0, 1}, {1, 0}})) == Rat(-1));
  CHECK(det_bareiss(Matrix<Rat>(0, 0, Rat())) == Rat(1));
  std::mt19937 rng(11);
  for (int it = 0; it < 20; ++it) {
    auto m = qmtest::random_invertible(rng, 1 + it % 4);
    CHECK(m * inverse(m) == Matrix<Rat>::identity(m.rows(), Rat()));
  }
  CHECK_THROWS_AS(inverse(mat({{1, 2}, {2, 4}})), ShapeError);
}

TEST_CASE("image and kernel bases in reduced echelon form") {
  const auto m = mat({{1, 0}, {0, 1}, {0, 0}});
  const auto im = image(m);
  CHECK(im.dim() == 2);
  CHECK(im.ambient_dim() == 3);
  CHECK(im.basis().at(0, 0) == Rat(1));
  CHECK(im.basis().at(1, 1) == Rat(1));
  CHECK(im.basis().at(0, 2) == Rat(0));

  const auto ker = kernel(mat({{1, 1}}));
  CHECK(ker.dim() == 1);
  // Canonical RREF basis of span{(1,-1)}.
  CHECK(ker.basis().at(0, 0) == Rat(1));
  CHECK(ker.basis().at(0, 1) == Rat(-1));

  CHECK(kernel(Matrix<Rat>::identity(3, Rat())).is_zero());
}

TEST_CASE("rref basis is canonical across spanning sets") {
  const auto a = Subspace<Rat>::from_span_rows(mat({{1, 1, 0}, {0, 0, 1}}));
  const auto b = Subspace<Rat>::from_span_rows(mat({{1, 1, 1}, {2, 2, 1}}));
  CHECK(a == b);
}

TEST_CASE("subspace lattice operations") {
  const auto e1 = Subspace<Rat>::from_span_rows(mat({{1, 0}}));
  const auto e2 = Subspace<Rat>::from_span_rows(mat({{0, 1}}));
  CHECK(subspace_sum(e1, e2).is_full());
  CHECK(subspace_intersect(e1, e2).is_zero());

  const auto plane = Subspace<Rat>::from_span_rows(mat({{1, 0, 0}, {0, 1, 0}}));
  const auto diag = Subspace<Rat>::from_span_rows(mat({{1, 1, 0}}));
  CHECK(subspace_contains(plane, diag));
  CHECK(!subspace_contains(diag, plane));

  const auto e1_3 = Subspace<Rat>::from_span_rows(mat({{1, 0, 0}}));
  CHECK_THROWS_AS(subspace_sum(e1, e1_3), ShapeError);
}

TEST_CASE("dimension formula for sum and intersection") {
  std::mt19937 rng(23);
  for (int it = 0; it < 60; ++it) {
    const int n = 2 + it % 4;
    const auto a = Subspace<Rat>::from_span_rows(random_mat(rng, 1 + it % n, n));
    const auto b = Subspace<Rat>::from_span_rows(random_mat(rng, 1 + (it / 2) % n, n));
    CHECK(subspace_sum(a, b).dim() + subspace_intersect(a, b).dim() == a.dim() + b.dim());
  }
}

TEST_CASE("krylov image") {
  CHECK(krylov_image(mat({{0}}), mat({{1}})).is_full());
  CHECK(krylov_image(mat({{0, 0}, {1, 0}}), mat({{1}, {0}})).is_full());
  CHECK(krylov_image(mat({{1, 2}, {3, 4}}), Matrix<Rat>(2, 1, Rat())).is_zero());
  CHECK(krylov_image(mat({{0, 1}, {0, 0}}), mat({{1}, {0}})).dim() == 1);
}

TEST_CASE("krylov kernel") {
  CHECK(krylov_kernel(Matrix<Rat>::identity(2, Rat()), mat({{1, 1}, {0, 1}})).is_zero());
  CHECK(krylov_kernel(Matrix<Rat>(0, 2, Rat()), mat({{1, 0}, {0, 1}})).is_full());
  CHECK(krylov_kernel(mat({{1, 0}}), mat({{0, 1}, {0, 0}})).is_zero());
}

TEST_CASE("krylov image is the least invariant subspace over im b") {
  // Exhaustive check over F_2 and F_3 at small sizes.
  for (std::uint32_t q : {2u, 3u}) {
    std::mt19937 rng(101 + q);
    for (int it = 0; it < 40; ++it) {
      const int n = 2 + it % 2;
      std::uniform_int_distribution<int> d(0, static_cast<int>(q) - 1);
      Matrix<Fp> a(n, n, Fp::zero(q)), b(n, 1, Fp::zero(q));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = Fp(d(rng), q);
      for (int i = 0; i < n; ++i) b.at(i, 0) = Fp(d(rng), q);
      const auto ki = krylov_image(a, b);
      const auto imb = image(b);
      CHECK(subspace_contains(ki, imb));
      for (const auto& u : enumerate_subspaces(n, q)) {
        // a-invariant and containing im b implies containing the span.
        bool inv = true;
        for (int i = 0; i < u.dim() && inv; ++i)
          inv = u.contains_vector((a * u.basis().row(i).transpose()).transpose());
        if (inv && subspace_contains(u, imb)) CHECK(subspace_contains(u, ki));
      }
    }
  }
}

TEST_CASE("subspace enumeration counts match Gaussian binomials") {
  CHECK(enumerate_subspaces(1, 2).size() == 2);
  CHECK(enumerate_subspaces(2, 2).size() == 5);
  CHECK(enumerate_subspaces(3, 2).size() == 16);
  CHECK(enumerate_subspaces(2, 3).size() == 6);   // 1 + 4 + 1
  CHECK(enumerate_subspaces(0, 2).size() == 1);
  CHECK_THROWS_AS(enumerate_subspaces(13, 2), BudgetError);

  // Pairwise distinct and canonical.
  const auto all = enumerate_subspaces(3, 2);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(all[i] != all[j]);
  for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i].dim() <= all[i + 1].dim());
}

TEST_CASE("fp linear algebra matches rational on integer matrices mod p") {
  std::mt19937 rng(5);
  for (int it = 0; it < 30; ++it) {
    const int r = 1 + it % 4, c = 1 + (it * 7) % 4;
    const auto m = random_mat(rng, r, c, 0, 1);
    Matrix<Fp> mf(r, c, Fp::zero(2));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) mf.at(i, j) = Fp(m.at(i, j).num().get_si(), 2);
    CHECK(rank_bareiss(mf) <= rank_bareiss(m));
  }
}
