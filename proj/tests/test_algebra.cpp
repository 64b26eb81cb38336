#include <doctest.h>

#include "algebra.hpp"
#include "errors.hpp"
#include "support/oracles.hpp"

using namespace eaqmds;

namespace {

Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                     double zero_bias = 0.0) {
  Matrix m(f, rows, cols);
  std::uniform_int_distribution<Elem> pick(0, f->order() - 1);
  std::bernoulli_distribution zero(zero_bias);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, zero(rng) ? 0 : pick(rng));
  }
  return m;
}

std::vector<std::vector<std::uint32_t>> rows_of(const Matrix& m) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

// Rows eta^{zj} of a constacyclic parity check, built directly.
Matrix root_rows(const FieldPtr& f, Elem eta, std::uint64_t n, const std::vector<std::uint64_t>& z) {
  Matrix h(f, z.size(), n);
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::uint64_t j = 0; j < n; ++j) h.set(i, j, f->pow(eta, z[i] * j));
  }
  return h;
}

}  // namespace

TEST_CASE("poly_from_roots") {
  const auto f = Field::create(3, 2);
  const auto one = poly_from_roots(f, {});
  CHECK(one.coefficients() == std::vector<Elem>{1});
  CHECK(one.degree() == 0);

  const Elem a = f->exp(3);
  const std::vector<Elem> single{a};
  const auto lin = poly_from_roots(f, single);
  CHECK(lin.coefficients() == std::vector<Elem>{f->neg(a), 1});

  // Vieta for {alpha, alpha^2}: x^2 - (alpha + alpha^2) x + alpha^3.
  const Elem g = f->primitive();
  const std::vector<Elem> roots{g, f->mul(g, g)};
  const auto quad = poly_from_roots(f, roots);
  REQUIRE(quad.degree() == 2);
  CHECK(quad.is_monic());
  CHECK(quad.coefficients()[0] == f->pow(g, 3));
  CHECK(quad.coefficients()[1] == f->neg(f->add(g, f->mul(g, g))));
  CHECK(quad.evaluate(roots[0]) == 0);
  CHECK(quad.evaluate(roots[1]) == 0);

  const auto other = Field::create(3, 2);
  const std::vector<Elem> bad{9};
  CHECK_THROWS_AS(poly_from_roots(f, bad), InvalidArgument);
  CHECK(Polynomial(f, {1, 0, 0}).degree() == 0);
  CHECK(Polynomial(f, {}).is_zero());
  CHECK(Polynomial(f, {0, 0}).degree() == -1);
}

TEST_CASE("poly_from_roots vanishes exactly on random root multisets") {
  auto rng = oracle::rng();
  for (auto [p, m] : {std::pair{2u, 4u}, {3u, 2u}, {5u, 2u}, {2u, 6u}}) {
    const auto f = Field::create(p, m);
    std::uniform_int_distribution<Elem> pick(0, f->order() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Elem> roots(1 + trial % 6);
      for (auto& r : roots) r = pick(rng);
      const auto g = poly_from_roots(f, roots);
      CHECK(g.is_monic());
      CHECK(g.degree() == static_cast<long>(roots.size()));
      for (Elem x = 0; x < f->order(); ++x) {
        const bool is_root = std::find(roots.begin(), roots.end(), x) != roots.end();
        CHECK((g.evaluate(x) == 0) == is_root);
      }
    }
  }
}

TEST_CASE("matrix construction errors") {
  const auto f = Field::create(2, 2);
  CHECK_THROWS_AS(Matrix(f, 2, 2, {0, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Matrix(f, 1, 2, {0, 4}), InvalidArgument);
  const auto g = Field::create(2, 2);
  CHECK_THROWS_AS(mat_mul(Matrix::identity(f, 2), Matrix::identity(g, 2)), InvalidArgument);
  CHECK_THROWS_AS(mat_mul(Matrix(f, 2, 3), Matrix(f, 2, 3)), InvalidArgument);
  CHECK_THROWS_AS(Matrix(f, 1, 3).stack(Matrix(f, 1, 2)), InvalidArgument);
  // GF(4) is not an extension of GF(3^2).
  CHECK_THROWS_AS(hermitian_adjoint(Matrix::identity(f, 2), 3), InvalidArgument);
}

TEST_CASE("hermitian_adjoint examples") {
  const auto f = Field::create(5, 2);
  const auto id = Matrix::identity(f, 4);
  CHECK(hermitian_adjoint(id, 5) == id);

  auto rng = oracle::rng(7);
  const auto m = random_matrix(f, 3, 5, rng);
  const auto adj = hermitian_adjoint(m, 5);
  REQUIRE(adj.rows() == 5);
  REQUIRE(adj.cols() == 3);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(adj.at(i, j) == f->pow(m.at(j, i), 5));
  }
  CHECK(hermitian_adjoint(adj, 5) == m);

  // h0 = all-ones row maps to the all-ones column.
  Matrix h0(f, 1, 6, std::vector<Elem>(6, 1));
  const auto col = hermitian_adjoint(h0, 5);
  CHECK(col.rows() == 6);
  CHECK(col.cols() == 1);
  for (std::size_t i = 0; i < 6; ++i) CHECK(col.at(i, 0) == 1);
}

TEST_CASE("matrix_rank examples") {
  const auto f = Field::create(3, 2);
  CHECK(matrix_rank(Matrix(f, 3, 4)) == 0);
  CHECK(matrix_rank(Matrix::identity(f, 5)) == 5);
  CHECK(matrix_rank(Matrix(f, 0, 4)) == 0);

  // Gram matrix of q = 2, n = 5, Z = {0, 1, 4}: rows eta^{zj} over GF(16).
  const auto gf16 = Field::create(2, 4);
  const Elem eta = gf16->exp(15 / 5);
  const auto h = root_rows(gf16, eta, 5, {0, 1, 4});
  const auto gram = mat_mul(h, hermitian_adjoint(h, 2));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // sum_j eta^{(z1 + 2 z2) j} vanishes unless z1 + 2 z2 = 0 mod 5.
      CHECK(gram.at(i, j) == ((i == 0 && j == 0) ? 1u : 0u));
    }
  }
  CHECK(matrix_rank(gram) == 1);
}

TEST_CASE("mat_mul examples") {
  auto rng = oracle::rng(11);
  const auto f = Field::create(2, 4);
  const auto a = random_matrix(f, 3, 4, rng);
  CHECK(mat_mul(a, Matrix::identity(f, 4)) == a);
  CHECK(mat_mul(Matrix::identity(f, 3), a) == a);

  // h0 h0^dagger = [n mod p] for n | q^2 - 1.
  for (auto [q, p, m] : {std::tuple{5u, 5u, 2u}, {3u, 3u, 2u}, {4u, 2u, 4u}, {7u, 7u, 2u}}) {
    const auto fq = Field::create(p, m);
    for (auto n : {q * q - 1, (q * q - 1) / 2}) {
      if (n < 2) continue;
      Matrix h0(fq, 1, n, std::vector<Elem>(n, 1));
      const auto g = mat_mul(h0, hermitian_adjoint(h0, q));
      CHECK(g.at(0, 0) == fq->from_int(n));
      CHECK(g.at(0, 0) != 0);
    }
  }

  // H1 H1^dagger = 0 for Z1 = C1 u C2, q = 4, n = 17 over GF(256).
  const auto gf256 = Field::create(2, 8);
  const Elem eta = gf256->exp(255 / 17);
  const auto h1 = root_rows(gf256, eta, 17, {1, 2, 15, 16});
  CHECK(mat_mul(h1, hermitian_adjoint(h1, 4)).is_zero());
  const auto h = root_rows(gf256, eta, 17, {0, 1, 2, 15, 16});
  CHECK_FALSE(mat_mul(h, hermitian_adjoint(h, 4)).is_zero());
}

TEST_CASE("mat_mul is associative on random triples") {
  auto rng = oracle::rng(13);
  for (auto [p, m] : {std::pair{2u, 2u}, {3u, 2u}, {5u, 2u}, {2u, 8u}, {7u, 2u}}) {
    const auto f = Field::create(p, m);
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_matrix(f, 3, 4, rng);
      const auto b = random_matrix(f, 4, 2, rng);
      const auto c = random_matrix(f, 2, 5, rng);
      CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
    }
  }
}

TEST_CASE("rank agrees with the reference elimination and with the adjoint") {
  auto rng = oracle::rng(17);
  struct FC {
    std::uint32_t p, m, q;
  };
  for (const FC& c : {FC{2, 2, 2}, FC{3, 2, 3}, FC{5, 2, 5}, FC{2, 4, 4}, FC{2, 4, 2},
                      FC{3, 4, 3}}) {
    const auto f = Field::create(c.p, c.m);
    const oracle::RefField ref(c.p, f->modulus());
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + trial % 6;
      const std::size_t cols = 1 + (trial * 7) % 8;
      // Low-rank products make rank deficiency common.
      const std::size_t inner = 1 + trial % 3;
      const auto m = trial % 2 ? random_matrix(f, rows, cols, rng, 0.4)
                               : mat_mul(random_matrix(f, rows, inner, rng),
                                         random_matrix(f, inner, cols, rng));
      const auto r = matrix_rank(m);
      CHECK(r == oracle::rank(ref, rows_of(m)));
      CHECK(r == matrix_rank(hermitian_adjoint(m, c.q)));
      CHECK(r == matrix_rank(m.transpose()));
    }
  }
}

TEST_CASE("nullspace_basis") {
  const auto f9 = Field::create(3, 2);
  CHECK(nullspace_basis(Matrix::identity(f9, 4)).rows() == 0);

  Matrix ones(f9, 1, 4, std::vector<Elem>(4, 1));
  const auto g = nullspace_basis(ones);
  CHECK(g.rows() == 3);
  CHECK(matrix_rank(g) == 3);
  CHECK(mat_mul(ones, g.transpose()).is_zero());

  CHECK(nullspace_basis(Matrix(f9, 0, 3)) == Matrix::identity(f9, 3));

  // [17, 12, 6] cyclic code over GF(256): 12 rows annihilated by H.
  const auto gf256 = Field::create(2, 8);
  const auto h = root_rows(gf256, gf256->exp(255 / 17), 17, {0, 1, 2, 15, 16});
  const auto g17 = nullspace_basis(h);
  CHECK(g17.rows() == 12);
  CHECK(mat_mul(h, g17.transpose()).is_zero());

  auto rng = oracle::rng(19);
  for (auto [p, m] : {std::pair{2u, 4u}, {5u, 2u}, {3u, 3u}}) {
    const auto f = Field::create(p, m);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t rows = 1 + trial % 5;
      const std::size_t cols = 2 + trial % 7;
      const auto hm = random_matrix(f, rows, cols, rng, 0.3);
      const auto gm = nullspace_basis(hm);
      CHECK(gm.rows() == cols - matrix_rank(hm));
      CHECK(matrix_rank(gm) == gm.rows());
      if (gm.rows() > 0) CHECK(mat_mul(hm, gm.transpose()).is_zero());
    }
  }
}

TEST_CASE("row_reduce yields reduced echelon form with first-nonzero pivots") {
  const auto f = Field::create(5, 1);
  Matrix m(f, 3, 4, {0, 2, 4, 1,  //
                     0, 1, 2, 3,  //
                     0, 0, 0, 1});
  const auto pivots = row_reduce(m);
  CHECK(pivots == std::vector<std::size_t>{1, 3});
  CHECK(m == Matrix(f, 3, 4, {0, 1, 2, 0, 0, 0, 0, 1, 0, 0, 0, 0}));
}

TEST_CASE("to_text dumps") {
  const auto f = Field::create(3, 2);
  Matrix m(f, 2, 2, {0, 1, f->primitive(), 0});
  CHECK(m.to_text() == "- 0\n1 -\n");
  Field::Options plain;
  plain.use_tables = false;
  const auto fp = Field::create(3, 2, plain);
  Matrix mp(fp, 1, 2, {0, 5});
  CHECK(mp.to_text() == "(0,0) (2,1)\n");
}
