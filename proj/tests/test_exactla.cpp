#include <doctest.h>

#include "hopfmod/polynomial.hpp"
#include "hopfmod/subspace.hpp"
#include "support.hpp"

using namespace hopfmod;
using namespace testsupport;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

Matrix ints(const std::vector<std::vector<long>>& rows, Field f = Q) { return Matrix::from_ints(f, rows); }

Scalar q(long n, long d = 1) { return Scalar::from_rational(Q, mpq_class(n, d)); }

}  // namespace

TEST_CASE("scalars stay normalised") {
  CHECK(Scalar::parse(Q, "4/6").to_string() == "2/3");
  CHECK(Scalar::parse(Q, "-3/6").to_string() == "-1/2");
  CHECK(Scalar::parse(Q, "-8/4").to_string() == "-2");
  const Field f5 = Field::prime(5);
  CHECK(Scalar::from_int(f5, -1).residue() == 4);
  CHECK(Scalar::parse(f5, "1/2").residue() == 3);
  CHECK(Scalar::from_int(f5, 12).to_string() == "2");
  CHECK_THROWS_AS(Field::prime(4), FieldError);
  CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), FieldError);
  CHECK_THROWS_AS(Scalar::parse(Q, "x"), FieldError);
  CHECK_THROWS_AS(Scalar::one(Q) + Scalar::one(F2), FieldError);
  CHECK_THROWS_AS(Scalar::one(Q) / Scalar::zero(Q), std::domain_error);
}

TEST_CASE("field arithmetic laws on random scalars") {
  std::mt19937_64 rng(1);
  for (Field f : {Q, Field::prime(7)}) {
    for (int trial = 0; trial < 200; ++trial) {
      const Scalar a = random_scalar(rng, f, 9), b = random_scalar(rng, f, 9), c = random_scalar(rng, f, 9);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a - a == Scalar::zero(f));
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("solve_linear examples") {
  auto x = solve_linear(Matrix::identity(Q, 2), ints({{1}, {2}}));
  REQUIRE(x);
  CHECK(*x == ints({{1}, {2}}));
  CHECK_FALSE(solve_linear(ints({{1, 1}, {1, 1}}), ints({{1}, {0}})));
  x = solve_linear(ints({{2}}), ints({{1}}));
  REQUIRE(x);
  CHECK((*x)[0] == q(1, 2));
  CHECK_THROWS_AS(solve_linear(Matrix::identity(Q, 2), ints({{1}, {2}, {3}})), DimensionError);
  CHECK_THROWS_AS(solve_linear(Matrix::identity(Q, 2), ints({{1}, {2}}, F2)), FieldError);
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(Matrix(Q, 2, 2)) == Matrix::identity(Q, 2));
  CHECK(kernel_basis(Matrix::identity(Q, 3)).cols() == 0);
  const Matrix k = kernel_basis(ints({{1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == -k(1, 0));
  CHECK_FALSE(k(0, 0).is_zero());
}

TEST_CASE("kronecker examples") {
  CHECK(kronecker(Matrix::identity(Q, 2), Matrix::identity(Q, 2)) == Matrix::identity(Q, 4));
  CHECK(kronecker(ints({{0, 1}, {1, 0}}), ints({{1}})) == ints({{0, 1}, {1, 0}}));
  CHECK(kronecker(ints({{2}}), ints({{3}})) == ints({{6}}));
}

TEST_CASE("minimal_polynomial examples") {
  CHECK(minimal_polynomial(Matrix::identity(Q, 2)) == Poly{q(-1), q(1)});
  CHECK(minimal_polynomial(ints({{0, 1}, {0, 0}})) == Poly{q(0), q(0), q(1)});
  CHECK(minimal_polynomial(ints({{1, 0}, {0, 2}})) == Poly{q(2), q(-3), q(1)});
}

TEST_CASE("Bareiss rank agrees with naive elimination") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6, k = rng() % 5;
    for (Field f : {Q, Field::prime(3)}) {
      const Matrix a = k == 0 ? random_matrix(rng, f, rows, cols) : random_low_rank(rng, f, rows, cols, k);
      CHECK(rank(a) == naive_rank(a));
      const Echelon e = row_reduce(a);
      CHECK(e.pivots.size() == naive_rank(a));
      CHECK(row_reduce(e.rref).rref == e.rref);
    }
  }
}

TEST_CASE("kernel_basis spans the kernel over F_2, by enumeration") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 6;
    const Matrix a = random_matrix(rng, F2, rows, cols);
    std::set<std::uint32_t> kernel;
    for (std::uint32_t v = 0; v < (1u << cols); ++v)
      if ((a * from_mask(F2, cols, v)).is_zero()) kernel.insert(v);
    const Matrix k = kernel_basis(a);
    CHECK((a * k).is_zero());
    CHECK(rank(k) == k.cols());
    CHECK(f2_elements(Subspace::span(k)) == kernel);
  }
}

TEST_CASE("solve_linear succeeds exactly when the augmented rank does not grow") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 150; ++trial) {
    const Field f = trial % 2 ? Q : Field::prime(5);
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    const Matrix a = random_low_rank(rng, f, rows, cols, 1 + rng() % 3);
    const Matrix b = trial % 3 == 0 ? a * random_matrix(rng, f, cols, 1) : random_matrix(rng, f, rows, 1);
    const auto x = solve_linear(a, b);
    CHECK(x.has_value() == (rank(a) == rank(hcat(a, b))));
    if (x) CHECK(a * *x == b);
  }
}

TEST_CASE("inverse and solve_matrix") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix a = random_matrix(rng, Q, 4, 4);
    const auto inv = inverse(a);
    CHECK(inv.has_value() == (naive_rank(a) == 4));
    if (inv) {
      CHECK(a * *inv == Matrix::identity(Q, 4));
      const Matrix b = random_matrix(rng, Q, 4, 3);
      CHECK(solve_matrix(a, b) == *inv * b);
    }
  }
}

TEST_CASE("image_basis picks pivot columns") {
  const Matrix a = ints({{1, 2, 0}, {0, 0, 1}, {1, 2, 1}});
  CHECK(image_basis(a) == a.select_cols({0, 2}));
}

TEST_CASE("kronecker rank is multiplicative and products are associative") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const Field f = trial % 2 ? Q : F2;
    const Matrix a = random_low_rank(rng, f, 3, 2, 1 + rng() % 2);
    const Matrix b = random_low_rank(rng, f, 2, 3, 1 + rng() % 2);
    const Matrix c = random_matrix(rng, f, 2, 2);
    CHECK(rank(kronecker(a, b)) == rank(a) * rank(b));
    CHECK(kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c)));
    // mixed product
    const Matrix d = random_matrix(rng, f, 2, 3), e = random_matrix(rng, f, 3, 2);
    CHECK(kronecker(a, b) * kronecker(d, e) == kronecker(a * d, b * e));
  }
}

TEST_CASE("row-major vectorisation identity") {
  std::mt19937_64 rng(7);
  const Matrix x = random_matrix(rng, Q, 2, 3), f = random_matrix(rng, Q, 3, 4), y = random_matrix(rng, Q, 5, 4);
  CHECK((x * f * y.transpose()).vectorized() == kronecker(x, y) * f.vectorized());
  CHECK(Matrix::unvectorize(f.vectorized(), 3, 4) == f);
}

TEST_CASE("tensor_permutation swaps factors") {
  std::mt19937_64 rng(8);
  const Matrix a = random_matrix(rng, Q, 2, 2), b = random_matrix(rng, Q, 3, 3);
  const Matrix swap = tensor_permutation(Q, {2, 3}, {1, 0});
  CHECK(swap * kronecker(a, b) == kronecker(b, a) * swap);
}

TEST_CASE("minimal polynomial annihilates and has least degree") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const Field f = trial % 2 ? Q : Field::prime(3);
    const Matrix a = random_low_rank(rng, f, 4, 4, 1 + rng() % 4);
    const Poly p{random_scalar(rng, f), random_scalar(rng, f), Scalar::one(f)};
    const Matrix pa = evaluate_polynomial(p, a);
    const Poly mp = minimal_polynomial(pa);
    CHECK(evaluate_polynomial(mp, pa).is_zero());
    CHECK(mp.back().is_one());
    // minimality: I, pa, ..., pa^(deg-1) are independent
    Matrix powers(f, 16, 0);
    for (std::size_t e = 0; e < degree(mp); ++e) powers = hcat(powers, power(pa, e).vectorized());
    CHECK(naive_rank(powers) == degree(mp));
  }
}

TEST_CASE("subspaces are canonical") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix g = random_low_rank(rng, Q, 5, 3, 2);
    const Matrix mix = random_matrix(rng, Q, 3, 3);
    const Subspace a = Subspace::span(g);
    CHECK(a.dim() == rank(g));
    if (rank(mix) == 3) CHECK(Subspace::span(g * mix) == a);
    const Subspace b = Subspace::span(random_matrix(rng, Q, 5, 2));
    CHECK((a + b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
    CHECK((a + b).contains(a));
    CHECK(a.contains(a.intersect(b)));
    for (std::size_t c = 0; c < g.cols(); ++c) CHECK(a.coordinates(g.col(c)).has_value());
    const auto comp = a.complement_coordinates();
    CHECK(comp.size() + a.dim() == 5);
  }
}

TEST_CASE("invariant closure is the smallest stable subspace over F_2") {
  std::mt19937_64 rng(11);
  const auto subspaces = all_f2_subspaces(4);
  CHECK(subspaces.size() == 67);
  for (int trial = 0; trial < 15; ++trial) {
    const Matrix op = random_matrix(rng, F2, 4, 4);
    const std::uint32_t seed = 1 + rng() % 15;
    const Subspace closure = invariant_closure({op}, from_mask(F2, 4, seed));
    CHECK(closure.is_invariant(op));
    std::size_t best = 17;
    for (const auto& s : subspaces)
      if (s.count(seed) && f2_stable(s, op, F2)) best = std::min(best, s.size());
    CHECK((1u << closure.dim()) == best);
  }
}

TEST_CASE("polynomial division and irreducibility") {
  const Poly x2m1{q(-1), q(0), q(1)};
  auto [quot, rem] = divide(x2m1, Poly{q(-1), q(1)});
  CHECK(quot == Poly{q(1), q(1)});
  CHECK(trim(rem) == Poly{q(0)});
  CHECK(irreducibility(Poly{q(-2), q(0), q(1)}).verdict == Irreducibility::irreducible);
  const auto r = irreducibility(Poly{q(2), q(-3), q(1)});
  CHECK(r.verdict == Irreducibility::reducible);
  REQUIRE(r.factor);
  CHECK(trim(divide(Poly{q(2), q(-3), q(1)}, *r.factor).second) == Poly{q(0)});
  CHECK(irreducibility(Poly{Scalar::one(F2), Scalar::one(F2), Scalar::one(F2)}).verdict == Irreducibility::irreducible);
  CHECK(irreducibility(Poly{Scalar::one(F2), Scalar::zero(F2), Scalar::one(F2)}).verdict == Irreducibility::reducible);
}
