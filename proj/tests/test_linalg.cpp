#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nakayama/linalg.hpp"

#include <random>

using namespace nakayama;

namespace {

template <class S>
Matrix<S> random_matrix(std::mt19937& rng, Index rows, Index cols) {
  // small entries and many zeros, so that rank deficiency is common
  std::uniform_int_distribution<int> entry(-2, 2);
  Matrix<S> m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = S(entry(rng) * (entry(rng) == 0 ? 0 : 1));
  return m;
}

template <class S>
Subspace<S> random_subspace(std::mt19937& rng, Index ambient) {
  std::uniform_int_distribution<int> k(0, static_cast<int>(ambient));
  return image(random_matrix<S>(rng, ambient, k(rng)));
}

template <class S>
void property_suite() {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> size(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const Index r = size(rng), c = size(rng);
    const auto m = random_matrix<S>(rng, r, c);
    const auto ker = kernel(m);
    CHECK(ker.dim() + rank(m) == c);
    if (ker.dim() > 0) CHECK(is_zero_matrix(Matrix<S>(m * ker.columns())));

    const auto a = random_subspace<S>(rng, 5), b = random_subspace<S>(rng, 5);
    CHECK(subspace_sum(a, b).dim() + subspace_intersect(a, b).dim() == a.dim() + b.dim());

    // rhs inside the image is always solvable, and exactly
    const auto x0 = random_matrix<S>(rng, c, 2);
    const Matrix<S> rhs = m * x0;
    const auto x = solve(m, rhs);
    REQUIRE(x);
    CHECK(is_zero_matrix(Matrix<S>(m * *x - rhs)));
  }
}

}  // namespace

TEST_CASE("rref examples") {
  const Matrix<Rational> id = Matrix<Rational>::Identity(2, 2);
  auto e = rref(id);
  CHECK(e.rank == 2);
  CHECK(e.form == id);

  e = rref(Matrix<Rational>(Matrix<Rational>::Zero(3, 2)));
  CHECK(e.rank == 0);
  CHECK(is_zero_matrix(e.form));

  Matrix<Rational> m(2, 2);
  m << 1, 2, 2, 4;
  e = rref(m);
  CHECK(e.rank == 1);
  Matrix<Rational> expected(2, 2);
  expected << 1, 2, 0, 0;
  CHECK(e.form == expected);
  CHECK(e.pivots == std::vector<Index>{0});
}

TEST_CASE("kernel, image and intersections") {
  CHECK(kernel(Matrix<Rational>(Matrix<Rational>::Identity(3, 3))).dim() == 0);

  Matrix<Rational> col(2, 1);
  col << 1, 1;
  const auto im = image(col);
  CHECK(im.dim() == 1);
  CHECK(im.ambient() == 2);
  CHECK(im.contains(Vector<Rational>(col.col(0))));

  Matrix<Rational> e1(2, 1), e2(2, 1);
  e1 << 1, 0;
  e2 << 0, 1;
  CHECK(subspace_intersect(image(e1), image(e2)).dim() == 0);
  CHECK(subspace_sum(image(e1), image(e2)).dim() == 2);
}

TEST_CASE("solve reports inconsistent systems") {
  Matrix<Rational> m(2, 1), rhs(2, 1);
  m << 1, 0;
  rhs << 0, 1;
  CHECK_FALSE(solve(m, rhs));
}

TEST_CASE("inverse over the rationals") {
  Matrix<Rational> m(2, 2);
  m << 2, 1, 1, 1;
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(Matrix<Rational>(m * *inv) == Matrix<Rational>::Identity(2, 2));
  Matrix<Rational> singular(2, 2);
  singular << 1, 2, 2, 4;
  CHECK_FALSE(inverse(singular));
}

TEST_CASE("linear algebra properties over Q") { property_suite<Rational>(); }

TEST_CASE("linear algebra properties over F_101 and F_3") {
  {
    const ModulusGuard guard(101);
    property_suite<ModP>();
  }
  const ModulusGuard guard(3);
  property_suite<ModP>();
}

TEST_CASE("prime field arithmetic") {
  const ModulusGuard guard(7);
  CHECK(ModP(3) * ModP(5) == ModP(1));
  CHECK(ModP(3).inverse() == ModP(5));
  CHECK(ModP(-1) == ModP(6));
  CHECK(ModP(10) / ModP(5) == ModP(2));
  CHECK(is_prime(101));
  CHECK_FALSE(is_prime(100));
  CHECK_THROWS(FieldSpec::parse("fp:100"));
  CHECK(FieldSpec::parse("fp:101") == FieldSpec::prime(101));
  CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
}

TEST_CASE("modulus is per thread and restored") {
  const ModulusGuard outer(5);
  {
    const ModulusGuard inner(11);
    CHECK(ModP::modulus() == 11);
  }
  CHECK(ModP::modulus() == 5);
}
