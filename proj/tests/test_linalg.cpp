#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "refrig/random.hpp"

using namespace refrig;

TEST_CASE("rational text round trip") {
  CHECK(to_fraction_string(Rational(3, 6)) == "1/2");
  CHECK(to_fraction_string(Rational(-4)) == "-4/1");
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("+2/3") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("primitive integer rows") {
  const auto r = primitive_integer_row({Rational(1, 2), Rational(-3, 4), Rational(0)});
  REQUIRE(r.size() == 3);
  CHECK(r[0] == 2);
  CHECK(r[1] == -3);
  CHECK(r[2] == 0);
  const auto z = primitive_integer_row({Rational(0), Rational(0)});
  CHECK(z[0] == 0);
  CHECK(z[1] == 0);
}

TEST_CASE("vector helpers") {
  CHECK(perp(Vec2(1, 0)) == Vec2(0, 1));
  CHECK(perp(Vec2(2, 3)) == Vec2(-3, 2));
  CHECK(mirror(Vec2(2, 3)) == Vec2(-2, 3));
  CHECK(parallel(Vec2(2, 4), Vec2(-1, -2)));
  CHECK_FALSE(parallel(Vec2(1, 0), Vec2(0, 1)));
}

TEST_CASE("rank and nullspace agree with a rational RREF oracle") {
  Sampler s(42, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 7, cols = 1 + (trial / 7) % 8;
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(s.integer(), 1 + std::abs(s.integer()));
    // force some dependencies
    if (rows > 2)
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * 3 - m(1, c);
    const auto expected = oracle::rref_rank(m);
    CHECK(rank(m) == expected);
    const auto kernel = nullspace(m);
    CHECK(kernel.size() == cols - expected);
    for (const auto& v : kernel) {
      std::vector<Rational> q(v.begin(), v.end());
      for (std::size_t r = 0; r < rows; ++r) CHECK(sgn(apply_row(m, r, q)) == 0);
    }
    // kernel vectors are independent
    if (!kernel.empty()) {
      Matrix k(kernel.size(), cols);
      for (std::size_t i = 0; i < kernel.size(); ++i)
        for (std::size_t c = 0; c < cols; ++c) k(i, c) = kernel[i][c];
      CHECK(oracle::rref_rank(k) == kernel.size());
    }
  }
}

TEST_CASE("edge cases of elimination") {
  CHECK(rank(Matrix(0, 3)) == 0);
  CHECK(nullspace(Matrix(0, 3)).size() == 3);
  CHECK(rank(Matrix(3, 0)) == 0);
  Matrix z(2, 2);
  CHECK(rank(z) == 0);
  Matrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 4;
  m(1, 0) = 1;
  m(1, 1) = 2;
  CHECK(rank(m) == 1);
  const auto k = nullspace(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -2);
  CHECK(k[0][1] == 1);
  CHECK(m.without_row(0).rows() == 1);
}
