#include <doctest.h>

#include "divfree/linalg.hpp"

using namespace divfree;

namespace {
Rational q(long n, long d = 1) { return Rational(n, d); }
}

TEST_CASE("rank of frozen matrices") {
  CHECK(rank({{q(1), q(2)}, {q(2), q(4)}}) == 1);
  CHECK(rank({{q(1), q(2)}, {q(0), q(1)}}) == 2);
  CHECK(rank({{q(1, 2), q(1, 3), q(0)}, {q(0), q(1), q(0)}}) == 2);
  CHECK(rank({}) == 0);
}

TEST_CASE("nullspace vectors annihilate the matrix") {
  Matrix m{{q(1), q(2), q(3)}, {q(2), q(4), q(6)}};
  Matrix ns = nullspace(m);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) {
    for (const auto& row : m) {
      Rational dot(0);
      for (std::size_t k = 0; k < v.size(); ++k) dot += row[k] * v[k];
      CHECK(dot == 0);
    }
  }
}

TEST_CASE("inverse round-trip") {
  Matrix m{{q(1, 2), q(0), q(0)}, {q(1, 3), q(1), q(0)}, {q(0), q(-1, 2), q(1)}};
  Matrix inv = inverse(m);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Rational e(0);
      for (int k = 0; k < 3; ++k) e += m[i][k] * inv[k][j];
      CHECK(e == (i == j ? q(1) : q(0)));
    }
  }
  CHECK_THROWS(inverse(Matrix{{q(1), q(2)}, {q(2), q(4)}}));
}

TEST_CASE("solve_row finds exact solutions and rejects inconsistency") {
  Matrix m{{q(1), q(2)}, {q(0), q(1)}};
  auto x = solve_row(m, {q(3), q(7)});  // x*m = (3,7)
  REQUIRE(x);
  CHECK((*x)[0] * m[0][0] + (*x)[1] * m[1][0] == q(3));
  CHECK((*x)[0] * m[0][1] + (*x)[1] * m[1][1] == q(7));

  Matrix singular{{q(1), q(2)}, {q(2), q(4)}};
  CHECK(!solve_row(singular, {q(1), q(0)}));
  CHECK(solve_row(singular, {q(3), q(6)}));
}

TEST_CASE("SpanBasis membership is exact linear span") {
  SpanBasis<int> span;
  using Vec = SpanBasis<int>::Vec;
  CHECK(span.insert(Vec{{0, q(1)}, {1, q(2)}}));
  CHECK(span.insert(Vec{{1, q(1)}, {2, q(-1)}}));
  CHECK(!span.insert(Vec{{0, q(2)}, {1, q(5)}, {2, q(-1)}}));  // 2*r1 + r2
  CHECK(span.dimension() == 2);
  CHECK(span.contains(Vec{{0, q(1, 3)}, {1, q(2, 3)}}));
  CHECK(!span.contains(Vec{{2, q(1)}}));
  CHECK(span.insert(Vec{{2, q(1)}}));
  CHECK(span.contains(Vec{{0, q(1)}}));
  CHECK(span.dimension() == 3);
}

TEST_CASE("SpanBasis reduce eliminates pivot slots entirely") {
  // Regression: reducing a vector that shares a pivot key with a stored row
  // must clear that key, not just subtract the row remainder.
  SpanBasis<int> span;
  using Vec = SpanBasis<int>::Vec;
  span.insert(Vec{{3, q(1)}, {7, q(2)}});
  Vec r = span.reduce(Vec{{3, q(5)}, {9, q(1)}});
  CHECK(r.find(3) == r.end());
  CHECK(r.at(7) == q(-10));
  CHECK(r.at(9) == q(1));

  // Combinations of overlapping rows with non-extreme pivots stay inside.
  SpanBasis<int> s2;
  s2.insert(Vec{{1, q(1)}, {2, q(1)}, {3, q(1)}});
  s2.insert(Vec{{2, q(1)}, {3, q(1)}});
  s2.insert(Vec{{3, q(1)}, {4, q(1)}});
  CHECK(s2.contains(Vec{{1, q(2)}, {2, q(3)}, {3, q(4)}, {4, q(1)}}));
  CHECK(!s2.contains(Vec{{5, q(1)}}));
}
