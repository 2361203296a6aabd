#include "checks.hpp"
#include "doctest.h"
#include "polar/errors.hpp"
#include "polar/experiment.hpp"
#include "polar/families.hpp"
#include "polar/parse.hpp"

using namespace polar;

namespace {

const PrimeField k;

Polynomial P(const char* s, int n) { return parse_polynomial(s, n, k); }

}  // namespace

TEST_CASE("singular family construction") {
  CHECK_THROWS_AS(build_family_31(5, 1), PreconditionError);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    Family31Instance inst = build_family_31(6, seed);
    CHECK(evaluate(inst.F1, inst.xi) == k.zero());
    CHECK(evaluate(inst.F2, inst.xi) == k.zero());
    CHECK(verify_smooth_complete_intersection(std::vector<Polynomial>{inst.F1, inst.F2}).passed());
    CHECK(rank(inst.a) == 4);
  }
}

TEST_CASE("singular witness checks hold on n = 6") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    WitnessReport r = verify_singular_witness(build_family_31(6, seed));
    CHECK(r.passed());
    CHECK(r.identity_holds);
    CHECK(r.rank_with_det == 2);
    CHECK(r.rank_without_det == 2);
    CHECK(r.polar_dim == 3);
    // the literal pairing from the text is not an identity, but vanishes at xi
    CHECK_FALSE(r.swapped_identity_holds);
    CHECK(r.swapped_identity_at_xi);
  }
}

TEST_CASE("Example 1 transform") {
  CHECK(example1_parameter_count(5, 2) == 6);
  MeagerMatrixZ zero = example1_transform(5, 2, 1, Point(6, k.zero()));
  CHECK(zero.A == ConstMatrix::identity(k, 5));
  CHECK(zero.B == ConstMatrix(k, {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));

  SplitMix64 rng(51);
  for (int t = 0; t < 10; ++t) {
    const int n = 3 + t % 3, p = 1 + t % 2;
    Point z = random_point(rng, k, example1_parameter_count(n, p));
    for (int i = 1; i <= n - p; ++i) {
      MeagerMatrixZ m = example1_transform(n, p, i, z);
      const int rows = n - p - i + 1;
      ConstMatrix expected(k, rows, n);
      for (int r = 0; r < rows; ++r) expected.at(r, p + i - 1 + r) = k.one();
      CHECK(m.B * m.A == expected);
      if (i < n - p) {
        MeagerMatrixZ next = example1_transform(n, p, i + 1, z);
        std::vector<int> tail, all;
        for (int r = 1; r < rows; ++r) tail.push_back(r);
        for (int c = 0; c < n; ++c) all.push_back(c);
        CHECK(next.B == m.B.submatrix(tail, all));
      }
    }
  }
}

TEST_CASE("Example 1 identity holds symbolically") {
  for (int n = 3; n <= 5; ++n)
    for (int p = 1; p < n; ++p)
      for (int i = 1; i <= n - p; ++i) {
        SymbolicExample1 s = example1_symbolic(n, p, i);
        const int rows = n - p - i + 1;
        for (int r = 0; r < rows; ++r)
          for (int c = 0; c < n; ++c) {
            Polynomial acc(k, s.A.nvars());
            for (int t = 0; t < n; ++t) acc = acc + s.B.at(r, t) * s.A.at(t, c);
            CHECK(acc == Polynomial::constant(k, s.A.nvars(), c == p + i - 1 + r ? 1 : 0));
          }
      }
}

TEST_CASE("Example 2 matrices") {
  Point gamma{k.from_uint(2), k.from_uint(3), k.from_uint(4)};
  ConstMatrix m = example2_matrix(4, 1, 1, gamma, Point{k.from_uint(9)});
  CHECK(m == ConstMatrix(k, {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {1, 2, 3, 4, 9}}));
  CHECK_THROWS_AS(example2_matrix(4, 1, 1, Point{k.one(), k.one(), k.zero()}, Point{k.one()}), PreconditionError);
  CHECK(leading_jacobian_minor(std::vector<Polynomial>{P("x1^2+x2^2-1", 2)}) == Polynomial::constant(k, 2, 1));
}

TEST_CASE("Example 2 chain on a random quadric system") {
  CellDraw draw = draw_cell(5, 2, k, 3, 5);
  REQUIRE(draw.ok);
  SplitMix64 rng(52);
  Point gamma = random_point(rng, k, 5);
  ChainReport r = example2_chain(draw.system, gamma, 52);
  CHECK(r.passed());
  REQUIRE(r.levels.size() == 3);
  for (const ChainLevel& level : r.levels) {
    if (level.dim >= 0) CHECK(level.dim == 5 - 2 - level.i);
    CHECK(level.singular_dim == -1);
  }
  CHECK(r.levels.back().dim == 0);
  CHECK(r.levels.back().degree >= 1);
  CHECK(r.levels.back().degree <= bezout_polar_bound(draw.system));
}

TEST_CASE("degree comparison") {
  std::vector<Polynomial> circle{P("x1^2+x2^2-1", 2)};
  DegreeComparison c = degree_domination_check(circle, 1, 3, 53);
  CHECK(c.passed());
  for (std::uint64_t d : c.random_classic) CHECK(d == 2);
  for (std::uint64_t d : c.meager_classic) CHECK(d <= 2);

  CellDraw draw = draw_cell(3, 2, k, 4, 5);
  REQUIRE(draw.ok);
  CHECK(bezout_polar_bound(draw.system) == 16);
  CHECK(degree_domination_check(draw.system, 1, 2, 54).passed());
}
