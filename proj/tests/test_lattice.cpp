#include <doctest.h>

#include "qhi/lattice.hpp"
#include "qhi/rational.hpp"

using namespace qhi;

TEST_CASE("rational solve and kernel") {
  RatMat a = {{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
  RatVec x;
  REQUIRE(solve_linear(a, {Rat(5), Rat(6)}, x));
  CHECK(x[0] == Rat(-4));
  CHECK(x[1] == Rat(9, 2));

  RatMat singular = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK(!solve_linear(singular, {Rat(0), Rat(1)}, x));
  RatMat k = kernel_basis(singular);
  REQUIRE(k.size() == 1);
  CHECK(dot(singular[0], k[0]) == Rat(0));

  CHECK(rank(RatMat{{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}) == 1);

  RatMat inv = inverse(RatMat{{Rat(2), Rat(0)}, {Rat(0), Rat(4)}});
  CHECK(inv[0][0] == Rat(1, 2));
  CHECK(inv[1][1] == Rat(1, 4));
}

TEST_CASE("smith normal form basics") {
  // d1 = gcd of entries (2), d1*d2 = gcd of 2x2 minors (4), product = |det| (624)
  IntMat a = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  SmithForm s = smith_normal_form(a);
  REQUIRE(s.diagonal.size() == 3);
  CHECK(s.diagonal[0] == 2);
  CHECK(s.diagonal[1] == 2);
  CHECK(s.diagonal[2] == 156);
  for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i)
    if (s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
}

TEST_CASE("integer kernel is saturated") {
  // kernel of (1 2 3) over Z
  IntMat a = {{1, 2, 3}};
  IntMat k = integer_kernel(a);
  REQUIRE(k.size() == 2);
  for (const auto& v : k)
    CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
  // (1,1,-1) is in the kernel and must be an integer combination of the basis
  IntMat sys;
  for (const auto& v : k) sys.push_back(v);
  // solvable: transpose system
  IntMat at(3, IntVec(2));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) at[i][j] = k[j][i];
  CHECK(solvable_over_z(at, {1, 1, -1}));
}

TEST_CASE("sublattice index") {
  IntMat gens = {{2, 0}, {0, 3}};
  CHECK(sublattice_index(gens) == 6);
  IntMat redundant = {{1, 0}, {0, 1}, {5, 7}};
  CHECK(sublattice_index(redundant) == 1);
  CHECK_THROWS_AS(sublattice_index(IntMat{{1, 0}}), std::invalid_argument);
}

TEST_CASE("integral solvability") {
  CHECK(solvable_over_z({{2}}, {4}));
  CHECK(!solvable_over_z({{2}}, {3}));
  CHECK(solvable_over_z({{2, 3}}, {1}));
  CHECK(!solvable_over_z({{2, 4}}, {1}));
}
