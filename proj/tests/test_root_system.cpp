#include <doctest.h>

#include "qhi/root_system.hpp"

#include <map>
#include <numeric>
#include <set>

using namespace qhi;

namespace {

const std::vector<std::pair<char, int>> kAllTypesRank8 = {
    {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'A', 6}, {'A', 7}, {'A', 8},
    {'B', 2}, {'B', 3}, {'B', 4}, {'B', 5}, {'B', 6}, {'B', 7}, {'B', 8},
    {'C', 2}, {'C', 3}, {'C', 4}, {'C', 5}, {'C', 6}, {'C', 7}, {'C', 8},
    {'D', 3}, {'D', 4}, {'D', 5}, {'D', 6}, {'D', 7}, {'D', 8},
    {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};

std::size_t expected_positive_count(char t, int r) {
  switch (t) {
    case 'A': return static_cast<std::size_t>(r) * (r + 1) / 2;
    case 'B':
    case 'C': return static_cast<std::size_t>(r) * r;
    case 'D': return static_cast<std::size_t>(r) * (r - 1);
    case 'E': return r == 6 ? 36 : (r == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

long long det_center_order(char t, int r) {
  switch (t) {
    case 'A': return r + 1;
    case 'B':
    case 'C': return 2;
    case 'D': return 4;
    case 'E': return r == 6 ? 3 : (r == 7 ? 2 : 1);
    default: return 1;
  }
}

}  // namespace

TEST_CASE("invalid types are rejected with a named constraint") {
  CHECK_THROWS_WITH_AS(build_root_system('B', 1), doctest::Contains("rank >= 2"),
                       std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('D', 2), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('E', 5), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('F', 3), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('G', 3), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('H', 2), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('A', 0), std::invalid_argument);
}

TEST_CASE("A2 basics") {
  RootDatum d = build_root_system('A', 2);
  CHECK(d.positive_roots.size() == 3);
  CHECK(d.cartan == IntMat{{2, -1}, {-1, 2}});
}

TEST_CASE("G2 has six positive roots") {
  RootDatum d = build_root_system('G', 2);
  CHECK(d.positive_roots.size() == 6);
}

TEST_CASE("C2 realization matches the quaternionic coordinates") {
  RootDatum d = build_root_system('C', 2);
  CHECK(d.simple_roots[0] == RatVec{Rat(1), Rat(-1)});
  CHECK(d.simple_roots[1] == RatVec{Rat(0), Rat(2)});
  CHECK(d.minimal_root == RatVec{Rat(-2), Rat(0)});
}

TEST_CASE("root datum invariants for all types up to rank 8") {
  for (auto [t, r] : kAllTypesRank8) {
    CAPTURE(t);
    CAPTURE(r);
    RootDatum d = build_root_system(t, r);
    CHECK(d.positive_roots.size() == expected_positive_count(t, r));

    // Cartan entries
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j) {
        if (i == j) {
          CHECK(d.cartan[i][j] == 2);
        } else {
          CHECK(d.cartan[i][j] <= 0);
          CHECK(d.cartan[i][j] >= -3);
        }
      }

    // s_i permutes the positive roots other than alpha_i
    std::set<RatVec> pos(d.positive_roots.begin(), d.positive_roots.end());
    for (int i = 1; i <= d.rank; ++i) {
      std::set<RatVec> image;
      for (const auto& beta : pos) {
        if (beta == d.simple_roots[i - 1]) continue;
        image.insert(apply_simple_reflection(d, i, beta));
      }
      for (const auto& b : image) CHECK(pos.count(b) == 1);
      CHECK(image.size() == pos.size() - 1);
    }

    // highest root dominates every root
    for (const auto& beta : d.positive_roots) {
      auto c = d.in_simple_basis(sub(d.highest_root, beta));
      REQUIRE(c);
      for (const auto& x : *c) CHECK(x >= Rat(0));
    }

    // duality of coweights against simple roots
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j)
        CHECK(dot(d.simple_roots[i], d.fundamental_coweights[j]) ==
              Rat(i == j ? 1 : 0));

    // center order equals |det Cartan| and the coweight:coroot lattice index
    CenterStructure cs = center_structure(d);
    CHECK(cs.order == det_center_order(t, r));
    CHECK(cs.representatives.size() == static_cast<std::size_t>(cs.order));

    // w0 is an involution on the simple roots
    const auto& w0 = cs.w0_word;
    CHECK(w0.size() == d.positive_roots.size());
    for (int i = 0; i < d.rank; ++i) {
      RatVec twice = apply_weyl_word(d, w0, apply_weyl_word(d, w0, d.simple_roots[i]));
      CHECK(twice == d.simple_roots[i]);
    }
    // w0 maps the dominant chamber to its negative
    for (int i = 0; i < d.rank; ++i) {
      RatVec img = apply_weyl_word(d, w0, d.fundamental_coweights[i]);
      for (const auto& alpha : d.simple_roots) CHECK(dot(alpha, img) <= Rat(0));
    }

    // extended marks solve the coroot expansion exactly
    std::vector<long long> m = extended_marks(d);
    REQUIRE(m.size() == static_cast<std::size_t>(d.rank + 1));
    CHECK(m.back() == 1);
    RatVec sum = zero_vec(d.ambient_dim);
    for (int i = 0; i < d.rank; ++i)
      sum = add(sum, scale(Rat(m[i]), d.simple_coroots[i]));
    CHECK(sum == d.highest_coroot);
  }
}

TEST_CASE("weyl words act as isometries") {
  RootDatum d = build_root_system('F', 4);
  std::vector<int> word = {1, 3, 2, 4, 1, 2};
  RatMat images;
  for (const auto& c : d.simple_coroots)
    images.push_back(apply_weyl_word(d, word, c));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(dot(images[i], images[j]) == dot(d.simple_coroots[i], d.simple_coroots[j]));
}

TEST_CASE("empty word is the identity and word application composes") {
  RootDatum d = build_root_system('A', 1);
  RatVec v = scale(Rat(1, 2), d.simple_coroots[0]);
  CHECK(apply_weyl_word(d, {}, v) == v);
  CHECK(apply_weyl_word(d, {1}, v) == negate(v));
  CHECK_THROWS_AS(apply_weyl_word(d, {2}, v), std::invalid_argument);
}

TEST_CASE("A2 longest element sends the first coweight to minus the second") {
  RootDatum d = build_root_system('A', 2);
  // oracle: brute force over all six elements
  auto all = enumerate_weyl_group(d);
  CHECK(all.size() == 6);
  std::vector<int> w0;
  bool found = false;
  for (const auto& e : all) {
    bool antidominant = true;
    RatVec img = apply_weyl_word(d, e.word, add(d.fundamental_coweights[0],
                                                d.fundamental_coweights[1]));
    for (const auto& alpha : d.simple_roots)
      antidominant = antidominant && dot(alpha, img) <= Rat(0);
    if (antidominant) {
      w0 = e.word;
      found = true;
    }
  }
  REQUIRE(found);
  CHECK(apply_weyl_word(d, w0, d.fundamental_coweights[0]) ==
        negate(d.fundamental_coweights[1]));
  CHECK(apply_weyl_word(d, longest_element_word(d), d.fundamental_coweights[0]) ==
        negate(d.fundamental_coweights[1]));
}

TEST_CASE("reflection word for an arbitrary root") {
  for (auto [t, r] : {std::pair<char, int>{'C', 2}, {'G', 2}, {'F', 4}, {'D', 4}}) {
    RootDatum d = build_root_system(t, r);
    const RatVec& theta = d.highest_root;
    std::vector<int> w = reflection_word_for_root(d, theta);
    // s_theta acts as the reflection in theta
    for (const auto& c : d.simple_coroots) {
      RatVec expect = sub(c, scale(dot(theta, c), d.highest_coroot));
      CHECK(apply_weyl_word(d, w, c) == expect);
    }
  }
}

TEST_CASE("extended marks reproduce the classical table") {
  auto marks = [](char t, int r) { return extended_marks(build_root_system(t, r)); };
  using LL = std::vector<long long>;
  CHECK(marks('A', 4) == LL{1, 1, 1, 1, 1});
  CHECK(marks('B', 5) == LL{1, 2, 2, 2, 1, 1});
  CHECK(marks('C', 5) == LL{1, 1, 1, 1, 1, 1});
  CHECK(marks('D', 5) == LL{1, 2, 2, 1, 1, 1});
  CHECK(marks('E', 6) == LL{1, 2, 2, 3, 2, 1, 1});
  CHECK(marks('E', 7) == LL{2, 2, 3, 4, 3, 2, 1, 1});
  CHECK(marks('E', 8) == LL{2, 3, 4, 6, 5, 4, 3, 2, 1});
  CHECK(marks('F', 4) == LL{2, 3, 2, 1, 1});
  CHECK(marks('G', 2) == LL{1, 2, 1});
}

TEST_CASE("center orders for the worked examples") {
  CHECK(center_structure(build_root_system('A', 2)).order == 3);
  CHECK(center_structure(build_root_system('C', 2)).order == 2);
  CHECK(center_structure(build_root_system('E', 8)).order == 1);
  CHECK(center_structure(build_root_system('E', 8)).generators.empty());
}

TEST_CASE("weyl enumeration oracle sizes") {
  CHECK(enumerate_weyl_group(build_root_system('A', 2)).size() == 6);
  CHECK(enumerate_weyl_group(build_root_system('C', 2)).size() == 8);
  CHECK(enumerate_weyl_group(build_root_system('G', 2)).size() == 12);
  CHECK(enumerate_weyl_group(build_root_system('A', 3)).size() == 24);
  CHECK_THROWS_AS(enumerate_weyl_group(build_root_system('A', 4)),
                  std::invalid_argument);
}
