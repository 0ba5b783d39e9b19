#include <doctest.h>

#include "qhi/alcove.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace qhi;

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

RatVec rat_point(std::initializer_list<Rat> xs) { return RatVec(xs); }

// deterministic small random rationals
RatVec random_rat_vec(std::mt19937_64& eng, int dim) {
  std::uniform_int_distribution<long long> num(-24, 24);
  RatVec v(dim);
  for (auto& x : v) x = Rat(num(eng), 8);
  return v;
}

}  // namespace

TEST_CASE("face counts and dimension census") {
  for (auto [t, r] : {std::pair<char, int>{'A', 1}, {'A', 2}, {'C', 2}, {'G', 2},
                      {'A', 3}, {'B', 3}, {'F', 4}, {'D', 4}}) {
    CAPTURE(t);
    CAPTURE(r);
    AlcoveComplex cx(build_root_system(t, r));
    CHECK(cx.face_count() == (1 << (r + 1)) - 1);
    std::vector<int> by_dim(r + 1, 0);
    for (int f = 0; f < cx.face_count(); ++f) {
      const auto& face = cx.face(f);
      CHECK(face.dim == r - static_cast<int>(face.wall_set.size()));
      ++by_dim[face.dim];
      // interior point: equalities exactly on R_sigma walls, strict inside
      const RootDatum& d = cx.datum();
      for (int i = 1; i <= r; ++i) {
        const Rat v = dot(d.simple_roots[i - 1], face.interior_point);
        const bool on_wall =
            std::find(face.wall_set.begin(), face.wall_set.end(), i) != face.wall_set.end();
        CHECK(v >= Rat(0));
        CHECK((v == Rat(0)) == on_wall);
      }
      const Rat tv = dot(d.highest_root, face.interior_point);
      const bool on_level_one = std::find(face.wall_set.begin(), face.wall_set.end(),
                                          r + 1) != face.wall_set.end();
      CHECK(tv <= Rat(1));
      CHECK((tv == Rat(1)) == on_level_one);
      CHECK(cx.face_of_point(face.interior_point) == f);
    }
    for (int k = 0; k <= r; ++k) CHECK(by_dim[k] == binom(r + 1, k + 1));
    CHECK(cx.face(cx.open_face()).dim == r);
  }
}

TEST_CASE("A1 alcove is a segment") {
  AlcoveComplex cx(build_root_system('A', 1));
  CHECK(cx.face_count() == 3);
  int vertices = 0, edges = 0;
  for (int f = 0; f < cx.face_count(); ++f)
    (cx.face(f).dim == 0 ? vertices : edges) += 1;
  CHECK(vertices == 2);
  CHECK(edges == 1);
}

TEST_CASE("C2 alcove matches the isosceles right triangle") {
  AlcoveComplex cx(build_root_system('C', 2));
  CHECK(cx.face_count() == 7);
  // vertices: origin, (1/2,1/2), (1/2,0)
  std::set<RatVec> vs;
  for (int j = 1; j <= 3; ++j) vs.insert(cx.vertex(j));
  CHECK(vs.count(rat_point({Rat(0), Rat(0)})) == 1);
  CHECK(vs.count(rat_point({Rat(1, 2), Rat(1, 2)})) == 1);
  CHECK(vs.count(rat_point({Rat(1, 2), Rat(0)})) == 1);
}

TEST_CASE("face poset ordering and monotonicity of R_sigma") {
  AlcoveComplex cx(build_root_system('C', 2));
  for (int s = 0; s < cx.face_count(); ++s)
    for (int t = 0; t < cx.face_count(); ++t) {
      if (!cx.leq(s, t)) continue;
      // walls(s) contains walls(t)
      for (int w : cx.face(t).wall_set)
        CHECK(std::find(cx.face(s).wall_set.begin(), cx.face(s).wall_set.end(), w) !=
              cx.face(s).wall_set.end());
      auto rs = face_root_data(cx, s).r_sigma_positive;
      auto rt = face_root_data(cx, t).r_sigma_positive;
      CHECK(std::includes(rs.begin(), rs.end(), rt.begin(), rt.end()));
    }
}

TEST_CASE("face base invariants across types") {
  for (auto [t, r] : {std::pair<char, int>{'A', 2}, {'C', 2}, {'G', 2}, {'B', 3},
                      {'A', 3}, {'F', 4}, {'D', 4}}) {
    CAPTURE(t);
    CAPTURE(r);
    AlcoveComplex cx(build_root_system(t, r));
    for (int f = 0; f < cx.face_count(); ++f) {
      FaceRootData data = face_root_data(cx, f);
      CHECK(static_cast<int>(data.b_sigma.size()) + cx.face(f).dim == r);
      CHECK(data.dim_k_sigma ==
            r + 2 * static_cast<int>(data.r_sigma_positive.size()));
      for (long long v : data.alpha_sigma_values) CHECK((v == 0 || v == 1));
    }
  }
}

TEST_CASE("face data for the worked examples") {
  SUBCASE("A2 edges give one A1 factor of dimension three") {
    AlcoveComplex cx(build_root_system('A', 2));
    for (int f = 0; f < cx.face_count(); ++f) {
      if (cx.face(f).dim != 1) continue;
      FaceRootData data = face_root_data(cx, f);
      CHECK(data.component_types == std::vector<std::string>{"A1"});
      CHECK(data.dim_commutator == 3);
    }
  }
  SUBCASE("C2 centralizer table row for row") {
    AlcoveComplex cx(build_root_system('C', 2));
    auto types_at = [&](const RatVec& p) {
      return face_root_data(cx, cx.face_of_point(p)).component_types;
    };
    using V = std::vector<std::string>;
    // open face
    CHECK(face_root_data(cx, cx.open_face()).component_types.empty());
    CHECK(face_root_data(cx, cx.open_face()).dim_k_sigma == 2);
    // hypotenuse (t,t), right edges (t,0) and (1/2,t)
    CHECK(types_at(rat_point({Rat(1, 4), Rat(1, 4)})) == V{"A1"});
    CHECK(types_at(rat_point({Rat(1, 4), Rat(0)})) == V{"A1"});
    CHECK(types_at(rat_point({Rat(1, 2), Rat(1, 4)})) == V{"A1"});
    // central vertices carry the full group
    CHECK(types_at(rat_point({Rat(0), Rat(0)})) == V{"C2"});
    CHECK(types_at(rat_point({Rat(1, 2), Rat(1, 2)})) == V{"C2"});
    // the quaternionic vertex
    CHECK(types_at(rat_point({Rat(1, 2), Rat(0)})) == V{"A1", "A1"});
    CHECK(face_root_data(cx, cx.face_of_point(rat_point({Rat(1, 2), Rat(0)})))
              .dim_commutator == 6);
  }
  SUBCASE("open face has empty data everywhere") {
    for (auto [t, r] : {std::pair<char, int>{'A', 4}, {'B', 4}, {'G', 2}}) {
      AlcoveComplex cx(build_root_system(t, r));
      FaceRootData data = face_root_data(cx, cx.open_face());
      CHECK(data.r_sigma_positive.empty());
      CHECK(data.b_sigma.empty());
      CHECK(data.dim_k_sigma == r);
    }
  }
}

TEST_CASE("reduction into the alcove") {
  SUBCASE("interior point is fixed with the identity word") {
    RootDatum d = build_root_system('A', 2);
    AlcoveComplex cx(d);
    const RatVec p = cx.face(cx.open_face()).interior_point;
    ReduceResult res = reduce_to_alcove(d, p);
    CHECK(res.reduced == p);
    CHECK(res.word.linear_word.empty());
    CHECK(is_zero(res.word.translation));
  }
  SUBCASE("A1 level 3/2 reduces to level 1/2") {
    RootDatum d = build_root_system('A', 1);
    RatVec xi = scale(Rat(3, 4), d.simple_coroots[0]);  // alpha(xi) = 3/2
    CHECK(dot(d.simple_roots[0], xi) == Rat(3, 2));
    ReduceResult res = reduce_to_alcove(d, xi);
    CHECK(dot(d.simple_roots[0], res.reduced) == Rat(1, 2));
  }
  SUBCASE("A2 center translate of the barycenter reduces by the 3-cycle") {
    RootDatum d = build_root_system('A', 2);
    AlcoveComplex cx(d);
    RatVec beta = zero_vec(d.ambient_dim);
    for (int j = 1; j <= 3; ++j) beta = add(beta, cx.vertex(j));
    beta = scale(Rat(1, 3), beta);
    const RatVec sigma1 = d.fundamental_coweights[0];
    ReduceResult res = reduce_to_alcove(d, add(sigma1, beta));
    CHECK(res.reduced == beta);
    // the linear part is x -> (x3, x1, x2)
    auto cycle = [](const RatVec& v) { return RatVec{v[2], v[0], v[1]}; };
    for (const auto& c : d.simple_coroots)
      CHECK(apply_weyl_word(d, res.word.linear_word, c) == cycle(c));
  }
  SUBCASE("idempotent and affine-invariant") {
    std::mt19937_64 eng(20240811);
    for (auto [t, r] : {std::pair<char, int>{'C', 2}, {'G', 2}, {'A', 3}, {'B', 3}}) {
      RootDatum d = build_root_system(t, r);
      for (int trial = 0; trial < 12; ++trial) {
        RatVec xi = random_rat_vec(eng, d.ambient_dim);
        // project into the root span so the reduction acts on the Cartan part
        RatVec xi_span = zero_vec(d.ambient_dim);
        for (int i = 0; i < d.rank; ++i) {
          const Rat c = dot(d.simple_roots[i], xi);
          xi_span = add(xi_span, scale(c, d.fundamental_coweights[i]));
        }
        ReduceResult res = reduce_to_alcove(d, xi_span);
        AlcoveComplex cx(d);
        CHECK(cx.in_closed_alcove(res.reduced));
        ReduceResult res2 = reduce_to_alcove(d, res.reduced);
        CHECK(res2.reduced == res.reduced);
        CHECK(res2.word.linear_word.empty());
        // scramble with a random affine word and reduce again
        std::uniform_int_distribution<int> refl(1, d.rank);
        RatVec moved = xi_span;
        for (int s = 0; s < 6; ++s)
          moved = apply_simple_reflection(d, refl(eng), moved);
        moved = add(moved, d.simple_coroots[refl(eng) - 1]);
        CHECK(reduce_to_alcove(d, moved).reduced == res.reduced);
      }
    }
  }
}

TEST_CASE("vertex centrality") {
  SUBCASE("A2 all vertices central") {
    AlcoveComplex cx(build_root_system('A', 2));
    for (const auto& v : vertices_and_centrality(cx)) CHECK(v.is_central);
  }
  SUBCASE("C2 vertex pattern from the table") {
    AlcoveComplex cx(build_root_system('C', 2));
    for (const auto& v : vertices_and_centrality(cx)) {
      if (v.coordinates == RatVec{Rat(1, 2), Rat(0)})
        CHECK(!v.is_central);
      else
        CHECK(v.is_central);
    }
  }
  SUBCASE("count equals center order for all types up to rank 8") {
    for (auto [t, r] : {std::pair<char, int>{'A', 8}, {'B', 8}, {'C', 8}, {'D', 8},
                        {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2},
                        {'A', 5}, {'B', 5}, {'C', 5}, {'D', 5}}) {
      CAPTURE(t);
      CAPTURE(r);
      RootDatum d = build_root_system(t, r);
      AlcoveComplex cx(d);
      long long central = 0;
      for (const auto& v : vertices_and_centrality(cx)) central += v.is_central;
      CHECK(central == center_structure(d).order);
    }
  }
}

TEST_CASE("covering group orders") {
  SUBCASE("vertices and the open face are trivial") {
    AlcoveComplex cx(build_root_system('B', 3));
    CHECK(gamma_and_shift(cx, cx.open_face()).gamma_order == 1);
    CHECK(gamma_and_shift(cx, cx.open_face()).g_sigma_trivial);
    for (int f = 0; f < cx.face_count(); ++f)
      if (cx.face(f).dim == 0) CHECK(gamma_and_shift(cx, f).gamma_order == 1);
  }
  SUBCASE("A3 edge joining the origin to the second vertex has order two") {
    // lattice oracle: Z<e1-e2, e3-e4> + Z(1,1,-1,-1) has index 2 in the A3
    // coroot lattice, computed by Smith normal form of
    //   [[1,0,0],[0,0,1],[1,2,1]]
    AlcoveComplex cx(build_root_system('A', 3));
    const RatVec mid = scale(Rat(1, 2), cx.vertex(2));  // between origin and vertex 2
    const int f = cx.face_of_point(mid);
    CHECK(cx.face(f).dim == 1);
    GammaShift gs = gamma_and_shift(cx, f);
    CHECK(gs.gamma_order == 2);
    CHECK(gs.g_sigma_trivial);  // the affine span passes through the origin
  }
  SUBCASE("C2 edge along the level-one wall carries a nontrivial shift") {
    AlcoveComplex cx(build_root_system('C', 2));
    const int f = cx.face_of_point(RatVec{Rat(1, 2), Rat(1, 4)});
    GammaShift gs = gamma_and_shift(cx, f);
    CHECK(gs.gamma_order == 1);
    CHECK(!gs.g_sigma_trivial);
  }
}

TEST_CASE("toric cut data") {
  SUBCASE("A type is standard projective space") {
    ToricData td = toric_cut_data(build_root_system('A', 4));
    CHECK(td.is_standard_projective);
    CHECK(td.labels == std::vector<long long>(5, 1));
  }
  SUBCASE("G2") {
    ToricData td = toric_cut_data(build_root_system('G', 2));
    CHECK(td.weights_m == std::vector<long long>{1, 2, 1});
    CHECK(td.l_coefficients == std::vector<long long>{2, 1, 2});
    CHECK(!td.is_standard_projective);
  }
  SUBCASE("F4") {
    ToricData td = toric_cut_data(build_root_system('F', 4));
    CHECK(td.weights_m == std::vector<long long>{2, 3, 2, 1, 1});
    CHECK(td.lcm_m == 6);
    CHECK(td.l_coefficients == std::vector<long long>{3, 2, 3, 6, 6});
  }
}

TEST_CASE("dynkin classification recognizes every type") {
  for (auto [t, r] : {std::pair<char, int>{'A', 5}, {'B', 3}, {'B', 5}, {'C', 3},
                      {'C', 6}, {'D', 4}, {'D', 6}, {'E', 6}, {'E', 7}, {'E', 8},
                      {'F', 4}, {'G', 2}}) {
    RootDatum d = build_root_system(t, r);
    std::vector<std::string> expect = {std::string(1, t) + std::to_string(r)};
    CHECK(classify_components(d.simple_roots) == expect);
  }
  // B2 = C2 is reported canonically as C2
  CHECK(classify_components(build_root_system('B', 2).simple_roots) ==
        std::vector<std::string>{"C2"});
}
