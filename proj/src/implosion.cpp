#include "qhi/implosion.hpp"
#include <functional>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qhi {

namespace {

RatVec barycenter(const AlcoveComplex& complex) {
  const RootDatum& d = complex.datum();
  RatVec b = zero_vec(d.ambient_dim);
  for (int j = 1; j <= d.rank + 1; ++j) b = add(b, complex.vertex(j));
  return scale(Rat(1, d.rank + 1), b);
}

RatMat coroot_images_of_word(const RootDatum& d, const std::vector<int>& word) {
  RatMat images;
  for (const auto& c : d.simple_coroots)
    images.push_back(apply_weyl_word(d, word, c));
  return images;
}

// Affine alcove map x -> w(rep + x) + t obtained by reducing rep + barycenter.
struct AlcoveAutomorphism {
  RatVec rep;
  std::vector<int> word;
  RatVec translation;

  RatVec apply(const RootDatum& d, const RatVec& x) const {
    return add(apply_weyl_word(d, word, add(rep, x)), translation);
  }
};

AlcoveAutomorphism center_automorphism(const AlcoveComplex& complex, const RatVec& rep) {
  const RootDatum& d = complex.datum();
  const RatVec beta = barycenter(complex);
  ReduceResult red = reduce_to_alcove(d, add(rep, beta));
  if (red.reduced != beta)
    throw std::logic_error("center translate of the barycenter did not reduce to it");
  return {rep, red.word.linear_word, red.word.translation};
}

std::vector<int> face_permutation(const AlcoveComplex& complex,
                                  const std::function<RatVec(const RatVec&)>& map) {
  std::vector<int> perm(complex.face_count(), -1);
  for (int f = 0; f < complex.face_count(); ++f)
    perm[f] = complex.face_of_point(map(complex.face(f).interior_point));
  // a bijection on faces
  std::vector<int> seen(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || seen[p]) throw std::logic_error("face map is not a permutation");
    seen[p] = 1;
  }
  return perm;
}

long long cyclic_order(long long p, long long q) {
  // order of (Z + Z p/q) mod Z in Q/Z
  return q / std::gcd(p, q);
}

}  // namespace

Removability smoothness_check(const AlcoveComplex& complex, int face) {
  Removability out;
  FaceRootData data = face_root_data(complex, face);
  out.all_components_a1 =
      std::all_of(data.component_types.begin(), data.component_types.end(),
                  [](const std::string& t) { return t == "A1"; });
  auto vertices = vertices_and_centrality(complex);
  for (int v : complex.face(face).vertex_ids)
    out.has_central_vertex = out.has_central_vertex || vertices[v - 1].is_central;
  out.removable = out.all_components_a1 && out.has_central_vertex;
  return out;
}

std::vector<StratumRecord> strata_table(const AlcoveComplex& complex) {
  const RootDatum& d = complex.datum();
  const int dim_k = d.rank + 2 * static_cast<int>(d.positive_roots.size());
  auto vertices = vertices_and_centrality(complex);
  AlcoveSymmetries sym = alcove_symmetries(complex);

  std::vector<StratumRecord> table;
  long long points = 0;
  for (int f = 0; f < complex.face_count(); ++f) {
    const AlcoveFace& face = complex.face(f);
    StratumRecord rec;
    rec.face = f;
    rec.face_id = face.id;
    FaceRootData data = face_root_data(complex, f);
    rec.stratum_dim = dim_k - data.dim_commutator + face.dim;
    rec.commutator_type = data.component_types;
    rec.is_point = face.dim == 0 && vertices[face.vertex_ids[0] - 1].is_central;
    if (rec.is_point && rec.stratum_dim != 0)
      throw std::logic_error("one-point stratum with nonzero dimension");
    Removability rem = smoothness_check(complex, f);
    rec.is_removable = rem.removable;
    rec.all_components_a1 = rem.all_components_a1;
    rec.has_central_vertex = rem.has_central_vertex;
    rec.dual_face = sym.duality_face_permutation[f];

    std::vector<int> orbit = {f};
    for (const auto& perm : sym.center_face_permutations) {
      int g = perm[f];
      if (std::find(orbit.begin(), orbit.end(), g) == orbit.end()) orbit.push_back(g);
    }
    std::sort(orbit.begin(), orbit.end());
    rec.orbit_under_center = orbit;

    points += rec.is_point ? 1 : 0;
    table.push_back(std::move(rec));
  }

  const CenterStructure center = center_structure(d);
  if (points != center.order)
    throw std::logic_error("one-point stratum count differs from the center order");
  return table;
}

std::vector<ZetaEntry> zeta_homomorphism(const AlcoveComplex& complex) {
  const RootDatum& d = complex.datum();
  const CenterStructure center = center_structure(d);
  std::vector<ZetaEntry> out;
  for (const auto& rep : center.representatives) {
    AlcoveAutomorphism aut = center_automorphism(complex, rep);
    ZetaEntry e;
    e.center_rep = rep;
    e.word = aut.word;
    e.coroot_images = coroot_images_of_word(d, e.word);
    out.push_back(std::move(e));
  }

  // Injectivity: pairwise distinct linear parts.
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (out[i].coroot_images == out[j].coroot_images)
        throw std::logic_error("center homomorphism into the Weyl group is not injective");

  // Homomorphism: the linear part of the product equals the product of the
  // linear parts.  The product representative is the unique one in the coset
  // of the sum.
  auto rep_index_of = [&](const RatVec& x) {
    for (std::size_t k = 0; k < out.size(); ++k)
      if (d.in_coroot_lattice(sub(x, out[k].center_rep))) return k;
    throw std::logic_error("coweight without a matching center representative");
  };
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) {
      const std::size_t k = rep_index_of(add(out[i].center_rep, out[j].center_rep));
      RatMat composed;
      for (const auto& c : d.simple_coroots)
        composed.push_back(apply_weyl_word(
            d, out[j].word, apply_weyl_word(d, out[i].word, c)));
      if (composed != out[k].coroot_images)
        throw std::logic_error("center map fails the homomorphism law");
    }
  return out;
}

AlcoveSymmetries alcove_symmetries(const AlcoveComplex& complex) {
  const RootDatum& d = complex.datum();
  const CenterStructure center = center_structure(d);
  AlcoveSymmetries out;
  out.center_reps = center.representatives;
  for (const auto& rep : center.representatives) {
    AlcoveAutomorphism aut = center_automorphism(complex, rep);
    out.center_face_permutations.push_back(face_permutation(
        complex, [&](const RatVec& x) { return aut.apply(d, x); }));
  }
  const std::vector<int> w0 = center.w0_word;
  out.duality_face_permutation = face_permutation(
      complex, [&](const RatVec& x) { return negate(apply_weyl_word(d, w0, x)); });
  return out;
}

CheckReport centralizer_intersection_check(const AlcoveComplex& complex) {
  CheckReport report;
  const int n = complex.face_count();
  std::vector<std::vector<int>> r_sigma(n);
  for (int f = 0; f < n; ++f)
    r_sigma[f] = face_root_data(complex, f).r_sigma_positive;

  for (int tau = 0; tau < n; ++tau) {
    if (complex.face(tau).dim < 2) continue;
    std::vector<int> inter;
    bool first = true;
    for (int sigma = 0; sigma < n; ++sigma) {
      if (sigma == tau || !complex.leq(sigma, tau)) continue;
      if (first) {
        inter = r_sigma[sigma];
        first = false;
      } else {
        std::vector<int> next;
        std::set_intersection(inter.begin(), inter.end(), r_sigma[sigma].begin(),
                              r_sigma[sigma].end(), std::back_inserter(next));
        inter = std::move(next);
      }
    }
    FaceCheck item;
    item.face = tau;
    item.face_id = complex.face(tau).id;
    item.pass = !first && inter == r_sigma[tau];
    report.pass = report.pass && item.pass;
    report.items.push_back(std::move(item));
  }
  return report;
}

TripleReport integrality_triple_check(const RootDatum& datum) {
  TripleReport report;
  std::vector<long long> m = extended_marks(datum);
  m.pop_back();  // triples range over the simple roots only
  const int r = static_cast<int>(m.size());
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int k = j + 1; k < r; ++k) {
        TripleCheck t;
        t.i = i + 1;
        t.j = j + 1;
        t.k = k + 1;
        const long long trip[3] = {m[i], m[j], m[k]};
        for (int a = 0; a < 3; ++a) {
          t.marks[a] = trip[a];
          const long long q1 = cyclic_order(trip[a], trip[(a + 1) % 3]);
          const long long q2 = cyclic_order(trip[a], trip[(a + 2) % 3]);
          t.orders[a] = std::gcd(q1, q2);
        }
        t.pass = t.orders[0] == 1 || t.orders[1] == 1 || t.orders[2] == 1;
        report.pass = report.pass && t.pass;
        report.items.push_back(t);
      }
  return report;
}

SupportReport su_stabilizer_pattern_check(int n) {
  if (n < 2 || n > 8)
    throw std::invalid_argument("stabilizer pattern check requires 2 <= n <= 8");
  SupportReport report;
  AlcoveComplex complex(build_root_system(SimpleType::A, n - 1));
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    SupportCheck item;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) item.support.push_back(i);

    // Block sizes of the stabilizer; singletons are dropped and a block of
    // size b contributes an A_{b-1} factor.
    const auto& s = item.support;
    std::vector<int> blocks;
    blocks.push_back(n + s.front() - s.back());
    for (std::size_t t = 1; t < s.size(); ++t) blocks.push_back(s[t] - s[t - 1]);
    for (int b : blocks)
      if (b >= 2) item.expected.push_back("A" + std::to_string(b - 1));
    std::sort(item.expected.begin(), item.expected.end());

    std::vector<int> wall_set;
    for (int w = 1; w <= n; ++w)
      if (!(mask & (1u << (w - 1)))) wall_set.push_back(w);
    const int face = complex.index_of(wall_set);
    item.actual = face_root_data(complex, face).component_types;

    item.pass = item.expected == item.actual;
    report.pass = report.pass && item.pass;
    report.items.push_back(std::move(item));
  }
  return report;
}

}  // namespace qhi
