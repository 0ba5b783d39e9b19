#include "qhi/alcove.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qhi {

namespace {

std::string face_id_for(const std::vector<int>& walls) {
  if (walls.empty()) return "open";
  std::string id;
  for (std::size_t k = 0; k < walls.size(); ++k) {
    if (k) id += '.';
    id += 'w' + std::to_string(walls[k]);
  }
  return id;
}

}  // namespace

AlcoveComplex::AlcoveComplex(RootDatum datum) : datum_(std::move(datum)) {
  const int r = datum_.rank;
  // Vertex opposite wall j solves alpha_i = 0 (i != j) and theta = 1, which is
  // omega_j / a_j with a_j the highest-root marks; the vertex opposite the
  // level-one wall is the origin.
  for (int j = 0; j < r; ++j)
    vertices_.push_back(scale(Rat(1, datum_.highest_root_marks[j]),
                              datum_.fundamental_coweights[j]));
  vertices_.push_back(zero_vec(datum_.ambient_dim));

  const int walls = r + 1;
  for (unsigned mask = 0; mask + 1 < (1u << walls); ++mask) {
    AlcoveFace f;
    for (int w = 1; w <= walls; ++w)
      if (mask & (1u << (w - 1))) f.wall_set.push_back(w);
    f.dim = r - static_cast<int>(f.wall_set.size());
    for (int v = 1; v <= walls; ++v)
      if (!(mask & (1u << (v - 1)))) f.vertex_ids.push_back(v);
    RatVec p = zero_vec(datum_.ambient_dim);
    for (int v : f.vertex_ids) p = add(p, vertices_[v - 1]);
    f.interior_point = scale(Rat(1, static_cast<long long>(f.vertex_ids.size())), p);
    f.id = face_id_for(f.wall_set);
    if (f.wall_set.empty()) open_face_ = static_cast<int>(faces_.size());
    faces_.push_back(std::move(f));
  }
}

int AlcoveComplex::index_of(const std::vector<int>& wall_set) const {
  unsigned mask = 0;
  for (int w : wall_set) mask |= 1u << (w - 1);
  if (mask + 1 >= (1u << (datum_.rank + 1)))
    throw std::invalid_argument("wall set must be a proper subset of the walls");
  return static_cast<int>(mask);
}

bool AlcoveComplex::leq(int sigma, int tau) const {
  // faces are indexed by their wall-set bitmask
  return (static_cast<unsigned>(sigma) & static_cast<unsigned>(tau)) ==
         static_cast<unsigned>(tau);
}

bool AlcoveComplex::in_closed_alcove(const RatVec& p) const {
  for (int i = 0; i < datum_.rank; ++i)
    if (dot(datum_.simple_roots[i], p) < Rat(0)) return false;
  return dot(datum_.highest_root, p) <= Rat(1);
}

int AlcoveComplex::face_of_point(const RatVec& p) const {
  if (!in_closed_alcove(p))
    throw std::invalid_argument("point is outside the closed alcove");
  std::vector<int> walls;
  for (int i = 0; i < datum_.rank; ++i)
    if (dot(datum_.simple_roots[i], p) == Rat(0)) walls.push_back(i + 1);
  if (dot(datum_.highest_root, p) == Rat(1)) walls.push_back(datum_.rank + 1);
  return index_of(walls);
}

AlcoveComplex enumerate_faces(const RootDatum& datum) { return AlcoveComplex(datum); }

ReduceResult reduce_to_alcove(const RootDatum& datum, const RatVec& xi) {
  ReduceResult out;
  out.word.translation = zero_vec(datum.ambient_dim);
  RatVec x = xi;
  std::vector<int> theta_word;  // computed on first use

  auto apply_theta_affine = [&](RatVec v, bool with_shift) {
    const Rat c = dot(datum.highest_root, v);
    v = sub(v, scale(c, datum.highest_coroot));
    if (with_shift) v = add(v, datum.highest_coroot);
    return v;
  };

  while (true) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 1; i <= datum.rank; ++i)
        if (dot(datum.simple_roots[i - 1], x) < Rat(0)) {
          x = apply_simple_reflection(datum, i, x);
          out.word.translation =
              apply_simple_reflection(datum, i, out.word.translation);
          out.word.linear_word.push_back(i);
          moved = true;
          break;
        }
    }
    if (dot(datum.highest_root, x) <= Rat(1)) break;

    if (theta_word.empty())
      theta_word = reflection_word_for_root(datum, datum.highest_root);
    const Rat norm_before = dot(x, x);
    const Rat level = dot(datum.highest_root, x);
    x = sub(x, scale(level - Rat(1), datum.highest_coroot));
    if (dot(x, x) >= norm_before)
      throw std::logic_error("alcove reduction potential failed to decrease");
    out.word.translation = apply_theta_affine(out.word.translation, true);
    out.word.linear_word.insert(out.word.linear_word.end(), theta_word.begin(),
                                theta_word.end());
  }

  out.reduced = x;
  if (!datum.in_coroot_lattice(out.word.translation))
    throw std::logic_error("affine translation left the coroot lattice");
  RatVec check = add(apply_weyl_word(datum, out.word.linear_word, xi),
                     out.word.translation);
  if (check != out.reduced)
    throw std::logic_error("affine word does not reproduce the reduced point");
  return out;
}

FaceRootData face_root_data(const AlcoveComplex& complex, int face) {
  const RootDatum& d = complex.datum();
  const AlcoveFace& f = complex.face(face);
  FaceRootData out;
  out.central_torus_dim = f.dim;

  for (std::size_t k = 0; k < d.positive_roots.size(); ++k) {
    const Rat v = dot(d.positive_roots[k], f.interior_point);
    if (is_integer(v)) {
      out.r_sigma_positive.push_back(static_cast<int>(k));
      out.alpha_sigma_values.push_back(v.numerator());
    }
  }

  // One base root per wall: the simple root for a simple wall, the minimal
  // root for the level-one wall.
  for (int w : f.wall_set)
    out.b_sigma.push_back(w <= d.rank ? d.simple_roots[w - 1] : d.minimal_root);

  out.component_types = classify_components(out.b_sigma);
  const int n_roots = 2 * static_cast<int>(out.r_sigma_positive.size());
  out.dim_k_sigma = d.rank + n_roots;
  out.dim_commutator = static_cast<int>(out.b_sigma.size()) + n_roots;

  // B_sigma must be a base: every positive element of R_sigma is, up to sign,
  // a nonnegative integer combination of B_sigma.
  if (!out.r_sigma_positive.empty() && out.b_sigma.empty())
    throw std::logic_error("nonempty R_sigma with empty base");
  RatMat cols(d.ambient_dim, zero_vec(out.b_sigma.size()));
  for (std::size_t i = 0; i < out.b_sigma.size(); ++i)
    for (int k = 0; k < d.ambient_dim; ++k) cols[k][i] = out.b_sigma[i][k];
  for (int idx : out.r_sigma_positive) {
    RatVec c;
    if (!solve_linear(cols, d.positive_roots[idx], c))
      throw std::logic_error("R_sigma root outside span of B_sigma");
    bool nonneg = true, nonpos = true;
    for (const auto& x : c) {
      if (!is_integer(x)) throw std::logic_error("non-integral B_sigma coordinates");
      if (x < Rat(0)) nonneg = false;
      if (x > Rat(0)) nonpos = false;
    }
    if (!nonneg && !nonpos) throw std::logic_error("B_sigma is not a base of R_sigma");
  }
  return out;
}

GammaShift gamma_and_shift(const AlcoveComplex& complex, int face) {
  const RootDatum& d = complex.datum();
  const AlcoveFace& f = complex.face(face);
  GammaShift out;
  FaceRootData data = face_root_data(complex, face);
  const int r = d.rank;

  if (data.b_sigma.empty()) return out;  // K_sigma = T: both parts trivial

  RatMat b_coroots;
  for (const auto& b : data.b_sigma) b_coroots.push_back(coroot_of(b));

  // Coordinates of the span of B_sigma-coroots inside the coroot lattice.
  RatMat m_rows;
  for (const auto& bc : b_coroots) {
    auto c = d.in_coroot_basis(bc);
    if (!c) throw std::logic_error("coroot of a base root outside the coroot span");
    m_rows.push_back(*c);
  }

  // Sublattice of coroot-lattice vectors lying in span(B_sigma^vee): integer
  // kernel of the annihilator of the row space.
  RatMat annihilator = kernel_basis(m_rows);
  IntMat lattice_t1;
  if (annihilator.empty()) {
    // span is all of t: the whole coroot lattice
    lattice_t1.assign(r, IntVec(r, 0));
    for (int i = 0; i < r; ++i) lattice_t1[i][i] = 1;
  } else {
    lattice_t1 = integer_kernel(clear_denominators(annihilator));
  }

  // Sublattice lying in the central direction z = {x : beta(x) = 0 for beta in
  // B_sigma}.
  RatMat z_constraints;
  for (const auto& b : data.b_sigma) {
    RatVec row(r);
    for (int i = 0; i < r; ++i) row[i] = dot(b, d.simple_coroots[i]);
    z_constraints.push_back(std::move(row));
  }
  IntMat lattice_z = integer_kernel(clear_denominators(z_constraints));

  IntMat sum = lattice_t1;
  sum.insert(sum.end(), lattice_z.begin(), lattice_z.end());
  out.gamma_order = sublattice_index(sum);

  // g_sigma is trivial iff the affine span of the face meets the coroot
  // lattice, i.e. the orthogonal projection of any point of the face onto
  // span(B_sigma^vee) is the projection of a lattice vector.
  const std::size_t m = b_coroots.size();
  RatMat gram(m, zero_vec(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gram[i][j] = dot(b_coroots[i], b_coroots[j]);
  auto project_coords = [&](const RatVec& v) {
    RatVec rhs(m);
    for (std::size_t i = 0; i < m; ++i) rhs[i] = dot(b_coroots[i], v);
    RatVec y;
    if (!solve_linear(gram, rhs, y))
      throw std::logic_error("Gram matrix of an independent set is singular");
    return y;  // coordinates of the orthogonal projection in the B_sigma^vee basis
  };

  RatMat system;  // rows indexed by basis coordinate, columns by coroot index
  RatVec target = project_coords(f.interior_point);
  std::vector<RatVec> projected;
  for (int i = 0; i < r; ++i) projected.push_back(project_coords(d.simple_coroots[i]));
  for (std::size_t k = 0; k < m; ++k) {
    RatVec row(r + 1);
    for (int i = 0; i < r; ++i) row[i] = projected[i][k];
    row[r] = target[k];
    system.push_back(std::move(row));
  }
  IntMat cleared = clear_denominators(system);
  IntMat a;
  IntVec b;
  for (const auto& row : cleared) {
    a.push_back(IntVec(row.begin(), row.end() - 1));
    b.push_back(row.back());
  }
  out.g_sigma_trivial = solvable_over_z(a, b);
  return out;
}

std::vector<VertexInfo> vertices_and_centrality(const AlcoveComplex& complex) {
  const RootDatum& d = complex.datum();
  std::vector<VertexInfo> out;
  for (int j = 1; j <= d.rank + 1; ++j) {
    VertexInfo v;
    v.vertex_id = j;
    v.coordinates = complex.vertex(j);
    v.is_central = true;
    for (const auto& beta : d.positive_roots)
      v.is_central = v.is_central && is_integer(dot(beta, v.coordinates));
    out.push_back(std::move(v));
  }
  return out;
}

ToricData toric_cut_data(const RootDatum& datum) {
  ToricData out;
  out.weights_m = extended_marks(datum);
  out.labels.assign(datum.rank + 1, 1);
  out.lcm_m = 1;
  for (long long m : out.weights_m) out.lcm_m = std::lcm(out.lcm_m, m);
  for (long long m : out.weights_m) out.l_coefficients.push_back(out.lcm_m / m);
  out.is_standard_projective =
      std::all_of(out.weights_m.begin(), out.weights_m.end(),
                  [](long long m) { return m == 1; });
  return out;
}

std::vector<std::string> classify_components(const RatMat& roots) {
  const std::size_t n = roots.size();
  std::vector<std::vector<int>> adj(n);
  std::vector<std::vector<int>> bond(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Rat cij = dot(roots[j], coroot_of(roots[i]));
      const Rat cji = dot(roots[i], coroot_of(roots[j]));
      const Rat prod = cij * cji;
      if (prod != Rat(0)) {
        adj[i].push_back(static_cast<int>(j));
        bond[i][j] = prod.numerator();
      }
    }

  std::vector<int> comp(n, -1);
  int n_comp = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack = {s};
    comp[s] = n_comp;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = n_comp;
          stack.push_back(static_cast<std::size_t>(w));
        }
    }
    ++n_comp;
  }

  std::vector<std::string> labels;
  for (int c = 0; c < n_comp; ++c) {
    std::vector<int> nodes;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) nodes.push_back(static_cast<int>(i));
    const int size = static_cast<int>(nodes.size());

    int max_bond = 1;
    for (int u : nodes)
      for (int v : adj[u]) max_bond = std::max(max_bond, bond[u][v]);
    auto degree = [&](int u) { return static_cast<int>(adj[u].size()); };

    std::string label;
    if (size == 1) {
      label = "A1";
    } else if (max_bond == 3) {
      if (size != 2) throw std::logic_error("triple bond in a component of size != 2");
      label = "G2";
    } else if (max_bond == 2) {
      int du = -1, dv = -1, u = -1, v = -1;
      for (int a : nodes)
        for (int b : adj[a])
          if (a < b && bond[a][b] == 2) {
            u = a;
            v = b;
            du = degree(a);
            dv = degree(b);
          }
      if (size == 2) {
        label = "C2";
      } else if (du == 2 && dv == 2) {
        if (size != 4) throw std::logic_error("interior double bond in a non-F4 diagram");
        label = "F4";
      } else {
        const int end = du == 1 ? u : v;
        const Rat len_end = dot(roots[end], roots[end]);
        Rat len_other(0);
        for (int a : nodes)
          if (a != end) len_other = std::max(len_other, dot(roots[a], roots[a]));
        label = (len_end < len_other ? "B" : "C") + std::to_string(size);
      }
    } else {
      int branch = -1, branches = 0;
      for (int a : nodes)
        if (degree(a) == 3) {
          branch = a;
          ++branches;
        }
      if (branches == 0) {
        label = "A" + std::to_string(size);
      } else if (branches == 1) {
        std::vector<int> arms;
        for (int start : adj[branch]) {
          int len = 1, prev = branch, cur = start;
          while (true) {
            int next = -1;
            for (int w : adj[cur])
              if (w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1)
          label = "D" + std::to_string(size);
        else if (arms == std::vector<int>{1, 2, 2})
          label = "E6";
        else if (arms == std::vector<int>{1, 2, 3})
          label = "E7";
        else if (arms == std::vector<int>{1, 2, 4})
          label = "E8";
        else
          throw std::logic_error("unrecognized simply-laced branched diagram");
      } else {
        throw std::logic_error("diagram with multiple branch nodes");
      }
    }
    labels.push_back(label);
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

}  // namespace qhi
