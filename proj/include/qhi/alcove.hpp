#pragma once

// Faces of the fundamental alcove of the affine Weyl group, their centralizer
// root data, affine reduction into the alcove, and the toric-cut data of the
// weighted projective description.
//
// Walls are numbered 1..rank for the simple-root walls {alpha_i = 0} and
// rank+1 for the highest-root wall at level one.  A face is the proper subset
// of walls containing it; its id renders the sorted wall list as "w1.w3", and
// the open face (empty wall set) as "open".

#include "qhi/root_system.hpp"

#include <string>
#include <vector>

namespace qhi {

struct AlcoveFace {
  std::vector<int> wall_set;    // sorted, proper subset of {1..rank+1}
  int dim = 0;                  // rank - |wall_set|
  std::vector<int> vertex_ids;  // vertices in the closure (wall index each is opposite to)
  RatVec interior_point;        // average of the vertices, exact
  std::string id;
};

class AlcoveComplex {
 public:
  explicit AlcoveComplex(RootDatum datum);

  const RootDatum& datum() const { return datum_; }
  const std::vector<AlcoveFace>& faces() const { return faces_; }
  const AlcoveFace& face(int f) const { return faces_.at(f); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  // Vertex opposite wall j (1-based; j = rank+1 is the origin).
  const RatVec& vertex(int vertex_id) const { return vertices_.at(vertex_id - 1); }

  int open_face() const { return open_face_; }
  int index_of(const std::vector<int>& wall_set) const;

  // sigma <= tau iff wall_set(sigma) contains wall_set(tau).
  bool leq(int sigma, int tau) const;

  // Face whose relative interior contains p; p must lie in the closed alcove.
  int face_of_point(const RatVec& p) const;

  bool in_closed_alcove(const RatVec& p) const;

 private:
  RootDatum datum_;
  std::vector<AlcoveFace> faces_;
  std::vector<RatVec> vertices_;
  int open_face_ = -1;
};

AlcoveComplex enumerate_faces(const RootDatum& datum);

struct AffineWord {
  std::vector<int> linear_word;  // simple reflection indices, applied left to right
  RatVec translation;            // in the coroot lattice
};

struct ReduceResult {
  RatVec reduced;
  AffineWord word;  // reduced = linear(xi) + translation
};

// Reduces xi into the closed alcove by reflecting across violated walls.
// Terminates because each highest-root reflection strictly decreases the
// exact squared norm and the finite-Weyl descent between them preserves it,
// so the potential (|xi|^2, number of violated simple walls) decreases
// lexicographically through a finite orbit.
ReduceResult reduce_to_alcove(const RootDatum& datum, const RatVec& xi);

struct FaceRootData {
  std::vector<int> r_sigma_positive;        // indices into positive_roots
  std::vector<long long> alpha_sigma_values;  // value (0 or 1) of each on the face
  RatMat b_sigma;                           // base of R_sigma
  std::vector<std::string> component_types;  // Dynkin types of B_sigma, sorted
  int dim_k_sigma = 0;       // rank + |R_sigma|
  int dim_commutator = 0;    // |B_sigma| + |R_sigma|
  int central_torus_dim = 0; // dim sigma
};

FaceRootData face_root_data(const AlcoveComplex& complex, int face);

struct GammaShift {
  long long gamma_order = 1;
  bool g_sigma_trivial = true;
};

GammaShift gamma_and_shift(const AlcoveComplex& complex, int face);

struct VertexInfo {
  int vertex_id = 0;
  RatVec coordinates;
  bool is_central = false;
};

std::vector<VertexInfo> vertices_and_centrality(const AlcoveComplex& complex);

struct ToricData {
  std::vector<long long> weights_m;
  std::vector<long long> labels;
  long long lcm_m = 1;
  std::vector<long long> l_coefficients;
  bool is_standard_projective = false;
};

ToricData toric_cut_data(const RootDatum& datum);

// Dynkin classification of a set of mutually independent roots (used for
// B_sigma); returns sorted labels like "A1", "C2", "E7".  The rank-two
// double-bond diagram is reported as "C2".
std::vector<std::string> classify_components(const RatMat& roots);

}  // namespace qhi
