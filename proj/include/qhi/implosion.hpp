#pragma once

// Stratification bookkeeping for the universal implosion of the double:
// per-face stratum dimensions, removability of singular strata, the injection
// of the center into the Weyl group, discrete symmetries of the face poset,
// and the lattice-level centralizer checks.

#include "qhi/alcove.hpp"

#include <string>
#include <vector>

namespace qhi {

struct StratumRecord {
  int face = -1;
  std::string face_id;
  int stratum_dim = 0;  // dim K - dim [K_sigma, K_sigma] + dim sigma
  std::vector<std::string> commutator_type;
  bool is_point = false;
  bool is_removable = false;
  bool all_components_a1 = false;
  bool has_central_vertex = false;
  std::vector<int> orbit_under_center;  // face indices, sorted
  int dual_face = -1;
};

std::vector<StratumRecord> strata_table(const AlcoveComplex& complex);

struct Removability {
  bool removable = false;
  bool all_components_a1 = false;  // clause 1: every component of B_sigma is A1
  bool has_central_vertex = false; // clause 2: some vertex in the closure is central
};

Removability smoothness_check(const AlcoveComplex& complex, int face);

struct ZetaEntry {
  RatVec center_rep;           // coweight representing the center element
  std::vector<int> word;       // linear part as a reflection word
  RatMat coroot_images;        // action on the simple coroots (for comparisons)
};

// One entry per center element (identity first); verifies that the reduced
// point returns to the barycenter, that the map is a homomorphism and that it
// is injective.  Throws std::logic_error on any failure.
std::vector<ZetaEntry> zeta_homomorphism(const AlcoveComplex& complex);

struct AlcoveSymmetries {
  RatMat center_reps;  // same order as the permutations
  std::vector<std::vector<int>> center_face_permutations;  // face -> face
  std::vector<int> duality_face_permutation;
};

AlcoveSymmetries alcove_symmetries(const AlcoveComplex& complex);

struct FaceCheck {
  int face = -1;
  std::string face_id;
  bool pass = false;
};

struct CheckReport {
  bool pass = true;
  std::vector<FaceCheck> items;
};

// Root-level centralizer intersection: R_tau equals the intersection of the
// R_sigma over all proper subfaces, for every face of dimension >= 2.
CheckReport centralizer_intersection_check(const AlcoveComplex& complex);

struct TripleCheck {
  int i = 0, j = 0, k = 0;             // 1-based simple root indices
  long long marks[3] = {0, 0, 0};
  long long orders[3] = {0, 0, 0};     // orders of the three groups in Q/Z
  bool pass = false;                   // some order equals 1
};

struct TripleReport {
  bool pass = true;
  std::vector<TripleCheck> items;
};

// For every unordered triple of distinct simple roots, at least one of the
// groups (Z + Z m_a/m_b) cap (Z + Z m_a/m_c) mod Z must be trivial.
TripleReport integrality_triple_check(const RootDatum& datum);

struct SupportCheck {
  std::vector<int> support;  // subset of 1..n
  std::vector<std::string> expected;  // from the block sizes
  std::vector<std::string> actual;    // from the matching alcove face
  bool pass = false;
};

struct SupportReport {
  bool pass = true;
  std::vector<SupportCheck> items;
};

// Stabilizer block pattern of the unit-sphere embedding for A_{n-1}: block
// sizes (n + i_1 - i_s, i_2 - i_1, ..., i_s - i_{s-1}) with singleton blocks
// dropped must reproduce the commutator type of the face whose wall-set
// complement is the support.
SupportReport su_stabilizer_pattern_check(int n);

}  // namespace qhi
