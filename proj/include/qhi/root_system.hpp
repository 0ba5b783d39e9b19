#pragma once

// Simple root systems in their standard ambient realizations, with exact
// rational arithmetic throughout.  Root functionals are stored with the 2*pi*i
// factor stripped: a root takes the value (root_vector, x) on the Cartan
// subalgebra realization, and integrality of that value replaces the
// "alpha(xi) in 2*pi*i*Z" condition.

#include "qhi/lattice.hpp"
#include "qhi/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qhi {

enum class SimpleType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

SimpleType simple_type_from_char(char c);

struct RootDatum {
  SimpleType type;
  int rank = 0;
  int ambient_dim = 0;

  RatMat simple_roots;           // rank rows, ambient_dim columns
  RatMat simple_coroots;         // alpha^vee = 2 alpha / (alpha, alpha)
  RatMat positive_roots;         // closed under reflection, sorted by height
  RatVec highest_root;
  RatVec minimal_root;           // = -highest_root
  RatVec highest_coroot;         // coroot of the highest root
  IntMat cartan;                 // cartan[i][j] = <alpha_j, alpha_i^vee>
  RatMat fundamental_coweights;  // omega_j^vee with alpha_i(omega_j^vee) = delta_ij
  std::vector<long long> highest_root_marks;  // highest_root = sum a_p alpha_p

  const RatMat& coroot_lattice_basis() const { return simple_coroots; }
  const RatMat& coweight_lattice_basis() const { return fundamental_coweights; }

  // Value of the root functional at x (inner product with the root vector).
  Rat value(const RatVec& root, const RatVec& x) const { return dot(root, x); }

  std::string label() const;

  // Coordinates of v in the simple-root basis; empty if v is outside the span.
  std::optional<RatVec> in_simple_basis(const RatVec& v) const;

  // Coordinates of v in the simple-coroot basis; empty if outside the span.
  std::optional<RatVec> in_coroot_basis(const RatVec& v) const;

  bool in_coroot_lattice(const RatVec& v) const;
};

RatVec coroot_of(const RatVec& root);

// Builds the root datum for a valid simple type; throws std::invalid_argument
// with a message naming the violated constraint otherwise.
RootDatum build_root_system(SimpleType type, int rank);
RootDatum build_root_system(char type, int rank);

// Simple reflection s_i (1-based index).
RatVec apply_simple_reflection(const RootDatum& datum, int i, const RatVec& v);

// Applies the word left to right: word {i1, i2} sends v to s_{i2}(s_{i1}(v)).
RatVec apply_weyl_word(const RootDatum& datum, const std::vector<int>& word,
                       const RatVec& v);

// Coefficients of the coroot of the highest root in the simple coroots, with
// a final 1 appended; length rank + 1.
std::vector<long long> extended_marks(const RootDatum& datum);

// Word for the longest Weyl element (maps the dominant chamber to its
// negative).
std::vector<int> longest_element_word(const RootDatum& datum);

// Word for the reflection in an arbitrary root.
std::vector<int> reflection_word_for_root(const RootDatum& datum, const RatVec& root);

struct CenterStructure {
  long long order = 1;
  RatMat representatives;  // one coweight per center element (origin included)
  RatMat generators;       // subset of representatives generating the quotient
  std::vector<int> w0_word;
};

CenterStructure center_structure(const RootDatum& datum);

// All Weyl group elements as tuples of images of the simple coroots, for small
// ranks only; a test oracle, deliberately gated.
struct WeylElement {
  std::vector<int> word;
  RatMat coroot_images;
};
std::vector<WeylElement> enumerate_weyl_group(const RootDatum& datum);

}  // namespace qhi
