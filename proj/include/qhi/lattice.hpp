#pragma once

// Integer lattice computations: Smith normal form, integer kernels, indices
// of full-rank sublattices, integral solvability of linear systems.  Matrices
// are small (rank of the group plus one at most), so the plain SNF algorithm
// with smallest-pivot selection is entirely adequate.

#include "qhi/rational.hpp"

#include <vector>

namespace qhi {

using IntMat = std::vector<std::vector<long long>>;
using IntVec = std::vector<long long>;

struct SmithForm {
  IntVec diagonal;      // nonnegative, each dividing the next
  IntMat left, right;   // unimodular U, V with U * A * V = diag
};

SmithForm smith_normal_form(IntMat a);

// Basis of { x in Z^n : A x = 0 }, one vector per row of the result.  The
// result spans the full integer kernel (saturated by construction).
IntMat integer_kernel(const IntMat& a);

// Index of the sublattice spanned by the rows of `gens` (coordinates relative
// to a basis of the ambient lattice Z^n).  Requires the span to have full
// rank n; throws otherwise.
long long sublattice_index(const IntMat& gens);

// True if A x = b admits an integer solution x.
bool solvable_over_z(const IntMat& a, const IntVec& b);

// Clears denominators: multiplies each row set by the lcm of denominators of
// all entries, yielding an integer matrix defining the same kernel.
IntMat clear_denominators(const RatMat& a);

}  // namespace qhi
