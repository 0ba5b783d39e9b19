#pragma once

// Residual-based verification of the structural identities satisfied by the
// model spaces: the three moment-map axioms, the disc gluing, the three-way
// cotangent comparison, the sphere reduction scale factor, and the fusion
// embedding.  Every report records the seed and the worst offending sample.

#include "qhi/models.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qhi::num {

struct IdentityResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  int worst_sample = -1;
  std::string worst_point;  // compact description of the worst sample
};

struct VerificationReport {
  std::string op;
  std::string model;
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<IdentityResult> identities;
  std::map<std::string, double> extras;

  bool pass() const {
    for (const auto& id : identities)
      if (!id.pass) return false;
    return true;
  }
  const IdentityResult* find(const std::string& name) const {
    for (const auto& id : identities)
      if (id.name == name) return &id;
    return nullptr;
  }
};

struct AxiomTolerances {
  double probes = 1e-12;        // antisymmetry / bilinearity / equivariance
  double axiom_iii = 1e-8;
  double axiom_i = 1e-5;        // finite-difference residual
  double rank_floor = 1e-6;     // smallest singular value at generic points
  double fd_step = 1e-3;
};

// Definition axioms plus structural probes over `samples` random points.
VerificationReport axiom_residuals(const QHamModel& model, int samples,
                                   std::uint64_t seed,
                                   const AxiomTolerances& tol = {});

// At the equator level 2 pi^2 |z|^2 = pi the kernel of the two-form must
// match the span of the degenerate action directions (dimension 2n - 2).
VerificationReport equator_degeneracy_check(int n);

struct GluingTolerances {
  double form = 1e-6;      // |phi^* omega + omega| via finite-difference Jacobian
  double moment = 1e-10;   // |Phi(phi z) Phi(z) - 1|
  double involution = 1e-12;
  double fd_step = 1e-4;
};

VerificationReport gluing_verify(int n, int samples, std::uint64_t seed,
                                 const GluingTolerances& tol = {});

// Three evaluation routes for the exponentiated cotangent two-form plus the
// moment identity.
VerificationReport cotangent_double_verify(int n, int samples, std::uint64_t seed,
                                           double tolerance = 1e-8);

// Induced-form scale factor sin(2 pi^2 a)/(2 pi^2 a) on horizontal pairs.
VerificationReport sphere_reduction_check(int n, const std::vector<double>& a_values,
                                          int samples, std::uint64_t seed,
                                          double tolerance = 1e-8);

// Pullback of the fused-product two-form through m -> (m, 1, Phi(m)) equals
// the original two-form; the ambient factor is the double.
VerificationReport universal_embedding_verify(int n, int samples, std::uint64_t seed,
                                              double tolerance = 1e-8);

// quadrature-free fourth-order directional derivative used by the axiom-one
// check; exposed for tests
double fd_directional(const std::function<double(double)>& f, double h);

}  // namespace qhi::num
