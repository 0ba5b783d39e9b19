#pragma once

// Concrete quasi-Hamiltonian model spaces over U(n): the disc, the glued
// sphere, the double, the internally fused double, and the exponentiated
// cotangent bundle.  Every evaluator is exact linear algebra; tangents to
// group factors are always left-trivialized (the tangent u*xi is stored as
// xi), which turns the Maurer-Cartan pullbacks into matrix products.
//
// Convention for the pairing of Lie-algebra-valued one-forms:
//   (alpha, beta)(X, Y) = (alpha(X), beta(Y)) - (alpha(Y), beta(X)).

#include "qhi/numerics.hpp"

#include <memory>
#include <string>
#include <vector>

namespace qhi::num {

struct ModelPoint {
  CVec z;         // disc / sphere chart coordinate
  int chart = 0;  // sphere chart index
  CMat u, v;      // group factors (exp-cotangent stores g in u)
  CMat lam;       // exp-cotangent fibre coordinate
};

struct ModelTangent {
  CVec dz;
  CMat xu, xv;  // left-trivialized group parts; exp-cotangent: xu = xi, xv = eta
};

using LieTuple = std::vector<CMat>;
using GroupTuple = std::vector<CMat>;

// Real basis of u(n): i E_jj, E_jk - E_kj, i(E_jk + E_kj).
std::vector<CMat> lie_basis(int n);

// min_{j,k} |mu_j / mu_k + 1| over eigenvalue pairs of a unitary matrix;
// positive iff Ad(u) + 1 is invertible.
double ad_plus_one_margin(const CMat& u);

class QHamModel {
 public:
  virtual ~QHamModel() = default;

  virtual std::string name() const = 0;
  virtual int n() const = 0;
  virtual int group_factors() const = 0;
  virtual int chart_dim() const = 0;

  virtual ModelPoint random_point(Rng& rng) const = 0;
  virtual ModelTangent random_tangent(Rng& rng, const ModelPoint& p) const = 0;

  // Chart centered at `base`; coordinates live in R^{chart_dim}.
  virtual ModelPoint chart_point(const ModelPoint& base,
                                 const Eigen::VectorXd& c) const = 0;
  virtual ModelTangent chart_tangent(const ModelPoint& base, const Eigen::VectorXd& c,
                                     const Eigen::VectorXd& dc) const = 0;

  virtual double two_form(const ModelPoint& p, const ModelTangent& x,
                          const ModelTangent& y) const = 0;
  virtual std::vector<CMat> moment(const ModelPoint& p) const = 0;
  virtual ModelTangent inf_action(const ModelPoint& p, const LieTuple& xi) const = 0;
  virtual ModelPoint act(const ModelPoint& p, const GroupTuple& g) const = 0;

  // Pullbacks of the Maurer-Cartan forms through each moment component.
  virtual std::vector<CMat> moment_theta_left(const ModelPoint& p,
                                              const ModelTangent& x) const = 0;
  virtual std::vector<CMat> moment_theta_right(const ModelPoint& p,
                                               const ModelTangent& x) const = 0;

  LieTuple random_lie(Rng& rng) const;
  GroupTuple random_group(Rng& rng) const;
};

std::unique_ptr<QHamModel> make_model(const std::string& kind, int n);
const std::vector<std::string>& model_kinds();

// Disc building blocks, shared by the sphere and exposed to the test oracles.
double disc_omega0(const CVec& x, const CVec& y);
CMat disc_moment0(const CVec& z);                    // -2 pi^2 i z z^*
CMat disc_moment0_derivative(const CVec& z, const CVec& x);
double disc_two_form(const CVec& z, const CVec& x, const CVec& y);

// Invariant two-form with a pole at the origin (throws there).
double disc_lambda_form(const CVec& z, const CVec& x, const CVec& y);
// Closed-coordinate form lambda + sinc(2 pi^2 |z|^2)(omega0 - lambda).
double disc_closed_form(const CVec& z, const CVec& x, const CVec& y);

// Gluing map phi(z) = -s(z) z with s = sqrt(1/pi - |z|^2)/|z|.
CVec sphere_transition(const CVec& z);

// Frozen normalization of the Cartan three-form against the pairing
// chi(X,Y,Z) = kChi * (theta(X), [theta(Y), theta(Z)]); calibrated on the
// disc, where both sides of d omega = -Phi^* chi are computable.
inline constexpr double kChiNormalization = 0.5;

}  // namespace qhi::num
