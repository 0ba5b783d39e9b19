#include "qhi/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace qhi::num {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * kPi * u2);
  have_spare_ = true;
  return r * std::cos(2.0 * kPi * u2);
}

double lie_inner(const CMat& a, const CMat& b) {
  return -(a * b).trace().real() / (4.0 * kPi * kPi);
}

double frob(const CMat& a) { return a.norm(); }

CMat anti_hermitian_part(const CMat& g) { return 0.5 * (g - g.adjoint()); }

CMat random_anti_hermitian(Rng& rng, int n, double scale) {
  CMat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.cnormal();
  return scale * anti_hermitian_part(g);
}

CVec random_cvector(Rng& rng, int n) {
  CVec z(n);
  for (int i = 0; i < n; ++i) z(i) = rng.cnormal();
  return z;
}

CMat random_unitary(Rng& rng, int n) {
  CMat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.cnormal();
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    Cplx d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

CMat random_special_unitary(Rng& rng, int n) {
  CMat q = random_unitary(rng, n);
  const Cplx det = q.determinant();
  // principal n-th root of the inverse determinant
  const double arg = std::arg(det);
  q *= std::polar(1.0, -arg / n);
  return q;
}

CMat random_regular_anti_hermitian(Rng& rng, int n, double margin) {
  CMat x = random_anti_hermitian(rng, n);
  Eigen::SelfAdjointEigenSolver<CMat> es(Cplx(0, -1) * x);
  const auto& d = es.eigenvalues();
  const double spread = d(n - 1) - d(0);
  const double limit = 2.0 * kPi * (1.0 - margin);
  if (spread > limit) x *= limit / spread * rng.uniform(0.3, 1.0);
  return x;
}

CMat expm_anti_hermitian(const CMat& x) {
  Eigen::SelfAdjointEigenSolver<CMat> es(Cplx(0, -1) * x);
  const int n = static_cast<int>(x.rows());
  CVec phase(n);
  for (int i = 0; i < n; ++i) phase(i) = std::polar(1.0, es.eigenvalues()(i));
  return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

CMat logm_unitary_principal(const CMat& u, double guard) {
  Eigen::ComplexSchur<CMat> schur(u);
  const int n = static_cast<int>(u.rows());
  CVec logd(n);
  for (int i = 0; i < n; ++i) {
    const Cplx ev = schur.matrixT()(i, i);
    if (std::abs(ev + 1.0) < guard)
      throw std::domain_error("principal log: eigenvalue within guard of the branch cut");
    logd(i) = Cplx(0.0, std::arg(ev));
  }
  const CMat& q = schur.matrixU();
  return q * logd.asDiagonal() * q.adjoint();
}

Cplx ad_kernel_scalar(AdKernel f, Cplx x) {
  const double ax = std::abs(x);
  switch (f) {
    case AdKernel::DexpLeft:
      if (ax < 1e-4) return 1.0 - x / 2.0 + x * x / 6.0 - x * x * x / 24.0;
      return (1.0 - std::exp(-x)) / x;
    case AdKernel::DexpRight:
      if (ax < 1e-4) return 1.0 + x / 2.0 + x * x / 6.0 + x * x * x / 24.0;
      return (std::exp(x) - 1.0) / x;
    case AdKernel::VarpiKernel:
      if (ax < 1e-4) return -x / 6.0 - x * x * x / 120.0;
      return (x - std::sinh(x)) / (x * x);
    case AdKernel::Sinh:
      return std::sinh(x);
    case AdKernel::SinhOverX:
      if (ax < 1e-4) return 1.0 + x * x / 6.0;
      return std::sinh(x) / x;
  }
  return {};
}

CMat ad_analytic(AdKernel f, const CMat& lambda, const CMat& xi) {
  if (frob(lambda + lambda.adjoint()) > 1e-10 * (1.0 + frob(lambda)))
    throw std::invalid_argument("ad_analytic requires an anti-Hermitian argument");
  Eigen::SelfAdjointEigenSolver<CMat> es(Cplx(0, -1) * lambda);
  const int n = static_cast<int>(lambda.rows());
  const CMat& q = es.eigenvectors();
  CMat m = q.adjoint() * xi * q;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const Cplx mu = Cplx(0, 1) * (es.eigenvalues()(j) - es.eigenvalues()(k));
      m(j, k) *= ad_kernel_scalar(f, mu);
    }
  return q * m * q.adjoint();
}

double varpi_eval(const CMat& lambda, const CMat& xi1, const CMat& xi2) {
  return lie_inner(ad_analytic(AdKernel::VarpiKernel, lambda, xi1), xi2);
}

double varpi_eval_diagonal(const CMat& lambda, const CMat& xi1, const CMat& xi2) {
  const int n = static_cast<int>(lambda.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && std::abs(lambda(i, j)) > 1e-14)
        throw std::invalid_argument("root-space form requires a diagonal argument");
  Cplx sum = 0.0;
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      const Cplx x = lambda(r, r) - lambda(s, s);
      sum += ad_kernel_scalar(AdKernel::VarpiKernel, x) *
             (xi1(r, s) * xi2(s, r) - xi2(r, s) * xi1(s, r));
    }
  return -sum.real() / (4.0 * kPi * kPi);
}

}  // namespace qhi::num
