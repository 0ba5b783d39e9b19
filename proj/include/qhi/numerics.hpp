#pragma once

// Floating-point kernel for the unitary-group evaluators: a deterministic
// random generator (identical streams on every platform), Haar sampling,
// matrix exponentials of anti-Hermitian matrices, and analytic functions of
// ad(lambda) applied through the eigendecomposition.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <string>

namespace qhi::num {

using Cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

// Uniform bits come straight from mt19937_64 and normals from Box-Muller, so
// identical seeds give identical streams regardless of the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  double normal();
  Cplx cnormal() { return {normal(), normal()}; }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// invariant inner product (xi, eta) = -tr(xi eta) / (4 pi^2) on u(n)
double lie_inner(const CMat& a, const CMat& b);

double frob(const CMat& a);

CMat anti_hermitian_part(const CMat& g);
CMat random_anti_hermitian(Rng& rng, int n, double scale = 1.0);
CVec random_cvector(Rng& rng, int n);
CMat random_unitary(Rng& rng, int n);
CMat random_special_unitary(Rng& rng, int n);

// Anti-Hermitian lambda in the region where exp is regular: the eigenvalue
// spread of -i lambda stays below 2 pi by the given margin.
CMat random_regular_anti_hermitian(Rng& rng, int n, double margin = 0.2);

CMat expm_anti_hermitian(const CMat& x);

// Principal logarithm of a unitary matrix; throws if an eigenvalue sits
// within `guard` of the branch cut at -1.
CMat logm_unitary_principal(const CMat& u, double guard = 1e-6);

enum class AdKernel {
  DexpLeft,    // (1 - e^{-x}) / x
  DexpRight,   // (e^{x} - 1) / x
  VarpiKernel, // (x - sinh x) / x^2
  Sinh,        // sinh x
  SinhOverX,   // sinh(x) / x
};

// f(ad lambda) xi for anti-Hermitian lambda; the ad-eigenvalues are the
// differences of the eigenvalues of lambda, and a power-series branch covers
// the removable singularity for |difference| < 1e-4.
CMat ad_analytic(AdKernel f, const CMat& lambda, const CMat& xi);
Cplx ad_kernel_scalar(AdKernel f, Cplx x);

// Invariant primitive evaluated at lambda: ((ad - sinh ad)/ad^2 xi1, xi2).
double varpi_eval(const CMat& lambda, const CMat& xi1, const CMat& xi2);

// Root-space form for diagonal lambda; used as an independent oracle.
double varpi_eval_diagonal(const CMat& lambda, const CMat& xi1, const CMat& xi2);

}  // namespace qhi::num
