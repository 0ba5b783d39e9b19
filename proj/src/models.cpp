#include "qhi/models.hpp"

#include <cmath>
#include <stdexcept>

namespace qhi::num {

namespace {

// (alpha, beta)(X, Y) for values already evaluated on X and Y.
double form_pair(const CMat& ax, const CMat& ay, const CMat& bx, const CMat& by) {
  return lie_inner(ax, by) - lie_inner(ay, bx);
}

CMat ad_unitary(const CMat& g, const CMat& m) { return g * m * g.adjoint(); }

CMat lie_from_coords(const std::vector<CMat>& basis, const Eigen::VectorXd& c,
                     int offset) {
  CMat x = CMat::Zero(basis[0].rows(), basis[0].cols());
  for (std::size_t a = 0; a < basis.size(); ++a) x += c(offset + a) * basis[a];
  return x;
}

}  // namespace

std::vector<CMat> lie_basis(int n) {
  std::vector<CMat> basis;
  for (int j = 0; j < n; ++j) {
    CMat m = CMat::Zero(n, n);
    m(j, j) = Cplx(0, 1);
    basis.push_back(m);
  }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      CMat m = CMat::Zero(n, n);
      m(j, k) = 1;
      m(k, j) = -1;
      basis.push_back(m);
      CMat w = CMat::Zero(n, n);
      w(j, k) = Cplx(0, 1);
      w(k, j) = Cplx(0, 1);
      basis.push_back(w);
    }
  return basis;
}

double ad_plus_one_margin(const CMat& u) {
  Eigen::ComplexEigenSolver<CMat> es(u);
  const auto& mu = es.eigenvalues();
  double margin = 2.0;
  for (int j = 0; j < mu.size(); ++j)
    for (int k = 0; k < mu.size(); ++k)
      margin = std::min(margin, std::abs(mu(j) / mu(k) + 1.0));
  return margin;
}

LieTuple QHamModel::random_lie(Rng& rng) const {
  LieTuple xi;
  for (int f = 0; f < group_factors(); ++f)
    xi.push_back(random_anti_hermitian(rng, n()));
  return xi;
}

GroupTuple QHamModel::random_group(Rng& rng) const {
  GroupTuple g;
  for (int f = 0; f < group_factors(); ++f) g.push_back(random_unitary(rng, n()));
  return g;
}

// ---------------------------------------------------------------------------
// disc

double disc_omega0(const CVec& x, const CVec& y) { return (x.adjoint() * y)(0).imag(); }

CMat disc_moment0(const CVec& z) {
  return Cplx(0, -2.0 * kPi * kPi) * (z * z.adjoint());
}

CMat disc_moment0_derivative(const CVec& z, const CVec& x) {
  return Cplx(0, -2.0 * kPi * kPi) * (x * z.adjoint() + z * x.adjoint());
}

double disc_two_form(const CVec& z, const CVec& x, const CVec& y) {
  const CMat lam = disc_moment0(z);
  return disc_omega0(x, y) + varpi_eval(lam, disc_moment0_derivative(z, x),
                                        disc_moment0_derivative(z, y));
}

double disc_lambda_form(const CVec& z, const CVec& x, const CVec& y) {
  const double zz = z.squaredNorm();
  if (zz == 0.0)
    throw std::domain_error("the invariant two-form has a pole at the origin");
  const Cplx zx = (z.adjoint() * x)(0);
  const Cplx zy = (z.adjoint() * y)(0);
  const auto a = [&](const Cplx& c) { return 2.0 * c.real() / zz; };
  const auto b = [&](const Cplx& c) { return 0.5 * c.imag(); };
  return a(zx) * b(zy) - a(zy) * b(zx);
}

double disc_closed_form(const CVec& z, const CVec& x, const CVec& y) {
  const double zz = z.squaredNorm();
  if (zz == 0.0) return disc_omega0(x, y);
  const double t = 2.0 * kPi * kPi * zz;
  const double factor = std::sin(t) / t;
  const double lam = disc_lambda_form(z, x, y);
  return lam + factor * (disc_omega0(x, y) - lam);
}

CVec sphere_transition(const CVec& z) {
  const double zz = z.squaredNorm();
  if (zz == 0.0) throw std::domain_error("the gluing map is undefined at the origin");
  const double s = std::sqrt(1.0 / kPi - zz) / std::sqrt(zz);
  return -s * z;
}

namespace {

class DiscModel : public QHamModel {
 public:
  explicit DiscModel(int n, bool opposite = false, std::string name = "disc")
      : n_(n), sign_(opposite ? -1.0 : 1.0), name_(std::move(name)) {}

  std::string name() const override { return name_; }
  int n() const override { return n_; }
  int group_factors() const override { return 1; }
  int chart_dim() const override { return 2 * n_; }

  ModelPoint random_point(Rng& rng) const override {
    ModelPoint p;
    CVec z = random_cvector(rng, n_);
    // keep clear of the boundary and of the equator level, where the ambient
    // adjoint develops a -1 eigenvalue
    double target = rng.uniform(0.05, 0.95) / kPi;
    while (std::abs(target - 0.5 / kPi) < 0.03 / kPi)
      target = rng.uniform(0.05, 0.95) / kPi;
    p.z = z * std::sqrt(target / z.squaredNorm());
    return p;
  }

  ModelTangent random_tangent(Rng& rng, const ModelPoint&) const override {
    ModelTangent t;
    t.dz = random_cvector(rng, n_);
    return t;
  }

  ModelPoint chart_point(const ModelPoint& base, const Eigen::VectorXd& c) const override {
    ModelPoint p = base;
    for (int j = 0; j < n_; ++j) p.z(j) += Cplx(c(2 * j), c(2 * j + 1));
    return p;
  }

  ModelTangent chart_tangent(const ModelPoint&, const Eigen::VectorXd&,
                             const Eigen::VectorXd& dc) const override {
    ModelTangent t;
    t.dz = CVec(n_);
    for (int j = 0; j < n_; ++j) t.dz(j) = Cplx(dc(2 * j), dc(2 * j + 1));
    return t;
  }

  double two_form(const ModelPoint& p, const ModelTangent& x,
                  const ModelTangent& y) const override {
    if (kPi * p.z.squaredNorm() >= 1.0)
      throw std::domain_error("disc point outside pi |z|^2 < 1");
    return sign_ * disc_two_form(p.z, x.dz, y.dz);
  }

  std::vector<CMat> moment(const ModelPoint& p) const override {
    CMat m = expm_anti_hermitian(disc_moment0(p.z));
    if (sign_ < 0) m = m.adjoint().eval();
    return {m};
  }

  ModelTangent inf_action(const ModelPoint& p, const LieTuple& xi) const override {
    ModelTangent t;
    t.dz = xi[0] * p.z;
    return t;
  }

  ModelPoint act(const ModelPoint& p, const GroupTuple& g) const override {
    ModelPoint q = p;
    q.z = g[0] * p.z;
    return q;
  }

  std::vector<CMat> moment_theta_left(const ModelPoint& p,
                                      const ModelTangent& x) const override {
    const CMat lam = disc_moment0(p.z);
    const CMat d = disc_moment0_derivative(p.z, x.dz);
    if (sign_ > 0) return {ad_analytic(AdKernel::DexpLeft, lam, d)};
    // inversion swaps and negates the Maurer-Cartan pullbacks
    return {(-ad_analytic(AdKernel::DexpRight, lam, d)).eval()};
  }

  std::vector<CMat> moment_theta_right(const ModelPoint& p,
                                       const ModelTangent& x) const override {
    const CMat lam = disc_moment0(p.z);
    const CMat d = disc_moment0_derivative(p.z, x.dz);
    if (sign_ > 0) return {ad_analytic(AdKernel::DexpRight, lam, d)};
    return {(-ad_analytic(AdKernel::DexpLeft, lam, d)).eval()};
  }

 private:
  int n_;
  double sign_;
  std::string name_;
};

// Two discs glued along phi; chart 1 carries the opposite structure.
class SphereModel : public QHamModel {
 public:
  explicit SphereModel(int n) : disc_(n), opposite_(n, true, "disc-opposite") {}

  std::string name() const override { return "sphere"; }
  int n() const override { return disc_.n(); }
  int group_factors() const override { return 1; }
  int chart_dim() const override { return disc_.chart_dim(); }

  ModelPoint random_point(Rng& rng) const override {
    ModelPoint p = disc_.random_point(rng);
    p.chart = rng.uniform() < 0.5 ? 0 : 1;
    return p;
  }

  ModelTangent random_tangent(Rng& rng, const ModelPoint& p) const override {
    return disc_.random_tangent(rng, p);
  }

  ModelPoint chart_point(const ModelPoint& base, const Eigen::VectorXd& c) const override {
    ModelPoint p = disc_.chart_point(base, c);
    p.chart = base.chart;
    return p;
  }

  ModelTangent chart_tangent(const ModelPoint& base, const Eigen::VectorXd& c,
                             const Eigen::VectorXd& dc) const override {
    return disc_.chart_tangent(base, c, dc);
  }

  double two_form(const ModelPoint& p, const ModelTangent& x,
                  const ModelTangent& y) const override {
    return side(p).two_form(p, x, y);
  }
  std::vector<CMat> moment(const ModelPoint& p) const override {
    return side(p).moment(p);
  }
  ModelTangent inf_action(const ModelPoint& p, const LieTuple& xi) const override {
    return side(p).inf_action(p, xi);
  }
  ModelPoint act(const ModelPoint& p, const GroupTuple& g) const override {
    ModelPoint q = side(p).act(p, g);
    q.chart = p.chart;
    return q;
  }
  std::vector<CMat> moment_theta_left(const ModelPoint& p,
                                      const ModelTangent& x) const override {
    return side(p).moment_theta_left(p, x);
  }
  std::vector<CMat> moment_theta_right(const ModelPoint& p,
                                       const ModelTangent& x) const override {
    return side(p).moment_theta_right(p, x);
  }

 private:
  const DiscModel& side(const ModelPoint& p) const {
    return p.chart == 0 ? disc_ : opposite_;
  }
  DiscModel disc_;
  DiscModel opposite_;
};

class DoubleModel : public QHamModel {
 public:
  explicit DoubleModel(int n, bool fused = false)
      : n_(n), fused_(fused), basis_(lie_basis(n)) {}

  std::string name() const override { return fused_ ? "fused-double" : "double"; }
  int n() const override { return n_; }
  int group_factors() const override { return fused_ ? 1 : 2; }
  int chart_dim() const override { return 2 * n_ * n_; }

  ModelPoint random_point(Rng& rng) const override {
    ModelPoint p;
    p.u = random_unitary(rng, n_);
    p.v = random_unitary(rng, n_);
    return p;
  }

  ModelTangent random_tangent(Rng& rng, const ModelPoint&) const override {
    ModelTangent t;
    t.xu = random_anti_hermitian(rng, n_);
    t.xv = random_anti_hermitian(rng, n_);
    return t;
  }

  ModelPoint chart_point(const ModelPoint& base, const Eigen::VectorXd& c) const override {
    ModelPoint p;
    p.u = base.u * expm_anti_hermitian(lie_from_coords(basis_, c, 0));
    p.v = base.v * expm_anti_hermitian(lie_from_coords(basis_, c, n_ * n_));
    return p;
  }

  ModelTangent chart_tangent(const ModelPoint&, const Eigen::VectorXd& c,
                             const Eigen::VectorXd& dc) const override {
    ModelTangent t;
    t.xu = ad_analytic(AdKernel::DexpLeft, lie_from_coords(basis_, c, 0),
                       lie_from_coords(basis_, dc, 0));
    t.xv = ad_analytic(AdKernel::DexpLeft, lie_from_coords(basis_, c, n_ * n_),
                       lie_from_coords(basis_, dc, n_ * n_));
    return t;
  }

  // omega = -1/2 (Ad(v) u*thetaL, u*thetaL) - 1/2 (u*thetaL, v*(thetaL+thetaR))
  double two_form(const ModelPoint& p, const ModelTangent& x,
                  const ModelTangent& y) const override {
    const CMat adv_xu_x = ad_unitary(p.v, x.xu);
    const CMat adv_xu_y = ad_unitary(p.v, y.xu);
    const CMat sum_x = x.xv + ad_unitary(p.v, x.xv);
    const CMat sum_y = y.xv + ad_unitary(p.v, y.xv);
    double w = -0.5 * form_pair(adv_xu_x, adv_xu_y, x.xu, y.xu) -
               0.5 * form_pair(x.xu, y.xu, sum_x, sum_y);
    if (fused_) {
      // fusion correction 1/2 (Psi1* thetaL, Psi2* thetaR)
      const CMat a_x = psi1_theta_left(p, x);
      const CMat a_y = psi1_theta_left(p, y);
      const CMat b_x = ad_unitary(p.v, x.xv);
      const CMat b_y = ad_unitary(p.v, y.xv);
      w += 0.5 * form_pair(a_x, a_y, b_x, b_y);
    }
    return w;
  }

  std::vector<CMat> moment(const ModelPoint& p) const override {
    const CMat psi1 = p.u * p.v.adjoint() * p.u.adjoint();
    if (fused_) return {psi1 * p.v};
    return {psi1, p.v};
  }

  ModelTangent inf_action(const ModelPoint& p, const LieTuple& xi) const override {
    const CMat& x1 = xi[0];
    const CMat& x2 = fused_ ? xi[0] : xi[1];
    ModelTangent t;
    t.xu = p.u.adjoint() * x1 * p.u - x2;
    t.xv = p.v.adjoint() * x2 * p.v - x2;
    return t;
  }

  ModelPoint act(const ModelPoint& p, const GroupTuple& g) const override {
    const CMat& g1 = g[0];
    const CMat& g2 = fused_ ? g[0] : g[1];
    ModelPoint q;
    q.u = g1 * p.u * g2.adjoint();
    q.v = g2 * p.v * g2.adjoint();
    return q;
  }

  std::vector<CMat> moment_theta_left(const ModelPoint& p,
                                      const ModelTangent& x) const override {
    if (!fused_) return {psi1_theta_left(p, x), x.xv};
    const CMat phi = p.u * p.v.adjoint() * p.u.adjoint() * p.v;
    return {phi.adjoint() * d_phi_fused(p, x)};
  }

  std::vector<CMat> moment_theta_right(const ModelPoint& p,
                                       const ModelTangent& x) const override {
    if (!fused_) {
      const CMat psi1 = p.u * p.v.adjoint() * p.u.adjoint();
      return {d_psi1(p, x) * psi1.adjoint(), ad_unitary(p.v, x.xv)};
    }
    const CMat phi = p.u * p.v.adjoint() * p.u.adjoint() * p.v;
    return {d_phi_fused(p, x) * phi.adjoint()};
  }

 private:
  CMat d_psi1(const ModelPoint& p, const ModelTangent& x) const {
    const CMat vinv = p.v.adjoint();
    return p.u * (x.xu * vinv - x.xv * vinv - vinv * x.xu) * p.u.adjoint();
  }
  CMat psi1_theta_left(const ModelPoint& p, const ModelTangent& x) const {
    const CMat psi1 = p.u * p.v.adjoint() * p.u.adjoint();
    return psi1.adjoint() * d_psi1(p, x);
  }
  CMat d_phi_fused(const ModelPoint& p, const ModelTangent& x) const {
    const CMat psi1 = p.u * p.v.adjoint() * p.u.adjoint();
    return d_psi1(p, x) * p.v + psi1 * p.v * x.xv;
  }

  int n_;
  bool fused_;
  std::vector<CMat> basis_;
};

class ExpCotangentModel : public QHamModel {
 public:
  explicit ExpCotangentModel(int n) : n_(n), basis_(lie_basis(n)) {}

  std::string name() const override { return "exp-cotangent"; }
  int n() const override { return n_; }
  int group_factors() const override { return 2; }
  int chart_dim() const override { return 2 * n_ * n_; }

  ModelPoint random_point(Rng& rng) const override {
    ModelPoint p;
    p.u = random_unitary(rng, n_);
    p.lam = random_regular_anti_hermitian(rng, n_);
    return p;
  }

  ModelTangent random_tangent(Rng& rng, const ModelPoint&) const override {
    ModelTangent t;
    t.xu = random_anti_hermitian(rng, n_);
    t.xv = random_anti_hermitian(rng, n_);
    return t;
  }

  ModelPoint chart_point(const ModelPoint& base, const Eigen::VectorXd& c) const override {
    ModelPoint p;
    p.u = base.u * expm_anti_hermitian(lie_from_coords(basis_, c, 0));
    p.lam = base.lam + lie_from_coords(basis_, c, n_ * n_);
    return p;
  }

  ModelTangent chart_tangent(const ModelPoint&, const Eigen::VectorXd& c,
                             const Eigen::VectorXd& dc) const override {
    ModelTangent t;
    t.xu = ad_analytic(AdKernel::DexpLeft, lie_from_coords(basis_, c, 0),
                       lie_from_coords(basis_, dc, 0));
    t.xv = lie_from_coords(basis_, dc, n_ * n_);
    return t;
  }

  // omega((xi1,eta1),(xi2,eta2)) = -(sinh(ad lam) xi1, xi2)
  //   - ((sinh ad lam / ad lam) xi1, eta2) + ((sinh ad lam / ad lam) xi2, eta1)
  double two_form(const ModelPoint& p, const ModelTangent& x,
                  const ModelTangent& y) const override {
    const CMat sx = ad_analytic(AdKernel::Sinh, p.lam, x.xu);
    const CMat rx = ad_analytic(AdKernel::SinhOverX, p.lam, x.xu);
    const CMat ry = ad_analytic(AdKernel::SinhOverX, p.lam, y.xu);
    return -lie_inner(sx, y.xu) - lie_inner(rx, y.xv) + lie_inner(ry, x.xv);
  }

  std::vector<CMat> moment(const ModelPoint& p) const override {
    const CMat e = expm_anti_hermitian(p.lam);
    return {p.u * e.adjoint() * p.u.adjoint(), e};
  }

  ModelTangent inf_action(const ModelPoint& p, const LieTuple& xi) const override {
    ModelTangent t;
    t.xu = p.u.adjoint() * xi[0] * p.u - xi[1];
    t.xv = xi[1] * p.lam - p.lam * xi[1];
    return t;
  }

  ModelPoint act(const ModelPoint& p, const GroupTuple& g) const override {
    ModelPoint q;
    q.u = g[0] * p.u * g[1].adjoint();
    q.lam = g[1] * p.lam * g[1].adjoint();
    return q;
  }

  std::vector<CMat> moment_theta_left(const ModelPoint& p,
                                      const ModelTangent& x) const override {
    auto [m1, dm1, m2, dm2] = derivatives(p, x);
    return {m1.adjoint() * dm1, m2.adjoint() * dm2};
  }

  std::vector<CMat> moment_theta_right(const ModelPoint& p,
                                       const ModelTangent& x) const override {
    auto [m1, dm1, m2, dm2] = derivatives(p, x);
    return {dm1 * m1.adjoint(), dm2 * m2.adjoint()};
  }

 private:
  std::tuple<CMat, CMat, CMat, CMat> derivatives(const ModelPoint& p,
                                                 const ModelTangent& x) const {
    const CMat e = expm_anti_hermitian(-p.lam);
    const CMat de = e * ad_analytic(AdKernel::DexpLeft, -p.lam, (-x.xv).eval());
    const CMat m1 = p.u * e * p.u.adjoint();
    const CMat dm1 = p.u * (x.xu * e + de - e * x.xu) * p.u.adjoint();
    const CMat e2 = expm_anti_hermitian(p.lam);
    const CMat dm2 = e2 * ad_analytic(AdKernel::DexpLeft, p.lam, x.xv);
    return {m1, dm1, e2, dm2};
  }

  int n_;
  std::vector<CMat> basis_;
};

}  // namespace

std::unique_ptr<QHamModel> make_model(const std::string& kind, int n) {
  if (n < 2) throw std::invalid_argument("models require matrix size n >= 2");
  if (kind == "disc") return std::make_unique<DiscModel>(n);
  if (kind == "sphere") return std::make_unique<SphereModel>(n);
  if (kind == "double") return std::make_unique<DoubleModel>(n, false);
  if (kind == "fused-double") return std::make_unique<DoubleModel>(n, true);
  if (kind == "exp-cotangent") return std::make_unique<ExpCotangentModel>(n);
  throw std::invalid_argument("unknown model kind '" + kind +
                              "': expected disc, sphere, double, fused-double or "
                              "exp-cotangent");
}

const std::vector<std::string>& model_kinds() {
  static const std::vector<std::string> kinds = {"disc", "sphere", "double",
                                                 "fused-double", "exp-cotangent"};
  return kinds;
}

}  // namespace qhi::num
