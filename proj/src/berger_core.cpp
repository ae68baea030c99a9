#include "berger/berger_core.hpp"

#include <cmath>
#include <complex>

namespace berger {

namespace {

void require_same_base(const AmbientPoint& z, const TangentVector& v) {
    if (v.base.n != z.n || (v.base.coords - z.coords).norm() > 1e-12)
        throw std::domain_error("tangent vector is not based at the given point");
}

void require_same_base(const TangentVector& a, const TangentVector& b) { require_same_base(a.base, b); }

}  // namespace

BergerParam::BergerParam(Rational tau_sq) : tau_sq_(tau_sq) {
    if (tau_sq_.sign() <= 0 || tau_sq_ > Rational(1))
        throw std::domain_error("tau^2 must lie in (0, 1], got " + tau_sq_.str());
    tau_ = std::sqrt(tau_sq_.to_double());
}

RealVec times_i(const RealVec& v) {
    RealVec out(v.size());
    for (Eigen::Index j = 0; j + 1 < v.size(); j += 2) {
        out[j] = -v[j + 1];
        out[j + 1] = v[j];
    }
    return out;
}

ComplexVec to_complex(const RealVec& v) {
    ComplexVec out(v.size() / 2);
    for (Eigen::Index j = 0; j < out.size(); ++j) out[j] = {v[2 * j], v[2 * j + 1]};
    return out;
}

RealVec to_real(const ComplexVec& v) {
    RealVec out(2 * v.size());
    for (Eigen::Index j = 0; j < v.size(); ++j) {
        out[2 * j] = v[j].real();
        out[2 * j + 1] = v[j].imag();
    }
    return out;
}

AmbientPoint AmbientPoint::from_coords(const RealVec& coords) {
    if (coords.size() < 2 || coords.size() % 2 != 0)
        throw std::domain_error("ambient coordinates must have even length >= 2");
    if (std::abs(coords.norm() - 1.0) > 1e-12) throw std::domain_error("ambient point is not on the unit sphere");
    return {coords, static_cast<int>(coords.size() / 2 - 1)};
}

AmbientPoint AmbientPoint::normalized(const RealVec& coords) {
    double r = coords.norm();
    if (r == 0.0) throw std::domain_error("cannot normalize the zero vector");
    return from_coords(coords / r);
}

TangentVector TangentVector::at(const AmbientPoint& base, const RealVec& comps) {
    if (comps.size() != base.coords.size()) throw std::domain_error("tangent vector has the wrong dimension");
    if (std::abs(comps.dot(base.coords)) > 1e-10) throw std::domain_error("vector is not tangent to the sphere");
    return {base, comps};
}

TangentVector TangentVector::project(const AmbientPoint& base, const RealVec& v) {
    if (v.size() != base.coords.size()) throw std::domain_error("tangent vector has the wrong dimension");
    return {base, v - v.dot(base.coords) * base.coords};
}

TangentVector TangentVector::operator+(const TangentVector& o) const {
    require_same_base(*this, o);
    return {base, comps + o.comps};
}

TangentVector TangentVector::operator-(const TangentVector& o) const {
    require_same_base(*this, o);
    return {base, comps - o.comps};
}

TangentVector TangentVector::operator*(double s) const { return {base, comps * s}; }

double euclidean(const RealVec& v, const RealVec& w) { return v.dot(w); }

double metric_eval(const BergerParam& tau, const AmbientPoint& z, const TangentVector& v, const TangentVector& w) {
    require_same_base(z, v);
    require_same_base(z, w);
    RealVec iz = times_i(z.coords);
    return v.comps.dot(w.comps) - (1.0 - tau.tau_sq_d()) * v.comps.dot(iz) * w.comps.dot(iz);
}

TangentVector killing_field(const BergerParam& tau, const AmbientPoint& z) {
    return {z, times_i(z.coords) / tau.tau()};
}

AmbientPoint killing_flow(const BergerParam& tau, double t, const AmbientPoint& z) {
    double s = t / tau.tau();
    RealVec w = std::cos(s) * z.coords + std::sin(s) * times_i(z.coords);
    return {w, z.n};
}

TangentVector killing_flow_push(const BergerParam& tau, double t, const TangentVector& v) {
    double s = t / tau.tau();
    AmbientPoint moved = killing_flow(tau, t, v.base);
    return {moved, std::cos(s) * v.comps + std::sin(s) * times_i(v.comps)};
}

TangentVector complex_structure(const TangentVector& v) { return TangentVector::project(v.base, times_i(v.comps)); }

TangentVector horizontal_part(const TangentVector& v) {
    RealVec iz = times_i(v.base.coords);
    return {v.base, v.comps - v.comps.dot(iz) * iz};
}

TangentVector connection_correction(const BergerParam& tau, const AmbientPoint& z, const TangentVector& X,
                                    const TangentVector& Y) {
    require_same_base(z, X);
    require_same_base(z, Y);
    TangentVector xi = killing_field(tau, z);
    double xk = metric_eval(tau, z, X, xi);
    double yk = metric_eval(tau, z, Y, xi);
    TangentVector jx = complex_structure(X - xi * xk);
    TangentVector jy = complex_structure(Y - xi * yk);
    double c = (1.0 - tau.tau_sq_d()) / tau.tau();
    return (jx * yk + jy * xk) * c;
}

double curvature_tensor(const BergerParam& tau, const AmbientPoint& z, const TangentVector& X,
                        const TangentVector& Y, const TangentVector& Z, const TangentVector& W) {
    auto ip = [&](const TangentVector& a, const TangentVector& b) { return metric_eval(tau, z, a, b); };
    TangentVector xi = killing_field(tau, z);
    TangentVector jx = complex_structure(X);
    TangentVector jy = complex_structure(Y);
    TangentVector jz = complex_structure(Z);
    double d = 1.0 - tau.tau_sq_d();
    double xx = ip(X, xi), yx = ip(Y, xi), zx = ip(Z, xi), wx = ip(W, xi);
    return ip(Y, Z) * ip(X, W) - ip(X, Z) * ip(Y, W) +
           d * (ip(jy, Z) * ip(jx, W) - ip(jx, Z) * ip(jy, W) - 2.0 * ip(jx, Y) * ip(jz, W)) +
           d * zx * (xx * ip(Y, W) - yx * ip(X, W)) + d * wx * (yx * ip(X, Z) - xx * ip(Y, Z));
}

double sectional_curvature(const BergerParam& tau, const AmbientPoint& z, const TangentVector& v,
                           const TangentVector& w) {
    constexpr double tol = 1e-8;
    if (std::abs(metric_eval(tau, z, v, v) - 1.0) > tol || std::abs(metric_eval(tau, z, w, w) - 1.0) > tol ||
        std::abs(metric_eval(tau, z, v, w)) > tol)
        throw std::domain_error("sectional curvature needs an orthonormal pair");
    TangentVector xi = killing_field(tau, z);
    double vjw = metric_eval(tau, z, v, complex_structure(w));
    double vx = metric_eval(tau, z, v, xi);
    double wx = metric_eval(tau, z, w, xi);
    return 1.0 + (1.0 - tau.tau_sq_d()) * (3.0 * vjw * vjw - (vx * vx + wx * wx));
}

double ricci(const BergerParam& tau, const AmbientPoint& z, const TangentVector& v) {
    if (std::abs(metric_eval(tau, z, v, v) - 1.0) > 1e-8) throw std::domain_error("ricci curvature needs a unit vector");
    double vx = metric_eval(tau, z, v, killing_field(tau, z));
    double n = z.n;
    return 2.0 * n + 2.0 * (1.0 - tau.tau_sq_d()) * (1.0 - (n + 1.0) * vx * vx);
}

Rational scalar_curvature(const BergerParam& tau, int n) {
    if (n < 0) throw std::domain_error("negative dimension");
    return Rational(2 * n) * (Rational(2 * (n + 1)) - tau.tau_sq());
}

std::vector<TangentVector> orthonormal_frame(const BergerParam& tau, const AmbientPoint& z) {
    std::vector<TangentVector> frame{killing_field(tau, z)};
    RealVec iz = times_i(z.coords);
    const auto dim = z.coords.size();
    for (Eigen::Index j = 0; j < dim && static_cast<Eigen::Index>(frame.size()) < dim - 1; ++j) {
        RealVec e = RealVec::Zero(dim);
        e[j] = 1.0;
        e -= e.dot(z.coords) * z.coords + e.dot(iz) * iz;
        // horizontal vectors: the Berger metric is Euclidean there
        for (std::size_t k = 1; k < frame.size(); ++k) e -= e.dot(frame[k].comps) * frame[k].comps;
        double r = e.norm();
        if (r < 1e-6) continue;
        frame.push_back({z, e / r});
    }
    return frame;
}

ProjectivePoint ProjectivePoint::make(const ComplexVec& rep, double scale) {
    double r = rep.norm();
    if (r == 0.0) throw std::domain_error("projective point needs a nonzero representative");
    if (!(scale > 0.0)) throw std::domain_error("projective scale must be positive");
    return {rep * (scale / r), scale};
}

ComplexVec horizontal_lift(const ProjectivePoint& p, const ComplexVec& u) {
    const ComplexVec& w = p.rep;
    double r2 = w.squaredNorm();
    // removes both the radial (w) and the fibre (i w) directions
    return u - (w.dot(u) / r2) * w;
}

double fubini_study(const ProjectivePoint& p, const ComplexVec& u, const ComplexVec& v) {
    return horizontal_lift(p, u).dot(horizontal_lift(p, v)).real();
}

ProjectivePoint geodesic_sphere_embed(const BergerParam& tau, const AmbientPoint& z) {
    if (tau.is_round()) throw UnsupportedAtRound("geodesic-sphere embedding is undefined at tau^2 = 1");
    double d = 1.0 - tau.tau_sq_d();
    ComplexVec rep(z.n + 2);
    rep[0] = tau.tau() / std::sqrt(d);
    rep.tail(z.n + 1) = to_complex(z.coords);
    ProjectivePoint p;
    p.rep = rep;
    p.scale = 1.0 / std::sqrt(d);
    return p;
}

double sff_geodesic_sphere(const BergerParam& tau, const TangentVector& X, const TangentVector& Y) {
    require_same_base(X, Y);
    const AmbientPoint& z = X.base;
    TangentVector xi = killing_field(tau, z);
    return tau.tau() * metric_eval(tau, z, X, Y) -
           ((1.0 - tau.tau_sq_d()) / tau.tau()) * metric_eval(tau, z, X, xi) * metric_eval(tau, z, Y, xi);
}

double ambient_mean_curvature(const BergerParam& tau, int d, double xi_top_norm_sq) {
    if (d < 1) throw std::domain_error("dimension must be positive");
    if (xi_top_norm_sq < 0.0 || xi_top_norm_sq > 1.0) throw std::domain_error("|xi^T|^2 must lie in [0, 1]");
    double t = tau.tau();
    return (t * d - ((1.0 - tau.tau_sq_d()) / t) * xi_top_norm_sq) / d;
}

HermitianMatrix HermitianMatrix::make(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols() || m.rows() == 0) throw std::domain_error("hermitian matrix must be square");
    if ((m - m.adjoint()).norm() > 1e-12) throw std::domain_error("matrix is not hermitian");
    return {m};
}

double hermitian_inner(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a * b).trace().real(); }

double tai_source_radius(const BergerParam& tau) {
    if (tau.is_round()) throw UnsupportedAtRound("Tai embedding is undefined at tau^2 = 1");
    return 1.0 / std::sqrt(1.0 - tau.tau_sq_d());
}

HermitianMatrix tai_embed(const BergerParam& tau, const ProjectivePoint& p) {
    double radius = tai_source_radius(tau);
    ProjectivePoint q = ProjectivePoint::make(p.rep, radius);
    double k = std::sqrt((1.0 - tau.tau_sq_d()) / 2.0);
    Eigen::MatrixXcd m = k * (q.rep * q.rep.adjoint());
    return {0.5 * (m + m.adjoint())};
}

Eigen::MatrixXcd tai_center(const BergerParam& tau, int order) {
    tai_source_radius(tau);
    double c = 1.0 / (order * std::sqrt(2.0 * (1.0 - tau.tau_sq_d())));
    return c * Eigen::MatrixXcd::Identity(order, order);
}

double tai_radius_sq(const BergerParam& tau, int order) {
    tai_source_radius(tau);
    return static_cast<double>(order - 1) / (order * 2.0 * (1.0 - tau.tau_sq_d()));
}

ProjectiveTangent ProjectiveTangent::horizontal(const ProjectivePoint& base, const ComplexVec& u) {
    if (u.size() != base.rep.size()) throw std::domain_error("projective tangent has the wrong dimension");
    return {base, horizontal_lift(base, u)};
}

double tai_sff_inner(const BergerParam& tau, const ProjectiveTangent& x, const ProjectiveTangent& y,
                     const ProjectiveTangent& v, const ProjectiveTangent& w) {
    for (const auto* t : {&y, &v, &w})
        if ((t->base.rep - x.base.rep).norm() > 1e-12)
            throw std::domain_error("tangent vectors are based at different projective points");
    auto ip = [&](const ComplexVec& a, const ComplexVec& b) { return fubini_study(x.base, a, b); };
    const std::complex<double> i(0.0, 1.0);
    ComplexVec jv = i * v.comps;
    ComplexVec jw = i * w.comps;
    return (1.0 - tau.tau_sq_d()) *
           (2.0 * ip(x.comps, y.comps) * ip(v.comps, w.comps) + ip(x.comps, w.comps) * ip(y.comps, v.comps) +
            ip(x.comps, v.comps) * ip(y.comps, w.comps) + ip(x.comps, jw) * ip(y.comps, jv) +
            ip(x.comps, jv) * ip(y.comps, jw));
}

}  // namespace berger
