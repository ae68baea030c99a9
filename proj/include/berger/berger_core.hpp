#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "berger/rational.hpp"

namespace berger {

// Raised by the projective embeddings, which only exist for tau^2 < 1.
class UnsupportedAtRound : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Deformation parameter: exact tau^2 in (0, 1] plus its float square root.
class BergerParam {
public:
    explicit BergerParam(Rational tau_sq);
    static BergerParam parse(std::string_view text) { return BergerParam(Rational::parse(text)); }

    const Rational& tau_sq() const { return tau_sq_; }
    double tau() const { return tau_; }
    double tau_sq_d() const { return tau_sq_.to_double(); }
    // 1 - tau^2
    Rational defect() const { return Rational(1) - tau_sq_; }
    // (1 - tau^2) / tau^2, the fibre-stretch coefficient of the spectra
    Rational stretch() const { return defect() / tau_sq_; }
    bool is_round() const { return tau_sq_ == Rational(1); }

private:
    Rational tau_sq_;
    double tau_;
};

// Real coordinates (Re z_0, Im z_0, Re z_1, Im z_1, ...) of C^{n+1}.
using RealVec = Eigen::VectorXd;
using ComplexVec = Eigen::VectorXcd;

RealVec times_i(const RealVec& v);
ComplexVec to_complex(const RealVec& v);
RealVec to_real(const ComplexVec& v);

struct AmbientPoint {
    RealVec coords;
    int n = 0;

    // Validates unit norm within 1e-12.
    static AmbientPoint from_coords(const RealVec& coords);
    // Rescales an arbitrary nonzero vector onto the sphere.
    static AmbientPoint normalized(const RealVec& coords);
};

struct TangentVector {
    AmbientPoint base;
    RealVec comps;

    // Validates tangency within 1e-10.
    static TangentVector at(const AmbientPoint& base, const RealVec& comps);
    // Removes the radial component.
    static TangentVector project(const AmbientPoint& base, const RealVec& v);

    TangentVector operator+(const TangentVector& o) const;
    TangentVector operator-(const TangentVector& o) const;
    TangentVector operator*(double s) const;
};

double euclidean(const RealVec& v, const RealVec& w);

double metric_eval(const BergerParam& tau, const AmbientPoint& z, const TangentVector& v,
                   const TangentVector& w);
TangentVector killing_field(const BergerParam& tau, const AmbientPoint& z);
AmbientPoint killing_flow(const BergerParam& tau, double t, const AmbientPoint& z);
// Differential of the flow at time t, applied to a vector at z.
TangentVector killing_flow_push(const BergerParam& tau, double t, const TangentVector& v);

// Multiplication by i followed by projection onto the tangent space of the sphere.
TangentVector complex_structure(const TangentVector& v);
// Component of v orthogonal to the fibre.
TangentVector horizontal_part(const TangentVector& v);

TangentVector connection_correction(const BergerParam& tau, const AmbientPoint& z, const TangentVector& X,
                                    const TangentVector& Y);

double curvature_tensor(const BergerParam& tau, const AmbientPoint& z, const TangentVector& X,
                        const TangentVector& Y, const TangentVector& Z, const TangentVector& W);
double sectional_curvature(const BergerParam& tau, const AmbientPoint& z, const TangentVector& v,
                           const TangentVector& w);
double ricci(const BergerParam& tau, const AmbientPoint& z, const TangentVector& v);
Rational scalar_curvature(const BergerParam& tau, int n);

// Berger-orthonormal frame at z: the Killing field first, then a horizontal basis
// obtained by projecting coordinate vectors and applying Gram-Schmidt.
std::vector<TangentVector> orthonormal_frame(const BergerParam& tau, const AmbientPoint& z);

struct ProjectivePoint {
    ComplexVec rep;
    double scale = 1.0;

    // Normalizes the representative to the sphere of radius `scale`; rejects zero.
    static ProjectivePoint make(const ComplexVec& rep, double scale);
};

// Component of an ambient vector orthogonal to rep and i*rep.
ComplexVec horizontal_lift(const ProjectivePoint& p, const ComplexVec& u);
// Fubini-Study inner product through horizontal lifts on the sphere of radius p.scale.
double fubini_study(const ProjectivePoint& p, const ComplexVec& u, const ComplexVec& v);

ProjectivePoint geodesic_sphere_embed(const BergerParam& tau, const AmbientPoint& z);
double sff_geodesic_sphere(const BergerParam& tau, const TangentVector& X, const TangentVector& Y);
double ambient_mean_curvature(const BergerParam& tau, int d, double xi_top_norm_sq);

struct HermitianMatrix {
    Eigen::MatrixXcd entries;

    static HermitianMatrix make(const Eigen::MatrixXcd& m);
    int order() const { return static_cast<int>(entries.rows()); }
};

// <A, B> = tr(AB)
double hermitian_inner(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// Radius of the sphere carrying representatives for the Tai map, 1/sqrt(1 - tau^2).
double tai_source_radius(const BergerParam& tau);
HermitianMatrix tai_embed(const BergerParam& tau, const ProjectivePoint& p);
Eigen::MatrixXcd tai_center(const BergerParam& tau, int order);
double tai_radius_sq(const BergerParam& tau, int order);

// Tangent vector of projective space represented by its horizontal lift at p.
struct ProjectiveTangent {
    ProjectivePoint base;
    ComplexVec comps;

    static ProjectiveTangent horizontal(const ProjectivePoint& base, const ComplexVec& u);
};

double tai_sff_inner(const BergerParam& tau, const ProjectiveTangent& x, const ProjectiveTangent& y,
                     const ProjectiveTangent& v, const ProjectiveTangent& w);

}  // namespace berger
