#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "berger/berger_core.hpp"
#include "berger/jacobi_models.hpp"
#include "berger/rational.hpp"

namespace berger {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct CheckReport {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    int samples = 0;
    bool pass = false;
    std::uint64_t seed = kDefaultSeed;
};

CheckReport make_check(std::string name, double max_error, double tolerance, int samples, std::uint64_t seed);

// Independent random stream for one named check.
std::mt19937_64 check_rng(std::uint64_t seed, const std::string& name);

class OracleRefusal : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Kernel dimension of the Laplacian on bidegree-(a,b) monomials z^alpha zbar^beta of C^{n+1},
// by exact fraction-free elimination.
std::int64_t harmonic_dim_bruteforce(int n, int a, int b, int cap = 8);

// Eigenvalues of (L_xi)^2 on the harmonic polynomials of degree k in the real coordinates of
// C^{n+1}, found by exact elimination over the rationals.
std::vector<std::pair<Rational, std::int64_t>> lxi_squared_spectrum(int n, const BergerParam& tau, int k, int cap = 6);

// Lattice generated by pi*(tau*a_i, b_i); the integer patterns keep the Gram matrix exact.
struct LatticeSpec {
    Eigen::Matrix2d generators;  // columns are the generators
    int tau_coeff[2] = {1, 1};
    int const_coeff[2] = {1, -1};
    std::string description;
};

LatticeSpec clifford_lattice(const BergerParam& tau);
// Spectrum of Delta + potential on R^2 / lattice by enumeration of the dual lattice.
IndexReport torus_fourier_index(const BergerParam& tau, const Rational& potential);
// Conformal class (x, y) of the lattice, reduced to |x| <= 1/2, x >= 0, x^2 + y^2 >= 1.
std::pair<double, double> lattice_conformal_class(const LatticeSpec& lattice);

CheckReport killing_check(const BergerParam& tau, int n, int samples, std::uint64_t seed = kDefaultSeed);
CheckReport metric_positivity_check(const BergerParam& tau, int n, int samples, std::uint64_t seed = kDefaultSeed);
CheckReport curvature_symmetry_check(const BergerParam& tau, int n, int samples, std::uint64_t seed = kDefaultSeed);
CheckReport round_curvature_check(int n, int samples, std::uint64_t seed = kDefaultSeed);
CheckReport sectional_consistency_check(const BergerParam& tau, int n, int samples, std::uint64_t seed = kDefaultSeed);
CheckReport ricci_check(const BergerParam& tau, int n, int samples, std::uint64_t seed = kDefaultSeed);
CheckReport geodesic_sphere_isometry_check(const BergerParam& tau, int n, int samples,
                                           std::uint64_t seed = kDefaultSeed);
CheckReport gauss_flatness_check(const BergerParam& tau, int samples = 64, std::uint64_t seed = kDefaultSeed);
CheckReport minimality_first_variation_check(const ModelSubmanifold& model, const BergerParam& tau, int samples,
                                             std::uint64_t seed = kDefaultSeed);
// Isometry, sphere containment, second-fundamental-form law, J-invariance and minimality in the sphere.
std::vector<CheckReport> tai_checks(const BergerParam& tau, int n, int samples, std::uint64_t seed = kDefaultSeed);

// Exact comparisons between closed forms and the oracles, reported as checks whose error is the
// number of mismatches.
CheckReport bidegree_oracle_check(int n_max, int degree_max);
CheckReport lxi_oracle_check(int n_max, int k_max, const BergerParam& tau);
CheckReport torus_oracle_check(const std::vector<Rational>& tau_sq_grid);

// Every geometric and spectral check at the given sample count.
std::vector<CheckReport> verify_suite(int samples, std::uint64_t seed = kDefaultSeed);

}  // namespace berger
