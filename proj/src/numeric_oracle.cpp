#include "berger/numeric_oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "berger/harmonic_spectra.hpp"

namespace berger {

namespace {

using Monomial = std::vector<int>;
using IntMatrix = std::vector<std::vector<mpz_class>>;

// All exponent vectors of length `vars` summing to `degree`, in lexicographic order.
std::vector<Monomial> monomials(int vars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    Monomial cur(vars, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == vars - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[pos] = e;
            rec(pos + 1, left - e);
        }
    };
    rec(0, degree);
    return out;
}

std::map<Monomial, int> index_of(const std::vector<Monomial>& basis) {
    std::map<Monomial, int> idx;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) idx[basis[i]] = i;
    return idx;
}

// Fraction-free (Bareiss) elimination; returns the rank. The matrix is consumed.
int bareiss_rank(IntMatrix m) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    mpz_class prev = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int j = c + 1; j < cols; ++j) {
                m[r][j] = m[rank][c] * m[r][j] - m[r][c] * m[rank][j];
                mpz_divexact(m[r][j].get_mpz_t(), m[r][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

// Kernel basis of an integer matrix as primitive integer vectors, one per free column.
// Returns the free column of each basis vector alongside it.
std::vector<std::pair<int, std::vector<mpz_class>>> integer_kernel(const IntMatrix& a, int cols) {
    std::vector<std::vector<mpq_class>> m;
    for (const auto& row : a) {
        std::vector<mpq_class> r(cols);
        for (int j = 0; j < cols; ++j) r[j] = row[j];
        m.push_back(std::move(r));
    }
    const int rows = static_cast<int>(m.size());
    std::vector<int> pivot_cols;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        mpq_class inv = 1 / m[rank][c];
        for (int j = c; j < cols; ++j) m[rank][j] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            mpq_class f = m[r][c];
            for (int j = c; j < cols; ++j)
                if (m[rank][j] != 0) m[r][j] -= f * m[rank][j];
        }
        pivot_cols.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_cols) is_pivot[c] = true;
    std::vector<std::pair<int, std::vector<mpz_class>>> out;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpq_class> v(cols);
        v[f] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_cols[r]] = -m[r][f];
        mpz_class l = 1;
        for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        std::vector<mpz_class> iv(cols);
        for (int j = 0; j < cols; ++j) {
            mpq_class s = v[j] * l;
            iv[j] = s.get_num();
        }
        out.emplace_back(f, std::move(iv));
    }
    return out;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

RealVec random_gaussian(std::mt19937_64& rng, int size) {
    std::normal_distribution<double> nd(0.0, 1.0);
    RealVec v(size);
    for (int i = 0; i < size; ++i) v[i] = nd(rng);
    return v;
}

AmbientPoint random_point(std::mt19937_64& rng, int n) { return AmbientPoint::normalized(random_gaussian(rng, 2 * n + 2)); }

TangentVector random_tangent(std::mt19937_64& rng, const AmbientPoint& z) {
    TangentVector v = TangentVector::project(z, random_gaussian(rng, static_cast<int>(z.coords.size())));
    return v * (1.0 / v.comps.norm());
}

ComplexVec random_complex(std::mt19937_64& rng, int size) {
    RealVec r = random_gaussian(rng, 2 * size);
    return to_complex(r);
}

}  // namespace

CheckReport make_check(std::string name, double max_error, double tolerance, int samples, std::uint64_t seed) {
    CheckReport r;
    r.name = std::move(name);
    r.max_error = max_error;
    r.tolerance = tolerance;
    r.samples = samples;
    r.pass = std::isfinite(max_error) && max_error <= tolerance;
    r.seed = seed;
    return r;
}

std::mt19937_64 check_rng(std::uint64_t seed, const std::string& name) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(fnv1a(name)), static_cast<std::uint32_t>(fnv1a(name) >> 32)};
    return std::mt19937_64(seq);
}

std::int64_t harmonic_dim_bruteforce(int n, int a, int b, int cap) {
    if (n < 0 || a < 0 || b < 0) throw std::domain_error("harmonic_dim_bruteforce needs nonnegative arguments");
    if (a + b > cap)
        throw OracleRefusal("bidegree " + std::to_string(a) + "+" + std::to_string(b) + " exceeds the oracle cap " +
                            std::to_string(cap));
    const int vars = n + 1;
    auto alphas = monomials(vars, a);
    auto betas = monomials(vars, b);
    const auto cols = static_cast<std::int64_t>(alphas.size() * betas.size());
    if (a == 0 || b == 0) return cols;

    // the Laplacian preserves the weight alpha - beta, so eliminate block by block
    std::map<Monomial, std::vector<std::pair<Monomial, Monomial>>> blocks;
    for (const auto& al : alphas)
        for (const auto& be : betas) {
            Monomial w(vars);
            for (int j = 0; j < vars; ++j) w[j] = al[j] - be[j];
            blocks[w].emplace_back(al, be);
        }
    std::int64_t rank = 0;
    for (const auto& [weight, members] : blocks) {
        std::map<std::pair<Monomial, Monomial>, int> row_index;
        std::vector<std::vector<std::pair<int, int>>> col_entries;
        for (const auto& [al, be] : members) {
            std::vector<std::pair<int, int>> entries;
            for (int j = 0; j < vars; ++j) {
                if (al[j] == 0 || be[j] == 0) continue;
                Monomial a2 = al, b2 = be;
                --a2[j];
                --b2[j];
                auto key = std::make_pair(a2, b2);
                auto it = row_index.find(key);
                int r = it == row_index.end() ? (row_index[key] = static_cast<int>(row_index.size())) : it->second;
                entries.emplace_back(r, 4 * al[j] * be[j]);
            }
            col_entries.push_back(std::move(entries));
        }
        IntMatrix m(row_index.size(), std::vector<mpz_class>(members.size(), 0));
        for (std::size_t c = 0; c < members.size(); ++c)
            for (auto [r, v] : col_entries[c]) m[r][c] += v;
        rank += bareiss_rank(std::move(m));
    }
    return cols - rank;
}

std::vector<std::pair<Rational, std::int64_t>> lxi_squared_spectrum(int n, const BergerParam& tau, int k, int cap) {
    if (n < 0 || k < 0) throw std::domain_error("lxi_squared_spectrum needs n, k >= 0");
    if (k > cap) throw OracleRefusal("degree " + std::to_string(k) + " exceeds the oracle cap " + std::to_string(cap));
    const int vars = 2 * (n + 1);
    auto top = monomials(vars, k);
    auto low = monomials(vars, k - 2);
    auto top_idx = index_of(top);
    auto low_idx = index_of(low);
    const int cols = static_cast<int>(top.size());

    // real Laplacian from degree k to degree k-2
    IntMatrix lap(low.size(), std::vector<mpz_class>(cols, 0));
    for (int c = 0; c < cols; ++c)
        for (int j = 0; j < vars; ++j) {
            if (top[c][j] < 2) continue;
            Monomial e = top[c];
            e[j] -= 2;
            lap[low_idx.at(e)][c] += top[c][j] * (top[c][j] - 1);
        }
    auto kernel = integer_kernel(lap, cols);
    const int dim = static_cast<int>(kernel.size());
    if (dim == 0) return {};

    // D = sum_j (x_j d/dy_j - y_j d/dx_j), the derivative along i z
    auto apply_d = [&](const std::vector<mpz_class>& v) {
        std::vector<mpz_class> out(cols, 0);
        for (int c = 0; c < cols; ++c) {
            if (v[c] == 0) continue;
            for (int j = 0; j < n + 1; ++j) {
                const int x = 2 * j, y = 2 * j + 1;
                if (top[c][y] > 0) {
                    Monomial e = top[c];
                    --e[y];
                    ++e[x];
                    out[top_idx.at(e)] += v[c] * top[c][y];
                }
                if (top[c][x] > 0) {
                    Monomial e = top[c];
                    --e[x];
                    ++e[y];
                    out[top_idx.at(e)] -= v[c] * top[c][x];
                }
            }
        }
        return out;
    };

    // D^2 in kernel coordinates: row j is scaled by the free-column entry of basis vector j
    IntMatrix d2(dim, std::vector<mpz_class>(dim, 0));
    for (int i = 0; i < dim; ++i) {
        auto w = apply_d(apply_d(kernel[i].second));
        for (int j = 0; j < dim; ++j) d2[j][i] = w[kernel[j].first];
    }

    std::vector<std::pair<Rational, std::int64_t>> out;
    std::int64_t total = 0;
    for (int q = 0; q <= k; ++q) {
        IntMatrix shifted = d2;
        for (int j = 0; j < dim; ++j) shifted[j][j] += kernel[j].second[kernel[j].first] * (q * q);
        std::int64_t nullity = dim - bareiss_rank(std::move(shifted));
        if (nullity == 0) continue;
        out.emplace_back(Rational(-static_cast<std::int64_t>(q) * q) / tau.tau_sq(), nullity);
        total += nullity;
    }
    if (total != dim)
        throw std::runtime_error("(L_xi)^2 on degree-" + std::to_string(k) + " harmonics has eigenvalues outside -q^2/tau^2");
    std::reverse(out.begin(), out.end());
    return out;
}

LatticeSpec clifford_lattice(const BergerParam& tau) {
    LatticeSpec spec;
    const double pi = std::numbers::pi;
    spec.generators << pi * tau.tau(), pi * tau.tau(), pi, -pi;
    spec.description =
        "universal-cover parametrization of the minimal Clifford torus; generators pi(tau,1) and pi(tau,-1)";
    return spec;
}

IndexReport torus_fourier_index(const BergerParam& tau, const Rational& potential) {
    LatticeSpec lat = clifford_lattice(tau);
    // exact Gram matrix divided by pi^2
    Rational g[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            g[i][j] = tau.tau_sq() * Rational(lat.tau_coeff[i] * lat.tau_coeff[j]) +
                      Rational(lat.const_coeff[i] * lat.const_coeff[j]);
    Rational det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    if (det.is_zero()) throw std::domain_error("degenerate lattice");
    // 4 pi^2 |gamma*|^2 = 4 n^T G0^{-1} n for the dual vector with integer coordinates n
    auto eigen = [&](std::int64_t a, std::int64_t b) {
        Rational q = g[1][1] * Rational(a * a) - Rational(2) * g[0][1] * Rational(a * b) + g[0][0] * Rational(b * b);
        return Rational(4) * q / det;
    };

    Eigen::Matrix2d dual = lat.generators.inverse().transpose();
    double smin = Eigen::JacobiSVD<Eigen::Matrix2d>(dual).singularValues().minCoeff();
    double bound = std::sqrt(std::max(0.0, potential.to_double())) / (2.0 * std::numbers::pi * smin);
    const auto radius = static_cast<std::int64_t>(std::ceil(bound + 1e-9));

    IndexReport report;
    report.truncation_k = static_cast<int>(radius);
    for (std::int64_t a = -radius; a <= radius; ++a)
        for (std::int64_t b = -radius; b <= radius; ++b) {
            Rational rho = eigen(a, b) - potential;
            if (rho.sign() > 0) continue;
            (rho.sign() < 0 ? report.index : report.nullity) += 1;
            report.nonpositive_modes.push_back(
                {"dual-lattice", {static_cast<int>(a), static_cast<int>(b)}, QuadraticSurd(rho), 1});
        }
    std::stable_sort(report.nonpositive_modes.begin(), report.nonpositive_modes.end(),
                     [](const JacobiMode& x, const JacobiMode& y) {
                         if (x.value.rational_part() != y.value.rational_part())
                             return x.value.rational_part() < y.value.rational_part();
                         return x.labels < y.labels;
                     });
    std::ostringstream cert;
    cert << "dual lattice points n with |n|_inf <= " << radius << " enumerated; the smallest singular value "
         << smin << " of the dual basis gives |gamma*| >= " << smin << " |n|_inf, so every dual vector with "
         << "4 pi^2 |gamma*|^2 <= " << potential << " lies in the box";
    report.certificate = cert.str();
    return report;
}

std::pair<double, double> lattice_conformal_class(const LatticeSpec& lattice) {
    Eigen::Vector2d u = lattice.generators.col(0);
    Eigen::Vector2d v = lattice.generators.col(1);
    // Lagrange-Gauss reduction
    for (int iter = 0; iter < 1000; ++iter) {
        if (v.squaredNorm() < u.squaredNorm()) std::swap(u, v);
        double mu = std::round(u.dot(v) / u.squaredNorm());
        if (mu == 0.0) break;
        v -= mu * u;
    }
    if (v.squaredNorm() < u.squaredNorm()) std::swap(u, v);
    std::complex<double> zu(u.x(), u.y()), zv(v.x(), v.y());
    std::complex<double> w = zv / zu;
    double x = std::abs(w.real());
    double y = std::abs(w.imag());
    return {x, y};
}

CheckReport killing_check(const BergerParam& tau, int n, int samples, std::uint64_t seed) {
    const std::string name = "killing-flow-isometry";
    auto rng = check_rng(seed, name);
    const double h = 1e-5;
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        AmbientPoint z = random_point(rng, n);
        TangentVector v = random_tangent(rng, z);
        TangentVector w = random_tangent(rng, z);
        auto f = [&](double t) {
            TangentVector pv = killing_flow_push(tau, t, v);
            TangentVector pw = killing_flow_push(tau, t, w);
            return metric_eval(tau, pv.base, pv, pw);
        };
        worst = std::max(worst, std::abs((f(h) - f(-h)) / (2 * h)));
    }
    return make_check(name, worst, 1e-6, samples, seed);
}

CheckReport metric_positivity_check(const BergerParam& tau, int n, int samples, std::uint64_t seed) {
    const std::string name = "metric-symmetric-positive";
    auto rng = check_rng(seed, name);
    const int dim = 2 * n + 1;
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        AmbientPoint z = random_point(rng, n);
        std::vector<TangentVector> vs;
        for (int i = 0; i < dim; ++i) vs.push_back(random_tangent(rng, z));
        Eigen::MatrixXd gram(dim, dim);
        double asym = 0.0;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                gram(i, j) = metric_eval(tau, z, vs[i], vs[j]);
                asym = std::max(asym, std::abs(gram(i, j) - metric_eval(tau, z, vs[j], vs[i])));
            }
        // bilinearity in the first slot
        TangentVector comb = vs[0] * 2.0 + vs[1] * -0.5;
        double lin = std::abs(metric_eval(tau, z, comb, vs[2 % dim]) -
                              (2.0 * gram(0, 2 % dim) - 0.5 * gram(1, 2 % dim)));
        double min_eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(gram).eigenvalues().minCoeff();
        double err = std::max(asym, lin);
        if (!(min_eig > 0.0)) err = std::max(err, 1.0);
        worst = std::max(worst, err);
    }
    return make_check(name, worst, 1e-12, samples, seed);
}

CheckReport curvature_symmetry_check(const BergerParam& tau, int n, int samples, std::uint64_t seed) {
    const std::string name = "curvature-symmetries-bianchi";
    auto rng = check_rng(seed, name);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        AmbientPoint z = random_point(rng, n);
        TangentVector x = random_tangent(rng, z), y = random_tangent(rng, z);
        TangentVector u = random_tangent(rng, z), w = random_tangent(rng, z);
        auto R = [&](const TangentVector& a, const TangentVector& b, const TangentVector& c, const TangentVector& d) {
            return curvature_tensor(tau, z, a, b, c, d);
        };
        double r = R(x, y, u, w);
        worst = std::max({worst, std::abs(r + R(y, x, u, w)), std::abs(r + R(x, y, w, u)), std::abs(r - R(u, w, x, y)),
                          std::abs(r + R(y, u, x, w) + R(u, x, y, w))});
    }
    return make_check(name, worst, 1e-10, samples, seed);
}

CheckReport round_curvature_check(int n, int samples, std::uint64_t seed) {
    const std::string name = "round-curvature-degeneration";
    auto rng = check_rng(seed, name);
    const BergerParam one(Rational(1));
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        AmbientPoint z = random_point(rng, n);
        TangentVector x = random_tangent(rng, z), y = random_tangent(rng, z);
        TangentVector u = random_tangent(rng, z), w = random_tangent(rng, z);
        double expect = y.comps.dot(u.comps) * x.comps.dot(w.comps) - x.comps.dot(u.comps) * y.comps.dot(w.comps);
        worst = std::max(worst, std::abs(curvature_tensor(one, z, x, y, u, w) - expect));
    }
    return make_check(name, worst, 1e-12, samples, seed);
}

namespace {

// Berger-orthonormal pair spanning the plane of two random tangent vectors.
std::pair<TangentVector, TangentVector> orthonormal_pair(const BergerParam& tau, const TangentVector& a,
                                                         const TangentVector& b) {
    const AmbientPoint& z = a.base;
    TangentVector v = a * (1.0 / std::sqrt(metric_eval(tau, z, a, a)));
    TangentVector w = b - v * metric_eval(tau, z, b, v);
    w = w * (1.0 / std::sqrt(metric_eval(tau, z, w, w)));
    return {v, w};
}

}  // namespace

CheckReport sectional_consistency_check(const BergerParam& tau, int n, int samples, std::uint64_t seed) {
    const std::string name = "sectional-vs-curvature-tensor";
    auto rng = check_rng(seed, name);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        AmbientPoint z = random_point(rng, n);
        // every third sample contains the Killing direction
        TangentVector a = s % 3 == 0 ? killing_field(tau, z) : random_tangent(rng, z);
        auto [v, w] = orthonormal_pair(tau, a, random_tangent(rng, z));
        worst = std::max(worst, std::abs(sectional_curvature(tau, z, v, w) - curvature_tensor(tau, z, v, w, w, v)));
    }
    return make_check(name, worst, 1e-12, samples, seed);
}

CheckReport ricci_check(const BergerParam& tau, int n, int samples, std::uint64_t seed) {
    const std::string name = "ricci-trace-and-fibre";
    auto rng = check_rng(seed, name);
    double worst = 0.0;
    const double scal = scalar_curvature(tau, n).to_double();
    for (int s = 0; s < samples; ++s) {
        AmbientPoint z = random_point(rng, n);
        auto frame = orthonormal_frame(tau, z);
        worst = std::max(worst, std::abs(ricci(tau, z, killing_field(tau, z)) - 2.0 * n * tau.tau_sq_d()));
        TangentVector v = random_tangent(rng, z);
        v = v * (1.0 / std::sqrt(metric_eval(tau, z, v, v)));
        double trace = 0.0;
        for (const auto& e : frame) trace += curvature_tensor(tau, z, v, e, e, v);
        worst = std::max(worst, std::abs(ricci(tau, z, v) - trace));
        double total = 0.0;
        for (const auto& e : frame) total += ricci(tau, z, e);
        worst = std::max(worst, std::abs(total - scal));
    }
    return make_check(name, worst, 1e-10, samples, seed);
}

CheckReport geodesic_sphere_isometry_check(const BergerParam& tau, int n, int samples, std::uint64_t seed) {
    const std::string name = "geodesic-sphere-isometry";
    auto rng = check_rng(seed, name);
    const double h = 1e-6;
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        AmbientPoint z = random_point(rng, n);
        TangentVector u = random_tangent(rng, z), v = random_tangent(rng, z);
        auto push = [&](const TangentVector& t) {
            auto img = [&](double e) {
                return geodesic_sphere_embed(tau, AmbientPoint::normalized(z.coords + e * t.comps)).rep;
            };
            return ComplexVec((img(h) - img(-h)) / (2 * h));
        };
        ProjectivePoint p = geodesic_sphere_embed(tau, z);
        double fs = fubini_study(p, push(u), push(v));
        worst = std::max(worst, std::abs(fs - metric_eval(tau, z, u, v)));
    }
    return make_check(name, worst, 1e-8, samples, seed);
}

CheckReport gauss_flatness_check(const BergerParam& tau, int samples, std::uint64_t seed) {
    const std::string name = "clifford-torus-gauss-flatness";
    auto rng = check_rng(seed, name);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const double r = 1.0 / std::sqrt(2.0);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        double t = angle(rng), u = angle(rng);
        RealVec p(4), pt(4), ps(4), ptt(4), pss(4), pts = RealVec::Zero(4), nrm(4);
        p << r * std::cos(t), r * std::sin(t), r * std::cos(u), r * std::sin(u);
        pt << -r * std::sin(t), r * std::cos(t), 0, 0;
        ps << 0, 0, -r * std::sin(u), r * std::cos(u);
        ptt << -r * std::cos(t), -r * std::sin(t), 0, 0;
        pss << 0, 0, -r * std::cos(u), -r * std::sin(u);
        nrm << r * std::cos(t), r * std::sin(t), -r * std::cos(u), -r * std::sin(u);
        AmbientPoint z = AmbientPoint::from_coords(p);
        TangentVector N = TangentVector::at(z, nrm);
        // surface frame in parameter coordinates: xi = (d_t + d_s)/tau, e = d_t - d_s
        const double a[2][2] = {{1.0 / tau.tau(), 1.0 / tau.tau()}, {1.0, -1.0}};
        auto vec = [&](int i) { return TangentVector::at(z, a[i][0] * pt + a[i][1] * ps); };
        auto sigma = [&](int i, int j) {
            RealVec acc = a[i][0] * a[j][0] * ptt + (a[i][0] * a[j][1] + a[i][1] * a[j][0]) * pts + a[i][1] * a[j][1] * pss;
            double round_part = acc.dot(nrm);
            return round_part - metric_eval(tau, z, connection_correction(tau, z, vec(i), vec(j)), N);
        };
        double s00 = sigma(0, 0), s01 = sigma(0, 1), s11 = sigma(1, 1);
        double norm_sq = s00 * s00 + 2 * s01 * s01 + s11 * s11;
        double nu = metric_eval(tau, z, N, killing_field(tau, z));
        double gauss = sectional_curvature(tau, z, vec(0), vec(1)) + s00 * s11 - s01 * s01;
        double formula = -norm_sq / 2 + tau.tau_sq_d() + 4 * (1 - tau.tau_sq_d()) * nu * nu;
        worst = std::max({worst, std::abs(gauss), std::abs(formula), std::abs(norm_sq - 2 * tau.tau_sq_d()),
                          std::abs(nu), std::abs(s00 + s11)});
    }
    return make_check(name, worst, 1e-12, samples, seed);
}

namespace {

// Chart u -> (a0 + T u)/|a0 + T u| on a unit sphere, T an orthonormal basis of a0^perp.
struct SphereChart {
    RealVec a0;
    Eigen::MatrixXd T;

    static SphereChart around(const RealVec& a0) {
        const auto dim = a0.size();
        Eigen::MatrixXd full(dim, dim);
        full.col(0) = a0;
        full.rightCols(dim - 1) = Eigen::MatrixXd::Identity(dim, dim).leftCols(dim - 1);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(full);
        Eigen::MatrixXd q = qr.householderQ();
        return {a0, q.rightCols(dim - 1)};
    }
    RealVec at(const RealVec& u) const {
        RealVec v = a0 + T * u;
        return v / v.norm();
    }
};

// Parametrized minimal submanifold of S^{2n+1} around a sample point.
struct Patch {
    int n = 0;
    int dim = 0;
    std::function<RealVec(const RealVec&)> map;
};

Patch clifford_patch(const CliffordHypersurface& h, std::mt19937_64& rng) {
    const int n = h.m1 + h.m2 + 1;
    const int d1 = 2 * h.m1 + 2, d2 = 2 * h.m2 + 2;
    const double r1 = std::sqrt((2.0 * h.m1 + 1) / (2.0 * n));
    const double r2 = std::sqrt((2.0 * h.m2 + 1) / (2.0 * n));
    RealVec a = random_gaussian(rng, d1), b = random_gaussian(rng, d2);
    SphereChart c1 = SphereChart::around(a / a.norm()), c2 = SphereChart::around(b / b.norm());
    Patch p;
    p.n = n;
    p.dim = (d1 - 1) + (d2 - 1);
    p.map = [=](const RealVec& u) {
        RealVec x(d1 + d2);
        x.head(d1) = r1 * c1.at(u.head(d1 - 1));
        x.tail(d2) = r2 * c2.at(u.tail(d2 - 1));
        return x;
    };
    return p;
}

Patch totally_real_patch(const TotallyRealSphere& t, std::mt19937_64& rng) {
    RealVec a = random_gaussian(rng, t.d + 1);
    SphereChart c = SphereChart::around(a / a.norm());
    Patch p;
    p.n = t.n;
    p.dim = t.d;
    const int d = t.d, n = t.n;
    p.map = [=](const RealVec& u) {
        RealVec x = RealVec::Zero(2 * n + 2);
        RealVec s = c.at(u);
        for (int j = 0; j <= d; ++j) x[2 * j] = s[j];
        return x;
    };
    return p;
}

// Berger Gram matrix of the coordinate tangent vectors of `f` at u = 0.
Eigen::MatrixXd induced_gram(const BergerParam& tau, const std::function<RealVec(const RealVec&)>& f, int dim,
                             double h) {
    AmbientPoint z = AmbientPoint::normalized(f(RealVec::Zero(dim)));
    std::vector<TangentVector> tv;
    for (int i = 0; i < dim; ++i) {
        RealVec e = RealVec::Zero(dim);
        e[i] = h;
        tv.push_back(TangentVector::project(z, (f(e) - f(-e)) / (2 * h)));
    }
    Eigen::MatrixXd g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = metric_eval(tau, z, tv[i], tv[j]);
    return g;
}

// Berger-orthogonal projection of an ambient vector onto the normal space of the patch at u.
RealVec normal_projection(const BergerParam& tau, const Patch& patch, const RealVec& u, const RealVec& a, double h) {
    AmbientPoint z = AmbientPoint::normalized(patch.map(u));
    std::vector<TangentVector> tv;
    for (int i = 0; i < patch.dim; ++i) {
        RealVec e = RealVec::Zero(patch.dim);
        e[i] = h;
        tv.push_back(TangentVector::project(z, (patch.map(u + e) - patch.map(u - e)) / (2 * h)));
    }
    Eigen::MatrixXd g(patch.dim, patch.dim);
    Eigen::VectorXd rhs(patch.dim);
    TangentVector at = TangentVector::project(z, a);
    for (int i = 0; i < patch.dim; ++i) {
        for (int j = 0; j < patch.dim; ++j) g(i, j) = metric_eval(tau, z, tv[i], tv[j]);
        rhs[i] = metric_eval(tau, z, at, tv[i]);
    }
    Eigen::VectorXd coef = g.ldlt().solve(rhs);
    RealVec out = at.comps;
    for (int i = 0; i < patch.dim; ++i) out -= coef[i] * tv[i].comps;
    return out;
}

}  // namespace

CheckReport minimality_first_variation_check(const ModelSubmanifold& model, const BergerParam& tau, int samples,
                                             std::uint64_t seed) {
    const std::string name = "first-variation-minimality:" + model_name(model);
    validate_model(model);
    if (!std::holds_alternative<CliffordHypersurface>(model) && !std::holds_alternative<TotallyRealSphere>(model))
        throw OracleRefusal("no explicit parametrization available for " + model_name(model));
    auto rng = check_rng(seed, name);
    const double h = 1e-5;    // chart derivatives
    const double eps = 1e-4;  // normal variation
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        Patch patch = std::holds_alternative<CliffordHypersurface>(model)
                          ? clifford_patch(std::get<CliffordHypersurface>(model), rng)
                          : totally_real_patch(std::get<TotallyRealSphere>(model), rng);
        const int amb = 2 * patch.n + 2;
        const int codim = amb - 1 - patch.dim;
        const RealVec u0 = RealVec::Zero(patch.dim);
        AmbientPoint z = AmbientPoint::normalized(patch.map(u0));

        // normal fields from projected coordinate vectors, chosen independent at the base point
        std::vector<RealVec> dirs;
        std::vector<RealVec> ortho;
        for (int j = 0; j < amb && static_cast<int>(dirs.size()) < codim; ++j) {
            RealVec a = RealVec::Zero(amb);
            a[j] = 1.0;
            RealVec nv = normal_projection(tau, patch, u0, a, h);
            RealVec r = nv;
            for (const auto& o : ortho) r -= r.dot(o) * o;
            if (r.norm() < 0.1) continue;
            ortho.push_back(r / r.norm());
            dirs.push_back(a);
        }
        const int m = static_cast<int>(dirs.size());
        Eigen::MatrixXd gamma(m, m);
        Eigen::VectorXd b(m);
        const double vol0 = std::sqrt(induced_gram(tau, patch.map, patch.dim, h).determinant());
        for (int al = 0; al < m; ++al) {
            auto varied = [&](double e) {
                return [&, e](const RealVec& u) {
                    RealVec x = patch.map(u) + e * normal_projection(tau, patch, u, dirs[al], h);
                    return RealVec(x / x.norm());
                };
            };
            double vp = std::sqrt(induced_gram(tau, varied(eps), patch.dim, h).determinant());
            double vm = std::sqrt(induced_gram(tau, varied(-eps), patch.dim, h).determinant());
            b[al] = -((vp - vm) / (2 * eps)) / vol0 / patch.dim;
            TangentVector na = TangentVector::project(z, normal_projection(tau, patch, u0, dirs[al], h));
            for (int be = 0; be < m; ++be) {
                TangentVector nb = TangentVector::project(z, normal_projection(tau, patch, u0, dirs[be], h));
                gamma(al, be) = metric_eval(tau, z, na, nb);
            }
        }
        double h_norm_sq = b.dot(gamma.ldlt().solve(b));
        worst = std::max(worst, std::sqrt(std::max(0.0, h_norm_sq)));
    }
    return make_check(name, worst, 1e-4, samples, seed);
}

std::vector<CheckReport> tai_checks(const BergerParam& tau, int n, int samples, std::uint64_t seed) {
    const double radius = tai_source_radius(tau);
    const int order = n + 1;
    const std::complex<double> I(0.0, 1.0);
    const Eigen::MatrixXcd center = tai_center(tau, order);
    const double r2 = tai_radius_sq(tau, order);

    auto tai_at = [&](const ComplexVec& z) { return tai_embed(tau, ProjectivePoint::make(z, radius)).entries; };
    auto random_base = [&](std::mt19937_64& rng) { return ProjectivePoint::make(random_complex(rng, order), radius); };
    auto random_horizontal = [&](std::mt19937_64& rng, const ProjectivePoint& p) {
        ComplexVec u = horizontal_lift(p, random_complex(rng, order));
        return ComplexVec(u / u.norm());
    };
    // acceleration of the image of the projective geodesic with initial velocity x
    auto sigma_diag = [&](const ProjectivePoint& p, const ComplexVec& x) {
        const double speed = x.norm();
        auto curve = [&](double t) {
            double th = speed * t / radius;
            return ComplexVec(std::cos(th) * p.rep + (radius / speed) * std::sin(th) * x);
        };
        const double h = 1e-3;
        return Eigen::MatrixXcd((-tai_at(curve(2 * h)) + 16.0 * tai_at(curve(h)) - 30.0 * tai_at(curve(0)) +
                                 16.0 * tai_at(curve(-h)) - tai_at(curve(-2 * h))) /
                                (12.0 * h * h));
    };
    auto sigma = [&](const ProjectivePoint& p, const ComplexVec& x, const ComplexVec& y) {
        return Eigen::MatrixXcd(0.5 * (sigma_diag(p, x + y) - sigma_diag(p, x) - sigma_diag(p, y)));
    };

    std::vector<CheckReport> out;
    {
        const std::string name = "tai-isometry";
        auto rng = check_rng(seed, name);
        const double h = 1e-6;
        double worst = 0.0;
        for (int s = 0; s < samples; ++s) {
            ProjectivePoint p = random_base(rng);
            ComplexVec x = random_horizontal(rng, p), y = random_horizontal(rng, p);
            auto push = [&](const ComplexVec& u) {
                return Eigen::MatrixXcd((tai_at(p.rep + h * u) - tai_at(p.rep - h * u)) / (2 * h));
            };
            worst = std::max(worst, std::abs(hermitian_inner(push(x), push(y)) - fubini_study(p, x, y)));
        }
        out.push_back(make_check(name, worst, 1e-8, samples, seed));
    }
    {
        const std::string name = "tai-sphere-containment";
        auto rng = check_rng(seed, name);
        double worst = 0.0;
        const double trace = 1.0 / std::sqrt(2.0 * (1.0 - tau.tau_sq_d()));
        for (int s = 0; s < samples; ++s) {
            Eigen::MatrixXcd t = tai_at(random_complex(rng, order));
            Eigen::MatrixXcd d = t - center;
            worst = std::max({worst, std::abs(hermitian_inner(d, d) - r2), std::abs(t.trace().real() - trace)});
        }
        out.push_back(make_check(name, worst, 1e-10, samples, seed));
    }
    {
        const std::string name = "tai-second-fundamental-form-law";
        auto rng = check_rng(seed, name);
        double worst = 0.0;
        for (int s = 0; s < samples; ++s) {
            ProjectivePoint p = random_base(rng);
            ComplexVec x = random_horizontal(rng, p), y = random_horizontal(rng, p);
            ComplexVec v = random_horizontal(rng, p), w = random_horizontal(rng, p);
            double numeric = hermitian_inner(sigma(p, x, y), sigma(p, v, w));
            double law = tai_sff_inner(tau, ProjectiveTangent::horizontal(p, x), ProjectiveTangent::horizontal(p, y),
                                       ProjectiveTangent::horizontal(p, v), ProjectiveTangent::horizontal(p, w));
            worst = std::max(worst, std::abs(numeric - law));
        }
        out.push_back(make_check(name, worst, 1e-6, samples, seed));
    }
    {
        const std::string name = "tai-j-invariance";
        auto rng = check_rng(seed, name);
        double worst = 0.0;
        for (int s = 0; s < samples; ++s) {
            ProjectivePoint p = random_base(rng);
            ComplexVec x = random_horizontal(rng, p), y = random_horizontal(rng, p);
            worst = std::max(worst, (sigma(p, ComplexVec(I * x), ComplexVec(I * y)) - sigma(p, x, y)).norm());
        }
        out.push_back(make_check(name, worst, 1e-8, samples, seed));
    }
    {
        const std::string name = "tai-minimal-in-sphere";
        auto rng = check_rng(seed, name);
        double worst = 0.0;
        for (int s = 0; s < samples; ++s) {
            ProjectivePoint p = random_base(rng);
            // complex orthonormal horizontal basis, then the real frame {u_k, i u_k}
            std::vector<ComplexVec> basis;
            for (int j = 0; j < order && static_cast<int>(basis.size()) < n; ++j) {
                ComplexVec e = ComplexVec::Zero(order);
                e[j] = 1.0;
                e = horizontal_lift(p, e);
                for (const auto& b : basis) e -= b.dot(e) * b;
                if (e.norm() < 1e-6) continue;
                basis.push_back(e / e.norm());
            }
            Eigen::MatrixXcd mean = Eigen::MatrixXcd::Zero(order, order);
            for (const auto& b : basis) mean += sigma_diag(p, b) + sigma_diag(p, ComplexVec(I * b));
            Eigen::MatrixXcd pos = tai_at(p.rep) - center;
            Eigen::MatrixXcd resid = mean - (hermitian_inner(mean, pos) / hermitian_inner(pos, pos)) * pos;
            worst = std::max(worst, std::sqrt(std::max(0.0, hermitian_inner(resid, resid))));
        }
        out.push_back(make_check(name, worst, 1e-6, samples, seed));
    }
    return out;
}

CheckReport bidegree_oracle_check(int n_max, int degree_max) {
    int mismatches = 0, samples = 0;
    for (int n = 0; n <= n_max; ++n)
        for (int a = 0; a <= degree_max; ++a)
            for (int b = 0; a + b <= degree_max; ++b) {
                ++samples;
                if (harmonic_dim_bruteforce(n, a, b, degree_max) != bidegree_dimension(n, a, b)) ++mismatches;
            }
    return make_check("bidegree-dimension-oracle", mismatches, 0.0, samples, 0);
}

CheckReport lxi_oracle_check(int n_max, int k_max, const BergerParam& tau) {
    int mismatches = 0, samples = 0;
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= k_max; ++k) {
            ++samples;
            std::map<Rational, std::int64_t> expected;
            for (int p = 0; p <= k / 2; ++p) {
                std::int64_t q = k - 2 * p;
                std::int64_t mult = berger_multiplicity(n, k, p);
                if (mult > 0) expected[Rational(-q * q) / tau.tau_sq()] += mult;
            }
            std::map<Rational, std::int64_t> got;
            for (auto [v, m] : lxi_squared_spectrum(n, tau, k, k_max)) got[v] += m;
            if (got != expected) ++mismatches;
        }
    return make_check("lxi-squared-oracle", mismatches, 0.0, samples, 0);
}

CheckReport torus_oracle_check(const std::vector<Rational>& tau_sq_grid) {
    int mismatches = 0;
    for (const Rational& t : tau_sq_grid) {
        BergerParam tau(t);
        IndexReport a = torus_fourier_index(tau, Rational(4));
        IndexReport b = clifford_index_nullity(0, 0, tau);
        if (a.index != b.index || a.nullity != b.nullity) ++mismatches;
    }
    return make_check("clifford-torus-dual-lattice", mismatches, 0.0, static_cast<int>(tau_sq_grid.size()), 0);
}

std::vector<CheckReport> verify_suite(int samples, std::uint64_t seed) {
    std::vector<CheckReport> out;
    const std::vector<Rational> grid{Rational(1, 5), Rational(1, 3), Rational(1, 2), Rational(3, 4), Rational(1)};
    auto tagged = [](CheckReport r, const std::string& suffix) {
        r.name += suffix;
        return r;
    };
    for (const Rational& t : grid) {
        BergerParam tau(t);
        const std::string at = "[tau^2=" + t.str() + "]";
        for (int n : {1, 2}) {
            const std::string tag = at + "[n=" + std::to_string(n) + "]";
            out.push_back(tagged(metric_positivity_check(tau, n, samples, seed), tag));
            out.push_back(tagged(killing_check(tau, n, samples, seed), tag));
            out.push_back(tagged(curvature_symmetry_check(tau, n, samples, seed), tag));
            out.push_back(tagged(sectional_consistency_check(tau, n, samples, seed), tag));
            out.push_back(tagged(ricci_check(tau, n, samples, seed), tag));
            if (!tau.is_round()) {
                out.push_back(tagged(geodesic_sphere_isometry_check(tau, n, samples, seed), tag));
                for (auto& r : tai_checks(tau, n, samples, seed)) out.push_back(tagged(r, tag));
            }
        }
        out.push_back(tagged(gauss_flatness_check(tau, samples, seed), at));
        const int few = std::max(1, samples / 25);
        out.push_back(tagged(minimality_first_variation_check(CliffordHypersurface{0, 0}, tau, few, seed), at));
        out.push_back(tagged(minimality_first_variation_check(CliffordHypersurface{1, 0}, tau, few, seed), at));
        out.push_back(tagged(minimality_first_variation_check(TotallyRealSphere{1, 1}, tau, few, seed), at));
        out.push_back(tagged(minimality_first_variation_check(TotallyRealSphere{2, 2}, tau, few, seed), at));
    }
    out.push_back(tagged(round_curvature_check(1, samples, seed), "[n=1]"));
    out.push_back(tagged(round_curvature_check(2, samples, seed), "[n=2]"));
    out.push_back(bidegree_oracle_check(3, 8));
    out.push_back(tagged(lxi_oracle_check(2, 5, BergerParam(Rational(1, 3))), "[tau^2=1/3]"));
    out.push_back(torus_oracle_check({Rational(1, 5), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1)}));
    return out;
}

}  // namespace berger
