#include "berger/jacobi_models.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "berger/harmonic_spectra.hpp"

namespace berger {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void push_mode(std::vector<JacobiMode>& out, std::string family, std::vector<int> labels, QuadraticSurd value,
               std::int64_t multiplicity) {
    if (multiplicity <= 0) return;
    out.push_back({std::move(family), std::move(labels), std::move(value), multiplicity});
}

// Jacobi spectrum of an S^1-bundle whose normal sections pair up as f N + g iN, coupled
// through L_xi. Each Laplace label (k, p) with q = k - 2p != 0 splits into two branches
// of multiplicity dim V(mu_{k,p}); for q = 0 both branches coincide and the value is
// carried by f and g separately.
void bundle_modes(std::vector<JacobiMode>& out, const std::string& family, int sphere_n, int k,
                  std::int64_t slots, const std::function<QuadraticSurd(int k, int q, int sign)>& rho) {
    for (int p = 0; p <= k / 2; ++p) {
        std::int64_t dim = berger_multiplicity(sphere_n, k, p) * slots;
        if (dim == 0) continue;
        int q = k - 2 * p;
        if (q == 0) {
            push_mode(out, family, {k, p, 0}, rho(k, q, +1), 2 * dim);
        } else {
            push_mode(out, family, {k, p, +1}, rho(k, q, +1), dim);
            push_mode(out, family, {k, p, -1}, rho(k, q, -1), dim);
        }
    }
}

struct FamilyPlan {
    std::function<std::vector<JacobiMode>(int k)> modes_at;
    // lower bound for every mode with label k, nondecreasing in k from `bound_from` on
    std::function<Rational(int k)> tail_bound;
    int bound_from = 1;
    std::string bound_text;
    std::string extra_certificate;
};

FamilyPlan plan_for(const ModelSubmanifold& model, const BergerParam& tau) {
    return std::visit(
        overloaded{
            [&](const TotallyGeodesicBergerSphere& t) {
                FamilyPlan plan;
                plan.modes_at = [t, tau](int k) { return tg_berger_modes(t.n, t.m, tau, k); };
                plan.tail_bound = [t](int k) { return Rational(static_cast<std::int64_t>(2 * t.m + 1 + k) * (k - 1)); };
                plan.bound_text = "rho >= (2m+1+k)(k-1) since the fibre term is nonnegative";
                return plan;
            },
            [&](const CircleCover& cc) {
                FamilyPlan plan;
                plan.modes_at = [cc, tau](int k) { return circle_modes(cc.s, tau, k, cc.n); };
                plan.tail_bound = [cc](int k) {
                    return Rational(static_cast<std::int64_t>(k) * k, static_cast<std::int64_t>(cc.s) * cc.s) - Rational(1);
                };
                plan.bound_text = "rho >= k^2/s^2 - 1 since the fibre term is nonnegative";
                return plan;
            },
            [&](const VeroneseRP3&) {
                FamilyPlan plan;
                plan.modes_at = [tau](int k) { return veronese_modes(tau, k, true); };
                plan.tail_bound = [](int k) { return Rational(static_cast<std::int64_t>(k) * k, 4) - Rational(4); };
                plan.bound_text = "rho >= k^2/4 - 4 using 1/(4 tau^2) >= 1/4 and minimizing over 0 <= q <= k";
                return plan;
            },
            [&](const VeroneseS3&) {
                FamilyPlan plan;
                plan.modes_at = [tau](int k) { return veronese_modes(tau, k, false); };
                plan.tail_bound = [](int k) { return Rational(static_cast<std::int64_t>(k) * k, 4) - Rational(4); };
                plan.bound_text = "rho >= k^2/4 - 4 using 1/(4 tau^2) >= 1/4 and minimizing over 0 <= q <= k";
                return plan;
            },
            [&](const TotallyRealSphere& t) {
                FamilyPlan plan;
                plan.modes_at = [t, tau](int k) { return totally_real_sphere_modes(t.n, t.d, tau, k); };
                const int d = t.d;
                if (tau.is_round()) {
                    plan.tail_bound = [d](int k) { return Rational(static_cast<std::int64_t>(k) * (k + d - 1) - d); };
                    plan.bound_text = "round case: rho = lambda_k - d on every normal direction";
                    return plan;
                }
                const Rational tsq = tau.tau_sq();
                plan.bound_from = 2;
                plan.tail_bound = [d, tsq](int k) {
                    Rational lam(static_cast<std::int64_t>(k) * (k + d - 1));
                    Rational b = std::min(lam - Rational(d), (lam - Rational(2 * (d + 1))) / Rational(2));
                    if (d >= 2)
                        b = std::min(b, Rational(static_cast<std::int64_t>(k + 1) * (k + d - 2) - 2 * (d + 1)) +
                                            Rational(4) * tsq);
                    return b;
                };
                plan.bound_text =
                    "for k >= 2: D-part rho = lambda_k - d; closed-exact branch rho_- = lambda(lambda-2(d+1))/"
                    "(lambda - A + sqrt(A^2+4 tau^2 lambda)) >= (lambda_k - 2(d+1))/2; coexact branch "
                    "(k+1)(k+d-2) - 2(d+1) + 4 tau^2";
                plan.extra_certificate =
                    "coexact 1-form modes with k >= 2 are not listed: their values (k+1)(k+d-2) - 2(d+1-2tau^2) "
                    "are >= d - 2 + 4 tau^2 > 0";
                return plan;
            },
            [&](const CliffordHypersurface& h) {
                FamilyPlan plan;
                plan.modes_at = [h, tau](int k) { return clifford_modes(h.m1, h.m2, tau, k); };
                const int n = h.m1 + h.m2 + 1;
                plan.tail_bound = [n](int k) { return Rational(2 * n) * Rational(k) - Rational(4 * n); };
                plan.bound_text = "rho >= 2n(k1+k2) - 4n since k(2m+k)/(2m+1) >= k";
                return plan;
            }},
        model);
}

}  // namespace

void validate_model(const ModelSubmanifold& model) {
    std::visit(overloaded{[](const TotallyGeodesicBergerSphere& t) {
                              if (t.m < 0 || t.m >= t.n)
                                  throw std::domain_error("totally geodesic Berger sphere needs 0 <= m < n");
                          },
                          [](const CircleCover& c) {
                              if (c.n < 1 || c.s < 1) throw std::domain_error("circle cover needs n >= 1 and s >= 1");
                          },
                          [](const VeroneseRP3&) {}, [](const VeroneseS3&) {},
                          [](const TotallyRealSphere& t) {
                              if (t.d < 1 || t.d > t.n) throw std::domain_error("totally real sphere needs 1 <= d <= n");
                          },
                          [](const CliffordHypersurface& h) {
                              if (h.m1 < 0 || h.m2 < 0) throw std::domain_error("clifford hypersurface needs m1, m2 >= 0");
                          }},
               model);
}

int model_dimension(const ModelSubmanifold& model) {
    return std::visit(overloaded{[](const TotallyGeodesicBergerSphere& t) { return 2 * t.m + 1; },
                                 [](const CircleCover&) { return 1; }, [](const VeroneseRP3&) { return 3; },
                                 [](const VeroneseS3&) { return 3; }, [](const TotallyRealSphere& t) { return t.d; },
                                 [](const CliffordHypersurface& h) { return 2 * (h.m1 + h.m2 + 1); }},
                      model);
}

int model_ambient_n(const ModelSubmanifold& model) {
    return std::visit(overloaded{[](const TotallyGeodesicBergerSphere& t) { return t.n; },
                                 [](const CircleCover& c) { return c.n; }, [](const VeroneseRP3&) { return 2; },
                                 [](const VeroneseS3&) { return 2; }, [](const TotallyRealSphere& t) { return t.n; },
                                 [](const CliffordHypersurface& h) { return h.m1 + h.m2 + 1; }},
                      model);
}

std::string model_name(const ModelSubmanifold& model) {
    return std::visit(
        overloaded{
            [](const TotallyGeodesicBergerSphere& t) {
                return "tg-berger(n=" + std::to_string(t.n) + ",m=" + std::to_string(t.m) + ")";
            },
            [](const CircleCover& c) { return "circle(n=" + std::to_string(c.n) + ",s=" + std::to_string(c.s) + ")"; },
            [](const VeroneseRP3&) { return std::string("veronese-rp3"); },
            [](const VeroneseS3&) { return std::string("veronese-s3"); },
            [](const TotallyRealSphere& t) {
                return "totally-real(n=" + std::to_string(t.n) + ",d=" + std::to_string(t.d) + ")";
            },
            [](const CliffordHypersurface& h) {
                return "clifford(m1=" + std::to_string(h.m1) + ",m2=" + std::to_string(h.m2) + ")";
            }},
        model);
}

bool model_is_hopf_bundle(const ModelSubmanifold& model) {
    return std::holds_alternative<TotallyGeodesicBergerSphere>(model) || std::holds_alternative<CircleCover>(model) ||
           std::holds_alternative<VeroneseRP3>(model) || std::holds_alternative<VeroneseS3>(model);
}

std::string mode_label_string(const JacobiMode& mode) {
    std::ostringstream os;
    os << mode.family << "(";
    for (std::size_t i = 0; i < mode.labels.size(); ++i) os << (i ? "," : "") << mode.labels[i];
    os << ")";
    return os.str();
}

std::vector<JacobiMode> tg_berger_modes(int n, int m, const BergerParam& tau, int k_max) {
    validate_model(TotallyGeodesicBergerSphere{n, m});
    const Rational c = tau.stretch();
    std::vector<JacobiMode> out;
    for (int k = 0; k <= k_max; ++k)
        bundle_modes(out, "tg-berger", m, k, n - m, [&](int kk, int q, int sign) {
            std::int64_t shift = q + sign;
            return QuadraticSurd(Rational(static_cast<std::int64_t>(2 * m + 1 + kk) * (kk - 1)) + c * Rational(shift * shift));
        });
    return out;
}

std::vector<JacobiMode> circle_modes(int s, const BergerParam& tau, int k_max, int normal_slots) {
    if (s < 1) throw std::domain_error("circle cover needs s >= 1");
    if (normal_slots < 1) throw std::domain_error("circle cover needs at least one normal slot");
    const Rational c = tau.stretch();
    std::vector<JacobiMode> out;
    auto rho = [&](int k, int sign) {
        Rational ks(k, s);
        Rational shifted = ks + Rational(sign);
        return QuadraticSurd(ks * ks - Rational(1) + c * shifted * shifted);
    };
    for (int k = 0; k <= k_max; ++k) {
        if (k == 0) {
            push_mode(out, "circle", {0, 0}, rho(0, 1), 2 * static_cast<std::int64_t>(normal_slots));
        } else {
            push_mode(out, "circle", {k, +1}, rho(k, +1), 2 * static_cast<std::int64_t>(normal_slots));
            push_mode(out, "circle", {k, -1}, rho(k, -1), 2 * static_cast<std::int64_t>(normal_slots));
        }
    }
    return out;
}

bool circle_stability(int s, const BergerParam& tau) {
    if (s < 1) throw std::domain_error("circle cover needs s >= 1");
    return tau.tau_sq() <= Rational(1, 2 * s);
}

std::vector<JacobiMode> veronese_modes(const BergerParam& tau, int k_max, bool quotient) {
    const Rational inv = Rational(1) / tau.tau_sq();
    std::vector<JacobiMode> out;
    for (int k = 0; k <= k_max; ++k) {
        if (quotient && k % 2 != 0) continue;
        bundle_modes(out, quotient ? "veronese-rp3" : "veronese-s3", 1, k, 1, [&](int kk, int q, int sign) {
            std::int64_t a = q + 4 * sign;
            std::int64_t b = q + sign;
            return QuadraticSurd(Rational(1 + static_cast<std::int64_t>(kk) * (2 + kk), 2) + inv * Rational(a * a, 4) -
                                 Rational(8) - Rational(b * b, 2));
        });
    }
    return out;
}

std::vector<JacobiMode> totally_real_sphere_modes(int n, int d, const BergerParam& tau, int k_max) {
    validate_model(TotallyRealSphere{n, d});
    std::vector<JacobiMode> out;
    auto lambda = [d](int k) { return static_cast<std::int64_t>(k) * (k + d - 1); };
    if (tau.is_round()) {
        // round sphere: every normal direction carries Delta + d
        const std::int64_t normals = 2 * n + 1 - d;
        for (int k = 0; k <= k_max; ++k)
            push_mode(out, "normal", {k}, QuadraticSurd(Rational(lambda(k) - d)),
                      normals * real_sphere_multiplicity(d, k));
        return out;
    }
    const Rational A = Rational(d + 1) - Rational(2) * tau.tau_sq();
    for (int k = 0; k <= k_max; ++k) {
        const std::int64_t mult = real_sphere_multiplicity(d, k);
        // directions orthogonal to the complexified tangent space and the fibre
        if (n > d) push_mode(out, "flat-normal", {k}, QuadraticSurd(Rational(lambda(k) - d)), 2 * (n - d) * mult);
        if (k == 0) {
            // constant multiples of the Killing field
            push_mode(out, "exact-fibre", {0, 0}, QuadraticSurd(Rational(0)), 1);
        } else {
            Rational lam(lambda(k));
            Rational radicand = A * A + Rational(4) * tau.tau_sq() * lam;
            push_mode(out, "exact-fibre", {k, -1}, QuadraticSurd(lam - A, Rational(-1), radicand), mult);
            push_mode(out, "exact-fibre", {k, +1}, QuadraticSurd(lam - A, Rational(1), radicand), mult);
        }
        if (k == 1) {
            // first coexact (or, on the circle, harmonic) 1-form eigenvalue 2(d-1)
            push_mode(out, "coexact", {1}, QuadraticSurd(Rational(-4) * tau.defect()),
                      static_cast<std::int64_t>(d) * (d + 1) / 2);
        }
    }
    return out;
}

std::vector<JacobiMode> clifford_modes(int m1, int m2, const BergerParam& tau, int total_max) {
    validate_model(CliffordHypersurface{m1, m2});
    const int n = m1 + m2 + 1;
    std::vector<JacobiMode> out;
    for (int s = 0; s <= total_max; ++s)
        for (int k1 = 0; k1 <= s; ++k1)
            for (int p = 0; p <= s / 2; ++p) {
                int k2 = s - k1;
                push_mode(out, "clifford", {k1, k2, p},
                          QuadraticSurd(clifford_eigenvalue(m1, m2, tau, k1, k2, p) - Rational(4 * n)),
                          clifford_multiplicity(m1, m2, k1, k2, p));
            }
    return out;
}

IndexReport enumerate_index(const ModelSubmanifold& model, const BergerParam& tau, const EnumerationPolicy& policy) {
    validate_model(model);
    FamilyPlan plan = plan_for(model, tau);

    int k_cert = -1;
    for (int k = std::max(0, plan.bound_from - 1); k <= policy.k_limit; ++k) {
        if (k + 1 >= plan.bound_from && plan.tail_bound(k + 1).sign() > 0) {
            k_cert = k;
            break;
        }
    }
    if (k_cert < 0)
        throw TruncationError("no certified truncation level found up to k = " + std::to_string(policy.k_limit) +
                              " for " + model_name(model));

    const int k_used = std::max(k_cert, policy.k_max_override);
    IndexReport report;
    report.truncation_k = k_used;
    for (const JacobiMode& mode : plan.modes_at(k_used)) {
        int s = mode.value.sign();
        if (s > 0) continue;
        (s < 0 ? report.index : report.nullity) += mode.multiplicity;
        report.nonpositive_modes.push_back(mode);
    }
    std::stable_sort(report.nonpositive_modes.begin(), report.nonpositive_modes.end(),
                     [](const JacobiMode& a, const JacobiMode& b) {
                         double va = a.value.to_double();
                         double vb = b.value.to_double();
                         if (va != vb) return va < vb;
                         return a.labels < b.labels;
                     });

    std::ostringstream cert;
    cert << model_name(model) << " at tau^2 = " << tau.tau_sq() << ": enumerated labels k <= " << k_used
         << ". Tail bound: " << plan.bound_text << "; this bound is nondecreasing for k >= " << plan.bound_from
         << " and equals " << plan.tail_bound(k_cert + 1) << " > 0 at k = " << k_cert + 1
         << ", so no mode with a larger label is non-positive.";
    if (!plan.extra_certificate.empty()) cert << " " << plan.extra_certificate << ".";
    report.certificate = cert.str();
    return report;
}

IndexReport tg_berger_index_nullity(int n, int m, const BergerParam& tau) {
    return enumerate_index(TotallyGeodesicBergerSphere{n, m}, tau);
}

IndexReport veronese_index_nullity(const BergerParam& tau, bool quotient) {
    return quotient ? enumerate_index(VeroneseRP3{}, tau) : enumerate_index(VeroneseS3{}, tau);
}

IndexReport totally_real_sphere_index_nullity(int n, int d, const BergerParam& tau) {
    return enumerate_index(TotallyRealSphere{n, d}, tau);
}

IndexReport clifford_index_nullity(int m1, int m2, const BergerParam& tau) {
    return enumerate_index(CliffordHypersurface{m1, m2}, tau);
}

std::optional<ClosedFormIndex> closed_form_index_nullity(const ModelSubmanifold& model, const BergerParam& tau) {
    validate_model(model);
    const Rational& t = tau.tau_sq();
    const bool round = tau.is_round();
    return std::visit(
        overloaded{
            [&](const TotallyGeodesicBergerSphere& g) -> std::optional<ClosedFormIndex> {
                const std::int64_t slots = g.n - g.m;
                const Rational edge(1, 2 * (g.m + 1));
                ClosedFormIndex r;
                r.index.value = t <= edge ? 0 : 2 * slots;
                if (round) r.nullity.value = 4 * slots * (g.m + 1);
                else if (t == edge) r.nullity.value = 2 * slots * (g.m + 2);
                else r.nullity.value = 2 * slots * (g.m + 1);
                return r;
            },
            [&](const CircleCover&) -> std::optional<ClosedFormIndex> { return std::nullopt; },
            [&](const VeroneseRP3&) -> std::optional<ClosedFormIndex> {
                ClosedFormIndex r;
                if (t > Rational(1, 2)) r.index.value = 8;
                else if (t > Rational(1, 4)) r.index.value = 6;
                else r.index.value = 0;
                if (round || t == Rational(1, 4)) r.nullity.value = 16;
                else if (t == Rational(1, 2)) r.nullity.value = 12;
                else r.nullity.value = 10;
                return r;
            },
            [&](const VeroneseS3&) -> std::optional<ClosedFormIndex> {
                ClosedFormIndex r;
                if (t > Rational(1, 4)) r.index = {14, true};
                else if (t > Rational(1, 8)) r.index.value = 8;
                else r.index.value = 0;
                if (round || t == Rational(1, 4)) r.nullity.value = 16;
                else if (t == Rational(1, 8)) r.nullity.value = 18;
                else r.nullity = {10, true};
                return r;
            },
            [&](const TotallyRealSphere& s) -> std::optional<ClosedFormIndex> {
                const std::int64_t n = s.n;
                const std::int64_t d = s.d;
                ClosedFormIndex r;
                if (round) {
                    r.index.value = 2 * n + 1 - d;
                    r.nullity.value = (d + 1) * (2 * n + 1 - d);
                } else {
                    r.index.value = 2 * n + 1 + d * (d - 1) / 2;
                    r.nullity.value = (d + 1) * (4 * n + 2 - 3 * d) / 2;
                }
                return r;
            },
            [&](const CliffordHypersurface& h) -> std::optional<ClosedFormIndex> {
                const std::int64_t n = h.m1 + h.m2 + 1;
                const Rational edge(1, 2 * n + 1);
                ClosedFormIndex r;
                r.index.value = t <= edge ? 1 : 2 * n + 3;
                r.nullity.value = 2 * (h.m1 + 1) * (h.m2 + 1) + (t == edge ? 2 * (n + 1) : 0);
                return r;
            }},
        model);
}

}  // namespace berger
