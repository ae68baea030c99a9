#include "berger/stability_atlas.hpp"

#include <cmath>

#include "berger/harmonic_spectra.hpp"

namespace berger {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Stable: return "Stable";
        case Verdict::Unstable: return "Unstable";
        case Verdict::Boundary: return "Boundary";
        case Verdict::Undetermined: return "Undetermined";
    }
    return "Undetermined";
}

StabilityVerdict dimension_instability(int d, const BergerParam& tau) {
    if (d < 1) throw std::domain_error("dimension must be positive");
    const Rational edge(1, d + 1);
    StabilityVerdict v;
    v.theorem = "dimension-instability";
    if (tau.tau_sq() > edge) {
        v.verdict = Verdict::Unstable;
        v.reason = "every compact minimal " + std::to_string(d) + "-dimensional submanifold is unstable for tau^2 > 1/" +
                   std::to_string(d + 1);
    } else if (tau.tau_sq() == edge) {
        v.verdict = Verdict::Boundary;
        if (d % 2 == 0)
            v.reason = "tau^2 = 1/(d+1) with d even: stability here forces d = 2m+1, so no stable example exists";
        else
            v.reason = "tau^2 = 1/(d+1): stable exactly for S^1-bundles over complex submanifolds, which are the "
                       "induced bundles";
    } else {
        v.verdict = Verdict::Undetermined;
        v.theorem.clear();
        v.reason = "tau^2 < 1/(d+1): no general classification";
    }
    return v;
}

StabilityVerdict s1_bundle_stability(int m, int s, const BergerParam& tau) {
    if (m < 0 || s < 1) throw std::domain_error("bundle stability needs m >= 0 and s >= 1");
    const Rational bound(1, static_cast<std::int64_t>(s) * (2 * m + 2));
    if (tau.tau_sq() <= bound) {
        StabilityVerdict v;
        v.verdict = Verdict::Stable;
        v.theorem = "bundle-stability";
        v.reason = "S^1-bundle of order " + std::to_string(s) + " over a complex " + std::to_string(m) +
                   "-dimensional base is stable for tau^2 <= " + bound.str();
        return v;
    }
    StabilityVerdict v = dimension_instability(2 * m + 1, tau);
    if (v.verdict == Verdict::Boundary)
        v.reason += "; for order s >= 2 this value is not decided by the general theorems";
    return v;
}

Rational proof_polynomial_P(int d, int q, const BergerParam& tau, const Rational& x) {
    if (q < 1) throw std::domain_error("P(x) needs q >= 1");
    if (x.sign() < 0 || x > Rational(1)) throw std::domain_error("P(x) needs x in [0, 1]");
    const Rational t = tau.tau_sq();
    const Rational one_minus = Rational(1) - t;
    return one_minus * one_minus / t * x * x - one_minus / t * (Rational(1 + q) + t * Rational(d - 1)) * x -
           Rational(q) * (Rational(d + 1) - Rational(1) / t);
}

double proof_polynomial_P(int d, int q, double t, double x) {
    if (q < 1) throw std::domain_error("P(x) needs q >= 1");
    if (x < 0.0 || x > 1.0) throw std::domain_error("P(x) needs x in [0, 1]");
    const double a = 1.0 - t;
    return a * a / t * x * x - a / t * (1.0 + q + t * (d - 1)) * x - q * (d + 1 - 1.0 / t);
}

int index_lower_bound(int n, int d, const BergerParam& tau, XiCase xi_case, bool is_hypersurface,
                      bool is_tg_berger_sphere) {
    if (n < 1 || d < 1 || d > 2 * n) throw std::domain_error("need n >= 1 and 1 <= d <= 2n");
    if (is_hypersurface && is_tg_berger_sphere)
        throw std::domain_error("a totally geodesic Berger sphere is never a hypersurface");
    if (xi_case == XiCase::XiNormal && (is_hypersurface || is_tg_berger_sphere))
        throw std::domain_error("hypersurfaces and Berger spheres have the Killing field tangent");
    if (is_hypersurface && d != 2 * n) throw std::domain_error("a hypersurface has dimension 2n");
    if (is_tg_berger_sphere && d % 2 == 0) throw std::domain_error("a Berger sphere has odd dimension");
    if (xi_case == XiCase::XiNormal) return 2 * (n + 1);
    if (tau.tau_sq() <= Rational(1, d + 1)) return 0;
    if (is_tg_berger_sphere) return 2 * n + 1 - d;
    if (is_hypersurface) return 2 * n + 3;
    return 2 * (n + 1);
}

Rational hypersurface_first_eigenvalue_bound(int n, const BergerParam& tau) {
    if (n < 1) throw std::domain_error("need n >= 1");
    return Rational(-2 * n) * tau.tau_sq();
}

ModuliVector clifford_moduli_vector(const BergerParam& tau) {
    const double t2 = tau.tau_sq_d();
    ModuliVector v;
    v.tau_sq = tau.tau_sq();
    if (tau.tau_sq() >= Rational(1, 3)) {
        v.x = (1.0 - t2) / (1.0 + t2);
        v.y = 2.0 * tau.tau() / (1.0 + t2);
    } else {
        v.x = 0.5;
        v.y = 1.0 / (2.0 * tau.tau());
    }
    return v;
}

std::vector<ModuliVector> moduli_curve(int samples, const Rational& tau_sq_min) {
    if (samples < 1) throw std::domain_error("moduli_curve needs at least one sample");
    if (tau_sq_min.sign() <= 0 || tau_sq_min > Rational(1)) throw std::domain_error("tau^2 range must lie in (0, 1]");
    std::vector<ModuliVector> out;
    for (int i = 0; i < samples; ++i) {
        Rational t = samples == 1 ? Rational(1)
                                  : Rational(1) - (Rational(1) - tau_sq_min) * Rational(i, samples - 1);
        out.push_back(clifford_moduli_vector(BergerParam(t)));
    }
    return out;
}

Rational genus_index_bound(int g) {
    if (g < 0) throw std::domain_error("genus must be nonnegative");
    return Rational(g, 4);
}

IndexOneClassification surface_index_one_classification(const BergerParam& tau, const SurfaceKind& surface) {
    if (tau.tau_sq() < Rational(1, 3))
        throw OutOfScope("the index-one classification needs tau^2 >= 1/3");
    IndexOneClassification r;
    if (std::holds_alternative<MinimalSphere>(surface)) {
        r.index_one = true;
        r.index = 1;
        r.index_lower_bound = 1;
        r.reason = "the minimal sphere has index one";
    } else if (std::holds_alternative<CliffordTorus>(surface)) {
        IndexReport rep = clifford_index_nullity(0, 0, tau);
        r.index = rep.index;
        r.index_one = rep.index == 1;
        r.index_lower_bound = rep.index;
        r.reason = r.index_one ? "the Clifford torus has index one exactly at tau^2 = 1/3"
                               : "the Clifford torus has index " + std::to_string(rep.index) + " here";
    } else {
        const int g = std::get<OtherSurface>(surface).genus;
        if (g < 1) throw std::domain_error("a genus-zero minimal surface is the minimal sphere");
        Rational b = genus_index_bound(g);
        auto ceil_b = static_cast<std::int64_t>((b.num() + b.den() - 1) / b.den());
        // unstable and not index one, so the index is at least two
        r.index_lower_bound = std::max<std::int64_t>(2, ceil_b);
        r.reason = "index >= g/4 = " + b.str() + " and index one only for the sphere or the equilateral Clifford torus";
    }
    return r;
}

namespace {

StabilityVerdict theorem_verdict(const ModelSubmanifold& model, const BergerParam& tau) {
    if (auto* t = std::get_if<TotallyGeodesicBergerSphere>(&model)) return s1_bundle_stability(t->m, 1, tau);
    if (auto* c = std::get_if<CircleCover>(&model)) return s1_bundle_stability(0, c->s, tau);
    if (std::holds_alternative<VeroneseRP3>(model)) return s1_bundle_stability(1, 1, tau);
    if (std::holds_alternative<VeroneseS3>(model)) return s1_bundle_stability(1, 2, tau);
    if (std::holds_alternative<CliffordHypersurface>(model)) {
        StabilityVerdict v;
        v.verdict = Verdict::Unstable;
        v.theorem = "hypersurface-instability";
        v.reason = "compact minimal hypersurfaces are unstable with first eigenvalue <= " +
                   hypersurface_first_eigenvalue_bound(model_ambient_n(model), tau).str();
        return v;
    }
    return dimension_instability(model_dimension(model), tau);
}

}  // namespace

StabilityVerdict classify_model(const ModelSubmanifold& model, const BergerParam& tau, const IndexReport& report) {
    StabilityVerdict v = theorem_verdict(model, tau);
    std::optional<JacobiMode> first_negative;
    for (const auto& m : report.nonpositive_modes)
        if (m.value.sign() < 0) {
            first_negative = m;
            break;
        }
    if (v.verdict == Verdict::Stable || v.verdict == Verdict::Unstable) {
        if (first_negative) v.witness = first_negative;
        return v;
    }
    StabilityVerdict resolved;
    resolved.theorem = "enumerated-spectrum";
    if (report.index == 0) {
        resolved.verdict = Verdict::Stable;
        resolved.reason = "no negative Jacobi eigenvalue (" + v.reason + ")";
    } else {
        resolved.verdict = Verdict::Unstable;
        resolved.witness = first_negative;
        resolved.reason = "negative Jacobi eigenvalue " + first_negative->value.str() + " (" + v.reason + ")";
    }
    return resolved;
}

std::vector<PhaseRow> phase_diagram(const std::vector<ModelSubmanifold>& models, const std::vector<Rational>& grid) {
    std::vector<PhaseRow> rows;
    for (const auto& model : models)
        for (const Rational& t : grid) {
            BergerParam tau(t);
            IndexReport rep = enumerate_index(model, tau);
            StabilityVerdict v = classify_model(model, tau, rep);
            rows.push_back({model_name(model), model_dimension(model), t, rep.index, rep.nullity, v.verdict, v.theorem});
        }
    return rows;
}

}  // namespace berger
