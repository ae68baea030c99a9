// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "berger/harmonic_spectra.hpp"
#include "berger/jacobi_models.hpp"
#include "berger/numeric_oracle.hpp"
#include "berger/stability_atlas.hpp"

using namespace berger;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (failures.size() < 5) failures.push_back(what);
        }
    }
};

std::string str(const Rational& r) { return r.str(); }

std::vector<Rational> farey(int max_den) {
    std::set<Rational> seen;
    for (int q = 1; q <= max_den; ++q)
        for (int p = 1; p <= q; ++p) seen.insert(Rational(p, q));
    return {seen.begin(), seen.end()};
}

Outcome tg_berger_table() {
    Outcome o;
    const std::vector<Rational> grid{Rational(1, 12), Rational(1, 8), Rational(1, 6), Rational(1, 4),
                                     Rational(1, 3),  Rational(1, 2), Rational(1)};
    int cases = 0;
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m < n; ++m)
            for (const auto& t : grid) {
                BergerParam tau(t);
                ModelSubmanifold model = TotallyGeodesicBergerSphere{n, m};
                auto rep = enumerate_index(model, tau);
                auto cf = closed_form_index_nullity(model, tau);
                ++cases;
                o.require(cf && rep.index == cf->index.value && rep.nullity == cf->nullity.value,
                          model_name(model) + " tau^2=" + str(t));
            }
    o.detail = std::to_string(cases) + " cases";
    return o;
}

Outcome veronese_tables() {
    Outcome o;
    std::set<std::int64_t> indices, nullities;
    int determinate = 0, lower_bounds = 0;
    for (const auto& t : farey(24)) {
        BergerParam tau(t);
        auto rp3 = veronese_index_nullity(tau, true);
        auto cf = closed_form_index_nullity(VeroneseRP3{}, tau);
        o.require(cf && rp3.index == cf->index.value && rp3.nullity == cf->nullity.value,
                  "RP3 tau^2=" + str(t));
        indices.insert(rp3.index);
        if (rp3.nullity > 0) nullities.insert(rp3.nullity);

        auto s3 = veronese_index_nullity(tau, false);
        auto cs = closed_form_index_nullity(VeroneseS3{}, tau);
        o.require(cs.has_value(), "S3 closed form missing at tau^2=" + str(t));
        if (!cs) continue;
        auto compare = [&](const TableEntry& e, std::int64_t got, const char* what) {
            if (e.at_least) {
                ++lower_bounds;
                o.require(got >= e.value, std::string("S3 ") + what + " below stated bound at tau^2=" + str(t));
            } else {
                ++determinate;
                o.require(got == e.value, std::string("S3 ") + what + " at tau^2=" + str(t));
            }
        };
        compare(cs->index, s3.index, "index");
        if (cs->nullity.value > 0 || s3.nullity > 0) compare(cs->nullity, s3.nullity, "nullity");
    }
    o.require(indices == std::set<std::int64_t>{0, 6, 8}, "RP3 index branches differ from {8, 6, 0}");
    o.require(nullities == std::set<std::int64_t>{10, 12, 16}, "RP3 nullity branches differ from {16, 12, 10}");
    o.detail = std::to_string(determinate) + " determinate S3 entries, " + std::to_string(lower_bounds) +
               " lower-bound entries respected";
    return o;
}

Outcome totally_real_table() {
    Outcome o;
    int cases = 0;
    for (const auto& t : {Rational(1, 4), Rational(1, 2), Rational(3, 4)})
        for (int n = 1; n <= 3; ++n)
            for (int d = 1; d <= n; ++d) {
                auto rep = totally_real_sphere_index_nullity(n, d, BergerParam(t));
                const std::int64_t index = 2 * n + 1 + d * (d - 1) / 2;
                const std::int64_t nullity = (d + 1) * (4 * n + 2 - 3 * d) / 2;
                ++cases;
                o.require(rep.index == index && rep.nullity == nullity,
                          "n=" + std::to_string(n) + " d=" + std::to_string(d) + " tau^2=" + str(t));
            }
    o.detail = std::to_string(cases) + " cases";
    return o;
}

Outcome clifford_torus_cross_check() {
    Outcome o;
    std::ostringstream detail;
    std::int64_t null_third = -1, null_neighbors = -1;
    for (const auto& t : {Rational(1, 5), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1)}) {
        BergerParam tau(t);
        auto lattice = torus_fourier_index(tau, Rational(4));
        auto model = clifford_index_nullity(0, 0, tau);
        o.require(lattice.index == model.index && lattice.nullity == model.nullity, "tau^2=" + str(t));
        detail << str(t) << ":(" << model.index << "," << model.nullity << ") ";
        if (t == Rational(1, 3)) null_third = model.nullity;
        if (t == Rational(1, 4)) null_neighbors = model.nullity;
    }
    o.require(null_third - null_neighbors == 2 * (1 + 1), "nullity jump at tau^2 = 1/3 is not 4");
    o.detail = detail.str();
    return o;
}

Outcome laplacian_spectrum() {
    Outcome o;
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= 8; ++k) {
            std::int64_t sum = 0;
            for (int p = 0; p <= k / 2; ++p) sum += berger_multiplicity(n, k, p);
            o.require(sum == round_multiplicity(n, k), "partition n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    int spectra = 0;
    for (const auto& t : {Rational(1, 3), Rational(3, 4)}) {
        BergerParam tau(t);
        for (int n = 1; n <= 2; ++n)
            for (int k = 0; k <= 5; ++k) {
                std::vector<std::pair<Rational, std::int64_t>> expected;
                for (int p = 0; p <= k / 2; ++p) {
                    const std::int64_t mult = berger_multiplicity(n, k, p);
                    if (mult > 0) expected.emplace_back(Rational(-(k - 2 * p) * (k - 2 * p)) / t, mult);
                }
                ++spectra;
                o.require(lxi_squared_spectrum(n, tau, k) == expected,
                          "(L_xi)^2 n=" + std::to_string(n) + " k=" + std::to_string(k) + " tau^2=" + str(t));
            }
    }
    o.detail = "partition n<=3 k<=8; " + std::to_string(spectra) + " exact (L_xi)^2 spectra";
    return o;
}

Outcome geometry_suite() {
    Outcome o;
    const int samples = 500;
    std::vector<CheckReport> reports;
    for (const auto& t : {Rational(1, 5), Rational(1, 3), Rational(1, 2), Rational(3, 4), Rational(1)}) {
        BergerParam tau(t);
        for (int n : {1, 2}) {
            reports.push_back(killing_check(tau, n, samples));
            reports.push_back(curvature_symmetry_check(tau, n, samples));
            reports.push_back(ricci_check(tau, n, samples));
            if (!tau.is_round()) {
                reports.push_back(geodesic_sphere_isometry_check(tau, n, samples));
                for (auto& r : tai_checks(tau, n, samples)) reports.push_back(r);
            }
        }
    }
    for (int n : {1, 2, 3}) reports.push_back(round_curvature_check(n, samples));
    double worst_ratio = 0.0;
    for (const auto& r : reports) {
        o.require(r.pass && r.samples == samples, r.name + " error " + std::to_string(r.max_error));
        if (r.tolerance > 0) worst_ratio = std::max(worst_ratio, r.max_error / r.tolerance);
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu checks x %d samples, worst error/tolerance %.2g", reports.size(), samples,
                  worst_ratio);
    o.detail = buf;
    return o;
}

std::vector<ModelSubmanifold> every_model() {
    std::vector<ModelSubmanifold> out;
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m < n; ++m) out.emplace_back(TotallyGeodesicBergerSphere{n, m});
    for (int s = 1; s <= 4; ++s) out.emplace_back(CircleCover{1, s});
    out.emplace_back(VeroneseRP3{});
    out.emplace_back(VeroneseS3{});
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= n; ++d) out.emplace_back(TotallyRealSphere{n, d});
    for (int m1 = 0; m1 <= 2; ++m1)
        for (int m2 = m1; m1 + m2 <= 2; ++m2) out.emplace_back(CliffordHypersurface{m1, m2});
    return out;
}

Outcome stability_consistency() {
    Outcome o;
    auto grid = farey(12);
    auto rows = phase_diagram(every_model(), grid);
    int excluded = 0, stable = 0;
    for (const auto& row : rows) {
        const std::string where = row.model + " tau^2=" + str(row.tau_sq);
        if (row.tau_sq > Rational(1, row.d + 1)) {
            ++excluded;
            o.require(row.index > 0, "index 0 in the excluded range: " + where);
        }
        if (row.verdict == Verdict::Stable) {
            ++stable;
            o.require(row.index == 0, "Stable verdict with positive index: " + where);
        }
    }
    // the bundle criterion on its own, against the enumerated index
    for (const auto& t : grid) {
        BergerParam tau(t);
        for (int n = 1; n <= 3; ++n)
            for (int m = 0; m < n; ++m)
                if (s1_bundle_stability(m, 1, tau).verdict == Verdict::Stable)
                    o.require(tg_berger_index_nullity(n, m, tau).index == 0, "bundle criterion tg m=" + std::to_string(m));
        for (int s = 1; s <= 4; ++s)
            if (s1_bundle_stability(0, s, tau).verdict == Verdict::Stable)
                o.require(enumerate_index(CircleCover{1, s}, tau).index == 0, "bundle criterion circle s=" + std::to_string(s));
    }
    o.detail = std::to_string(rows.size()) + " rows, " + std::to_string(excluded) + " in the excluded range, " +
               std::to_string(stable) + " Stable";
    return o;
}

Outcome moduli_curve_check() {
    Outcome o;
    auto close = [](const ModuliVector& v, double x, double y) {
        return std::abs(v.x - x) <= 1e-12 && std::abs(v.y - y) <= 1e-12;
    };
    o.require(close(clifford_moduli_vector(BergerParam(Rational(1))), 0.0, 1.0), "endpoint tau^2 = 1");
    o.require(close(clifford_moduli_vector(BergerParam(Rational(1, 3))), 0.5, std::sqrt(3.0) / 2), "endpoint tau^2 = 1/3");
    const std::int64_t big = 1'000'000'000'000'000;
    auto at_branch = clifford_moduli_vector(BergerParam(Rational(1, 3)));
    for (auto t : {Rational(big - 3, 3 * big), Rational(big + 3, 3 * big)}) {
        auto v = clifford_moduli_vector(BergerParam(t));
        o.require(std::hypot(v.x - at_branch.x, v.y - at_branch.y) <= 1e-12, "discontinuity next to tau^2 = 1/3");
    }
    double worst = 0.0;
    const auto sample = farey(30);
    for (const auto& t : sample) {
        BergerParam tau(t);
        auto v = clifford_moduli_vector(tau);
        auto [x, y] = lattice_conformal_class(clifford_lattice(tau));
        worst = std::max(worst, std::hypot(v.x - x, v.y - y));
    }
    o.require(worst <= 1e-12, "closed form disagrees with lattice reduction");
    char buf[96];
    std::snprintf(buf, sizeof buf, "lattice-reduction agreement %.1e over %zu rationals", worst, sample.size());
    o.detail = buf;
    return o;
}

Outcome proof_polynomial_sign() {
    Outcome o;
    int evaluations = 0;
    for (int d = 1; d <= 5; ++d) {
        const Rational lo(1, d + 1);
        for (int j = 1; j <= 50; ++j) {
            Rational t = lo + (Rational(1) - lo) * Rational(j, 50);
            BergerParam tau(t);
            for (int q = 1; q <= 4; ++q) {
                Rational worst = proof_polynomial_P(d, q, tau, Rational(0));
                for (int i = 1; i < 1000; ++i) worst = std::max(worst, proof_polynomial_P(d, q, tau, Rational(i, 999)));
                evaluations += 1000;
                o.require(worst.sign() < 0, "P >= 0 at d=" + std::to_string(d) + " q=" + std::to_string(q) +
                                                " tau^2=" + str(t));
            }
        }
    }
    o.detail = std::to_string(evaluations) + " exact evaluations";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
        double budget_seconds;  // < 0: untimed
    };
    const std::vector<Criterion> criteria{
        {1, "totally geodesic Berger spheres: enumeration equals closed form", tg_berger_table, 1.0},
        {2, "Veronese RP3 and S3 tables", veronese_tables, -1},
        {3, "totally real spheres: index and nullity formulas", totally_real_table, -1},
        {4, "Clifford torus: dual-lattice oracle equals enumeration", clifford_torus_cross_check, -1},
        {5, "Berger Laplacian multiplicities and (L_xi)^2 spectrum", laplacian_spectrum, -1},
        {6, "geometry sampling suite", geometry_suite, 30.0},
        {7, "stability verdicts consistent with indices", stability_consistency, -1},
        {8, "Clifford torus moduli curve", moduli_curve_check, -1},
        {9, "proof polynomial negative on the unstable range", proof_polynomial_sign, -1},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::string timing;
        if (c.budget_seconds > 0) {
            char buf[64];
            std::snprintf(buf, sizeof buf, " [%.3f s, budget %.0f s]", secs, c.budget_seconds);
            timing = buf;
            if (secs >= c.budget_seconds) {
                o.pass = false;
                o.failures.push_back("over time budget");
            }
        }
        std::printf("%s criterion %d: %s (%s)%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    timing.c_str());
        for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
        if (!o.pass) ++failed;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
