#include <doctest.h>

#include "berger/jacobi_models.hpp"

using namespace berger;

namespace {

BergerParam T(std::int64_t p, std::int64_t q) { return BergerParam(Rational(p, q)); }

const std::vector<Rational>& grid() {
    static const std::vector<Rational> g{Rational(1, 12), Rational(1, 8), Rational(1, 6), Rational(1, 4),
                                         Rational(1, 3),  Rational(1, 2), Rational(3, 5), Rational(1)};
    return g;
}

}  // namespace

TEST_CASE("model validation") {
    CHECK_THROWS(validate_model(TotallyGeodesicBergerSphere{2, 2}));
    CHECK_THROWS(validate_model(CircleCover{1, 0}));
    CHECK_THROWS(validate_model(TotallyRealSphere{2, 3}));
    CHECK_THROWS(validate_model(CliffordHypersurface{-1, 0}));
    CHECK_NOTHROW(validate_model(CliffordHypersurface{1, 2}));
    CHECK(model_ambient_n(CliffordHypersurface{1, 2}) == 4);
    CHECK(model_dimension(CliffordHypersurface{1, 2}) == 8);
    CHECK_THROWS(totally_real_sphere_index_nullity(1, 2, T(1, 2)));
}

TEST_CASE("totally geodesic Berger spheres") {
    CHECK(tg_berger_index_nullity(2, 1, T(3, 5)).index == 2);
    CHECK(tg_berger_index_nullity(2, 1, T(3, 5)).nullity == 4);
    auto boundary = tg_berger_index_nullity(2, 1, T(1, 4));
    CHECK(boundary.index == 0);
    CHECK(boundary.nullity == 6);
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m < n; ++m) CHECK(tg_berger_index_nullity(n, m, T(1, 1)).nullity == 4 * (n - m) * (m + 1));
    for (const auto& mode : tg_berger_modes(2, 1, T(1, 3), 4)) {
        if (mode.labels[0] >= 2) CHECK(mode.value.sign() > 0);
        if (mode.labels[0] == 0) CHECK(mode.value == QuadraticSurd(Rational(3) - Rational(4)));
        if (mode.labels[0] == 1 && mode.labels[1] == 0 && mode.labels[2] == -1) CHECK(mode.value.is_zero());
    }
}

TEST_CASE("covered circles") {
    CHECK(circle_stability(2, T(1, 4)));
    CHECK_FALSE(circle_stability(2, T(1, 3)));
    CHECK_FALSE(circle_stability(1, T(1, 1)));
    for (int s = 1; s <= 4; ++s) {
        BergerParam t = T(1, 3);
        bool found = false;
        for (const auto& mode : circle_modes(s, t, s))
            if (mode.labels[0] == s - 1 && mode.labels.back() <= 0) {
                found = true;
                CHECK(mode.value == QuadraticSurd(Rational(1, s * s) * (Rational(3) - Rational(2 * s))));
            }
        CHECK(found);
    }
}

TEST_CASE("Veronese surfaces") {
    CHECK(veronese_index_nullity(T(3, 10), true).index == 6);
    auto q = veronese_index_nullity(T(1, 4), true);
    CHECK(q.index == 0);
    CHECK(q.nullity == 16);
    auto s = veronese_index_nullity(T(1, 8), false);
    CHECK(s.index == 0);
    CHECK(s.nullity == 18);
}

TEST_CASE("totally real spheres") {
    auto r = totally_real_sphere_index_nullity(2, 2, T(1, 2));
    CHECK(r.index == 6);
    CHECK(r.nullity == 6);
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= n; ++d) {
            auto round = totally_real_sphere_index_nullity(n, d, T(1, 1));
            CHECK(round.index == 2 * n + 1 - d);
            CHECK(round.nullity == (d + 1) * (2 * n + 1 - d));
        }
}

TEST_CASE("Clifford hypersurfaces") {
    auto r = clifford_index_nullity(0, 0, T(1, 3));
    CHECK(r.index == 1);
    CHECK(r.nullity == 6);
    CHECK(clifford_index_nullity(0, 1, T(1, 2)).index == 7);
    for (const auto& t : grid()) {
        BergerParam tau(t);
        for (auto [m1, m2] : {std::pair{0, 0}, {0, 1}, {1, 1}, {0, 2}}) {
            int n = m1 + m2 + 1;
            auto rep = clifford_index_nullity(m1, m2, tau);
            CHECK(rep.index >= 1);
            REQUIRE_FALSE(rep.nonpositive_modes.empty());
            QuadraticSurd bound = QuadraticSurd(Rational(-2 * n) * t);
            CHECK((rep.nonpositive_modes.front().value - bound).sign() <= 0);
        }
    }
}

TEST_CASE("report invariants and truncation stability over the grid") {
    std::vector<ModelSubmanifold> models{TotallyGeodesicBergerSphere{1, 0}, TotallyGeodesicBergerSphere{3, 1},
                                         CircleCover{1, 2},                 VeroneseRP3{},
                                         VeroneseS3{},                      TotallyRealSphere{3, 2},
                                         CliffordHypersurface{0, 1}};
    for (const auto& model : models)
        for (const auto& t : grid()) {
            BergerParam tau(t);
            auto rep = enumerate_index(model, tau);
            std::int64_t idx = 0, nul = 0;
            for (const auto& m : rep.nonpositive_modes) {
                CHECK(m.multiplicity >= 1);
                CHECK(m.value.sign() <= 0);
                (m.value.sign() < 0 ? idx : nul) += m.multiplicity;
            }
            CHECK(idx == rep.index);
            CHECK(nul == rep.nullity);
            CHECK_FALSE(rep.certificate.empty());
            EnumerationPolicy doubled;
            doubled.k_max_override = 2 * rep.truncation_k + 2;
            auto wide = enumerate_index(model, tau, doubled);
            CHECK(wide.index == rep.index);
            CHECK(wide.nullity == rep.nullity);
            if (model_is_hopf_bundle(model) && !std::holds_alternative<CliffordHypersurface>(model)) {
                CHECK(rep.index % 2 == 0);
                CHECK(rep.nullity % 2 == 0);
            }
        }
}

TEST_CASE("closed forms agree with enumeration") {
    for (const auto& t : grid()) {
        BergerParam tau(t);
        for (int n = 1; n <= 3; ++n) {
            for (int m = 0; m < n; ++m) {
                ModelSubmanifold model = TotallyGeodesicBergerSphere{n, m};
                auto cf = closed_form_index_nullity(model, tau);
                REQUIRE(cf.has_value());
                auto rep = enumerate_index(model, tau);
                CHECK(rep.index == cf->index.value);
                CHECK(rep.nullity == cf->nullity.value);
            }
            for (int d = 1; d <= n; ++d) {
                if (t >= Rational(1, 4) && t < Rational(1)) {
                    ModelSubmanifold model = TotallyRealSphere{n, d};
                    auto cf = closed_form_index_nullity(model, tau);
                    auto rep = enumerate_index(model, tau);
                    CHECK(rep.index == cf->index.value);
                    CHECK(rep.nullity == cf->nullity.value);
                }
            }
        }
        auto cf = closed_form_index_nullity(VeroneseRP3{}, tau);
        auto rep = enumerate_index(VeroneseRP3{}, tau);
        CHECK(rep.index == cf->index.value);
        CHECK(rep.nullity == cf->nullity.value);
    }
    CHECK_FALSE(closed_form_index_nullity(CircleCover{1, 1}, T(1, 2)).has_value());
}

TEST_CASE("truncation limit is enforced") {
    EnumerationPolicy tight;
    tight.k_limit = 2;
    CHECK_THROWS_AS(enumerate_index(CircleCover{1, 5}, T(1, 2), tight), TruncationError);
}
