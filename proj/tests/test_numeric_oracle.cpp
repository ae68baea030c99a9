#include <doctest.h>

#include <cmath>

#include "berger/harmonic_spectra.hpp"
#include "berger/numeric_oracle.hpp"

using namespace berger;

namespace {
BergerParam T(std::int64_t p, std::int64_t q) { return BergerParam(Rational(p, q)); }
}  // namespace

TEST_CASE("harmonic polynomial counts by rank") {
    CHECK(harmonic_dim_bruteforce(1, 0, 0) == 1);
    CHECK(harmonic_dim_bruteforce(1, 2, 0) == 3);
    CHECK(harmonic_dim_bruteforce(1, 1, 1) == 3);
    for (int n = 0; n <= 2; ++n)
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b) CHECK(harmonic_dim_bruteforce(n, a, b) == bidegree_dimension(n, a, b));
    CHECK_THROWS_AS(harmonic_dim_bruteforce(1, 9, 0), OracleRefusal);
}

TEST_CASE("fibre derivative squared spectrum") {
    auto t = T(1, 3);
    auto k0 = lxi_squared_spectrum(1, t, 0);
    REQUIRE(k0.size() == 1);
    CHECK(k0[0] == std::pair<Rational, std::int64_t>{Rational(0), 1});
    auto k1 = lxi_squared_spectrum(1, t, 1);
    REQUIRE(k1.size() == 1);
    CHECK(k1[0] == std::pair<Rational, std::int64_t>{Rational(-3), 4});
    auto k2 = lxi_squared_spectrum(1, t, 2);
    REQUIRE(k2.size() == 2);
    CHECK(k2[0] == std::pair<Rational, std::int64_t>{Rational(-12), 6});
    CHECK(k2[1] == std::pair<Rational, std::int64_t>{Rational(0), 3});
}

TEST_CASE("flat torus oracle") {
    auto a = torus_fourier_index(T(1, 3), Rational(4));
    CHECK(a.index == 1);
    CHECK(a.nullity == 6);
    CHECK(torus_fourier_index(T(1, 2), Rational(4)).index == 5);
    auto zero = torus_fourier_index(T(1, 2), Rational(0));
    CHECK(zero.index == 0);
    CHECK(zero.nullity == 1);
    auto lat = clifford_lattice(T(1, 2));
    CHECK(std::abs(lat.generators.determinant()) > 0);
}

TEST_CASE("geometry checks pass at their tolerances") {
    CHECK(gauss_flatness_check(T(1, 3)).pass);
    CHECK(gauss_flatness_check(T(1, 3)).max_error < 1e-12);
    CHECK(killing_check(T(1, 1), 1, 50).pass);
    auto sym = curvature_symmetry_check(T(1, 3), 2, 500);
    CHECK(sym.pass);
    CHECK(sym.tolerance == 1e-10);
    CHECK(minimality_first_variation_check(CliffordHypersurface{0, 0}, T(1, 3), 20).pass);
    CHECK(minimality_first_variation_check(CliffordHypersurface{0, 0}, T(1, 1), 20).pass);
    CHECK(minimality_first_variation_check(TotallyRealSphere{2, 1}, T(1, 5), 20).pass);
    CHECK_THROWS_AS(minimality_first_variation_check(VeroneseRP3{}, T(1, 3), 5), OracleRefusal);
}

TEST_CASE("Tai checks at n = 2, tau^2 = 1/2") {
    auto reports = tai_checks(T(1, 2), 2, 50);
    CHECK(reports.size() == 5);
    for (const auto& r : reports) {
        INFO(r.name << " error " << r.max_error);
        CHECK(r.pass);
    }
}

TEST_CASE("check reports are deterministic in the seed") {
    auto a = ricci_check(T(1, 5), 2, 40, 7);
    auto b = ricci_check(T(1, 5), 2, 40, 7);
    CHECK(a.max_error == b.max_error);
    CHECK(a.seed == 7);
    CHECK(make_check("x", 2.0, 1.0, 1, 0).pass == false);
    CHECK(make_check("x", 1.0, 1.0, 1, 0).pass == true);
}
