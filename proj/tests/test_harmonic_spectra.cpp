#include <doctest.h>

#include "berger/harmonic_spectra.hpp"

using namespace berger;

TEST_CASE("round sphere eigenvalues and multiplicities") {
    CHECK(round_eigenvalue(1, 1) == 3);
    CHECK(round_multiplicity(1, 1) == 4);
    CHECK(round_eigenvalue(1, 0) == 0);
    CHECK(round_multiplicity(1, 0) == 1);
    CHECK(round_eigenvalue(1, 2) == 8);
    CHECK(round_multiplicity(1, 2) == 9);
    CHECK(real_sphere_multiplicity(2, 1) == 3);
    CHECK(real_sphere_multiplicity(1, 3) == 2);
}

TEST_CASE("bidegree dimensions") {
    CHECK(bidegree_dimension(1, 0, 0) == 1);
    CHECK(bidegree_dimension(1, 1, 1) == 3);
    CHECK(bidegree_dimension(1, 2, 0) == 3);
    CHECK(bidegree_dimension(2, 1, 0) == 3);
}

TEST_CASE("Berger eigenvalues") {
    BergerParam third(Rational(1, 3));
    CHECK(berger_eigenvalue(1, third, 1, 0) == Rational(5));
    CHECK(berger_eigenvalue(1, third, 2, 0) == Rational(16));
    CHECK(berger_eigenvalue(1, third, 2, 1) == Rational(8));
    CHECK(berger_eigenvalue(3, third, 4, 2) == Rational(round_eigenvalue(3, 4)));
    CHECK_THROWS(berger_eigenvalue(1, third, 2, 3));
    CHECK_THROWS(berger_multiplicity(1, 2, -1));
    CHECK(berger_multiplicity(1, 2, 1) == 3);
}

TEST_CASE("multiplicities partition the round multiplicity") {
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= 8; ++k) {
            std::int64_t sum = 0;
            for (int p = 0; p <= k / 2; ++p) sum += berger_multiplicity(n, k, p);
            CHECK(sum == round_multiplicity(n, k));
        }
}

TEST_CASE("Berger eigenvalues dominate the round ones and collapse at tau = 1") {
    BergerParam round(Rational(1));
    for (auto t : {Rational(1, 7), Rational(1, 2), Rational(1)})
        for (const auto& m : berger_spectrum(2, BergerParam(t), 6)) {
            CHECK(m.value >= Rational(m.k * (4 + m.k)));
            CHECK(berger_eigenvalue(2, round, m.k, m.p) == Rational(round_eigenvalue(2, m.k)));
        }
}

TEST_CASE("spectrum ordering is by value then labels") {
    auto modes = berger_spectrum(1, BergerParam(Rational(1, 3)), 3);
    for (std::size_t i = 1; i < modes.size(); ++i) {
        bool ordered = modes[i - 1].value < modes[i].value ||
                       (modes[i - 1].value == modes[i].value &&
                        std::pair(modes[i - 1].k, modes[i - 1].p) < std::pair(modes[i].k, modes[i].p));
        CHECK(ordered);
    }
}

TEST_CASE("Clifford low modes") {
    BergerParam t(Rational(1, 3));
    CHECK(clifford_eigenvalue(0, 0, t, 0, 0, 0) == Rational(0));
    // 2n + (1 - tau^2)/tau^2 with n = 1
    CHECK(clifford_eigenvalue(0, 0, t, 1, 0, 0) == Rational(2) + Rational(2));
    CHECK(clifford_eigenvalue(1, 0, t, 1, 0, 0) == Rational(4) + Rational(2));
    CHECK(clifford_multiplicity(0, 0, 1, 1, 1) == 2);
    CHECK(clifford_multiplicity(1, 2, 1, 1, 1) == 2 * 2 * 3);
    auto low = clifford_low_modes(0, 0, t);
    CHECK(low.size() == 4);
    CHECK(clifford_eigenvalue(0, 0, BergerParam(Rational(1)), 1, 1, 0) == Rational(4));
}
