#include "berger/harmonic_spectra.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace berger {

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > INT64_MAX) throw RationalOverflow("binomial coefficient overflow");
    }
    return static_cast<std::int64_t>(r);
}

std::int64_t round_eigenvalue(int n, int k) {
    if (n < 0 || k < 0) throw std::domain_error("round_eigenvalue needs n, k >= 0");
    return static_cast<std::int64_t>(k) * (2 * n + k);
}

std::int64_t real_sphere_multiplicity(int d, int k) {
    if (d < 1 || k < 0) throw std::domain_error("real_sphere_multiplicity needs d >= 1, k >= 0");
    return binomial(k + d, d) - binomial(k + d - 2, d);
}

std::int64_t round_multiplicity(int n, int k) { return real_sphere_multiplicity(2 * n + 1, k); }

std::int64_t bidegree_dimension(int n, int a, int b) {
    if (n < 0 || a < 0 || b < 0) throw std::domain_error("bidegree_dimension needs nonnegative arguments");
    auto poly = [n](int x, int y) -> std::int64_t {
        if (x < 0 || y < 0) return 0;
        return binomial(x + n, n) * binomial(y + n, n);
    };
    // the Laplacian maps bidegree (a,b) onto (a-1,b-1)
    return poly(a, b) - poly(a - 1, b - 1);
}

Rational berger_eigenvalue(int n, const BergerParam& tau, int k, int p) {
    if (k < 0 || p < 0 || p > k / 2) throw std::domain_error("berger_eigenvalue: need 0 <= p <= floor(k/2)");
    std::int64_t q = k - 2 * p;
    return Rational(round_eigenvalue(n, k)) + tau.stretch() * Rational(q * q);
}

std::int64_t berger_multiplicity(int n, int k, int p) {
    if (k < 0 || p < 0 || p > k / 2) throw std::domain_error("berger_multiplicity: need 0 <= p <= floor(k/2)");
    int a = k - p;
    int b = p;
    if (a == b) return bidegree_dimension(n, a, b);
    return bidegree_dimension(n, a, b) + bidegree_dimension(n, b, a);
}

std::vector<LaplaceMode> berger_spectrum(int n, const BergerParam& tau, int k_max) {
    std::vector<LaplaceMode> out;
    for (int k = 0; k <= k_max; ++k)
        for (int p = 0; p <= k / 2; ++p)
            out.push_back({k, p, berger_eigenvalue(n, tau, k, p), berger_multiplicity(n, k, p)});
    std::stable_sort(out.begin(), out.end(), [](const LaplaceMode& x, const LaplaceMode& y) {
        return std::tie(x.value, x.k, x.p) < std::tie(y.value, y.k, y.p);
    });
    return out;
}

namespace {

void check_clifford(int m1, int m2, int k1, int k2, int p) {
    if (m1 < 0 || m2 < 0) throw std::domain_error("clifford factors need m1, m2 >= 0");
    if (k1 < 0 || k2 < 0 || p < 0 || p > (k1 + k2) / 2)
        throw std::domain_error("clifford labels need k1, k2 >= 0 and 0 <= p <= floor((k1+k2)/2)");
}

}  // namespace

Rational clifford_eigenvalue(int m1, int m2, const BergerParam& tau, int k1, int k2, int p) {
    check_clifford(m1, m2, k1, k2, p);
    int n = m1 + m2 + 1;
    Rational base = Rational(static_cast<std::int64_t>(k1) * (2 * m1 + k1), 2 * m1 + 1) +
                    Rational(static_cast<std::int64_t>(k2) * (2 * m2 + k2), 2 * m2 + 1);
    std::int64_t q = k1 + k2 - 2 * p;
    return Rational(2 * n) * base + tau.stretch() * Rational(q * q);
}

std::int64_t clifford_multiplicity(int m1, int m2, int k1, int k2, int p) {
    check_clifford(m1, m2, k1, k2, p);
    int q = k1 + k2 - 2 * p;
    std::int64_t total = 0;
    for (int a1 = 0; a1 <= k1; ++a1)
        for (int a2 = 0; a2 <= k2; ++a2) {
            int b1 = k1 - a1;
            int b2 = k2 - a2;
            int w = (a1 - b1) + (a2 - b2);
            if (w == q || w == -q)
                total += bidegree_dimension(m1, a1, b1) * bidegree_dimension(m2, a2, b2);
        }
    return total;
}

std::vector<CliffordMode> clifford_low_modes(int m1, int m2, const BergerParam& tau) {
    std::vector<CliffordMode> out;
    for (auto [k1, k2, p] : {std::tuple{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 1}})
        out.push_back({k1, k2, p, clifford_eigenvalue(m1, m2, tau, k1, k2, p), clifford_multiplicity(m1, m2, k1, k2, p)});
    return out;
}

std::vector<CliffordMode> clifford_spectrum(int m1, int m2, const BergerParam& tau, int total_max) {
    std::vector<CliffordMode> out;
    for (int s = 0; s <= total_max; ++s)
        for (int k1 = 0; k1 <= s; ++k1)
            for (int p = 0; p <= s / 2; ++p)
                out.push_back({k1, s - k1, p, clifford_eigenvalue(m1, m2, tau, k1, s - k1, p),
                               clifford_multiplicity(m1, m2, k1, s - k1, p)});
    std::stable_sort(out.begin(), out.end(), [](const CliffordMode& x, const CliffordMode& y) {
        return std::tie(x.value, x.k1, x.k2, x.p) < std::tie(y.value, y.k1, y.k2, y.p);
    });
    return out;
}

}  // namespace berger
