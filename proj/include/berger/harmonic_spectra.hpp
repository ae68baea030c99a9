#pragma once

#include <cstdint>
#include <vector>

#include "berger/berger_core.hpp"
#include "berger/rational.hpp"

namespace berger {

std::int64_t binomial(int n, int k);

// Round sphere S^{2n+1}: lambda_k = k(2n+k) and the dimension of degree-k spherical harmonics.
std::int64_t round_eigenvalue(int n, int k);
std::int64_t round_multiplicity(int n, int k);

// Degree-k spherical harmonics on the real sphere S^d.
std::int64_t real_sphere_multiplicity(int d, int k);

// Harmonic polynomials of bidegree (a, b) on C^{n+1}.
std::int64_t bidegree_dimension(int n, int a, int b);

struct LaplaceMode {
    int k = 0;
    int p = 0;
    Rational value;
    std::int64_t multiplicity = 0;
};

// mu_{k,p} = k(2n+k) + ((1 - tau^2)/tau^2)(k - 2p)^2
Rational berger_eigenvalue(int n, const BergerParam& tau, int k, int p);
std::int64_t berger_multiplicity(int n, int k, int p);
// All (k, p) with k <= k_max, ordered by (value, k, p); zero-multiplicity labels are kept.
std::vector<LaplaceMode> berger_spectrum(int n, const BergerParam& tau, int k_max);

struct CliffordMode {
    int k1 = 0;
    int k2 = 0;
    int p = 0;
    Rational value;
    std::int64_t multiplicity = 0;
};

// Laplacian of the minimal product S^{2m1+1}(r1) x S^{2m2+1}(r2) with the induced Berger metric.
Rational clifford_eigenvalue(int m1, int m2, const BergerParam& tau, int k1, int k2, int p);
std::int64_t clifford_multiplicity(int m1, int m2, int k1, int k2, int p);
// The modes (0,0,0), (1,0,0), (0,1,0), (1,1,1).
std::vector<CliffordMode> clifford_low_modes(int m1, int m2, const BergerParam& tau);
// All labels with k1 + k2 <= total_max, ordered by (value, k1, k2, p).
std::vector<CliffordMode> clifford_spectrum(int m1, int m2, const BergerParam& tau, int total_max);

}  // namespace berger
