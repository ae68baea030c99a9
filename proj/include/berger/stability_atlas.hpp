#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "berger/berger_core.hpp"
#include "berger/jacobi_models.hpp"
#include "berger/rational.hpp"

namespace berger {

enum class Verdict { Stable, Unstable, Boundary, Undetermined };
std::string verdict_name(Verdict v);

struct StabilityVerdict {
    Verdict verdict = Verdict::Undetermined;
    std::string reason;
    // short tag of the result that decided the verdict, e.g. "bundle-stability"
    std::string theorem;
    std::optional<JacobiMode> witness;
};

// S^1-bundle over a complex m-dimensional submanifold, induced bundle of order s.
StabilityVerdict s1_bundle_stability(int m, int s, const BergerParam& tau);
// Any compact minimal d-dimensional submanifold.
StabilityVerdict dimension_instability(int d, const BergerParam& tau);

Rational proof_polynomial_P(int d, int q, const BergerParam& tau, const Rational& x);
double proof_polynomial_P(int d, int q, double tau_sq, double x);

enum class XiCase { XiTangent, XiNormal };
int index_lower_bound(int n, int d, const BergerParam& tau, XiCase xi_case, bool is_hypersurface,
                      bool is_tg_berger_sphere);
Rational hypersurface_first_eigenvalue_bound(int n, const BergerParam& tau);

struct ModuliVector {
    double x = 0.0;
    double y = 0.0;
    Rational tau_sq;
};
ModuliVector clifford_moduli_vector(const BergerParam& tau);
// Samples tau^2 on a uniform grid from 1 down to tau_sq_min (default 1/3).
std::vector<ModuliVector> moduli_curve(int samples, const Rational& tau_sq_min = Rational(1, 3));

struct MinimalSphere {};
struct CliffordTorus {};
struct OtherSurface {
    int genus = 1;
};
using SurfaceKind = std::variant<MinimalSphere, CliffordTorus, OtherSurface>;

class OutOfScope : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct IndexOneClassification {
    bool index_one = false;
    std::optional<std::int64_t> index;  // when known exactly
    std::int64_t index_lower_bound = 0;
    std::string reason;
};
IndexOneClassification surface_index_one_classification(const BergerParam& tau, const SurfaceKind& surface);
Rational genus_index_bound(int g);

// Verdict from the theorems that apply to a library model, confirmed by its enumerated spectrum.
StabilityVerdict classify_model(const ModelSubmanifold& model, const BergerParam& tau, const IndexReport& report);

struct PhaseRow {
    std::string model;
    int d = 0;
    Rational tau_sq;
    std::int64_t index = 0;
    std::int64_t nullity = 0;
    Verdict verdict = Verdict::Undetermined;
    std::string theorem;
};
std::vector<PhaseRow> phase_diagram(const std::vector<ModelSubmanifold>& models, const std::vector<Rational>& grid);

}  // namespace berger
