#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "berger/berger_core.hpp"
#include "berger/rational.hpp"

namespace berger {

struct TotallyGeodesicBergerSphere {
    int n = 1;
    int m = 0;
};
// Phi_s(z) = (z^s, 0, ..., 0): the great circle of the first slot covered s times.
struct CircleCover {
    int n = 1;
    int s = 1;
};
struct VeroneseRP3 {};
struct VeroneseS3 {};
struct TotallyRealSphere {
    int n = 1;
    int d = 1;
};
struct CliffordHypersurface {
    int m1 = 0;
    int m2 = 0;
};

using ModelSubmanifold =
    std::variant<TotallyGeodesicBergerSphere, CircleCover, VeroneseRP3, VeroneseS3, TotallyRealSphere, CliffordHypersurface>;

void validate_model(const ModelSubmanifold& model);
int model_dimension(const ModelSubmanifold& model);
int model_ambient_n(const ModelSubmanifold& model);
std::string model_name(const ModelSubmanifold& model);
// S^1-bundles over complex submanifolds (the fibre is tangent).
bool model_is_hopf_bundle(const ModelSubmanifold& model);

struct JacobiMode {
    std::string family;
    std::vector<int> labels;
    QuadraticSurd value;
    std::int64_t multiplicity = 0;
};

std::string mode_label_string(const JacobiMode& mode);

class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct IndexReport {
    std::int64_t index = 0;
    std::int64_t nullity = 0;
    std::vector<JacobiMode> nonpositive_modes;
    int truncation_k = 0;
    std::string certificate;
    std::vector<std::string> warnings;
};

struct EnumerationPolicy {
    // largest truncation level the driver may try before giving up
    int k_limit = 64;
    // when larger than the certified level, enumerate up to this level instead
    int k_max_override = -1;
};

// Per-family mode generators up to a truncation level.
std::vector<JacobiMode> tg_berger_modes(int n, int m, const BergerParam& tau, int k_max);
std::vector<JacobiMode> circle_modes(int s, const BergerParam& tau, int k_max, int normal_slots = 1);
std::vector<JacobiMode> veronese_modes(const BergerParam& tau, int k_max, bool quotient);
std::vector<JacobiMode> totally_real_sphere_modes(int n, int d, const BergerParam& tau, int k_max = 2);
std::vector<JacobiMode> clifford_modes(int m1, int m2, const BergerParam& tau, int total_max);

bool circle_stability(int s, const BergerParam& tau);

IndexReport enumerate_index(const ModelSubmanifold& model, const BergerParam& tau,
                            const EnumerationPolicy& policy = {});

IndexReport tg_berger_index_nullity(int n, int m, const BergerParam& tau);
IndexReport veronese_index_nullity(const BergerParam& tau, bool quotient);
IndexReport totally_real_sphere_index_nullity(int n, int d, const BergerParam& tau);
IndexReport clifford_index_nullity(int m1, int m2, const BergerParam& tau);

// Closed-form piecewise index/nullity as stated for each family. `at_least` marks
// entries that are only lower bounds.
struct TableEntry {
    std::int64_t value = 0;
    bool at_least = false;
};
struct ClosedFormIndex {
    TableEntry index;
    TableEntry nullity;
};
std::optional<ClosedFormIndex> closed_form_index_nullity(const ModelSubmanifold& model, const BergerParam& tau);

}  // namespace berger
