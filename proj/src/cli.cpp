#include "berger/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <set>
#include <sstream>

#include "berger/harmonic_spectra.hpp"
#include "berger/jacobi_models.hpp"
#include "berger/numeric_oracle.hpp"
#include "berger/stability_atlas.hpp"

namespace berger {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitTruncation = 3;

class BadInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string approx(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

// Rows of string cells rendered as CSV, aligned text, or a JSON object with a `modes` array.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::set<std::string> integer_columns;

    void write_csv(std::ostream& os) const {
        auto line = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
            os << "\n";
        };
        line(header);
        for (const auto& r : rows) line(r);
    }
    void write_text(std::ostream& os) const {
        std::vector<std::size_t> w(header.size(), 0);
        for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
        for (const auto& r : rows)
            for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
        auto line = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                os << (i ? "  " : "") << r[i];
                if (i + 1 < r.size()) os << std::string(w[i] - r[i].size(), ' ');
            }
            os << "\n";
        };
        line(header);
        for (const auto& r : rows) line(r);
    }
    json to_json() const {
        json arr = json::array();
        for (const auto& r : rows) {
            json o = json::object();
            for (std::size_t i = 0; i < header.size(); ++i) {
                if (integer_columns.count(header[i])) o[header[i]] = std::stoll(r[i]);
                else o[header[i]] = r[i];
            }
            arr.push_back(o);
        }
        return arr;
    }
};

struct Options {
    std::string format = "table";
    std::uint64_t seed = kDefaultSeed;
    std::string tau_sq;
    int n = 1, m = 0, s = 1, d = 1, m1 = 0, m2 = 0;
    int kmax = 3;
    int kmax_override = -1;
    bool low = false;
    std::string space = "berger";
    std::string model;
    std::string grid;
    std::string tau_sq_min = "1/3";
    int samples = 0;
    std::vector<std::string> tolerances;
};

BergerParam parse_tau(const std::string& text) {
    if (text.empty()) throw BadInput("--tau-sq is required (an exact fraction such as 1/3)");
    try {
        return BergerParam(Rational::parse(text));
    } catch (const std::exception& e) {
        throw BadInput(std::string("invalid --tau-sq: ") + e.what());
    }
}

std::vector<Rational> parse_grid(const std::string& text) {
    if (text.empty())
        return {Rational(1, 12), Rational(1, 8), Rational(1, 6), Rational(1, 5), Rational(1, 4), Rational(3, 10),
                Rational(1, 3), Rational(1, 2), Rational(3, 5), Rational(3, 4), Rational(1)};
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_tau(item).tau_sq());
    return out;
}

ModelSubmanifold model_from(const Options& o) {
    ModelSubmanifold model;
    if (o.model == "tg-berger") model = TotallyGeodesicBergerSphere{o.n, o.m};
    else if (o.model == "circle") model = CircleCover{o.n, o.s};
    else if (o.model == "veronese-rp3") model = VeroneseRP3{};
    else if (o.model == "veronese-s3") model = VeroneseS3{};
    else if (o.model == "totally-real") model = TotallyRealSphere{o.n, o.d};
    else if (o.model == "clifford") model = CliffordHypersurface{o.m1, o.m2};
    else throw BadInput("unknown model '" + o.model + "'");
    try {
        validate_model(model);
    } catch (const std::domain_error& e) {
        throw BadInput(e.what());
    }
    return model;
}

std::vector<ModelSubmanifold> all_models() {
    std::vector<ModelSubmanifold> out;
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m < n; ++m) out.emplace_back(TotallyGeodesicBergerSphere{n, m});
    for (int s = 1; s <= 3; ++s) out.emplace_back(CircleCover{1, s});
    out.emplace_back(VeroneseRP3{});
    out.emplace_back(VeroneseS3{});
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= n; ++d) out.emplace_back(TotallyRealSphere{n, d});
    for (int n = 1; n <= 3; ++n)
        for (int m1 = 0; m1 < n; ++m1) {
            int m2 = n - 1 - m1;
            if (m1 <= m2) out.emplace_back(CliffordHypersurface{m1, m2});
        }
    return out;
}

void emit(std::ostream& out, const Options& o, const Table& t, json meta = json::object()) {
    if (o.format == "csv") {
        t.write_csv(out);
    } else if (o.format == "json") {
        meta["modes"] = t.to_json();
        out << meta.dump(2) << "\n";
    } else {
        t.write_text(out);
    }
}

int cmd_spectrum(const Options& o, std::ostream& out) {
    BergerParam tau = parse_tau(o.tau_sq);
    Table t;
    json meta = {{"space", o.space}, {"tau_sq", tau.tau_sq().str()}};
    if (o.space == "berger") {
        if (o.n < 0) throw BadInput("--n must be >= 0");
        t.header = {"k", "p", "value", "multiplicity", "source"};
        t.integer_columns = {"k", "p", "multiplicity"};
        for (int k = 0; k <= o.kmax; ++k)
            for (int p = 0; p <= k / 2; ++p)
                t.rows.push_back({std::to_string(k), std::to_string(p), berger_eigenvalue(o.n, tau, k, p).str(),
                                  std::to_string(berger_multiplicity(o.n, k, p)), "berger-laplacian"});
        meta["n"] = o.n;
    } else if (o.space == "clifford") {
        if (o.m1 < 0 || o.m2 < 0) throw BadInput("--m1 and --m2 must be >= 0");
        t.header = {"k1", "k2", "p", "value", "multiplicity", "source"};
        t.integer_columns = {"k1", "k2", "p", "multiplicity"};
        std::vector<CliffordMode> modes;
        if (o.low) {
            modes = clifford_low_modes(o.m1, o.m2, tau);
        } else {
            for (int s = 0; s <= o.kmax; ++s)
                for (int k1 = 0; k1 <= s; ++k1)
                    for (int p = 0; p <= s / 2; ++p)
                        modes.push_back({k1, s - k1, p, clifford_eigenvalue(o.m1, o.m2, tau, k1, s - k1, p),
                                         clifford_multiplicity(o.m1, o.m2, k1, s - k1, p)});
        }
        for (const auto& m : modes)
            t.rows.push_back({std::to_string(m.k1), std::to_string(m.k2), std::to_string(m.p), m.value.str(),
                              std::to_string(m.multiplicity), "clifford-product-laplacian"});
        meta["m1"] = o.m1;
        meta["m2"] = o.m2;
    } else {
        throw BadInput("--space must be berger or clifford");
    }
    emit(out, o, t, meta);
    return kExitOk;
}

std::string labels_of(const JacobiMode& m) {
    std::string s;
    for (std::size_t i = 0; i < m.labels.size(); ++i) s += (i ? " " : "") + std::to_string(m.labels[i]);
    return s;
}

int cmd_index(const Options& o, std::ostream& out) {
    BergerParam tau = parse_tau(o.tau_sq);
    ModelSubmanifold model = model_from(o);
    EnumerationPolicy policy;
    policy.k_max_override = o.kmax_override;
    IndexReport rep = enumerate_index(model, tau, policy);
    Table t;
    t.header = {"family", "labels", "value", "value_approx", "multiplicity"};
    t.integer_columns = {"multiplicity"};
    for (const auto& m : rep.nonpositive_modes)
        t.rows.push_back({m.family, labels_of(m), m.value.str(), approx(m.value.to_double()), std::to_string(m.multiplicity)});
    if (o.format == "table") {
        out << model_name(model) << " at tau^2 = " << tau.tau_sq() << ": index " << rep.index << ", nullity "
            << rep.nullity << "\n";
        t.write_text(out);
        out << "certificate: " << rep.certificate << "\n";
        return kExitOk;
    }
    json meta = {{"model", model_name(model)},   {"tau_sq", tau.tau_sq().str()}, {"index", rep.index},
                 {"nullity", rep.nullity},       {"truncation_k", rep.truncation_k},
                 {"certificate", rep.certificate}};
    emit(out, o, t, meta);
    return kExitOk;
}

int cmd_phase(const Options& o, std::ostream& out) {
    std::vector<ModelSubmanifold> models =
        o.model.empty() || o.model == "all" ? all_models() : std::vector<ModelSubmanifold>{model_from(o)};
    auto rows = phase_diagram(models, parse_grid(o.grid));
    Table t;
    t.header = {"model", "d", "tau_sq_num", "tau_sq_den", "index", "nullity", "verdict", "theorem"};
    t.integer_columns = {"d", "tau_sq_num", "tau_sq_den", "index", "nullity"};
    for (const auto& r : rows)
        t.rows.push_back({r.model, std::to_string(r.d), std::to_string(r.tau_sq.num()), std::to_string(r.tau_sq.den()),
                          std::to_string(r.index), std::to_string(r.nullity), verdict_name(r.verdict), r.theorem});
    Options csv_default = o;
    if (o.format == "table") csv_default.format = "csv";
    emit(out, csv_default, t);
    return kExitOk;
}

int cmd_moduli(const Options& o, std::ostream& out) {
    Rational lo;
    try {
        lo = Rational::parse(o.tau_sq_min);
    } catch (const std::exception& e) {
        throw BadInput(std::string("invalid --tau-sq-min: ") + e.what());
    }
    if (lo.sign() <= 0 || lo > Rational(1)) throw BadInput("--tau-sq-min must lie in (0, 1]");
    if (o.samples < 1) throw BadInput("--samples must be >= 1");
    Table t;
    t.header = {"tau_sq", "x", "y", "source"};
    for (const auto& v : moduli_curve(o.samples, lo))
        t.rows.push_back({v.tau_sq.str(), approx(v.x), approx(v.y), "clifford-torus-conformal-class"});
    emit(out, o, t);
    return kExitOk;
}

double tolerance_override(const Options& o, const std::string& name, double fallback) {
    for (const auto& spec : o.tolerances) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) throw BadInput("--tol expects NAME=VALUE");
        std::string key = spec.substr(0, eq);
        if (name.rfind(key, 0) == 0) {
            try {
                return std::stod(spec.substr(eq + 1));
            } catch (const std::exception&) {
                throw BadInput("bad tolerance value in '" + spec + "'");
            }
        }
    }
    return fallback;
}

int emit_checks(const Options& o, std::vector<CheckReport> checks, std::ostream& out) {
    bool all_pass = true;
    for (auto& c : checks) {
        c = make_check(c.name, c.max_error, tolerance_override(o, c.name, c.tolerance), c.samples, c.seed);
        all_pass = all_pass && c.pass;
    }
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& c : checks)
            arr.push_back({{"name", c.name},
                           {"pass", c.pass},
                           {"max_error", c.max_error},
                           {"tolerance", c.tolerance},
                           {"samples", c.samples},
                           {"seed", c.seed}});
        out << json{{"checks", arr}, {"pass", all_pass}}.dump(2) << "\n";
    } else {
        Table t;
        t.header = {"name", "pass", "max_error", "tolerance", "samples", "seed"};
        for (const auto& c : checks)
            t.rows.push_back({c.name, c.pass ? "true" : "false", approx(c.max_error), approx(c.tolerance),
                              std::to_string(c.samples), std::to_string(c.seed)});
        if (o.format == "csv") t.write_csv(out);
        else t.write_text(out);
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
    Options fmt = o;
    if (o.format == "table") fmt.format = "json";
    return emit_checks(fmt, verify_suite(o.samples > 0 ? o.samples : 100, o.seed), out);
}

int cmd_tai(const Options& o, std::ostream& out) {
    BergerParam tau = parse_tau(o.tau_sq);
    if (tau.is_round()) throw BadInput("the Tai embedding needs tau^2 < 1");
    if (o.n < 1) throw BadInput("--n must be >= 1");
    return emit_checks(o, tai_checks(tau, o.n, o.samples > 0 ? o.samples : 200, o.seed), out);
}

int cmd_curvature(const Options& o, std::ostream& out) {
    BergerParam tau = parse_tau(o.tau_sq);
    if (o.n < 1) throw BadInput("--n must be >= 1");
    const int samples = o.samples > 0 ? o.samples : 500;
    std::vector<CheckReport> checks{metric_positivity_check(tau, o.n, samples, o.seed),
                                    killing_check(tau, o.n, samples, o.seed),
                                    curvature_symmetry_check(tau, o.n, samples, o.seed),
                                    sectional_consistency_check(tau, o.n, samples, o.seed),
                                    ricci_check(tau, o.n, samples, o.seed)};
    if (tau.is_round()) checks.push_back(round_curvature_check(o.n, samples, o.seed));
    else checks.push_back(geodesic_sphere_isometry_check(tau, o.n, samples, o.seed));
    return emit_checks(o, checks, out);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectra, Jacobi indices and stability of minimal submanifolds of Berger spheres"};
    app.require_subcommand(1);
    Options o;
    if (const char* env = std::getenv("BERGER_SEED")) {
        try {
            o.seed = std::stoull(env, nullptr, 0);
        } catch (const std::exception&) {
            err << "error: BERGER_SEED must be an integer\n";
            return kExitBadInput;
        }
    }
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json", "table"}));
    app.add_option("--seed", o.seed, "random seed for sampling checks");
    app.add_option("--tol", o.tolerances, "tolerance override NAME=VALUE (prefix match on check names)");

    auto add_tau = [&](CLI::App* sub) { sub->add_option("--tau-sq", o.tau_sq, "tau^2 as an exact fraction, e.g. 1/3"); };
    auto add_model = [&](CLI::App* sub) {
        sub->add_option("--model", o.model, "tg-berger | circle | veronese-rp3 | veronese-s3 | totally-real | clifford");
        sub->add_option("--n", o.n, "ambient complex dimension");
        sub->add_option("--m", o.m, "complex dimension of the Berger sphere base");
        sub->add_option("--s", o.s, "covering order of the circle");
        sub->add_option("--d", o.d, "dimension of the totally real sphere");
        sub->add_option("--m1", o.m1, "first Clifford factor S^{2 m1 + 1}");
        sub->add_option("--m2", o.m2, "second Clifford factor S^{2 m2 + 1}");
    };

    auto* spectrum = app.add_subcommand("spectrum", "Laplace spectra of Berger spheres and Clifford hypersurfaces");
    add_tau(spectrum);
    spectrum->add_option("--space", o.space, "berger | clifford");
    spectrum->add_option("--n", o.n, "Berger sphere S^{2n+1}");
    spectrum->add_option("--m1", o.m1, "first Clifford factor");
    spectrum->add_option("--m2", o.m2, "second Clifford factor");
    spectrum->add_option("--kmax", o.kmax, "largest degree");
    spectrum->add_flag("--low", o.low, "only the four lowest Clifford modes");

    auto* index = app.add_subcommand("index", "certified Jacobi index and nullity of a model submanifold");
    add_tau(index);
    add_model(index);
    index->add_option("--kmax-override", o.kmax_override, "enumerate further than the certified truncation");

    auto* phase = app.add_subcommand("phase", "stability phase diagram over a tau^2 grid (CSV)");
    add_model(phase);
    phase->add_option("--grid", o.grid, "comma-separated fractions");

    auto* moduli = app.add_subcommand("moduli", "conformal moduli curve of the Clifford tori");
    moduli->add_option("--samples", o.samples, "number of samples")->default_val(11);
    moduli->add_option("--tau-sq-min", o.tau_sq_min, "smallest tau^2 sampled");

    auto* verify = app.add_subcommand("verify", "run every oracle check");
    verify->add_option("--samples", o.samples, "random samples per check");

    auto* tai = app.add_subcommand("tai-check", "sampling checks of the Tai embedding");
    add_tau(tai);
    tai->add_option("--n", o.n, "projective dimension");
    tai->add_option("--samples", o.samples, "random samples");

    auto* curv = app.add_subcommand("curvature-check", "sampling checks of the curvature formulas");
    add_tau(curv);
    curv->add_option("--n", o.n, "Berger sphere S^{2n+1}");
    curv->add_option("--samples", o.samples, "random samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(o, out);
        if (index->parsed()) return cmd_index(o, out);
        if (phase->parsed()) return cmd_phase(o, out);
        if (moduli->parsed()) return cmd_moduli(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (tai->parsed()) return cmd_tai(o, out);
        if (curv->parsed()) return cmd_curvature(o, out);
    } catch (const BadInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const TruncationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitTruncation;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}

}  // namespace berger
