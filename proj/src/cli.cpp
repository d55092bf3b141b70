#include "kq/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "kq/brioschi_quintic.hpp"
#include "kq/errors.hpp"
#include "kq/instances.hpp"
#include "kq/kronecker_f.hpp"
#include "kq/perm_group.hpp"
#include "kq/resolvent12.hpp"

namespace kq {

namespace {

using nlohmann::json;

constexpr double kP2ControlFloor = 1e-3;
constexpr double kMaxSkipRate = 0.01;

const char* member_name(int member) {
    static constexpr const char* names[] = {"f", "f0", "f1", "f2", "f3", "f4"};
    return member >= 0 && member < 6 ? names[member] : "none";
}

json complex_list(std::span<const Complex> values) {
    json out = json::array();
    for (const Complex& v : values) {
        out.push_back(complex_json(v));
    }
    return out;
}

json family_json(const FFamily& fam) {
    return {{"f", complex_json(fam.f)}, {"fk", complex_list(fam.fk)}};
}

json relation_json(const RelationReport& rel) {
    json out;
    out["rank"] = rel.rank;
    out["singular_values"] = rel.singular_values;
    const double s1 = rel.singular_values.empty() ? 0.0 : rel.singular_values.front();
    out["sigma4_over_sigma1"] =
        (rel.singular_values.size() > 3 && s1 > 0.0) ? json(rel.singular_values[3] / s1) : json();
    out["integer_relations"] = rel.integer_relations;
    out["relations"] = json::array();
    if (rel.relations) {
        for (const auto& r : *rel.relations) {
            out["relations"].push_back(complex_list(r));
        }
    }
    return out;
}

// Largest |form(v^2)| / magnitude over the orbit values.
double resolvent_form_max(std::span<const Complex> orbit, const ResolventCoeffs& fit) {
    double worst = 0.0;
    for (const Complex& v : orbit) {
        const Complex sq = v * v;
        const double mag = resolvent_form_magnitude(sq, fit.a, fit.b, fit.c);
        const double val = std::abs(eval_resolvent_form(sq, fit.a, fit.b, fit.c));
        worst = std::max(worst, mag > 0.0 ? val / mag : val);
    }
    return worst;
}

double max_match_deviation(const OrbitReport& orbit) {
    double worst = 0.0;
    for (const auto& label : orbit.family_match) {
        worst = std::max(worst, label.deviation);
    }
    return worst;
}

std::string exceeds(const std::string& name, double value, double limit) {
    std::ostringstream os;
    os << name << " " << value << " exceeds tolerance " << limit;
    return os.str();
}

// Renders a report as "path: value" lines.
void print_text(const json& j, std::ostream& out, const std::string& prefix = "") {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            print_text(value, out, prefix.empty() ? key : prefix + "." + key);
        }
        return;
    }
    out << prefix << ": " << j.dump() << "\n";
}

struct InstanceResult {
    json record;
    bool skipped = false;
    bool passed = false;
    bool p2_control = false;
    std::optional<FFamily> family;
};

InstanceResult verify_instance(std::uint64_t seed, int index, const Tolerances& tol) {
    InstanceResult res;
    const RootTuple rt = random_instance(seed, index);

    json rec;
    rec["index"] = index;
    rec["roots"] = complex_list(rt);
    rec["degenerate"] = false;
    rec["skipped"] = false;
    rec["orbit_count"] = nullptr;
    rec["pair_count"] = nullptr;
    rec["pairing_ok"] = nullptr;
    rec["family_match_max_deviation"] = nullptr;
    rec["fit_residuals"] = {{"r4", nullptr}, {"r2", nullptr}, {"r0", nullptr}};
    rec["resolvent_form_max"] = nullptr;
    rec["two_valuedness"] = {
        {"even_spread", nullptr}, {"odd_spread", nullptr}, {"pair_symmetric_spread", nullptr}};
    rec["phi"] = {{"a5_count", nullptr}, {"s5_count", nullptr}, {"c4_mag", nullptr},
                  {"c2_mag", nullptr},   {"invariance", nullptr}, {"newton_bridge_gap", nullptr}};
    rec["power_sums"] = {{"p1", nullptr}, {"p3", nullptr}, {"p2_magnitude", nullptr}};
    json failures = json::array();

    if (is_degenerate(rt)) {
        rec["degenerate"] = true;
        rec["skipped"] = true;
        rec["passed"] = true;
        rec["failures"] = failures;
        res.record = std::move(rec);
        res.skipped = true;
        res.passed = true;
        return res;
    }

    auto check = [&](const std::string& name, double value, double limit) {
        if (!(value <= limit)) {
            failures.push_back(exceeds(name, value, limit));
        }
    };

    try {
        const OrbitReport orbit = a5_orbit(rt, tol.dedup);
        rec["orbit_count"] = orbit.values.size();
        rec["pair_count"] = orbit.pair_map.size();
        rec["pairing_ok"] = orbit.well_formed();
        const double match_dev = max_match_deviation(orbit);
        rec["family_match_max_deviation"] = match_dev;
        if (!orbit.well_formed()) {
            failures.push_back("orbit is not 12 values in 6 sign pairs matching +-f_k");
        }
        check("family_match_max_deviation", match_dev, tol.check);

        const ResolveResult resolved = resolve(rt);
        res.family = resolved.family;
        const auto& r = resolved.coeffs.residuals;
        rec["fit_residuals"] = {{"r4", r.r4}, {"r2", r.r2}, {"r0", r.r0}};
        check("fit residual", r.max(), tol.residual);
        const double form = resolvent_form_max(orbit.values, resolved.coeffs);
        rec["resolvent_form_max"] = form;
        check("resolvent_form_max", form, tol.residual);

        const TwoValuednessReport tv = two_valuedness_check(rt);
        rec["two_valuedness"] = {{"even_spread", tv.even_spread},
                                 {"odd_spread", tv.odd_spread},
                                 {"pair_symmetric_spread", tv.pair_symmetric_spread}};
        check("even_spread", tv.even_spread, tol.check);
        check("odd_spread", tv.odd_spread, tol.check);
        check("pair_symmetric_spread", tv.pair_symmetric_spread, tol.check);

        const PhiFamily pf = phi_values(rt, tol.dedup);
        rec["phi"]["a5_count"] = pf.values.size();
        rec["phi"]["s5_count"] = pf.s5_value_count;
        if (pf.s5_value_count != 10) {
            failures.push_back("product takes " + std::to_string(pf.s5_value_count) +
                               " values under S5, expected 10");
        }
        const PrincipalQuintic pq = phi_quintic(pf);
        rec["phi"]["c4_mag"] = pq.suppressed.c4_mag;
        rec["phi"]["c2_mag"] = pq.suppressed.c2_mag;
        check("c4_mag", pq.suppressed.c4_mag, tol.check);
        check("c2_mag", pq.suppressed.c2_mag, tol.check);

        const double inv = invariance_check(rt, tol.dedup);
        rec["phi"]["invariance"] = inv;
        check("invariance", inv, tol.check);
        const double bridge = newton_bridge_gap(pf);
        rec["phi"]["newton_bridge_gap"] = bridge;
        check("newton_bridge_gap", bridge, 1e-10);

        const PowerSumCheck ps = power_sum_check(pf);
        rec["power_sums"] = {{"p1", ps.p1}, {"p3", ps.p3}, {"p2_magnitude", ps.p2_magnitude}};
        check("p1", ps.p1, tol.check);
        check("p3", ps.p3, tol.check);
        res.p2_control = ps.p2_magnitude > kP2ControlFloor;
    } catch (const VerificationFailure& e) {
        failures.push_back(e.what());
    } catch (const NumericFailure& e) {
        failures.push_back(e.what());
    }

    res.passed = failures.empty();
    rec["passed"] = res.passed;
    rec["failures"] = failures;
    res.record = std::move(rec);
    return res;
}

std::optional<RootTuple> load_instance(const std::string& roots_file,
                                       const std::string& coeffs_file,
                                       std::optional<std::uint64_t> seed, std::int64_t index) {
    const int sources = (roots_file.empty() ? 0 : 1) + (coeffs_file.empty() ? 0 : 1) +
                        (seed.has_value() ? 1 : 0);
    if (sources != 1) {
        throw InvalidInput("give exactly one of --roots, --coeffs, --seed");
    }
    if (!roots_file.empty()) {
        return instance_roots(read_instance_file(roots_file, InstanceSpec::Source::Roots));
    }
    if (!coeffs_file.empty()) {
        return instance_roots(read_instance_file(coeffs_file, InstanceSpec::Source::Coefficients));
    }
    return instance_roots(InstanceSpec::from_generator(*seed, index));
}

void emit(const json& report, const std::string& format, const std::string& out_path,
          std::ostream& out) {
    if (format == "text") {
        print_text(report, out);
    } else {
        out << report.dump(2) << "\n";
    }
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            throw InvalidInput("cannot write report to " + out_path);
        }
        file << report.dump(2) << "\n";
    }
}

}  // namespace

json Tolerances::to_json() const {
    return {{"dedup", dedup},
            {"check", check},
            {"residual", residual},
            {"rank", rank},
            {"p2_control_fraction", p2_control_fraction}};
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json resolve_report(const RootTuple& rt, const Tolerances& tol, bool& passed) {
    const ResolveResult res = resolve(rt);
    const OrbitReport orbit = a5_orbit(rt, tol.dedup);
    const double form = resolvent_form_max(orbit.values, res.coeffs);
    const auto& r = res.coeffs.residuals;
    passed = r.max() <= tol.residual && form <= tol.residual;

    json out;
    out["command"] = "resolve";
    out["roots"] = complex_list(rt);
    out["sqrt_discriminant"] = complex_json(sqrt_discriminant(rt));
    out["family"] = family_json(res.family);
    out["sextic"] = complex_list(res.sextic.coeffs());
    out["a"] = complex_json(res.coeffs.a);
    out["b"] = complex_json(res.coeffs.b);
    out["c"] = complex_json(res.coeffs.c);
    out["residuals"] = {{"r4", r.r4}, {"r2", r.r2}, {"r0", r.r0}};
    out["resolvent_form_max"] = form;
    out["clustered"] = res.clustered;
    out["min_square_gap"] = res.min_square_gap;
    out["degree12"] = complex_list(res.degree12.coeffs());
    out["tolerances"] = tol.to_json();
    out["passed"] = passed;
    return out;
}

json orbit_report(const RootTuple& rt, const Tolerances& tol, bool& passed) {
    if (is_degenerate(rt)) {
        throw Degenerate("orbit: root tuple has (near-)repeated roots");
    }
    const OrbitReport orbit = a5_orbit(rt, tol.dedup);
    const double dev = max_match_deviation(orbit);
    passed = orbit.well_formed() && dev <= tol.check;

    json out;
    out["command"] = "orbit";
    out["roots"] = complex_list(rt);
    out["count"] = orbit.values.size();
    out["values"] = complex_list(orbit.values);
    out["pairs"] = json::array();
    for (const auto& [i, j] : orbit.pair_map) {
        out["pairs"].push_back({i, j});
    }
    out["family_match"] = json::array();
    for (const auto& label : orbit.family_match) {
        out["family_match"].push_back({{"member", member_name(label.member)},
                                       {"sign", label.sign},
                                       {"deviation", label.deviation}});
    }
    out["max_match_deviation"] = dev;
    out["pairing_ok"] = orbit.well_formed();
    out["tolerances"] = tol.to_json();
    out["passed"] = passed;
    return out;
}

json orbit_batch_report(std::uint64_t seed, int n, const Tolerances& tol, bool& passed) {
    if (n < 1) {
        throw InvalidInput("--n must be >= 1");
    }
    passed = true;
    json out;
    out["command"] = "orbit";
    out["seed"] = seed;
    out["n"] = n;
    out["instances"] = json::array();
    std::vector<FFamily> samples;
    for (int i = 0; i < n; ++i) {
        const RootTuple rt = random_instance(seed, i);
        json rec{{"index", i}};
        if (is_degenerate(rt)) {
            rec["degenerate"] = true;
            out["instances"].push_back(rec);
            continue;
        }
        const OrbitReport orbit = a5_orbit(rt, tol.dedup);
        rec["degenerate"] = false;
        rec["count"] = orbit.values.size();
        rec["pair_count"] = orbit.pair_map.size();
        rec["pairing_ok"] = orbit.well_formed();
        rec["max_match_deviation"] = max_match_deviation(orbit);
        passed = passed && orbit.well_formed() && max_match_deviation(orbit) <= tol.check;
        out["instances"].push_back(rec);
        samples.push_back(f_family(rt));
    }
    if (samples.size() >= 10) {
        const RelationReport rel = relation_rank(samples, tol.rank);
        out["rank_test"] = relation_json(rel);
        passed = passed && rel.rank == 3;
    } else {
        out["rank_test"] = nullptr;
    }
    out["tolerances"] = tol.to_json();
    out["passed"] = passed;
    return out;
}

json brioschi_report(const RootTuple& rt, const Tolerances& tol, bool& passed) {
    const PhiFamily pf = phi_values(rt, tol.dedup);
    const PrincipalQuintic pq = phi_quintic(pf);
    const PowerSumCheck ps = power_sum_check(pf);
    const double inv = invariance_check(rt, tol.dedup);
    const double bridge = newton_bridge_gap(pf);
    passed = pf.s5_value_count == 10 && pq.suppressed.c4_mag <= tol.check &&
             pq.suppressed.c2_mag <= tol.check && ps.p1 <= tol.check && ps.p3 <= tol.check &&
             inv <= tol.check;

    json out;
    out["command"] = "brioschi";
    out["roots"] = complex_list(rt);
    out["signs"] = kPhiSigns;
    out["values"] = complex_list(pf.values);
    out["a5_count"] = pf.values.size();
    out["s5_count"] = pf.s5_value_count;
    out["p"] = complex_json(pq.p);
    out["q"] = complex_json(pq.q);
    out["r"] = complex_json(pq.r);
    out["suppressed"] = {{"c4_mag", pq.suppressed.c4_mag}, {"c2_mag", pq.suppressed.c2_mag}};
    out["power_sums"] = {{"p1", ps.p1}, {"p2_magnitude", ps.p2_magnitude}, {"p3", ps.p3}};
    out["newton_bridge_gap"] = bridge;
    out["invariance"] = inv;
    out["tolerances"] = tol.to_json();
    out["passed"] = passed;
    return out;
}

VerifyOutcome run_verify(std::uint64_t seed, int n, const Tolerances& tol) {
    if (n < 1) {
        throw InvalidInput("--n must be >= 1");
    }
    const auto start = std::chrono::steady_clock::now();

    std::vector<InstanceResult> results(static_cast<std::size_t>(n));
    std::atomic<int> next{0};
    const unsigned workers =
        std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (int i = next++; i < n; i = next++) {
                    results[static_cast<std::size_t>(i)] = verify_instance(seed, i, tol);
                }
            });
        }
    }

    VerifyOutcome outcome;
    json instances = json::array();
    std::vector<FFamily> samples;
    int skipped = 0;
    int failed = 0;
    int p2_ok = 0;
    for (auto& r : results) {
        instances.push_back(std::move(r.record));
        if (r.skipped) {
            ++skipped;
            continue;
        }
        if (!r.passed) {
            ++failed;
        }
        if (r.p2_control) {
            ++p2_ok;
        }
        if (r.family) {
            samples.push_back(*r.family);
        }
    }
    const int evaluated = n - skipped;
    const double skip_rate = static_cast<double>(skipped) / n;
    const double p2_fraction = evaluated > 0 ? static_cast<double>(p2_ok) / evaluated : 0.0;

    json summary;
    summary["evaluated"] = evaluated;
    summary["skipped"] = skipped;
    summary["failed"] = failed;
    summary["skip_rate"] = skip_rate;
    summary["p2_control_fraction"] = p2_fraction;
    bool rank_ok = true;
    if (samples.size() >= 10) {
        const RelationReport rel = relation_rank(samples, tol.rank);
        summary["rank_test"] = relation_json(rel);
        const double ratio = rel.singular_values[3] / rel.singular_values[0];
        rank_ok = rel.rank == 3 && ratio < tol.rank;
    } else {
        summary["rank_test"] = nullptr;
    }
    outcome.passed = failed == 0 && skip_rate < kMaxSkipRate && rank_ok &&
                     (evaluated == 0 || p2_fraction >= tol.p2_control_fraction);
    summary["passed"] = outcome.passed;

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    outcome.report["meta"] = {{"seed", seed},
                              {"n", n},
                              {"tolerances", tol.to_json()},
                              {"version", kVersion},
                              {"wall_time_s", wall}};
    outcome.report["summary"] = std::move(summary);
    outcome.report["instances"] = std::move(instances);
    return outcome;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical checks of twelve-valued root functions and resolvents of quintics", "kq"};
    app.require_subcommand(1);

    std::string roots_file;
    std::string coeffs_file;
    std::optional<std::uint64_t> seed;
    std::int64_t index = 0;
    std::optional<int> count;
    std::optional<double> tol_flag;
    std::string out_path;
    std::string format = "json";

    auto add_source = [&](CLI::App* sub) {
        sub->add_option("--roots", roots_file, "JSON file {\"roots\": [[re, im] x5]}");
        sub->add_option("--coeffs", coeffs_file, "JSON file {\"coefficients\": [[re, im] x5]}");
        sub->add_option("--seed", seed, "generator seed");
        sub->add_option("--index", index, "generator index");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--tol", tol_flag, "verification tolerance");
        sub->add_option("--out", out_path, "write the JSON report to this file");
        sub->add_option("--format", format, "stdout format")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* resolve_cmd = app.add_subcommand("resolve", "f-family, sextic, fitted (a, b, c), degree-12 resolvent");
    CLI::App* orbit_cmd = app.add_subcommand("orbit", "A5 orbit of f, sign pairing, rank test in batch mode");
    CLI::App* brioschi_cmd = app.add_subcommand("brioschi", "product quintic in principal form");
    CLI::App* verify_cmd = app.add_subcommand("verify", "run every property over generated instances");
    for (CLI::App* sub : {resolve_cmd, orbit_cmd, brioschi_cmd}) {
        add_source(sub);
        add_common(sub);
    }
    orbit_cmd->add_option("--n", count, "batch size (with --seed)");
    verify_cmd->add_option("--seed", seed, "generator seed (default 1)");
    verify_cmd->add_option("--n", count, "number of instances (default 200)");
    add_common(verify_cmd);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "kq: " << e.what() << "\n";
        return kExitInvalidInput;
    }

    try {
        Tolerances tol;
        if (tol_flag) {
            if (!(*tol_flag > 0.0)) {
                throw InvalidInput("--tol must be positive");
            }
            tol.check = *tol_flag;
            if (resolve_cmd->parsed()) {
                tol.residual = *tol_flag;
            }
        }

        bool passed = false;
        json report;
        if (verify_cmd->parsed()) {
            VerifyOutcome outcome = run_verify(seed.value_or(1), count.value_or(200), tol);
            const std::string path = out_path.empty() ? "kq_verify_report.json" : out_path;
            std::ofstream file(path);
            if (!file) {
                throw InvalidInput("cannot write report to " + path);
            }
            file << outcome.report.dump(2) << "\n";
            const json& s = outcome.report["summary"];
            if (format == "text") {
                print_text(s, out);
            } else {
                out << s.dump(2) << "\n";
            }
            out << "report written to " << path << "\n";
            return outcome.passed ? kExitOk : kExitVerificationFailure;
        }

        if (orbit_cmd->parsed() && count) {
            if (!seed || !roots_file.empty() || !coeffs_file.empty()) {
                throw InvalidInput("batch orbit needs --seed and no instance files");
            }
            report = orbit_batch_report(*seed, *count, tol, passed);
        } else {
            const auto rt = load_instance(roots_file, coeffs_file, seed, index);
            if (is_degenerate(*rt)) {
                throw Degenerate("instance has (near-)repeated roots");
            }
            if (resolve_cmd->parsed()) {
                report = resolve_report(*rt, tol, passed);
            } else if (orbit_cmd->parsed()) {
                report = orbit_report(*rt, tol, passed);
            } else {
                report = brioschi_report(*rt, tol, passed);
            }
        }
        emit(report, format, out_path, out);
        return passed ? kExitOk : kExitVerificationFailure;
    } catch (const InvalidInput& e) {
        err << "kq: invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const Degenerate& e) {
        err << "kq: degenerate instance: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const VerificationFailure& e) {
        err << "kq: verification failure: " << e.what() << " (observed " << e.observed() << ")\n";
        return kExitVerificationFailure;
    } catch (const NumericFailure& e) {
        err << "kq: numeric failure: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
}

}  // namespace kq
