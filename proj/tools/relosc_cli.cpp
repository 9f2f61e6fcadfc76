// relosc: eigenvalue counting for finite Jacobi matrices via weighted sign
// changes of Wronskians, with independent spectral oracles.
//
// Exit codes: 0 ok, 1 disagreement/violation, 2 parse or usage error,
// 3 sign-uncertain / no-convergence.

#include "relosc/io.hpp"
#include "relosc/relosc.hpp"
#include "relosc/report.hpp"
#include "relosc/suite.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace relosc;

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_parse = 2;
constexpr int exit_uncertain = 3;

struct CommonOpts {
    std::string mode;                // "", "exact", "float"
    std::string emit = "human";
    bool timing = false;
    std::optional<int> zero_band;    // flag > env > default
};

int resolve_zero_band(const CommonOpts& o) {
    if (o.zero_band) return *o.zero_band;
    if (const char* env = std::getenv("RELOSC_ZERO_BAND")) {
        try {
            return std::stoi(env);
        } catch (...) {
            throw ParseError("RELOSC_ZERO_BAND must be an integer exponent");
        }
    }
    return -40;
}

Mode resolve_mode(const CommonOpts& o, Mode from_file) {
    if (o.mode == "exact") return Mode::exact;
    if (o.mode == "float") return Mode::floating;
    if (o.mode.empty()) return from_file;
    throw ParseError("--mode must be exact or float");
}

EmitFormat resolve_emit(const CommonOpts& o) {
    if (o.emit == "json") return EmitFormat::json;
    if (o.emit == "csv") return EmitFormat::csv;
    if (o.emit == "human") return EmitFormat::human;
    throw ParseError("--emit must be json, csv or human");
}

long wall_since(std::chrono::steady_clock::time_point start) {
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count());
}

void print_report(Report& rep, const CommonOpts& opts,
                  std::chrono::steady_clock::time_point start) {
    rep.wall_ms = wall_since(start);
    rep.include_timing = opts.timing;
    std::cout << emit_report(rep, resolve_emit(opts));
}

std::pair<bool, bool> parse_bounds(const std::vector<std::string>& bounds) {
    auto one = [](const std::string& s) {
        if (s == "open") return true;
        if (s == "closed") return false;
        throw ParseError("--bounds takes open|closed per endpoint");
    };
    if (bounds.empty()) return {true, true};
    if (bounds.size() == 1) {
        bool b = one(bounds[0]);
        return {b, b};
    }
    return {one(bounds[0]), one(bounds[1])};
}

std::string bounds_label(const Rational& l0, const Rational& l1, bool lo, bool ro) {
    return std::string(lo ? "(" : "[") + l0.to_string() + ", " + l1.to_string() +
           (ro ? ")" : "]");
}

// ---------------------------------------------------------------------------
// eigcount
// ---------------------------------------------------------------------------

template <ScalarType S>
int run_eigcount(const RawCoefficientData& raw, const Rational& l0, const Rational& l1,
                 bool left_open, bool right_open, const CommonOpts& opts, int band) {
    auto start = std::chrono::steady_clock::now();
    auto c = materialize<S>(raw, band);
    S z0 = scalar_from_rational<S>(l0), z1 = scalar_from_rational<S>(l1);
    if (!(z0 < z1)) throw ParseError("eigcount: need lambda0 < lambda1");

    auto [u0, u1] = oriented_solutions(c, c, z0, z1, Orientation::plus_minus);
    auto w = wronskian_path(*c, *c, u0, u1);
    MainVariant v = variant_for_bounds(left_open, right_open);
    long via_w = interval_count(w, 0, c->N(), convention_for(v, Orientation::plus_minus));
    auto via_s = count_window(matrix_of(*c), z0, z1, left_open, right_open, band);

    long decisions = 2L * c->N() + (c->N() + 1); // propagation steps + W signs
    double rate = decisions > 0 ? static_cast<double>(w.band_hits) / static_cast<double>(decisions)
                                : 0.0;
    bool uncertain = w.sign_uncertain || via_s.uncertain;
    bool agree = via_s.certain() && via_w == via_s.lo;

    Report rep;
    rep.command = "eigcount";
    rep.add_config("mode", mode_name(mode_of<S>()));
    rep.add_config("interval", bounds_label(l0, l1, left_open, right_open));
    ReportCase cs;
    cs.label = "eigenvalue count " + bounds_label(l0, l1, left_open, right_open);
    cs.add("wronskian_count", std::to_string(via_w));
    if (via_s.lo == via_s.hi) cs.add("spectral_count", std::to_string(via_s.lo));
    else cs.add("spectral_count", "[" + std::to_string(via_s.lo) + "," + std::to_string(via_s.hi) + "]");
    if (mode_of<S>() == Mode::floating) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3g", rate);
        cs.add("sign_uncertain_rate", buf);
    }
    cs.add("verdict", agree ? "agree" : (uncertain ? "uncertain" : "disagree"));
    cs.pass = agree;
    cs.uncertain = uncertain;
    rep.cases.push_back(std::move(cs));
    rep.aggregate_pass = agree;
    print_report(rep, opts, start);
    if (uncertain && !agree) return exit_uncertain;
    return agree ? exit_ok : exit_violation;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

template <ScalarType S>
int run_verify(const RawCoefficientData& raw0, const RawCoefficientData& raw1, const Rational& l0,
               const Rational& l1, const CommonOpts& opts, int band) {
    auto start = std::chrono::steady_clock::now();
    auto c0 = materialize<S>(raw0, band);
    auto c1 = materialize<S>(raw1, band);
    auto reports = verify_main(c0, c1, scalar_from_rational<S>(l0), scalar_from_rational<S>(l1));

    Report rep;
    rep.command = "verify";
    rep.add_config("mode", mode_name(mode_of<S>()));
    rep.add_config("lambda0", l0.to_string());
    rep.add_config("lambda1", l1.to_string());
    bool all_agree = true, any_uncertain = false;
    for (const auto& r : reports) {
        ReportCase cs;
        cs.label = r.label;
        cs.add("wronskian_count", std::to_string(r.wronskian_count));
        if (r.spectral_lo == r.spectral_hi) cs.add("spectral_count", std::to_string(r.spectral_lo));
        else
            cs.add("spectral_count",
                   "[" + std::to_string(r.spectral_lo) + "," + std::to_string(r.spectral_hi) + "]");
        std::string marks;
        for (int m : r.marks) marks += (m > 0 ? "+" : m < 0 ? "-" : ".");
        cs.add("marks", marks);
        cs.pass = r.agree;
        cs.uncertain = r.uncertain;
        all_agree = all_agree && r.agree;
        any_uncertain = any_uncertain || r.uncertain;
        rep.cases.push_back(std::move(cs));
    }
    rep.aggregate_pass = all_agree;
    print_report(rep, opts, start);
    if (all_agree) return exit_ok;
    return any_uncertain ? exit_uncertain : exit_violation;
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

template <ScalarType S>
int run_spectrum(const RawCoefficientData& raw, const CommonOpts& opts, int band) {
    auto start = std::chrono::steady_clock::now();
    auto c = materialize<S>(raw, band);
    Spectrum spec = eig_all(matrix_of(*c));

    Report rep;
    rep.command = "spectrum";
    rep.add_config("mode", mode_name(mode_of<S>()));
    rep.add_config("dim", std::to_string(spec.eigenvalues.size()));
    bool all_ok = true;
    for (size_t i = 0; i < spec.eigenvalues.size(); ++i) {
        ReportCase cs;
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", spec.eigenvalues[i]);
        cs.label = "eigenvalue[" + std::to_string(i) + "]";
        cs.add("value", buf);
        // Sturm cross-check at the midpoint between this and the next one
        if (i + 1 < spec.eigenvalues.size()) {
            double mid = 0.5 * (spec.eigenvalues[i] + spec.eigenvalues[i + 1]);
            S z = scalar_from_rational<S>(Rational::from_double(mid));
            auto cnt = count_below(matrix_of(*c), z, false, band);
            bool ok = cnt.lo == static_cast<long>(i) + 1 && cnt.certain();
            cs.add("sturm_below_midpoint", std::to_string(cnt.lo));
            cs.pass = ok;
            all_ok = all_ok && ok;
        }
        rep.cases.push_back(std::move(cs));
    }
    rep.aggregate_pass = all_ok;
    print_report(rep, opts, start);
    return all_ok ? exit_ok : exit_violation;
}

// ---------------------------------------------------------------------------
// fuzz
// ---------------------------------------------------------------------------

int run_fuzz_cmd(const SuiteConfig& cfg, const CommonOpts& opts) {
    auto start = std::chrono::steady_clock::now();
    SuiteReport fz = run_fuzz(cfg);
    Report rep;
    rep.command = "fuzz";
    rep.add_config("mode", mode_name(cfg.mode));
    rep.add_config("seed", std::to_string(cfg.seed));
    rep.add_config("trials", std::to_string(cfg.trials));
    rep.add_config("n_range", std::to_string(cfg.n_min) + ".." + std::to_string(cfg.n_max));
    rep.add_config("zero_band", std::to_string(cfg.zero_band_exp));
    for (const auto& p : fz.properties) {
        ReportCase cs;
        cs.label = p.name;
        cs.add("trials", std::to_string(p.trials));
        cs.add("passes", std::to_string(p.passes));
        if (p.vacuous) cs.add("vacuous", std::to_string(p.vacuous));
        if (p.skipped) cs.add("skipped", std::to_string(p.skipped));
        if (p.uncertain) cs.add("uncertain_cases", std::to_string(p.uncertain));
        if (p.extra_units) cs.add("units", std::to_string(p.extra_units));
        cs.add("failures", std::to_string(p.failures));
        for (size_t i = 0; i < p.fails.size(); ++i) {
            cs.add("failure" + std::to_string(i) + "_trial", std::to_string(p.fails[i].trial));
            cs.add("failure" + std::to_string(i) + "_detail", p.fails[i].detail);
            cs.add("failure" + std::to_string(i) + "_repro", p.fails[i].reproducer);
        }
        cs.pass = p.ok();
        cs.uncertain = p.uncertain > 0;
        rep.cases.push_back(std::move(cs));
    }
    rep.aggregate_pass = fz.pass;
    print_report(rep, opts, start);
    return fz.pass ? exit_ok : exit_violation;
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

int run_gen(std::uint64_t seed, int n_min, int n_max, bool pair, Mode mode,
            const std::string& out_path, const GenRanges& ranges) {
    Rng rng(seed);
    int n = static_cast<int>(rng.range(n_min, n_max));
    auto emit_one = [&](std::uint64_t sub) {
        auto c = random_coefficients<Rational>(Rng::mix(seed ^ sub), n, ranges);
        RawCoefficientData raw = to_raw(*c);
        raw.declared_mode = mode;
        return raw;
    };
    std::string text;
    if (pair) {
        text = pair_to_json(emit_one(1), emit_one(2));
    } else {
        text = coefficients_to_json(emit_one(1));
    }
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot write file: " + out_path);
        out << text;
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"relative oscillation toolkit for finite Jacobi matrices"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string lambda0_str, lambda1_str;
    std::vector<std::string> bounds;
    std::string file, out_path;
    std::uint64_t seed = 42;
    long trials = 100;
    int n_min = 2, n_max = 12;
    bool pair = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--mode", opts.mode, "numeric mode: exact|float (default: from file)")
            ->check(CLI::IsMember({"exact", "float"}));
        cmd->add_option("--emit", opts.emit, "output format: json|csv|human")
            ->check(CLI::IsMember({"json", "csv", "human"}));
        cmd->add_flag("--timing", opts.timing, "include wall time in machine-readable output");
        cmd->add_option("--zero-band", [&](const std::vector<std::string>& v) {
                opts.zero_band = std::stoi(v[0]);
                return true;
            }, "float-mode zero band exponent (default -40, env RELOSC_ZERO_BAND)");
    };

    auto* eigcount = app.add_subcommand("eigcount", "count eigenvalues in an interval");
    eigcount->add_option("file", file, "coefficient JSON file")->required();
    eigcount->add_option("--lambda0", lambda0_str, "left endpoint (rational or decimal)")->required();
    eigcount->add_option("--lambda1", lambda1_str, "right endpoint")->required();
    eigcount->add_option("--bounds", bounds, "open|closed per endpoint")->expected(1, 2);
    add_common(eigcount);

    auto* verify = app.add_subcommand("verify", "check all 8 relative oscillation identities");
    verify->add_option("file", file, "pair JSON file with j0 and j1")->required();
    verify->add_option("--lambda0", lambda0_str, "spectral parameter of j0")->required();
    verify->add_option("--lambda1", lambda1_str, "spectral parameter of j1")->required();
    add_common(verify);

    auto* spectrum = app.add_subcommand("spectrum", "full eigenvalue list with Sturm cross-checks");
    spectrum->add_option("file", file, "coefficient JSON file")->required();
    add_common(spectrum);

    auto* fuzz = app.add_subcommand("fuzz", "run the randomized property portfolio");
    fuzz->add_option("--seed", seed, "rng seed");
    fuzz->add_option("--trials", trials, "cases per property")->check(CLI::PositiveNumber);
    fuzz->add_option("--n-min", n_min, "smallest N")->check(CLI::Range(2, 2000));
    fuzz->add_option("--n-max", n_max, "largest N")->check(CLI::Range(2, 2000));
    add_common(fuzz);

    auto* gen = app.add_subcommand("gen", "generate random coefficient files");
    gen->add_option("--seed", seed, "rng seed");
    gen->add_option("--n-min", n_min, "smallest N")->check(CLI::Range(2, 2000));
    gen->add_option("--n-max", n_max, "largest N")->check(CLI::Range(2, 2000));
    gen->add_flag("--pair", pair, "emit a pair file (j0, j1)");
    gen->add_option("-o,--out", out_path, "output path (default stdout)");
    add_common(gen);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return exit_parse;
    }

    try {
        if (*eigcount || *verify) {
            Rational l0 = Rational::from_string(lambda0_str);
            Rational l1 = Rational::from_string(lambda1_str);
            int band = resolve_zero_band(opts);
            if (*eigcount) {
                auto raw = load_coefficients_file(file);
                auto [lo, ro] = parse_bounds(bounds);
                Mode mode = resolve_mode(opts, raw.declared_mode);
                return mode == Mode::exact
                           ? run_eigcount<Rational>(raw, l0, l1, lo, ro, opts, band)
                           : run_eigcount<ScaledFloat>(raw, l0, l1, lo, ro, opts, band);
            }
            auto [raw0, raw1] = load_pair_file(file);
            Mode mode = resolve_mode(opts, raw0.declared_mode);
            return mode == Mode::exact ? run_verify<Rational>(raw0, raw1, l0, l1, opts, band)
                                       : run_verify<ScaledFloat>(raw0, raw1, l0, l1, opts, band);
        }
        if (*spectrum) {
            auto raw = load_coefficients_file(file);
            int band = resolve_zero_band(opts);
            Mode mode = resolve_mode(opts, raw.declared_mode);
            return mode == Mode::exact ? run_spectrum<Rational>(raw, opts, band)
                                       : run_spectrum<ScaledFloat>(raw, opts, band);
        }
        if (*fuzz) {
            SuiteConfig cfg;
            cfg.mode = resolve_mode(opts, Mode::exact);
            cfg.seed = seed;
            cfg.trials = trials;
            cfg.n_min = n_min;
            cfg.n_max = std::max(n_min, n_max);
            cfg.zero_band_exp = resolve_zero_band(opts);
            return run_fuzz_cmd(cfg, opts);
        }
        if (*gen) {
            Mode mode = resolve_mode(opts, Mode::exact);
            return run_gen(seed, n_min, std::max(n_min, n_max), pair, mode, out_path, GenRanges{});
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const InvalidCoefficientsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const InvalidRangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const SignUncertainError& e) {
        std::cerr << "uncertain: " << e.what() << "\n";
        return exit_uncertain;
    } catch (const NoConvergenceError& e) {
        std::cerr << "no convergence: " << e.what() << "\n";
        return exit_uncertain;
    } catch (const InconsistentSignsError& e) {
        std::cerr << "uncertain: " << e.what() << "\n";
        return exit_uncertain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    }
    return exit_parse;
}
