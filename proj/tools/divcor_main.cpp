// Batch verification front end: orchestrates the exact local-identity suites,
// the numeric moment cross-checks, and the multiplicity enumerations, with
// flat key=value configuration and JSON machine reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

#include "divcor/config.hpp"
#include "divcor/delta_method.hpp"
#include "divcor/dirichlet.hpp"
#include "divcor/errors.hpp"
#include "divcor/identity_checks.hpp"
#include "divcor/instances.hpp"
#include "divcor/multiplicity.hpp"
#include "divcor/zeta.hpp"

namespace {

using divcor::KeyValueConfig;
using json = nlohmann::ordered_json;

struct Common {
    std::string config_path;
    std::string out_path;
    std::string profile = "medium";
    std::uint64_t seed = 1;
    int jobs = 1;
};

void write_report(const Common& c, const json& report) {
    if (c.out_path.empty()) return;
    std::ofstream out(c.out_path);
    if (!out) throw divcor::ConfigError("cannot open output path: " + c.out_path);
    out << report.dump(2) << "\n";
}

KeyValueConfig load_config(const Common& c) {
    if (c.config_path.empty()) return KeyValueConfig{};
    return KeyValueConfig::from_file(c.config_path);
}

json identity_json(const divcor::IdentityReport& r) {
    json j;
    j["identity"] = r.identity;
    j["instance"] = r.instance;
    j["pass"] = r.pass;
    j["ecut_x"] = r.ecut_x;
    j["cutoff_x"] = r.cutoff_x;
    j["index_bound"] = r.index_bound;
    if (r.mismatch) {
        j["mismatch_exponent"] = r.mismatch->exponent;
        j["detail"] = r.detail;
    }
    return j;
}

void print_verdict(const divcor::IdentityReport& r) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.identity << "  " << r.instance << "  ("
              << r.seconds << "s)\n";
    if (!r.pass && r.mismatch)
        std::cout << "     first mismatch at Y-exponent " << r.mismatch->exponent << " ["
                  << r.detail << "]\n";
}

// Runs jobs in parallel but collects verdicts in submission order.
std::vector<divcor::IdentityReport> run_ordered(
    const std::vector<std::function<divcor::IdentityReport()>>& tasks, int jobs) {
    std::vector<divcor::IdentityReport> out(tasks.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            out[i] = tasks[i]();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

int run_verify_local(const Common& c) {
    const KeyValueConfig cfg = load_config(c);
    auto profile = divcor::profile_by_name(c.profile);
    const auto n_t2 = cfg.get_uint("theorem2_count", 6);
    const auto n_t4 = cfg.get_uint("theorem4_count", 4);
    const auto n_l1 = cfg.get_uint("lemma1_count", 5);
    const auto n_l2 = cfg.get_uint("lemma2_count", 4);
    const auto n_l3 = cfg.get_uint("lemma3_count", 4);
    const auto n_sound = cfg.get_uint("soundness_count", 1);
    profile.ecut_x = cfg.get_int("ecut_x", profile.ecut_x);

    const std::size_t ell_cap = profile.max_blocks;
    auto plain = divcor::seed_instances(c.seed, std::max({n_t2, n_l1, n_l2, n_l3, n_sound}),
                                        profile, 1, ell_cap, false);
    std::vector<divcor::LocalInstance> mixed;
    if (ell_cap >= 2)
        mixed = divcor::seed_instances(c.seed + 1, std::max(n_t4, n_sound), profile, 2,
                                       ell_cap, true);

    std::vector<std::function<divcor::IdentityReport()>> tasks;
    for (std::size_t i = 0; i < n_l1; ++i)
        tasks.push_back([&, i] { return divcor::check_lemma1(plain[i]); });
    for (std::size_t i = 0; i < n_l2; ++i)
        tasks.push_back([&, i] { return divcor::check_lemma2(plain[i]); });
    for (std::size_t i = 0; i < n_l3; ++i)
        tasks.push_back([&, i] { return divcor::check_lemma3(plain[i]); });
    for (std::size_t i = 0; i < n_t2; ++i)
        tasks.push_back([&, i] { return divcor::check_theorem2(plain[i]); });
    for (std::size_t i = 0; i < n_t4 && i < mixed.size(); ++i)
        tasks.push_back([&, i] { return divcor::check_theorem4(mixed[i]); });
    for (const char* which : {"lemma1", "lemma2", "lemma3", "theorem2"})
        for (std::size_t i = 0; i < n_sound; ++i)
            tasks.push_back(
                [&, which, i] { return divcor::check_truncation_soundness(which, plain[i]); });
    for (std::size_t i = 0; i < n_sound && i < mixed.size(); ++i)
        tasks.push_back(
            [&, i] { return divcor::check_truncation_soundness("theorem4", mixed[i]); });

    const auto reports = run_ordered(tasks, c.jobs);
    json out = json::array();
    bool all = true;
    for (const auto& r : reports) {
        print_verdict(r);
        out.push_back(identity_json(r));
        all = all && r.pass;
    }
    write_report(c, out);
    return all ? 0 : 1;
}

divcor::NumericShiftSet shifts_from(const KeyValueConfig& cfg, const std::string& key,
                                    const std::vector<double>& fallback) {
    auto v = cfg.get_list(key);
    if (v.empty()) v = fallback;
    return divcor::NumericShiftSet(v, cfg.get_int("allow_coinciding", 0) != 0);
}

int run_tau(const Common& c) {
    const KeyValueConfig cfg = load_config(c);
    const auto A = shifts_from(cfg, "shifts_a", {0.0});
    const auto n_max = cfg.get_uint("n_max", 50);
    divcor::SieveTable sieve(n_max + 1);
    std::cout << "n,tau\n";
    json rows = json::array();
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const double t = divcor::tau_global(sieve, A, n);
        std::cout << n << "," << t << "\n";
        rows.push_back({{"n", n}, {"tau", t}});
    }
    write_report(c, rows);
    return 0;
}

json moment_json(const divcor::MomentReport& r) {
    return json{{"method", r.method},
                {"value_re", r.value.real()},
                {"value_im", r.value.imag()},
                {"error_estimate", r.error_estimate}};
}

int run_correlate(const Common& c) {
    const KeyValueConfig cfg = load_config(c);
    const double T = cfg.get_double("T", 200.0);
    const auto X = cfg.get_uint("X", 2000);
    const double lt = std::log(T);
    const auto A = shifts_from(cfg, "shifts_a", {1.0 / lt, 2.0 / lt});
    const auto B = shifts_from(cfg, "shifts_b", A.shifts);
    divcor::SieveTable sieve(X + 1);
    const auto r = divcor::correlation_sum(sieve, A, B, T, X,
                                           divcor::TestFunction::standard_bump(),
                                           cfg.get_double("eps", 1e-8));
    std::cout << r.method << ",value=" << r.value.real() << "+" << r.value.imag()
              << "i,err<=" << r.error_estimate << "\n";
    write_report(c, moment_json(r));
    return 0;
}

int run_recipe(const Common& c) {
    const KeyValueConfig cfg = load_config(c);
    const double T = cfg.get_double("T", 5000.0);
    const double X = cfg.get_double("X", std::pow(T, 1.5));
    const double lt = std::log(T);
    const auto A = shifts_from(cfg, "shifts_a", {1.0 / lt, 2.0 / lt});
    const auto B = shifts_from(cfg, "shifts_b", A.shifts);
    const auto r = divcor::recipe_predict(A, B, T, X, divcor::TestFunction::standard_bump());
    std::cout << r.method << ",value=" << r.value.real() << ",err<=" << r.error_estimate
              << "\n";
    write_report(c, moment_json(r));
    return 0;
}

int run_compare(const Common& c) {
    const KeyValueConfig cfg = load_config(c);
    const double T = cfg.get_double("T", 200.0);
    const auto X = cfg.get_uint("X", 2000);
    const double lt = std::log(T);
    const auto A = shifts_from(cfg, "shifts_a", {1.0 / lt, 2.0 / lt});
    const auto B = shifts_from(cfg, "shifts_b", A.shifts);
    const double tol_exact = cfg.get_double("tol_exact", 1e-6);
    const double tol_recipe = cfg.get_double("tol_recipe", 0.10);

    divcor::SieveTable sieve(X + 1);
    const auto& tf = divcor::TestFunction::standard_bump();
    const auto corr = divcor::correlation_sum(sieve, A, B, T, X, tf, cfg.get_double("eps", 1e-8));
    const auto direct = divcor::direct_integral(sieve, A, B, T, X, tf);
    const auto recipe = divcor::recipe_predict(A, B, T, static_cast<double>(X), tf);

    const double scale = std::abs(corr.value);
    const double d_direct = std::abs(direct.value - corr.value) / scale;
    const double d_recipe = std::abs(recipe.value.real() - corr.value.real()) / scale;
    const bool ok = d_direct <= tol_exact && d_recipe <= tol_recipe;

    std::cout << "method,value,error,delta_vs_correlation\n";
    std::cout << "correlation_sum," << corr.value.real() << "," << corr.error_estimate << ",0\n";
    std::cout << "direct_integral," << direct.value.real() << "," << direct.error_estimate << ","
              << d_direct << "\n";
    std::cout << "recipe," << recipe.value.real() << "," << recipe.error_estimate << ","
              << d_recipe << "\n";
    std::cout << (ok ? "PASS" : "FAIL") << " compare T=" << T << " X=" << X << "\n";

    json out;
    out["rows"] = json::array({moment_json(corr), moment_json(direct), moment_json(recipe)});
    out["delta_direct"] = d_direct;
    out["delta_recipe"] = d_recipe;
    out["pass"] = ok;
    write_report(c, out);
    return ok ? 0 : 1;
}

int run_multiplicity(const Common& c) {
    const KeyValueConfig cfg = load_config(c);
    const int k_max = static_cast<int>(cfg.get_int("k_max", 6));
    const int star_k_max = static_cast<int>(cfg.get_int("star_k_max", 3));
    const auto star_mn_max = cfg.get_uint("star_mn_max", 40);

    bool all = true;
    json out = json::array();
    std::cout << "kind,k,l,count,formula,verdict\n";
    for (int k = 1; k <= k_max; ++k) {
        for (int l = 1; l <= k; ++l) {
            divcor::SwapInstance inst;
            inst.k = k;
            inst.ell = l;
            for (int i = 0; i < l; ++i) {
                inst.u_reps.push_back(i);
                inst.v_reps.push_back(k - 1 - i);
            }
            const auto count = divcor::swap_multiplicity_bruteforce(inst);
            const auto want = divcor::weight_w(k, l);
            const bool ok = count == want;
            all = all && ok;
            std::cout << "swap," << k << "," << l << "," << count << "," << want << ","
                      << (ok ? "pass" : "fail") << "\n";
            out.push_back({{"kind", "swap"},
                           {"k", k},
                           {"l", l},
                           {"count", count.str()},
                           {"formula", want.str()},
                           {"pass", ok}});
        }
    }
    for (int k = 1; k <= star_k_max; ++k) {
        for (int l = 1; l <= k; ++l) {
            for (std::uint64_t m : {4, 12, 36}) {
                for (std::uint64_t n : {2, 6, 30}) {
                    if (m > star_mn_max || n > star_mn_max) continue;
                    const auto rep = divcor::star_system_multiplicity(m, n, k, l);
                    const bool ok = rep.matches_formula && rep.algebra_verified;
                    all = all && ok;
                    std::cout << "star," << k << "," << l << "," << rep.multiplicity << ","
                              << divcor::weight_w(k, l) << "," << (ok ? "pass" : "fail")
                              << "\n";
                    out.push_back({{"kind", "star"},
                                   {"k", k},
                                   {"l", l},
                                   {"m", m},
                                   {"n", n},
                                   {"count", rep.multiplicity.str()},
                                   {"pass", ok}});
                }
            }
        }
    }
    write_report(c, out);
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"divisor-correlation verification harness"};
    app.require_subcommand(1);

    Common c;
    app.add_option("--config", c.config_path, "flat key=value config file");
    app.add_option("--seed", c.seed, "instance generator seed");
    app.add_option("--out", c.out_path, "machine report path (JSON)");
    app.add_option("--profile", c.profile, "small|medium")
        ->check(CLI::IsMember({"small", "medium"}));
    app.add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* s1 = app.add_subcommand("verify-local", "exact local-identity suites");
    auto* s2 = app.add_subcommand("tau", "generalized divisor values");
    auto* s3 = app.add_subcommand("correlate", "banded correlation sum");
    auto* s4 = app.add_subcommand("recipe", "swap-sum moment prediction");
    auto* s5 = app.add_subcommand("compare", "correlation vs integral vs recipe");
    auto* s6 = app.add_subcommand("multiplicity", "combinatorial weight checks");
    // Allow the global options to appear after the subcommand name as well.
    for (auto* s : {s1, s2, s3, s4, s5, s6}) s->fallthrough();

    try {
        app.parse(argc, argv);
        if (s1->parsed()) return run_verify_local(c);
        if (s2->parsed()) return run_tau(c);
        if (s3->parsed()) return run_correlate(c);
        if (s4->parsed()) return run_recipe(c);
        if (s5->parsed()) return run_compare(c);
        if (s6->parsed()) return run_multiplicity(c);
        return 2;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const divcor::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const divcor::Error& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    }
}
