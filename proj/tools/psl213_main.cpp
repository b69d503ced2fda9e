#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "psl213/forms.hpp"
#include "psl213/group13.hpp"
#include "psl213/icosahedral.hpp"
#include "psl213/qmodular.hpp"
#include "psl213/suites.hpp"

using namespace psl213;

namespace {

int cmd_verify(const RunConfig& cfg) {
    std::vector<VerificationReport> reports = run_suites(cfg);
    if (cfg.json) {
        if (reports.size() == 1)
            std::cout << report_to_json(reports[0]) << "\n";
        else
            std::cout << reports_to_json(reports) << "\n";
    } else {
        for (const auto& r : reports) std::cout << report_to_text(r);
        std::size_t checks = 0, failures = 0;
        for (const auto& r : reports)
            for (const auto& c : r.results) {
                ++checks;
                if (c.status == CheckStatus::Fail) ++failures;
            }
        std::cout << checks << " checks, " << failures << " failures\n";
    }
    for (const auto& r : reports)
        if (!r.all_passed()) return 1;
    return 0;
}

SeriesQ qexp_series(const std::string& name, int order) {
    if (name == "eta") return eta_series(order);
    if (name == "E4") return eisenstein_series(4, order);
    if (name == "E6") return eisenstein_series(6, order);
    if (name == "Delta") return delta_series(order);
    if (name.size() == 2 && name[0] == 'a' && name[1] >= '1' && name[1] <= '6')
        return theta13_series(name[1] - '0', order);
    if (name.rfind("Phi", 0) == 0) {
        int deg = std::stoi(name.substr(3));
        ModularData md(order);
        return md.capital_phi_x(deg);
    }
    if (name == "f" || name == "H" || name == "T") {
        IcosaModularData md(order);
        PolyQ f = icosa_f();
        if (name == "f") return md.at_weighted_point(f);
        PolyQ h = icosa_hessian(f);
        if (name == "H") return md.at_weighted_point(h);
        return md.at_weighted_point(icosa_jacobian_cov(f, h));
    }
    throw CLI::ValidationError("qexp",
                               "unknown series name (expected eta, a1..a6, E4, E6, Delta, "
                               "Phi12..Phi44, f, H, T)");
}

int cmd_qexp(const std::string& name, int order) {
    SeriesQ s = qexp_series(name, order);
    for (const auto& [k, c] : s.terms())
        std::cout << k << "/" << s.denom() << "\t" << rat_str(c) << "\n";
    return 0;
}

int cmd_export(const std::string& family) {
    std::cout << export_catalog_text(family);
    return 0;
}

std::filesystem::path default_cache_path(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("PSL213_CACHE_DIR"))
        return std::filesystem::path(env) / "group13.cache";
    return "group13.cache";
}

int cmd_cache(const std::string& path_flag, bool rebuild) {
    std::filesystem::path path = default_cache_path(path_flag);
    if (!rebuild) {
        if (auto cached = load_group_cache(path)) {
            std::cout << "cache " << path.string() << " valid: " << cached->order
                      << " matrices, projective order " << cached->projective_order << "\n";
            return 0;
        }
        std::cout << "cache missing or stale; rebuilding\n";
    }
    MatrixGroup g = closure(std::vector<CycloMatrix>{gen_S(), gen_T()});
    save_group_cache(path, g);
    std::cout << "wrote " << path.string() << ": " << g.order << " matrices, projective order "
              << g.projective_order << " (generator hash " << generator_content_hash() << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the six-dimensional invariant theory over Q(zeta_13), its "
                 "modular parametrizations, and the icosahedral counterpart"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string prime_arg = "auto";
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", cfg.suite, "all|group|forms|invariance|modular|singularity|icosahedral|prop32")
        ->check(CLI::Validator(
            [](std::string& s) { return known_suite(s) ? std::string() : "unknown suite " + s; },
            "SUITE"));
    verify->add_option("--order", cfg.order, "q-order of accuracy for series checks")
        ->check(CLI::Range(2, 64));
    verify->add_option("--prime", prime_arg, "prime for probabilistic checks (or 'auto')");
    verify->add_option("--seed", cfg.seed, "seed for random evaluation points");
    verify->add_option("--trials", cfg.trials, "random points per probabilistic identity")
        ->check(CLI::Range(1, 64));
    verify->add_option("--precision", cfg.precision, "mantissa bits for numeric checks")
        ->check(CLI::Range(53, 4096));
    verify->add_option("--bound", cfg.closure_bound, "element bound for the matrix closure");
    std::string cache_flag;
    verify->add_option("--cache", cache_flag, "write the group closure to this cache file");
    verify->add_flag("--json", cfg.json, "structured report output");

    std::string qexp_name;
    int qexp_order = 12;
    auto* qexp = app.add_subcommand("qexp", "print the q-expansion of a named series");
    qexp->add_option("name", qexp_name, "eta, a1..a6, E4, E6, Delta, Phi12..Phi44, f, H, T")
        ->required();
    qexp->add_option("--order", qexp_order, "q-order of accuracy")->check(CLI::Range(2, 64));

    std::string family;
    auto* exp = app.add_subcommand("export-catalog", "print a form catalog in the text format");
    exp->add_option("family", family, "A, D, G, phi, w, delta, Phi, icosahedral")->required();

    std::string cache_path;
    bool rebuild = false;
    auto* cache = app.add_subcommand("cache", "manage the on-disk group closure");
    cache->add_option("--path", cache_path, "cache file (default: $PSL213_CACHE_DIR/group13.cache)");
    cache->add_flag("--rebuild", rebuild, "recompute even if a valid cache exists");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (verify->parsed()) {
            if (prime_arg != "auto") {
                std::uint64_t p = std::stoull(prime_arg);
                if (!is_prime_u64(p) || p % 1560 != 1) {
                    std::cerr << "--prime must be a prime congruent to 1 mod 1560\n";
                    return 2;
                }
                cfg.prime = p;
            }
            if (!cache_flag.empty()) cfg.cache_path = cache_flag;
            return cmd_verify(cfg);
        }
        if (qexp->parsed()) return cmd_qexp(qexp_name, qexp_order);
        if (exp->parsed()) return cmd_export(family);
        if (cache->parsed()) return cmd_cache(cache_path, rebuild);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
