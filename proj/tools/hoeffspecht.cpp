// Command-line front end: dimension tables, character tables, Hoeffding
// decompositions, Specht bases, verification suites and timing.

#include "hoeffspecht/characters.hpp"
#include "hoeffspecht/hoeffding.hpp"
#include "hoeffspecht/specht.hpp"
#include "hoeffspecht/text_format.hpp"
#include "hoeffspecht/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    int n = 0;
    int m = 0;
    int l = 0;
    int max_l = -1;
    int ceiling = hs::kDefaultOracleCeiling;
    std::uint64_t seed = 0;
    int trials = 10;
    std::string suite = "all";
    bool indicators = false;
    std::string input;
    std::string out;
    std::string report;
};

int run_dims(Options const& opt) {
    std::cout << "l,dimension\n";
    for (int l = 0; 2 * l <= opt.n; ++l) std::cout << l << ',' << hs::dimension(opt.n, l) << '\n';
    return kExitOk;
}

int run_chartable(Options const& opt) {
    int const max_l = opt.max_l < 0 ? opt.n / 2 : opt.max_l;
    auto const table = hs::character_table(opt.n, max_l);
    if (opt.out.empty()) {
        hs::write_character_table_csv(std::cout, table);
    } else {
        std::ofstream file(opt.out);
        if (!file) throw std::runtime_error("cannot write " + opt.out);
        hs::write_character_table_csv(file, table);
    }
    return kExitOk;
}

int run_decompose(Options const& opt) {
    auto const h = hs::load_module_vector(opt.input);
    if (h.n() != opt.n || h.l() != opt.m) {
        std::cerr << "error: " << opt.input << " holds a vector of shape n=" << h.n() << ", l=" << h.l()
                  << " but --n " << opt.n << " --m " << opt.m << " was requested\n";
        return kExitUsage;
    }
    auto const d = hs::decompose(h);
    std::ofstream file(opt.out);
    if (!file) throw std::runtime_error("cannot write " + opt.out);
    hs::write_decomposition(file, d);
    std::cout << "mean " << hs::to_string(d.mean) << ", " << d.m << " kernels written to " << opt.out << '\n';
    return kExitOk;
}

int run_specht(Options const& opt) {
    std::filesystem::create_directories(opt.out);
    auto const tableaux = hs::standard_tableaux(opt.n, opt.l);
    for (auto const& t : tableaux) {
        auto const path = std::filesystem::path(opt.out) / (hs::tabloid_of(t).bottom_block.to_string() + ".mv");
        hs::save_module_vector(path, hs::polytabloid(t));
    }
    std::cout << tableaux.size() << " standard polytabloids of shape (" << opt.n - opt.l << "," << opt.l
              << ") written to " << opt.out << '\n';
    return kExitOk;
}

int run_verify(Options const& opt) {
    hs::RunConfig config{opt.n, opt.m, opt.seed, opt.trials, opt.ceiling, opt.indicators};
    config.validate();

    std::vector<hs::VerificationReport> reports;
    bool const all = opt.suite == "all";
    bool const brute_force_ok = opt.n <= opt.ceiling;
    if (all || opt.suite == "decomp") reports.push_back(hs::verify_decomposition(config));
    if (all || opt.suite == "equiv") {
        if (brute_force_ok || !all) {
            reports.push_back(hs::verify_equivalence(config));
        } else {
            std::cout << "skipping equivalence: n=" << opt.n << " is above the ceiling " << opt.ceiling << '\n';
        }
    }
    if (all || opt.suite == "shift") {
        if (brute_force_ok || !all) {
            reports.push_back(hs::verify_shift_orthogonality(config));
        } else {
            std::cout << "skipping shift: n=" << opt.n << " is above the ceiling " << opt.ceiling << '\n';
        }
    }
    if (all || opt.suite == "specht") reports.push_back(hs::verify_specht(config));

    bool passed = true;
    for (auto const& r : reports) {
        r.print(std::cout);
        passed = passed && r.passed();
    }
    if (!opt.report.empty()) {
        std::ofstream file(opt.report);
        if (!file) throw std::runtime_error("cannot write " + opt.report);
        file << '[';
        for (std::size_t i = 0; i < reports.size(); ++i) file << (i ? ",\n" : "\n") << reports[i].to_json();
        file << "\n]\n";
    }
    return passed ? kExitOk : kExitFailed;
}

int run_bench(Options const& opt) {
    if (opt.m < 1 || 2 * opt.m > opt.n) throw std::domain_error("bench needs 1 <= m <= n/2");
    using clock = std::chrono::steady_clock;
    auto const h = hs::random_module_vector(opt.n, opt.m, opt.seed);

    auto const k0 = clock::now();
    auto const d = hs::decompose(h);
    double const kernel_ms = std::chrono::duration<double, std::milli>(clock::now() - k0).count();
    std::cout << std::fixed << std::setprecision(3);
    std::cout << "kernel route: " << kernel_ms << " ms (n=" << opt.n << ", m=" << opt.m << ", "
              << h.size() << " subsets)\n";

    if (opt.n > opt.ceiling) {
        std::cout << "oracle route: skipped (n=" << opt.n << " above ceiling " << opt.ceiling << ")\n";
        return kExitOk;
    }
    auto const o0 = clock::now();
    bool agree = true;
    for (int l = 0; l <= opt.m; ++l) {
        agree = agree && hs::character_projection_oracle(h, l, opt.ceiling) == d.component(l);
    }
    double const oracle_ms = std::chrono::duration<double, std::milli>(clock::now() - o0).count();
    std::cout << "oracle route: " << oracle_ms << " ms\n";
    std::cout << "routes agree: " << (agree ? "yes" : "NO") << '\n';
    if (!agree) return kExitFailed;
    if (opt.n >= 7 && opt.m >= 2) {
        bool const faster = kernel_ms < oracle_ms;
        std::cout << "kernel faster than oracle: " << (faster ? "yes" : "NO") << '\n';
        if (!faster) return kExitFailed;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hoeffding decompositions and two-block Specht modules"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--ceiling", opt.ceiling, "largest n for brute-force sums over S_n")
        ->check(CLI::Range(1, 12));

    auto* dims = app.add_subcommand("dims", "dimensions C(n,l) - C(n,l-1) for l = 0..n/2");
    dims->add_option("--n", opt.n)->required()->check(CLI::Range(1, hs::kMaxN));

    auto* chartable = app.add_subcommand("chartable", "two-row character table as CSV");
    chartable->add_option("--n", opt.n)->required()->check(CLI::Range(1, 20));
    chartable->add_option("--max-l", opt.max_l, "defaults to n/2");
    chartable->add_option("--out", opt.out, "CSV path (stdout when omitted)");

    auto* decompose = app.add_subcommand("decompose", "Hoeffding decomposition of a module vector file");
    decompose->add_option("--n", opt.n)->required();
    decompose->add_option("--m", opt.m)->required();
    decompose->add_option("--input", opt.input)->required()->check(CLI::ExistingFile);
    decompose->add_option("--out", opt.out)->required();

    auto* specht = app.add_subcommand("specht", "standard polytabloid basis, one file per tableau");
    specht->add_option("--n", opt.n)->required()->check(CLI::Range(2, hs::kMaxN));
    specht->add_option("--l", opt.l)->required();
    specht->add_option("--out", opt.out)->required();

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--n", opt.n)->required();
    verify->add_option("--m", opt.m)->required();
    verify->add_option("--seed", opt.seed);
    verify->add_option("--trials", opt.trials)->check(CLI::NonNegativeNumber);
    verify->add_option("--suite", opt.suite)->check(CLI::IsMember({"all", "decomp", "equiv", "shift", "specht"}));
    verify->add_flag("--indicators", opt.indicators, "also decompose every indicator vector");
    verify->add_option("--report", opt.report, "JSON report path");

    auto* bench = app.add_subcommand("bench", "time the kernel route against the S_n oracle");
    bench->add_option("--n", opt.n)->required();
    bench->add_option("--m", opt.m)->required();
    bench->add_option("--seed", opt.seed);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*dims) return run_dims(opt);
        if (*chartable) return run_chartable(opt);
        if (*decompose) return run_decompose(opt);
        if (*specht) return run_specht(opt);
        if (*verify) return run_verify(opt);
        if (*bench) return run_bench(opt);
    } catch (hs::ParseError const& e) {
        std::cerr << "parse error: " << opt.input << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (hs::ResourceError const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (std::domain_error const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
