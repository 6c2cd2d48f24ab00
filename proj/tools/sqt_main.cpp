#include "sqt/check.hpp"
#include "sqt/incidence.hpp"
#include "sqt/kenyon.hpp"
#include "sqt/render.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

int default_jobs() {
    if (const char* env = std::getenv("SQT_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

int run_analyze(const std::string& path, const std::string& reportPath, const std::string& svgPath,
                int trials, unsigned long seed, bool crossCheck) {
    sqt::Tiling t = sqt::parse_tiling(read_file(path));
    sqt::Analysis a;
    try {
        a = sqt::analyze_tiling(t, trials, seed);
    } catch (const sqt::InternalError& e) {
        std::cerr << "theorem check failed: " << e.what() << "; counterexample tiling:\n"
                  << sqt::serialize_tiling(t);
        return kExitCheckFailed;
    }

    bool referenceAgrees = true;
    if (crossCheck) {
        auto ref = sqt::cofactor_kernel_reference(a.matrix, a.kernel.row_basis);
        referenceAgrees = ref == a.kernel.u;
    }

    std::string report = sqt::analysis_report_json(a);
    if (!reportPath.empty())
        write_file(reportPath, report);
    else
        std::cout << report;
    if (!svgPath.empty()) {
        sqt::RenderOptions opts;
        opts.show_grid = true;
        write_file(svgPath, sqt::to_svg(t, &a.grid, opts));
    }

    if (!a.all_pass || !referenceAgrees) {
        std::cerr << "verification failed; counterexample tiling:\n" << sqt::serialize_tiling(t);
        if (!referenceAgrees) std::cerr << "cofactor reference path disagrees with elimination\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int run_enumerate(int n, const std::string& outPath, int jobs, bool stats, bool force) {
    constexpr int kDefaultCap = 7;
    if (n > kDefaultCap && !force) {
        std::cerr << "order " << n << " exceeds the default cap " << kDefaultCap
                  << " (the search space grows superexponentially); pass --force to run anyway\n";
        return kExitUsage;
    }
    auto records = sqt::enumerate_tilings(n, jobs);
    std::string catalog = sqt::write_catalog(records);
    if (!outPath.empty())
        write_file(outPath, catalog);
    else
        std::cout << catalog;
    if (stats) {
        sqt::BigInt maxD = 0;
        for (const auto& r : records)
            if (r.D > maxD) maxD = r.D;
        std::cerr << "order " << n << ": count " << records.size() << ", max D " << maxD.get_str()
                  << ", bound " << sqt::order_count_bound(n).get_str() << ", 2^n "
                  << sqt::pow2(static_cast<unsigned long>(n)).get_str() << "\n";
    }
    return kExitOk;
}

int run_kenyon(long p, long q, int cap, const std::string& witnessPath) {
    sqt::KenyonResult r = sqt::min_squares_integer(p, q, cap);
    sqt::Rational ratio{sqt::BigInt(q), sqt::BigInt(p)};
    int logCeil = 0;
    while (sqt::pow2(static_cast<unsigned long>(logCeil)) < sqt::BigInt(q)) ++logCeil;
    std::cout << "p " << p << "\n"
              << "q " << q << "\n"
              << "area bound: n >= " << ratio.str() << "\n"
              << "log bound: n >= " << logCeil << " (2^" << logCeil << " >= " << q << ")\n";
    if (r.found) {
        std::cout << "min integer-sided squares: " << r.min_squares << "\n";
        if (!witnessPath.empty()) write_file(witnessPath, sqt::serialize_tiling(r.witness));
        if (!sqt::kenyon_bound_check(p, q, r.min_squares)) {
            std::cerr << "witness violates the lower bound; tiling:\n"
                      << sqt::serialize_tiling(r.witness);
            return kExitCheckFailed;
        }
    } else {
        std::cout << "min integer-sided squares: exceeds cap " << cap << "\n";
    }
    return kExitOk;
}

int run_verify(int maxOrder, int jobs, int trials) {
    using clock = std::chrono::steady_clock;
    bool ok = true;
    int total = 0;
    for (int n = 1; n <= maxOrder; ++n) {
        auto t0 = clock::now();
        auto records = sqt::enumerate_tilings(n, jobs);
        sqt::BigInt maxD = 0;
        for (const auto& rec : records) {
            sqt::Analysis a = sqt::analyze_tiling(rec.tiling, n <= 5 ? trials : 0);
            if (!a.all_pass) {
                std::cerr << "analysis failed for:\n" << sqt::serialize_tiling(rec.tiling);
                ok = false;
            }
            if (rec.D > maxD) maxD = rec.D;
        }
        if (sqt::BigInt(static_cast<long>(records.size())) > sqt::order_count_bound(n)) {
            std::cerr << "count exceeds the order bound at n=" << n << "\n";
            ok = false;
        }
        auto kenyon = sqt::verify_kenyon_via_enumeration(records);
        if (!kenyon.holds) {
            std::cerr << "kenyon batch failed: " << kenyon.failure << "\n";
            ok = false;
        }
        total += static_cast<int>(records.size());
        double secs = std::chrono::duration<double>(clock::now() - t0).count();
        std::cout << "order " << n << ": " << records.size() << " tilings, max D " << maxD.get_str()
                  << ", 2^n " << sqt::pow2(static_cast<unsigned long>(n)).get_str() << ", bound "
                  << sqt::order_count_bound(n).get_str() << " (" << secs << "s)\n";
    }
    std::cout << (ok ? "VERIFY PASS" : "VERIFY FAIL") << " (" << total << " tilings)\n";
    return ok ? kExitOk : kExitCheckFailed;
}

int run_render(const std::string& path, const std::string& svgPath, bool grid, bool labels, int ppu) {
    sqt::Tiling t = sqt::parse_tiling(read_file(path));
    sqt::RenderOptions opts;
    opts.pixels_per_unit = ppu;
    opts.show_grid = grid;
    opts.show_labels = labels;
    sqt::ExtendedGrid g = sqt::build_extended_grid(t);
    write_file(svgPath, sqt::to_svg(t, &g, opts));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis, enumeration and rendering of square tilings of rectangles"};
    app.require_subcommand(1);

    std::string tilingPath, reportPath, svgPath, outPath, witnessPath;
    int order = 1, jobs = default_jobs(), trials = 1000, cap = 16, ppu = 100, maxOrder = 6;
    long p = 1, q = 2;
    unsigned long seed = 42;
    bool stats = false, grid = false, labels = false, crossCheck = false, force = false;

    auto* analyze = app.add_subcommand("analyze", "full verification pipeline on a tiling file");
    analyze->add_option("tiling", tilingPath, "tiling file")->required();
    analyze->add_option("--report", reportPath, "write the JSON report here instead of stdout");
    analyze->add_option("--svg", svgPath, "also render the tiling with its grid");
    analyze->add_option("--trials", trials, "random minors to sample");
    analyze->add_option("--seed", seed, "seed for the minor sampler");
    analyze->add_flag("--cross-check", crossCheck, "also run the N-determinant cofactor path");

    auto* enumerate = app.add_subcommand("enumerate", "all distinct tilings of one order");
    enumerate->add_option("n", order, "tiling order")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--out", outPath, "catalog file (default: stdout)");
    enumerate->add_option("--jobs", jobs, "worker threads (default: $SQT_JOBS or hardware)");
    enumerate->add_flag("--stats", stats, "print count, max D and the counting bound to stderr");
    enumerate->add_flag("--force", force, "lift the default order cap of 7");

    auto* kenyon = app.add_subcommand("kenyon", "lower bounds and integer minimality search");
    kenyon->add_option("p", p, "smaller dimension")->required();
    kenyon->add_option("q", q, "larger dimension")->required();
    kenyon->add_option("--cap", cap, "search cutoff");
    kenyon->add_option("--witness", witnessPath, "write a minimal witness tiling here");

    auto* verify = app.add_subcommand("verify", "enumeration corpus + all invariants + kenyon batch");
    verify->add_option("--max-order", maxOrder, "verify every order up to this");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--trials", trials, "random minors per tiling of order <= 5");

    auto* render = app.add_subcommand("render", "render a tiling file to SVG");
    render->add_option("tiling", tilingPath, "tiling file")->required();
    render->add_option("--svg", svgPath, "output file")->required();
    render->add_flag("--grid", grid, "draw dashed extended-grid lines");
    render->add_flag("--labels", labels, "draw x1..xn labels");
    render->add_option("--ppu", ppu, "pixels per unit")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(analyze))
            return run_analyze(tilingPath, reportPath, svgPath, trials, seed, crossCheck);
        if (app.got_subcommand(enumerate)) return run_enumerate(order, outPath, jobs, stats, force);
        if (app.got_subcommand(kenyon)) return run_kenyon(p, q, cap, witnessPath);
        if (app.got_subcommand(verify)) return run_verify(maxOrder, jobs, trials);
        if (app.got_subcommand(render)) return run_render(tilingPath, svgPath, grid, labels, ppu);
    } catch (const sqt::InternalError& e) {
        std::cerr << "theorem check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const sqt::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sqt::ValidationError& e) {
        std::cerr << "invalid tiling: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
