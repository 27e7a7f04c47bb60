#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "dilog/cli.hpp"

namespace {

// 0 ok, 1 usage/mismatch, 2 unsupported branch, 3 inconclusive verification
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitInconclusive = 3;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dilogarithm branch zeros: certified Newton zeros, "
                 "argument-principle verification, polylog zero spirals"};
    app.require_subcommand(1);

    int A = 0, B = 0, bmax = 1, amax = 5, n = 100, m = 4, jmax = 32;
    double tol = 1e-12, s_re = 0.0, s_im = 0.0;
    std::string out_path;

    auto* zero = app.add_subcommand("zero", "certified zero of one branch");
    zero->add_option("A", A)->required();
    zero->add_option("B", B)->required();
    zero->add_option("--tol", tol, "certified error radius target");

    auto* table = app.add_subcommand("table", "JSON-lines certificates for |B| <= bmax");
    table->add_option("bmax", bmax)->required();
    table->add_option("--tol", tol);
    table->add_option("--out", out_path)->required();

    auto* verify = app.add_subcommand("verify", "argument-principle sweep");
    verify->add_option("amax", amax)->required();
    verify->add_option("bmax", bmax)->required();

    auto* curves = app.add_subcommand("curves", "implicit curve samples as CSV");
    curves->add_option("A", A)->required();
    curves->add_option("B", B)->required();
    curves->add_option("n", n)->required();
    curves->add_option("--out", out_path)->required();

    auto* polylog = app.add_subcommand("polylog", "polylog zero hunt as CSV");
    polylog->add_option("s_re", s_re)->required();
    polylog->add_option("s_im", s_im)->required();
    polylog->add_option("--jmax", jmax, "largest seed index");
    polylog->add_option("--out", out_path)->required();

    auto* eulerian = app.add_subcommand("eulerian", "Eulerian polynomial and zeros");
    eulerian->add_option("m", m)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*zero) {
            dilog::cli::OutputRecord rec = dilog::cli::cmd_zero(A, B, tol);
            std::cout << rec.to_json_line() << "\n";
        } else if (*table) {
            dilog::cli::cmd_table(bmax, tol, out_path);
        } else if (*verify) {
            std::vector<dilog::BranchIndex> mismatches;
            dilog::cli::OutputRecord rec = dilog::cli::cmd_verify(amax, bmax, &mismatches);
            std::cout << rec.to_json_line() << "\n";
            if (!mismatches.empty()) {
                for (auto b : mismatches)
                    std::cerr << "mismatch at branch (" << b.A << "," << b.B << ")\n";
                return kExitUsage;
            }
        } else if (*curves) {
            dilog::cli::cmd_curves(A, B, n, out_path);
        } else if (*polylog) {
            dilog::cli::cmd_polylog(s_re, s_im, jmax, out_path);
        } else if (*eulerian) {
            dilog::cli::OutputRecord rec = dilog::cli::cmd_eulerian(m);
            std::cout << rec.to_json_line() << "\n";
        }
    } catch (const dilog::unsupported_branch& e) {
        std::cerr << e.what() << "\n";
        return kExitUnsupported;
    } catch (const dilog::inconclusive_error& e) {
        std::cerr << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
