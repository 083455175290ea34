#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hborbit/cli_commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Unstable periodic orbits of the Lorenz system via harmonic balance"};
    app.require_subcommand(1);

    hborbit::FindOptions find_opt;
    std::string precision = "double";
    CLI::App* find = app.add_subcommand(
        "find", "Solve the balance equations for a cycle and write its coefficients");
    find->set_help_flag("--help", "Print this help message and exit");  // frees --h
    find->add_option("--h", find_opt.target_h, "Target harmonic count (continuation runs 5,10,...,h)")
        ->check(CLI::PositiveNumber);
    find->add_option("--schedule", find_opt.schedule,
                     "Explicit continuation stages, e.g. 5,20,35 (overrides the default ladder)")
        ->delimiter(',');
    find->add_option("--tol", find_opt.tol, "Newton residual max-norm tolerance (default 1e-8)");
    find->add_option("--max-iter", find_opt.max_iter, "Newton iteration cap per stage (default 50)");
    find->add_option("--sigma", find_opt.sigma, "Lorenz sigma (default 10)");
    find->add_option("--r", find_opt.r, "Lorenz r (default 28)");
    find->add_option("--b", find_opt.b, "Lorenz b (default 8/3)");
    find->add_option("--out", find_opt.out_path, "Coefficient file to write")->required();
    find->add_option("--precision", precision, "Arithmetic: double or extended (100-bit)")
        ->check(CLI::IsMember({"double", "extended"}));

    hborbit::VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand(
        "verify", "Integrate a stored cycle over one period, forward and backward, and check closure");
    verify->add_option("--in", verify_opt.in_path, "Coefficient file to verify")->required();
    verify->add_option("--term-tol", verify_opt.term_tol,
                       "Taylor series tail tolerance (default 1e-16, extended 1e-25)");
    verify->add_option("--max-order", verify_opt.max_order,
                       "Taylor series order (default 20, extended 32)");
    verify->add_option("--closure-tol", verify_opt.closure_tol,
                       "Max closure error accepted as a cycle (default 1e-4)");

    hborbit::SampleOptions sample_opt;
    CLI::App* sample =
        app.add_subcommand("sample", "Evaluate a stored cycle on a uniform grid over one period");
    sample->add_option("--in", sample_opt.in_path, "Coefficient file to sample")->required();
    sample->add_option("--n", sample_opt.points, "Number of grid points (default 1000)");
    sample->add_option("--out", sample_opt.out_path, "Trajectory file to write")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return hborbit::kExitUsage;
    }

    try {
        if (find->parsed()) {
            find_opt.extended = (precision == "extended");
            if (!find_opt.schedule.empty()) {
                if (find->count("--h") > 0 && find_opt.target_h != find_opt.schedule.back()) {
                    std::cerr << "error: --h disagrees with the last --schedule stage\n";
                    return hborbit::kExitUsage;
                }
                find_opt.target_h = find_opt.schedule.back();
            }
            return hborbit::cmd_find(find_opt, std::cout, std::cerr);
        }
        if (verify->parsed()) return hborbit::cmd_verify(verify_opt, std::cout, std::cerr);
        return hborbit::cmd_sample(sample_opt, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
