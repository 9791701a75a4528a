#include "loewner/cli.hpp"

#include <CLI11.hpp>

int main(int argc, char **argv) {
    CLI::App app{"Matrix-function calculus and norm-inequality verification"};
    app.require_subcommand(1);

    loewner::BoundOptions bound;
    CLI::App *cmd_bound = app.add_subcommand("bound", "Bounds for |||f(B) - f(A)|||");
    cmd_bound->add_option("--f", bound.function, "Function id (e.g. log, pow:0.5)")->required();
    cmd_bound->add_option("--A", bound.a_path, "Matrix file for A")->required();
    cmd_bound->add_option("--B", bound.b_path, "Matrix file for B")->required();
    cmd_bound->add_option("--norms", bound.norms, "Comma-separated norm kinds (default op)");
    cmd_bound->add_option("--mode", bound.mode,
                          "all | convex | quasiconvex | sconvex | refinement");
    cmd_bound->add_option("--out", bound.out, "Report path (default stdout)");

    loewner::QuadratureOptions quad;
    CLI::App *cmd_quad = app.add_subcommand("quadrature", "Segment integral and Simpson estimates");
    cmd_quad->add_option("--f", quad.function, "Function id")->required();
    cmd_quad->add_option("--A", quad.a_path, "Matrix file for A")->required();
    cmd_quad->add_option("--B", quad.b_path, "Matrix file for B")->required();
    cmd_quad->add_option("--tol", quad.tol, "Reference integral tolerance (default 1e-9)");
    cmd_quad->add_option("--norms", quad.norms, "Comma-separated norm kinds (default op)");
    cmd_quad->add_option("--out", quad.out, "Report path (default stdout)");

    loewner::VerifyOptions verify;
    std::string dims, functions, norms, nu;
    int samples = 0, direction_samples = 0;
    uint64_t seed = 0;
    double spectrum_lo = 0.0, spectrum_hi = 0.0;
    CLI::App *cmd_verify = app.add_subcommand("verify", "Run the inequality sweep");
    cmd_verify->add_option("--config", verify.config_path, "JSON sweep config (flags override)");
    auto *opt_dims = cmd_verify->add_option("--dims", dims, "Comma-separated dimensions");
    auto *opt_samples = cmd_verify->add_option("--samples", samples, "Random samples per checker");
    auto *opt_seed = cmd_verify->add_option("--seed", seed, "Base seed");
    auto *opt_functions = cmd_verify->add_option("--functions", functions, "Function ids");
    auto *opt_norms = cmd_verify->add_option("--norms", norms, "Norm kinds");
    auto *opt_nu = cmd_verify->add_option("--nu", nu, "Weights in [0, 1]");
    auto *opt_lo = cmd_verify->add_option("--spectrum-lo", spectrum_lo, "Smallest eigenvalue");
    auto *opt_hi = cmd_verify->add_option("--spectrum-hi", spectrum_hi, "Largest eigenvalue");
    auto *opt_dir = cmd_verify->add_option("--direction-samples", direction_samples,
                                           "Direction draws per multilinear norm");
    cmd_verify->add_option("--out", verify.out, "Report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return loewner::kExitInputError;
    }

    if (cmd_bound->parsed())
        return loewner::run_bound(bound);
    if (cmd_quad->parsed())
        return loewner::run_quadrature(quad);

    if (opt_dims->count())
        verify.dims = dims;
    if (opt_samples->count())
        verify.samples = samples;
    if (opt_seed->count())
        verify.seed = seed;
    if (opt_functions->count())
        verify.functions = functions;
    if (opt_norms->count())
        verify.norms = norms;
    if (opt_nu->count())
        verify.nu = nu;
    if (opt_lo->count())
        verify.spectrum_lo = spectrum_lo;
    if (opt_hi->count())
        verify.spectrum_hi = spectrum_hi;
    if (opt_dir->count())
        verify.direction_samples = direction_samples;
    return loewner::run_verify(verify);
}
