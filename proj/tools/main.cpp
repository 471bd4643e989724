// tenpara CLI: ring-field generation, paraproduct decomposition runs,
// regularity reports, invariant suites, and figure reproduction.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 I/O error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "tenpara/figure.hpp"
#include "tenpara/io.hpp"
#include "tenpara/paraproduct.hpp"
#include "tenpara/regularity.hpp"
#include "tenpara/ring.hpp"
#include "tenpara/verify.hpp"

namespace fs = std::filesystem;
using namespace tenpara;

namespace {

struct FieldArgs {
    std::string in_path;
    double alpha = 0.4;
    double radius = 0.3;
    int grid_level = 9;
};

void add_field_options(CLI::App* cmd, FieldArgs* args) {
    cmd->add_option("--in", args->in_path, "Read the input field from a TPMX file");
    cmd->add_option("--alpha", args->alpha, "Ring-field Holder exponent")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--radius", args->radius, "Ring radius")->capture_default_str();
    cmd->add_option("--grid-level", args->grid_level, "Dyadic grid level L (2^L samples per axis)")
        ->capture_default_str()
        ->check(CLI::Range(1, 14));
}

UnitGridField load_field(const FieldArgs& args) {
    if (!args.in_path.empty()) return read_tpmx(args.in_path);
    RingFieldSpec spec;
    spec.alpha = args.alpha;
    spec.radius = args.radius;
    spec.grid_level = args.grid_level;
    return generate_ring(spec);
}

struct NonlinearityArgs {
    std::string name = "exp02";
    std::string table_path;
};

void add_nonlinearity_options(CLI::App* cmd, NonlinearityArgs* args) {
    cmd->add_option("--nonlinearity", args->name, "identity|square|exp02|custom-table")
        ->capture_default_str();
    cmd->add_option("--table", args->table_path, "CSV of u,A(u) samples for custom-table");
}

Nonlinearity load_nonlinearity(const NonlinearityArgs& args) {
    if (args.name != "custom-table") return Nonlinearity::by_name(args.name);
    if (args.table_path.empty()) {
        throw std::domain_error("custom-table requires --table");
    }
    std::ifstream in(args.table_path);
    if (!in) throw IoError("cannot open table " + args.table_path);
    std::vector<std::pair<double, double>> samples;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        double u = 0.0, a = 0.0;
        if (std::sscanf(line.c_str(), "%lf,%lf", &u, &a) == 2) samples.emplace_back(u, a);
    }
    return Nonlinearity::from_table(std::move(samples));
}

ScaleRange parse_scales(const std::string& text) {
    int n = 0, np = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%d,%d%c", &n, &np, &extra) != 2 || n < 0 || np < 0) {
        throw CLI::ValidationError("--scales", "expected N,N' (e.g. 6,6)");
    }
    return ScaleRange{n, np};
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + dir);
}

void write_field(const UnitGridField& field, const std::string& path, const std::string& format) {
    if (format == "tpmx") write_tpmx(field, path);
    else if (format == "pgm") write_pgm(field, path);
    else if (format == "csv") write_matrix_csv(field, path);
    else throw std::domain_error("unknown format: " + format);
}

int run_generate(const FieldArgs& field_args, const std::string& out, const std::string& format) {
    write_field(load_field(field_args), out, format);
    std::cout << "wrote " << out << '\n';
    return 0;
}

int run_decompose(const FieldArgs& field_args, const NonlinearityArgs& nl_args,
                  const std::string& scales_text, const std::string& out_dir) {
    const UnitGridField field = load_field(field_args);
    const Nonlinearity map = load_nonlinearity(nl_args);
    const ScaleRange scales = parse_scales(scales_text);
    const Decomposition dec = decompose(field, map, scales, false);
    ensure_dir(out_dir);

    const std::pair<const char*, const UnitGridField*> components[] = {
        {"input.tpmx", &dec.input},
        {"nonlinear.tpmx", &dec.nonlinear},
        {"approx.tpmx", &dec.approx},
        {"residual.tpmx", &dec.residual},
        {"boundary_coarse_x.tpmx", &dec.boundary_coarse_x},
        {"boundary_coarse_y.tpmx", &dec.boundary_coarse_y},
        {"boundary_mean.tpmx", &dec.boundary_mean},
    };
    std::ofstream manifest(fs::path(out_dir) / "manifest.csv", std::ios::binary);
    if (!manifest) throw IoError("cannot write manifest.csv");
    manifest << "key,value\n";
    manifest << "nonlinearity," << dec.nonlinearity_name << '\n';
    manifest << "scales," << scales.n_x << 'x' << scales.n_y << '\n';
    manifest << "grid_level_x," << field.level_x() << '\n';
    manifest << "grid_level_y," << field.level_y() << '\n';
    manifest << "split_error," << format_double(max_abs_diff(add(dec.approx, dec.residual),
                                                             dec.nonlinear))
             << '\n';
    for (const auto& [name, component] : components) {
        write_tpmx(*component, (fs::path(out_dir) / name).string());
        manifest << "component," << name << '\n';
    }
    std::cout << "wrote decomposition to " << out_dir << '\n';
    return 0;
}

int run_residual_report(const FieldArgs& field_args, const NonlinearityArgs& nl_args,
                        const std::string& scales_text, double alpha, int analysis_level,
                        const std::string& out_dir) {
    const UnitGridField field = load_field(field_args);
    const Nonlinearity map = load_nonlinearity(nl_args);
    const ScaleRange scales = parse_scales(scales_text);
    const Decomposition dec = decompose(field, map, scales, false);
    const ResidualReport report = residual_report(dec, alpha, analysis_level, analysis_level);
    ensure_dir(out_dir);
    {
        std::ofstream out(fs::path(out_dir) / "residual_report.csv", std::ios::binary);
        if (!out) throw IoError("cannot write residual_report.csv");
        write_residual_report_csv(report, out);
    }
    {
        std::ofstream out(fs::path(out_dir) / "residual_decay.csv", std::ios::binary);
        if (!out) throw IoError("cannot write residual_decay.csv");
        write_decay_csv(report.residual_decay, out);
    }
    std::cout << "residual linf " << format_double(report.residual_linf) << ", norm ratio "
              << format_double(report.norm_ratio) << ", decay slope "
              << format_double(report.residual_decay.fit.slope) << '\n';
    return 0;
}

int run_regularity(const FieldArgs& field_args, double offset, const std::string& out_dir) {
    const UnitGridField field = load_field(field_args);
    const TensorCoeffPyramid pyramid =
        tensor_analyze(field, field.level_x() - 1, field.level_y() - 1);
    const DecayReport report = decay_report(pyramid);
    ensure_dir(out_dir);
    {
        std::ofstream out(fs::path(out_dir) / "decay.csv", std::ios::binary);
        if (!out) throw IoError("cannot write decay.csv");
        write_decay_csv(report, out);
    }
    std::ofstream est_out(fs::path(out_dir) / "estimate.csv", std::ios::binary);
    if (!est_out) throw IoError("cannot write estimate.csv");
    est_out << "key,value\n";
    if (report.all_zero || !report.fit.valid) {
        est_out << "estimate_defined,0\n";
        std::cout << "decay fit unavailable (all-zero or single level pair)\n";
    } else {
        const HolderEstimate est = estimate_alpha(report, offset);
        est_out << "estimate_defined,1\n";
        est_out << "alpha_hat," << format_double(est.alpha_hat) << '\n';
        est_out << "norm_value," << format_double(est.norm_value) << '\n';
        est_out << "offset," << format_double(est.exponent_offset) << '\n';
        if (est.alpha_hat > 0.5) est_out << "alpha_above_half,1\n";
        std::cout << "alpha_hat " << format_double(est.alpha_hat) << " (slope "
                  << format_double(report.fit.slope) << ", r^2 "
                  << format_double(report.fit.r_squared) << ")\n";
    }
    return 0;
}

int run_verify_cmd(const std::string& suite, int size, std::uint64_t seed, int quad_order,
                   const std::string& csv_out) {
    if (!is_known_suite(suite)) {
        std::cerr << "unknown suite: " << suite
                  << " (expected parseval|telescope|ftc|decay|residual|all)\n";
        return 2;
    }
    const VerifyReport report = run_verify(suite, size, seed, quad_order);
    print_verify(report, std::cout);
    if (!csv_out.empty()) {
        std::ofstream out(csv_out, std::ios::binary);
        if (!out) throw IoError("cannot write " + csv_out);
        write_verify_csv(report, out);
    }
    return report.all_pass() ? 0 : 1;
}

int run_figure_cmd(const std::string& out_dir, int grid_level) {
    const std::vector<std::string> files = run_figure(out_dir, grid_level);
    std::cout << "wrote " << files.size() << " files to " << out_dir << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiscale tensor paraproduct decomposition"};
    app.require_subcommand(1);

    FieldArgs field_args;
    NonlinearityArgs nl_args;
    std::string out_path, format = "tpmx", scales_text = "6,6", suite, csv_out;
    double offset = 0.5;
    int analysis_level = -1, size = 32, quad_order = 8, grid_level = 9;
    std::uint64_t seed = 7;

    CLI::App* generate = app.add_subcommand("generate", "Sample the ring singularity field");
    add_field_options(generate, &field_args);
    generate->add_option("--out", out_path, "Output path")->required();
    generate->add_option("--format", format, "pgm|csv|tpmx")
        ->capture_default_str()
        ->check(CLI::IsMember({"pgm", "csv", "tpmx"}));

    CLI::App* decompose_cmd = app.add_subcommand("decompose", "Run the paraproduct decomposition");
    add_field_options(decompose_cmd, &field_args);
    add_nonlinearity_options(decompose_cmd, &nl_args);
    decompose_cmd->add_option("--scales", scales_text, "Maximum scales N,N'")
        ->capture_default_str();
    decompose_cmd->add_option("--out", out_path, "Output directory")->required();

    CLI::App* residual_cmd =
        app.add_subcommand("residual-report", "Decay and norm report for the residual");
    add_field_options(residual_cmd, &field_args);
    add_nonlinearity_options(residual_cmd, &nl_args);
    residual_cmd->add_option("--scales", scales_text, "Maximum scales N,N'")
        ->capture_default_str();
    residual_cmd->add_option("--analysis-level", analysis_level,
                             "Pyramid depth for the report (-1: use the scales)")
        ->capture_default_str();
    residual_cmd->add_option("--out", out_path, "Output directory")->required();

    CLI::App* regularity_cmd =
        app.add_subcommand("regularity", "Coefficient-decay report and alpha estimate");
    add_field_options(regularity_cmd, &field_args);
    regularity_cmd->add_option("--offset", offset, "Exponent offset in the norm denominator")
        ->capture_default_str();
    regularity_cmd->add_option("--out", out_path, "Output directory")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
    verify_cmd->add_option("--suite", suite, "parseval|telescope|ftc|decay|residual|all")
        ->required();
    verify_cmd->add_option("--size", size, "Samples per axis (power of two)")
        ->capture_default_str();
    verify_cmd->add_option("--seed", seed, "Deterministic seed")->capture_default_str();
    verify_cmd->add_option("--quad-order", quad_order, "Gauss-Legendre order")
        ->capture_default_str();
    verify_cmd->add_option("--out", csv_out, "Optional CSV report path");

    CLI::App* figure_cmd = app.add_subcommand("figure", "Reproduce the ring-singularity grid");
    figure_cmd->add_option("--out", out_path, "Output directory")->required();
    figure_cmd->add_option("--grid-level", grid_level, "Dyadic grid level")
        ->capture_default_str()
        ->check(CLI::Range(2, 14));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*generate) return run_generate(field_args, out_path, format);
        if (*decompose_cmd) return run_decompose(field_args, nl_args, scales_text, out_path);
        if (*residual_cmd) {
            // --alpha doubles as the report exponent when the field comes from --in.
            return run_residual_report(field_args, nl_args, scales_text, field_args.alpha,
                                       analysis_level, out_path);
        }
        if (*regularity_cmd) return run_regularity(field_args, offset, out_path);
        if (*verify_cmd) return run_verify_cmd(suite, size, seed, quad_order, csv_out);
        if (*figure_cmd) return run_figure_cmd(out_path, grid_level);
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
