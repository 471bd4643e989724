#include "tenpara/figure.hpp"

#include <filesystem>
#include <fstream>

#include "tenpara/io.hpp"
#include "tenpara/paraproduct.hpp"
#include "tenpara/ring.hpp"

namespace tenpara {

namespace {

struct AlphaCase {
    double alpha;
    const char* label;
};

// Column order follows the published caption.
constexpr AlphaCase kAlphas[] = {{0.4, "4e-1"}, {0.04, "4e-2"}, {0.004, "4e-3"}};
constexpr int kScaleSettings[] = {4, 6};

} // namespace

std::vector<std::string> run_figure(const std::string& output_dir, int grid_level) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(output_dir, ec);
    if (ec) throw IoError("cannot create output directory " + output_dir);

    const Nonlinearity map = Nonlinearity::exp_decay(0.2);
    std::vector<std::string> files;
    struct ManifestRow {
        std::string row_kind;
        std::string alpha_label;
        double alpha;
        int scale;  // -1 for rows without a scale setting
        std::string file;
    };
    std::vector<ManifestRow> manifest;

    auto emit_pgm = [&](const UnitGridField& field, const std::string& name,
                        const std::string& kind, const AlphaCase& a, int scale) {
        write_pgm(field, (fs::path(output_dir) / name).string());
        files.push_back(name);
        manifest.push_back(ManifestRow{kind, a.label, a.alpha, scale, name});
    };

    // Hold per-alpha fields so rows of the figure can be emitted in layout order.
    std::vector<UnitGridField> f_fields, af_fields;
    std::vector<std::vector<UnitGridField>> approx_fields(std::size(kScaleSettings));
    std::vector<std::vector<std::string>> residual_csvs(std::size(kScaleSettings));

    for (const AlphaCase& a : kAlphas) {
        RingFieldSpec spec;
        spec.alpha = a.alpha;
        spec.grid_level = grid_level;
        UnitGridField f = generate_ring(spec);
        af_fields.push_back(evaluate_nonlinearity(map, f, 0));
        for (std::size_t s = 0; s < std::size(kScaleSettings); ++s) {
            const int n = std::min(kScaleSettings[s], grid_level - 1);
            const Decomposition dec = decompose(f, map, ScaleRange{n, n}, false);
            const ResidualReport rr = residual_report(dec, a.alpha);
            const std::string csv_name = "residual_N" + std::to_string(kScaleSettings[s]) + "_" +
                                         a.label + ".csv";
            std::ofstream csv((fs::path(output_dir) / csv_name).string(), std::ios::binary);
            if (!csv) throw IoError("cannot open " + csv_name);
            write_residual_report_csv(rr, csv);
            csv << "decay_report\n";
            write_decay_csv(rr.residual_decay, csv);
            residual_csvs[s].push_back(csv_name);
            approx_fields[s].push_back(dec.approx);
        }
        f_fields.push_back(std::move(f));
    }

    for (std::size_t col = 0; col < std::size(kAlphas); ++col) {
        emit_pgm(f_fields[col], std::string("f_") + kAlphas[col].label + ".pgm", "f",
                 kAlphas[col], -1);
    }
    for (std::size_t col = 0; col < std::size(kAlphas); ++col) {
        emit_pgm(af_fields[col], std::string("Af_") + kAlphas[col].label + ".pgm", "A(f)",
                 kAlphas[col], -1);
    }
    for (std::size_t s = 0; s < std::size(kScaleSettings); ++s) {
        for (std::size_t col = 0; col < std::size(kAlphas); ++col) {
            emit_pgm(approx_fields[s][col],
                     "approx_N" + std::to_string(kScaleSettings[s]) + "_" + kAlphas[col].label +
                         ".pgm",
                     "approx", kAlphas[col], kScaleSettings[s]);
        }
    }
    for (std::size_t s = 0; s < std::size(kScaleSettings); ++s) {
        for (std::size_t col = 0; col < std::size(kAlphas); ++col) {
            files.push_back(residual_csvs[s][col]);
            manifest.push_back(ManifestRow{"residual_report", kAlphas[col].label,
                                           kAlphas[col].alpha, kScaleSettings[s],
                                           residual_csvs[s][col]});
        }
    }

    const std::string manifest_name = "manifest.csv";
    std::ofstream out((fs::path(output_dir) / manifest_name).string(), std::ios::binary);
    if (!out) throw IoError("cannot open manifest.csv");
    out << "kind,alpha_label,alpha,scales,file\n";
    for (const ManifestRow& row : manifest) {
        const std::string scales =
            row.scale >= 0 ? std::to_string(row.scale) + "x" + std::to_string(row.scale) : "";
        out << row.row_kind << ',' << row.alpha_label << ',' << format_double(row.alpha) << ','
            << scales << ',' << row.file << '\n';
    }
    if (!out) throw IoError("write failed for manifest.csv");
    files.push_back(manifest_name);
    return files;
}

} // namespace tenpara
