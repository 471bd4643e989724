#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tenpara/figure.hpp"
#include "tenpara/io.hpp"
#include "tenpara/random_field.hpp"
#include "tenpara/ring.hpp"
#include "tenpara/verify.hpp"

using namespace tenpara;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

fs::path temp_dir(const char* tag) {
    const fs::path dir = fs::temp_directory_path() / (std::string("tenpara_test_") + tag);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("TPMX round-trips bit-exactly") {
    const fs::path path = temp_dir("tpmx") / "field.tpmx";
    const UnitGridField f = random_field(4, 3, 0.2, 99);
    write_tpmx(f, path.string());
    CHECK(fs::file_size(path) == 13 + 8 * f.values().size());
    const UnitGridField back = read_tpmx(path.string());
    CHECK(back.level_x() == 4);
    CHECK(back.level_y() == 3);
    REQUIRE(back.values().size() == f.values().size());
    for (std::size_t i = 0; i < f.values().size(); ++i) {
        CHECK(back.values()[i] == f.values()[i]);
    }
}

TEST_CASE("TPMX rejects malformed files") {
    const fs::path dir = temp_dir("tpmx_bad");
    CHECK_THROWS_AS(read_tpmx((dir / "missing.tpmx").string()), IoError);

    const fs::path bad_magic = dir / "bad_magic.tpmx";
    std::ofstream(bad_magic, std::ios::binary) << "NOPE payload";
    CHECK_THROWS_AS(read_tpmx(bad_magic.string()), IoError);

    // Truncated payload.
    const fs::path truncated = dir / "short.tpmx";
    {
        const UnitGridField f(2, 2);
        write_tpmx(f, truncated.string());
        fs::resize_file(truncated, 13 + 8 * 5);
    }
    CHECK_THROWS_AS(read_tpmx(truncated.string()), IoError);

    CHECK_THROWS_AS(write_tpmx(UnitGridField(1, 1), "/nonexistent_dir/x.tpmx"), IoError);
}

TEST_CASE("PGM bytes for tiny fields") {
    const fs::path dir = temp_dir("pgm");

    UnitGridField checker(1, 1, {0.0, 1.0, 1.0, 0.0});
    const fs::path checker_path = dir / "checker.pgm";
    write_pgm(checker, checker_path.string());
    const std::string bytes = slurp(checker_path);
    CHECK(bytes == std::string("P5\n2 2\n255\n") + '\x00' + '\xff' + '\xff' + '\x00');

    const UnitGridField constant = sample_grid([](double, double) { return 7.0; }, 1, 1);
    const fs::path constant_path = dir / "constant.pgm";
    write_pgm(constant, constant_path.string());
    const std::string cbytes = slurp(constant_path);
    CHECK(cbytes.substr(cbytes.size() - 4) == std::string(4, '\x80'));
}

TEST_CASE("PGM of the full ring field has the documented size") {
    RingFieldSpec spec;
    const fs::path path = temp_dir("pgm_ring") / "ring.pgm";
    write_pgm(generate_ring(spec), path.string());
    CHECK(fs::file_size(path) == 15 + 512 * 512);
}

TEST_CASE("matrix CSV layout") {
    const fs::path path = temp_dir("csv") / "m.csv";
    UnitGridField f(0, 1, {1.5, -2.0});
    write_matrix_csv(f, path.string());
    CHECK(slurp(path) == "row,col,value\n0,0,1.5\n0,1,-2\n");
}

TEST_CASE("ring branch values") {
    RingFieldSpec spec;
    spec.alpha = 0.4;
    CHECK(ring_value(spec, 0.0, 0.0) == doctest::Approx(std::pow(0.3, 0.4)).epsilon(1e-15));
    CHECK(ring_value(spec, 0.3, 0.0) == 0.0);
    CHECK(ring_value(spec, 0.6, 0.0) == doctest::Approx(std::pow(0.5, 0.4)).epsilon(1e-15));

    CHECK_THROWS_AS(generate_ring(RingFieldSpec{-0.1, 0.3, 4}), std::domain_error);
    CHECK_THROWS_AS(generate_ring(RingFieldSpec{0.4, 1.5, 4}), std::domain_error);
}

TEST_CASE("ring field is symmetric across the diagonal within its own modulus") {
    RingFieldSpec spec;
    spec.alpha = 0.4;
    spec.grid_level = 6;
    const UnitGridField f = generate_ring(spec);
    double adjacent = 0.0;
    for (std::int64_t r = 0; r + 1 < f.rows(); ++r) {
        for (std::int64_t c = 0; c + 1 < f.cols(); ++c) {
            adjacent = std::max(adjacent, std::abs(f.at(r, c) - f.at(r + 1, c)));
            adjacent = std::max(adjacent, std::abs(f.at(r, c) - f.at(r, c + 1)));
        }
    }
    double transpose_gap = 0.0;
    for (std::int64_t r = 0; r < f.rows(); ++r) {
        for (std::int64_t c = 0; c < f.cols(); ++c) {
            transpose_gap = std::max(transpose_gap, std::abs(f.at(r, c) - f.at(c, r)));
        }
    }
    CHECK(transpose_gap <= adjacent);
    CHECK(transpose_gap < 1e-15);
}

TEST_CASE("figure run emits the 4x3 grid deterministically") {
    const fs::path dir1 = temp_dir("fig_a");
    const fs::path dir2 = temp_dir("fig_b");
    const std::vector<std::string> files1 = run_figure(dir1.string(), 5);
    const std::vector<std::string> files2 = run_figure(dir2.string(), 5);
    REQUIRE(files1 == files2);
    CHECK(files1.size() == 19);  // 12 images + 6 reports + manifest

    int pgm = 0, csv = 0;
    for (const std::string& name : files1) {
        if (name.ends_with(".pgm")) ++pgm;
        if (name.ends_with(".csv")) ++csv;
        CHECK(slurp(dir1 / name) == slurp(dir2 / name));
    }
    CHECK(pgm == 12);
    CHECK(csv == 7);  // 6 residual reports + manifest
    CHECK(files1.back() == "manifest.csv");

    // Column order in the manifest follows the caption: 4e-1, 4e-2, 4e-3.
    std::istringstream manifest(slurp(dir1 / "manifest.csv"));
    std::string header, row1, row2, row3;
    std::getline(manifest, header);
    std::getline(manifest, row1);
    std::getline(manifest, row2);
    std::getline(manifest, row3);
    CHECK(header == "kind,alpha_label,alpha,scales,file");
    CHECK(row1.find("f,4e-1,") == 0);
    CHECK(row2.find("f,4e-2,") == 0);
    CHECK(row3.find("f,4e-3,") == 0);
}

TEST_CASE("verify suites run and validate their inputs") {
    const VerifyReport parseval = run_verify("parseval", 32, 7);
    CHECK(parseval.all_pass());
    CHECK(parseval.checks.size() == 4);

    const VerifyReport ftc = run_verify("ftc", 16, 7, 4);
    CHECK(ftc.all_pass());

    CHECK_THROWS_AS(run_verify("bogus", 32, 7), std::domain_error);
    CHECK_THROWS_AS(run_verify("parseval", 33, 7), ShapeError);

    std::ostringstream text, csv;
    print_verify(parseval, text);
    CHECK(text.str().find("[pass] parseval.parseval_1d") != std::string::npos);
    write_verify_csv(parseval, csv);
    CHECK(csv.str().find("suite,check,value,threshold,pass\n") == 0);
}

TEST_SUITE_END();
