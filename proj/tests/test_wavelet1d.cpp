#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "tenpara/random_field.hpp"
#include "tenpara/wavelet1d.hpp"

using namespace tenpara;

namespace {

double dot_with_measure(const std::vector<double>& a, const std::vector<double>& b) {
    const double cell = 1.0 / static_cast<double>(a.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i] * cell;
    return acc;
}

} // namespace

TEST_SUITE_BEGIN("wavelet1d");

TEST_CASE("constants carry no detail") {
    const CoeffPyramid1D p = analyze_1d(std::vector<double>{1.0, 1.0, 1.0, 1.0});
    CHECK(p.max_level == 1);
    CHECK(p.scaling[0][0] == doctest::Approx(1.0).epsilon(1e-15));
    for (const auto& level : p.detail) {
        for (double d : level) CHECK(d == 0.0);
    }
}

TEST_CASE("two-sample analysis matches hand evaluation") {
    const double a = 3.7, b = -1.2;
    const CoeffPyramid1D p = analyze_1d(std::vector<double>{a, b});
    CHECK(p.scaling[0][0] == doctest::Approx((a + b) / 2.0).epsilon(1e-15));
    CHECK(p.detail[0][0] == doctest::Approx((a - b) / 2.0).epsilon(1e-15));
}

TEST_CASE("coefficients equal direct inner products") {
    const std::vector<double> values{1.0, 0.0, 0.0, 0.0};
    const CoeffPyramid1D p = analyze_1d(values);
    for (int j = 0; j <= p.max_level; ++j) {
        for (int k = 0; k < (1 << j); ++k) {
            CHECK(p.scaling[j][k] ==
                  doctest::Approx(test::brute_coeff_1d(values, j, k, false)).epsilon(1e-14));
            CHECK(p.detail[j][k] ==
                  doctest::Approx(test::brute_coeff_1d(values, j, k, true)).epsilon(1e-14));
        }
    }
}

TEST_CASE("analyze rejects bad lengths") {
    CHECK_THROWS_AS(analyze_1d(std::vector<double>{1.0, 2.0, 3.0}), ShapeError);
    CHECK_THROWS_AS(analyze_1d(std::vector<double>{1.0}), ShapeError);
    CHECK_THROWS_AS(analyze_1d(std::vector<double>{}), ShapeError);
}

TEST_CASE("synthesis inverts analysis") {
    for (const std::vector<double>& v :
         {std::vector<double>{1.0, 1.0, 1.0, 1.0}, std::vector<double>{1.0, 0.0, 0.0, 0.0}}) {
        const std::vector<double> back = synthesize_1d(analyze_1d(v), 2);
        for (std::size_t i = 0; i < v.size(); ++i) {
            CHECK(back[i] == doctest::Approx(v[i]).epsilon(1e-14));
        }
    }
    const std::vector<double> big = random_values(1024, 3);
    const std::vector<double> back = synthesize_1d(analyze_1d(big), 10);
    double worst = 0.0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        worst = std::max(worst, std::abs(back[i] - big[i]));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("synthesis validates the level argument") {
    const CoeffPyramid1D p = analyze_1d(std::vector<double>{1.0, 2.0, 3.0, 4.0});
    CHECK_THROWS_AS(synthesize_1d(p, 3), ShapeError);
    CHECK_THROWS_AS(synthesize_1d(p, 1), ShapeError);
}

TEST_CASE("projection block means") {
    const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
    CHECK(project_P(v, 1) == std::vector<double>{1.5, 1.5, 3.5, 3.5});
    CHECK(project_P(v, 2) == v);
    CHECK(project_P(v, 0) == std::vector<double>{2.5, 2.5, 2.5, 2.5});
    CHECK_THROWS_AS(project_P(v, 3), LevelError);
    CHECK_THROWS_AS(project_P(v, -1), LevelError);
}

TEST_CASE("projection is exactly idempotent") {
    const std::vector<double> v = random_values(256, 17);
    for (int j : {0, 2, 5, 8}) {
        const std::vector<double> once = project_P(v, j);
        CHECK(project_P(once, j) == once);
    }
}

TEST_CASE("detail operator anchors") {
    const std::vector<double>
        constant{2.0, 2.0, 2.0, 2.0};
    for (double d : detail_Q(constant, 0)) CHECK(d == 0.0);
    for (double d : detail_Q(constant, 1)) CHECK(d == 0.0);

    CHECK(detail_Q(std::vector<double>{1.0, 2.0, 3.0, 4.0}, 0) ==
          std::vector<double>{-1.0, -1.0, 1.0, 1.0});
    CHECK_THROWS_AS(detail_Q(std::vector<double>{1.0, 2.0}, 1), LevelError);
}

TEST_CASE("details telescope back to the input") {
    const std::vector<double> v = random_values(128, 33);
    std::vector<double> acc = project_P(v, 0);
    for (int j = 0; j < 7; ++j) {
        const std::vector<double> q = detail_Q(v, j);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += q[i];
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) worst = std::max(worst, std::abs(acc[i] - v[i]));
    CHECK(worst < 1e-13);
}

TEST_CASE("Parseval equality with cell measure") {
    const std::vector<double> v = random_values(512, 9);
    const CoeffPyramid1D p = analyze_1d(v);
    double norm_sq = dot_with_measure(v, v);
    double coeff_sq = p.scaling[0][0] * p.scaling[0][0];
    for (const auto& level : p.detail) {
        for (double d : level) coeff_sq += d * d;
    }
    CHECK(std::abs(norm_sq - coeff_sq) < 1e-12);
}

TEST_CASE("details are orthogonal to the coarse projection") {
    const std::vector<double> v = random_values(256, 4);
    for (int j : {0, 3, 6}) {
        CHECK(std::abs(dot_with_measure(detail_Q(v, j), project_P(v, j))) < 1e-12);
    }
}

TEST_CASE("details have zero mean on level-j blocks") {
    const std::vector<double> v = random_values(256, 5);
    for (int j : {0, 2, 4, 7}) {
        const std::vector<double> q = detail_Q(v, j);
        const std::size_t block = q.size() >> j;
        for (std::size_t start = 0; start < q.size(); start += block) {
            const double mean =
                std::accumulate(q.begin() + start, q.begin() + start + block, 0.0) /
                static_cast<double>(block);
            CHECK(std::abs(mean) < 1e-14);
        }
    }
}

TEST_SUITE_END();
