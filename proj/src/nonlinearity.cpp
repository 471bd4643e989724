#include "tenpara/nonlinearity.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "tenpara/errors.hpp"

namespace tenpara {

double Nonlinearity::derivative(int order, double u) const {
    switch (order) {
        case 0: return value(u);
        case 1: return d1(u);
        case 2: return d2(u);
        default: throw std::domain_error("derivative order must be 0, 1 or 2");
    }
}

Nonlinearity Nonlinearity::identity() {
    return Nonlinearity(
        "identity", [](double u) { return u; }, [](double) { return 1.0; },
        [](double) { return 0.0; });
}

Nonlinearity Nonlinearity::square() {
    return Nonlinearity(
        "square", [](double u) { return u * u; }, [](double u) { return 2.0 * u; },
        [](double) { return 2.0; });
}

Nonlinearity Nonlinearity::exp_decay(double rate) {
    std::string name = rate == 0.2 ? "exp02" : "exp_decay_" + std::to_string(rate);
    return Nonlinearity(
        std::move(name), [rate](double u) { return std::exp(-rate * u); },
        [rate](double u) { return -rate * std::exp(-rate * u); },
        [rate](double u) { return rate * rate * std::exp(-rate * u); });
}

namespace {

// Natural cubic spline on sorted knots; evaluates value/first/second derivative.
// Outside the knot range the boundary cubic is continued.
class CubicSpline {
public:
    explicit CubicSpline(std::vector<std::pair<double, double>> samples) {
        std::sort(samples.begin(), samples.end());
        for (std::size_t i = 1; i < samples.size(); ++i) {
            if (samples[i].first == samples[i - 1].first) {
                throw std::domain_error("table abscissae must be distinct");
            }
        }
        if (samples.size() < 3) throw std::domain_error("table needs at least 3 samples");
        const std::size_t n = samples.size();
        x_.resize(n);
        y_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            x_[i] = samples[i].first;
            y_[i] = samples[i].second;
        }
        // Second derivatives at knots: tridiagonal solve, natural ends.
        m_.assign(n, 0.0);
        std::vector<double> diag(n, 1.0), off(n, 0.0), rhs(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double h0 = x_[i] - x_[i - 1];
            const double h1 = x_[i + 1] - x_[i];
            diag[i] = 2.0 * (h0 + h1);
            off[i] = h1;
            rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
        }
        std::vector<double> c(n, 0.0), d(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double h0 = x_[i] - x_[i - 1];
            const double lower = i == 1 ? 0.0 : h0;
            const double denom = diag[i] - lower * c[i - 1];
            c[i] = off[i] / denom;
            d[i] = (rhs[i] - lower * d[i - 1]) / denom;
        }
        for (std::size_t i = n - 2; i >= 1; --i) {
            m_[i] = d[i] - c[i] * m_[i + 1];
        }
    }

    double eval(int order, double u) const {
        std::size_t i = segment(u);
        const double h = x_[i + 1] - x_[i];
        const double a = (x_[i + 1] - u) / h;
        const double b = (u - x_[i]) / h;
        switch (order) {
            case 0:
                return a * y_[i] + b * y_[i + 1] +
                       ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
            case 1:
                return (y_[i + 1] - y_[i]) / h -
                       (3.0 * a * a - 1.0) * h * m_[i] / 6.0 +
                       (3.0 * b * b - 1.0) * h * m_[i + 1] / 6.0;
            default:
                return a * m_[i] + b * m_[i + 1];
        }
    }

private:
    std::size_t segment(double u) const {
        if (u <= x_.front()) return 0;
        if (u >= x_.back()) return x_.size() - 2;
        const auto it = std::upper_bound(x_.begin(), x_.end(), u);
        return static_cast<std::size_t>(it - x_.begin()) - 1;
    }

    std::vector<double> x_, y_, m_;
};

} // namespace

Nonlinearity Nonlinearity::from_table(std::vector<std::pair<double, double>> samples,
                                      std::string name) {
    auto spline = std::make_shared<CubicSpline>(std::move(samples));
    return Nonlinearity(
        std::move(name), [spline](double u) { return spline->eval(0, u); },
        [spline](double u) { return spline->eval(1, u); },
        [spline](double u) { return spline->eval(2, u); });
}

Nonlinearity Nonlinearity::by_name(const std::string& name) {
    if (name == "identity") return identity();
    if (name == "square") return square();
    if (name == "exp02") return exp_decay(0.2);
    throw std::domain_error("unknown nonlinearity: " + name);
}

UnitGridField evaluate_nonlinearity(const Nonlinearity& map, const UnitGridField& field,
                                    int derivative) {
    if (derivative < 0 || derivative > 2) {
        throw std::domain_error("derivative order must be 0, 1 or 2");
    }
    if (field.empty()) throw ShapeError("field is empty");
    const auto [lo, hi] = std::minmax_element(field.values().begin(), field.values().end());
    if (!std::isfinite(map.derivative(derivative, *lo)) ||
        !std::isfinite(map.derivative(derivative, *hi))) {
        throw EvalError("nonlinearity is not finite on the field data range [" +
                        std::to_string(*lo) + "," + std::to_string(*hi) + "]");
    }
    UnitGridField out(field.level_x(), field.level_y());
    for (std::int64_t r = 0; r < field.rows(); ++r) {
        for (std::int64_t c = 0; c < field.cols(); ++c) {
            const double v = map.derivative(derivative, field.at(r, c));
            if (!std::isfinite(v)) {
                throw EvalError("non-finite nonlinearity output at cell (" + std::to_string(r) +
                                "," + std::to_string(c) + ")");
            }
            out.at(r, c) = v;
        }
    }
    return out;
}

double derivative_consistency_error(const Nonlinearity& map, double lo, double hi, int probes,
                                    double step) {
    if (probes < 1) throw std::domain_error("probes must be >= 1");
    double worst = 0.0;
    for (int i = 0; i < probes; ++i) {
        const double u = probes == 1 ? lo : lo + (hi - lo) * i / (probes - 1);
        const double fd = (map.value(u + step) - map.value(u - step)) / (2.0 * step);
        worst = std::max(worst, std::abs(fd - map.d1(u)));
    }
    return worst;
}

} // namespace tenpara
