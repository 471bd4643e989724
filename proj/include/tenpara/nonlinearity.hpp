#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tenpara/dyadic.hpp"

namespace tenpara {

// A C^2 scalar map with explicit first and second derivatives.
class Nonlinearity {
public:
    using Evaluator = std::function<double(double)>;

    Nonlinearity(std::string name, Evaluator a, Evaluator da, Evaluator dda)
        : name_(std::move(name)), a_(std::move(a)), da_(std::move(da)), dda_(std::move(dda)) {}

    const std::string& name() const { return name_; }
    double value(double u) const { return a_(u); }
    double d1(double u) const { return da_(u); }
    double d2(double u) const { return dda_(u); }
    double derivative(int order, double u) const;

    static Nonlinearity identity();
    static Nonlinearity square();
    // A(u) = exp(-rate u); the rate-0.2 instance is named "exp02".
    static Nonlinearity exp_decay(double rate = 0.2);
    // Natural cubic spline through (u, A(u)) samples; derivatives come from the
    // spline, so the finite-difference consistency check holds by construction.
    static Nonlinearity from_table(std::vector<std::pair<double, double>> samples,
                                   std::string name = "custom-table");
    // Lookup of the builtin names accepted by the CLI.
    static Nonlinearity by_name(const std::string& name);

private:
    std::string name_;
    Evaluator a_;
    Evaluator da_;
    Evaluator dda_;
};

// Pointwise A, A' or A'' over a field. Validates A at the field min/max first,
// then flags any non-finite cell with its index.
UnitGridField evaluate_nonlinearity(const Nonlinearity& map, const UnitGridField& field,
                                    int derivative);

// Max discrepancy of the centered finite difference of A against A' over a
// probe grid on [lo, hi]; used to validate user-supplied evaluators.
double derivative_consistency_error(const Nonlinearity& map, double lo, double hi,
                                    int probes = 64, double step = 1e-5);

} // namespace tenpara
