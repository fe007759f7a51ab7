#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "oswap/processes.hpp"
#include "oswap/rng.hpp"

namespace oswap {

// Adaptive bisection with an embedded Gauss 7/15 pair; absolute tolerance.
// Throws if the subdivision budget is exhausted before reaching it.
double integrate(const std::function<double(double)>& f, double a, double b, double tol);

// Law of a sum of independent exponentials with the given rates (repeats
// allowed); evaluated through partial fractions of the Laplace transform.
// Rates must repeat exactly or be well separated (here they are small
// integers, the out-degrees of the walk graphs).
struct HypoexpSpec {
    std::vector<double> rates;
};
double hypoexp_density(const HypoexpSpec& spec, double x);
double hypoexp_cdf(const HypoexpSpec& spec, double x);

enum class PathModel { osp, growth };

// Joint density of the last-swap / corner-addition vector as the exact
// path-probability-weighted sum of conditional hypoexponential products.
double density_from_paths(int n, PathModel model, const std::vector<double>& u);  // n <= 4

// Six-chamber piecewise closed form of the order-4 last-swap density.
double pU4_closed_form(double u1, double u2, double u3);

// Nested-quadrature evaluation of the joint-density recursion.
double density_V_recursive(int n, const std::vector<double>& v, double tol);  // n <= 4

// Ratio estimator of the largest-eigenvalue CDF with delta-method error.
struct LoeEstimate {
    double value = 0;
    double se = 0;
    long long samples = 0;
};
LoeEstimate loe_cdf(int n, double t, long long samples, std::uint64_t seed);

// (point, value) and (t, value, error) tables for plotting.
SampleMatrix density_table(int n, PathModel model, const std::vector<std::vector<double>>& points);
SampleMatrix recursive_density_table(int n, const std::vector<std::vector<double>>& points,
                                     double tol);
SampleMatrix loe_cdf_table(int n, const std::vector<double>& ts, long long samples,
                           std::uint64_t seed);

}  // namespace oswap
