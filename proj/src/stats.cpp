#include "oswap/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "json.hpp"

namespace oswap {

double TestReport::stat(const std::string& key) const {
    for (const auto& [k, v] : stats)
        if (k == key) return v;
    throw std::out_of_range("no statistic named " + key);
}

std::string TestReport::summary_line() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << ' ' << name;
    for (const auto& [k, v] : stats) os << ' ' << k << '=' << v;
    if (!note.empty()) os << "  # " << note;
    return os.str();
}

std::string TestReport::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["pass"] = pass;
    for (const auto& [k, v] : stats) j["stats"][k] = v;
    for (const auto& [k, v] : thresholds) j["thresholds"][k] = v;
    j["sample_sizes"] = sample_sizes;
    j["seeds"] = seeds;
    if (!note.empty()) j["note"] = note;
    return j.dump();
}

double ecdf(const std::vector<double>& sorted_samples, double t) {
    if (sorted_samples.empty()) throw std::invalid_argument("ecdf of empty sample");
    const auto it = std::upper_bound(sorted_samples.begin(), sorted_samples.end(), t);
    return static_cast<double>(it - sorted_samples.begin()) / sorted_samples.size();
}

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("KS of empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double t = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= t) ++i;
        while (j < b.size() && b[j] <= t) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / a.size() -
                                  static_cast<double>(j) / b.size()));
    }
    return d;
}

namespace {

// Kolmogorov tail Q(lambda) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2)
double kolmogorov_q(double lambda) {
    if (lambda < 1e-3) return 1.0;
    double sum = 0;
    for (int j = 1; j <= 100; ++j) {
        const double term = 2.0 * std::exp(-2.0 * j * j * lambda * lambda);
        sum += (j % 2 ? term : -term);
        if (term < 1e-16) break;
    }
    return std::clamp(sum, 0.0, 1.0);
}

}  // namespace

double ks_pvalue_two_sample(double d, std::size_t m, std::size_t n) {
    const double ne = static_cast<double>(m) * n / (m + n);
    const double s = std::sqrt(ne);
    return kolmogorov_q((s + 0.12 + 0.11 / s) * d);
}

double ks_pvalue_one_sample(double d, std::size_t m) {
    const double s = std::sqrt(static_cast<double>(m));
    return kolmogorov_q((s + 0.12 + 0.11 / s) * d);
}

TestReport ks_two_sample(const std::string& name, std::vector<double> a, std::vector<double> b,
                         double alpha) {
    TestReport rep;
    rep.name = name;
    rep.sample_sizes = {static_cast<long long>(a.size()), static_cast<long long>(b.size())};
    const double d = ks_statistic_two_sample(std::move(a), std::move(b));
    const double p = ks_pvalue_two_sample(d, rep.sample_sizes[0], rep.sample_sizes[1]);
    rep.stats = {{"ks", d}, {"p", p}};
    rep.thresholds = {{"p_min", alpha}};
    rep.pass = p > alpha;
    return rep;
}

double chi_square_pvalue(double stat, int dof) {
    if (dof <= 0) throw std::invalid_argument("dof must be positive");
    return boost::math::gamma_q(dof / 2.0, stat / 2.0);
}

TestReport chi_square(const std::string& name, const std::vector<long long>& observed,
                      const std::vector<double>& expected, double alpha) {
    if (observed.empty() || observed.size() != expected.size())
        throw std::invalid_argument("chi_square size mismatch");
    TestReport rep;
    rep.name = name;
    long long total = 0;
    for (long long o : observed) total += o;
    rep.sample_sizes = {total};
    double stat = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0) throw std::invalid_argument("expected counts must be positive");
        const double diff = observed[i] - expected[i];
        stat += diff * diff / expected[i];
    }
    const int dof = static_cast<int>(observed.size()) - 1;
    const double p = chi_square_pvalue(stat, dof);
    rep.stats = {{"chi2", stat}, {"dof", static_cast<double>(dof)}, {"p", p}};
    rep.thresholds = {{"p_min", alpha}};
    rep.pass = p > alpha;
    return rep;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace oswap
