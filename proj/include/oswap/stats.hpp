#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace oswap {

struct TestReport {
    std::string name;
    std::vector<std::pair<std::string, double>> stats;
    std::vector<std::pair<std::string, double>> thresholds;
    bool pass = false;
    std::vector<long long> sample_sizes;
    std::vector<std::uint64_t> seeds;
    std::string note;

    double stat(const std::string& key) const;  // throws if absent
    std::string summary_line() const;
    std::string to_json() const;
};

// Empirical CDF at t; samples must be sorted ascending.
double ecdf(const std::vector<double>& sorted_samples, double t);

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);
double ks_pvalue_two_sample(double d, std::size_t m, std::size_t n);
double ks_pvalue_one_sample(double d, std::size_t m);

TestReport ks_two_sample(const std::string& name, std::vector<double> a, std::vector<double> b,
                         double alpha = 1e-3);

double chi_square_pvalue(double stat, int dof);
TestReport chi_square(const std::string& name, const std::vector<long long>& observed,
                      const std::vector<double>& expected, double alpha = 1e-3);

double normal_cdf(double z);

}  // namespace oswap
