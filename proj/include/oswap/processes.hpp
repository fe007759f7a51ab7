#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oswap/rng.hpp"
#include "oswap/sortnet.hpp"
#include "oswap/stats.hpp"
#include "oswap/young.hpp"

namespace oswap {

enum class Model { osp, osp_clocks, growth, lpp };
Model model_from_string(const std::string& s);
std::string model_name(Model m);

struct TrajectorySample {
    Model model = Model::osp;
    int n = 0;
    std::vector<int> path;           // swap bonds (OSP) or row-major tableau entries (growth)
    std::vector<double> jump_times;  // strictly increasing, one per successful transition
    std::vector<double> coords;      // U_n or V_n
    double max_time = 0;
    std::vector<double> finishing;   // OSP only: particle finishing times, labels 1..n
};

// Embedded-chain sampler: wait Exp(#allowed moves), pick one uniformly.
TrajectorySample simulate_osp(int n, RngStream& rng);

// Literal bond clocks: every bond rings at rate one, failed swaps ignored.
TrajectorySample simulate_osp_clocks(int n, RngStream& rng);

TrajectorySample simulate_corner_growth(int n, RngStream& rng);

// Point-to-line and line-to-line LPP vectors on one exponential environment.
struct VwSample {
    std::vector<double> v, w;
};
VwSample vw_vectors(int n, RngStream& rng);

double sample_vmax(int n, RngStream& rng);  // point-to-line LPP time

// One replica per stream index: parallel and serial drivers are byte-identical.
struct SampleMatrix {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::vector<double> column(const std::string& name) const;
};
SampleMatrix sample_batch(Model model, int n, long long replicas, std::uint64_t seed,
                          std::uint64_t stream_base = 0);
SampleMatrix sample_batch_serial(Model model, int n, long long replicas, std::uint64_t seed,
                                 std::uint64_t stream_base = 0);

// (U_n(1), U_n(n-1)) against (Gamma + X, Gamma' + X).
TestReport gamma_exp_joint_test(int n, std::uint64_t seed, long long samples, double alpha = 1e-3);

}  // namespace oswap
