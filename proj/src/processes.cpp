#include "oswap/processes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "oswap/rsk_burge.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oswap {

Model model_from_string(const std::string& s) {
    if (s == "osp") return Model::osp;
    if (s == "osp-clocks") return Model::osp_clocks;
    if (s == "growth") return Model::growth;
    if (s == "lpp") return Model::lpp;
    throw std::invalid_argument("unknown model: " + s);
}

std::string model_name(Model m) {
    switch (m) {
        case Model::osp: return "osp";
        case Model::osp_clocks: return "osp-clocks";
        case Model::growth: return "growth";
        case Model::lpp: return "lpp";
    }
    return {};
}

namespace {

void finalize_osp_sample(TrajectorySample& out, const std::vector<double>& last_swap, int n) {
    out.coords = last_swap;
    out.max_time = *std::max_element(last_swap.begin(), last_swap.end());
    out.finishing.assign(n, 0.0);
    auto u = [&](int k) { return (k >= 1 && k <= n - 1) ? last_swap[k - 1] : 0.0; };
    for (int k = 1; k <= n; ++k) out.finishing[k - 1] = std::max(u(n - k), u(n - k + 1));
}

}  // namespace

TrajectorySample simulate_osp(int n, RngStream& rng) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    TrajectorySample out;
    out.model = Model::osp;
    out.n = n;

    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<int> ascents;
    ascents.reserve(n - 1);
    std::vector<double> last_swap(n - 1, 0.0);
    double t = 0;
    while (true) {
        ascents.clear();
        for (int k = 1; k < n; ++k)
            if (w[k - 1] < w[k]) ascents.push_back(k);
        if (ascents.empty()) break;
        t += rng.exponential(static_cast<double>(ascents.size()));
        const int k = ascents[rng.below(static_cast<std::uint32_t>(ascents.size()))];
        std::swap(w[k - 1], w[k]);
        out.path.push_back(k);
        out.jump_times.push_back(t);
        last_swap[k - 1] = t;
    }
    finalize_osp_sample(out, last_swap, n);
    return out;
}

TrajectorySample simulate_osp_clocks(int n, RngStream& rng) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    TrajectorySample out;
    out.model = Model::osp_clocks;
    out.n = n;

    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<double> last_swap(n - 1, 0.0);
    int inversions = 0;
    const int target = n * (n - 1) / 2;
    double t = 0;
    while (inversions < target) {
        // superposition of n-1 rate-one clocks with a uniform mark
        t += rng.exponential(static_cast<double>(n - 1));
        const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(n - 1)));
        if (w[k - 1] > w[k]) continue;  // failed swap attempt
        std::swap(w[k - 1], w[k]);
        ++inversions;
        out.path.push_back(k);
        out.jump_times.push_back(t);
        last_swap[k - 1] = t;
    }
    finalize_osp_sample(out, last_swap, n);
    return out;
}

TrajectorySample simulate_corner_growth(int n, RngStream& rng) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    TrajectorySample out;
    out.model = Model::growth;
    out.n = n;
    const auto bound = staircase(n);
    const int total = n * (n - 1) / 2;

    TableauT<int> filling(bound);
    std::vector<int> mu;  // current row lengths
    out.coords.assign(n - 1, 0.0);
    double t = 0;
    for (int step = 1; step <= total; ++step) {
        std::vector<Cell> addable = YoungDiagram(mu).addable_cells(bound);
        t += rng.exponential(static_cast<double>(addable.size()));
        const Cell c = addable[rng.below(static_cast<std::uint32_t>(addable.size()))];
        if (c.row == static_cast<int>(mu.size()) + 1)
            mu.push_back(1);
        else
            ++mu[c.row - 1];
        filling.at(c.row, c.col) = step;
        out.jump_times.push_back(t);
        if (c.row + c.col == n) out.coords[c.col - 1] = t;  // box (n-k, k)
    }
    out.path.assign(filling.values().begin(), filling.values().end());
    out.max_time = *std::max_element(out.coords.begin(), out.coords.end());
    return out;
}

VwSample vw_vectors(int n, RngStream& rng) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    const auto shape = staircase(n);
    RealTableau x(shape);
    for (const Cell c : shape.cells()) x.at(c.row, c.col) = rng.exponential();
    const auto L = lpp_tableau(x);
    const auto Ls = dual_lpp_tableau(x);
    VwSample s;
    s.v.reserve(n - 1);
    s.w.reserve(n - 1);
    for (int k = 1; k <= n - 1; ++k) {
        s.v.push_back(L.at(n - k, k));
        s.w.push_back(Ls.at(n - k, k));
    }
    return s;
}

double sample_vmax(int n, RngStream& rng) {
    const auto shape = staircase(n);
    RealTableau x(shape);
    for (const Cell c : shape.cells()) x.at(c.row, c.col) = rng.exponential();
    const auto L = lpp_tableau(x);
    double mx = 0;
    for (int k = 1; k <= n - 1; ++k) mx = std::max(mx, L.at(n - k, k));
    return mx;
}

std::vector<double> SampleMatrix::column(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw std::invalid_argument("no column named " + name);
    const std::size_t idx = static_cast<std::size_t>(it - columns.begin());
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r[idx]);
    return out;
}

namespace {

SampleMatrix batch_impl(Model model, int n, long long replicas, std::uint64_t seed,
                        std::uint64_t stream_base, bool parallel) {
    if (replicas <= 0) throw std::invalid_argument("replicas must be positive");
    SampleMatrix mat;
    const std::string coord = (model == Model::growth || model == Model::lpp) ? "v" : "u";
    if (model == Model::lpp) {
        for (int k = 1; k < n; ++k) mat.columns.push_back("v" + std::to_string(k));
        mat.columns.push_back("vmax");
        for (int k = 1; k < n; ++k) mat.columns.push_back("w" + std::to_string(k));
        mat.columns.push_back("wmax");
    } else {
        for (int k = 1; k < n; ++k) mat.columns.push_back(coord + std::to_string(k));
        mat.columns.push_back("max");
    }
    mat.rows.assign(replicas, {});

#pragma omp parallel for schedule(static) if (parallel)
    for (long long r = 0; r < replicas; ++r) {
        RngStream rng(seed, stream_base + static_cast<std::uint64_t>(r));
        std::vector<double> row;
        switch (model) {
            case Model::osp:
            case Model::osp_clocks: {
                const auto s =
                    model == Model::osp ? simulate_osp(n, rng) : simulate_osp_clocks(n, rng);
                row = s.coords;
                row.push_back(s.max_time);
                break;
            }
            case Model::growth: {
                const auto s = simulate_corner_growth(n, rng);
                row = s.coords;
                row.push_back(s.max_time);
                break;
            }
            case Model::lpp: {
                const auto s = vw_vectors(n, rng);
                row = s.v;
                row.push_back(*std::max_element(s.v.begin(), s.v.end()));
                row.insert(row.end(), s.w.begin(), s.w.end());
                row.push_back(*std::max_element(s.w.begin(), s.w.end()));
                break;
            }
        }
        mat.rows[r] = std::move(row);
    }
    return mat;
}

}  // namespace

SampleMatrix sample_batch(Model model, int n, long long replicas, std::uint64_t seed,
                          std::uint64_t stream_base) {
    return batch_impl(model, n, replicas, seed, stream_base, true);
}

SampleMatrix sample_batch_serial(Model model, int n, long long replicas, std::uint64_t seed,
                                 std::uint64_t stream_base) {
    return batch_impl(model, n, replicas, seed, stream_base, false);
}

TestReport gamma_exp_joint_test(int n, std::uint64_t seed, long long samples, double alpha) {
    if (n < 3) throw std::invalid_argument("joint test needs n >= 3");
    std::vector<double> u1(samples), un(samples), umaxv(samples), udiff(samples);
    std::vector<double> g1(samples), gn(samples), gmax(samples), gdiff(samples);

#pragma omp parallel for schedule(static)
    for (long long i = 0; i < samples; ++i) {
        RngStream rng(seed, static_cast<std::uint64_t>(i));
        const auto s = simulate_osp(n, rng);
        u1[i] = s.coords.front();
        un[i] = s.coords.back();
        umaxv[i] = std::max(u1[i], un[i]);
        udiff[i] = u1[i] - un[i];

        RngStream rng2(seed, static_cast<std::uint64_t>(samples + i));
        double gamma1 = 0, gamma2 = 0;
        for (int j = 0; j < n - 2; ++j) gamma1 += rng2.exponential();
        for (int j = 0; j < n - 2; ++j) gamma2 += rng2.exponential();
        const double x = rng2.exponential();
        g1[i] = gamma1 + x;
        gn[i] = gamma2 + x;
        gmax[i] = std::max(g1[i], gn[i]);
        gdiff[i] = g1[i] - gn[i];
    }

    TestReport rep;
    rep.name = "gamma_exp_joint_n" + std::to_string(n);
    rep.seeds = {seed};
    rep.sample_sizes = {samples};
    rep.thresholds = {{"p_min", alpha}};
    rep.pass = true;
    auto add = [&](const std::string& key, std::vector<double> a, std::vector<double> b) {
        const double d = ks_statistic_two_sample(std::move(a), std::move(b));
        const double p = ks_pvalue_two_sample(d, samples, samples);
        rep.stats.push_back({key + "_ks", d});
        rep.stats.push_back({key + "_p", p});
        rep.pass = rep.pass && p > alpha;
    };
    add("first", u1, g1);
    add("last", un, gn);
    add("max", umaxv, gmax);
    add("diff", udiff, gdiff);

    // exchangeability: the difference is symmetric about zero
    long long pos = 0, neg = 0;
    for (double d : udiff) {
        if (d > 0) ++pos;
        if (d < 0) ++neg;
    }
    const double z = (pos - neg) / std::sqrt(static_cast<double>(pos + neg));
    const double p_sign = 2.0 * (1.0 - normal_cdf(std::fabs(z)));
    rep.stats.push_back({"sign_z", z});
    rep.stats.push_back({"sign_p", p_sign});
    rep.pass = rep.pass && p_sign > alpha;
    return rep;
}

}  // namespace oswap
