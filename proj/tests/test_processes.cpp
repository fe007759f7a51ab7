#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "oswap/densities.hpp"
#include "oswap/genfun.hpp"
#include "oswap/processes.hpp"

using namespace oswap;

namespace {

double one_sample_ks_pvalue(std::vector<double> sample, const std::function<double(double)>& cdf) {
    std::sort(sample.begin(), sample.end());
    const std::size_t m = sample.size();
    double d = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double F = cdf(sample[i]);
        d = std::max(d, std::fabs(F - static_cast<double>(i + 1) / m));
        d = std::max(d, std::fabs(F - static_cast<double>(i) / m));
    }
    return ks_pvalue_one_sample(d, m);
}

}  // namespace

TEST_CASE("rng streams are reproducible and distinct") {
    RngStream a(42, 7), b(42, 7), c(42, 8);
    std::vector<std::uint64_t> va, vb, vc;
    for (int i = 0; i < 100; ++i) {
        va.push_back(a.next_u64());
        vb.push_back(b.next_u64());
        vc.push_back(c.next_u64());
    }
    CHECK(va == vb);
    CHECK(va != vc);
    RngStream u(1, 0);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform01();
        CHECK(x >= 0);
        CHECK(x < 1);
        CHECK(u.exponential() >= 0);
    }
}

TEST_CASE("simulators are deterministic given the stream") {
    for (int n : {2, 4, 7}) {
        RngStream r1(5, 3), r2(5, 3);
        const auto a = simulate_osp(n, r1);
        const auto b = simulate_osp(n, r2);
        CHECK(a.coords == b.coords);
        CHECK(a.path == b.path);
        CHECK(a.jump_times == b.jump_times);
        CHECK(a.finishing == b.finishing);
    }
}

TEST_CASE("osp sample structure") {
    RngStream rng(11, 0);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 4;
        const auto s = simulate_osp(n, rng);
        const int N = n * (n - 1) / 2;
        REQUIRE(static_cast<int>(s.path.size()) == N);
        CHECK(std::is_sorted(s.jump_times.begin(), s.jump_times.end()));
        CHECK(is_sorting_network(SortingNetwork{n, s.path}));
        CHECK(s.max_time == *std::max_element(s.coords.begin(), s.coords.end()));
        // last-swap coordinates are a subset of jump times
        for (double u : s.coords)
            CHECK(std::find(s.jump_times.begin(), s.jump_times.end(), u) != s.jump_times.end());
        // finishing time of particle k, with boundary zeros
        auto u = [&](int k) { return (k >= 1 && k <= n - 1) ? s.coords[k - 1] : 0.0; };
        for (int k = 1; k <= n; ++k)
            CHECK(s.finishing[k - 1] == doctest::Approx(std::max(u(n - k), u(n - k + 1))));
    }
}

TEST_CASE("clock simulator performs exactly N successful swaps") {
    RngStream rng(13, 1);
    for (int rep = 0; rep < 100; ++rep) {
        const auto s = simulate_osp_clocks(5, rng);
        CHECK(s.path.size() == 10);
        CHECK(is_sorting_network(SortingNetwork{5, s.path}));
    }
}

TEST_CASE("order-2 last swap time is Exp(1)") {
    const long long m = 100000;
    double sum = 0;
    for (long long i = 0; i < m; ++i) {
        RngStream rng(17, static_cast<std::uint64_t>(i));
        sum += simulate_osp(2, rng).coords[0];
    }
    const double mean = sum / m;
    CHECK(std::fabs(mean - 1.0) < 3.0 / std::sqrt(static_cast<double>(m)));
}

TEST_CASE("path frequencies match the walk probabilities at n=4") {
    const long long m = 100000;
    std::map<std::uint64_t, long long> osp_counts, growth_counts;
    for (long long i = 0; i < m; ++i) {
        RngStream r1(19, static_cast<std::uint64_t>(i));
        osp_counts[SortingNetwork{4, simulate_osp(4, r1).path}.key()]++;
        RngStream r2(23, static_cast<std::uint64_t>(i));
        const auto g = simulate_corner_growth(4, r2);
        growth_counts[StandardTableau(staircase(4), std::vector<int>(g.path.begin(), g.path.end()))
                          .key()]++;
    }
    std::vector<long long> obs_osp, obs_growth;
    std::vector<double> exp_osp, exp_growth;
    for (const auto& s : enumerate_sorting_networks(4)) {
        double p = 1;
        for (int d : network_params(s).deg) p /= d;
        exp_osp.push_back(p * m);
        obs_osp.push_back(osp_counts[s.key()]);
    }
    for (const auto& t : enumerate_syt(staircase(4))) {
        double p = 1;
        for (int d : tableau_params(t).deg) p /= d;
        exp_growth.push_back(p * m);
        obs_growth.push_back(growth_counts[t.key()]);
    }
    CHECK(chi_square("osp_paths", obs_osp, exp_osp).pass);
    CHECK(chi_square("growth_paths", obs_growth, exp_growth).pass);
}

TEST_CASE("embedded chain and literal clocks agree in law at n=3") {
    const long long m = 100000;
    const auto a = sample_batch(Model::osp, 3, m, 29);
    const auto b = sample_batch(Model::osp_clocks, 3, m, 31);
    for (const char* col : {"u1", "u2", "max"}) {
        const auto rep = ks_two_sample(std::string("osp_vs_clocks_") + col, a.column(col), b.column(col));
        CHECK(rep.pass);
    }
}

TEST_CASE("point-to-line and line-to-line vectors share their endpoints almost surely") {
    RngStream rng(37, 0);
    for (int rep = 0; rep < 500; ++rep) {
        for (int n : {2, 5, 8}) {
            const auto s = vw_vectors(n, rng);
            REQUIRE(s.v.size() == static_cast<std::size_t>(n - 1));
            // the same cells summed in opposite orders: equal up to rounding
            CHECK(s.v.front() == doctest::Approx(s.w.front()).epsilon(1e-13));
            CHECK(s.v.back() == doctest::Approx(s.w.back()).epsilon(1e-13));
        }
    }
}

TEST_CASE("corner growth addition times agree with LPP in law at n=4") {
    const long long m = 100000;
    const auto a = sample_batch(Model::growth, 4, m, 41);
    const auto b = sample_batch(Model::lpp, 4, m, 43);
    for (int k = 1; k <= 3; ++k) {
        const auto col = "v" + std::to_string(k);
        CHECK(ks_two_sample("growth_vs_lpp_" + col, a.column(col), b.column(col)).pass);
    }
    CHECK(ks_two_sample("growth_vs_lpp_max", a.column("max"), b.column("vmax")).pass);
}

TEST_CASE("statistic utilities") {
    std::vector<double> x{0.1, 0.5, 0.9, 1.4};
    CHECK(ks_statistic_two_sample(x, x) == 0.0);
    CHECK(ecdf(x, -1.0) == 0.0);
    CHECK(ecdf(x, 2.0) == 1.0);
    CHECK(ecdf(x, 0.5) == doctest::Approx(0.5));
    CHECK_THROWS_AS(ecdf({}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(chi_square("bad", {1, 2}, {1.0}), std::invalid_argument);

    // power sanity: clearly different laws are rejected hard
    const long long m = 10000;
    std::vector<double> e1, e2;
    RngStream rng(47, 0);
    for (long long i = 0; i < m; ++i) {
        e1.push_back(rng.exponential(1.0));
        e2.push_back(rng.exponential(2.0));
    }
    const auto rep = ks_two_sample("exp1_vs_exp2", e1, e2);
    CHECK_FALSE(rep.pass);
    CHECK(rep.stat("p") < 1e-6);
}

TEST_CASE("gamma-exponential joint identity") {
    const auto r4 = gamma_exp_joint_test(4, 53, 100000);
    CHECK(r4.pass);
    const auto r3 = gamma_exp_joint_test(3, 59, 20000);
    CHECK(r3.pass);
    CHECK_THROWS_AS(gamma_exp_joint_test(2, 1, 10), std::invalid_argument);
}

TEST_CASE("sojourn gaps conditioned on a fixed path are hypoexponential") {
    const int n = 4;
    const auto target = enumerate_sorting_networks(n).front();
    const auto params = network_params(target);
    const long long m = 200000;

    std::vector<std::vector<double>> gaps(n - 1);
    for (long long i = 0; i < m; ++i) {
        RngStream rng(61, static_cast<std::uint64_t>(i));
        const auto s = simulate_osp(n, rng);
        if (s.path != target.swaps) continue;
        auto sorted = s.coords;
        std::sort(sorted.begin(), sorted.end());
        double prev = 0;
        for (int k = 1; k <= n - 1; ++k) {
            gaps[k - 1].push_back(sorted[k - 1] - prev);
            prev = sorted[k - 1];
        }
    }
    REQUIRE(gaps[0].size() > 1000);

    for (int k = 1; k <= n - 1; ++k) {
        HypoexpSpec spec;
        for (int j = params.fin_bar[k - 1] + 1; j <= params.fin_bar[k]; ++j)
            spec.rates.push_back(static_cast<double>(params.deg[j - 1]));
        const double p =
            one_sample_ks_pvalue(gaps[k - 1], [&](double x) { return hypoexp_cdf(spec, x); });
        CHECK(p > 1e-3);
    }
}

TEST_CASE("batch columns and reproducibility") {
    const auto m1 = sample_batch(Model::lpp, 5, 50, 71);
    CHECK(m1.columns == std::vector<std::string>{"v1", "v2", "v3", "v4", "vmax", "w1", "w2", "w3",
                                                 "w4", "wmax"});
    const auto m2 = sample_batch(Model::lpp, 5, 50, 71);
    CHECK(m1.rows == m2.rows);
    CHECK_THROWS_AS(sample_batch(Model::osp, 4, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(model_from_string("bogus"), std::invalid_argument);
    CHECK(model_from_string("osp") == Model::osp);
    CHECK(model_name(Model::growth) == "growth");
}
