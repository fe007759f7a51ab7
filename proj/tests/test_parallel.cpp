#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oswap/edelman_greene.hpp"
#include "oswap/genfun.hpp"
#include "oswap/processes.hpp"
#include "oswap/rsk_burge.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace oswap;

// The OpenMP kernels must reproduce their serial references exactly: the
// enumerations element for element, the exact-arithmetic accumulations as
// identical canonical maps, and the samplers byte for byte.

TEST_CASE("parallel enumeration preserves the serial order") {
    for (int n = 2; n <= 5; ++n) {
        CHECK(enumerate_syt_parallel(staircase(n)) == enumerate_syt(staircase(n)));
        CHECK(enumerate_sorting_networks_parallel(n) == enumerate_sorting_networks(n));
    }
    CHECK(enumerate_syt_parallel(YoungDiagram({3, 3, 2})) == enumerate_syt(YoungDiagram({3, 3, 2})));
}

TEST_CASE("parallel tallies equal the serial tallies") {
    for (int n : {4, 5}) {
        for (auto side : {TermSide::tableaux, TermSide::networks}) {
            const auto par = build_tally(n, side);
            const auto ser = build_tally_serial(n, side);
            CHECK(par.total == ser.total);
            REQUIRE(par.groups.size() == ser.groups.size());
            for (const auto& [perm, counts] : ser.groups) {
                REQUIRE(par.groups.count(perm));
                CHECK(par.groups.at(perm) == counts);
            }
        }
    }
}

TEST_CASE("parallel accumulation equals the serial accumulation") {
    for (int n : {3, 4, 5}) {
        CHECK(accumulate_F(n).same_as(accumulate_F_serial(n)));
        CHECK(accumulate_G(n).same_as(accumulate_G_serial(n)));
    }
}

TEST_CASE("parallel batches are byte-identical to serial batches") {
    for (auto model : {Model::osp, Model::osp_clocks, Model::growth, Model::lpp}) {
        const auto par = sample_batch(model, 5, 2000, 99);
        const auto ser = sample_batch_serial(model, 5, 2000, 99);
        CHECK(par.columns == ser.columns);
        CHECK(par.rows == ser.rows);
    }
}

TEST_CASE("parallel sweep equals the serial sweep") {
    const auto par = rsk_burge_sweep(2, 3, 2);
    const auto ser = rsk_burge_sweep_serial(2, 3, 2);
    CHECK(par.inputs == ser.inputs);
    CHECK(par.checks == ser.checks);
    CHECK(par.failures == ser.failures);
    CHECK(par.pass());
}

TEST_CASE("verify_eg_params agrees across drivers") {
    const auto par = verify_eg_params(5);
    const auto ser = verify_eg_params_serial(5);
    CHECK(par.checked == ser.checked);
    CHECK(par.failures == ser.failures);
    CHECK(par.pass == ser.pass);
}

#ifdef _OPENMP
TEST_CASE("results do not depend on the thread count") {
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto one = sample_batch(Model::osp, 6, 5000, 31);
    const auto tally_one = build_tally(4, TermSide::networks);
    omp_set_num_threads(saved);
    const auto many = sample_batch(Model::osp, 6, 5000, 31);
    const auto tally_many = build_tally(4, TermSide::networks);
    CHECK(one.rows == many.rows);
    CHECK(tally_one.groups.size() == tally_many.groups.size());
    for (const auto& [perm, counts] : tally_one.groups) CHECK(tally_many.groups.at(perm) == counts);
}
#endif
