// Times the OpenMP kernels against their serial references.

#include <chrono>
#include <cstdio>
#include <string>

#include "oswap/edelman_greene.hpp"
#include "oswap/genfun.hpp"
#include "oswap/processes.hpp"
#include "oswap/rsk_burge.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace oswap;

namespace {

template <typename F>
double time_of(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double serial, double parallel) {
    std::printf("%-36s %9.3fs %9.3fs %7.2fx\n", name.c_str(), serial, parallel,
                serial / parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif
    std::printf("%-36s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

    row("enumerate syt, order 6",
        time_of([] { enumerate_syt(staircase(6)); }),
        time_of([] { enumerate_syt_parallel(staircase(6)); }));

    row("enumerate networks, order 6",
        time_of([] { enumerate_sorting_networks(6); }),
        time_of([] { enumerate_sorting_networks_parallel(6); }));

    row("factor tally, networks order 6",
        time_of([] { build_tally_serial(6, TermSide::networks); }),
        time_of([] { build_tally(6, TermSide::networks); }));

    row("canonical accumulation, order 5",
        time_of([] { accumulate_F_serial(5); }),
        time_of([] { accumulate_F(5); }));

    row("osp batch, order 8, 1e5 replicas",
        time_of([] { sample_batch_serial(Model::osp, 8, 100000, 1); }),
        time_of([] { sample_batch(Model::osp, 8, 100000, 1); }));

    row("lpp batch, order 8, 1e5 replicas",
        time_of([] { sample_batch_serial(Model::lpp, 8, 100000, 2); }),
        time_of([] { sample_batch(Model::lpp, 8, 100000, 2); }));

    row("rsk/burge sweep, 3x3 box",
        time_of([] { rsk_burge_sweep_serial(3, 3, 2); }),
        time_of([] { rsk_burge_sweep(3, 3, 2); }));

    return 0;
}
