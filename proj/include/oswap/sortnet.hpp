#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "oswap/perm.hpp"
#include "oswap/young.hpp"

namespace oswap {

// Reduced word for the reverse permutation: swaps s_j in 1..n-1, N = n(n-1)/2.
struct SortingNetwork {
    int order = 0;
    std::vector<int> swaps;

    std::string to_string() const;
    static SortingNetwork parse(const std::string& csv);  // order inferred from length

    // 3 bits per swap; requires N <= 21 (order <= 7).
    std::uint64_t key() const;

    friend bool operator==(const SortingNetwork&, const SortingNetwork&) = default;
    friend auto operator<=>(const SortingNetwork&, const SortingNetwork&) = default;
};

// Every prefix swap must act on an ascent (the word is reduced) and the
// full word must sort id into the reversal.
bool is_sorting_network(const SortingNetwork& s);

// State after the first k swaps, with swaps acting on positions.
Permutation apply_prefix(const SortingNetwork& s, int k);

void for_each_sorting_network(int n, const std::function<void(const SortingNetwork&)>& fn);
std::vector<SortingNetwork> enumerate_sorting_networks(int n);
std::vector<SortingNetwork> enumerate_sorting_networks_parallel(int n);

struct NetworkParams {
    std::vector<int> last;     // last(k) = max index j with s_j = k
    Permutation pi;            // rank order of last
    std::vector<int> fin_bar;  // increasing rearrangement, fin_bar[0] = 0
    std::vector<int> deg;      // ascent counts along the walk, index 0..N-1
    GeneratingFactor factor;
};
NetworkParams network_params(const SortingNetwork& s);

// Wire trajectories for a wiring-diagram rendering: for each label w,
// the sequence of (step, position) pairs, step = 0..N.
std::vector<std::vector<std::pair<int, int>>> wiring_diagram(const SortingNetwork& s);

}  // namespace oswap
