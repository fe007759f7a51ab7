#include "oswap/sortnet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oswap {

std::string SortingNetwork::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < swaps.size(); ++i) {
        if (i) os << ',';
        os << swaps[i];
    }
    return os.str();
}

SortingNetwork SortingNetwork::parse(const std::string& csv) {
    SortingNetwork s;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) s.swaps.push_back(std::stoi(tok));
    const std::size_t N = s.swaps.size();
    const int n = static_cast<int>((1 + std::lround(std::sqrt(1.0 + 8.0 * static_cast<double>(N)))) / 2);
    if (static_cast<std::size_t>(n) * (n - 1) / 2 != N)
        throw std::invalid_argument("swap count is not a triangular number");
    s.order = n;
    return s;
}

std::uint64_t SortingNetwork::key() const {
    if (swaps.size() > 21) throw std::invalid_argument("key() requires N <= 21");
    std::uint64_t k = 0;
    int shift = 0;
    for (int v : swaps) {
        k |= static_cast<std::uint64_t>(v) << shift;
        shift += 3;
    }
    return k;
}

bool is_sorting_network(const SortingNetwork& s) {
    const int n = s.order;
    if (n < 2 || s.swaps.size() != static_cast<std::size_t>(n) * (n - 1) / 2) return false;
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    for (int v : s.swaps) {
        if (v < 1 || v >= n) return false;
        if (w[v - 1] > w[v]) return false;  // swap would decrease inversions
        std::swap(w[v - 1], w[v]);
    }
    for (int i = 0; i < n; ++i)
        if (w[i] != n - i) return false;
    return true;
}

Permutation apply_prefix(const SortingNetwork& s, int k) {
    if (k < 0 || k > static_cast<int>(s.swaps.size()))
        throw std::out_of_range("prefix length out of range");
    std::vector<int> w(s.order);
    std::iota(w.begin(), w.end(), 1);
    for (int j = 0; j < k; ++j) std::swap(w[s.swaps[j] - 1], w[s.swaps[j]]);
    return Permutation(std::move(w));
}

namespace {

struct NetDfs {
    int n = 0;
    int total = 0;
    std::vector<int> w;
    std::vector<int> swaps;
    const std::function<void(const SortingNetwork&)>* fn;

    void run(int depth) {
        if (depth == total) {
            (*fn)(SortingNetwork{n, swaps});
            return;
        }
        for (int k = 1; k < n; ++k) {
            if (w[k - 1] > w[k]) continue;
            std::swap(w[k - 1], w[k]);
            swaps.push_back(k);
            run(depth + 1);
            swaps.pop_back();
            std::swap(w[k - 1], w[k]);
        }
    }
};

}  // namespace

void for_each_sorting_network(int n, const std::function<void(const SortingNetwork&)>& fn) {
    if (n < 2) throw std::invalid_argument("order must be >= 2");
    NetDfs dfs;
    dfs.n = n;
    dfs.total = n * (n - 1) / 2;
    dfs.w.resize(n);
    std::iota(dfs.w.begin(), dfs.w.end(), 1);
    dfs.fn = &fn;
    dfs.run(0);
}

std::vector<SortingNetwork> enumerate_sorting_networks(int n) {
    std::vector<SortingNetwork> out;
    for_each_sorting_network(n, [&](const SortingNetwork& s) { out.push_back(s); });
    return out;
}

std::vector<SortingNetwork> enumerate_sorting_networks_parallel(int n) {
    if (n < 2) throw std::invalid_argument("order must be >= 2");
    const int total = n * (n - 1) / 2;
    const int depth = std::min(3, total);

    struct Prefix {
        std::vector<int> w;
        std::vector<int> swaps;
    };
    std::vector<Prefix> prefixes;
    {
        std::vector<int> w(n), swaps;
        std::iota(w.begin(), w.end(), 1);
        std::function<void(int)> gen = [&](int d) {
            if (d == depth) {
                prefixes.push_back({w, swaps});
                return;
            }
            for (int k = 1; k < n; ++k) {
                if (w[k - 1] > w[k]) continue;
                std::swap(w[k - 1], w[k]);
                swaps.push_back(k);
                gen(d + 1);
                swaps.pop_back();
                std::swap(w[k - 1], w[k]);
            }
        };
        gen(0);
    }

    std::vector<std::vector<SortingNetwork>> buckets(prefixes.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t p = 0; p < prefixes.size(); ++p) {
        std::function<void(const SortingNetwork&)> sink =
            [&](const SortingNetwork& s) { buckets[p].push_back(s); };
        NetDfs dfs{n, total, prefixes[p].w, prefixes[p].swaps, &sink};
        dfs.run(depth);
    }

    std::vector<SortingNetwork> out;
    for (auto& b : buckets)
        for (auto& s : b) out.push_back(std::move(s));
    return out;
}

NetworkParams network_params(const SortingNetwork& s) {
    const int n = s.order;
    const int total = n * (n - 1) / 2;
    if (!is_sorting_network(s)) throw std::invalid_argument("not a reduced word for the reversal");

    NetworkParams p;
    p.last.assign(n - 1, 0);
    p.deg.reserve(total);
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    auto ascent_count = [&]() {
        int a = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (w[i] < w[i + 1]) ++a;
        return a;
    };
    for (int j = 1; j <= total; ++j) {
        p.deg.push_back(ascent_count());
        const int k = s.swaps[j - 1];
        std::swap(w[k - 1], w[k]);
        p.last[k - 1] = j;
    }
    p.pi = rank_permutation(p.last);
    p.fin_bar.assign(1, 0);
    {
        auto sorted = p.last;
        std::sort(sorted.begin(), sorted.end());
        p.fin_bar.insert(p.fin_bar.end(), sorted.begin(), sorted.end());
    }
    p.factor = build_generating_factor(n - 1, p.fin_bar, p.deg);
    return p;
}

std::vector<std::vector<std::pair<int, int>>> wiring_diagram(const SortingNetwork& s) {
    const int n = s.order;
    std::vector<std::vector<std::pair<int, int>>> wires(n);
    std::vector<int> pos(n + 1);  // label -> position
    for (int v = 1; v <= n; ++v) {
        pos[v] = v;
        wires[v - 1].push_back({0, v});
    }
    for (std::size_t j = 0; j < s.swaps.size(); ++j) {
        const int k = s.swaps[j];
        int a = 0, b = 0;
        for (int v = 1; v <= n; ++v) {
            if (pos[v] == k) a = v;
            if (pos[v] == k + 1) b = v;
        }
        std::swap(pos[a], pos[b]);
        for (int v = 1; v <= n; ++v) wires[v - 1].push_back({static_cast<int>(j) + 1, pos[v]});
    }
    return wires;
}

}  // namespace oswap
