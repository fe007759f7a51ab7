#include "oswap/edelman_greene.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oswap {

std::vector<Cell> evacuation_path(const StandardTableau& t) {
    std::vector<Cell> path;
    Cell cur = t.cell_of(t.entries());
    path.push_back(cur);
    while (!(cur.row == 1 && cur.col == 1)) {
        const int up = cur.row > 1 ? t.at(cur.row - 1, cur.col) : 0;
        const int left = cur.col > 1 ? t.at(cur.row, cur.col - 1) : 0;
        cur = (up > left) ? Cell{cur.row - 1, cur.col} : Cell{cur.row, cur.col - 1};
        path.push_back(cur);
    }
    return path;
}

StandardTableau schuetzenberger_step(const StandardTableau& t) {
    const auto path = evacuation_path(t);
    TableauT<int> next(t.shape());
    for (int i = 1; i <= t.shape().row_count(); ++i)
        for (int j = 1; j <= t.shape().row_len(i); ++j) next.at(i, j) = t.at(i, j);
    for (std::size_t m = 0; m + 1 < path.size(); ++m)
        next.at(path[m].row, path[m].col) = t.at(path[m + 1].row, path[m + 1].col);
    next.at(path.back().row, path.back().col) = 0;
    std::vector<int> vals = next.values();
    for (int& v : vals) ++v;
    return StandardTableau(t.shape(), std::move(vals));
}

SortingNetwork eg_map(const StandardTableau& t) {
    const int n = t.staircase_order();
    const int total = t.entries();
    TableauT<int> vals(t.shape());
    std::vector<Cell> pos(total + 1);
    for (int i = 1; i <= t.shape().row_count(); ++i)
        for (int j = 1; j <= t.shape().row_len(i); ++j) {
            const int v = t.at(i, j);
            vals.at(i, j) = v;
            pos[v] = {i, j};
        }

    std::vector<int> jmax;
    jmax.reserve(total);
    for (int label = total; label >= 1; --label) {
        Cell cur = pos[label];
        jmax.push_back(cur.col);
        while (true) {
            const int up = cur.row > 1 ? vals.at(cur.row - 1, cur.col) : 0;
            const int left = cur.col > 1 ? vals.at(cur.row, cur.col - 1) : 0;
            if (up == 0 && left == 0) {
                vals.at(cur.row, cur.col) = 0;
                break;
            }
            const Cell nxt = (up > left) ? Cell{cur.row - 1, cur.col} : Cell{cur.row, cur.col - 1};
            const int v = vals.at(nxt.row, nxt.col);
            vals.at(cur.row, cur.col) = v;
            pos[v] = cur;
            cur = nxt;
        }
    }
    std::reverse(jmax.begin(), jmax.end());
    return SortingNetwork{n, std::move(jmax)};
}

SortingNetwork eg_map_by_iteration(const StandardTableau& t) {
    const int n = t.staircase_order();
    const int total = t.entries();
    std::vector<int> jmax;
    jmax.reserve(total);
    StandardTableau cur = t;
    for (int i = 0; i < total; ++i) {
        jmax.push_back(cur.cell_of(total).col);
        cur = schuetzenberger_step(cur);
    }
    std::reverse(jmax.begin(), jmax.end());
    return SortingNetwork{n, std::move(jmax)};
}

EgIndex::EgIndex(int n) : n_(n) {
    if (n < 2 || n > 6) throw std::invalid_argument("EgIndex supports 2 <= n <= 6");
    tableaux_ = enumerate_syt(staircase(n));
    by_network_.reserve(tableaux_.size() * 2);
    for (std::size_t i = 0; i < tableaux_.size(); ++i) {
        const auto s = eg_map(tableaux_[i]);
        if (!by_network_.emplace(s.key(), i).second)
            throw std::runtime_error("EG image collision: enumeration or eg_map bug");
    }
}

const StandardTableau& EgIndex::invert(const SortingNetwork& s) const {
    if (s.order != n_) throw std::invalid_argument("order mismatch");
    auto it = by_network_.find(s.key());
    if (it == by_network_.end())
        throw std::runtime_error("network not in EG image: enumeration or eg_map bug");
    return tableaux_[it->second];
}

StandardTableau eg_inverse_search(const SortingNetwork& s) {
    EgIndex idx(s.order);
    return idx.invert(s);
}

namespace {

EgParamsReport run_eg_params(int n, bool parallel) {
    if (n < 2 || n > 6) throw std::invalid_argument("verify_eg_params supports 2 <= n <= 6");
    const auto tableaux = enumerate_syt(staircase(n));
    EgParamsReport rep;
    rep.n = n;
    rep.checked = static_cast<long long>(tableaux.size());

    long long failures = 0;
    std::vector<std::string> examples;

#pragma omp parallel for schedule(dynamic, 256) reduction(+ : failures) if (parallel)
    for (std::size_t i = 0; i < tableaux.size(); ++i) {
        const auto& t = tableaux[i];
        const auto s = eg_map(t);
        bool ok = is_sorting_network(s);
        if (ok) {
            std::vector<int> cor, last(n - 1, 0);
            for (int k = 1; k <= n - 1; ++k) cor.push_back(t.at(n - k, k));
            for (std::size_t j = 0; j < s.swaps.size(); ++j)
                last[s.swaps[j] - 1] = static_cast<int>(j) + 1;
            ok = (last == cor) && (rank_permutation(last) == rank_permutation(cor));
        }
        if (!ok) {
            ++failures;
#pragma omp critical
            if (examples.size() < 8)
                examples.push_back(t.values_csv() + " -> " + s.to_string());
        }
    }
    rep.failures = failures;
    rep.failure_examples = std::move(examples);
    rep.pass = (failures == 0);
    return rep;
}

}  // namespace

EgParamsReport verify_eg_params(int n) { return run_eg_params(n, true); }
EgParamsReport verify_eg_params_serial(int n) { return run_eg_params(n, false); }

}  // namespace oswap
