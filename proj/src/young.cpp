#include "oswap/young.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oswap {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0) throw std::invalid_argument("row lengths must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1]) throw std::invalid_argument("rows must weakly decrease");
    }
}

std::size_t YoungDiagram::size() const {
    return static_cast<std::size_t>(std::accumulate(rows_.begin(), rows_.end(), 0));
}

std::vector<Cell> YoungDiagram::cells() const {
    std::vector<Cell> out;
    out.reserve(size());
    for (int i = 1; i <= row_count(); ++i)
        for (int j = 1; j <= row_len(i); ++j) out.push_back({i, j});
    return out;
}

YoungDiagram YoungDiagram::conjugate() const {
    if (empty()) return {};
    std::vector<int> cols(rows_[0], 0);
    for (int i = 1; i <= row_count(); ++i)
        for (int j = 1; j <= row_len(i); ++j) ++cols[j - 1];
    return YoungDiagram(std::move(cols));
}

bool YoungDiagram::contains_diagram(const YoungDiagram& mu) const {
    if (mu.row_count() > row_count()) return false;
    for (int i = 1; i <= mu.row_count(); ++i)
        if (mu.row_len(i) > row_len(i)) return false;
    return true;
}

std::vector<Cell> YoungDiagram::addable_cells(const YoungDiagram& bound) const {
    std::vector<Cell> out;
    for (int i = 1; i <= row_count() + 1; ++i) {
        const int j = row_len(i) + 1;
        const bool shape_ok = (i == 1) || (row_len(i - 1) >= j);
        if (shape_ok && bound.contains(i, j)) out.push_back({i, j});
    }
    return out;
}

std::string YoungDiagram::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < row_count(); ++i) {
        if (i) os << ',';
        os << rows_[i];
    }
    return os.str();
}

YoungDiagram YoungDiagram::parse(const std::string& csv) {
    std::vector<int> rows;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) rows.push_back(std::stoi(tok));
    return YoungDiagram(std::move(rows));
}

StandardTableau::StandardTableau(YoungDiagram shape, std::vector<int> vals)
    : tab_(std::move(shape), std::move(vals)) {
    if (!is_standard()) throw std::invalid_argument("not a standard tableau");
}

bool StandardTableau::is_standard() const {
    const auto& sh = shape();
    const int n_entries = entries();
    std::vector<char> seen(static_cast<std::size_t>(n_entries) + 1, 0);
    for (int v : values()) {
        if (v < 1 || v > n_entries || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 1; i <= sh.row_count(); ++i)
        for (int j = 1; j <= sh.row_len(i); ++j) {
            if (j > 1 && tab_.at(i, j - 1) >= tab_.at(i, j)) return false;
            if (sh.contains(i - 1, j) && tab_.at(i - 1, j) >= tab_.at(i, j)) return false;
        }
    return true;
}

Cell StandardTableau::cell_of(int entry) const {
    const auto& sh = shape();
    for (int i = 1; i <= sh.row_count(); ++i)
        for (int j = 1; j <= sh.row_len(i); ++j)
            if (tab_.at(i, j) == entry) return {i, j};
    throw std::out_of_range("entry not present");
}

int StandardTableau::staircase_order() const {
    const int n = shape().row_count() + 1;
    if (shape() != staircase(n)) throw std::invalid_argument("shape is not a staircase");
    return n;
}

std::uint64_t StandardTableau::key() const {
    if (entries() > 15) throw std::invalid_argument("key() requires N <= 15");
    std::uint64_t k = 0;
    int shift = 0;
    for (int v : values()) {
        k |= static_cast<std::uint64_t>(v) << shift;
        shift += 4;
    }
    return k;
}

std::string StandardTableau::values_csv() const {
    std::ostringstream os;
    const auto& v = values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

StandardTableau StandardTableau::parse(const YoungDiagram& shape, const std::string& csv) {
    std::vector<int> vals;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) vals.push_back(std::stoi(tok));
    return StandardTableau(shape, std::move(vals));
}

YoungDiagram staircase(int n) {
    if (n < 2) throw std::invalid_argument("staircase order must be >= 2");
    std::vector<int> rows(n - 1);
    for (int i = 0; i < n - 1; ++i) rows[i] = n - 1 - i;
    return YoungDiagram(std::move(rows));
}

std::vector<Cell> border_strip(const YoungDiagram& shape) {
    std::vector<Cell> out;
    for (int i = 1; i <= shape.row_count(); ++i)
        for (int j = shape.row_len(i); j >= 1; --j) {
            if (!shape.contains(i + 1, j + 1)) out.push_back({i, j});
        }
    // Row-major with descending columns inside a row is exactly the
    // connected line-to-line walk from (1, lambda_1) to (rows, 1).
    return out;
}

std::vector<Cell> corners(const YoungDiagram& shape) {
    std::vector<Cell> out;
    for (int i = shape.row_count(); i >= 1; --i)
        if (shape.row_len(i) > shape.row_len(i + 1)) out.push_back({i, shape.row_len(i)});
    return out;
}

TableauT<int> omega_weights(const YoungDiagram& shape) {
    if (shape.empty()) return TableauT<int>(shape);
    const auto cs = corners(shape);  // ordered m_1 > m_2 > ... > m_l
    std::map<int, int> diag_weight;  // (col - row) -> weight
    for (std::size_t k = 0; k < cs.size(); ++k) {
        diag_weight[cs[k].col - cs[k].row] += 1;
        if (k > 0) diag_weight[cs[k - 1].col - cs[k].row] -= 1;
    }
    TableauT<int> w(shape, 0);
    for (int i = 1; i <= shape.row_count(); ++i)
        for (int j = 1; j <= shape.row_len(i); ++j) {
            auto it = diag_weight.find(j - i);
            w.at(i, j) = (it == diag_weight.end()) ? 0 : it->second;
        }
    return w;
}

namespace {

struct SytDfs {
    const YoungDiagram& bound;
    std::vector<int> mu;          // current sub-diagram row lengths
    std::vector<int> vals;        // row-major values of the full shape
    std::vector<int> offsets;     // row offsets in the full shape
    const std::function<void(const StandardTableau&)>* fn;

    void run(int entry, int total) {
        if (entry > total) {
            (*fn)(StandardTableau(bound, vals));
            return;
        }
        const int rows = static_cast<int>(mu.size());
        for (int i = 1; i <= rows + 1; ++i) {
            const int j = (i <= rows) ? mu[i - 1] + 1 : 1;
            const bool shape_ok = (i == 1) || (i <= rows + 1 && (i - 2 < rows ? mu[i - 2] : 0) >= j);
            if (!shape_ok || !bound.contains(i, j)) continue;
            if (i <= rows)
                ++mu[i - 1];
            else
                mu.push_back(1);
            vals[offsets[i - 1] + (j - 1)] = entry;
            run(entry + 1, total);
            if (j > 1)
                --mu[i - 1];
            else
                mu.pop_back();
        }
    }
};

std::vector<int> row_offsets(const YoungDiagram& shape) {
    std::vector<int> off(shape.row_count(), 0);
    int acc = 0;
    for (int i = 0; i < shape.row_count(); ++i) {
        off[i] = acc;
        acc += shape.rows()[i];
    }
    return off;
}

}  // namespace

void for_each_syt(const YoungDiagram& shape, const std::function<void(const StandardTableau&)>& fn) {
    const int total = static_cast<int>(shape.size());
    if (total == 0) return;
    SytDfs dfs{shape, {}, std::vector<int>(total, 0), row_offsets(shape), &fn};
    dfs.run(1, total);
}

std::vector<StandardTableau> enumerate_syt(const YoungDiagram& shape) {
    std::vector<StandardTableau> out;
    for_each_syt(shape, [&](const StandardTableau& t) { out.push_back(t); });
    return out;
}

std::vector<StandardTableau> enumerate_syt_parallel(const YoungDiagram& shape) {
    const int total = static_cast<int>(shape.size());
    const int depth = std::min(4, total);
    if (total == 0) return {};

    // Prefixes in DFS order; each bucket is completed independently and the
    // concatenation reproduces the serial enumeration order.
    struct Prefix {
        std::vector<int> mu;
        std::vector<int> vals;
    };
    std::vector<Prefix> prefixes;
    {
        std::vector<int> mu, vals(total, 0);
        auto off = row_offsets(shape);
        std::function<void(int)> gen = [&](int entry) {
            if (entry > depth) {
                prefixes.push_back({mu, vals});
                return;
            }
            const int rows = static_cast<int>(mu.size());
            for (int i = 1; i <= rows + 1; ++i) {
                const int j = (i <= rows) ? mu[i - 1] + 1 : 1;
                const bool shape_ok = (i == 1) || ((i - 2 < rows ? mu[i - 2] : 0) >= j);
                if (!shape_ok || !shape.contains(i, j)) continue;
                if (i <= rows)
                    ++mu[i - 1];
                else
                    mu.push_back(1);
                vals[off[i - 1] + (j - 1)] = entry;
                gen(entry + 1);
                vals[off[i - 1] + (j - 1)] = 0;
                if (j > 1)
                    --mu[i - 1];
                else
                    mu.pop_back();
            }
        };
        gen(1);
    }

    std::vector<std::vector<StandardTableau>> buckets(prefixes.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t p = 0; p < prefixes.size(); ++p) {
        std::function<void(const StandardTableau&)> sink =
            [&](const StandardTableau& t) { buckets[p].push_back(t); };
        SytDfs dfs{shape, prefixes[p].mu, prefixes[p].vals, row_offsets(shape), &sink};
        dfs.run(depth + 1, total);
    }

    std::vector<StandardTableau> out;
    out.reserve(shape.size());
    for (auto& b : buckets)
        for (auto& t : b) out.push_back(std::move(t));
    return out;
}

unsigned long long syt_count_hook(const YoungDiagram& shape) {
    const int total = static_cast<int>(shape.size());
    if (total > 33) throw std::invalid_argument("hook count supported up to 33 cells");
    const auto conj = shape.conjugate();
    unsigned __int128 num = 1, den = 1;
    for (int k = 2; k <= total; ++k) num *= static_cast<unsigned>(k);
    for (int i = 1; i <= shape.row_count(); ++i)
        for (int j = 1; j <= shape.row_len(i); ++j)
            den *= static_cast<unsigned>(shape.row_len(i) - j + conj.row_len(j) - i + 1);
    return static_cast<unsigned long long>(num / den);
}

GrowthSequence growth_sequence(const StandardTableau& t) {
    if (!t.is_standard()) throw std::invalid_argument("growth_sequence requires a standard tableau");
    GrowthSequence g;
    g.diagrams.push_back(YoungDiagram{});
    std::vector<int> mu;
    for (int entry = 1; entry <= t.entries(); ++entry) {
        const Cell c = t.cell_of(entry);
        if (c.row == static_cast<int>(mu.size()) + 1)
            mu.push_back(1);
        else
            ++mu[c.row - 1];
        g.diagrams.emplace_back(mu);
    }
    return g;
}

std::size_t GeneratingFactor::total_multiplicity() const {
    std::size_t n = 0;
    for (const auto& b : blocks)
        for (const auto& [d, m] : b) n += static_cast<std::size_t>(m);
    return n;
}

std::string GeneratingFactor::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 1; k <= nvars; ++k)
        for (const auto& [d, m] : blocks[k - 1]) {
            if (!first) os << ' ';
            first = false;
            os << "(x" << k << '+' << d << ")^" << m;
        }
    return os.str();
}

GeneratingFactor build_generating_factor(int nvars, const std::vector<int>& bar,
                                         const std::vector<int>& deg) {
    GeneratingFactor f;
    f.nvars = nvars;
    f.blocks.assign(nvars, {});
    for (int k = 1; k <= nvars; ++k)
        for (int j = bar[k - 1] + 1; j <= bar[k]; ++j) {
            const int d = deg[j - 1];  // the out-degree of the state before jump j
            if (d < 1 || d > nvars) throw std::invalid_argument("pole shift outside 1..n-1");
            ++f.blocks[k - 1][d];
        }
    if (f.total_multiplicity() != deg.size())
        throw std::invalid_argument("factor blocks do not cover all jumps");
    return f;
}

TableauParams tableau_params(const StandardTableau& t) {
    const int n = t.staircase_order();
    const int total = t.entries();
    TableauParams p;
    p.cor.reserve(n - 1);
    for (int k = 1; k <= n - 1; ++k) p.cor.push_back(t.at(n - k, k));
    p.sigma = rank_permutation(p.cor);
    p.diag_bar.assign(1, 0);
    {
        auto sorted = p.cor;
        std::sort(sorted.begin(), sorted.end());
        p.diag_bar.insert(p.diag_bar.end(), sorted.begin(), sorted.end());
    }
    // Replay the growth path, counting addable boxes inside the staircase.
    const auto& bound = t.shape();
    std::vector<Cell> cell_of(total + 1);
    for (int i = 1; i <= bound.row_count(); ++i)
        for (int j = 1; j <= bound.row_len(i); ++j) cell_of[t.at(i, j)] = {i, j};
    YoungDiagram mu;
    std::vector<int> mu_rows;
    p.deg.reserve(total);
    for (int k = 0; k < total; ++k) {
        p.deg.push_back(static_cast<int>(YoungDiagram(mu_rows).addable_cells(bound).size()));
        const Cell c = cell_of[k + 1];
        if (c.row == static_cast<int>(mu_rows.size()) + 1)
            mu_rows.push_back(1);
        else
            ++mu_rows[c.row - 1];
    }
    p.factor = build_generating_factor(n - 1, p.diag_bar, p.deg);
    return p;
}

}  // namespace oswap
