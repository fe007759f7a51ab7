#include "oswap/rsk_burge.hpp"

#include <climits>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oswap {

namespace {

bool is_border_box(const YoungDiagram& sh, Cell b) {
    return sh.contains(b.row, b.col) && !sh.contains(b.row + 1, b.col + 1);
}

std::uint64_t pack_state(const std::vector<int>& cols) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < cols.size(); ++i)
        k |= static_cast<std::uint64_t>(cols[i]) << (4 * i);
    return k;
}

}  // namespace

long long greene_max(const IntTableau& x, Cell box, int k, PathOrientation orient) {
    const int m = box.row, n = box.col;
    if (!is_border_box(x.shape(), box)) throw std::invalid_argument("box not on the border strip");
    if (k < 1 || k > std::min(m, n)) throw std::invalid_argument("k out of range");
    if (n > 15) throw std::invalid_argument("state packing supports n <= 15");

    // rows in processing order; the Burge orientation walks the rectangle upward
    std::vector<int> rows(m);
    std::iota(rows.begin(), rows.end(), 1);
    if (orient == PathOrientation::burge) std::reverse(rows.begin(), rows.end());

    // prefix sums per processed row
    auto row_prefix = [&](int r) {
        std::vector<long long> S(n + 1, 0);
        for (int c = 1; c <= n; ++c) S[c] = S[c - 1] + x.at(r, c);
        return S;
    };

    std::unordered_map<std::uint64_t, long long> cur;
    {
        // virtual previous exits (1..k): forces entry columns 1..k in the first row
        std::vector<int> e(k);
        std::iota(e.begin(), e.end(), 1);
        cur.emplace(pack_state(e), 0);
    }

    std::vector<int> e(k), g(k);
    for (int ri = 0; ri < m; ++ri) {
        const auto S = row_prefix(rows[ri]);
        std::unordered_map<std::uint64_t, long long> next;
        next.reserve(cur.size() * 2);
        for (const auto& [state, value] : cur) {
            for (int i = 0; i < k; ++i) e[i] = static_cast<int>((state >> (4 * i)) & 0xf);
            // enumerate exits g with e_i <= g_i and g_i < e_{i+1} (segment disjointness)
            std::function<void(int, long long)> rec = [&](int i, long long gain) {
                if (i == k) {
                    const auto key = pack_state(g);
                    auto [it, inserted] = next.emplace(key, value + gain);
                    if (!inserted && it->second < value + gain) it->second = value + gain;
                    return;
                }
                const int hi = (i + 1 < k) ? e[i + 1] - 1 : n;
                for (int c = e[i]; c <= hi; ++c) {
                    g[i] = c;
                    rec(i + 1, gain + S[c] - S[e[i] - 1]);
                }
            };
            rec(0, 0);
        }
        cur = std::move(next);
    }

    std::vector<int> target(k);
    for (int i = 0; i < k; ++i) target[i] = n - k + i + 1;
    const auto it = cur.find(pack_state(target));
    if (it == cur.end()) throw std::logic_error("no admissible path family");
    return it->second;
}

long long greene_max_bruteforce(const IntTableau& x, Cell box, int k, PathOrientation orient) {
    const int m = box.row, n = box.col;
    if (m > 4 || n > 4) throw std::invalid_argument("brute force capped at 4x4 boxes");
    if (!is_border_box(x.shape(), box)) throw std::invalid_argument("box not on the border strip");
    if (k < 1 || k > std::min(m, n)) throw std::invalid_argument("k out of range");

    struct PathSet {
        std::uint32_t mask;
        long long weight;
    };
    auto cell_bit = [&](int r, int c) { return static_cast<std::uint32_t>(1) << ((r - 1) * n + (c - 1)); };

    // all directed paths from start to end, as cell masks
    auto paths_between = [&](Cell a, Cell b) {
        std::vector<PathSet> out;
        const int dr = (orient == PathOrientation::rsk) ? 1 : -1;
        std::function<void(Cell, std::uint32_t, long long)> rec = [&](Cell c, std::uint32_t mask,
                                                                      long long w) {
            mask |= cell_bit(c.row, c.col);
            w += x.at(c.row, c.col);
            if (c == b) {
                out.push_back({mask, w});
                return;
            }
            if (c.row != b.row) rec({c.row + dr, c.col}, mask, w);
            if (c.col < b.col) rec({c.row, c.col + 1}, mask, w);
        };
        rec(a, 0, 0);
        return out;
    };

    std::vector<std::vector<PathSet>> options(k);
    for (int i = 1; i <= k; ++i) {
        const Cell a = (orient == PathOrientation::rsk) ? Cell{1, i} : Cell{m, i};
        const Cell b = (orient == PathOrientation::rsk) ? Cell{m, n - k + i} : Cell{1, n - k + i};
        options[i - 1] = paths_between(a, b);
    }

    long long best = LLONG_MIN;
    std::function<void(int, std::uint32_t, long long)> pick = [&](int i, std::uint32_t used,
                                                                  long long w) {
        if (i == k) {
            best = std::max(best, w);
            return;
        }
        for (const auto& p : options[i]) {
            if (p.mask & used) continue;
            pick(i + 1, used | p.mask, w + p.weight);
        }
    };
    pick(0, 0, 0);
    if (best == LLONG_MIN) throw std::logic_error("no disjoint path family");
    return best;
}

namespace {

IntTableau greene_image(const IntTableau& x, PathOrientation orient) {
    IntTableau out(x.shape());
    for (const Cell b : border_strip(x.shape())) {
        const int kmax = std::min(b.row, b.col);
        long long prev = 0;
        for (int k = 1; k <= kmax; ++k) {
            const long long cur = greene_max(x, b, k, orient);
            out.at(b.row - k + 1, b.col - k + 1) = cur - prev;
            prev = cur;
        }
    }
    return out;
}

}  // namespace

IntTableau rsk(const IntTableau& x) { return greene_image(x, PathOrientation::rsk); }
IntTableau burge(const IntTableau& x) { return greene_image(x, PathOrientation::burge); }

ClassicalRsk classical_rsk_rectangle(const IntTableau& x) {
    const auto& sh = x.shape();
    const int m = sh.row_count();
    const int n = sh.row_len(1);
    for (int i = 1; i <= m; ++i)
        if (sh.row_len(i) != n) throw std::invalid_argument("shape must be rectangular");

    ClassicalRsk out;
    auto& P = out.P;
    auto& Q = out.Q;

    auto insert = [&](int v) {
        int row = 0;
        int carry = v;
        while (true) {
            if (row == static_cast<int>(P.size())) {
                P.push_back({carry});
                return Cell{row + 1, 1};
            }
            auto& R = P[row];
            auto it = std::upper_bound(R.begin(), R.end(), carry);
            if (it == R.end()) {
                R.push_back(carry);
                return Cell{row + 1, static_cast<int>(R.size())};
            }
            std::swap(*it, carry);
            ++row;
        }
    };

    std::vector<std::vector<int>> shape_after_row;  // ascending chain mu^1..mu^m
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j)
            for (long long t = 0; t < x.at(i, j); ++t) {
                const Cell c = insert(j);
                if (c.row > static_cast<int>(Q.size())) Q.push_back({});
                Q[c.row - 1].push_back(i);
            }
        std::vector<int> mu;
        for (const auto& r : P) mu.push_back(static_cast<int>(r.size()));
        shape_after_row.push_back(std::move(mu));
    }

    // descending chain mu^{m+j} = shape of P-entries <= n-j
    std::vector<std::vector<int>> shape_after_col;  // j = 1..n-1
    for (int j = 1; j < n; ++j) {
        std::vector<int> mu;
        for (const auto& r : P) {
            const int len = static_cast<int>(std::upper_bound(r.begin(), r.end(), n - j) - r.begin());
            if (len == 0) break;
            mu.push_back(len);
        }
        shape_after_col.push_back(std::move(mu));
    }

    out.reencoded = IntTableau(sh);
    auto set_diag = [&](Cell b, const std::vector<int>& mu) {
        const int p = std::min(b.row, b.col);
        for (int t = 1; t <= p; ++t)
            out.reencoded.at(b.row - t + 1, b.col - t + 1) =
                t <= static_cast<int>(mu.size()) ? mu[t - 1] : 0;
    };
    for (int i = 1; i <= m; ++i) set_diag({i, n}, shape_after_row[i - 1]);
    for (int j = 1; j < n; ++j) set_diag({m, n - j}, shape_after_col[j - 1]);
    return out;
}

Rational BorderLaw::total_mass() const {
    Rational s = 0;
    for (const auto& [v, q] : prob) s += q;
    return s;
}

BorderLaw border_distribution_exact(const YoungDiagram& shape, const Rational& p, int cap,
                                    WhichTableau which, WeightLaw law) {
    if (shape.size() > 9) throw std::invalid_argument("oracle capped at 9 cells");
    if (cap > 6) throw std::invalid_argument("oracle capped at max value 6");

    BorderLaw out;
    out.border = border_strip(shape);
    const auto cells = shape.cells();
    const int ncells = static_cast<int>(cells.size());
    const long long maxval = (law == WeightLaw::bernoulli01) ? 1 : cap;

    // weight of an assignment: geometric p(1-p)^v per cell, or uniform 1/2 per cell
    std::vector<Rational> geo_pow(static_cast<std::size_t>(ncells) * maxval + 1);
    geo_pow[0] = 1;
    for (std::size_t s = 1; s < geo_pow.size(); ++s) geo_pow[s] = geo_pow[s - 1] * (1 - p);
    Rational bernoulli_w = 1;
    for (int i = 0; i < ncells; ++i) bernoulli_w /= 2;
    Rational geo_scale = 1;
    for (int i = 0; i < ncells; ++i) geo_scale *= p;

    IntTableau x(shape);
    std::vector<long long> v(ncells, 0);
    while (true) {
        for (int i = 0; i < ncells; ++i) x.at(cells[i].row, cells[i].col) = v[i];
        const auto L = (which == WhichTableau::lpp) ? lpp_tableau(x) : dual_lpp_tableau(x);
        std::vector<long long> border_vals;
        border_vals.reserve(out.border.size());
        long long mx = 0;
        for (const Cell c : out.border) {
            border_vals.push_back(L.at(c.row, c.col));
            mx = std::max(mx, border_vals.back());
        }
        if (mx <= cap) {
            const long long total = std::accumulate(v.begin(), v.end(), 0LL);
            const Rational w =
                (law == WeightLaw::bernoulli01) ? bernoulli_w : geo_scale * geo_pow[total];
            out.prob[border_vals] += w;
        }
        int i = 0;
        while (i < ncells && ++v[i] > maxval) v[i++] = 0;
        if (i == ncells) break;
    }
    return out;
}

namespace {

std::vector<YoungDiagram> shapes_in_box(int max_rows, int max_cols) {
    std::vector<YoungDiagram> out;
    std::vector<int> rows;
    std::function<void(int)> gen = [&](int cap) {
        if (!rows.empty()) out.push_back(YoungDiagram(rows));
        if (static_cast<int>(rows.size()) == max_rows) return;
        for (int len = cap; len >= 1; --len) {
            rows.push_back(len);
            gen(len);
            rows.pop_back();
        }
    };
    gen(max_cols);
    return out;
}

std::uint64_t pack_output(const IntTableau& t) {
    // values fit in 6 bits for the sweep sizes (<= 9 cells, entries <= 2*9)
    std::uint64_t k = 0;
    int shift = 0;
    for (long long v : t.values()) {
        k |= static_cast<std::uint64_t>(v) << shift;
        shift += 6;
    }
    return k;
}

SweepReport sweep_impl(int max_rows, int max_cols, int max_entry, bool parallel) {
    if (max_rows * max_cols > 10) throw std::invalid_argument("sweep capped at 10 cells");
    SweepReport rep;
    for (const auto& shape : shapes_in_box(max_rows, max_cols)) {
        const auto cells = shape.cells();
        const int ncells = static_cast<int>(cells.size());
        long long count = 1;
        for (int i = 0; i < ncells; ++i) count *= (max_entry + 1);
        rep.inputs += count;

        const auto border = border_strip(shape);
        const auto omega = omega_weights(shape);
        std::vector<std::uint64_t> rsk_keys(count), burge_keys(count);
        long long failures = 0, checks = 0;
        std::vector<std::string> examples;

#pragma omp parallel for schedule(dynamic, 64) reduction(+ : failures, checks) if (parallel)
        for (long long idx = 0; idx < count; ++idx) {
            IntTableau x(shape);
            long long rem = idx, total = 0;
            for (int i = 0; i < ncells; ++i) {
                const long long val = rem % (max_entry + 1);
                rem /= (max_entry + 1);
                x.at(cells[i].row, cells[i].col) = val;
                total += val;
            }
            const auto r = rsk(x);
            const auto b = burge(x);
            rsk_keys[idx] = pack_output(r);
            burge_keys[idx] = pack_output(b);
            const auto L = lpp_tableau(x);
            const auto Ls = dual_lpp_tableau(x);

            bool ok = is_interlacing(r) && is_interlacing(b);
            ++checks;

            // k=1 Greene values are the LPP and dual LPP tableaux on the border
            for (const Cell c : border) {
                ok = ok && r.at(c.row, c.col) == L.at(c.row, c.col);
                ok = ok && b.at(c.row, c.col) == Ls.at(c.row, c.col);
            }
            ++checks;

            // oracle agreement for every admissible (box, k)
            for (const Cell c : border) {
                const int kmax = std::min(c.row, c.col);
                long long rsum = 0, bsum = 0;
                for (int k = 1; k <= kmax; ++k) {
                    const long long gr = greene_max(x, c, k, PathOrientation::rsk);
                    const long long gb = greene_max(x, c, k, PathOrientation::burge);
                    ok = ok && gr == greene_max_bruteforce(x, c, k, PathOrientation::rsk);
                    ok = ok && gb == greene_max_bruteforce(x, c, k, PathOrientation::burge);
                    rsum += r.at(c.row - k + 1, c.col - k + 1);
                    bsum += b.at(c.row - k + 1, c.col - k + 1);
                    ok = ok && rsum == gr && bsum == gb;
                }
                // rectangular sum at k = min(m,n)
                long long rect = 0;
                for (int i = 1; i <= c.row; ++i)
                    for (int j = 1; j <= c.col; ++j) rect += x.at(i, j);
                ok = ok && greene_max(x, c, kmax, PathOrientation::rsk) == rect &&
                     greene_max(x, c, kmax, PathOrientation::burge) == rect;
            }
            ++checks;

            // omega identity
            long long wr = 0, wb = 0;
            for (const Cell c : cells) {
                wr += omega.at(c.row, c.col) * r.at(c.row, c.col);
                wb += omega.at(c.row, c.col) * b.at(c.row, c.col);
            }
            ok = ok && wr == total && wb == total;
            ++checks;

            // shift covariance
            for (long long kk : {1LL, 2LL}) {
                IntTableau xs(shape);
                for (const Cell c : cells) xs.at(c.row, c.col) = x.at(c.row, c.col) + kk;
                const auto rs = rsk(xs);
                const auto bs = burge(xs);
                for (const Cell c : cells) {
                    const long long off = (c.row + c.col - 1) * kk;
                    ok = ok && rs.at(c.row, c.col) == r.at(c.row, c.col) + off;
                    ok = ok && bs.at(c.row, c.col) == b.at(c.row, c.col) + off;
                }
            }
            ++checks;

            // classical degeneration on rectangles
            if (shape.rows().front() == shape.rows().back()) {
                const auto cl = classical_rsk_rectangle(x);
                for (const Cell c : cells)
                    ok = ok && cl.reencoded.at(c.row, c.col) == r.at(c.row, c.col);
                ++checks;
            }

            if (!ok) {
                ++failures;
#pragma omp critical
                if (examples.size() < 4) examples.push_back(shape.to_string() + " idx " + std::to_string(idx));
            }
        }

        // injectivity per shape
        for (auto* keys : {&rsk_keys, &burge_keys}) {
            auto sorted = *keys;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                ++failures;
                examples.push_back("collision on shape " + shape.to_string());
            }
            ++checks;
        }

        rep.failures += failures;
        rep.checks += checks;
        for (auto& e : examples)
            if (rep.failure_examples.size() < 8) rep.failure_examples.push_back(std::move(e));
    }
    return rep;
}

}  // namespace

SweepReport rsk_burge_sweep(int max_rows, int max_cols, int max_entry) {
    return sweep_impl(max_rows, max_cols, max_entry, true);
}
SweepReport rsk_burge_sweep_serial(int max_rows, int max_cols, int max_entry) {
    return sweep_impl(max_rows, max_cols, max_entry, false);
}

}  // namespace oswap
