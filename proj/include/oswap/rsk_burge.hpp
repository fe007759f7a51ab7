#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "oswap/rational.hpp"
#include "oswap/young.hpp"

namespace oswap {

// L(1,1; i,j) for every cell: max-plus recursion with zero boundary.
template <typename T>
TableauT<T> lpp_tableau(const TableauT<T>& x) {
    const auto& sh = x.shape();
    TableauT<T> L(sh);
    for (int i = 1; i <= sh.row_count(); ++i)
        for (int j = 1; j <= sh.row_len(i); ++j) {
            const T up = i > 1 ? L.at(i - 1, j) : T{};
            const T left = j > 1 ? L.at(i, j - 1) : T{};
            L.at(i, j) = std::max(up, left) + x.at(i, j);
        }
    return L;
}

// L*(i,j) = L(i,1; 1,j): one upward pass per start row.
template <typename T>
TableauT<T> dual_lpp_tableau(const TableauT<T>& x) {
    const auto& sh = x.shape();
    TableauT<T> Ls(sh);
    for (int i = 1; i <= sh.row_count(); ++i) {
        std::vector<std::vector<T>> g(i + 2);
        for (int r = i; r >= 1; --r) {
            g[r].assign(sh.row_len(r) + 1, T{});
            for (int c = 1; c <= sh.row_len(r); ++c) {
                const bool below = r < i && c <= sh.row_len(r + 1);
                const bool left = c > 1;
                T best{};
                if (below && left)
                    best = std::max(g[r + 1][c], g[r][c - 1]);
                else if (below)
                    best = g[r + 1][c];
                else if (left)
                    best = g[r][c - 1];
                g[r][c] = best + x.at(r, c);
            }
        }
        for (int j = 1; j <= sh.row_len(i); ++j) Ls.at(i, j) = g[1][j];
    }
    return Ls;
}

enum class PathOrientation { rsk, burge };

// Maximal total weight of k disjoint non-intersecting directed paths with the
// prescribed endpoints at border box (m,n): row-transfer dynamic program whose
// state is the strictly increasing tuple of per-path exit columns.
long long greene_max(const IntTableau& x, Cell box, int k, PathOrientation orient);

// Exhaustive path-family enumeration; requires box.row, box.col <= 4.
long long greene_max_bruteforce(const IntTableau& x, Cell box, int k, PathOrientation orient);

// Bijections characterized by the Greene maxima: diagonal partial sums of the
// output equal the k-path maxima at each border box.
IntTableau rsk(const IntTableau& x);
IntTableau burge(const IntTableau& x);

struct ClassicalRsk {
    std::vector<std::vector<int>> P, Q;  // semistandard insertion/recording tableaux
    IntTableau reencoded;                // diagonal re-encoding; equals rsk(x)
};
ClassicalRsk classical_rsk_rectangle(const IntTableau& x);

enum class WeightLaw { geometric, bernoulli01 };
enum class WhichTableau { lpp, dual };

struct BorderLaw {
    std::vector<Cell> border;                           // border_strip order
    std::map<std::vector<long long>, Rational> prob;    // border values -> exact probability
    Rational total_mass() const;
};

// Exact law of the border-strip restriction of L or L* under i.i.d. integer
// weights; only vectors with max <= cap are reported (they are complete since
// L_{i,j} >= x_{i,j} pointwise).
BorderLaw border_distribution_exact(const YoungDiagram& shape, const Rational& p, int cap,
                                    WhichTableau which, WeightLaw law = WeightLaw::geometric);

// Exhaustive verification sweep over all shapes within a bounding box and all
// integer tableaux with entries 0..max_entry: oracle agreement, interlacing,
// rectangular sums, the omega identity, shift covariance, injectivity, and the
// classical degeneration on rectangles.
struct SweepReport {
    long long inputs = 0;
    long long checks = 0;
    long long failures = 0;
    std::vector<std::string> failure_examples;
    bool pass() const { return failures == 0; }
};
SweepReport rsk_burge_sweep(int max_rows, int max_cols, int max_entry);
SweepReport rsk_burge_sweep_serial(int max_rows, int max_cols, int max_entry);

}  // namespace oswap
