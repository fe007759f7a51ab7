#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "oswap/young.hpp"

using namespace oswap;

namespace {

// Known product formula for the staircase tableau count: N! / (1^(n-1) 3^(n-2) ... (2n-3)^1).
unsigned long long staircase_count_formula(int n) {
    const int N = n * (n - 1) / 2;
    unsigned long long num = 1;
    for (int k = 2; k <= N; ++k) num *= static_cast<unsigned long long>(k);
    unsigned long long den = 1;
    for (int i = 1; i <= n - 1; ++i)
        for (int e = 0; e < n - i; ++e) den *= static_cast<unsigned long long>(2 * i - 1);
    return num / den;
}

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

}  // namespace

TEST_CASE("staircase shapes") {
    CHECK(staircase(2).rows() == std::vector<int>{1});
    CHECK(staircase(4).rows() == std::vector<int>{3, 2, 1});
    CHECK(staircase(6).rows() == std::vector<int>{5, 4, 3, 2, 1});
    CHECK(staircase(6).size() == 15);
    CHECK_THROWS_AS(staircase(1), std::invalid_argument);
}

TEST_CASE("young diagram basics") {
    CHECK_THROWS_AS(YoungDiagram({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(YoungDiagram({2, 0}), std::invalid_argument);
    const YoungDiagram d({4, 3, 3, 3, 1});
    CHECK(d.size() == 14);
    CHECK(d.contains(4, 3));
    CHECK_FALSE(d.contains(5, 2));
    CHECK(d.conjugate().rows() == std::vector<int>{5, 4, 4, 1});
    CHECK(YoungDiagram::parse("4,3,3,3,1") == d);
    CHECK(d.to_string() == "4,3,3,3,1");
    // rectangle closure at any contained cell
    for (const Cell c : d.cells())
        for (int a = 1; a <= c.row; ++a)
            for (int b = 1; b <= c.col; ++b) CHECK(d.contains(a, b));
}

TEST_CASE("border strip") {
    const std::vector<Cell> expect{{1, 4}, {1, 3}, {2, 3}, {3, 3}, {4, 3}, {4, 2}, {4, 1}, {5, 1}};
    CHECK(border_strip(YoungDiagram({4, 3, 3, 3, 1})) == expect);
    CHECK(border_strip(YoungDiagram({1})) == std::vector<Cell>{{1, 1}});
    CHECK(border_strip(YoungDiagram({2, 2})) == std::vector<Cell>{{1, 2}, {2, 2}, {2, 1}});
    CHECK(border_strip(YoungDiagram{}).empty());
    // connected line-to-line walk: consecutive cells differ by one step
    for (const auto& sh : {YoungDiagram({4, 3, 3, 3, 1}), staircase(5), YoungDiagram({5, 5, 2})}) {
        const auto b = border_strip(sh);
        CHECK(b.front().row == 1);
        CHECK(b.back().col == 1);
        for (std::size_t i = 0; i + 1 < b.size(); ++i) {
            const bool down = (b[i + 1].row == b[i].row + 1 && b[i + 1].col == b[i].col);
            const bool left = (b[i + 1].row == b[i].row && b[i + 1].col == b[i].col - 1);
            CHECK((down || left));
        }
    }
}

TEST_CASE("corners") {
    CHECK(corners(YoungDiagram({4, 3, 3, 3, 1})) == std::vector<Cell>{{5, 1}, {4, 3}, {1, 4}});
    CHECK(corners(staircase(4)) == std::vector<Cell>{{3, 1}, {2, 2}, {1, 3}});
    CHECK(corners(YoungDiagram({2, 2})) == std::vector<Cell>{{2, 2}});
    for (int n = 2; n <= 6; ++n) {
        const auto cs = corners(staircase(n));
        CHECK(static_cast<int>(cs.size()) == n - 1);
        for (int k = 1; k <= n - 1; ++k) CHECK(cs[k - 1] == Cell{n - k, k});
    }
    // every corner is a border box
    for (const auto& sh : shapes_in_box(4, 4)) {
        const auto b = border_strip(sh);
        for (const Cell c : corners(sh)) CHECK(std::find(b.begin(), b.end(), c) != b.end());
    }
}

TEST_CASE("omega weights") {
    SUBCASE("reference shape with three corners") {
        const auto w = omega_weights(YoungDiagram({4, 3, 3, 3, 1}));
        const std::set<Cell> plus{{5, 1}, {4, 3}, {3, 2}, {2, 1}, {1, 4}};
        const std::set<Cell> minus{{4, 1}, {1, 3}};
        for (const Cell c : w.shape().cells()) {
            const int expect = plus.count(c) ? 1 : (minus.count(c) ? -1 : 0);
            CHECK(w.at(c.row, c.col) == expect);
        }
    }
    SUBCASE("square") {
        const auto w = omega_weights(YoungDiagram({2, 2}));
        CHECK(w.at(1, 1) == 1);
        CHECK(w.at(2, 2) == 1);
        CHECK(w.at(1, 2) == 0);
        CHECK(w.at(2, 1) == 0);
    }
    SUBCASE("staircase 4") {
        const auto w = omega_weights(staircase(4));
        const std::set<Cell> plus{{3, 1}, {1, 1}, {2, 2}, {1, 3}};
        const std::set<Cell> minus{{2, 1}, {1, 2}};
        for (const Cell c : w.shape().cells()) {
            const int expect = plus.count(c) ? 1 : (minus.count(c) ? -1 : 0);
            CHECK(w.at(c.row, c.col) == expect);
        }
    }
}

TEST_CASE("rectangle telescoping covers every cell once: shapes in a 5x5 box") {
    for (const auto& sh : shapes_in_box(5, 5)) {
        const auto cs = corners(sh);
        std::map<Cell, int> coeff;
        auto add_rect = [&](int m, int n, int w) {
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= n; ++j) coeff[{i, j}] += w;
        };
        add_rect(cs[0].row, cs[0].col, 1);
        for (std::size_t k = 1; k < cs.size(); ++k) {
            add_rect(cs[k].row, cs[k].col, 1);
            add_rect(cs[k].row, cs[k - 1].col, -1);
        }
        for (const Cell c : sh.cells()) CHECK(coeff[c] == 1);
        for (const auto& [c, v] : coeff) {
            CHECK(sh.contains(c.row, c.col));
            CHECK(v == 1);
        }
    }
}

TEST_CASE("omega equals diagonal telescoping on every shape in a 4x4 box") {
    // sum(omega * r) must match the +/- full-diagonal combination used in the
    // corner-rectangle telescoping, for arbitrary entries r.
    for (const auto& sh : shapes_in_box(4, 4)) {
        const auto w = omega_weights(sh);
        const auto cs = corners(sh);
        std::map<int, int> diag;  // (col-row) -> weight
        diag[cs[0].col - cs[0].row] += 1;
        for (std::size_t k = 1; k < cs.size(); ++k) {
            diag[cs[k].col - cs[k].row] += 1;
            diag[cs[k - 1].col - cs[k].row] -= 1;
        }
        for (const Cell c : sh.cells()) {
            auto it = diag.find(c.col - c.row);
            CHECK(w.at(c.row, c.col) == (it == diag.end() ? 0 : it->second));
        }
    }
}

TEST_CASE("syt enumeration counts") {
    CHECK(enumerate_syt(staircase(2)).size() == 1);
    CHECK(enumerate_syt(staircase(3)).size() == 2);
    CHECK(enumerate_syt(staircase(4)).size() == 16);
    CHECK(enumerate_syt(staircase(5)).size() == 768);
    for (int n = 2; n <= 5; ++n) {
        CHECK(syt_count_hook(staircase(n)) == staircase_count_formula(n));
        CHECK(enumerate_syt(staircase(n)).size() == staircase_count_formula(n));
    }
    CHECK(syt_count_hook(staircase(6)) == 292864);
    CHECK(staircase_count_formula(6) == 292864);
    CHECK(syt_count_hook(YoungDiagram({2, 2})) == 2);
}

TEST_CASE("syt enumeration is deterministic, standard, and duplicate-free") {
    for (int n = 2; n <= 5; ++n) {
        const auto ts = enumerate_syt(staircase(n));
        std::set<std::uint64_t> keys;
        for (const auto& t : ts) {
            CHECK(t.is_standard());
            keys.insert(t.key());
        }
        CHECK(keys.size() == ts.size());
        CHECK(enumerate_syt(staircase(n)) == ts);  // reproducible order
    }
}

TEST_CASE("growth sequences") {
    const auto t2 = enumerate_syt(staircase(2)).front();
    const auto g2 = growth_sequence(t2);
    REQUIRE(g2.diagrams.size() == 2);
    CHECK(g2.diagrams[0].empty());
    CHECK(g2.diagrams[1].rows() == std::vector<int>{1});

    for (const auto& t : enumerate_syt(staircase(4))) {
        const auto g = growth_sequence(t);
        REQUIRE(g.diagrams.size() == t.entries() + 1);
        CHECK(g.diagrams[1].rows() == std::vector<int>{1});  // entry 1 is always at (1,1)
        for (std::size_t k = 0; k < g.diagrams.size(); ++k)
            CHECK(g.diagrams[k].size() == k);
        for (std::size_t k = 0; k + 1 < g.diagrams.size(); ++k)
            CHECK(g.diagrams[k + 1].contains_diagram(g.diagrams[k]));
    }
}

TEST_CASE("tableau params, order 2") {
    const auto t = enumerate_syt(staircase(2)).front();
    const auto p = tableau_params(t);
    CHECK(p.cor == std::vector<int>{1});
    CHECK(p.sigma == Permutation({1}));
    CHECK(p.diag_bar == std::vector<int>{0, 1});
    CHECK(p.deg == std::vector<int>{1});
    REQUIRE(p.factor.nvars == 1);
    CHECK(p.factor.blocks[0] == std::map<int, int>{{1, 1}});
}

TEST_CASE("tableau params invariants, n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        const int N = n * (n - 1) / 2;
        for (const auto& t : enumerate_syt(staircase(n))) {
            const auto p = tableau_params(t);
            CHECK(p.deg.front() == 1);
            CHECK(p.deg.back() == 1);
            CHECK(p.diag_bar[n - 1] == N);
            CHECK(p.factor.total_multiplicity() == static_cast<std::size_t>(N));
            for (int d : p.deg) {
                CHECK(d >= 1);
                CHECK(d <= n - 1);
            }
        }
    }
}

TEST_CASE("standard tableau parse and serialization") {
    const auto t = StandardTableau::parse(staircase(4), "1,2,4,3,5,6");
    CHECK(t.values_csv() == "1,2,4,3,5,6");
    CHECK(t.at(2, 1) == 3);
    CHECK(t.cell_of(6) == Cell{3, 1});
    CHECK_THROWS_AS(StandardTableau::parse(staircase(4), "1,3,2,4,5,6"), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau(staircase(4), {1, 2, 3, 4, 5, 7}), std::invalid_argument);
}
