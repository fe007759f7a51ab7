#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oswap/rng.hpp"
#include "oswap/rsk_burge.hpp"

using namespace oswap;

namespace {

IntTableau make_tableau(const YoungDiagram& sh, std::vector<long long> vals) {
    return IntTableau(sh, std::move(vals));
}

const YoungDiagram kSquare({2, 2});

}  // namespace

TEST_CASE("lpp tableau on a 2x2 square") {
    const auto x = make_tableau(kSquare, {1, 2, 3, 4});
    const auto L = lpp_tableau(x);
    CHECK(L.values() == std::vector<long long>{1, 3, 4, 8});
    const auto Ls = dual_lpp_tableau(x);
    CHECK(Ls.values() == std::vector<long long>{1, 3, 4, 9});
    // explicit corner formulas
    CHECK(L.at(2, 2) == x.at(1, 1) + std::max(x.at(1, 2), x.at(2, 1)) + x.at(2, 2));
    CHECK(Ls.at(2, 2) == x.at(2, 1) + std::max(x.at(1, 1), x.at(2, 2)) + x.at(1, 2));
}

TEST_CASE("hook shapes: L equals L* exactly") {
    for (const auto& sh : {YoungDiagram({4}), YoungDiagram({4, 1, 1}), YoungDiagram({1, 1, 1})}) {
        RngStream rng(7, 0);
        for (int rep = 0; rep < 20; ++rep) {
            IntTableau x(sh);
            for (const Cell c : sh.cells()) x.at(c.row, c.col) = rng.below(10);
            CHECK(lpp_tableau(x).values() == dual_lpp_tableau(x).values());
        }
    }
    // column sums along the first column of any shape
    const auto x = make_tableau(YoungDiagram({2, 2, 1}), {5, 1, 2, 3, 4});
    const auto L = lpp_tableau(x);
    CHECK(L.at(1, 1) == 5);
    CHECK(L.at(2, 1) == 7);
    CHECK(L.at(3, 1) == 11);
}

TEST_CASE("greene maxima on the 2x2 square") {
    const auto x = make_tableau(kSquare, {1, 2, 3, 4});
    CHECK(greene_max(x, {2, 2}, 2, PathOrientation::rsk) == 10);
    CHECK(greene_max(x, {2, 2}, 2, PathOrientation::burge) == 10);
    CHECK(greene_max(x, {2, 2}, 1, PathOrientation::rsk) == 8);
    CHECK(greene_max(x, {2, 2}, 1, PathOrientation::burge) == 9);
    CHECK(greene_max_bruteforce(x, {2, 2}, 2, PathOrientation::rsk) == 10);
    CHECK_THROWS_AS(greene_max(x, {2, 2}, 3, PathOrientation::rsk), std::invalid_argument);
    CHECK_THROWS_AS(greene_max(x, {1, 1}, 1, PathOrientation::rsk), std::invalid_argument);
}

TEST_CASE("rsk and burge on the 2x2 square") {
    const auto x = make_tableau(kSquare, {1, 2, 3, 4});
    CHECK(rsk(x).values() == std::vector<long long>{2, 3, 4, 8});
    CHECK(burge(x).values() == std::vector<long long>{1, 3, 4, 9});
}

TEST_CASE("exhaustive sweep: shapes within a 3x3 box, entries <= 2") {
    const auto rep = rsk_burge_sweep(3, 3, 2);
    CHECK(rep.pass());
    CHECK(rep.failures == 0);
    CHECK(rep.inputs > 20000);  // includes the 3^9 full square
    if (!rep.pass())
        for (const auto& e : rep.failure_examples) MESSAGE(e);
}

TEST_CASE("classical row insertion on rectangles") {
    SUBCASE("single cell") {
        const auto cl = classical_rsk_rectangle(make_tableau(YoungDiagram({1}), {1}));
        REQUIRE(cl.P.size() == 1);
        CHECK(cl.P[0] == std::vector<int>{1});
        CHECK(cl.Q[0] == std::vector<int>{1});
        CHECK(cl.reencoded.values() == std::vector<long long>{1});
    }
    SUBCASE("2x2 example") {
        const auto cl = classical_rsk_rectangle(make_tableau(kSquare, {1, 2, 3, 4}));
        CHECK(cl.reencoded.values() == std::vector<long long>{2, 3, 4, 8});
    }
    SUBCASE("zero matrix") {
        const auto cl = classical_rsk_rectangle(make_tableau(kSquare, {0, 0, 0, 0}));
        CHECK(cl.P.empty());
        CHECK(cl.Q.empty());
        CHECK(cl.reencoded.values() == std::vector<long long>{0, 0, 0, 0});
    }
    SUBCASE("P and Q are semistandard with a common shape") {
        RngStream rng(11, 0);
        for (int rep = 0; rep < 50; ++rep) {
            IntTableau x(YoungDiagram({3, 3}));
            for (const Cell c : x.shape().cells()) x.at(c.row, c.col) = rng.below(3);
            const auto cl = classical_rsk_rectangle(x);
            REQUIRE(cl.P.size() == cl.Q.size());
            for (std::size_t r = 0; r < cl.P.size(); ++r) {
                REQUIRE(cl.P[r].size() == cl.Q[r].size());
                for (std::size_t c = 0; c + 1 < cl.P[r].size(); ++c) {
                    CHECK(cl.P[r][c] <= cl.P[r][c + 1]);  // weakly increasing rows
                    CHECK(cl.Q[r][c] <= cl.Q[r][c + 1]);
                }
                if (r > 0)
                    for (std::size_t c = 0; c < cl.P[r].size(); ++c) {
                        CHECK(cl.P[r - 1][c] < cl.P[r][c]);  // strictly increasing columns
                        CHECK(cl.Q[r - 1][c] < cl.Q[r][c]);
                    }
            }
            CHECK(cl.reencoded.values() == rsk(x).values());
        }
    }
}

TEST_CASE("proposition 2.1 dichotomy on the square") {
    bool negative_seen = false;
    for (long long a = 0; a <= 3; ++a)
        for (long long b = 0; b <= 3; ++b)
            for (long long c = 0; c <= 3; ++c)
                for (long long d = 0; d <= 3; ++d) {
                    const auto x = make_tableau(kSquare, {a, b, c, d});
                    const auto L = lpp_tableau(x);
                    const auto Ls = dual_lpp_tableau(x);
                    const long long combo =
                        L.at(2, 2) - L.at(1, 2) - L.at(2, 1) + L.at(1, 1);
                    const long long dual_combo =
                        Ls.at(2, 2) - Ls.at(1, 2) - Ls.at(2, 1) + Ls.at(1, 1);
                    CHECK(combo == d - std::min(b, c));
                    CHECK(dual_combo == std::max(0LL, d - a));
                    CHECK(dual_combo >= 0);
                    if (combo < 0) negative_seen = true;
                }
    CHECK(negative_seen);
}

TEST_CASE("randomized omega identity on wider shapes") {
    RngStream rng(13, 0);
    for (const auto& sh : {YoungDiagram({6, 4, 4, 2}), YoungDiagram({7, 7, 3, 1}),
                           YoungDiagram({5, 5, 5, 5})}) {
        const auto omega = omega_weights(sh);
        for (int rep = 0; rep < 10; ++rep) {
            IntTableau x(sh);
            long long total = 0;
            for (const Cell c : sh.cells()) {
                x.at(c.row, c.col) = rng.below(8);
                total += x.at(c.row, c.col);
            }
            const auto r = rsk(x);
            const auto b = burge(x);
            CHECK(is_interlacing(r));
            CHECK(is_interlacing(b));
            long long wr = 0, wb = 0;
            for (const Cell c : sh.cells()) {
                wr += omega.at(c.row, c.col) * r.at(c.row, c.col);
                wb += omega.at(c.row, c.col) * b.at(c.row, c.col);
            }
            CHECK(wr == total);
            CHECK(wb == total);
        }
    }
}

TEST_CASE("exact border law oracle on the square") {
    const Rational half(1, 2);
    const auto lpp_law = border_distribution_exact(kSquare, half, 4, WhichTableau::lpp);
    const auto dual_law = border_distribution_exact(kSquare, half, 4, WhichTableau::dual);
    CHECK(lpp_law.border == std::vector<Cell>{{1, 2}, {2, 2}, {2, 1}});
    CHECK(lpp_law.prob == dual_law.prob);
    CHECK(lpp_law.prob.size() > 0);

    // mass increases with the cap and approaches one
    Rational prev = 0;
    for (int cap = 1; cap <= 6; ++cap) {
        const auto law = border_distribution_exact(kSquare, half, cap, WhichTableau::lpp);
        const Rational mass = law.total_mass();
        CHECK(mass > prev);
        CHECK(mass < 1);
        prev = mass;
    }
    CHECK(prev > Rational(4, 5));
}

TEST_CASE("bernoulli counterexample: laws differ at (2,3,1)") {
    const auto lpp_law =
        border_distribution_exact(kSquare, Rational(1, 2), 4, WhichTableau::lpp, WeightLaw::bernoulli01);
    const auto dual_law =
        border_distribution_exact(kSquare, Rational(1, 2), 4, WhichTableau::dual, WeightLaw::bernoulli01);
    const std::vector<long long> v{2, 3, 1};  // L_{1,2}=2, L_{2,2}=3, L_{2,1}=1
    REQUIRE(lpp_law.prob.count(v));
    CHECK(lpp_law.prob.at(v) == Rational(1, 16));
    CHECK(dual_law.prob.count(v) == 0);
}

TEST_CASE("oracle caps") {
    CHECK_THROWS_AS(border_distribution_exact(YoungDiagram({4, 4, 4}), Rational(1, 2), 4,
                                              WhichTableau::lpp),
                    std::invalid_argument);
    CHECK_THROWS_AS(border_distribution_exact(kSquare, Rational(1, 2), 7, WhichTableau::lpp),
                    std::invalid_argument);
}
