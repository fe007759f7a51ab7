#include "oswap/genfun.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "oswap/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oswap {

namespace {

Permutation perm_from_key(std::uint32_t key, int m) {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = static_cast<int>((key >> (4 * i)) & 0xf);
    return Permutation(std::move(v));
}

BigInt int_pow(long long base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

void PartialFractionForm::add(PfKey key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = coef.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coef.erase(it);
    }
}

void PartialFractionForm::merge(const PartialFractionForm& other) {
    for (const auto& [k, c] : other.coef) add(k, c);
}

bool PartialFractionForm::same_as(const PartialFractionForm& other) const {
    if (coef.size() != other.coef.size()) return false;
    for (const auto& [k, c] : coef) {
        auto it = other.coef.find(k);
        if (it == other.coef.end() || it->second != c) return false;
    }
    return true;
}

Rational PartialFractionForm::evaluate(const std::vector<long long>& x) const {
    Rational sum = 0;
    for (const auto& [key, c] : coef) {
        BigInt den = 1;
        for (int k = 1; k <= nvars; ++k) {
            const auto [d, e] = pf_key_get(key, k);
            if (d == 0) continue;
            den *= int_pow(x[k - 1] + d, e);
        }
        sum += c / Rational(den);
    }
    return sum;
}

std::string PartialFractionForm::to_text() const {
    std::vector<PfKey> keys;
    keys.reserve(coef.size());
    for (const auto& [k, c] : coef) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [&](PfKey a, PfKey b) {
        for (int k = 1; k <= nvars; ++k) {
            const auto pa = pf_key_get(a, k), pb = pf_key_get(b, k);
            if (pa != pb) return pa < pb;
        }
        return false;
    });
    std::ostringstream os;
    for (PfKey k : keys) {
        for (int v = 1; v <= nvars; ++v) {
            const auto [d, e] = pf_key_get(k, v);
            if (d == 0) continue;
            os << "(x" << v << '+' << d << ")^" << e;
        }
        os << ' ' << coef.at(k) << '\n';
    }
    return os.str();
}

std::vector<std::tuple<int, int, Rational>> pf_decompose_block(const std::map<int, int>& shift_mult) {
    std::vector<std::tuple<int, int, Rational>> out;
    for (const auto& [d, m] : shift_mult) {
        if (m < 1) throw std::invalid_argument("multiplicity must be >= 1");
        // Taylor series around x = -d of the co-factor prod_{d'!=d} (x+d')^{-m'},
        // written in u = x + d, truncated at u^{m-1}.
        std::vector<Rational> series(m, Rational(0));
        series[0] = 1;
        for (const auto& [dp, mp] : shift_mult) {
            if (dp == d) continue;
            const long long delta = dp - d;
            std::vector<Rational> fs(m);
            Rational lead = Rational(1) / Rational(int_pow(delta, mp));
            Rational binom = 1, deltapow = 1;
            for (int j = 0; j < m; ++j) {
                if (j > 0) {
                    binom *= Rational(mp + j - 1, j);
                    deltapow *= delta;
                }
                Rational term = lead * binom / deltapow;
                if (j % 2) term = -term;
                fs[j] = term;
            }
            std::vector<Rational> prod(m, Rational(0));
            for (int a = 0; a < m; ++a) {
                if (series[a] == 0) continue;
                for (int b = 0; a + b < m; ++b) prod[a + b] += series[a] * fs[b];
            }
            series = std::move(prod);
        }
        for (int e = 1; e <= m; ++e) {
            if (series[m - e] != 0) out.emplace_back(d, e, series[m - e]);
        }
    }
    return out;
}

PartialFractionForm factor_to_canonical(const GeneratingFactor& f) {
    if (f.nvars > 8) throw std::invalid_argument("canonical basis packing supports up to 8 variables");
    PartialFractionForm out;
    out.nvars = f.nvars;
    std::vector<std::vector<std::tuple<int, int, Rational>>> per;
    per.reserve(f.nvars);
    for (const auto& b : f.blocks) {
        if (b.empty())
            per.push_back({{0, 0, Rational(1)}});  // variable absent from the factor
        else
            per.push_back(pf_decompose_block(b));
    }
    std::vector<std::size_t> idx(f.nvars, 0);
    while (true) {
        PfKey key = 0;
        Rational c = 1;
        for (int k = 1; k <= f.nvars; ++k) {
            const auto& [d, e, cc] = per[k - 1][idx[k - 1]];
            if (d) key = pf_key_set(key, k, d, e);
            c *= cc;
        }
        out.add(key, c);
        int k = 0;
        while (k < f.nvars && ++idx[k] == per[k].size()) idx[k++] = 0;
        if (k == f.nvars) break;
    }
    return out;
}

Rational evaluate_generating_factor(const GeneratingFactor& f, const std::vector<long long>& x) {
    BigInt den = 1;
    for (int k = 1; k <= f.nvars; ++k)
        for (const auto& [d, m] : f.blocks[k - 1]) den *= int_pow(x[k - 1] + d, m);
    return Rational(1) / Rational(den);
}

bool GroupVector::same_as(const GroupVector& other) const {
    auto nonzero = [](const std::map<std::uint32_t, PartialFractionForm>& m) {
        std::vector<std::uint32_t> keys;
        for (const auto& [k, form] : m)
            if (!form.coef.empty()) keys.push_back(k);
        return keys;
    };
    if (nonzero(comp) != nonzero(other.comp)) return false;
    for (const auto& [k, form] : comp) {
        if (form.coef.empty()) continue;
        if (!form.same_as(other.comp.at(k))) return false;
    }
    return true;
}

FactorKey factor_key(const GeneratingFactor& f) {
    if (f.nvars > 5) throw std::invalid_argument("factor_key supports up to 5 variables");
    FactorKey key;
    for (int k = 1; k <= f.nvars; ++k)
        for (const auto& [d, m] : f.blocks[k - 1]) {
            if (d < 1 || d > 5 || m > 15) throw std::invalid_argument("factor outside packing range");
            const int slot = (k - 1) * 5 + (d - 1);
            if (slot < 16)
                key.lo |= static_cast<std::uint64_t>(m) << (4 * slot);
            else
                key.hi |= static_cast<std::uint64_t>(m) << (4 * (slot - 16));
        }
    return key;
}

GeneratingFactor factor_from_key(int nvars, const FactorKey& key) {
    GeneratingFactor f;
    f.nvars = nvars;
    f.blocks.assign(nvars, {});
    for (int k = 1; k <= nvars; ++k)
        for (int d = 1; d <= 5; ++d) {
            const int slot = (k - 1) * 5 + (d - 1);
            const std::uint64_t m =
                slot < 16 ? (key.lo >> (4 * slot)) & 0xf : (key.hi >> (4 * (slot - 16))) & 0xf;
            if (m) f.blocks[k - 1][d] = static_cast<int>(m);
        }
    return f;
}

namespace {

FactorTally build_tally_impl(int n, TermSide side, bool parallel) {
    if (n < 2 || n > 6) throw std::invalid_argument("tallies support 2 <= n <= 6");
    FactorTally tally;
    tally.n = n;

    auto fold = [&](auto&& objects, auto&& params_of) {
        tally.total = static_cast<long long>(objects.size());
#pragma omp parallel if (parallel)
        {
            std::map<std::uint32_t, FactorCounts> local;
#pragma omp for schedule(dynamic, 512) nowait
            for (std::size_t i = 0; i < objects.size(); ++i) {
                const auto p = params_of(objects[i]);
                ++local[p.first][p.second];
            }
#pragma omp critical
            {
                for (auto& [perm, counts] : local) {
                    auto& dst = tally.groups[perm];
                    for (const auto& [fk, c] : counts) dst[fk] += c;
                }
            }
        }
    };

    if (side == TermSide::tableaux) {
        fold(enumerate_syt(staircase(n)), [](const StandardTableau& t) {
            const auto p = tableau_params(t);
            return std::pair{p.sigma.key(), factor_key(p.factor)};
        });
    } else {
        fold(enumerate_sorting_networks(n), [](const SortingNetwork& s) {
            const auto p = network_params(s);
            return std::pair{p.pi.key(), factor_key(p.factor)};
        });
    }
    return tally;
}

GroupVector accumulate_from_tally(const FactorTally& tally, bool parallel) {
    GroupVector gv;
    gv.n = tally.n;
    struct Item {
        std::uint32_t perm;
        FactorKey key;
        long long count;
    };
    std::vector<Item> items;
    for (const auto& [perm, counts] : tally.groups)
        for (const auto& [fk, c] : counts) items.push_back({perm, fk, c});

#pragma omp parallel if (parallel)
    {
        std::map<std::uint32_t, PartialFractionForm> local;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::size_t i = 0; i < items.size(); ++i) {
            auto form = factor_to_canonical(factor_from_key(tally.n - 1, items[i].key));
            auto& dst = local[items[i].perm];
            dst.nvars = tally.n - 1;
            const Rational cnt(items[i].count);
            for (const auto& [k, c] : form.coef) dst.add(k, c * cnt);
        }
#pragma omp critical
        {
            for (auto& [perm, form] : local) {
                auto& dst = gv.comp[perm];
                dst.nvars = tally.n - 1;
                dst.merge(form);
            }
        }
    }
    return gv;
}

}  // namespace

FactorTally build_tally(int n, TermSide side) { return build_tally_impl(n, side, true); }
FactorTally build_tally_serial(int n, TermSide side) { return build_tally_impl(n, side, false); }

GroupVector accumulate_F(int n) { return accumulate_from_tally(build_tally(n, TermSide::tableaux), true); }
GroupVector accumulate_G(int n) { return accumulate_from_tally(build_tally(n, TermSide::networks), true); }
GroupVector accumulate_F_serial(int n) {
    return accumulate_from_tally(build_tally_serial(n, TermSide::tableaux), false);
}
GroupVector accumulate_G_serial(int n) {
    return accumulate_from_tally(build_tally_serial(n, TermSide::networks), false);
}

IdentityReport verify_identity(int n, IdentityMethod method, int eval_points, std::uint64_t seed) {
    const auto t0 = std::chrono::steady_clock::now();
    IdentityReport rep;
    rep.n = n;
    rep.method = method;
    rep.seed = seed;

    const auto tF = build_tally(n, TermSide::tableaux);
    const auto tG = build_tally(n, TermSide::networks);
    rep.terms_lhs = tF.total;
    rep.terms_rhs = tG.total;

    std::vector<std::uint32_t> perms;
    for (const auto& [perm, c] : tF.groups) perms.push_back(perm);
    for (const auto& [perm, c] : tG.groups)
        if (!tF.groups.count(perm)) perms.push_back(perm);
    std::sort(perms.begin(), perms.end());
    rep.components = static_cast<int>(perms.size());

    if (method == IdentityMethod::canonical) {
        const auto F = accumulate_from_tally(tF, true);
        const auto G = accumulate_from_tally(tG, true);
        rep.equal = true;
        for (std::uint32_t perm : perms) {
            const auto itF = F.comp.find(perm);
            const auto itG = G.comp.find(perm);
            const bool ok = itF != F.comp.end() && itG != G.comp.end() && itF->second.same_as(itG->second);
            if (!ok) {
                rep.equal = false;
                rep.mismatches.push_back(perm_from_key(perm, n - 1).to_string());
            }
        }
    } else {
        rep.points = eval_points;
        // Per-(variable, shift) exponent ceiling over both sides; the common
        // denominator D then divides out every term exactly, so each component
        // sum is an integer comparison.
        int emax[5][5] = {};
        auto scan = [&](const FactorTally& t) {
            for (const auto& [perm, counts] : t.groups)
                for (const auto& [fk, c] : counts) {
                    const auto f = factor_from_key(n - 1, fk);
                    for (int k = 1; k <= n - 1; ++k)
                        for (const auto& [d, m] : f.blocks[k - 1])
                            emax[k - 1][d - 1] = std::max(emax[k - 1][d - 1], m);
                }
        };
        scan(tF);
        scan(tG);

        RngStream rng(seed, 0);
        std::vector<std::vector<long long>> points(eval_points, std::vector<long long>(n - 1));
        for (auto& x : points)
            for (auto& xi : x) xi = 1'000'000 + static_cast<long long>(rng.below(999'000'000));

        std::vector<char> point_ok(eval_points, 1);
        std::vector<std::string> mismatches;
#pragma omp parallel for schedule(dynamic)
        for (int p = 0; p < eval_points; ++p) {
            const auto& x = points[p];
            BigInt pw[5][5][16];
            BigInt D = 1;
            for (int k = 1; k <= n - 1; ++k)
                for (int d = 1; d <= n - 1; ++d) {
                    pw[k - 1][d - 1][0] = 1;
                    for (int e = 1; e <= emax[k - 1][d - 1]; ++e)
                        pw[k - 1][d - 1][e] = pw[k - 1][d - 1][e - 1] * (x[k - 1] + d);
                    D *= pw[k - 1][d - 1][emax[k - 1][d - 1]];
                }
            auto side_sum = [&](const FactorTally& t, std::uint32_t perm) {
                BigInt sum = 0;
                const auto it = t.groups.find(perm);
                if (it == t.groups.end()) return sum;
                for (const auto& [fk, c] : it->second) {
                    const auto f = factor_from_key(n - 1, fk);
                    BigInt den = 1;
                    for (int k = 1; k <= n - 1; ++k)
                        for (const auto& [d, m] : f.blocks[k - 1]) den *= pw[k - 1][d - 1][m];
                    sum += (D / den) * c;
                }
                return sum;
            };
            for (std::uint32_t perm : perms) {
                if (side_sum(tF, perm) != side_sum(tG, perm)) {
                    point_ok[p] = 0;
#pragma omp critical
                    mismatches.push_back(perm_from_key(perm, n - 1).to_string() + " at point " +
                                         std::to_string(p));
                }
            }
        }
        rep.equal = std::all_of(point_ok.begin(), point_ok.end(), [](char c) { return c != 0; });
        rep.mismatches = std::move(mismatches);
    }

    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

LimitReport eg_limit_check(int n) {
    LimitReport rep;
    rep.n = n;
    const auto tF = build_tally(n, TermSide::tableaux);
    const auto tG = build_tally(n, TermSide::networks);
    rep.total_lhs = tF.total;
    rep.total_rhs = tG.total;
    rep.equal = true;

    std::map<std::uint32_t, long long> cF, cG;
    for (const auto& [perm, counts] : tF.groups)
        for (const auto& [fk, c] : counts) cF[perm] += c;
    for (const auto& [perm, counts] : tG.groups)
        for (const auto& [fk, c] : counts) cG[perm] += c;
    for (const auto& [perm, c] : cF)
        if (cG[perm] != c) {
            rep.equal = false;
            rep.mismatches.push_back(perm_from_key(perm, n - 1).to_string());
        }
    for (const auto& [perm, c] : cG)
        if (!cF.count(perm)) {
            rep.equal = false;
            rep.mismatches.push_back(perm_from_key(perm, n - 1).to_string());
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Polynomials and recombination.
// ---------------------------------------------------------------------------

Poly Poly::constant(const Rational& c) {
    Poly p;
    if (c != 0) p.terms[0] = c;
    return p;
}

Poly Poly::variable(int var) {
    Poly p;
    p.terms[static_cast<std::uint64_t>(1) << (8 * (var - 1))] = 1;
    return p;
}

Poly Poly::linear(int var, const Rational& shift) {
    Poly p = variable(var);
    if (shift != 0) p.terms[0] = shift;
    return p;
}

Poly& Poly::operator+=(const Poly& other) {
    for (const auto& [m, c] : other.terms) {
        auto [it, inserted] = terms.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

Poly Poly::scaled(const Rational& c) const {
    Poly p;
    if (c == 0) return p;
    for (const auto& [m, v] : terms) p.terms[m] = v * c;
    return p;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            const std::uint64_t m = ma + mb;  // byte-wise exponent add, no overflow for our degrees
            auto [it, inserted] = p.terms.emplace(m, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) p.terms.erase(it);
            }
        }
    return p;
}

Rational Poly::evaluate(const std::vector<long long>& x) const {
    Rational sum = 0;
    for (const auto& [m, c] : terms) {
        BigInt mono = 1;
        for (std::size_t k = 0; k < x.size(); ++k) {
            const int e = static_cast<int>((m >> (8 * k)) & 0xff);
            mono *= int_pow(x[k], e);
        }
        sum += c * Rational(mono);
    }
    return sum;
}

bool Poly::divide_linear(int var, const Rational& shift) {
    int max_deg = 0;
    for (const auto& [m, c] : terms)
        max_deg = std::max(max_deg, static_cast<int>((m >> (8 * (var - 1))) & 0xff));
    if (max_deg == 0) return terms.empty();

    std::vector<Poly> a(max_deg + 1);
    for (const auto& [m, c] : terms) {
        const int e = static_cast<int>((m >> (8 * (var - 1))) & 0xff);
        const std::uint64_t rest = m & ~(static_cast<std::uint64_t>(0xff) << (8 * (var - 1)));
        a[e].terms[rest] += c;
        if (a[e].terms[rest] == 0) a[e].terms.erase(rest);
    }
    std::vector<Poly> q(max_deg);
    q[max_deg - 1] = a[max_deg];
    for (int e = max_deg - 1; e >= 1; --e) {
        q[e - 1] = a[e];
        q[e - 1] += q[e].scaled(-shift);
    }
    Poly rem = a[0];
    rem += q[0].scaled(-shift);
    if (!rem.is_zero()) return false;

    terms.clear();
    for (int e = 0; e < max_deg; ++e)
        for (const auto& [m, c] : q[e].terms)
            terms[m | (static_cast<std::uint64_t>(e) << (8 * (var - 1)))] = c;
    return true;
}

std::string Poly::to_string(int nvars) const {
    if (terms.empty()) return "0";
    std::vector<std::pair<std::uint64_t, Rational>> ordered(terms.begin(), terms.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if ((a.first == 0) != (b.first == 0)) return b.first == 0;  // constant last
        return a.first < b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : ordered) {
        Rational coeff = c;
        if (first) {
            if (coeff < 0) {
                os << '-';
                coeff = -coeff;
            }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        std::string vars;
        for (int k = 1; k <= nvars; ++k) {
            const int e = static_cast<int>((m >> (8 * (k - 1))) & 0xff);
            if (!e) continue;
            if (!vars.empty()) vars += '*';
            vars += "x" + std::to_string(k);
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            os << coeff;
        } else {
            if (coeff != 1) os << coeff << '*';
            os << vars;
        }
    }
    return os.str();
}

RecombinedForm recombine(const PartialFractionForm& form) {
    RecombinedForm rf;
    rf.nvars = form.nvars;
    rf.den.assign(form.nvars, {});
    for (const auto& [key, c] : form.coef)
        for (int k = 1; k <= form.nvars; ++k) {
            const auto [d, e] = pf_key_get(key, k);
            if (d) rf.den[k - 1][d] = std::max(rf.den[k - 1][d], e);
        }

    for (const auto& [key, c] : form.coef) {
        Poly t = Poly::constant(c);
        for (int k = 1; k <= form.nvars; ++k) {
            for (const auto& [d, E] : rf.den[k - 1]) {
                const auto [dk, ek] = pf_key_get(key, k);
                const int have = (dk == d) ? ek : 0;
                for (int i = 0; i < E - have; ++i) t = t * Poly::linear(k, d);
            }
        }
        rf.num += t;
    }

    for (int k = 1; k <= form.nvars; ++k)
        for (auto it = rf.den[k - 1].begin(); it != rf.den[k - 1].end();) {
            while (it->second > 0) {
                Poly trial = rf.num;
                if (!trial.divide_linear(k, Rational(it->first))) break;
                rf.num = std::move(trial);
                --it->second;
            }
            it = (it->second == 0) ? rf.den[k - 1].erase(it) : std::next(it);
        }
    return rf;
}

std::string RecombinedForm::to_string() const {
    std::ostringstream os;
    os << '(' << num.to_string(nvars) << ") / (";
    for (int k = 1; k <= nvars; ++k)
        for (const auto& [d, e] : den[k - 1]) {
            os << "(x" << k << '+' << d << ')';
            if (e > 1) os << '^' << e;
        }
    os << ')';
    return os.str();
}

}  // namespace oswap
