#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "oswap/rational.hpp"
#include "oswap/sortnet.hpp"
#include "oswap/young.hpp"

namespace oswap {

// ---------------------------------------------------------------------------
// Canonical partial-fraction basis. A basis element is
//   prod_k 1/(x_k + d_k)^{e_k},
// packed one byte per variable as (d << 4) | e with d, e in 0..15; a zero
// byte means the variable is absent. Every denominator factor is univariate,
// so equality of canonical forms is equality of rational functions.
// ---------------------------------------------------------------------------
using PfKey = std::uint64_t;

inline PfKey pf_key_set(PfKey key, int var, int d, int e) {
    return key | ((static_cast<PfKey>(d) << 4 | static_cast<PfKey>(e)) << (8 * (var - 1)));
}
inline std::pair<int, int> pf_key_get(PfKey key, int var) {
    const auto b = (key >> (8 * (var - 1))) & 0xff;
    return {static_cast<int>(b >> 4), static_cast<int>(b & 0xf)};
}

struct PartialFractionForm {
    int nvars = 0;
    std::unordered_map<PfKey, Rational> coef;  // zero coefficients are pruned

    void add(PfKey key, const Rational& c);
    void merge(const PartialFractionForm& other);
    bool same_as(const PartialFractionForm& other) const;
    Rational evaluate(const std::vector<long long>& x) const;
    std::string to_text() const;  // sorted basis terms, "term num/den" per line
};

// Univariate partial fractions of prod_d 1/(x+d)^{m_d} over distinct shifts:
// returns (d, e, coefficient) triples.
std::vector<std::tuple<int, int, Rational>> pf_decompose_block(const std::map<int, int>& shift_mult);

PartialFractionForm factor_to_canonical(const GeneratingFactor& f);
Rational evaluate_generating_factor(const GeneratingFactor& f, const std::vector<long long>& x);

// ---------------------------------------------------------------------------
// Permutation-indexed sums in the free vector space over S_{n-1}.
// ---------------------------------------------------------------------------
struct GroupVector {
    int n = 0;
    std::map<std::uint32_t, PartialFractionForm> comp;  // permutation key -> form

    bool same_as(const GroupVector& other) const;
};

GroupVector accumulate_F(int n);
GroupVector accumulate_G(int n);
GroupVector accumulate_F_serial(int n);
GroupVector accumulate_G_serial(int n);

// ---------------------------------------------------------------------------
// Distinct-factor tallies: the generating factor of many tableaux/networks
// coincides, so both verification methods run over (factor, count) pairs.
// ---------------------------------------------------------------------------
struct FactorKey {
    std::uint64_t lo = 0, hi = 0;
    friend bool operator==(const FactorKey&, const FactorKey&) = default;
};
struct FactorKeyHash {
    std::size_t operator()(const FactorKey& k) const {
        return std::hash<std::uint64_t>{}(k.lo * 0x9e3779b97f4a7c15ULL ^ k.hi);
    }
};

FactorKey factor_key(const GeneratingFactor& f);  // nvars <= 5, exponents <= 15
GeneratingFactor factor_from_key(int nvars, const FactorKey& key);

using FactorCounts = std::unordered_map<FactorKey, long long, FactorKeyHash>;

struct FactorTally {
    int n = 0;
    long long total = 0;
    std::map<std::uint32_t, FactorCounts> groups;  // permutation key -> factor counts
};

enum class TermSide { tableaux, networks };
FactorTally build_tally(int n, TermSide side);
FactorTally build_tally_serial(int n, TermSide side);

// ---------------------------------------------------------------------------
// Identity verification.
// ---------------------------------------------------------------------------
enum class IdentityMethod { canonical, evaluation };

struct IdentityReport {
    int n = 0;
    IdentityMethod method = IdentityMethod::canonical;
    bool equal = false;
    long long terms_lhs = 0;   // tableaux side
    long long terms_rhs = 0;   // networks side
    int components = 0;        // permutations with a nonzero component
    int points = 0;            // evaluation method only
    std::uint64_t seed = 0;
    double seconds = 0.0;
    std::vector<std::string> mismatches;
};

IdentityReport verify_identity(int n, IdentityMethod method, int eval_points = 20,
                               std::uint64_t seed = 20200515);

struct LimitReport {
    int n = 0;
    bool equal = false;
    long long total_lhs = 0;
    long long total_rhs = 0;
    std::vector<std::string> mismatches;
};

// x -> infinity leading-term comparison: per-permutation term counts agree.
LimitReport eg_limit_check(int n);

// ---------------------------------------------------------------------------
// Recombination over a common denominator, for display and for matching
// printed closed forms. Monomials are packed one byte per variable.
// ---------------------------------------------------------------------------
struct Poly {
    std::map<std::uint64_t, Rational> terms;

    static Poly constant(const Rational& c);
    static Poly variable(int var);
    static Poly linear(int var, const Rational& shift);  // x_var + shift

    bool is_zero() const { return terms.empty(); }
    Poly& operator+=(const Poly& other);
    Poly scaled(const Rational& c) const;
    friend Poly operator*(const Poly& a, const Poly& b);
    Rational evaluate(const std::vector<long long>& x) const;

    // Exact division by (x_var + shift); returns false if not divisible.
    bool divide_linear(int var, const Rational& shift);

    std::string to_string(int nvars) const;
    friend bool operator==(const Poly&, const Poly&) = default;
};

struct RecombinedForm {
    int nvars = 0;
    std::vector<std::map<int, int>> den;  // per variable: shift -> exponent
    Poly num;

    std::string to_string() const;
};

RecombinedForm recombine(const PartialFractionForm& form);

}  // namespace oswap
