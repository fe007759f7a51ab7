#include "oswap/densities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "oswap/edelman_greene.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oswap {

namespace {

// Gauss-Legendre nodes and weights computed at startup by Newton iteration.
struct GaussRule {
    std::vector<double> x, w;
    explicit GaussRule(int order) {
        x.resize(order);
        w.resize(order);
        for (int i = 0; i < order; ++i) {
            double xi = std::cos(M_PI * (i + 0.75) / (order + 0.5));
            double dp = 0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1, p1 = xi;
                for (int k = 2; k <= order; ++k) {
                    const double p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = order * (xi * p1 - p0) / (xi * xi - 1);
                const double step = p1 / dp;
                xi -= step;
                if (std::fabs(step) < 1e-16) break;
            }
            x[i] = xi;
            w[i] = 2.0 / ((1 - xi * xi) * dp * dp);
        }
    }
};

const GaussRule& g7() {
    static const GaussRule r(7);
    return r;
}
const GaussRule& g15() {
    static const GaussRule r(15);
    return r;
}

double gauss_apply(const GaussRule& rule, const std::function<double(double)>& f, double a,
                   double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) s += rule.w[i] * f(c + h * rule.x[i]);
    return s * h;
}

double integrate_rec(const std::function<double(double)>& f, double a, double b, double tol,
                     double noise_floor, int depth) {
    const double coarse = gauss_apply(g7(), f, a, b);
    const double fine = gauss_apply(g15(), f, a, b);
    if (std::fabs(fine - coarse) <= std::max(tol, noise_floor)) return fine;
    const double mid = 0.5 * (a + b);
    if (!(a < mid && mid < b)) return fine;  // interval at machine resolution
    if (depth >= 60) throw std::runtime_error("quadrature subdivision budget exhausted");
    return integrate_rec(f, a, mid, tol / 2, noise_floor, depth + 1) +
           integrate_rec(f, mid, b, tol / 2, noise_floor, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(a <= b)) throw std::invalid_argument("bad interval");
    if (a == b) return 0;
    // error estimates below the double-precision resolution of the whole
    // integral are noise, not signal
    const double scale = std::fabs(gauss_apply(g15(), f, a, b));
    return integrate_rec(f, a, b, tol, 4.4e-16 * scale, 0);
}

// ---------------------------------------------------------------------------
// Hypoexponential laws.
// ---------------------------------------------------------------------------

namespace {

struct HypoPf {
    double prefactor = 1;  // product of rates
    struct Term {
        double c;
        double rate;
        int e;
    };
    std::vector<Term> terms;
};

HypoPf hypo_pf(const std::vector<double>& rates) {
    if (rates.empty()) throw std::invalid_argument("empty rate block");
    for (double r : rates)
        if (!(r > 0)) throw std::invalid_argument("rates must be positive");

    std::map<double, int> mult;
    HypoPf pf;
    for (double r : rates) {
        ++mult[r];
        pf.prefactor *= r;
    }
    for (const auto& [d, m] : mult) {
        // series of the co-factor around the pole at -d, truncated at u^{m-1}
        std::vector<double> series(m, 0.0);
        series[0] = 1;
        for (const auto& [dp, mp] : mult) {
            if (dp == d) continue;
            const double delta = dp - d;
            std::vector<double> fs(m);
            double lead = std::pow(delta, -mp);
            double binom = 1, deltapow = 1;
            for (int j = 0; j < m; ++j) {
                if (j > 0) {
                    binom *= static_cast<double>(mp + j - 1) / j;
                    deltapow *= delta;
                }
                fs[j] = (j % 2 ? -1.0 : 1.0) * lead * binom / deltapow;
            }
            std::vector<double> prod(m, 0.0);
            for (int a = 0; a < m; ++a)
                for (int b = 0; a + b < m; ++b) prod[a + b] += series[a] * fs[b];
            series = std::move(prod);
        }
        for (int e = 1; e <= m; ++e)
            if (series[m - e] != 0) pf.terms.push_back({series[m - e], d, e});
    }
    return pf;
}

double factorial(int k) {
    double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

double pf_density(const HypoPf& pf, double x) {
    if (x < 0) return 0;
    double s = 0;
    for (const auto& t : pf.terms)
        s += t.c * std::pow(x, t.e - 1) * std::exp(-t.rate * x) / factorial(t.e - 1);
    return pf.prefactor * s;
}

// regularized lower incomplete gamma at integer order
double gamma_p_int(int e, double z) {
    double partial = 0, term = 1;
    for (int i = 0; i < e; ++i) {
        if (i > 0) term *= z / i;
        partial += term;
    }
    return 1.0 - std::exp(-z) * partial;
}

double pf_cdf(const HypoPf& pf, double x) {
    if (x <= 0) return 0;
    double s = 0;
    for (const auto& t : pf.terms) s += t.c * std::pow(t.rate, -t.e) * gamma_p_int(t.e, t.rate * x);
    return pf.prefactor * s;
}

}  // namespace

double hypoexp_density(const HypoexpSpec& spec, double x) { return pf_density(hypo_pf(spec.rates), x); }

double hypoexp_cdf(const HypoexpSpec& spec, double x) { return pf_cdf(hypo_pf(spec.rates), x); }

// ---------------------------------------------------------------------------
// Path-decomposition densities.
// ---------------------------------------------------------------------------

namespace {

struct PathTerm {
    std::vector<int> gamma_inv;  // gamma^{-1}(k), 1-based positions into u
    double weight;               // product of 1/deg along the walk
    std::vector<HypoPf> blocks;  // one hypoexponential block per coordinate
};

std::vector<PathTerm> build_path_table(int n, PathModel model) {
    std::vector<PathTerm> table;
    auto add_term = [&](const Permutation& gamma, const std::vector<int>& bar,
                        const std::vector<int>& deg) {
        PathTerm term;
        term.gamma_inv = gamma.inverse().one_line();
        term.weight = 1;
        for (int d : deg) term.weight /= d;
        for (int k = 1; k <= n - 1; ++k) {
            std::vector<double> rates;
            for (int j = bar[k - 1] + 1; j <= bar[k]; ++j)
                rates.push_back(static_cast<double>(deg[j - 1]));
            term.blocks.push_back(hypo_pf(rates));
        }
        table.push_back(std::move(term));
    };
    if (model == PathModel::growth) {
        for (const auto& t : enumerate_syt(staircase(n))) {
            const auto p = tableau_params(t);
            add_term(p.sigma, p.diag_bar, p.deg);
        }
    } else {
        for (const auto& s : enumerate_sorting_networks(n)) {
            const auto p = network_params(s);
            add_term(p.pi, p.fin_bar, p.deg);
        }
    }
    return table;
}

const std::vector<PathTerm>& path_table(int n, PathModel model) {
    static std::map<std::pair<int, int>, std::vector<PathTerm>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, static_cast<int>(model));
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_path_table(n, model)).first;
    return it->second;
}

}  // namespace

double density_from_paths(int n, PathModel model, const std::vector<double>& u) {
    if (n < 2 || n > 4) throw std::invalid_argument("path sum implemented for n <= 4");
    if (static_cast<int>(u.size()) != n - 1) throw std::invalid_argument("dimension mismatch");
    for (double ui : u)
        if (ui < 0) return 0;

    const auto& table = path_table(n, model);
    double total = 0;
    std::vector<double> ubar(n);
    for (const auto& term : table) {
        ubar[0] = 0;
        bool in_chamber = true;
        for (int k = 1; k <= n - 1; ++k) {
            ubar[k] = u[term.gamma_inv[k - 1] - 1];
            if (ubar[k] < ubar[k - 1]) {
                in_chamber = false;
                break;
            }
        }
        if (!in_chamber) continue;
        double prod = term.weight;
        for (int k = 1; k <= n - 1; ++k) prod *= pf_density(term.blocks[k - 1], ubar[k] - ubar[k - 1]);
        total += prod;
    }
    return total;
}

double pU4_closed_form(double u1, double u2, double u3) {
    if (u1 < 0 || u2 < 0 || u3 < 0) return 0;
    const double pre = std::exp(-(u1 + u2 + u3));
    auto edge = [&](double a, double b) {
        // chambers with a smallest and distinct largest coordinates
        return std::exp(a + b) - (a - 1) * std::exp(a) - (a + 1) * std::exp(b) - 1;
    };
    auto middle = [&](double a) {
        // chambers where the middle bond finished first
        return std::exp(2 * a) - 2 * a * std::exp(a) - 1;
    };
    if (u1 <= u2 && u2 <= u3) return pre * edge(u1, u2);
    if (u2 <= u1 && u1 <= u3) return pre * middle(u2);
    if (u1 <= u3 && u3 <= u2) return pre * edge(u1, u3);
    if (u2 <= u3 && u3 <= u1) return pre * middle(u2);
    if (u3 <= u1 && u1 <= u2) return pre * edge(u3, u1);
    return pre * edge(u3, u2);  // u3 <= u2 <= u1
}

double density_V_recursive(int n, const std::vector<double>& v, double tol) {
    if (n < 2 || n > 4) throw std::invalid_argument("recursion implemented for n <= 4");
    if (static_cast<int>(v.size()) != n - 1) throw std::invalid_argument("dimension mismatch");
    for (double vi : v)
        if (vi < 0) return 0;

    if (n == 2) return std::exp(-v[0]);
    if (n == 3) {
        const double hi = std::min(v[0], v[1]);
        const double off = v[0] + v[1];
        return integrate([&](double y) { return std::exp(2 * y - off) * std::exp(-y); }, 0, hi,
                         tol);
    }
    // n == 4: two outer integrals over the recursion, inner density at order 3
    const double off = v[0] + v[1] + v[2];
    return integrate(
        [&](double y1) {
            return integrate(
                [&](double y2) {
                    const double expo = y1 + std::max(y1, y2) + y2 - off;
                    return std::exp(expo) * density_V_recursive(3, {y1, y2}, tol / 100);
                },
                0, std::min(v[1], v[2]), tol / 10);
        },
        0, std::min(v[0], v[1]), tol);
}

LoeEstimate loe_cdf(int n, double t, long long samples, std::uint64_t seed) {
    if (n < 2 || n > 17) throw std::invalid_argument("n must be in [2, 17]");
    if (samples < 1) throw std::invalid_argument("samples must be positive");
    const int m = n - 1;

    double sum_a = 0, sum_b = 0, sum_aa = 0, sum_bb = 0, sum_ab = 0;
#pragma omp parallel for schedule(static) reduction(+ : sum_a, sum_b, sum_aa, sum_bb, sum_ab)
    for (long long i = 0; i < samples; ++i) {
        RngStream rng(seed, static_cast<std::uint64_t>(i));
        double y[16];
        double mx = 0;
        for (int k = 0; k < m; ++k) {
            y[k] = rng.exponential();
            mx = std::max(mx, y[k]);
        }
        double w = 1;
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) w *= std::fabs(y[a] - y[b]);
        const double aw = (mx <= t) ? w : 0.0;
        sum_a += aw;
        sum_b += w;
        sum_aa += aw * aw;
        sum_bb += w * w;
        sum_ab += aw * w;
    }

    const double A = sum_a / samples, B = sum_b / samples;
    const double R = A / B;
    const double va = sum_aa / samples - A * A;
    const double vb = sum_bb / samples - B * B;
    const double cab = sum_ab / samples - A * B;
    const double var = (va - 2 * R * cab + R * R * vb) / (B * B * samples);

    LoeEstimate est;
    est.value = R;
    est.se = std::sqrt(std::max(var, 0.0));
    est.samples = samples;
    return est;
}

namespace {

SampleMatrix point_value_table(int n, const std::vector<std::vector<double>>& points,
                               const std::function<double(const std::vector<double>&)>& f) {
    SampleMatrix mat;
    for (int k = 1; k < n; ++k) mat.columns.push_back("u" + std::to_string(k));
    mat.columns.push_back("value");
    for (const auto& u : points) {
        if (static_cast<int>(u.size()) != n - 1) throw std::invalid_argument("point dimension mismatch");
        auto row = u;
        row.push_back(f(u));
        mat.rows.push_back(std::move(row));
    }
    return mat;
}

}  // namespace

SampleMatrix density_table(int n, PathModel model, const std::vector<std::vector<double>>& points) {
    return point_value_table(n, points,
                             [&](const std::vector<double>& u) { return density_from_paths(n, model, u); });
}

SampleMatrix recursive_density_table(int n, const std::vector<std::vector<double>>& points,
                                     double tol) {
    return point_value_table(n, points,
                             [&](const std::vector<double>& v) { return density_V_recursive(n, v, tol); });
}

SampleMatrix loe_cdf_table(int n, const std::vector<double>& ts, long long samples,
                           std::uint64_t seed) {
    SampleMatrix mat;
    mat.columns = {"t", "value", "error"};
    for (double t : ts) {
        const auto est = loe_cdf(n, t, samples, seed);
        mat.rows.push_back({t, est.value, est.se});
    }
    return mat;
}

}  // namespace oswap
