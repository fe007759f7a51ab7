#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "oswap/cache.hpp"
#include "oswap/densities.hpp"
#include "oswap/edelman_greene.hpp"
#include "oswap/genfun.hpp"
#include "oswap/processes.hpp"
#include "oswap/rsk_burge.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace oswap;

namespace {

struct RunConfig {
    std::string command;
    int n = 4;
    std::uint64_t seed = 1;
    long long replicas = 100000;
    double tol = 1e-6;
    std::string method = "canonical";
    int workers = 0;
    std::string cache_dir = "oswap-cache";
    std::string out;

    std::string kind = "syt";
    std::string target;
    std::string model = "osp";
    std::string lhs, rhs;
    std::string functionals = "max";
    std::string shape;
    std::string show_component;
    bool bernoulli = false;
    int cap = 4;
    int points = 20;
    int box_rows = 3, box_cols = 3, max_entry = 2;
    double alpha = 1e-3;
    std::string density_kind = "paths";
    std::vector<std::string> at;
    std::vector<double> ts;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["command"] = command;
        j["n"] = n;
        j["seed"] = seed;
        j["replicas"] = replicas;
        j["tol"] = tol;
        j["method"] = method;
        j["workers"] = workers;
        j["cache_dir"] = cache_dir;
        j["out"] = out;
        if (!target.empty()) j["target"] = target;
        if (command == "enumerate") j["kind"] = kind;
        if (command == "simulate") j["model"] = model;
        if (command == "compare") {
            j["lhs"] = lhs;
            j["rhs"] = rhs;
            j["functionals"] = functionals;
            j["alpha"] = alpha;
        }
        return j;
    }
};

class Reporter {
public:
    Reporter(const RunConfig& cfg) : cfg_(cfg) {}
    void add(const std::string& line, const nlohmann::json& detail) {
        std::puts(line.c_str());
        nlohmann::json rec;
        rec["config"] = cfg_.to_json();
        rec["report"] = detail;
        records_.push_back(rec.dump());
    }
    void flush() {
        if (cfg_.out.empty()) return;
        const std::filesystem::path p(cfg_.out);
        if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
        std::ofstream out(p);
        for (const auto& r : records_) out << r << '\n';
    }

private:
    const RunConfig& cfg_;
    std::vector<std::string> records_;
};

void apply_workers(const RunConfig& cfg) {
#ifdef _OPENMP
    if (cfg.workers > 0) omp_set_num_threads(cfg.workers);
#endif
}

void require_exact_range(int n) {
    if (n < 2 || n > 6) throw CLI::ValidationError("--n", "exact verification supports 2 <= n <= 6");
}

void require_sim_range(int n) {
    if (n < 2 || n > 12) throw CLI::ValidationError("--n", "simulators support 2 <= n <= 12");
}

int cmd_enumerate(RunConfig& cfg) {
    require_exact_range(cfg.n);
    Reporter rep(cfg);
    const auto lines = enumeration_lines(cfg.kind, cfg.n);
    const std::filesystem::path path = cfg.out.empty()
        ? std::filesystem::path(cfg.cache_dir) / (cfg.kind + "_n" + std::to_string(cfg.n) + ".cache")
        : std::filesystem::path(cfg.out);
    write_enumeration_cache(path, cfg.kind, cfg.n, lines);
    const auto reread = read_cache_lines(path, cfg.kind, cfg.n);  // validates the count header
    nlohmann::json detail;
    detail["kind"] = cfg.kind;
    detail["count"] = lines.size();
    detail["path"] = path.string();
    rep.add("enumerate " + cfg.kind + " n=" + std::to_string(cfg.n) +
                " count=" + std::to_string(lines.size()) + " -> " + path.string(),
            detail);
    cfg.out.clear();  // records already written next to the cache, not as a report file
    return reread.size() == lines.size() ? 0 : 1;
}

int verify_eg(RunConfig& cfg, Reporter& rep) {
    require_exact_range(cfg.n);
    const auto r = verify_eg_params(cfg.n);
    nlohmann::json detail;
    detail["checked"] = r.checked;
    detail["failures"] = r.failures;
    detail["examples"] = r.failure_examples;
    rep.add(std::string(r.pass ? "PASS" : "FAIL") + " eg-params n=" + std::to_string(cfg.n) +
                " checked=" + std::to_string(r.checked) + " failures=" + std::to_string(r.failures),
            detail);
    return r.pass ? 0 : 1;
}

int verify_identity_cmd(RunConfig& cfg, Reporter& rep) {
    require_exact_range(cfg.n);
    const auto method =
        cfg.method == "evaluation" ? IdentityMethod::evaluation : IdentityMethod::canonical;
    const auto r = verify_identity(cfg.n, method, cfg.points, cfg.seed);
    nlohmann::json detail;
    detail["equal"] = r.equal;
    detail["terms_tableaux"] = r.terms_lhs;
    detail["terms_networks"] = r.terms_rhs;
    detail["components"] = r.components;
    detail["seconds"] = r.seconds;
    detail["mismatches"] = r.mismatches;
    if (method == IdentityMethod::evaluation) detail["points"] = r.points;
    std::ostringstream line;
    line << (r.equal ? "EQUAL" : "NOT-EQUAL") << " identity n=" << cfg.n << " method=" << cfg.method
         << " terms=" << r.terms_lhs << "/" << r.terms_rhs << " components=" << r.components
         << " seconds=" << r.seconds;
    rep.add(line.str(), detail);

    if (!cfg.show_component.empty()) {
        const auto perm = Permutation::parse(cfg.show_component);
        if (perm.size() != cfg.n - 1)
            throw CLI::ValidationError("--show-component", "permutation must lie in S_{n-1}");
        const auto F = accumulate_F(cfg.n);
        const auto G = accumulate_G(cfg.n);
        const auto it = F.comp.find(perm.key());
        if (it == F.comp.end()) {
            rep.add("component " + cfg.show_component + " is zero", {});
        } else {
            const auto rec = recombine(it->second);
            nlohmann::json detail2;
            detail2["component"] = cfg.show_component;
            detail2["recombined"] = rec.to_string();
            detail2["basis_terms"] = it->second.to_text();
            const auto itG = G.comp.find(perm.key());
            detail2["matches_networks_side"] =
                itG != G.comp.end() && it->second.same_as(itG->second);
            rep.add("component " + cfg.show_component + " = " + rec.to_string(), detail2);
        }
    }
    return r.equal ? 0 : 1;
}

int verify_rsk_burge(RunConfig& cfg, Reporter& rep) {
    const auto r = rsk_burge_sweep(cfg.box_rows, cfg.box_cols, cfg.max_entry);
    nlohmann::json detail;
    detail["inputs"] = r.inputs;
    detail["checks"] = r.checks;
    detail["failures"] = r.failures;
    detail["examples"] = r.failure_examples;
    std::ostringstream line;
    line << (r.pass() ? "PASS" : "FAIL") << " rsk-burge box=" << cfg.box_rows << "x" << cfg.box_cols
         << " max-entry=" << cfg.max_entry << " inputs=" << r.inputs << " failures=" << r.failures;
    rep.add(line.str(), detail);
    return r.pass() ? 0 : 1;
}

int verify_thm22(RunConfig& cfg, Reporter& rep) {
    const Rational p(1, 2);
    if (cfg.bernoulli) {
        const YoungDiagram shape = cfg.shape.empty() ? YoungDiagram({2, 2})
                                                     : YoungDiagram::parse(cfg.shape);
        const auto lpp_law =
            border_distribution_exact(shape, p, cfg.cap, WhichTableau::lpp, WeightLaw::bernoulli01);
        const auto dual_law =
            border_distribution_exact(shape, p, cfg.cap, WhichTableau::dual, WeightLaw::bernoulli01);
        const bool unequal = lpp_law.prob != dual_law.prob;
        bool counterexample_ok = unequal;
        if (shape == YoungDiagram({2, 2})) {
            const std::vector<long long> v{2, 3, 1};
            const auto it = lpp_law.prob.find(v);
            counterexample_ok = it != lpp_law.prob.end() && it->second == Rational(1, 16) &&
                                dual_law.prob.count(v) == 0;
        }
        nlohmann::json detail;
        detail["shape"] = shape.to_string();
        detail["law"] = "bernoulli01";
        detail["unequal"] = unequal;
        detail["counterexample_exact"] = counterexample_ok;
        rep.add(std::string(counterexample_ok ? "EXPECTED-INEQUAL" : "FAIL") +
                    " thm22-bernoulli shape=" + shape.to_string() +
                    (shape == YoungDiagram({2, 2}) ? " P_L(2,3,1)=1/16 vs P_L*(2,3,1)=0" : ""),
                detail);
        return counterexample_ok ? 0 : 1;
    }

    std::vector<YoungDiagram> shapes;
    if (cfg.shape.empty()) {
        shapes.push_back(YoungDiagram({2, 2}));
        shapes.push_back(YoungDiagram({3, 2, 1}));
    } else {
        shapes.push_back(YoungDiagram::parse(cfg.shape));
    }
    bool all_ok = true;
    for (const auto& shape : shapes) {
        const auto lpp_law = border_distribution_exact(shape, p, cfg.cap, WhichTableau::lpp);
        const auto dual_law = border_distribution_exact(shape, p, cfg.cap, WhichTableau::dual);
        const bool equal = lpp_law.prob == dual_law.prob;
        all_ok = all_ok && equal;
        nlohmann::json detail;
        detail["shape"] = shape.to_string();
        detail["law"] = "geometric(p=1/2)";
        detail["cap"] = cfg.cap;
        detail["vectors"] = lpp_law.prob.size();
        detail["equal"] = equal;
        std::ostringstream mass;
        mass << lpp_law.total_mass();
        detail["mass"] = mass.str();
        rep.add(std::string(equal ? "PASS" : "FAIL") + " thm22 shape=" + shape.to_string() +
                    " vectors=" + std::to_string(lpp_law.prob.size()),
                detail);
    }
    return all_ok ? 0 : 1;
}

int cmd_verify(RunConfig& cfg) {
    Reporter rep(cfg);
    int rc = 2;
    if (cfg.target == "eg")
        rc = verify_eg(cfg, rep);
    else if (cfg.target == "identity")
        rc = verify_identity_cmd(cfg, rep);
    else if (cfg.target == "rsk-burge")
        rc = verify_rsk_burge(cfg, rep);
    else if (cfg.target == "thm22")
        rc = verify_thm22(cfg, rep);
    else
        throw CLI::ValidationError("--target", "must be eg|identity|rsk-burge|thm22");
    rep.flush();
    return rc;
}

int cmd_simulate(RunConfig& cfg) {
    require_sim_range(cfg.n);
    Reporter rep(cfg);
    const auto model = model_from_string(cfg.model);
    const auto mat = sample_batch(model, cfg.n, cfg.replicas, cfg.seed);
    if (cfg.out.empty()) throw CLI::ValidationError("--out", "simulate requires an output path");
    write_csv(cfg.out, mat);
    nlohmann::json detail;
    detail["rows"] = mat.rows.size();
    detail["columns"] = mat.columns;
    rep.add("simulate " + cfg.model + " n=" + std::to_string(cfg.n) + " replicas=" +
                std::to_string(cfg.replicas) + " seed=" + std::to_string(cfg.seed) + " -> " + cfg.out,
            detail);
    return 0;
}

int cmd_density(RunConfig& cfg) {
    Reporter rep(cfg);
    if (cfg.out.empty()) throw CLI::ValidationError("--out", "density requires an output path");
    SampleMatrix mat;
    if (cfg.density_kind == "loe") {
        if (cfg.ts.empty()) throw CLI::ValidationError("--t", "loe needs at least one t");
        require_sim_range(cfg.n);
        mat = loe_cdf_table(cfg.n, cfg.ts, cfg.replicas, cfg.seed);
    } else {
        if (cfg.n < 2 || cfg.n > 4)
            throw CLI::ValidationError("--n", "exact density sums support 2 <= n <= 4");
        if (cfg.at.empty()) throw CLI::ValidationError("--at", "need at least one evaluation point");
        std::vector<std::vector<double>> points;
        for (const auto& spec : cfg.at) {
            std::vector<double> u;
            std::istringstream is(spec);
            std::string tok;
            while (std::getline(is, tok, ',')) u.push_back(std::stod(tok));
            points.push_back(std::move(u));
        }
        if (cfg.density_kind == "paths-osp")
            mat = density_table(cfg.n, PathModel::osp, points);
        else if (cfg.density_kind == "paths" || cfg.density_kind == "paths-growth")
            mat = density_table(cfg.n, PathModel::growth, points);
        else if (cfg.density_kind == "recursive")
            mat = recursive_density_table(cfg.n, points, cfg.tol);
        else
            throw CLI::ValidationError("--kind", "must be paths|paths-osp|paths-growth|recursive|loe");
    }
    write_csv(cfg.out, mat);
    nlohmann::json detail;
    detail["kind"] = cfg.density_kind;
    detail["rows"] = mat.rows.size();
    // --out carries the data table; the report goes to stdout only
    rep.add("density " + cfg.density_kind + " n=" + std::to_string(cfg.n) + " rows=" +
                std::to_string(mat.rows.size()) + " -> " + cfg.out,
            detail);
    return 0;
}

// "path#prefix" selects the columns starting with the prefix
std::pair<SampleMatrix, std::string> load_selected(const std::string& spec) {
    const auto hash = spec.find('#');
    const std::string path = spec.substr(0, hash == std::string::npos ? spec.size() : hash);
    const std::string prefix = hash == std::string::npos ? "" : spec.substr(hash + 1);
    SampleMatrix full = read_csv(path);
    if (prefix.empty()) return {std::move(full), path};
    SampleMatrix sel;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < full.columns.size(); ++i)
        if (full.columns[i].rfind(prefix, 0) == 0) {
            sel.columns.push_back(full.columns[i]);
            idx.push_back(i);
        }
    if (sel.columns.empty()) throw std::runtime_error("no columns with prefix " + prefix);
    for (const auto& row : full.rows) {
        std::vector<double> r;
        r.reserve(idx.size());
        for (std::size_t i : idx) r.push_back(row[i]);
        sel.rows.push_back(std::move(r));
    }
    return {std::move(sel), path + "#" + prefix};
}

int cmd_compare(RunConfig& cfg) {
    Reporter rep(cfg);
    auto [lhs, lhs_name] = load_selected(cfg.lhs);
    auto [rhs, rhs_name] = load_selected(cfg.rhs);
    if (lhs.columns.size() != rhs.columns.size())
        throw CLI::ValidationError("--rhs", "schema mismatch: column counts differ");
    const std::size_t ncols = lhs.columns.size();
    if (ncols < 2) throw CLI::ValidationError("--lhs", "need at least one coordinate and a max column");

    bool all_pass = true;
    auto run_ks = [&](const std::string& label, std::vector<double> a, std::vector<double> b) {
        auto r = ks_two_sample(label, std::move(a), std::move(b), cfg.alpha);
        nlohmann::json detail = nlohmann::json::parse(r.to_json());
        rep.add(r.summary_line(), detail);
        all_pass = all_pass && r.pass;
    };

    // positional coordinate columns; the last column is the max functional
    for (std::size_t c = 0; c + 1 < ncols; ++c)
        run_ks("coord_" + lhs.columns[c] + "_vs_" + rhs.columns[c], lhs.column(lhs.columns[c]),
               rhs.column(rhs.columns[c]));

    auto col_by_index = [](const SampleMatrix& m, std::size_t i) {
        std::vector<double> v;
        v.reserve(m.rows.size());
        for (const auto& r : m.rows) v.push_back(r[i]);
        return v;
    };
    std::istringstream fns(cfg.functionals);
    std::string token;
    while (std::getline(fns, token, ',')) {
        if (token == "max") {
            run_ks("max", col_by_index(lhs, ncols - 1), col_by_index(rhs, ncols - 1));
        } else if (token == "sum") {
            auto sum_of = [&](const SampleMatrix& m) {
                std::vector<double> v;
                for (const auto& r : m.rows) {
                    double s = 0;
                    for (std::size_t c = 0; c + 1 < ncols; ++c) s += r[c];
                    v.push_back(s);
                }
                return v;
            };
            run_ks("sum", sum_of(lhs), sum_of(rhs));
        } else if (token.rfind("lin:", 0) == 0) {
            // lin:k=w,k=w over 1-based coordinate indices
            std::vector<std::pair<int, double>> weights;
            std::istringstream ws(token.substr(4));
            std::string pair;
            while (std::getline(ws, pair, ';')) {
                const auto eq = pair.find('=');
                if (eq == std::string::npos)
                    throw CLI::ValidationError("--functionals", "lin expects k=w pairs");
                weights.push_back({std::stoi(pair.substr(0, eq)), std::stod(pair.substr(eq + 1))});
            }
            auto lin_of = [&](const SampleMatrix& m) {
                std::vector<double> v;
                for (const auto& r : m.rows) {
                    double s = 0;
                    for (const auto& [k, w] : weights) s += w * r[k - 1];
                    v.push_back(s);
                }
                return v;
            };
            run_ks(token, lin_of(lhs), lin_of(rhs));
        } else {
            throw CLI::ValidationError("--functionals", "unknown functional " + token);
        }
    }
    rep.flush();
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics and stochastic simulation workbench for sorting networks, "
                 "staircase tableaux, and last passage percolation"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* enumerate = app.add_subcommand("enumerate", "materialize an enumeration cache");
    enumerate->add_option("--kind", cfg.kind, "syt|networks")->required();
    enumerate->add_option("--n", cfg.n, "order")->required();
    enumerate->add_option("--out", cfg.out, "output file (default: cache dir)");
    enumerate->add_option("--cache-dir", cfg.cache_dir, "cache directory");
    enumerate->add_option("--workers", cfg.workers, "worker threads");

    auto* verify = app.add_subcommand("verify", "run an exact or statistical verification");
    verify->add_option("--target", cfg.target, "eg|identity|rsk-burge|thm22")->required();
    verify->add_option("--n", cfg.n, "order");
    verify->add_option("--method", cfg.method, "canonical|evaluation")
        ->check(CLI::IsMember({"canonical", "evaluation"}));
    verify->add_option("--points", cfg.points, "evaluation points");
    verify->add_option("--seed", cfg.seed, "rng seed");
    verify->add_option("--shape", cfg.shape, "partition, e.g. 2,2");
    verify->add_flag("--bernoulli", cfg.bernoulli, "uniform {0,1} weights for thm22");
    verify->add_option("--cap", cfg.cap, "max border value for thm22");
    verify->add_option("--box-rows", cfg.box_rows, "rsk-burge bounding box rows");
    verify->add_option("--box-cols", cfg.box_cols, "rsk-burge bounding box cols");
    verify->add_option("--max-entry", cfg.max_entry, "rsk-burge max entry");
    verify->add_option("--show-component", cfg.show_component,
                       "print one identity component, e.g. 1,2,3");
    verify->add_option("--workers", cfg.workers, "worker threads");
    verify->add_option("--tol", cfg.tol, "numeric tolerance");
    verify->add_option("--out", cfg.out, "report file (jsonl)");

    auto* simulate = app.add_subcommand("simulate", "sample replicas to CSV");
    simulate->add_option("--model", cfg.model, "osp|osp-clocks|growth|lpp")->required();
    simulate->add_option("--n", cfg.n, "order")->required();
    simulate->add_option("--replicas", cfg.replicas, "replica count");
    simulate->add_option("--seed", cfg.seed, "rng seed");
    simulate->add_option("--workers", cfg.workers, "worker threads");
    simulate->add_option("--out", cfg.out, "output csv")->required();

    auto* density = app.add_subcommand("density", "evaluate density and CDF tables to CSV");
    density->add_option("--kind", cfg.density_kind, "paths|paths-osp|paths-growth|recursive|loe");
    density->add_option("--n", cfg.n, "order")->required();
    density->add_option("--at", cfg.at, "evaluation point, e.g. 0.5,1,1.5 (repeatable)");
    density->add_option("--t", cfg.ts, "loe thresholds (repeatable)");
    density->add_option("--tol", cfg.tol, "quadrature tolerance");
    density->add_option("--replicas", cfg.replicas, "loe sample count");
    density->add_option("--seed", cfg.seed, "rng seed");
    density->add_option("--workers", cfg.workers, "worker threads");
    density->add_option("--out", cfg.out, "output csv")->required();

    auto* compare = app.add_subcommand("compare", "two-sample KS tests between CSV files");
    compare->add_option("--lhs", cfg.lhs, "csv path, optionally path#prefix")->required();
    compare->add_option("--rhs", cfg.rhs, "csv path, optionally path#prefix")->required();
    compare->add_option("--functionals", cfg.functionals, "comma list: max,sum,lin:k=w;k=w");
    compare->add_option("--alpha", cfg.alpha, "acceptance threshold on p-values");
    compare->add_option("--out", cfg.out, "report file (jsonl)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    apply_workers(cfg);
    try {
        if (enumerate->parsed()) return cmd_enumerate(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (simulate->parsed()) return cmd_simulate(cfg);
        if (density->parsed()) return cmd_density(cfg);
        if (compare->parsed()) return cmd_compare(cfg);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
