// Command-line driver: graph generation, matching/cover/survival Monte
// Carlo, exact-oracle comparisons, the minimax bound table, and the
// acceptance suite. Outputs are CSV or JSON; every row echoes the config
// hash and master seed so any row can be reproduced from its own metadata.
//
// Exit codes: 0 success, 2 invalid configuration, 3 resource cap hit.
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tuza/bounds.hpp"
#include "tuza/branching.hpp"
#include "tuza/covers.hpp"
#include "tuza/hypergraph.hpp"
#include "tuza/matching.hpp"
#include "tuza/sampling.hpp"
#include "tuza/verify.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitResourceCap = 3;

struct CommonOpts {
    int r = 3;
    int n = 30;
    double d = -1;
    double p = -1;
    int trials = 100;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "csv";
};

// Stable hash of the effective configuration, echoed into every row.
std::string config_hash(const std::string& canon) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : canon) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

// resolve (p, d) from whichever was given; d = (n - (r-1)) p
void resolve_density(CommonOpts& o) {
    const bool has_p = o.p >= 0, has_d = o.d >= 0;
    if (has_p == has_d) throw CLI::ValidationError("exactly one of --p / --d is required");
    if (has_d) o.p = tuza::p_from_d(o.d, o.n, o.r);
    else o.d = tuza::d_from_p(o.p, o.n, o.r);
    if (o.p < 0 || o.p > 1) throw CLI::ValidationError("derived p outside [0,1]");
}

// All output is buffered and written in one shot, so failures leave no
// partial files behind.
void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << payload;
    if (!f) throw std::runtime_error("write failed: " + out_path);
}

struct Table {
    std::vector<std::string> columns;
    std::vector<nlohmann::json> rows;

    void add(nlohmann::json row) { rows.push_back(std::move(row)); }

    std::string render(const std::string& format) const {
        if (format == "json") {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& r : rows) j.push_back(r);
            return j.dump(2) + "\n";
        }
        std::ostringstream os;
        for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
        os << "\n";
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < columns.size(); ++i) {
                const auto& v = r.at(columns[i]);
                os << (i ? "," : "");
                if (v.is_string()) os << v.get<std::string>();
                else if (v.is_boolean()) os << (v.get<bool>() ? "true" : "false");
                else os << v.dump();
            }
            os << "\n";
        }
        return os.str();
    }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_graph_params = true,
                std::vector<std::string> formats = {"csv", "json"}) {
    if (with_graph_params) {
        cmd->add_option("--r", o.r, "edge size r");
        cmd->add_option("--n", o.n, "number of vertices");
        cmd->add_option("--d", o.d, "expected co-degree d = (n-(r-1))p");
        cmd->add_option("--p", o.p, "edge probability");
    }
    cmd->add_option("--trials", o.trials, "number of Monte Carlo trials");
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--out", o.out, "output path (default: stdout)");
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
}

std::string canon_string(const CLI::App& cmd, const CommonOpts& o) {
    std::ostringstream os;
    os << cmd.get_name() << "|r=" << o.r << "|n=" << o.n << "|d=" << o.d << "|p=" << o.p
       << "|trials=" << o.trials << "|seed=" << o.seed;
    return os.str();
}

// ---- subcommand bodies ---------------------------------------------------

int run_gen(const CommonOpts& o_in) {
    CommonOpts o = o_in;
    resolve_density(o);
    tuza::RGraph g = tuza::sample_hypergraph(o.n, o.r, o.p, o.seed);
    std::string payload = o.format == "json" ? tuza::to_json(g).dump(2) + "\n" : tuza::to_text(g);
    emit(o.out, payload);
    return 0;
}

int run_matching_mc(const CLI::App& cmd, const CommonOpts& o_in) {
    CommonOpts o = o_in;
    resolve_density(o);
    const std::string hash = config_hash(canon_string(cmd, o));
    const double cnr1 = tuza::binom(o.n, o.r - 1);

    Table t;
    t.columns = {"row", "trial", "r", "n", "d", "p", "seed", "matching_size",
                 "density", "alpha", "config"};
    std::vector<double> densities;
    for (int i = 0; i < o.trials; ++i) {
        std::uint64_t s = tuza::sub_seed(o.seed, i);
        tuza::RGraph g = tuza::sample_hypergraph(o.n, o.r, o.p, tuza::sub_seed(s, 1));
        auto m = tuza::random_greedy_matching(g, tuza::sub_seed(s, 2));
        double density = o.r * static_cast<double>(m.edges.size()) / cnr1;
        densities.push_back(density);
        t.add({{"row", "trial"}, {"trial", i}, {"r", o.r}, {"n", o.n}, {"d", o.d},
               {"p", o.p}, {"seed", s}, {"matching_size", m.edges.size()},
               {"density", density}, {"alpha", tuza::alpha(o.r, o.d)}, {"config", hash}});
    }
    double mean = 0;
    for (double x : densities) mean += x;
    mean /= densities.size();
    double var = 0;
    for (double x : densities) var += (x - mean) * (x - mean);
    double se = densities.size() > 1
                    ? std::sqrt(var / (densities.size() - 1) / densities.size()) : 0.0;
    t.add({{"row", "summary"}, {"trial", o.trials}, {"r", o.r}, {"n", o.n}, {"d", o.d},
           {"p", o.p}, {"seed", o.seed}, {"matching_size", 0}, {"density", mean},
           {"alpha", tuza::alpha(o.r, o.d)}, {"config", hash},
           {"stderr", se}});
    if (t.rows.back().contains("stderr") && o.format == "csv") t.columns.push_back("stderr");
    for (auto& row : t.rows)
        if (!row.contains("stderr")) row["stderr"] = 0.0;
    emit(o.out, t.render(o.format));
    return 0;
}

struct CoverOpts {
    std::string construction = "r3-basic";
    int l = 2;
    int j = -1;  // -1: best over j
};

int run_cover_mc(const CLI::App& cmd, const CommonOpts& o_in, const CoverOpts& c) {
    CommonOpts o = o_in;
    resolve_density(o);
    const std::string id = c.construction;
    const bool window_family =
        id == "frankl-rodl" || id == "sidorenko" || id == "sidorenko-improved";
    int l = c.l;
    if (id.rfind("r3", 0) == 0) { if (o.r != 3) throw CLI::ValidationError(id + " needs --r 3"); l = 2; }
    else if (id.rfind("r4", 0) == 0) { if (o.r != 4) throw CLI::ValidationError(id + " needs --r 4"); l = 3; }
    else if (id.rfind("r5", 0) == 0) { if (o.r != 5) throw CLI::ValidationError(id + " needs --r 5"); l = 2; }
    else if (!window_family) throw CLI::ValidationError("unknown construction: " + id);
    if (window_family && (l < 1 || 2 * l > o.r))
        throw CLI::ValidationError("need 2 <= l <= r/2 for " + id);
    const std::string hash = config_hash(canon_string(cmd, o) + "|" + id + "|l=" +
                                         std::to_string(l) + "|j=" + std::to_string(c.j));
    const double cnr1 = tuza::binom(o.n, o.r - 1);

    double target;
    if (o.r >= 3 && o.r <= 5 && !window_family) target = tuza::beta(o.r, o.d);
    else if (id == "sidorenko-improved") target = tuza::psi(o.r, l, o.d);
    else if (id == "sidorenko") target = tuza::tau_bound_sidorenko(o.r, l);
    else target = tuza::tau_bound_fr(o.r, l);

    Table t;
    t.columns = {"construction", "r", "n", "d", "seed", "j", "cover_size", "shadow_size",
                 "ratio", "density", "target", "config"};
    for (int i = 0; i < o.trials; ++i) {
        std::uint64_t s = tuza::sub_seed(o.seed, i);
        tuza::RGraph g = tuza::sample_hypergraph(o.n, o.r, o.p, tuza::sub_seed(s, 1));
        tuza::VertexPartition part = tuza::sample_partition(o.n, l, tuza::sub_seed(s, 2));
        tuza::ParityFunction f{tuza::sub_seed(s, 3)};

        tuza::CoverFamily cov;
        int used_j = c.j;
        if (id == "r3-basic") cov = tuza::cover_r3(g, part, false);
        else if (id == "r3-improved") cov = tuza::cover_r3(g, part, true);
        else if (id == "r4-basic") cov = tuza::cover_r4(g, part, false);
        else if (id == "r4-improved") cov = tuza::cover_r4(g, part, true);
        else if (id == "r5-basic") cov = tuza::cover_r5(g, part, f, false);
        else if (id == "r5-improved") cov = tuza::cover_r5(g, part, f, true);
        else {
            auto build = [&](int j) {
                if (id == "frankl-rodl") return tuza::frankl_rodl_cover(g, part, j);
                if (id == "sidorenko") return tuza::sidorenko_cover(g, part, f, j);
                return tuza::improved_sidorenko_cover(g, part, f, j);
            };
            if (c.j >= 0) cov = build(c.j);
            else {
                auto [best, bj] = tuza::best_over_j(l, build);
                cov = std::move(best);
                used_j = bj;
            }
        }
        if (tuza::validate(g, cov))
            throw std::runtime_error("constructed family failed cover validation");
        std::size_t shadow_size = tuza::shadow_map(g).size();
        double ratio = shadow_size ? static_cast<double>(cov.sets.size()) / shadow_size : 0.0;
        t.add({{"construction", id}, {"r", o.r}, {"n", o.n}, {"d", o.d}, {"seed", s},
               {"j", used_j}, {"cover_size", cov.sets.size()}, {"shadow_size", shadow_size},
               {"ratio", ratio}, {"density", cov.sets.size() / cnr1}, {"target", target},
               {"config", hash}});
    }
    emit(o.out, t.render(o.format));
    return 0;
}

int run_survival_mc(const CLI::App& cmd, const CommonOpts& o, int depth_cap,
                    std::size_t node_cap) {
    if (o.d < 0) throw CLI::ValidationError("--d is required");
    const std::string hash = config_hash(canon_string(cmd, o));
    tuza::GWCaps caps;
    caps.depth_cap = depth_cap;
    caps.node_cap = node_cap;
    auto mc = tuza::survival_probability_mc(o.r, o.d, static_cast<std::size_t>(o.trials),
                                            o.seed, caps);
    double target = tuza::closed_form_survival(o.r, o.d, 1.0);
    double z = mc.stderr_ > 0 ? (mc.estimate - target) / mc.stderr_ : 0.0;
    Table t;
    t.columns = {"r", "d", "trials", "seed", "estimate", "stderr", "closed_form", "z", "config"};
    t.add({{"r", o.r}, {"d", o.d}, {"trials", mc.trials}, {"seed", o.seed},
           {"estimate", mc.estimate}, {"stderr", mc.stderr_}, {"closed_form", target},
           {"z", z}, {"config", hash}});
    emit(o.out, t.render(o.format));
    return 0;
}

int run_oracle_compare(const CLI::App& cmd, const CommonOpts& o_in,
                       std::vector<int> n_values, std::size_t max_edges) {
    CommonOpts o = o_in;
    if (o.d < 0) throw CLI::ValidationError("--d is required");
    if (n_values.empty()) n_values = {20, 30, 40};
    const std::string hash = config_hash(canon_string(cmd, o));
    tuza::OracleLimits lim;
    lim.max_edges = max_edges;

    Table t;
    t.columns = {"row", "n", "trial", "seed", "edges", "nu", "tau", "ratio", "capped", "config"};
    for (int n : n_values) {
        double p = tuza::p_from_d(o.d, n, o.r);
        double sum_ratio = 0;
        int counted = 0;
        for (int i = 0; i < o.trials; ++i) {
            std::uint64_t s = tuza::sub_seed(tuza::hash_combine(o.seed, n), i);
            tuza::RGraph g = tuza::sample_hypergraph(n, o.r, p, s);
            int nu = 0, tau = 0;
            bool capped = false;
            try {
                nu = tuza::exact_nu_total(g, o.r - 1, lim);
                tau = tuza::exact_tau_total(g, o.r - 1, lim);
            } catch (const tuza::TooLargeError&) {
                capped = true;  // flagged, not fatal
            }
            double ratio = (!capped && nu > 0) ? static_cast<double>(tau) / nu : 0.0;
            if (!capped && nu > 0) { sum_ratio += ratio; ++counted; }
            t.add({{"row", "trial"}, {"n", n}, {"trial", i}, {"seed", s},
                   {"edges", g.edges.size()}, {"nu", nu}, {"tau", tau}, {"ratio", ratio},
                   {"capped", capped}, {"config", hash}});
        }
        t.add({{"row", "summary"}, {"n", n}, {"trial", o.trials}, {"seed", o.seed},
               {"edges", 0}, {"nu", counted}, {"tau", 0},
               {"ratio", counted ? sum_ratio / counted : 0.0}, {"capped", false},
               {"config", hash}});
    }
    emit(o.out, t.render(o.format));
    return 0;
}

int run_bounds_table(const CommonOpts& o, int r_lo, int r_hi) {
    if (r_lo < 6 || r_hi < r_lo) throw CLI::ValidationError("need 6 <= r-lo <= r-hi");
    const std::string hash =
        config_hash("bounds-table|" + std::to_string(r_lo) + ".." + std::to_string(r_hi));
    Table t;
    t.columns = {"r", "value", "best_l", "arg_d", "grid_points", "refined", "config"};
    for (const auto& rep : tuza::minimax_table(r_lo, r_hi))
        t.add({{"r", rep.r}, {"value", rep.value}, {"best_l", rep.best_l},
               {"arg_d", rep.arg_d}, {"grid_points", rep.grid_points}, {"refined", true},
               {"config", hash}});
    emit(o.out, t.render(o.format));
    return 0;
}

int run_verify(const tuza::AcceptanceOptions& opt) {
    bool all_ok = true;
    for (const auto& c : tuza::run_acceptance(opt)) {
        const char* tag = c.informational ? "NOTE" : (c.passed ? "PASS" : "FAIL");
        std::cout << tag << " criterion " << c.id << ": " << c.name << " — " << c.detail
                  << "\n";
        if (!c.informational && !c.passed) all_ok = false;
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorics laboratory for sparse random r-uniform hypergraphs"};
    app.require_subcommand(1);
    // key=value file with one [subcommand] section per command; command-line
    // flags override file values
    app.set_config("--config", "", "configuration file ([subcommand] sections of key=value lines)");

    CommonOpts gen_o, match_o, cover_o, surv_o, oracle_o, table_o;
    CoverOpts cover_extra;
    int surv_depth_cap = 1000;
    std::size_t surv_node_cap = 2000000;
    std::vector<int> oracle_ns;
    std::size_t oracle_cap = 40;
    int table_lo = 6, table_hi = 85;
    tuza::AcceptanceOptions accept;

    auto* gen = app.add_subcommand("gen", "sample a random hypergraph and serialize it");
    gen_o.format = "text";
    add_common(gen, gen_o, true, {"text", "json"});

    auto* mm = app.add_subcommand("matching-mc", "greedy matching density Monte Carlo");
    add_common(mm, match_o);

    auto* cm = app.add_subcommand("cover-mc", "cover construction Monte Carlo");
    add_common(cm, cover_o);
    cm->add_option("--construction", cover_extra.construction,
                   "r3-basic|r3-improved|r4-basic|r4-improved|r5-basic|r5-improved|"
                   "frankl-rodl|sidorenko|sidorenko-improved");
    cm->add_option("--l", cover_extra.l, "number of partition blocks (window families)");
    cm->add_option("--j", cover_extra.j, "window shift; -1 picks the smallest family");

    auto* sm = app.add_subcommand("survival-mc", "branching-tree survival Monte Carlo");
    add_common(sm, surv_o);
    sm->add_option("--depth-cap", surv_depth_cap, "tree depth cap");
    sm->add_option("--node-cap", surv_node_cap, "tree node cap");

    auto* oc = app.add_subcommand("oracle-compare", "exact tau vs nu on small instances");
    add_common(oc, oracle_o);
    oc->add_option("--n-list", oracle_ns, "vertex counts to sweep (default 20 30 40)");
    oc->add_option("--max-edges", oracle_cap, "per-component oracle edge cap");

    auto* bt = app.add_subcommand("bounds-table", "minimax cover/matching ratio table");
    add_common(bt, table_o, false);
    bt->add_option("--r-lo", table_lo, "first r");
    bt->add_option("--r-hi", table_hi, "last r");

    auto* vf = app.add_subcommand("verify", "run the acceptance suite");
    vf->add_option("--cover-instances", accept.cover_instances, "instances per construction");
    vf->add_option("--survival-trials", accept.survival_trials, "survival MC trials");
    vf->add_option("--density-trials", accept.density_trials, "density MC trials");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (gen->parsed()) return run_gen(gen_o);
        if (mm->parsed()) return run_matching_mc(*mm, match_o);
        if (cm->parsed()) return run_cover_mc(*cm, cover_o, cover_extra);
        if (sm->parsed()) return run_survival_mc(*sm, surv_o, surv_depth_cap, surv_node_cap);
        if (oc->parsed()) return run_oracle_compare(*oc, oracle_o, oracle_ns, oracle_cap);
        if (bt->parsed()) return run_bounds_table(table_o, table_lo, table_hi);
        if (vf->parsed()) return run_verify(accept);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const tuza::TooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::string msg = e.what();
        if (msg.find("truncat") != std::string::npos || msg.find("cap") != std::string::npos)
            return kExitResourceCap;
        return 1;
    }
    return kExitInvalid;
}
