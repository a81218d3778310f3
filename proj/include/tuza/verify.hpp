// verify.hpp - the acceptance suite: ten numbered checks covering the table
// reproduction, oracle equivalences, Monte Carlo closed-form targets, cover
// validity, and the finite analytic verifications. Shared by the acceptance
// binary and the `verify` subcommand.
#ifndef TUZA_VERIFY_HPP
#define TUZA_VERIFY_HPP

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "branching.hpp"
#include "covers.hpp"
#include "hypergraph.hpp"
#include "matching.hpp"
#include "sampling.hpp"

namespace tuza {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    bool informational = false;
    std::string detail;
};

namespace verify_detail {

// Published minimax ratios for r = 6..85, four decimals.
inline const std::vector<double>& reference_minimax() {
    static const std::vector<double> v = {
        0.7805, 0.7064, 0.6789, 0.6804, 0.6990, 0.7062, 0.6741, 0.6565, 0.6503, 0.6526,
        0.6613, 0.6638, 0.6484, 0.6392, 0.6353, 0.6357, 0.6397, 0.6465, 0.6369, 0.6300,
        0.6263, 0.6253, 0.6266, 0.6299, 0.6309, 0.6248, 0.6209, 0.6188, 0.6185, 0.6196,
        0.6221, 0.6220, 0.6178, 0.6151, 0.6136, 0.6134, 0.6141, 0.6159, 0.6165, 0.6132,
        0.6110, 0.6097, 0.6093, 0.6098, 0.6109, 0.6127, 0.6099, 0.6080, 0.6067, 0.6062,
        0.6063, 0.6070, 0.6082, 0.6075, 0.6057, 0.6044, 0.6037, 0.6035, 0.6038, 0.6046,
        0.6058, 0.6040, 0.6026, 0.6018, 0.6014, 0.6013, 0.6017, 0.6025, 0.6027, 0.6013,
        0.6003, 0.5997, 0.5994, 0.5995, 0.5999, 0.6005, 0.6003, 0.5992, 0.5984, 0.5979};
    return v;
}

// Realize a sampled branching tree as a labelled r-uniform hypergraph tree:
// the root set gets labels 0..r-2, every edge appends one fresh vertex to
// the vertex set of its base.
inline RGraph tree_to_graph(const GWTree& t) {
    const int r = t.r;
    std::vector<VSet> node_verts(t.nodes.size());
    VSet root(r - 1);
    for (int i = 0; i < r - 1; ++i) root[i] = i;
    node_verts[0] = root;
    RGraph g;
    g.r = r;
    int next_label = r - 1;
    for (const auto& e : t.edges) {
        VSet everts = node_verts[e.base];
        everts.push_back(next_label++);
        std::sort(everts.begin(), everts.end());
        int j = 0;
        for (auto& f : facets(everts)) {
            if (f == node_verts[e.base]) continue;
            node_verts[e.first_child + j] = std::move(f);
            ++j;
        }
        g.edges.push_back(std::move(everts));
    }
    g.n = next_label;
    g.normalize();
    return g;
}

inline RGraph complete_graph(int n, int r) {
    RGraph g;
    g.n = n;
    g.r = r;
    VSet all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    g.edges = subsets_of_size(all, r);
    g.normalize();
    return g;
}

// admissible n window inside [20, 60]: small enough to keep the expected
// edge count manageable, large enough that p = d/(n-(r-1)) <= 1
inline std::pair<int, int> n_window_for(int r, double d, double edge_budget = 60000.0) {
    int lo = 20;
    while (d / (lo - (r - 1)) > 1.0 && lo < 60) ++lo;
    int hi = lo;
    for (int n = lo; n <= 60; ++n) {
        double expect = binom(n, r) * d / (n - (r - 1));
        if (expect <= edge_budget) hi = n;
    }
    return {lo, hi};
}

struct Mc {
    double mean = 0, stderr_ = 0;
    void from(const std::vector<double>& xs) {
        double s = 0;
        for (double x : xs) s += x;
        mean = s / xs.size();
        double v = 0;
        for (double x : xs) v += (x - mean) * (x - mean);
        stderr_ = std::sqrt(v / (xs.size() - 1) / xs.size());
    }
};

} // namespace verify_detail

// 1. minimax table r = 6..85: within ±0.0005 for >= 75 rows, ±0.002 for all.
inline CriterionResult criterion_table() {
    CriterionResult res{1, "minimax table r=6..85 matches reference", false, false, ""};
    const auto& ref = verify_detail::reference_minimax();
    int tight = 0, loose = 0;
    double worst = 0;
    for (int r = 6; r <= 85; ++r) {
        double v = minimax_ratio(r).value;
        double diff = std::fabs(v - ref[r - 6]);
        worst = std::max(worst, diff);
        if (diff <= 0.0005) ++tight;
        if (diff <= 0.002) ++loose;
    }
    res.passed = tight >= 75 && loose == 80;
    std::ostringstream os;
    os << tight << "/80 within 5e-4, " << loose << "/80 within 2e-3, worst |diff| = " << worst;
    res.detail = os.str();
    return res;
}

// 2. zeta_1: Stirling formula == brute-force enumeration, exact rationals.
inline CriterionResult criterion_zeta() {
    CriterionResult res{2, "zeta_1 formula matches enumeration (r-1 <= 12, l <= 5)", false, false, ""};
    int checked = 0;
    for (int r = 3; r <= 13; ++r)
        for (int l = 1; l <= 5; ++l) {
            if (zeta1_formula(r, l) != zeta1_enumeration(r, l)) {
                res.detail = "mismatch at r=" + std::to_string(r) + " l=" + std::to_string(l);
                return res;
            }
            ++checked;
        }
    bool spot = zeta1_formula(6, 2) == BigRat(20, 32);
    res.passed = spot;
    res.detail = std::to_string(checked) + " pairs equal; zeta_1(6,2) == 20/32: " +
                 (spot ? "yes" : "NO");
    return res;
}

// 3. survival MC vs ((r-1)d+1)^(-1/(r-1)) within 3 sigma, >= 8 of 9 cells.
inline CriterionResult criterion_survival(std::size_t trials = 100000,
                                          std::uint64_t seed = 0x5u) {
    CriterionResult res{3, "survival probability matches closed form (8/9 cells)", false, false, ""};
    int hits = 0, cells = 0;
    std::ostringstream os;
    for (int r : {3, 4, 5})
        for (double d : {0.5, 1.0, 2.0}) {
            auto mc = survival_probability_mc(r, d, trials, sub_seed(seed, cells));
            double target = closed_form_survival(r, d, 1.0);
            double z = (mc.estimate - target) / (mc.stderr_ > 0 ? mc.stderr_ : 1e-12);
            if (std::fabs(z) <= 3.0) ++hits;
            else os << " miss(r=" << r << ",d=" << d << ",z=" << z << ")";
            ++cells;
        }
    res.passed = hits >= 8;
    res.detail = std::to_string(hits) + "/9 cells within 3 sigma" + os.str();
    return res;
}

// 4. tau == nu on finite subcritical branching trees, 100% of >= 500 cases.
inline CriterionResult criterion_tree_equality(std::uint64_t seed = 0x7u) {
    CriterionResult res{4, "tau == nu on sampled finite trees", false, false, ""};
    int equal = 0, total = 0;
    for (int r : {3, 4}) {
        int done = 0;
        std::uint64_t i = 0;
        while (done < 250) {
            GWTree t = sample_gw_tree(r, 0.3, {}, sub_seed(hash_combine(seed, r), i++));
            if (t.truncated() || t.edges.empty() || t.edges.size() > 40) continue;
            RGraph g = verify_detail::tree_to_graph(t);
            int nu = exact_nu(g, r - 1);
            int tau = exact_tau(g, r - 1);
            ++total;
            ++done;
            if (nu == tau) ++equal;
        }
    }
    res.passed = equal == total && total >= 500;
    res.detail = std::to_string(equal) + "/" + std::to_string(total) + " trees with tau == nu";
    return res;
}

// 5. complete r-graph on r+1 vertices: nu = 1, tau = ceil((r+1)/2).
inline CriterionResult criterion_extremal() {
    CriterionResult res{5, "complete graph on r+1 vertices: nu=1, tau=ceil((r+1)/2)", false, false, ""};
    std::ostringstream os;
    bool ok = true;
    for (int r : {3, 4, 5, 6}) {
        RGraph g = verify_detail::complete_graph(r + 1, r);
        int nu = exact_nu(g, r - 1);
        int tau = exact_tau(g, r - 1);
        int want_tau = (r + 2) / 2;
        if (nu != 1 || tau != want_tau) ok = false;
        os << " r=" << r << ":(nu=" << nu << ",tau=" << tau << ")";
    }
    res.passed = ok;
    res.detail = os.str().substr(1);
    return res;
}

namespace verify_detail {

struct SuiteStats {
    long violations = 0;
    long instances = 0;
    long identity_failures = 0;  // modular-window counting identity
};

inline void run_construction_suite(const std::string& id, int instances, std::uint64_t seed,
                                   SuiteStats& st) {
    int r = 3, l = 2;
    if (id.rfind("r4", 0) == 0) { r = 4; l = 3; }
    else if (id.rfind("r5", 0) == 0) { r = 5; l = 2; }
    else if (id.rfind("r3", 0) == 0) { r = 3; l = 2; }
    else { r = 6; l = 2; }
    bool improved = id.find("improved") != std::string::npos && id[0] == 'r';
    // heaviest cell: d = 20 needs n >= d + r - 1 for p <= 1, which at r = 6
    // makes every admissible instance enormous; use d = 5 there instead
    const double d_big = r == 6 ? 5.0 : 20.0;
    const double dvals[] = {0.5, 1.0, 2.0, d_big};

    for (int i = 0; i < instances; ++i) {
        std::uint64_t s = sub_seed(seed, i);
        double d = dvals[i % 4];
        auto [n_lo, n_hi] = n_window_for(r, d);
        int n = n_lo + static_cast<int>(unit_at(s, 1) * (n_hi - n_lo + 1)) % (n_hi - n_lo + 1);
        RGraph g = sample_hypergraph(n, r, p_from_d(d, n, r), sub_seed(s, 2));
        VertexPartition p = sample_partition(n, l, sub_seed(s, 3));
        ParityFunction f{sub_seed(s, 4)};

        CoverFamily c;
        if (id == "r3-basic" || id == "r3-improved") c = cover_r3(g, p, improved);
        else if (id == "r4-basic" || id == "r4-improved") c = cover_r4(g, p, improved);
        else if (id == "r5-basic" || id == "r5-improved") c = cover_r5(g, p, f, improved);
        else if (id == "frankl-rodl") {
            // all window families: validity for each, plus the exact
            // counting identity sum_j |C_j| = |D| + sum_i |A_i|
            auto smap = shadow_map(g);
            std::size_t total = 0;
            for (int j = 0; j < l; ++j) {
                CoverFamily cj = frankl_rodl_cover(g, smap, p, j);
                total += cj.sets.size();
                if (validate(g, cj)) ++st.violations;
            }
            std::size_t expect = smap.size();
            for (int blk = 0; blk < l; ++blk)
                for (const auto& [sigma, nb] : smap) {
                    bool misses = true;
                    for (Vertex v : sigma)
                        if (p.block(v) == blk) { misses = false; break; }
                    if (misses) ++expect;
                }
            if (total != expect) ++st.identity_failures;
            ++st.instances;
            continue;
        } else if (id == "sidorenko") c = sidorenko_cover(g, p, f, static_cast<int>(s % l));
        else c = improved_sidorenko_cover(g, p, f, static_cast<int>(s % l));

        if (validate(g, c)) ++st.violations;
        ++st.instances;
    }
}

} // namespace verify_detail

// 6. nine cover constructions x `instances` random instances: zero violations.
inline CriterionResult criterion_cover_validity(int instances = 1000, std::uint64_t seed = 0xc0fe) {
    CriterionResult res{6, "cover validity suite (9 constructions)", false, false, ""};
    static const char* ids[] = {"r3-basic", "r3-improved", "r4-basic", "r4-improved",
                                "r5-basic", "r5-improved", "frankl-rodl", "sidorenko",
                                "sidorenko-improved"};
    verify_detail::SuiteStats st;
    int k = 0;
    for (const char* id : ids)
        verify_detail::run_construction_suite(id, instances, sub_seed(seed, k++), st);
    res.passed = st.violations == 0;
    res.detail = std::to_string(st.instances) + " instances, " + std::to_string(st.violations) +
                 " violations";
    return res;
}

// 7. finite-n densities at d = 1: improved covers vs beta_r, greedy matchings
// vs alpha_r, within 3 sigma + 5/n.
inline CriterionResult criterion_density_targets(int trials = 200, std::uint64_t seed = 0xd1) {
    CriterionResult res{7, "MC densities at d=1 match beta_r and alpha_r", false, false, ""};
    struct Cell { int r, n, l; };
    const Cell cells[] = {{3, 100, 2}, {4, 60, 3}, {5, 40, 2}};
    bool ok = true;
    std::ostringstream os;
    for (const auto& cell : cells) {
        std::vector<double> cover_density, match_density;
        double cnr1 = binom(cell.n, cell.r - 1);
        for (int i = 0; i < trials; ++i) {
            std::uint64_t s = sub_seed(hash_combine(seed, cell.r), i);
            RGraph g = sample_hypergraph(cell.n, cell.r, p_from_d(1.0, cell.n, cell.r),
                                         sub_seed(s, 1));
            VertexPartition p = sample_partition(cell.n, cell.l, sub_seed(s, 2));
            CoverFamily c;
            if (cell.r == 3) c = cover_r3(g, p, true);
            else if (cell.r == 4) c = cover_r4(g, p, true);
            else c = cover_r5(g, p, ParityFunction{sub_seed(s, 3)}, true);
            cover_density.push_back(c.sets.size() / cnr1);
            auto m = random_greedy_matching(g, sub_seed(s, 4));
            match_density.push_back(cell.r * m.edges.size() / cnr1);
        }
        verify_detail::Mc cm, mm;
        cm.from(cover_density);
        mm.from(match_density);
        double slack = 5.0 / cell.n;
        double bt = beta(cell.r, 1.0), at = alpha(cell.r, 1.0);
        bool c_ok = std::fabs(cm.mean - bt) <= 3 * cm.stderr_ + slack;
        bool m_ok = std::fabs(mm.mean - at) <= 3 * mm.stderr_ + slack;
        if (!c_ok || !m_ok) ok = false;
        os << " r=" << cell.r << ": cover " << cm.mean << " vs " << bt << (c_ok ? "" : " MISS")
           << ", matching " << mm.mean << " vs " << at << (m_ok ? "" : " MISS") << ";";
    }
    res.passed = ok;
    res.detail = os.str().substr(1);
    return res;
}

// 8. the finite analytic verifications.
inline CriterionResult criterion_analytic_checks() {
    CriterionResult res{8, "finite analytic checks (ratios, constants, monotonicity)", false, false, ""};
    std::ostringstream os;
    bool ok = true;

    for (int r : {4, 5}) {
        auto rc = small_r_ratio_check(r, 1.0 / (r - 1), 5.0);
        if (!rc.passed || rc.max_ratio > 3.0) ok = false;
        os << "r" << r << " max ratio " << rc.max_ratio << "; ";
    }
    double worst_coef = 0;
    for (int r = 7; r <= 270; ++r) {
        auto mc = medium_r_check(r);
        worst_coef = std::max(worst_coef, mc.coefficient);
        if (!mc.passed) ok = false;
    }
    os << "medium-r worst coef " << worst_coef << "; ";
    auto r6 = r6_ratio_check();
    if (!r6.passed) ok = false;
    os << "r6 max " << r6.max_ratio << "; ";
    double d271 = delta(271, 0.2421, 1.08, 0.012);
    if (!(d271 < 0.747)) ok = false;
    os << "delta_271 " << d271 << "; ";
    for (int r = 6; r <= 50; ++r)
        if (!eta_monotone_check(r)) { ok = false; os << "eta fail r=" << r << "; "; }
    double prev = delta(4, 0.2421, 1.08, 0.012);
    for (int r = 5; r <= 10000; ++r) {
        double v = delta(r, 0.2421, 1.08, 0.012);
        if (v >= prev) { ok = false; os << "delta not decreasing at r=" << r << "; "; break; }
        prev = v;
    }
    res.passed = ok;
    res.detail = os.str();
    return res;
}

// 9. exact counting identity for the modular window families.
inline CriterionResult criterion_window_identity(int instances = 1000, std::uint64_t seed = 0x1d) {
    CriterionResult res{9, "window-family counting identity (exact)", false, false, ""};
    verify_detail::SuiteStats st;
    verify_detail::run_construction_suite("frankl-rodl", instances, seed, st);
    res.passed = st.identity_failures == 0 && st.violations == 0;
    res.detail = std::to_string(st.instances) + " instances, " +
                 std::to_string(st.identity_failures) + " identity failures";
    return res;
}

// 10. informational note: asymptotic statements are exercised through the
// finite-n envelopes above, not reproduced as stated.
inline CriterionResult criterion_scope_note() {
    CriterionResult res{10, "scope note", true, true,
                        "asymptotic (n -> infinity) claims are exercised via the finite-n "
                        "property and trend checks of criteria 3, 4 and 7; the numeric "
                        "minimax table is reproduced directly by criterion 1"};
    return res;
}

struct AcceptanceOptions {
    int cover_instances = 1000;
    std::size_t survival_trials = 100000;
    int density_trials = 200;
};

inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {}) {
    std::vector<CriterionResult> out;
    out.push_back(criterion_table());
    out.push_back(criterion_zeta());
    out.push_back(criterion_survival(opt.survival_trials));
    out.push_back(criterion_tree_equality());
    out.push_back(criterion_extremal());
    out.push_back(criterion_cover_validity(opt.cover_instances));
    out.push_back(criterion_density_targets(opt.density_trials));
    out.push_back(criterion_analytic_checks());
    out.push_back(criterion_window_identity(opt.cover_instances));
    out.push_back(criterion_scope_note());
    return out;
}

} // namespace tuza

#endif
