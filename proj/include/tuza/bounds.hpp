// bounds.hpp - closed-form densities and the numerical optimizations:
// alpha/beta/psi, exact zeta_1 (formula and brute-force enumeration), eta,
// cover-density bounds, the large-r constants and delta, the finite-interval
// ratio checks, and the minimax table.
#ifndef TUZA_BOUNDS_HPP
#define TUZA_BOUNDS_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tuza {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// ---- closed forms --------------------------------------------------------

// alpha_r(d) = 1 - ((r-1)d + 1)^(-1/(r-1)): asymptotic matching density.
inline double alpha(int r, double d) {
    if (r < 2) throw std::invalid_argument("alpha: r < 2");
    if (d < 0) throw std::invalid_argument("alpha: d < 0");
    return 1.0 - std::pow((r - 1) * d + 1.0, -1.0 / (r - 1));
}

// beta_r(d): asymptotic improved-cover density for r = 3, 4, 5.
inline double beta(int r, double d) {
    if (d < 0) throw std::invalid_argument("beta: d < 0");
    switch (r) {
        case 3: return 0.5 * (1 - std::exp(-d / 2 * (1 + std::exp(-d))));
        case 4: return 4.0 / 9 * (1 - std::exp(-d / 3 * (2 + std::exp(-2 * d))));
        case 5: return 5.0 / 16 * (1 - std::exp(-d / 2 * (1 + std::exp(-d))));
        default: throw std::invalid_argument("beta: r must be 3, 4 or 5");
    }
}

// ---- zeta_1: probability all l blocks get >= 2 of r-1 labelled balls -----

inline BigInt stirling2(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("stirling2: negative argument");
    if (b > a) return 0;
    if (a == b) return 1;
    if (b == 0) return 0;
    std::vector<BigInt> row(b + 1, 0);
    row[0] = 1;  // S(0,0)
    for (int n = 1; n <= a; ++n) {
        for (int k = std::min(n, b); k >= 1; --k) row[k] = k * row[k] + row[k - 1];
        row[0] = 0;
    }
    return row[b];
}

inline BigInt binomial_big(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt v = 1;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

// T(r,l) = l! * sum_j (-1)^j C(r-1, j) S(r-1-j, l-j): surjections of r-1
// elements onto l blocks with every block hit at least twice.
inline BigInt t_count(int r, int l) {
    BigInt fact = 1;
    for (int i = 2; i <= l; ++i) fact *= i;
    BigInt s = 0;
    for (int j = 0; j <= l && j <= r - 1; ++j) {
        BigInt term = binomial_big(r - 1, j) * stirling2(r - 1 - j, l - j);
        s += (j % 2 == 0) ? term : -term;
    }
    return fact * s;
}

inline BigRat zeta1_formula(int r, int l) {
    if (r < 3 || l < 1) throw std::invalid_argument("zeta1: need r >= 3, l >= 1");
    BigInt denom = 1;
    for (int i = 0; i < r - 1; ++i) denom *= l;
    return BigRat(t_count(r, l), denom);
}

// Literal count over all l^(r-1) assignments, odometer with incremental
// block counts.
inline BigRat zeta1_enumeration(int r, int l) {
    if (r < 3 || l < 1) throw std::invalid_argument("zeta1: need r >= 3, l >= 1");
    const int k = r - 1;
    double total_d = std::pow(static_cast<double>(l), k);
    if (total_d > 3e8) throw std::invalid_argument("zeta1_enumeration: l^(r-1) too large");
    BigInt denom = 1;
    for (int i = 0; i < k; ++i) denom *= l;

    std::vector<int> digit(k, 0);
    std::vector<int> cnt(l, 0);
    cnt[0] = k;
    int deficient = 0;  // blocks with count < 2
    for (int b = 0; b < l; ++b)
        if (cnt[b] < 2) ++deficient;
    auto bump = [&](int b, int delta) {
        bool was = cnt[b] < 2;
        cnt[b] += delta;
        bool now = cnt[b] < 2;
        deficient += (now ? 1 : 0) - (was ? 1 : 0);
    };
    std::uint64_t good = 0;
    while (true) {
        if (deficient == 0) ++good;
        int i = k - 1;
        while (i >= 0 && digit[i] == l - 1) {
            bump(digit[i], -1);
            digit[i] = 0;
            bump(0, +1);
            --i;
        }
        if (i < 0) break;
        bump(digit[i], -1);
        ++digit[i];
        bump(digit[i], +1);
    }
    return BigRat(BigInt(good), denom);
}

// psi_{r,l}(d): asymptotic density of the best improved modular cover.
inline double psi(int r, int l, double d, const BigRat& z1) {
    if (l < 2 || 2 * l > r) throw std::invalid_argument("psi: need 2 <= l <= r/2");
    if (d < 0) throw std::invalid_argument("psi: d < 0");
    const double zeta_1 = static_cast<double>(z1);
    const double zeta_2 = 1.0 - zeta_1;
    return zeta_1 / (2 * l) * (1 - std::exp(-d / 2 * (1 + std::exp(-d)))) +
           (zeta_2 / l + std::pow(1.0 - 1.0 / l, r - 1)) * (1 - std::exp(-d));
}

inline double psi(int r, int l, double d) { return psi(r, l, d, zeta1_formula(r, l)); }

// ---- eta and its monotonicity --------------------------------------------

inline double eta(int r, double d) {
    if (d <= 0) throw std::invalid_argument("eta: d <= 0");
    return (1 - std::exp(-d)) / alpha(r, d);
}

// weakly increasing on [1/(r-1), 2], checked on a dense grid
inline bool eta_monotone_check(int r, int grid_points = 10000) {
    const double lo = 1.0 / (r - 1), hi = 2.0;
    double prev = eta(r, lo);
    for (int i = 1; i <= grid_points; ++i) {
        double d = lo + (hi - lo) * i / grid_points;
        double v = eta(r, d);
        if (v < prev - 1e-12) return false;
        prev = v;
    }
    return true;
}

// ---- per-shadow cover-density bounds -------------------------------------

// 1/l + (1 - 1/l)^(r-1): best modular window family, per |D(G)|.
inline double tau_bound_fr(int r, int l) {
    if (l < 1) throw std::invalid_argument("tau_bound_fr: l < 1");
    return 1.0 / l + std::pow(1.0 - 1.0 / l, r - 1);
}

// (1/2)[1/l + (3 + (r-1)/(l-1))(1 - 1/l)^(r-1)]: parity-improved family.
inline double tau_bound_sidorenko(int r, int l) {
    if (l < 2) throw std::invalid_argument("tau_bound_sidorenko: l < 2");
    if (2 * l > r) throw std::invalid_argument("tau_bound_sidorenko: l > r/2");
    return 0.5 * (1.0 / l +
                  (3.0 + static_cast<double>(r - 1) / (l - 1)) * std::pow(1.0 - 1.0 / l, r - 1));
}

// ---- large-r constants and delta -----------------------------------------

struct LargeRConstants {
    double c0 = 0, c1 = 0, c2 = 0, c3 = 0;
};

// Constants at the lower ends of their admissible ranges, as functions of
// the threshold r0; valid once r0 - 1 > 2X with X = ln(r0-1) + sqrt(ln(r0-1)).
inline LargeRConstants large_r_constants(double r0) {
    const double lg = std::log(r0 - 1);
    if (lg <= 0) throw std::invalid_argument("large_r_constants: r0 too small");
    const double X = lg + std::sqrt(lg);
    if (r0 - 1 <= 2 * X) throw std::invalid_argument("large_r_constants: r0 too small");
    LargeRConstants c;
    c.c0 = X * X / ((r0 - 1) - X);
    c.c1 = 2 * X * X / ((r0 - 1) - 2 * X);
    c.c2 = (X + 3 + c.c1) / std::exp(std::sqrt(lg));
    c.c3 = std::log(2 * r0 - 1) / (2 * (r0 - 1));
    return c;
}

inline double delta(double r, double c0, double c2, double c3) {
    const double lg = std::log(r - 1);
    const double den = 2 * (1 - c3) * std::log(2 * r - 1);
    if (den <= 0) throw std::invalid_argument("delta: non-positive denominator");
    return (lg + std::sqrt(lg) + c0 + c2) / den;
}

inline double delta(double r, const LargeRConstants& c) { return delta(r, c.c0, c.c2, c.c3); }

// ---- finite-interval checks ----------------------------------------------

struct RatioCheck {
    double max_ratio = 0;
    double arg_d = 0;
    bool passed = false;
};

namespace detail {

// maximize f on [lo, hi]: coarse grid, then golden-section around the peak
template <typename F>
std::pair<double, double> grid_max(F f, double lo, double hi, int grid, double tol = 1e-8) {
    double best = -1e300;
    int bi = 0;
    for (int i = 0; i <= grid; ++i) {
        double d = lo + (hi - lo) * i / grid;
        double v = f(d);
        if (v > best) { best = v; bi = i; }
    }
    double a = lo + (hi - lo) * std::max(bi - 1, 0) / grid;
    double b = lo + (hi - lo) * std::min(bi + 1, grid) / grid;
    const double gr = 0.6180339887498949;
    double c = b - gr * (b - a), e = a + gr * (b - a);
    double fc = f(c), fe = f(e);
    while (b - a > tol) {
        if (fc > fe) {
            b = e; e = c; fe = fc;
            c = b - gr * (b - a); fc = f(c);
        } else {
            a = c; c = e; fc = fe;
            e = a + gr * (b - a); fe = f(e);
        }
    }
    double mid = (a + b) / 2, fm = f(mid);
    if (fm > best) return {fm, mid};
    return {best, lo + (hi - lo) * bi / grid};
}

} // namespace detail

// max over [d_lo, d_hi] of r * beta_r(d) / alpha_r(d) (the tau/nu ratio in
// the matching normalization); must stay below ceil((r+1)/2).
inline RatioCheck small_r_ratio_check(int r, double d_lo, double d_hi, int grid = 20000) {
    if (d_lo < 1.0 / (r - 1)) throw std::invalid_argument("small_r_ratio_check: d_lo too small");
    auto f = [r](double d) { return r * beta(r, d) / alpha(r, d); };
    auto [v, d] = detail::grid_max(f, d_lo, d_hi, grid);
    RatioCheck out;
    out.max_ratio = v;
    out.arg_d = d;
    out.passed = v <= (r + 2) / 2;  // ceil((r+1)/2)
    return out;
}

struct MediumRCheck {
    int best_l = 0;
    double coefficient = 0;
    bool passed = false;
};

// min over 2 <= l <= r/2 of the large-d cover/matching coefficient; the
// computation behind the constant 0.938 on 7 <= r <= 270.
inline MediumRCheck medium_r_check(int r) {
    if (r < 7 || r > 270) throw std::invalid_argument("medium_r_check: r outside 7..270");
    MediumRCheck out;
    double best = 1e300;
    for (int l = 2; 2 * l <= r; ++l) {
        double c = 0.5 * (1.0 / l + (3.0 + static_cast<double>(r - 1) / (l - 1)) *
                                        std::pow(1.0 - 1.0 / l, r - 1)) /
                   (1.0 - std::pow(1.0 / (2 * r - 1), 1.0 / (r - 1)));
        if (c < best) { best = c; out.best_l = l; }
    }
    out.coefficient = best;
    out.passed = best <= 0.938;
    return out;
}

// max over d >= 1/5 of 6 psi_{6,2}(d) / alpha_6(d); must stay below 4.686.
// For d >= 6 the numerator is at most 6 * 3/8 and alpha_6 is increasing, so
// the check only needs [1/5, 6] plus the d = 6 endpoint value.
inline RatioCheck r6_ratio_check(int grid = 20000) {
    const BigRat z1 = zeta1_formula(6, 2);
    auto f = [&z1](double d) { return 6 * psi(6, 2, d, z1) / alpha(6, d); };
    auto [v, d] = detail::grid_max(f, 0.2, 6.0, grid);
    double tail = 6 * (3.0 / 8) / alpha(6, 6.0);
    RatioCheck out;
    out.max_ratio = std::max(v, tail);
    out.arg_d = v >= tail ? d : 6.0;
    out.passed = out.max_ratio < 4.686;
    return out;
}

// ---- the minimax table ---------------------------------------------------

struct BoundReport {
    int r = 0;
    double value = 0;       // min_l sup_d psi_{r,l}(d) / alpha_r(d)
    int best_l = 0;
    double arg_d = 0;       // 0 marks the d -> infinity candidate
    int grid_points = 0;
    double refine_tol = 0;
    double limit_value = 0; // d -> infinity candidate at best_l
};

// min over 2 <= l <= r/2 of sup_{d >= 1/(r-1)} psi_{r,l}(d)/alpha_r(d); the
// quotient is already normalized per 1/r (tau and nu both per C(n,r-1)/r).
inline BoundReport minimax_ratio(int r, int grid = 2000, double d_hi = 50.0,
                                 double refine_tol = 1e-6) {
    if (r < 6) throw std::invalid_argument("minimax_ratio: r < 6");
    BoundReport rep;
    rep.r = r;
    rep.grid_points = grid;
    rep.refine_tol = refine_tol;
    const double d_lo = 1.0 / (r - 1);

    int l_min = 2, l_max = r / 2;
    if (r > 500) {
        // the optimal l tracks (r-1)/(ln(r-1)+sqrt(ln(r-1))); scan a window
        double lg = std::log(r - 1);
        int center = static_cast<int>((r - 1) / (lg + std::sqrt(lg)));
        l_min = std::max(2, center - 10);
        l_max = std::min(r / 2, center + 10);
    }
    double best = 1e300;
    for (int l = l_min; l <= l_max; ++l) {
        const BigRat z1 = zeta1_formula(r, l);
        const double zeta_1 = static_cast<double>(z1);
        auto f = [&](double d) { return psi(r, l, d, z1) / alpha(r, d); };
        auto [v, d] = detail::grid_max(f, d_lo, d_hi, grid, refine_tol);
        // both psi and alpha saturate; include the limit explicitly
        double lim = zeta_1 / (2 * l) + (1 - zeta_1) / l + std::pow(1.0 - 1.0 / l, r - 1);
        double sup = std::max(v, lim);
        if (sup < best) {
            best = sup;
            rep.best_l = l;
            rep.arg_d = v >= lim ? d : 0.0;
            rep.limit_value = lim;
        }
    }
    rep.value = best;
    return rep;
}

inline std::vector<BoundReport> minimax_table(int r_lo, int r_hi) {
    if (r_lo < 6 || r_hi < r_lo) throw std::invalid_argument("minimax_table: need 6 <= r_lo <= r_hi");
    std::vector<BoundReport> out;
    out.reserve(r_hi - r_lo + 1);
    for (int r = r_lo; r <= r_hi; ++r) out.push_back(minimax_ratio(r));
    return out;
}

} // namespace tuza

#endif
