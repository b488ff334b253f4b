#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rampw/bigcount.hpp"

namespace rampw {

struct IharaValue {
    unsigned q;
    double a;           // A(q)
    bool exact_square;  // sqrt(q) - 1, attained for perfect squares
};
// A(q) = sqrt(q) - 1 for perfect-square q; other prime powers require an
// explicit user value (never guessed), capped by sqrt(q) - 1.
// Throws "NeedOverride: ..." / "BadOverride: ...".
IharaValue ihara(unsigned q, std::optional<double> override_value = std::nullopt);

struct BoundResult {
    double delta = 0.0;       // clamped to [0, 1]
    std::string theorem;      // attaining-theorem tag
    bool applicable = false;  // (R, rho, V) lies in the theorem's region
    bool equality = false;    // delta is an equality, not just a lower bound
    bool clamped = false;
};

// delta >= 1 - R + rho - 1/A, an equality 1 - R + rho when rho > 1/A.
BoundResult tsfasman_bound(double R, double rho, const IharaValue& A);
// Singleton-line equality on the region
// q/(q-1) * 1/A - R/(q-1) <= rho <= R with 1/A <= R <= 1.
BoundResult bound_thm57(double R, double rho, const IharaValue& A, unsigned q);
// delta >= q/(q-1) * (1 - R - 1/A) + rho.
BoundResult bound_thm58(double R, double rho, const IharaValue& A, unsigned q);
// Tower bound delta >= 1 - R + 2 rho - 1/(sqrt(q)-1) on
// 0 <= R <= 1 - 1/(sqrt(q)-1), 0 <= rho <= min(R, 1/(sqrt(q)-1)).
BoundResult bound_thm59(double R, double rho, unsigned q);
// Duality-improved tower bound delta >= 1 - R + rho - V on
// max(0, 1/(sqrt(q)-1) - 2V) <= rho <= R.
BoundResult bound_thm510(double R, double rho, double V, unsigned q);

// Finite-level dual GHW bound for the tower codes:
// dim(C_i) - g_i + min( m + ceil(m/(u-1)), m + 1 + ceil((u-1) n_{u-1} / u) ).
BigCount brasamoros_finite_bound(unsigned q, int level, long u, long m, const BigCount& dim_ci,
                                 const BigCount& g_i);

struct Prop61Result {
    double lo, hi;          // open interval of rho where the tower bound wins
    Rational exact_length;  // (q - sqrt(q) + 2) / ((q-1)(sqrt(q)-1))
};
Prop61Result comparison_prop61(unsigned q, double R);

struct Prop62Result {
    unsigned q;
    double R;
    double v_lo, v_hi;            // V interval
    Rational exact_min_v_length;  // (q - sqrt(q) + 1) / ((q-1)(sqrt(q)-1))
    double rho_lo(double V) const;
    double rho_hi(double V) const;
};
Prop62Result comparison_prop62(unsigned q, double R);

struct FinalParams {
    double lambda1, lambda2;
};
// Deficiencies of the four constructions; `theorem` selects 1..4.  Theorems
// 1, 3, 4 are symmetric and use eps1 (eps2 must match).  V is required for
// theorem 4.  Non-square q needs a_override for theorems 1 and 2.
// Throws HypothesisError naming the violated inequality.
FinalParams final_params(int theorem, unsigned q, double r1, double r2, double eps1, double eps2,
                         std::optional<double> V = std::nullopt,
                         std::optional<double> a_override = std::nullopt);

struct SweepGrid {
    double lo = 0.0, hi = 0.0, step = 1.0;
    std::vector<double> values() const;
};
// CSV with header q,R,rho,V,tsfasman,thm57,thm58,thm59,thm510,best,best_tag,clamped;
// rows in grid order (R outer, rho middle, V inner), rho > R combinations skipped.
void sweep_csv(std::ostream& os, unsigned q, const SweepGrid& r_grid, const SweepGrid& rho_grid,
               const SweepGrid& v_grid, std::optional<double> a_override = std::nullopt);

}  // namespace rampw
