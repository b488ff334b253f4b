#pragma once

#include <optional>

#include "rampw/bigcount.hpp"

namespace rampw {

// Exact subspace counts over GF(q).  Outside the parameter ranges where the
// counts are meaningful, all of these return 0 so that sums over a range of
// values need no edge handling.
//
// N1(w, u): u-dimensional subspaces of a w-dimensional space.
BigCount n1(long w, long u, long q);
// N2(w, u, v): v-dimensional V inside a w-dimensional W meeting a fixed
// u-dimensional U trivially (needs u + v <= w).
BigCount n2(long w, long u, long v, long q);
// N3(w, u, v, a): v-dimensional V with dim(U ∩ V) = a.
BigCount n3(long w, long u, long v, long a, long q);
// N4(n, k1, k2, d, s): code pairs C2 ⊂ C1 of dimensions k2 < k1 with
// dim(C1 ∩ V_I) - dim(C2 ∩ V_I) = s for one fixed I of size d.
BigCount n4(long n, long k1, long k2, long d, long s, long q);

BigCount binomial(long n, long k);

struct ExistenceQuery {
    long n, k1, k2, d, d_perp, s, s_perp, q;
};

struct ExistenceResult {
    bool holds;  // a pair with M_s > d and M_{s_perp} > d_perp exists
    BigCount lhs, rhs;
};
// The counting inequality: total number of nested pairs versus the
// binomial-weighted sums over profiles reaching the thresholds.  The sums
// start at s and s_perp (strict conclusion).
ExistenceResult ryu3_check(const ExistenceQuery& query);

// pi(q) = prod_{i>=1} (1 - q^-i), partial products to the given tolerance.
double pi_q(long q, double tol = 1e-12);
// H_q(x) = -x log_q x - (1-x) log_q (1-x), 0 at the endpoints.
double entropy_hq(double x, long q);

// pi(q) q^{u(w-u)} <= N1(w,u) <= pi(q)^{-1} q^{u(w-u)}.
bool lemma35_sandwich_check(long w, long u, long q);

struct FeasibilityResult {
    bool conditions_hold;          // rate conditions on (R1, delta, tau) pairs
    std::optional<long> smallest_n;  // first n <= n_max where the exact check passes
};
// Checks R1 + delta < 1 + tau and (1 - R2) + delta_perp < 1 + tau_perp; when
// they hold, scans n = 2..n_max with k1 = floor(n R1), k2 = ceil(n R2),
// s = ceil(n tau), s_perp = ceil(n tau_perp), d = floor(n delta),
// d_perp = floor(n delta_perp) for the first n where ryu3_check holds.
FeasibilityResult theorem37_feasible(double r1, double r2, double delta, double delta_perp,
                                     double tau, double tau_perp, long q, long n_max = 64);

struct DerivedParams {
    double delta, delta_perp, tau, tau_perp;
};
// tau = eps2 L, tau_perp = eps1 L, delta = 1 - R1 - Lambda2,
// delta_perp = R2 - Lambda1; validates the stated ranges and that the
// derived parameters satisfy the feasibility hypotheses.
// Throws std::invalid_argument("OutOfRange: ...") outside the ranges.
DerivedParams theorem38_params(double r1, double r2, double eps1, double eps2, double lambda1,
                               double lambda2);

}  // namespace rampw
