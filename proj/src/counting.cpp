#include "rampw/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rampw {

namespace {

BigCount qpow(long q, long e) { return boost::multiprecision::pow(BigCount(q), unsigned(e)); }

BigCount exact_div(const BigCount& num, const BigCount& den, const char* who) {
    BigCount quot, rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0) throw std::invalid_argument(std::string("NonIntegral: ") + who);
    return quot;
}

}  // namespace

BigCount n1(long w, long u, long q) {
    if (u < 0 || w < 0 || u > w) return 0;
    BigCount num = 1, den = 1;
    for (long i = 0; i < u; ++i) {
        num *= qpow(q, w) - qpow(q, i);
        den *= qpow(q, u) - qpow(q, i);
    }
    return exact_div(num, den, "n1");
}

BigCount n2(long w, long u, long v, long q) {
    if (u < 0 || v < 0 || w < 0 || u + v > w) return 0;
    BigCount num = 1, den = 1;
    for (long i = 0; i < v; ++i) {
        num *= qpow(q, w) - qpow(q, u + i);
        den *= qpow(q, v) - qpow(q, i);
    }
    return exact_div(num, den, "n2");
}

BigCount n3(long w, long u, long v, long a, long q) {
    if (a < 0 || a > std::min(u, v) || u + v - a > w) return 0;
    return n1(u, a, q) * n2(w - a, u - a, v - a, q);
}

BigCount n4(long n, long k1, long k2, long d, long s, long q) {
    if (s < 0 || s > std::min(d, k1 - k2)) return 0;
    BigCount total = 0;
    long a_max = std::min({d - s, k1 - s, k2});
    for (long a = 0; a <= a_max; ++a)
        total += n1(d, a, q) * n2(n - a, d - a, k2 - a, q) * n3(n - k2, d - a, k1 - k2, s, q);
    return total;
}

BigCount binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigCount r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // divides exactly at each step
    }
    return r;
}

ExistenceResult ryu3_check(const ExistenceQuery& query) {
    const long n = query.n, k1 = query.k1, k2 = query.k2, q = query.q;
    const long ell = k1 - k2;
    if (!(1 <= k2 && k2 < k1 && k1 < n))
        throw std::invalid_argument("ryu3_check: need 1 <= k2 < k1 < n");
    if (!(1 <= query.d && query.d <= n && 1 <= query.d_perp && query.d_perp <= n))
        throw std::invalid_argument("ryu3_check: d, d_perp must be in [1, n]");
    if (!(1 <= query.s && query.s <= std::min(query.d, ell)))
        throw std::invalid_argument("ryu3_check: need 1 <= s <= min(d, k1-k2)");
    if (!(1 <= query.s_perp && query.s_perp <= std::min(query.d_perp, ell)))
        throw std::invalid_argument("ryu3_check: need 1 <= s_perp <= min(d_perp, k1-k2)");

    BigCount lhs = n1(n, k2, q) * n1(n - k2, ell, q);
    BigCount primary = 0, dual = 0;
    for (long sigma = query.s; sigma <= ell; ++sigma)
        primary += n4(n, k1, k2, query.d, sigma, q);
    for (long sigma = query.s_perp; sigma <= ell; ++sigma)
        dual += n4(n, n - k2, n - k1, query.d_perp, sigma, q);
    BigCount rhs = binomial(n, query.d) * primary + binomial(n, query.d_perp) * dual;
    return {lhs > rhs, lhs, rhs};
}

double pi_q(long q, double tol) {
    if (q < 2) throw std::invalid_argument("pi_q: q must be >= 2");
    double prod = 1.0, term = 1.0 / double(q);
    while (term >= tol) {
        prod *= 1.0 - term;
        term /= double(q);
    }
    return prod;
}

double entropy_hq(double x, long q) {
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("entropy_hq: x must be in [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    const double lq = std::log(double(q));
    return -x * std::log(x) / lq - (1.0 - x) * std::log(1.0 - x) / lq;
}

bool lemma35_sandwich_check(long w, long u, long q) {
    double value = double(n1(w, u, q));
    double pi = pi_q(q);
    double scale = std::pow(double(q), double(u) * double(w - u));
    return pi * scale <= value && value <= scale / pi;
}

FeasibilityResult theorem37_feasible(double r1, double r2, double delta, double delta_perp,
                                     double tau, double tau_perp, long q, long n_max) {
    const double L = r1 - r2;
    if (!(0.0 <= r2 && r2 < r1 && r1 <= 1.0))
        throw std::invalid_argument("theorem37_feasible: need 0 <= R2 < R1 <= 1");
    if (!(0.0 <= delta && delta <= 1.0 && 0.0 <= delta_perp && delta_perp <= 1.0))
        throw std::invalid_argument("theorem37_feasible: delta, delta_perp must be in [0, 1]");
    if (!(0.0 < tau && tau <= std::min(delta, L)))
        throw std::invalid_argument("theorem37_feasible: need 0 < tau <= min(delta, R1-R2)");
    if (!(0.0 < tau_perp && tau_perp <= std::min(delta_perp, L)))
        throw std::invalid_argument("theorem37_feasible: need 0 < tau_perp <= min(delta_perp, R1-R2)");

    bool holds = (r1 + delta < 1.0 + tau) && ((1.0 - r2) + delta_perp < 1.0 + tau_perp);
    if (!holds) return {false, std::nullopt};

    for (long n = 2; n <= n_max; ++n) {
        ExistenceQuery query;
        query.n = n;
        query.k1 = long(std::floor(n * r1));
        query.k2 = long(std::ceil(n * r2));
        query.s = long(std::ceil(n * tau));
        query.s_perp = long(std::ceil(n * tau_perp));
        query.d = long(std::floor(n * delta));
        query.d_perp = long(std::floor(n * delta_perp));
        query.q = q;
        long ell = query.k1 - query.k2;
        if (!(1 <= query.k2 && query.k2 < query.k1 && query.k1 < n)) continue;
        if (!(1 <= query.d && query.d <= n && 1 <= query.d_perp && query.d_perp <= n)) continue;
        if (!(1 <= query.s && query.s <= std::min(query.d, ell))) continue;
        if (!(1 <= query.s_perp && query.s_perp <= std::min(query.d_perp, ell))) continue;
        if (ryu3_check(query).holds) return {true, n};
    }
    return {true, std::nullopt};
}

DerivedParams theorem38_params(double r1, double r2, double eps1, double eps2, double lambda1,
                               double lambda2) {
    const double L = r1 - r2;
    if (!(0.0 <= r2 && r2 < r1 && r1 <= 1.0))
        throw std::invalid_argument("OutOfRange: need 0 <= R2 < R1 <= 1");
    if (!(0.0 < eps1 && eps1 < 1.0 && 0.0 < eps2 && eps2 < 1.0))
        throw std::invalid_argument("OutOfRange: need 0 < eps1, eps2 < 1");
    if (!(-eps1 * L < lambda1 && lambda1 <= r2 - eps1 * L))
        throw std::invalid_argument("OutOfRange: need -eps1*L < Lambda1 <= R2 - eps1*L");
    if (!(-eps2 * L < lambda2 && lambda2 <= 1.0 - r1 - eps2 * L))
        throw std::invalid_argument("OutOfRange: need -eps2*L < Lambda2 <= 1 - R1 - eps2*L");

    DerivedParams out;
    out.tau = eps2 * L;
    out.tau_perp = eps1 * L;
    out.delta = 1.0 - r1 - lambda2;
    out.delta_perp = r2 - lambda1;

    // The derived parameters always satisfy the feasibility hypotheses.
    const double slack = 1e-15;
    if (!(r1 + out.delta < 1.0 + out.tau + slack) ||
        !((1.0 - r2) + out.delta_perp < 1.0 + out.tau_perp + slack) ||
        !(out.tau <= std::min(out.delta, L) + slack) ||
        !(out.tau_perp <= std::min(out.delta_perp, L) + slack))
        throw std::logic_error("theorem38_params: derived parameters violate the rate conditions");
    return out;
}

}  // namespace rampw
