#include "rampw/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "rampw/errors.hpp"

namespace rampw {

namespace {

constexpr double kBoundaryTol = 1e-12;

bool is_prime_power(unsigned q) {
    if (q < 2) return false;
    for (unsigned p = 2; p <= q; ++p) {
        bool prime = true;
        for (unsigned d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (!prime) continue;
        unsigned v = q;
        while (v % p == 0) v /= p;
        return v == 1;
    }
    return false;
}

// Exact integer square root when q is a perfect square, 0 otherwise.
unsigned exact_sqrt(unsigned q) {
    unsigned s = unsigned(std::sqrt(double(q)));
    while (s * s < q) ++s;
    while (s > 0 && s * s > q) --s;
    return s * s == q ? s : 0;
}

BoundResult clamp_result(double delta, std::string tag, bool applicable, bool equality) {
    BoundResult r;
    r.theorem = std::move(tag);
    r.applicable = applicable;
    r.equality = equality;
    if (delta < 0.0) {
        r.delta = 0.0;
        r.clamped = true;
    } else if (delta > 1.0) {
        r.delta = 1.0;
        r.clamped = true;
    } else {
        r.delta = delta;
    }
    return r;
}

void require_rho_range(double R, double rho) {
    if (!(0.0 <= rho && rho <= R + kBoundaryTol && R <= 1.0))
        throw std::invalid_argument("asymptotic bound: need 0 <= rho <= R <= 1");
}

unsigned require_square(unsigned q, const char* who) {
    unsigned s = exact_sqrt(q);
    if (s < 2) throw std::invalid_argument(std::string("NotSquare: ") + who + " needs a perfect square q");
    return s;
}

}  // namespace

IharaValue ihara(unsigned q, std::optional<double> override_value) {
    if (!is_prime_power(q)) throw std::invalid_argument("ihara: q must be a prime power");
    unsigned s = exact_sqrt(q);
    if (s >= 2) {
        if (override_value)
            throw std::invalid_argument("BadOverride: A(q) is exactly sqrt(q)-1 for square q");
        return {q, double(s - 1), true};
    }
    if (!override_value)
        throw std::invalid_argument("NeedOverride: A(q) unknown for non-square q, supply a value");
    double cap = std::sqrt(double(q)) - 1.0;
    if (*override_value > cap + kBoundaryTol)
        throw std::invalid_argument("BadOverride: A(q) cannot exceed sqrt(q)-1");
    if (*override_value <= 0.0) throw std::invalid_argument("BadOverride: A(q) must be positive");
    return {q, *override_value, false};
}

BoundResult tsfasman_bound(double R, double rho, const IharaValue& A) {
    require_rho_range(R, rho);
    if (rho > 1.0 / A.a + kBoundaryTol)
        return clamp_result(1.0 - R + rho, "tsfasman", true, true);
    return clamp_result(1.0 - R + rho - 1.0 / A.a, "tsfasman", true, false);
}

BoundResult bound_thm57(double R, double rho, const IharaValue& A, unsigned q) {
    require_rho_range(R, rho);
    double edge = double(q) / (q - 1.0) / A.a - R / (q - 1.0);
    bool applicable = (1.0 / A.a <= R + kBoundaryTol) && (edge <= rho + kBoundaryTol) &&
                      (rho <= R + kBoundaryTol);
    if (!applicable) {
        BoundResult r;
        r.theorem = "thm57";
        return r;
    }
    return clamp_result(1.0 - R + rho, "thm57", true, true);
}

BoundResult bound_thm58(double R, double rho, const IharaValue& A, unsigned q) {
    require_rho_range(R, rho);
    double delta = double(q) / (q - 1.0) * (1.0 - R - 1.0 / A.a) + rho;
    return clamp_result(delta, "thm58", true, false);
}

BoundResult bound_thm59(double R, double rho, unsigned q) {
    unsigned s = require_square(q, "bound_thm59");
    require_rho_range(R, rho);
    double b = 1.0 / (s - 1.0);
    bool applicable = (R <= 1.0 - b + kBoundaryTol) && (rho <= std::min(R, b) + kBoundaryTol);
    if (!applicable) {
        BoundResult r;
        r.theorem = "thm59";
        return r;
    }
    return clamp_result(1.0 - R + 2.0 * rho - b, "thm59", true, false);
}

BoundResult bound_thm510(double R, double rho, double V, unsigned q) {
    unsigned s = require_square(q, "bound_thm510");
    require_rho_range(R, rho);
    double b = 1.0 / (s - 1.0);
    if (!(0.0 <= V && V <= b + kBoundaryTol))
        throw std::invalid_argument("bound_thm510: need 0 <= V <= 1/(sqrt(q)-1)");
    bool applicable = (R <= 1.0 - b + kBoundaryTol) &&
                      (std::max(0.0, b - 2.0 * V) <= rho + kBoundaryTol) && (rho <= R + kBoundaryTol);
    if (!applicable) {
        BoundResult r;
        r.theorem = "thm510";
        return r;
    }
    return clamp_result(1.0 - R + rho - V, "thm510", true, false);
}

BigCount brasamoros_finite_bound(unsigned q, int level, long u, long m, const BigCount& dim_ci,
                                 const BigCount& g_i) {
    unsigned s = require_square(q, "brasamoros_finite_bound");
    if (u <= 1) throw std::invalid_argument("brasamoros_finite_bound: u must be > 1");
    if (m < 1) throw std::invalid_argument("brasamoros_finite_bound: m must be >= 1");

    // n_{u-1} = s^floor((level + 1 - log_s(u)) / 2) - 1, computed exactly:
    // the floor equals (level + 1 - e) / 2 with e = min{ e : s^e >= u }.
    long e = 0;
    BigCount power = 1;
    while (power < u) { power *= s; ++e; }
    long t = (long(level) + 1 - e) / 2;
    // floor division toward -inf for the (rare) negative case
    if ((long(level) + 1 - e) < 0 && (long(level) + 1 - e) % 2 != 0) --t;
    BigCount n_term = t >= 0 ? boost::multiprecision::pow(BigCount(s), unsigned(t)) - 1 : BigCount(0);

    BigCount branch1 = BigCount(m) + BigCount((m + u - 2) / (u - 1));  // m + ceil(m/(u-1))
    BigCount ceil_term = (BigCount(u - 1) * n_term + (u - 1)) / u;     // ceil((u-1) n / u)
    BigCount branch2 = BigCount(m) + 1 + ceil_term;
    return dim_ci - g_i + std::min(branch1, branch2);
}

Prop61Result comparison_prop61(unsigned q, double R) {
    unsigned s = require_square(q, "comparison_prop61");
    if (s < 3) throw std::invalid_argument("comparison_prop61: needs q >= 9");
    double b = 1.0 / (s - 1.0);
    Prop61Result out;
    out.lo = (1.0 - R - b) / (q - 1.0);
    out.hi = double(q) / (q - 1.0) * b - R / (q - 1.0);
    out.exact_length = Rational(BigCount(q) - s + 2, BigCount(q - 1) * (s - 1));
    return out;
}

Prop62Result comparison_prop62(unsigned q, double R) {
    unsigned s = require_square(q, "comparison_prop62");
    if (s < 3) throw std::invalid_argument("comparison_prop62: needs q >= 9");
    double b = 1.0 / (s - 1.0);
    Prop62Result out;
    out.q = q;
    out.R = R;
    out.v_lo = (R - b) / (2.0 * (q - 1.0));
    out.v_hi = std::min(b, double(q) / (q - 1.0) * b - (1.0 - R) / (q - 1.0));
    out.exact_min_v_length = Rational(BigCount(q) - s + 1, BigCount(q - 1) * (s - 1));
    return out;
}

double Prop62Result::rho_lo(double V) const {
    unsigned s = exact_sqrt(q);
    double b = 1.0 / (s - 1.0);
    return std::max(b - 2.0 * V, (1.0 - R - b) / (q - 1.0));
}

double Prop62Result::rho_hi(double V) const {
    unsigned s = exact_sqrt(q);
    return 1.0 / (s - 1.0) - V;
}

namespace {

void hypothesis(bool ok, const std::string& inequality) {
    if (!ok) throw HypothesisError("HypothesisViolated: " + inequality);
}

}  // namespace

FinalParams final_params(int theorem, unsigned q, double r1, double r2, double eps1, double eps2,
                         std::optional<double> V, std::optional<double> a_override) {
    const double L = r1 - r2;
    hypothesis(0.0 <= r2 && r2 <= r1 && r1 <= 1.0, "0 <= R2 <= R1 <= 1");
    hypothesis(L > 0.0, "L = R1 - R2 > 0");
    if (theorem != 2) hypothesis(eps1 == eps2, "symmetric theorem needs eps1 = eps2");

    switch (theorem) {
        case 1: {
            IharaValue A = ihara(q, a_override);
            double eps = eps1;
            hypothesis(0.0 <= eps && eps <= 1.0, "0 <= eps <= 1");
            hypothesis(1.0 / A.a <= r1 && r1 <= 1.0, "1/A(q) <= R1 <= 1");
            hypothesis(std::max(0.0, r1 - 1.0 + 1.0 / A.a) <= L + kBoundaryTol && L <= r1 + kBoundaryTol,
                       "max{0, R1 - 1 + 1/A(q)} <= L <= R1");
            double floor_eps = double(q) / (q - 1.0) / A.a - std::min(r1, 1.0 - r2) / (q - 1.0);
            hypothesis(eps * L >= floor_eps - kBoundaryTol,
                       "eps*L >= q/(q-1) * 1/A(q) - min{R1, 1-R2}/(q-1)");
            return {-eps * L, -eps * L};
        }
        case 2: {
            IharaValue A = ihara(q, a_override);
            hypothesis(0.0 <= eps1 && eps1 <= r1 / L - 1.0 + kBoundaryTol, "0 <= eps1 <= R1/L - 1");
            hypothesis(0.0 <= eps2 && eps2 <= r1 / L - 1.0 + kBoundaryTol, "0 <= eps2 <= R1/L - 1");
            double common = double(q) / (q - 1.0) / A.a;
            double l1 = -r2 / (q - 1.0) + common - eps1 * L;
            double l2 = -(1.0 - r1) / (q - 1.0) + common - eps2 * L;
            hypothesis(l1 >= -eps1 * L - kBoundaryTol, "Lambda1 >= -eps1*L");
            hypothesis(l2 >= -eps2 * L - kBoundaryTol, "Lambda2 >= -eps2*L");
            return {l1, l2};
        }
        case 3: {
            unsigned s = require_square(q, "final_params theorem 3");
            double b = 1.0 / (s - 1.0);
            double eps = eps1;
            hypothesis(0.0 < r2 && r2 <= r1 && r1 <= 1.0 - b + kBoundaryTol,
                       "0 < R2 <= R1 <= 1 - 1/(sqrt(q)-1)");
            hypothesis(r2 >= b - kBoundaryTol, "R2 >= 1/(sqrt(q)-1)");
            hypothesis(0.0 <= eps * L && eps * L <= b + kBoundaryTol, "0 <= eps*L <= 1/(sqrt(q)-1)");
            double lambda = -2.0 * eps * L + b;
            hypothesis(lambda >= -eps * L - kBoundaryTol, "Lambda >= -eps*L");
            return {lambda, lambda};
        }
        case 4: {
            unsigned s = require_square(q, "final_params theorem 4");
            double b = 1.0 / (s - 1.0);
            double eps = eps1;
            hypothesis(V.has_value(), "theorem 4 needs V");
            hypothesis(0.0 < r2 && r2 <= r1 && r1 <= 1.0 - b + kBoundaryTol,
                       "0 < R2 <= R1 <= 1 - 1/(sqrt(q)-1)");
            hypothesis(r2 >= b - kBoundaryTol, "R2 >= 1/(sqrt(q)-1)");
            hypothesis(0.0 <= *V && *V <= b + kBoundaryTol, "0 <= V <= 1/(sqrt(q)-1)");
            hypothesis(eps * L >= std::max(0.0, b - 2.0 * *V) - kBoundaryTol,
                       "eps*L >= max{0, 1/(sqrt(q)-1) - 2V}");
            double lambda = -eps * L + *V;
            hypothesis(lambda >= -eps * L - kBoundaryTol, "Lambda >= -eps*L");
            return {lambda, lambda};
        }
        default:
            throw std::invalid_argument("final_params: theorem must be 1..4");
    }
}

std::vector<double> SweepGrid::values() const {
    std::vector<double> out;
    if (step <= 0.0) throw std::invalid_argument("SweepGrid: step must be positive");
    long count = lround(std::floor((hi - lo) / step + 1e-9));
    for (long i = 0; i <= count; ++i) out.push_back(lo + double(i) * step);
    return out;
}

void sweep_csv(std::ostream& os, unsigned q, const SweepGrid& r_grid, const SweepGrid& rho_grid,
               const SweepGrid& v_grid, std::optional<double> a_override) {
    IharaValue A = ihara(q, a_override);
    unsigned s = exact_sqrt(q);
    const bool square = s >= 2;

    os << "q,R,rho,V,tsfasman,thm57,thm58,thm59,thm510,best,best_tag,clamped\n";
    os << std::setprecision(12);
    auto emit = [&os](const BoundResult& b) {
        if (b.applicable)
            os << b.delta;
        else
            os << "na";
        os << ',';
    };
    for (double R : r_grid.values())
        for (double rho : rho_grid.values()) {
            if (rho > R + kBoundaryTol) continue;
            for (double V : v_grid.values()) {
                std::vector<BoundResult> bounds;
                bounds.push_back(tsfasman_bound(R, rho, A));
                bounds.push_back(bound_thm57(R, rho, A, q));
                bounds.push_back(bound_thm58(R, rho, A, q));
                if (square) {
                    bounds.push_back(bound_thm59(R, rho, q));
                    bounds.push_back(bound_thm510(R, rho, V, q));
                } else {
                    bounds.emplace_back();
                    bounds.emplace_back();
                    bounds[3].theorem = "thm59";
                    bounds[4].theorem = "thm510";
                }
                const BoundResult* best = nullptr;
                for (const auto& b : bounds)
                    if (b.applicable && (!best || b.delta > best->delta)) best = &b;

                os << q << ',' << R << ',' << rho << ',' << V << ',';
                for (const auto& b : bounds) emit(b);
                if (best)
                    os << best->delta << ',' << best->theorem << ',' << (best->clamped ? 1 : 0);
                else
                    os << "na,na,0";
                os << '\n';
            }
        }
}

}  // namespace rampw
