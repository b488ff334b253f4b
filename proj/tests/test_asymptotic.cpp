#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "rampw/ag_codes.hpp"
#include "rampw/asymptotic.hpp"
#include "rampw/errors.hpp"

using namespace rampw;

TEST_CASE("Ihara constant") {
    CHECK(ihara(16).a == doctest::Approx(3.0));
    CHECK(ihara(4).a == doctest::Approx(1.0));
    CHECK(ihara(16).exact_square);
    CHECK_THROWS_WITH_AS(ihara(8), doctest::Contains("NeedOverride"), std::invalid_argument);
    CHECK(ihara(8, 0.7).a == doctest::Approx(0.7));
    CHECK_FALSE(ihara(8, 0.7).exact_square);
    CHECK_THROWS_WITH_AS(ihara(8, 2.0), doctest::Contains("BadOverride"), std::invalid_argument);
    CHECK_THROWS_AS(ihara(6), std::invalid_argument);
}

TEST_CASE("baseline tower bound") {
    auto A = ihara(16);
    auto eq = tsfasman_bound(0.5, 0.4, A);
    CHECK(eq.equality);
    CHECK(eq.delta == doctest::Approx(0.9).epsilon(1e-12));

    auto lb = tsfasman_bound(0.5, 0.1, A);
    CHECK_FALSE(lb.equality);
    CHECK(lb.delta == doctest::Approx(1.0 - 0.5 + 0.1 - 1.0 / 3.0).epsilon(1e-12));

    auto clamped = tsfasman_bound(1.0, 0.0, A);
    CHECK(clamped.delta == 0.0);
    CHECK(clamped.clamped);
}

TEST_CASE("Singleton-line equality region") {
    auto A = ihara(16);
    auto in = bound_thm57(0.5, 0.33, A, 16);
    CHECK(in.applicable);
    CHECK(in.equality);
    CHECK(in.delta == doctest::Approx(0.83).epsilon(1e-12));

    auto out = bound_thm57(0.5, 0.3, A, 16);
    CHECK_FALSE(out.applicable);

    // rho = R edge: applicable whenever R is above the region's lower edge
    double edge = 16.0 / 15.0 / 3.0 - 0.4 / 15.0;
    CHECK(bound_thm57(0.4, 0.4, A, 16).applicable == (edge <= 0.4 + 1e-12));
}

TEST_CASE("q-scaled bound") {
    auto A = ihara(16);
    auto b = bound_thm58(0.5, 0.1, A, 16);
    CHECK(b.delta == doctest::Approx(16.0 / 15.0 * (0.5 - 1.0 / 3.0) + 0.1).epsilon(1e-12));
    CHECK(b.delta == doctest::Approx(0.27778).epsilon(1e-4));
    CHECK(b.delta > tsfasman_bound(0.5, 0.1, A).delta);

    auto vanish = bound_thm58(1.0 - 1.0 / 3.0, 0.1, A, 16);
    CHECK(vanish.delta == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("conductor-based tower bound") {
    auto b = bound_thm59(0.5, 0.2, 16);
    CHECK(b.applicable);
    CHECK(b.delta == doctest::Approx(1.0 - 0.5 + 0.4 - 1.0 / 3.0).epsilon(1e-12));

    // at rho = 1/(sqrt(q)-1) the Singleton line is reached
    auto sing = bound_thm59(0.5, 1.0 / 3.0, 16);
    CHECK(sing.delta == doctest::Approx(1.0 - 0.5 + 1.0 / 3.0).epsilon(1e-12));

    auto genus_only = bound_thm59(0.5, 0.0, 16);
    CHECK(genus_only.delta == doctest::Approx(0.5 - 1.0 / 3.0).epsilon(1e-12));

    CHECK_THROWS_WITH_AS(bound_thm59(0.5, 0.2, 8), doctest::Contains("NotSquare"),
                         std::invalid_argument);
}

TEST_CASE("duality-improved tower bound") {
    // V = 0 forces rho >= 1/(sqrt(q)-1) and reproduces the Singleton equality value
    auto v0 = bound_thm510(0.5, 0.4, 0.0, 16);
    CHECK(v0.applicable);
    CHECK(v0.delta == doctest::Approx(1.0 - 0.5 + 0.4).epsilon(1e-12));
    CHECK_FALSE(bound_thm510(0.5, 0.2, 0.0, 16).applicable);

    auto mid = bound_thm510(0.5, 0.2, 1.0 / 6.0, 16);
    CHECK(mid.delta == doctest::Approx(1.0 - 0.5 + 0.2 - 1.0 / 6.0).epsilon(1e-12));
    CHECK(mid.delta == doctest::Approx(0.53333).epsilon(1e-4));

    // 2V at the region cap: the rho floor drops to zero
    CHECK(bound_thm510(0.5, 0.0, 1.0 / 6.0, 16).applicable);
}

TEST_CASE("finite-level dual bound for tower codes") {
    // u = 2: first branch m + ceil(m/(u-1)) = 2m
    BigCount b = brasamoros_finite_bound(4, 5, 2, 1, BigCount(10), BigCount(3));
    BigCount expected = BigCount(10) - 3 + 2;
    CHECK(b == expected);

    // slope in m: the winning branch grows by at most 1 + 1/(u-1) per step
    BigCount b100 = brasamoros_finite_bound(4, 5, 2, 100, BigCount(0), BigCount(0));
    BigCount b101 = brasamoros_finite_bound(4, 5, 2, 101, BigCount(0), BigCount(0));
    BigCount diff = b101 - b100;
    CHECK(diff <= 2);

    // sweep: never beats the baseline tower bound for the dual code
    for (unsigned q : {4u, 16u}) {
        unsigned s = q == 4 ? 2 : 4;
        double inv_a = 1.0 / double(s - 1);
        for (int i = 4; i <= 40; i += 4)
            for (double R : {0.4, 0.6})
                for (double rho : {0.02, 0.05}) {
                    auto tower = gs_tower_params(q, i);
                    BigCount n = tower.n_places_lower;
                    BigCount dim(double(n) * R);
                    long m = std::max<long>(1, long(double(n) * rho));
                    for (long u : {2L, 3L, 5L}) {
                        BigCount bound = brasamoros_finite_bound(q, i, u, m, dim, tower.genus);
                        double ratio = double(bound) / double(n);
                        double dual_rate = 1.0 - double(dim) / double(n);
                        double tsf = 1.0 - dual_rate + double(m) / double(n) - inv_a;
                        CHECK(ratio <= tsf + 1e-6);
                    }
                }
    }
}

TEST_CASE("region where the conductor bound wins") {
    auto p9 = comparison_prop61(9, 0.5);
    CHECK(p9.exact_length == Rational(1, 2));
    CHECK(p9.hi - p9.lo == doctest::Approx(0.5).epsilon(1e-12));

    auto p16 = comparison_prop61(16, 0.5);
    CHECK(p16.exact_length == Rational(14, 45));
    CHECK(p16.lo == doctest::Approx(1.0 / 90.0).epsilon(1e-12));
    CHECK(p16.hi == doctest::Approx(29.0 / 90.0).epsilon(1e-12));

    for (unsigned q : {9u, 16u, 25u, 49u}) {
        auto p = comparison_prop61(q, 0.5);
        CHECK(p.hi - p.lo == doctest::Approx(double(p.exact_length)).epsilon(1e-12));
    }

    // pointwise: inside the interval the conductor bound strictly beats the others
    auto A = ihara(16);
    for (double rho : {0.05, 0.15, 0.25, 0.005, 0.33}) {
        double best_other = std::max(tsfasman_bound(0.5, rho, A).delta,
                                     bound_thm58(0.5, rho, A, 16).delta);
        auto b57 = bound_thm57(0.5, rho, A, 16);
        if (b57.applicable) best_other = std::max(best_other, b57.delta);
        bool wins = bound_thm59(0.5, rho, 16).delta > best_other + 1e-12;
        CHECK(wins == (p16.lo + 1e-12 < rho && rho < p16.hi - 1e-12));
    }
}

TEST_CASE("region where the duality-improved bound wins") {
    auto p9 = comparison_prop62(9, 0.5);
    CHECK(p9.exact_min_v_length == Rational(7, 16));
    CHECK(p9.v_hi - p9.v_lo >= double(p9.exact_min_v_length) - 1e-12);

    auto p16 = comparison_prop62(16, 0.5);
    CHECK(p16.exact_min_v_length == Rational(13, 45));
    CHECK(p16.v_hi - p16.v_lo >= double(p16.exact_min_v_length) - 1e-12);

    // sampled (V, rho) in the region: thm 5.10 strictly above 5.7/5.8/5.9
    auto A = ihara(16);
    double V = 0.5 * (p16.v_lo + p16.v_hi);
    double rho = 0.5 * (p16.rho_lo(V) + p16.rho_hi(V));
    double best_other = std::max(tsfasman_bound(0.5, rho, A).delta,
                                 bound_thm58(0.5, rho, A, 16).delta);
    auto b57 = bound_thm57(0.5, rho, A, 16);
    if (b57.applicable) best_other = std::max(best_other, b57.delta);
    auto b59 = bound_thm59(0.5, rho, 16);
    if (b59.applicable) best_other = std::max(best_other, b59.delta);
    CHECK(bound_thm510(0.5, rho, V, 16).delta > best_other + 1e-12);
}

TEST_CASE("deficiencies of the four constructions") {
    // theorem 1: optimal deficiency -eps*L
    auto t1 = final_params(1, 16, 2.0 / 3.0, 1.0 / 3.0, 0.96, 0.96);
    CHECK(t1.lambda1 == doctest::Approx(-0.32).epsilon(1e-12));
    CHECK(t1.lambda2 == doctest::Approx(-0.32).epsilon(1e-12));

    // theorem 3 at q = 16, eps*L = 0.1: Lambda = -0.2 + 1/3 = 2/15
    auto t3 = final_params(3, 16, 2.0 / 3.0, 1.0 / 3.0, 0.3, 0.3);
    CHECK(t3.lambda1 == doctest::Approx(2.0 / 15.0).epsilon(1e-12));

    // theorem 4 with V = eps*L cancels
    auto t4 = final_params(4, 16, 2.0 / 3.0, 1.0 / 3.0, 0.51, 0.51, 0.17);
    CHECK(t4.lambda1 == doctest::Approx(0.0).epsilon(1e-12));

    // theorem 2 deficiencies
    auto t2 = final_params(2, 16, 0.6, 0.3, 0.5, 0.25);
    CHECK(t2.lambda1 == doctest::Approx(-0.3 / 15.0 + 16.0 / 45.0 - 0.5 * 0.3).epsilon(1e-12));
    CHECK(t2.lambda2 == doctest::Approx(-0.4 / 15.0 + 16.0 / 45.0 - 0.25 * 0.3).epsilon(1e-12));

    // all outputs respect the deficiency floor
    for (auto [l, epsL] : {std::pair<double, double>{t1.lambda1, 0.32},
                           {t3.lambda1, 0.1},
                           {t4.lambda1, 0.17}})
        CHECK(l >= -epsL - 1e-12);

    CHECK_THROWS_WITH_AS(final_params(3, 16, 2.0 / 3.0, 1.0 / 3.0, 1.2, 1.2),
                         doctest::Contains("eps*L"), HypothesisError);
    CHECK_THROWS_WITH_AS(final_params(3, 16, 0.9, 0.5, 0.1, 0.1), doctest::Contains("R1"),
                         HypothesisError);
}

TEST_CASE("sweep CSV") {
    std::ostringstream os;
    sweep_csv(os, 16, {0.5, 0.5, 0.1}, {0.2, 0.2, 0.1}, {0.0, 0.0, 0.1});
    std::istringstream in(os.str());
    std::string header, row;
    std::getline(in, header);
    CHECK(header == "q,R,rho,V,tsfasman,thm57,thm58,thm59,thm510,best,best_tag,clamped");
    std::getline(in, row);
    // single point reproduces the individual evaluations
    auto A = ihara(16);
    std::ostringstream expect;
    expect.precision(12);
    expect << 16 << ',' << 0.5 << ',' << 0.2 << ',' << 0.0 << ',';
    expect << tsfasman_bound(0.5, 0.2, A).delta << ",na,";
    expect << bound_thm58(0.5, 0.2, A, 16).delta << ',';
    expect << bound_thm59(0.5, 0.2, 16).delta << ",na,";
    expect << bound_thm59(0.5, 0.2, 16).delta << ",thm59,0";
    CHECK(row == expect.str());

    // best delta is monotone in rho at fixed R and V
    std::ostringstream os2;
    sweep_csv(os2, 16, {0.5, 0.5, 0.1}, {0.0, 0.3, 0.01}, {0.0, 0.0, 0.1});
    std::istringstream in2(os2.str());
    std::getline(in2, header);
    double prev_best = -1.0;
    while (std::getline(in2, row)) {
        // best is the 10th field
        std::stringstream fields(row);
        std::string field;
        for (int i = 0; i < 10; ++i) std::getline(fields, field, ',');
        if (field == "na") continue;
        double best = std::stod(field);
        CHECK(best >= prev_best - 1e-12);
        prev_best = best;
    }
}
