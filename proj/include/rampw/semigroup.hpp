#pragma once

#include <cstdint>
#include <vector>

#include "rampw/errors.hpp"

namespace rampw {

// Numerical semigroup given by generators with gcd 1: membership bitmap up
// to the conductor, genus (number of gaps), conductor.
class NumericalSemigroup {
public:
    // Throws std::invalid_argument("InfiniteGaps: ...") if gcd(gens) != 1.
    static NumericalSemigroup from_generators(std::vector<long> gens);

    bool contains(long x) const {
        if (x < 0) return false;
        if (x >= conductor_) return true;
        return member_[size_t(x)];
    }
    long genus() const { return genus_; }
    long conductor() const { return conductor_; }
    const std::vector<long>& generators() const { return gens_; }
    std::vector<long> gaps() const;

private:
    std::vector<long> gens_;
    std::vector<bool> member_;  // [0, conductor)
    long genus_ = 0, conductor_ = 0;
};

// h_gamma = #(H ∩ (0, gamma]) and h'_gamma = #([gamma, inf) \ H).
long h_count(const NumericalSemigroup& h, long gamma);
long h_prime_count(const NumericalSemigroup& h, long gamma);

struct GoppaBound {
    int value;
    bool exact;  // true for m >= g+1 where the weight equals n-k+m
};
GoppaBound goppa_ghw_bound(int n, int k, int g, int m);

// Lower bound for M_m(C1, C2) of one-point codes with pole orders mu1 > mu2:
// n - mu1 plus the minimum over strictly increasing shift tuples
// -(mu1-mu2)+1 <= i_1 < ... < i_{m-1} <= -1 of the number of elements of
// ∪_s (i_s + H) outside H.  Elements are counted on [-(mu1-mu2)+1, c): below
// that window no shifted copy reaches, at and above the conductor everything
// is in H.
int theorem44_primary_bound(const NumericalSemigroup& h, long mu1, long mu2, long n, int m,
                            uint64_t budget = 1'000'000);

// Lower bound for M_m(C2^⊥, C1^⊥): minimum over tuples
// -(mu1-mu2)+1 <= i_1 < ... < i_m <= 0 of the number of elements of
// ∪_s (i_s + (mu1 - H)) inside H, counted on [0, mu1].
int theorem44_dual_bound(const NumericalSemigroup& h, long mu1, long mu2, int m,
                         uint64_t budget = 1'000'000);

// d_m(C) >= n - k + 2m - c + h_{c-m} for a one-point code of dimension k
// with mu < n and 1 <= m <= min(k, g).
int prop45_bound(int n, int k, int m, const NumericalSemigroup& h);

// d_m(C^⊥) >= n - k_perp + 2m - c + #{gaps > mu-c+m} for mu > 2g-2 and
// 1 <= m <= min(k_perp, g).
int prop46_bound(int n, int k_perp, int m, long mu, const NumericalSemigroup& h);

struct DimensionEstimate {
    int value;
    enum Kind { Exact, LowerBound, UpperBound } kind;
};
// Dimension of a one-point code with pole cap mu: exact when 2g-2 < mu < n
// (and for mu = -1 or mu >= n+2g-1), an inequality direction otherwise.
DimensionEstimate lemma43_dimension(long mu, int g, int n);

struct GapBound {
    bool equal;  // M_m = d_m guaranteed
    int value;   // otherwise M_m - d_m <= value
};
// max{0, c - ell}, with equality whenever ell >= c or m > g.
GapBound prop47_gap_bound(int ell, int c, int m, int g);

}  // namespace rampw
