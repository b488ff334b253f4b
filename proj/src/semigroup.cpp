#include "rampw/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rampw {

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<long> gens) {
    std::erase_if(gens, [](long g) { return g == 0; });
    if (gens.empty()) throw std::invalid_argument("InfiniteGaps: no generators");
    for (long g : gens)
        if (g < 0) throw std::invalid_argument("InfiniteGaps: negative generator");
    long d = 0;
    for (long g : gens) d = std::gcd(d, g);
    if (d != 1) throw std::invalid_argument("InfiniteGaps: gcd(generators) = " + std::to_string(d));

    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    const long max_gen = gens.back();
    long limit = std::max<long>(2 * max_gen, 16);
    std::vector<bool> member;
    long conductor = -1;
    for (;;) {
        member.assign(size_t(limit) + 1, false);
        member[0] = true;
        for (long g : gens)
            for (long x = g; x <= limit; ++x)
                if (member[size_t(x - g)]) member[size_t(x)] = true;
        // A full run of max_gen consecutive members pins the conductor: every
        // later integer is that run shifted by multiples of the generators.
        long run = 0;
        for (long x = 0; x <= limit; ++x) {
            run = member[size_t(x)] ? run + 1 : 0;
            if (run == max_gen) {
                conductor = x - max_gen + 1;
                break;
            }
        }
        if (conductor >= 0) break;
        limit *= 2;
    }

    NumericalSemigroup h;
    h.gens_ = std::move(gens);
    h.conductor_ = conductor;
    h.member_.assign(member.begin(), member.begin() + conductor);
    h.genus_ = 0;
    for (long x = 0; x < conductor; ++x)
        if (!h.member_[size_t(x)]) ++h.genus_;
    // closure sanity check on [0, 2c]
    for (long a = 0; a <= 2 * conductor; ++a) {
        if (!h.contains(a)) continue;
        for (long b = a; a + b <= 2 * conductor; ++b)
            if (h.contains(b) && !h.contains(a + b))
                throw std::logic_error("NumericalSemigroup: bitmap not closed under addition");
    }
    return h;
}

std::vector<long> NumericalSemigroup::gaps() const {
    std::vector<long> out;
    for (long x = 0; x < conductor_; ++x)
        if (!member_[size_t(x)]) out.push_back(x);
    return out;
}

long h_count(const NumericalSemigroup& h, long gamma) {
    if (gamma < 0) throw std::invalid_argument("h_count: gamma must be >= 0");
    long count = 0;
    for (long x = 1; x <= gamma; ++x)
        if (h.contains(x)) ++count;
    return count;
}

long h_prime_count(const NumericalSemigroup& h, long gamma) {
    if (gamma < 0) throw std::invalid_argument("h_prime_count: gamma must be >= 0");
    long count = 0;
    for (long x = gamma; x < h.conductor(); ++x)
        if (!h.contains(x)) ++count;
    return count;
}

GoppaBound goppa_ghw_bound(int n, int k, int g, int m) {
    if (m < 1 || m > k) throw std::invalid_argument("goppa_ghw_bound: m must be in [1, k]");
    if (m >= g + 1) return {n - k + m, true};
    return {n - k + m - g, false};
}

namespace {

// Minimum of `score` over strictly increasing integer tuples of the given
// size within [lo, hi].
template <class Score>
int min_over_tuples(long lo, long hi, int size, uint64_t budget, Score&& score) {
    long range = hi - lo + 1;
    if (size < 0 || range < size)
        throw std::invalid_argument("tuple search: empty index range");
    // C(range, size) tuples
    long double count = 1;
    for (int i = 0; i < size; ++i) count = count * (long double)(range - i) / (i + 1);
    if (count > (long double)budget)
        throw TooLargeError("tuple search: candidate count exceeds budget " + std::to_string(budget));

    std::vector<long> tuple(size);
    for (int i = 0; i < size; ++i) tuple[i] = lo + i;
    int best = -1;
    for (;;) {
        int s = score(tuple);
        if (best < 0 || s < best) best = s;
        int i = size;
        bool advanced = false;
        while (i-- > 0) {
            if (tuple[i] + (size - i) <= hi) {
                ++tuple[i];
                for (int j = i + 1; j < size; ++j) tuple[j] = tuple[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return best;
}

}  // namespace

int theorem44_primary_bound(const NumericalSemigroup& h, long mu1, long mu2, long n, int m,
                            uint64_t budget) {
    if (!(-1 <= mu2 && mu2 < mu1 && mu1 < n))
        throw std::invalid_argument("theorem44_primary_bound: need -1 <= mu2 < mu1 < n");
    if (m < 1) throw std::invalid_argument("theorem44_primary_bound: m must be >= 1");
    if (m == 1) return int(n - mu1);

    const long lo = -(mu1 - mu2) + 1, hi = -1;
    const long c = h.conductor();
    int best = min_over_tuples(lo, hi, m - 1, budget, [&](const std::vector<long>& shifts) {
        int count = 0;
        for (long alpha = lo; alpha < c; ++alpha) {
            if (h.contains(alpha)) continue;
            for (long i : shifts)
                if (h.contains(alpha - i)) {
                    ++count;
                    break;
                }
        }
        return count;
    });
    return int(n - mu1) + best;
}

int theorem44_dual_bound(const NumericalSemigroup& h, long mu1, long mu2, int m, uint64_t budget) {
    if (!(-1 <= mu2 && mu2 < mu1))
        throw std::invalid_argument("theorem44_dual_bound: need -1 <= mu2 < mu1");
    if (m < 1) throw std::invalid_argument("theorem44_dual_bound: m must be >= 1");

    const long lo = -(mu1 - mu2) + 1, hi = 0;
    return min_over_tuples(lo, hi, m, budget, [&](const std::vector<long>& shifts) {
        int count = 0;
        for (long alpha = 0; alpha <= mu1; ++alpha) {
            if (!h.contains(alpha)) continue;
            for (long i : shifts)
                if (h.contains(mu1 + i - alpha)) {
                    ++count;
                    break;
                }
        }
        return count;
    });
}

int prop45_bound(int n, int k, int m, const NumericalSemigroup& h) {
    const long g = h.genus(), c = h.conductor();
    if (m < 1 || m > std::min<long>(k, g))
        throw std::invalid_argument("prop45_bound: m must be in [1, min(k, g)]");
    int with_h = int(n - k + 2 * m - c + h_count(h, c - m));
    int without_h = int(n - k + 2 * m - c);
    return std::max(with_h, without_h);
}

int prop46_bound(int n, int k_perp, int m, long mu, const NumericalSemigroup& h) {
    const long g = h.genus(), c = h.conductor();
    if (mu <= 2 * g - 2) throw std::invalid_argument("prop46_bound: need mu > 2g-2");
    if (m < 1 || m > std::min<long>(k_perp, g))
        throw std::invalid_argument("prop46_bound: m must be in [1, min(k_perp, g)]");
    // The gap counter must exclude mu-c+m itself: counting the members of
    // [0, mu-c+m] needs the gaps strictly beyond that point, and including a
    // gap at exactly mu-c+m would overstate the bound by one (observable at
    // the Hermitian mu = 2 dual, whose true d_1 is 2).
    int with_h = int(n - k_perp + 2 * m - c + h_prime_count(h, std::max<long>(mu - c + m + 1, 0)));
    int without_h = int(n - k_perp + 2 * m - c);
    return std::max(with_h, without_h);
}

DimensionEstimate lemma43_dimension(long mu, int g, int n) {
    if (mu < -1) throw std::invalid_argument("lemma43_dimension: mu must be >= -1");
    if (mu == -1) return {0, DimensionEstimate::Exact};
    if (mu >= n + 2L * g - 1) return {n, DimensionEstimate::Exact};
    if (2L * g - 2 < mu && mu < n) return {int(mu + 1 - g), DimensionEstimate::Exact};
    if (mu <= 2L * g - 2) return {int(std::max<long>(0, mu + 1 - g)), DimensionEstimate::LowerBound};
    return {int(std::min<long>(n, mu + 1 - g)), DimensionEstimate::UpperBound};
}

GapBound prop47_gap_bound(int ell, int c, int m, int g) {
    if (ell < 1) throw std::invalid_argument("prop47_gap_bound: ell must be >= 1");
    if (ell >= c || m > g) return {true, 0};
    return {false, std::max(0, c - ell)};
}

}  // namespace rampw
