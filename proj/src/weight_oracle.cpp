#include "rampw/weight_oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "rampw/subspace_enum.hpp"

namespace rampw {

int support_size(const Matrix& vectors) {
    int count = 0;
    for (size_t c = 0; c < vectors.cols(); ++c) {
        for (size_t r = 0; r < vectors.rows(); ++r)
            if (vectors.at(r, c) != 0) {
                ++count;
                break;
            }
    }
    return count;
}

Matrix canonical_complement(const NestedCodePair& pair) {
    const FieldSpec& f = *pair.c1.field();
    const Matrix& g1 = pair.c1.generator();
    const Matrix& g2 = pair.c2.generator();
    const size_t n = pair.c1.n();

    std::set<size_t> p2(pair.c2.pivots().begin(), pair.c2.pivots().end());
    Matrix w(pair.c1.field(), pair.ell(), n);
    size_t wi = 0;
    for (size_t i = 0; i < pair.c1.k(); ++i) {
        if (p2.count(pair.c1.pivots()[i])) continue;
        std::copy(g1.row(i), g1.row(i) + n, w.row(wi));
        // zero the G2 pivot columns
        for (size_t j = 0; j < pair.c2.k(); ++j) {
            uint8_t coeff = w.at(wi, pair.c2.pivots()[j]);
            if (coeff == 0) continue;
            for (size_t col = 0; col < n; ++col)
                w.at(wi, col) = f.sub(w.at(wi, col), f.mul(coeff, g2.at(j, col)));
        }
        ++wi;
    }
    if (wi != pair.ell()) throw std::logic_error("canonical_complement: pivot sets not nested");
    return w;
}

namespace {

int min_support(const Matrix& basis, size_t head, size_t m, uint64_t budget) {
    const unsigned q = basis.field()->q();
    ensure_subspace_budget(q, head, basis.rows() - head, m, budget);
    int best = int(basis.cols()) + 1;
    enumerate_subspaces(basis, head, m, [&](const uint8_t*, int support) {
        if (support < best) best = support;
    });
    return best;
}

}  // namespace

int ghw_bruteforce(const LinearCode& c, size_t m, uint64_t budget) {
    if (m < 1 || m > c.k())
        throw std::invalid_argument("ghw_bruteforce: m must be in [1, k]");
    return min_support(c.generator(), c.k(), m, budget);
}

int rghw_bruteforce(const NestedCodePair& pair, size_t m, uint64_t budget) {
    if (m < 1 || m > pair.ell())
        throw std::invalid_argument("rghw_bruteforce: m must be in [1, ell]");
    Matrix basis = canonical_complement(pair).vstack(pair.c2.generator());
    return min_support(basis, pair.ell(), m, budget);
}

int rdlp(const NestedCodePair& pair, size_t d) {
    const size_t n = pair.c1.n();
    if (d < 1 || d > n) throw std::invalid_argument("rdlp: d must be in [1, n]");
    if (n > 24) throw TooLargeError("rdlp: n > 24");

    std::vector<size_t> idx(d);
    for (size_t i = 0; i < d; ++i) idx[i] = i;
    std::vector<bool> in_I(n, false);
    int best = 0;
    for (;;) {
        std::fill(in_I.begin(), in_I.end(), false);
        for (size_t i : idx) in_I[i] = true;
        int diff = int(coordinate_intersection_dim(pair.c1, in_I)) -
                   int(coordinate_intersection_dim(pair.c2, in_I));
        best = std::max(best, diff);

        size_t i = d;
        bool advanced = false;
        while (i-- > 0) {
            if (idx[i] + (d - i) < n) {
                ++idx[i];
                for (size_t j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return best;
}

int rghw_via_rdlp(const NestedCodePair& pair, size_t m) {
    if (m < 1 || m > pair.ell())
        throw std::invalid_argument("rghw_via_rdlp: m must be in [1, ell]");
    for (size_t d = 1; d <= pair.c1.n(); ++d)
        if (rdlp(pair, d) >= int(m)) return int(d);
    throw std::logic_error("rghw_via_rdlp: K_n < ell");  // unreachable: K_n = ell
}

std::vector<int> ghw_hierarchy(const LinearCode& c, uint64_t budget) {
    std::vector<int> d;
    d.reserve(c.k());
    for (size_t m = 1; m <= c.k(); ++m) d.push_back(ghw_bruteforce(c, m, budget));
    return d;
}

std::vector<int> rghw_hierarchy(const NestedCodePair& pair, uint64_t budget) {
    std::vector<int> ms;
    ms.reserve(pair.ell());
    for (size_t m = 1; m <= pair.ell(); ++m) ms.push_back(rghw_bruteforce(pair, m, budget));
    return ms;
}

bool wei_duality_check(const LinearCode& c, uint64_t budget) {
    const size_t n = c.n();
    std::vector<int> primal = ghw_hierarchy(c, budget);
    std::vector<int> dual_h = ghw_hierarchy(dual(c), budget);

    std::vector<bool> seen(n + 1, false);
    for (int d : primal) {
        if (d < 1 || size_t(d) > n || seen[d]) return false;
        seen[d] = true;
    }
    for (int d : dual_h) {
        int v = int(n) + 1 - d;
        if (v < 1 || size_t(v) > n || seen[v]) return false;
        seen[v] = true;
    }
    for (size_t i = 1; i <= n; ++i)
        if (!seen[i]) return false;
    return true;
}

Rational cor2_bound(long d1, long m, long q) {
    if (m < 1 || d1 < 1 || q < 2) throw std::invalid_argument("cor2_bound: need m >= 1, d1 >= 1, q >= 2");
    BigCount qm = boost::multiprecision::pow(BigCount(q), unsigned(m));
    BigCount qm1 = boost::multiprecision::pow(BigCount(q), unsigned(m - 1));
    return Rational(BigCount(d1) * (qm - 1), qm - qm1);
}

}  // namespace rampw
