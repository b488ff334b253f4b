#include "rampw/ag_codes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rampw {

namespace {

uint8_t field_pow(const FieldSpec& f, uint8_t base, unsigned exp) {
    uint8_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r = f.mul(r, base);
    return r;
}

// Keeps the rows of `candidates` that increase the rank, in order.
// Returns selected row indices.
std::vector<size_t> independent_prefix_rows(const Matrix& candidates) {
    std::vector<size_t> picked;
    Matrix acc(candidates.field(), 0, candidates.cols());
    size_t current_rank = 0;
    for (size_t i = 0; i < candidates.rows(); ++i) {
        Matrix trial = acc.vstack(Matrix::from_rows(candidates.field(), {candidates.row_vec(i)}));
        auto r = rref(trial, true);
        if (r.rank > current_rank) {
            picked.push_back(i);
            acc = std::move(r.matrix);
            current_rank = r.rank;
        }
    }
    return picked;
}

}  // namespace

OnePointCode reed_solomon(unsigned q, size_t n, size_t k, const std::vector<uint8_t>& points) {
    auto field = FieldSpec::get(q);
    if (n > q) throw std::invalid_argument("reed_solomon: n must be <= q");
    if (k > n) throw std::invalid_argument("reed_solomon: k must be <= n");
    if (points.size() != n) throw std::invalid_argument("BadPoints: need n evaluation points");
    std::set<uint8_t> distinct(points.begin(), points.end());
    if (distinct.size() != n) throw std::invalid_argument("BadPoints: duplicate evaluation points");
    for (uint8_t pt : points)
        if (pt >= q) throw std::invalid_argument("BadPoints: point outside the field");

    Matrix basis(field, k, n);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) basis.at(i, j) = field_pow(*field, points[j], unsigned(i));

    std::vector<long> gammas(k);
    for (size_t i = 0; i < k; ++i) gammas[i] = long(i);
    OnePointCode out{LinearCode::from_spanning_rows(basis), std::move(basis), std::move(gammas),
                     NumericalSemigroup::from_generators({1}), long(k) - 1, CurveTag::ReedSolomon};
    if (out.code.k() != k) throw std::logic_error("reed_solomon: basis unexpectedly dependent");
    return out;
}

OnePointCode hermitian_code(unsigned q0, long mu) {
    if (q0 != 2 && q0 != 3) throw std::invalid_argument("Unsupported: q0 must be 2 or 3");
    const unsigned q = q0 * q0;
    auto field = FieldSpec::get(q);
    const FieldSpec& f = *field;
    const size_t n = size_t(q0) * q0 * q0;
    const long g = long(q0) * (q0 - 1) / 2;
    if (mu < -1 || mu >= long(n) + 2 * g)
        throw std::invalid_argument("hermitian_code: mu must be in [-1, n + 2g)");

    // affine points of y^q0 + y = x^(q0+1), lexicographic in packed (x, y)
    std::vector<std::pair<uint8_t, uint8_t>> points;
    for (unsigned x = 0; x < q; ++x)
        for (unsigned y = 0; y < q; ++y) {
            uint8_t lhs = f.add(field_pow(f, uint8_t(y), q0), uint8_t(y));
            uint8_t rhs = field_pow(f, uint8_t(x), q0 + 1);
            if (lhs == rhs) points.emplace_back(uint8_t(x), uint8_t(y));
        }
    if (points.size() != n) throw std::logic_error("hermitian_code: wrong point count");

    // monomials x^a y^b, b < q0, by pole order a*q0 + b*(q0+1)
    struct Monomial {
        long pole;
        unsigned a, b;
    };
    std::vector<Monomial> monomials;
    for (unsigned b = 0; b < q0; ++b)
        for (long a = 0; a * long(q0) + long(b) * (q0 + 1) <= mu; ++a)
            monomials.push_back({a * long(q0) + long(b) * (q0 + 1), unsigned(a), b});
    std::sort(monomials.begin(), monomials.end(),
              [](const Monomial& x, const Monomial& y) { return x.pole < y.pole; });

    auto semigroup = NumericalSemigroup::from_generators({long(q0), long(q0) + 1});
    if (monomials.empty()) {
        Matrix empty(field, 0, n);
        return {LinearCode::zero(field, n), std::move(empty), {}, std::move(semigroup), mu,
                CurveTag::Hermitian};
    }

    Matrix rows(field, monomials.size(), n);
    for (size_t i = 0; i < monomials.size(); ++i)
        for (size_t j = 0; j < n; ++j) {
            uint8_t xv = field_pow(f, points[j].first, monomials[i].a);
            uint8_t yv = field_pow(f, points[j].second, monomials[i].b);
            rows.at(i, j) = f.mul(xv, yv);
        }

    // For mu >= n the monomial evaluations become dependent; keep the
    // dimension-jump rows so basis row i still has rho-bar index i.
    std::vector<size_t> picked = independent_prefix_rows(rows);
    Matrix basis(field, picked.size(), n);
    std::vector<long> gammas(picked.size());
    for (size_t i = 0; i < picked.size(); ++i) {
        std::copy(rows.row(picked[i]), rows.row(picked[i]) + n, basis.row(i));
        gammas[i] = monomials[picked[i]].pole;
    }
    OnePointCode out{LinearCode::from_spanning_rows(basis), std::move(basis), std::move(gammas),
                     std::move(semigroup), mu, CurveTag::Hermitian};
    return out;
}

size_t rho_bar(const OnePointCode& code, const std::vector<uint8_t>& v) {
    if (v.size() != code.code.n()) throw std::invalid_argument("rho_bar: length mismatch");
    bool zero = std::all_of(v.begin(), v.end(), [](uint8_t x) { return x == 0; });
    if (zero) return 0;
    Matrix acc(code.code.field(), 0, code.code.n());
    for (size_t i = 0; i < code.eval_basis.rows(); ++i) {
        acc = acc.vstack(Matrix::from_rows(code.code.field(), {code.eval_basis.row_vec(i)}));
        auto r = rref(acc, true);
        acc = r.matrix;
        if (rref_contains({acc, r.rank, r.pivots}, v)) return i + 1;
    }
    throw std::invalid_argument("NotInCode: vector outside the evaluation code");
}

int appendixB_support_bound(const NumericalSemigroup& h, const std::vector<size_t>& indices,
                            size_t n, const std::vector<long>& gammas) {
    if (indices.empty()) throw std::invalid_argument("appendixB_support_bound: empty index set");
    for (size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 1 || indices[i] > gammas.size())
            throw std::invalid_argument("appendixB_support_bound: index out of range");
        if (i > 0 && indices[i] <= indices[i - 1])
            throw std::invalid_argument("appendixB_support_bound: indices must increase");
    }
    const size_t m = indices.size();
    const long gamma_last = gammas[indices[m - 1] - 1];
    long lo = gammas[indices[0] - 1] - gamma_last;
    int count = 0;
    for (long alpha = lo; alpha < h.conductor(); ++alpha) {
        if (h.contains(alpha)) continue;
        for (size_t s = 0; s + 1 < m; ++s) {
            long shift = gammas[indices[s] - 1] - gamma_last;
            if (h.contains(alpha - shift)) {
                ++count;
                break;
            }
        }
    }
    return int(n) - int(gamma_last) + count;
}

TowerParams gs_tower_params(unsigned q, int level) {
    if (level < 1) throw std::invalid_argument("gs_tower_params: level must be >= 1");
    unsigned s = unsigned(std::sqrt(double(q)));
    while (s * s < q) ++s;
    if (s * s != q || q < 4) throw std::invalid_argument("NotSquare: q must be a perfect square >= 4");

    auto spow = [&](int e) -> BigCount { return boost::multiprecision::pow(BigCount(s), unsigned(e)); };
    TowerParams out;
    out.q = q;
    out.level = level;
    if (level % 2 == 0) {
        // genus (q^(i/4) - 1)^2, conductor q^(i/2) - q^(i/4), via s = sqrt(q)
        BigCount root = spow(level / 2);
        out.genus = (root - 1) * (root - 1);
        out.conductor = spow(level) - root;
    } else {
        out.genus = (spow((level + 1) / 2) - 1) * (spow((level - 1) / 2) - 1);
        out.conductor = spow(level) - spow((level + 1) / 2);
    }
    out.n_places_lower = spow(level - 1) * (BigCount(q) - s);
    return out;
}

bool hstar_window_check(const std::function<OnePointCode(long mu)>& family, size_t n,
                        const NumericalSemigroup& h) {
    size_t prev_k = family(-1).code.k();
    if (prev_k != 0) return false;
    std::vector<long> jumps;
    for (long mu = 0; mu < long(n); ++mu) {
        size_t k = family(mu).code.k();
        if (k == prev_k + 1)
            jumps.push_back(mu);
        else if (k != prev_k)
            return false;
        prev_k = k;
    }
    std::vector<long> expected;
    for (long x = 0; x < long(n); ++x)
        if (h.contains(x)) expected.push_back(x);
    return jumps == expected;
}

}  // namespace rampw
