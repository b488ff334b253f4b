#include "rampw/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "rampw/errors.hpp"

namespace rampw {

RampScheme build_scheme(const NestedCodePair& pair) {
    return RampScheme{pair, canonical_complement(pair)};
}

namespace {

std::vector<uint8_t> psi(const RampScheme& scheme, const std::vector<uint8_t>& secret) {
    if (secret.size() != scheme.ell())
        throw std::invalid_argument("share: secret must have length ell");
    const FieldSpec& f = *scheme.pair.c1.field();
    std::vector<uint8_t> out(scheme.n(), 0);
    for (size_t i = 0; i < scheme.ell(); ++i) {
        if (secret[i] == 0) continue;
        const uint8_t* row = scheme.w.row(i);
        for (size_t j = 0; j < scheme.n(); ++j) out[j] = f.add(out[j], f.mul(secret[i], row[j]));
    }
    return out;
}

uint64_t int_pow(uint64_t b, uint64_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// All q^k1 share vectors, secret-major, built once and reused across the
// per-subset entropy computations.
struct ShareTable {
    unsigned q;
    size_t n, ell;
    uint64_t n_secrets, n_rand;
    std::vector<uint8_t> shares;  // (n_secrets * n_rand) rows of length n
};

ShareTable build_share_table(const RampScheme& scheme, uint64_t budget) {
    const FieldSpec& f = *scheme.pair.c1.field();
    const unsigned q = f.q();
    const size_t ell = scheme.ell(), k2 = scheme.k2(), n = scheme.n();
    if (std::pow(double(q), double(ell + k2)) > double(budget))
        throw TooLargeError("mutual information: q^k1 exceeds budget");

    ShareTable table;
    table.q = q;
    table.n = n;
    table.ell = ell;
    table.n_secrets = int_pow(q, ell);
    table.n_rand = int_pow(q, k2);
    table.shares.resize(table.n_secrets * table.n_rand * n);

    const Matrix& g2 = scheme.pair.c2.generator();
    std::vector<uint8_t> secret(ell), rand_coeffs(k2);
    uint8_t* out = table.shares.data();
    for (uint64_t si = 0; si < table.n_secrets; ++si) {
        uint64_t v = si;
        for (size_t i = 0; i < ell; ++i) { secret[i] = uint8_t(v % q); v /= q; }
        std::vector<uint8_t> base = psi(scheme, secret);
        for (uint64_t ri = 0; ri < table.n_rand; ++ri, out += n) {
            v = ri;
            for (size_t i = 0; i < k2; ++i) { rand_coeffs[i] = uint8_t(v % q); v /= q; }
            std::copy(base.begin(), base.end(), out);
            for (size_t i = 0; i < k2; ++i) {
                if (rand_coeffs[i] == 0) continue;
                const uint8_t* row = g2.row(i);
                for (size_t j = 0; j < n; ++j) out[j] = f.add(out[j], f.mul(rand_coeffs[i], row[j]));
            }
        }
    }
    return table;
}

// Entropy bookkeeping for one subset: joint counts keyed by the restricted
// share vector per secret, and the marginal over all secrets.
struct SubsetStats {
    double mi;    // I(X_I; M) in q-bits
    double h_xi;  // H(X_I) in q-bits
};

SubsetStats subset_stats(const ShareTable& table, const std::vector<size_t>& I) {
    for (size_t i : I)
        if (i >= table.n) throw std::invalid_argument("mutual information: index out of range");
    if (I.size() > 8)
        throw TooLargeError("mutual information: subsets larger than 8 unsupported");

    const double lq = std::log(double(table.q));
    std::unordered_map<uint64_t, uint64_t> marginal, per_secret;
    double joint_sum = 0.0;
    const uint8_t* row = table.shares.data();
    for (uint64_t si = 0; si < table.n_secrets; ++si) {
        per_secret.clear();
        for (uint64_t ri = 0; ri < table.n_rand; ++ri, row += table.n) {
            uint64_t key = 0;
            for (size_t t = 0; t < I.size(); ++t) key |= uint64_t(row[I[t]]) << (8 * t);
            ++per_secret[key];
            ++marginal[key];
        }
        for (const auto& [key, count] : per_secret)
            joint_sum += double(count) * std::log(double(count)) / lq;
    }

    double marginal_sum = 0.0;
    for (const auto& [key, count] : marginal)
        marginal_sum += double(count) * std::log(double(count)) / lq;

    SubsetStats out;
    const double t = double(table.n_secrets) * double(table.n_rand);
    out.mi = double(table.ell) + joint_sum / t - marginal_sum / t;
    double log_total = double(table.ell) + std::log(double(table.n_rand)) / lq;
    out.h_xi = log_total - marginal_sum / t;
    return out;
}

SubsetStats subset_stats(const RampScheme& scheme, const std::vector<size_t>& I, uint64_t budget) {
    return subset_stats(build_share_table(scheme, budget), I);
}

int integral_qbits(double mi) {
    double nearest = std::round(mi);
    if (std::fabs(mi - nearest) > 1e-9)
        throw std::logic_error("mutual information is not integral within 1e-9 q-bits");
    return int(nearest);
}

template <class Fn>
void for_each_subset_of_size(size_t n, size_t size, Fn&& fn) {
    if (size == 0) {
        fn(std::vector<size_t>{});
        return;
    }
    std::vector<size_t> idx(size);
    for (size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
        fn(idx);
        size_t i = size;
        bool advanced = false;
        while (i-- > 0) {
            if (idx[i] + (size - i) < n) {
                ++idx[i];
                for (size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
}

}  // namespace

std::vector<uint8_t> share(const RampScheme& scheme, const std::vector<uint8_t>& secret,
                           const std::vector<uint8_t>& c2_word) {
    if (c2_word.size() != scheme.n())
        throw std::invalid_argument("BadRandomness: c2 word must have length n");
    if (!scheme.pair.c2.contains(c2_word))
        throw std::invalid_argument("BadRandomness: word is not in C2");
    const FieldSpec& f = *scheme.pair.c1.field();
    std::vector<uint8_t> out = psi(scheme, secret);
    for (size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], c2_word[j]);
    return out;
}

std::vector<uint8_t> share_with_coeffs(const RampScheme& scheme, const std::vector<uint8_t>& secret,
                                       const std::vector<uint8_t>& coeffs) {
    return share(scheme, secret, scheme.pair.c2.k() == 0
                                     ? std::vector<uint8_t>(scheme.n(), 0)
                                     : scheme.pair.c2.encode(coeffs));
}

ReconstructResult reconstruct(const RampScheme& scheme, const std::vector<size_t>& I,
                              const std::vector<uint8_t>& values) {
    if (values.size() != I.size())
        throw std::invalid_argument("reconstruct: values and index set differ in size");
    const FieldSpec& f = *scheme.pair.c1.field();
    const size_t ell = scheme.ell(), k2 = scheme.k2();

    // Unknowns z = (s, y): sum_i z_i * basis_i restricted to I equals values,
    // where basis = [W; G2].
    Matrix basis = scheme.w.vstack(scheme.pair.c2.generator());
    std::vector<size_t> idx(I.begin(), I.end());
    Matrix system = basis.select_columns(idx).transpose();  // |I| x (ell + k2)

    // augmented elimination
    Matrix aug(scheme.pair.c1.field(), system.rows(), system.cols() + 1);
    for (size_t r = 0; r < system.rows(); ++r) {
        for (size_t c = 0; c < system.cols(); ++c) aug.at(r, c) = system.at(r, c);
        aug.at(r, system.cols()) = values[r];
    }
    auto red = rref(aug);
    for (size_t p : red.pivots)
        if (p == system.cols())
            throw std::invalid_argument("Inconsistent: no codeword of C1 matches the shares");

    std::vector<uint8_t> particular(ell + k2, 0);
    for (size_t r = 0; r < red.pivots.size(); ++r)
        particular[red.pivots[r]] = red.matrix.at(r, system.cols());

    Matrix directions = null_space(system);  // rows: homogeneous solutions
    std::vector<size_t> secret_cols(ell);
    for (size_t i = 0; i < ell; ++i) secret_cols[i] = i;
    Matrix secret_dirs = rref(directions.select_columns(secret_cols), true).matrix;

    ReconstructResult out;
    out.secret.assign(particular.begin(), particular.begin() + ell);
    out.candidate_directions = secret_dirs;
    out.unique = secret_dirs.rows() == 0;
    out.known_qbits = ell - secret_dirs.rows();
    (void)f;
    return out;
}

double mutual_information_exhaustive(const RampScheme& scheme, const std::vector<size_t>& I,
                                     uint64_t budget) {
    return subset_stats(scheme, I, budget).mi;
}

ThresholdProfile thresholds(const RampScheme& scheme, uint64_t budget) {
    const size_t n = scheme.n(), ell = scheme.ell();
    std::vector<int> primary = rghw_hierarchy(scheme.pair, budget);
    std::vector<int> dual_side = rghw_hierarchy(dual_pair(scheme.pair), budget);
    ThresholdProfile profile;
    profile.t.resize(ell);
    profile.r.resize(ell);
    for (size_t m = 1; m <= ell; ++m) {
        profile.t[m - 1] = dual_side[m - 1] - 1;
        profile.r[m - 1] = int(n) - primary[ell - m] + 1;
    }
    return profile;
}

ThresholdProfile thresholds_by_definition(const RampScheme& scheme, uint64_t budget) {
    const size_t n = scheme.n(), ell = scheme.ell();
    ShareTable table = build_share_table(scheme, budget);
    // max_mi[t] over subsets of size t, min_mi[t] likewise
    std::vector<int> max_mi(n + 1, 0), min_mi(n + 1, int(ell));
    for (size_t size = 0; size <= n; ++size) {
        int lo = int(ell), hi = 0;
        for_each_subset_of_size(n, size, [&](const std::vector<size_t>& I) {
            int mi = integral_qbits(subset_stats(table, I).mi);
            lo = std::min(lo, mi);
            hi = std::max(hi, mi);
        });
        max_mi[size] = hi;
        min_mi[size] = lo;
    }
    ThresholdProfile profile;
    profile.t.resize(ell);
    profile.r.resize(ell);
    for (size_t m = 1; m <= ell; ++m) {
        int t = 0;
        while (t + 1 <= int(n) && max_mi[t + 1] < int(m)) ++t;
        profile.t[m - 1] = t;
        int r = int(n);
        while (r - 1 >= 0 && min_mi[r - 1] >= int(m)) --r;
        profile.r[m - 1] = r;
    }
    return profile;
}

GapInterval threshold_gap_bounds(int g, int ell, int m, int m_prime) {
    if (m < 1 || m > ell || m_prime < 1 || m_prime > ell)
        throw std::invalid_argument("threshold_gap_bounds: m, m' must be in [1, ell]");
    if (g < 0) throw std::invalid_argument("threshold_gap_bounds: genus must be >= 0");
    int lower = (m - m_prime) + 1;
    int upper = (m - m_prime) + 2 * g + 1;
    if (m == m_prime) {
        if (ell >= 2 * g) upper = std::min(upper, g + 1);
        if (g + 1 <= m && m <= ell - g) {
            lower = 1;
            upper = 1;
        }
    }
    return {lower, upper};
}

size_t appendixA_mu(const RampScheme& scheme, uint64_t budget) {
    const size_t n = scheme.n();
    const size_t k1 = scheme.pair.c1.k();
    ShareTable table = build_share_table(scheme, budget);
    for (size_t size = 0; size <= n; ++size) {
        bool found = false;
        for_each_subset_of_size(n, size, [&](const std::vector<size_t>& I) {
            if (found) return;
            // I(X_I; X) = H(X_I) since X_I is a function of X; H(X) = k1.
            double h = subset_stats(table, I).h_xi;
            if (std::fabs(h - double(k1)) <= 1e-9) found = true;
        });
        if (found) {
            if (size != scheme.ell() + scheme.k2())
                throw std::logic_error("appendixA_mu: mu != ell + k2");
            return size;
        }
    }
    throw std::logic_error("appendixA_mu: full share vector does not determine X");
}

AppendixAReport appendixA_bound_check(const RampScheme& scheme, uint64_t budget) {
    const size_t n = scheme.n();
    const double h_x_given_m = double(scheme.k2());  // randomness entropy
    ShareTable table = build_share_table(scheme, budget);

    AppendixAReport report;
    report.lemma_holds = true;
    report.max_slack = 0.0;
    report.min_slack = 0.0;
    bool first = true;
    for (size_t size = 0; size <= n; ++size) {
        for_each_subset_of_size(n, size, [&](const std::vector<size_t>& I) {
            SubsetStats st = subset_stats(table, I);
            double slack = st.mi - (st.h_xi - h_x_given_m);
            if (first || slack > report.max_slack) report.max_slack = slack;
            if (first || slack < report.min_slack) report.min_slack = slack;
            first = false;
            if (slack < -1e-9) report.lemma_holds = false;
        });
    }

    report.mu = appendixA_mu(scheme, budget);
    ThresholdProfile profile = thresholds_by_definition(scheme, budget);
    report.bound_holds = true;
    for (size_t m = 1; m <= scheme.ell(); ++m)
        if (profile.t[m - 1] > int(report.mu) - int(scheme.ell()) + int(m) - 1)
            report.bound_holds = false;
    return report;
}

}  // namespace rampw
