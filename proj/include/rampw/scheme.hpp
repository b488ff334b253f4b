#pragma once

#include <cstdint>
#include <vector>

#include "rampw/linear_code.hpp"
#include "rampw/weight_oracle.hpp"

namespace rampw {

inline constexpr uint64_t kDefaultSchemeBudget = 10'000'000;  // share-vector enumerations

// Linear ramp secret sharing scheme from a nested pair: C1 = C2 ⊕ W, the
// secret embeds as psi(s) = s · W, and the share vector is psi(s) + c2.
// W is the canonical complement, so shares are reproducible; the thresholds
// do not depend on the choice of W.
struct RampScheme {
    NestedCodePair pair;
    Matrix w;  // ell x n
    size_t ell() const { return pair.ell(); }
    size_t n() const { return pair.c1.n(); }
    size_t k2() const { return pair.c2.k(); }
};

RampScheme build_scheme(const NestedCodePair& pair);

// psi(s) + c2 where c2 is a codeword of C2 (the scheme's randomness).
// Throws "BadRandomness: ..." when c2 is not in C2.
std::vector<uint8_t> share(const RampScheme& scheme, const std::vector<uint8_t>& secret,
                           const std::vector<uint8_t>& c2_word);
// Same, with the randomness given as k2 coefficients for C2's generator.
std::vector<uint8_t> share_with_coeffs(const RampScheme& scheme, const std::vector<uint8_t>& secret,
                                       const std::vector<uint8_t>& coeffs);

struct ReconstructResult {
    bool unique;
    std::vector<uint8_t> secret;       // the secret when unique, else one candidate
    size_t known_qbits;                // ell - dim(candidate affine space)
    Matrix candidate_directions;       // basis of the candidate space direction, rows of length ell
};
// Solves for all (s, c2) consistent with the given shares at positions I
// (0-based).  Throws "Inconsistent: ..." when no codeword of C1 matches.
ReconstructResult reconstruct(const RampScheme& scheme, const std::vector<size_t>& I,
                              const std::vector<uint8_t>& values);

// I(X_I; M) in q-bits by enumerating all q^ell secrets times q^k2 randomness
// values under uniform distributions.  Result is within 1e-9 of an integer.
double mutual_information_exhaustive(const RampScheme& scheme, const std::vector<size_t>& I,
                                     uint64_t budget = kDefaultSchemeBudget);

struct ThresholdProfile {
    std::vector<int> t, r;  // t_1..t_ell, r_1..r_ell
};
// Thresholds from the RGHWs of the pair and its dual pair:
// t_m = M_m(C2^⊥, C1^⊥) - 1 and r_m = n - M_{ell-m+1}(C1, C2) + 1.
ThresholdProfile thresholds(const RampScheme& scheme,
                            uint64_t budget = kDefaultSubspaceBudget);
// Thresholds straight from the definitions, by exhaustive mutual information
// over every share subset.
ThresholdProfile thresholds_by_definition(const RampScheme& scheme,
                                          uint64_t budget = kDefaultSchemeBudget);

struct GapInterval {
    int lower, upper;  // bounds on r_m - t_{m'}
};
// Tightest interval for the threshold gap implied by the genus-based case
// analysis (general bound, the ell >= 2g refinement, and the exact middle
// range g+1 <= m <= ell-g when m = m').
GapInterval threshold_gap_bounds(int g, int ell, int m, int m_prime);

// mu = min{ #I : I(X_I; X) = H(X) }, by exhaustive search over subsets of
// increasing size.  For these schemes mu = ell + k2; verified internally.
size_t appendixA_mu(const RampScheme& scheme, uint64_t budget = kDefaultSchemeBudget);

struct AppendixAReport {
    bool lemma_holds;    // I(X_I; M) >= H(X_I) - H(X|M) for every subset I
    double max_slack;    // max over I of the inequality slack
    double min_slack;
    bool bound_holds;    // t_m <= mu - H(M) + m - 1 for every m
    size_t mu;
};
AppendixAReport appendixA_bound_check(const RampScheme& scheme,
                                      uint64_t budget = kDefaultSchemeBudget);

}  // namespace rampw
