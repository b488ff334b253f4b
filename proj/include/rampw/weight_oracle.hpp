#pragma once

#include <cstdint>
#include <vector>

#include "rampw/bigcount.hpp"
#include "rampw/linear_code.hpp"

namespace rampw {

// Default enumeration budget (number of candidate subspaces).
inline constexpr uint64_t kDefaultSubspaceBudget = 100'000'000;

// Number of coordinates where some row of `vectors` is nonzero.
int support_size(const Matrix& vectors);

// Canonical complement W of C2 inside C1: the rows of C1's RREF generator
// whose pivots are not pivots of C2, each reduced against G2.  C1 = C2 ⊕ W
// and span(W) ∩ C2 = {0}; the construction is deterministic.
Matrix canonical_complement(const NestedCodePair& pair);

// m-th generalized Hamming weight of C by exhaustive minimum over all
// m-dimensional subspaces, one canonical RREF representative each.
int ghw_bruteforce(const LinearCode& c, size_t m, uint64_t budget = kDefaultSubspaceBudget);

// m-th relative generalized Hamming weight M_m(C1, C2): minimum support over
// m-dimensional subspaces D ⊆ C1 with D ∩ C2 = {0}.  Candidates are
// parameterized directly (RREF block over the canonical complement, free
// block over C2), so no per-candidate rank filter is needed.
int rghw_bruteforce(const NestedCodePair& pair, size_t m, uint64_t budget = kDefaultSubspaceBudget);

// Relative dimension/length profile K_d(C1, C2): maximum of
// dim(C1 ∩ V_I) - dim(C2 ∩ V_I) over all coordinate sets I of size d.
int rdlp(const NestedCodePair& pair, size_t d);

// M_m via the profile: min { d : K_d >= m }.
int rghw_via_rdlp(const NestedCodePair& pair, size_t m);

// d_1..d_k and M_1..M_ell.
std::vector<int> ghw_hierarchy(const LinearCode& c, uint64_t budget = kDefaultSubspaceBudget);
std::vector<int> rghw_hierarchy(const NestedCodePair& pair, uint64_t budget = kDefaultSubspaceBudget);

// Verifies that { d_1, ..., d_k } and { n+1-d^⊥_s } partition {1..n}.
bool wei_duality_check(const LinearCode& c, uint64_t budget = kDefaultSubspaceBudget);

// Exact rational d1 * (q^m - 1) / (q^m - q^(m-1)).
Rational cor2_bound(long d1, long m, long q);

}  // namespace rampw
