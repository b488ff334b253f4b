#pragma once

#include <functional>
#include <vector>

#include "rampw/bigcount.hpp"
#include "rampw/linear_code.hpp"
#include "rampw/semigroup.hpp"

namespace rampw {

enum class CurveTag { ReedSolomon, Hermitian };

// One-point evaluation code with its ordered evaluation basis.  Basis rows
// are kept in increasing pole order and are linearly independent, so row i
// is the function realizing the i-th pole-order jump; this is the ordering
// the rho-bar prefix machinery needs.
struct OnePointCode {
    LinearCode code;
    Matrix eval_basis;        // k x n, row i evaluates the basis function with pole order gammas[i]
    std::vector<long> gammas; // strictly increasing pole orders of the basis rows
    NumericalSemigroup pole_semigroup;
    long mu;                  // pole-order cap
    CurveTag tag;
};

// Genus-0 one-point code: evaluations of 1, x, ..., x^(k-1) at distinct
// points; pole semigroup <1>.  Throws "BadPoints: ..." on duplicates.
OnePointCode reed_solomon(unsigned q, size_t n, size_t k, const std::vector<uint8_t>& points);

// One-point code on the Hermitian curve y^q0 + y = x^(q0+1) over GF(q0^2):
// n = q0^3 affine points ordered lexicographically by packed encoding, basis
// monomials x^a y^b with b < q0 and pole order a*q0 + b*(q0+1) <= mu,
// H = <q0, q0+1>.  Supported q0: 2 and 3.
OnePointCode hermitian_code(unsigned q0, long mu);

// Minimal prefix length i such that v lies in span of the first i basis
// rows; 0 for the zero vector.  Throws "NotInCode: ..." when v is outside
// the code.
size_t rho_bar(const OnePointCode& code, const std::vector<uint8_t>& v);

// Support lower bound for a subspace whose rho-bar image is the given index
// set (1-based, strictly increasing):
//   n - gamma_{i_m} + #{ a in ∪_{s<m} (gamma_{i_s} - gamma_{i_m} + H) : a ∉ H }.
int appendixB_support_bound(const NumericalSemigroup& h, const std::vector<size_t>& indices,
                            size_t n, const std::vector<long>& gammas);

// Parameters of the i-th field in the Garcia-Stichtenoth second tower over
// GF(q), q a perfect square: genus, conductor of the distinguished place's
// Weierstrass semigroup, and the strict lower bound on rational places
// (which is also the code length q^((i+1)/2) - q^(i/2) used downstream).
struct TowerParams {
    unsigned q;
    int level;
    BigCount genus, conductor, n_places_lower;
};
TowerParams gs_tower_params(unsigned q, int level);

// Builds the family mu = -1 .. n-1 and verifies that the dimension jump set
// equals H ∩ [0, n).
bool hstar_window_check(const std::function<OnePointCode(long mu)>& family, size_t n,
                        const NumericalSemigroup& h);

}  // namespace rampw
