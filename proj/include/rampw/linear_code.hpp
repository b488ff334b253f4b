#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rampw/matrix.hpp"

namespace rampw {

// Linear [n, k] code over GF(q).  The generator matrix is always kept in
// reduced row echelon form, so two codes are equal iff their generators are
// identical.  k = 0 (zero code) and k = n (full space) are both allowed.
class LinearCode {
public:
    // Canonicalizes the row space of `spanning_rows`; rank may be lower than
    // the number of rows supplied.
    static LinearCode from_spanning_rows(const Matrix& spanning_rows);
    // Zero code of length n.
    static LinearCode zero(FieldRef field, size_t n);
    // The full space GF(q)^n.
    static LinearCode full(FieldRef field, size_t n);

    size_t n() const { return n_; }
    size_t k() const { return gen_.rows(); }
    const FieldRef& field() const { return gen_.field(); }
    const Matrix& generator() const { return gen_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    bool contains(const std::vector<uint8_t>& word) const;
    bool contains_code(const LinearCode& other) const;

    // Codeword for a message vector of length k.
    std::vector<uint8_t> encode(const std::vector<uint8_t>& message) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.n_ == b.n_ && a.gen_ == b.gen_;
    }

private:
    LinearCode(FieldRef field, size_t n, Matrix rref_gen, std::vector<size_t> pivots);

    size_t n_;
    Matrix gen_;  // k x n, RREF, full row rank
    std::vector<size_t> pivots_;
};

// Dual code: dimension n - k, generator orthogonal to C's.
LinearCode dual(const LinearCode& c);

// C ∩ V_I where V_I = { x : x_i = 0 for i ∉ I }.  Indices are 0-based.
LinearCode intersect_coordinate_subspace(const LinearCode& c, const std::vector<size_t>& I);

// dim(C ∩ V_I) without materializing the intersection.
size_t coordinate_intersection_dim(const LinearCode& c, const std::vector<bool>& in_I);

struct NestedCodePair {
    LinearCode c1;  // outer code
    LinearCode c2;  // strict subcode
    size_t ell() const { return c1.k() - c2.k(); }
};

// Verifies C2 ⊊ C1 over the same field and length.
// Throws std::invalid_argument("NotNested: ...") or ("NotStrict: ...").
NestedCodePair make_pair(const LinearCode& c1, const LinearCode& c2);

// The dual pair C1^⊥ ⊊ C2^⊥.
NestedCodePair dual_pair(const NestedCodePair& pair);

// Text code format: line 1 "q n k", then k rows of n packed elements.
void write_code(std::ostream& os, const LinearCode& c);
LinearCode read_code(std::istream& is);
LinearCode read_code_file(const std::string& path);
void write_code_file(const std::string& path, const LinearCode& c);

}  // namespace rampw
