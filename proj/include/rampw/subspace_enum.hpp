#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "rampw/bigcount.hpp"
#include "rampw/errors.hpp"
#include "rampw/matrix.hpp"

namespace rampw {

// Each m-dimensional subspace of GF(q)^w has exactly one basis matrix in
// reduced row echelon form, so enumerating RREF coefficient matrices visits
// every subspace once.  Pivots are confined to the first `head` coordinates;
// with a basis split as [complement; subcode] this visits exactly the
// subspaces meeting the subcode trivially, which is the RGHW candidate set.
//
// Candidate count for head/tail/m (tail = basis rows beyond head).
BigCount subspace_candidate_count(unsigned q, size_t head, size_t tail, size_t m);

// Throws TooLargeError when the candidate count exceeds the budget.
void ensure_subspace_budget(unsigned q, size_t head, size_t tail, size_t m, uint64_t budget);

// Visits every candidate subspace of the row space of `basis` (pivots within
// the first `head` coefficient coordinates).  The visitor receives the m
// basis rows of the subspace as a contiguous m*n byte block, plus the
// support size (number of nonzero columns).  Rows are updated incrementally
// between visits; the visitor must not retain the pointer.
template <class Visit>
void enumerate_subspaces(const Matrix& basis, size_t head, size_t m, Visit&& visit) {
    const FieldSpec& f = *basis.field();
    const size_t k1 = basis.rows(), n = basis.cols();
    const unsigned q = f.q();
    if (m == 0 || m > head || head > k1 || n > 64) return;

    // scaled[(c*q + v)*n ...] = v * basis_row_c
    std::vector<uint8_t> scaled(k1 * q * n);
    for (size_t c = 0; c < k1; ++c)
        for (unsigned v = 0; v < q; ++v)
            for (size_t j = 0; j < n; ++j)
                scaled[(c * q + v) * n + j] = f.mul(uint8_t(v), basis.at(c, j));

    std::vector<uint8_t> rows(m * n);
    std::vector<uint64_t> masks(m, 0);
    const bool char2 = f.char_two();

    auto recompute_mask = [&](size_t i) {
        uint64_t mk = 0;
        const uint8_t* r = rows.data() + i * n;
        for (size_t j = 0; j < n; ++j)
            if (r[j]) mk |= uint64_t(1) << j;
        masks[i] = mk;
    };
    auto add_scaled = [&](size_t i, size_t col, uint8_t coeff) {
        if (coeff == 0) return;
        uint8_t* r = rows.data() + i * n;
        const uint8_t* s = scaled.data() + (col * q + coeff) * n;
        if (char2) {
            for (size_t j = 0; j < n; ++j) r[j] ^= s[j];
        } else {
            for (size_t j = 0; j < n; ++j) r[j] = f.add(r[j], s[j]);
        }
        recompute_mask(i);
    };

    std::vector<size_t> pivots(m);
    for (size_t i = 0; i < m; ++i) pivots[i] = i;

    struct FreePos {
        uint32_t row, col;
    };
    std::vector<FreePos> free_pos;
    std::vector<uint8_t> digits;
    std::vector<bool> is_pivot(head);

    while (true) {
        std::fill(is_pivot.begin(), is_pivot.end(), false);
        for (size_t p : pivots) is_pivot[p] = true;
        free_pos.clear();
        for (size_t i = 0; i < m; ++i) {
            for (size_t c = pivots[i] + 1; c < head; ++c)
                if (!is_pivot[c]) free_pos.push_back({uint32_t(i), uint32_t(c)});
            for (size_t c = head; c < k1; ++c) free_pos.push_back({uint32_t(i), uint32_t(c)});
        }
        digits.assign(free_pos.size(), 0);
        std::fill(rows.begin(), rows.end(), 0);
        for (size_t i = 0; i < m; ++i) {
            const uint8_t* b = basis.row(pivots[i]);
            std::copy(b, b + n, rows.data() + i * n);
            recompute_mask(i);
        }

        for (;;) {
            uint64_t support_mask = 0;
            for (size_t i = 0; i < m; ++i) support_mask |= masks[i];
            visit(static_cast<const uint8_t*>(rows.data()), std::popcount(support_mask));

            size_t t = 0;
            for (; t < digits.size(); ++t) {
                uint8_t old = digits[t];
                if (old + 1u < q) {
                    digits[t] = uint8_t(old + 1);
                    add_scaled(free_pos[t].row, free_pos[t].col, f.sub(uint8_t(old + 1), old));
                    break;
                }
                digits[t] = 0;
                add_scaled(free_pos[t].row, free_pos[t].col, f.sub(0, old));
            }
            if (t == digits.size()) break;
        }

        // next pivot combination, lexicographic
        size_t i = m;
        bool advanced = false;
        while (i-- > 0) {
            if (pivots[i] + (m - i) < head) {
                ++pivots[i];
                for (size_t j = i + 1; j < m; ++j) pivots[j] = pivots[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}

}  // namespace rampw
