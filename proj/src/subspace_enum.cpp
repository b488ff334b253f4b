#include "rampw/subspace_enum.hpp"

#include <string>

namespace rampw {

BigCount subspace_candidate_count(unsigned q, size_t head, size_t tail, size_t m) {
    if (m > head) return 0;
    // Gaussian binomial [head, m]_q times q^(m*tail).
    BigCount num = 1, den = 1;
    for (size_t i = 0; i < m; ++i) {
        num *= boost::multiprecision::pow(BigCount(q), unsigned(head - i)) - 1;
        den *= boost::multiprecision::pow(BigCount(q), unsigned(m - i)) - 1;
    }
    BigCount count = num / den;
    count *= boost::multiprecision::pow(BigCount(q), unsigned(m * tail));
    return count;
}

void ensure_subspace_budget(unsigned q, size_t head, size_t tail, size_t m, uint64_t budget) {
    BigCount count = subspace_candidate_count(q, head, tail, m);
    if (count > BigCount(budget))
        throw TooLargeError("subspace enumeration needs " + count.str() +
                            " candidates, budget is " + std::to_string(budget));
}

}  // namespace rampw
