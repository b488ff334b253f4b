#pragma once

#include <cstdint>
#include <vector>

#include "rampw/linear_code.hpp"

namespace testutil {

inline rampw::LinearCode rs_code(unsigned q, size_t n, size_t k, const std::vector<uint8_t>& points) {
    auto f = rampw::FieldSpec::get(q);
    rampw::Matrix g(f, k, n);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) {
            uint8_t v = 1;
            for (size_t t = 0; t < i; ++t) v = f->mul(v, points[j]);
            g.at(i, j) = v;
        }
    return rampw::LinearCode::from_spanning_rows(g);
}

// Tiny deterministic generator for reproducible fixture codes.
struct Lcg {
    uint64_t state;
    explicit Lcg(uint64_t seed) : state(seed) {}
    uint32_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return uint32_t(state >> 33);
    }
    uint8_t below(unsigned q) { return uint8_t(next() % q); }
};

// Random code of target dimension k (retries until full rank).
inline rampw::LinearCode random_code(unsigned q, size_t n, size_t k, uint64_t seed) {
    auto f = rampw::FieldSpec::get(q);
    Lcg rng(seed);
    for (;;) {
        rampw::Matrix g(f, k, n);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < n; ++j) g.at(i, j) = rng.below(q);
        auto c = rampw::LinearCode::from_spanning_rows(g);
        if (c.k() == k) return c;
    }
}

// Exhaustive minimum Hamming weight by direct codeword enumeration; this is
// an oracle independent of the subspace enumeration path.
inline int min_weight_direct(const rampw::LinearCode& c) {
    const unsigned q = c.field()->q();
    const size_t k = c.k();
    uint64_t total = 1;
    for (size_t i = 0; i < k; ++i) total *= q;
    int best = int(c.n()) + 1;
    std::vector<uint8_t> msg(k);
    for (uint64_t idx = 1; idx < total; ++idx) {
        uint64_t v = idx;
        for (size_t i = 0; i < k; ++i) {
            msg[i] = uint8_t(v % q);
            v /= q;
        }
        auto word = c.encode(msg);
        int w = 0;
        for (uint8_t x : word)
            if (x) ++w;
        if (w < best) best = w;
    }
    return best;
}

}  // namespace testutil
