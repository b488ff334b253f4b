#include "rampw/field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace rampw {

namespace {

// One canonical irreducible modulus per (p, e), coefficients constant-first.
// Every entry is re-verified by trial division at construction time.
struct ModulusEntry {
    unsigned p, e;
    std::vector<uint8_t> coeffs;
};

const std::vector<ModulusEntry>& modulus_table() {
    static const std::vector<ModulusEntry> table = {
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 1, 0, 1}},
        {2, 4, {1, 1, 0, 0, 1}},
        {2, 5, {1, 0, 1, 0, 0, 1}},
        {2, 6, {1, 1, 0, 0, 0, 0, 1}},
        {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
        {2, 8, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
        {3, 2, {1, 0, 1}},
        {3, 3, {1, 2, 0, 1}},
        {3, 4, {2, 1, 0, 0, 1}},
        {3, 5, {1, 2, 0, 0, 0, 1}},
        {5, 2, {2, 0, 1}},
        {5, 3, {1, 1, 0, 1}},
        {7, 2, {1, 0, 1}},
        {11, 2, {1, 0, 1}},
        {13, 2, {2, 0, 1}},
    };
    return table;
}

// Dense polynomials over GF(p), constant term first, no trailing zeros.
using Poly = std::vector<uint8_t>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    a = trim(std::move(a));
    while (a.size() >= m.size()) {
        // Make leading coefficient of the shifted modulus match, then cancel.
        unsigned lead_inv = 1;
        for (unsigned x = 1; x < p; ++x)
            if (x * m.back() % p == 1) { lead_inv = x; break; }
        unsigned factor = a.back() * lead_inv % p;
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
            a[shift + i] = uint8_t((a[shift + i] + p * p - factor * m[i] % p) % p);
        a = trim(std::move(a));
    }
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = uint8_t((prod[i + j] + a[i] * b[j]) % p);
    return poly_mod(std::move(prod), m, p);
}

// Trial division by every monic polynomial of degree 1..deg(m)/2.
bool is_irreducible(const Poly& m, unsigned p) {
    const size_t deg = m.size() - 1;
    for (size_t d = 1; 2 * d <= deg; ++d) {
        // Enumerate divisor candidates by their p-ary digit string.
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            Poly div(d + 1, 0);
            uint64_t c = code;
            for (size_t i = 0; i < d; ++i) { div[i] = uint8_t(c % p); c /= p; }
            div[d] = 1;
            if (poly_mod(m, div, p).empty()) return false;
        }
    }
    return true;
}

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

FieldSpec::FieldSpec(unsigned p, unsigned e, std::vector<uint8_t> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
    for (unsigned i = 0; i < e_; ++i) q_ *= p_;
    if (q_ > 256) throw std::invalid_argument("FieldSpec: q > 256 unsupported");
    if (e_ > 1) {
        if (modulus_.size() != e_ + 1 || modulus_.back() != 1)
            throw std::invalid_argument("FieldSpec: bad modulus degree");
        if (!is_irreducible(modulus_, p_))
            throw std::invalid_argument("FieldSpec: modulus is reducible");
    }

    add_.resize(size_t(q_) * q_);
    mul_.resize(size_t(q_) * q_);
    for (unsigned a = 0; a < q_; ++a) {
        // Unpack once per operand.
        Poly pa;
        unsigned va = a;
        for (unsigned i = 0; i < e_; ++i) { pa.push_back(uint8_t(va % p_)); va /= p_; }
        pa = trim(std::move(pa));
        for (unsigned b = 0; b < q_; ++b) {
            Poly pb;
            unsigned vb = b;
            for (unsigned i = 0; i < e_; ++i) { pb.push_back(uint8_t(vb % p_)); vb /= p_; }
            pb = trim(std::move(pb));

            unsigned sum = 0, base = 1;
            for (unsigned i = 0; i < e_; ++i) {
                unsigned ca = i < pa.size() ? pa[i] : 0;
                unsigned cb = i < pb.size() ? pb[i] : 0;
                sum += (ca + cb) % p_ * base;
                base *= p_;
            }
            add_[idx(uint8_t(a), uint8_t(b))] = uint8_t(sum);

            Poly prod = e_ == 1 ? Poly{uint8_t(a * b % p_)} : poly_mul_mod(pa, pb, modulus_, p_);
            prod = trim(std::move(prod));
            unsigned packed = 0;
            base = 1;
            for (size_t i = 0; i < prod.size(); ++i) { packed += prod[i] * base; base *= p_; }
            mul_[idx(uint8_t(a), uint8_t(b))] = uint8_t(packed);
        }
    }
    for (unsigned a = 0; a < q_; ++a)
        for (unsigned b = 0; b < q_; ++b)
            if (add_[idx(uint8_t(a), uint8_t(b))] == 0) neg_[a] = uint8_t(b);
    inv_[0] = 0;
    for (unsigned a = 1; a < q_; ++a) {
        bool found = false;
        for (unsigned b = 1; b < q_; ++b)
            if (mul_[idx(uint8_t(a), uint8_t(b))] == 1) { inv_[a] = uint8_t(b); found = true; break; }
        if (!found) throw std::logic_error("FieldSpec: element without inverse");
    }
}

uint8_t FieldSpec::inv(uint8_t a) const {
    if (a == 0) throw std::invalid_argument("FieldSpec: inverse of zero");
    return inv_[a];
}

std::vector<uint8_t> FieldSpec::coeffs(uint8_t a) const {
    std::vector<uint8_t> out(e_);
    unsigned v = a;
    for (unsigned i = 0; i < e_; ++i) { out[i] = uint8_t(v % p_); v /= p_; }
    return out;
}

uint8_t FieldSpec::pack(const std::vector<uint8_t>& coeffs) const {
    if (coeffs.size() != e_) throw std::invalid_argument("FieldSpec: coefficient count != e");
    unsigned packed = 0, base = 1;
    for (unsigned i = 0; i < e_; ++i) {
        if (coeffs[i] >= p_) throw std::invalid_argument("FieldSpec: coefficient out of range");
        packed += coeffs[i] * base;
        base *= p_;
    }
    return uint8_t(packed);
}

std::shared_ptr<const FieldSpec> FieldSpec::get(unsigned q) {
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<const FieldSpec>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;

    if (q < 2 || q > 256) throw std::invalid_argument("FieldSpec: q must be in [2, 256]");
    unsigned p = 0, e = 0;
    for (unsigned cand = 2; cand <= q; ++cand) {
        if (!is_prime(cand)) continue;
        unsigned pow = cand, deg = 1;
        while (pow < q) { pow *= cand; ++deg; }
        if (pow == q) { p = cand; e = deg; break; }
    }
    if (p == 0) throw std::invalid_argument("FieldSpec: q = " + std::to_string(q) + " is not a prime power");

    std::vector<uint8_t> modulus;
    if (e > 1) {
        for (const auto& entry : modulus_table())
            if (entry.p == p && entry.e == e) { modulus = entry.coeffs; break; }
        if (modulus.empty())
            throw std::invalid_argument("FieldSpec: no modulus table entry for q = " + std::to_string(q));
    }
    auto spec = std::shared_ptr<const FieldSpec>(new FieldSpec(p, e, std::move(modulus)));
    cache.emplace(q, spec);
    return spec;
}

}  // namespace rampw
