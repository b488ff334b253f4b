#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

namespace rampw {

// Arithmetic tables for GF(p^e), q = p^e <= 256.
//
// Elements are packed into a single byte: the coefficient vector
// (a_0, ..., a_{e-1}) over GF(p), constant term first, packs to
// a_0 + a_1*p + ... + a_{e-1}*p^{e-1}.  Extension fields use one fixed
// irreducible modulus per (p, e) from a built-in table, so packed values are
// stable across runs and the text file format is reproducible bit-exactly.
class FieldSpec {
public:
    // Shared, cached instance for the field of the given order.
    // Throws std::invalid_argument if q is not a prime power in [2, 256].
    static std::shared_ptr<const FieldSpec> get(unsigned q);

    unsigned p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned q() const { return q_; }

    // Modulus coefficients, constant term first, length e+1. Empty for e = 1.
    const std::vector<uint8_t>& modulus() const { return modulus_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[idx(a, b)]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[idx(a, neg_[b])]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[idx(a, b)]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    // Multiplicative inverse; a must be nonzero.
    uint8_t inv(uint8_t a) const;
    // a / b with b nonzero.
    uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }

    // Unpack a packed element into its coefficient vector over GF(p).
    std::vector<uint8_t> coeffs(uint8_t a) const;
    uint8_t pack(const std::vector<uint8_t>& coeffs) const;

    // Addition over the whole field is componentwise GF(2), i.e. XOR on the
    // packed byte.  The enumeration hot paths branch on this.
    bool char_two() const { return p_ == 2; }

private:
    explicit FieldSpec(unsigned p, unsigned e, std::vector<uint8_t> modulus);

    size_t idx(uint8_t a, uint8_t b) const { return size_t(a) * q_ + b; }

    unsigned p_, e_, q_;
    std::vector<uint8_t> modulus_;
    std::vector<uint8_t> add_, mul_;  // q*q tables
    std::array<uint8_t, 256> neg_{}, inv_{};
};

using FieldRef = std::shared_ptr<const FieldSpec>;

// A single field element together with its field; convenience wrapper used at
// API boundaries.  Bulk data (matrices, codewords) stays packed.
class FieldElement {
public:
    FieldElement(FieldRef field, uint8_t value) : field_(std::move(field)), v_(value) {}

    uint8_t value() const { return v_; }
    const FieldSpec& field() const { return *field_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        return {a.field_, a.field_->add(a.v_, b.v_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        return {a.field_, a.field_->sub(a.v_, b.v_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        return {a.field_, a.field_->mul(a.v_, b.v_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        return {a.field_, a.field_->div(a.v_, b.v_)};
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.v_ == b.v_ && a.field_.get() == b.field_.get();
    }

private:
    FieldRef field_;
    uint8_t v_;
};

}  // namespace rampw
