#pragma once

#include <gmpxx.h>

#include <string>

#include "cohen/error.hpp"

namespace cohen {

// Coefficient ring: Z, or Z/m for a fixed modulus m >= 2.
class Ring {
  public:
    Ring() : m_(0) {}

    static Ring integers() { return Ring(); }

    static Ring modular(const mpz_class& m) {
        if (m < 2)
            throw unsupported_ring_error("modulus must be >= 2");
        Ring r;
        r.m_ = m;
        return r;
    }

    // Accepts "z" or "zmod:<m>".
    static Ring parse(const std::string& text);

    bool is_integers() const { return m_ == 0; }
    bool is_modular() const { return m_ != 0; }

    const mpz_class& modulus() const {
        if (!is_modular())
            throw unsupported_ring_error("ring has no modulus");
        return m_;
    }

    // Canonical representative: v itself over Z, 0 <= r < m over Z/m.
    mpz_class reduce(const mpz_class& v) const {
        if (is_integers())
            return v;
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m_.get_mpz_t());
        return r;
    }

    // True when the modulus is prime (prerequisite for field elimination).
    bool modulus_is_prime() const;

    // True when the modulus is a prime power p^e, e >= 1.
    bool modulus_is_prime_power() const;

    bool operator==(const Ring& o) const { return m_ == o.m_; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string text() const {
        return is_integers() ? "z" : "zmod:" + m_.get_str();
    }

  private:
    mpz_class m_; // 0 encodes Z
};

inline void require_same_ring(const Ring& a, const Ring& b) {
    if (a != b)
        throw ring_mismatch_error("ring mismatch: " + a.text() + " vs " + b.text());
}

// A ring element: canonical value plus the ring it lives in.
class Scalar {
  public:
    Scalar(Ring ring, mpz_class v) : ring_(std::move(ring)), v_(ring_.reduce(std::move(v))) {}

    static Scalar zero(const Ring& r) { return Scalar(r, 0); }
    static Scalar one(const Ring& r) { return Scalar(r, 1); }

    const Ring& ring() const { return ring_; }
    const mpz_class& value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    bool is_unit() const;

    // Multiplicative inverse; throws unsupported_ring_error on non-units.
    Scalar inverse() const;

    Scalar operator+(const Scalar& o) const {
        require_same_ring(ring_, o.ring_);
        return Scalar(ring_, v_ + o.v_);
    }
    Scalar operator-(const Scalar& o) const {
        require_same_ring(ring_, o.ring_);
        return Scalar(ring_, v_ - o.v_);
    }
    Scalar operator*(const Scalar& o) const {
        require_same_ring(ring_, o.ring_);
        return Scalar(ring_, v_ * o.v_);
    }
    Scalar operator-() const { return Scalar(ring_, -v_); }

    bool operator==(const Scalar& o) const {
        require_same_ring(ring_, o.ring_);
        return v_ == o.v_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string text() const { return v_.get_str(); }

  private:
    Ring ring_;
    mpz_class v_;
};

} // namespace cohen
