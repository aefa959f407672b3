#include "cohen/ring.hpp"

namespace cohen {

Ring Ring::parse(const std::string& text) {
    if (text == "z" || text == "Z")
        return integers();
    const std::string prefix = "zmod:";
    if (text.rfind(prefix, 0) == 0) {
        const std::string digits = text.substr(prefix.size());
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("bad modulus in ring spec '" + text + "'");
        return modular(mpz_class(digits));
    }
    throw parse_error("bad ring spec '" + text + "' (expected z or zmod:<m>)");
}

bool Ring::modulus_is_prime() const {
    if (!is_modular())
        return false;
    return mpz_probab_prime_p(m_.get_mpz_t(), 40) != 0;
}

bool Ring::modulus_is_prime_power() const {
    if (!is_modular())
        return false;
    // strip the smallest prime factor repeatedly; moduli here are tiny
    mpz_class m = m_;
    mpz_class p = 2;
    while (p * p <= m) {
        if (m % p == 0)
            break;
        p += 1;
    }
    if (p * p > m)
        return true; // m itself prime
    while (m % p == 0)
        m /= p;
    return m == 1;
}

bool Scalar::is_unit() const {
    if (is_zero())
        return false;
    if (ring_.is_integers())
        return v_ == 1 || v_ == -1;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), v_.get_mpz_t(), ring_.modulus().get_mpz_t());
    return g == 1;
}

Scalar Scalar::inverse() const {
    if (ring_.is_integers()) {
        if (v_ == 1 || v_ == -1)
            return *this;
        throw unsupported_ring_error("not a unit in Z: " + v_.get_str());
    }
    mpz_class inv;
    if (!mpz_invert(inv.get_mpz_t(), v_.get_mpz_t(), ring_.modulus().get_mpz_t()))
        throw unsupported_ring_error("not a unit mod " + ring_.modulus().get_str() + ": " + v_.get_str());
    return Scalar(ring_, inv);
}

} // namespace cohen
