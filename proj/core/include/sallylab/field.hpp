#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "sallylab/errors.hpp"

namespace sally {

using Rational = boost::multiprecision::cpp_rational;

// Element of F_p, representative always reduced into [0, p).
struct FpElt {
    std::int64_t value;
    std::int64_t p;
};

// Exact field scalar: an element of F_p (p an odd prime) or a rational.
// Which representation is active is decided by the ring's characteristic;
// mixing representations, or elements of different primes, throws.
class Coefficient {
public:
    Coefficient() : rep_(FpElt{0, kNoField}) {}

    static Coefficient fp(std::int64_t value, std::int64_t p);
    static Coefficient rational(Rational r) { return Coefficient(std::move(r)); }
    static Coefficient rational(std::int64_t n) { return Coefficient(Rational(n)); }

    // The zero/one of the field given by `characteristic` (0 = rationals).
    static Coefficient zero(std::int64_t characteristic);
    static Coefficient one(std::int64_t characteristic);
    static Coefficient from_integer(std::int64_t n, std::int64_t characteristic);

    bool is_zero() const;
    bool is_one() const;
    bool is_fp() const { return std::holds_alternative<FpElt>(rep_); }
    std::int64_t characteristic() const;

    // Value as the least non-negative residue; F_p only.
    std::int64_t fp_value() const;
    const Rational& rational_value() const;

    Coefficient operator-() const;
    Coefficient inverse() const;

    friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator/(const Coefficient& a, const Coefficient& b);
    friend bool operator==(const Coefficient& a, const Coefficient& b);
    friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

    std::string str() const;

private:
    static constexpr std::int64_t kNoField = -1;

    explicit Coefficient(FpElt e) : rep_(e) {}
    explicit Coefficient(Rational r) : rep_(std::move(r)) {}

    std::variant<FpElt, Rational> rep_;
};

// Modular inverse of a mod p (p prime, a not divisible by p).
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

}  // namespace sally
