#include "sallylab/field.hpp"

namespace sally {

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

void require_same_prime(const FpElt& a, const FpElt& b) {
    if (a.p != b.p)
        throw ring_mismatch_error("coefficients from different prime fields");
}

}  // namespace

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t r0 = p, r1 = reduce(a, p);
    if (r1 == 0) throw error("division by zero in F_p");
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw error("modulus is not prime in mod_inverse");
    return reduce(t0, p);
}

Coefficient Coefficient::fp(std::int64_t value, std::int64_t p) {
    if (p < 2) throw error("prime field needs p >= 2");
    return Coefficient(FpElt{reduce(value, p), p});
}

Coefficient Coefficient::zero(std::int64_t characteristic) {
    return characteristic == 0 ? rational(Rational(0)) : fp(0, characteristic);
}

Coefficient Coefficient::one(std::int64_t characteristic) {
    return characteristic == 0 ? rational(Rational(1)) : fp(1, characteristic);
}

Coefficient Coefficient::from_integer(std::int64_t n, std::int64_t characteristic) {
    return characteristic == 0 ? rational(Rational(n)) : fp(n, characteristic);
}

bool Coefficient::is_zero() const {
    if (const auto* e = std::get_if<FpElt>(&rep_)) return e->value == 0;
    return std::get<Rational>(rep_) == 0;
}

bool Coefficient::is_one() const {
    if (const auto* e = std::get_if<FpElt>(&rep_)) return e->value == 1;
    return std::get<Rational>(rep_) == 1;
}

std::int64_t Coefficient::characteristic() const {
    if (const auto* e = std::get_if<FpElt>(&rep_)) return e->p;
    return 0;
}

std::int64_t Coefficient::fp_value() const {
    return std::get<FpElt>(rep_).value;
}

const Rational& Coefficient::rational_value() const {
    return std::get<Rational>(rep_);
}

Coefficient Coefficient::operator-() const {
    if (const auto* e = std::get_if<FpElt>(&rep_))
        return Coefficient(FpElt{reduce(-e->value, e->p), e->p});
    return Coefficient(Rational(-std::get<Rational>(rep_)));
}

Coefficient Coefficient::inverse() const {
    if (const auto* e = std::get_if<FpElt>(&rep_))
        return Coefficient(FpElt{mod_inverse(e->value, e->p), e->p});
    const Rational& r = std::get<Rational>(rep_);
    if (r == 0) throw error("division by zero");
    return Coefficient(Rational(1 / r));
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
    if (a.is_fp() != b.is_fp())
        throw ring_mismatch_error("mixed coefficient representations");
    if (a.is_fp()) {
        const auto& x = std::get<FpElt>(a.rep_);
        const auto& y = std::get<FpElt>(b.rep_);
        require_same_prime(x, y);
        return Coefficient(FpElt{reduce(x.value + y.value, x.p), x.p});
    }
    return Coefficient(Rational(std::get<Rational>(a.rep_) + std::get<Rational>(b.rep_)));
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) {
    return a + (-b);
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    if (a.is_fp() != b.is_fp())
        throw ring_mismatch_error("mixed coefficient representations");
    if (a.is_fp()) {
        const auto& x = std::get<FpElt>(a.rep_);
        const auto& y = std::get<FpElt>(b.rep_);
        require_same_prime(x, y);
        return Coefficient(FpElt{reduce(x.value * y.value, x.p), x.p});
    }
    return Coefficient(Rational(std::get<Rational>(a.rep_) * std::get<Rational>(b.rep_)));
}

Coefficient operator/(const Coefficient& a, const Coefficient& b) {
    return a * b.inverse();
}

bool operator==(const Coefficient& a, const Coefficient& b) {
    if (a.is_fp() != b.is_fp()) return false;
    if (a.is_fp()) {
        const auto& x = std::get<FpElt>(a.rep_);
        const auto& y = std::get<FpElt>(b.rep_);
        return x.p == y.p && x.value == y.value;
    }
    return std::get<Rational>(a.rep_) == std::get<Rational>(b.rep_);
}

std::string Coefficient::str() const {
    if (const auto* e = std::get_if<FpElt>(&rep_)) return std::to_string(e->value);
    return std::get<Rational>(rep_).str();
}

}  // namespace sally
