#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "sallylab/errors.hpp"

namespace sally {

// Power product of the ambient variables; exponent vector plus cached
// total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);
    static Monomial unit(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial variable(std::size_t index, std::size_t nvars, int power = 1);

    std::size_t nvars() const { return exps_.size(); }
    int exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }
    int degree() const { return degree_; }
    bool is_unit() const { return degree_ == 0; }

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    // Quotient other/this is the caller's job to guard with divides().
    Monomial divide_into(const Monomial& numerator) const;
    Monomial lcm_with(const Monomial& other) const;
    bool coprime_with(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

enum class OrderKind { degrevlex, lex, elimination };

// A global monomial order.  elimination(k) compares the leading block of
// the first k variables degrevlex-first, so any monomial meeting that
// block dominates every monomial supported on the remaining variables.
struct MonomialOrder {
    OrderKind kind = OrderKind::degrevlex;
    int block = 0;  // elimination block size; ignored otherwise

    static MonomialOrder degrevlex() { return {OrderKind::degrevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::lex, 0}; }
    static MonomialOrder elimination(int k) { return {OrderKind::elimination, k}; }

    bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }
    bool operator<(const MonomialOrder& o) const {
        return kind != o.kind ? kind < o.kind : block < o.block;
    }
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

Cmp compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

inline bool monomial_less(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    return compare_monomials(a, b, ord) == Cmp::LT;
}
inline bool monomial_greater(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    return compare_monomials(a, b, ord) == Cmp::GT;
}

}  // namespace sally
