#include "sallylab/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace sally {

namespace {

constexpr int kMaxExponent = 1 << 24;

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    degree_ = 0;
    for (int e : exps_) {
        if (e < 0) throw error("negative exponent in monomial");
        if (e > kMaxExponent) throw error("exponent overflow in monomial");
        degree_ += e;
    }
}

Monomial Monomial::variable(std::size_t index, std::size_t nvars, int power) {
    std::vector<int> e(nvars, 0);
    e.at(index) = power;
    return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (nvars() != other.nvars()) throw ring_mismatch_error("monomial length mismatch");
    std::vector<int> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    if (nvars() != other.nvars()) throw ring_mismatch_error("monomial length mismatch");
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::divide_into(const Monomial& numerator) const {
    std::vector<int> e(numerator.exps_);
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] -= exps_[i];
        if (e[i] < 0) throw error("inexact monomial division");
    }
    return Monomial(std::move(e));
}

Monomial Monomial::lcm_with(const Monomial& other) const {
    std::vector<int> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], other.exps_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime_with(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0 && other.exps_[i] > 0) return false;
    return true;
}

namespace {

// degrevlex on the index range [lo, hi): higher total degree wins; on ties
// the smaller exponent at the last differing variable wins.
Cmp degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a.exponent(i);
        db += b.exponent(i);
    }
    if (da != db) return da < db ? Cmp::LT : Cmp::GT;
    for (std::size_t i = hi; i-- > lo;) {
        int ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb) return ea > eb ? Cmp::LT : Cmp::GT;
    }
    return Cmp::EQ;
}

Cmp lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        int ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb) return ea < eb ? Cmp::LT : Cmp::GT;
    }
    return Cmp::EQ;
}

}  // namespace

Cmp compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    if (a.nvars() != b.nvars()) throw ring_mismatch_error("monomial length mismatch");
    const std::size_t n = a.nvars();
    switch (ord.kind) {
        case OrderKind::degrevlex:
            return degrevlex_range(a, b, 0, n);
        case OrderKind::lex:
            return lex_range(a, b, 0, n);
        case OrderKind::elimination: {
            const std::size_t k = static_cast<std::size_t>(ord.block);
            if (k == 0 || k > n) throw error("bad elimination block size");
            Cmp head = degrevlex_range(a, b, 0, k);
            if (head != Cmp::EQ) return head;
            return degrevlex_range(a, b, k, n);
        }
    }
    throw error("unknown monomial order");
}

}  // namespace sally
