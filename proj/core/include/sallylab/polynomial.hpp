#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sallylab/field.hpp"
#include "sallylab/monomial.hpp"

namespace sally {

struct Term {
    Coefficient coeff;
    Monomial mono;
};

// Exact multivariate polynomial, terms strictly descending in the active
// order, no zero coefficients, no duplicate monomials.  Immutable after
// construction: every operation returns a fresh value.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero(std::size_t nvars, std::int64_t characteristic,
                           MonomialOrder ord = MonomialOrder::degrevlex());
    static Polynomial constant(const Coefficient& c, std::size_t nvars,
                               MonomialOrder ord = MonomialOrder::degrevlex());
    static Polynomial term(const Coefficient& c, const Monomial& m,
                           MonomialOrder ord = MonomialOrder::degrevlex());
    // Normalizes: sorts, merges duplicate monomials, drops zeros.
    static Polynomial from_terms(std::vector<Term> terms, std::size_t nvars,
                                 std::int64_t characteristic, MonomialOrder ord);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit()); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    std::size_t nvars() const { return nvars_; }
    std::int64_t characteristic() const { return characteristic_; }
    const MonomialOrder& order() const { return order_; }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Coefficient& leading_coefficient() const { return leading_term().coeff; }

    // Max/min total degree over the support; zero polynomial yields -1.
    int total_degree() const;
    int min_term_degree() const;

    Polynomial reordered(MonomialOrder ord) const;
    Polynomial monic() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial scaled(const Coefficient& c) const;
    Polynomial times_term(const Coefficient& c, const Monomial& m) const;
    Polynomial pow(int n) const;

    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    // Canonical ASCII form over the given variable names; parseable back.
    std::string str(const std::vector<std::string>& vars) const;

    // FNV-1a over the canonical term list; equal polynomials hash equally.
    std::uint64_t hash() const;

private:
    std::vector<Term> terms_;
    std::size_t nvars_ = 0;
    std::int64_t characteristic_ = -1;
    MonomialOrder order_ = MonomialOrder::degrevlex();

    void check_compatible(const Polynomial& g) const;
};

Polynomial poly_power(const Polynomial& f, int n);

}  // namespace sally
