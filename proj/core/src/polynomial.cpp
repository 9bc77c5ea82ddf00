#include "sallylab/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace sally {

Polynomial Polynomial::zero(std::size_t nvars, std::int64_t characteristic, MonomialOrder ord) {
    Polynomial p;
    p.nvars_ = nvars;
    p.characteristic_ = characteristic;
    p.order_ = ord;
    return p;
}

Polynomial Polynomial::constant(const Coefficient& c, std::size_t nvars, MonomialOrder ord) {
    return term(c, Monomial::unit(nvars), ord);
}

Polynomial Polynomial::term(const Coefficient& c, const Monomial& m, MonomialOrder ord) {
    Polynomial p = zero(m.nvars(), c.characteristic(), ord);
    if (!c.is_zero()) p.terms_.push_back(Term{c, m});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, std::size_t nvars,
                                  std::int64_t characteristic, MonomialOrder ord) {
    for (const Term& t : terms) {
        if (t.mono.nvars() != nvars) throw ring_mismatch_error("term has wrong variable count");
        if (t.coeff.characteristic() != characteristic)
            throw ring_mismatch_error("term coefficient from wrong field");
    }
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return monomial_greater(a.mono, b.mono, ord);
    });
    Polynomial p = zero(nvars, characteristic, ord);
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw error("leading term of the zero polynomial");
    return terms_.front();
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

int Polynomial::min_term_degree() const {
    if (terms_.empty()) return -1;
    int d = terms_.front().mono.degree();
    for (const Term& t : terms_) d = std::min(d, t.mono.degree());
    return d;
}

Polynomial Polynomial::reordered(MonomialOrder ord) const {
    if (ord == order_) return *this;
    return from_terms(terms_, nvars_, characteristic_, ord);
}

Polynomial Polynomial::monic() const {
    if (is_zero() || leading_coefficient().is_one()) return *this;
    return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (Term& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

void Polynomial::check_compatible(const Polynomial& g) const {
    if (nvars_ != g.nvars_ || characteristic_ != g.characteristic_ || order_ != g.order_)
        throw ring_mismatch_error("polynomials from different rings or orders");
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    if (is_zero()) return g;
    if (g.is_zero()) return *this;
    check_compatible(g);
    Polynomial out = zero(nvars_, characteristic_, order_);
    out.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        Cmp c = compare_monomials(terms_[i].mono, g.terms_[j].mono, order_);
        if (c == Cmp::GT) {
            out.terms_.push_back(terms_[i++]);
        } else if (c == Cmp::LT) {
            out.terms_.push_back(g.terms_[j++]);
        } else {
            Coefficient sum = terms_[i].coeff + g.terms_[j].coeff;
            if (!sum.is_zero()) out.terms_.push_back(Term{std::move(sum), terms_[i].mono});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j) out.terms_.push_back(g.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
    return *this + (-g);
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    if (is_zero()) return *this;
    if (g.is_zero()) return g;
    check_compatible(g);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * g.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : g.terms_)
            prod.push_back(Term{a.coeff * b.coeff, a.mono * b.mono});
    return from_terms(std::move(prod), nvars_, characteristic_, order_);
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
    if (c.is_zero()) return zero(nvars_, characteristic_, order_);
    Polynomial p = *this;
    for (Term& t : p.terms_) t.coeff = t.coeff * c;
    return p;
}

Polynomial Polynomial::times_term(const Coefficient& c, const Monomial& m) const {
    if (c.is_zero()) return zero(nvars_, characteristic_, order_);
    Polynomial p = *this;
    for (Term& t : p.terms_) {
        t.coeff = t.coeff * c;
        t.mono = t.mono * m;
    }
    // Multiplying by a monomial preserves the relative order of terms.
    return p;
}

Polynomial Polynomial::pow(int n) const {
    if (n < 0) throw error("negative polynomial power");
    Polynomial acc = constant(Coefficient::one(characteristic_), nvars_, order_);
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return acc;
}

Polynomial poly_power(const Polynomial& f, int n) { return f.pow(n); }

bool Polynomial::operator==(const Polynomial& g) const {
    if (nvars_ != g.nvars_ || characteristic_ != g.characteristic_) return false;
    if (terms_.size() != g.terms_.size()) return false;
    const Polynomial& h = (order_ == g.order_) ? g : g.reordered(order_);
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != h.terms_[i].mono || terms_[i].coeff != h.terms_[i].coeff)
            return false;
    return true;
}

std::uint64_t Polynomial::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(nvars_));
    mix(static_cast<std::uint64_t>(characteristic_));
    for (const Term& t : terms_) {
        if (t.coeff.is_fp()) {
            mix(static_cast<std::uint64_t>(t.coeff.fp_value()));
        } else {
            for (char c : t.coeff.str()) mix(static_cast<std::uint64_t>(c));
        }
        for (int e : t.mono.exponents()) mix(static_cast<std::uint64_t>(e));
    }
    return h;
}

std::string Polynomial::str(const std::vector<std::string>& vars) const {
    if (vars.size() != nvars_) throw error("variable name list has wrong length");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms_) {
        std::string c = t.coeff.str();
        bool negative = !c.empty() && c[0] == '-';
        if (first) {
            if (negative) out << "-", c = c.substr(1);
        } else {
            out << (negative ? " - " : " + ");
            if (negative) c = c.substr(1);
        }
        first = false;

        std::string monos;
        for (std::size_t i = 0; i < nvars_; ++i) {
            int e = t.mono.exponent(i);
            if (e == 0) continue;
            if (!monos.empty()) monos += "*";
            monos += vars[i];
            if (e > 1) monos += "^" + std::to_string(e);
        }
        if (monos.empty()) {
            out << c;
        } else if (c == "1") {
            out << monos;
        } else {
            out << c << "*" << monos;
        }
    }
    return out.str();
}

}  // namespace sally
