#pragma once

#include <span>
#include <vector>

#include "sallylab/ideal.hpp"

namespace sally {

// Buchberger with the normal selection strategy (smallest lcm in the
// active order, ties by generator index) plus the coprimality and chain
// criteria.  Returns the reduced basis: monic elements, no head of any
// element divisible by another head, tails fully reduced, sorted by
// ascending leading monomial.  Deterministic for fixed input and order.
std::vector<Polynomial> buchberger_reduced(std::vector<Polynomial> gens, MonomialOrder ord);

// Remainder of f on division by the basis; no term of the result is
// divisible by any leading monomial of the basis, and f - result lies in
// the ideal the basis generates.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
    return normal_form(f, std::span<const Polynomial>(basis));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Exact quotient f/g; throws if the division is not exact.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

// Cached reduced basis of an ideal handle.
BasisPtr groebner_basis(const IdealHandle& I, MonomialOrder ord = MonomialOrder::degrevlex());

// Reduced basis of the spec's relations ideal (shared per spec).
BasisPtr relations_basis(const RingSpec& spec);

// Ideal calculus in the ambient polynomial ring.
IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J);
IdealHandle ideal_product(const IdealHandle& I, const IdealHandle& J);
IdealHandle ideal_power(const IdealHandle& I, int n);
IdealHandle intersect(const IdealHandle& I, const IdealHandle& J);
IdealHandle colon(const IdealHandle& I, const IdealHandle& J);
IdealHandle colon(const IdealHandle& I, const Polynomial& g);
bool contains(const IdealHandle& I, const Polynomial& f);
bool ideal_equal(const IdealHandle& I, const IdealHandle& J);

// Stable ideal I : m^infinity, m the ideal of all variables.
IdealHandle saturate_by_m(const IdealHandle& I, int max_iterations = 64);

// Drops zeros, normalizes to monic, removes duplicates and generators
// that are term-wise divisible by a monomial generator.  Preserves the
// ideal; used to keep generated lists (products, powers) small.
std::vector<Polynomial> prune_generators(std::vector<Polynomial> gens);

}  // namespace sally
