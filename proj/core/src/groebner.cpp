#include "sallylab/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace sally {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Monomial lcm = f.leading_monomial().lcm_with(g.leading_monomial());
    const Polynomial a =
        f.times_term(f.leading_coefficient().inverse(), f.leading_monomial().divide_into(lcm));
    const Polynomial b =
        g.times_term(g.leading_coefficient().inverse(), g.leading_monomial().divide_into(lcm));
    return a - b;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
    if (f.is_zero()) return f;
    Polynomial h = f;
    std::vector<Term> remainder;
    while (!h.is_zero()) {
        const Term& lead = h.leading_term();
        const Polynomial* divisor = nullptr;
        for (const Polynomial& b : basis) {
            if (!b.is_zero() && b.leading_monomial().divides(lead.mono)) {
                divisor = &b;
                break;
            }
        }
        if (divisor) {
            h = h - divisor->times_term(lead.coeff / divisor->leading_coefficient(),
                                        divisor->leading_monomial().divide_into(lead.mono));
        } else {
            remainder.push_back(lead);
            h = h - Polynomial::term(lead.coeff, lead.mono, h.order());
        }
    }
    // Popped leads are strictly decreasing, so the remainder is canonical.
    return Polynomial::from_terms(std::move(remainder), f.nvars(), f.characteristic(), f.order());
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw error("division by the zero polynomial");
    if (f.is_zero()) return f;
    Polynomial h = f;
    std::vector<Term> quotient;
    while (!h.is_zero()) {
        const Term& lead = h.leading_term();
        if (!g.leading_monomial().divides(lead.mono))
            throw error("inexact polynomial division");
        Term q{lead.coeff / g.leading_coefficient(), g.leading_monomial().divide_into(lead.mono)};
        h = h - g.times_term(q.coeff, q.mono);
        quotient.push_back(std::move(q));
    }
    return Polynomial::from_terms(std::move(quotient), f.nvars(), f.characteristic(), f.order());
}

namespace {

struct SPair {
    Monomial lcm;
    int i, j;  // indices into the working basis, i < j
};

struct PairLess {
    MonomialOrder ord;
    bool operator()(const SPair& a, const SPair& b) const {
        Cmp c = compare_monomials(a.lcm, b.lcm, ord);
        if (c != Cmp::EQ) return c == Cmp::LT;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

class BuchbergerRun {
public:
    explicit BuchbergerRun(MonomialOrder ord) : ord_(ord), pairs_(PairLess{ord}) {}

    std::vector<Polynomial> run(std::vector<Polynomial> gens) {
        for (Polynomial& g : gens) {
            if (g.is_zero()) continue;
            Polynomial h = normal_form(g, basis_);
            if (h.is_zero()) continue;
            if (h.is_constant()) return unit_basis(h);
            install(h.monic());
        }
        while (!pairs_.empty()) {
            SPair p = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            const Polynomial& f = basis_[p.i];
            const Polynomial& g = basis_[p.j];
            if (f.is_monomial() && g.is_monomial()) continue;  // s-poly vanishes identically
            Polynomial h = normal_form(s_polynomial(f, g), basis_);
            if (h.is_zero()) continue;
            if (h.is_constant()) return unit_basis(h);
            install(h.monic());
        }
        return reduce(std::move(basis_));
    }

private:
    MonomialOrder ord_;
    std::vector<Polynomial> basis_;
    std::set<SPair, PairLess> pairs_;

    std::vector<Polynomial> unit_basis(const Polynomial& c) const {
        return {Polynomial::constant(Coefficient::one(c.characteristic()), c.nvars(), ord_)};
    }

    // Pair bookkeeping: drop existing pairs killed by the chain criterion,
    // add the new pairs through minimal-lcm classes, dropping classes that
    // contain a coprime pair.
    void install(Polynomial f) {
        const Monomial lf = f.leading_monomial();
        const int t = static_cast<int>(basis_.size());

        for (auto it = pairs_.begin(); it != pairs_.end();) {
            const Monomial& gam = it->lcm;
            if (lf.divides(gam) &&
                basis_[it->i].leading_monomial().lcm_with(lf) != gam &&
                basis_[it->j].leading_monomial().lcm_with(lf) != gam) {
                it = pairs_.erase(it);
            } else {
                ++it;
            }
        }

        std::vector<std::pair<Monomial, int>> cand;
        cand.reserve(t);
        for (int i = 0; i < t; ++i)
            cand.emplace_back(basis_[i].leading_monomial().lcm_with(lf), i);
        std::sort(cand.begin(), cand.end(), [&](const auto& a, const auto& b) {
            Cmp c = compare_monomials(a.first, b.first, ord_);
            if (c != Cmp::EQ) return c == Cmp::LT;
            return a.second < b.second;
        });

        std::vector<Monomial> kept;
        std::size_t k = 0;
        while (k < cand.size()) {
            std::size_t e = k;
            while (e < cand.size() && cand[e].first == cand[k].first) ++e;
            const Monomial& gam = cand[k].first;
            bool dominated = std::any_of(kept.begin(), kept.end(),
                                         [&](const Monomial& m) { return m.divides(gam); });
            if (!dominated) {
                kept.push_back(gam);
                bool coprime_member = false;
                for (std::size_t z = k; z < e && !coprime_member; ++z)
                    coprime_member =
                        basis_[cand[z].second].leading_monomial().coprime_with(lf);
                if (!coprime_member) pairs_.insert(SPair{gam, cand[k].second, t});
            }
            k = e;
        }
        basis_.push_back(std::move(f));
    }

    std::vector<Polynomial> reduce(std::vector<Polynomial> G) const {
        std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
            return monomial_less(a.leading_monomial(), b.leading_monomial(), ord_);
        });
        std::vector<Polynomial> minimal;
        for (Polynomial& g : G) {
            bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& h) {
                return h.leading_monomial().divides(g.leading_monomial());
            });
            if (!redundant) minimal.push_back(std::move(g));
        }
        std::vector<Polynomial> out;
        out.reserve(minimal.size());
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            out.push_back(normal_form(minimal[i], others).monic());
        }
        std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
            return monomial_less(a.leading_monomial(), b.leading_monomial(), ord_);
        });
        return out;
    }
};

}  // namespace

std::vector<Polynomial> buchberger_reduced(std::vector<Polynomial> gens, MonomialOrder ord) {
    for (Polynomial& g : gens)
        if (!g.is_zero()) g = g.reordered(ord);
    return BuchbergerRun(ord).run(std::move(gens));
}

BasisPtr IdealHandle::basis(const MonomialOrder& ord) const {
    return cache_.get_or_compute(ord, [&] {
        std::vector<Polynomial> gens;
        for (const Polynomial& g : gens_)
            if (!g.is_zero()) gens.push_back(g);
        return buchberger_reduced(std::move(gens), ord);
    });
}

BasisPtr groebner_basis(const IdealHandle& I, MonomialOrder ord) { return I.basis(ord); }

BasisPtr relations_basis(const RingSpec& spec) {
    return spec.relations_cache().get_or_compute(MonomialOrder::degrevlex(), [&] {
        auto basis = buchberger_reduced(spec.relations(), MonomialOrder::degrevlex());
        if (basis.size() == 1 && basis[0].is_constant())
            throw error("relations ideal is not proper");
        return basis;
    });
}

bool contains(const IdealHandle& I, const Polynomial& f) {
    if (f.is_zero()) return true;
    auto gb = I.basis(MonomialOrder::degrevlex());
    return normal_form(f.reordered(MonomialOrder::degrevlex()), *gb).is_zero();
}

bool ideal_equal(const IdealHandle& I, const IdealHandle& J) {
    require_same_spec(I, J);
    for (const Polynomial& g : I.generators())
        if (!contains(J, g)) return false;
    for (const Polynomial& g : J.generators())
        if (!contains(I, g)) return false;
    return true;
}

IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J) {
    require_same_spec(I, J);
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return IdealHandle(I.spec(), std::move(gens));
}

std::vector<Polynomial> prune_generators(std::vector<Polynomial> gens) {
    std::vector<Polynomial> monic;
    monic.reserve(gens.size());
    for (Polynomial& g : gens)
        if (!g.is_zero()) monic.push_back(g.monic());

    // Dedupe identical generators, keeping first occurrences.
    std::vector<Polynomial> unique;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
    for (Polynomial& g : monic) {
        auto& bucket = seen[g.hash()];
        bool dup = std::any_of(bucket.begin(), bucket.end(),
                               [&](std::size_t k) { return unique[k] == g; });
        if (!dup) {
            bucket.push_back(unique.size());
            unique.push_back(std::move(g));
        }
    }

    // Minimal monomial generators absorb anything they divide term-wise.
    std::vector<Monomial> monos;
    for (const Polynomial& g : unique)
        if (g.is_monomial()) monos.push_back(g.leading_monomial());
    std::sort(monos.begin(), monos.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.exponents() < b.exponents();
    });
    std::vector<Monomial> min_monos;
    for (const Monomial& m : monos) {
        bool dominated = std::any_of(min_monos.begin(), min_monos.end(),
                                     [&](const Monomial& u) { return u.divides(m); });
        if (!dominated) min_monos.push_back(m);
    }

    std::vector<Polynomial> out;
    out.reserve(unique.size());
    for (Polynomial& g : unique) {
        bool absorbed = false;
        for (const Monomial& u : min_monos) {
            if (g.is_monomial() && g.leading_monomial() == u) continue;
            bool all = true;
            for (const Term& t : g.terms())
                if (!u.divides(t.mono)) {
                    all = false;
                    break;
                }
            if (all) {
                absorbed = true;
                break;
            }
        }
        if (!absorbed) out.push_back(std::move(g));
    }
    return out;
}

IdealHandle ideal_product(const IdealHandle& I, const IdealHandle& J) {
    require_same_spec(I, J);
    std::vector<Polynomial> prod;
    prod.reserve(I.generators().size() * J.generators().size());
    for (const Polynomial& f : I.generators())
        for (const Polynomial& g : J.generators()) {
            if (f.is_zero() || g.is_zero()) continue;
            prod.push_back(f * g);
        }
    return IdealHandle(I.spec(), prune_generators(std::move(prod)));
}

IdealHandle ideal_power(const IdealHandle& I, int n) {
    if (n < 0) throw error("negative ideal power");
    if (n == 0)
        return IdealHandle(I.spec(), {Polynomial::constant(I.spec()->one(), I.spec()->nvars())});
    IdealHandle acc = IdealHandle(I.spec(), prune_generators(I.generators()));
    for (int k = 1; k < n; ++k) acc = ideal_product(acc, I);
    return acc;
}

namespace {

// Ambient ring extended by a fresh elimination variable in front.
struct ExtendedRing {
    RingSpecPtr spec;
    Polynomial t;

    static ExtendedRing make(const RingSpecPtr& base) {
        std::string tname = "t_";
        while (base->var_index(tname)) tname += "_";
        std::vector<std::string> vars;
        vars.push_back(tname);
        vars.insert(vars.end(), base->variables().begin(), base->variables().end());
        auto spec2 = make_ring_spec(base->characteristic(), std::move(vars), {},
                                    base->declared_dimension() + 1);
        Polynomial t = Polynomial::term(spec2->one(), Monomial::variable(0, spec2->nvars()),
                                        MonomialOrder::elimination(1));
        return {spec2, t};
    }

    Polynomial lift(const Polynomial& f) const {
        std::vector<Term> terms;
        terms.reserve(f.term_count());
        for (const Term& tm : f.terms()) {
            std::vector<int> e;
            e.reserve(tm.mono.nvars() + 1);
            e.push_back(0);
            e.insert(e.end(), tm.mono.exponents().begin(), tm.mono.exponents().end());
            terms.push_back(Term{tm.coeff, Monomial(std::move(e))});
        }
        return Polynomial::from_terms(std::move(terms), spec->nvars(), spec->characteristic(),
                                      MonomialOrder::elimination(1));
    }

    static Polynomial drop_first_var(const Polynomial& f, const RingSpecPtr& base) {
        std::vector<Term> terms;
        terms.reserve(f.term_count());
        for (const Term& tm : f.terms()) {
            std::vector<int> e(tm.mono.exponents().begin() + 1, tm.mono.exponents().end());
            terms.push_back(Term{tm.coeff, Monomial(std::move(e))});
        }
        return Polynomial::from_terms(std::move(terms), base->nvars(), base->characteristic(),
                                      MonomialOrder::degrevlex());
    }
};

}  // namespace

IdealHandle intersect(const IdealHandle& I, const IdealHandle& J) {
    require_same_spec(I, J);
    if (I.is_zero_ideal() || J.is_zero_ideal()) return IdealHandle(I.spec(), {});

    ExtendedRing ext = ExtendedRing::make(I.spec());
    const Polynomial one = Polynomial::constant(ext.spec->one(), ext.spec->nvars(),
                                                MonomialOrder::elimination(1));
    std::vector<Polynomial> gens;
    for (const Polynomial& f : I.generators())
        if (!f.is_zero()) gens.push_back(ext.t * ext.lift(f));
    for (const Polynomial& g : J.generators())
        if (!g.is_zero()) gens.push_back((one - ext.t) * ext.lift(g));

    auto gb = buchberger_reduced(std::move(gens), MonomialOrder::elimination(1));
    std::vector<Polynomial> inter;
    for (const Polynomial& b : gb) {
        bool has_t = false;
        for (const Term& tm : b.terms())
            if (tm.mono.exponent(0) > 0) {
                has_t = true;
                break;
            }
        if (!has_t) inter.push_back(ExtendedRing::drop_first_var(b, I.spec()));
    }
    return IdealHandle(I.spec(), std::move(inter));
}

IdealHandle colon(const IdealHandle& I, const Polynomial& g) {
    if (g.is_zero()) throw error("colon by the zero polynomial");
    if (g.is_constant()) return IdealHandle(I.spec(), I.generators());
    IdealHandle gI(I.spec(), {g});
    IdealHandle meet = intersect(I, gI);
    std::vector<Polynomial> quot;
    quot.reserve(meet.generators().size());
    for (const Polynomial& f : meet.generators())
        quot.push_back(divide_exact(f, g));
    return IdealHandle(I.spec(), std::move(quot));
}

IdealHandle colon(const IdealHandle& I, const IdealHandle& J) {
    require_same_spec(I, J);
    std::vector<Polynomial> divisors;
    for (const Polynomial& g : J.generators())
        if (!g.is_zero()) divisors.push_back(g);
    if (divisors.empty()) throw error("colon by the zero ideal");
    IdealHandle acc = colon(I, divisors[0]);
    for (std::size_t k = 1; k < divisors.size(); ++k)
        acc = intersect(acc, colon(I, divisors[k]));
    return acc;
}

IdealHandle saturate_by_m(const IdealHandle& I, int max_iterations) {
    const RingSpecPtr& spec = I.spec();
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < spec->nvars(); ++i)
        vars.push_back(Polynomial::term(spec->one(), Monomial::variable(i, spec->nvars())));
    IdealHandle m(spec, std::move(vars));

    IdealHandle cur(spec, I.generators());
    for (int it = 0; it < max_iterations; ++it) {
        if (cur.is_zero_ideal()) return cur;
        IdealHandle next = colon(cur, m);
        if (ideal_equal(next, cur)) return cur;
        cur = std::move(next);
    }
    throw computation_error("saturation did not stabilize within the iteration cap");
}

}  // namespace sally
