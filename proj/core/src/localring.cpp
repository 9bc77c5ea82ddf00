#include "sallylab/localring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace sally {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.exponents() < b.exponents();
    });
    std::vector<Monomial> out;
    for (Monomial& m : gens) {
        bool dominated = std::any_of(out.begin(), out.end(),
                                     [&](const Monomial& u) { return u.divides(m); });
        if (!dominated) out.push_back(std::move(m));
    }
    return out;
}

std::int64_t count_rec(const std::vector<Monomial>& gens);

// Standard monomials inside the box cut out by the pure powers, minus the
// multiples of the single remaining mixed generator.
std::int64_t box_count(const std::vector<int>& box, const Monomial* mixed) {
    std::int64_t total = 1;
    for (int e : box) total *= e;
    if (!mixed) return total;
    std::int64_t inside = 1;
    for (std::size_t i = 0; i < box.size(); ++i)
        inside *= std::max<std::int64_t>(0, box[i] - mixed->exponent(i));
    return total - inside;
}

std::int64_t count_split(const std::vector<Monomial>& gens, std::size_t pivot_var) {
    // Monomials not divisible by x_i <-> standard for gens + (x_i);
    // those divisible by x_i <-> standard for gens : x_i, shifted.
    std::vector<Monomial> plus;
    for (const Monomial& g : gens)
        if (g.exponent(pivot_var) == 0) plus.push_back(g);
    plus.push_back(Monomial::variable(pivot_var, gens.front().nvars()));

    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const Monomial& g : gens) {
        if (g.exponent(pivot_var) == 0) {
            colon.push_back(g);
        } else {
            std::vector<int> e = g.exponents();
            e[pivot_var] -= 1;
            colon.push_back(Monomial(std::move(e)));
        }
    }
    return count_rec(minimalize(std::move(plus))) + count_rec(minimalize(std::move(colon)));
}

std::int64_t count_rec(const std::vector<Monomial>& gens) {
    if (gens.empty()) throw computation_error("monomial ideal is not zero-dimensional");
    const std::size_t v = gens.front().nvars();

    for (const Monomial& g : gens)
        if (g.is_unit()) return 0;

    std::vector<int> box(v, -1);
    std::vector<const Monomial*> mixed;
    for (const Monomial& g : gens) {
        int support = 0;
        std::size_t var = 0;
        for (std::size_t i = 0; i < v; ++i)
            if (g.exponent(i) > 0) {
                ++support;
                var = i;
            }
        if (support == 1) {
            box[var] = box[var] < 0 ? g.exponent(var) : std::min(box[var], g.exponent(var));
        } else {
            mixed.push_back(&g);
        }
    }
    for (int e : box)
        if (e < 0) throw computation_error("monomial ideal is not zero-dimensional");

    if (mixed.empty()) return box_count(box, nullptr);
    if (mixed.size() == 1) return box_count(box, mixed.front());

    // Pivot on the most shared variable among mixed generators.
    std::vector<int> occurrences(v, 0);
    for (const Monomial* g : mixed)
        for (std::size_t i = 0; i < v; ++i)
            if (g->exponent(i) > 0) ++occurrences[i];
    std::size_t pivot = static_cast<std::size_t>(
        std::max_element(occurrences.begin(), occurrences.end()) - occurrences.begin());
    return count_split(gens, pivot);
}

}  // namespace

std::int64_t count_standard_monomials(const std::vector<Monomial>& leads) {
    return count_rec(minimalize(leads));
}

LengthEngine::LengthEngine(RingSpecPtr spec, EngineConfig cfg, LengthCache* cache)
    : spec_(std::move(spec)), cfg_(cfg), cache_(cache) {}

std::vector<Polynomial> LengthEngine::reduce_mod_relations(const std::vector<Polynomial>& gens) {
    auto gbj = relations_basis(*spec_);
    std::vector<Polynomial> reduced;
    reduced.reserve(gens.size());
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        reduced.push_back(gbj->empty() ? g : normal_form(g, *gbj));
    }
    return prune_generators(std::move(reduced));
}

std::int64_t LengthEngine::truncated_dimension(const std::vector<Polynomial>& reduced_gens, int N) {
    auto gbj = relations_basis(*spec_);
    std::vector<Polynomial> gens(*gbj);
    gens.insert(gens.end(), reduced_gens.begin(), reduced_gens.end());
    for (std::size_t i = 0; i < spec_->nvars(); ++i)
        gens.push_back(Polynomial::term(spec_->one(), Monomial::variable(i, spec_->nvars(), N)));
    auto basis = buchberger_reduced(std::move(gens), MonomialOrder::degrevlex());
    ++bases_computed_;
    std::vector<Monomial> leads;
    leads.reserve(basis.size());
    for (const Polynomial& b : basis) leads.push_back(b.leading_monomial());
    return count_standard_monomials(leads);
}

std::string LengthEngine::cache_key(std::uint64_t digest) const {
    std::ostringstream os;
    os << std::hex << digest;
    return os.str();
}

LengthResult LengthEngine::ring_quotient_length(const IdealHandle& I) {
    if (!I.spec()->same_ring(*spec_))
        throw ring_mismatch_error("ideal belongs to a different ring than the length engine");
    return ring_quotient_length(I.generators());
}

LengthResult LengthEngine::ring_quotient_length(const std::vector<Polynomial>& gens) {
    ++length_queries_;
    std::vector<Polynomial> reduced = reduce_mod_relations(gens);

    std::uint64_t digest = 1469598103934665603ull;
    auto mix = [&digest](std::uint64_t x) {
        digest ^= x;
        digest *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(spec_->characteristic()));
    mix(spec_->nvars());
    for (const Polynomial& r : spec_->relations()) mix(r.hash());
    for (const Polynomial& g : reduced) mix(g.hash());
    mix(static_cast<std::uint64_t>(cfg_.trunc_step));
    mix(static_cast<std::uint64_t>(cfg_.trunc_consecutive));
    mix(static_cast<std::uint64_t>(cfg_.trunc_cap));

    if (auto it = memo_.find(digest); it != memo_.end()) return it->second;
    if (cache_) {
        if (auto hit = cache_->lookup(cache_key(digest))) {
            memo_.emplace(digest, *hit);
            return *hit;
        }
    }

    LengthResult result;
    bool unit = std::any_of(reduced.begin(), reduced.end(),
                            [](const Polynomial& g) { return g.is_constant() && !g.is_zero(); });
    if (unit) {
        result = LengthResult{false, 0, 0, true};
    } else {
        int maxdeg = 1;
        for (const Polynomial& g : reduced) maxdeg = std::max(maxdeg, g.total_degree());
        for (const Polynomial& r : spec_->relations()) maxdeg = std::max(maxdeg, r.total_degree());
        const int start = 2 * maxdeg + 2;
        const int limit = start + cfg_.trunc_cap;

        std::int64_t prev = -1;
        int agreeing = 0;
        int N = start;
        for (; N <= limit; N += cfg_.trunc_step) {
            std::int64_t val = truncated_dimension(reduced, N);
            agreeing = (val == prev) ? agreeing + 1 : 1;
            prev = val;
            if (agreeing >= cfg_.trunc_consecutive) {
                result = LengthResult{false, val, N, true};
                break;
            }
        }
        if (agreeing < cfg_.trunc_consecutive)
            result = LengthResult{true, 0, N - cfg_.trunc_step, false};
    }

    memo_.emplace(digest, result);
    if (cache_) cache_->store(cache_key(digest), result);
    return result;
}

LengthResult local_length(const IdealHandle& I, const EngineConfig& cfg) {
    LengthEngine engine(I.spec(), cfg);
    return local_length(engine, I);
}

LengthResult local_length(LengthEngine& engine, const IdealHandle& I) {
    return engine.ring_quotient_length(I);
}

LengthResult quotient_length(const IdealHandle& inner, const IdealHandle& outer,
                             const EngineConfig& cfg) {
    LengthEngine engine(inner.spec(), cfg);
    return quotient_length(engine, inner, outer);
}

LengthResult quotient_length(LengthEngine& engine, const IdealHandle& inner,
                             const IdealHandle& outer) {
    require_same_spec(inner, outer);
    // inner must sit inside outer modulo the relations ideal.
    std::vector<Polynomial> outer_plus_j(outer.generators());
    const auto& rels = inner.spec()->relations();
    outer_plus_j.insert(outer_plus_j.end(), rels.begin(), rels.end());
    auto gb = buchberger_reduced(outer_plus_j, MonomialOrder::degrevlex());
    for (const Polynomial& g : inner.generators()) {
        if (!normal_form(g, gb).is_zero())
            throw error("quotient_length: inner ideal is not contained in the outer ideal");
    }
    LengthResult li = engine.ring_quotient_length(inner);
    LengthResult lo = engine.ring_quotient_length(outer);
    if (li.infinite || lo.infinite)
        throw computation_error("quotient_length: a side has infinite local length");
    std::int64_t diff = li.value - lo.value;
    if (diff < 0) throw computation_error("quotient_length: negative length difference");
    return LengthResult{false, diff, std::max(li.truncation_used, lo.truncation_used), true};
}

bool is_locally_m_primary(const IdealHandle& I, const EngineConfig& cfg) {
    LengthEngine engine(I.spec(), cfg);
    return is_locally_m_primary(engine, I);
}

bool is_locally_m_primary(LengthEngine& engine, const IdealHandle& I) {
    LengthResult r = engine.ring_quotient_length(I);
    return !r.infinite && r.stabilized;
}

IdealHandle maximal_ideal(const RingSpecPtr& spec) {
    std::vector<Polynomial> vars;
    vars.reserve(spec->nvars());
    for (std::size_t i = 0; i < spec->nvars(); ++i)
        vars.push_back(Polynomial::term(spec->one(), Monomial::variable(i, spec->nvars())));
    return IdealHandle(spec, std::move(vars));
}

int min_generators(const IdealHandle& I, const EngineConfig& cfg) {
    LengthEngine engine(I.spec(), cfg);
    return min_generators(engine, I);
}

int min_generators(LengthEngine& engine, const IdealHandle& I) {
    IdealHandle mI = ideal_product(maximal_ideal(I.spec()), I);
    LengthResult r = quotient_length(engine, mI, I);
    return static_cast<int>(r.finite_value("I/mI"));
}

int order_of_ideal(const IdealHandle& I, const EngineConfig& cfg) {
    LengthEngine engine(I.spec(), cfg);
    return order_of_ideal(engine, I);
}

int order_of_ideal(LengthEngine& engine, const IdealHandle& I) {
    const RingSpecPtr& spec = I.spec();
    if (I.is_zero_ideal()) throw error("order of the zero ideal");

    std::vector<Polynomial> nonzero;
    for (const Polynomial& g : I.generators())
        if (!g.is_zero()) nonzero.push_back(g);

    // Upper guard: some generator survives modulo J with finite degree.
    constexpr int kOrderGuard = 512;
    for (int n = 1; n <= kOrderGuard; ++n) {
        // m^n + J membership for every generator.
        std::vector<Polynomial> gens(spec->relations());
        std::vector<int> exps(spec->nvars(), 0);
        // all monomials of total degree n
        std::vector<Monomial> degree_n;
        std::function<void(std::size_t, int)> emit = [&](std::size_t i, int left) {
            if (i + 1 == spec->nvars()) {
                exps[i] = left;
                degree_n.push_back(Monomial(exps));
                return;
            }
            for (int e = 0; e <= left; ++e) {
                exps[i] = e;
                emit(i + 1, left - e);
            }
        };
        emit(0, n);
        for (const Monomial& m : degree_n)
            gens.push_back(Polynomial::term(spec->one(), m));
        auto gb = buchberger_reduced(std::move(gens), MonomialOrder::degrevlex());
        bool inside = std::all_of(nonzero.begin(), nonzero.end(), [&](const Polynomial& g) {
            return normal_form(g, gb).is_zero();
        });
        if (!inside) {
            if (n == 1) throw error("ideal is not contained in the maximal ideal");
            return n - 1;
        }
    }
    throw computation_error("order_of_ideal guard exceeded");
}

}  // namespace sally
