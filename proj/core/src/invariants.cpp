#include "sallylab/invariants.hpp"

#include <algorithm>

namespace sally {

InvariantEngine::InvariantEngine(LengthEngine& lengths, IdealHandle I, std::optional<IdealHandle> Q)
    : L_(lengths), spec_(I.spec()), I_(std::move(I)), Q_(std::move(Q)) {
    if (!spec_->same_ring(*L_.spec()))
        throw ring_mismatch_error("ideal and length engine disagree on the ring");
    if (Q_) require_subideal(*Q_);
}

const IdealHandle& InvariantEngine::reduction() const {
    if (!Q_) throw error("no reduction ideal available");
    return *Q_;
}

void InvariantEngine::require_subideal(const IdealHandle& Q) const {
    require_same_spec(I_, Q);
    std::vector<Polynomial> gens(spec_->relations());
    gens.insert(gens.end(), I_.generators().begin(), I_.generators().end());
    auto gb = buchberger_reduced(std::move(gens), MonomialOrder::degrevlex());
    for (const Polynomial& q : Q.generators())
        if (!normal_form(q, gb).is_zero())
            throw error("candidate reduction is not contained in the ideal");
}

const std::vector<Polynomial>& InvariantEngine::pow_I(int n) {
    if (n < 1) throw error("ideal power index must be >= 1");
    if (powI_.empty()) powI_.push_back({});  // index 0 unused
    while (static_cast<int>(powI_.size()) <= n) {
        if (powI_.size() == 1) {
            powI_.push_back(L_.reduce_mod_relations(I_.generators()));
        } else {
            powI_.push_back(product_list(powI_.back(), powI_[1]));
        }
    }
    return powI_[n];
}

const std::vector<Polynomial>& InvariantEngine::pow_Q(int n) {
    if (n < 1) throw error("ideal power index must be >= 1");
    if (powQ_.empty()) powQ_.push_back({});
    while (static_cast<int>(powQ_.size()) <= n) {
        if (powQ_.size() == 1) {
            powQ_.push_back(L_.reduce_mod_relations(reduction().generators()));
        } else {
            powQ_.push_back(product_list(powQ_.back(), powQ_[1]));
        }
    }
    return powQ_[n];
}

std::vector<Polynomial> InvariantEngine::product_list(const std::vector<Polynomial>& a,
                                                      const std::vector<Polynomial>& b) {
    std::vector<Polynomial> prod;
    prod.reserve(a.size() * b.size());
    for (const Polynomial& f : a)
        for (const Polynomial& g : b) prod.push_back(f * g);
    return L_.reduce_mod_relations(prod);
}

std::vector<Polynomial> InvariantEngine::scale_by_maximal(const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> out;
    out.reserve(gens.size() * spec_->nvars());
    for (std::size_t i = 0; i < spec_->nvars(); ++i) {
        Monomial xi = Monomial::variable(i, spec_->nvars());
        for (const Polynomial& g : gens) out.push_back(g.times_term(spec_->one(), xi));
    }
    return L_.reduce_mod_relations(out);
}

std::int64_t InvariantEngine::finite_length(const std::vector<Polynomial>& gens,
                                            const std::string& what) {
    return L_.ring_quotient_length(gens).finite_value(what);
}

std::int64_t InvariantEngine::lambda_RI() { return finite_length(pow_I(1), "R/I"); }

bool InvariantEngine::locally_m_primary() {
    LengthResult r = L_.ring_quotient_length(pow_I(1));
    return !r.infinite && r.stabilized;
}

std::optional<int> InvariantEngine::try_reduction(const IdealHandle& Q, int cap) {
    require_subideal(Q);
    std::vector<Polynomial> qgens = L_.reduce_mod_relations(Q.generators());
    for (int r = 0; r <= cap; ++r) {
        LengthResult lhs = L_.ring_quotient_length(pow_I(r + 1));
        if (lhs.infinite)
            throw computation_error("ideal is not locally m-primary");
        std::vector<Polynomial> qi = (r == 0) ? qgens : product_list(qgens, pow_I(r));
        LengthResult rhs = L_.ring_quotient_length(qi);
        if (!rhs.infinite && rhs.value == lhs.value) return r;
    }
    return std::nullopt;
}

int InvariantEngine::reduction_number() {
    if (rQ_) return *rQ_;
    std::optional<int> r = try_reduction(reduction(), config().red_cap);
    if (!r)
        throw computation_error("no reduction number found within the cap (" +
                                std::to_string(config().red_cap) + ")");
    rQ_ = *r;
    return *rQ_;
}

ReductionSearchReport InvariantEngine::find_reduction(std::uint64_t seed, int cap) {
    const int d = spec_->declared_dimension();
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I_.generators())
        if (!g.is_zero()) gens.push_back(g);

    ReductionSearchReport report;
    report.seed = seed;
    if (static_cast<int>(gens.size()) < d) return report;

    for (int attempt = 0; attempt < config().reduction_retries; ++attempt) {
        DetRng rng(seed, static_cast<std::uint64_t>(attempt));
        std::vector<Polynomial> combos;
        combos.reserve(d);
        for (int j = 0; j < d; ++j) {
            Polynomial q = spec_->zero_poly();
            for (const Polynomial& g : gens) {
                Coefficient c = Coefficient::from_integer(rng.nonzero_scalar(spec_->characteristic()),
                                                          spec_->characteristic());
                q = q + g.scaled(c);
            }
            combos.push_back(std::move(q));
        }
        IdealHandle Q(spec_, std::move(combos));
        ++report.attempts;
        std::optional<int> r = try_reduction(Q, cap);
        if (r) {
            report.Q = Q;
            report.r = r;
            if (!Q_) {
                Q_ = std::move(Q);
                rQ_ = r;
            }
            return report;
        }
    }
    return report;
}

std::vector<int> InvariantEngine::sampled_reduction_numbers(int count) {
    std::vector<int> rs;
    if (Q_) rs.push_back(reduction_number());
    for (int k = 0; k < count; ++k) {
        for (int attempt = 0; attempt < config().reduction_retries; ++attempt) {
            DetRng rng(config().seed, 1000 + 131ull * k + attempt);
            const int d = spec_->declared_dimension();
            std::vector<Polynomial> combos;
            bool degenerate = false;
            std::vector<Polynomial> gens;
            for (const Polynomial& g : I_.generators())
                if (!g.is_zero()) gens.push_back(g);
            if (static_cast<int>(gens.size()) < d) degenerate = true;
            for (int j = 0; !degenerate && j < d; ++j) {
                Polynomial q = spec_->zero_poly();
                for (const Polynomial& g : gens) {
                    Coefficient c = Coefficient::from_integer(
                        rng.nonzero_scalar(spec_->characteristic()), spec_->characteristic());
                    q = q + g.scaled(c);
                }
                combos.push_back(std::move(q));
            }
            if (degenerate) break;
            std::optional<int> r = try_reduction(IdealHandle(spec_, std::move(combos)),
                                                 config().red_cap);
            if (r) {
                rs.push_back(*r);
                break;
            }
        }
    }
    return rs;
}

std::vector<std::int64_t> InvariantEngine::hilbert_table(int n_max) {
    std::vector<std::int64_t> table;
    table.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        table.push_back(finite_length(pow_I(n + 1), "R/I^" + std::to_string(n + 1)));
        if (n > 0 && table[n] <= table[n - 1])
            throw computation_error("Hilbert table is not strictly increasing");
    }
    return table;
}

std::vector<std::int64_t> InvariantEngine::hilbert_table_Q(int n_max) {
    std::vector<std::int64_t> table;
    table.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        table.push_back(finite_length(pow_Q(n + 1), "R/Q^" + std::to_string(n + 1)));
    return table;
}

const std::vector<std::int64_t>& InvariantEngine::e_vector() {
    if (e_) return *e_;
    const int d = spec_->declared_dimension();
    try {
        e_ = hilbert_coefficients(hilbert_table(config().table_nmax), d);
    } catch (const computation_error&) {
        e_ = hilbert_coefficients(hilbert_table(config().table_nmax_ext), d);
    }
    return *e_;
}

const std::vector<std::int64_t>& InvariantEngine::eQ_vector() {
    if (eQ_) return *eQ_;
    const int d = spec_->declared_dimension();
    try {
        eQ_ = hilbert_coefficients(hilbert_table_Q(config().table_nmax), d);
    } catch (const computation_error&) {
        eQ_ = hilbert_coefficients(hilbert_table_Q(config().table_nmax_ext), d);
    }
    return *eQ_;
}

std::int64_t InvariantEngine::fiber_length(int n) {
    std::vector<Polynomial> qi = product_list(pow_Q(1), pow_I(n));
    std::int64_t a = finite_length(qi, "R/QI^" + std::to_string(n));
    std::int64_t b = finite_length(pow_I(n + 1), "R/I^" + std::to_string(n + 1));
    if (a < b) throw computation_error("negative fiber length");
    return a - b;
}

std::vector<std::int64_t> InvariantEngine::fiber_lengths() {
    const int r = reduction_number();
    std::vector<std::int64_t> out;
    for (int n = 1; n <= r - 1; ++n) out.push_back(fiber_length(n));
    return out;
}

std::vector<std::int64_t> InvariantEngine::sally_lengths(int n_max) {
    std::vector<std::int64_t> out;
    out.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Polynomial> iq = product_list(pow_I(1), pow_Q(n));
        std::int64_t a = finite_length(iq, "R/IQ^" + std::to_string(n));
        std::int64_t b = finite_length(pow_I(n + 1), "R/I^" + std::to_string(n + 1));
        if (a < b) throw computation_error("negative Sally fiber length");
        out.push_back(a - b);
    }
    return out;
}

std::int64_t InvariantEngine::sally_multiplicity() {
    if (sQ_) return *sQ_;
    const int d = spec_->declared_dimension();
    const int r = reduction_number();
    int n_hi = std::max(config().table_nmax, r + d + 3);
    std::vector<std::int64_t> vals;
    try {
        vals = sally_lengths(n_hi);
        sQ_ = fit_binomial_tail(vals, 1, d - 1)[0];
    } catch (const computation_error&) {
        vals = sally_lengths(n_hi + 12);
        sQ_ = fit_binomial_tail(vals, 1, d - 1)[0];
    }
    if (*sQ_ < 0) throw computation_error("negative Sally multiplicity from fit");
    return *sQ_;
}

std::int64_t InvariantEngine::nu_of_power(int n) {
    std::vector<Polynomial> mi = scale_by_maximal(pow_I(n));
    std::int64_t a = finite_length(mi, "R/mI^" + std::to_string(n));
    std::int64_t b = finite_length(pow_I(n), "R/I^" + std::to_string(n));
    if (a < b) throw computation_error("negative generator count");
    return a - b;
}

std::int64_t InvariantEngine::fiber_multiplicity() {
    if (f0_) return *f0_;
    const int d = spec_->declared_dimension();
    int n_hi = config().table_nmax;
    if (Q_ && rQ_) n_hi = std::max(n_hi, *rQ_ + d + 3);
    auto build = [&](int hi) {
        std::vector<std::int64_t> vals;
        vals.reserve(hi);
        for (int n = 1; n <= hi; ++n) vals.push_back(nu_of_power(n));
        return vals;
    };
    try {
        f0_ = fit_binomial_tail(build(n_hi), 1, d - 1)[0];
    } catch (const computation_error&) {
        f0_ = fit_binomial_tail(build(n_hi + 12), 1, d - 1)[0];
    }
    if (*f0_ <= 0) throw computation_error("special fiber multiplicity must be positive");
    return *f0_;
}

int InvariantEngine::nu_I() { return static_cast<int>(nu_of_power(1)); }

int InvariantEngine::nu_m() {
    IdealHandle m = maximal_ideal(spec_);
    return min_generators(L_, m);
}

int InvariantEngine::o_I() { return order_of_ideal(L_, I_); }

std::int64_t InvariantEngine::rossi_index_value() {
    const auto& e = e_vector();
    return e[1] - e[0] + lambda_RI() + 1;
}

std::int64_t InvariantEngine::buchsbaum_invariant_value() {
    return buchsbaum_invariant(eQ_vector(), spec_->declared_dimension());
}

bool InvariantEngine::m_power_collapse(int n) {
    if (n < 2) throw error("m-collapse check needs n >= 2");
    std::vector<Polynomial> lhs = scale_by_maximal(pow_I(n));
    std::vector<Polynomial> rhs = scale_by_maximal(product_list(pow_I(1), pow_Q(n - 1)));
    std::int64_t a = finite_length(lhs, "R/mI^n");
    std::int64_t b = finite_length(rhs, "R/mIQ^(n-1)");
    return a == b;
}

InvariantRecord InvariantEngine::record() {
    InvariantRecord rec;
    auto attempt = [&rec](const std::string& what, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& ex) {
            rec.diagnostics.push_back(what + ": " + ex.what());
        }
    };

    attempt("lambda(R/I)", [&] { rec.lambda_RI = lambda_RI(); });
    attempt("e(I)", [&] { rec.e = e_vector(); });
    attempt("nu(I)", [&] { rec.nuI = nu_I(); });
    attempt("nu(m)", [&] { rec.nu_m = nu_m(); });
    attempt("o(I)", [&] { rec.oI = o_I(); });
    attempt("f0(I)", [&] { rec.f0 = fiber_multiplicity(); });
    if (rec.e.size() >= 2 && rec.lambda_RI)
        rec.rossi_index = rec.e[1] - rec.e[0] + *rec.lambda_RI + 1;

    if (!Q_) {
        ReductionSearchReport rep = find_reduction(config().seed, config().red_cap);
        if (!rep.Q) rec.diagnostics.push_back("minimal reduction: search failed (" +
                                              std::to_string(rep.attempts) + " attempts)");
    }
    if (Q_) {
        attempt("r_Q(I)", [&] { rec.rQ = reduction_number(); });
        attempt("e(Q)", [&] { rec.eQ = eQ_vector(); });
        if (!rec.eQ.empty())
            rec.buchsbaum_I = buchsbaum_invariant(rec.eQ, spec_->declared_dimension());
        attempt("fiber lengths", [&] { rec.fiber_lengths = fiber_lengths(); });
        attempt("Sally lengths", [&] {
            int hi = std::max(spec_->declared_dimension() + 3,
                              rec.rQ ? *rec.rQ + 1 : spec_->declared_dimension() + 3);
            rec.sally_lengths = sally_lengths(hi);
        });
        attempt("s_Q(I)", [&] { rec.sQ = sally_multiplicity(); });
        attempt("sampled reductions", [&] {
            auto rs = sampled_reduction_numbers(config().reduction_samples);
            if (!rs.empty()) rec.r_min_sampled = *std::min_element(rs.begin(), rs.end());
        });
    }
    return rec;
}

// ---------------------------------------------------------------------------

ReductionSearchReport find_minimal_reduction(const IdealHandle& I, std::uint64_t seed, int cap,
                                             const EngineConfig& cfg) {
    LengthEngine lengths(I.spec(), cfg);
    InvariantEngine eng(lengths, I, std::nullopt);
    if (cap <= 0) {
        // Auto cap: twice a multiplicity estimate from low table entries.
        const int d = I.spec()->declared_dimension();
        std::vector<std::int64_t> table = eng.hilbert_table(d + 3);
        for (int k = 0; k < d; ++k) {
            std::vector<std::int64_t> diff;
            for (std::size_t i = 1; i < table.size(); ++i) diff.push_back(table[i] - table[i - 1]);
            table = std::move(diff);
        }
        std::int64_t e0_estimate = table.empty() ? 10 : table.back();
        cap = static_cast<int>(std::max<std::int64_t>(10, 2 * e0_estimate));
    }
    return eng.find_reduction(seed, cap);
}

std::optional<int> is_reduction(const IdealHandle& I, const IdealHandle& Q, int cap,
                                const EngineConfig& cfg) {
    LengthEngine lengths(I.spec(), cfg);
    InvariantEngine eng(lengths, I, std::nullopt);
    return eng.try_reduction(Q, cap);
}

std::vector<std::int64_t> hilbert_samuel_table(const IdealHandle& I, int n_max,
                                               const EngineConfig& cfg) {
    LengthEngine lengths(I.spec(), cfg);
    InvariantEngine eng(lengths, I, std::nullopt);
    return eng.hilbert_table(n_max);
}

std::vector<std::int64_t> hilbert_coefficients(const std::vector<std::int64_t>& table, int d) {
    return fit_binomial_tail(table, 0, d);
}

std::vector<std::int64_t> sally_fiber_lengths(const IdealHandle& I, const IdealHandle& Q,
                                              const EngineConfig& cfg) {
    LengthEngine lengths(I.spec(), cfg);
    InvariantEngine eng(lengths, I, Q);
    return eng.fiber_lengths();
}

std::int64_t sally_multiplicity(const IdealHandle& I, const IdealHandle& Q,
                                const EngineConfig& cfg) {
    LengthEngine lengths(I.spec(), cfg);
    InvariantEngine eng(lengths, I, Q);
    return eng.sally_multiplicity();
}

std::int64_t fiber_multiplicity(const IdealHandle& I, const EngineConfig& cfg) {
    LengthEngine lengths(I.spec(), cfg);
    InvariantEngine eng(lengths, I, std::nullopt);
    return eng.fiber_multiplicity();
}

std::int64_t rossi_index(const InvariantRecord& record) {
    if (record.e.size() < 2 || !record.lambda_RI)
        throw computation_error("Rossi index needs e_0, e_1 and lambda(R/I)");
    return record.e[1] - record.e[0] + *record.lambda_RI + 1;
}

std::int64_t buchsbaum_invariant(const std::vector<std::int64_t>& eQ, int d) {
    if (static_cast<int>(eQ.size()) < d + 1)
        throw computation_error("Buchsbaum invariant needs e_1(Q) .. e_d(Q)");
    std::int64_t acc = 0;
    for (int i = 1; i <= d; ++i) acc += (i % 2 == 0) ? eQ[i] : -eQ[i];
    return acc;
}

}  // namespace sally
