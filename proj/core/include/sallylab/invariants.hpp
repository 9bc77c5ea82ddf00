#pragma once

#include <optional>
#include <random>

#include "sallylab/hilbert_fit.hpp"
#include "sallylab/localring.hpp"

namespace sally {

struct ReductionSearchReport {
    std::optional<IdealHandle> Q;
    std::optional<int> r;  // empty = NOT_FOUND within the cap
    int attempts = 0;
    std::uint64_t seed = 0;
};

// Everything we compute for a triple (R, I, Q).  Fields are optional so a
// partially failed pipeline can still be reported; failures land in
// `diagnostics`.
struct InvariantRecord {
    std::optional<std::int64_t> lambda_RI;
    std::vector<std::int64_t> e;   // e_0(I) .. e_d(I)
    std::vector<std::int64_t> eQ;  // e_0(Q) .. e_d(Q)
    std::optional<int> rQ;
    std::vector<std::int64_t> fiber_lengths;  // lambda(I^{n+1}/Q I^n), n = 1..r-1
    std::vector<std::int64_t> sally_lengths;  // lambda(I^{n+1}/I Q^n), n = 1..
    std::optional<std::int64_t> sQ;
    std::optional<std::int64_t> f0;
    std::optional<int> nuI;
    std::optional<int> nu_m;
    std::optional<int> oI;
    std::optional<std::int64_t> rossi_index;
    std::optional<std::int64_t> buchsbaum_I;
    std::optional<int> r_min_sampled;
    std::vector<std::string> diagnostics;
};

// Deterministic random stream; all draws below are fully specified so
// reports reproduce bit-for-bit across platforms.
class DetRng {
public:
    DetRng(std::uint64_t seed, std::uint64_t stream)
        : gen_(seed * 0x9E3779B97F4A7C15ull + stream) {}
    std::uint64_t next() { return gen_(); }
    // Uniform in [1, p-1] for F_p; small positive integer for char 0.
    std::int64_t nonzero_scalar(std::int64_t characteristic) {
        if (characteristic == 0) return static_cast<std::int64_t>(1 + next() % 997);
        return static_cast<std::int64_t>(1 + next() % static_cast<std::uint64_t>(characteristic - 1));
    }

private:
    std::mt19937_64 gen_;
};

// Memoized invariant pipeline for one (R, I[, Q]).  Single-threaded use;
// share nothing but the (read-only) ring spec across engines.
class InvariantEngine {
public:
    InvariantEngine(LengthEngine& lengths, IdealHandle I, std::optional<IdealHandle> Q);

    const RingSpecPtr& spec() const { return spec_; }
    const EngineConfig& config() const { return L_.config(); }
    const IdealHandle& ideal() const { return I_; }
    bool has_reduction() const { return Q_.has_value(); }
    const IdealHandle& reduction() const;
    void adopt_reduction(IdealHandle Q) { Q_ = std::move(Q); }

    std::int64_t lambda_RI();
    bool locally_m_primary();

    // Least r <= cap with lambda-certified I^{r+1} = Q I^r for the given
    // candidate; empty when none.
    std::optional<int> try_reduction(const IdealHandle& Q, int cap);
    int reduction_number();  // for the stored Q; cached

    ReductionSearchReport find_reduction(std::uint64_t seed, int cap);
    // r_Q over `count` freshly sampled reductions (plus the stored Q).
    std::vector<int> sampled_reduction_numbers(int count);

    std::vector<std::int64_t> hilbert_table(int n_max);    // lambda(R/I^{n+1}), n = 0..n_max
    std::vector<std::int64_t> hilbert_table_Q(int n_max);  // same for Q
    const std::vector<std::int64_t>& e_vector();
    const std::vector<std::int64_t>& eQ_vector();

    std::vector<std::int64_t> fiber_lengths();             // n = 1..r-1
    std::int64_t fiber_length(int n);                      // lambda(I^{n+1}/Q I^n)
    std::vector<std::int64_t> sally_lengths(int n_max);    // n = 1..n_max
    std::int64_t sally_multiplicity();
    std::int64_t fiber_multiplicity();
    std::int64_t nu_of_power(int n);  // nu(I^n)

    int nu_I();
    int nu_m();
    int o_I();
    std::int64_t rossi_index_value();
    std::int64_t buchsbaum_invariant_value();

    // lambda-certified local equality of m I^n and m I Q^{n-1}.
    bool m_power_collapse(int n);

    InvariantRecord record();

    LengthEngine& lengths() { return L_; }

private:
    LengthEngine& L_;
    RingSpecPtr spec_;
    IdealHandle I_;
    std::optional<IdealHandle> Q_;

    std::vector<std::vector<Polynomial>> powI_;  // powI_[n] generates I^n modulo J
    std::vector<std::vector<Polynomial>> powQ_;
    std::optional<int> rQ_;
    std::optional<std::vector<std::int64_t>> e_, eQ_;
    std::optional<std::int64_t> sQ_, f0_;

    const std::vector<Polynomial>& pow_I(int n);
    const std::vector<Polynomial>& pow_Q(int n);
    std::vector<Polynomial> product_list(const std::vector<Polynomial>& a,
                                         const std::vector<Polynomial>& b);
    std::vector<Polynomial> scale_by_maximal(const std::vector<Polynomial>& gens);
    std::int64_t finite_length(const std::vector<Polynomial>& gens, const std::string& what);
    void require_subideal(const IdealHandle& Q) const;
    std::vector<std::int64_t> fitted(const std::vector<std::int64_t>& (InvariantEngine::*)(int),
                                     int degree);
};

// Spec-level wrappers.
ReductionSearchReport find_minimal_reduction(const IdealHandle& I, std::uint64_t seed, int cap,
                                             const EngineConfig& cfg = {});
std::optional<int> is_reduction(const IdealHandle& I, const IdealHandle& Q, int cap,
                                const EngineConfig& cfg = {});
std::vector<std::int64_t> hilbert_samuel_table(const IdealHandle& I, int n_max,
                                               const EngineConfig& cfg = {});
// (e_0, ..., e_d) from a table of lambda(R/I^{n+1}); exact tail fit.
std::vector<std::int64_t> hilbert_coefficients(const std::vector<std::int64_t>& table, int d);
std::vector<std::int64_t> sally_fiber_lengths(const IdealHandle& I, const IdealHandle& Q,
                                              const EngineConfig& cfg = {});
std::int64_t sally_multiplicity(const IdealHandle& I, const IdealHandle& Q,
                                const EngineConfig& cfg = {});
std::int64_t fiber_multiplicity(const IdealHandle& I, const EngineConfig& cfg = {});

std::int64_t rossi_index(const InvariantRecord& record);
std::int64_t buchsbaum_invariant(const std::vector<std::int64_t>& eQ, int d);

}  // namespace sally
