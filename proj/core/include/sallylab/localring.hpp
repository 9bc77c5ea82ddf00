#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>

#include "sallylab/config.hpp"
#include "sallylab/groebner.hpp"

namespace sally {

// Exact local length, or INFINITE when the truncation schedule was
// exhausted while the dimension counts were still growing.
struct LengthResult {
    bool infinite = false;
    std::int64_t value = 0;
    int truncation_used = 0;
    bool stabilized = false;

    std::int64_t finite_value(const std::string& what) const {
        if (infinite) throw computation_error(what + " has infinite length");
        return value;
    }
};

// Optional persistent backend for length results (the CLI plugs in a
// file-backed one; tests may pass nothing).
class LengthCache {
public:
    virtual ~LengthCache() = default;
    virtual std::optional<LengthResult> lookup(const std::string& key) = 0;
    virtual void store(const std::string& key, const LengthResult& value) = 0;
};

// Number of standard monomials of the monomial ideal generated by `leads`
// (all of them minimal or not; zero-dimensionality required, i.e. every
// variable must be bounded by some pure power).
std::int64_t count_standard_monomials(const std::vector<Monomial>& leads);

// Local lengths over one ring spec, memoized per canonical generator
// list.  Pure given (spec, config); safe to use from one thread per
// engine instance.
class LengthEngine {
public:
    LengthEngine(RingSpecPtr spec, EngineConfig cfg, LengthCache* cache = nullptr);

    const RingSpecPtr& spec() const { return spec_; }
    const EngineConfig& config() const { return cfg_; }

    // lambda_m(R / (J + (gens))) by truncation stabilization.
    LengthResult ring_quotient_length(const std::vector<Polynomial>& gens);
    LengthResult ring_quotient_length(const IdealHandle& I);

    // Normal forms modulo the relations basis, pruned; preserves J + (gens).
    std::vector<Polynomial> reduce_mod_relations(const std::vector<Polynomial>& gens);

    std::int64_t length_queries() const { return length_queries_; }
    std::int64_t bases_computed() const { return bases_computed_; }

private:
    RingSpecPtr spec_;
    EngineConfig cfg_;
    LengthCache* cache_;
    std::unordered_map<std::uint64_t, LengthResult> memo_;
    std::int64_t length_queries_ = 0;
    std::int64_t bases_computed_ = 0;

    std::int64_t truncated_dimension(const std::vector<Polynomial>& reduced_gens, int N);
    std::string cache_key(std::uint64_t digest) const;
};

// Spec-level operations.

LengthResult local_length(const IdealHandle& I, const EngineConfig& cfg = {});
LengthResult local_length(LengthEngine& engine, const IdealHandle& I);

// lambda(outer/inner) for inner contained in outer modulo the relations;
// containment is checked and violations throw.
LengthResult quotient_length(const IdealHandle& inner, const IdealHandle& outer,
                             const EngineConfig& cfg = {});
LengthResult quotient_length(LengthEngine& engine, const IdealHandle& inner,
                             const IdealHandle& outer);

bool is_locally_m_primary(const IdealHandle& I, const EngineConfig& cfg = {});
bool is_locally_m_primary(LengthEngine& engine, const IdealHandle& I);

// nu(I) = lambda(I/mI), the minimal number of generators.
int min_generators(const IdealHandle& I, const EngineConfig& cfg = {});
int min_generators(LengthEngine& engine, const IdealHandle& I);

// o(I): the largest n with I contained in m^n.
int order_of_ideal(const IdealHandle& I, const EngineConfig& cfg = {});
int order_of_ideal(LengthEngine& engine, const IdealHandle& I);

// The ideal (x_1, ..., x_v) of the spec's variables.
IdealHandle maximal_ideal(const RingSpecPtr& spec);

}  // namespace sally
