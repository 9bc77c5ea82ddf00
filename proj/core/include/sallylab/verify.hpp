#pragma once

#include "sallylab/constructions.hpp"

namespace sally {

enum class HypothesisStatus { SATISFIED, VIOLATED, ASSERTED_BY_USER, UNKNOWN };
enum class Relation { LE, EQ, GE };

std::string to_string(HypothesisStatus s);
std::string to_string(Relation r);

// Per-check result.  `pass` is set only when the hypothesis status is
// SATISFIED or ASSERTED_BY_USER; an unevaluated check is not a failure.
struct Verdict {
    std::string check_id;
    std::string name;
    HypothesisStatus hypothesis_status = HypothesisStatus::UNKNOWN;
    std::vector<std::int64_t> lhs, rhs;
    Relation relation = Relation::EQ;
    std::optional<bool> pass;
    std::string citation;
    std::string note;
};

// A concrete problem instance: ring, ideal, optional reduction, the
// user-asserted ring properties, and (for constructed families) the
// direct-link data that some checks consume.
struct Instance {
    std::string id;
    RingSpecPtr spec;
    IdealHandle I;
    std::optional<IdealHandle> Q;
    HypothesisFlags hypotheses;
    std::map<std::string, std::int64_t> params;
    std::optional<NorthcottData> northcott;
};

Instance to_instance(const CatalogInstance& c);

struct CheckInfo {
    std::string id;
    std::string name;
    std::string citation;
};

const std::vector<CheckInfo>& check_registry();
std::vector<std::string> all_check_ids();

// Runs the requested checks against the instance, memoizing all
// invariants in the supplied engine.  Never throws for per-check
// computation failures; those come back as UNKNOWN verdicts with a
// diagnostic note.
std::vector<Verdict> run_checks(InvariantEngine& engine, const Instance& instance,
                                const std::vector<std::string>& check_ids);

}  // namespace sally
