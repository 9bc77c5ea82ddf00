#include "sallylab/verify.hpp"

#include <algorithm>
#include <numeric>

namespace sally {

std::string to_string(HypothesisStatus s) {
    switch (s) {
        case HypothesisStatus::SATISFIED: return "SATISFIED";
        case HypothesisStatus::VIOLATED: return "VIOLATED";
        case HypothesisStatus::ASSERTED_BY_USER: return "ASSERTED_BY_USER";
        case HypothesisStatus::UNKNOWN: return "UNKNOWN";
    }
    return "UNKNOWN";
}

std::string to_string(Relation r) {
    switch (r) {
        case Relation::LE: return "<=";
        case Relation::EQ: return "=";
        case Relation::GE: return ">=";
    }
    return "=";
}

Instance to_instance(const CatalogInstance& c) {
    return Instance{c.id, c.spec, c.I, c.Q, c.hypotheses, c.params, c.northcott};
}

const std::vector<CheckInfo>& check_registry() {
    static const std::vector<CheckInfo> registry = {
        {"C1", "rossi_bound",
         "Rossi reduction-number bound for Cohen-Macaulay rings of dimension at most two"},
        {"C2", "sally_identity", "Sally-module multiplicity identity over Cohen-Macaulay rings"},
        {"C3", "fiber_sum", "Sally multiplicity bounded by the sum of the fiber lengths"},
        {"C4", "cm_sally_bound",
         "reduction-number bound r_Q <= s_Q + 1 when the fiber-sum bound is tight"},
        {"C5", "cyclic_fiber", "a cyclic degree-one fiber forces every fiber to be cyclic"},
        {"C6", "lambda1_package",
         "with lambda(I^2/QI) = 1 the reduction number is reduction-independent and matches the Rossi index"},
        {"C7", "integral_link",
         "direct links of parameter ideals deep inside the maximal ideal are integral over them"},
        {"C8", "acm_formula",
         "lambda(I^2/QI) = lambda(I/Q) - lambda(R/I_1(phi)) for almost complete intersections"},
        {"C9", "aci_nu_bound", "a cyclic fiber component bounds r(I) by n*nu(m) - 1"},
        {"C10", "gorenstein2",
         "Gorenstein with lambda(I/Q) = 2 forces lambda(I^2/QI) = 1 and r(I) <= 2*nu(m) - 1"},
        {"C11", "m_collapse",
         "m I^n = m I Q^{n-1} for almost complete intersections with a cyclic first fiber"},
        {"C12", "fiber_window", "special-fiber multiplicity window around the Rossi index"},
        {"C13", "fiber_cm", "Cohen-Macaulay special fiber: f_0(I) = r(I) + 1"},
        {"C14", "buchsbaum_rossi",
         "Buchsbaum identity s_Q = e_1 - e_0 + lambda(R/I) - e_1(Q) with r_Q <= s_Q + 1"},
        {"C15", "depth0_bound",
         "depth-zero comparison r_Q(I) <= r computed modulo H^0 plus one"},
        {"C16", "sally_upper", "upper bound s_Q <= e_1 - e_1(Q) - e_0 + lambda(R/I)"},
        {"C17", "dseq_equality", "equality in the s_Q upper bound under d-sequence hypotheses"},
    };
    return registry;
}

std::vector<std::string> all_check_ids() {
    std::vector<std::string> ids;
    for (const auto& c : check_registry()) ids.push_back(c.id);
    return ids;
}

namespace {

const CheckInfo& info_for(const std::string& id) {
    for (const auto& c : check_registry())
        if (c.id == id) return c;
    throw error("unknown check id '" + id + "'");
}

class CheckRunner {
public:
    CheckRunner(InvariantEngine& eng, const Instance& inst) : eng_(eng), inst_(inst) {}

    Verdict run(const std::string& id) {
        const CheckInfo& info = info_for(id);
        Verdict v;
        v.check_id = info.id;
        v.name = info.name;
        v.citation = info.citation;
        try {
            dispatch(id, v);
        } catch (const std::exception& ex) {
            v.hypothesis_status = HypothesisStatus::UNKNOWN;
            v.pass.reset();
            v.note = append_note(v.note, std::string("computation failed: ") + ex.what());
        }
        if (v.hypothesis_status != HypothesisStatus::SATISFIED &&
            v.hypothesis_status != HypothesisStatus::ASSERTED_BY_USER)
            v.pass.reset();
        return v;
    }

private:
    InvariantEngine& eng_;
    const Instance& inst_;

    static std::string append_note(const std::string& base, const std::string& extra) {
        return base.empty() ? extra : base + "; " + extra;
    }

    bool ensure_reduction(Verdict& v) {
        if (eng_.has_reduction()) return true;
        ReductionSearchReport rep = eng_.find_reduction(eng_.config().seed, eng_.config().red_cap);
        if (!rep.Q) {
            v.hypothesis_status = HypothesisStatus::UNKNOWN;
            v.note = append_note(v.note, "no minimal reduction found");
            return false;
        }
        return true;
    }

    // Shared hypothesis helpers ------------------------------------------

    // Sets VIOLATED/UNKNOWN and returns false when the check cannot run.
    bool need_user_flag(Verdict& v, bool flag, const std::string& what) {
        if (!flag) {
            v.hypothesis_status = HypothesisStatus::UNKNOWN;
            v.note = append_note(v.note, what + " not asserted");
            return false;
        }
        v.hypothesis_status = HypothesisStatus::ASSERTED_BY_USER;
        return true;
    }

    bool need_computed(Verdict& v, bool ok, const std::string& what) {
        if (!ok) {
            v.hypothesis_status = HypothesisStatus::VIOLATED;
            v.note = append_note(v.note, what);
            return false;
        }
        return true;
    }

    std::int64_t first_fiber() {
        return eng_.reduction_number() >= 2 ? eng_.fiber_length(1) : 0;
    }

    // Status when the Sally-module dimension hypothesis is inferred.
    bool sally_dimension_hypothesis(Verdict& v, std::int64_t s,
                                    const std::vector<std::int64_t>& sample_lengths) {
        bool all_zero = std::all_of(sample_lengths.begin(), sample_lengths.end(),
                                    [](std::int64_t x) { return x == 0; });
        if (all_zero) {
            v.hypothesis_status = HypothesisStatus::SATISFIED;
            v.note = append_note(v.note, "Sally module is zero");
            return true;
        }
        if (s > 0) {
            v.hypothesis_status = HypothesisStatus::SATISFIED;
            v.note = append_note(v.note, "full Sally dimension inferred from a nonzero leading fit");
            return true;
        }
        v.hypothesis_status = HypothesisStatus::UNKNOWN;
        v.note = append_note(v.note, "leading fit is zero but the Sally module is nonzero");
        return false;
    }

    void dispatch(const std::string& id, Verdict& v) {
        if (id == "C1") return c1(v);
        if (id == "C2") return c2(v);
        if (id == "C3") return c3(v);
        if (id == "C4") return c4(v);
        if (id == "C5") return c5(v);
        if (id == "C6") return c6(v);
        if (id == "C7") return c7(v);
        if (id == "C8") return c8(v);
        if (id == "C9") return c9(v);
        if (id == "C10") return c10(v);
        if (id == "C11") return c11(v);
        if (id == "C12") return c12(v);
        if (id == "C13") return c13(v);
        if (id == "C14") return c14(v);
        if (id == "C15") return c15(v);
        if (id == "C16") return c16(v);
        if (id == "C17") return c17(v);
        throw error("unknown check id '" + id + "'");
    }

    void c1(Verdict& v) {
        v.relation = Relation::LE;
        if (!need_user_flag(v, inst_.hypotheses.cm, "Cohen-Macaulay")) return;
        if (!need_computed(v, inst_.spec->declared_dimension() <= 2, "dimension exceeds two"))
            return;
        if (!ensure_reduction(v)) return;
        v.lhs = {eng_.reduction_number()};
        v.rhs = {eng_.rossi_index_value()};
        v.pass = v.lhs[0] <= v.rhs[0];
    }

    void c2(Verdict& v) {
        v.relation = Relation::EQ;
        if (!need_user_flag(v, inst_.hypotheses.cm, "Cohen-Macaulay")) return;
        if (!ensure_reduction(v)) return;
        v.lhs = {eng_.sally_multiplicity()};
        const auto& e = eng_.e_vector();
        v.rhs = {e[1] - e[0] + eng_.lambda_RI()};
        v.pass = v.lhs == v.rhs;
    }

    void c3(Verdict& v) {
        v.relation = Relation::LE;
        if (!ensure_reduction(v)) return;
        std::int64_t s = eng_.sally_multiplicity();
        std::vector<std::int64_t> fibers = eng_.fiber_lengths();
        std::vector<std::int64_t> sally_sample =
            eng_.sally_lengths(std::max(2, eng_.reduction_number() + 1));
        if (!sally_dimension_hypothesis(v, s, sally_sample)) return;
        std::int64_t sum = std::accumulate(fibers.begin(), fibers.end(), std::int64_t{0});
        v.lhs = {s};
        v.rhs = {sum};
        v.pass = s <= sum;
    }

    void c4(Verdict& v) {
        v.relation = Relation::LE;
        if (!ensure_reduction(v)) return;
        std::int64_t s = eng_.sally_multiplicity();
        std::vector<std::int64_t> fibers = eng_.fiber_lengths();
        std::int64_t sum = std::accumulate(fibers.begin(), fibers.end(), std::int64_t{0});
        if (!need_computed(v, s == sum, "fiber-sum bound is not tight")) return;
        v.hypothesis_status = HypothesisStatus::SATISFIED;
        v.lhs = {eng_.reduction_number()};
        v.rhs = {s + 1};
        v.pass = v.lhs[0] <= v.rhs[0];
    }

    void c5(Verdict& v) {
        v.relation = Relation::EQ;
        if (!ensure_reduction(v)) return;
        if (!need_computed(v, first_fiber() == 1, "lambda(I^2/QI) != 1")) return;
        v.hypothesis_status = HypothesisStatus::SATISFIED;
        v.lhs = eng_.fiber_lengths();
        v.rhs.assign(v.lhs.size(), 1);
        v.pass = v.lhs == v.rhs;
    }

    void c6(Verdict& v) {
        v.relation = Relation::EQ;
        if (!need_user_flag(v, inst_.hypotheses.cm, "Cohen-Macaulay")) return;
        if (!ensure_reduction(v)) return;
        if (!need_computed(v, first_fiber() == 1, "lambda(I^2/QI) != 1")) return;
        std::vector<int> rs = eng_.sampled_reduction_numbers(eng_.config().reduction_samples);
        std::int64_t expected = eng_.rossi_index_value();
        v.lhs.assign(rs.begin(), rs.end());
        v.rhs = {expected};
        bool all_equal = std::all_of(rs.begin(), rs.end(), [&](int r) { return r == rs.front(); });
        v.pass = all_equal && !rs.empty() && rs.front() == expected && expected > 1;
        v.note = append_note(v.note, "sampled reduction numbers must agree and exceed 1");
    }

    void c7(Verdict& v) {
        v.relation = Relation::EQ;
        if (!inst_.northcott) {
            v.hypothesis_status = HypothesisStatus::UNKNOWN;
            v.note = append_note(v.note, "no direct-link construction data");
            return;
        }
        const NorthcottData& nd = *inst_.northcott;
        if (!need_computed(v, nd.q_in_m_pow_n1, "Q is not inside m^(n+1)")) return;
        if (!need_computed(v, nd.q_m_primary, "Q is not locally m-primary")) return;
        v.hypothesis_status = HypothesisStatus::SATISFIED;
        IntegralityResult res =
            is_integral_over(nd.I, nd.Q, eng_.config().integral_cap, eng_.config());
        v.lhs = {res.status == Integrality::YES ? 1 : 0};
        v.rhs = {1};
        v.pass = v.lhs == v.rhs;
        if (res.status == Integrality::YES)
            v.note = append_note(v.note, "witness r = " + std::to_string(res.r));
    }

    void c8(Verdict& v) {
        v.relation = Relation::EQ;
        if (!inst_.northcott) {
            v.hypothesis_status = HypothesisStatus::UNKNOWN;
            v.note = append_note(v.note, "no direct-link construction data");
            return;
        }
        if (!ensure_reduction(v)) return;
        v.hypothesis_status = HypothesisStatus::SATISFIED;
        const NorthcottData& nd = *inst_.northcott;
        std::int64_t lhs = first_fiber();
        std::int64_t lam_IQ =
            quotient_length(eng_.lengths(), nd.Q, nd.I).finite_value("I/Q");

        auto rhs_for = [&](const NorthcottData& data) {
            IdealHandle i1 = fitting_ideal_I1(data);
            std::int64_t lam_i1 =
                eng_.lengths().ring_quotient_length(i1).finite_value("R/I1(phi)");
            return lam_IQ - lam_i1;
        };

        std::int64_t rhs = rhs_for(nd);
        bool ok = lhs == rhs;
        if (!ok) {
            // Retry with the alternative lift of the splitting.
            NorthcottData alt = northcott_ideal(nd.a, nd.b, nd.n, nd.I.spec(), eng_.config(),
                                                /*alternative_split=*/true);
            std::int64_t rhs_alt = rhs_for(alt);
            if (lhs == rhs_alt) {
                rhs = rhs_alt;
                ok = true;
                v.note = append_note(v.note, "alternative split lift used");
            }
        }
        v.lhs = {lhs};
        v.rhs = {rhs};
        v.pass = ok;
    }

    void c9(Verdict& v) {
        v.relation = Relation::LE;
        if (!need_user_flag(v, inst_.hypotheses.aci, "almost complete intersection")) return;
        if (!ensure_reduction(v)) return;
        const int r = eng_.reduction_number();
        std::optional<int> n_cyclic;
        std::int64_t lam_IQ =
            quotient_length(eng_.lengths(), eng_.reduction(), eng_.ideal()).finite_value("I/Q");
        if (lam_IQ == 1) {
            n_cyclic = 1;
        } else {
            for (int n = 2; n <= std::max(2, r); ++n) {
                if (eng_.fiber_length(n - 1) == 1) {
                    n_cyclic = n;
                    break;
                }
            }
        }
        if (!need_computed(v, n_cyclic.has_value(), "no cyclic fiber component found")) return;
        std::vector<int> rs = eng_.sampled_reduction_numbers(eng_.config().reduction_samples);
        int r_min = rs.empty() ? r : *std::min_element(rs.begin(), rs.end());
        v.lhs = {r_min};
        v.rhs = {static_cast<std::int64_t>(*n_cyclic) * eng_.nu_m() - 1};
        v.pass = v.lhs[0] <= v.rhs[0];
        v.note = append_note(v.note, "cyclic component at n = " + std::to_string(*n_cyclic));
    }

    void c10(Verdict& v) {
        v.relation = Relation::LE;
        if (!need_user_flag(v, inst_.hypotheses.gorenstein, "Gorenstein")) return;
        if (!ensure_reduction(v)) return;
        std::int64_t lam_IQ =
            quotient_length(eng_.lengths(), eng_.reduction(), eng_.ideal()).finite_value("I/Q");
        if (!need_computed(v, lam_IQ == 2, "lambda(I/Q) != 2")) return;
        v.hypothesis_status = HypothesisStatus::ASSERTED_BY_USER;
        std::vector<int> rs = eng_.sampled_reduction_numbers(eng_.config().reduction_samples);
        int r_min = rs.empty() ? eng_.reduction_number() : *std::min_element(rs.begin(), rs.end());
        v.lhs = {first_fiber(), r_min};
        v.rhs = {1, 2 * static_cast<std::int64_t>(eng_.nu_m()) - 1};
        v.pass = v.lhs[0] == v.rhs[0] && v.lhs[1] <= v.rhs[1];
        v.note = append_note(v.note, "first component compares with =, second with <=");
    }

    void c11(Verdict& v) {
        v.relation = Relation::EQ;
        if (!need_user_flag(v, inst_.hypotheses.cm && inst_.hypotheses.aci,
                            "Cohen-Macaulay + almost complete intersection"))
            return;
        if (!ensure_reduction(v)) return;
        if (!need_computed(v, first_fiber() == 1, "lambda(I^2/QI) != 1")) return;
        v.hypothesis_status = HypothesisStatus::ASSERTED_BY_USER;
        v.lhs = {eng_.m_power_collapse(2) ? 1 : 0, eng_.m_power_collapse(3) ? 1 : 0};
        v.rhs = {1, 1};
        v.pass = v.lhs == v.rhs;
        v.note = append_note(v.note, "components are the n = 2, 3 collapse equalities");
    }

    void c12(Verdict& v) {
        v.relation = Relation::LE;
        if (!need_user_flag(v, inst_.hypotheses.cm && inst_.hypotheses.aci,
                            "Cohen-Macaulay + almost complete intersection"))
            return;
        if (!ensure_reduction(v)) return;
        if (!need_computed(v, first_fiber() == 1, "lambda(I^2/QI) != 1")) return;
        v.hypothesis_status = HypothesisStatus::ASSERTED_BY_USER;
        std::int64_t f0 = eng_.fiber_multiplicity();
        std::int64_t base = eng_.rossi_index_value();  // e1 - e0 + lambda + 1
        v.lhs = {f0};
        v.rhs = {base, base + 1};
        v.pass = base <= f0 && f0 <= base + 1;
        v.note = append_note(v.note, "window is [rhs[0], rhs[1]]");
    }

    void c13(Verdict& v) {
        v.relation = Relation::EQ;
        if (!need_user_flag(v, inst_.hypotheses.cm && inst_.hypotheses.aci,
                            "Cohen-Macaulay + almost complete intersection"))
            return;
        if (!ensure_reduction(v)) return;
        if (!need_computed(v, first_fiber() == 1, "lambda(I^2/QI) != 1")) return;
        v.hypothesis_status = HypothesisStatus::ASSERTED_BY_USER;
        std::int64_t f0 = eng_.fiber_multiplicity();
        std::int64_t r = eng_.reduction_number();
        v.lhs = {f0, f0};
        v.rhs = {r + 1, eng_.rossi_index_value() + 1};
        v.pass = f0 == r + 1 && f0 == v.rhs[1];
    }

    void c14(Verdict& v) {
        v.relation = Relation::EQ;
        if (!need_user_flag(v, inst_.hypotheses.buchsbaum && inst_.hypotheses.I_equals_IS,
                            "Buchsbaum + I = IS"))
            return;
        if (!need_computed(v, inst_.spec->declared_dimension() == 2, "dimension is not two"))
            return;
        v.hypothesis_status = HypothesisStatus::ASSERTED_BY_USER;
        if (!ensure_reduction(v)) return;
        std::int64_t s = eng_.sally_multiplicity();
        const auto& e = eng_.e_vector();
        const auto& eQ = eng_.eQ_vector();
        std::int64_t target = e[1] - e[0] + eng_.lambda_RI() - eQ[1];
        std::int64_t r = eng_.reduction_number();
        v.lhs = {s, r};
        v.rhs = {target, s + 1};
        v.pass = s == target && r <= s + 1;
        v.note = append_note(v.note, "first component compares with =, second with <=");
    }

    void c15(Verdict& v) {
        v.relation = Relation::LE;
        if (!ensure_reduction(v)) return;
        // H^0 computed as a saturation of the relations ideal.
        IdealHandle J(inst_.spec, inst_.spec->relations());
        IdealHandle Jsat = saturate_by_m(J, eng_.config().saturation_cap);
        bool depth_zero = !ideal_equal(Jsat, J);
        if (!need_computed(v, depth_zero, "H^0 is zero (positive depth)")) return;
        v.hypothesis_status = HypothesisStatus::SATISFIED;

        auto quotient_spec = make_ring_spec(inst_.spec->characteristic(), inst_.spec->variables(),
                                            Jsat.generators(), inst_.spec->declared_dimension());
        IdealHandle Ibar(quotient_spec, eng_.ideal().generators());
        IdealHandle Qbar(quotient_spec, eng_.reduction().generators());
        LengthEngine lengths_bar(quotient_spec, eng_.config());
        InvariantEngine eng_bar(lengths_bar, Ibar, Qbar);
        int r_bar = eng_bar.reduction_number();
        v.lhs = {eng_.reduction_number()};
        v.rhs = {r_bar + 1};
        v.pass = v.lhs[0] <= v.rhs[0];
    }

    void c16(Verdict& v) {
        v.relation = Relation::LE;
        if (!ensure_reduction(v)) return;
        std::int64_t s = eng_.sally_multiplicity();
        std::vector<std::int64_t> sally_sample =
            eng_.sally_lengths(std::max(2, eng_.reduction_number() + 1));
        if (!sally_dimension_hypothesis(v, s, sally_sample)) return;
        const auto& e = eng_.e_vector();
        const auto& eQ = eng_.eQ_vector();
        v.lhs = {s};
        v.rhs = {e[1] - eQ[1] - e[0] + eng_.lambda_RI()};
        v.pass = v.lhs[0] <= v.rhs[0];
    }

    void c17(Verdict& v) {
        v.relation = Relation::EQ;
        if (!need_user_flag(v, inst_.hypotheses.d_sequence, "d-sequence")) return;
        if (!ensure_reduction(v)) return;
        // I_1 of the syzygy matrix of Q is only available structurally:
        // for a two-generated parameter ideal of the plane the syzygy is
        // the Koszul relation, so I_1(phi) = Q and Q <= I holds.
        bool koszul_case = inst_.spec->relations().empty() && inst_.spec->nvars() == 2 &&
                           inst_.spec->declared_dimension() == 2;
        if (!koszul_case) {
            v.hypothesis_status = HypothesisStatus::UNKNOWN;
            v.note = append_note(v.note,
                                 "I_1(phi) of the reduction is not computable for this presentation");
            return;
        }
        v.hypothesis_status = HypothesisStatus::ASSERTED_BY_USER;
        std::int64_t s = eng_.sally_multiplicity();
        const auto& e = eng_.e_vector();
        const auto& eQ = eng_.eQ_vector();
        v.lhs = {s};
        v.rhs = {e[1] - eQ[1] - e[0] + eng_.lambda_RI()};
        v.pass = v.lhs == v.rhs;
    }
};

}  // namespace

std::vector<Verdict> run_checks(InvariantEngine& engine, const Instance& instance,
                                const std::vector<std::string>& check_ids) {
    CheckRunner runner(engine, instance);
    std::vector<Verdict> out;
    out.reserve(check_ids.size());
    for (const std::string& id : check_ids) out.push_back(runner.run(id));
    return out;
}

}  // namespace sally
