#include "sallylab/constructions.hpp"

#include <algorithm>

namespace sally {

namespace {

std::pair<Polynomial, Polynomial> split_impl(const Polynomial& f, int n, bool prefer_yn) {
    if (f.nvars() != 2) throw error("the (x, y^n) split needs a two-variable ring");
    if (n < 1) throw error("split exponent must be positive");
    std::vector<Term> f1, f2;
    const Monomial x = Monomial::variable(0, 2);
    const Monomial yn = Monomial::variable(1, 2, n);
    for (const Term& t : f.terms()) {
        const bool has_x = t.mono.exponent(0) > 0;
        const bool has_yn = t.mono.exponent(1) >= n;
        if (!has_x && !has_yn)
            throw error("polynomial is not in (x, y^" + std::to_string(n) + ")");
        const bool to_f2 = prefer_yn ? has_yn : !has_x;
        if (to_f2) {
            f2.push_back(Term{t.coeff, yn.divide_into(t.mono)});
        } else {
            f1.push_back(Term{t.coeff, x.divide_into(t.mono)});
        }
    }
    return {Polynomial::from_terms(std::move(f1), 2, f.characteristic(), f.order()),
            Polynomial::from_terms(std::move(f2), 2, f.characteristic(), f.order())};
}

}  // namespace

std::pair<Polynomial, Polynomial> split_in_x_yn(const Polynomial& f, int n) {
    return split_impl(f, n, false);
}

std::pair<Polynomial, Polynomial> split_in_x_yn_alt(const Polynomial& f, int n) {
    return split_impl(f, n, true);
}

NorthcottData northcott_ideal(const Polynomial& a, const Polynomial& b, int n,
                              const RingSpecPtr& spec, const EngineConfig& cfg,
                              bool alternative_split) {
    if (spec->nvars() != 2) throw error("Northcott construction needs the plane k[x,y]");
    if (!spec->relations().empty())
        throw error("Northcott construction expects a polynomial ring without relations");
    if (n < 2) throw error("Northcott construction needs n >= 2");

    auto [a1, a2] = alternative_split ? split_in_x_yn_alt(a, n) : split_in_x_yn(a, n);
    auto [b1, b2] = alternative_split ? split_in_x_yn_alt(b, n) : split_in_x_yn(b, n);
    Polynomial c = a1 * b2 - a2 * b1;

    const Polynomial x = Polynomial::term(spec->one(), Monomial::variable(0, 2));
    const Polynomial yn = Polynomial::term(spec->one(), Monomial::variable(1, 2, n));

    // The split must reconstruct the inputs exactly.
    if (a1 * x + a2 * yn != a || b1 * x + b2 * yn != b)
        throw computation_error("split reconstruction identity failed");

    NorthcottData data{a,
                       b,
                       n,
                       a1,
                       a2,
                       b1,
                       b2,
                       c,
                       IdealHandle(spec, {a, b}),
                       IdealHandle(spec, {a, b, c}),
                       {-b1, -b2, a1, a2, -yn, x}};

    IdealHandle L(spec, {x, yn});
    IdealHandle link = colon(data.Q, L);
    if (!ideal_equal(data.I, link))
        throw computation_error("Northcott cross-check failed: (a,b,c) differs from Q:(x,y^n)");

    data.proper = !contains(data.I, Polynomial::constant(spec->one(), 2));
    data.q_in_m_pow_n1 = a.min_term_degree() >= n + 1 && b.min_term_degree() >= n + 1;
    data.q_m_primary = is_locally_m_primary(data.Q, cfg);
    return data;
}

IdealHandle fitting_ideal_I1(const NorthcottData& data) {
    const RingSpecPtr& spec = data.I.spec();
    std::vector<Polynomial> gens;
    for (const Polynomial& e : data.phi_entries)
        if (!e.is_zero()) gens.push_back(e.monic());
    return IdealHandle(spec, std::move(gens));
}

std::vector<std::string> catalog_ids() {
    return {"ex2.7", "ex3.2.1", "ex3.2.2", "ex3.2.3", "ex3.2.4", "ex4.6"};
}

namespace {

CatalogInstance make_ex27(std::int64_t characteristic, const EngineConfig& cfg) {
    auto spec = make_ring_spec(characteristic, {"x", "y"}, {}, 2);
    Polynomial a = parse_poly("x^4 + y^5", *spec);
    Polynomial b = parse_poly("x^2*y^2 + x*y^3", *spec);
    NorthcottData nd = northcott_ideal(a, b, 3, spec, cfg);

    CatalogInstance inst{"ex2.7",
                         spec,
                         nd.I,
                         nd.Q,
                         HypothesisFlags{true, true, false, true, true, false},
                         {},
                         {{"lambda(I/Q)", 3, "colength of the link over its parameter ideal"},
                          {"lambda(I^2/QI)", 1, "first Sally fiber of the link"},
                          {"r_Q", 2, "reduction number of the link"}},
                         IdealHandle(spec, parse_polys({"x", "y^2"}, *spec)),
                         std::move(nd)};
    return inst;
}

CatalogInstance make_ex32(int case_no, std::int64_t characteristic, const EngineConfig&) {
    auto spec = make_ring_spec(characteristic, {"x", "y"}, {}, 2);
    IdealHandle Q(spec, parse_polys({"x^5 + y^6", "x*y^5 + y^7"}, *spec));
    const int xpow = case_no + 1;
    IdealHandle L(spec, parse_polys({"x^" + std::to_string(xpow), "y"}, *spec));
    IdealHandle I = colon(Q, L);

    CatalogInstance inst;
    inst.id = "ex3.2." + std::to_string(case_no);
    inst.spec = spec;
    inst.I = I;
    inst.Q = Q;
    inst.hypotheses = HypothesisFlags{true, true, false, case_no != 4, true, false};
    switch (case_no) {
        case 1:
            inst.expected = {{"r_Q", 1, "the square of the link already collapses"}};
            break;
        case 2:
            inst.expected = {{"lambda(I^2/QI)", 1, "cyclic first fiber"},
                             {"r_Q", 2, "reduction number of the link"}};
            break;
        case 3:
            inst.expected = {{"lambda(I^2/QI)", 3, "first fiber length"},
                             {"lambda(I^3/QI^2)", 2, "second fiber length"},
                             {"lambda(I^4/QI^3)", 1, "third fiber length"},
                             {"r_Q", 5, "reduction number of the link"}};
            break;
        case 4:
            inst.expected = {{"nu(I)", 2, "the link is a complete intersection"},
                             {"integral_over_Q", 0, "not integral over Q within the cap"}};
            break;
        default:
            throw error("unknown case for the direct-link family");
    }
    return inst;
}

CatalogInstance make_ex46(std::int64_t q, std::int64_t characteristic, const EngineConfig&) {
    if (q < 1) throw error("the two-plane family needs a parameter q >= 1");
    std::vector<std::string> vars{"x", "y", "z", "w"};
    auto ambient = make_ring_spec(characteristic, vars, {}, 2);
    IdealHandle P1(ambient, parse_polys({"x", "y"}, *ambient));
    IdealHandle P2(ambient, parse_polys({"z", "w"}, *ambient));
    IdealHandle J = intersect(P1, P2);
    auto spec = make_ring_spec(characteristic, vars, J.generators(), 2);

    std::vector<Polynomial> igens =
        parse_polys({"x^4", "x^3*y", "x*y^3", "y^4"}, *spec);
    IdealHandle zw(spec, parse_polys({"z", "w"}, *spec));
    IdealHandle zwq = ideal_power(zw, static_cast<int>(q));
    for (const Polynomial& g : zwq.generators()) igens.push_back(g);

    const std::string qs = std::to_string(q);
    IdealHandle Q(spec, parse_polys({"x^4 - z^" + qs, "y^4 - w^" + qs}, *spec));

    CatalogInstance inst;
    inst.id = "ex4.6";
    inst.spec = spec;
    inst.I = IdealHandle(spec, std::move(igens));
    inst.Q = Q;
    inst.hypotheses = HypothesisFlags{false, false, true, false, true, true};
    inst.params = {{"q", q}};
    inst.expected = {
        {"e0", q * q + 16, "multiplicity of the two-plane family"},
        {"e1", (q * q - q + 12) / 2, "first Hilbert coefficient"},
        {"lambda(R/I)", (q * q + q + 20) / 2, "colength of I"},
        {"e1(Q)", -1, "first coefficient of any parameter ideal here"},
        {"r_Q", 2, "reduction number"},
        {"s_Q", 1, "Sally multiplicity"},
    };
    return inst;
}

}  // namespace

CatalogInstance catalog(const std::string& id, const std::map<std::string, std::int64_t>& params,
                        std::int64_t characteristic, const EngineConfig& cfg) {
    for (const auto& [key, value] : params) {
        if (key != "q") throw error("unknown catalog parameter '" + key + "'");
        (void)value;
    }
    if (id == "ex2.7") return make_ex27(characteristic, cfg);
    if (id == "ex3.2.1") return make_ex32(1, characteristic, cfg);
    if (id == "ex3.2.2") return make_ex32(2, characteristic, cfg);
    if (id == "ex3.2.3") return make_ex32(3, characteristic, cfg);
    if (id == "ex3.2.4") return make_ex32(4, characteristic, cfg);
    if (id == "ex4.6") {
        auto it = params.find("q");
        if (it == params.end())
            throw error("catalog id 'ex4.6' needs a parameter q >= 1 (use --param q=VALUE)");
        return make_ex46(it->second, characteristic, cfg);
    }
    throw error("unknown catalog id '" + id + "'");
}

IntegralityResult is_integral_over(const IdealHandle& I, const IdealHandle& Q, int cap,
                                   const EngineConfig& cfg) {
    std::optional<int> r = is_reduction(I, Q, cap, cfg);
    if (r) return IntegralityResult{Integrality::YES, *r};
    return IntegralityResult{Integrality::NO_UP_TO_CAP, -1};
}

}  // namespace sally
