#pragma once

#include <map>
#include <optional>
#include <string>

#include "sallylab/invariants.hpp"
#include "sallylab/parse.hpp"

namespace sally {

// Direct-link data for Q = (a, b) inside (x, y^n) of the plane:
// a = a1*x + a2*y^n, b = b1*x + b2*y^n, c = a1*b2 - a2*b1 and
// I = Q : (x, y^n) = (a, b, c), with the syzygy column entries
// (-b1, -b2, a1, a2, -y^n, x).
struct NorthcottData {
    Polynomial a, b;
    int n = 0;
    Polynomial a1, a2, b1, b2, c;
    IdealHandle Q, I;
    std::vector<Polynomial> phi_entries;
    bool proper = true;        // false when I = (1)
    bool q_in_m_pow_n1 = true; // Q inside m^{n+1}
    bool q_m_primary = true;   // Q locally m-primary
};

// Canonical split of f in (x, y^n): monomials containing x go to f1
// (divided by x), pure y-monomials of degree >= n go to f2 (divided by
// y^n).  Throws when f is not in (x, y^n).
std::pair<Polynomial, Polynomial> split_in_x_yn(const Polynomial& f, int n);
// Alternative lift: monomials divisible by y^n go to f2 even when they
// also contain x.
std::pair<Polynomial, Polynomial> split_in_x_yn_alt(const Polynomial& f, int n);

NorthcottData northcott_ideal(const Polynomial& a, const Polynomial& b, int n,
                              const RingSpecPtr& spec, const EngineConfig& cfg = {},
                              bool alternative_split = false);

// Ideal of entries of the syzygy column: (x, y^n, a1, a2, b1, b2).
IdealHandle fitting_ideal_I1(const NorthcottData& data);

// Ring-theoretic properties the engine does not decide; supplied by the
// user (or by the catalog, where justified) and echoed in verdicts.
struct HypothesisFlags {
    bool cm = false;
    bool gorenstein = false;
    bool buchsbaum = false;
    bool aci = false;
    bool d_sequence = false;
    bool I_equals_IS = false;
};

struct ExpectedValue {
    std::string name;
    std::int64_t value;
    std::string note;
};

struct CatalogInstance {
    std::string id;
    RingSpecPtr spec;
    IdealHandle I;
    std::optional<IdealHandle> Q;
    HypothesisFlags hypotheses;
    std::map<std::string, std::int64_t> params;
    std::vector<ExpectedValue> expected;
    std::optional<IdealHandle> expected_I1;
    std::optional<NorthcottData> northcott;
};

std::vector<std::string> catalog_ids();
CatalogInstance catalog(const std::string& id,
                        const std::map<std::string, std::int64_t>& params = {},
                        std::int64_t characteristic = kDefaultPrime,
                        const EngineConfig& cfg = {});

enum class Integrality { YES, NO_UP_TO_CAP };
struct IntegralityResult {
    Integrality status = Integrality::NO_UP_TO_CAP;
    int r = -1;  // witness reduction number when YES
};

// Semi-decision through the reduction search: YES(r) when I^{r+1} = Q I^r
// within the cap, NO_UP_TO_CAP otherwise.
IntegralityResult is_integral_over(const IdealHandle& I, const IdealHandle& Q, int cap,
                                   const EngineConfig& cfg = {});

}  // namespace sally
