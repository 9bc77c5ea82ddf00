#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sallylab/config.hpp"
#include "sallylab/gb_cache.hpp"
#include "sallylab/polynomial.hpp"

namespace sally {

// Presentation of the local ring R = (k[x_1..x_v]/J) localized at the
// ideal of the variables.  The relations J live in the ambient polynomial
// ring; every downstream length computation adjoins them.
class RingSpec {
public:
    RingSpec(std::int64_t characteristic, std::vector<std::string> variables,
             std::vector<Polynomial> relations, int declared_dimension);

    std::int64_t characteristic() const { return characteristic_; }
    const std::vector<std::string>& variables() const { return variables_; }
    std::size_t nvars() const { return variables_.size(); }
    const std::vector<Polynomial>& relations() const { return relations_; }
    int declared_dimension() const { return declared_dimension_; }

    std::optional<std::size_t> var_index(const std::string& name) const;

    Coefficient one() const { return Coefficient::one(characteristic_); }
    Polynomial zero_poly(MonomialOrder ord = MonomialOrder::degrevlex()) const {
        return Polynomial::zero(nvars(), characteristic_, ord);
    }

    // Reduced basis of the relations ideal; filled lazily by the
    // groebner module, shared by every user of this spec.
    const GbCache& relations_cache() const { return relations_gb_; }

    bool same_ring(const RingSpec& other) const;

private:
    std::int64_t characteristic_;
    std::vector<std::string> variables_;
    std::vector<Polynomial> relations_;
    int declared_dimension_;
    GbCache relations_gb_;
};

using RingSpecPtr = std::shared_ptr<const RingSpec>;

RingSpecPtr make_ring_spec(std::int64_t characteristic, std::vector<std::string> variables,
                           std::vector<Polynomial> relations = {}, int declared_dimension = 0);

}  // namespace sally
