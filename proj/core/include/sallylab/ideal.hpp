#pragma once

#include <memory>
#include <vector>

#include "sallylab/ring.hpp"

namespace sally {

// Generator list plus a cached reduced basis per monomial order.
// Generators may contain zeros (ignored by the basis computation) and may
// be redundant; semantics are always up to ideal equality.
class IdealHandle {
public:
    IdealHandle(RingSpecPtr spec, std::vector<Polynomial> generators);

    const RingSpecPtr& spec() const { return spec_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const;

    // Reduced basis for the order; computed on first use.  Defined in
    // groebner.cpp.
    BasisPtr basis(const MonomialOrder& ord) const;

private:
    RingSpecPtr spec_;
    std::vector<Polynomial> gens_;
    GbCache cache_;
};

void require_same_spec(const IdealHandle& a, const IdealHandle& b);

}  // namespace sally
