#include "sallylab/ideal.hpp"

namespace sally {

IdealHandle::IdealHandle(RingSpecPtr spec, std::vector<Polynomial> generators)
    : spec_(std::move(spec)), gens_(std::move(generators)) {
    if (!spec_) throw error("ideal needs a ring spec");
    for (const Polynomial& g : gens_) {
        if (g.nvars() != spec_->nvars() || g.characteristic() != spec_->characteristic())
            throw ring_mismatch_error("generator from a different ring");
    }
}

bool IdealHandle::is_zero_ideal() const {
    for (const Polynomial& g : gens_)
        if (!g.is_zero()) return false;
    return true;
}

void require_same_spec(const IdealHandle& a, const IdealHandle& b) {
    if (!a.spec()->same_ring(*b.spec()))
        throw ring_mismatch_error("ideals live in different rings");
}

}  // namespace sally
