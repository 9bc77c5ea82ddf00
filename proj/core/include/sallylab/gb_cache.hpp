#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "sallylab/monomial.hpp"
#include "sallylab/polynomial.hpp"

namespace sally {

using BasisPtr = std::shared_ptr<const std::vector<Polynomial>>;

// Write-once-per-key map from monomial order to a reduced basis.
// Concurrent duplicate computation is allowed; the first stored result wins.
class GbCache {
public:
    GbCache() = default;
    GbCache(const GbCache& other) {
        std::lock_guard<std::mutex> lk(other.mu_);
        map_ = other.map_;
    }
    GbCache& operator=(const GbCache& other) {
        if (this != &other) {
            auto snapshot = [&] {
                std::lock_guard<std::mutex> lk(other.mu_);
                return other.map_;
            }();
            std::lock_guard<std::mutex> lk(mu_);
            map_ = std::move(snapshot);
        }
        return *this;
    }

    BasisPtr get_or_compute(const MonomialOrder& ord,
                            const std::function<std::vector<Polynomial>()>& compute) const {
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = map_.find(ord);
            if (it != map_.end()) return it->second;
        }
        auto basis = std::make_shared<const std::vector<Polynomial>>(compute());
        std::lock_guard<std::mutex> lk(mu_);
        auto [it, inserted] = map_.emplace(ord, basis);
        return it->second;
    }

private:
    mutable std::mutex mu_;
    mutable std::map<MonomialOrder, BasisPtr> map_;
};

}  // namespace sally
