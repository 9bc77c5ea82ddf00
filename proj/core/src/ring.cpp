#include "sallylab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace sally {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

RingSpec::RingSpec(std::int64_t characteristic, std::vector<std::string> variables,
                   std::vector<Polynomial> relations, int declared_dimension)
    : characteristic_(characteristic),
      variables_(std::move(variables)),
      relations_(std::move(relations)),
      declared_dimension_(declared_dimension) {
    if (characteristic_ < 0) throw error("characteristic must be a prime or 0");
    if (variables_.empty()) throw error("a ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : variables_) {
        if (!valid_identifier(v)) throw error("bad variable name '" + v + "'");
        if (!seen.insert(v).second) throw error("duplicate variable '" + v + "'");
    }
    for (const Polynomial& f : relations_) {
        if (f.nvars() != nvars() || f.characteristic() != characteristic_)
            throw ring_mismatch_error("relation polynomial from a different ring");
        if (f.is_constant() && !f.is_zero())
            throw error("relations ideal is not proper");
    }
    if (declared_dimension_ < 1) throw error("declared dimension must be >= 1");
}

std::optional<std::size_t> RingSpec::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == name) return i;
    return std::nullopt;
}

bool RingSpec::same_ring(const RingSpec& other) const {
    if (this == &other) return true;
    if (characteristic_ != other.characteristic_ || variables_ != other.variables_) return false;
    if (relations_.size() != other.relations_.size()) return false;
    for (std::size_t i = 0; i < relations_.size(); ++i)
        if (relations_[i] != other.relations_[i]) return false;
    return true;
}

RingSpecPtr make_ring_spec(std::int64_t characteristic, std::vector<std::string> variables,
                           std::vector<Polynomial> relations, int declared_dimension) {
    if (declared_dimension == 0)
        declared_dimension = static_cast<int>(variables.size());
    return std::make_shared<const RingSpec>(characteristic, std::move(variables),
                                            std::move(relations), declared_dimension);
}

}  // namespace sally
