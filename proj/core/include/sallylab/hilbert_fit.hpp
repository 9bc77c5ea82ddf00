#pragma once

#include <cstdint>
#include <vector>

#include "sallylab/errors.hpp"

namespace sally {

std::int64_t binomial(std::int64_t n, int k);

// Value of sum_i (-1)^i c_i * C(n + d - i, d - i) at n.
std::int64_t eval_binomial_form(const std::vector<std::int64_t>& coeffs, std::int64_t n);

// Exact fit of the trailing entries of `table` (table[k] is the value at
// n = first_n + k) by a degree-d polynomial written in the alternating
// binomial basis above.  The last d+1 points determine the candidate and
// the last d+3 must be reproduced exactly, otherwise computation_error.
// Returns (c_0, ..., c_d).
std::vector<std::int64_t> fit_binomial_tail(const std::vector<std::int64_t>& table, int first_n,
                                            int d);

}  // namespace sally
