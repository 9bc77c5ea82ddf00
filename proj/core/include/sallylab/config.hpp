#pragma once

#include <cstdint>

namespace sally {

inline constexpr std::int64_t kDefaultPrime = 32003;

// Knobs shared by the length engine and the invariant pipelines.
// All routines are deterministic functions of (inputs, config, seed).
struct EngineConfig {
    std::uint64_t seed = 0;

    // Truncation schedule for local lengths: N starts at
    // 2*(max generator degree)+2, advances by trunc_step, and a value is
    // accepted once trunc_consecutive schedule points agree.  trunc_cap
    // bounds how far N may grow past its starting point.
    int trunc_step = 4;
    int trunc_consecutive = 3;
    int trunc_cap = 80;

    // Reduction-number search.
    int red_cap = 12;
    int reduction_retries = 5;
    int reduction_samples = 3;

    // Hilbert table length; extended once to table_nmax_ext when a
    // polynomial tail cannot be certified.
    int table_nmax = 12;
    int table_nmax_ext = 24;

    int integral_cap = 12;
    int saturation_cap = 64;
};

}  // namespace sally
