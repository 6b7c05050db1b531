#pragma once

#include <cstdint>
#include <vector>

#include "parrondo/engine.hpp"
#include "parrondo/model.hpp"

namespace parrondo::refute {

/// Loses $2 on odd capital, $1 on even capital.
inline constexpr SimpleGameRule kSimpleGameA{-2, -1};
/// Gains $6 on odd capital, loses $7 on even capital.
inline constexpr SimpleGameRule kSimpleGameB{6, -7};

enum class Parity { Odd, Even, None };

std::string to_string(Parity p);

std::int64_t simple_step(const SimpleGameRule& rule, std::int64_t capital) noexcept;

/// start, then `steps` successive capitals.
std::vector<std::int64_t> simple_trace(const SimpleGameRule& rule, std::int64_t start, int steps);

struct Absorption {
    int steps_to_absorb = 0;
    Parity absorbed_parity = Parity::None;
    std::int64_t post_absorption_delta = 0;

    friend bool operator==(const Absorption&, const Absorption&) = default;
};

inline constexpr int kAbsorptionScanLimit = 100;

/// Iterates the rule until the current parity can no longer change (its
/// delta is even). Reports Parity::None if that does not happen within
/// kAbsorptionScanLimit steps.
Absorption parity_absorption(const SimpleGameRule& rule, std::int64_t start);

/// Each step plays simple game A with probability gamma (one draw per step,
/// also for gamma 0 or 1), otherwise simple game B, starting from capital 0.
engine::EnsembleStats simulate_simple_compound(double gamma, int t_max, int trials, std::uint64_t seed,
                                               unsigned threads = 0);

} // namespace parrondo::refute
