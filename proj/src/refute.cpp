#include "parrondo/refute.hpp"

namespace parrondo::refute {

namespace {

Parity parity_of(std::int64_t capital) noexcept {
    return residue(capital, 2) == 1 ? Parity::Odd : Parity::Even;
}

} // namespace

std::string to_string(Parity p) {
    switch (p) {
    case Parity::Odd: return "Odd";
    case Parity::Even: return "Even";
    case Parity::None: return "None";
    }
    return "?";
}

std::int64_t simple_step(const SimpleGameRule& rule, std::int64_t capital) noexcept {
    return capital + rule.delta_for(capital);
}

std::vector<std::int64_t> simple_trace(const SimpleGameRule& rule, std::int64_t start, int steps) {
    if (steps < 0) {
        throw ArgumentError("number of steps must be non-negative");
    }
    std::vector<std::int64_t> trace{start};
    for (int i = 0; i < steps; ++i) {
        trace.push_back(simple_step(rule, trace.back()));
    }
    return trace;
}

Absorption parity_absorption(const SimpleGameRule& rule, std::int64_t start) {
    std::int64_t capital = start;
    for (int steps = 0; steps <= kAbsorptionScanLimit; ++steps) {
        const std::int64_t delta = rule.delta_for(capital);
        if (residue(delta, 2) == 0) {
            return {steps, parity_of(capital), delta};
        }
        capital += delta;
    }
    return {kAbsorptionScanLimit, Parity::None, 0};
}

engine::EnsembleStats simulate_simple_compound(double gamma, int t_max, int trials, std::uint64_t seed,
                                               unsigned threads) {
    check_gamma(gamma);
    const Probability pick_a(gamma);
    return engine::run_trials(t_max, trials, seed, threads,
                              [pick_a](engine::RngStream& rng, std::span<std::int64_t> out) {
                                  std::int64_t capital = 0;
                                  out[0] = capital;
                                  for (std::size_t t = 1; t < out.size(); ++t) {
                                      const auto& rule = rng.bernoulli(pick_a) ? kSimpleGameA : kSimpleGameB;
                                      capital = simple_step(rule, capital);
                                      out[t] = capital;
                                  }
                              });
}

} // namespace parrondo::refute
