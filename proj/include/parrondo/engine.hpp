#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "parrondo/model.hpp"

namespace parrondo::engine {

/// Counter-based random stream keyed by (seed, stream_id). The k-th draw is
/// a pure function of the key and k, so a trial replays identically no
/// matter which thread runs it.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept;

    std::uint64_t next_u64() noexcept;
    /// Uniform in [0, 1) with 53 random bits.
    double next_unit() noexcept;
    bool bernoulli(Probability p) noexcept { return next_unit() < p.value(); }

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
    [[nodiscard]] std::uint64_t stream_id() const noexcept { return stream_id_; }
    [[nodiscard]] std::uint64_t draws() const noexcept { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// How a trial's hidden starting capital is chosen. Trajectories are always
/// reported relative to it, so capitals[0] == 0.
enum class StartPolicy {
    /// Capital starts at 0, i.e. in scenario 1 of a capital game.
    Zero,
    /// For capital-dependent games the starting residue mod m is drawn from
    /// the stationary distribution of the chain being played, so the
    /// expected capital after t plays is exactly t times the drift.
    StationaryResidue,
};

struct StepResult {
    PlayerState state;
    Outcome outcome;
};

/// One play. Compound games draw the game selector first, then the outcome.
/// Throws StateError when a history game is played without a history.
StepResult step(const GameSpec& game, const PlayerState& state, RngStream& rng);

struct Trajectory {
    std::vector<std::int64_t> capitals;
};

Trajectory simulate_trajectory(const GameSpec& game, int t_max, RngStream& rng,
                               StartPolicy start = StartPolicy::StationaryResidue);

struct EnsembleStats {
    std::vector<double> mean;
    std::vector<double> standard_error;
    int trials = 0;
    int t_max = 0;

    friend bool operator==(const EnsembleStats&, const EnsembleStats&) = default;
};

struct EnsembleOptions {
    StartPolicy start = StartPolicy::StationaryResidue;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/// Fills capitals[0..t_max] for one trial.
using TrialFn = std::function<void(RngStream&, std::span<std::int64_t>)>;

/// Runs `trials` trials, trial k on stream (seed, k), and reduces exact
/// integer sums per step, so the result does not depend on thread count or
/// scheduling.
EnsembleStats run_trials(int t_max, int trials, std::uint64_t seed, unsigned threads,
                         const TrialFn& trial);

EnsembleStats run_ensemble(const GameSpec& game, int t_max, int trials, std::uint64_t seed,
                           const EnsembleOptions& options = {});

} // namespace parrondo::engine
