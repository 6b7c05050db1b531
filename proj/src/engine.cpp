#include "parrondo/engine.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "parrondo/analysis.hpp"

namespace parrondo::engine {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

__extension__ using Int128 = __int128;

const HistoryGameB* history_part(const GameSpec& game) noexcept {
    if (const auto* h = std::get_if<HistoryGameB>(&game)) {
        return h;
    }
    if (const auto* c = std::get_if<CompoundGame>(&game)) {
        return std::get_if<HistoryGameB>(&c->b);
    }
    return nullptr;
}

std::optional<CapitalGameB> capital_part(const GameSpec& game) {
    if (const auto* b = std::get_if<CapitalGameB>(&game)) {
        return *b;
    }
    if (const auto* c = std::get_if<CompoundGame>(&game); c && std::holds_alternative<CapitalGameB>(c->b)) {
        return c->as_capital_game();
    }
    return std::nullopt;
}

Probability history_probability(const HistoryGameB& g, const PlayerState& s) {
    if (!s.history) {
        throw StateError("history-dependent game played before two outcomes are known");
    }
    return g.for_history(*s.history);
}

// Plays one game repeatedly from a start state chosen per StartPolicy.
class Player {
public:
    Player(const GameSpec& game, StartPolicy start) : game_(game), history_(history_part(game)) {
        if (start != StartPolicy::StationaryResidue) {
            return;
        }
        const auto cap = capital_part(game);
        if (!cap) {
            return;
        }
        try {
            const auto pi = analysis::stationary_distribution(analysis::ModMChain::of(*cap));
            double acc = 0.0;
            for (double w : pi) {
                acc += std::max(w, 0.0);
                residue_cdf_.push_back(acc);
            }
        } catch (const DegenerateChainError&) {
            // Reducible chain: no unique stationary law, fall back to capital 0.
            residue_cdf_.clear();
        }
    }

    void run(RngStream& rng, std::span<std::int64_t> out) const {
        PlayerState state;
        if (!residue_cdf_.empty()) {
            const double u = rng.next_unit() * residue_cdf_.back();
            const auto it = std::upper_bound(residue_cdf_.begin(), residue_cdf_.end(), u);
            state.capital = std::min<std::int64_t>(it - residue_cdf_.begin(),
                                                   static_cast<std::int64_t>(residue_cdf_.size()) - 1);
        }
        if (history_ != nullptr) {
            if (history_->initial_history) {
                state.history = history_->initial_history;
            } else {
                const auto idx = std::min<std::size_t>(static_cast<std::size_t>(rng.next_unit() * 4.0), 3);
                state.history = History::from_index(idx);
            }
        }
        const std::int64_t origin = state.capital;
        out[0] = 0;
        for (std::size_t t = 1; t < out.size(); ++t) {
            state = step(game_, state, rng).state;
            out[t] = state.capital - origin;
        }
    }

private:
    const GameSpec& game_;
    const HistoryGameB* history_;
    std::vector<double> residue_cdf_;
};

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
    : seed_(seed), stream_id_(stream_id), key_(mix64(seed ^ mix64(stream_id + kGolden))) {}

std::uint64_t RngStream::next_u64() noexcept {
    ++counter_;
    return mix64(key_ + counter_ * kGolden);
}

double RngStream::next_unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

StepResult step(const GameSpec& game, const PlayerState& state, RngStream& rng) {
    const auto win_probability = [&](const auto& self, const auto& g) -> std::optional<Probability> {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, GameA>) {
            return g.p1;
        } else if constexpr (std::is_same_v<G, CapitalGameB>) {
            return g.for_capital(state.capital);
        } else if constexpr (std::is_same_v<G, HistoryGameB>) {
            return history_probability(g, state);
        } else if constexpr (std::is_same_v<G, CompoundGame>) {
            if (rng.bernoulli(Probability(g.gamma))) {
                return g.a.p1;
            }
            return std::visit([&](const auto& b) { return self(self, b); }, g.b);
        } else {
            return std::nullopt;
        }
    };

    StepResult result{state, Outcome::Lose};
    const auto p = std::visit([&](const auto& g) { return win_probability(win_probability, g); }, game);
    std::int64_t delta = 0;
    if (p) {
        result.outcome = rng.bernoulli(*p) ? Outcome::Win : Outcome::Lose;
        delta = result.outcome == Outcome::Win ? 1 : -1;
    } else {
        delta = std::get<SimpleDeterministicGame>(game).rule.delta_for(state.capital);
        result.outcome = delta > 0 ? Outcome::Win : Outcome::Lose;
    }
    result.state.capital += delta;
    result.state.t += 1;
    if (result.state.history) {
        result.state.history = result.state.history->push(result.outcome);
    }
    return result;
}

Trajectory simulate_trajectory(const GameSpec& game, int t_max, RngStream& rng, StartPolicy start) {
    if (t_max < 0) {
        throw ArgumentError("t_max must be non-negative");
    }
    Trajectory tr;
    tr.capitals.resize(static_cast<std::size_t>(t_max) + 1);
    Player(game, start).run(rng, tr.capitals);
    return tr;
}

EnsembleStats run_trials(int t_max, int trials, std::uint64_t seed, unsigned threads,
                         const TrialFn& trial) {
    if (trials < 1) {
        throw ArgumentError("trials must be at least 1");
    }
    if (t_max < 0) {
        throw ArgumentError("t_max must be non-negative");
    }
    const auto steps = static_cast<std::size_t>(t_max) + 1;
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, static_cast<unsigned>(trials));

    struct Partial {
        std::vector<std::int64_t> sum;
        std::vector<std::int64_t> sum_sq;
        std::exception_ptr error;
    };
    std::vector<Partial> partials(threads);

    const auto work = [&](unsigned w) {
        auto& part = partials[w];
        try {
            part.sum.assign(steps, 0);
            part.sum_sq.assign(steps, 0);
            std::vector<std::int64_t> capitals(steps);
            const auto begin = static_cast<std::int64_t>(trials) * w / threads;
            const auto end = static_cast<std::int64_t>(trials) * (w + 1) / threads;
            for (auto k = begin; k < end; ++k) {
                RngStream rng(seed, static_cast<std::uint64_t>(k));
                trial(rng, capitals);
                for (std::size_t t = 0; t < steps; ++t) {
                    part.sum[t] += capitals[t];
                    part.sum_sq[t] += capitals[t] * capitals[t];
                }
            }
        } catch (...) {
            part.error = std::current_exception();
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back(work, w);
        }
    }

    std::vector<std::int64_t> sum(steps, 0);
    std::vector<std::int64_t> sum_sq(steps, 0);
    for (const auto& part : partials) {
        if (part.error) {
            std::rethrow_exception(part.error);
        }
        for (std::size_t t = 0; t < steps; ++t) {
            sum[t] += part.sum[t];
            sum_sq[t] += part.sum_sq[t];
        }
    }

    EnsembleStats stats;
    stats.trials = trials;
    stats.t_max = t_max;
    stats.mean.resize(steps);
    stats.standard_error.resize(steps);
    const auto n = static_cast<Int128>(trials);
    for (std::size_t t = 0; t < steps; ++t) {
        stats.mean[t] = static_cast<double>(sum[t]) / static_cast<double>(trials);
        if (trials < 2) {
            stats.standard_error[t] = 0.0;
            continue;
        }
        // n * sum_sq - sum^2 = n (n - 1) * sample variance, exact in integers.
        const Int128 scaled = n * sum_sq[t] - static_cast<Int128>(sum[t]) * sum[t];
        const double variance = static_cast<double>(scaled) / (static_cast<double>(trials) * (trials - 1.0));
        stats.standard_error[t] = std::sqrt(variance / trials);
    }
    return stats;
}

EnsembleStats run_ensemble(const GameSpec& game, int t_max, int trials, std::uint64_t seed,
                           const EnsembleOptions& options) {
    const Player player(game, options.start);
    return run_trials(t_max, trials, seed, options.threads,
                      [&player](RngStream& rng, std::span<std::int64_t> out) { player.run(rng, out); });
}

} // namespace parrondo::engine
