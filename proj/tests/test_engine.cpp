#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "parrondo/analysis.hpp"
#include "parrondo/engine.hpp"

using namespace parrondo;
using namespace parrondo::engine;
using doctest::Approx;

namespace {

bool within_sigmas(double value, double target, double standard_error, double k = 4.0) {
    return std::abs(value - target) <= k * standard_error;
}

} // namespace

TEST_CASE("RngStream is a pure function of (seed, stream, draw)") {
    RngStream a(42, 7);
    RngStream b(42, 7);
    RngStream c(42, 8);
    RngStream d(43, 7);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 1000; ++i) {
        const auto x = a.next_u64();
        CHECK(x == b.next_u64());
        seen.insert(x);
        seen.insert(c.next_u64());
        seen.insert(d.next_u64());
    }
    CHECK(seen.size() == 3000);
    CHECK(a.draws() == 1000);

    RngStream u(1, 1);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double x = u.next_unit();
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
        sum += x;
    }
    CHECK(sum / 100000 == Approx(0.5).epsilon(0.01));
}

TEST_CASE("step picks the scenario from the non-negative residue") {
    // p2 = 1 and p3 = 0 reveal the scenario through the outcome.
    const CapitalGameB probe(Probability(1.0), Probability(0.0), 3);
    RngStream rng(0, 0);
    SUBCASE("capital 6 -> scenario 1") {
        const auto r = step(probe, PlayerState{6, 0, {}}, rng);
        CHECK(r.outcome == Outcome::Win);
        CHECK(r.state.capital == 7);
        CHECK(r.state.t == 1);
    }
    SUBCASE("capital -2 -> scenario 2") {
        const auto r = step(probe, PlayerState{-2, 0, {}}, rng);
        CHECK(r.outcome == Outcome::Lose);
        CHECK(r.state.capital == -3);
    }
    SUBCASE("agrees with brute-force divisibility") {
        for (int m : {2, 3, 5}) {
            const CapitalGameB g(Probability(1.0), Probability(0.0), m);
            for (std::int64_t c = -40; c <= 40; ++c) {
                const auto r = step(g, PlayerState{c, 0, {}}, rng);
                CAPTURE(c);
                CHECK((r.outcome == Outcome::Win) == oracle::divisible(c, m));
            }
        }
    }
}

TEST_CASE("step on the other game types") {
    RngStream rng(3, 0);
    const auto r = step(GameA{Probability(1.0)}, PlayerState{}, rng);
    CHECK(r.state.capital == 1);
    CHECK(r.outcome == Outcome::Win);

    HistoryGameB h;
    h.p = {Probability(0.0), Probability(1.0), Probability(0.0), Probability(1.0)};
    CHECK_THROWS_AS(step(h, PlayerState{}, rng), StateError);
    // LW -> win; the history then shifts to WW.
    const auto hr = step(h, PlayerState{0, 0, History{Outcome::Lose, Outcome::Win}}, rng);
    CHECK(hr.outcome == Outcome::Win);
    CHECK(hr.state.history == History{Outcome::Win, Outcome::Win});

    const auto sr = step(SimpleDeterministicGame{{6, -7}}, PlayerState{10, 0, {}}, rng);
    CHECK(sr.state.capital == 3);
    CHECK(sr.outcome == Outcome::Lose);
}

TEST_CASE("compound step draws the selector, then the outcome") {
    const GameA a{Probability(1.0)};
    const CapitalGameB b(Probability(0.0), Probability(0.0), 3);
    const CompoundGame c(0.5, a, b);
    RngStream rng(9, 4);
    RngStream replay(9, 4);
    for (int i = 0; i < 200; ++i) {
        const bool picks_a = replay.next_unit() < 0.5;
        replay.next_unit();
        const auto r = step(c, PlayerState{}, rng);
        CHECK((r.outcome == Outcome::Win) == picks_a);
    }
    CHECK(rng.draws() == 400);
}

TEST_CASE("simulate_trajectory") {
    RngStream rng(0, 0);
    CHECK(simulate_trajectory(GameA{Probability(1.0)}, 5, rng).capitals ==
          std::vector<std::int64_t>{0, 1, 2, 3, 4, 5});
    CHECK(simulate_trajectory(GameA{Probability(0.0)}, 3, rng).capitals == std::vector<std::int64_t>{0, -1, -2, -3});
    const auto [a, b] = build_parrondo_games(BiasParams());
    CHECK(simulate_trajectory(CompoundGame(0.5, a, b), 0, rng).capitals == std::vector<std::int64_t>{0});
    CHECK_THROWS_AS(simulate_trajectory(a, -1, rng), ArgumentError);
}

TEST_CASE("probabilistic trajectories move in unit steps (property)") {
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto [ha, hb] = build_history_games(BiasParams());
    for (int i = 0; i < 100; ++i) {
        const GameA a{Probability(u(gen))};
        const CapitalGameB b(Probability(u(gen)), Probability(u(gen)), 2 + i % 4);
        const GameSpec games[] = {a, b, hb, CompoundGame(u(gen), a, b), CompoundGame(u(gen), a, hb)};
        for (const auto& g : games) {
            for (auto start : {StartPolicy::Zero, StartPolicy::StationaryResidue}) {
                RngStream rng(static_cast<std::uint64_t>(i), 0);
                const auto tr = simulate_trajectory(g, 100, rng, start);
                REQUIRE(tr.capitals.size() == 101);
                CHECK(tr.capitals[0] == 0);
                for (std::size_t t = 1; t < tr.capitals.size(); ++t) {
                    REQUIRE(std::abs(tr.capitals[t] - tr.capitals[t - 1]) == 1);
                }
            }
        }
    }
}

TEST_CASE("run_ensemble argument checks and degenerate sizes") {
    const GameA a{Probability(0.495)};
    CHECK_THROWS_AS(run_ensemble(a, 10, 0, 1), ArgumentError);
    CHECK_THROWS_AS(run_ensemble(a, -1, 10, 1), ArgumentError);

    const auto [ga, gb] = build_parrondo_games(BiasParams());
    const CompoundGame c(0.5, ga, gb);
    const auto one = run_ensemble(c, 50, 1, 17);
    RngStream rng(17, 0);
    const auto tr = simulate_trajectory(c, 50, rng);
    REQUIRE(one.mean.size() == 51);
    for (std::size_t t = 0; t <= 50; ++t) {
        CHECK(one.mean[t] == static_cast<double>(tr.capitals[t]));
        CHECK(one.standard_error[t] == 0.0);
    }
    const auto empty = run_ensemble(c, 0, 100, 1);
    CHECK(empty.mean == std::vector<double>{0.0});
    CHECK(empty.standard_error == std::vector<double>{0.0});
}

TEST_CASE("ensemble statistics match a direct computation") {
    const auto [a, b] = build_parrondo_games(BiasParams());
    const int trials = 257;
    const auto stats = run_ensemble(b, 30, trials, 5, {StartPolicy::Zero, 3});
    std::vector<double> sum(31, 0.0);
    std::vector<double> sum_sq(31, 0.0);
    for (int k = trials - 1; k >= 0; --k) {
        RngStream rng(5, static_cast<std::uint64_t>(k));
        const auto tr = simulate_trajectory(b, 30, rng, StartPolicy::Zero);
        for (std::size_t t = 0; t <= 30; ++t) {
            sum[t] += static_cast<double>(tr.capitals[t]);
            sum_sq[t] += static_cast<double>(tr.capitals[t] * tr.capitals[t]);
        }
    }
    for (std::size_t t = 0; t <= 30; ++t) {
        const double mean = sum[t] / trials;
        const double var = (sum_sq[t] - trials * mean * mean) / (trials - 1);
        CHECK(stats.mean[t] == Approx(mean).epsilon(1e-14));
        CHECK(stats.standard_error[t] == Approx(std::sqrt(std::max(var, 0.0) / trials)).epsilon(1e-9));
    }
    CHECK(stats.mean[0] == 0.0);
    CHECK(stats.standard_error[0] == 0.0);
}

TEST_CASE("run_ensemble is deterministic and independent of thread count") {
    const auto [a, b] = build_parrondo_games(BiasParams());
    const CompoundGame c(0.5, a, b);
    const auto reference = run_ensemble(c, 100, 1000, 123, {StartPolicy::StationaryResidue, 1});
    for (unsigned threads : {1U, 2U, 3U, 7U, 0U}) {
        CHECK(run_ensemble(c, 100, 1000, 123, {StartPolicy::StationaryResidue, threads}) == reference);
    }
    CHECK_FALSE(run_ensemble(c, 100, 1000, 124) == reference);
}

TEST_CASE("game A ensemble has the closed-form drift") {
    const auto stats = run_ensemble(GameA{Probability(0.495)}, 200, 10000, 0);
    CHECK(within_sigmas(stats.mean.back(), 200 * (2 * 0.495 - 1), stats.standard_error.back()));
}

TEST_CASE("stationary start: mean capital is t times the exact drift") {
    const auto [a, b] = build_parrondo_games(BiasParams());
    const GameSpec games[] = {b, CompoundGame(0.5, a, b), CapitalGameB(Probability(0.095), Probability(0.625), 5),
                              CompoundGame(0.5, a, CapitalGameB(Probability(0.095), Probability(0.625), 5))};
    for (const auto& g : games) {
        const auto stats = run_ensemble(g, 200, 10000, 1);
        const double target = 200 * analysis::exact_drift(g);
        CAPTURE(target);
        CHECK(within_sigmas(stats.mean.back(), target, stats.standard_error.back()));
    }
}

TEST_CASE("zero start: mean capital follows the exact finite-horizon expectation") {
    const auto [a, b] = build_parrondo_games(BiasParams());
    const auto [ha, hb] = build_history_games(BiasParams());
    const GameSpec games[] = {b, CompoundGame(0.5, a, b), hb, CompoundGame(0.5, ha, hb)};
    for (const auto& g : games) {
        const auto stats = run_ensemble(g, 200, 10000, 2, {StartPolicy::Zero, 0});
        const double target = analysis::expected_capital(g, 200);
        CAPTURE(target);
        CHECK(within_sigmas(stats.mean.back(), target, stats.standard_error.back()));
    }
    // Starting in scenario 1 costs about half a dollar over 200 plays of game B.
    CHECK(analysis::expected_capital(b, 200) - 200 * analysis::exact_drift(b) == Approx(-0.5228).epsilon(1e-3));
}

TEST_CASE("history game with a fixed start history") {
    auto [ha, hb] = build_history_games(BiasParams());
    hb.initial_history = History{Outcome::Win, Outcome::Win};
    RngStream rng(4, 0);
    const auto tr = simulate_trajectory(hb, 10, rng);
    CHECK(rng.draws() == 10); // no draw for the start history
    const auto stats = run_ensemble(hb, 200, 10000, 3);
    CHECK(within_sigmas(stats.mean.back(), analysis::expected_capital(hb, 200), stats.standard_error.back()));
}

TEST_CASE("reflected games drift the other way") {
    const auto [a, b] = build_parrondo_games(BiasParams());
    const GameSpec games[] = {a, b, CompoundGame(0.5, a, b)};
    for (const auto& g : games) {
        const auto s = run_ensemble(g, 200, 10000, 8);
        const auto r = run_ensemble(reflect_game(g), 200, 10000, 8);
        CHECK((s.mean.back() > 0) != (r.mean.back() > 0));
        CHECK(within_sigmas(r.mean.back(), -200 * analysis::exact_drift(g), r.standard_error.back()));
    }
}
