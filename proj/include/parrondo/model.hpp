#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "parrondo/error.hpp"

namespace parrondo {

/// A probability in [0, 1] that also carries its complement.
///
/// The complement is `1 - value` unless the probability was built from odds,
/// in which case both sides are computed directly from the weights so that a
/// value close to 1 keeps an accurate losing probability.
class Probability {
public:
    constexpr Probability() = default;

    /// Throws RangeError unless 0 <= value <= 1.
    explicit Probability(double value);

    /// Probability `win / (win + lose)`; both weights must be non-negative
    /// and not both zero.
    static Probability from_odds(double win_weight, double lose_weight);

    [[nodiscard]] constexpr double value() const noexcept { return win_; }
    [[nodiscard]] constexpr double complement() const noexcept { return lose_; }

    /// `win - lose`, the expected capital change of a single +-1 play.
    [[nodiscard]] constexpr double bias() const noexcept { return win_ - lose_; }

    /// Swaps the winning and losing sides.
    [[nodiscard]] constexpr Probability complemented() const noexcept {
        Probability p;
        p.win_ = lose_;
        p.lose_ = win_;
        return p;
    }

    friend constexpr bool operator==(const Probability&, const Probability&) = default;
    friend Probability mix(Probability a, Probability b, double weight);

private:
    double win_ = 0.0;
    double lose_ = 1.0;
};

/// Convex combination `weight * a + (1 - weight) * b`, mixing both sides.
Probability mix(Probability a, Probability b, double weight);

enum class Outcome : std::uint8_t { Lose = 0, Win = 1 };
enum class Verdict : std::uint8_t { Lose = 0, Win = 1 };

std::string to_string(Outcome o);
std::string to_string(Verdict v);

/// The two most recent outcomes, oldest first.
struct History {
    Outcome older = Outcome::Lose;
    Outcome newer = Outcome::Lose;

    /// 0 = LL, 1 = LW, 2 = WL, 3 = WW.
    [[nodiscard]] constexpr std::size_t index() const noexcept {
        return 2 * static_cast<std::size_t>(older) + static_cast<std::size_t>(newer);
    }
    [[nodiscard]] static constexpr History from_index(std::size_t i) noexcept {
        return {static_cast<Outcome>((i >> 1) & 1U), static_cast<Outcome>(i & 1U)};
    }
    [[nodiscard]] constexpr History push(Outcome o) const noexcept { return {newer, o}; }

    friend constexpr bool operator==(const History&, const History&) = default;
};

/// Biasing offset epsilon and capital modulus m (m >= 2).
class BiasParams {
public:
    BiasParams(double epsilon = 0.005, int m = 3);

    [[nodiscard]] double epsilon() const noexcept { return epsilon_; }
    [[nodiscard]] int m() const noexcept { return m_; }

private:
    double epsilon_;
    int m_;
};

struct GameA {
    Probability p1;

    friend bool operator==(const GameA&, const GameA&) = default;
};

/// Capital-dependent game B: scenario 1 (p2) when capital is a multiple of
/// m, scenario 2 (p3) otherwise.
struct CapitalGameB {
    Probability p2;
    Probability p3;
    int m = 3;

    CapitalGameB() = default;
    CapitalGameB(Probability p2, Probability p3, int m);

    /// Win probability for the given capital.
    [[nodiscard]] Probability for_capital(std::int64_t capital) const noexcept;

    friend bool operator==(const CapitalGameB&, const CapitalGameB&) = default;
};

/// History-dependent game B, one win probability per {LL, LW, WL, WW}.
struct HistoryGameB {
    std::array<Probability, 4> p;
    /// Fixed starting history; when empty a history is drawn uniformly.
    std::optional<History> initial_history;

    [[nodiscard]] Probability for_history(History h) const noexcept { return p[h.index()]; }

    friend bool operator==(const HistoryGameB&, const HistoryGameB&) = default;
};

/// Random mixture: game A with probability gamma, otherwise game B.
struct CompoundGame {
    double gamma = 0.5;
    GameA a;
    std::variant<CapitalGameB, HistoryGameB> b;

    CompoundGame() = default;
    CompoundGame(double gamma, GameA a, std::variant<CapitalGameB, HistoryGameB> b);

    /// Effective win probability when capital is a multiple of m (capital variant).
    [[nodiscard]] Probability pc1() const;
    /// Effective win probability otherwise (capital variant).
    [[nodiscard]] Probability pc2() const;

    /// The compound game seen as a single capital-dependent game.
    [[nodiscard]] CapitalGameB as_capital_game() const;

    friend bool operator==(const CompoundGame&, const CompoundGame&) = default;
};

/// Deterministic parity rule: capital moves by odd_delta on odd capital and
/// by even_delta on even capital.
struct SimpleGameRule {
    std::int64_t odd_delta = 0;
    std::int64_t even_delta = 0;

    [[nodiscard]] std::int64_t delta_for(std::int64_t capital) const noexcept;

    friend bool operator==(const SimpleGameRule&, const SimpleGameRule&) = default;
};

struct SimpleDeterministicGame {
    SimpleGameRule rule;

    friend bool operator==(const SimpleDeterministicGame&, const SimpleDeterministicGame&) = default;
};

using GameSpec =
    std::variant<GameA, CapitalGameB, HistoryGameB, CompoundGame, SimpleDeterministicGame>;

struct PlayerState {
    std::int64_t capital = 0;
    std::int64_t t = 0;
    std::optional<History> history;
};

/// Non-negative remainder, so -2 mod 3 == 1.
[[nodiscard]] constexpr int residue(std::int64_t capital, int m) noexcept {
    const auto r = capital % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

/// Scheme number 1..8 of the win/lose combination table.
class SchemeId {
public:
    explicit SchemeId(int id);
    [[nodiscard]] int value() const noexcept { return id_; }
    friend bool operator==(const SchemeId&, const SchemeId&) = default;

private:
    int id_;
};

/// Intended verdict of game A and of the two scenarios of game B.
struct SchemeRow {
    Verdict a;
    Verdict scenario1;
    Verdict scenario2;
};

[[nodiscard]] SchemeRow scheme_row(SchemeId id) noexcept;

struct Scheme {
    SchemeId id;
    GameA a;
    CapitalGameB b;
    CompoundGame compound;
};

/// Capital-dependent games: p1 = 0.5 - eps, p2 = 0.1 - eps, p3 = 0.75 - eps.
std::pair<GameA, CapitalGameB> build_parrondo_games(const BiasParams& bias);

/// History-dependent games: p1 = 0.5 - eps; LL 0.9 - eps, LW 0.25 - eps,
/// WL 0.25 - eps, WW 0.7 - eps.
std::pair<GameA, HistoryGameB> build_history_games(const BiasParams& bias);

Scheme build_scheme(SchemeId id, const BiasParams& bias, double gamma);

/// Replaces every win probability p by 1 - p.
GameSpec reflect_game(const GameSpec& game);
GameA reflect_game(const GameA& game);
CapitalGameB reflect_game(const CapitalGameB& game);
HistoryGameB reflect_game(const HistoryGameB& game);
CompoundGame reflect_game(const CompoundGame& game);

[[nodiscard]] bool is_probabilistic(const GameSpec& game) noexcept;

/// Throws ArgumentError unless 0 <= gamma <= 1.
void check_gamma(double gamma);

} // namespace parrondo
