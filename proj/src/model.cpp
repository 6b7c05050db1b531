#include "parrondo/model.hpp"

#include <cmath>
#include <sstream>

namespace parrondo {

namespace {

std::string describe(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

} // namespace

Probability::Probability(double value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw RangeError("probability " + describe(value) + " is outside [0, 1]");
    }
    win_ = value;
    lose_ = 1.0 - value;
}

Probability Probability::from_odds(double win_weight, double lose_weight) {
    if (!(win_weight >= 0.0) || !(lose_weight >= 0.0) || !std::isfinite(win_weight) ||
        !std::isfinite(lose_weight) || win_weight + lose_weight == 0.0) {
        throw RangeError("invalid odds " + describe(win_weight) + " : " + describe(lose_weight));
    }
    const double total = win_weight + lose_weight;
    Probability p;
    p.win_ = win_weight / total;
    p.lose_ = lose_weight / total;
    return p;
}

Probability mix(Probability a, Probability b, double weight) {
    check_gamma(weight);
    Probability p;
    p.win_ = weight * a.win_ + (1.0 - weight) * b.win_;
    p.lose_ = weight * a.lose_ + (1.0 - weight) * b.lose_;
    return p;
}

std::string to_string(Outcome o) { return o == Outcome::Win ? "Win" : "Lose"; }
std::string to_string(Verdict v) { return v == Verdict::Win ? "Win" : "Lose"; }

BiasParams::BiasParams(double epsilon, int m) : epsilon_(epsilon), m_(m) {
    if (!std::isfinite(epsilon)) {
        throw ArgumentError("epsilon must be finite");
    }
    if (m < 2) {
        throw ArgumentError("capital modulus m must be at least 2, got " + std::to_string(m));
    }
}

CapitalGameB::CapitalGameB(Probability p2_, Probability p3_, int m_) : p2(p2_), p3(p3_), m(m_) {
    if (m < 2) {
        throw ArgumentError("capital modulus m must be at least 2, got " + std::to_string(m));
    }
}

Probability CapitalGameB::for_capital(std::int64_t capital) const noexcept {
    return residue(capital, m) == 0 ? p2 : p3;
}

CompoundGame::CompoundGame(double gamma_, GameA a_, std::variant<CapitalGameB, HistoryGameB> b_)
    : gamma(gamma_), a(a_), b(std::move(b_)) {
    check_gamma(gamma);
}

Probability CompoundGame::pc1() const {
    const auto* cap = std::get_if<CapitalGameB>(&b);
    if (cap == nullptr) {
        throw UnsupportedGameError("pc1 is defined for the capital-dependent compound game only");
    }
    return mix(a.p1, cap->p2, gamma);
}

Probability CompoundGame::pc2() const {
    const auto* cap = std::get_if<CapitalGameB>(&b);
    if (cap == nullptr) {
        throw UnsupportedGameError("pc2 is defined for the capital-dependent compound game only");
    }
    return mix(a.p1, cap->p3, gamma);
}

CapitalGameB CompoundGame::as_capital_game() const {
    const auto* cap = std::get_if<CapitalGameB>(&b);
    if (cap == nullptr) {
        throw UnsupportedGameError("history-dependent compound game has no capital form");
    }
    return {pc1(), pc2(), cap->m};
}

std::int64_t SimpleGameRule::delta_for(std::int64_t capital) const noexcept {
    return residue(capital, 2) == 1 ? odd_delta : even_delta;
}

SchemeId::SchemeId(int id) : id_(id) {
    if (id < 1 || id > 8) {
        throw ArgumentError("scheme id must be in 1..8, got " + std::to_string(id));
    }
}

SchemeRow scheme_row(SchemeId id) noexcept {
    constexpr auto L = Verdict::Lose;
    constexpr auto W = Verdict::Win;
    static constexpr std::array<SchemeRow, 8> rows{{
        {L, L, W}, // #1
        {W, L, W}, // #2
        {L, W, W}, // #3
        {L, L, L}, // #4
        {W, W, W}, // #5
        {W, L, L}, // #6
        {L, W, L}, // #7
        {W, W, L}, // #8
    }};
    return rows[static_cast<std::size_t>(id.value() - 1)];
}

std::pair<GameA, CapitalGameB> build_parrondo_games(const BiasParams& bias) {
    const double e = bias.epsilon();
    return {GameA{Probability(0.5 - e)},
            CapitalGameB(Probability(0.1 - e), Probability(0.75 - e), bias.m())};
}

std::pair<GameA, HistoryGameB> build_history_games(const BiasParams& bias) {
    const double e = bias.epsilon();
    HistoryGameB b;
    b.p = {Probability(0.9 - e), Probability(0.25 - e), Probability(0.25 - e), Probability(0.7 - e)};
    return {GameA{Probability(0.5 - e)}, b};
}

Scheme build_scheme(SchemeId id, const BiasParams& bias, double gamma) {
    check_gamma(gamma);
    const double e = bias.epsilon();
    const SchemeRow row = scheme_row(id);

    const GameA a{Probability(row.a == Verdict::Win ? 0.5 + e : 0.5 - e)};
    // Scenario 1 sits near 0.1 / 0.9, scenario 2 near 0.75 or 0.25; the
    // winning and losing placements are exact reflections of each other.
    const bool s1_wins = row.scenario1 == Verdict::Win;
    const bool s2_wins = row.scenario2 == Verdict::Win;
    double p2 = s1_wins ? 0.9 + e : 0.1 - e;
    double p3 = 0.0;
    if (s1_wins == s2_wins) {
        p3 = s2_wins ? 0.75 + e : 0.25 - e;
    } else {
        p3 = s2_wins ? 0.75 - e : 0.25 + e;
    }
    CapitalGameB b(Probability(p2), Probability(p3), bias.m());
    return {id, a, b, CompoundGame(gamma, a, b)};
}

GameA reflect_game(const GameA& game) { return {game.p1.complemented()}; }

CapitalGameB reflect_game(const CapitalGameB& game) {
    return {game.p2.complemented(), game.p3.complemented(), game.m};
}

HistoryGameB reflect_game(const HistoryGameB& game) {
    HistoryGameB r = game;
    for (auto& p : r.p) {
        p = p.complemented();
    }
    return r;
}

CompoundGame reflect_game(const CompoundGame& game) {
    auto b = std::visit([](const auto& inner) -> std::variant<CapitalGameB, HistoryGameB> {
        return reflect_game(inner);
    }, game.b);
    return {game.gamma, reflect_game(game.a), std::move(b)};
}

GameSpec reflect_game(const GameSpec& game) {
    return std::visit(Overloaded{
                          [](const SimpleDeterministicGame&) -> GameSpec {
                              throw UnsupportedGameError("the simple deterministic game has no reflection");
                          },
                          [](const auto& g) -> GameSpec { return reflect_game(g); },
                      },
                      game);
}

bool is_probabilistic(const GameSpec& game) noexcept {
    return !std::holds_alternative<SimpleDeterministicGame>(game);
}

void check_gamma(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw ArgumentError("mixing parameter gamma must be in [0, 1], got " + describe(gamma));
    }
}

} // namespace parrondo
