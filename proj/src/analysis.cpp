#include "parrondo/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

namespace parrondo::analysis {

namespace {

void require_irreducible(const Probability& p) {
    if (!(p.value() > 0.0 && p.complement() > 0.0)) {
        throw DegenerateChainError("transition probability " + std::to_string(p.value()) +
                                   " makes the chain reducible");
    }
}

// Solves (P^T - I) pi = 0 with the last equation replaced by sum(pi) = 1.
std::vector<double> solve_stationary(const Eigen::MatrixXd& transition) {
    const auto n = transition.rows();
    Eigen::MatrixXd system = transition.transpose() - Eigen::MatrixXd::Identity(n, n);
    system.row(n - 1).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs(n - 1) = 1.0;
    const Eigen::VectorXd pi = system.fullPivLu().solve(rhs);
    return {pi.data(), pi.data() + n};
}

Eigen::MatrixXd transition_matrix(const ModMChain& chain) {
    const int m = chain.m;
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(m, m);
    for (int s = 0; s < m; ++s) {
        const auto& w = chain.win[static_cast<std::size_t>(s)];
        p(s, (s + 1) % m) += w.value();
        p(s, (s - 1 + m) % m) += w.complement();
    }
    return p;
}

Eigen::MatrixXd transition_matrix(const HistoryChain& chain) {
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        const History h = History::from_index(i);
        const auto row = static_cast<Eigen::Index>(i);
        p(row, static_cast<Eigen::Index>(h.push(Outcome::Win).index())) += chain.win[i].value();
        p(row, static_cast<Eigen::Index>(h.push(Outcome::Lose).index())) += chain.win[i].complement();
    }
    return p;
}

double residual(const Eigen::MatrixXd& transition, const std::vector<double>& pi) {
    const Eigen::Map<const Eigen::RowVectorXd> row(pi.data(), static_cast<Eigen::Index>(pi.size()));
    return (row * transition - row).cwiseAbs().maxCoeff();
}

HistoryChain mixed_history_chain(const CompoundGame& g, const HistoryGameB& b) {
    HistoryChain chain;
    for (std::size_t i = 0; i < 4; ++i) {
        chain.win[i] = mix(g.a.p1, b.p[i], g.gamma);
    }
    return chain;
}

double drift_of(const ModMChain& chain) {
    const auto pi = stationary_distribution(chain);
    double drift = 0.0;
    for (std::size_t s = 0; s < pi.size(); ++s) {
        drift += pi[s] * chain.win[s].bias();
    }
    return drift;
}

double drift_of(const HistoryChain& chain) {
    const auto pi = stationary_distribution(chain);
    double drift = 0.0;
    for (std::size_t s = 0; s < 4; ++s) {
        drift += pi[s] * chain.win[s].bias();
    }
    return drift;
}

double transient_capital(const ModMChain& chain, int plays) {
    const auto m = static_cast<std::size_t>(chain.m);
    std::vector<double> dist(m, 0.0);
    std::vector<double> next(m, 0.0);
    dist[0] = 1.0;
    double total = 0.0;
    for (int t = 0; t < plays; ++t) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t s = 0; s < m; ++s) {
            const auto& w = chain.win[s];
            total += dist[s] * w.bias();
            next[(s + 1) % m] += dist[s] * w.value();
            next[(s + m - 1) % m] += dist[s] * w.complement();
        }
        dist.swap(next);
    }
    return total;
}

double transient_capital(const HistoryChain& chain, const std::optional<History>& start, int plays) {
    std::array<double, 4> dist{0.25, 0.25, 0.25, 0.25};
    if (start) {
        dist = {};
        dist[start->index()] = 1.0;
    }
    double total = 0.0;
    for (int t = 0; t < plays; ++t) {
        std::array<double, 4> next{};
        for (std::size_t i = 0; i < 4; ++i) {
            const History h = History::from_index(i);
            total += dist[i] * chain.win[i].bias();
            next[h.push(Outcome::Win).index()] += dist[i] * chain.win[i].value();
            next[h.push(Outcome::Lose).index()] += dist[i] * chain.win[i].complement();
        }
        dist = next;
    }
    return total;
}

} // namespace

std::string to_string(Region r) {
    switch (r) {
    case Region::Winning: return "Winning";
    case Region::Losing: return "Losing";
    case Region::Boundary: return "Boundary";
    }
    return "?";
}

std::string to_string(Paradox p) {
    switch (p) {
    case Paradox::VeryStrong: return "Very strong";
    case Paradox::Strong: return "Strong";
    case Paradox::NotApplicable: return "N/A";
    }
    return "?";
}

ModMChain::ModMChain(int m_, std::vector<Probability> win_) : m(m_), win(std::move(win_)) {
    if (m < 2) {
        throw ArgumentError("chain modulus must be at least 2");
    }
    if (win.size() != static_cast<std::size_t>(m)) {
        throw ArgumentError("chain needs one win probability per residue");
    }
}

ModMChain ModMChain::of(const CapitalGameB& game) {
    std::vector<Probability> win(static_cast<std::size_t>(game.m), game.p3);
    win[0] = game.p2;
    return {game.m, std::move(win)};
}

Probability boundary_p2(Probability p3, int m) {
    if (m < 2) {
        throw ArgumentError("capital modulus m must be at least 2");
    }
    const int k = m - 1;
    const double lose_side = std::pow(p3.complement(), k);
    const double win_side = std::pow(p3.value(), k);
    if (lose_side + win_side > std::numeric_limits<double>::min()) {
        return Probability::from_odds(lose_side, win_side);
    }
    // Both powers underflow: compare them through the odds ratio instead.
    if (p3.value() < p3.complement()) {
        return Probability::from_odds(1.0, std::pow(p3.value() / p3.complement(), k));
    }
    return Probability::from_odds(std::pow(p3.complement() / p3.value(), k), 1.0);
}

double fairness_ratio(const ProbabilityPoint& p, int m) {
    const int k = m - 1;
    const double num = p.p2.value() * std::pow(p.p3.value(), k);
    const double den = p.p2.complement() * std::pow(p.p3.complement(), k);
    if (den == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return num / den;
}

Region classify_point(const ProbabilityPoint& p, int m, double tol) {
    if (!(tol > 0.0)) {
        throw ArgumentError("boundary tolerance must be positive");
    }
    const double ratio = fairness_ratio(p, m);
    if (ratio > 1.0 + tol) {
        return Region::Winning;
    }
    if (ratio < 1.0 - tol) {
        return Region::Losing;
    }
    return Region::Boundary;
}

Probability game_a_fair_root() {
    // p^3 - (1-p)^3 = (2p - 1)(p^2 - p + 1); the quadratic factor has no real roots.
    return Probability(0.5);
}

std::vector<double> stationary_distribution(const ModMChain& chain) {
    for (const auto& w : chain.win) {
        require_irreducible(w);
    }
    return solve_stationary(transition_matrix(chain));
}

std::vector<double> stationary_distribution(const HistoryChain& chain) {
    for (const auto& w : chain.win) {
        require_irreducible(w);
    }
    return solve_stationary(transition_matrix(chain));
}

double stationary_residual(const ModMChain& chain, const std::vector<double>& pi) {
    return residual(transition_matrix(chain), pi);
}

double stationary_residual(const HistoryChain& chain, const std::vector<double>& pi) {
    return residual(transition_matrix(chain), pi);
}

double exact_drift(const GameSpec& game) {
    struct Visitor {
        double operator()(const GameA& g) const { return g.p1.bias(); }
        double operator()(const CapitalGameB& g) const { return drift_of(ModMChain::of(g)); }
        double operator()(const HistoryGameB& g) const { return drift_of(HistoryChain{g.p}); }
        double operator()(const CompoundGame& g) const {
            if (const auto* h = std::get_if<HistoryGameB>(&g.b)) {
                return drift_of(mixed_history_chain(g, *h));
            }
            return drift_of(ModMChain::of(g.as_capital_game()));
        }
        double operator()(const SimpleDeterministicGame&) const {
            throw UnsupportedGameError("exact drift is defined for probabilistic games only");
        }
    };
    return std::visit(Visitor{}, game);
}

double expected_capital(const GameSpec& game, int plays) {
    if (plays < 0) {
        throw ArgumentError("number of plays must be non-negative");
    }
    struct Visitor {
        int plays;
        double operator()(const GameA& g) const { return plays * g.p1.bias(); }
        double operator()(const CapitalGameB& g) const {
            return transient_capital(ModMChain::of(g), plays);
        }
        double operator()(const HistoryGameB& g) const {
            return transient_capital(HistoryChain{g.p}, g.initial_history, plays);
        }
        double operator()(const CompoundGame& g) const {
            if (const auto* h = std::get_if<HistoryGameB>(&g.b)) {
                return transient_capital(mixed_history_chain(g, *h), h->initial_history, plays);
            }
            return transient_capital(ModMChain::of(g.as_capital_game()), plays);
        }
        double operator()(const SimpleDeterministicGame& g) const {
            std::int64_t capital = 0;
            for (int t = 0; t < plays; ++t) {
                capital += g.rule.delta_for(capital);
            }
            return static_cast<double>(capital);
        }
    };
    return std::visit(Visitor{plays}, game);
}

bool compound_condition(Probability pc1, Probability pc2, int m) {
    return fairness_ratio({pc1, pc2}, m) > 1.0;
}

std::string SchemeClassification::description() const {
    return to_string(verdict_a) + " + " + to_string(verdict_b) + " = " + to_string(verdict_compound);
}

Paradox paradox_label(Verdict a, Verdict b, Verdict compound) noexcept {
    if (a == b) {
        return compound != a ? Paradox::VeryStrong : Paradox::NotApplicable;
    }
    return compound != b ? Paradox::Strong : Paradox::NotApplicable;
}

Verdict verdict_of(double drift) noexcept { return drift > 0.0 ? Verdict::Win : Verdict::Lose; }

SchemeClassification classify_scheme(SchemeId id, const BiasParams& bias, double gamma) {
    const Scheme s = build_scheme(id, bias, gamma);
    const Verdict a = verdict_of(s.a.p1.bias());
    const Verdict b = verdict_of(exact_drift(s.b));
    const Verdict c = verdict_of(exact_drift(s.compound));
    return {id, a, b, c, paradox_label(a, b, c)};
}

} // namespace parrondo::analysis
