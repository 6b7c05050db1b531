#pragma once

#include <vector>

#include "parrondo/model.hpp"

namespace parrondo::analysis {

/// Band around ratio 1 treated as the fair-game boundary.
inline constexpr double kBoundaryTolerance = 1e-9;

/// Location of a capital-dependent game B in the unit square.
struct ProbabilityPoint {
    Probability p2;
    Probability p3;

    friend bool operator==(const ProbabilityPoint&, const ProbabilityPoint&) = default;
};

enum class Region { Winning, Losing, Boundary };

std::string to_string(Region r);

/// Capital modulo m as a Markov chain: from residue s a win moves to s+1 and
/// a loss to s-1 (mod m).
struct ModMChain {
    int m = 0;
    std::vector<Probability> win;

    ModMChain(int m, std::vector<Probability> win);
    /// Chain of a capital game: p2 at residue 0, p3 elsewhere.
    static ModMChain of(const CapitalGameB& game);
};

/// Chain over the last two outcomes, states ordered LL, LW, WL, WW.
struct HistoryChain {
    std::array<Probability, 4> win;
};

/// p2 on the fair curve for the given p3:
/// (1-p3)^(m-1) / ((1-p3)^(m-1) + p3^(m-1)).
Probability boundary_p2(Probability p3, int m);

/// p2 p3^(m-1) / ((1-p2)(1-p3)^(m-1)); +infinity when the denominator vanishes.
double fairness_ratio(const ProbabilityPoint& p, int m);

Region classify_point(const ProbabilityPoint& p, int m, double tol = kBoundaryTolerance);

/// Real root of p^3 = (1-p)^3.
Probability game_a_fair_root();

/// Stationary distribution; throws DegenerateChainError when a win
/// probability is 0 or 1.
std::vector<double> stationary_distribution(const ModMChain& chain);
std::vector<double> stationary_distribution(const HistoryChain& chain);

/// Max-norm of pi P - pi.
double stationary_residual(const ModMChain& chain, const std::vector<double>& pi);
double stationary_residual(const HistoryChain& chain, const std::vector<double>& pi);

/// Long-run expected capital change per play.
double exact_drift(const GameSpec& game);

/// Expected capital after `plays` plays starting from capital 0 (and, for
/// history games, the uniform or fixed starting history), by propagating the
/// exact state distribution.
double expected_capital(const GameSpec& game, int plays);

/// pc1 pc2^(m-1) / ((1-pc1)(1-pc2)^(m-1)) > 1.
bool compound_condition(Probability pc1, Probability pc2, int m);

enum class Paradox { VeryStrong, Strong, NotApplicable };

std::string to_string(Paradox p);

struct SchemeClassification {
    SchemeId scheme;
    Verdict verdict_a;
    Verdict verdict_b;
    Verdict verdict_compound;
    Paradox paradox;

    /// "Lose + Lose = Win" style summary.
    [[nodiscard]] std::string description() const;
};

/// Very strong when the compound contradicts both components; strong when
/// the components disagree and the compound sides with game A against B.
Paradox paradox_label(Verdict a, Verdict b, Verdict compound) noexcept;

/// Win iff the drift is strictly positive.
Verdict verdict_of(double drift) noexcept;

SchemeClassification classify_scheme(SchemeId id, const BiasParams& bias, double gamma);

} // namespace parrondo::analysis
