#pragma once

// Test-only reference computations, deliberately independent of the
// library's code paths (no Eigen, no library RNG, no residue helper).

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

/// True iff m divides capital, by searching for the quotient.
inline bool divisible(std::int64_t capital, int m) {
    const std::int64_t bound = capital < 0 ? -capital : capital;
    for (std::int64_t k = -bound; k <= bound; ++k) {
        if (k * m == capital) {
            return true;
        }
    }
    return false;
}

/// Stationary law of the +-1 walk on residues mod m by power iteration.
inline std::vector<double> power_iteration(const std::vector<double>& win, int iterations = 200000) {
    const std::size_t m = win.size();
    std::vector<double> pi(m, 1.0 / static_cast<double>(m));
    std::vector<double> next(m);
    for (int it = 0; it < iterations; ++it) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t s = 0; s < m; ++s) {
            next[(s + 1) % m] += pi[s] * win[s];
            next[(s + m - 1) % m] += pi[s] * (1.0 - win[s]);
        }
        // Average with the previous iterate so even-m (periodic) chains converge.
        for (std::size_t s = 0; s < m; ++s) {
            pi[s] = 0.5 * (pi[s] + next[s]);
        }
    }
    return pi;
}

/// Long-run fraction of time spent in each residue of a simulated walk.
inline std::vector<double> occupancy(const std::vector<double>& win, std::int64_t steps, std::uint64_t seed) {
    const int m = static_cast<int>(win.size());
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> counts(win.size(), 0.0);
    int s = 0;
    for (std::int64_t t = 0; t < steps; ++t) {
        counts[static_cast<std::size_t>(s)] += 1.0;
        s = u(gen) < win[static_cast<std::size_t>(s)] ? (s + 1) % m : (s + m - 1) % m;
    }
    for (auto& c : counts) {
        c /= static_cast<double>(steps);
    }
    return counts;
}

inline double drift(const std::vector<double>& win, const std::vector<double>& pi) {
    double d = 0.0;
    for (std::size_t s = 0; s < win.size(); ++s) {
        d += pi[s] * (2.0 * win[s] - 1.0);
    }
    return d;
}

/// Distance from (x, y) to the curve {(f(q), q)} by dense grid search.
template <class F>
double grid_distance(double x, double y, F f, double step = 1e-4) {
    double best = INFINITY;
    const auto n = static_cast<int>(std::lround(1.0 / step));
    for (int i = 0; i <= n; ++i) {
        const double q = static_cast<double>(i) / n;
        best = std::min(best, std::hypot(x - f(q), y - q));
    }
    return best;
}

} // namespace oracle
