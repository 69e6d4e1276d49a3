#pragma once

// Convergence reporting for the three limit statements, the power-weighted
// simplex-number sums, and the average/volume ratio-invariance experiment.
// Values and errors are exact rationals throughout; decimals are rendered
// only for display.

#include "miniatures/closed_forms.hpp"
#include "miniatures/enumeration.hpp"
#include "miniatures/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace miniatures {

struct ConvergenceRow {
    std::int64_t n;
    Rational value;
    Rational limit;
    Rational abs_error;
};

enum class ConvergenceShape { SquareAverage, SimplexHorizontal, HypercubeHorizontal };

inline const char* convergence_shape_name(ConvergenceShape s) {
    switch (s) {
        case ConvergenceShape::SquareAverage: return "square-av";
        case ConvergenceShape::SimplexHorizontal: return "simplex-nl";
        case ConvergenceShape::HypercubeHorizontal: return "hypercube-nl";
    }
    return "?";
}

/// Exact finite-n averages, the limit constant, and exact errors, one row per
/// requested n.  ns must be nonempty and ascending.  d is ignored for the
/// square shape.
inline std::vector<ConvergenceRow> convergence_table(ConvergenceShape shape, int d,
                                                     const std::vector<std::int64_t>& ns) {
    if (ns.empty()) throw std::invalid_argument("convergence_table: empty n list");
    if (!std::is_sorted(ns.begin(), ns.end()))
        throw std::invalid_argument("convergence_table: n list must be ascending");
    std::vector<ConvergenceRow> rows;
    rows.reserve(ns.size());
    for (std::int64_t n : ns) {
        Rational value, limit;
        switch (shape) {
            case ConvergenceShape::SquareAverage:
                value = square_average_closed(n);
                limit = square_average_limit();
                break;
            case ConvergenceShape::SimplexHorizontal:
                value = simplex_average_closed(d, n);
                limit = simplex_average_limit(d);
                break;
            case ConvergenceShape::HypercubeHorizontal:
                value = hypercube_average_closed(d, n);
                limit = hypercube_average_limit(d);
                break;
        }
        rows.push_back({n, value, limit, abs(value - limit)});
    }
    return rows;
}

/// (sum_{i=1}^n i^r S_d(i)) / n^{d+r+1}; converges to 1/(d!(d+r+1)) with
/// O(1/n) error.
inline Rational simplex_power_sum_ratio(int d, int r, std::int64_t n) {
    if (d < 0 || r < 0 || n < 1) throw std::invalid_argument("simplex_power_sum_ratio: bad arguments");
    BigInt acc = 0;
    for (std::int64_t i = 1; i <= n; ++i)
        acc += boost::multiprecision::pow(BigInt(i), unsigned(r)) * simplex_number(d, i);
    return Rational(acc, boost::multiprecision::pow(BigInt(n), unsigned(d + r + 1)));
}

/// The leading coefficient 1/(d!(d+r+1)).
inline Rational simplex_power_sum_limit(int d, int r) {
    if (d < 0 || r < 0) throw std::invalid_argument("simplex_power_sum_limit: bad arguments");
    return Rational(BigInt(1), factorial(d) * (d + r + 1));
}

// -- ratio invariance -----------------------------------------------------------

struct RatioInvarianceResult {
    Rational lhs_ratio;  // average(P) / vol(P)
    Rational rhs_ratio;  // average(P') / vol(P')
    bool equal = false;
};

namespace detail {

// similarity screen: sorted squared edge lengths must be proportional
inline void require_similar(const Polytope& a, const Polytope& b) {
    if (a.family() != b.family() || a.dim() != b.dim())
        throw std::invalid_argument("ratio_invariance_experiment: hosts are not similar");
    if (a.family() != Family::Simplex) return;  // any two squares / hypercubes are similar
    auto sq_dists = [](const Polytope& p) {
        std::vector<BigInt> out;
        const auto& vs = p.vertices();
        for (std::size_t r = 0; r < vs.size(); ++r)
            for (std::size_t c = r + 1; c < vs.size(); ++c) {
                BigInt acc = 0;
                for (int k = 0; k < p.dim(); ++k) {
                    BigInt diff = vs[r].coords[k] - vs[c].coords[k];
                    acc += diff * diff;
                }
                out.push_back(std::move(acc));
            }
        std::sort(out.begin(), out.end());
        return out;
    };
    auto da = sq_dists(a);
    auto db = sq_dists(b);
    for (std::size_t k = 0; k < da.size(); ++k)
        if (da[k] * db.back() != db[k] * da.back())
            throw std::invalid_argument("ratio_invariance_experiment: hosts are not similar");
}

}  // namespace detail

/// Brute-force average/volume ratios of two similar hosts at resolution n.
/// Squares are enumerated over all miniatures; simplices and hypercubes over
/// their horizontal miniatures.
inline RatioInvarianceResult ratio_invariance_experiment(const Polytope& p, const Polytope& q,
                                                         std::int64_t n) {
    detail::require_similar(p, q);
    auto ratio_of = [n](const Polytope& host) {
        auto instances = host.family() == Family::Square2D ? square_bruteforce(host, n)
                                                           : horizontal_bruteforce(host, n);
        CensusSummary summary = aggregate(group_by_class(instances, host));
        return summary.average / volume(host);
    };
    Rational lhs = ratio_of(p);
    Rational rhs = ratio_of(q);
    bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

}  // namespace miniatures
