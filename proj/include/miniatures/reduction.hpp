#pragma once

// Fundamental miniatures and irreducibility.
//
// A horizontal lattice miniature of P is w + t(P - v0) with integer w and
// all vertices integral and inside P.  Integrality forces t*(v - v0) into
// Z^d for every vertex, i.e. t in (1/g)Z where g = gcd of all coordinates of
// all vertex differences (the edge content).  That makes the candidate set
// {k/g : 1 <= k <= g} finite and the minimum-volume search exact: ratios are
// tried in ascending order and the first one admitting a placement wins
// (t = 1 with w = v0 always does, so the search cannot fail).

#include "miniatures/geometry.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace miniatures {

/// gcd of all coordinates of v - v0 over the vertices; every horizontal
/// lattice ratio of P is a multiple of 1/edge_content(P).
inline BigInt edge_content(const Polytope& p) {
    const auto& v0 = p.vertices()[0];
    BigInt g = 0;
    for (const auto& v : p.vertices())
        for (int k = 0; k < p.dim(); ++k) {
            BigInt diff = v.coords[k] - v0.coords[k];
            if (diff < 0) diff = -diff;
            g = boost::multiprecision::gcd(g, diff);
        }
    return g;  // > 0: full-dimensional polytopes have a nonzero difference
}

struct ReductionReport {
    Rational fundamental_ratio;          // in (0, 1]
    std::vector<LatticePoint> translates;  // every minimum-volume placement w
    bool irreducible = false;            // <=> fundamental_ratio == 1
};

/// Smallest admissible horizontal lattice ratio, every placement realizing
/// it, and the irreducibility verdict.
inline ReductionReport fundamental_search(const Polytope& p) {
    const int d = p.dim();
    const auto& v0 = p.vertices()[0];
    const BigInt g = edge_content(p);

    std::vector<std::vector<BigInt>> diffs;
    diffs.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) {
        std::vector<BigInt> diff(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) diff[std::size_t(k)] = v.coords[k] - v0.coords[k];
        diffs.push_back(std::move(diff));
    }

    std::vector<BigInt> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        BigInt cmin = p.vertices()[0].coords[k], cmax = cmin;
        for (const auto& v : p.vertices()) {
            cmin = std::min(cmin, v.coords[k]);
            cmax = std::max(cmax, v.coords[k]);
        }
        lo[std::size_t(k)] = cmin;
        hi[std::size_t(k)] = cmax;
    }

    for (BigInt k = 1; k <= g; ++k) {
        // t = k/g; g divides every diff coordinate, so the scaled vertices
        // below are integral for every k
        std::vector<LatticePoint> placements;
        std::vector<BigInt> w = lo;
        std::vector<BigInt> pt(static_cast<std::size_t>(d));
        while (true) {
            bool inside = true;
            for (const auto& diff : diffs) {
                for (int c = 0; c < d; ++c)
                    pt[std::size_t(c)] = w[std::size_t(c)] + k * diff[std::size_t(c)] / g;
                if (!contains_point_scaled(p, pt, 1)) {
                    inside = false;
                    break;
                }
            }
            if (inside) placements.emplace_back(w);
            int c = d - 1;
            while (c >= 0 && w[std::size_t(c)] == hi[std::size_t(c)]) {
                w[std::size_t(c)] = lo[std::size_t(c)];
                --c;
            }
            if (c < 0) break;
            ++w[std::size_t(c)];
        }
        if (!placements.empty()) {
            Rational ratio(k, g);
            return {ratio, std::move(placements), ratio == Rational(1)};
        }
    }
    throw std::logic_error("fundamental_search: no admissible ratio (unreachable)");
}

/// True iff the only fundamental miniature of P is P itself.
inline bool is_irreducible(const Polytope& p) {
    return fundamental_search(p).fundamental_ratio == Rational(1);
}

}  // namespace miniatures
