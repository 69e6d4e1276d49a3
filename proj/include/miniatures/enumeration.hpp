#pragma once

// Miniature enumeration at resolution n, two ways: parametric censuses that
// walk the similarity classes directly, and brute-force scans that test every
// candidate placement with the exact containment predicate.  The brute force
// is the oracle the censuses are verified against; it shares no counting
// logic with them.

#include "miniatures/closed_forms.hpp"
#include "miniatures/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace miniatures {

/// One similarity class of miniatures: key, how many, volume of each.
struct CensusRecord {
    ClassKey key;
    BigInt multiplicity;
    Rational per_volume;
};

struct CensusSummary {
    BigInt total_count;
    Rational volume_sum;
    Rational average;
};

inline std::string class_key_label(const ClassKey& key, std::int64_t n) {
    if (const auto* s = std::get_if<SquareSpan>(&key))
        return "(" + std::to_string(s->i) + "," + std::to_string(s->j) + ")";
    const auto& h = std::get<HorizontalRatio>(key);
    return Rational(h.i, n).str();
}

// -- parametric censuses -------------------------------------------------------

/// All miniatures of [0,1]^2 with resolution n, by span class (i,j):
/// 1 <= i <= n, 0 <= j <= n-i, multiplicity (n+1-i-j)^2, area (i^2+j^2)/n^2.
/// Emitted in lexicographic class-key order.
inline std::vector<CensusRecord> square_census(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("square_census: n must be >= 1");
    std::vector<CensusRecord> out;
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = 0; j <= n - i; ++j) {
            BigInt m(n + 1 - i - j);
            out.push_back({SquareSpan{i, j}, m * m, Rational(i * i + j * j, n * n)});
        }
    return out;
}

/// Horizontal miniatures of a d-simplex at resolution n, by ratio i/n:
/// multiplicity S_d(n+1-i), volume (i/n)^d relative to the host volume.
inline std::vector<CensusRecord> simplex_horizontal_census(int d, std::int64_t n,
                                                           const Rational& host_volume) {
    if (d < 1 || n < 1) throw std::invalid_argument("simplex_horizontal_census: bad arguments");
    std::vector<CensusRecord> out;
    out.reserve(std::size_t(n));
    for (std::int64_t i = 1; i <= n; ++i)
        out.push_back({HorizontalRatio{i}, simplex_number(d, n + 1 - i),
                       pow(Rational(i, n), unsigned(d)) * host_volume});
    return out;
}

/// Default host: the standard d-simplex, volume 1/d!.
inline std::vector<CensusRecord> simplex_horizontal_census(int d, std::int64_t n) {
    return simplex_horizontal_census(d, n, Rational(BigInt(1), factorial(d)));
}

/// Axis-parallel sub-hypercubes of [0,1]^d at resolution n, by side i/n:
/// multiplicity (n+1-i)^d, volume (i/n)^d.
inline std::vector<CensusRecord> hypercube_horizontal_census(int d, std::int64_t n) {
    if (d < 1 || n < 1) throw std::invalid_argument("hypercube_horizontal_census: bad arguments");
    std::vector<CensusRecord> out;
    out.reserve(std::size_t(n));
    for (std::int64_t i = 1; i <= n; ++i)
        out.push_back({HorizontalRatio{i}, boost::multiprecision::pow(BigInt(n + 1 - i), unsigned(d)),
                       pow(Rational(i, n), unsigned(d))});
    return out;
}

// -- aggregation ------------------------------------------------------------------

inline CensusSummary aggregate(const std::vector<CensusRecord>& census) {
    BigInt total = 0;
    Rational volsum(0);
    for (const auto& rec : census) {
        total += rec.multiplicity;
        volsum += Rational(rec.multiplicity) * rec.per_volume;
    }
    if (total <= 0) throw std::invalid_argument("aggregate: census has zero total multiplicity");
    return {total, volsum, volsum / Rational(total)};
}

// -- brute-force oracles ------------------------------------------------------------

namespace detail {

inline std::int64_t to_i64(const BigInt& v, const char* what) {
    if (v > std::int64_t(1) << 62 || v < -(std::int64_t(1) << 62))
        throw std::invalid_argument(std::string(what) + ": search grid out of range");
    return v.convert_to<std::int64_t>();
}

}  // namespace detail

// Every square with all four vertices on the 1/n grid and inside the host
// lattice square, each found exactly once under the canonical span
// orientation (i >= 1, j >= 0).
//
// The scan runs over (span class) x (bounding-box corner) instead of
// 4-subsets of grid points: a candidate's bounding box has side (i+j)/n and
// must fit inside the host's bounding box, and convexity reduces containment
// to the four vertex tests.  Output is ordered by (i, j, anchor).
inline std::vector<MiniatureInstance> square_bruteforce(const Polytope& host, std::int64_t n) {
    if (host.family() != Family::Square2D)
        throw std::invalid_argument("square_bruteforce: host must be a lattice square");
    if (n < 1) throw std::invalid_argument("square_bruteforce: n must be >= 1");

    BigInt xmin = host.vertices()[0].coords[0], xmax = xmin;
    BigInt ymin = host.vertices()[0].coords[1], ymax = ymin;
    for (const auto& v : host.vertices()) {
        xmin = std::min(xmin, v.coords[0]);
        xmax = std::max(xmax, v.coords[0]);
        ymin = std::min(ymin, v.coords[1]);
        ymax = std::max(ymax, v.coords[1]);
    }
    const std::int64_t ax_lo = detail::to_i64(xmin * n, "square_bruteforce");
    const std::int64_t ax_hi = detail::to_i64(xmax * n, "square_bruteforce");
    const std::int64_t ay_lo = detail::to_i64(ymin * n, "square_bruteforce");
    const std::int64_t ay_hi = detail::to_i64(ymax * n, "square_bruteforce");
    const std::int64_t span_max = std::min(ax_hi - ax_lo, ay_hi - ay_lo);

    const BigInt scale(n);
    std::vector<MiniatureInstance> out;
    std::vector<BigInt> pt(2);
    for (std::int64_t i = 1; i <= span_max; ++i) {
        for (std::int64_t j = 0; j <= span_max - i; ++j) {
            const std::int64_t box = i + j;
            for (std::int64_t ax = ax_lo; ax <= ax_hi - box; ++ax) {
                for (std::int64_t ay = ay_lo; ay <= ay_hi - box; ++ay) {
                    // vertices in 1/n units: anchor is the bbox corner
                    const std::int64_t vx[4] = {ax, ax + i, ax + box, ax + j};
                    const std::int64_t vy[4] = {ay + i, ay + box, ay + j, ay};
                    bool inside = true;
                    for (int k = 0; k < 4 && inside; ++k) {
                        pt[0] = vx[k];
                        pt[1] = vy[k];
                        inside = contains_point_scaled(host, pt, scale);
                    }
                    if (inside)
                        out.push_back({n,
                                       GridPoint({Rational(ax, n), Rational(ay, n)}, n),
                                       SquareSpan{i, j}});
                }
            }
        }
    }
    return out;
}

// Every horizontal miniature w + (i/n)(P - v0), 1 <= i <= n, with w on the
// 1/n grid, tested by vertex containment.  Translates scan the host's
// bounding box.  For hosts with edge content 1 (every irreducible host, the
// standard simplices, [0,1]^d) this is all horizontal miniatures with
// resolution n; hosts with edge content g > 1 also admit ratios in
// (1/(n*g))Z \ (1/n)Z, which this enumeration (and the ratio-class data
// model) deliberately excludes.
inline std::vector<MiniatureInstance> horizontal_bruteforce(const Polytope& host, std::int64_t n) {
    if (host.family() == Family::Square2D)
        throw std::invalid_argument("horizontal_bruteforce: use square_bruteforce for squares");
    if (n < 1) throw std::invalid_argument("horizontal_bruteforce: n must be >= 1");

    const int d = host.dim();
    const auto& v0 = host.vertices()[0];
    std::vector<std::vector<BigInt>> diffs;  // v_k - v0 for every vertex
    diffs.reserve(host.vertices().size());
    for (const auto& v : host.vertices()) {
        std::vector<BigInt> diff(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) diff[std::size_t(k)] = v.coords[k] - v0.coords[k];
        diffs.push_back(std::move(diff));
    }

    std::vector<std::int64_t> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        BigInt cmin = host.vertices()[0].coords[k], cmax = cmin;
        for (const auto& v : host.vertices()) {
            cmin = std::min(cmin, v.coords[k]);
            cmax = std::max(cmax, v.coords[k]);
        }
        lo[std::size_t(k)] = detail::to_i64(cmin * n, "horizontal_bruteforce");
        hi[std::size_t(k)] = detail::to_i64(cmax * n, "horizontal_bruteforce");
    }

    const BigInt scale(n);
    std::vector<MiniatureInstance> out;
    std::vector<std::int64_t> w = lo;
    std::vector<BigInt> pt(static_cast<std::size_t>(d));
    for (std::int64_t i = 1; i <= n; ++i) {
        w = lo;
        while (true) {
            bool inside = true;
            for (const auto& diff : diffs) {
                for (int k = 0; k < d; ++k) pt[std::size_t(k)] = w[std::size_t(k)] + i * diff[std::size_t(k)];
                if (!contains_point_scaled(host, pt, scale)) {
                    inside = false;
                    break;
                }
            }
            if (inside) {
                std::vector<Rational> anchor(static_cast<std::size_t>(d));
                for (int k = 0; k < d; ++k) anchor[std::size_t(k)] = Rational(w[std::size_t(k)], n);
                out.push_back({n, GridPoint(std::move(anchor), n), HorizontalRatio{i}});
            }
            // odometer over the box, last coordinate fastest
            int k = d - 1;
            while (k >= 0 && w[std::size_t(k)] == hi[std::size_t(k)]) {
                w[std::size_t(k)] = lo[std::size_t(k)];
                --k;
            }
            if (k < 0) break;
            ++w[std::size_t(k)];
        }
    }
    return out;
}

inline std::vector<MiniatureInstance> simplex_horizontal_bruteforce(const Polytope& host,
                                                                    std::int64_t n) {
    if (host.family() != Family::Simplex)
        throw std::invalid_argument("simplex_horizontal_bruteforce: host must be a simplex");
    return horizontal_bruteforce(host, n);
}

// -- grouping & diffing ---------------------------------------------------------------

/// Collapses oracle output into a census (sorted by class key).  All
/// instances must share one resolution.
inline std::vector<CensusRecord> group_by_class(const std::vector<MiniatureInstance>& instances,
                                                const Polytope& host) {
    std::map<ClassKey, BigInt> counts;
    for (const auto& inst : instances) {
        if (inst.resolution != instances.front().resolution)
            throw std::invalid_argument("group_by_class: mixed resolutions");
        ++counts[inst.class_key()];
    }
    std::vector<CensusRecord> out;
    out.reserve(counts.size());
    const std::int64_t n = instances.empty() ? 1 : instances.front().resolution;
    for (const auto& [key, mult] : counts) {
        MiniatureInstance probe{n, GridPoint{}, key};
        out.push_back({key, mult, probe.volume(host)});
    }
    return out;
}

/// Human-readable census comparison; empty result means exact agreement.
/// Classes missing on one side are reported with multiplicity 0.
inline std::vector<std::string> diff_censuses(const std::vector<CensusRecord>& lhs,
                                              const std::vector<CensusRecord>& rhs,
                                              std::int64_t n,
                                              const std::string& lhs_name = "left",
                                              const std::string& rhs_name = "right") {
    std::map<ClassKey, const CensusRecord*> la, ra;
    for (const auto& r : lhs) la[r.key] = &r;
    for (const auto& r : rhs) ra[r.key] = &r;
    std::vector<std::string> out;
    auto li = la.begin();
    auto ri = ra.begin();
    auto report_missing = [&](const ClassKey& key, const CensusRecord& rec, const std::string& side) {
        out.push_back("class " + class_key_label(key, n) + " only in " + side + " (multiplicity " +
                      rec.multiplicity.str() + ", 0 elsewhere)");
    };
    while (li != la.end() || ri != ra.end()) {
        if (ri == ra.end() || (li != la.end() && li->first < ri->first)) {
            report_missing(li->first, *li->second, lhs_name);
            ++li;
        } else if (li == la.end() || ri->first < li->first) {
            report_missing(ri->first, *ri->second, rhs_name);
            ++ri;
        } else {
            const auto& a = *li->second;
            const auto& b = *ri->second;
            if (a.multiplicity != b.multiplicity)
                out.push_back("class " + class_key_label(a.key, n) + ": multiplicity " +
                              a.multiplicity.str() + " (" + lhs_name + ") vs " +
                              b.multiplicity.str() + " (" + rhs_name + ")");
            if (a.per_volume != b.per_volume)
                out.push_back("class " + class_key_label(a.key, n) + ": volume " +
                              a.per_volume.str() + " (" + lhs_name + ") vs " + b.per_volume.str() +
                              " (" + rhs_name + ")");
            ++li;
            ++ri;
        }
    }
    return out;
}

}  // namespace miniatures
