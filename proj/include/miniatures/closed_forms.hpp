#pragma once

// Closed-form counting and volume identities: the two convolved power-sum
// identities behind the square census, simplex numbers, the square census
// count/volume-sum/average, finite-n horizontal averages for simplices and
// hypercubes, an alternating binomial identity, and the two limit constants
// 2/15 and 1/C(2d+1,d).
//
// Each closed form has a "literal" twin that evaluates the defining sum term
// by term; the twins back the verify sweeps and the unit tests, the closed
// forms are the production path (O(1) or O(n) at any n).

#include "miniatures/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace miniatures {

/// C(n, k) by the multiplicative formula; 0 when k > n.  Exact at every step.
inline BigInt binomial(const BigInt& n, int k) {
    if (k < 0 || n < 0) throw std::invalid_argument("binomial: negative argument");
    if (n < k) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) here
    }
    return r;
}

/// d-dimensional simplex number S_d(n) = C(n+d-1, d); S_0 = 1.
inline BigInt simplex_number(int d, std::int64_t n) {
    if (d < 0) throw std::invalid_argument("simplex_number: d must be >= 0");
    if (n < 1) throw std::invalid_argument("simplex_number: n must be >= 1");
    return binomial(BigInt(n) + d - 1, d);
}

/// Same sequence by the defining recursion S_d(n) = sum_{i<=n} S_{d-1}(i);
/// O(d*n) partial-sum table, used to cross-check the binomial form.
inline BigInt simplex_number_recursive(int d, std::int64_t n) {
    if (d < 0 || n < 1) throw std::invalid_argument("simplex_number_recursive: bad arguments");
    std::vector<BigInt> row(std::size_t(n), BigInt(1));
    for (int level = 1; level <= d; ++level)
        for (std::int64_t i = 1; i < n; ++i) row[std::size_t(i)] += row[std::size_t(i) - 1];
    return row[std::size_t(n) - 1];
}

// -- convolved power sums -----------------------------------------------------

/// sum_{i=1}^n i^a (n+1-i)^b, evaluated term by term.
inline Rational convolved_power_sum_literal(int a, int b, std::int64_t n) {
    if (a < 0 || b < 0 || n < 1) throw std::invalid_argument("convolved_power_sum_literal: bad arguments");
    BigInt acc = 0;
    for (std::int64_t i = 1; i <= n; ++i)
        acc += boost::multiprecision::pow(BigInt(i), unsigned(a)) *
               boost::multiprecision::pow(BigInt(n + 1 - i), unsigned(b));
    return Rational(acc);
}

/// n(n+1)^2(n+2)/12 — the value of sum i(n+1-i)^2 and of its mirror
/// sum i^2(n+1-i).
inline Rational convolved_sum_12(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("convolved_sum_12: n must be >= 1");
    BigInt N(n);
    return Rational(N * (N + 1) * (N + 1) * (N + 2), 12);
}

/// n(n+1)^2(n+2)(n^2+2n+2)/60 — the value of sum i^2(n+1-i)^3 and of its
/// mirror sum i^3(n+1-i)^2.
inline Rational convolved_sum_23(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("convolved_sum_23: n must be >= 1");
    BigInt N(n);
    return Rational(N * (N + 1) * (N + 1) * (N + 2) * (N * N + 2 * N + 2), 60);
}

// -- square census closed forms ----------------------------------------------

/// Number of miniatures of [0,1]^2 with resolution n: n(n+1)^2(n+2)/12.
inline BigInt square_count_closed(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("square_count_closed: n must be >= 1");
    BigInt N(n);
    return N * (N + 1) * (N + 1) * (N + 2) / 12;
}

/// Their total area: (n+1)^2(n+2)(2n^2+4n+9)/(180n).
inline Rational square_volsum_closed(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("square_volsum_closed: n must be >= 1");
    BigInt N(n);
    return Rational((N + 1) * (N + 1) * (N + 2) * (2 * N * N + 4 * N + 9), 180 * N);
}

/// Their average area: (2n^2+4n+9)/(15n^2).  Tends to 2/15.
inline Rational square_average_closed(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("square_average_closed: n must be >= 1");
    BigInt N(n);
    return Rational(2 * N * N + 4 * N + 9, 15 * N * N);
}

// -- horizontal averages -------------------------------------------------------

/// Average volume of the horizontal miniatures of a d-simplex at resolution n,
/// relative to the host volume:
///   sum_{i=1}^n S_d(n+1-i) * i^d   /   (n^d * S_{d+1}(n)).
/// The denominator uses the telescoped form n^d * S_{d+1}(n) rather than
/// re-summing the multiplicities.
inline Rational simplex_average_closed(int d, std::int64_t n) {
    if (d < 1 || n < 1) throw std::invalid_argument("simplex_average_closed: bad arguments");
    BigInt numer = 0;
    for (std::int64_t i = 1; i <= n; ++i)
        numer += simplex_number(d, n + 1 - i) * boost::multiprecision::pow(BigInt(i), unsigned(d));
    BigInt denom = boost::multiprecision::pow(BigInt(n), unsigned(d)) * simplex_number(d + 1, n);
    return Rational(numer, denom);
}

/// Average volume of the axis-parallel sub-hypercubes of [0,1]^d at
/// resolution n: sum (n+1-i)^d i^d / (n^d * sum k^d).  Tends to 1/C(2d+1,d).
inline Rational hypercube_average_closed(int d, std::int64_t n) {
    if (d < 1 || n < 1) throw std::invalid_argument("hypercube_average_closed: bad arguments");
    BigInt numer = 0, denom = 0;
    for (std::int64_t i = 1; i <= n; ++i) {
        BigInt placements = boost::multiprecision::pow(BigInt(n + 1 - i), unsigned(d));
        numer += placements * boost::multiprecision::pow(BigInt(i), unsigned(d));
        denom += placements;
    }
    return Rational(numer, boost::multiprecision::pow(BigInt(n), unsigned(d)) * denom);
}

// -- alternating binomial identity ----------------------------------------------

/// C(2d+1,d) * (d+1) * sum_{r=0}^d (-1)^r C(d,r)/(d+r+1).  Identically 1;
/// this is the constant that turns the horizontal-average limit into
/// 1/C(2d+1,d).
inline Rational alternating_binomial_identity(int d) {
    if (d < 0) throw std::invalid_argument("alternating_binomial_identity: d must be >= 0");
    Rational acc(0);
    for (int r = 0; r <= d; ++r) {
        Rational term(binomial(BigInt(d), r), BigInt(d + r + 1));
        acc += (r % 2 == 0) ? term : -term;
    }
    return acc * Rational(BigInt(d + 1)) * Rational(binomial(BigInt(2 * d + 1), d));
}

// -- limits ----------------------------------------------------------------------

/// Limit of the average miniature area of a lattice square, relative to its
/// area: 2/15.
inline Rational square_average_limit() { return Rational(2, 15); }

/// Limit of the average horizontal-miniature volume of a lattice d-simplex,
/// relative to its volume: 1/C(2d+1,d).
inline Rational simplex_average_limit(int d) {
    if (d < 1) throw std::invalid_argument("simplex_average_limit: d must be >= 1");
    return Rational(BigInt(1), binomial(BigInt(2 * d + 1), d));
}

/// Same constant for the hypercube [0,1]^d.
inline Rational hypercube_average_limit(int d) { return simplex_average_limit(d); }

}  // namespace miniatures
