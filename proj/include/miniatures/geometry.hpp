#pragma once

// Lattice polytopes (squares, simplices, axis-aligned hypercubes) with exact
// transforms, volume, and containment predicates.
//
// Containment reduces to integer arithmetic: a rational point m/L is tested
// against half-space conditions cleared of denominators, so no intermediate
// reduction is ever needed on the hot path.

#include "miniatures/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace miniatures {

struct LatticePoint {
    std::vector<BigInt> coords;

    LatticePoint() = default;
    explicit LatticePoint(std::vector<BigInt> c) : coords(std::move(c)) {}
    LatticePoint(std::initializer_list<long long> c) {
        coords.reserve(c.size());
        for (long long v : c) coords.emplace_back(v);
    }

    int dim() const { return static_cast<int>(coords.size()); }

    bool operator==(const LatticePoint& o) const { return coords == o.coords; }
    bool operator!=(const LatticePoint& o) const { return !(*this == o); }
    bool operator<(const LatticePoint& o) const { return coords < o.coords; }
};

inline LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("LatticePoint: dimension mismatch");
    LatticePoint r = a;
    for (int k = 0; k < a.dim(); ++k) r.coords[k] += b.coords[k];
    return r;
}

inline LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("LatticePoint: dimension mismatch");
    LatticePoint r = a;
    for (int k = 0; k < a.dim(); ++k) r.coords[k] -= b.coords[k];
    return r;
}

inline LatticePoint operator*(const BigInt& c, const LatticePoint& p) {
    LatticePoint r = p;
    for (auto& x : r.coords) x *= c;
    return r;
}

/// Point on the 1/n grid: every coordinate, in lowest terms, has denominator
/// dividing the resolution.
struct GridPoint {
    std::vector<Rational> coords;
    std::int64_t resolution = 1;

    GridPoint() = default;
    GridPoint(std::vector<Rational> c, std::int64_t n) : coords(std::move(c)), resolution(n) {
        if (n < 1) throw std::invalid_argument("GridPoint: resolution must be positive");
        for (const auto& x : coords)
            if (BigInt(n) % x.denominator() != 0)
                throw std::invalid_argument("GridPoint: coordinate " + x.str() +
                                            " is not on the 1/" + std::to_string(n) + " grid");
    }

    int dim() const { return static_cast<int>(coords.size()); }

    bool operator==(const GridPoint& o) const {
        return resolution == o.resolution && coords == o.coords;
    }
};

/// Exact determinant of an integer matrix (Bareiss fraction-free elimination).
inline BigInt integer_det(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

enum class Family { Square2D, Simplex, Hypercube };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Square2D: return "square2d";
        case Family::Simplex: return "simplex";
        case Family::Hypercube: return "hypercube";
    }
    return "?";
}

// Full-dimensional lattice polytope of one of the three supported families.
//
// Square2D stores its vertices in the fixed cyclic order
//   v0, v0+u, v0+u+uperp, v0+uperp        with uperp = (u_y, -u_x),
// Simplex as v0..vd (affinely independent), Hypercube as corner + side*{0,1}^d
// in binary-counter order. Degenerate (zero-volume) inputs are rejected.
class Polytope {
public:
    static Polytope square(const LatticePoint& v0, const LatticePoint& u) {
        if (v0.dim() != 2 || u.dim() != 2) throw std::invalid_argument("square: dimension must be 2");
        if (u.coords[0] == 0 && u.coords[1] == 0)
            throw std::invalid_argument("square: span vector must be nonzero");
        LatticePoint uperp{std::vector<BigInt>{u.coords[1], -u.coords[0]}};
        std::vector<LatticePoint> verts{v0, v0 + u, v0 + u + uperp, v0 + uperp};
        return Polytope(Family::Square2D, 2, std::move(verts), 0);
    }

    static Polytope square_from_vertices(const std::vector<LatticePoint>& verts) {
        if (verts.size() != 4) throw std::invalid_argument("square: expected 4 vertices");
        Polytope p = square(verts[0], verts[1] - verts[0]);
        if (p.vertices() != verts)
            throw std::invalid_argument(
                "square: vertices do not follow the v0, v0+u, v0+u+uperp, v0+uperp convention");
        return p;
    }

    static Polytope simplex(std::vector<LatticePoint> verts) {
        if (verts.empty()) throw std::invalid_argument("simplex: no vertices");
        const int d = verts[0].dim();
        if (static_cast<int>(verts.size()) != d + 1)
            throw std::invalid_argument("simplex: expected d+1 vertices");
        for (const auto& v : verts)
            if (v.dim() != d) throw std::invalid_argument("simplex: dimension mismatch");
        std::vector<std::vector<BigInt>> edges(d, std::vector<BigInt>(d));
        for (int c = 0; c < d; ++c)
            for (int r = 0; r < d; ++r) edges[r][c] = verts[c + 1].coords[r] - verts[0].coords[r];
        if (integer_det(edges) == 0)
            throw std::invalid_argument("simplex: vertices are affinely dependent");
        return Polytope(Family::Simplex, d, std::move(verts), 0);
    }

    static Polytope hypercube(const LatticePoint& corner, BigInt side) {
        const int d = corner.dim();
        if (d < 1) throw std::invalid_argument("hypercube: dimension must be positive");
        if (side < 1) throw std::invalid_argument("hypercube: side must be positive");
        std::vector<LatticePoint> verts;
        verts.reserve(std::size_t(1) << d);
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << d); ++mask) {
            LatticePoint v = corner;
            for (int k = 0; k < d; ++k)
                if (mask >> k & 1u) v.coords[k] += side;
            verts.push_back(std::move(v));
        }
        return Polytope(Family::Hypercube, d, std::move(verts), std::move(side));
    }

    static Polytope unit_square() { return square(LatticePoint{0, 0}, LatticePoint{0, 1}); }

    static Polytope standard_simplex(int d) {
        if (d < 1) throw std::invalid_argument("standard_simplex: d must be positive");
        std::vector<LatticePoint> verts(std::size_t(d) + 1);
        for (auto& v : verts) v.coords.assign(std::size_t(d), BigInt(0));
        for (int k = 0; k < d; ++k) verts[std::size_t(k) + 1].coords[k] = 1;
        return simplex(std::move(verts));
    }

    static Polytope unit_cube(int d) {
        LatticePoint corner;
        corner.coords.assign(std::size_t(d), BigInt(0));
        return hypercube(corner, 1);
    }

    Family family() const { return family_; }
    int dim() const { return dim_; }
    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    const LatticePoint& corner() const { return vertices_[0]; }
    const BigInt& side() const { return side_; }

    /// Square2D only: the span vector u.
    LatticePoint span() const {
        if (family_ != Family::Square2D) throw std::logic_error("span: not a square");
        return vertices_[1] - vertices_[0];
    }

    bool operator==(const Polytope& o) const {
        return family_ == o.family_ && vertices_ == o.vertices_;
    }

private:
    Polytope(Family f, int d, std::vector<LatticePoint> verts, BigInt side)
        : family_(f), dim_(d), vertices_(std::move(verts)), side_(std::move(side)) {}

    Family family_;
    int dim_;
    std::vector<LatticePoint> vertices_;
    BigInt side_;  // hypercube only
};

inline Polytope translate(const Polytope& p, const LatticePoint& a) {
    if (a.dim() != p.dim()) throw std::invalid_argument("translate: dimension mismatch");
    switch (p.family()) {
        case Family::Square2D:
            return Polytope::square(p.vertices()[0] + a, p.span());
        case Family::Simplex: {
            std::vector<LatticePoint> verts;
            verts.reserve(p.vertices().size());
            for (const auto& v : p.vertices()) verts.push_back(v + a);
            return Polytope::simplex(std::move(verts));
        }
        case Family::Hypercube:
            return Polytope::hypercube(p.corner() + a, p.side());
    }
    throw std::logic_error("translate: unknown family");
}

inline Polytope dilate(const Polytope& p, const BigInt& c) {
    if (c < 1) throw std::invalid_argument("dilate: factor must be a positive integer");
    switch (p.family()) {
        case Family::Square2D:
            return Polytope::square(c * p.vertices()[0], c * p.span());
        case Family::Simplex: {
            std::vector<LatticePoint> verts;
            verts.reserve(p.vertices().size());
            for (const auto& v : p.vertices()) verts.push_back(c * v);
            return Polytope::simplex(std::move(verts));
        }
        case Family::Hypercube:
            return Polytope::hypercube(c * p.corner(), c * p.side());
    }
    throw std::logic_error("dilate: unknown family");
}

inline Rational volume(const Polytope& p) {
    switch (p.family()) {
        case Family::Square2D: {
            LatticePoint u = p.span();
            return Rational(u.coords[0] * u.coords[0] + u.coords[1] * u.coords[1]);
        }
        case Family::Simplex: {
            const int d = p.dim();
            std::vector<std::vector<BigInt>> edges(d, std::vector<BigInt>(d));
            for (int c = 0; c < d; ++c)
                for (int r = 0; r < d; ++r)
                    edges[r][c] = p.vertices()[c + 1].coords[r] - p.vertices()[0].coords[r];
            BigInt det = integer_det(edges);
            if (det < 0) det = -det;
            return Rational(det, factorial(d));
        }
        case Family::Hypercube:
            return Rational(boost::multiprecision::pow(p.side(), unsigned(p.dim())));
    }
    throw std::logic_error("volume: unknown family");
}

// Core predicate: does the point num/L lie in P (closed)?  All arithmetic is
// on cleared denominators.
inline bool contains_point_scaled(const Polytope& p, const std::vector<BigInt>& num,
                                  const BigInt& L) {
    if (static_cast<int>(num.size()) != p.dim())
        throw std::invalid_argument("contains_point: dimension mismatch");
    switch (p.family()) {
        case Family::Square2D: {
            // vertex order is clockwise, so interior points sit on the
            // non-positive side of every directed edge
            const auto& vs = p.vertices();
            for (int k = 0; k < 4; ++k) {
                const auto& a = vs[k].coords;
                const auto& b = vs[(k + 1) % 4].coords;
                BigInt ex = b[0] - a[0];
                BigInt ey = b[1] - a[1];
                BigInt wx = num[0] - L * a[0];
                BigInt wy = num[1] - L * a[1];
                if (ex * wy - ey * wx > 0) return false;
            }
            return true;
        }
        case Family::Simplex: {
            // barycentric coordinates by Cramer's rule on cleared denominators
            const int d = p.dim();
            const auto& v0 = p.vertices()[0].coords;
            std::vector<std::vector<BigInt>> edges(d, std::vector<BigInt>(d));
            for (int c = 0; c < d; ++c)
                for (int r = 0; r < d; ++r) edges[r][c] = p.vertices()[c + 1].coords[r] - v0[r];
            std::vector<BigInt> rhs(d);
            for (int r = 0; r < d; ++r) rhs[r] = num[r] - L * v0[r];
            BigInt D = integer_det(edges);
            const int s = D > 0 ? 1 : -1;
            BigInt lambda_sum = 0;  // sum of s * N_k, each lambda_k = N_k / (L*D)
            for (int c = 0; c < d; ++c) {
                auto cols = edges;
                for (int r = 0; r < d; ++r) cols[r][c] = rhs[r];
                BigInt Nk = integer_det(cols);
                if (s * Nk < 0) return false;
                lambda_sum += s * Nk;
            }
            return lambda_sum <= L * (s * D);
        }
        case Family::Hypercube: {
            for (int k = 0; k < p.dim(); ++k) {
                BigInt lo = L * p.corner().coords[k];
                if (num[k] < lo || num[k] > lo + L * p.side()) return false;
            }
            return true;
        }
    }
    throw std::logic_error("contains_point: unknown family");
}

inline bool contains_point(const Polytope& p, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != p.dim())
        throw std::invalid_argument("contains_point: dimension mismatch");
    BigInt L = 1;
    for (const auto& c : x) L = L / boost::multiprecision::gcd(L, c.denominator()) * c.denominator();
    std::vector<BigInt> num(x.size());
    for (std::size_t k = 0; k < x.size(); ++k)
        num[k] = x[k].numerator() * (L / x[k].denominator());
    return contains_point_scaled(p, num, L);
}

inline bool contains_point(const Polytope& p, const GridPoint& x) {
    return contains_point(p, x.coords);
}

// ---------------------------------------------------------------------------
// Miniature instances

/// Similarity class of a tilted grid square: edge vectors (i/n, j/n) and
/// (j/n, -i/n).  Canonical orientation i >= 1, j >= 0 — of the four rotations
/// of the edge vector exactly one satisfies it, so each square is keyed once.
struct SquareSpan {
    std::int64_t i = 1;
    std::int64_t j = 0;

    bool operator==(const SquareSpan& o) const { return i == o.i && j == o.j; }
    bool operator<(const SquareSpan& o) const { return i != o.i ? i < o.i : j < o.j; }
};

/// Similarity class of a horizontal miniature: ratio i/n, 1 <= i <= n.
struct HorizontalRatio {
    std::int64_t i = 1;

    bool operator==(const HorizontalRatio& o) const { return i == o.i; }
    bool operator<(const HorizontalRatio& o) const { return i < o.i; }
};

using ClassKey = std::variant<SquareSpan, HorizontalRatio>;

// A concrete miniature on the 1/n grid.
//
// For SquareSpan payloads the anchor is the lower-left corner of the
// miniature's bounding box (the box has side (i+j)/n, which is what makes the
// (n+1-i-j)^2 placement count of the unit-square census immediate); the
// vertex from which the span emanates is anchor + (0, i/n).
// For HorizontalRatio payloads the anchor is the image of the host's first
// vertex, i.e. the miniature is anchor + (i/n)*(P - v0).
struct MiniatureInstance {
    std::int64_t resolution = 1;
    GridPoint anchor;
    ClassKey payload;

    ClassKey class_key() const { return payload; }

    Rational volume(const Polytope& host) const {
        if (const auto* s = std::get_if<SquareSpan>(&payload))
            return Rational(s->i * s->i + s->j * s->j, resolution * resolution);
        const auto& h = std::get<HorizontalRatio>(payload);
        return pow(Rational(h.i, resolution), unsigned(host.dim())) * miniatures::volume(host);
    }
};

/// Vertex list of a miniature; throws if any vertex is off-grid or outside
/// the host.
inline std::vector<GridPoint> realize(const MiniatureInstance& m, const Polytope& host) {
    if (m.resolution < 1) throw std::invalid_argument("realize: resolution must be positive");
    if (m.anchor.resolution != m.resolution)
        throw std::invalid_argument("realize: anchor resolution does not match instance");
    const Rational n_inv(1, m.resolution);
    std::vector<std::vector<Rational>> verts;

    if (const auto* sp = std::get_if<SquareSpan>(&m.payload)) {
        if (host.family() != Family::Square2D)
            throw std::invalid_argument("realize: SquareSpan payload requires a square host");
        if (sp->i < 1 || sp->j < 0) throw std::invalid_argument("realize: span not canonical");
        const Rational si(sp->i, m.resolution), sj(sp->j, m.resolution);
        std::vector<Rational> v0{m.anchor.coords[0], m.anchor.coords[1] + si};
        verts = {v0,
                 {v0[0] + si, v0[1] + sj},
                 {v0[0] + si + sj, v0[1] + sj - si},
                 {v0[0] + sj, v0[1] - si}};
    } else {
        const auto& hr = std::get<HorizontalRatio>(m.payload);
        if (host.family() == Family::Square2D)
            throw std::invalid_argument("realize: HorizontalRatio payload requires a simplex or hypercube host");
        if (hr.i < 1 || hr.i > m.resolution)
            throw std::invalid_argument("realize: ratio must satisfy 1 <= i <= n");
        const Rational t(hr.i, m.resolution);
        const auto& v0 = host.vertices()[0];
        for (const auto& v : host.vertices()) {
            std::vector<Rational> w(std::size_t(host.dim()));
            for (int k = 0; k < host.dim(); ++k)
                w[std::size_t(k)] =
                    m.anchor.coords[std::size_t(k)] + t * Rational(v.coords[k] - v0.coords[k]);
            verts.push_back(std::move(w));
        }
    }

    std::vector<GridPoint> out;
    out.reserve(verts.size());
    for (auto& v : verts) {
        if (!contains_point(host, v))
            throw std::domain_error("realize: miniature vertex lies outside the host");
        out.emplace_back(std::move(v), m.resolution);  // GridPoint ctor re-checks the grid
    }
    return out;
}

}  // namespace miniatures
