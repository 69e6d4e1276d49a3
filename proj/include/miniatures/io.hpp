#pragma once

// File formats: polytope JSON input, census CSV/JSON, summary JSON,
// reduction-report JSON, convergence CSV.  Rationals travel as "p/q" strings
// (plain "p" when integral) so exactness survives pipelines; decimals appear
// only in the optional display column of convergence tables.  All writers are
// deterministic: fixed ordering, '\n' line ends, no timestamps.

#include "miniatures/analysis.hpp"
#include "miniatures/enumeration.hpp"
#include "miniatures/geometry.hpp"
#include "miniatures/reduction.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace miniatures {

using json = nlohmann::json;

// -- polytope files -----------------------------------------------------------

// {"family": "square2d"|"simplex"|"hypercube", "dim": d, "vertices": [[int,...],...]}
// hypercubes alternatively {"family":"hypercube", "dim":d, "corner":[...], "side": s}
inline Polytope polytope_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family"))
        throw std::invalid_argument("polytope: expected an object with a \"family\" field");
    const std::string fam = j.at("family").get<std::string>();

    auto parse_point = [](const json& arr) {
        if (!arr.is_array() || arr.empty())
            throw std::invalid_argument("polytope: vertex must be a nonempty array of integers");
        LatticePoint p;
        p.coords.reserve(arr.size());
        for (const auto& c : arr) {
            if (!c.is_number_integer())
                throw std::invalid_argument("polytope: vertex coordinates must be integers");
            p.coords.emplace_back(c.get<std::int64_t>());
        }
        return p;
    };
    auto parse_vertices = [&](int expected_dim) {
        std::vector<LatticePoint> verts;
        for (const auto& v : j.at("vertices")) {
            verts.push_back(parse_point(v));
            if (expected_dim && verts.back().dim() != expected_dim)
                throw std::invalid_argument("polytope: vertex dimension does not match \"dim\"");
        }
        return verts;
    };
    const int dim = j.contains("dim") ? j.at("dim").get<int>() : 0;

    if (fam == "square2d") return Polytope::square_from_vertices(parse_vertices(2));
    if (fam == "simplex") return Polytope::simplex(parse_vertices(dim));
    if (fam == "hypercube") {
        if (j.contains("corner"))
            return Polytope::hypercube(parse_point(j.at("corner")),
                                       BigInt(j.at("side").get<std::int64_t>()));
        // explicit vertex list: infer corner/side, then demand the exact vertex set
        auto verts = parse_vertices(dim);
        if (verts.empty()) throw std::invalid_argument("polytope: hypercube needs vertices or corner/side");
        const int d = verts[0].dim();
        LatticePoint corner = verts[0];
        BigInt side = 0;
        for (const auto& v : verts)
            for (int k = 0; k < d; ++k) corner.coords[k] = std::min(corner.coords[k], v.coords[k]);
        for (const auto& v : verts)
            for (int k = 0; k < d; ++k) {
                BigInt extent = v.coords[k] - corner.coords[k];
                side = std::max(side, extent);
            }
        Polytope p = Polytope::hypercube(corner, side);
        auto sorted = [](std::vector<LatticePoint> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        if (sorted(p.vertices()) != sorted(verts))
            throw std::invalid_argument("polytope: vertices do not form an axis-aligned hypercube");
        return p;
    }
    throw std::invalid_argument("polytope: unknown family \"" + fam + "\"");
}

inline Polytope load_polytope(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open polytope file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("cannot parse polytope file " + path + ": " + e.what());
    }
    return polytope_from_json(j);
}

inline json polytope_to_json(const Polytope& p) {
    json j;
    j["family"] = family_name(p.family());
    j["dim"] = p.dim();
    json verts = json::array();
    for (const auto& v : p.vertices()) {
        json row = json::array();
        for (const auto& c : v.coords) row.push_back(c.convert_to<std::int64_t>());
        verts.push_back(std::move(row));
    }
    j["vertices"] = std::move(verts);
    return j;
}

// -- census output -------------------------------------------------------------

// Spans render as "(i,j)" (quoted in CSV: the label contains a comma), ratio
// classes as "i/n".
inline void write_census_csv(std::ostream& os, const std::vector<CensusRecord>& census,
                             std::int64_t n) {
    os << "class,multiplicity,volume\n";
    for (const auto& rec : census) {
        std::string label = class_key_label(rec.key, n);
        if (label.find(',') != std::string::npos) label = "\"" + label + "\"";
        os << label << ',' << rec.multiplicity.str() << ',' << rec.per_volume.str() << '\n';
    }
}

inline json census_to_json(const std::vector<CensusRecord>& census, std::int64_t n) {
    json rows = json::array();
    for (const auto& rec : census)
        rows.push_back({{"class", class_key_label(rec.key, n)},
                        {"multiplicity", rec.multiplicity.str()},
                        {"volume", rec.per_volume.str()}});
    return rows;
}

inline json summary_to_json(std::int64_t n, const CensusSummary& summary) {
    return {{"n", n},
            {"count", summary.total_count.str()},
            {"volume_sum", summary.volume_sum.str()},
            {"average", summary.average.str()}};
}

inline void write_summary_csv(std::ostream& os, std::int64_t n, const CensusSummary& summary) {
    os << "n,count,volume_sum,average\n"
       << n << ',' << summary.total_count.str() << ',' << summary.volume_sum.str() << ','
       << summary.average.str() << '\n';
}

// -- reduction output ------------------------------------------------------------

inline json reduction_to_json(const ReductionReport& report) {
    json translates = json::array();
    for (const auto& w : report.translates) {
        json row = json::array();
        for (const auto& c : w.coords) row.push_back(c.convert_to<std::int64_t>());
        translates.push_back(std::move(row));
    }
    return {{"ratio", report.fundamental_ratio.str()},
            {"translates", std::move(translates)},
            {"irreducible", report.irreducible}};
}

// -- convergence output ------------------------------------------------------------

inline void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows,
                                  bool decimal_column = false) {
    os << "n,value,limit,abs_error";
    if (decimal_column) os << ",value_decimal";
    os << '\n';
    for (const auto& row : rows) {
        os << row.n << ',' << row.value.str() << ',' << row.limit.str() << ','
           << row.abs_error.str();
        if (decimal_column) os << ',' << to_decimal_string(row.value);
        os << '\n';
    }
}

}  // namespace miniatures
