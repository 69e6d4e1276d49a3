// Command-line front end: censuses, exact averages, identity verification,
// convergence tables, irreducibility reports, and brute-force/census
// comparison.  Machine-readable output keeps every quantity as an exact
// "p/q" string; identical invocations produce identical bytes.
//
// Exit codes: 0 success, 1 verification or diff mismatch, 2 usage/input error.

#include "miniatures/miniatures.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace miniatures;

Family parse_family(const std::string& name) {
    if (name == "square" || name == "square2d") return Family::Square2D;
    if (name == "simplex") return Family::Simplex;
    if (name == "hypercube" || name == "cube") return Family::Hypercube;
    throw CLI::ValidationError("family", "unknown family '" + name + "'");
}

std::vector<std::int64_t> parse_n_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
        if (out.back() < 1) throw std::invalid_argument("--n entries must be >= 1");
    }
    if (out.empty()) throw std::invalid_argument("--n list is empty");
    return out;
}

// stdout unless -o was given
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void emit_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

struct ShapeArgs {
    std::string family_name;
    std::string input_path;
    int d = 2;
    std::int64_t n = 1;

    // host + effective family; positional family may be omitted with --input
    std::pair<Polytope, Family> resolve() const {
        if (!input_path.empty()) {
            Polytope host = load_polytope(input_path);
            if (!family_name.empty() && parse_family(family_name) != host.family())
                throw std::invalid_argument("family argument does not match the input file");
            return {host, host.family()};
        }
        if (family_name.empty())
            throw std::invalid_argument("either a family argument or --input is required");
        Family fam = parse_family(family_name);
        switch (fam) {
            case Family::Square2D: return {Polytope::unit_square(), fam};
            case Family::Simplex: return {Polytope::standard_simplex(d), fam};
            case Family::Hypercube: return {Polytope::unit_cube(d), fam};
        }
        throw std::logic_error("unreachable");
    }
};

std::vector<CensusRecord> parametric_census(Family fam, int d, std::int64_t n,
                                            const Rational& host_volume) {
    switch (fam) {
        case Family::Square2D:
            return square_census(n);
        case Family::Simplex:
            return simplex_horizontal_census(d, n, host_volume);
        case Family::Hypercube: {
            auto census = hypercube_horizontal_census(d, n);
            for (auto& rec : census) rec.per_volume *= host_volume;
            return census;
        }
    }
    throw std::logic_error("unreachable");
}

int run_census(const ShapeArgs& shape, const std::string& format, const std::string& out_path) {
    Family fam = parse_family(shape.family_name);
    int d = fam == Family::Square2D ? 2 : shape.d;
    auto census = parametric_census(fam, d, shape.n, fam == Family::Simplex
                                                         ? Rational(BigInt(1), factorial(d))
                                                         : Rational(1));
    OutputTarget out(out_path);
    if (format == "json")
        emit_json(out.stream(), census_to_json(census, shape.n));
    else
        write_census_csv(out.stream(), census, shape.n);
    return 0;
}

int run_average(const ShapeArgs& shape, const std::string& format, const std::string& out_path) {
    Family fam = parse_family(shape.family_name);
    CensusSummary summary;
    if (fam == Family::Square2D) {
        // closed forms keep this O(1); identical to aggregating the census
        BigInt count = square_count_closed(shape.n);
        Rational volsum = square_volsum_closed(shape.n);
        summary = {count, volsum, square_average_closed(shape.n)};
    } else {
        int d = shape.d;
        summary = aggregate(fam == Family::Simplex ? simplex_horizontal_census(d, shape.n)
                                                   : hypercube_horizontal_census(d, shape.n));
    }
    OutputTarget out(out_path);
    if (format == "csv")
        write_summary_csv(out.stream(), shape.n, summary);
    else
        emit_json(out.stream(), summary_to_json(shape.n, summary));
    return 0;
}

int run_converge(const std::string& shape_name, int d, const std::string& n_list, bool decimal,
                 const std::string& out_path) {
    ConvergenceShape shape;
    if (shape_name == "square-av")
        shape = ConvergenceShape::SquareAverage;
    else if (shape_name == "simplex-nl")
        shape = ConvergenceShape::SimplexHorizontal;
    else if (shape_name == "hypercube-nl")
        shape = ConvergenceShape::HypercubeHorizontal;
    else
        throw std::invalid_argument("unknown shape '" + shape_name +
                                    "' (expected square-av, simplex-nl, or hypercube-nl)");
    auto rows = convergence_table(shape, d, parse_n_list(n_list));
    OutputTarget out(out_path);
    write_convergence_csv(out.stream(), rows, decimal);
    return 0;
}

int run_reduce(const std::string& input_path, const std::string& out_path) {
    Polytope host = load_polytope(input_path);
    ReductionReport report = fundamental_search(host);
    OutputTarget out(out_path);
    emit_json(out.stream(), reduction_to_json(report));
    return 0;
}

int run_bruteforce(const ShapeArgs& shape, bool diff, const std::string& format,
                   const std::string& out_path) {
    auto [host, fam] = shape.resolve();
    int d = host.dim();
    auto instances = fam == Family::Square2D ? square_bruteforce(host, shape.n)
                                             : horizontal_bruteforce(host, shape.n);
    auto grouped = group_by_class(instances, host);

    OutputTarget out(out_path);
    if (format == "json")
        emit_json(out.stream(), census_to_json(grouped, shape.n));
    else
        write_census_csv(out.stream(), grouped, shape.n);

    if (!diff) return 0;
    auto reference = parametric_census(fam, d, shape.n, volume(host));
    auto mismatches = diff_censuses(reference, grouped, shape.n, "census", "bruteforce");
    if (mismatches.empty()) {
        std::cerr << "diff: empty (bruteforce matches census)\n";
        return 0;
    }
    for (const auto& line : mismatches) std::cerr << "diff: " << line << '\n';
    return 1;
}

// -- verify bundles ----------------------------------------------------------

struct VerifyReport {
    int checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

void verify_sum_identities(VerifyReport& rep, std::int64_t max_n) {
    for (std::int64_t n = 1; n <= max_n; ++n) {
        rep.expect(convolved_power_sum_literal(1, 2, n) == convolved_sum_12(n),
                   "sum i(n+1-i)^2 != closed form at n=" + std::to_string(n));
        rep.expect(convolved_power_sum_literal(2, 1, n) == convolved_sum_12(n),
                   "sum i^2(n+1-i) != closed form at n=" + std::to_string(n));
        rep.expect(convolved_power_sum_literal(2, 3, n) == convolved_sum_23(n),
                   "sum i^2(n+1-i)^3 != closed form at n=" + std::to_string(n));
        rep.expect(convolved_power_sum_literal(3, 2, n) == convolved_sum_23(n),
                   "sum i^3(n+1-i)^2 != closed form at n=" + std::to_string(n));
    }
}

void verify_simplex_numbers(VerifyReport& rep, int max_d, std::int64_t max_n) {
    for (int d = 0; d <= max_d; ++d)
        for (std::int64_t n = 1; n <= max_n; ++n)
            rep.expect(simplex_number_recursive(d, n) == simplex_number(d, n),
                       "simplex number recursion != binomial at d=" + std::to_string(d) +
                           ", n=" + std::to_string(n));
}

void verify_binomial_identity(VerifyReport& rep, int max_d) {
    for (int d = 0; d <= max_d; ++d)
        rep.expect(alternating_binomial_identity(d) == Rational(1),
                   "alternating binomial identity != 1 at d=" + std::to_string(d));
}

void verify_square_sweep(VerifyReport& rep, std::int64_t max_n) {
    Polytope host = Polytope::unit_square();
    for (std::int64_t n = 1; n <= max_n; ++n) {
        auto census = square_census(n);
        auto grouped = group_by_class(square_bruteforce(host, n), host);
        auto mismatches = diff_censuses(census, grouped, n, "census", "bruteforce");
        rep.expect(mismatches.empty(), "bruteforce/census diff nonempty at n=" + std::to_string(n));
        auto summary = aggregate(census);
        rep.expect(summary.total_count == square_count_closed(n),
                   "census count != closed form at n=" + std::to_string(n));
        rep.expect(summary.volume_sum == square_volsum_closed(n),
                   "census volume sum != closed form at n=" + std::to_string(n));
        rep.expect(summary.average == square_average_closed(n),
                   "census average != closed form at n=" + std::to_string(n));
    }
}

void verify_reduction(VerifyReport& rep) {
    std::vector<Polytope> corpus{
        Polytope::unit_square(),
        Polytope::square(LatticePoint{0, 0}, LatticePoint{2, 1}),
        Polytope::standard_simplex(1),
        Polytope::standard_simplex(2),
        Polytope::standard_simplex(3),
        Polytope::unit_cube(2),
        Polytope::unit_cube(3),
    };
    for (const auto& p : corpus) {
        rep.expect(is_irreducible(p), std::string("expected irreducible ") + family_name(p.family()));
        for (int c = 2; c <= 5; ++c) {
            auto report = fundamental_search(dilate(p, c));
            rep.expect(!report.irreducible && report.fundamental_ratio <= Rational(1, c),
                       "dilate by " + std::to_string(c) + " not reducible with ratio <= 1/" +
                           std::to_string(c));
        }
    }
    auto big_square = fundamental_search(dilate(Polytope::unit_square(), 2));
    rep.expect(big_square.fundamental_ratio == Rational(1, 2) && big_square.translates.size() == 4,
               "[0,2]^2 expected ratio 1/2 with 4 translates");
}

int run_verify(bool sums, bool simplex_numbers, bool binomial_identity, bool square_sweep,
               bool reduction, std::int64_t max_n, int max_d, std::int64_t square_max_n) {
    const bool none_selected =
        !sums && !simplex_numbers && !binomial_identity && !square_sweep && !reduction;
    VerifyReport rep;
    if (sums || none_selected) {
        verify_sum_identities(rep, max_n);
        std::cout << "sum identities: n <= " << max_n << '\n';
    }
    if (simplex_numbers || none_selected) {
        verify_simplex_numbers(rep, 10, 100);
        std::cout << "simplex numbers (recursion vs binomial): d <= 10, n <= 100\n";
    }
    if (binomial_identity || none_selected) {
        verify_binomial_identity(rep, max_d);
        std::cout << "alternating binomial identity: d <= " << max_d << '\n';
    }
    if (square_sweep || none_selected) {
        verify_square_sweep(rep, square_max_n);
        std::cout << "square bruteforce vs census vs closed forms: n <= " << square_max_n << '\n';
    }
    if (reduction || none_selected) {
        verify_reduction(rep);
        std::cout << "reduction corpus\n";
    }
    if (rep.failures.empty()) {
        std::cout << "verify: all " << rep.checks << " checks passed\n";
        return 0;
    }
    for (const auto& f : rep.failures) std::cerr << "FAIL: " << f << '\n';
    std::cerr << "verify: " << rep.failures.size() << " of " << rep.checks << " checks failed\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration of similar grid sub-polytopes (miniatures) of lattice "
                 "squares, simplices, and hypercubes"};
    app.require_subcommand(1);

    ShapeArgs shape;
    std::string format = "csv";
    std::string out_path;

    auto add_shape_options = [&](CLI::App* sub, bool with_input) {
        auto* fam_opt = sub->add_option("family", shape.family_name, "square | simplex | hypercube");
        if (!with_input) fam_opt->required();
        sub->add_option("--n", shape.n, "grid resolution")->required()->check(CLI::PositiveNumber);
        sub->add_option("--d", shape.d, "dimension (simplex/hypercube)")->check(CLI::PositiveNumber);
        if (with_input)
            sub->add_option("--input", shape.input_path, "polytope JSON file (overrides family)");
        sub->add_option("-o,--output", out_path, "write to file instead of stdout");
    };

    auto* census_cmd = app.add_subcommand("census", "similarity-class census at resolution n");
    add_shape_options(census_cmd, false);
    census_cmd->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* average_cmd = app.add_subcommand("average", "exact count/volume-sum/average summary");
    add_shape_options(average_cmd, false);
    average_cmd->add_option("--format", format, "json | csv")
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_str("json");

    std::string converge_shape, n_list;
    bool decimal = false;
    auto* converge_cmd = app.add_subcommand("converge", "convergence table toward the limit");
    converge_cmd->add_option("--shape", converge_shape, "square-av | simplex-nl | hypercube-nl")
        ->required();
    converge_cmd->add_option("--d", shape.d, "dimension for simplex-nl / hypercube-nl")
        ->check(CLI::PositiveNumber);
    converge_cmd->add_option("--n", n_list, "comma-separated ascending resolutions")->required();
    converge_cmd->add_flag("--decimal", decimal, "append a display-only decimal column");
    converge_cmd->add_option("-o,--output", out_path, "write to file instead of stdout");

    std::string reduce_input;
    auto* reduce_cmd = app.add_subcommand("reduce", "fundamental-miniature search / irreducibility");
    reduce_cmd->add_option("--input", reduce_input, "polytope JSON file")->required();
    reduce_cmd->add_option("-o,--output", out_path, "write to file instead of stdout");

    bool diff = false;
    auto* brute_cmd = app.add_subcommand("bruteforce", "exhaustive grid enumeration (the oracle)");
    add_shape_options(brute_cmd, true);
    brute_cmd->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    brute_cmd->add_flag("--diff", diff, "compare against the parametric census; exit 1 on mismatch");

    bool v_sums = false, v_snum = false, v_binom = false, v_square = false, v_reduction = false;
    std::int64_t max_n = 1000, square_max_n = 12;
    int max_d = 50;
    auto* verify_cmd = app.add_subcommand("verify", "identity sweeps; exit 0 iff everything holds");
    verify_cmd->add_flag("--sums", v_sums, "convolved power-sum identities");
    verify_cmd->add_flag("--simplex-numbers", v_snum, "simplex-number recursion vs binomial");
    verify_cmd->add_flag("--binomial-identity", v_binom, "alternating binomial identity == 1");
    verify_cmd->add_flag("--square-sweep", v_square, "square bruteforce vs census vs closed forms");
    verify_cmd->add_flag("--reduction", v_reduction, "reduction sanity corpus");
    verify_cmd->add_option("--max-n", max_n, "sum-identity sweep bound")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-d", max_d, "binomial-identity sweep bound")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--square-max-n", square_max_n, "square sweep bound")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (census_cmd->parsed()) return run_census(shape, format, out_path);
        if (average_cmd->parsed())
            return run_average(shape, average_cmd->count("--format") ? format : "json", out_path);
        if (converge_cmd->parsed())
            return run_converge(converge_shape, shape.d, n_list, decimal, out_path);
        if (reduce_cmd->parsed()) return run_reduce(reduce_input, out_path);
        if (brute_cmd->parsed()) return run_bruteforce(shape, diff, format, out_path);
        if (verify_cmd->parsed())
            return run_verify(v_sums, v_snum, v_binom, v_square, v_reduction, max_n, max_d,
                              square_max_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
