// Command-line front end for the urysohn library.
//
// Structured results go to stdout as JSON, human-readable summaries to stderr.
// Exit codes: 0 success, 1 negative answer (invalid space, failed check),
// 2 parse failure, 3 precondition violation, 4 internal postcondition failure.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "urysohn/acceptance.hpp"
#include "urysohn/json_io.hpp"
#include "urysohn/urysohn.hpp"

namespace {

using namespace urysohn;
using json_io::json;

enum Exit : int { kOk = 0, kNegative = 1, kParse = 2, kPrecondition = 3, kInternal = 4 };

RangeSet parse_range_list(const std::string& text) {
    std::vector<Rational> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        try {
            values.push_back(Rational::parse(item));
        } catch (const ParseError& e) {
            throw ParseError(std::string("--range: ") + e.what());
        }
    }
    return RangeSet::from_values(std::move(values));
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_validate(const std::string& file) {
    const auto space = json_io::space_from(json_io::load_file(file), file);
    const auto report = validate_ultrametric(space);
    emit(json_io::to_json(report, space));
    if (report.ok()) {
        std::cerr << "ok: " << space.size() << "-point ultrametric space\n";
        return kOk;
    }
    for (const auto& v : report.violations) {
        std::cerr << "violation: " << describe(v, space) << '\n';
    }
    return kNegative;
}

int cmd_embed(const std::string& file, const std::string& basepoint_file) {
    const auto space = json_io::space_from(json_io::load_file(file), file);
    UrysohnPoint base;
    if (!basepoint_file.empty()) {
        base = json_io::point_from(json_io::load_file(basepoint_file), basepoint_file);
    }
    const auto images = embed_space(space, base);
    emit(json_io::to_json(images));
    std::cerr << "embedded " << images.size() << " points isometrically\n";
    return kOk;
}

int cmd_extend(const std::string& file) {
    const auto problem = json_io::problem_from(json_io::load_file(file), file);
    const auto t = extend_one_point(problem);
    emit(json_io::to_json(t));
    std::cerr << "extension of '" << problem.theta << "': " << t << '\n';
    return kOk;
}

int cmd_hausdorff(const std::string& file_e, const std::string& file_f) {
    const auto e = json_io::subset_from(json_io::load_file(file_e), file_e);
    const auto f = json_io::subset_from(json_io::load_file(file_f), file_f);
    const auto supinf = hausdorff_supinf(e, f);
    const auto ballmin = hausdorff_ballmin(e, f);
    emit(json{{"supinf", supinf.str()}, {"ballmin", ballmin.str()}});
    std::cerr << "sup-inf: " << supinf << "\nball-family: " << ballmin << '\n';
    if (supinf != ballmin) {
        throw PostconditionError("Hausdorff algorithms disagree");
    }
    return kOk;
}

int cmd_heirs(const std::string& range, std::size_t depth, std::size_t branching) {
    const auto tree = generate_heirs(parse_range_list(range), depth, branching);
    emit(json_io::to_json(tree));
    std::cerr << tree.nodes.size() << " heirs up to depth " << depth << '\n';
    return kOk;
}

int cmd_certify_lp(const std::string& p) {
    Exponent exponent = Exponent::infinity();
    try {
        exponent = Exponent::parse(p);
    } catch (const ParseError& e) {
        throw ParseError(std::string("--p: ") + e.what());
    }
    const auto cert = lp_counterexample(exponent);
    emit(json_io::to_json(cert));
    std::cerr << "p = " << cert.p.str() << ", target (" << cert.target[0] << ", " << cert.target[1] << ", "
              << cert.target[2] << ", " << cert.target[3] << ")";
    if (cert.defect) {
        std::cerr << ", defect " << cert.defect->str();
    }
    std::cerr << "\n" << cert.consistency_defect << '\n';
    return kOk;
}

int cmd_check(std::uint64_t seed, std::size_t size) {
    acceptance::Config cfg;
    cfg.seed = seed;
    if (size > 0) {
        cfg.max_points = size;
    }
    json results = json::array();
    bool all = true;
    for (const auto& r : acceptance::run_all(cfg)) {
        all = all && r.passed;
        // Timing is reported on stderr only so stdout stays byte-identical across runs.
        results.push_back(json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"cases", r.cases},
                               {"detail", r.detail}});
        std::cerr << (r.passed ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.id << "] " << r.title << "  ("
                  << r.cases << " cases, " << std::fixed << std::setprecision(2) << r.seconds << " s)";
        if (!r.detail.empty()) {
            std::cerr << "  " << r.detail;
        }
        std::cerr << '\n';
    }
    emit(json{{"seed", seed}, {"passed", all}, {"criteria", std::move(results)}});
    return all ? kOk : kNegative;
}

int cmd_petal_distance(const std::string& file, const std::string& range) {
    const auto x = json_io::point_from(json_io::load_file(file), file);
    const auto proj = distance_to_petal(x, parse_range_list(range));
    emit(json_io::to_json(proj));
    std::cerr << "distance " << proj.distance << " to " << proj.nearest << '\n';
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the Urysohn universal ultrametric space"};
    app.require_subcommand(1, 1);

    std::string file, file2, basepoint, range, p = "1";
    std::size_t depth = 2, branching = 2, size = 0;
    std::uint64_t seed = acceptance::Config{}.seed;

    auto* validate = app.add_subcommand("validate", "Check the ultrametric axioms of a space file");
    validate->add_option("space", file, "Space JSON")->required();

    auto* embed = app.add_subcommand("embed", "Embed a finite space isometrically into the model");
    embed->add_option("space", file, "Space JSON")->required();
    embed->add_option("--basepoint", basepoint, "Point JSON for the first label");

    auto* extend = app.add_subcommand("extend", "Solve a one-point extension problem");
    extend->add_option("problem", file, "Extension problem JSON")->required();

    auto* hausdorff = app.add_subcommand("hausdorff", "Hausdorff distance of two finite subsets, both ways");
    hausdorff->add_option("first", file, "Subset JSON")->required();
    hausdorff->add_option("second", file2, "Subset JSON")->required();

    auto* heirs = app.add_subcommand("heirs", "Generate a truncated heir tree");
    heirs->add_option("--range", range, "Comma-separated range set, e.g. 0,1/2,1")->required();
    heirs->add_option("--depth", depth, "Maximum inheritance length");
    heirs->add_option("--branching", branching, "Seed indices 1..branching per radius")->check(CLI::PositiveNumber);

    auto* certify = app.add_subcommand("certify-lp", "Certificate that the l_p square is not injective");
    certify->add_option("--p", p, "Exponent: rational >= 1 or inf");

    auto* check = app.add_subcommand("check", "Run the acceptance property suites");
    check->add_option("--seed", seed, "64-bit seed");
    check->add_option("--size", size, "Maximum points per generated space (0 = per-criterion default)");

    auto* petal = app.add_subcommand("petal-distance", "Distance from a point to the S-piece");
    petal->add_option("point", file, "Point JSON")->required();
    petal->add_option("--range", range, "Comma-separated range set S")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*validate) return cmd_validate(file);
        if (*embed) return cmd_embed(file, basepoint);
        if (*extend) return cmd_extend(file);
        if (*hausdorff) return cmd_hausdorff(file, file2);
        if (*heirs) return cmd_heirs(range, depth, branching);
        if (*certify) return cmd_certify_lp(p);
        if (*check) return cmd_check(seed, size);
        if (*petal) return cmd_petal_distance(file, range);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return kPrecondition;
    } catch (const PostconditionError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kParse;
}
