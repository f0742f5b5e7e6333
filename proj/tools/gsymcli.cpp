#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gsym/cohomology.hpp"
#include "gsym/derham.hpp"
#include "gsym/io.hpp"

using namespace gsym;

namespace {

Json load_document(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw schema_error("cannot open input: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw schema_error(std::string("invalid JSON: ") + e.what());
    }
}

const Json& field(const Json& doc, const std::string& key) {
    if (!doc.contains(key)) throw schema_error("missing field: " + key);
    return doc.at(key);
}

Poly theta_of(const Json& doc, const ChartPtr& ctx) {
    if (doc.contains("theta")) return poly_from_json(doc.at("theta"), ctx);
    if (doc.contains("data")) return theta_from_data(data_from_json(doc.at("data"), ctx));
    throw schema_error("document needs either theta or data");
}

// Zero polynomials print as the string "0", everything else as a term list.
Json poly_report(const Poly& p) {
    if (p.is_zero()) return "0";
    return poly_to_json(p);
}

int run(const std::string& cmd, const Json& doc, std::uint64_t seed, int trials, int max_weight,
        int max_qdeg, bool shift) {
    Json report;
    int status = 0;

    if (cmd == "severa") {
        StructureConstants C = constants_from_json(field(doc, "constants"), "constants");
        Mat K = mat_from_json(field(doc, "K"), "K");
        report["curvature"] = constants_to_json(severa_curvature(C, K));
        std::cout << emit(report);
        return 0;
    }

    ChartPtr ctx = chart_from_json(field(doc, "context"));

    if (cmd == "check-structure") {
        Poly obs = structure_obstruction(theta_of(doc, ctx), ctx);
        report["obstruction"] = poly_report(obs);
        status = obs.is_zero() ? 0 : 1;
    } else if (cmd == "dorfman") {
        Poly theta = theta_of(doc, ctx);
        report["result"] = poly_report(dorfman(theta, poly_from_json(field(doc, "e1"), ctx),
                                               poly_from_json(field(doc, "e2"), ctx), ctx));
    } else if (cmd == "anchor") {
        Poly theta = theta_of(doc, ctx);
        report["result"] = poly_report(anchor_apply(theta, poly_from_json(field(doc, "e"), ctx),
                                                    poly_from_json(field(doc, "f"), ctx), ctx));
    } else if (cmd == "axioms") {
        AxiomReport rep = axiom_report(theta_of(doc, ctx), ctx, seed, trials);
        report["trials"] = rep.trials;
        Json checks = Json::array();
        for (auto& c : rep.checks) {
            Json e;
            e["name"] = c.name;
            e["failures"] = c.failures;
            e["residual"] = poly_report(c.residual);
            checks.push_back(std::move(e));
        }
        report["checks"] = std::move(checks);
        report["all_pass"] = rep.all_pass();
        status = rep.all_pass() ? 0 : 1;
    } else if (cmd == "twist2") {
        report["result"] =
            poly_report(twist_by_2form(theta_of(doc, ctx), poly_from_json(field(doc, "beta"), ctx)));
    } else if (cmd == "twist3") {
        report["result"] = poly_report(twist_by_3form(ctx, poly_from_json(field(doc, "phi"), ctx)));
    } else if (cmd == "transform") {
        ChartPtr target = doc.contains("target") ? chart_from_json(doc.at("target")) : ctx;
        TransitionMap t = transition_from_json(field(doc, "transition"), ctx, target);
        CourantData d = data_from_json(field(doc, "data"), ctx);
        report["preserves_brackets"] = transition_preserves_brackets(t);
        report["data"] = data_to_json(transform(d, t));
        if (!report["preserves_brackets"].get<bool>()) status = 1;
    } else if (cmd == "brst") {
        StructureConstants C = constants_from_json(field(doc, "constants"), "constants");
        std::vector<std::vector<Poly>> v;
        for (auto& row : field(doc, "action")) {
            std::vector<Poly> r;
            for (auto& p : row) r.push_back(poly_from_json(p, ctx));
            v.push_back(std::move(r));
        }
        Poly theta = brst_theta(ctx, C, v);
        Poly obs = structure_obstruction(theta, ctx);
        report["theta"] = poly_report(theta);
        report["obstruction"] = poly_report(obs);
        status = obs.is_zero() ? 0 : 1;
    } else if (cmd == "homotopy") {
        Poly res = homotopy_check(poly_from_json(field(doc, "f"), ctx));
        report["residual"] = poly_report(res);
        status = res.is_zero() ? 0 : 1;
    } else if (cmd == "decompose") {
        auto [lie, con] = fn_decompose(poly_from_json(field(doc, "f"), ctx));
        report["lie_part"] = poly_report(lie);
        report["contraction_part"] = poly_report(con);
    } else if (cmd == "primitive") {
        report["primitive"] = poly_report(primitive(poly_from_json(field(doc, "f"), ctx)));
    } else if (cmd == "poisson-from-gamma") {
        report["pi"] = poly_report(poisson_from_gamma(poly_from_json(field(doc, "gamma"), ctx)));
    } else if (cmd == "cohomology") {
        auto dims = cohomology_dims(theta_of(doc, ctx), ctx, max_weight, max_qdeg);
        Json weights = Json::array(), dj = Json::array();
        for (int w = 0; w <= max_weight; ++w) {
            weights.push_back(shift ? w - 2 : w);
            dj.push_back(dims[static_cast<std::size_t>(w)]);
        }
        report["weights"] = std::move(weights);
        report["dims"] = std::move(dj);
        report["truncation"] = Json{{"max_qdeg", max_qdeg}};
    } else {
        throw schema_error("unknown command: " + cmd);
    }
    std::cout << emit(report);
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculus for graded symplectic charts and Courant algebroids"};
    app.require_subcommand(1);

    std::string input = "-";
    std::uint64_t seed = 0;
    bool have_seed = false;
    int trials = 8, max_weight = 3, max_qdeg = 0;
    bool shift = false;

    const std::vector<std::string> names = {
        "check-structure", "dorfman",  "anchor",    "axioms",             "twist2",
        "twist3",          "transform", "severa",   "brst",               "homotopy",
        "decompose",       "primitive", "poisson-from-gamma", "cohomology"};
    for (auto& n : names) {
        CLI::App* sub = app.add_subcommand(n);
        sub->add_option("input", input, "JSON document path, or - for stdin");
        if (n == "axioms") {
            sub->add_option("--seed", seed, "PRNG seed (required)")->required();
            sub->add_option("--trials", trials, "number of randomized trials");
            have_seed = true;
        }
        if (n == "cohomology") {
            sub->add_option("--max-weight", max_weight, "top weight to compute");
            sub->add_option("--max-qdeg", max_qdeg, "base-degree truncation");
            sub->add_flag("--shift-minus-2", shift, "label weights shifted by -2");
        }
    }
    (void)have_seed;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), load_document(input), seed, trials,
                   max_weight, max_qdeg, shift);
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
