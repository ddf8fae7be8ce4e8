#include "xiknot/diagram.hpp"
#include "xiknot/pipeline.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace xiknot;
using nlohmann::json;

namespace {

const char* role_name(Role r) {
    switch (r) {
        case Role::Knot: return "knot";
        case Role::Basis: return "basis";
        case Role::Trace: return "trace";
    }
    return "?";
}

int run_validate(const std::string& input) {
    Diagram d = build_diagram(load_scene_file(input));
    json out;
    out["name"] = d.scene.name;
    out["p"] = d.scene.p;
    out["valid"] = true;
    out["crossings"] = d.cross.size();
    out["faces"] = d.faces.size();
    out["colored"] = d.has_colors();
    out["components"] = json::array();
    for (size_t i = 0; i < d.scene.components.size(); ++i) {
        const Component& c = d.scene.components[i];
        json e;
        e["name"] = c.name;
        e["role"] = role_name(c.role);
        e["arcs"] = d.arc_count[i];
        e["passages"] = c.route.size();
        e["writhe"] = to_string(writhe(d, static_cast<int>(i)));
        if (!c.pushoff_of.empty()) e["pushoff_of"] = c.pushoff_of;
        out["components"].push_back(e);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_lists(const std::string& input, const std::string& component) {
    Diagram d = build_diagram(load_scene_file(input));
    std::cout << gauss_lists_text(d, d.component_index(component));
    return 0;
}

int run_block(const std::string& input, const std::string& g, const std::string& h) {
    ComputedBlockProvider prov({load_scene_file(input)});
    const Mat<Rat> b = prov.block(g, h);
    json out;
    out["curve"] = g;
    out["pushoff_of"] = h;
    out["block"] = json::array();
    for (int i = 0; i < b.r; ++i) {
        json row = json::array();
        for (int j = 0; j < b.c; ++j) row.push_back(to_string(b(i, j)));
        out["block"].push_back(row);
    }
    out["row_sums"] = json::array();
    for (int i = 0; i < b.r; ++i) {
        Rat s(0);
        for (int j = 0; j < b.c; ++j) s += b(i, j);
        out["row_sums"].push_back(to_string(s));
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_xi(const std::string& input, const std::string& provider, const std::string& output,
           bool as_json, std::optional<int> p) {
    ProblemInput in = load_problem_file(input);
    if (p) in.p = *p;

    XiReport rep = [&] {
        if (provider.empty()) return compute_xi(in);
        if (provider == "computed") {
            ComputedBlockProvider prov(in.scenes);
            return compute_xi(in, prov);
        }
        if (provider.rfind("table:", 0) == 0) {
            TableBlockProvider prov = TableBlockProvider::load_file(provider.substr(6));
            return compute_xi(in, prov);
        }
        throw ProblemError("provider must be 'computed' or 'table:<path>'");
    }();

    const std::string doc = report_json(rep);
    if (!output.empty()) {
        std::ofstream f(output);
        if (!f) throw ProblemError("cannot write report to '" + output + "'");
        f << doc;
    }
    std::cout << (as_json ? doc : report_summary(rep));
    return 0;
}

int fail(const std::string& type, const std::string& message) {
    json err;
    err["error"]["type"] = type;
    err["error"]["message"] = message;
    std::cout << err.dump(2) << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dihedral branched-cover linking and the xi ribbon obstruction"};
    app.require_subcommand(1);

    std::string input, component = "alpha", curve, pushoff, provider, output;
    bool as_json = false;
    std::optional<int> p;

    CLI::App* validate = app.add_subcommand("validate", "check a scene and print diagnostics");
    validate->add_option("--input", input, "scene JSON file")->required();

    CLI::App* lists = app.add_subcommand("lists", "print a component's underpass lists");
    lists->add_option("--input", input, "scene JSON file")->required();
    lists->add_option("--component", component, "component name (default alpha)");

    CLI::App* block = app.add_subcommand("block", "linking numbers of lifted curves");
    block->add_option("--input", input, "scene JSON file")->required();
    block->add_option("--curve", curve, "basis curve whose lifts index the rows")->required();
    block->add_option("--pushoff", pushoff, "curve whose push-off lifts index the columns")
        ->required();

    CLI::App* xi = app.add_subcommand("xi", "evaluate the ribbon obstruction");
    xi->add_option("--input", input, "problem JSON file")->required();
    xi->add_option("--provider", provider, "computed | table:<path> (default: from the input)");
    xi->add_option("--output", output, "also write the JSON report here");
    xi->add_flag("--json", as_json, "print the JSON report instead of the summary");
    xi->add_option("--p", p, "expected branching degree (the engine supports 3)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(input);
        if (lists->parsed()) return run_lists(input, component);
        if (block->parsed()) return run_block(input, curve, pushoff);
        if (xi->parsed()) return run_xi(input, provider, output, as_json, p);
    } catch (const SceneError& e) {
        return fail("scene", e.what());
    } catch (const ProblemError& e) {
        return fail("problem", e.what());
    } catch (const std::exception& e) {
        return fail("internal", e.what());
    }
    return 1;
}
