#include "xiknot/scene.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace xiknot {

using nlohmann::json;

namespace {

Role role_from_string(const std::string& s) {
    if (s == "knot") return Role::Knot;
    if (s == "basis") return Role::Basis;
    if (s == "trace") return Role::Trace;
    throw SceneError("unknown component role '" + s + "'");
}

std::string role_to_string(Role r) {
    switch (r) {
        case Role::Knot: return "knot";
        case Role::Basis: return "basis";
        case Role::Trace: return "trace";
    }
    throw SceneError("bad role value");
}

std::vector<int> int_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw SceneError(what + " must be an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw SceneError(what + " entries must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace

Scene parse_scene_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SceneError(std::string("scene is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SceneError("scene must be a JSON object");

    Scene s;
    s.name = j.value("name", std::string("scene"));
    s.p = j.value("p", 3);
    if (s.p != 3) throw SceneError("scene construction supports p = 3");

    if (!j.contains("crossings") || !j["crossings"].is_array())
        throw SceneError("scene needs a 'crossings' array");
    for (const auto& c : j["crossings"]) {
        CrossingDef d;
        d.id = c.at("id").get<int>();
        d.sign = c.at("sign").get<int>();
        if (d.sign != 1 && d.sign != -1) throw SceneError("crossing sign must be +1 or -1");
        s.crossings.push_back(d);
    }

    if (!j.contains("components") || !j["components"].is_array())
        throw SceneError("scene needs a 'components' array");
    for (const auto& c : j["components"]) {
        Component comp;
        comp.name = c.at("name").get<std::string>();
        comp.role = role_from_string(c.at("role").get<std::string>());
        comp.pushoff_of = c.value("pushoff_of", std::string());
        if (!c.contains("route") || !c["route"].is_array() || c["route"].empty())
            throw SceneError("component '" + comp.name + "' needs a nonempty route");
        for (const auto& st : c["route"]) {
            if (!st.is_array() || st.size() != 2)
                throw SceneError("route steps are [crossing, \"o\"|\"u\"] pairs");
            Passage p;
            p.crossing = st[0].get<int>();
            std::string ou = st[1].get<std::string>();
            if (ou != "o" && ou != "u") throw SceneError("route step side must be \"o\" or \"u\"");
            p.over = (ou == "o");
            comp.route.push_back(p);
        }
        s.components.push_back(comp);
    }

    if (j.contains("colors")) s.colors = int_list(j["colors"], "colors");

    if (j.contains("anchors")) {
        const json& an = j["anchors"];
        if (!an.is_object()) throw SceneError("'anchors' must map curve names to anchor data");
        for (auto& comp : s.components) {
            if (!an.contains(comp.name)) continue;
            const json& a = an[comp.name];
            if (a.contains("path")) {
                comp.anchors.boundary = false;
                comp.anchors.path = int_list(a["path"], "anchor path");
            } else if (a.contains("right") && a.contains("left")) {
                comp.anchors.boundary = true;
                comp.anchors.right = int_list(a["right"], "anchor right");
                comp.anchors.left = int_list(a["left"], "anchor left");
            } else {
                throw SceneError("anchor for '" + comp.name + "' needs 'path' or 'right'+'left'");
            }
        }
    }
    return s;
}

Scene load_scene_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SceneError("cannot open scene file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scene_text(ss.str());
}

std::string scene_to_text(const Scene& s) {
    json j;
    j["name"] = s.name;
    j["p"] = s.p;
    j["crossings"] = json::array();
    for (const auto& c : s.crossings) j["crossings"].push_back({{"id", c.id}, {"sign", c.sign}});
    j["components"] = json::array();
    json anchors = json::object();
    for (const auto& c : s.components) {
        json jc;
        jc["name"] = c.name;
        jc["role"] = role_to_string(c.role);
        if (!c.pushoff_of.empty()) jc["pushoff_of"] = c.pushoff_of;
        jc["route"] = json::array();
        for (const auto& p : c.route)
            jc["route"].push_back(json::array({p.crossing, p.over ? "o" : "u"}));
        j["components"].push_back(jc);
        if (c.anchors.boundary)
            anchors[c.name] = {{"right", c.anchors.right}, {"left", c.anchors.left}};
        else if (!c.anchors.path.empty())
            anchors[c.name] = {{"path", c.anchors.path}};
    }
    if (!s.colors.empty()) j["colors"] = s.colors;
    if (!anchors.empty()) j["anchors"] = anchors;
    return j.dump(2) + "\n";
}

void save_scene_file(const Scene& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SceneError("cannot write scene file '" + path + "'");
    out << scene_to_text(s);
}

}  // namespace xiknot
