#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace xiknot {

// Input description of a diagram on the 2-sphere: a distinguished knot
// component plus auxiliary closed curves, all given combinatorially by their
// ordered passages through signed crossings.

struct SceneError : std::runtime_error {
    explicit SceneError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Passage {
    int crossing = 0;
    bool over = false;
};

enum class Role {
    Knot,   // the colored curve; its underpasses branch the cover
    Basis,  // surface-basis curve: lifted, linked, part of the pairing matrix
    Trace,  // auxiliary curve (push-off, meridian, ...): lifted and traced only
};

// Sheet-anchoring walk data for a basis curve: color sequences of knot arcs
// crossed under on the way from the base region to the curve.
struct AnchorSet {
    bool boundary = false;        // true: use the (right, left) pair rule
    std::vector<int> path;        // plain curves
    std::vector<int> right, left; // boundary-parallel curve
};

struct Component {
    std::string name;
    Role role = Role::Trace;
    std::vector<Passage> route;  // cyclic, in orientation order
    std::string pushoff_of;      // trace curves only: parallel copy of this basis curve
    AnchorSet anchors;
};

struct CrossingDef {
    int id = 0;
    int sign = 1;
};

struct Scene {
    std::string name;
    int p = 3;
    std::vector<CrossingDef> crossings;
    std::vector<Component> components;
    std::vector<int> colors;  // one color per knot arc; may be empty
};

Scene parse_scene_text(const std::string& json_text);
Scene load_scene_file(const std::string& path);
std::string scene_to_text(const Scene& s);
void save_scene_file(const Scene& s, const std::string& path);

}  // namespace xiknot
