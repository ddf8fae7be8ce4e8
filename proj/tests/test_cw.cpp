#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xiknot/cw.hpp"

#include <array>
#include <string>

using namespace xiknot;

namespace {

std::string fx(const std::string& name) { return std::string(XIKNOT_FIXTURE_DIR) + "/" + name; }

LevelComplex make(const std::string& name) { return LevelComplex(build_diagram(load_scene_file(fx(name)))); }

std::array<int, 4> betti(const LevelComplex& c) {
    const int r1 = sparse_rank(c.d1);
    const int r2 = sparse_rank(c.d2);
    const int r3 = sparse_rank(c.d3);
    return {c.n0 - r1, c.n1 - r1 - r2, c.n2 - r2 - r3, c.n3 - r3};
}

}  // namespace

TEST_CASE("sphere model over the trefoil scene") {
    LevelComplex c = make("trefoil.scene.json");
    CHECK(c.n0 == 20);
    CHECK(c.n1 == 51);
    CHECK(c.n2 == 46);
    CHECK(c.n3 == 15);

    CHECK(betti(c) == std::array<int, 4>{1, 0, 0, 1});
    CHECK(smith_normal_form(c.d2).nontrivial_factors().empty());
    CHECK(smith_normal_form(c.d3).nontrivial_factors().empty());

    // The colored curve occupies 6 projection edges and dips at 6 points,
    // so its embedded route crosses 6 + 2*6 = 18 one-cells.
    auto route = c.route_cells(c.diagram().knot);
    CHECK(route.size() == 18);
    int branch_edges = 0, branch_verts = 0;
    for (char b : c.branch_edge) branch_edges += b;
    for (char b : c.branch_vert) branch_verts += b;
    CHECK(branch_edges == 18);
    CHECK(branch_verts == 18);
    for (auto [e, dir] : route) CHECK(c.branch_edge[static_cast<size_t>(e)] == 1);

    // Cut 2-cells: one wall per occupied knot edge, one south fan per knot
    // piece (occupied or bridge).
    int cut = 0;
    for (const auto& g : c.deck) cut += g.is_identity() ? 0 : 1;
    CHECK(cut == 18);

    // Every boundary-walk flag appears in exactly one star circle.
    size_t flags = 0, star_nodes = 0;
    for (const auto& w : c.walks) flags += w.size();
    for (const auto& s : c.stars) star_nodes += s.nodes.size();
    CHECK(flags == star_nodes);
    CHECK(flags == 14u * 12u);
}

TEST_CASE("sphere model over the remaining fixtures") {
    for (const char* name : {"hopf.scene.json", "trefoil_meridian.scene.json", "trefoil_split.scene.json"}) {
        CAPTURE(name);
        LevelComplex c = make(name);
        CHECK(c.n0 - c.n1 + c.n2 - c.n3 == 0);
        CHECK(betti(c) == std::array<int, 4>{1, 0, 0, 1});
        CHECK(smith_normal_form(c.d2).nontrivial_factors().empty());
    }
}

TEST_CASE("boundary conventions on a sample of cells") {
    LevelComplex c = make("hopf.scene.json");
    // A shell's boundary holds its two horizontal faces with opposite signs.
    CHECK(c.d3.get(c.top_face(0), c.shell(0)) == 1);
    CHECK(c.d3.get(c.low_face(0), c.shell(0)) == -1);
    CHECK(c.d3.get(c.top_face(0), c.north_cone(0)) == 1);
    CHECK(c.d3.get(c.low_face(0), c.south_cone(0)) == 1);
    // A vertical runs upward.
    CHECK(c.d1.get(c.top_vert(0), c.vertical(0)) == 1);
    CHECK(c.d1.get(c.low_vert(0), c.vertical(0)) == -1);
    // Rib orientations point out of the poles.
    CHECK(c.d1.get(c.north(), c.north_rib(0)) == -1);
    CHECK(c.d1.get(c.south(), c.south_rib(0)) == -1);
    CHECK(c.cell_name(2, c.wall(3)) == "Wall(3)");
    CHECK(c.cell_name(3, c.south_cone(1)) == "SouthCone(1)");
}
