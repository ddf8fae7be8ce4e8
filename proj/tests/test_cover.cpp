#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xiknot/cover.hpp"

#include "support/h1_oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

using namespace xiknot;

namespace {

std::string fx(const std::string& name) { return std::string(XIKNOT_FIXTURE_DIR) + "/" + name; }

CoverComplex make(const std::string& name) {
    return CoverComplex(LevelComplex(build_diagram(load_scene_file(fx(name)))));
}

}  // namespace

TEST_CASE("cover over the trefoil is a homology sphere matching the arc oracle") {
    CoverComplex c = make("trefoil.scene.json");
    CHECK(c.N3 == 45);
    CHECK(c.N2 == 138);
    CHECK(c.N0 - c.N1 + c.N2 - c.N3 == 0);

    const int r1 = sparse_rank(c.D1);
    const int r2 = c.snf_D2().rank;
    const int r3 = sparse_rank(c.D3);
    CHECK(c.N0 - r1 == 1);                  // connected
    CHECK(c.N1 - r1 - r2 == 0);             // first homology rank 0
    CHECK(c.N2 - r2 - r3 == 0);
    CHECK(c.N3 - r3 == 1);                  // one fundamental cycle
    CHECK(c.h1_factors().empty());
    CHECK(smith_normal_form(c.D3).nontrivial_factors().empty());

    CHECK(c.h1_factors() == testsupport::branched_cover_h1_oracle(c.base().diagram()));

    // The cut disk below each occupied edge of the colored curve has two
    // preimage pieces (branch pair + fixed sheet).
    const auto& dia = c.base().diagram();
    for (int p = 0; p < static_cast<int>(dia.pieces.size()); ++p)
        if (dia.pieces[static_cast<size_t>(p)].occupied && dia.pieces[static_cast<size_t>(p)].comp == dia.knot)
            CHECK(c.cut_disk_components(p) == 2);

    CHECK_THROWS(c.lift_route(dia.knot));
}

TEST_CASE("lifted boundaries project onto three copies of the base boundary") {
    CoverComplex c = make("trefoil.scene.json");
    const LevelComplex& b = c.base();
    for (int s = 0; s < b.n2; ++s) {
        std::map<int, Int> projected;
        for (int sheet = 1; sheet <= 3; ++sheet) {
            const int ls = c.lift2(s, sheet);
            for (int r : c.D2.col_rows[static_cast<size_t>(ls)]) {
                Int& slot = projected[c.base_of_lift1(r)];
                slot += c.D2.get(r, ls);
                if (slot == 0) projected.erase(c.base_of_lift1(r));
            }
        }
        std::map<int, Int> base3;
        for (int r : b.d2.col_rows[static_cast<size_t>(s)]) base3[r] = 3 * b.d2.get(r, s);
        CHECK(projected == base3);
    }
}

TEST_CASE("same branch curve through different scenes gives the same first homology") {
    CoverComplex plain = make("trefoil.scene.json");
    CoverComplex withm = make("trefoil_meridian.scene.json");
    CHECK(plain.h1_factors() == withm.h1_factors());
    CHECK(withm.h1_factors() == testsupport::branched_cover_h1_oracle(withm.base().diagram()));
}

TEST_CASE("a small circle under one arc lifts to a single copy and a double copy") {
    CoverComplex c = make("trefoil_meridian.scene.json");
    const int m = c.base().diagram().component_index("m");
    auto loops = c.lift_route(m);
    REQUIRE(loops.size() == 2);
    std::vector<int> wraps{loops[0].wraps, loops[1].wraps};
    std::sort(wraps.begin(), wraps.end());
    CHECK(wraps == std::vector<int>{1, 2});

    // The circle passes under color 1, whose transposition fixes sheet 1:
    // the label-1 copy closes once around, labels 2 and 3 share the double.
    auto loop_containing = [&](int le) -> const CoverComplex::LiftedLoop* {
        for (const auto& l : loops)
            for (auto [cell, dir] : l.cells)
                if (cell == le) return &l;
        return nullptr;
    };
    const auto* l1 = loop_containing(c.arc0_edge_lift(m, 1));
    const auto* l2 = loop_containing(c.arc0_edge_lift(m, 2));
    const auto* l3 = loop_containing(c.arc0_edge_lift(m, 3));
    REQUIRE(l1 != nullptr);
    REQUIRE(l2 != nullptr);
    REQUIRE(l3 != nullptr);
    CHECK(l1->wraps == 1);
    CHECK(l2->wraps == 2);
    CHECK(l2 == l3);
    CHECK(l1 != l2);
}

TEST_CASE("a circle lying over the diagram lifts to three plain copies") {
    CoverComplex c = make("trefoil_split.scene.json");
    const int s = c.base().diagram().component_index("s");
    auto loops = c.lift_route(s);
    REQUIRE(loops.size() == 3);
    for (const auto& l : loops) CHECK(l.wraps == 1);
}

TEST_CASE("a non-surjective coloring disconnects the cover") {
    CoverComplex c = make("hopf.scene.json");
    CHECK(c.N0 - sparse_rank(c.D1) == 2);
}
