#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xiknot/coloring.hpp"
#include "xiknot/linking.hpp"

#include "support/h1_oracle.hpp"

#include <string>
#include <vector>

using namespace xiknot;

namespace {

std::string fx(const std::string& name) { return std::string(XIKNOT_FIXTURE_DIR) + "/" + name; }

Scene six_one() { return load_scene_file(fx("6_1.scene.json")); }

const Mat<Rat> kBlock{{Rat(-1), Rat(0), Rat(1)},
                      {Rat(0), Rat(0), Rat(0)},
                      {Rat(1), Rat(0), Rat(-1)}};

}  // namespace

TEST_CASE("six-one scene validates and regenerates its underpass lists") {
    Diagram d = build_diagram(six_one());
    CHECK(d.scene.p == 3);
    CHECK(d.scene.colors == std::vector<int>{1, 1, 3, 2, 2, 1, 1, 1, 2, 2, 3, 3});

    const CurveLists a = curve_lists(d, d.component_index("alpha"));
    CHECK(a.f == std::vector<int>{1, 8, 0, 7, 10, 5, 3, 2, 4, 6, 6, 4});
    CHECK(a.eps == std::vector<int>{-1, 1, -1, -1, -1, -1, 1, 1, 1, -1, 1, -1});
    CHECK(a.t == std::vector<char>{'p', 'k', 'k', 'p', 'k', 'p', 'p', 'k', 'p', 'k', 'p', 'k'});

    const CurveLists b = curve_lists(d, d.component_index("beta"));
    CHECK(b.f == std::vector<int>{0, 8, 2, 6, 6, 10, 4, 0});
    CHECK(b.eps == std::vector<int>{-1, 1, -1, 1, -1, 1, -1, 1});
    CHECK(b.t == std::vector<char>{'k', 'k', 'k', 'k', 'k', 'k', 'k', 'k'});

    const CurveLists r = curve_lists(d, d.component_index("beta_r"));
    CHECK(r.f == std::vector<int>{0, 1, 8, 2, 3, 6, 4, 6, 10, 6, 4, 0});
    CHECK(r.eps == std::vector<int>{-1, -1, 1, -1, -1, 1, 1, -1, 1, 1, -1, 1});
    CHECK(r.t == std::vector<char>{'k', 'p', 'k', 'k', 'p', 'k', 'p', 'k', 'k', 'p', 'k', 'k'});
}

TEST_CASE("six-one underpass lists render as text") {
    Diagram d = build_diagram(six_one());
    CHECK(gauss_lists_text(d, d.component_index("alpha")) ==
          "f=(1,8,0,7,10,5,3,2,4,6,6,4)\n"
          "eps=(-,+,-,-,-,-,+,+,+,-,+,-)\n"
          "t=(p,k,k,p,k,p,p,k,p,k,p,k)\n"
          "c=(1,1,3,2,2,1,1,1,2,2,3,3)\n");
    CHECK(gauss_lists_text(d, d.component_index("beta")) ==
          "(0,8,2,6,6,10,4,0)\n"
          "(-,+,-,+,-,+,-,+)\n"
          "(k,k,k,k,k,k,k,k)\n");
    CHECK(gauss_lists_text(d, d.component_index("beta_r")) ==
          "(0,1,8,2,3,6,4,6,10,6,4,0)\n"
          "(-,-,+,-,-,+,+,-,+,+,-,+)\n"
          "(k,p,k,k,p,k,p,k,k,p,k,k)\n");
}

TEST_CASE("six-one base diagram linking data") {
    Diagram d = build_diagram(six_one());
    const int alpha = d.component_index("alpha");
    const int beta = d.component_index("beta");
    const int betar = d.component_index("beta_r");
    CHECK(writhe(d, alpha) == Int(-2));
    // The surface curve is framed by its parallel copy with framing zero,
    // and both lie on a surface bounded by the knot.
    CHECK(s3_linking(d, beta, betar) == Int(0));
    CHECK(s3_linking(d, betar, beta) == Int(0));
    CHECK(s3_linking(d, alpha, beta) == Int(0));
    CHECK(s3_linking(d, beta, alpha) == Int(0));
}

TEST_CASE("six-one anchor walks") {
    Scene s = six_one();
    Diagram d = build_diagram(s);
    CHECK(anchor_monodromy(d, d.component_index("beta")).is_identity());
    CHECK(anchor_monodromy(d, d.component_index("beta_r")).is_identity());
    const std::vector<int>& left = s.components[1].anchors.left;
    std::vector<int> walk_colors;
    for (int arc : left) walk_colors.push_back(s.colors[static_cast<size_t>(arc)]);
    CHECK(walk_colors == std::vector<int>{1, 2, 3, 1, 3, 2});
    const Perm3 lw = arc_walk_monodromy(d, left);
    CHECK(lw.apply(1) == 3);
    CHECK(lw.cycle_string() == "(123)");
}

TEST_CASE("six-one branched cover has trivial first homology") {
    CoverComplex cov{LevelComplex(build_diagram(six_one()))};
    CHECK(cov.h1_factors().empty());
    CHECK(cov.h1_factors() == testsupport::branched_cover_h1_oracle(cov.base().diagram()));
}

TEST_CASE("six-one lifted linking block") {
    CoverComplex cov{LevelComplex(build_diagram(six_one()))};
    CHECK(trace_monodromy(cov, 1).is_identity());
    CHECK(trace_monodromy(cov, 2).is_identity());
    CHECK(linking_block(cov, 1, 2) == kBlock);
}

TEST_CASE("six-one block is unchanged under homotopic anchor rewrites") {
    for (int c = 1; c <= 3; ++c) {
        Scene s = six_one();
        s.components[1].anchors.right = {c, c};
        CoverComplex cov{LevelComplex(build_diagram(s))};
        CHECK(linking_block(cov, 1, 2) == kBlock);
    }
}

TEST_CASE("six-one block rows follow the anchor walk relabelling") {
    Scene s = six_one();
    s.components[1].anchors.right = {1};  // swaps sheet labels 2 and 3
    CoverComplex cov{LevelComplex(build_diagram(s))};
    const Mat<Rat> expect{{Rat(-1), Rat(0), Rat(1)},
                          {Rat(1), Rat(0), Rat(-1)},
                          {Rat(0), Rat(0), Rat(0)}};
    CHECK(linking_block(cov, 1, 2) == expect);
}
