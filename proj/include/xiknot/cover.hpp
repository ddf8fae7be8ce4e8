#pragma once

#include "xiknot/cw.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace xiknot {

// The 3-sheeted cover of the level complex determined by the coloring,
// branched over the colored curve.  Sheets carry global labels {1,2,3}
// fixed by the distinguished cell above the projection sphere: every
// 3-cell reaches that cell through cells with trivial deck permutation,
// so (cell, sheet) is well defined for all 3-cells, and 2-cell copies are
// labelled by the sheet on their side0.  A 1-cell's copies are the orbits
// of the monodromy around its link circle (2 on the branch curve, 3 off
// it); 0-cell copies are glued from the lifted boundary walks.
class CoverComplex {
  public:
    explicit CoverComplex(LevelComplex base);

    const LevelComplex& base() const { return base_; }

    int N0 = 0, N1 = 0, N2 = 0, N3 = 0;
    SparseIntMat D1, D2, D3;

    // 3- and 2-cell copies, by sheet label.
    int lift3(int c, int sheet) const { return 3 * c + sheet - 1; }
    int lift2(int s, int sheet) const { return 3 * s + sheet - 1; }
    int base_of_lift3(int lc) const { return lc / 3; }
    int sheet_of_lift3(int lc) const { return lc % 3 + 1; }
    int base_of_lift2(int ls) const { return ls / 3; }
    int sheet_of_lift2(int ls) const { return ls % 3 + 1; }

    // 1-cell copies.
    int lift1_count(int e) const;
    int lift1_id(int e, int orbit) const { return lift1_offset_[static_cast<size_t>(e)] + orbit; }
    int base_of_lift1(int le) const { return lift1_base_[static_cast<size_t>(le)]; }
    // Orbit of the given sheet measured in the star circle's base region.
    int orbit_of_sheet(int e, int sheet) const { return orbit_of_sheet_[static_cast<size_t>(e)][static_cast<size_t>(sheet - 1)]; }
    // The copy of edge `e` that the walk flag (2-cell at stars[e].nodes[t])
    // of the 2-cell copy with side0 sheet `sheet` attaches to.
    int lift1_of_flag(int e, int t, int sheet) const;

    // 0-cell copies.
    int lift0_count(int v) const;
    int base_of_lift0(int lv) const { return lift0_base_[static_cast<size_t>(lv)]; }
    int end_class(int le, bool head) const {
        return end_class_[static_cast<size_t>(2 * le + (head ? 1 : 0))];
    }

    const std::vector<std::pair<int, int>>& walk_of_lift2(int ls) const {
        return lift2_walks_[static_cast<size_t>(ls)];
    }

    std::vector<int> fundamental;  // per 3-cell copy

    // All copies of a component's embedded route (component != branch curve).
    // Each loop lists its 1-cell copies in route order, `wraps` times around.
    struct LiftedLoop {
        int start_class = -1;
        int wraps = 0;
        std::vector<std::pair<int, int>> cells;  // (1-cell copy, +-1)
    };
    std::vector<LiftedLoop> lift_route(int comp) const;

    // First level-0 edge of a component's zeroth arc; its copies are in
    // bijection with sheets, anchoring the labelling of the whole loop.
    int arc0_piece(int comp) const;
    int arc0_edge_lift(int comp, int sheet) const;

    // Number of connected pieces of the preimage of the cut disk hanging
    // below one occupied edge of the colored curve (wall, low copy, fan,
    // and the edge itself).
    int cut_disk_components(int piece) const;

    const SmithForm& snf_D2() const;
    std::vector<Int> h1_factors() const;

  private:
    LevelComplex base_;
    std::vector<std::vector<Perm3>> transport_;   // per edge, per star node
    std::vector<std::array<int, 3>> orbit_of_sheet_;
    std::vector<int> lift1_offset_, lift1_base_;
    std::vector<int> end_class_;    // per (1-cell copy, end): 0-cell copy
    std::vector<int> lift0_base_;   // per 0-cell copy
    std::vector<int> lift0_counts_;  // per base 0-cell
    std::vector<std::vector<std::pair<int, int>>> lift2_walks_;
    mutable std::optional<SmithForm> snf_d2_;

    void build_edges();
    void build_faces();
    void build_verts();
    void build_solids();
    void check_cover() const;
};

}  // namespace xiknot
