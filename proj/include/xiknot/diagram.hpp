#pragma once

#include "xiknot/rational.hpp"
#include "xiknot/scene.hpp"

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

namespace xiknot {

// Combinatorial planar structure derived from a Scene: the 4-valent
// projection graph refined with two "dip" vertices per crossing (where the
// under-strand leaves and rejoins the projection sphere), its oriented
// edge pieces, the faces of the refined graph (with a sphere check), the
// arc decomposition of every component, and classical linking data.
struct Diagram {
    // crossing end slots, counterclockwise for a positive crossing
    enum Slot { OverOut = 0, UnderOut = 1, OverIn = 2, UnderIn = 3 };

    struct CrossInfo {
        int id = 0, sign = 1;
        int over_comp = -1, over_pos = -1;    // component / route position of the over passage
        int under_comp = -1, under_pos = -1;
    };

    struct Vert {
        bool is_dip = false;
        int crossing = -1;  // crossing index (not id)
        int dip_half = -1;  // dips: 0 = before the crossing, 1 = after
    };

    // Oriented along its component: tail -> head follows the curve direction.
    struct Piece {
        int tail = -1, head = -1;  // vertex indices
        int comp = -1, arc = -1;
        bool occupied = true;       // false for the two ghost pieces at each crossing
        int ghost_crossing = -1;    // crossing index for ghost pieces
        int ghost_half = -1;        // 0 = incoming ghost (dip -> crossing), 1 = outgoing
    };

    struct CrossPieces {
        int over_in = -1, over_out = -1;    // occupied pieces of the over strand
        int ghost_in = -1, ghost_out = -1;  // level: dip_in -> v -> dip_out
        int under_in = -1, under_out = -1;  // occupied pieces outside the dips
        int dip_in_vert = -1, dip_out_vert = -1;
    };

    Scene scene;
    int knot = -1;  // component index of the colored curve

    std::vector<CrossInfo> cross;
    std::unordered_map<int, int> cross_index;  // crossing id -> index

    std::vector<Vert> verts;
    std::vector<Piece> pieces;
    std::vector<std::vector<int>> comp_pieces;  // walk order per component
    std::vector<CrossPieces> cross_pieces;
    std::vector<int> arc_count;  // per component

    // Rotation system: darts based at each vertex in counterclockwise order
    // (a dart is 2*piece + (dir < 0 ? 1 : 0); the dart 2*p points tail->head).
    std::vector<std::vector<int>> vert_darts;
    std::vector<int> rot_next;  // per dart: next dart counterclockwise at its base

    // Faces of the refined graph: each a closed walk of (piece, direction).
    std::vector<std::vector<std::pair<int, int>>> faces;
    std::vector<int> face_of_dart;  // dart = 2*piece + (dir < 0 ? 1 : 0)

    int left_face(int piece) const { return face_of_dart[2 * piece]; }
    int right_face(int piece) const { return face_of_dart[2 * piece + 1]; }

    bool has_colors() const { return !scene.colors.empty(); }
    int color_of_knot_arc(int arc) const { return scene.colors.at(static_cast<size_t>(arc)); }

    // Arc of the strand crossing over at the given crossing index.
    int over_arc_at(int ci) const { return pieces[static_cast<size_t>(cross_pieces[static_cast<size_t>(ci)].over_in)].arc; }

    int component_index(const std::string& name) const;
};

// Builds and fully validates; throws SceneError with a reason on failure.
Diagram build_diagram(const Scene& s);

// Underpass list of one component, in route order from its zeroth arc:
// f = arc of the over-strand (in that strand's own numbering), eps = crossing
// sign, t = 'k' if the over-strand is the knot, 'p' if an auxiliary curve.
struct CurveLists {
    std::vector<int> f;
    std::vector<int> eps;
    std::vector<char> t;
};
CurveLists curve_lists(const Diagram& d, int comp);

// Text form of the underpass lists, one parenthesized list per line.  The
// colored curve prints prefixed f=, eps=, t= lines plus its arc colors as a
// c= line; auxiliary curves print the three lists bare.
std::string gauss_lists_text(const Diagram& d, int comp);

// Sum of crossing signs where a is over and b under (= classical lk for
// disjoint closed curves a, b).
Int s3_linking(const Diagram& d, int comp_a, int comp_b);
Int writhe(const Diagram& d, int comp);

}  // namespace xiknot
