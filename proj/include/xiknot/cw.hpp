#pragma once

#include "xiknot/diagram.hpp"
#include "xiknot/exact_linalg.hpp"
#include "xiknot/perm.hpp"

#include <string>
#include <utility>
#include <vector>

namespace xiknot {

// Cell model of the ambient 3-sphere built from a diagram in levels: the
// projection sphere carrying the refined graph, a parallel copy just below
// it (where under-strands bridge through their crossings), the product shell
// between the two spheres, and cones over both from a north and a south
// pole.  Every curve of the scene is embedded in the 1-skeleton: along
// projection edges at the top level, and through verticals and low bridges
// at its underpasses.
//
// Cell families (index within family in parentheses):
//   dim 0: TopVert(v), LowVert(v), North, South
//   dim 1: TopEdge(p), LowEdge(p), Vertical(v) [low -> top],
//          NorthRib(v) [north -> top vert], SouthRib(v) [south -> low vert]
//   dim 2: TopFace(f), LowFace(f), Wall(p) [edge x interval],
//          NorthFan(p), SouthFan(p) [cone triangles over an edge]
//   dim 3: Shell(f) [face x interval], NorthCone(f), SouthCone(f)

// One step of a 2-cell's boundary walk.
struct WalkStep {
    int edge = -1;      // 1-cell id
    int dir = 0;        // +1 with the edge, -1 against
    int star_pos = -1;  // index of this flag in the edge's star circle
};

// One of the two 3-cells flanking a 2-cell.  coeff is the contribution of
// this side to the 2-cell's coefficient in that 3-cell's boundary.
struct SideFlag {
    int cell = -1;
    int coeff = 0;
};

// A flag on the link circle of a 1-cell: crossing the 2-cell `face` at walk
// occurrence `walk_pos`; `forward` means the circle passes from the cell on
// side0 to the cell on side1.
struct StarNode {
    int face = -1;
    int walk_pos = -1;
    bool forward = true;
};

struct StarCircle {
    std::vector<StarNode> nodes;
    int base_region = -1;  // 3-cell the circle starts in, before nodes[0]
};

class LevelComplex {
  public:
    explicit LevelComplex(Diagram d);

    const Diagram& diagram() const { return dia_; }

    int n0 = 0, n1 = 0, n2 = 0, n3 = 0;

    // Cell ids by family.
    int top_vert(int v) const { return v; }
    int low_vert(int v) const { return nv_ + v; }
    int north() const { return 2 * nv_; }
    int south() const { return 2 * nv_ + 1; }

    int top_edge(int p) const { return p; }
    int low_edge(int p) const { return np_ + p; }
    int vertical(int v) const { return 2 * np_ + v; }
    int north_rib(int v) const { return 2 * np_ + nv_ + v; }
    int south_rib(int v) const { return 2 * np_ + 2 * nv_ + v; }

    int top_face(int f) const { return f; }
    int low_face(int f) const { return nf_ + f; }
    int wall(int p) const { return 2 * nf_ + p; }
    int north_fan(int p) const { return 2 * nf_ + np_ + p; }
    int south_fan(int p) const { return 2 * nf_ + 2 * np_ + p; }

    int shell(int f) const { return f; }
    int north_cone(int f) const { return nf_ + f; }
    int south_cone(int f) const { return 2 * nf_ + f; }

    // Boundary operators (n0 x n1, n1 x n2, n2 x n3).
    SparseIntMat d1, d2, d3;

    std::vector<int> edge_tail, edge_head;        // per 1-cell
    std::vector<std::vector<WalkStep>> walks;     // per 2-cell, closed path
    std::vector<SideFlag> side0, side1;           // per 2-cell
    std::vector<Perm3> deck;                      // per 2-cell (id off the cut)
    std::vector<StarCircle> stars;                // per 1-cell
    std::vector<int> fundamental;                 // per 3-cell: +-1

    // Distinguished 3-cell whose cover sheets fix the global labels.
    int base_cell = -1;

    std::vector<char> branch_edge;  // per 1-cell: lies on the colored curve
    std::vector<char> branch_vert;  // per 0-cell
    std::vector<int> branch_color;  // per 1-cell: arc color there, else 0

    // The embedded closed route of a component as ordered (1-cell, +-1).
    std::vector<std::pair<int, int>> route_cells(int comp) const;

    std::string cell_name(int dim, int id) const;

  private:
    Diagram dia_;
    int nv_ = 0, np_ = 0, nf_ = 0;

    void build_cells();
    void build_walks();
    void build_sides();
    void build_deck();
    void build_stars();
    void check_complex() const;
};

}  // namespace xiknot
