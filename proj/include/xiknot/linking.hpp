#pragma once

#include "xiknot/cover.hpp"
#include "xiknot/matrix.hpp"

#include <utility>
#include <vector>

namespace xiknot {

// One transverse crossing of a 2-cell: dir = +1 passes from the side0
// 3-cell into the side1 3-cell, -1 the other way.
struct Pierce {
    int face = -1;
    int dir = 0;
};

// Parallel push-off of a component's route, as the ordered 2-cells it
// crosses once around the diagram.  The push-off starts inside the shell
// left of the first edge of the component's zeroth arc, runs just below
// the projection sphere beside the curve, sweeps around the verticals at
// the crossings it passes over, and dives below the lower sphere beside
// each of its own underpasses (through the low face, around the dip and
// crossing ribs, and back up).
std::vector<Pierce> transverse_trace(const LevelComplex& lc, int comp);

// Composite of the deck permutations crossed once around the trace;
// sheet s closes up after the size of its orbit under this map.
Perm3 trace_monodromy(const CoverComplex& cov, int comp);

// The trace lifted to the cover starting on the given sheet, repeated
// until it closes up.
struct LiftedTrace {
    int start_sheet = 1;
    int wraps = 0;
    std::vector<std::pair<int, int>> pierces;  // (2-cell copy, +-1)
};
LiftedTrace lift_trace(const CoverComplex& cov, int comp, int start_sheet);

// Linking number in the cover of the closed loop (a lift of an embedded
// component, from lift_route) with a closed lifted trace of a disjoint
// component: (1/n) * signed count of trace crossings through a 2-chain F
// with boundary F = n * loop.  Throws if the loop does not bound
// rationally.
Rat lifted_linking(const CoverComplex& cov, const CoverComplex::LiftedLoop& loop,
                   const LiftedTrace& trace);

// Matrix of linking numbers between the labelled lifts of two disjoint
// off-branch components: entry (j, k) links the lift of g containing the
// zeroth-arc copy on sheet mu_g(j) with the trace of h started on sheet
// mu_h(k), where each component's label map comes from its anchor walk.
// Both components must lift to three closed loops.
Mat<Rat> linking_block(const CoverComplex& cov, int comp_g, int comp_h);

// Anchor monodromy of a component: the color walk's permutation, the
// right-hand walk for boundary-anchored curves, identity if unanchored.
Perm3 anchor_monodromy(const Diagram& d, int comp);

}  // namespace xiknot
