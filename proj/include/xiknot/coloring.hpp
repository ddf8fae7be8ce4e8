#pragma once

#include "xiknot/diagram.hpp"
#include "xiknot/perm.hpp"

#include <string>
#include <vector>

namespace xiknot {

// Result of checking a scene's coloring without throwing: `error` is set
// for structural problems (missing or mis-sized color list, out-of-range
// entries), `bad_crossings` lists every knot underpass whose relation the
// colors violate (out = 2*over - in under the knot itself, unchanged under
// a basis curve), and `surjective` records whether at least two colors
// occur.  `valid` is the conjunction.
struct ColoringDiagnostics {
    bool valid = false;
    bool surjective = false;
    std::vector<int> bad_crossings;
    std::string error;
};
ColoringDiagnostics check_fox_coloring(const Scene& s);

// Composite of the color transpositions of the listed knot arcs, the
// first-crossed arc acting first on sheet labels.  Throws if an arc index
// is out of range or the scene has no coloring.
Perm3 arc_walk_monodromy(const Diagram& d, const std::vector<int>& arcs);

// Scene-level enumeration: one representative per equivalence class of
// surjective colorings (see coloring_classes).  Only p = 3 is supported.
std::vector<std::vector<int>> enumerate_colorings(const Scene& s, int p);

// All valid 3-colorings of the knot component's arcs, constants included:
// where the knot passes under itself the outgoing arc satisfies
// out = 2*over - in (mod 3), and under a basis curve the color continues
// unchanged.  Colors take values in {1,2,3}; the list is sorted.
std::vector<std::vector<int>> all_colorings(const Diagram& d);

// The colorings that use at least two distinct colors.
std::vector<std::vector<int>> surjective_colorings(const Diagram& d);

// One representative per orbit of the surjective colorings under affine
// relabelling c -> a*c + b (mod 3), a in {1,2}: the lexicographically
// least member of each orbit, sorted.
std::vector<std::vector<int>> coloring_classes(const Diagram& d);

// Affine relabelling of a coloring (computed mod 3 with 3 standing in
// for residue 0).
std::vector<int> relabel_coloring(const std::vector<int>& colors, int a, int b);

}  // namespace xiknot
