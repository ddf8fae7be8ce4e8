#include "xiknot/linking.hpp"

#include "xiknot/coloring.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace xiknot {

namespace {

// Orientation of a positive side0-to-side1 crossing against the ambient
// fundamental class, fixed once by the unit Hopf pair fixture.
constexpr int kCrossOrient = -1;

int dart_index(const std::vector<int>& darts, int dart) {
    for (size_t i = 0; i < darts.size(); ++i)
        if (darts[i] == dart) return static_cast<int>(i);
    throw std::logic_error("transverse trace: dart not at its vertex");
}

}  // namespace

std::vector<Pierce> transverse_trace(const LevelComplex& lc, int comp) {
    const Diagram& d = lc.diagram();
    const auto& walk = d.comp_pieces.at(static_cast<size_t>(comp));
    int start = -1;
    for (size_t i = 0; i < walk.size(); ++i) {
        const auto& pc = d.pieces[static_cast<size_t>(walk[i])];
        if (pc.occupied && pc.arc == 0) {
            start = static_cast<int>(i);
            break;
        }
    }
    if (start < 0) throw std::logic_error("transverse trace: component has no zeroth-arc edge");

    std::vector<Pierce> out;
    const int n = static_cast<int>(walk.size());
    for (int i = 0; i < n; ++i) {
        const int p = walk[static_cast<size_t>((start + i) % n)];
        const int q = walk[static_cast<size_t>((start + i + 1) % n)];
        const auto& pin = d.pieces[static_cast<size_t>(p)];
        const auto& qout = d.pieces[static_cast<size_t>(q)];
        const int v = pin.head;

        // Dive below the lower sphere just before the push-off's own dip.
        if (pin.occupied && !qout.occupied) out.push_back({lc.low_face(d.left_face(p)), +1});

        // Swing around the vertex from beside p to beside q, through the
        // walls at level zero or through the fans below the lower sphere.
        const bool below = !(pin.occupied && qout.occupied);
        const auto& darts = d.vert_darts[static_cast<size_t>(v)];
        const int deg = static_cast<int>(darts.size());
        const int stop = dart_index(darts, 2 * q);
        for (int k = (dart_index(darts, 2 * p + 1) + 1) % deg; k != stop; k = (k + 1) % deg) {
            const int dk = darts[static_cast<size_t>(k)];
            const int piece = dk >> 1;
            const int dir = (dk & 1) ? -1 : +1;
            out.push_back({below ? lc.south_fan(piece) : lc.wall(piece), dir});
        }

        // Climb back beside the strand after the dip.
        if (!pin.occupied && qout.occupied) out.push_back({lc.low_face(d.left_face(q)), -1});
    }
    return out;
}

Perm3 trace_monodromy(const CoverComplex& cov, int comp) {
    const LevelComplex& lc = cov.base();
    Perm3 m;
    for (const Pierce& pr : transverse_trace(lc, comp)) {
        const Perm3& g = lc.deck[static_cast<size_t>(pr.face)];
        m = Perm3::compose(pr.dir > 0 ? g : g.inverse(), m);
    }
    return m;
}

LiftedTrace lift_trace(const CoverComplex& cov, int comp, int start_sheet) {
    const LevelComplex& lc = cov.base();
    const std::vector<Pierce> base_trace = transverse_trace(lc, comp);
    LiftedTrace t;
    t.start_sheet = start_sheet;
    int s = start_sheet;
    do {
        for (const Pierce& pr : base_trace) {
            const Perm3& g = lc.deck[static_cast<size_t>(pr.face)];
            int at = s;
            if (pr.dir > 0) {
                s = g.apply(s);
            } else {
                s = g.inverse().apply(s);
                at = s;
            }
            t.pierces.emplace_back(cov.lift2(pr.face, at), pr.dir);
        }
        ++t.wraps;
        if (t.wraps > 3) throw std::logic_error("lifted trace fails to close");
    } while (s != start_sheet);
    return t;
}

Rat lifted_linking(const CoverComplex& cov, const CoverComplex::LiftedLoop& loop,
                   const LiftedTrace& trace) {
    std::vector<Int> z(static_cast<size_t>(cov.N1), Int(0));
    for (const auto& [cell, dir] : loop.cells) z[static_cast<size_t>(cell)] += dir;
    const auto sol = solve_scaled(cov.snf_D2(), z);
    if (!sol) throw std::logic_error("lifted linking: loop does not bound rationally");

    const LevelComplex& lc = cov.base();
    Int acc(0);
    for (const auto& [ls, dir] : trace.pierces) {
        const Int& f = sol->chain[static_cast<size_t>(ls)];
        if (f == 0) continue;
        const SideFlag& s0 = lc.side0[static_cast<size_t>(cov.base_of_lift2(ls))];
        const int sign = dir * lc.fundamental[static_cast<size_t>(s0.cell)] * s0.coeff * kCrossOrient;
        acc += sign * f;
    }
    return Rat(acc, sol->n);
}

Perm3 anchor_monodromy(const Diagram& d, int comp) {
    const AnchorSet& a = d.scene.components.at(static_cast<size_t>(comp)).anchors;
    return arc_walk_monodromy(d, a.boundary ? a.right : a.path);
}

Mat<Rat> linking_block(const CoverComplex& cov, int comp_g, int comp_h) {
    const Diagram& d = cov.base().diagram();
    const Perm3 mu_g = anchor_monodromy(d, comp_g);
    const Perm3 mu_h = anchor_monodromy(d, comp_h);

    const auto loops = cov.lift_route(comp_g);
    for (const auto& loop : loops)
        if (loop.wraps != 1)
            throw std::logic_error("linking block: row curve lifts do not close once around");

    std::array<LiftedTrace, 3> traces;
    for (int k = 1; k <= 3; ++k) {
        traces[static_cast<size_t>(k - 1)] = lift_trace(cov, comp_h, mu_h.apply(k));
        if (traces[static_cast<size_t>(k - 1)].wraps != 1)
            throw std::logic_error("linking block: column curve lifts do not close once around");
    }

    Mat<Rat> b(3, 3);
    for (int j = 1; j <= 3; ++j) {
        const int anchor_cell = cov.arc0_edge_lift(comp_g, mu_g.apply(j));
        const CoverComplex::LiftedLoop* loop = nullptr;
        for (const auto& cand : loops) {
            for (const auto& cd : cand.cells)
                if (cd.first == anchor_cell) {
                    loop = &cand;
                    break;
                }
            if (loop) break;
        }
        if (!loop) throw std::logic_error("linking block: anchored lift not found");
        for (int k = 1; k <= 3; ++k)
            b(j - 1, k - 1) = lifted_linking(cov, *loop, traces[static_cast<size_t>(k - 1)]);
    }
    return b;
}

}  // namespace xiknot
