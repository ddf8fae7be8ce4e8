#include "xiknot/cw.hpp"

#include <map>
#include <stdexcept>

namespace xiknot {

namespace {
void require(bool ok, const std::string& msg) {
    if (!ok) throw std::logic_error("level complex: " + msg);
}
}  // namespace

LevelComplex::LevelComplex(Diagram d) : dia_(std::move(d)) {
    build_cells();
    build_walks();
    build_sides();
    build_deck();
    build_stars();
    check_complex();
    base_cell = north_cone(0);
}

void LevelComplex::build_cells() {
    nv_ = static_cast<int>(dia_.verts.size());
    np_ = static_cast<int>(dia_.pieces.size());
    nf_ = static_cast<int>(dia_.faces.size());
    n0 = 2 * nv_ + 2;
    n1 = 2 * np_ + 3 * nv_;
    n2 = 2 * nf_ + 3 * np_;
    n3 = 3 * nf_;

    for (const auto& p : dia_.pieces) require(p.tail != p.head, "edge piece closes on itself");

    edge_tail.assign(static_cast<size_t>(n1), -1);
    edge_head.assign(static_cast<size_t>(n1), -1);
    auto ends = [&](int e, int t, int h) {
        edge_tail[static_cast<size_t>(e)] = t;
        edge_head[static_cast<size_t>(e)] = h;
    };
    for (int p = 0; p < np_; ++p) {
        ends(top_edge(p), top_vert(dia_.pieces[static_cast<size_t>(p)].tail),
             top_vert(dia_.pieces[static_cast<size_t>(p)].head));
        ends(low_edge(p), low_vert(dia_.pieces[static_cast<size_t>(p)].tail),
             low_vert(dia_.pieces[static_cast<size_t>(p)].head));
    }
    for (int v = 0; v < nv_; ++v) {
        ends(vertical(v), low_vert(v), top_vert(v));
        ends(north_rib(v), north(), top_vert(v));
        ends(south_rib(v), south(), low_vert(v));
    }

    d1 = SparseIntMat(n0, n1);
    for (int e = 0; e < n1; ++e) {
        d1.add(edge_head[static_cast<size_t>(e)], e, 1);
        d1.add(edge_tail[static_cast<size_t>(e)], e, -1);
    }
}

void LevelComplex::build_walks() {
    walks.assign(static_cast<size_t>(n2), {});
    for (int f = 0; f < nf_; ++f) {
        for (const auto& [pc, dir] : dia_.faces[static_cast<size_t>(f)]) {
            walks[static_cast<size_t>(top_face(f))].push_back({top_edge(pc), dir, -1});
            walks[static_cast<size_t>(low_face(f))].push_back({low_edge(pc), dir, -1});
        }
    }
    for (int p = 0; p < np_; ++p) {
        const auto& pc = dia_.pieces[static_cast<size_t>(p)];
        walks[static_cast<size_t>(wall(p))] = {{top_edge(p), 1, -1},
                                               {vertical(pc.head), -1, -1},
                                               {low_edge(p), -1, -1},
                                               {vertical(pc.tail), 1, -1}};
        walks[static_cast<size_t>(north_fan(p))] = {{top_edge(p), 1, -1},
                                                    {north_rib(pc.head), -1, -1},
                                                    {north_rib(pc.tail), 1, -1}};
        walks[static_cast<size_t>(south_fan(p))] = {{low_edge(p), 1, -1},
                                                    {south_rib(pc.head), -1, -1},
                                                    {south_rib(pc.tail), 1, -1}};
    }

    d2 = SparseIntMat(n1, n2);
    for (int s = 0; s < n2; ++s)
        for (const auto& st : walks[static_cast<size_t>(s)]) d2.add(st.edge, s, st.dir);
}

void LevelComplex::build_sides() {
    side0.assign(static_cast<size_t>(n2), {});
    side1.assign(static_cast<size_t>(n2), {});
    for (int f = 0; f < nf_; ++f) {
        side0[static_cast<size_t>(top_face(f))] = {north_cone(f), 1};
        side1[static_cast<size_t>(top_face(f))] = {shell(f), 1};
        side0[static_cast<size_t>(low_face(f))] = {shell(f), -1};
        side1[static_cast<size_t>(low_face(f))] = {south_cone(f), 1};
    }
    for (int p = 0; p < np_; ++p) {
        const int fl = dia_.left_face(p), fr = dia_.right_face(p);
        side0[static_cast<size_t>(wall(p))] = {shell(fl), -1};
        side1[static_cast<size_t>(wall(p))] = {shell(fr), 1};
        side0[static_cast<size_t>(north_fan(p))] = {north_cone(fl), -1};
        side1[static_cast<size_t>(north_fan(p))] = {north_cone(fr), 1};
        side0[static_cast<size_t>(south_fan(p))] = {south_cone(fl), -1};
        side1[static_cast<size_t>(south_fan(p))] = {south_cone(fr), 1};
    }

    d3 = SparseIntMat(n2, n3);
    for (int s = 0; s < n2; ++s) {
        d3.add(s, side0[static_cast<size_t>(s)].cell, side0[static_cast<size_t>(s)].coeff);
        d3.add(s, side1[static_cast<size_t>(s)].cell, side1[static_cast<size_t>(s)].coeff);
    }

    // Independent construction of the same operator from the prism / cone
    // boundary formulas, as a cross-check on the side flags.
    SparseIntMat alt(n2, n3);
    for (int f = 0; f < nf_; ++f) {
        alt.add(top_face(f), shell(f), 1);
        alt.add(low_face(f), shell(f), -1);
        alt.add(top_face(f), north_cone(f), 1);
        alt.add(low_face(f), south_cone(f), 1);
        for (const auto& [pc, dir] : dia_.faces[static_cast<size_t>(f)]) {
            alt.add(wall(pc), shell(f), -dir);
            alt.add(north_fan(pc), north_cone(f), -dir);
            alt.add(south_fan(pc), south_cone(f), -dir);
        }
    }
    for (int i = 0; i < n2; ++i) require(d3.row[static_cast<size_t>(i)] == alt.row[static_cast<size_t>(i)], "side flags disagree with boundary formulas");

    fundamental.assign(static_cast<size_t>(n3), 0);
    for (int f = 0; f < nf_; ++f) {
        fundamental[static_cast<size_t>(shell(f))] = 1;
        fundamental[static_cast<size_t>(north_cone(f))] = -1;
        fundamental[static_cast<size_t>(south_cone(f))] = 1;
    }
}

void LevelComplex::build_deck() {
    deck.assign(static_cast<size_t>(n2), Perm3::identity());
    branch_edge.assign(static_cast<size_t>(n1), 0);
    branch_color.assign(static_cast<size_t>(n1), 0);
    branch_vert.assign(static_cast<size_t>(n0), 0);

    const int k = dia_.knot;
    auto mark = [&](int e, int col) {
        require(!branch_edge[static_cast<size_t>(e)], "colored curve revisits a 1-cell");
        branch_edge[static_cast<size_t>(e)] = 1;
        branch_color[static_cast<size_t>(e)] = col;
    };
    for (int p : dia_.comp_pieces[static_cast<size_t>(k)]) {
        const auto& pc = dia_.pieces[static_cast<size_t>(p)];
        const int col = dia_.has_colors() ? dia_.color_of_knot_arc(pc.arc) : 0;
        if (pc.occupied) {
            mark(top_edge(p), col);
        } else if (pc.ghost_half == 0) {
            mark(vertical(pc.tail), col);
            mark(low_edge(p), col);
        } else {
            mark(low_edge(p), col);
            mark(vertical(pc.head), col);
        }
        if (dia_.has_colors()) {
            if (pc.occupied) deck[static_cast<size_t>(wall(p))] = Perm3::for_color(col);
            deck[static_cast<size_t>(south_fan(p))] = Perm3::for_color(col);
        }
    }
    for (int e = 0; e < n1; ++e)
        if (branch_edge[static_cast<size_t>(e)]) {
            branch_vert[static_cast<size_t>(edge_tail[static_cast<size_t>(e)])] = 1;
            branch_vert[static_cast<size_t>(edge_head[static_cast<size_t>(e)])] = 1;
        }
}

void LevelComplex::build_stars() {
    stars.assign(static_cast<size_t>(n1), {});

    std::vector<int> pos_of_dart(static_cast<size_t>(2 * np_), -1);
    for (const auto& face : dia_.faces) {
        for (size_t i = 0; i < face.size(); ++i) {
            int dart = 2 * face[i].first + (face[i].second < 0 ? 1 : 0);
            pos_of_dart[static_cast<size_t>(dart)] = static_cast<int>(i);
        }
    }

    for (int p = 0; p < np_; ++p) {
        const int fl = dia_.left_face(p), fr = dia_.right_face(p);
        const int pl = pos_of_dart[static_cast<size_t>(2 * p)], pr = pos_of_dart[static_cast<size_t>(2 * p + 1)];
        stars[static_cast<size_t>(top_edge(p))] = {{{wall(p), 0, true},
                                                    {top_face(fr), pr, false},
                                                    {north_fan(p), 0, false},
                                                    {top_face(fl), pl, true}},
                                                   shell(fl)};
        stars[static_cast<size_t>(low_edge(p))] = {{{wall(p), 2, true},
                                                    {low_face(fr), pr, true},
                                                    {south_fan(p), 0, false},
                                                    {low_face(fl), pl, false}},
                                                   shell(fl)};
    }

    for (int v = 0; v < nv_; ++v) {
        const auto& darts = dia_.vert_darts[static_cast<size_t>(v)];
        StarCircle cv, cn, cs;
        const int f0 = dia_.face_of_dart[static_cast<size_t>(darts[0])];
        cv.base_region = shell(f0);
        cn.base_region = north_cone(f0);
        cs.base_region = south_cone(f0);
        for (int dart : darts) {
            const int p = dart / 2;
            const bool fwd = (dart % 2 == 0);
            cv.nodes.push_back({wall(p), fwd ? 3 : 1, fwd});
            cn.nodes.push_back({north_fan(p), fwd ? 2 : 1, fwd});
            cs.nodes.push_back({south_fan(p), fwd ? 2 : 1, fwd});
        }
        stars[static_cast<size_t>(vertical(v))] = cv;
        stars[static_cast<size_t>(north_rib(v))] = cn;
        stars[static_cast<size_t>(south_rib(v))] = cs;
    }

    // Tie each walk flag to its star node; every flag is hit exactly once.
    for (int e = 0; e < n1; ++e) {
        const auto& st = stars[static_cast<size_t>(e)];
        require(!st.nodes.empty(), "empty star circle");
        for (size_t t = 0; t < st.nodes.size(); ++t) {
            const auto& nd = st.nodes[t];
            auto& step = walks[static_cast<size_t>(nd.face)].at(static_cast<size_t>(nd.walk_pos));
            require(step.edge == e, "star node flags the wrong edge");
            require(step.star_pos == -1, "walk flag claimed by two star nodes");
            step.star_pos = static_cast<int>(t);
        }
    }
    for (int s = 0; s < n2; ++s)
        for (const auto& step : walks[static_cast<size_t>(s)])
            require(step.star_pos >= 0, "walk flag missing from every star circle");
}

void LevelComplex::check_complex() const {
    require(n0 - n1 + n2 - n3 == 0, "euler characteristic is not zero");

    // Each boundary walk is a closed vertex path.
    for (int s = 0; s < n2; ++s) {
        const auto& w = walks[static_cast<size_t>(s)];
        require(!w.empty(), "empty boundary walk");
        auto tail_of = [&](const WalkStep& st) {
            return st.dir > 0 ? edge_tail[static_cast<size_t>(st.edge)] : edge_head[static_cast<size_t>(st.edge)];
        };
        auto head_of = [&](const WalkStep& st) {
            return st.dir > 0 ? edge_head[static_cast<size_t>(st.edge)] : edge_tail[static_cast<size_t>(st.edge)];
        };
        for (size_t i = 0; i < w.size(); ++i)
            require(head_of(w[i]) == tail_of(w[(i + 1) % w.size()]), "boundary walk is not a closed path");
    }

    // Star circles traverse regions consistently with the side flags, and
    // their monodromy is the branch transposition on the colored curve and
    // trivial elsewhere.
    for (int e = 0; e < n1; ++e) {
        const auto& st = stars[static_cast<size_t>(e)];
        int r = st.base_region;
        Perm3 mon = Perm3::identity();
        for (const auto& nd : st.nodes) {
            const auto& s0 = side0[static_cast<size_t>(nd.face)];
            const auto& s1 = side1[static_cast<size_t>(nd.face)];
            if (nd.forward) {
                require(s0.cell == r, "star circle leaves the wrong region");
                r = s1.cell;
                mon = Perm3::compose(deck[static_cast<size_t>(nd.face)], mon);
            } else {
                require(s1.cell == r, "star circle leaves the wrong region");
                r = s0.cell;
                mon = Perm3::compose(deck[static_cast<size_t>(nd.face)].inverse(), mon);
            }
        }
        require(r == st.base_region, "star circle does not close up");
        if (branch_edge[static_cast<size_t>(e)] && dia_.has_colors())
            require(mon == Perm3::for_color(branch_color[static_cast<size_t>(e)]),
                    "monodromy around a branch edge is not its color transposition");
        else
            require(mon.is_identity(), "monodromy around an ordinary edge is not trivial");
    }

    // dd = 0 for both compositions.
    require(composes_to_zero(d1, d2), "d1 after d2 is nonzero");
    require(composes_to_zero(d2, d3), "d2 after d3 is nonzero");

    // The signed sum of all 3-cells is a cycle (fundamental class).
    {
        std::map<int, Int> acc;
        for (int c = 0; c < n3; ++c) {
            if (fundamental[static_cast<size_t>(c)] == 0) continue;
            for (int r : d3.col_rows[static_cast<size_t>(c)]) {
                Int& slot = acc[r];
                slot += d3.get(r, c) * fundamental[static_cast<size_t>(c)];
                if (slot == 0) acc.erase(r);
            }
        }
        require(acc.empty(), "signed 3-cell sum is not a cycle");
    }

    // Every component's embedded route is a closed walk in the 1-skeleton.
    for (int c = 0; c < static_cast<int>(dia_.scene.components.size()); ++c) {
        auto rc = route_cells(c);
        require(!rc.empty(), "component with empty route");
        auto tail_of = [&](const std::pair<int, int>& st) {
            return st.second > 0 ? edge_tail[static_cast<size_t>(st.first)] : edge_head[static_cast<size_t>(st.first)];
        };
        auto head_of = [&](const std::pair<int, int>& st) {
            return st.second > 0 ? edge_head[static_cast<size_t>(st.first)] : edge_tail[static_cast<size_t>(st.first)];
        };
        for (size_t i = 0; i < rc.size(); ++i)
            require(head_of(rc[i]) == tail_of(rc[(i + 1) % rc.size()]), "component route does not close up");
    }
}

std::vector<std::pair<int, int>> LevelComplex::route_cells(int comp) const {
    std::vector<std::pair<int, int>> out;
    for (int p : dia_.comp_pieces[static_cast<size_t>(comp)]) {
        const auto& pc = dia_.pieces[static_cast<size_t>(p)];
        if (pc.occupied) {
            out.push_back({top_edge(p), 1});
        } else if (pc.ghost_half == 0) {
            out.push_back({vertical(pc.tail), -1});
            out.push_back({low_edge(p), 1});
        } else {
            out.push_back({low_edge(p), 1});
            out.push_back({vertical(pc.head), 1});
        }
    }
    return out;
}

std::string LevelComplex::cell_name(int dim, int id) const {
    auto tag = [&](const char* fam, int i) { return std::string(fam) + "(" + std::to_string(i) + ")"; };
    switch (dim) {
        case 0:
            if (id < nv_) return tag("TopVert", id);
            if (id < 2 * nv_) return tag("LowVert", id - nv_);
            return id == north() ? "North" : "South";
        case 1:
            if (id < np_) return tag("TopEdge", id);
            if (id < 2 * np_) return tag("LowEdge", id - np_);
            if (id < 2 * np_ + nv_) return tag("Vertical", id - 2 * np_);
            if (id < 2 * np_ + 2 * nv_) return tag("NorthRib", id - 2 * np_ - nv_);
            return tag("SouthRib", id - 2 * np_ - 2 * nv_);
        case 2:
            if (id < nf_) return tag("TopFace", id);
            if (id < 2 * nf_) return tag("LowFace", id - nf_);
            if (id < 2 * nf_ + np_) return tag("Wall", id - 2 * nf_);
            if (id < 2 * nf_ + 2 * np_) return tag("NorthFan", id - 2 * nf_ - np_);
            return tag("SouthFan", id - 2 * nf_ - 2 * np_);
        case 3:
            if (id < nf_) return tag("Shell", id);
            if (id < 2 * nf_) return tag("NorthCone", id - nf_);
            return tag("SouthCone", id - 2 * nf_);
    }
    return "?";
}

}  // namespace xiknot
