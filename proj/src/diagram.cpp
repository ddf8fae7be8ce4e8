#include "xiknot/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace xiknot {

namespace {

int norm_color(int x, int p) {
    int m = x % p;
    if (m <= 0) m += p;
    return m;
}

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(static_cast<size_t>(n)) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) {
        while (up[static_cast<size_t>(x)] != x) {
            up[static_cast<size_t>(x)] = up[static_cast<size_t>(up[static_cast<size_t>(x)])];
            x = up[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { up[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

int Diagram::component_index(const std::string& name) const {
    for (size_t i = 0; i < scene.components.size(); ++i)
        if (scene.components[i].name == name) return static_cast<int>(i);
    throw SceneError("no component named '" + name + "'");
}

Diagram build_diagram(const Scene& s) {
    Diagram d;
    d.scene = s;
    const int nc = static_cast<int>(s.crossings.size());
    if (nc == 0) throw SceneError("scene has no crossings");

    for (int i = 0; i < nc; ++i) {
        const auto& c = s.crossings[static_cast<size_t>(i)];
        if (!d.cross_index.emplace(c.id, i).second)
            throw SceneError("duplicate crossing id " + std::to_string(c.id));
        Diagram::CrossInfo ci;
        ci.id = c.id;
        ci.sign = c.sign;
        d.cross.push_back(ci);
    }

    const int ncomp = static_cast<int>(s.components.size());
    for (int ci = 0; ci < ncomp; ++ci) {
        const Component& comp = s.components[static_cast<size_t>(ci)];
        if (comp.role == Role::Knot) {
            if (d.knot >= 0) throw SceneError("scene must have exactly one knot component");
            d.knot = ci;
        }
        if (!comp.pushoff_of.empty()) {
            int parent = -1;
            for (int cj = 0; cj < ncomp; ++cj)
                if (s.components[static_cast<size_t>(cj)].name == comp.pushoff_of) parent = cj;
            if (parent < 0 || s.components[static_cast<size_t>(parent)].role != Role::Basis)
                throw SceneError("pushoff_of of '" + comp.name + "' must name a basis curve");
        }
    }
    if (d.knot < 0) throw SceneError("scene must have a knot component");

    // Passage bookkeeping.
    for (int ci = 0; ci < ncomp; ++ci) {
        const auto& route = s.components[static_cast<size_t>(ci)].route;
        for (size_t pos = 0; pos < route.size(); ++pos) {
            const Passage& p = route[pos];
            auto it = d.cross_index.find(p.crossing);
            if (it == d.cross_index.end())
                throw SceneError("route references unknown crossing " + std::to_string(p.crossing));
            Diagram::CrossInfo& info = d.cross[static_cast<size_t>(it->second)];
            int& comp_slot = p.over ? info.over_comp : info.under_comp;
            int& pos_slot = p.over ? info.over_pos : info.under_pos;
            if (comp_slot >= 0)
                throw SceneError("crossing " + std::to_string(p.crossing) + " has a duplicate " +
                                 (p.over ? "over" : "under") + " passage");
            comp_slot = ci;
            pos_slot = static_cast<int>(pos);
        }
    }
    for (const auto& info : d.cross) {
        if (info.over_comp < 0 || info.under_comp < 0)
            throw SceneError("crossing " + std::to_string(info.id) +
                             " must be visited once over and once under");
    }

    // Vertices: crossings, then dip pairs (before, after) per crossing.
    d.verts.resize(static_cast<size_t>(3 * nc));
    d.cross_pieces.resize(static_cast<size_t>(nc));
    for (int x = 0; x < nc; ++x) {
        d.verts[static_cast<size_t>(x)] = {false, x, -1};
        d.verts[static_cast<size_t>(nc + 2 * x)] = {true, x, 0};
        d.verts[static_cast<size_t>(nc + 2 * x + 1)] = {true, x, 1};
        d.cross_pieces[static_cast<size_t>(x)].dip_in_vert = nc + 2 * x;
        d.cross_pieces[static_cast<size_t>(x)].dip_out_vert = nc + 2 * x + 1;
    }

    // Pieces, per component, following each route.
    std::vector<std::array<int, 4>> slot_dart(static_cast<size_t>(nc), {-1, -1, -1, -1});
    d.comp_pieces.resize(static_cast<size_t>(ncomp));
    std::vector<std::vector<std::pair<int, int>>> gedge_range(static_cast<size_t>(ncomp));

    for (int ci = 0; ci < ncomp; ++ci) {
        const auto& route = s.components[static_cast<size_t>(ci)].route;
        const int n = static_cast<int>(route.size());
        for (int i = 0; i < n; ++i) {
            const Passage& cur = route[static_cast<size_t>(i)];
            const Passage& nxt = route[static_cast<size_t>((i + 1) % n)];
            int x = d.cross_index[cur.crossing];
            int y = d.cross_index[nxt.crossing];

            std::vector<int> chain{x};
            if (!cur.over) chain.push_back(d.cross_pieces[static_cast<size_t>(x)].dip_out_vert);
            if (!nxt.over) chain.push_back(d.cross_pieces[static_cast<size_t>(y)].dip_in_vert);
            chain.push_back(y);

            int first = static_cast<int>(d.pieces.size());
            for (size_t k = 0; k + 1 < chain.size(); ++k) {
                Diagram::Piece p;
                p.tail = chain[k];
                p.head = chain[k + 1];
                p.comp = ci;
                p.occupied = true;
                d.pieces.push_back(p);
                d.comp_pieces[static_cast<size_t>(ci)].push_back(static_cast<int>(d.pieces.size()) - 1);
            }
            int last = static_cast<int>(d.pieces.size()) - 1;
            gedge_range[static_cast<size_t>(ci)].push_back({first, last});

            auto& cpx = d.cross_pieces[static_cast<size_t>(x)];
            auto& cpy = d.cross_pieces[static_cast<size_t>(y)];
            if (cur.over) {
                cpx.over_out = first;
                slot_dart[static_cast<size_t>(x)][Diagram::OverOut] = 2 * first;
            } else {
                cpx.ghost_out = first;
                cpx.under_out = first + 1;
                d.pieces[static_cast<size_t>(first)].occupied = false;
                d.pieces[static_cast<size_t>(first)].ghost_crossing = x;
                d.pieces[static_cast<size_t>(first)].ghost_half = 1;
                slot_dart[static_cast<size_t>(x)][Diagram::UnderOut] = 2 * first;
            }
            if (nxt.over) {
                cpy.over_in = last;
                slot_dart[static_cast<size_t>(y)][Diagram::OverIn] = 2 * last + 1;
            } else {
                cpy.ghost_in = last;
                cpy.under_in = last - 1;
                d.pieces[static_cast<size_t>(last)].occupied = false;
                d.pieces[static_cast<size_t>(last)].ghost_crossing = y;
                d.pieces[static_cast<size_t>(last)].ghost_half = 0;
                slot_dart[static_cast<size_t>(y)][Diagram::UnderIn] = 2 * last + 1;
            }
        }
    }

    // Arc decomposition: a curve's arcs break at its underpasses below the
    // knot or below basis curves; trace overpasses never renumber.
    d.arc_count.assign(static_cast<size_t>(ncomp), 1);
    for (int ci = 0; ci < ncomp; ++ci) {
        const auto& route = s.components[static_cast<size_t>(ci)].route;
        const int n = static_cast<int>(route.size());
        auto breaking = [&](const Passage& p) {
            if (p.over) return false;
            int over_comp = d.cross[static_cast<size_t>(d.cross_index[p.crossing])].over_comp;
            Role r = s.components[static_cast<size_t>(over_comp)].role;
            return r == Role::Knot || r == Role::Basis;
        };
        int m = 0;
        for (const auto& p : route)
            if (breaking(p)) ++m;
        int counter = 0;
        for (int i = 0; i < n; ++i) {
            if (breaking(route[static_cast<size_t>(i)])) ++counter;
            auto [first, last] = gedge_range[static_cast<size_t>(ci)][static_cast<size_t>(i)];
            for (int pc = first; pc <= last; ++pc)
                d.pieces[static_cast<size_t>(pc)].arc = (m == 0) ? 0 : counter % m;
        }
        d.arc_count[static_cast<size_t>(ci)] = std::max(m, 1);
    }

    // The over strand never breaks at its own overpass.
    for (int x = 0; x < nc; ++x) {
        const auto& cp = d.cross_pieces[static_cast<size_t>(x)];
        if (d.pieces[static_cast<size_t>(cp.over_in)].arc != d.pieces[static_cast<size_t>(cp.over_out)].arc)
            throw SceneError("internal: over strand arc changed at crossing " +
                             std::to_string(d.cross[static_cast<size_t>(x)].id));
    }

    // Rotation system and faces.
    const int np = static_cast<int>(d.pieces.size());
    std::vector<std::vector<int>> vert_darts(d.verts.size());
    for (int x = 0; x < nc; ++x) {
        const int sign = d.cross[static_cast<size_t>(x)].sign;
        const std::array<int, 4> order =
            (sign > 0) ? std::array<int, 4>{Diagram::OverOut, Diagram::UnderOut, Diagram::OverIn, Diagram::UnderIn}
                       : std::array<int, 4>{Diagram::OverOut, Diagram::UnderIn, Diagram::OverIn, Diagram::UnderOut};
        for (int slot : order) {
            int dart = slot_dart[static_cast<size_t>(x)][static_cast<size_t>(slot)];
            if (dart < 0) throw SceneError("internal: missing slot dart");
            vert_darts[static_cast<size_t>(x)].push_back(dart);
        }
    }
    for (int pc = 0; pc < np; ++pc) {
        const auto& p = d.pieces[static_cast<size_t>(pc)];
        if (d.verts[static_cast<size_t>(p.tail)].is_dip) vert_darts[static_cast<size_t>(p.tail)].push_back(2 * pc);
        if (d.verts[static_cast<size_t>(p.head)].is_dip) vert_darts[static_cast<size_t>(p.head)].push_back(2 * pc + 1);
    }

    std::vector<int> rot_next(static_cast<size_t>(2 * np), -1);
    for (const auto& darts : vert_darts) {
        if (darts.empty()) throw SceneError("internal: isolated vertex");
        for (size_t i = 0; i < darts.size(); ++i)
            rot_next[static_cast<size_t>(darts[i])] = darts[(i + 1) % darts.size()];
    }
    d.vert_darts = vert_darts;
    d.rot_next = rot_next;

    d.face_of_dart.assign(static_cast<size_t>(2 * np), -1);
    for (int start = 0; start < 2 * np; ++start) {
        if (d.face_of_dart[static_cast<size_t>(start)] >= 0) continue;
        int fid = static_cast<int>(d.faces.size());
        std::vector<std::pair<int, int>> walk;
        int dart = start;
        do {
            d.face_of_dart[static_cast<size_t>(dart)] = fid;
            walk.push_back({dart / 2, dart % 2 == 0 ? 1 : -1});
            dart = rot_next[static_cast<size_t>(dart ^ 1)];  // rotate the reversed dart
        } while (dart != start);
        d.faces.push_back(std::move(walk));
    }

    // Sphere check: connected (one piece of projection) and Euler 2.
    UnionFind uf(static_cast<int>(d.verts.size()));
    for (const auto& p : d.pieces) uf.unite(p.tail, p.head);
    int roots = 0;
    for (int v = 0; v < static_cast<int>(d.verts.size()); ++v)
        if (uf.find(v) == v) ++roots;
    if (roots != 1)
        throw SceneError("projection graph must be connected (split diagrams cannot be realized here)");
    long euler = static_cast<long>(d.verts.size()) - np + static_cast<long>(d.faces.size());
    if (euler != 2)
        throw SceneError("rotation system is not spherical: V - E + F = " + std::to_string(euler));

    // Color checks (when the scene carries a coloring).
    if (!s.colors.empty()) {
        const int m = d.arc_count[static_cast<size_t>(d.knot)];
        if (static_cast<int>(s.colors.size()) != m)
            throw SceneError("colors array must have one entry per knot arc (" + std::to_string(m) + ")");
        for (int col : s.colors)
            if (col < 1 || col > s.p) throw SceneError("colors must lie in 1..p");
        const auto& route = s.components[static_cast<size_t>(d.knot)].route;
        for (const auto& pss : route) {
            if (pss.over) continue;
            int x = d.cross_index[pss.crossing];
            const auto& cp = d.cross_pieces[static_cast<size_t>(x)];
            int over_comp = d.cross[static_cast<size_t>(x)].over_comp;
            Role r = s.components[static_cast<size_t>(over_comp)].role;
            int ain = d.pieces[static_cast<size_t>(cp.ghost_in)].arc;
            int aout = d.pieces[static_cast<size_t>(cp.ghost_out)].arc;
            if (r == Role::Knot) {
                int b = d.over_arc_at(x);
                int expect = norm_color(2 * s.colors[static_cast<size_t>(b)] - s.colors[static_cast<size_t>(ain)], s.p);
                if (s.colors[static_cast<size_t>(aout)] != expect)
                    throw SceneError("coloring violates the crossing relation at crossing " +
                                     std::to_string(pss.crossing));
            } else if (r == Role::Basis) {
                if (s.colors[static_cast<size_t>(ain)] != s.colors[static_cast<size_t>(aout)])
                    throw SceneError("knot color must not change under a basis curve (crossing " +
                                     std::to_string(pss.crossing) + ")");
            }
        }
    }

    // Anchor walks list the knot arcs a path crosses under, in path order.
    {
        const int m = d.arc_count[static_cast<size_t>(d.knot)];
        for (const auto& comp : s.components)
            for (const auto* walk : {&comp.anchors.path, &comp.anchors.right, &comp.anchors.left})
                for (int arc : *walk)
                    if (arc < 0 || arc >= m)
                        throw SceneError("anchor walk of '" + comp.name +
                                         "' references knot arc " + std::to_string(arc) +
                                         " outside 0.." + std::to_string(m - 1));
    }

    return d;
}

CurveLists curve_lists(const Diagram& d, int comp) {
    CurveLists out;
    const auto& route = d.scene.components[static_cast<size_t>(comp)].route;
    for (const auto& p : route) {
        if (p.over) continue;
        int x = d.cross_index.at(p.crossing);
        int over_comp = d.cross[static_cast<size_t>(x)].over_comp;
        Role r = d.scene.components[static_cast<size_t>(over_comp)].role;
        if (r == Role::Trace) continue;
        out.f.push_back(d.over_arc_at(x));
        out.eps.push_back(d.cross[static_cast<size_t>(x)].sign);
        out.t.push_back(r == Role::Knot ? 'k' : 'p');
    }
    return out;
}

std::string gauss_lists_text(const Diagram& d, int comp) {
    const CurveLists l = curve_lists(d, comp);
    auto line = [](const std::string& prefix, const std::vector<std::string>& items) {
        std::string out = prefix + "(";
        for (size_t i = 0; i < items.size(); ++i) {
            if (i) out += ",";
            out += items[i];
        }
        return out + ")\n";
    };
    std::vector<std::string> f, eps, t;
    for (int x : l.f) f.push_back(std::to_string(x));
    for (int e : l.eps) eps.push_back(e > 0 ? "+" : "-");
    for (char ch : l.t) t.push_back(std::string(1, ch));

    const bool knot = comp == d.knot;
    std::string out;
    out += line(knot ? "f=" : "", f);
    out += line(knot ? "eps=" : "", eps);
    out += line(knot ? "t=" : "", t);
    if (knot && d.has_colors()) {
        std::vector<std::string> c;
        for (int col : d.scene.colors) c.push_back(std::to_string(col));
        out += line("c=", c);
    }
    return out;
}

Int s3_linking(const Diagram& d, int comp_a, int comp_b) {
    Int sum(0);
    for (const auto& c : d.cross)
        if (c.over_comp == comp_a && c.under_comp == comp_b) sum += c.sign;
    return sum;
}

Int writhe(const Diagram& d, int comp) {
    Int sum(0);
    for (const auto& c : d.cross)
        if (c.over_comp == comp && c.under_comp == comp) sum += c.sign;
    return sum;
}

}  // namespace xiknot
