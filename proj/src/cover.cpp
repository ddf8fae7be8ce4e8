#include "xiknot/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace xiknot {

namespace {
void require(bool ok, const std::string& msg) {
    if (!ok) throw std::logic_error("cover: " + msg);
}
}  // namespace

CoverComplex::CoverComplex(LevelComplex base) : base_(std::move(base)) {
    require(base_.diagram().has_colors(), "a coloring is required to build the cover");
    build_edges();
    build_faces();
    build_verts();
    build_solids();
    check_cover();
}

void CoverComplex::build_edges() {
    const int n1 = base_.n1;
    transport_.resize(static_cast<size_t>(n1));
    orbit_of_sheet_.assign(static_cast<size_t>(n1), {-1, -1, -1});
    lift1_offset_.assign(static_cast<size_t>(n1), 0);
    int next = 0;
    for (int e = 0; e < n1; ++e) {
        const auto& st = base_.stars[static_cast<size_t>(e)];
        auto& tr = transport_[static_cast<size_t>(e)];
        tr.resize(st.nodes.size());
        Perm3 acc = Perm3::identity();
        for (size_t t = 0; t < st.nodes.size(); ++t) {
            tr[t] = acc;
            const Perm3& g = base_.deck[static_cast<size_t>(st.nodes[t].face)];
            acc = Perm3::compose(st.nodes[t].forward ? g : g.inverse(), acc);
        }
        // acc is now the full monodromy around e; its orbits are the copies.
        auto& orb = orbit_of_sheet_[static_cast<size_t>(e)];
        int count = 0;
        for (int s = 1; s <= 3; ++s) {
            if (orb[static_cast<size_t>(s - 1)] >= 0) continue;
            int x = s;
            do {
                orb[static_cast<size_t>(x - 1)] = count;
                x = acc.apply(x);
            } while (x != s);
            ++count;
        }
        require(count == (base_.branch_edge[static_cast<size_t>(e)] ? 2 : 3),
                "wrong number of copies over " + base_.cell_name(1, e));
        lift1_offset_[static_cast<size_t>(e)] = next;
        for (int o = 0; o < count; ++o) lift1_base_.push_back(e);
        next += count;
    }
    N1 = next;
}

int CoverComplex::lift1_count(int e) const {
    const auto& orb = orbit_of_sheet_[static_cast<size_t>(e)];
    return 1 + std::max({orb[0], orb[1], orb[2]});
}

int CoverComplex::lift1_of_flag(int e, int t, int sheet) const {
    const auto& nd = base_.stars[static_cast<size_t>(e)].nodes[static_cast<size_t>(t)];
    const Perm3& g = base_.deck[static_cast<size_t>(nd.face)];
    const int before = nd.forward ? sheet : g.apply(sheet);
    const int at_base = transport_[static_cast<size_t>(e)][static_cast<size_t>(t)].inverse().apply(before);
    return lift1_id(e, orbit_of_sheet(e, at_base));
}

void CoverComplex::build_faces() {
    N2 = 3 * base_.n2;
    lift2_walks_.resize(static_cast<size_t>(N2));
    D2 = SparseIntMat(N1, N2);
    for (int s = 0; s < base_.n2; ++s) {
        for (int sheet = 1; sheet <= 3; ++sheet) {
            const int ls = lift2(s, sheet);
            auto& w = lift2_walks_[static_cast<size_t>(ls)];
            for (const auto& step : base_.walks[static_cast<size_t>(s)]) {
                const int le = lift1_of_flag(step.edge, step.star_pos, sheet);
                w.push_back({le, step.dir});
                D2.add(le, ls, step.dir);
            }
        }
    }
}

void CoverComplex::build_verts() {
    std::vector<int> parent(static_cast<size_t>(2 * N1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    };

    for (const auto& w : lift2_walks_) {
        for (size_t i = 0; i < w.size(); ++i) {
            const auto& cur = w[i];
            const auto& nxt = w[(i + 1) % w.size()];
            const int head_end = 2 * cur.first + (cur.second > 0 ? 1 : 0);
            const int tail_end = 2 * nxt.first + (nxt.second > 0 ? 0 : 1);
            unite(head_end, tail_end);
        }
    }

    end_class_.assign(static_cast<size_t>(2 * N1), -1);
    lift0_base_.clear();
    lift0_counts_.assign(static_cast<size_t>(base_.n0), 0);
    std::vector<int> class_of_root(static_cast<size_t>(2 * N1), -1);
    for (int node = 0; node < 2 * N1; ++node) {
        const int le = node / 2;
        const bool head = node % 2 == 1;
        const int be = lift1_base_[static_cast<size_t>(le)];
        const int bv = head ? base_.edge_head[static_cast<size_t>(be)] : base_.edge_tail[static_cast<size_t>(be)];
        const int root = find(node);
        int cls = class_of_root[static_cast<size_t>(root)];
        if (cls < 0) {
            cls = static_cast<int>(lift0_base_.size());
            class_of_root[static_cast<size_t>(root)] = cls;
            lift0_base_.push_back(bv);
            ++lift0_counts_[static_cast<size_t>(bv)];
        } else {
            require(lift0_base_[static_cast<size_t>(cls)] == bv, "glued ends over different vertices");
        }
        end_class_[static_cast<size_t>(node)] = cls;
    }
    N0 = static_cast<int>(lift0_base_.size());

    D1 = SparseIntMat(N0, N1);
    for (int le = 0; le < N1; ++le) {
        D1.add(end_class(le, true), le, 1);
        D1.add(end_class(le, false), le, -1);
    }
}

void CoverComplex::build_solids() {
    N3 = 3 * base_.n3;
    D3 = SparseIntMat(N2, N3);
    std::vector<std::vector<std::pair<int, int>>> inc(static_cast<size_t>(base_.n3));
    for (int s = 0; s < base_.n2; ++s) {
        inc[static_cast<size_t>(base_.side0[static_cast<size_t>(s)].cell)].push_back({s, 0});
        inc[static_cast<size_t>(base_.side1[static_cast<size_t>(s)].cell)].push_back({s, 1});
    }
    for (int c = 0; c < base_.n3; ++c) {
        for (int sheet = 1; sheet <= 3; ++sheet) {
            const int lc = lift3(c, sheet);
            for (const auto& [s, side] : inc[static_cast<size_t>(c)]) {
                if (side == 0) {
                    D3.add(lift2(s, sheet), lc, base_.side0[static_cast<size_t>(s)].coeff);
                } else {
                    const int j = base_.deck[static_cast<size_t>(s)].inverse().apply(sheet);
                    D3.add(lift2(s, j), lc, base_.side1[static_cast<size_t>(s)].coeff);
                }
            }
        }
    }
    fundamental.assign(static_cast<size_t>(N3), 0);
    for (int c = 0; c < base_.n3; ++c)
        for (int sheet = 1; sheet <= 3; ++sheet)
            fundamental[static_cast<size_t>(lift3(c, sheet))] = base_.fundamental[static_cast<size_t>(c)];
}

void CoverComplex::check_cover() const {
    require(N0 - N1 + N2 - N3 == 0, "euler characteristic is not zero");
    require(composes_to_zero(D1, D2), "D1 after D2 is nonzero");
    require(composes_to_zero(D2, D3), "D2 after D3 is nonzero");

    for (int v = 0; v < base_.n0; ++v)
        require(lift0_counts_[static_cast<size_t>(v)] == (base_.branch_vert[static_cast<size_t>(v)] ? 2 : 3),
                "wrong number of copies over " + base_.cell_name(0, v));

    std::map<int, Int> acc;
    for (int lc = 0; lc < N3; ++lc) {
        if (fundamental[static_cast<size_t>(lc)] == 0) continue;
        for (int r : D3.col_rows[static_cast<size_t>(lc)]) {
            Int& slot = acc[r];
            slot += D3.get(r, lc) * fundamental[static_cast<size_t>(lc)];
            if (slot == 0) acc.erase(r);
        }
    }
    require(acc.empty(), "signed sum of lifted 3-cells is not a cycle");
}

std::vector<CoverComplex::LiftedLoop> CoverComplex::lift_route(int comp) const {
    require(comp != base_.diagram().knot, "the branch curve has no ordinary lifts");
    const auto route = base_.route_cells(comp);
    for (const auto& [e, dir] : route)
        require(!base_.branch_edge[static_cast<size_t>(e)], "route runs along the branch curve");

    const int e0 = route[0].first;
    const int dir0 = route[0].second;
    std::vector<int> starts;
    for (int o = 0; o < lift1_count(e0); ++o)
        starts.push_back(end_class(lift1_id(e0, o), dir0 < 0));
    std::sort(starts.begin(), starts.end());
    require(std::unique(starts.begin(), starts.end()) == starts.end(), "start vertex copies collide");

    std::vector<LiftedLoop> out;
    std::vector<char> seen(starts.size(), 0);
    int total_wraps = 0;
    for (size_t i = 0; i < starts.size(); ++i) {
        if (seen[i]) continue;
        LiftedLoop loop;
        loop.start_class = starts[i];
        int cur = starts[i];
        do {
            for (size_t k = 0; k < starts.size(); ++k)
                if (starts[k] == cur) seen[k] = 1;
            for (const auto& [e, dir] : route) {
                int found = -1;
                for (int o = 0; o < lift1_count(e); ++o) {
                    const int le = lift1_id(e, o);
                    if (end_class(le, dir < 0) == cur) {
                        require(found < 0, "ambiguous edge copy along a lifted route");
                        found = le;
                    }
                }
                require(found >= 0, "no edge copy continues the lifted route");
                loop.cells.push_back({found, dir});
                cur = end_class(found, dir > 0);
            }
            ++loop.wraps;
        } while (cur != loop.start_class);
        total_wraps += loop.wraps;
        out.push_back(std::move(loop));
    }
    require(total_wraps == 3, "lifted route does not account for all sheets");
    return out;
}

int CoverComplex::arc0_piece(int comp) const {
    const auto& dia = base_.diagram();
    for (int p : dia.comp_pieces[static_cast<size_t>(comp)]) {
        const auto& pc = dia.pieces[static_cast<size_t>(p)];
        if (pc.occupied && pc.arc == 0) return p;
    }
    throw std::logic_error("cover: component has no level-0 edge on its zeroth arc");
}

int CoverComplex::arc0_edge_lift(int comp, int sheet) const {
    const int e = base_.top_edge(arc0_piece(comp));
    require(lift1_count(e) == 3, "zeroth-arc edge lies on the branch curve");
    require(orbit_of_sheet(e, sheet) == sheet - 1, "zeroth-arc edge has twisted sheet labels");
    return lift1_id(e, sheet - 1);
}

int CoverComplex::cut_disk_components(int piece) const {
    const auto& dia = base_.diagram();
    const auto& pc = dia.pieces[static_cast<size_t>(piece)];
    require(pc.occupied && pc.comp == dia.knot, "cut disks hang below occupied edges of the colored curve");

    // Node 0..2: wall copies by sheet; 3..5: fan copies by sheet.
    std::vector<int> parent(6);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    };

    const int etop = base_.top_edge(piece), elow = base_.low_edge(piece);
    // In the top edge's star circle the wall is node 0; in the low edge's
    // circle the wall is node 0 and the fan node 2.
    for (int j = 1; j <= 3; ++j)
        for (int k = j + 1; k <= 3; ++k)
            if (lift1_of_flag(etop, 0, j) == lift1_of_flag(etop, 0, k)) unite(j - 1, k - 1);
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k)
            if (lift1_of_flag(elow, 0, j) == lift1_of_flag(elow, 2, k)) unite(j - 1, 3 + k - 1);
    int comps = 0;
    for (int x = 0; x < 6; ++x) comps += find(x) == x ? 1 : 0;
    return comps;
}

const SmithForm& CoverComplex::snf_D2() const {
    if (!snf_d2_) snf_d2_ = smith_normal_form(D2);
    return *snf_d2_;
}

std::vector<Int> CoverComplex::h1_factors() const {
    return homology_invariant_factors(snf_D2(), sparse_rank(D1), N1);
}

int CoverComplex::lift0_count(int v) const { return lift0_counts_[static_cast<size_t>(v)]; }

}  // namespace xiknot
