#include "xiknot/coloring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace xiknot {

namespace {

constexpr int kMaxFreeVars = 10;

int to_color(int residue) { return residue == 0 ? 3 : residue; }
int to_residue(int color) { return color % 3; }

// Reduced row echelon form over GF(3); returns pivot column per row.
std::vector<int> rref_mod3(std::vector<std::vector<int>>& m, int cols) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
        int pr = -1;
        for (int i = row; i < static_cast<int>(m.size()); ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[static_cast<size_t>(row)], m[static_cast<size_t>(pr)]);
        // 1 and 2 are their own inverses mod 3.
        const int inv = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (int j = 0; j < cols; ++j)
            m[static_cast<size_t>(row)][static_cast<size_t>(j)] =
                m[static_cast<size_t>(row)][static_cast<size_t>(j)] * inv % 3;
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == row) continue;
            const int c = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (c == 0) continue;
            for (int j = 0; j < cols; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    (m[static_cast<size_t>(i)][static_cast<size_t>(j)] + (3 - c) * m[static_cast<size_t>(row)][static_cast<size_t>(j)]) % 3;
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(static_cast<size_t>(row));
    return pivots;
}

}  // namespace

std::vector<std::vector<int>> all_colorings(const Diagram& d) {
    const int n = d.arc_count.at(static_cast<size_t>(d.knot));
    std::vector<std::vector<int>> rel;
    for (size_t ci = 0; ci < d.cross.size(); ++ci) {
        if (d.cross[ci].under_comp != d.knot) continue;
        const Role over = d.scene.components[static_cast<size_t>(d.cross[ci].over_comp)].role;
        if (over == Role::Trace) continue;
        const auto& cp = d.cross_pieces[ci];
        const int a_in = d.pieces[static_cast<size_t>(cp.under_in)].arc;
        const int a_out = d.pieces[static_cast<size_t>(cp.under_out)].arc;
        std::vector<int> row(static_cast<size_t>(n), 0);
        auto add = [&row](int arc, int v) {
            row[static_cast<size_t>(arc)] = (row[static_cast<size_t>(arc)] + v) % 3;
        };
        if (over == Role::Knot) {
            add(d.over_arc_at(static_cast<int>(ci)), 2);
            add(a_in, 2);
            add(a_out, 2);
        } else {
            add(a_in, 1);
            add(a_out, 2);
        }
        if (std::any_of(row.begin(), row.end(), [](int x) { return x != 0; })) rel.push_back(std::move(row));
    }

    auto m = rel;
    const std::vector<int> pivots = rref_mod3(m, n);
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free_cols.push_back(j);
    if (static_cast<int>(free_cols.size()) > kMaxFreeVars)
        throw std::runtime_error("coloring space too large to enumerate");

    std::vector<std::vector<int>> out;
    std::vector<int> x(static_cast<size_t>(n), 0);
    size_t total = 1;
    for (size_t i = 0; i < free_cols.size(); ++i) total *= 3;
    for (size_t code = 0; code < total; ++code) {
        size_t c = code;
        for (const int j : free_cols) {
            x[static_cast<size_t>(j)] = static_cast<int>(c % 3);
            c /= 3;
        }
        for (size_t i = 0; i < m.size(); ++i) {
            int s = 0;
            for (const int j : free_cols) s += m[i][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
            x[static_cast<size_t>(pivots[i])] = (3 - s % 3) % 3;
        }
        std::vector<int> colors(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) colors[static_cast<size_t>(j)] = to_color(x[static_cast<size_t>(j)]);
        out.push_back(std::move(colors));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> surjective_colorings(const Diagram& d) {
    std::vector<std::vector<int>> out;
    for (auto& c : all_colorings(d))
        if (std::set<int>(c.begin(), c.end()).size() >= 2) out.push_back(std::move(c));
    return out;
}

std::vector<int> relabel_coloring(const std::vector<int>& colors, int a, int b) {
    std::vector<int> out(colors.size());
    for (size_t i = 0; i < colors.size(); ++i)
        out[i] = to_color((a * to_residue(colors[i]) + b) % 3);
    return out;
}

std::vector<std::vector<int>> coloring_classes(const Diagram& d) {
    std::set<std::vector<int>> reps;
    for (const auto& c : surjective_colorings(d)) {
        std::vector<int> best = c;
        for (int a = 1; a <= 2; ++a)
            for (int b = 0; b < 3; ++b) best = std::min(best, relabel_coloring(c, a, b));
        reps.insert(best);
    }
    return {reps.begin(), reps.end()};
}

ColoringDiagnostics check_fox_coloring(const Scene& s) {
    ColoringDiagnostics out;
    Scene stripped = s;
    stripped.colors.clear();
    const Diagram d = build_diagram(stripped);
    const int n = d.arc_count.at(static_cast<size_t>(d.knot));
    if (static_cast<int>(s.colors.size()) != n) {
        out.error = "expected one color per knot arc (" + std::to_string(n) + "), got " +
                    std::to_string(s.colors.size());
        return out;
    }
    for (int col : s.colors)
        if (col < 1 || col > s.p) {
            out.error = "colors must lie in 1.." + std::to_string(s.p);
            return out;
        }
    auto color = [&](int arc) { return s.colors[static_cast<size_t>(arc)]; };
    const auto& route = s.components[static_cast<size_t>(d.knot)].route;
    for (const auto& pss : route) {
        if (pss.over) continue;
        const int x = d.cross_index.at(pss.crossing);
        const auto& cp = d.cross_pieces[static_cast<size_t>(x)];
        const Role over = d.scene.components[static_cast<size_t>(d.cross[static_cast<size_t>(x)].over_comp)].role;
        const int a_in = d.pieces[static_cast<size_t>(cp.under_in)].arc;
        const int a_out = d.pieces[static_cast<size_t>(cp.under_out)].arc;
        if (over == Role::Knot) {
            const int b = color(d.over_arc_at(x));
            if (((2 * b - color(a_in)) % 3 + 3) % 3 != color(a_out) % 3)
                out.bad_crossings.push_back(pss.crossing);
        } else if (over == Role::Basis) {
            if (color(a_in) != color(a_out)) out.bad_crossings.push_back(pss.crossing);
        }
    }
    std::set<int> used(s.colors.begin(), s.colors.end());
    out.surjective = used.size() >= 2;
    out.valid = out.surjective && out.bad_crossings.empty();
    return out;
}

Perm3 arc_walk_monodromy(const Diagram& d, const std::vector<int>& arcs) {
    if (!arcs.empty() && !d.has_colors())
        throw std::invalid_argument("anchor walk needs a colored scene");
    const int n = d.arc_count.at(static_cast<size_t>(d.knot));
    Perm3 mu;
    for (int arc : arcs) {
        if (arc < 0 || arc >= n) throw std::invalid_argument("anchor walk arc out of range");
        mu = Perm3::compose(Perm3::for_color(d.color_of_knot_arc(arc)), mu);
    }
    return mu;
}

std::vector<std::vector<int>> enumerate_colorings(const Scene& s, int p) {
    if (p != 3) throw std::invalid_argument("coloring enumeration supports p = 3 only");
    Scene stripped = s;
    stripped.colors.clear();
    return coloring_classes(build_diagram(stripped));
}

}  // namespace xiknot
