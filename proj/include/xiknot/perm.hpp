#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace xiknot {

// Permutation of the sheet labels {1,2,3}.
//
// Conventions (fixed once, relied on everywhere):
//  * apply(i) is the image of label i.
//  * compose(f,g) = f after g   (g acts first).
//  * A walk that crosses group elements g1, g2, ... (in walk order, first
//    crossed acting first) accumulates compose(gk, ... compose(g2, g1)).
//  * cycle_string() renders the cycles of the *inverse* map, so the cycle
//    word lists each label followed by the label that maps TO it.  With this
//    convention the 3-cycle {1->3, 3->2, 2->1} renders as "(123)".
struct Perm3 {
    std::array<int, 3> img{1, 2, 3};  // img[i-1] = image of i

    static Perm3 identity() { return Perm3{}; }

    static Perm3 transposition(int a, int b) {
        if (a < 1 || a > 3 || b < 1 || b > 3 || a == b) throw std::invalid_argument("bad transposition");
        Perm3 p;
        p.img[a - 1] = b;
        p.img[b - 1] = a;
        return p;
    }

    // The involution associated with a color: it fixes the color itself and
    // swaps the other two labels.
    static Perm3 for_color(int c) {
        switch (c) {
            case 1: return transposition(2, 3);
            case 2: return transposition(1, 3);
            case 3: return transposition(1, 2);
        }
        throw std::invalid_argument("color must be 1, 2, or 3");
    }

    int apply(int i) const {
        if (i < 1 || i > 3) throw std::invalid_argument("label out of range");
        return img[i - 1];
    }

    static Perm3 compose(const Perm3& f, const Perm3& g) {  // f after g
        Perm3 r;
        for (int i = 1; i <= 3; ++i) r.img[i - 1] = f.apply(g.apply(i));
        return r;
    }

    Perm3 inverse() const {
        Perm3 r;
        for (int i = 1; i <= 3; ++i) r.img[img[i - 1] - 1] = i;
        return r;
    }

    bool is_identity() const { return img[0] == 1 && img[1] == 2 && img[2] == 3; }

    bool is_transposition() const {
        int moved = 0;
        for (int i = 1; i <= 3; ++i)
            if (img[i - 1] != i) ++moved;
        return moved == 2;
    }

    // For a transposition, the unique fixed label (= the color it encodes).
    int fixed_label() const {
        if (!is_transposition()) throw std::logic_error("fixed_label: not a transposition");
        for (int i = 1; i <= 3; ++i)
            if (img[i - 1] == i) return i;
        throw std::logic_error("unreachable");
    }

    bool operator==(const Perm3& o) const { return img == o.img; }
    bool operator!=(const Perm3& o) const { return !(*this == o); }
    bool operator<(const Perm3& o) const { return img < o.img; }

    // Monodromy of a walk that crosses the given colors in walk order.
    static Perm3 path_monodromy(const std::vector<int>& colors) {
        Perm3 m = identity();
        for (int c : colors) m = compose(for_color(c), m);
        return m;
    }

    std::string cycle_string() const {
        if (is_identity()) return "Id";
        const Perm3 inv = inverse();
        std::array<bool, 3> seen{false, false, false};
        std::string out;
        for (int start = 1; start <= 3; ++start) {
            if (seen[start - 1] || inv.apply(start) == start) continue;
            out += '(';
            int x = start;
            do {
                seen[x - 1] = true;
                out += static_cast<char>('0' + x);
                x = inv.apply(x);
            } while (x != start);
            out += ')';
        }
        return out;
    }
};

}  // namespace xiknot
