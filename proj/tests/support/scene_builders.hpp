#pragma once

#include "xiknot/scene.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace xiknot::testsupport {

// Closure of a 3-strand braid word.  Letters +1/+2 are the positive
// generators at positions (1,2)/(2,3), with the strand entering at the
// lower position crossing over; -1/-2 are their inverses.  Crossing ids
// follow word order; one component per closure cycle, named "c0", "c1",
// ..., all with role Trace (callers pick the knot).  Words must use both
// generators so the projection is connected.
inline Scene braid_closure_scene(const std::vector<int>& word, const std::string& name) {
    Scene s;
    s.name = name;
    s.p = 3;
    std::array<int, 3> pos{0, 1, 2};  // strand at each position, bottom to top
    std::array<std::vector<Passage>, 3> routes;
    for (size_t t = 0; t < word.size(); ++t) {
        const int letter = word[t];
        const int i = std::abs(letter) - 1;
        if (i < 0 || i > 1) throw std::invalid_argument("bad braid letter");
        const int lower = pos[static_cast<size_t>(i)];
        const int upper = pos[static_cast<size_t>(i + 1)];
        const int over = letter > 0 ? lower : upper;
        const int under = letter > 0 ? upper : lower;
        s.crossings.push_back({static_cast<int>(t), letter > 0 ? 1 : -1});
        routes[static_cast<size_t>(over)].push_back({static_cast<int>(t), true});
        routes[static_cast<size_t>(under)].push_back({static_cast<int>(t), false});
        std::swap(pos[static_cast<size_t>(i)], pos[static_cast<size_t>(i + 1)]);
    }
    std::array<int, 3> next{};
    for (int q = 0; q < 3; ++q) next[static_cast<size_t>(pos[static_cast<size_t>(q)])] = q;
    std::array<bool, 3> used{};
    for (int k = 0; k < 3; ++k) {
        if (used[static_cast<size_t>(k)]) continue;
        Component comp;
        comp.name = "c" + std::to_string(s.components.size());
        comp.role = Role::Trace;
        for (int cur = k; !used[static_cast<size_t>(cur)]; cur = next[static_cast<size_t>(cur)]) {
            used[static_cast<size_t>(cur)] = true;
            comp.route.insert(comp.route.end(), routes[static_cast<size_t>(cur)].begin(),
                              routes[static_cast<size_t>(cur)].end());
        }
        if (comp.route.empty()) throw std::invalid_argument("braid strand crosses nothing");
        s.components.push_back(std::move(comp));
    }
    return s;
}

}  // namespace xiknot::testsupport
