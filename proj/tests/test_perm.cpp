#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xiknot/perm.hpp"

#include <set>
#include <string>

using xiknot::Perm3;

TEST_CASE("color transpositions fix their own color") {
    for (int c = 1; c <= 3; ++c) {
        Perm3 t = Perm3::for_color(c);
        CHECK(t.is_transposition());
        CHECK(t.apply(c) == c);
        CHECK(t.fixed_label() == c);
        CHECK(Perm3::compose(t, t).is_identity());
    }
}

TEST_CASE("crossing relation: conjugating by the over-color transposition") {
    // t_b t_a t_b = t_c with c = 2b - a (mod 3) on colors {1,2,3}.
    auto norm = [](int x) { return (x % 3 + 3) % 3 == 0 ? 3 : (x % 3 + 3) % 3; };
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            Perm3 lhs = Perm3::compose(Perm3::for_color(b),
                                       Perm3::compose(Perm3::for_color(a), Perm3::for_color(b)));
            CHECK(lhs == Perm3::for_color(norm(2 * b - a)));
        }
}

TEST_CASE("walk monodromy composes first-crossed-first") {
    Perm3 m = Perm3::path_monodromy({1, 2, 3, 1, 3, 2});
    CHECK(m.apply(1) == 3);
    CHECK(m.apply(2) == 1);
    CHECK(m.apply(3) == 2);
    CHECK(m.cycle_string() == "(123)");

    CHECK(Perm3::path_monodromy({}).is_identity());
    CHECK(Perm3::path_monodromy({}).cycle_string() == "Id");
    CHECK(Perm3::path_monodromy({2, 2}).is_identity());
}

TEST_CASE("cycle strings of all six permutations are distinct") {
    std::set<std::string> names;
    for (int c = 1; c <= 3; ++c) names.insert(Perm3::for_color(c).cycle_string());
    names.insert(Perm3::identity().cycle_string());
    names.insert(Perm3::path_monodromy({1, 2}).cycle_string());
    names.insert(Perm3::path_monodromy({2, 1}).cycle_string());
    CHECK(names.size() == 6);
    CHECK(names.count("Id") == 1);
    CHECK(names.count("(12)") == 1);
    CHECK(names.count("(13)") == 1);
    CHECK(names.count("(23)") == 1);
    CHECK(names.count("(123)") == 1);
    CHECK(names.count("(132)") == 1);
}

TEST_CASE("inverse and composition identities") {
    std::vector<Perm3> all;
    for (std::vector<int> w : {std::vector<int>{}, {1}, {2}, {3}, {1, 2}, {2, 1}})
        all.push_back(Perm3::path_monodromy(w));
    for (const Perm3& a : all) {
        CHECK(Perm3::compose(a, a.inverse()).is_identity());
        CHECK(Perm3::compose(a.inverse(), a).is_identity());
        for (const Perm3& b : all)
            for (int i = 1; i <= 3; ++i)
                CHECK(Perm3::compose(a, b).apply(i) == a.apply(b.apply(i)));
    }
}
