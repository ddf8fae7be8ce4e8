#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xiknot/seifert.hpp"

#include <vector>

using namespace xiknot;

namespace {

SeifertData six_one_seifert() {
    return {Mat<Int>{{Int(-1), Int(1)}, {Int(0), Int(2)}}, {"a", "b"}};
}

SeifertData trefoil_seifert() {
    return {Mat<Int>{{Int(-1), Int(1)}, {Int(0), Int(-1)}}, {}};
}

// A genus-2 pairing whose symmetrization is the published eight-eleven
// matrix; only the symmetrization enters any computation.
SeifertData eight_eleven_seifert() {
    return {Mat<Int>{{Int(1), Int(0), Int(0), Int(0)},
                     {Int(-1), Int(1), Int(0), Int(0)},
                     {Int(0), Int(-1), Int(-1), Int(-1)},
                     {Int(0), Int(0), Int(-2), Int(0)}},
            {"A", "B", "C", "D"}};
}

const Mat<Int> kEightElevenL{{Int(2), Int(-1), Int(0), Int(0)},
                             {Int(-1), Int(2), Int(-1), Int(0)},
                             {Int(0), Int(-1), Int(-2), Int(-3)},
                             {Int(0), Int(0), Int(-3), Int(0)}};

std::vector<Int> iv(std::initializer_list<int> xs) {
    std::vector<Int> v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("symmetrization of the stored pairings") {
    CHECK(symmetrize(six_one_seifert()) == Mat<Int>{{Int(-2), Int(1)}, {Int(1), Int(4)}});
    CHECK(symmetrize(trefoil_seifert()) == Mat<Int>{{Int(-2), Int(1)}, {Int(1), Int(-2)}});
    CHECK(symmetrize(eight_eleven_seifert()) == kEightElevenL);
}

TEST_CASE("stored pairings have unimodular antisymmetrizations") {
    validate_seifert(six_one_seifert());
    validate_seifert(trefoil_seifert());
    validate_seifert(eight_eleven_seifert());
    CHECK(six_one_seifert().genus() == 1);
    CHECK(eight_eleven_seifert().genus() == 2);

    CHECK_THROWS_AS(validate_seifert({Mat<Int>(2, 3), {}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_seifert({Mat<Int>(3, 3), {}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_seifert({Mat<Int>(2, 2), {}}), std::invalid_argument);  // zero form
    CHECK_THROWS_AS(validate_seifert({six_one_seifert().a, {"only-one"}}), std::invalid_argument);
}

TEST_CASE("characteristic vectors verify against the symmetrized pairing") {
    const Mat<Int> l6 = symmetrize(six_one_seifert());
    CHECK(verify_characteristic(l6, iv({1, -1}), 3));
    CHECK_FALSE(verify_characteristic(l6, iv({1, 0}), 3));
    CHECK_FALSE(verify_characteristic(l6, iv({3, -3}), 3));  // imprimitive
    CHECK(verify_characteristic(kEightElevenL, iv({0, 0, 0, 1}), 3));
    CHECK_THROWS_AS(verify_characteristic(l6, iv({1, 0, 0}), 3), std::invalid_argument);
}

TEST_CASE("mod-3 kernel classes of the stored pairings") {
    const auto c6 = characteristic_classes_mod_p(symmetrize(six_one_seifert()), 3);
    CHECK(c6.kernel_basis.size() == 1);
    CHECK(c6.representatives == std::vector<std::vector<Int>>{iv({1, -1})});

    const auto c8 = characteristic_classes_mod_p(kEightElevenL, 3);
    CHECK(c8.kernel_basis.size() == 1);
    CHECK(c8.representatives == std::vector<std::vector<Int>>{iv({0, 0, 0, 1})});

    Mat<Int> three_i{{Int(3), Int(0)}, {Int(0), Int(3)}};
    const auto ci = characteristic_classes_mod_p(three_i, 3);
    CHECK(ci.kernel_basis.size() == 2);
    CHECK(ci.representatives ==
          std::vector<std::vector<Int>>{iv({0, 1}), iv({1, -1}), iv({1, 0}), iv({1, 1})});
}

TEST_CASE("every representative verifies and has zero pairing mod p") {
    for (const Mat<Int>& l : {symmetrize(six_one_seifert()), kEightElevenL,
                              Mat<Int>{{Int(3), Int(0)}, {Int(0), Int(3)}}}) {
        for (const auto& v : characteristic_classes_mod_p(l, 3).representatives) {
            CHECK(verify_characteristic(l, v, 3));
            CHECK(self_pairing(l, v) % 3 == 0);
        }
    }
}

TEST_CASE("self pairings of the paper vectors vanish") {
    CHECK(self_pairing(symmetrize(six_one_seifert()), iv({1, -1})) == Int(0));
    CHECK(self_pairing(kEightElevenL, iv({0, 0, 0, 1})) == Int(0));
    CHECK(self_pairing(symmetrize(six_one_seifert()), iv({1, 0})) == Int(-2));
}

TEST_CASE("trefoil kernel mod 3 is the antidiagonal class") {
    const auto ct = characteristic_classes_mod_p(symmetrize(trefoil_seifert()), 3);
    CHECK(ct.representatives == std::vector<std::vector<Int>>{iv({1, -1})});
}
