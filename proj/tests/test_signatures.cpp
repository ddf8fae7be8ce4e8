#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xiknot/signatures.hpp"

#include <random>

using namespace xiknot;

TEST_CASE("signatures of pinned symmetric matrices") {
    CHECK(signature_sym(IntMat{{Int(-1)}}) == -1);
    CHECK(signature_sym(IntMat{{Int(-2), Int(-1), Int(-2)},
                               {Int(-1), Int(-2), Int(-2)},
                               {Int(-2), Int(-2), Int(-3)}}) == -3);
    CHECK(signature_sym(IntMat{{Int(0), Int(1)}, {Int(1), Int(0)}}) == 0);
    CHECK(signature_sym(to_rat(IntMat::identity(5))) == 5);
    CHECK(signature_sym(IntMat{{Int(1), Int(0)}, {Int(0), Int(-1)}}) == 0);
    CHECK(signature_sym(IntMat{{Int(0), Int(0)}, {Int(0), Int(0)}}) == 0);
}

TEST_CASE("signature is a congruence invariant") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> dim(1, 6), val(-4, 4), pick(0, 5);
    for (int iter = 0; iter < 120; ++iter) {
        int n = dim(rng);
        IntMat a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = val(rng);
        IntMat s = a + a.transpose();

        // Random unimodular P as a product of elementary operations.
        IntMat p = IntMat::identity(n);
        for (int t = 0; t < 12; ++t) {
            int i = pick(rng) % n, j = pick(rng) % n;
            if (i == j) continue;
            Int k(val(rng));
            for (int cc = 0; cc < n; ++cc) p(i, cc) += k * p(j, cc);
        }
        IntMat conj = p.transpose() * s * p;
        CHECK(signature_sym(conj) == signature_sym(s));
    }
}

TEST_CASE("cyclotomic arithmetic basics") {
    Cyclo one = Cyclo::from_rat(3, Rat(1));
    CHECK(Cyclo::zeta_pow(3, 3) == one);
    CHECK((Cyclo::zeta_pow(3, 0) + Cyclo::zeta_pow(3, 1) + Cyclo::zeta_pow(3, 2)).is_zero());
    CHECK(Cyclo::zeta_pow(3, 1).conj() == Cyclo::zeta_pow(3, 2));
    CHECK(Cyclo::zeta_pow(5, 2).conj() == Cyclo::zeta_pow(5, 3));
    CHECK((Cyclo::zeta_pow(5, 1) * Cyclo::zeta_pow(5, 4)) == Cyclo::from_rat(5, Rat(1)));

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int p : {3, 5, 7}) {
        for (int iter = 0; iter < 20; ++iter) {
            Cyclo x(p);
            bool nz = false;
            for (auto& cc : x.c) {
                cc = val(rng);
                nz = nz || cc != 0;
            }
            if (!nz) continue;
            CHECK((x * x.inverse()) == Cyclo::from_rat(p, Rat(1)));
            CHECK((x + x.conj()).is_real());
            CHECK((x * x.conj()).is_real());
            if (!(x * x.conj()).is_zero()) CHECK(certified_sign_real(x * x.conj()) == 1);
        }
    }
}

TEST_CASE("certified signs of real cyclotomic numbers") {
    CHECK(certified_sign_real(Cyclo(3)) == 0);
    // 2 cos(2 pi / 3) = -1
    CHECK(certified_sign_real(Cyclo::zeta_pow(3, 1) + Cyclo::zeta_pow(3, 2)) == -1);
    CHECK(certified_sign_real(-(Cyclo::zeta_pow(3, 1) + Cyclo::zeta_pow(3, 2))) == 1);
    // 2 cos(2 pi / 5) > 0, 2 cos(4 pi / 5) < 0
    CHECK(certified_sign_real(Cyclo::zeta_pow(5, 1) + Cyclo::zeta_pow(5, 4)) == 1);
    CHECK(certified_sign_real(Cyclo::zeta_pow(5, 2) + Cyclo::zeta_pow(5, 3)) == -1);
    // golden-ratio identity: z + z^4 - (z^2 + z^3) = sqrt(5) > 0 at p = 5
    Cyclo g = Cyclo::zeta_pow(5, 1) + Cyclo::zeta_pow(5, 4) - Cyclo::zeta_pow(5, 2) - Cyclo::zeta_pow(5, 3);
    CHECK(certified_sign_real(g) == 1);
}

TEST_CASE("twisted pairing signatures of the trefoil Seifert matrix") {
    IntMat a{{Int(-1), Int(1)}, {Int(0), Int(-1)}};
    CHECK(twisted_signature_p3(a) == -2);
    auto s3 = twisted_signatures(a, 3);
    REQUIRE(s3.size() == 2);
    CHECK(s3[0] == -2);
    CHECK(s3[1] == -2);
    CHECK(s3[0] + s3[1] == -4);

    // Classical Tristram-Levine profile of the trefoil: constant -2 strictly
    // between the Alexander roots at angles 1/6 and 5/6.
    auto s5 = twisted_signatures(a, 5);
    REQUIRE(s5.size() == 4);
    for (int v : s5) CHECK(v == -2);
}

TEST_CASE("p = 3 rational shortcut agrees with the cyclotomic path") {
    std::mt19937 rng(2025);
    std::uniform_int_distribution<int> dim(1, 4), val(-3, 3);
    for (int iter = 0; iter < 60; ++iter) {
        int n = dim(rng);
        IntMat a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = val(rng);
        int shortcut = twisted_signature_p3(a);
        CHECK(twisted_signature(a, 3, 1) == shortcut);
        CHECK(twisted_signature(a, 3, 2) == shortcut);
    }
}
