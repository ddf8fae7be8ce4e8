#pragma once

#include "xiknot/matrix.hpp"
#include "xiknot/rational.hpp"

#include <string>
#include <vector>

namespace xiknot {

// Linking pairing of a spanning surface's basis curves with push-offs of
// each other: entry (i,j) = lk(b_i, b_j^+).  The antisymmetrization
// A - A^T is the surface's intersection form and must be unimodular; the
// basis therefore has even rank 2g.
struct SeifertData {
    Mat<Int> a;
    std::vector<std::string> basis;  // one name per basis class (optional)
    int genus() const { return a.r / 2; }
};

// Throws std::invalid_argument unless a is square of even rank,
// det(A - A^T) = 1, and basis (when present) names every class.
void validate_seifert(const SeifertData& s);

// The symmetrized pairing A + A^T.
Mat<Int> symmetrize(const SeifertData& s);

// True iff v is primitive (content 1) and L * v vanishes mod p.
bool verify_characteristic(const Mat<Int>& l, const std::vector<Int>& v, int p);

// Mod-p kernel of a symmetric pairing: a basis of the nullspace over the
// field of p elements (entries 0..p-1), and one primitive integer lift per
// projective class, entries centered in (-p/2, p/2), sorted
// lexicographically.
struct CharacteristicClasses {
    std::vector<std::vector<int>> kernel_basis;
    std::vector<std::vector<Int>> representatives;
};
CharacteristicClasses characteristic_classes_mod_p(const Mat<Int>& l, int p);

// v^T L v.
Int self_pairing(const Mat<Int>& l, const std::vector<Int>& v);

Int det_int(const Mat<Int>& m);

}  // namespace xiknot
