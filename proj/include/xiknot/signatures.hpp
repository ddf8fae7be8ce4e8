#pragma once

#include "xiknot/cyclotomic.hpp"
#include "xiknot/matrix.hpp"

#include <vector>

namespace xiknot {

// Signature of a symmetric rational matrix (congruence diagonalization).
int signature_sym(RatMat s);
inline int signature_sym(const IntMat& s) { return signature_sym(to_rat(s)); }

// Signature of a Hermitian matrix over Q(zeta_p), entries h[i][j] with
// h[j][i] = conj(h[i][j]).  Diagonal signs certified exactly.
int signature_hermitian(std::vector<std::vector<Cyclo>> h);

// Twisted pairing at omega = zeta_p^i built from a Seifert matrix A:
//   H = (1 - omega) A + (1 - conj(omega)) A^T.
std::vector<std::vector<Cyclo>> twisted_pairing(const IntMat& a, int p, int i);

// sigma at zeta_p^i of the twisted pairing, via the cyclotomic path.
int twisted_signature(const IntMat& a, int p, int i);

// p = 3 shortcut: the Hermitian form realifies to the rational symmetric
// block matrix [[S, D], [-D, 3S]] with S = A + A^T, D = A - A^T, and the
// signature halves.  Valid for i = 1 and 2 (conjugate forms agree).
int twisted_signature_p3(const IntMat& a);

// All p-1 twisted signatures, i = 1..p-1.
std::vector<int> twisted_signatures(const IntMat& a, int p);

}  // namespace xiknot
