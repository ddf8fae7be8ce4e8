#pragma once

#include "xiknot/rational.hpp"

#include <vector>

namespace xiknot {

// Element of Q(zeta_p), p an odd prime, in the power basis 1, z, ..., z^{p-2}
// with z^{p-1} = -(1 + z + ... + z^{p-2}).
struct Cyclo {
    int p = 3;
    std::vector<Rat> c;  // size p-1

    Cyclo() : c(2, Rat(0)) {}
    explicit Cyclo(int p_) : p(p_), c(static_cast<size_t>(p_ - 1), Rat(0)) {}

    static Cyclo from_rat(int p, const Rat& v) {
        Cyclo x(p);
        x.c[0] = v;
        return x;
    }

    // z^e for any integer exponent e.
    static Cyclo zeta_pow(int p, long long e);

    bool is_zero() const {
        for (const auto& v : c)
            if (v != 0) return false;
        return true;
    }

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo conj() const;            // z -> z^{-1}
    Cyclo inverse() const;         // field inverse (throws on zero)
    bool operator==(const Cyclo& o) const { return p == o.p && c == o.c; }
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    bool is_real() const { return *this == conj(); }
};

// Sign (-1, 0, +1) of a real element of Q(zeta_p) under the embedding
// z -> exp(2*pi*i/p).  Exact zero test first; otherwise provably correct
// rational interval refinement (terminates because nonzero field elements
// embed to nonzero reals).
int certified_sign_real(const Cyclo& x);

}  // namespace xiknot
