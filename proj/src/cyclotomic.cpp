#include "xiknot/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

namespace xiknot {

namespace {

void check_same_field(const Cyclo& a, const Cyclo& b) {
    if (a.p != b.p) throw std::invalid_argument("cyclotomic field mismatch");
}

// --- dense rational polynomials (ascending coefficients), just enough for
// --- the extended Euclid behind field inversion -------------------------

using Poly = std::vector<Rat>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (b.size() > a.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    poly_trim(a);
    return a;
}

// a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    poly_trim(a);
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    Poly q;
    while (a.size() >= b.size()) {
        Rat f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1, Rat(0));
        q[shift] += f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        poly_trim(a);
    }
    return {q, a};
}

}  // namespace

Cyclo Cyclo::zeta_pow(int p, long long e) {
    long long m = e % p;
    if (m < 0) m += p;
    Cyclo x(p);
    if (m <= p - 2) {
        x.c[static_cast<size_t>(m)] = 1;
    } else {  // m == p-1
        for (auto& v : x.c) v = -1;
    }
    return x;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    check_same_field(*this, o);
    Cyclo r(p);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
    check_same_field(*this, o);
    Cyclo r(p);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] - o.c[i];
    return r;
}

Cyclo Cyclo::operator-() const {
    Cyclo r(p);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = -c[i];
    return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    check_same_field(*this, o);
    const int n = p - 1;
    std::vector<Rat> w(static_cast<size_t>(2 * n - 1), Rat(0));
    for (int i = 0; i < n; ++i) {
        if (c[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (o.c[j] == 0) continue;
            w[static_cast<size_t>(i + j)] += c[i] * o.c[j];
        }
    }
    // Reduce z^e (e >= p-1) via z^{p-1} = -(1 + z + ... + z^{p-2}).
    for (int e = 2 * n - 2; e >= n; --e) {
        Rat t = w[static_cast<size_t>(e)];
        if (t == 0) continue;
        w[static_cast<size_t>(e)] = 0;
        for (int m = 0; m < n; ++m) w[static_cast<size_t>(e - n + m)] -= t;
    }
    Cyclo r(p);
    for (int i = 0; i < n; ++i) r.c[static_cast<size_t>(i)] = w[static_cast<size_t>(i)];
    return r;
}

Cyclo Cyclo::conj() const {
    Cyclo r(p);
    for (int k = 0; k <= p - 2; ++k) {
        if (c[static_cast<size_t>(k)] == 0) continue;
        Cyclo mono = zeta_pow(p, k == 0 ? 0 : p - k);
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += c[static_cast<size_t>(k)] * mono.c[i];
    }
    return r;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("cyclotomic inverse of zero");
    Poly phi(static_cast<size_t>(p), Rat(1));  // 1 + x + ... + x^{p-1}
    Poly a(c.begin(), c.end());
    poly_trim(a);
    // Extended Euclid: s*a + t*phi = gcd (a unit, since phi is irreducible).
    Poly r0 = phi, r1 = a;
    Poly s0 = {}, s1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, rem] = poly_divmod(r0, r1);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: gcd not a unit");
    Rat g = r0[0];
    auto [q, rem] = poly_divmod(s0, phi);
    (void)q;
    Cyclo inv(p);
    for (size_t i = 0; i < rem.size() && i < inv.c.size(); ++i) inv.c[i] = rem[i] / g;
    if (rem.size() > inv.c.size()) throw std::logic_error("cyclotomic inverse: degree overflow");
    return inv;
}

// ---- certified sign via rational interval arithmetic --------------------

namespace {

struct RInt {
    Rat lo, hi;
};

RInt ri_point(const Rat& v) { return {v, v}; }

RInt ri_add(const RInt& a, const RInt& b) { return {a.lo + b.lo, a.hi + b.hi}; }

RInt ri_scale(const Rat& s, const RInt& a) {
    if (s >= 0) return {s * a.lo, s * a.hi};
    return {s * a.hi, s * a.lo};
}

RInt ri_mul(const RInt& a, const RInt& b) {
    Rat v1 = a.lo * b.lo, v2 = a.lo * b.hi, v3 = a.hi * b.lo, v4 = a.hi * b.hi;
    return {std::min(std::min(v1, v2), std::min(v3, v4)),
            std::max(std::max(v1, v2), std::max(v3, v4))};
}

// arctan(x) for 0 < x < 1 by the alternating Taylor series, tail-bounded by
// the first omitted term.
RInt arctan_interval(const Rat& x, int terms) {
    Rat s(0), xp = x;
    Rat x2 = x * x;
    for (int m = 0; m < terms; ++m) {
        Rat term = xp / (2 * m + 1);
        s += (m % 2 == 0) ? term : -term;
        xp *= x2;
    }
    Rat tail = xp / (2 * terms + 1);
    return {s - tail, s + tail};
}

RInt pi_interval(int terms) {
    RInt a = arctan_interval(Rat(1, 5), terms);
    RInt b = arctan_interval(Rat(1, 239), terms);
    return ri_add(ri_scale(Rat(16), a), ri_scale(Rat(-4), b));
}

// cos at a rational point, Lagrange-bounded Taylor partial sum.
RInt cos_point_interval(const Rat& t, int terms) {
    Rat s(1), term(1);
    Rat t2 = t * t;
    for (int m = 1; m < terms; ++m) {
        term *= t2 / Rat(2 * m * (2 * m - 1));
        s += (m % 2 == 0) ? term : -term;
    }
    Rat rem = term * t2 / Rat(2 * terms * (2 * terms - 1));
    if (rem < 0) rem = -rem;
    return {s - rem, s + rem};
}

// cos over an interval: midpoint evaluation inflated by the radius
// (|cos'| <= 1).
RInt cos_interval(const RInt& t, int terms) {
    Rat mid = (t.lo + t.hi) / 2;
    Rat rad = (t.hi - t.lo) / 2;
    RInt c = cos_point_interval(mid, terms);
    return {c.lo - rad, c.hi + rad};
}

}  // namespace

int certified_sign_real(const Cyclo& x) {
    if (x.is_zero()) return 0;
    if (!x.is_real()) throw std::invalid_argument("certified_sign_real: element is not real");

    for (int n = 16; n <= 1024; n *= 2) {
        RInt pi = pi_interval(n);
        RInt v = ri_point(x.c[0]);
        for (int k = 1; k <= x.p - 2; ++k) {
            if (x.c[static_cast<size_t>(k)] == 0) continue;
            RInt theta = ri_scale(Rat(2 * k, x.p), pi);
            v = ri_add(v, ri_scale(x.c[static_cast<size_t>(k)], cos_interval(theta, n)));
        }
        if (v.lo > 0) return 1;
        if (v.hi < 0) return -1;
    }
    throw std::runtime_error("certified_sign_real: interval refinement did not converge");
}

}  // namespace xiknot
