#include "xiknot/signatures.hpp"

#include <stdexcept>

namespace xiknot {

int signature_sym(RatMat s) {
    if (s.r != s.c) throw std::invalid_argument("signature_sym: square matrix required");
    if (s != s.transpose()) throw std::invalid_argument("signature_sym: matrix not symmetric");
    const int n = s.r;
    int sig = 0;
    for (int k = 0; k < n; ++k) {
        if (s(k, k) == 0) {
            // Bring a nonzero diagonal entry to position k, manufacturing one
            // from an off-diagonal entry if the whole diagonal vanishes.
            int dpos = -1;
            for (int i = k + 1; i < n; ++i)
                if (s(i, i) != 0) { dpos = i; break; }
            if (dpos < 0) {
                int oi = -1, oj = -1;
                for (int i = k; i < n && oi < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (s(i, j) != 0) { oi = i; oj = j; break; }
                if (oi < 0) break;  // all zero from here on
                for (int t = 0; t < n; ++t) s(oi, t) += s(oj, t);
                for (int t = 0; t < n; ++t) s(t, oi) += s(t, oj);
                dpos = oi;  // s(oi,oi) = 2*s_old(oi,oj) != 0
            }
            if (dpos != k) {
                for (int t = 0; t < n; ++t) std::swap(s(dpos, t), s(k, t));
                for (int t = 0; t < n; ++t) std::swap(s(t, dpos), s(t, k));
            }
        }
        const Rat d = s(k, k);
        sig += sgn(d);
        for (int i = k + 1; i < n; ++i) {
            if (s(i, k) == 0) continue;
            Rat f = s(i, k) / d;
            for (int t = 0; t < n; ++t) s(i, t) -= f * s(k, t);
            for (int t = 0; t < n; ++t) s(t, i) -= f * s(t, k);
        }
    }
    return sig;
}

int signature_hermitian(std::vector<std::vector<Cyclo>> h) {
    const int n = static_cast<int>(h.size());
    for (const auto& row : h)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("signature_hermitian: square matrix required");
    if (n == 0) return 0;
    const int p = h[0][0].p;

    auto add_row_col = [&](int i, int j, const Cyclo& lam) {
        // H <- E H E* with E = I + lam * e_{ij}.
        for (int t = 0; t < n; ++t) h[i][t] = h[i][t] + lam * h[j][t];
        Cyclo lc = lam.conj();
        for (int t = 0; t < n; ++t) h[t][i] = h[t][i] + lc * h[t][j];
    };
    auto swap_row_col = [&](int i, int j) {
        std::swap(h[i], h[j]);
        for (int t = 0; t < n; ++t) std::swap(h[t][i], h[t][j]);
    };

    int sig = 0;
    for (int k = 0; k < n; ++k) {
        if (h[k][k].is_zero()) {
            int dpos = -1;
            for (int i = k + 1; i < n; ++i)
                if (!h[i][i].is_zero()) { dpos = i; break; }
            if (dpos < 0) {
                int oi = -1, oj = -1;
                for (int i = k; i < n && oi < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (!h[i][j].is_zero()) { oi = i; oj = j; break; }
                if (oi < 0) break;
                // lam = 1 gives 2*Re(x); if x is purely imaginary use lam =
                // zeta, which cannot also vanish for a primitive root.
                add_row_col(oi, oj, Cyclo::from_rat(p, Rat(1)));
                if (h[oi][oi].is_zero()) {
                    add_row_col(oi, oj, Cyclo::zeta_pow(p, 1) - Cyclo::from_rat(p, Rat(1)));
                }
                if (h[oi][oi].is_zero()) throw std::logic_error("signature_hermitian: pivot creation failed");
                dpos = oi;
            }
            if (dpos != k) swap_row_col(dpos, k);
        }
        Cyclo d = h[k][k];
        sig += certified_sign_real(d);
        Cyclo dinv = d.inverse();
        for (int i = k + 1; i < n; ++i) {
            if (h[i][k].is_zero()) continue;
            Cyclo mu = -(h[i][k] * dinv);
            add_row_col(i, k, mu);
        }
    }
    return sig;
}

std::vector<std::vector<Cyclo>> twisted_pairing(const IntMat& a, int p, int i) {
    if (a.r != a.c) throw std::invalid_argument("twisted_pairing: square Seifert matrix required");
    Cyclo omega = Cyclo::zeta_pow(p, i);
    Cyclo one = Cyclo::from_rat(p, Rat(1));
    Cyclo u = one - omega;         // 1 - w
    Cyclo v = one - omega.conj();  // 1 - conj(w)
    const int n = a.r;
    std::vector<std::vector<Cyclo>> h(static_cast<size_t>(n), std::vector<Cyclo>(static_cast<size_t>(n), Cyclo(p)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Cyclo term = u * Cyclo::from_rat(p, Rat(a(r, c))) + v * Cyclo::from_rat(p, Rat(a(c, r)));
            h[static_cast<size_t>(r)][static_cast<size_t>(c)] = term;
        }
    return h;
}

int twisted_signature(const IntMat& a, int p, int i) {
    return signature_hermitian(twisted_pairing(a, p, i));
}

int twisted_signature_p3(const IntMat& a) {
    const int n = a.r;
    IntMat s = a + a.transpose();
    IntMat d = a - a.transpose();
    RatMat r(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            r(i, j) = Rat(s(i, j));
            r(i, n + j) = Rat(d(i, j));
            r(n + i, j) = Rat(-d(i, j));
            r(n + i, n + j) = Rat(3) * Rat(s(i, j));
        }
    int sig = signature_sym(std::move(r));
    if (sig % 2 != 0) throw std::logic_error("twisted_signature_p3: realified signature must be even");
    return sig / 2;
}

std::vector<int> twisted_signatures(const IntMat& a, int p) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(p - 1));
    for (int i = 1; i <= p - 1; ++i) {
        if (p == 3)
            out.push_back(twisted_signature_p3(a));
        else
            out.push_back(twisted_signature(a, p, i));
    }
    return out;
}

}  // namespace xiknot
