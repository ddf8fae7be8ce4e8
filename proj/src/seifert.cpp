#include "xiknot/seifert.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace xiknot {

namespace {

int norm_mod(Int x, int p) {
    Int r = x % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

int inv_mod(int a, int p) {
    // Extended Euclid; p is odd and small.
    int t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        const int q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (r != 1) throw std::invalid_argument("pivot not invertible mod p (p must be prime)");
    return (t % p + p) % p;
}

}  // namespace

Int det_int(const Mat<Int>& m) {
    if (m.r != m.c) throw std::invalid_argument("determinant of a non-square matrix");
    const int n = m.r;
    if (n == 0) return Int(1);
    // Bareiss fraction-free elimination.
    Mat<Int> w = m;
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (w(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Int(0);
            for (int j = 0; j < n; ++j) std::swap(w(k, j), w(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

void validate_seifert(const SeifertData& s) {
    if (s.a.r != s.a.c) throw std::invalid_argument("pairing matrix must be square");
    if (s.a.r % 2 != 0) throw std::invalid_argument("pairing matrix must have even rank");
    if (!s.basis.empty() && static_cast<int>(s.basis.size()) != s.a.r)
        throw std::invalid_argument("basis names must match the matrix rank");
    if (det_int(s.a - s.a.transpose()) != 1)
        throw std::invalid_argument("A - A^T must be unimodular (surface intersection form)");
}

Mat<Int> symmetrize(const SeifertData& s) {
    if (s.a.r != s.a.c) throw std::invalid_argument("pairing matrix must be square");
    return s.a + s.a.transpose();
}

bool verify_characteristic(const Mat<Int>& l, const std::vector<Int>& v, int p) {
    if (l.r != l.c || static_cast<int>(v.size()) != l.r)
        throw std::invalid_argument("vector length must match the pairing rank");
    Int content(0);
    for (const Int& x : v) content = boost::multiprecision::gcd(content, x);
    if (content != 1) return false;
    for (int i = 0; i < l.r; ++i) {
        Int acc(0);
        for (int j = 0; j < l.c; ++j) acc += l(i, j) * v[static_cast<size_t>(j)];
        if (acc % p != 0) return false;
    }
    return true;
}

CharacteristicClasses characteristic_classes_mod_p(const Mat<Int>& l, int p) {
    if (l.r != l.c) throw std::invalid_argument("pairing matrix must be square");
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be odd and at least 3");
    const int n = l.r;

    // Reduced row echelon form of l mod p.
    std::vector<std::vector<int>> m(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = norm_mod(l(i, j), p);
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int i = row; i < n; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[static_cast<size_t>(row)], m[static_cast<size_t>(pr)]);
        const int inv = inv_mod(m[static_cast<size_t>(row)][static_cast<size_t>(col)], p);
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(row)][static_cast<size_t>(j)] = m[static_cast<size_t>(row)][static_cast<size_t>(j)] * inv % p;
        for (int i = 0; i < n; ++i) {
            if (i == row) continue;
            const int c = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (c == 0) continue;
            for (int j = 0; j < n; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    (m[static_cast<size_t>(i)][static_cast<size_t>(j)] + (p - c) * m[static_cast<size_t>(row)][static_cast<size_t>(j)]) % p;
        }
        pivots.push_back(col);
        ++row;
    }

    CharacteristicClasses out;
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free_cols.push_back(j);
    for (const int f : free_cols) {
        std::vector<int> b(static_cast<size_t>(n), 0);
        b[static_cast<size_t>(f)] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            b[static_cast<size_t>(pivots[i])] = (p - m[i][static_cast<size_t>(f)]) % p;
        out.kernel_basis.push_back(std::move(b));
    }

    const int k = static_cast<int>(free_cols.size());
    if (k > 8) throw std::runtime_error("kernel too large to enumerate projective classes");
    std::set<std::vector<int>> seen;
    long total = 1;
    for (int i = 0; i < k; ++i) total *= p;
    for (long code = 1; code < total; ++code) {
        long c = code;
        std::vector<int> w(static_cast<size_t>(n), 0);
        for (const auto& b : out.kernel_basis) {
            const int coef = static_cast<int>(c % p);
            c /= p;
            for (int j = 0; j < n; ++j) w[static_cast<size_t>(j)] = (w[static_cast<size_t>(j)] + coef * b[static_cast<size_t>(j)]) % p;
        }
        int lead = -1;
        for (int j = 0; j < n; ++j)
            if (w[static_cast<size_t>(j)] != 0) {
                lead = j;
                break;
            }
        if (lead < 0) continue;
        const int inv = inv_mod(w[static_cast<size_t>(lead)], p);
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(j)] = w[static_cast<size_t>(j)] * inv % p;
        seen.insert(std::move(w));
    }
    for (const auto& w : seen) {
        std::vector<Int> lift(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            const int r = w[static_cast<size_t>(j)];
            lift[static_cast<size_t>(j)] = Int(2 * r > p ? r - p : r);
        }
        out.representatives.push_back(std::move(lift));
    }
    std::sort(out.representatives.begin(), out.representatives.end());
    return out;
}

Int self_pairing(const Mat<Int>& l, const std::vector<Int>& v) {
    if (l.r != l.c || static_cast<int>(v.size()) != l.r)
        throw std::invalid_argument("vector length must match the pairing rank");
    Int acc(0);
    for (int i = 0; i < l.r; ++i)
        for (int j = 0; j < l.c; ++j) acc += v[static_cast<size_t>(i)] * l(i, j) * v[static_cast<size_t>(j)];
    return acc;
}

}  // namespace xiknot
