#include "xiknot/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace xiknot {

namespace {

// Quotient with balanced remainder: |a - q*b| <= |b|/2.
Int balanced_quot(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (2 * abs(r) > abs(b)) q += (sgn(r) == sgn(b)) ? 1 : -1;
    return q;
}

struct Worker {
    SparseIntMat a;
    std::vector<ElemOp> row_ops, col_ops;

    void row_swap(int i, int j) {
        if (i == j) return;
        row_ops.push_back({ElemOp::Swap, i, j, Int(0)});
        for (const auto& [c, v] : a.row[i]) a.col_rows[c].erase(i);
        for (const auto& [c, v] : a.row[j]) a.col_rows[c].erase(j);
        std::swap(a.row[i], a.row[j]);
        for (const auto& [c, v] : a.row[i]) a.col_rows[c].insert(i);
        for (const auto& [c, v] : a.row[j]) a.col_rows[c].insert(j);
    }

    void row_negate(int i) {
        row_ops.push_back({ElemOp::Negate, i, 0, Int(0)});
        for (auto& [c, v] : a.row[i]) v = -v;
    }

    void row_add(int i, int j, const Int& k) {  // row_i += k * row_j
        if (k == 0) return;
        row_ops.push_back({ElemOp::Add, i, j, k});
        std::vector<std::pair<int, Int>> src(a.row[j].begin(), a.row[j].end());
        for (const auto& [c, v] : src) a.add(i, c, k * v);
    }

    void col_swap(int i, int j) {
        if (i == j) return;
        col_ops.push_back({ElemOp::Swap, i, j, Int(0)});
        std::set<int> touched = a.col_rows[i];
        touched.insert(a.col_rows[j].begin(), a.col_rows[j].end());
        for (int r : touched) {
            Int vi = a.get(r, i), vj = a.get(r, j);
            a.set(r, i, vj);
            a.set(r, j, vi);
        }
    }

    void col_negate(int i) {
        col_ops.push_back({ElemOp::Negate, i, 0, Int(0)});
        for (int r : a.col_rows[i]) a.row[r][i] = -a.row[r][i];
    }

    void col_add(int i, int j, const Int& k) {  // col_i += k * col_j
        if (k == 0) return;
        col_ops.push_back({ElemOp::Add, i, j, k});
        std::vector<int> src(a.col_rows[j].begin(), a.col_rows[j].end());
        for (int r : src) a.add(r, i, k * a.row[r][j]);
    }
};

}  // namespace

SmithForm smith_normal_form(SparseIntMat input) {
    Worker w{std::move(input), {}, {}};
    SparseIntMat& a = w.a;
    const int R = a.rows;

    int k = 0;
    while (true) {
        // Pivot scan over the active submatrix (everything before k is done).
        bool found = false, best_unit = false;
        int pi = -1, pj = -1;
        Int best_abs;
        size_t best_mark = 0;
        for (int i = k; i < R; ++i) {
            for (const auto& [j, v] : a.row[i]) {
                Int av = abs(v);
                bool unit = (av == 1);
                size_t mark = (a.row[i].size() - 1) * (a.col_rows[j].size() - 1);
                bool better;
                if (!found)
                    better = true;
                else if (unit != best_unit)
                    better = unit;
                else if (unit)
                    better = mark < best_mark;
                else
                    better = (av < best_abs) || (av == best_abs && mark < best_mark);
                if (better) {
                    found = true;
                    best_unit = unit;
                    best_abs = av;
                    best_mark = mark;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (!found) break;

        w.row_swap(pi, k);
        w.col_swap(pj, k);

        // Shrink the pivot until it clears its row and column and divides the
        // rest of the active submatrix.
        while (true) {
            bool restart = false;
            std::vector<int> col_users(a.col_rows[k].begin(), a.col_rows[k].end());
            for (int i : col_users) {
                if (i == k) continue;
                Int q = balanced_quot(a.get(i, k), a.get(k, k));
                w.row_add(i, k, -q);
                if (a.get(i, k) != 0) {  // remainder strictly smaller than pivot
                    w.row_swap(i, k);
                    restart = true;
                    break;
                }
            }
            if (restart) continue;

            std::vector<int> row_users;
            for (const auto& [j, v] : a.row[k])
                if (j != k) row_users.push_back(j);
            for (int j : row_users) {
                Int q = balanced_quot(a.get(k, j), a.get(k, k));
                w.col_add(j, k, -q);
                if (a.get(k, j) != 0) {
                    w.col_swap(j, k);
                    restart = true;
                    break;
                }
            }
            if (restart) continue;

            Int pivot = a.get(k, k);
            if (abs(pivot) != 1) {
                int bad_row = -1;
                for (int i = k + 1; i < R && bad_row < 0; ++i)
                    for (const auto& [j, v] : a.row[i])
                        if (v % pivot != 0) {
                            bad_row = i;
                            break;
                        }
                if (bad_row >= 0) {
                    w.row_add(k, bad_row, Int(1));
                    continue;
                }
            }
            break;
        }

        if (a.get(k, k) < 0) w.row_negate(k);
        ++k;
    }

    SmithForm s;
    s.rows = a.rows;
    s.cols = a.cols;
    s.rank = k;
    s.diag.reserve(k);
    for (int i = 0; i < k; ++i) s.diag.push_back(a.get(i, i));
    s.row_ops = std::move(w.row_ops);
    s.col_ops = std::move(w.col_ops);
    return s;
}

std::vector<Int> SmithForm::transform_rhs(std::vector<Int> z) const {
    if (static_cast<int>(z.size()) != rows) throw std::invalid_argument("transform_rhs: length mismatch");
    for (const auto& op : row_ops) {
        switch (op.kind) {
            case ElemOp::Swap: std::swap(z[op.i], z[op.j]); break;
            case ElemOp::Negate: z[op.i] = -z[op.i]; break;
            case ElemOp::Add: z[op.i] += op.k * z[op.j]; break;
        }
    }
    return z;
}

std::vector<Int> SmithForm::build_solution(std::vector<Int> y) const {
    if (static_cast<int>(y.size()) != cols) throw std::invalid_argument("build_solution: length mismatch");
    for (auto it = col_ops.rbegin(); it != col_ops.rend(); ++it) {
        switch (it->kind) {
            case ElemOp::Swap: std::swap(y[it->i], y[it->j]); break;
            case ElemOp::Negate: y[it->i] = -y[it->i]; break;
            case ElemOp::Add: y[it->j] += it->k * y[it->i]; break;
        }
    }
    return y;
}

std::vector<Int> SmithForm::nontrivial_factors() const {
    std::vector<Int> out;
    for (const auto& d : diag)
        if (d != 1) out.push_back(d);
    return out;
}

std::optional<ScaledSolution> solve_scaled(const SmithForm& s, const std::vector<Int>& z) {
    std::vector<Int> w = s.transform_rhs(z);
    for (int i = s.rank; i < s.rows; ++i)
        if (w[i] != 0) return std::nullopt;

    Int n(1);
    for (int i = 0; i < s.rank; ++i) {
        if (w[i] == 0) continue;
        n = lcm(n, s.diag[i] / gcd(s.diag[i], w[i]));
    }

    std::vector<Int> y(s.cols, Int(0));
    for (int i = 0; i < s.rank; ++i) y[i] = n * w[i] / s.diag[i];
    return ScaledSolution{n, s.build_solution(std::move(y))};
}

std::vector<Int> homology_invariant_factors(const SmithForm& snf_d2, int rank_d1, int n1) {
    std::vector<Int> out = snf_d2.nontrivial_factors();
    int free_rank = (n1 - rank_d1) - snf_d2.rank;
    if (free_rank < 0) throw std::logic_error("homology_invariant_factors: not a chain complex");
    for (int i = 0; i < free_rank; ++i) out.push_back(Int(0));
    return out;
}

IntMat row_ops_as_matrix(const std::vector<ElemOp>& ops, int n) {
    IntMat u = IntMat::identity(n);
    for (const auto& op : ops) {
        switch (op.kind) {
            case ElemOp::Swap:
                for (int c = 0; c < n; ++c) std::swap(u(op.i, c), u(op.j, c));
                break;
            case ElemOp::Negate:
                for (int c = 0; c < n; ++c) u(op.i, c) = -u(op.i, c);
                break;
            case ElemOp::Add:
                for (int c = 0; c < n; ++c) u(op.i, c) += op.k * u(op.j, c);
                break;
        }
    }
    return u;
}

IntMat col_ops_as_matrix(const std::vector<ElemOp>& ops, int n) {
    IntMat v = IntMat::identity(n);
    for (const auto& op : ops) {
        switch (op.kind) {
            case ElemOp::Swap:
                for (int r = 0; r < n; ++r) std::swap(v(r, op.i), v(r, op.j));
                break;
            case ElemOp::Negate:
                for (int r = 0; r < n; ++r) v(r, op.i) = -v(r, op.i);
                break;
            case ElemOp::Add:
                for (int r = 0; r < n; ++r) v(r, op.i) += op.k * v(r, op.j);
                break;
        }
    }
    return v;
}

bool composes_to_zero(const SparseIntMat& a, const SparseIntMat& b) {
    if (a.cols != b.rows) return false;
    for (int c = 0; c < b.cols; ++c) {
        std::map<int, Int> acc;
        for (int r : b.col_rows[static_cast<size_t>(c)]) {
            const Int v = b.get(r, c);
            for (int i : a.col_rows[static_cast<size_t>(r)]) {
                Int& slot = acc[i];
                slot += a.get(i, r) * v;
                if (slot == 0) acc.erase(i);
            }
        }
        if (!acc.empty()) return false;
    }
    return true;
}

}  // namespace xiknot
