#pragma once

#include "xiknot/matrix.hpp"
#include "xiknot/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace xiknot {

// Sparse matrix over the integers with row-major storage plus a per-column
// occupancy index, sized for exact elimination on chain-complex boundary
// operators (entries mostly +-1).
struct SparseIntMat {
    int rows = 0, cols = 0;
    std::vector<std::map<int, Int>> row;   // row[i]: col -> nonzero value
    std::vector<std::set<int>> col_rows;   // col_rows[j]: rows with a nonzero in col j

    SparseIntMat() = default;
    SparseIntMat(int r, int c) : rows(r), cols(c), row(r), col_rows(c) {}

    Int get(int i, int j) const {
        auto it = row[i].find(j);
        return it == row[i].end() ? Int(0) : it->second;
    }

    void set(int i, int j, const Int& v) {
        if (v == 0) {
            if (row[i].erase(j)) col_rows[j].erase(i);
        } else {
            if (row[i].insert_or_assign(j, v).second) col_rows[j].insert(i);
        }
    }

    void add(int i, int j, const Int& v) {
        if (v == 0) return;
        auto it = row[i].find(j);
        if (it == row[i].end()) {
            row[i].emplace(j, v);
            col_rows[j].insert(i);
        } else {
            it->second += v;
            if (it->second == 0) {
                row[i].erase(it);
                col_rows[j].erase(i);
            }
        }
    }

    size_t nnz() const {
        size_t n = 0;
        for (const auto& r : row) n += r.size();
        return n;
    }

    static SparseIntMat from_dense(const IntMat& m) {
        SparseIntMat s(m.r, m.c);
        for (int i = 0; i < m.r; ++i)
            for (int j = 0; j < m.c; ++j)
                if (m(i, j) != 0) s.set(i, j, m(i, j));
        return s;
    }

    IntMat to_dense() const {
        IntMat m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (const auto& [j, v] : row[i]) m(i, j) = v;
        return m;
    }
};

// One elementary row or column operation, logged in application order.
//  Swap:   lines i and j exchanged.
//  Negate: line i multiplied by -1.
//  Add:    line i += k * line j.
struct ElemOp {
    enum Kind { Swap, Negate, Add } kind = Swap;
    int i = 0, j = 0;
    Int k;
};

// Smith normal form U * A * V = D, with U and V kept as elementary-operation
// logs instead of dense matrices.  diag holds d_1 | d_2 | ... | d_rank, all
// positive.
struct SmithForm {
    int rows = 0, cols = 0, rank = 0;
    std::vector<Int> diag;
    std::vector<ElemOp> row_ops;  // U = (last op) ... (first op)
    std::vector<ElemOp> col_ops;  // V = (first op) ... (last op)

    // U * z  (length rows -> rows).
    std::vector<Int> transform_rhs(std::vector<Int> z) const;

    // V * y  (length cols -> cols).
    std::vector<Int> build_solution(std::vector<Int> y) const;

    // Invariant factors d_i different from 1 (the torsion of the cokernel
    // restricted to the image's saturation).
    std::vector<Int> nontrivial_factors() const;
};

SmithForm smith_normal_form(SparseIntMat a);

inline int sparse_rank(SparseIntMat a) { return smith_normal_form(std::move(a)).rank; }

// Minimal positive n together with a chain F such that A * F = n * z, if z is
// in the rational column span; nullopt otherwise.
struct ScaledSolution {
    Int n;
    std::vector<Int> chain;
};
std::optional<ScaledSolution> solve_scaled(const SmithForm& s, const std::vector<Int>& z);

// Invariant factors of ker(d1)/im(d2) for consecutive boundary operators
// (d1 * d2 = 0 assumed): torsion entries (> 1) first, then one 0 per free
// summand.  n1 is the rank of the middle chain group, rank_d1 = rank of d1.
std::vector<Int> homology_invariant_factors(const SmithForm& snf_d2, int rank_d1, int n1);

// Dense reconstructions of the logged transforms (test support).
IntMat row_ops_as_matrix(const std::vector<ElemOp>& ops, int n);
IntMat col_ops_as_matrix(const std::vector<ElemOp>& ops, int n);

// True when a * b is the zero matrix (consecutive boundary operators).
bool composes_to_zero(const SparseIntMat& a, const SparseIntMat& b);

}  // namespace xiknot
