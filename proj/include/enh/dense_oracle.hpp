#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "enh/ring.hpp"
#include "enh/sparse_matrix.hpp"

namespace enh {

// Brute-force homology path on dense matrices: positional Gaussian
// elimination over fields and a plain dense Smith reduction over the
// integers. Deliberately shares no reduction code with the sparse engine so
// the two can cross-check each other.

inline constexpr int kDenseOracleDimensionBound = 500;

namespace dense {

template <class F>
using matrix = std::vector<std::vector<typename F::scalar>>;

template <class F>
matrix<F> to_dense(const F& field, const sparse_matrix<typename F::scalar>& m) {
    if (m.rows() > kDenseOracleDimensionBound || m.cols() > kDenseOracleDimensionBound)
        throw resource_error("dense oracle limited to dimension " +
                             std::to_string(kDenseOracleDimensionBound));
    matrix<F> d(m.rows(), std::vector<typename F::scalar>(m.cols(), field.zero()));
    m.for_each_entry([&](int r, int c, const typename F::scalar& v) { d[r][c] = v; });
    return d;
}

template <class F>
int rank(const F& field, matrix<F> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!field.is_zero(a[r][c])) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        auto inv = field.inv(a[rank][c]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || field.is_zero(a[r][c])) continue;
            auto factor = field.mul(a[r][c], inv);
            for (int k = c; k < cols; ++k)
                a[r][k] = field.sub(a[r][k], field.mul(factor, a[rank][k]));
        }
        ++rank;
    }
    return rank;
}

template <class F>
int rank(const F& field, const sparse_matrix<typename F::scalar>& m) {
    return rank(field, to_dense(field, m));
}

// Dense Smith reduction, diagonal not required to be canonical beyond the
// divisibility chain.
struct z_matrix {
    int rows = 0, cols = 0;
    std::vector<integer> data;  // row-major

    integer& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    const integer& at(int r, int c) const {
        return data[static_cast<std::size_t>(r) * cols + c];
    }
};

inline z_matrix to_dense_z(const sparse_matrix<integer>& m) {
    if (m.rows() > kDenseOracleDimensionBound || m.cols() > kDenseOracleDimensionBound)
        throw resource_error("dense oracle limited to dimension " +
                             std::to_string(kDenseOracleDimensionBound));
    z_matrix d{m.rows(), m.cols(), {}};
    d.data.assign(static_cast<std::size_t>(m.rows()) * m.cols(), 0);
    m.for_each_entry([&](int r, int c, const integer& v) { d.at(r, c) = v; });
    return d;
}

// v_inv, when supplied, accumulates the inverse column transform (row ops).
inline std::vector<integer> smith_diagonal(z_matrix a, z_matrix* v_inv) {
    const int bound = std::min(a.rows, a.cols);
    int t = 0;
    while (t < bound) {
        int pr = -1, pc = -1;
        integer best = 0;
        for (int r = t; r < a.rows; ++r)
            for (int c = t; c < a.cols; ++c)
                if (a.at(r, c) != 0 && (pr < 0 || abs(a.at(r, c)) < best)) {
                    pr = r;
                    pc = c;
                    best = abs(a.at(r, c));
                }
        if (pr < 0) break;
        for (int c = 0; c < a.cols; ++c) std::swap(a.at(t, c), a.at(pr, c));
        for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, t), a.at(r, pc));
        if (v_inv)
            for (int c = 0; c < v_inv->cols; ++c) std::swap(v_inv->at(t, c), v_inv->at(pc, c));

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int r = t + 1; r < a.rows; ++r) {
                if (a.at(r, t) == 0) continue;
                integer q = a.at(r, t) / a.at(t, t);
                for (int c = 0; c < a.cols; ++c) a.at(r, c) -= q * a.at(t, c);
                if (a.at(r, t) != 0) {
                    for (int c = 0; c < a.cols; ++c) std::swap(a.at(t, c), a.at(r, c));
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (int c = t + 1; c < a.cols; ++c) {
                if (a.at(t, c) == 0) continue;
                integer q = a.at(t, c) / a.at(t, t);
                for (int r = 0; r < a.rows; ++r) a.at(r, c) -= q * a.at(r, t);
                if (v_inv)
                    for (int k = 0; k < v_inv->cols; ++k)
                        v_inv->at(t, k) += q * v_inv->at(c, k);
                if (a.at(t, c) != 0) {
                    for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, t), a.at(r, c));
                    if (v_inv)
                        for (int k = 0; k < v_inv->cols; ++k)
                            std::swap(v_inv->at(t, k), v_inv->at(c, k));
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (int r = t + 1; r < a.rows && !dirty; ++r)
                for (int c = t + 1; c < a.cols && !dirty; ++c)
                    if (a.at(r, c) % a.at(t, t) != 0) {
                        for (int k = 0; k < a.cols; ++k) a.at(t, k) += a.at(r, k);
                        dirty = true;
                    }
        }
        if (a.at(t, t) < 0)
            for (int c = 0; c < a.cols; ++c) a.at(t, c) = -a.at(t, c);
        ++t;
    }
    std::vector<integer> diag;
    for (int i = 0; i < t; ++i) diag.push_back(a.at(i, i));
    return diag;
}

inline std::vector<integer> smith_diagonal(const sparse_matrix<integer>& m) {
    return smith_diagonal(to_dense_z(m), nullptr);
}

struct z_homology {
    std::int64_t free_rank = 0;
    std::vector<integer> torsion;
};

inline z_homology homology_z(const sparse_matrix<integer>& d_in,
                             const sparse_matrix<integer>& d_out) {
    const int n = d_out.cols();
    z_matrix v_inv{n, n, {}};
    v_inv.data.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) v_inv.at(i, i) = 1;
    auto diag = smith_diagonal(to_dense_z(d_out), &v_inv);
    const int r1 = static_cast<int>(diag.size());

    z_matrix y{n - r1, d_in.cols(), {}};
    y.data.assign(static_cast<std::size_t>(y.rows) * y.cols, 0);
    for (int c = 0; c < d_in.cols(); ++c)
        for (int i = 0; i < n; ++i) {
            integer acc = 0;
            for (const auto& [r, v] : d_in.column(c)) acc += v_inv.at(i, r) * v;
            if (i < r1) {
                if (acc != 0)
                    throw internal_invariant_error(
                        "dense oracle: image not contained in kernel coordinates");
            } else {
                y.at(i - r1, c) = acc;
            }
        }
    auto ydiag = smith_diagonal(std::move(y), nullptr);
    z_homology res;
    res.free_rank = (n - r1) - static_cast<std::int64_t>(ydiag.size());
    for (const integer& f : ydiag)
        if (f != 1) res.torsion.push_back(f);
    return res;
}

template <class F>
std::int64_t betti(const F& field, const sparse_matrix<typename F::scalar>& d_in,
                   const sparse_matrix<typename F::scalar>& d_out) {
    return (d_out.cols() - rank(field, d_out)) - rank(field, d_in);
}

}  // namespace dense
}  // namespace enh
