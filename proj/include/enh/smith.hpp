#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "enh/sparse_matrix.hpp"

namespace enh {

inline constexpr int kDefaultSnfColumnBound = 2000;

namespace detail {

// Dense Smith normal form worker. Column operations are mirrored as row
// operations on v_inv so that (work) = U * M * V with v_inv = V^{-1}.
class snf_worker {
  public:
    snf_worker(const sparse_matrix<integer>& m, bool track_v_inv)
        : rows_(m.rows()), cols_(m.cols()), data_(static_cast<std::size_t>(rows_) * cols_, 0) {
        m.for_each_entry([&](int r, int c, const integer& v) { at(r, c) = v; });
        if (track_v_inv) {
            v_inv_.emplace(static_cast<std::size_t>(cols_) * cols_, 0);
            for (int i = 0; i < cols_; ++i) v_inv(i, i) = 1;
        }
    }

    void run() {
        int t = 0;
        const int bound = std::min(rows_, cols_);
        while (t < bound) {
            auto piv = find_pivot(t);
            if (!piv) break;
            swap_rows(t, piv->first);
            swap_cols(t, piv->second);
            reduce_step(t);
            if (at(t, t) < 0) negate_row(t);
            ++t;
        }
        rank_ = t;
    }

    std::vector<integer> invariant_factors() const {
        std::vector<integer> out;
        for (int i = 0; i < rank_; ++i) out.push_back(at(i, i));
        return out;
    }

    int rank() const { return rank_; }

    // v_inv * d, for expressing another matrix in the transformed column basis.
    sparse_matrix<integer> apply_v_inv(const sparse_matrix<integer>& d) const {
        sparse_matrix<integer> out(cols_, d.cols());
        for (int c = 0; c < d.cols(); ++c) {
            for (int i = 0; i < cols_; ++i) {
                integer acc = 0;
                for (const auto& [r, v] : d.column(c)) acc += v_inv(i, r) * v;
                if (acc != 0) out.set_entry(i, c, acc);
            }
        }
        return out;
    }

  private:
    integer& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const integer& at(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }
    integer& v_inv(int r, int c) { return (*v_inv_)[static_cast<std::size_t>(r) * cols_ + c]; }
    const integer& v_inv(int r, int c) const {
        return (*v_inv_)[static_cast<std::size_t>(r) * cols_ + c];
    }

    std::optional<std::pair<int, int>> find_pivot(int t) const {
        std::optional<std::pair<int, int>> best;
        integer best_abs = 0;
        for (int r = t; r < rows_; ++r)
            for (int c = t; c < cols_; ++c) {
                const integer& v = at(r, c);
                if (v == 0) continue;
                integer a = abs(v);
                if (!best || a < best_abs) {
                    best = {r, c};
                    best_abs = a;
                    if (a == 1) return best;
                }
            }
        return best;
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
    }

    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
        if (v_inv_)
            for (int c = 0; c < cols_; ++c) std::swap(v_inv(a, c), v_inv(b, c));
    }

    void negate_row(int r) {
        for (int c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
    }

    // col[target] += q * col[t]; mirrored on v_inv as row[t] -= q * row[target].
    void col_axpy(int target, const integer& q, int t) {
        if (q == 0) return;
        for (int r = 0; r < rows_; ++r) at(r, target) += q * at(r, t);
        if (v_inv_)
            for (int c = 0; c < cols_; ++c) v_inv(t, c) -= q * v_inv(target, c);
    }

    void row_axpy(int target, const integer& q, int t) {
        if (q == 0) return;
        for (int c = 0; c < cols_; ++c) at(target, c) += q * at(t, c);
    }

    // Clears row and column t and makes the pivot divide the rest of the
    // submatrix, restarting with a smaller pivot whenever one shows up.
    void reduce_step(int t) {
        while (true) {
            bool again = false;
            for (int r = t + 1; r < rows_ && !again; ++r) {
                if (at(r, t) == 0) continue;
                integer q = at(r, t) / at(t, t);
                row_axpy(r, -q, t);
                if (at(r, t) != 0) {
                    swap_rows(r, t);
                    again = true;
                }
            }
            if (again) continue;
            for (int c = t + 1; c < cols_ && !again; ++c) {
                if (at(t, c) == 0) continue;
                integer q = at(t, c) / at(t, t);
                col_axpy(c, -q, t);
                if (at(t, c) != 0) {
                    swap_cols(c, t);
                    again = true;
                }
            }
            if (again) continue;
            // pivot must divide every remaining entry for the factor chain
            bool divides = true;
            for (int r = t + 1; r < rows_ && divides; ++r)
                for (int c = t + 1; c < cols_ && divides; ++c)
                    if (at(r, c) % at(t, t) != 0) {
                        row_axpy(t, 1, r);
                        divides = false;
                    }
            if (divides) return;
        }
    }

    int rows_;
    int cols_;
    int rank_ = 0;
    std::vector<integer> data_;
    std::optional<std::vector<integer>> v_inv_;
};

inline void check_snf_size(const sparse_matrix<integer>& m, int column_bound) {
    if (m.cols() > column_bound)
        throw resource_error("integer Smith normal form limited to " +
                             std::to_string(column_bound) + " columns, got " +
                             std::to_string(m.cols()));
    if (static_cast<std::int64_t>(m.rows()) * m.cols() > 8'000'000)
        throw resource_error("matrix too large for dense integer reduction");
}

}  // namespace detail

// Nonzero invariant factors d_1 | d_2 | ... | d_r of an integer matrix.
inline std::vector<integer> smith_normal_form(const sparse_matrix<integer>& m,
                                              int column_bound = kDefaultSnfColumnBound) {
    detail::check_snf_size(m, column_bound);
    detail::snf_worker w(m, /*track_v_inv=*/false);
    w.run();
    return w.invariant_factors();
}

struct integer_homology_result {
    std::int64_t free_rank = 0;
    std::vector<integer> torsion;  // invariant factors != 1
};

// Homology of ... -> C_in --d_in--> C --d_out--> C_  over the integers:
// ker(d_out) is a saturated sublattice read off from the column transform of
// the SNF of d_out; d_in expressed in that basis has integral coordinates.
inline integer_homology_result integer_homology(const sparse_matrix<integer>& d_in,
                                                const sparse_matrix<integer>& d_out,
                                                int column_bound = kDefaultSnfColumnBound) {
    if (d_in.rows() != d_out.cols())
        throw std::invalid_argument("integer_homology: chain dimension mismatch");
    detail::check_snf_size(d_out, column_bound);
    detail::check_snf_size(d_in, column_bound);

    const int n = d_out.cols();
    detail::snf_worker out_worker(d_out, /*track_v_inv=*/true);
    out_worker.run();
    const int r1 = out_worker.rank();

    sparse_matrix<integer> coords = out_worker.apply_v_inv(d_in);
    sparse_matrix<integer> y(n - r1, d_in.cols());
    coords.for_each_entry([&](int r, int c, const integer& v) {
        // rows < r1 vanish because d_out * d_in = 0 and the kernel is saturated
        if (r < r1)
            throw internal_invariant_error(
                "integer_homology: image not contained in kernel coordinates");
        y.set_entry(r - r1, c, v);
    });

    detail::snf_worker in_worker(y, /*track_v_inv=*/false);
    in_worker.run();

    integer_homology_result res;
    res.free_rank = (n - r1) - in_worker.rank();
    for (const integer& f : in_worker.invariant_factors())
        if (f != 1) res.torsion.push_back(f);
    return res;
}

}  // namespace enh
