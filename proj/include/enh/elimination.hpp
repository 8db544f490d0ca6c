#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "enh/sparse_matrix.hpp"

namespace enh {

// Sparse Gaussian elimination over a field with a Markowitz-style pivot rule:
// pick the sparsest live column, then the sparsest live row meeting it. Bar
// complex differentials are extremely sparse and fill-in dominates the cost,
// so this beats positional pivoting by a wide margin.
template <class F>
class sparse_eliminator {
  public:
    using scalar = typename F::scalar;

    sparse_eliminator(const F& field, const sparse_matrix<scalar>& m)
        : field_(field),
          rows_(m.rows()),
          row_data_(m.rows()),
          row_alive_(m.rows(), true),
          col_count_(m.cols(), 0),
          col_rows_(m.cols()) {
        m.for_each_entry([&](int r, int c, const scalar& v) {
            row_data_[r].push_back({c, v});
            ++col_count_[c];
            col_rows_[c].push_back(r);
        });
    }

    int rank() {
        int rank = 0;
        while (true) {
            int pc = pick_pivot_column();
            if (pc < 0) break;
            int pr = pick_pivot_row(pc);
            eliminate(pr, pc);
            ++rank;
        }
        return rank;
    }

  private:
    int pick_pivot_column() const {
        int best = -1;
        int best_count = std::numeric_limits<int>::max();
        for (int c = 0; c < static_cast<int>(col_count_.size()); ++c) {
            if (col_count_[c] > 0 && col_count_[c] < best_count) {
                best = c;
                best_count = col_count_[c];
                if (best_count == 1) break;
            }
        }
        return best;
    }

    int pick_pivot_row(int c) {
        int best = -1;
        std::size_t best_size = std::numeric_limits<std::size_t>::max();
        auto& cand = col_rows_[c];
        std::size_t w = 0;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            int r = cand[i];
            if (!row_alive_[r] || !row_has(r, c)) continue;  // stale entry
            cand[w++] = r;
            if (row_data_[r].size() < best_size) {
                best = r;
                best_size = row_data_[r].size();
            }
        }
        cand.resize(w);
        return best;
    }

    bool row_has(int r, int c) const {
        const auto& row = row_data_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        return it != row.end() && it->first == c;
    }

    void eliminate(int pr, int pc) {
        const scalar pivot = row_value(pr, pc);
        const scalar pivot_inv = field_.inv(pivot);
        for (int r : col_rows_[pc]) {
            if (r == pr || !row_alive_[r]) continue;
            auto it = std::lower_bound(row_data_[r].begin(), row_data_[r].end(), pc,
                                       [](const auto& e, int col) { return e.first < col; });
            if (it == row_data_[r].end() || it->first != pc) continue;
            scalar factor = field_.neg(field_.mul(it->second, pivot_inv));
            axpy(r, factor, pr);
        }
        retire_row(pr);
    }

    scalar row_value(int r, int c) const {
        const auto& row = row_data_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        return it->second;
    }

    // row[target] += factor * row[source], maintaining column bookkeeping.
    void axpy(int target, const scalar& factor, int source) {
        const auto& a = row_data_[target];
        const auto& b = row_data_[source];
        std::vector<std::pair<int, scalar>> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                scalar v = field_.mul(factor, b[j].second);
                if (!field_.is_zero(v)) {
                    int c = b[j].first;
                    out.push_back({c, v});
                    ++col_count_[c];
                    col_rows_[c].push_back(target);
                }
                ++j;
            } else {
                scalar v = field_.add(a[i].second, field_.mul(factor, b[j].second));
                if (!field_.is_zero(v))
                    out.push_back({a[i].first, v});
                else
                    --col_count_[a[i].first];
                ++i;
                ++j;
            }
        }
        row_data_[target] = std::move(out);
    }

    void retire_row(int r) {
        for (const auto& [c, v] : row_data_[r]) --col_count_[c];
        row_data_[r].clear();
        row_alive_[r] = false;
    }

    F field_;
    int rows_;
    std::vector<std::vector<std::pair<int, scalar>>> row_data_;
    std::vector<char> row_alive_;
    std::vector<int> col_count_;
    std::vector<std::vector<int>> col_rows_;
};

template <class F>
int field_rank(const F& field, const sparse_matrix<typename F::scalar>& m) {
    sparse_eliminator<F> elim(field, m);
    return elim.rank();
}

}  // namespace enh
