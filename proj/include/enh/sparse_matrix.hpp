#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "enh/ring.hpp"

namespace enh {

// Column-major sparse matrix over an exact coefficient type. No zero entries
// are ever stored and (row, col) pairs are unique; columns keep rows sorted.
template <class T>
class sparse_matrix {
  public:
    sparse_matrix() = default;
    sparse_matrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add_entry(int r, int c, T value) {
        check_index(r, c);
        if (value == T(0)) return;
        auto& col = columns_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const auto& e, int row) { return e.first < row; });
        if (it != col.end() && it->first == r) {
            it->second += value;
            if (it->second == T(0)) col.erase(it);
        } else {
            col.insert(it, {r, std::move(value)});
        }
    }

    void set_entry(int r, int c, T value) {
        check_index(r, c);
        auto& col = columns_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const auto& e, int row) { return e.first < row; });
        if (it != col.end() && it->first == r) {
            if (value == T(0))
                col.erase(it);
            else
                it->second = std::move(value);
        } else if (value != T(0)) {
            col.insert(it, {r, std::move(value)});
        }
    }

    T entry(int r, int c) const {
        check_index(r, c);
        const auto& col = columns_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const auto& e, int row) { return e.first < row; });
        if (it != col.end() && it->first == r) return it->second;
        return T(0);
    }

    const std::vector<std::pair<int, T>>& column(int c) const { return columns_[c]; }

    std::size_t entry_count() const {
        std::size_t n = 0;
        for (const auto& col : columns_) n += col.size();
        return n;
    }

    bool is_zero() const { return entry_count() == 0; }

    sparse_matrix transposed() const {
        sparse_matrix t(cols_, rows_);
        for (int c = 0; c < cols_; ++c)
            for (const auto& [r, v] : columns_[c]) t.columns_[r].push_back({c, v});
        return t;
    }

    // this * other, with this : C_mid -> C_out and other : C_in -> C_mid.
    sparse_matrix multiply(const sparse_matrix& other) const {
        if (cols_ != other.rows_)
            throw std::invalid_argument("sparse_matrix::multiply dimension mismatch");
        sparse_matrix out(rows_, other.cols_);
        std::map<int, T> acc;
        for (int c = 0; c < other.cols_; ++c) {
            acc.clear();
            for (const auto& [mid, w] : other.columns_[c]) {
                for (const auto& [r, v] : columns_[mid]) {
                    auto [it, inserted] = acc.try_emplace(r, T(0));
                    it->second += v * w;
                }
            }
            auto& col = out.columns_[c];
            for (auto& [r, v] : acc)
                if (!(v == T(0))) col.push_back({r, v});
        }
        return out;
    }

    template <class Fn>
    void for_each_entry(Fn&& fn) const {
        for (int c = 0; c < cols_; ++c)
            for (const auto& [r, v] : columns_[c]) fn(r, c, v);
    }

    // Entrywise image under a ring map (typically rational -> F::scalar).
    template <class F>
    sparse_matrix<typename F::scalar> mapped(const F& field) const {
        sparse_matrix<typename F::scalar> out(rows_, cols_);
        for (int c = 0; c < cols_; ++c)
            for (const auto& [r, v] : columns_[c]) out.add_entry(r, c, field.from_rational(v));
        return out;
    }

    bool operator==(const sparse_matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && columns_ == o.columns_;
    }

  private:
    void check_index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("sparse_matrix index out of range");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::vector<std::pair<int, T>>> columns_;
};

}  // namespace enh
