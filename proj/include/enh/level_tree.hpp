#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "enh/scalar.hpp"

namespace enh {

// Planar fully grown n-level tree, stored as fiber-size sequences: level i
// holds one fiber per vertex of level i-1 (level 0 is the single root), every
// fiber nonempty. Leaves are the level-n vertices in planar order.
class level_tree {
  public:
    explicit level_tree(std::vector<std::vector<int>> fibers) : fibers_(std::move(fibers)) {
        if (fibers_.empty()) throw validation_error("level_tree needs at least one level");
        int expected_fibers = 1;
        for (const auto& level : fibers_) {
            if (static_cast<int>(level.size()) != expected_fibers)
                throw validation_error("level_tree fiber count mismatch");
            int vertices = 0;
            for (int f : level) {
                if (f < 1) throw validation_error("level_tree fiber sizes must be >= 1");
                vertices += f;
            }
            expected_fibers = vertices;
        }
    }

    // The n-level tree with a single leaf.
    static level_tree trunk(int n) {
        if (n < 1) throw validation_error("trunk needs n >= 1");
        return level_tree(std::vector<std::vector<int>>(n, std::vector<int>{1}));
    }

    int levels() const { return static_cast<int>(fibers_.size()); }

    const std::vector<int>& fiber_sizes(int level) const { return fibers_.at(level - 1); }

    int vertex_count(int level) const {
        const auto& f = fibers_.at(level - 1);
        return std::accumulate(f.begin(), f.end(), 0);
    }

    int leaf_count() const { return vertex_count(levels()); }

    int edge_count() const {
        int total = 0;
        for (int lvl = 1; lvl <= levels(); ++lvl) total += vertex_count(lvl);
        return total;
    }

    // Index of the level-n fiber containing the given leaf.
    int leaf_fiber(int leaf) const {
        const auto& top = fibers_.back();
        int at = 0;
        for (int i = 0; i < static_cast<int>(top.size()); ++i) {
            at += top[i];
            if (leaf < at) return i;
        }
        throw std::out_of_range("leaf index out of range");
    }

    int fiber_start(int fiber) const {
        const auto& top = fibers_.back();
        int at = 0;
        for (int i = 0; i < fiber; ++i) at += top.at(i);
        return at;
    }

    bool leaf_removable(int leaf) const { return fibers_.back()[leaf_fiber(leaf)] > 1; }

    // The tree with one leaf deleted; its level-n fiber shrinks by one, all
    // other structure is unchanged. Rejects leaves that are alone in their
    // fiber (the result would not be fully grown).
    level_tree without_leaf(int leaf) const {
        int fiber = leaf_fiber(leaf);
        if (fibers_.back()[fiber] <= 1)
            throw validation_error("cannot delete the only leaf of a fiber");
        auto fibers = fibers_;
        --fibers.back()[fiber];
        return level_tree(std::move(fibers));
    }

    // 1-based positions of each leaf's edge in the depth-first pre-order walk
    // of all edges (root first, children left to right).
    std::vector<int> leaf_edge_indices() const {
        const int n = levels();
        std::vector<int> out(leaf_count(), 0);
        int counter = 0;
        // children of vertex v at level lvl occupy a contiguous span at lvl+1
        std::vector<std::vector<int>> child_start(n);
        for (int lvl = 1; lvl < n; ++lvl) {
            const auto& next = fibers_[lvl];
            child_start[lvl].resize(next.size() + 1, 0);
            for (std::size_t i = 0; i < next.size(); ++i)
                child_start[lvl][i + 1] = child_start[lvl][i] + next[i];
        }
        auto dfs = [&](auto&& self, int lvl, int vertex) -> void {
            ++counter;
            if (lvl == n) {
                out[vertex] = counter;
                return;
            }
            for (int c = child_start[lvl][vertex]; c < child_start[lvl][vertex + 1]; ++c)
                self(self, lvl + 1, c);
        };
        for (int v = 0; v < vertex_count(1); ++v) dfs(dfs, 1, v);
        return out;
    }

    int leaf_edge_index(int leaf) const {
        auto all = leaf_edge_indices();
        return all.at(leaf);
    }

    // Highest level at which the root paths of two distinct leaves still
    // share a vertex (0 = they only meet at the root).
    int meet_level(int leaf_a, int leaf_b) const {
        if (leaf_a == leaf_b) throw std::invalid_argument("meet_level needs distinct leaves");
        int a = leaf_a, b = leaf_b;
        for (int lvl = levels(); lvl >= 1; --lvl) {
            a = parent_vertex(lvl, a);
            b = parent_vertex(lvl, b);
            if (a == b) return lvl - 1;
        }
        return 0;
    }

    // The (n-1)-level trees hanging off the root's children; n >= 2.
    std::vector<level_tree> root_subtrees() const {
        const int n = levels();
        if (n < 2) throw std::logic_error("root_subtrees needs n >= 2");
        const int k = vertex_count(1);
        std::vector<level_tree> out;
        out.reserve(k);
        for (int j = 0; j < k; ++j) {
            std::vector<std::vector<int>> sub(n - 1);
            int lo_lvl = j, hi_lvl = j + 1;
            for (int lvl = 2; lvl <= n; ++lvl) {
                const auto& level = fibers_[lvl - 1];
                int lo_next = 0, hi_next = 0;
                for (int v = 0; v < lo_lvl; ++v) lo_next += level[v];
                hi_next = lo_next;
                for (int v = lo_lvl; v < hi_lvl; ++v) hi_next += level[v];
                sub[lvl - 2].assign(level.begin() + lo_lvl, level.begin() + hi_lvl);
                lo_lvl = lo_next;
                hi_lvl = hi_next;
            }
            out.push_back(level_tree(std::move(sub)));
        }
        return out;
    }

    // Leaf count of each root subtree (works for n = 1 too, all ones).
    std::vector<int> subtree_leaf_counts() const {
        const int n = levels();
        const int k = vertex_count(1);
        std::vector<int> counts(k, 0);
        std::vector<int> owner(k);
        std::iota(owner.begin(), owner.end(), 0);
        for (int lvl = 2; lvl <= n; ++lvl) {
            const auto& level = fibers_[lvl - 1];
            std::vector<int> next;
            for (std::size_t v = 0; v < level.size(); ++v)
                next.insert(next.end(), level[v], owner[v]);
            owner = std::move(next);
        }
        for (int o : owner) ++counts[o];
        return counts;
    }

    std::string to_string() const {
        std::string s;
        for (int lvl = 1; lvl <= levels(); ++lvl) {
            if (lvl > 1) s += ';';
            s += '[';
            const auto& f = fibers_[lvl - 1];
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(f[i]);
            }
            s += ']';
        }
        return s;
    }

    static level_tree parse(const std::string& text) {
        std::vector<std::vector<int>> fibers;
        std::size_t i = 0;
        while (i < text.size()) {
            if (text[i] != '[') throw schema_error("bad tree literal: " + text);
            ++i;
            std::vector<int> level;
            while (i < text.size() && text[i] != ']') {
                std::size_t j = i;
                while (j < text.size() && text[j] != ',' && text[j] != ']') ++j;
                level.push_back(std::stoi(text.substr(i, j - i)));
                i = j;
                if (i < text.size() && text[i] == ',') ++i;
            }
            if (i >= text.size()) throw schema_error("bad tree literal: " + text);
            ++i;  // ']'
            if (i < text.size()) {
                if (text[i] != ';') throw schema_error("bad tree literal: " + text);
                ++i;
            }
            fibers.push_back(std::move(level));
        }
        return level_tree(std::move(fibers));
    }

    const std::vector<std::vector<int>>& fibers() const { return fibers_; }

    bool operator==(const level_tree& o) const = default;
    auto operator<=>(const level_tree& o) const = default;

  private:
    int parent_vertex(int level, int vertex) const {
        const auto& f = fibers_[level - 1];
        int at = 0;
        for (int i = 0; i < static_cast<int>(f.size()); ++i) {
            at += f[i];
            if (vertex < at) return i;
        }
        throw std::out_of_range("vertex out of range");
    }

    std::vector<std::vector<int>> fibers_;
};

namespace detail {

// Compositions of r, shortest first, parts lexicographically descending
// within a given length: (3), (2,1), (1,2), (1,1,1).
inline std::vector<std::vector<int>> compositions(int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int parts_left) -> void {
        if (parts_left == 1) {
            current.push_back(remaining);
            out.push_back(current);
            current.pop_back();
            return;
        }
        for (int first = remaining - parts_left + 1; first >= 1; --first) {
            current.push_back(first);
            self(self, remaining - first, parts_left - 1);
            current.pop_back();
        }
    };
    for (int k = 1; k <= r; ++k) rec(rec, r, k);
    return out;
}

}  // namespace detail

// All n-level trees with the given number of leaves, in canonical order:
// level-1 arity ascending, then recursively on the subtrees left to right.
inline std::vector<level_tree> enumerate_trees(int n, int leaves) {
    if (n < 1 || leaves < 1)
        throw validation_error("enumerate_trees needs n >= 1 and leaves >= 1");
    if (n == 1) return {level_tree(std::vector<std::vector<int>>{{leaves}})};

    std::vector<level_tree> out;
    for (const auto& comp : detail::compositions(leaves)) {
        const int k = static_cast<int>(comp.size());
        std::vector<std::vector<level_tree>> choices;
        choices.reserve(k);
        for (int part : comp) choices.push_back(enumerate_trees(n - 1, part));

        std::vector<std::size_t> idx(k, 0);
        while (true) {
            std::vector<std::vector<int>> fibers(n);
            fibers[0] = {k};
            for (int j = 0; j < k; ++j) {
                const auto& sub = choices[j][idx[j]].fibers();
                for (int lvl = 0; lvl < n - 1; ++lvl)
                    fibers[lvl + 1].insert(fibers[lvl + 1].end(), sub[lvl].begin(),
                                           sub[lvl].end());
            }
            out.push_back(level_tree(std::move(fibers)));
            int pos = k - 1;
            while (pos >= 0 && ++idx[pos] == choices[pos].size()) idx[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return out;
}

// Number of n-level trees with r leaves via the composition recursion; used
// as a counting cross-check against the explicit enumeration.
inline integer tree_count(int n, int r) {
    if (n == 1) return 1;
    integer total = 0;
    for (const auto& comp : detail::compositions(r)) {
        integer prod = 1;
        for (int part : comp) prod *= tree_count(n - 1, part);
        total += prod;
    }
    return total;
}

}  // namespace enh
