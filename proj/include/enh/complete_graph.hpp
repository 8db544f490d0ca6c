#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "enh/level_tree.hpp"

namespace enh {

// Complete graph on a finite vertex set: a global ordering of the vertices
// together with symmetric nonnegative integer edge weights (zero diagonal).
class complete_graph {
  public:
    complete_graph(std::vector<int> vertices_in_order, std::vector<std::vector<int>> weights)
        : order_(std::move(vertices_in_order)), weights_(std::move(weights)) {
        const int r = static_cast<int>(order_.size());
        sorted_ = order_;
        std::sort(sorted_.begin(), sorted_.end());
        if (std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end())
            throw validation_error("complete_graph ordering is not a bijection");
        if (static_cast<int>(weights_.size()) != r)
            throw validation_error("complete_graph weight matrix size mismatch");
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(weights_[i].size()) != r)
                throw validation_error("complete_graph weight matrix not square");
            if (weights_[i][i] != 0)
                throw validation_error("complete_graph weights need zero diagonal");
            for (int j = 0; j < r; ++j) {
                if (weights_[i][j] < 0)
                    throw validation_error("complete_graph weights must be >= 0");
                if (weights_[i][j] != weights_[j][i])
                    throw validation_error("complete_graph weights must be symmetric");
            }
        }
    }

    static complete_graph uniform(std::vector<int> vertices_in_order, int weight) {
        const int r = static_cast<int>(vertices_in_order.size());
        std::vector<std::vector<int>> w(r, std::vector<int>(r, weight));
        for (int i = 0; i < r; ++i) w[i][i] = 0;
        return complete_graph(std::move(vertices_in_order), std::move(w));
    }

    int size() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }
    const std::vector<int>& vertices() const { return sorted_; }

    bool has_vertex(int v) const {
        return std::binary_search(sorted_.begin(), sorted_.end(), v);
    }

    int position(int v) const {
        for (int i = 0; i < size(); ++i)
            if (order_[i] == v) return i;
        throw std::out_of_range("vertex not in complete graph");
    }

    // weight indexed by ordering positions
    int weight_at(int i, int j) const { return weights_[i][j]; }
    int weight(int v, int w) const { return weights_[position(v)][position(w)]; }

    // true when v comes before w in the ordering (sigma_{vw} = id)
    bool before(int v, int w) const { return position(v) < position(w); }

    complete_graph restricted(const std::vector<int>& subset) const {
        std::vector<int> sub_order;
        for (int v : order_)
            if (std::find(subset.begin(), subset.end(), v) != subset.end())
                sub_order.push_back(v);
        if (sub_order.size() != subset.size())
            throw validation_error("restriction subset is not contained in the vertex set");
        const int r = static_cast<int>(sub_order.size());
        std::vector<std::vector<int>> w(r, std::vector<int>(r, 0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) w[i][j] = weight(sub_order[i], sub_order[j]);
        return complete_graph(std::move(sub_order), std::move(w));
    }

    bool operator==(const complete_graph& o) const {
        return order_ == o.order_ && weights_ == o.weights_;
    }

  private:
    std::vector<int> order_;   // order_[k] = vertex at position k
    std::vector<int> sorted_;  // vertex set, sorted
    std::vector<std::vector<int>> weights_;
};

// Partial order: kappa <= kappa' when every pair has strictly smaller weight
// in kappa, or agrees in both orientation and weight.
inline bool graph_leq(const complete_graph& a, const complete_graph& b) {
    if (a.vertices() != b.vertices())
        throw validation_error("graph_leq requires equal vertex sets");
    const auto& vs = a.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            int e = vs[i], f = vs[j];
            if (a.weight(e, f) < b.weight(e, f)) continue;
            if (a.weight(e, f) == b.weight(e, f) && a.before(e, f) == b.before(e, f)) continue;
            return false;
        }
    return true;
}

inline bool in_kn(const complete_graph& g, int n) {
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.weight(vs[i], vs[j]) > n - 1) return false;
    return true;
}

// Operadic substitution: replace vertex v of a by the graph b. Edges between
// a remaining vertex g and any vertex of b inherit orientation and weight
// from the edge (g, v).
inline complete_graph graph_compose(const complete_graph& a, int v, const complete_graph& b) {
    if (!a.has_vertex(v)) throw validation_error("graph_compose: vertex not present");
    for (int w : b.vertices())
        if (a.has_vertex(w) && w != v)
            throw validation_error("graph_compose: vertex sets must be disjoint");

    std::vector<int> order;
    for (int u : a.order()) {
        if (u == v)
            order.insert(order.end(), b.order().begin(), b.order().end());
        else
            order.push_back(u);
    }
    const int r = static_cast<int>(order.size());
    std::vector<std::vector<int>> w(r, std::vector<int>(r, 0));
    auto weight_of = [&](int x, int y) {
        bool x_in_b = b.has_vertex(x);
        bool y_in_b = b.has_vertex(y);
        if (x_in_b && y_in_b) return b.weight(x, y);
        if (!x_in_b && !y_in_b) return a.weight(x, y);
        int outer = x_in_b ? y : x;
        return a.weight(outer, v);
    };
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) w[i][j] = i == j ? 0 : weight_of(order[i], order[j]);
    return complete_graph(std::move(order), std::move(w));
}

// The least complete graph whose cell contains the labeled tree: vertices
// ordered like the leaves, weight (n-1) minus the level where the two root
// paths first join.
inline complete_graph minimal_complete_graph(const level_tree& t,
                                             const std::vector<int>& leaf_labels) {
    const int r = t.leaf_count();
    if (static_cast<int>(leaf_labels.size()) != r)
        throw validation_error("labeling size must equal leaf count");
    const int n = t.levels();
    std::vector<std::vector<int>> w(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) w[i][j] = w[j][i] = n - 1 - t.meet_level(i, j);
    return complete_graph(leaf_labels, std::move(w));
}

// Membership of a labeled tree in the cell of a complete graph, evaluated by
// the recursive conditions: subtrees land in restricted cells, small-weight
// pairs share a subtree, and threshold-weight pairs split in order.
inline bool tree_in_cell(const level_tree& t, const std::vector<int>& leaf_labels,
                         const complete_graph& kappa) {
    const int r = t.leaf_count();
    if (static_cast<int>(leaf_labels.size()) != r)
        throw validation_error("labeling size must equal leaf count");
    {
        std::vector<int> sorted = leaf_labels;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != kappa.vertices())
            throw validation_error("tree_in_cell: vertex set must equal the label set");
    }
    const int n = t.levels();
    if (n == 1) {
        // Pairs of weight 0 must be ordered like the leaves; positive-weight
        // pairs are unconstrained, matching the degree-0 cell condition and
        // keeping membership monotone along the partial order.
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (kappa.weight(leaf_labels[i], leaf_labels[j]) == 0 &&
                    !kappa.before(leaf_labels[i], leaf_labels[j]))
                    return false;
        return true;
    }

    auto counts = t.subtree_leaf_counts();
    std::vector<int> subtree_of(r);
    {
        int leaf = 0;
        for (std::size_t j = 0; j < counts.size(); ++j)
            for (int c = 0; c < counts[j]; ++c) subtree_of[leaf++] = static_cast<int>(j);
    }

    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            int e = leaf_labels[i], f = leaf_labels[j];
            int mu = kappa.weight(e, f);
            if (mu < n - 1 && subtree_of[i] != subtree_of[j]) return false;
            if (mu == n - 1 && subtree_of[i] < subtree_of[j] && !kappa.before(e, f))
                return false;
            if (mu == n - 1 && subtree_of[i] > subtree_of[j] && !kappa.before(f, e))
                return false;
        }

    auto subtrees = t.root_subtrees();
    int leaf = 0;
    for (std::size_t j = 0; j < subtrees.size(); ++j) {
        std::vector<int> sub_labels(leaf_labels.begin() + leaf,
                                    leaf_labels.begin() + leaf + counts[j]);
        leaf += counts[j];
        if (!tree_in_cell(subtrees[j], sub_labels, kappa.restricted(sub_labels))) return false;
    }
    return true;
}

}  // namespace enh
