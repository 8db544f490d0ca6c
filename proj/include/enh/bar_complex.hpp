#pragma once

#include <map>
#include <vector>

#include "enh/graded_algebra.hpp"
#include "enh/level_tree.hpp"
#include "enh/sparse_matrix.hpp"

namespace enh {

// Basis element of the n-fold bar construction: an n-level tree with leaves
// labeled by algebra basis elements, in leaf order.
struct labeled_element {
    level_tree tree;
    std::vector<int> labels;

    bool operator==(const labeled_element&) const = default;
    auto operator<=>(const labeled_element&) const = default;
};

// Total degree including the n-fold desuspension shift.
inline int element_degree(const labeled_element& el, const algebra_presentation& a) {
    int deg = el.tree.edge_count() - el.tree.levels();
    for (int label : el.labels) deg += a.degree(label);
    return deg;
}

using bar_combination = std::map<labeled_element, rational>;

inline void combination_add(bar_combination& acc, const labeled_element& el,
                            const rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = acc.try_emplace(el, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) acc.erase(it);
    }
}

// Interleavings of two words with the graded shuffle sign: a factor
// (-1)^{(|u_i|+1)(|v_j|+1)} for every v_j placed before a remaining u_i,
// where the +1s are the suspensions.
template <class Item>
std::vector<std::pair<std::vector<Item>, int>> shuffle_interleavings(
    const std::vector<Item>& u, const std::vector<int>& u_degrees, const std::vector<Item>& v,
    const std::vector<int>& v_degrees) {
    std::vector<std::pair<std::vector<Item>, int>> out;
    std::vector<Item> current;
    current.reserve(u.size() + v.size());

    int u_susp_total = 0;
    for (int d : u_degrees) u_susp_total += d + 1;

    auto rec = [&](auto&& self, std::size_t i, std::size_t j, int remaining_u_susp,
                   int sign) -> void {
        if (i == u.size() && j == v.size()) {
            out.push_back({current, sign});
            return;
        }
        if (i < u.size()) {
            current.push_back(u[i]);
            self(self, i + 1, j, remaining_u_susp - (u_degrees[i] + 1), sign);
            current.pop_back();
        }
        if (j < v.size()) {
            int flip = ((v_degrees[j] + 1) * remaining_u_susp) & 1;
            current.push_back(v[j]);
            self(self, i, j + 1, remaining_u_susp, flip ? -sign : sign);
            current.pop_back();
        }
    };
    rec(rec, 0, 0, u_susp_total, 1);
    return out;
}

namespace detail {

// Nested word form of a labeled tree: internal nodes are words of suspended
// factors, leaves carry algebra labels. degree excludes the node's own
// suspension.
struct bar_node {
    std::vector<bar_node> kids;
    int label = -1;
    int degree = 0;
};

inline bar_node make_leaf(int label, const algebra_presentation& a) {
    return {{}, label, a.degree(label)};
}

inline bar_node make_internal(std::vector<bar_node> kids) {
    int deg = 0;
    for (const auto& k : kids) deg += k.degree + 1;
    return {std::move(kids), -1, deg};
}

inline bar_node to_nested(const level_tree& t, const std::vector<int>& labels,
                          const algebra_presentation& a) {
    if (t.levels() == 1) {
        std::vector<bar_node> kids;
        kids.reserve(labels.size());
        for (int l : labels) kids.push_back(make_leaf(l, a));
        return make_internal(std::move(kids));
    }
    auto subtrees = t.root_subtrees();
    auto counts = t.subtree_leaf_counts();
    std::vector<bar_node> kids;
    kids.reserve(subtrees.size());
    int at = 0;
    for (std::size_t j = 0; j < subtrees.size(); ++j) {
        std::vector<int> slice(labels.begin() + at, labels.begin() + at + counts[j]);
        at += counts[j];
        kids.push_back(to_nested(subtrees[j], slice, a));
    }
    return make_internal(std::move(kids));
}

inline void collect_fibers(const bar_node& node, int depth, int n,
                           std::vector<std::vector<int>>& fibers, std::vector<int>& labels) {
    fibers[depth].push_back(static_cast<int>(node.kids.size()));
    for (const auto& kid : node.kids) {
        if (depth + 1 < n)
            collect_fibers(kid, depth + 1, n, fibers, labels);
        else
            labels.push_back(kid.label);
    }
}

inline labeled_element from_nested(const bar_node& root, int n) {
    std::vector<std::vector<int>> fibers(n);
    std::vector<int> labels;
    collect_fibers(root, 0, n, fibers, labels);
    return {level_tree(std::move(fibers)), std::move(labels)};
}

// Differential of the word at `node`, viewed in B^m(A): suspended internal
// differentials of the factors plus merges of adjacent factors, where a merge
// multiplies in A at the innermost level and shuffles the child words above.
inline std::vector<std::pair<bar_node, rational>> diff_node(const bar_node& node, int m,
                                                            const algebra_presentation& a) {
    std::vector<std::pair<bar_node, rational>> out;
    const auto& kids = node.kids;
    const int k = static_cast<int>(kids.size());

    int susp_before = 0;  // parity of sum of suspended degrees of earlier factors
    for (int j = 0; j < k; ++j) {
        std::vector<std::pair<bar_node, rational>> inner;
        if (m == 1) {
            for (const auto& [lbl, c] : a.d_of(kids[j].label))
                inner.push_back({make_leaf(lbl, a), c});
        } else {
            inner = diff_node(kids[j], m - 1, a);
        }
        // d(s x) = -s(d x), after crossing the earlier suspended factors
        const bool flip = (susp_before + 1) & 1;
        for (auto& [replacement, c] : inner) {
            auto new_kids = kids;
            new_kids[j] = std::move(replacement);
            out.push_back({make_internal(std::move(new_kids)), flip ? -c : c});
        }
        susp_before += kids[j].degree + 1;
    }

    int prefix = 0;  // |x_1| + ... + |x_i| for the merge sign
    for (int i = 1; i < k; ++i) {
        prefix += kids[i - 1].degree;
        const bool flip = (i + prefix) & 1;
        if (m == 1) {
            for (const auto& [lbl, c] : a.product_of(kids[i - 1].label, kids[i].label)) {
                auto new_kids = kids;
                new_kids[i - 1] = make_leaf(lbl, a);
                new_kids.erase(new_kids.begin() + i);
                out.push_back({make_internal(std::move(new_kids)), flip ? -c : c});
            }
        } else {
            std::vector<int> left_degs, right_degs;
            for (const auto& g : kids[i - 1].kids) left_degs.push_back(g.degree);
            for (const auto& g : kids[i].kids) right_degs.push_back(g.degree);
            for (auto& [word, sign] :
                 shuffle_interleavings(kids[i - 1].kids, left_degs, kids[i].kids, right_degs)) {
                auto new_kids = kids;
                new_kids[i - 1] = make_internal(std::move(word));
                new_kids.erase(new_kids.begin() + i);
                rational c = (flip ? -1 : 1) * sign;
                out.push_back({make_internal(std::move(new_kids)), c});
            }
        }
    }
    return out;
}

}  // namespace detail

// Untwisted differential of a single basis element of Sigma^{-n} B^n(A).
inline bar_combination bar_diff(const labeled_element& el, const algebra_presentation& a) {
    const int n = el.tree.levels();
    auto nested = detail::to_nested(el.tree, el.labels, a);
    bar_combination out;
    for (const auto& [node, c] : detail::diff_node(nested, n, a))
        combination_add(out, detail::from_nested(node, n), c);
    return out;
}

inline constexpr std::size_t kDefaultBasisBound = 200000;

// All basis elements of Sigma^{-n} B^n(A) of the given total degree, ordered
// by leaf count, then canonical tree order, then lexicographic labels.
inline std::vector<labeled_element> enumerate_basis(const algebra_presentation& a, int n, int d,
                                                    std::size_t max_elements = kDefaultBasisBound) {
    std::vector<labeled_element> out;
    if (n < 1) throw validation_error("enumerate_basis needs n >= 1");
    if (d < 0) return out;
    for (int r = 1; r <= d + 1; ++r) {
        for (const auto& t : enumerate_trees(n, r)) {
            const int budget = d + n - t.edge_count();
            if (budget < 0) continue;
            std::vector<int> labels(r);
            auto rec = [&](auto&& self, int leaf, int remaining) -> void {
                if (leaf == r) {
                    if (remaining == 0) {
                        out.push_back({t, labels});
                        if (out.size() > max_elements)
                            throw resource_error(
                                "bar basis exceeds the configured bound of " +
                                std::to_string(max_elements) +
                                " elements (see ENH_MAX_BASIS)");
                    }
                    return;
                }
                for (int lbl = 0; lbl < a.dim(); ++lbl) {
                    if (a.degree(lbl) > remaining) continue;
                    labels[leaf] = lbl;
                    self(self, leaf + 1, remaining - a.degree(lbl));
                }
            };
            rec(rec, 0, budget);
        }
    }
    return out;
}

// Matrix of the untwisted bar differential from degree d to degree d-1, both
// bases in canonical order.
inline sparse_matrix<rational> bar_differential_matrix(
    const algebra_presentation& a, int d, const std::vector<labeled_element>& basis_d,
    const std::vector<labeled_element>& basis_below) {
    std::map<labeled_element, int> index;
    for (std::size_t i = 0; i < basis_below.size(); ++i)
        index.emplace(basis_below[i], static_cast<int>(i));
    sparse_matrix<rational> m(static_cast<int>(basis_below.size()),
                              static_cast<int>(basis_d.size()));
    for (std::size_t col = 0; col < basis_d.size(); ++col) {
        for (const auto& [el, c] : bar_diff(basis_d[col], a)) {
            auto it = index.find(el);
            if (it == index.end())
                throw internal_invariant_error(
                    "bar differential left the enumerated basis in degree " +
                    std::to_string(d - 1));
            m.add_entry(it->second, static_cast<int>(col), c);
        }
    }
    return m;
}

}  // namespace enh
