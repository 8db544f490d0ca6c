#include <catch2/catch_amalgamated.hpp>

#include "enh/bar_complex.hpp"

using namespace enh;

namespace {

// Independent classical reduced bar complex on plain words, for the n = 1
// cross-check. No code shared with the tree-based implementation.
struct word_bar_oracle {
    const algebra_presentation& a;

    int degree(const std::vector<int>& w) const {
        int d = static_cast<int>(w.size()) - 1;
        for (int l : w) d += a.degree(l);
        return d;
    }

    std::vector<std::vector<int>> basis(int d) const {
        std::vector<std::vector<int>> out;
        std::vector<int> w;
        auto rec = [&](auto&& self, int remaining_deg) -> void {
            if (!w.empty() && remaining_deg == static_cast<int>(w.size()) - 1) out.push_back(w);
            if (static_cast<int>(w.size()) - 1 >= remaining_deg) return;
            for (int l = 0; l < a.dim(); ++l) {
                w.push_back(l);
                self(self, remaining_deg);
                w.pop_back();
            }
        };
        // enumerate words of length <= d+1 and keep those of the right degree,
        // then sort for a deterministic order
        std::vector<int> stack;
        auto gen = [&](auto&& self, std::vector<int>& cur) -> void {
            if (!cur.empty() && degree(cur) == d) out.push_back(cur);
            if (static_cast<int>(cur.size()) > d + 1) return;
            for (int l = 0; l < a.dim(); ++l) {
                cur.push_back(l);
                self(self, cur);
                cur.pop_back();
            }
        };
        std::vector<int> cur;
        gen(gen, cur);
        std::sort(out.begin(), out.end());
        (void)rec;
        return out;
    }

    std::map<std::vector<int>, rational> diff(const std::vector<int>& w) const {
        std::map<std::vector<int>, rational> out;
        auto add = [&](const std::vector<int>& key, const rational& c) {
            if (c == 0) return;
            out[key] += c;
            if (out[key] == 0) out.erase(key);
        };
        int susp = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (const auto& [l, c] : a.d_of(w[i])) {
                auto w2 = w;
                w2[i] = l;
                add(w2, ((susp + 1) & 1) ? -c : c);
            }
            susp += a.degree(w[i]) + 1;
        }
        int prefix = 0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            prefix += a.degree(w[i]);
            const int sign_exp = static_cast<int>(i + 1) + prefix;
            for (const auto& [l, c] : a.product_of(w[i], w[i + 1])) {
                auto w2 = w;
                w2[i] = l;
                w2.erase(w2.begin() + i + 1);
                add(w2, (sign_exp & 1) ? -c : c);
            }
        }
        return out;
    }
};

algebra_presentation koszul_algebra() {
    algebra_presentation a;
    a.name = "koszul";
    a.basis.names = {"e", "x", "x2", "ex", "ex2"};
    a.basis.degrees = {1, 0, 0, 1, 1};
    a.product.assign(5, std::vector<lincomb>(5));
    a.differential.assign(5, {});
    auto set = [&](const char* l, const char* r, const char* out) {
        int i = a.basis.index_of(l), j = a.basis.index_of(r), k = a.basis.index_of(out);
        a.product[i][j] = {{k, 1}};
    };
    set("e", "x", "ex");
    set("x", "e", "ex");
    set("e", "x2", "ex2");
    set("x2", "e", "ex2");
    set("x", "x", "x2");
    set("x", "ex", "ex2");
    set("ex", "x", "ex2");
    a.differential[0] = {{1, 1}};
    a.differential[3] = {{2, 1}};
    validate_algebra(a, ring_spec::rationals());
    return a;
}

}  // namespace

TEST_CASE("basis enumeration for the one-generator trivial algebra") {
    auto a = trivial_algebra(1, {0});
    for (int d = 0; d <= 6; ++d) {
        auto basis = enumerate_basis(a, 1, d);
        REQUIRE(basis.size() == 1);  // the word of length d+1
        CHECK(basis[0].tree.leaf_count() == d + 1);
        CHECK(element_degree(basis[0], a) == d);
    }
    CHECK(enumerate_basis(a, 1, -1).empty());
    CHECK(enumerate_basis(a, 2, -3).empty());
}

TEST_CASE("basis sizes match tree counts times label assignments") {
    auto count_direct = [](const algebra_presentation& a, int n, int d) {
        std::size_t total = 0;
        for (int r = 1; r <= d + 1; ++r)
            for (const auto& t : enumerate_trees(n, r)) {
                int budget = d + n - t.edge_count();
                if (budget < 0) continue;
                // count label tuples of total degree = budget
                std::vector<std::size_t> ways{1};  // ways[deg]
                std::vector<std::size_t> acc(budget + 1, 0);
                std::vector<std::size_t> cur(budget + 1, 0);
                cur[0] = 1;
                for (int leaf = 0; leaf < r; ++leaf) {
                    std::fill(acc.begin(), acc.end(), 0);
                    for (int deg = 0; deg <= budget; ++deg) {
                        if (!cur[deg]) continue;
                        for (int l = 0; l < a.dim(); ++l)
                            if (deg + a.degree(l) <= budget)
                                acc[deg + a.degree(l)] += cur[deg];
                    }
                    std::swap(cur, acc);
                }
                total += cur[budget];
            }
        return total;
    };

    auto trunc = truncated_polynomial(3);
    algebra_presentation mixed = trivial_algebra(2, {0, 1});
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 4; ++d) {
            CHECK(enumerate_basis(trunc, n, d).size() == count_direct(trunc, n, d));
            CHECK(enumerate_basis(mixed, n, d).size() == count_direct(mixed, n, d));
        }
}

TEST_CASE("two-level basis counts for the trivial algebra follow tree counts") {
    auto a = trivial_algebra(1, {0});
    for (int d = 0; d <= 6; ++d) {
        std::size_t expected = 0;
        for (int r = 1; r <= d + 1; ++r)
            for (const auto& t : enumerate_trees(2, r))
                if (t.edge_count() == d + 2) ++expected;
        CHECK(enumerate_basis(a, 2, d).size() == expected);
    }
}

TEST_CASE("basis bound raises a resource error") {
    auto a = truncated_polynomial(3);
    CHECK_THROWS_AS(enumerate_basis(a, 2, 6, 5), resource_error);
}

TEST_CASE("shuffle interleavings with graded signs") {
    std::vector<char> u{'x'}, v{'y'};

    // |x| = |y| = 0: suspended degrees odd, single swap picks up -1
    auto sh = shuffle_interleavings(u, {0}, v, {0});
    REQUIRE(sh.size() == 2);
    CHECK(sh[0].first == std::vector<char>{'x', 'y'});
    CHECK(sh[0].second == 1);
    CHECK(sh[1].first == std::vector<char>{'y', 'x'});
    CHECK(sh[1].second == -1);

    // |x| = 1, |y| = 0: (1+1)(0+1) even, both orders positive
    auto sh2 = shuffle_interleavings(u, {1}, v, {0});
    REQUIRE(sh2.size() == 2);
    CHECK(sh2[1].second == 1);

    // (a,b) shuffled with (c): three interleavings
    std::vector<char> ab{'a', 'b'}, c{'c'};
    auto sh3 = shuffle_interleavings(ab, {0, 0}, c, {0});
    CHECK(sh3.size() == 3);
}

TEST_CASE("one-level differential of the truncated polynomial ideal") {
    auto a = truncated_polynomial(3);
    // degree 1 basis: (x,x), (x,x2), (x2,x), (x2,x2) as words; (x,x) -> -x2
    auto b1 = enumerate_basis(a, 1, 1);
    auto b0 = enumerate_basis(a, 1, 0);
    REQUIRE(b0.size() == 2);
    auto m = bar_differential_matrix(a, 1, b1, b0);
    labeled_element xx{level_tree::parse("[2]"), {0, 0}};
    labeled_element x2{level_tree::parse("[1]"), {1}};
    int col = -1, row = -1;
    for (std::size_t i = 0; i < b1.size(); ++i)
        if (b1[i] == xx) col = static_cast<int>(i);
    for (std::size_t i = 0; i < b0.size(); ++i)
        if (b0[i] == x2) row = static_cast<int>(i);
    REQUIRE(col >= 0);
    REQUIRE(row >= 0);
    CHECK(m.entry(row, col) == rational(-1));
}

TEST_CASE("one-level differential of a zero-multiplication algebra vanishes") {
    auto a = trivial_algebra(2, {0, 1});
    for (int d = 0; d <= 4; ++d) {
        auto bd = enumerate_basis(a, 1, d);
        auto below = enumerate_basis(a, 1, d - 1);
        CHECK(bar_differential_matrix(a, d, bd, below).is_zero());
    }
}

TEST_CASE("iterated differential carries shuffle merge terms") {
    // with zero multiplication the level-n merges vanish but the level-one
    // shuffle merges do not: sh(x(x,x), x(x)) hits x(x,x,x) with coefficient 1
    auto a = trivial_algebra(1, {0});
    auto b2 = enumerate_basis(a, 2, 2);
    auto b1 = enumerate_basis(a, 2, 1);
    auto m = bar_differential_matrix(a, 2, b2, b1);
    CHECK_FALSE(m.is_zero());

    labeled_element src{level_tree::parse("[2];[2,1]"), {0, 0, 0}};
    labeled_element dst{level_tree::parse("[1];[3]"), {0, 0, 0}};
    int col = -1, row = -1;
    for (std::size_t i = 0; i < b2.size(); ++i)
        if (b2[i] == src) col = static_cast<int>(i);
    for (std::size_t i = 0; i < b1.size(); ++i)
        if (b1[i] == dst) row = static_cast<int>(i);
    REQUIRE(col >= 0);
    REQUIRE(row >= 0);
    // three (2,1)-shuffles of odd-degree letters: 1 - 1 + 1
    CHECK(m.entry(row, col) == rational(1));
}

TEST_CASE("differential drops total degree by exactly one") {
    auto a = koszul_algebra();
    for (int n = 1; n <= 2; ++n)
        for (int d = 0; d <= 3; ++d)
            for (const auto& el : enumerate_basis(a, n, d))
                for (const auto& [out, c] : bar_diff(el, a)) {
                    CHECK(element_degree(out, a) == d - 1);
                    CHECK(out.tree.levels() == n);
                }
}

TEST_CASE("d squared vanishes on small sweeps") {
    std::vector<algebra_presentation> algebras = {
        truncated_polynomial(3), truncated_polynomial(4), exterior_generator(1),
        trivial_algebra(2, {0, 1}), koszul_algebra()};
    for (const auto& a : algebras)
        for (int n = 1; n <= 3; ++n) {
            const int dmax = n == 3 ? 4 : 5;
            std::vector<std::vector<labeled_element>> bases(dmax + 2);
            for (int d = 0; d <= dmax + 1; ++d) bases[d] = enumerate_basis(a, n, d);
            sparse_matrix<rational> prev;  // D_d : C_d -> C_{d-1}
            for (int d = 1; d <= dmax + 1; ++d) {
                auto cur = bar_differential_matrix(a, d, bases[d], bases[d - 1]);
                if (d >= 2) {
                    auto comp = prev.multiply(cur);
                    INFO("algebra " << a.name << " n=" << n << " degree " << d);
                    CHECK(comp.is_zero());
                }
                prev = std::move(cur);
            }
        }
}

TEST_CASE("one-level matrices match the classical word bar complex") {
    for (const auto& a : {truncated_polynomial(4), koszul_algebra()}) {
        word_bar_oracle oracle{a};
        for (int d = 1; d <= 4; ++d) {
            auto tree_basis = enumerate_basis(a, 1, d);
            auto tree_below = enumerate_basis(a, 1, d - 1);
            auto words = oracle.basis(d);
            auto words_below = oracle.basis(d - 1);
            REQUIRE(words.size() == tree_basis.size());
            REQUIRE(words_below.size() == tree_below.size());

            auto m = bar_differential_matrix(a, d, tree_basis, tree_below);
            // match up elements: a 1-level element is its label word
            auto key_of = [](const labeled_element& el) { return el.labels; };
            std::map<std::vector<int>, int> word_index, below_index;
            for (std::size_t i = 0; i < words.size(); ++i) word_index[words[i]] = i;
            for (std::size_t i = 0; i < words_below.size(); ++i) below_index[words_below[i]] = i;

            for (std::size_t col = 0; col < tree_basis.size(); ++col) {
                auto expected = oracle.diff(key_of(tree_basis[col]));
                std::map<std::vector<int>, rational> got;
                for (int row = 0; row < m.rows(); ++row) {
                    rational v = m.entry(row, static_cast<int>(col));
                    if (v != 0) got[key_of(tree_below[row])] = v;
                }
                CHECK(got == expected);
            }
        }
    }
}
