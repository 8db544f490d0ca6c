#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "enh/ring.hpp"

namespace enh {

// Formal k-linear combination of basis indices; sorted by index, no zeros.
using lincomb = std::vector<std::pair<int, rational>>;

inline void lincomb_add_term(lincomb& acc, int index, const rational& coeff) {
    if (coeff == 0) return;
    auto it = std::lower_bound(acc.begin(), acc.end(), index,
                               [](const auto& e, int i) { return e.first < i; });
    if (it != acc.end() && it->first == index) {
        it->second += coeff;
        if (it->second == 0) acc.erase(it);
    } else {
        acc.insert(it, {index, coeff});
    }
}

inline void lincomb_add(lincomb& acc, const lincomb& other, const rational& scale = 1) {
    for (const auto& [i, c] : other) lincomb_add_term(acc, i, c * scale);
}

struct graded_basis {
    std::vector<std::string> names;
    std::vector<int> degrees;

    int size() const { return static_cast<int>(names.size()); }

    int degree(int i) const { return degrees.at(i); }

    int index_of(const std::string& name) const {
        for (int i = 0; i < size(); ++i)
            if (names[i] == name) return i;
        throw schema_error("unknown basis name '" + name + "'");
    }

    void check() const {
        if (names.empty()) throw validation_error("basis must be nonempty");
        if (names.size() != degrees.size())
            throw validation_error("basis names/degrees length mismatch");
        auto sorted = names;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw validation_error("duplicate basis name");
        for (std::size_t i = 0; i < degrees.size(); ++i)
            if (degrees[i] < 0)
                throw validation_error("basis element '" + names[i] +
                                       "' has negative degree; degrees must be >= 0 so that "
                                       "bar bases stay finite per degree");
    }

    std::string format(const lincomb& c) const {
        if (c.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k) out += " + ";
            out += scalar_to_string(c[k].second) + "*" + names.at(c[k].first);
        }
        return out;
    }
};

// Nonunital graded-commutative differential graded algebra given by structure
// constants on a finite basis.
struct algebra_presentation {
    std::string name = "algebra";
    graded_basis basis;
    std::vector<std::vector<lincomb>> product;  // product[i][j]
    std::vector<lincomb> differential;          // differential[i], may be empty

    int dim() const { return basis.size(); }
    int degree(int i) const { return basis.degree(i); }

    bool has_differential() const {
        for (const auto& d : differential)
            if (!d.empty()) return true;
        return false;
    }

    const lincomb& product_of(int i, int j) const { return product.at(i).at(j); }
    const lincomb& d_of(int i) const { return differential.at(i); }

    lincomb multiply(const lincomb& a, const lincomb& b) const {
        lincomb out;
        for (const auto& [i, ci] : a)
            for (const auto& [j, cj] : b) lincomb_add(out, product_of(i, j), ci * cj);
        return out;
    }

    lincomb d(const lincomb& a) const {
        lincomb out;
        for (const auto& [i, c] : a) lincomb_add(out, d_of(i), c);
        return out;
    }
};

// Symmetric bimodule over an algebra_presentation; only the left action is
// stored, the right action is derived by the Koszul sign rule.
struct bimodule_presentation {
    std::string name = "module";
    graded_basis basis;
    std::vector<std::vector<lincomb>> left_action;  // left_action[algebra_i][module_j]
    std::vector<lincomb> differential;

    int dim() const { return basis.size(); }
    int degree(int j) const { return basis.degree(j); }

    bool has_differential() const {
        for (const auto& d : differential)
            if (!d.empty()) return true;
        return false;
    }

    const lincomb& act_of(int algebra_i, int module_j) const {
        return left_action.at(algebra_i).at(module_j);
    }

    lincomb act(int algebra_i, const lincomb& m) const {
        lincomb out;
        for (const auto& [j, c] : m) lincomb_add(out, act_of(algebra_i, j), c);
        return out;
    }

    // m . a = (-1)^{|a||m|} a . m
    lincomb right_act(int module_j, int algebra_i, int algebra_degree) const {
        lincomb out = act_of(algebra_i, module_j);
        if ((algebra_degree & 1) && (degree(module_j) & 1))
            for (auto& [k, c] : out) c = -c;
        return out;
    }

    const lincomb& d_of(int j) const { return differential.at(j); }

    lincomb d(const lincomb& m) const {
        lincomb out;
        for (const auto& [j, c] : m) lincomb_add(out, d_of(j), c);
        return out;
    }
};

namespace detail {

// Equality of rational combinations after mapping into the chosen ring; over
// F_p axioms may hold that fail over Q.
inline bool ring_equal(const lincomb& a, const lincomb& b, const ring_spec& ring) {
    lincomb diff = a;
    lincomb_add(diff, b, -1);
    if (ring.kind != ring_spec::kind_t::prime) return diff.empty();
    prime_field f(ring.p);
    for (const auto& [i, c] : diff)
        if (!f.is_zero(f.from_rational(c))) return false;
    return true;
}

inline void check_homogeneous(const graded_basis& basis, const lincomb& c, int expected_degree,
                              const std::string& what) {
    for (const auto& [i, coeff] : c)
        if (basis.degree(i) != expected_degree)
            throw validation_error(what + ": term " + basis.names.at(i) + " has degree " +
                                   std::to_string(basis.degree(i)) + ", expected " +
                                   std::to_string(expected_degree));
}

}  // namespace detail

// Exhaustive validation of all graded axioms on basis tuples. Throws
// validation_error naming the offending tuple and both evaluated sides.
inline void validate_algebra(const algebra_presentation& a, const ring_spec& ring) {
    a.basis.check();
    const int n = a.dim();
    if (static_cast<int>(a.product.size()) != n)
        throw validation_error("product table has wrong size");
    for (const auto& row : a.product)
        if (static_cast<int>(row.size()) != n)
            throw validation_error("product table has wrong size");
    if (static_cast<int>(a.differential.size()) != n)
        throw validation_error("differential table has wrong size");

    for (int i = 0; i < n; ++i) {
        detail::check_homogeneous(a.basis, a.d_of(i), a.degree(i) - 1,
                                  "differential of " + a.basis.names[i]);
        for (int j = 0; j < n; ++j)
            detail::check_homogeneous(a.basis, a.product_of(i, j), a.degree(i) + a.degree(j),
                                      "product " + a.basis.names[i] + "*" + a.basis.names[j]);
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            lincomb flipped = a.product_of(j, i);
            if ((a.degree(i) & 1) && (a.degree(j) & 1))
                for (auto& [k, c] : flipped) c = -c;
            if (!detail::ring_equal(a.product_of(i, j), flipped, ring))
                throw validation_error(
                    "graded commutativity fails on (" + a.basis.names[i] + ", " +
                    a.basis.names[j] + "): " + a.basis.format(a.product_of(i, j)) + " vs " +
                    a.basis.format(a.product_of(j, i)) + " with Koszul sign");
        }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                lincomb left = a.multiply(a.product_of(i, j), lincomb{{k, 1}});
                lincomb right = a.multiply(lincomb{{i, 1}}, a.product_of(j, k));
                if (!detail::ring_equal(left, right, ring))
                    throw validation_error("associativity fails on (" + a.basis.names[i] + ", " +
                                           a.basis.names[j] + ", " + a.basis.names[k] +
                                           "): " + a.basis.format(left) + " vs " +
                                           a.basis.format(right));
            }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            lincomb lhs = a.d(a.product_of(i, j));
            lincomb rhs = a.multiply(a.d_of(i), lincomb{{j, 1}});
            lincomb second = a.multiply(lincomb{{i, 1}}, a.d_of(j));
            lincomb_add(rhs, second, (a.degree(i) & 1) ? rational(-1) : rational(1));
            if (!detail::ring_equal(lhs, rhs, ring))
                throw validation_error("Leibniz fails on (" + a.basis.names[i] + ", " +
                                       a.basis.names[j] + "): " + a.basis.format(lhs) + " vs " +
                                       a.basis.format(rhs));
        }

    for (int i = 0; i < n; ++i) {
        lincomb dd = a.d(a.d_of(i));
        if (!detail::ring_equal(dd, {}, ring))
            throw validation_error("d^2 != 0 on " + a.basis.names[i] + ": " +
                                   a.basis.format(dd));
    }
}

inline void validate_bimodule(const bimodule_presentation& m, const algebra_presentation& a,
                              const ring_spec& ring) {
    m.basis.check();
    const int an = a.dim();
    const int mn = m.dim();
    if (static_cast<int>(m.left_action.size()) != an)
        throw validation_error("action table has wrong size");
    for (const auto& row : m.left_action)
        if (static_cast<int>(row.size()) != mn)
            throw validation_error("action table has wrong size");
    if (static_cast<int>(m.differential.size()) != mn)
        throw validation_error("module differential table has wrong size");

    for (int j = 0; j < mn; ++j)
        detail::check_homogeneous(m.basis, m.d_of(j), m.degree(j) - 1,
                                  "differential of " + m.basis.names[j]);
    for (int i = 0; i < an; ++i)
        for (int j = 0; j < mn; ++j)
            detail::check_homogeneous(m.basis, m.act_of(i, j), a.degree(i) + m.degree(j),
                                      "action " + a.basis.names[i] + "." + m.basis.names[j]);

    for (int i = 0; i < an; ++i)
        for (int j = 0; j < an; ++j)
            for (int k = 0; k < mn; ++k) {
                lincomb left;
                for (const auto& [p, c] : a.product_of(i, j))
                    lincomb_add(left, m.act_of(p, k), c);
                lincomb right = m.act(i, m.act_of(j, k));
                if (!detail::ring_equal(left, right, ring))
                    throw validation_error("action associativity fails on (" +
                                           a.basis.names[i] + ", " + a.basis.names[j] + ", " +
                                           m.basis.names[k] + "): " + m.basis.format(left) +
                                           " vs " + m.basis.format(right));
            }

    for (int i = 0; i < an; ++i)
        for (int k = 0; k < mn; ++k) {
            lincomb lhs = m.d(m.act_of(i, k));
            lincomb rhs;
            for (const auto& [p, c] : a.d_of(i)) lincomb_add(rhs, m.act_of(p, k), c);
            lincomb second = m.act(i, m.d_of(k));
            lincomb_add(rhs, second, (a.degree(i) & 1) ? rational(-1) : rational(1));
            if (!detail::ring_equal(lhs, rhs, ring))
                throw validation_error("action Leibniz fails on (" + a.basis.names[i] + ", " +
                                       m.basis.names[k] + "): " + m.basis.format(lhs) + " vs " +
                                       m.basis.format(rhs));
        }

    for (int k = 0; k < mn; ++k) {
        lincomb dd = m.d(m.d_of(k));
        if (!detail::ring_equal(dd, {}, ring))
            throw validation_error("module d^2 != 0 on " + m.basis.names[k] + ": " +
                                   m.basis.format(dd));
    }
}

// ---- built-in presentations ------------------------------------------------

inline algebra_presentation trivial_algebra(int generators, const std::vector<int>& degrees) {
    if (generators < 1 || static_cast<int>(degrees.size()) != generators)
        throw schema_error("trivial_algebra needs generators >= 1 matching degree list");
    algebra_presentation a;
    a.name = "trivial" + std::to_string(generators);
    for (int i = 0; i < generators; ++i) {
        a.basis.names.push_back("a" + std::to_string(i));
        a.basis.degrees.push_back(degrees[i]);
    }
    a.product.assign(generators, std::vector<lincomb>(generators));
    a.differential.assign(generators, {});
    return a;
}

// Augmentation ideal of k[x]/(x^N): basis x, x2, ..., x^{N-1}.
inline algebra_presentation truncated_polynomial(int truncation) {
    if (truncation < 2) throw schema_error("truncated_polynomial needs order >= 2");
    algebra_presentation a;
    a.name = "truncpoly" + std::to_string(truncation);
    const int n = truncation - 1;
    for (int i = 1; i <= n; ++i) {
        a.basis.names.push_back(i == 1 ? "x" : "x" + std::to_string(i));
        a.basis.degrees.push_back(0);
    }
    a.product.assign(n, std::vector<lincomb>(n));
    a.differential.assign(n, {});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i + j <= n) a.product[i - 1][j - 1] = {{i + j - 1, 1}};
    return a;
}

// Ideal of the free graded-commutative algebra on one generator e with
// e^2 = 0 (exterior when |e| is odd).
inline algebra_presentation exterior_generator(int degree) {
    algebra_presentation a;
    a.name = "exterior" + std::to_string(degree);
    a.basis.names = {"e"};
    a.basis.degrees = {degree};
    a.product.assign(1, std::vector<lincomb>(1));
    a.differential.assign(1, {});
    return a;
}

// A_+ as a symmetric bimodule over A: a unit adjoined in module degree 0.
inline bimodule_presentation unital_extension(const algebra_presentation& a) {
    bimodule_presentation m;
    m.name = a.name + "+";
    m.basis.names.push_back("one");
    m.basis.degrees.push_back(0);
    for (int i = 0; i < a.dim(); ++i) {
        m.basis.names.push_back(a.basis.names[i]);
        m.basis.degrees.push_back(a.degree(i));
    }
    m.left_action.assign(a.dim(), std::vector<lincomb>(a.dim() + 1));
    m.differential.assign(a.dim() + 1, {});
    for (int i = 0; i < a.dim(); ++i) {
        m.left_action[i][0] = {{i + 1, 1}};  // a . 1 = a
        for (int j = 0; j < a.dim(); ++j) {
            lincomb shifted;
            for (const auto& [k, c] : a.product_of(i, j)) lincomb_add_term(shifted, k + 1, c);
            m.left_action[i][j + 1] = std::move(shifted);
        }
    }
    for (int j = 0; j < a.dim(); ++j) {
        lincomb shifted;
        for (const auto& [k, c] : a.d_of(j)) lincomb_add_term(shifted, k + 1, c);
        m.differential[j + 1] = std::move(shifted);
    }
    return m;
}

inline bimodule_presentation trivial_coefficients(const algebra_presentation& a) {
    bimodule_presentation m;
    m.name = "trivial";
    m.basis.names = {"u"};
    m.basis.degrees = {0};
    m.left_action.assign(a.dim(), std::vector<lincomb>(1));
    m.differential.assign(1, {});
    return m;
}

}  // namespace enh
