#include <catch2/catch_amalgamated.hpp>

#include "enh/algebra_json.hpp"
#include "enh/graded_algebra.hpp"

using namespace enh;

namespace {

const ring_spec kQ = ring_spec::rationals();

}  // namespace

TEST_CASE("truncated polynomial ideal validates") {
    auto a = truncated_polynomial(3);
    REQUIRE(a.dim() == 2);
    CHECK(a.basis.names == std::vector<std::string>{"x", "x2"});
    CHECK(a.product_of(0, 0) == lincomb{{1, 1}});
    CHECK(a.product_of(0, 1).empty());
    CHECK(a.product_of(1, 1).empty());
    CHECK_NOTHROW(validate_algebra(a, kQ));
    CHECK_NOTHROW(validate_algebra(truncated_polynomial(4), kQ));
}

TEST_CASE("commutativity violations are rejected with the offending pair") {
    auto a = truncated_polynomial(3);
    a.product[0][1] = {{0, 1}};  // x*x2 = x but x2*x = 0
    try {
        validate_algebra(a, kQ);
        FAIL("expected rejection");
    } catch (const validation_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("commutativity") != std::string::npos);
        CHECK(msg.find("x2") != std::string::npos);
    }
}

TEST_CASE("degree additivity violations are rejected") {
    auto a = truncated_polynomial(3);
    a.basis.degrees[1] = 1;  // |x2| = 1 while x*x = x2
    CHECK_THROWS_AS(validate_algebra(a, kQ), validation_error);
}

TEST_CASE("associativity violations name the triple") {
    // a0*a0 = a1, a0*a1 = a1*a0 = a0: then (a0 a0) a1 = a1 a1 = 0 but a0 (a0 a1) = a1
    auto a = trivial_algebra(2, {0, 0});
    a.product[0][0] = {{1, 1}};
    a.product[0][1] = {{0, 1}};
    a.product[1][0] = {{0, 1}};
    try {
        validate_algebra(a, kQ);
        FAIL("expected rejection");
    } catch (const validation_error& e) {
        CHECK(std::string(e.what()).find("associativity") != std::string::npos);
    }
}

TEST_CASE("Leibniz violations are detected") {
    // p*p = p with q*p = p*q = 0 and d(q) = p: d(q p) = 0 but (dq) p = p
    algebra_presentation a;
    a.basis.names = {"p", "q"};
    a.basis.degrees = {0, 1};
    a.product.assign(2, std::vector<lincomb>(2));
    a.differential.assign(2, {});
    a.product[0][0] = {{0, 1}};
    a.differential[1] = {{0, 1}};
    try {
        validate_algebra(a, kQ);
        FAIL("expected rejection");
    } catch (const validation_error& e) {
        CHECK(std::string(e.what()).find("Leibniz") != std::string::npos);
    }
}

TEST_CASE("d^2 violations are detected") {
    auto a = trivial_algebra(3, {2, 1, 0});
    a.differential[0] = {{1, 1}};
    a.differential[1] = {{2, 1}};
    try {
        validate_algebra(a, kQ);
        FAIL("expected rejection");
    } catch (const validation_error& e) {
        CHECK(std::string(e.what()).find("d^2") != std::string::npos);
    }
}

TEST_CASE("a dg algebra with a genuine differential validates") {
    // ideal of exterior(e) tensor k[x]/(x^3) with d(e) = x, d(ex) = x2
    algebra_presentation a;
    a.name = "koszul";
    a.basis.names = {"e", "x", "x2", "ex", "ex2"};
    a.basis.degrees = {1, 0, 0, 1, 1};
    const int n = 5;
    a.product.assign(n, std::vector<lincomb>(n));
    a.differential.assign(n, {});
    auto set = [&](const char* l, const char* r, const char* out, int sign) {
        int i = a.basis.index_of(l), j = a.basis.index_of(r), k = a.basis.index_of(out);
        a.product[i][j] = {{k, sign}};
    };
    set("e", "x", "ex", 1);
    set("x", "e", "ex", 1);
    set("e", "x2", "ex2", 1);
    set("x2", "e", "ex2", 1);
    set("x", "x", "x2", 1);
    set("x", "ex", "ex2", 1);
    set("ex", "x", "ex2", 1);
    a.differential[a.basis.index_of("e")] = {{a.basis.index_of("x"), 1}};
    a.differential[a.basis.index_of("ex")] = {{a.basis.index_of("x2"), 1}};
    CHECK_NOTHROW(validate_algebra(a, kQ));
    CHECK_NOTHROW(validate_algebra(a, ring_spec::prime(3)));
}

TEST_CASE("trivial algebra and exterior generator") {
    auto a = trivial_algebra(1, {0});
    CHECK(a.dim() == 1);
    CHECK(a.product_of(0, 0).empty());
    CHECK_NOTHROW(validate_algebra(a, kQ));

    CHECK_NOTHROW(validate_algebra(exterior_generator(1), kQ));
    CHECK_NOTHROW(validate_algebra(exterior_generator(2), kQ));
}

TEST_CASE("unital extension acts as A_+") {
    auto a = truncated_polynomial(3);
    auto m = unital_extension(a);
    REQUIRE(m.dim() == 3);
    CHECK_NOTHROW(validate_bimodule(m, a, kQ));
    // 1 . a = a
    CHECK(m.act_of(0, 0) == lincomb{{1, 1}});
    CHECK(m.act_of(1, 0) == lincomb{{2, 1}});
    // forgetting the unit recovers the action of A on itself
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            lincomb expect;
            for (const auto& [k, c] : a.product_of(i, j)) lincomb_add_term(expect, k + 1, c);
            CHECK(m.act_of(i, j + 1) == expect);
        }
}

TEST_CASE("trivial coefficients have zero action") {
    auto a = truncated_polynomial(3);
    auto m = trivial_coefficients(a);
    CHECK_NOTHROW(validate_bimodule(m, a, kQ));
    for (int i = 0; i < a.dim(); ++i) CHECK(m.act_of(i, 0).empty());
}

TEST_CASE("non-associative actions are rejected with the triple") {
    auto a = truncated_polynomial(3);
    auto m = unital_extension(a);
    m.left_action[0][1] = {{0, 1}};  // x . x = 1 instead of x2
    try {
        validate_bimodule(m, a, kQ);
        FAIL("expected rejection");
    } catch (const validation_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("associativity") != std::string::npos);
        CHECK(msg.find("x") != std::string::npos);
    }
}

TEST_CASE("derived right action satisfies m.(ab) = (m.a).b with Koszul signs") {
    auto check_algebra = [](const algebra_presentation& a) {
        auto m = unital_extension(a);
        validate_bimodule(m, a, ring_spec::rationals());
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j)
                for (int k = 0; k < m.dim(); ++k) {
                    // m.(ab)
                    lincomb lhs;
                    for (const auto& [p, c] : a.product_of(i, j)) {
                        lincomb t = m.right_act(k, p, a.degree(p));
                        lincomb_add(lhs, t, c);
                    }
                    // (m.a).b
                    lincomb rhs;
                    for (const auto& [q, c] : m.right_act(k, i, a.degree(i))) {
                        lincomb t = m.right_act(q, j, a.degree(j));
                        lincomb_add(rhs, t, c);
                    }
                    CHECK(lhs == rhs);
                }
    };
    check_algebra(truncated_polynomial(3));
    check_algebra(exterior_generator(1));
}

TEST_CASE("JSON documents round trip through serialize, parse, validate") {
    auto a = truncated_polynomial(4);
    auto m = unital_extension(a);
    auto a2 = algebra_from_json(algebra_to_json(a));
    CHECK_NOTHROW(validate_algebra(a2, kQ));
    CHECK(a2.basis.names == a.basis.names);
    CHECK(a2.product == a.product);
    auto m2 = bimodule_from_json(bimodule_to_json(m, a), a2);
    CHECK_NOTHROW(validate_bimodule(m2, a2, kQ));
    CHECK(m2.left_action == m.left_action);
}

TEST_CASE("Koszul symmetry fills the missing product orientation") {
    json doc = {
        {"basis", json::array({{{"name", "u"}, {"degree", 1}}, {{"name", "v"}, {"degree", 1}},
                               {{"name", "w"}, {"degree", 2}}})},
        {"products", json::array({{{"left", "u"}, {"right", "v"},
                                   {"result", json::array({{{"basis", "w"}, {"coeff", "1"}}})}}})},
    };
    auto a = algebra_from_json(doc);
    CHECK(a.product_of(0, 1) == lincomb{{2, 1}});
    CHECK(a.product_of(1, 0) == lincomb{{2, -1}});  // odd*odd flips sign
    CHECK_NOTHROW(validate_algebra(a, kQ));
}

TEST_CASE("schema violations are reported") {
    CHECK_THROWS_AS(algebra_from_json(json::array()), schema_error);
    json no_basis = {{"products", json::array()}};
    CHECK_THROWS_AS(algebra_from_json(no_basis), schema_error);
    json bad_name = {
        {"basis", json::array({{{"name", "x"}, {"degree", 0}}})},
        {"products", json::array({{{"left", "y"}, {"right", "x"}, {"result", json::array()}}})}};
    CHECK_THROWS_AS(algebra_from_json(bad_name), schema_error);
    CHECK_THROWS_AS(parse_scalar("1/0"), schema_error);
    CHECK(parse_scalar("-3/6") == rational(-1, 2));
}

TEST_CASE("negative degrees are rejected") {
    auto a = trivial_algebra(1, {0});
    a.basis.degrees[0] = -1;
    CHECK_THROWS_AS(validate_algebra(a, kQ), validation_error);
}

TEST_CASE("axioms can hold mod p while failing over Q") {
    auto a = trivial_algebra(2, {0, 0});
    a.product[0][0] = {{1, 3}};  // a0*a0 = 3 a1
    a.product[0][1] = {{1, 3}};  // a0*a1 = 3 a1, a1*a0 = 0: commutative only mod 3
    CHECK_THROWS_AS(validate_algebra(a, kQ), validation_error);
    CHECK_NOTHROW(validate_algebra(a, ring_spec::prime(3)));
}
