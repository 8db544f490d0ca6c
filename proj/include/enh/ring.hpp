#pragma once

#include <cstdint>
#include <string>

#include "enh/scalar.hpp"

namespace enh {

// Exact arithmetic only; every coefficient type below is a field except
// integer_ring, which exists for Smith-normal-form based torsion computations.

struct rational_field {
    using scalar = rational;
    static constexpr bool is_field = true;

    static scalar zero() { return scalar(0); }
    static scalar one() { return scalar(1); }
    static bool is_zero(const scalar& a) { return a == 0; }
    static scalar add(const scalar& a, const scalar& b) { return a + b; }
    static scalar sub(const scalar& a, const scalar& b) { return a - b; }
    static scalar mul(const scalar& a, const scalar& b) { return a * b; }
    static scalar neg(const scalar& a) { return -a; }
    static scalar inv(const scalar& a) {
        if (a == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    static scalar from_rational(const rational& x) { return x; }
    static std::string to_string(const scalar& a) { return scalar_to_string(a); }
    std::string name() const { return "q"; }
};

// Residues are kept in [0, p) inside a machine word; p < 2^31 so products
// fit in int64 without overflow.
struct prime_field {
    using scalar = std::int64_t;
    static constexpr bool is_field = true;

    std::int64_t p;

    explicit prime_field(std::int64_t prime) : p(prime) {
        if (prime < 2 || prime >= (std::int64_t(1) << 31) || !is_prime(prime))
            throw validation_error("prime_field requires a prime 2 <= p < 2^31, got " +
                                   std::to_string(prime));
    }

    static bool is_prime(std::int64_t n) {
        if (n < 2) return false;
        for (std::int64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    scalar zero() const { return 0; }
    scalar one() const { return 1 % p; }
    bool is_zero(scalar a) const { return a == 0; }
    scalar add(scalar a, scalar b) const { return (a + b) % p; }
    scalar sub(scalar a, scalar b) const { return ((a - b) % p + p) % p; }
    scalar mul(scalar a, scalar b) const { return (a * b) % p; }
    scalar neg(scalar a) const { return a == 0 ? 0 : p - a; }

    scalar inv(scalar a) const {
        a %= p;
        if (a < 0) a += p;
        if (a == 0) throw std::domain_error("inverse of zero in F_p");
        // extended Euclid
        std::int64_t t = 0, new_t = 1, r = p, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += p;
        return t;
    }

    scalar from_integer(const integer& n) const {
        integer r = n % p;
        if (r < 0) r += p;
        return static_cast<scalar>(r);
    }

    scalar from_rational(const rational& x) const {
        scalar num = from_integer(boost::multiprecision::numerator(x));
        scalar den = from_integer(boost::multiprecision::denominator(x));
        if (den == 0)
            throw validation_error("denominator divisible by p = " + std::to_string(p));
        return mul(num, inv(den));
    }

    static std::string to_string(scalar a) { return std::to_string(a); }
    std::string name() const { return "f:" + std::to_string(p); }
};

struct integer_ring {
    using scalar = integer;
    static constexpr bool is_field = false;

    static scalar zero() { return scalar(0); }
    static scalar one() { return scalar(1); }
    static bool is_zero(const scalar& a) { return a == 0; }
    static scalar add(const scalar& a, const scalar& b) { return a + b; }
    static scalar sub(const scalar& a, const scalar& b) { return a - b; }
    static scalar mul(const scalar& a, const scalar& b) { return a * b; }
    static scalar neg(const scalar& a) { return -a; }
    static scalar from_rational(const rational& x) {
        if (boost::multiprecision::denominator(x) != 1)
            throw validation_error("non-integer coefficient " + scalar_to_string(x) +
                                   " over the integers");
        return boost::multiprecision::numerator(x);
    }
    static std::string to_string(const scalar& a) { return a.str(); }
    std::string name() const { return "z"; }
};

// Runtime ring descriptor, parsed from CLI flags ("q", "z", "f:P").
struct ring_spec {
    enum class kind_t { rationals, prime, integers };
    kind_t kind = kind_t::rationals;
    std::int64_t p = 0;

    static ring_spec rationals() { return {kind_t::rationals, 0}; }
    static ring_spec integers() { return {kind_t::integers, 0}; }
    static ring_spec prime(std::int64_t p) {
        prime_field check(p);  // validates
        return {kind_t::prime, p};
    }

    static ring_spec parse(const std::string& s) {
        if (s == "q" || s == "Q") return rationals();
        if (s == "z" || s == "Z") return integers();
        if (s.size() > 2 && (s[0] == 'f' || s[0] == 'F') && s[1] == ':') {
            try {
                return prime(std::stoll(s.substr(2)));
            } catch (const std::logic_error&) {
                throw schema_error("bad ring spec '" + s + "'");
            }
        }
        throw schema_error("bad ring spec '" + s + "' (expected q | z | f:P)");
    }

    bool is_field() const { return kind != kind_t::integers; }

    std::string name() const {
        switch (kind) {
            case kind_t::rationals: return "q";
            case kind_t::integers: return "z";
            case kind_t::prime: return "f:" + std::to_string(p);
        }
        return "?";
    }
};

// Dispatches f<Field>(field, args...) on the runtime ring choice. Integer mode
// is handled separately by callers that support it.
template <class Fn>
auto with_field(const ring_spec& ring, Fn&& f) {
    switch (ring.kind) {
        case ring_spec::kind_t::rationals: return f(rational_field{});
        case ring_spec::kind_t::prime: return f(prime_field{ring.p});
        default: throw validation_error("operation requires a field ring (q or f:P)");
    }
}

}  // namespace enh
