#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace enh {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

struct schema_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// d^2 != 0 or a similar broken internal contract; never expected on valid input.
struct internal_invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Parses an exact scalar literal: an optionally signed integer or a
// fraction "p/q" with q > 0 after normalization.
inline rational parse_scalar(const std::string& text) {
    if (text.empty()) throw schema_error("empty scalar literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return rational(integer(text));
        integer num(text.substr(0, slash));
        integer den(text.substr(slash + 1));
        if (den == 0) throw schema_error("scalar literal with zero denominator: " + text);
        return rational(num, den);
    } catch (const std::runtime_error& e) {
        throw schema_error("bad scalar literal '" + text + "': " + e.what());
    }
}

inline std::string scalar_to_string(const rational& x) {
    const integer num = boost::multiprecision::numerator(x);
    const integer den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace enh
