#ifndef GSYM_RATIONAL_HPP
#define GSYM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace gsym {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct schema_error : error {
    using error::error;
};

// Parses "num" or "num/den"; den must be nonzero. No whitespace, no decimals.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw schema_error("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw schema_error("bad rational literal: " + s);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw schema_error("zero denominator: " + s);
        return Rat(num, den);
    } catch (const schema_error&) {
        throw;
    } catch (const std::exception&) {
        throw schema_error("bad rational literal: " + s);
    }
}

// Canonical form: "num" when den == 1, else "num/den", den > 0.
inline std::string format_rational(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace gsym

#endif
