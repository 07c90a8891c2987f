#ifndef STRAT_RING_HPP
#define STRAT_RING_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace strat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Coefficient rings supported by the chain engine. All values are kept
// exact; Z2 values are normalized to {0, 1}.
enum class Ring { Z, Z2, Q };

inline std::string ring_name(Ring r) {
    switch (r) {
        case Ring::Z: return "z";
        case Ring::Z2: return "z2";
        case Ring::Q: return "q";
    }
    return "?";
}

inline Ring parse_ring(const std::string& s) {
    if (s == "z" || s == "Z") return Ring::Z;
    if (s == "z2" || s == "Z2") return Ring::Z2;
    if (s == "q" || s == "Q") return Ring::Q;
    throw std::invalid_argument("unknown ring: " + s);
}

// Reduce a value into canonical form for the ring. Throws if the value
// does not live in the ring (e.g. 1/2 over Z).
inline Rat ring_normalize(Ring r, const Rat& v) {
    switch (r) {
        case Ring::Q:
            return v;
        case Ring::Z:
            if (denominator(v) != 1)
                throw std::invalid_argument("value not an integer over Z");
            return v;
        case Ring::Z2: {
            if (denominator(v) % 2 == 0)
                throw std::invalid_argument("denominator even over Z2");
            Int n = numerator(v) % 2;
            if (n < 0) n += 2;
            return Rat(n);
        }
    }
    return v;
}

inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(num, den);
}

inline std::string rational_str(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace strat

#endif
