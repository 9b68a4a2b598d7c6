#include "icelab/cyclotomic.hpp"

#include <ostream>

namespace icelab {

Cyclotomic Cyclotomic::pow(long e) const {
    Cyclotomic base = *this;
    if (e < 0) {
        base = inverse();
        e = -e;
    }
    Cyclotomic acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string Cyclotomic::to_string() const {
    if (q_.is_zero()) return p_.to_string();
    std::string w = (q_ == Rational(1)) ? "w" : ((q_ == Rational(-1)) ? "-w" : q_.to_string() + "*w");
    if (p_.is_zero()) return w;
    if (q_.sign() > 0) return p_.to_string() + "+" + w;
    return p_.to_string() + w;  // negative q already carries its sign
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

} // namespace icelab
