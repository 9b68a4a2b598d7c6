#include "icelab/rational.hpp"

#include <ostream>

namespace icelab {

Rational Rational::parse(const std::string& text) {
    auto bad = [&] { return ValidationError("cannot parse rational: '" + text + "'"); };
    if (text.empty()) throw bad();
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (num.empty() || den.empty()) throw bad();
    }
    auto digits_ok = [](const std::string& s, bool sign_ok) {
        size_t i = 0;
        if (sign_ok && (s[0] == '+' || s[0] == '-')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
    mpq_class q;
    if (q.set_str(num + "/" + den, 10) != 0) throw bad();
    if (q.get_den() == 0) throw ZeroDivisionError("rational with zero denominator");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : inverse();
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), k);
    return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace icelab
