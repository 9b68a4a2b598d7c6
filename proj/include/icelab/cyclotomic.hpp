#pragma once

#include <string>
#include <iosfwd>

#include "icelab/rational.hpp"

namespace icelab {

// Element p + q*w of Q(w), where w = exp(i*pi/3) satisfies w^2 = w - 1.
// The representation (p, q) is unique, so equality is componentwise.
class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(long n) : p_(n) {}  // NOLINT: implicit by design
    Cyclotomic(Rational p, Rational q = Rational()) : p_(std::move(p)), q_(std::move(q)) {}

    static Cyclotomic omega() { return Cyclotomic(Rational(0), Rational(1)); }

    const Rational& rat_part() const { return p_; }
    const Rational& omega_part() const { return q_; }

    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
    bool is_one() const { return p_.is_one() && q_.is_zero(); }

    Cyclotomic operator-() const { return Cyclotomic(-p_, -q_); }
    Cyclotomic& operator+=(const Cyclotomic& o) { p_ += o.p_; q_ += o.q_; return *this; }
    Cyclotomic& operator-=(const Cyclotomic& o) { p_ -= o.p_; q_ -= o.q_; return *this; }

    // (p + q w)(r + s w) = pr - qs + (ps + qr + qs) w, using w^2 = w - 1.
    Cyclotomic& operator*=(const Cyclotomic& o) {
        Rational r = p_ * o.p_ - q_ * o.q_;
        Rational s = p_ * o.q_ + q_ * o.p_ + q_ * o.q_;
        p_ = std::move(r);
        q_ = std::move(s);
        return *this;
    }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // 1/(p + q w) = ((p + q) - q w) / (p^2 + pq + q^2).
    Cyclotomic inverse() const {
        Rational norm = p_ * p_ + p_ * q_ + q_ * q_;
        if (norm.is_zero()) throw ZeroDivisionError("inverse of zero in Q(w)");
        Rational ninv = norm.inverse();
        return Cyclotomic((p_ + q_) * ninv, -q_ * ninv);
    }

    Cyclotomic pow(long e) const;

    std::string to_string() const;

private:
    Rational p_, q_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

// sigma(u) = u - 1/u, defined for any invertible field element.
template <typename F>
F sigma(const F& u) {
    return u - u.inverse();
}

} // namespace icelab
