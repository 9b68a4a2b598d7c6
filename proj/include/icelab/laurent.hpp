#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "icelab/cyclotomic.hpp"
#include "icelab/errors.hpp"
#include "icelab/rational.hpp"

namespace icelab {

// Multivariate Laurent polynomial over an exact field F.
//
// The variable universe is an ordered (sorted) list of names; every term
// stores one dense exponent vector of that length, exponents may be negative.
// Zero coefficients are never stored, so equality is structural.
template <class F>
class LaurentPoly {
public:
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, F>;

    LaurentPoly() = default;  // zero over the empty universe

    static LaurentPoly zero(std::vector<std::string> vars = {}) {
        LaurentPoly p;
        p.vars_ = sorted(std::move(vars));
        return p;
    }

    static LaurentPoly constant(F c, std::vector<std::string> vars = {}) {
        LaurentPoly p = zero(std::move(vars));
        if (!c.is_zero()) p.terms_.emplace(Exps(p.vars_.size(), 0), std::move(c));
        return p;
    }

    static LaurentPoly variable(const std::string& name, int exp = 1) {
        return monomial(F(1), {{name, exp}});
    }

    static LaurentPoly monomial(F c, const std::map<std::string, int>& pows) {
        std::vector<std::string> vars;
        vars.reserve(pows.size());
        for (const auto& [v, e] : pows) vars.push_back(v);
        LaurentPoly p = zero(std::move(vars));
        if (c.is_zero()) return p;
        Exps e(p.vars_.size(), 0);
        for (size_t i = 0; i < p.vars_.size(); ++i) e[i] = pows.at(p.vars_[i]);
        p.terms_.emplace(std::move(e), std::move(c));
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() != 1) return false;
        const Exps& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }
    // Constant term value (the coefficient of the all-zero exponent vector).
    F constant_value() const {
        Exps zero_e(vars_.size(), 0);
        auto it = terms_.find(zero_e);
        return it == terms_.end() ? F(0) : it->second;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        auto [x, y] = aligned(a, b);
        for (const auto& [e, c] : y.terms_) x.add_term(e, c);
        return x;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        auto [x, y] = aligned(a, b);
        for (const auto& [e, c] : y.terms_) x.add_term(e, -c);
        return x;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        auto [x, y] = aligned(a, b);
        LaurentPoly r = zero_like(x);
        Exps e(r.vars_.size());
        for (const auto& [ea, ca] : x.terms_) {
            for (const auto& [eb, cb] : y.terms_) {
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const F& c) const {
        LaurentPoly r = zero_like(*this);
        if (c.is_zero()) return r;
        for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        auto [x, y] = aligned(a, b);
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Inverse of a one-term polynomial.
    LaurentPoly monomial_inverse() const {
        if (terms_.size() != 1)
            throw ValidationError("monomial_inverse requires a single-term polynomial");
        const auto& [e, c] = *terms_.begin();
        LaurentPoly r = zero_like(*this);
        Exps ne(e.size());
        for (size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
        r.terms_.emplace(std::move(ne), c.inverse());
        return r;
    }

    // Evaluation homomorphism: replace `var` by an invertible monomial.
    LaurentPoly substitute(const std::string& var, const LaurentPoly& value) const {
        if (value.is_zero()) throw ZeroDivisionError("substitute: value is zero");
        if (value.terms_.size() != 1)
            throw ValidationError("substitute requires a one-term (monomial) value");
        int vi = var_index(var);
        if (vi < 0) throw ValidationError("substitute: unknown variable '" + var + "'");
        const auto& [me, mc] = *value.terms_.begin();
        if (mc.is_zero()) throw ZeroDivisionError("substitute: value is zero");

        std::vector<std::string> out_vars;
        for (const auto& v : vars_)
            if (v != var) out_vars.push_back(v);
        for (const auto& v : value.vars_) out_vars.push_back(v);
        LaurentPoly r = zero(std::move(out_vars));

        std::vector<int> self_map = index_map(vars_, r.vars_, var);
        std::vector<int> val_map = index_map(value.vars_, r.vars_, "");

        Exps ne(r.vars_.size());
        for (const auto& [e, c] : terms_) {
            std::fill(ne.begin(), ne.end(), 0);
            int k = 0;
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (static_cast<int>(i) == vi)
                    k = e[i];
                else
                    ne[self_map[i]] += e[i];
            }
            for (size_t i = 0; i < value.vars_.size(); ++i) ne[val_map[i]] += k * me[i];
            r.add_term(ne, c * pow_coef(mc, k));
        }
        return r;
    }

    // (even part, odd part) with respect to `var`; the parts sum to *this.
    std::pair<LaurentPoly, LaurentPoly> parity_split(const std::string& var) const {
        int vi = var_index(var);
        if (vi < 0) throw ValidationError("parity_split: unknown variable '" + var + "'");
        LaurentPoly even = zero_like(*this), odd = zero_like(*this);
        for (const auto& [e, c] : terms_)
            ((e[vi] % 2 == 0) ? even : odd).terms_.emplace(e, c);
        return {even, odd};
    }

    int max_degree(const std::string& var) const { return degree_bound(var, true); }
    int min_degree(const std::string& var) const { return degree_bound(var, false); }

    // Highest exponent of `var`; the polynomial must be nonzero.
    int half_width(const std::string& var) const { return max_degree(var); }

    bool is_centered(const std::string& var) const {
        return min_degree(var) == -max_degree(var);
    }

    // Restrict to terms whose exponent of `var` equals k, dropping var.
    LaurentPoly coefficient_of(const std::string& var, int k) const {
        int vi = var_index(var);
        if (vi < 0) throw ValidationError("coefficient_of: unknown variable '" + var + "'");
        std::vector<std::string> out_vars;
        for (const auto& v : vars_)
            if (v != var) out_vars.push_back(v);
        LaurentPoly r = zero(std::move(out_vars));
        for (const auto& [e, c] : terms_) {
            if (e[vi] != k) continue;
            Exps ne;
            ne.reserve(e.size() - 1);
            for (size_t i = 0; i < e.size(); ++i)
                if (static_cast<int>(i) != vi) ne.push_back(e[i]);
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    template <class G, class Fn>
    LaurentPoly<G> map_coefficients(Fn&& fn) const {
        LaurentPoly<G> r = LaurentPoly<G>::zero(vars_);
        for (const auto& [e, c] : terms_) {
            G g = fn(c);
            if (!g.is_zero()) r.mutable_terms().emplace(e, std::move(g));
        }
        return r;
    }

    std::string to_string() const;

    TermMap& mutable_terms() { return terms_; }

    void add_term(const Exps& e, F c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    static std::vector<std::string> sorted(std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }

    static LaurentPoly zero_like(const LaurentPoly& p) {
        LaurentPoly r;
        r.vars_ = p.vars_;
        return r;
    }

    int var_index(const std::string& var) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
        if (it == vars_.end() || *it != var) return -1;
        return static_cast<int>(it - vars_.begin());
    }

    static F pow_coef(const F& c, int k) { return c.pow(k); }

    // Maps indices of `from` into indices of `to`, skipping `except`.
    static std::vector<int> index_map(const std::vector<std::string>& from,
                                      const std::vector<std::string>& to,
                                      const std::string& except) {
        std::vector<int> m(from.size(), -1);
        for (size_t i = 0; i < from.size(); ++i) {
            if (from[i] == except) continue;
            auto it = std::lower_bound(to.begin(), to.end(), from[i]);
            m[i] = static_cast<int>(it - to.begin());
        }
        return m;
    }

    int degree_bound(const std::string& var, bool want_max) const {
        if (terms_.empty()) throw ValidationError("degree of the zero polynomial");
        int vi = var_index(var);
        if (vi < 0) throw ValidationError("degree: unknown variable '" + var + "'");
        bool first = true;
        int best = 0;
        for (const auto& [e, c] : terms_) {
            int d = e[vi];
            if (first || (want_max ? d > best : d < best)) best = d;
            first = false;
        }
        return best;
    }

    // Rewrites both polynomials over the union universe.
    static std::pair<LaurentPoly, LaurentPoly> aligned(const LaurentPoly& a,
                                                       const LaurentPoly& b) {
        if (a.vars_ == b.vars_) return {a, b};
        std::vector<std::string> u = a.vars_;
        u.insert(u.end(), b.vars_.begin(), b.vars_.end());
        u = sorted(std::move(u));
        return {a.reindexed(u), b.reindexed(u)};
    }

    LaurentPoly reindexed(const std::vector<std::string>& u) const {
        if (u == vars_) return *this;
        LaurentPoly r = zero(u);
        std::vector<int> m = index_map(vars_, r.vars_, "");
        for (const auto& [e, c] : terms_) {
            Exps ne(r.vars_.size(), 0);
            for (size_t i = 0; i < vars_.size(); ++i) ne[m[i]] = e[i];
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

// sigma(t) = t - 1/t for a one-term Laurent polynomial.
template <class F>
LaurentPoly<F> sigma_monomial(const LaurentPoly<F>& t) {
    return t - t.monomial_inverse();
}

// Canonical text form: terms sorted by exponent vector, '*' separated powers.
template <class F>
std::string LaurentPoly<F>::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        std::string coef = c.to_string();
        bool wrap = coef.find('+') != std::string::npos || coef.find('-', 1) != std::string::npos;
        out += wrap ? "(" + coef + ")" : coef;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            out += "*" + vars_[i];
            if (e[i] != 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

// Evaluation a -> w applied to every coefficient; `avar` leaves the universe.
inline LaurentPoly<Cyclotomic> evaluate_omega6(const LaurentPoly<Rational>& p,
                                               const std::string& avar = "a") {
    LaurentPoly<Cyclotomic> q =
        p.map_coefficients<Cyclotomic>([](const Rational& r) { return Cyclotomic(r); });
    bool has_a = std::find(p.vars().begin(), p.vars().end(), avar) != p.vars().end();
    if (!has_a) return q;
    return q.substitute(avar, LaurentPoly<Cyclotomic>::constant(Cyclotomic::omega()));
}

} // namespace icelab
