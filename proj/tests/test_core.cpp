#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "icelab/checks.hpp"
#include "icelab/laurent.hpp"

using namespace icelab;

using PolyR = LaurentPoly<Rational>;
using PolyC = LaurentPoly<Cyclotomic>;

namespace {

Cyclotomic w() { return Cyclotomic::omega(); }

PolyR rvar(const std::string& n, int e = 1) { return PolyR::variable(n, e); }

// Small random polynomial over up to two variables.
template <class F, class Coef>
LaurentPoly<F> random_poly(Rng& rng, Coef&& coef) {
    LaurentPoly<F> p = LaurentPoly<F>::zero({"x", "y"});
    int terms = rng.uniform(0, 4);
    for (int t = 0; t < terms; ++t) {
        p += LaurentPoly<F>::monomial(coef(),
                                      {{"x", rng.uniform(-3, 3)}, {"y", rng.uniform(-3, 3)}});
    }
    return p;
}

} // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(3, 7).to_string() == "3/7");
    CHECK(Rational(-14, 7).to_string() == "-2");
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK_THROWS_AS(Rational::parse("x"), ValidationError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ZeroDivisionError);
    CHECK_THROWS_AS(Rational(1, 0), ZeroDivisionError);
    CHECK_THROWS_AS(Rational(0).inverse(), ZeroDivisionError);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("cyclotomic defining relation and arithmetic") {
    // w^2 = w - 1, exactly.
    CHECK(w() * w() == w() - Cyclotomic(1));
    CHECK(w() * w() - w() + Cyclotomic(1) == Cyclotomic(0));
    // w * (1 - w) = 1, so the inverse of w is 1 - w.
    CHECK(w() * (Cyclotomic(1) - w()) == Cyclotomic(1));
    CHECK(w().inverse() == Cyclotomic(1) - w());
    // (2w - 1)^2 = -3.
    Cyclotomic s = Cyclotomic(Rational(-1), Rational(2));
    CHECK(s * s == Cyclotomic(-3));
    CHECK(s == sigma(w()));
    CHECK_THROWS_AS(Cyclotomic(0).inverse(), ZeroDivisionError);
    CHECK((w() / w()) == Cyclotomic(1));
    CHECK(w().pow(6) == Cyclotomic(1));
    CHECK(w().pow(3) == Cyclotomic(-1));
    CHECK(w().pow(-1) == w().inverse());
}

TEST_CASE("sigma on field elements") {
    CHECK(sigma(Rational(1)) == Rational(0));
    CHECK(sigma(w()) == Cyclotomic(Rational(-1), Rational(2)));
    // sigma(w^2) = sigma(w).
    CHECK(sigma(w() * w()) - sigma(w()) == Cyclotomic(0));
    CHECK_THROWS_AS(sigma(Rational(0)), ZeroDivisionError);
}

TEST_CASE("field axioms on random elements") {
    Rng rng(2024);
    for (int t = 0; t < 1000; ++t) {
        Rational a = rng.small_rational(), b = rng.small_rational(), c = rng.small_rational();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * a.inverse() == Rational(1));
        Cyclotomic u(a, b), v(b, c), z(c, a);
        CHECK(u * (v + z) == u * v + u * z);
        CHECK((u * v) * z == u * (v * z));
        if (!u.is_zero()) CHECK(u * u.inverse() == Cyclotomic(1));
    }
}

TEST_CASE("laurent polynomial arithmetic") {
    PolyR f = rvar("x") + rvar("y", -2);
    CHECK((f + (-f)).is_zero());
    // (x/y) * (y/x) = 1.
    PolyR m1 = PolyR::monomial(Rational(1), {{"x", 1}, {"y", -1}});
    PolyR m2 = PolyR::monomial(Rational(1), {{"x", -1}, {"y", 1}});
    CHECK(m1 * m2 == PolyR::constant(Rational(1)));
    // sigma(a x) * sigma(a/x) = a^2 + a^-2 - x^2 - x^-2.
    PolyR lhs = sigma_monomial(PolyR::monomial(Rational(1), {{"a", 1}, {"x", 1}})) *
                sigma_monomial(PolyR::monomial(Rational(1), {{"a", 1}, {"x", -1}}));
    PolyR rhs = rvar("a", 2) + rvar("a", -2) - rvar("x", 2) - rvar("x", -2);
    CHECK(lhs == rhs);
}

TEST_CASE("substitution") {
    PolyR f = rvar("x") + rvar("x", -1);
    CHECK(f.substitute("x", PolyR::constant(Rational(1))) == PolyR::constant(Rational(2)));
    // sigma(a x / y) vanishes at x = y / a.
    PolyR g = sigma_monomial(PolyR::monomial(Rational(1), {{"a", 1}, {"x", 1}, {"y", -1}}));
    PolyR val = PolyR::monomial(Rational(1), {{"a", -1}, {"y", 1}});
    CHECK(g.substitute("x", val).is_zero());
    CHECK_THROWS_AS(f.substitute("x", PolyR::constant(Rational(0))), ZeroDivisionError);
    CHECK_THROWS_AS(f.substitute("q", PolyR::constant(Rational(1))), ValidationError);
    CHECK_THROWS_AS(f.substitute("x", rvar("x") + rvar("y")), ValidationError);
}

TEST_CASE("omega6 collapse of sigma(a^2 x)") {
    // At a = w: sigma(a^2 x) + sigma(x / a) = 0 and sigma(a^2 x) = sigma(a / x),
    // for x any monomial.
    PolyR s_a2x = sigma_monomial(PolyR::monomial(Rational(1), {{"a", 2}, {"x", 1}}));
    PolyR s_abarx = sigma_monomial(PolyR::monomial(Rational(1), {{"a", -1}, {"x", 1}}));
    PolyR s_axbar = sigma_monomial(PolyR::monomial(Rational(1), {{"a", 1}, {"x", -1}}));
    CHECK(evaluate_omega6(s_a2x + s_abarx).is_zero());
    CHECK(evaluate_omega6(s_a2x - s_axbar).is_zero());
}

TEST_CASE("parity split") {
    PolyR f = rvar("x", 2) + rvar("x", -1);
    auto [even, odd] = f.parity_split("x");
    CHECK(even == rvar("x", 2));
    CHECK(odd == rvar("x", -1));
    auto [e0, o0] = PolyR::zero({"x"}).parity_split("x");
    CHECK(e0.is_zero());
    CHECK(o0.is_zero());
    CHECK_THROWS_AS(f.parity_split("z"), ValidationError);
}

TEST_CASE("half width and centering") {
    PolyR f = rvar("x", 3) + rvar("x", -3);
    CHECK(f.half_width("x") == 3);
    CHECK(f.is_centered("x"));
    PolyR g = rvar("x", 2);
    CHECK(g.half_width("x") == 2);
    CHECK(!g.is_centered("x"));
    CHECK_THROWS_AS(PolyR::zero({"x"}).half_width("x"), ValidationError);
}

TEST_CASE("ring axioms, substitution homomorphism, parity properties") {
    Rng rng(99);
    auto rc = [&] { return rng.small_rational() - Rational(rng.uniform(0, 1)); };
    for (int t = 0; t < 1000; ++t) {
        PolyR f = random_poly<Rational>(rng, rc);
        PolyR g = random_poly<Rational>(rng, rc);
        PolyR h = random_poly<Rational>(rng, rc);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * g == g * f);

        PolyR val = PolyR::monomial(rng.small_rational(), {{"y", rng.uniform(-2, 2)}});
        CHECK((f * g).substitute("x", val) == f.substitute("x", val) * g.substitute("x", val));

        auto [even, odd] = f.parity_split("x");
        CHECK(even + odd == f);
        for (const auto& [e, c] : even.terms()) CHECK(e[f.vars().size() - 2] % 2 == 0);

        // Evaluation a -> w commutes with multiplication.
        PolyR fa = f * PolyR::monomial(Rational(1), {{"a", rng.uniform(-2, 2)}});
        PolyR ga = g * PolyR::monomial(Rational(1), {{"a", rng.uniform(-2, 2)}});
        CHECK(evaluate_omega6(fa * ga) == evaluate_omega6(fa) * evaluate_omega6(ga));
    }
}

TEST_CASE("canonical serialization") {
    PolyR f = rvar("x") + rvar("x", -1);
    CHECK(f.to_string() == "1*x^-1 + 1*x");
    CHECK(PolyR::zero({"x"}).to_string() == "0");
    PolyC g = PolyC::constant(Cyclotomic(Rational(-1), Rational(2)));
    CHECK(g.to_string() == "(-1+2*w)");
    CHECK(Cyclotomic(Rational(1, 2), Rational(-3, 4)).to_string() == "1/2-3/4*w");
    CHECK(Cyclotomic(Rational(0), Rational(1)).to_string() == "w");
}

TEST_CASE("mixed variable universes align automatically") {
    PolyR f = rvar("x");
    PolyR g = rvar("y");
    PolyR s = f + g;
    CHECK(s.vars() == std::vector<std::string>{"x", "y"});
    CHECK(s.term_count() == 2);
    CHECK(s - g == f + PolyR::zero({"y"}));
}
