#include "icelab/prefactor.hpp"

namespace icelab {

namespace {

// Shared product structure over an abstract "sigma(a^k * c)" factory.
template <class R, class F, class Sig>
R prefactor_product(PrefactorKind kind, const F& u, const std::vector<F>& l1,
                    const std::vector<F>& l2, bool compact, R one, Sig&& sig) {
    R out = one;
    auto s1 = [&](const F& num, const F& den) { return sig(1, num * den.inverse()); };
    auto s2 = [&](const F& num, const F& den) {
        if (compact) return sig(1, den * num.inverse());
        return sig(2, num * den.inverse());
    };
    switch (kind) {
        case PrefactorKind::A:
        case PrefactorKind::AH0:
            for (const F& w : l1) out = out * s1(w, u);
            for (const F& w : l2) out = out * s2(u, w);
            break;
        case PrefactorKind::Abar:
        case PrefactorKind::AbarH0:
            for (const F& w : l1) out = out * s1(u, w);
            for (const F& w : l2) out = out * s2(w, u);
            break;
        case PrefactorKind::AH1:
            for (const F& w : l1) out = out * s2(u, w);
            for (const F& w : l2) out = out * s1(w, u);
            break;
        case PrefactorKind::AbarH1:
            for (const F& w : l1) out = out * s2(w, u);
            for (const F& w : l2) out = out * s1(u, w);
            break;
        case PrefactorKind::AQ:
            for (const F& w : l1) out = out * (s2(u, w) * s1(w, u));
            break;
        case PrefactorKind::AbarQ:
            for (const F& w : l1) out = out * (s2(w, u) * s1(u, w));
            break;
    }
    return out;
}

} // namespace

LaurentPoly<Rational> prefactor_generic(PrefactorKind kind, const Rational& u,
                                        const std::vector<Rational>& l1,
                                        const std::vector<Rational>& l2) {
    auto one = LaurentPoly<Rational>::constant(Rational(1), {"a"});
    return prefactor_product(kind, u, l1, l2, false, one,
                             [](int k, const Rational& c) { return sig_a_generic(k, c); });
}

Cyclotomic prefactor_omega6(PrefactorKind kind, const Cyclotomic& u,
                            const std::vector<Cyclotomic>& l1,
                            const std::vector<Cyclotomic>& l2) {
    return prefactor_product(kind, u, l1, l2, false, Cyclotomic(1),
                             [](int k, const Cyclotomic& c) { return sig_a_omega6(k, c); });
}

Cyclotomic prefactor_omega6_compact(PrefactorKind kind, const Cyclotomic& u,
                                    const std::vector<Cyclotomic>& l1,
                                    const std::vector<Cyclotomic>& l2) {
    return prefactor_product(kind, u, l1, l2, true, Cyclotomic(1),
                             [](int k, const Cyclotomic& c) { return sig_a_omega6(k, c); });
}

} // namespace icelab
