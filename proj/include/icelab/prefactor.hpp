#pragma once

#include <vector>

#include "icelab/laurent.hpp"

namespace icelab {

// The eight product prefactors appearing in the specialization identities.
// Each is a product of sigma(a * t) and sigma(a^2 * t) factors built from a
// pivot value u and one or two lists of companion values:
//
//   A / AH0    : prod_{w in L1} s(a w/u)   * prod_{w in L2} s(a^2 u/w)
//   Abar/AbarH0: prod_{w in L1} s(a u/w)   * prod_{w in L2} s(a^2 w/u)
//   AH1        : prod_{w in L1} s(a^2 u/w) * prod_{w in L2} s(a w/u)
//   AbarH1     : prod_{w in L1} s(a^2 w/u) * prod_{w in L2} s(a u/w)
//   AQ         : prod_{w in L1} s(a^2 u/w) s(a w/u)
//   AbarQ      : prod_{w in L1} s(a^2 w/u) s(a u/w)
//
// At a = w6 every s(a^2 t) factor equals s(a / t); replacing them gives the
// compact form of each product.
enum class PrefactorKind { A, Abar, AH1, AbarH1, AH0, AbarH0, AQ, AbarQ };

// sigma(a^apow * c) as a Laurent polynomial in the variable "a".
inline LaurentPoly<Rational> sig_a_generic(int apow, const Rational& c) {
    return sigma_monomial(LaurentPoly<Rational>::monomial(c, {{"a", apow}}));
}

// sigma(w^apow * c) in the omega6 regime.
inline Cyclotomic sig_a_omega6(int apow, const Cyclotomic& c) {
    return sigma(Cyclotomic::omega().pow(apow) * c);
}

// Generic regime: exact rational values, result is a polynomial in "a".
LaurentPoly<Rational> prefactor_generic(PrefactorKind kind, const Rational& u,
                                        const std::vector<Rational>& l1,
                                        const std::vector<Rational>& l2 = {});

// Omega6 regime: the full product, and the compact rewriting.
Cyclotomic prefactor_omega6(PrefactorKind kind, const Cyclotomic& u,
                            const std::vector<Cyclotomic>& l1,
                            const std::vector<Cyclotomic>& l2 = {});
Cyclotomic prefactor_omega6_compact(PrefactorKind kind, const Cyclotomic& u,
                                    const std::vector<Cyclotomic>& l1,
                                    const std::vector<Cyclotomic>& l2 = {});

} // namespace icelab
