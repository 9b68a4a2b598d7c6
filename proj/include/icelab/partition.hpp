#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "icelab/enumerate.hpp"
#include "icelab/laurent.hpp"
#include "icelab/model.hpp"

namespace icelab {

enum class Regime { GenericA, Omega6 };

// Value of one parameter slot: an invertible monomial a^k * c * (var?),
// i.e. an exact field element, a symbolic polynomial variable left in the
// result, or either of those times a power of the global parameter.
template <class F>
struct SlotBinding {
    static SlotBinding value(F v) { return {false, "", std::move(v), 0}; }
    static SlotBinding symbol(std::string name) { return {true, std::move(name), F(1), 0}; }
    static SlotBinding a_times(F v, int a_pow) { return {false, "", std::move(v), a_pow}; }
    static SlotBinding a_times_symbol(std::string name, int a_pow) {
        return {true, std::move(name), F(1), a_pow};
    }

    bool symbolic = false;
    std::string var;
    F val = F(1);
    int a_pow = 0;
};

template <class F>
using Assignment = std::map<std::string, SlotBinding<F>>;

inline Assignment<Rational> ones_assignment_generic(const IceModel& m) {
    Assignment<Rational> a;
    for (const auto& s : m.slots()) a[s] = SlotBinding<Rational>::value(Rational(1));
    return a;
}
inline Assignment<Cyclotomic> ones_assignment_omega6(const IceModel& m) {
    Assignment<Cyclotomic> a;
    for (const auto& s : m.slots()) a[s] = SlotBinding<Cyclotomic>::value(Cyclotomic(1));
    return a;
}

namespace detail {

// Hooks for the two coefficient regimes: the global parameter a is either a
// polynomial variable or the substituted root of unity.
struct GenericARing {
    using F = Rational;
    static constexpr bool kAVar = true;
    static F a_power(int) { return F(1); }  // handled through the exponent
};
struct Omega6Ring {
    using F = Cyclotomic;
    static constexpr bool kAVar = false;
    static F a_power(int k) { return Cyclotomic::omega().pow(k); }
};

template <class Ring>
class PartitionEvaluator {
    using F = typename Ring::F;
    using Poly = LaurentPoly<F>;

public:
    PartitionEvaluator(const IceModel& model, const Assignment<F>& assign)
        : model_(model) {
        for (const auto& s : model.slots()) {
            auto it = assign.find(s);
            if (it == assign.end())
                throw ValidationError("missing value for parameter slot '" + s + "'");
            if (it->second.symbolic) {
                if (it->second.var.empty())
                    throw ValidationError("empty symbolic name for slot '" + s + "'");
                if (Ring::kAVar && it->second.var == "a")
                    throw ValidationError("'a' is reserved for the global parameter");
                vars_.push_back(it->second.var);
            } else if (it->second.val.is_zero()) {
                throw ZeroDivisionError("slot '" + s + "' bound to zero");
            }
        }
        if (Ring::kAVar) vars_.push_back("a");
        std::sort(vars_.begin(), vars_.end());
        vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
        if (Ring::kAVar) {
            a_index_ = static_cast<int>(
                std::lower_bound(vars_.begin(), vars_.end(), "a") - vars_.begin());
        }
        for (const auto& s : model.slots()) {
            const auto& b = assign.at(s);
            int vi = -1;
            if (b.symbolic)
                vi = static_cast<int>(
                    std::lower_bound(vars_.begin(), vars_.end(), b.var) - vars_.begin());
            bindings_.push_back({b.symbolic, vi, b.val, b.val.inverse(), b.a_pow});
        }
    }

    Poly run(std::optional<EdgeTag> tag) const {
        if (tag) {
            auto [t1, t2] = model_.tag_pair();  // throws when the model has no tags
            if (*tag != t1 && *tag != t2)
                throw ValidationError(std::string("tag '") + to_string(*tag) +
                                      "' does not belong to model " + to_string(model_.kind()));
        }
        bool numeric = std::none_of(bindings_.begin(), bindings_.end(),
                                    [](const Bound& b) { return b.symbolic; });
        if (numeric) return run_numeric(tag);
        Poly total = Poly::zero(vars_);
        enumerate_asms(model_.size(), model_.symmetry_class(), [&](const AsmMatrix& m) {
            FullIceState state(m);
            if (tag && model_.state_tag(state) != *tag) return;
            total += state_weight(state);
        });
        return total;
    }

    // With every slot bound to a value, each cell can only contribute one of
    // three constant factors, so states sharing the same factor pattern share
    // their weight. Memoizing on the pattern makes uniform assignments (for
    // instance all slots equal) cheap even for large state sets.
    Poly run_numeric(std::optional<EdgeTag> tag) const {
        const auto& cells = model_.cells();
        struct CellConsts {
            std::vector<Poly> vals;
            uint8_t code[3];
        };
        std::vector<CellConsts> consts;
        consts.reserve(cells.size());
        std::vector<int> exps(vars_.size(), 0);
        for (const WeightedCell& cell : cells) {
            F coef(1);
            std::fill(exps.begin(), exps.end(), 0);
            apply(bindings_[cell.row_slot], +1, coef, exps);
            apply(bindings_[cell.col_slot], -1, coef, exps);
            CellConsts cc;
            Poly three[3] = {sigma_a2(), sigma_a_mono(coef, exps, true),
                             sigma_a_mono(coef, exps, false)};
            for (int k = 0; k < 3; ++k) {
                uint8_t found = 255;
                for (size_t v = 0; v < cc.vals.size(); ++v)
                    if (cc.vals[v] == three[k]) found = static_cast<uint8_t>(v);
                if (found == 255) {
                    found = static_cast<uint8_t>(cc.vals.size());
                    cc.vals.push_back(three[k]);
                }
                cc.code[k] = found;
            }
            consts.push_back(std::move(cc));
        }
        std::map<std::vector<uint8_t>, Poly> memo;
        Poly total = Poly::zero(vars_);
        std::vector<uint8_t> key(cells.size());
        enumerate_asms(model_.size(), model_.symmetry_class(), [&](const AsmMatrix& m) {
            FullIceState state(m);
            if (tag && model_.state_tag(state) != *tag) return;
            for (size_t c = 0; c < cells.size(); ++c) {
                VertexKind k = state.kind(cells[c].i, cells[c].j);
                int which = (k == VertexKind::Plus || k == VertexKind::Minus) ? 0
                            : (k == VertexKind::ZeroWestUp || k == VertexKind::ZeroEastDown)
                                ? 1
                                : 2;
                key[c] = consts[c].code[which];
            }
            auto it = memo.find(key);
            if (it == memo.end()) {
                Poly w = Poly::constant(F(1), vars_);
                for (size_t c = 0; c < cells.size(); ++c) w *= consts[c].vals[key[c]];
                it = memo.emplace(key, std::move(w)).first;
            }
            total += it->second;
        });
        return total;
    }

    Poly state_weight(const FullIceState& state) const {
        Poly w = Poly::constant(F(1), vars_);
        std::vector<int> exps(vars_.size(), 0);
        for (const WeightedCell& cell : model_.cells()) {
            VertexKind k = state.kind(cell.i, cell.j);
            if (k == VertexKind::Plus || k == VertexKind::Minus) {
                w *= sigma_a2();
                continue;
            }
            // Parameter monomial m = row / col.
            F coef(1);
            std::fill(exps.begin(), exps.end(), 0);
            apply(bindings_[cell.row_slot], +1, coef, exps);
            apply(bindings_[cell.col_slot], -1, coef, exps);
            bool direct = (k == VertexKind::ZeroWestUp || k == VertexKind::ZeroEastDown);
            // sigma(a*m) for the direct kinds, sigma(a/m) for the others.
            w *= sigma_a_mono(coef, exps, direct);
        }
        return w;
    }

    const std::vector<std::string>& vars() const { return vars_; }

private:
    struct Bound {
        bool symbolic;
        int var_index;
        F val, inv;
        int a_pow;
    };

    void apply(const Bound& b, int dir, F& coef, std::vector<int>& exps) const {
        if (b.symbolic) exps[b.var_index] += dir;
        coef *= (dir > 0 ? b.val : b.inv);
        if (b.a_pow != 0) {
            if (Ring::kAVar)
                exps[a_index_] += dir * b.a_pow;
            else
                coef *= Ring::a_power(dir * b.a_pow);
        }
    }

    Poly sigma_a2() const {
        Poly p = Poly::zero(vars_);
        std::vector<int> e(vars_.size(), 0);
        if (Ring::kAVar) {
            e[a_index_] = 2;
            p.add_term(e, F(1));
            e[a_index_] = -2;
            p.add_term(e, F(-1));
        } else {
            p.add_term(e, Ring::a_power(2) - Ring::a_power(-2));
        }
        return p;
    }

    Poly sigma_a_mono(const F& coef, const std::vector<int>& exps, bool direct) const {
        // direct: a*m - 1/(a*m); inverted: a/m - m/a.
        Poly p = Poly::zero(vars_);
        std::vector<int> e(exps.size());
        for (size_t i = 0; i < exps.size(); ++i) e[i] = direct ? exps[i] : -exps[i];
        F c = direct ? coef : coef.inverse();
        if (Ring::kAVar) {
            e[a_index_] += 1;
            p.add_term(e, c);
            for (size_t i = 0; i < e.size(); ++i) e[i] = -e[i];
            p.add_term(e, -c.inverse());
        } else {
            p.add_term(e, Ring::a_power(1) * c);
            for (size_t i = 0; i < e.size(); ++i) e[i] = -e[i];
            p.add_term(e, -(Ring::a_power(-1) * c.inverse()));
        }
        return p;
    }

    const IceModel& model_;
    std::vector<std::string> vars_;
    std::vector<Bound> bindings_;
    int a_index_ = -1;
};

} // namespace detail

// Exact state sum of the model, symbolic in whichever slots were bound to
// symbols. In the generic regime the global parameter appears as the
// variable "a"; in the omega6 regime it is substituted by w = exp(i*pi/3).
inline LaurentPoly<Rational> partition_generic(const IceModel& model,
                                               const Assignment<Rational>& assign,
                                               std::optional<EdgeTag> tag = {}) {
    return detail::PartitionEvaluator<detail::GenericARing>(model, assign).run(tag);
}

inline LaurentPoly<Cyclotomic> partition_omega6(const IceModel& model,
                                                const Assignment<Cyclotomic>& assign,
                                                std::optional<EdgeTag> tag = {}) {
    return detail::PartitionEvaluator<detail::Omega6Ring>(model, assign).run(tag);
}

// Weight of a single vertex: sigma(a^2) for the +-1 kinds, sigma(a m) or
// sigma(a/m) for the zero kinds, 1 for a divalent. The parameter must be an
// invertible monomial.
inline LaurentPoly<Rational> vertex_weight_generic(VertexKind kind,
                                                   const LaurentPoly<Rational>& param) {
    using P = LaurentPoly<Rational>;
    switch (kind) {
        case VertexKind::Plus:
        case VertexKind::Minus:
            return sigma_monomial(P::variable("a", 2));
        case VertexKind::ZeroWestUp:
        case VertexKind::ZeroEastDown:
            return sigma_monomial(P::variable("a") * param);
        case VertexKind::ZeroEastUp:
        case VertexKind::ZeroWestDown:
            return sigma_monomial(P::variable("a") * param.monomial_inverse());
        case VertexKind::Divalent:
            return P::constant(Rational(1));
    }
    throw ValidationError("unknown vertex kind");
}

inline Cyclotomic vertex_weight_omega6(VertexKind kind, const Cyclotomic& param) {
    Cyclotomic w = Cyclotomic::omega();
    switch (kind) {
        case VertexKind::Plus:
        case VertexKind::Minus:
            return sigma(w * w);
        case VertexKind::ZeroWestUp:
        case VertexKind::ZeroEastDown:
            return sigma(w * param);
        case VertexKind::ZeroEastUp:
        case VertexKind::ZeroWestDown:
            return sigma(w * param.inverse());
        case VertexKind::Divalent:
            return Cyclotomic(1);
    }
    throw ValidationError("unknown vertex kind");
}

inline Cyclotomic sigma_omega() { return sigma(Cyclotomic::omega()); }  // 2w - 1

} // namespace icelab
