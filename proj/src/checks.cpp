#include "icelab/checks.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace icelab {

uint64_t Rng::next() {
    // xorshift64*
    s_ ^= s_ >> 12;
    s_ ^= s_ << 25;
    s_ ^= s_ >> 27;
    return s_ * 0x2545f4914f6cdd1dull;
}

int Rng::uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
}

Rational Rng::small_rational() {
    return Rational(uniform(1, 9), uniform(1, 9));
}

std::vector<Rational> Rng::distinct_rationals(size_t k, const std::vector<Rational>& avoid) {
    std::vector<Rational> out;
    while (out.size() < k) {
        Rational r = small_rational();
        bool clash = false;
        for (const auto& v : out) clash |= (v == r);
        for (const auto& v : avoid) clash |= (v == r);
        if (!clash) out.push_back(r);
    }
    return out;
}

namespace {

using PolyR = LaurentPoly<Rational>;
using PolyC = LaurentPoly<Cyclotomic>;
using BR = SlotBinding<Rational>;
using BC = SlotBinding<Cyclotomic>;

template <class F>
Assignment<F> assign_slots(const IceModel& m, std::vector<SlotBinding<F>> vals) {
    if (vals.size() != m.slots().size())
        throw ValidationError("assignment arity mismatch for " + std::string(to_string(m.kind())));
    Assignment<F> a;
    for (size_t i = 0; i < vals.size(); ++i) a[m.slots()[i]] = std::move(vals[i]);
    return a;
}

Assignment<Rational> assign_slots(const IceModel& m, std::vector<BR> vals) {
    return assign_slots<Rational>(m, std::move(vals));
}
Assignment<Cyclotomic> assign_slots(const IceModel& m, std::vector<BC> vals) {
    return assign_slots<Cyclotomic>(m, std::move(vals));
}

template <class P>
CheckResult eq_check(const std::string& name, const P& lhs, const P& rhs,
                     const std::string& context = "") {
    if (lhs == rhs) return {name, true, ""};
    std::ostringstream w;
    if (!context.empty()) w << context << "\n";
    w << "lhs = " << lhs.to_string() << "\nrhs = " << rhs.to_string();
    return {name, false, w.str()};
}

// ---------------------------------------------------------------------------
// Free-orientation evaluator for the local lemmas. Vertices are crossings of
// two lines with an explicit parameter monomial; edges join vertex ports or
// end in boundary stubs. The value is the sum over orientations of the
// internal edges, with boundary orientations fixed by the caller, of the
// product of the six-vertex weights.
// ---------------------------------------------------------------------------

enum MPort { PW = 0, PE = 1, PS = 2, PN = 3 };

class MiniIce {
public:
    explicit MiniIce(std::vector<std::string> symbols) {
        vars_ = std::move(symbols);
        vars_.push_back("a");
        std::sort(vars_.begin(), vars_.end());
        vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
        a_idx_ = static_cast<int>(
            std::lower_bound(vars_.begin(), vars_.end(), "a") - vars_.begin());
    }

    int add_vertex(const Rational& coef, int a_pow, const std::map<std::string, int>& pows) {
        Vertex v;
        v.exps.assign(vars_.size(), 0);
        v.exps[a_idx_] = a_pow;
        for (const auto& [name, e] : pows) {
            auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
            if (it == vars_.end() || *it != name)
                throw ValidationError("unknown symbol '" + name + "'");
            v.exps[it - vars_.begin()] += e;
        }
        v.coef = coef;
        vertices_.push_back(std::move(v));
        return static_cast<int>(vertices_.size()) - 1;
    }

    // Internal edge; orientation bit 1 means the arrow points toward (v2, p2).
    void connect(int v1, int p1, int v2, int p2) {
        int id = n_internal_++;
        vertices_[v1].port_edge[p1] = id;
        vertices_[v1].port_head[p1] = false;
        vertices_[v2].port_edge[p2] = id;
        vertices_[v2].port_head[p2] = true;
    }

    // Boundary stub; its orientation comes from the caller's pattern, bit 1
    // meaning the arrow points into the vertex.
    int stub(int v, int p) {
        int id = n_stubs_++;
        vertices_[v].port_edge[p] = ~id;  // stubs are stored complemented
        return id;
    }

    int stub_count() const { return n_stubs_; }
    const std::vector<std::string>& vars() const { return vars_; }

    PolyR evaluate(unsigned stub_in_bits) const {
        ensure_weights();
        PolyR total = PolyR::zero(vars_);
        for (unsigned m = 0; m < (1u << n_internal_); ++m) {
            int which[32];
            bool ok = true;
            for (size_t v = 0; v < vertices_.size() && ok; ++v) {
                unsigned pat = 0;
                for (int p = 0; p < 4; ++p) {
                    int e = vertices_[v].port_edge[p];
                    bool in;
                    if (e < 0)
                        in = (stub_in_bits >> ~e) & 1u;
                    else
                        in = (((m >> e) & 1u) != 0) == vertices_[v].port_head[p];
                    pat |= (in ? 1u : 0u) << p;
                }
                which[v] = kind_table(pat);
                ok = which[v] >= 0;
            }
            if (!ok) continue;
            PolyR w = PolyR::constant(Rational(1), vars_);
            for (size_t v = 0; v < vertices_.size(); ++v) w *= vertices_[v].weight[which[v]];
            total += w;
        }
        return total;
    }

private:
    struct Vertex {
        Rational coef;
        std::vector<int> exps;
        int port_edge[4] = {0, 0, 0, 0};
        bool port_head[4] = {false, false, false, false};
        mutable PolyR weight[3];
        mutable bool sealed = false;
    };

    // Port pattern bits: W in | E in << 1 | S in << 2 | N in << 3.
    static int kind_table(unsigned pat) {
        switch (pat) {
            case 0b0011: return 0;  // Plus:  W,E in
            case 0b1100: return 0;  // Minus: S,N in
            case 0b0110: return 1;  // ZeroWestUp:   E,S in -> sigma(a m)
            case 0b1001: return 1;  // ZeroEastDown: W,N in -> sigma(a m)
            case 0b0101: return 2;  // ZeroEastUp:   W,S in -> sigma(a/m)
            case 0b1010: return 2;  // ZeroWestDown: E,N in -> sigma(a/m)
            default: return -1;
        }
    }

    void ensure_weights() const {
        for (const Vertex& v : vertices_) {
            if (v.sealed) continue;
            std::vector<int> e(vars_.size(), 0);
            e[a_idx_] = 2;
            PolyR s2 = PolyR::zero(vars_);
            s2.add_term(e, Rational(1));
            e[a_idx_] = -2;
            s2.add_term(e, Rational(-1));
            v.weight[0] = s2;
            for (int inv = 0; inv < 2; ++inv) {
                PolyR s = PolyR::zero(vars_);
                std::vector<int> t(vars_.size());
                for (size_t i = 0; i < t.size(); ++i) t[i] = inv ? -v.exps[i] : v.exps[i];
                t[a_idx_] += 1;  // exponent vector of a * m^{+-1}
                Rational c = inv ? v.coef.inverse() : v.coef;
                s.add_term(t, c);
                for (size_t i = 0; i < t.size(); ++i) t[i] = -t[i];
                s.add_term(t, -c.inverse());
                v.weight[inv ? 2 : 1] = s;
            }
            v.sealed = true;
        }
    }

    std::vector<std::string> vars_;
    std::vector<Vertex> vertices_;
    int n_internal_ = 0;
    int n_stubs_ = 0;
    int a_idx_ = 0;
};

PolyR sig_mono(const Rational& c, std::map<std::string, int> pows) {
    return sigma_monomial(PolyR::monomial(c, pows));
}

} // namespace

// ---------------------------------------------------------------------------
// Yang-Baxter: sliding the explicit crossing of the x and y tracks through a
// third line of parameter z = 1/(a x y). The crossing carries the parameter
// a^{-1} x / y; the two track/line crossings carry x/z and y/z. All 64
// boundary orientations must agree exactly as polynomials in (a, x, y).
// ---------------------------------------------------------------------------

CheckResult check_yang_baxter() {
    auto build = [](bool crossing_first) {
        MiniIce g({"x", "y"});
        // Track/line crossings: x/z = a x^2 y, y/z = a x y^2.
        int K, M1, M2;
        std::vector<int> stubs;
        if (crossing_first) {
            K = g.add_vertex(Rational(1), -1, {{"x", 1}, {"y", -1}});
            M1 = g.add_vertex(Rational(1), 1, {{"x", 2}, {"y", 1}});
            M2 = g.add_vertex(Rational(1), 1, {{"x", 1}, {"y", 2}});
            stubs = {g.stub(K, PS), g.stub(K, PW), g.stub(M1, PS),
                     g.stub(M1, PE), g.stub(M2, PN), g.stub(M2, PE)};
            g.connect(K, PE, M1, PW);
            g.connect(K, PN, M2, PW);
            g.connect(M1, PN, M2, PS);
        } else {
            M1 = g.add_vertex(Rational(1), 1, {{"x", 1}, {"y", 2}});
            M2 = g.add_vertex(Rational(1), 1, {{"x", 2}, {"y", 1}});
            K = g.add_vertex(Rational(1), -1, {{"x", 1}, {"y", -1}});
            stubs = {g.stub(M1, PW), g.stub(M2, PW), g.stub(M1, PS),
                     g.stub(K, PE), g.stub(M2, PN), g.stub(K, PN)};
            g.connect(M1, PE, K, PS);
            g.connect(M2, PE, K, PW);
            g.connect(M1, PN, M2, PS);
        }
        return g;
    };
    MiniIce lhs = build(true), rhs = build(false);
    for (unsigned pat = 0; pat < 64; ++pat) {
        PolyR a = lhs.evaluate(pat), b = rhs.evaluate(pat);
        if (a != b) {
            std::ostringstream w;
            w << "boundary pattern " << pat << "\nlhs = " << a.to_string()
              << "\nrhs = " << b.to_string();
            return {"yang-baxter", false, w.str()};
        }
        // The identity persists under a -> w.
        if (evaluate_omega6(a) != evaluate_omega6(b))
            return {"yang-baxter", false, "omega6 image mismatch at pattern " +
                                              std::to_string(pat)};
    }
    return {"yang-baxter", true, ""};
}

namespace {

// Two horizontal tracks crossing `cols` vertical lines, optionally closed on
// the right by a U-turn arc. Stub order: left bottom, left top, then per
// column (south, north), then (without the arc) right bottom, right top.
struct Strip {
    MiniIce g;
    int width;
    bool arc;
};

Strip make_strip(const std::vector<Rational>& cols, bool x_on_bottom, bool with_arc) {
    MiniIce g({"x", "y"});
    int k = static_cast<int>(cols.size());
    std::vector<int> bot(k), top(k);
    const char* bvar = x_on_bottom ? "x" : "y";
    const char* tvar = x_on_bottom ? "y" : "x";
    for (int j = 0; j < k; ++j) {
        bot[j] = g.add_vertex(cols[j].inverse(), 0, {{bvar, 1}});
        top[j] = g.add_vertex(cols[j].inverse(), 0, {{tvar, 1}});
    }
    g.stub(bot[0], PW);
    g.stub(top[0], PW);
    for (int j = 0; j < k; ++j) {
        g.stub(bot[j], PS);
        g.stub(top[j], PN);
        g.connect(bot[j], PN, top[j], PS);
        if (j + 1 < k) {
            g.connect(bot[j], PE, bot[j + 1], PW);
            g.connect(top[j], PE, top[j + 1], PW);
        }
    }
    if (with_arc)
        g.connect(bot[k - 1], PE, top[k - 1], PE);
    else {
        g.stub(bot[k - 1], PE);
        g.stub(top[k - 1], PE);
    }
    return {std::move(g), k, with_arc};
}

// Boundary bits for a strip: horizontal ends as given, column pattern p
// supplying two bits per column.
unsigned strip_bits(const Strip& s, unsigned col_pattern, bool right_bot_in, bool right_top_in) {
    unsigned bits = 0b11;  // left stubs always point in
    for (int j = 0; j < s.width; ++j) {
        bits |= ((col_pattern >> (2 * j)) & 3u) << (2 + 2 * j);
    }
    if (!s.arc) {
        unsigned base = 2 + 2 * static_cast<unsigned>(s.width);
        bits |= (right_bot_in ? 1u : 0u) << base;
        bits |= (right_top_in ? 1u : 0u) << (base + 1);
    }
    return bits;
}

} // namespace

CheckResult check_line_exchange(int width, uint64_t seed) {
    Rng rng(seed);
    auto cols = rng.distinct_rationals(width);
    Strip lhs = make_strip(cols, true, false);
    Strip rhs = make_strip(cols, false, false);
    for (unsigned p = 0; p < (1u << (2 * width)); ++p) {
        PolyR a = lhs.g.evaluate(strip_bits(lhs, p, true, true));
        PolyR b = rhs.g.evaluate(strip_bits(rhs, p, true, true));
        if (a != b)
            return {"line-exchange-w" + std::to_string(width), false,
                    "column pattern " + std::to_string(p) + "\nlhs = " + a.to_string() +
                        "\nrhs = " + b.to_string()};
    }
    return {"line-exchange-w" + std::to_string(width), true, ""};
}

CheckResult check_loop_closure(uint64_t) {
    // Crossing of parameter z closed by an arc on the right: equals
    // (sigma(a z) + sigma(a^2)) times the two through-flow patterns.
    MiniIce g({"z"});
    int v = g.add_vertex(Rational(1), 0, {{"z", 1}});
    g.stub(v, PW);  // upper-left entrant
    g.stub(v, PS);  // lower-left entrant
    g.connect(v, PN, v, PE);
    PolyR factor = sig_mono(Rational(1), {{"a", 1}, {"z", 1}}) + sig_mono(Rational(1), {{"a", 2}});
    for (unsigned pat = 0; pat < 4; ++pat) {
        bool top_in = pat & 1u, bot_in = pat & 2u;
        PolyR got = g.evaluate(pat);
        PolyR want = (top_in != bot_in) ? factor : PolyR::zero({"a", "z"});
        if (got != want)
            return {"loop-closure", false,
                    "pattern " + std::to_string(pat) + "\ngot = " + got.to_string() +
                        "\nwant = " + want.to_string()};
    }
    return {"loop-closure", true, ""};
}

CheckResult check_loop_exchange(int width, uint64_t seed) {
    Rng rng(seed);
    auto cols = rng.distinct_rationals(width);
    PolyR sxy = sig_mono(Rational(1), {{"x", 1}, {"y", -1}});
    PolyR sa2 = sig_mono(Rational(1), {{"a", 2}});
    PolyR denom = sig_mono(Rational(1), {{"a", 2}, {"y", 1}, {"x", -1}});
    std::string tag = "loop-exchange-w" + std::to_string(width);

    {  // closed strips: denom * lhs == (sa2 + sxy) * rhs
        Strip lhs = make_strip(cols, true, true);
        Strip rhs = make_strip(cols, false, true);
        for (unsigned p = 0; p < (1u << (2 * width)); ++p) {
            PolyR a = denom * lhs.g.evaluate(strip_bits(lhs, p, false, false));
            PolyR b = (sa2 + sxy) * rhs.g.evaluate(strip_bits(rhs, p, false, false));
            if (a != b)
                return {tag, false, "arc case, column pattern " + std::to_string(p) +
                                        "\nlhs = " + a.to_string() + "\nrhs = " + b.to_string()};
        }
    }
    // Open strips, both splittings of the right boundary.
    Strip lhs = make_strip(cols, true, false);
    Strip rhs = make_strip(cols, false, false);
    for (int variant = 0; variant < 2; ++variant) {
        // variant 0: lhs right (top out, bottom in); variant 1: mirrored.
        bool lb = variant == 0, lt = !lb;
        for (unsigned p = 0; p < (1u << (2 * width)); ++p) {
            PolyR L = denom * lhs.g.evaluate(strip_bits(lhs, p, lb, lt));
            PolyR R1 = rhs.g.evaluate(strip_bits(rhs, p, !lb, !lt));
            PolyR R2 = rhs.g.evaluate(strip_bits(rhs, p, lb, lt));
            PolyR R = sxy * R1 + sa2 * R2;
            if (L != R)
                return {tag, false, "open case v" + std::to_string(variant) + ", pattern " +
                                        std::to_string(p) + "\nlhs = " + L.to_string() +
                                        "\nrhs = " + R.to_string()};
        }
    }
    return {tag, true, ""};
}

CheckResult check_grid_pass(int rows, int cols, uint64_t seed) {
    Rng rng(seed);
    auto rv = rng.distinct_rationals(rows);
    auto cv = rng.distinct_rationals(cols, rv);
    std::string name = "grid-pass-" + std::to_string(rows) + "x" + std::to_string(cols);

    // The travelling line has parameter x before the turn and x/a after it;
    // as a column it gives row crossings the parameter a r x^{-1}.
    auto build = [&](bool over_the_top) {
        MiniIce g({"x"});
        std::vector<std::vector<int>> G(rows, std::vector<int>(cols));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                G[i][j] = g.add_vertex(rv[i] * cv[j].inverse(), 0, {});
        std::vector<int> line_row(cols), line_col(rows);
        for (int j = 0; j < cols; ++j)
            line_row[j] = g.add_vertex(cv[j].inverse(), 0, {{"x", 1}});
        for (int i = 0; i < rows; ++i)
            line_col[i] = g.add_vertex(rv[i], 1, {{"x", -1}});

        // Stub creation order must agree between the two graphs:
        // rows (west, east), columns (north, south), then the line ends.
        for (int i = 0; i < rows; ++i) {
            if (over_the_top) {
                g.stub(G[i][0], PW);
                g.stub(line_col[i], PE);
            } else {
                g.stub(line_col[i], PW);
                g.stub(G[i][cols - 1], PE);
            }
        }
        for (int j = 0; j < cols; ++j) {
            if (over_the_top) {
                g.stub(line_row[j], PN);
                g.stub(G[rows - 1][j], PS);
            } else {
                g.stub(G[0][j], PN);
                g.stub(line_row[j], PS);
            }
        }
        if (over_the_top) {
            g.stub(line_row[0], PW);      // line start, north-west
            g.stub(line_col[rows - 1], PS);  // line end, south-east
        } else {
            g.stub(line_col[0], PN);
            g.stub(line_row[cols - 1], PE);
        }

        // Grid wiring.
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j + 1 < cols; ++j) g.connect(G[i][j], PE, G[i][j + 1], PW);
        for (int i = 0; i + 1 < rows; ++i)
            for (int j = 0; j < cols; ++j) g.connect(G[i + 1][j], PN, G[i][j], PS);
        for (int j = 0; j + 1 < cols; ++j) g.connect(line_row[j], PE, line_row[j + 1], PW);
        for (int i = 0; i + 1 < rows; ++i) g.connect(line_col[i + 1], PN, line_col[i], PS);

        if (over_the_top) {
            // Line along the top, then down the right side.
            for (int j = 0; j < cols; ++j) g.connect(G[0][j], PN, line_row[j], PS);
            for (int i = 0; i < rows; ++i) g.connect(G[i][cols - 1], PE, line_col[i], PW);
            g.connect(line_row[cols - 1], PE, line_col[0], PN);
        } else {
            // Line down the left side, then along the bottom.
            for (int j = 0; j < cols; ++j) g.connect(line_row[j], PN, G[rows - 1][j], PS);
            for (int i = 0; i < rows; ++i) g.connect(line_col[i], PE, G[i][0], PW);
            g.connect(line_col[rows - 1], PS, line_row[0], PW);
        }
        return g;
    };

    MiniIce lhs = build(true), rhs = build(false);
    int stubs = lhs.stub_count();
    for (unsigned pat = 0; pat < (1u << stubs); ++pat) {
        PolyR a = lhs.evaluate(pat), b = rhs.evaluate(pat);
        if (a != b)
            return {name, false, "pattern " + std::to_string(pat) + "\nlhs = " + a.to_string() +
                                     "\nrhs = " + b.to_string()};
    }
    return {name, true, ""};
}

// ---------------------------------------------------------------------------
// Counting relations.
// ---------------------------------------------------------------------------

std::vector<CheckResult> counting_suite(int level) {
    std::vector<CheckResult> out;
    auto expect = [&](const std::string& name, long long got, long long want) {
        if (got == want)
            out.push_back({name, true, ""});
        else
            out.push_back({name, false,
                           "got " + std::to_string(got) + ", want " + std::to_string(want)});
    };

    const long long a_all[] = {1, 1, 2, 7, 42, 429, 7436};
    const long long a_ht[] = {1, 1, 2, 3, 10, 25, 140};
    for (int n = 1; n <= 6; ++n)
        expect("count:unrestricted n=" + std::to_string(n),
               count_asms(n, SymmetryClass::Unrestricted), a_all[n]);
    for (int n = 1; n <= 6; ++n)
        expect("count:half-turn n=" + std::to_string(n), count_asms(n, SymmetryClass::HalfTurn),
               a_ht[n]);

    auto A = [&](int n) { return count_asms(n, SymmetryClass::Unrestricted); };
    auto HT = [&](int n) { return count_asms(n, SymmetryClass::HalfTurn); };
    auto QT = [&](int n) { return count_asms(n, SymmetryClass::QuarterTurn); };
    auto QQT = [&](int n) { return count_asms(n, SymmetryClass::QuasiQuarterTurn); };

    for (int N = 1; N <= level; ++N) {
        expect("relation:qt4N N=" + std::to_string(N), QT(4 * N), HT(2 * N) * A(N) * A(N));
        expect("relation:qt4N-1 N=" + std::to_string(N), QT(4 * N - 1),
               HT(2 * N - 1) * A(N) * A(N));
        expect("relation:qt4N+1 N=" + std::to_string(N), QT(4 * N + 1),
               HT(2 * N + 1) * A(N) * A(N));
        expect("relation:qqt4N+2 N=" + std::to_string(N), QQT(4 * N + 2),
               HT(2 * N + 1) * A(N) * A(N + 1));
    }
    expect("nonexistence:qt n=6", QT(6), 0);
    expect("nonexistence:qt n=10", QT(10), 0);
    return out;
}

// ---------------------------------------------------------------------------
// Model consistency: bijection, wiring, state counts, all-ones evaluation.
// ---------------------------------------------------------------------------

std::vector<CheckResult> model_consistency_suite(int max_symmetric_size, int max_dwbc_size) {
    std::vector<CheckResult> out;
    std::vector<std::pair<ModelKind, int>> instances;
    for (int n = 1; n <= max_dwbc_size; ++n) instances.push_back({ModelKind::Dwbc, n});
    for (int n = 2; n <= max_symmetric_size; n += 2) instances.push_back({ModelKind::HtEven, n});
    for (int n = 1; n <= max_symmetric_size; n += 2) instances.push_back({ModelKind::HtOdd, n});
    for (int n = 4; n <= max_symmetric_size; n += 4) instances.push_back({ModelKind::Qt, n});
    for (int n = 6; n <= max_symmetric_size; n += 4) instances.push_back({ModelKind::Qqt, n});

    for (auto [kind, n] : instances) {
        IceModel model = IceModel::build(kind, n);
        std::string base = std::string(to_string(kind)) + " n=" + std::to_string(n);
        long long states = 0;
        std::string wit;
        enumerate_asms(n, model.symmetry_class(), [&](const AsmMatrix& m) {
            ++states;
            if (!wit.empty()) return;
            FullIceState s(m);
            if (!m.is_member(model.symmetry_class()))
                wit = "emitted matrix outside class:\n" + m.to_string();
            else if (!s.obeys_ice_rule())
                wit = "ice rule violated:\n" + m.to_string();
            else if (!model.wiring_consistent(s))
                wit = "quotient wiring violated:\n" + m.to_string();
            else if (s.to_asm() != m)
                wit = "bijection round trip failed:\n" + m.to_string();
            else {
                // Every line of the grid reverses orientation between its two
                // boundary stubs, so it must carry an odd number of +-1.
                for (int i = 1; i <= n && wit.empty(); ++i) {
                    int nz = 0;
                    for (int j = 1; j <= n; ++j) nz += m.at(i, j) != 0;
                    if (nz % 2 == 0) wit = "even nonzero count in a row:\n" + m.to_string();
                }
            }
        });
        out.push_back({base + " states+wiring", wit.empty(), wit});

        long long cls_count = count_asms(n, model.symmetry_class());
        out.push_back({base + " state count", states == cls_count,
                       states == cls_count ? ""
                                           : std::to_string(states) + " vs " +
                                                 std::to_string(cls_count)});

        PolyC z = partition_omega6(model, ones_assignment_omega6(model));
        Cyclotomic want = sigma_omega().pow(model.tetravalent_count()) * Cyclotomic(Rational(cls_count));
        PolyC wantp = PolyC::constant(want);
        out.push_back(eq_check(base + " all-ones", z, wantp));

        if (model.has_resolved_tags()) {
            auto [t1, t2] = model.tag_pair();
            PolyC z1 = partition_omega6(model, ones_assignment_omega6(model), t1);
            PolyC z2 = partition_omega6(model, ones_assignment_omega6(model), t2);
            out.push_back(eq_check(base + " resolved split", z1 + z2, z));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Symmetry lemmas.
// ---------------------------------------------------------------------------

std::vector<CheckResult> symmetry_suite(int level, uint64_t seed) {
    std::vector<CheckResult> out;
    Rng rng(seed);

    {  // Z(2): separate symmetry in rows and in columns, generic a.
        IceModel z2 = IceModel::build(ModelKind::Dwbc, 2);
        auto sym = [&](std::vector<std::string> names) {
            std::vector<BR> b;
            for (auto& s : names) b.push_back(BR::symbol(s));
            return partition_generic(z2, assign_slots(z2, b));
        };
        out.push_back(eq_check("sym:Z(2) rows", sym({"u1", "u2", "u3", "u4"}),
                               sym({"u2", "u1", "u3", "u4"})));
        out.push_back(eq_check("sym:Z(2) cols", sym({"u1", "u2", "u3", "u4"}),
                               sym({"u1", "u2", "u4", "u3"})));
    }

    if (level >= 2) {  // Z_HT set-wise symmetry at sizes 4 and 5.
        IceModel h4 = IceModel::build(ModelKind::HtEven, 4);
        auto v = rng.distinct_rationals(3);
        auto ht4 = [&](const std::string& c1, const std::string& c2) {
            return partition_generic(
                h4, assign_slots(h4, {BR::value(v[0]), BR::symbol(c1), BR::symbol(c2),
                                      BR::value(v[1]), BR::value(v[2])}));
        };
        out.push_back(eq_check("sym:Z_HT(4) cols", ht4("u", "v"), ht4("v", "u")));

        IceModel h5 = IceModel::build(ModelKind::HtOdd, 5);
        auto w = rng.distinct_rationals(4);
        auto ht5 = [&](bool rows, bool swap) {
            std::vector<BR> b(6, BR::value(w[0]));
            std::string u = swap ? "v" : "u", vv = swap ? "u" : "v";
            if (rows) {
                b = {BR::symbol(u), BR::symbol(vv), BR::value(w[1]), BR::value(w[2]),
                     BR::value(w[3]), BR::value(w[0])};
            } else {
                b = {BR::value(w[1]), BR::value(w[2]), BR::symbol(u), BR::symbol(vv),
                     BR::value(w[3]), BR::value(w[0])};
            }
            return partition_generic(h5, assign_slots(h5, b));
        };
        out.push_back(eq_check("sym:Z_HT(5) rows", ht5(true, false), ht5(true, true)));
        out.push_back(eq_check("sym:Z_HT(5) cols", ht5(false, false), ht5(false, true)));
    }

    {  // Z_QT(6): symmetric in x1, x2 and in (x, y).
        IceModel q6 = IceModel::build(ModelKind::Qqt, 6);
        auto q = [&](std::vector<std::string> names) {
            std::vector<BR> b;
            for (auto& s : names) b.push_back(BR::symbol(s));
            return partition_generic(q6, assign_slots(q6, b));
        };
        out.push_back(
            eq_check("sym:Z_QT(6) x-vars", q({"u1", "u2", "u3", "u4"}), q({"u2", "u1", "u3", "u4"})));
        out.push_back(
            eq_check("sym:Z_QT(6) x<->y", q({"u1", "u2", "u3", "u4"}), q({"u1", "u2", "u4", "u3"})));
    }
    if (level >= 2) {  // Z_QT(8): symmetric in its x variables.
        IceModel q8 = IceModel::build(ModelKind::Qt, 8);
        auto v = rng.distinct_rationals(3);
        auto q = [&](int swap_pos) {
            std::vector<BR> b = {BR::symbol("u"), BR::symbol("v"), BR::value(v[0]),
                                 BR::value(v[1]), BR::value(v[2])};
            if (swap_pos) std::swap(b[0], b[1]);
            return partition_generic(q8, assign_slots(q8, b));
        };
        out.push_back(eq_check("sym:Z_QT(8) x-vars", q(0), q(1)));
    }

    // Pseudo-symmetry in (x, y), cross-multiplied.
    PolyR sxy = sig_mono(Rational(1), {{"x", 1}, {"y", -1}});
    PolyR sa2 = sig_mono(Rational(1), {{"a", 2}});
    PolyR denom = sig_mono(Rational(1), {{"a", 2}, {"y", 1}, {"x", -1}});
    auto pseudo = [&](ModelKind kind, int n, const std::string& name) {
        IceModel m = IceModel::build(kind, n);
        size_t extra = m.slots().size() - 2;
        auto v = rng.distinct_rationals(extra);
        std::vector<BR> fw, bw;
        for (size_t i = 0; i < extra; ++i) {
            fw.push_back(BR::value(v[i]));
            bw.push_back(BR::value(v[i]));
        }
        fw.push_back(BR::symbol("x"));
        fw.push_back(BR::symbol("y"));
        bw.push_back(BR::symbol("y"));
        bw.push_back(BR::symbol("x"));
        PolyR lhs = denom * partition_generic(m, assign_slots(m, fw));
        PolyR rhs = (sa2 + sxy) * partition_generic(m, assign_slots(m, bw));
        return eq_check(name, lhs, rhs);
    };
    out.push_back(pseudo(ModelKind::Qt, 4, "pseudo-sym:Z_QT(4)"));
    out.push_back(pseudo(ModelKind::HtEven, 2, "pseudo-sym:Z_HT(2)"));
    if (level >= 2) {
        out.push_back(pseudo(ModelKind::Qt, 8, "pseudo-sym:Z_QT(8)"));
        out.push_back(pseudo(ModelKind::HtEven, 4, "pseudo-sym:Z_HT(4)"));
    }

    {  // At a = w, Z(2) is symmetric in all four variables.
        IceModel z2 = IceModel::build(ModelKind::Dwbc, 2);
        auto vals = rng.distinct_rationals(4);
        std::vector<Cyclotomic> cv;
        for (auto& r : vals) cv.push_back(Cyclotomic(r));
        int perm[4] = {0, 1, 2, 3};
        PolyC first;
        bool got_first = false;
        bool ok = true;
        std::string wit;
        std::sort(perm, perm + 4);
        do {
            std::vector<BC> b;
            for (int i = 0; i < 4; ++i) b.push_back(BC::value(cv[perm[i]]));
            PolyC z = partition_omega6(z2, assign_slots(z2, b));
            if (!got_first) {
                first = z;
                got_first = true;
            } else if (z != first && ok) {
                ok = false;
                wit = "permutation (" + std::to_string(perm[0]) + std::to_string(perm[1]) +
                      std::to_string(perm[2]) + std::to_string(perm[3]) + ")";
            }
        } while (std::next_permutation(perm, perm + 4));
        out.push_back({"sym:Z(2) all variables at omega6", ok, wit});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Specialization identities.
// ---------------------------------------------------------------------------

namespace {

EdgeTag ht_partner_ax(EdgeTag t) {  // odd (y = a x1) -> even
    return t == EdgeTag::DownRight ? EdgeTag::ArcDown : EdgeTag::ArcUp;
}
EdgeTag ht_partner_bax(EdgeTag t) {  // odd (y = x1/a) -> even
    return t == EdgeTag::DownRight ? EdgeTag::ArcUp : EdgeTag::ArcDown;
}
EdgeTag ht_partner_even_ax(EdgeTag t) {  // even (y = a xN) -> odd
    return t == EdgeTag::ArcUp ? EdgeTag::DownRight : EdgeTag::UpLeft;
}
EdgeTag ht_partner_even_bax(EdgeTag t) {  // even (x = xN/a) -> odd
    return t == EdgeTag::ArcDown ? EdgeTag::DownRight : EdgeTag::UpLeft;
}
EdgeTag qt_partner_bax(EdgeTag t) {
    switch (t) {
        case EdgeTag::DownRight: return EdgeTag::Converging;
        case EdgeTag::UpLeft: return EdgeTag::Diverging;
        case EdgeTag::Converging: return EdgeTag::UpLeft;
        default: return EdgeTag::DownRight;  // Diverging
    }
}
EdgeTag qt_partner_ax(EdgeTag t) {
    switch (t) {
        case EdgeTag::DownRight: return EdgeTag::Diverging;
        case EdgeTag::UpLeft: return EdgeTag::Converging;
        case EdgeTag::Converging: return EdgeTag::DownRight;
        default: return EdgeTag::UpLeft;
    }
}

std::vector<BR> values(const std::vector<Rational>& v) {
    std::vector<BR> b;
    for (const auto& r : v) b.push_back(BR::value(r));
    return b;
}

} // namespace

std::vector<CheckResult> specialization_suite(int tuples, uint64_t seed) {
    std::vector<CheckResult> out;
    Rng rng(seed);

    auto run = [&](const std::string& name, auto&& one_tuple) {
        for (int t = 0; t < tuples; ++t) {
            CheckResult r = one_tuple();
            if (!r.pass) {
                out.push_back({name, false, "tuple " + std::to_string(t) + ": " + r.witness});
                return;
            }
        }
        out.push_back({name, true, ""});
    };

    // --- Z at size N = 2: x1 = x3/a and x1 = a x3. ---
    run("spec:Z bax N=2", [&] {
        auto v = rng.distinct_rationals(4);  // v[k] plays x_{k+1}; pivot x3 = v[2]
        IceModel z2 = IceModel::build(ModelKind::Dwbc, 2), z1 = IceModel::build(ModelKind::Dwbc, 1);
        auto lhs = partition_generic(
            z2, assign_slots(z2, {BR::a_times(v[2], -1), BR::value(v[1]), BR::value(v[2]),
                                  BR::value(v[3])}));
        PolyR pf = prefactor_generic(PrefactorKind::Abar, v[2], {v[1]}, {v[2], v[3]});
        auto rhs = pf * partition_generic(z1, assign_slots(z1, values({v[1], v[3]})));
        return eq_check("", lhs, rhs);
    });
    run("spec:Z ax N=2", [&] {
        auto v = rng.distinct_rationals(4);
        IceModel z2 = IceModel::build(ModelKind::Dwbc, 2), z1 = IceModel::build(ModelKind::Dwbc, 1);
        auto lhs = partition_generic(
            z2, assign_slots(z2, {BR::a_times(v[2], 1), BR::value(v[1]), BR::value(v[2]),
                                  BR::value(v[3])}));
        PolyR pf = prefactor_generic(PrefactorKind::A, v[2], {v[1]}, {v[2], v[3]});
        auto rhs = pf * partition_generic(z1, assign_slots(z1, values({v[1], v[3]})));
        return eq_check("", lhs, rhs);
    });

    // --- Z_HT odd -> even, y specialized to a x1 or x1/a. ---
    auto ht_odd = [&](int N, bool bar) {
        auto v = rng.distinct_rationals(2 * N + 1);  // v[0..2N-1] = x_k, v[2N] = x
        Rational vx = v[2 * N];
        IceModel lhs_m = IceModel::build(ModelKind::HtOdd, 2 * N + 1);
        IceModel rhs_m = IceModel::build(ModelKind::HtEven, 2 * N);
        std::vector<Rational> l1(v.begin(), v.begin() + N);
        std::vector<Rational> l2(v.begin() + N, v.begin() + 2 * N);
        for (EdgeTag star : {EdgeTag::DownRight, EdgeTag::UpLeft}) {
            std::vector<BR> lb = values(std::vector<Rational>(v.begin(), v.begin() + 2 * N));
            lb.push_back(BR::value(vx));
            lb.push_back(BR::a_times(v[0], bar ? -1 : 1));
            auto lhs = partition_generic(lhs_m, assign_slots(lhs_m, lb), star);

            std::vector<BR> rb = values(std::vector<Rational>(v.begin() + 1, v.begin() + 2 * N));
            if (bar) {
                rb.push_back(BR::value(vx));
                rb.push_back(BR::value(v[0]));
            } else {
                rb.push_back(BR::value(v[0]));
                rb.push_back(BR::value(vx));
            }
            PolyR pf = prefactor_generic(bar ? PrefactorKind::AbarH1 : PrefactorKind::AH1, v[0],
                                         l1, l2);
            EdgeTag square = bar ? ht_partner_bax(star) : ht_partner_ax(star);
            auto rhs = pf * partition_generic(rhs_m, assign_slots(rhs_m, rb), square);
            CheckResult r = eq_check("", lhs, rhs, std::string("tag ") + to_string(star));
            if (!r.pass) return r;
        }
        return CheckResult{"", true, ""};
    };
    run("spec:Z_HT odd ax N=1", [&] { return ht_odd(1, false); });
    run("spec:Z_HT odd bax N=1", [&] { return ht_odd(1, true); });
    run("spec:Z_HT odd ax N=2", [&] { return ht_odd(2, false); });
    run("spec:Z_HT odd bax N=2", [&] { return ht_odd(2, true); });

    // --- Z_HT even -> odd, y = a xN (ax) or x = xN/a (bax). ---
    auto ht_even = [&](int N, bool bar) {
        auto v = rng.distinct_rationals(2 * N);  // v[0..2N-2] = x_k, v[2N-1] = free track value
        Rational pivot = v[N - 1], free = v[2 * N - 1];
        IceModel lhs_m = IceModel::build(ModelKind::HtEven, 2 * N);
        IceModel rhs_m = IceModel::build(ModelKind::HtOdd, 2 * N - 1);
        std::vector<Rational> l1(v.begin(), v.begin() + (N - 1));
        std::vector<Rational> l2(v.begin() + (N - 1), v.begin() + (2 * N - 1));
        for (EdgeTag star : {EdgeTag::ArcUp, EdgeTag::ArcDown}) {
            std::vector<BR> lb = values(std::vector<Rational>(v.begin(), v.begin() + 2 * N - 1));
            if (bar) {
                lb.push_back(BR::a_times(pivot, -1));  // x slot
                lb.push_back(BR::value(free));         // y slot
            } else {
                lb.push_back(BR::value(free));
                lb.push_back(BR::a_times(pivot, 1));
            }
            auto lhs = partition_generic(lhs_m, assign_slots(lhs_m, lb), star);

            std::vector<Rational> xrest;
            for (int k = 0; k < 2 * N - 1; ++k)
                if (k != N - 1) xrest.push_back(v[k]);
            std::vector<BR> rb = values(xrest);
            rb.push_back(BR::value(free));
            rb.push_back(BR::value(pivot));
            PolyR bridge = sig_a_generic(1, (bar ? pivot * free.inverse() : free * pivot.inverse()));
            PolyR pf = prefactor_generic(bar ? PrefactorKind::AbarH0 : PrefactorKind::AH0, pivot,
                                         l1, l2);
            EdgeTag square = bar ? ht_partner_even_bax(star) : ht_partner_even_ax(star);
            auto rhs = bridge * pf * partition_generic(rhs_m, assign_slots(rhs_m, rb), square);
            CheckResult r = eq_check("", lhs, rhs, std::string("tag ") + to_string(star));
            if (!r.pass) return r;
        }
        return CheckResult{"", true, ""};
    };
    run("spec:Z_HT even ax N=1", [&] { return ht_even(1, false); });
    run("spec:Z_HT even bax N=1", [&] { return ht_even(1, true); });
    run("spec:Z_HT even ax N=2", [&] { return ht_even(2, false); });
    run("spec:Z_HT even bax N=2", [&] { return ht_even(2, true); });

    // --- Z_QT at even size 2m -> 2m-2, x = x1/a (bax) or y = a x1 (ax). ---
    auto qt_spec = [&](int two_m, bool bar) {
        int m = two_m / 2;
        ModelKind lk = (two_m % 4 == 0) ? ModelKind::Qt : ModelKind::Qqt;
        ModelKind rk = (two_m % 4 == 0) ? ModelKind::Qqt : ModelKind::Qt;
        IceModel lhs_m = IceModel::build(lk, two_m);
        IceModel rhs_m = IceModel::build(rk, two_m - 2);
        auto v = rng.distinct_rationals(m);  // v[0..m-2] = x_k, v[m-1] = the free slot value
        Rational pivot = v[0], free = v[m - 1];
        std::vector<Rational> l(v.begin(), v.begin() + (m - 1));
        auto [t1, t2] = lhs_m.tag_pair();
        for (EdgeTag star : {t1, t2}) {
            std::vector<BR> lb = values(std::vector<Rational>(v.begin(), v.begin() + m - 1));
            if (bar) {
                lb.push_back(BR::a_times(pivot, -1));
                lb.push_back(BR::value(free));
            } else {
                lb.push_back(BR::value(free));
                lb.push_back(BR::a_times(pivot, 1));
            }
            auto lhs = partition_generic(lhs_m, assign_slots(lhs_m, lb), star);

            std::vector<BR> rb = values(std::vector<Rational>(v.begin() + 1, v.begin() + m - 1));
            if (bar) {
                rb.push_back(BR::value(free));
                rb.push_back(BR::value(pivot));
            } else {
                rb.push_back(BR::value(pivot));
                rb.push_back(BR::value(free));
            }
            PolyR bridge = sig_a_generic(1, (bar ? pivot * free.inverse() : free * pivot.inverse()));
            PolyR pf = prefactor_generic(bar ? PrefactorKind::AbarQ : PrefactorKind::AQ, pivot, l);
            EdgeTag square = bar ? qt_partner_bax(star) : qt_partner_ax(star);
            auto rhs = bridge * pf * partition_generic(rhs_m, assign_slots(rhs_m, rb), square);
            CheckResult r = eq_check("", lhs, rhs, std::string("tag ") + to_string(star));
            if (!r.pass) return r;
        }
        return CheckResult{"", true, ""};
    };
    run("spec:Z_QT bax 2m=6", [&] { return qt_spec(6, true); });
    run("spec:Z_QT ax 2m=6", [&] { return qt_spec(6, false); });
    run("spec:Z_QT bax 2m=8", [&] { return qt_spec(8, true); });
    run("spec:Z_QT ax 2m=8", [&] { return qt_spec(8, false); });

    // --- Diagonal specializations x = a y. ---
    run("spec:diag Z_QT N=1", [&] {
        IceModel lhs_m = IceModel::build(ModelKind::Qqt, 6);
        IceModel rhs_m = IceModel::build(ModelKind::Qt, 4);
        auto v = rng.distinct_rationals(3);  // x1, x2, y
        Rational y = v[2];
        auto lhs = partition_generic(
            lhs_m, assign_slots(lhs_m, {BR::value(v[0]), BR::value(v[1]), BR::a_times(y, 1),
                                        BR::value(y)}));
        PolyR pf = sig_a_generic(1, Rational(1));
        for (int k = 0; k < 2; ++k)
            pf *= sig_a_generic(1, v[k] * y.inverse()) * sig_a_generic(2, y * v[k].inverse());
        auto rhs =
            pf * partition_generic(rhs_m, assign_slots(rhs_m, values({v[0], v[1], v[1]})));
        return eq_check("", lhs, rhs);
    });
    run("spec:diag Z_HT N=1", [&] {
        IceModel lhs_m = IceModel::build(ModelKind::HtOdd, 3);
        IceModel rhs_m = IceModel::build(ModelKind::HtEven, 2);
        auto v = rng.distinct_rationals(3);  // x1, x2, y
        Rational y = v[2];
        auto lhs = partition_generic(
            lhs_m, assign_slots(lhs_m, {BR::value(v[0]), BR::value(v[1]), BR::a_times(y, 1),
                                        BR::value(y)}));
        PolyR pf = sig_a_generic(1, v[0] * y.inverse()) * sig_a_generic(2, y * v[1].inverse());
        auto rhs =
            pf * partition_generic(rhs_m, assign_slots(rhs_m, values({v[1], v[0], v[0]})));
        return eq_check("", lhs, rhs);
    });
    run("spec:diag Z_HT N=2", [&] {
        IceModel lhs_m = IceModel::build(ModelKind::HtOdd, 5);
        IceModel rhs_m = IceModel::build(ModelKind::HtEven, 4);
        auto v = rng.distinct_rationals(5);  // x1..x4, y
        Rational y = v[4];
        std::vector<BR> lb = values({v[0], v[1], v[2], v[3]});
        lb.push_back(BR::a_times(y, 1));
        lb.push_back(BR::value(y));
        auto lhs = partition_generic(lhs_m, assign_slots(lhs_m, lb));
        PolyR pf = sig_a_generic(1, v[0] * y.inverse()) * sig_a_generic(1, v[1] * y.inverse()) *
                   sig_a_generic(2, y * v[2].inverse()) * sig_a_generic(2, y * v[3].inverse());
        auto rhs = pf * partition_generic(
                            rhs_m, assign_slots(rhs_m, values({v[0], v[2], v[3], v[1], v[1]})));
        return eq_check("", lhs, rhs);
    });

    return out;
}

// ---------------------------------------------------------------------------
// Prefactor compaction at a = w.
// ---------------------------------------------------------------------------

std::vector<CheckResult> prefactor_compaction_suite(int tuples, uint64_t seed) {
    std::vector<CheckResult> out;
    Rng rng(seed);
    const PrefactorKind kinds[] = {PrefactorKind::A,     PrefactorKind::Abar,
                                   PrefactorKind::AH1,   PrefactorKind::AbarH1,
                                   PrefactorKind::AH0,   PrefactorKind::AbarH0,
                                   PrefactorKind::AQ,    PrefactorKind::AbarQ};
    const char* names[] = {"A", "Abar", "AH1", "AbarH1", "AH0", "AbarH0", "AQ", "AbarQ"};
    for (int k = 0; k < 8; ++k) {
        bool ok = true;
        std::string wit;
        for (int t = 0; t < tuples && ok; ++t) {
            auto v = rng.distinct_rationals(5);
            Rational u = v[0];
            std::vector<Rational> l1 = {v[1], v[2]}, l2 = {v[3], v[4]};
            PolyR generic = prefactor_generic(kinds[k], u, l1, l2);
            Cyclotomic at_o = evaluate_omega6(generic).constant_value();
            std::vector<Cyclotomic> c1 = {Cyclotomic(v[1]), Cyclotomic(v[2])};
            std::vector<Cyclotomic> c2 = {Cyclotomic(v[3]), Cyclotomic(v[4])};
            Cyclotomic full = prefactor_omega6(kinds[k], Cyclotomic(u), c1, c2);
            Cyclotomic compact = prefactor_omega6_compact(kinds[k], Cyclotomic(u), c1, c2);
            if (at_o != full || full != compact) {
                ok = false;
                wit = "tuple " + std::to_string(t) + ": generic@w=" + at_o.to_string() +
                      " full=" + full.to_string() + " compact=" + compact.to_string();
            }
        }
        out.push_back({std::string("prefactor:") + names[k], ok, wit});
    }

    // Product comparison behind the size-(4N) to size-(4N+2) step:
    // A(xi, X\xi, x) AH1(xi, X\xi) = sigma(a x / xi) AQ(xi, X) at a = w.
    bool ok = true;
    std::string wit;
    for (int t = 0; t < tuples && ok; ++t) {
        auto v = rng.distinct_rationals(4);  // xi, two companions, x
        Cyclotomic xi(v[0]);
        std::vector<Cyclotomic> rest = {Cyclotomic(v[1]), Cyclotomic(v[2])};
        Cyclotomic x(v[3]);
        std::vector<Cyclotomic> rest_and_x = rest;
        rest_and_x.push_back(x);
        std::vector<Cyclotomic> all = rest;
        all.push_back(xi);
        Cyclotomic lhs = prefactor_omega6(PrefactorKind::A, xi, rest_and_x, {xi}) *
                         prefactor_omega6(PrefactorKind::AH1, xi, {xi}, rest);
        Cyclotomic rhs = sig_a_omega6(1, x * xi.inverse()) *
                         prefactor_omega6(PrefactorKind::AQ, xi, all);
        if (lhs != rhs) {
            ok = false;
            wit = "tuple " + std::to_string(t) + ": lhs=" + lhs.to_string() +
                  " rhs=" + rhs.to_string();
        }
    }
    out.push_back({"prefactor:A*AH1=sig*AQ", ok, wit});
    return out;
}

// ---------------------------------------------------------------------------
// Main factorization.
// ---------------------------------------------------------------------------

std::vector<CheckResult> main_theorem_suite(int level, uint64_t seed) {
    std::vector<CheckResult> out;
    Rng rng(seed);
    Cyclotomic so = sigma_omega();

    for (int N = 1; N <= level; ++N) {
        {  // size 4N: resolved identities, x symbolic.
            IceModel qt = IceModel::build(ModelKind::Qt, 4 * N);
            IceModel ht = IceModel::build(ModelKind::HtEven, 2 * N);
            IceModel z = IceModel::build(ModelKind::Dwbc, N);
            auto v = rng.distinct_rationals(2 * N);  // x_1..x_{2N-1}, y
            Rational yv = v[2 * N - 1];
            std::vector<BC> qb, zxb, zyb;
            for (int k = 0; k < 2 * N - 1; ++k) {
                qb.push_back(BC::value(Cyclotomic(v[k])));
                zxb.push_back(BC::value(Cyclotomic(v[k])));
                zyb.push_back(BC::value(Cyclotomic(v[k])));
            }
            qb.push_back(BC::symbol("x"));
            qb.push_back(BC::value(Cyclotomic(yv)));
            zxb.push_back(BC::symbol("x"));
            zyb.push_back(BC::value(Cyclotomic(yv)));
            PolyC zx = partition_omega6(z, assign_slots(z, zxb));
            PolyC zy = partition_omega6(z, assign_slots(z, zyb));
            for (auto [qtag, htag] :
                 {std::pair{EdgeTag::Converging, EdgeTag::ArcUp},
                  std::pair{EdgeTag::Diverging, EdgeTag::ArcDown}}) {
                PolyC lhs = partition_omega6(qt, assign_slots(qt, qb), qtag).scaled(so);
                PolyC rhs = partition_omega6(ht, assign_slots(ht, qb), htag) * zx * zy;
                out.push_back(eq_check("main:size4N N=" + std::to_string(N) + " tag " +
                                           to_string(qtag),
                                       lhs, rhs));
            }
        }
        {  // size 4N+2: resolved identities, x symbolic.
            IceModel qt = IceModel::build(ModelKind::Qqt, 4 * N + 2);
            IceModel ht = IceModel::build(ModelKind::HtOdd, 2 * N + 1);
            IceModel zn = IceModel::build(ModelKind::Dwbc, N);
            IceModel zn1 = IceModel::build(ModelKind::Dwbc, N + 1);
            auto v = rng.distinct_rationals(2 * N + 1);  // x_1..x_2N, y
            Rational yv = v[2 * N];
            std::vector<BC> qb, znb, zn1b;
            for (int k = 0; k < 2 * N; ++k) {
                qb.push_back(BC::value(Cyclotomic(v[k])));
                znb.push_back(BC::value(Cyclotomic(v[k])));
                zn1b.push_back(BC::value(Cyclotomic(v[k])));
            }
            qb.push_back(BC::symbol("x"));
            qb.push_back(BC::value(Cyclotomic(yv)));
            zn1b.push_back(BC::symbol("x"));
            zn1b.push_back(BC::value(Cyclotomic(yv)));
            PolyC zn_val = partition_omega6(zn, assign_slots(zn, znb));
            PolyC zn1_val = partition_omega6(zn1, assign_slots(zn1, zn1b));
            for (EdgeTag tag : {EdgeTag::DownRight, EdgeTag::UpLeft}) {
                PolyC lhs = partition_omega6(qt, assign_slots(qt, qb), tag).scaled(so);
                PolyC rhs = partition_omega6(ht, assign_slots(ht, qb), tag) * zn1_val * zn_val;
                out.push_back(eq_check("main:size4N+2 N=" + std::to_string(N) + " tag " +
                                           to_string(tag),
                                       lhs, rhs));
            }
        }
        {  // Unresolved identity at size 4N+2 through sample points in x.
            IceModel qt = IceModel::build(ModelKind::Qqt, 4 * N + 2);
            IceModel ht = IceModel::build(ModelKind::HtOdd, 2 * N + 1);
            IceModel zn = IceModel::build(ModelKind::Dwbc, N);
            IceModel zn1 = IceModel::build(ModelKind::Dwbc, N + 1);
            auto v = rng.distinct_rationals(2 * N + 1);
            auto points = rng.distinct_rationals(2 * N + 1, v);  // half-width 2N, so 2N+1 points
            bool ok = true;
            std::string wit;
            for (const Rational& px : points) {
                std::vector<BC> qb, znb, zn1b;
                for (int k = 0; k < 2 * N; ++k) {
                    qb.push_back(BC::value(Cyclotomic(v[k])));
                    znb.push_back(BC::value(Cyclotomic(v[k])));
                    zn1b.push_back(BC::value(Cyclotomic(v[k])));
                }
                qb.push_back(BC::value(Cyclotomic(px)));
                qb.push_back(BC::value(Cyclotomic(v[2 * N])));
                zn1b.push_back(BC::value(Cyclotomic(px)));
                zn1b.push_back(BC::value(Cyclotomic(v[2 * N])));
                PolyC lhs = partition_omega6(qt, assign_slots(qt, qb)).scaled(so);
                PolyC rhs = partition_omega6(ht, assign_slots(ht, qb)) *
                            partition_omega6(zn1, assign_slots(zn1, zn1b)) *
                            partition_omega6(zn, assign_slots(zn, znb));
                if (lhs != rhs) {
                    ok = false;
                    wit = "x = " + px.to_string() + "\nlhs = " + lhs.to_string() +
                          "\nrhs = " + rhs.to_string();
                    break;
                }
            }
            out.push_back({"main:size4N+2 N=" + std::to_string(N) + " points", ok, wit});
        }
    }
    return out;
}

std::vector<CheckResult> run_suites(const std::string& which, int level, uint64_t seed) {
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> v) {
        for (auto& r : v) out.push_back(std::move(r));
    };
    bool all = which == "all";
    if (all || which == "yb") {
        out.push_back(check_yang_baxter());
        for (int w = 1; w <= 3; ++w) out.push_back(check_line_exchange(w, seed + w));
        out.push_back(check_loop_closure(seed));
        for (int w = 1; w <= 3; ++w) out.push_back(check_loop_exchange(w, seed + 7 * w));
        out.push_back(check_grid_pass(1, 2, seed + 11));
        out.push_back(check_grid_pass(2, 2, seed + 13));
    }
    if (all || which == "symmetry") append(symmetry_suite(level, seed));
    if (all || which == "spec") {
        append(specialization_suite(level >= 2 ? 20 : 5, seed));
        append(prefactor_compaction_suite(level >= 2 ? 100 : 20, seed + 17));
    }
    if (all || which == "main") append(main_theorem_suite(std::min(level, 2), seed));
    if (all || which == "counting") append(counting_suite(std::min(level, 2)));
    if (all) {
        int sym = level >= 2 ? 10 : 7;
        int dwbc = level >= 2 ? 6 : 4;
        append(model_consistency_suite(sym, dwbc));
    }
    if (out.empty()) throw ValidationError("unknown suite '" + which + "'");
    return out;
}

} // namespace icelab
