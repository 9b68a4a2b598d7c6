#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "icelab/checks.hpp"
#include "icelab/json_io.hpp"
#include "icelab/partition.hpp"

using namespace icelab;

using PolyR = LaurentPoly<Rational>;
using PolyC = LaurentPoly<Cyclotomic>;
using BR = SlotBinding<Rational>;
using BC = SlotBinding<Cyclotomic>;

namespace {

PolyR sig(std::map<std::string, int> pows) {
    return sigma_monomial(PolyR::monomial(Rational(1), pows));
}

template <class F>
Assignment<F> bind_all(const IceModel& m, const std::vector<SlotBinding<F>>& vals) {
    REQUIRE(vals.size() == m.slots().size());
    Assignment<F> a;
    for (size_t i = 0; i < vals.size(); ++i) a[m.slots()[i]] = vals[i];
    return a;
}

Assignment<Rational> symbols_for(const IceModel& m) {
    Assignment<Rational> a;
    for (const auto& s : m.slots()) a[s] = BR::symbol(s);
    return a;
}

AsmMatrix example_minus() {
    return AsmMatrix({{0, 0, 0, 1, 0, 0},
                      {0, 0, 1, 0, 0, 0},
                      {1, 0, 0, -1, 1, 0},
                      {0, 1, -1, 0, 0, 1},
                      {0, 0, 0, 1, 0, 0},
                      {0, 0, 1, 0, 0, 0}});
}

AsmMatrix example_plus() {
    return AsmMatrix({{0, 0, 1, 0, 0, 0},
                      {0, 1, -1, 0, 1, 0},
                      {0, 0, 1, 0, -1, 1},
                      {1, -1, 0, 1, 0, 0},
                      {0, 1, 0, -1, 1, 0},
                      {0, 0, 0, 1, 0, 0}});
}

} // namespace

TEST_CASE("grid bijection basics") {
    FullIceState one(AsmMatrix(std::vector<std::vector<int>>{{1}}));
    CHECK(one.kind(1, 1) == VertexKind::Plus);
    CHECK(one.h_east(1, 0));        // west stub points in
    CHECK_FALSE(one.h_east(1, 1));  // east stub points in
    CHECK(one.v_up(0, 1));          // north stub points out
    CHECK_FALSE(one.v_up(1, 1));    // south stub points out
    CHECK(one.obeys_ice_rule());

    FullIceState id2(AsmMatrix::identity(2));
    CHECK(id2.kind(1, 1) == VertexKind::Plus);
    CHECK(id2.kind(2, 2) == VertexKind::Plus);
    CHECK(id2.kind(1, 2) == VertexKind::ZeroWestUp);
    CHECK(id2.kind(2, 1) == VertexKind::ZeroEastDown);
}

TEST_CASE("bijection round trip on all size-4 matrices") {
    auto all = collect_asms(4, SymmetryClass::Unrestricted);
    CHECK(all.size() == 42);
    for (const AsmMatrix& m : all) {
        FullIceState s(m);
        CHECK(s.obeys_ice_rule());
        CHECK(s.to_asm() == m);
    }
}

TEST_CASE("model shapes") {
    IceModel d1 = IceModel::build(ModelKind::Dwbc, 1);
    CHECK(d1.tetravalent_count() == 1);
    CHECK(d1.slots() == std::vector<std::string>{"x1", "x2"});

    CHECK(IceModel::build(ModelKind::Dwbc, 4).tetravalent_count() == 16);
    CHECK(IceModel::build(ModelKind::HtEven, 6).tetravalent_count() == 18);   // 2N^2, N=3
    CHECK(IceModel::build(ModelKind::HtOdd, 7).tetravalent_count() == 24);    // 2N^2+2N, N=3
    CHECK(IceModel::build(ModelKind::Qt, 8).tetravalent_count() == 15);       // 4N^2-1, N=2
    CHECK(IceModel::build(ModelKind::Qqt, 10).tetravalent_count() == 24);     // 4N^2+4N, N=2

    CHECK(IceModel::build(ModelKind::HtEven, 2).slots() ==
          std::vector<std::string>{"x1", "x", "y"});
    CHECK(IceModel::build(ModelKind::HtOdd, 3).slots() ==
          std::vector<std::string>{"x1", "x2", "x", "y"});
    CHECK(IceModel::build(ModelKind::Qt, 4).slots() == std::vector<std::string>{"x1", "x", "y"});
    CHECK(IceModel::build(ModelKind::Qqt, 6).slots() ==
          std::vector<std::string>{"x1", "x2", "x", "y"});

    CHECK_THROWS_AS(IceModel::build(ModelKind::Qt, 6), ValidationError);
    CHECK_THROWS_AS(IceModel::build(ModelKind::Qqt, 8), ValidationError);
    CHECK_THROWS_AS(IceModel::build(ModelKind::HtEven, 3), ValidationError);
    CHECK_THROWS_AS(IceModel::build(ModelKind::HtOdd, 4), ValidationError);
}

TEST_CASE("closed form of Z at sizes 1 and 2") {
    IceModel z1 = IceModel::build(ModelKind::Dwbc, 1);
    CHECK(partition_generic(z1, symbols_for(z1)) ==
          sig({{"a", 2}}) + PolyR::zero({"x1", "x2"}));

    IceModel z2 = IceModel::build(ModelKind::Dwbc, 2);
    PolyR sa2 = sig({{"a", 2}});
    PolyR want = sa2 * sa2 *
                 (sig({{"a", 1}, {"x1", 1}, {"x3", -1}}) * sig({{"a", 1}, {"x2", 1}, {"x4", -1}}) +
                  sig({{"a", 1}, {"x4", 1}, {"x1", -1}}) * sig({{"a", 1}, {"x3", 1}, {"x2", -1}}));
    CHECK(partition_generic(z2, symbols_for(z2)) == want);
}

TEST_CASE("closed form of the half-turn partition functions at small size") {
    IceModel h2 = IceModel::build(ModelKind::HtEven, 2);
    PolyR sa2 = sig({{"a", 2}});
    PolyR want2 = sa2 * (sig({{"a", 1}, {"x", 1}, {"x1", -1}}) +
                         sig({{"a", 1}, {"x1", 1}, {"y", -1}}));
    CHECK(partition_generic(h2, symbols_for(h2)) == want2);

    IceModel h3 = IceModel::build(ModelKind::HtOdd, 3);
    PolyR want3 =
        sa2 * (sig({{"a", 1}, {"x1", 1}, {"x2", -1}}) * sig({{"a", 1}, {"x", 1}, {"x2", -1}}) *
                   sig({{"a", 1}, {"x1", 1}, {"y", -1}}) +
               sig({{"a", 1}, {"x2", 1}, {"x", -1}}) * sig({{"a", 1}, {"x2", 1}, {"x1", -1}}) *
                   sig({{"a", 1}, {"y", 1}, {"x1", -1}}) +
               sig({{"a", 1}, {"x1", 1}, {"x2", -1}}) * sig({{"a", 1}, {"x2", 1}, {"x1", -1}}) *
                   sa2);
    CHECK(partition_generic(h3, symbols_for(h3)) == want3);
}

TEST_CASE("closed form of the quarter-turn partition function at size 4") {
    IceModel q4 = IceModel::build(ModelKind::Qt, 4);
    PolyR sa = sig({{"a", 1}});
    PolyR sa2 = sig({{"a", 2}});
    PolyR want = sa * sa2 *
                 (sig({{"a", 1}, {"x", 1}, {"x1", -1}}) + sig({{"a", 1}, {"x1", 1}, {"y", -1}}));
    CHECK(partition_generic(q4, symbols_for(q4)) == want);

    // Resolved parts: odd and even in x, of half-widths 1 and 0.
    PolyR conv = partition_generic(q4, symbols_for(q4), EdgeTag::Converging);
    PolyR divp = partition_generic(q4, symbols_for(q4), EdgeTag::Diverging);
    CHECK(conv == sa * sa2 * sig({{"a", 1}, {"x", 1}, {"x1", -1}}));
    CHECK(divp == sa * sa2 * sig({{"a", 1}, {"x1", 1}, {"y", -1}}));
    CHECK(conv + divp == partition_generic(q4, symbols_for(q4)));
}

TEST_CASE("resolved parts are the stated parity components") {
    Rng rng(7);
    // Size 4N: Converging odd, Diverging even in x; size 4N+2: UpLeft odd,
    // DownRight even; even half turn: ArcUp parity of N, ArcDown of N-1;
    // odd half turn: DownRight parity of N, UpLeft of N-1.
    for (auto [kind, n] : {std::pair{ModelKind::Qt, 4}, std::pair{ModelKind::Qqt, 6},
                           std::pair{ModelKind::HtEven, 2}, std::pair{ModelKind::HtOdd, 3},
                           std::pair{ModelKind::Qt, 8}, std::pair{ModelKind::HtEven, 4}}) {
        IceModel m = IceModel::build(kind, n);
        std::vector<BR> vals;
        auto v = rng.distinct_rationals(m.slots().size());
        for (size_t i = 0; i + 2 < m.slots().size(); ++i) vals.push_back(BR::value(v[i]));
        vals.push_back(BR::symbol("x"));
        vals.push_back(BR::value(v[m.slots().size() - 1]));
        auto [t1, t2] = m.tag_pair();
        PolyR z = partition_generic(m, bind_all(m, vals));
        PolyR p1 = partition_generic(m, bind_all(m, vals), t1);
        PolyR p2 = partition_generic(m, bind_all(m, vals), t2);
        CHECK(p1 + p2 == z);
        auto [even, odd] = z.parity_split("x");
        int N = m.size_param();
        bool first_is_odd;
        switch (kind) {
            case ModelKind::Qt: first_is_odd = true; break;            // Converging
            case ModelKind::Qqt: first_is_odd = true; break;           // UpLeft
            case ModelKind::HtEven: first_is_odd = N % 2 == 1; break;  // ArcUp ~ parity of N
            default: first_is_odd = N % 2 == 0; break;  // HtOdd UpLeft ~ parity of N-1
        }
        CHECK(p1 == (first_is_odd ? odd : even));
        CHECK(p2 == (first_is_odd ? even : odd));
    }
}

TEST_CASE("half widths of the resolved parts at N=1") {
    Rng rng(11);
    auto vals = rng.distinct_rationals(3);

    IceModel q4 = IceModel::build(ModelKind::Qt, 4);
    auto a4 = bind_all<Rational>(q4, {BR::value(vals[0]), BR::symbol("x"), BR::value(vals[1])});
    PolyR conv = partition_generic(q4, a4, EdgeTag::Converging);
    PolyR divp = partition_generic(q4, a4, EdgeTag::Diverging);
    CHECK(conv.half_width("x") == 1);
    CHECK(conv.is_centered("x"));
    CHECK(divp.half_width("x") == 0);
    CHECK(divp.is_centered("x"));

    IceModel q6 = IceModel::build(ModelKind::Qqt, 6);
    auto a6 = bind_all<Rational>(q6, {BR::value(vals[0]), BR::value(vals[1]), BR::symbol("x"),
                                      BR::value(vals[2])});
    PolyR up = partition_generic(q6, a6, EdgeTag::UpLeft);
    PolyR down = partition_generic(q6, a6, EdgeTag::DownRight);
    CHECK(down.half_width("x") == 2);
    CHECK(down.is_centered("x"));
    CHECK(up.half_width("x") == 1);
    CHECK(up.is_centered("x"));
}

TEST_CASE("state tags of the printed size-6 examples") {
    IceModel q6 = IceModel::build(ModelKind::Qqt, 6);
    CHECK(q6.state_tag(FullIceState(example_minus())) == EdgeTag::UpLeft);
    CHECK(q6.state_tag(FullIceState(example_plus())) == EdgeTag::DownRight);
    CHECK(q6.wiring_consistent(FullIceState(example_minus())));
    CHECK(q6.wiring_consistent(FullIceState(example_plus())));
}

TEST_CASE("all-ones evaluation counts states") {
    for (int n = 1; n <= 4; ++n) {
        IceModel z = IceModel::build(ModelKind::Dwbc, n);
        PolyC got = partition_omega6(z, ones_assignment_omega6(z));
        Cyclotomic want = sigma_omega().pow(n * n) *
                          Cyclotomic(Rational(count_asms(n, SymmetryClass::Unrestricted)));
        CHECK(got == PolyC::constant(want));
    }
    IceModel q6 = IceModel::build(ModelKind::Qqt, 6);
    CHECK(partition_omega6(q6, ones_assignment_omega6(q6)) ==
          PolyC::constant(sigma_omega().pow(8) * Cyclotomic(6)));

    // Generic regime at all ones: each state weighs sigma(a^2)^k sigma(a)^(V-k)
    // with k its nonzero count; at size 2 both states give k = 2, V = 4.
    IceModel z2 = IceModel::build(ModelKind::Dwbc, 2);
    PolyR sa = sig({{"a", 1}}), sa2 = sig({{"a", 2}});
    CHECK(partition_generic(z2, ones_assignment_generic(z2)) ==
          (sa2 * sa2 * sa * sa).scaled(Rational(2)));
}

TEST_CASE("vertex weights") {
    // +-1 kinds weigh sigma(a^2) whatever the parameter.
    CHECK(vertex_weight_omega6(VertexKind::Plus, Cyclotomic(7)) == sigma_omega());
    CHECK(vertex_weight_omega6(VertexKind::Minus, Cyclotomic(Rational(2, 5))) == sigma_omega());
    // A direct zero kind at parameter 1/a weighs sigma(1) = 0.
    PolyR inv_a = PolyR::variable("a", -1);
    CHECK(vertex_weight_generic(VertexKind::ZeroWestUp, inv_a).is_zero());
    CHECK(vertex_weight_generic(VertexKind::ZeroEastDown, inv_a).is_zero());
    // Divalent vertices weigh 1.
    CHECK(vertex_weight_generic(VertexKind::Divalent, PolyR::variable("x")) ==
          PolyR::constant(Rational(1)));
    CHECK(vertex_weight_omega6(VertexKind::Divalent, Cyclotomic(9)) == Cyclotomic(1));
    // Inverted zero kinds at a symbolic parameter.
    CHECK(vertex_weight_generic(VertexKind::ZeroEastUp, PolyR::variable("x")) ==
          sig({{"a", 1}, {"x", -1}}));
}

TEST_CASE("half widths at N=2") {
    Rng rng(23);
    auto v = rng.distinct_rationals(5);

    IceModel q8 = IceModel::build(ModelKind::Qt, 8);
    auto a8 = bind_all<Rational>(q8, {BR::value(v[0]), BR::value(v[1]), BR::value(v[2]),
                                      BR::symbol("x"), BR::value(v[3])});
    PolyR conv = partition_generic(q8, a8, EdgeTag::Converging);
    PolyR divp = partition_generic(q8, a8, EdgeTag::Diverging);
    CHECK(conv.half_width("x") == 3);
    CHECK(conv.is_centered("x"));
    CHECK(divp.half_width("x") == 2);
    CHECK(divp.is_centered("x"));

    IceModel q10 = IceModel::build(ModelKind::Qqt, 10);
    auto a10 = bind_all<Rational>(q10, {BR::value(v[0]), BR::value(v[1]), BR::value(v[2]),
                                        BR::value(v[3]), BR::symbol("x"), BR::value(v[4])});
    PolyR down = partition_generic(q10, a10, EdgeTag::DownRight);
    PolyR up = partition_generic(q10, a10, EdgeTag::UpLeft);
    CHECK(down.half_width("x") == 4);
    CHECK(down.is_centered("x"));
    CHECK(up.half_width("x") == 3);
    CHECK(up.is_centered("x"));
}

TEST_CASE("junction metadata") {
    CHECK_FALSE(IceModel::build(ModelKind::Dwbc, 3).junction_cell().has_value());
    CHECK(IceModel::build(ModelKind::HtOdd, 3).junction_cell() == std::pair{2, 2});
    CHECK(IceModel::build(ModelKind::Qqt, 6).junction_cell() == std::pair{4, 3});
    CHECK(IceModel::build(ModelKind::Qt, 4).divalent_arcs().size() == 2);
}

TEST_CASE("assignment errors") {
    IceModel z1 = IceModel::build(ModelKind::Dwbc, 1);
    Assignment<Rational> missing;
    missing["x1"] = BR::value(Rational(1));
    CHECK_THROWS_AS(partition_generic(z1, missing), ValidationError);
    Assignment<Rational> zero;
    zero["x1"] = BR::value(Rational(0));
    zero["x2"] = BR::value(Rational(1));
    CHECK_THROWS_AS(partition_generic(z1, zero), ZeroDivisionError);
    Assignment<Rational> reserved;
    reserved["x1"] = BR::symbol("a");
    reserved["x2"] = BR::value(Rational(1));
    CHECK_THROWS_AS(partition_generic(z1, reserved), ValidationError);

    // A resolved part only makes sense for the owning model's tags.
    CHECK_THROWS_AS(partition_generic(z1, symbols_for(z1), EdgeTag::Converging),
                    ValidationError);
    IceModel q4 = IceModel::build(ModelKind::Qt, 4);
    CHECK_THROWS_AS(partition_generic(q4, symbols_for(q4), EdgeTag::ArcUp), ValidationError);
}

TEST_CASE("json round trips") {
    AsmMatrix m = example_plus();
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    IceModel z1 = IceModel::build(ModelKind::Dwbc, 1);
    auto j = poly_to_json(partition_generic(z1, symbols_for(z1)));
    CHECK(j.at("vars").size() == 3);  // a, x1, x2
    CHECK(j.at("terms").size() == 2);
}
