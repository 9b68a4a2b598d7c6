#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "icelab/enumerate.hpp"

using namespace icelab;

namespace {

// The two size-6 matrices that are quasi-invariant under a quarter turn,
// one for each central pattern.
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

TEST_CASE("validation") {
    CHECK(AsmMatrix::validate({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK_FALSE(AsmMatrix::validate({{1, -1}, {0, 1}}));  // first row sums to 0
    CHECK_FALSE(AsmMatrix::validate({{1, 1}, {0, 0}}));
    CHECK_THROWS_AS(AsmMatrix::validate({{1, 0}, {0}}), ValidationError);
    CHECK_THROWS_AS(AsmMatrix::validate({{2, -1}, {-1, 2}}), ValidationError);
    CHECK(example_minus().is_valid());
    CHECK(example_plus().is_valid());
}

TEST_CASE("rotations") {
    AsmMatrix id2 = AsmMatrix::identity(2);
    CHECK(id2.rotate_half() == id2);
    CHECK(id2.rotate_quarter().rotate_quarter() == id2.rotate_half());
    // Four quarter turns restore every size-4 and size-5 matrix, and each
    // rotation stays inside the class.
    for (int n : {4, 5}) {
        for (const AsmMatrix& m : collect_asms(n, SymmetryClass::Unrestricted)) {
            AsmMatrix r = m.rotate_quarter();
            CHECK(r.is_valid());
            CHECK(r.rotate_quarter().rotate_quarter().rotate_quarter() == m);
        }
    }
}

TEST_CASE("class membership") {
    AsmMatrix id4 = AsmMatrix::identity(4);
    CHECK(id4.is_member(SymmetryClass::Unrestricted));
    CHECK(id4.is_member(SymmetryClass::HalfTurn));
    CHECK_FALSE(id4.is_member(SymmetryClass::QuarterTurn));

    CHECK(example_minus().is_member(SymmetryClass::QuasiQuarterTurn));
    CHECK(example_plus().is_member(SymmetryClass::QuasiQuarterTurn));
    CHECK(example_minus().center_pattern() == CenterPattern::MinusPair);
    CHECK(example_plus().center_pattern() == CenterPattern::PlusPair);

    // No size-6 matrix is quarter-turn invariant.
    CHECK_FALSE(example_minus().is_member(SymmetryClass::QuarterTurn));
    for (const AsmMatrix& m : collect_asms(6, SymmetryClass::QuasiQuarterTurn))
        CHECK_FALSE(m.is_member(SymmetryClass::QuarterTurn));
}

TEST_CASE("enumeration order and base cases") {
    auto one = collect_asms(1, SymmetryClass::Unrestricted);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == AsmMatrix(std::vector<std::vector<int>>{{1}}));

    // Deterministic order: entries tried (0, 1, -1) row-major.
    auto two = collect_asms(2, SymmetryClass::Unrestricted);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == AsmMatrix({{0, 1}, {1, 0}}));
    CHECK(two[1] == AsmMatrix({{1, 0}, {0, 1}}));
}

TEST_CASE("counts") {
    const long long a_all[] = {1, 1, 2, 7, 42, 429, 7436};
    const long long a_ht[] = {1, 1, 2, 3, 10, 25, 140};
    for (int n = 1; n <= 6; ++n) {
        CHECK(count_asms(n, SymmetryClass::Unrestricted) == a_all[n]);
        CHECK(count_asms(n, SymmetryClass::HalfTurn) == a_ht[n]);
    }
    CHECK(count_asms(4, SymmetryClass::QuarterTurn) == 2);
    CHECK(count_asms(8, SymmetryClass::QuarterTurn) == 40);
    CHECK(count_asms(6, SymmetryClass::QuarterTurn) == 0);
    CHECK(count_asms(10, SymmetryClass::QuarterTurn) == 0);
    CHECK(count_asms(6, SymmetryClass::QuasiQuarterTurn) == 6);
    CHECK(count_asms(10, SymmetryClass::QuasiQuarterTurn) == 350);

    auto six = collect_asms(6, SymmetryClass::QuasiQuarterTurn);
    CHECK(std::count(six.begin(), six.end(), example_minus()) == 1);
    CHECK(std::count(six.begin(), six.end(), example_plus()) == 1);
}

TEST_CASE("partial-sum and alternating-sign characterizations agree") {
    // Literal definition: nonzero entries of every row and column alternate
    // in sign and sum to 1.
    auto alternating = [](const AsmMatrix& m) {
        auto line_ok = [&](bool row, int k) {
            int last = 0, sum = 0;
            for (int t = 1; t <= m.size(); ++t) {
                int v = row ? m.at(k, t) : m.at(t, k);
                if (v == 0) continue;
                if (last == v) return false;  // consecutive nonzeros share a sign
                last = v;
                sum += v;
            }
            return sum == 1;
        };
        for (int k = 1; k <= m.size(); ++k)
            if (!line_ok(true, k) || !line_ok(false, k)) return false;
        return true;
    };
    for (long long code = 0; code < 19683; ++code) {  // all 3^9 sign matrices
        long long x = code;
        std::vector<int8_t> e(9);
        for (int c = 0; c < 9; ++c) {
            e[c] = static_cast<int8_t>(x % 3 - 1);
            x /= 3;
        }
        AsmMatrix m(3, std::move(e));
        CHECK(m.is_valid() == alternating(m));
    }
    for (const AsmMatrix& m : collect_asms(5, SymmetryClass::Unrestricted)) CHECK(alternating(m));
}

TEST_CASE("brute force oracle at tiny sizes") {
    // Independent of the search: filter all 3^(n^2) sign matrices.
    for (int n = 1; n <= 3; ++n) {
        std::set<AsmMatrix> brute;
        int cells = n * n;
        long long total = 1;
        for (int c = 0; c < cells; ++c) total *= 3;
        for (long long code = 0; code < total; ++code) {
            long long x = code;
            std::vector<int8_t> e(cells);
            for (int c = 0; c < cells; ++c) {
                e[c] = static_cast<int8_t>(x % 3 - 1);
                x /= 3;
            }
            AsmMatrix m(n, std::move(e));
            if (m.is_valid()) brute.insert(m);
        }
        auto found = collect_asms(n, SymmetryClass::Unrestricted);
        std::set<AsmMatrix> searched(found.begin(), found.end());
        CHECK(searched.size() == found.size());  // no duplicates
        CHECK(searched == brute);
    }
}

TEST_CASE("filter consistency") {
    for (int n = 1; n <= 6; ++n) {
        auto all = collect_asms(n, SymmetryClass::Unrestricted);
        for (SymmetryClass c : {SymmetryClass::HalfTurn, SymmetryClass::QuarterTurn,
                                SymmetryClass::QuasiQuarterTurn}) {
            if (c == SymmetryClass::QuasiQuarterTurn && n % 4 != 2) continue;
            std::vector<AsmMatrix> filtered;
            for (const auto& m : all)
                if (m.is_member(c)) filtered.push_back(m);
            auto direct = collect_asms(n, c);
            std::sort(filtered.begin(), filtered.end());
            std::sort(direct.begin(), direct.end());
            CHECK(filtered == direct);
        }
    }
}

TEST_CASE("budgets") {
    CHECK_THROWS_AS(count_asms(8, SymmetryClass::Unrestricted, EnumLimits{}), BudgetError);
    CHECK_THROWS_AS(count_asms(13, SymmetryClass::HalfTurn, EnumLimits{}), BudgetError);
    CHECK_THROWS_AS(count_asms(8, SymmetryClass::QuasiQuarterTurn, EnumLimits{}),
                    ValidationError);  // size must be 2 mod 4
    CHECK_THROWS_AS(count_asms(0, SymmetryClass::Unrestricted, EnumLimits{}), ValidationError);

    setenv("ICELAB_BUDGET", "u=2,s=3", 1);
    CHECK_THROWS_AS(count_asms(3, SymmetryClass::Unrestricted), BudgetError);
    CHECK(count_asms(3, SymmetryClass::HalfTurn) == 3);
    setenv("ICELAB_BUDGET", "5", 1);
    CHECK(count_asms(5, SymmetryClass::Unrestricted) == 429);
    CHECK_THROWS_AS(count_asms(6, SymmetryClass::Unrestricted), BudgetError);
    unsetenv("ICELAB_BUDGET");
}
