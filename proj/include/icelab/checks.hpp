#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icelab/partition.hpp"
#include "icelab/prefactor.hpp"

namespace icelab {

// Outcome of one identity check. A failing result always carries a witness
// describing the parameter values and both sides.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;
};

// Deterministic generator for small exact parameters (p/q with 1 <= p,q <= 9).
class Rng {
public:
    explicit Rng(uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t next();
    int uniform(int lo, int hi);  // inclusive bounds
    Rational small_rational();
    // Pairwise distinct positive rationals, also distinct from `avoid`.
    std::vector<Rational> distinct_rationals(size_t k, const std::vector<Rational>& avoid = {});

private:
    uint64_t s_;
};

// Local graph identities (exact polynomial comparisons).
CheckResult check_yang_baxter();
CheckResult check_line_exchange(int width, uint64_t seed);
CheckResult check_loop_closure(uint64_t seed);
CheckResult check_loop_exchange(int width, uint64_t seed);
CheckResult check_grid_pass(int rows, int cols, uint64_t seed);

// Model-level suites. `level` is the family parameter N, not the matrix size.
std::vector<CheckResult> counting_suite(int level);
std::vector<CheckResult> model_consistency_suite(int max_symmetric_size, int max_dwbc_size);
std::vector<CheckResult> symmetry_suite(int level, uint64_t seed);
std::vector<CheckResult> specialization_suite(int tuples, uint64_t seed);
std::vector<CheckResult> prefactor_compaction_suite(int tuples, uint64_t seed);
std::vector<CheckResult> main_theorem_suite(int level, uint64_t seed);

// Named suite dispatch: all | yb | symmetry | spec | main | counting.
std::vector<CheckResult> run_suites(const std::string& which, int level, uint64_t seed);

} // namespace icelab
