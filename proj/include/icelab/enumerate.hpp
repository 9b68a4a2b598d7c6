#pragma once

#include <functional>
#include <vector>

#include "icelab/asm_matrix.hpp"

namespace icelab {

// Size caps for full enumeration. ICELAB_BUDGET overrides the defaults:
// either a single integer applied to both, or "u=A,s=B".
struct EnumLimits {
    int unrestricted = 7;
    int symmetric = 12;

    static EnumLimits from_env();
    int limit_for(SymmetryClass c) const {
        return c == SymmetryClass::Unrestricted ? unrestricted : symmetric;
    }
};

// Emits every member of the class exactly once, in the deterministic order
// produced by a row-major depth-first search over the fundamental domain
// with entries tried in the order (0, 1, -1). Throws BudgetError when n
// exceeds the configured cap and ValidationError on impossible (n, class)
// requests (quasi-quarter-turn needs n = 2 mod 4).
void enumerate_asms(int n, SymmetryClass c,
                    const std::function<void(const AsmMatrix&)>& emit,
                    const EnumLimits& limits = EnumLimits::from_env());

long long count_asms(int n, SymmetryClass c,
                     const EnumLimits& limits = EnumLimits::from_env());

std::vector<AsmMatrix> collect_asms(int n, SymmetryClass c,
                                    const EnumLimits& limits = EnumLimits::from_env());

} // namespace icelab
