#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icelab/errors.hpp"

namespace icelab {

enum class SymmetryClass { Unrestricted, HalfTurn, QuarterTurn, QuasiQuarterTurn };

// Central 2x2 block of a quasi-quarter-turn matrix, read row-major.
enum class CenterPattern { MinusPair, PlusPair };  // (0,-1,-1,0) or (1,0,0,1)

const char* to_string(SymmetryClass c);
std::optional<SymmetryClass> symmetry_class_from_string(const std::string& s);

// Square matrix over {-1,0,1} whose rows and columns have alternating
// nonzero signs summing to 1. Entries use 1-based (row, col) indexing with
// row 1 at the top.
class AsmMatrix {
public:
    AsmMatrix(int n, std::vector<int8_t> entries);
    explicit AsmMatrix(const std::vector<std::vector<int>>& rows);

    static AsmMatrix identity(int n);

    // Checks shape and entry range, throwing ValidationError on bad input,
    // then decides the alternating-sign conditions.
    static bool validate(const std::vector<std::vector<int>>& rows);

    int size() const { return n_; }
    int at(int i, int j) const { return entries_[idx(i, j)]; }

    bool is_valid() const;

    // 90-degree rotation (i,j) -> (j, n+1-i); applying it twice gives the
    // half turn (i,j) -> (n+1-i, n+1-j) and four times the identity.
    AsmMatrix rotate_quarter() const;
    AsmMatrix rotate_half() const;

    bool is_member(SymmetryClass c) const;

    // Defined exactly when the matrix is quasi-quarter-turn symmetric.
    std::optional<CenterPattern> center_pattern() const;

    // Partial row sum over columns 1..j (j may be 0).
    int row_prefix(int i, int j) const;
    // Partial column sum over rows i+1..n (i may be n).
    int col_suffix(int i, int j) const;

    friend bool operator==(const AsmMatrix& a, const AsmMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }
    friend bool operator<(const AsmMatrix& a, const AsmMatrix& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.entries_ < b.entries_;
    }

    std::string to_string() const;

private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i - 1) * n_ + (j - 1); }
    bool quarter_symmetric_outside_center() const;

    int n_ = 0;
    std::vector<int8_t> entries_;
};

} // namespace icelab
