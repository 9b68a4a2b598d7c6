#include "icelab/asm_matrix.hpp"

#include <algorithm>

namespace icelab {

const char* to_string(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::Unrestricted: return "unrestricted";
        case SymmetryClass::HalfTurn: return "ht";
        case SymmetryClass::QuarterTurn: return "qt";
        case SymmetryClass::QuasiQuarterTurn: return "qqt";
    }
    return "?";
}

std::optional<SymmetryClass> symmetry_class_from_string(const std::string& s) {
    if (s == "unrestricted" || s == "all" || s == "u") return SymmetryClass::Unrestricted;
    if (s == "ht" || s == "halfturn") return SymmetryClass::HalfTurn;
    if (s == "qt" || s == "quarterturn") return SymmetryClass::QuarterTurn;
    if (s == "qqt" || s == "quasiquarterturn") return SymmetryClass::QuasiQuarterTurn;
    return std::nullopt;
}

AsmMatrix::AsmMatrix(int n, std::vector<int8_t> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ <= 0 || entries_.size() != static_cast<size_t>(n_) * n_)
        throw ValidationError("matrix storage does not match size");
    for (int8_t e : entries_)
        if (e < -1 || e > 1) throw ValidationError("matrix entry outside {-1,0,1}");
}

AsmMatrix::AsmMatrix(const std::vector<std::vector<int>>& rows) {
    n_ = static_cast<int>(rows.size());
    if (n_ == 0) throw ValidationError("empty matrix");
    entries_.reserve(static_cast<size_t>(n_) * n_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_) throw ValidationError("matrix is not square");
        for (int e : row) {
            if (e < -1 || e > 1) throw ValidationError("matrix entry outside {-1,0,1}");
            entries_.push_back(static_cast<int8_t>(e));
        }
    }
}

AsmMatrix AsmMatrix::identity(int n) {
    std::vector<int8_t> e(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + i] = 1;
    return AsmMatrix(n, std::move(e));
}

bool AsmMatrix::validate(const std::vector<std::vector<int>>& rows) {
    return AsmMatrix(rows).is_valid();  // constructor throws on malformed input
}

bool AsmMatrix::is_valid() const {
    // Partial sums of every row/column prefix must lie in {0,1} and end at 1;
    // this is equivalent to the alternating-sign conditions.
    for (int i = 1; i <= n_; ++i) {
        int sum = 0;
        for (int j = 1; j <= n_; ++j) {
            sum += at(i, j);
            if (sum < 0 || sum > 1) return false;
        }
        if (sum != 1) return false;
    }
    for (int j = 1; j <= n_; ++j) {
        int sum = 0;
        for (int i = 1; i <= n_; ++i) {
            sum += at(i, j);
            if (sum < 0 || sum > 1) return false;
        }
        if (sum != 1) return false;
    }
    return true;
}

AsmMatrix AsmMatrix::rotate_quarter() const {
    std::vector<int8_t> e(entries_.size());
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            e[static_cast<size_t>(i - 1) * n_ + (j - 1)] =
                static_cast<int8_t>(at(j, n_ + 1 - i));
    return AsmMatrix(n_, std::move(e));
}

AsmMatrix AsmMatrix::rotate_half() const {
    std::vector<int8_t> e(entries_.size());
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            e[static_cast<size_t>(i - 1) * n_ + (j - 1)] =
                static_cast<int8_t>(at(n_ + 1 - i, n_ + 1 - j));
    return AsmMatrix(n_, std::move(e));
}

bool AsmMatrix::quarter_symmetric_outside_center() const {
    // n = 4N+2; the central block is rows/cols 2N+1, 2N+2.
    int lo = n_ / 2, hi = n_ / 2 + 1;
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            bool central = (i == lo || i == hi) && (j == lo || j == hi);
            if (central) continue;
            if (at(i, j) != at(j, n_ + 1 - i)) return false;
        }
    }
    return true;
}

std::optional<CenterPattern> AsmMatrix::center_pattern() const {
    if (!is_member(SymmetryClass::QuasiQuarterTurn)) return std::nullopt;
    int lo = n_ / 2;
    return at(lo, lo) == 0 ? CenterPattern::MinusPair : CenterPattern::PlusPair;
}

bool AsmMatrix::is_member(SymmetryClass c) const {
    switch (c) {
        case SymmetryClass::Unrestricted:
            return true;
        case SymmetryClass::HalfTurn:
            return *this == rotate_half();
        case SymmetryClass::QuarterTurn:
            return *this == rotate_quarter();
        case SymmetryClass::QuasiQuarterTurn: {
            if (n_ % 4 != 2) return false;
            if (!quarter_symmetric_outside_center()) return false;
            int lo = n_ / 2, hi = n_ / 2 + 1;
            int a = at(lo, lo), b = at(lo, hi), cc = at(hi, lo), d = at(hi, hi);
            bool minus = a == 0 && b == -1 && cc == -1 && d == 0;
            bool plus = a == 1 && b == 0 && cc == 0 && d == 1;
            return minus || plus;
        }
    }
    return false;
}

int AsmMatrix::row_prefix(int i, int j) const {
    int s = 0;
    for (int k = 1; k <= j; ++k) s += at(i, k);
    return s;
}

int AsmMatrix::col_suffix(int i, int j) const {
    int s = 0;
    for (int k = i + 1; k <= n_; ++k) s += at(k, j);
    return s;
}

std::string AsmMatrix::to_string() const {
    std::string out;
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            int v = at(i, j);
            out += (v < 0 ? "-1" : (v > 0 ? " 1" : " 0"));
            out += (j == n_) ? "\n" : " ";
        }
    }
    return out;
}

} // namespace icelab
