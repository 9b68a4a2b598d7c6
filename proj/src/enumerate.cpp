#include "icelab/enumerate.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

namespace icelab {

EnumLimits EnumLimits::from_env() {
    EnumLimits lim;
    const char* env = std::getenv("ICELAB_BUDGET");
    if (!env || !*env) return lim;
    std::string s(env);
    try {
        if (s.find('=') == std::string::npos) {
            int v = std::stoi(s);
            lim.unrestricted = lim.symmetric = v;
            return lim;
        }
        size_t pos = 0;
        while (pos < s.size()) {
            size_t comma = s.find(',', pos);
            std::string item = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
            size_t eq = item.find('=');
            if (eq != std::string::npos) {
                std::string key = item.substr(0, eq);
                int v = std::stoi(item.substr(eq + 1));
                if (key == "u" || key == "unrestricted") lim.unrestricted = v;
                if (key == "s" || key == "symmetric") lim.symmetric = v;
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } catch (const std::exception&) {
        throw ValidationError("cannot parse ICELAB_BUDGET: '" + s + "'");
    }
    return lim;
}

namespace {

// Row-major DFS over matrix cells. Each cell is either free (the row-major
// first member of its orbit under the symmetry group), forced equal to its
// orbit representative, or part of the special central block for the
// quasi-quarter-turn class. Partial row/column sums are kept in {0,1}.
class Search {
public:
    Search(int n, SymmetryClass cls, const std::function<void(const AsmMatrix&)>& emit)
        : n_(n), cls_(cls), emit_(emit), values_(static_cast<size_t>(n) * n, 0),
          rep_(static_cast<size_t>(n) * n), central_(static_cast<size_t>(n) * n, false),
          row_sum_(n + 1, 0), col_sum_(n + 1, 0) {
        for (int t = 0; t < n_ * n_; ++t) rep_[t] = orbit_rep(t);
        if (cls_ == SymmetryClass::QuasiQuarterTurn) {
            int lo = n_ / 2, hi = lo + 1;
            for (int i : {lo, hi})
                for (int j : {lo, hi}) central_[cell(i, j)] = true;
        }
    }

    void run() { step(0); }

private:
    int cell(int i, int j) const { return (i - 1) * n_ + (j - 1); }

    // Image of the cell index under one quarter turn (i,j) -> (j, n+1-i).
    int quarter(int t) const {
        int i = t / n_ + 1, j = t % n_ + 1;
        return cell(j, n_ + 1 - i);
    }

    int orbit_rep(int t) const {
        int rep = t;
        switch (cls_) {
            case SymmetryClass::Unrestricted:
                break;
            case SymmetryClass::HalfTurn: {
                int u = quarter(quarter(t));
                rep = std::min(rep, u);
                break;
            }
            case SymmetryClass::QuarterTurn:
            case SymmetryClass::QuasiQuarterTurn: {
                int u = t;
                for (int k = 0; k < 3; ++k) {
                    u = quarter(u);
                    rep = std::min(rep, u);
                }
                break;
            }
        }
        return rep;
    }

    void step(int t) {
        if (t == n_ * n_) {
            emit_(AsmMatrix(n_, values_));
            return;
        }
        int i = t / n_ + 1, j = t % n_ + 1;
        if (cls_ == SymmetryClass::QuasiQuarterTurn && central_[t]) {
            int lo = n_ / 2;
            if (i == lo && j == lo) {
                // First central cell: branch over the two admissible patterns.
                for (int p = 0; p < 2; ++p) {
                    pattern_ = p;
                    try_value(t, i, j, central_value(i, j));
                }
            } else {
                try_value(t, i, j, central_value(i, j));
            }
            return;
        }
        if (rep_[t] != t) {
            try_value(t, i, j, values_[rep_[t]]);
            return;
        }
        for (int v : {0, 1, -1}) try_value(t, i, j, static_cast<int8_t>(v));
    }

    int8_t central_value(int i, int j) const {
        bool diag = (i == j);
        // MinusPair = (0,-1,-1,0), PlusPair = (1,0,0,1) in row-major order.
        if (pattern_ == 0) return diag ? int8_t{0} : int8_t{-1};
        return diag ? int8_t{1} : int8_t{0};
    }

    void try_value(int t, int i, int j, int8_t v) {
        int rs = row_sum_[i] + v;
        int cs = col_sum_[j] + v;
        if (rs < 0 || rs > 1 || cs < 0 || cs > 1) return;
        if (j == n_ && rs != 1) return;
        if (i == n_ && cs != 1) return;
        values_[t] = v;
        row_sum_[i] = rs;
        col_sum_[j] = cs;
        step(t + 1);
        row_sum_[i] = rs - v;
        col_sum_[j] = cs - v;
    }

    int n_;
    SymmetryClass cls_;
    const std::function<void(const AsmMatrix&)>& emit_;
    std::vector<int8_t> values_;
    std::vector<int> rep_;
    std::vector<char> central_;
    std::vector<int> row_sum_, col_sum_;
    int pattern_ = 0;
};

} // namespace

void enumerate_asms(int n, SymmetryClass c,
                    const std::function<void(const AsmMatrix&)>& emit,
                    const EnumLimits& limits) {
    if (n < 1) throw ValidationError("matrix size must be positive");
    if (c == SymmetryClass::QuasiQuarterTurn && n % 4 != 2)
        throw ValidationError("quasi-quarter-turn class requires size 2 mod 4");
    if (n > limits.limit_for(c))
        throw BudgetError("enumeration budget exceeded for size " + std::to_string(n) +
                          " (" + std::string(to_string(c)) + ")");
    Search(n, c, emit).run();
}

long long count_asms(int n, SymmetryClass c, const EnumLimits& limits) {
    long long count = 0;
    enumerate_asms(n, c, [&](const AsmMatrix&) { ++count; }, limits);
    return count;
}

std::vector<AsmMatrix> collect_asms(int n, SymmetryClass c, const EnumLimits& limits) {
    std::vector<AsmMatrix> out;
    enumerate_asms(n, c, [&](const AsmMatrix& m) { out.push_back(m); }, limits);
    return out;
}

} // namespace icelab
