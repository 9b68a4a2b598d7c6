#include "icelab/model.hpp"

#include <algorithm>

namespace icelab {

const char* to_string(ModelKind k) {
    switch (k) {
        case ModelKind::Dwbc: return "dwbc";
        case ModelKind::HtEven: return "ht-even";
        case ModelKind::HtOdd: return "ht-odd";
        case ModelKind::Qt: return "qt";
        case ModelKind::Qqt: return "qqt";
    }
    return "?";
}

std::optional<ModelKind> model_kind_from_string(const std::string& s) {
    if (s == "dwbc") return ModelKind::Dwbc;
    if (s == "ht-even") return ModelKind::HtEven;
    if (s == "ht-odd") return ModelKind::HtOdd;
    if (s == "qt") return ModelKind::Qt;
    if (s == "qqt") return ModelKind::Qqt;
    return std::nullopt;
}

const char* to_string(EdgeTag t) {
    switch (t) {
        case EdgeTag::ArcUp: return "up";
        case EdgeTag::ArcDown: return "down";
        case EdgeTag::UpLeft: return "upleft";
        case EdgeTag::DownRight: return "downright";
        case EdgeTag::Converging: return "conv";
        case EdgeTag::Diverging: return "div";
    }
    return "?";
}

namespace {

std::vector<std::string> xslots(int k) {
    std::vector<std::string> s;
    s.reserve(k);
    for (int i = 1; i <= k; ++i) s.push_back("x" + std::to_string(i));
    return s;
}

} // namespace

IceModel IceModel::build(ModelKind kind, int n) {
    IceModel m;
    m.kind_ = kind;
    m.n_ = n;
    if (n < 1) throw ValidationError("model size must be positive");

    // Slot index helpers are resolved after slots_ is final, so cells store
    // indices computed from the known layout: x1..xk first, then x, then y.
    switch (kind) {
        case ModelKind::Dwbc: {
            // N x N grid; grid row g (bottom to top) carries x_g, column c
            // carries x_{N+c}.
            int N = n;
            m.N_ = N;
            m.cls_ = SymmetryClass::Unrestricted;
            m.slots_ = xslots(2 * N);
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j)
                    m.cells_.push_back({i, j, /*row*/ N - i, /*col*/ N + j - 1});
            break;
        }
        case ModelKind::HtEven: {
            if (n % 2 != 0) throw ValidationError("even half-turn model requires even size");
            int N = n / 2;
            m.N_ = N;
            m.cls_ = SymmetryClass::HalfTurn;
            m.slots_ = xslots(2 * N - 1);
            m.slots_.push_back("x");
            m.slots_.push_back("y");
            int sx = 2 * N - 1, sy = 2 * N;
            // Left half: all 2N tracks, columns 1..N. Track g (bottom to
            // top): x_1..x_{N-1}, x, y, x_{N-1}..x_1; column c: x_{N-1+c}.
            for (int g = 1; g <= 2 * N; ++g) {
                int row_slot;
                if (g <= N - 1) row_slot = g - 1;
                else if (g == N) row_slot = sx;
                else if (g == N + 1) row_slot = sy;
                else row_slot = (2 * N + 1 - g) - 1;
                int i = 2 * N + 1 - g;  // matrix row
                for (int c = 1; c <= N; ++c)
                    m.cells_.push_back({i, c, row_slot, (N - 1 + c) - 1});
            }
            break;
        }
        case ModelKind::HtOdd: {
            if (n % 2 != 1) throw ValidationError("odd half-turn model requires odd size");
            int N = (n - 1) / 2;
            m.N_ = N;
            m.cls_ = SymmetryClass::HalfTurn;
            m.slots_ = xslots(2 * N);
            m.slots_.push_back("x");
            m.slots_.push_back("y");
            int sx = 2 * N, sy = 2 * N + 1;
            // Tracks g = 1..2N+1 carry x_1..x_N, x, x_N..x_1; columns
            // 1..N carry x_{N+1}..x_{2N}. The median column's lower half
            // carries y; the central cell is the weightless x/y bend.
            for (int g = 1; g <= 2 * N + 1; ++g) {
                int row_slot;
                if (g <= N) row_slot = g - 1;
                else if (g == N + 1) row_slot = sx;
                else row_slot = (2 * N + 2 - g) - 1;
                int i = 2 * N + 2 - g;
                for (int c = 1; c <= N; ++c)
                    m.cells_.push_back({i, c, row_slot, (N + c) - 1});
                if (g <= N) m.cells_.push_back({i, N + 1, row_slot, sy});
            }
            break;
        }
        case ModelKind::Qt:
        case ModelKind::Qqt: {
            bool qqt = kind == ModelKind::Qqt;
            if (!qqt && n % 4 != 0) throw ValidationError("quarter-turn model requires size 4N");
            if (qqt && n % 4 != 2)
                throw ValidationError("quasi-quarter-turn model requires size 4N+2");
            int K = n / 2;  // quadrant side; K = 2N or 2N+1
            m.N_ = qqt ? (n - 2) / 4 : n / 4;
            m.cls_ = qqt ? SymmetryClass::QuasiQuarterTurn : SymmetryClass::QuarterTurn;
            m.slots_ = xslots(K - 1);
            m.slots_.push_back("x");
            m.slots_.push_back("y");
            int sx = K - 1, sy = K;
            // Quadrant: grid rows 1..K carry x_1..x_{K-1}, x and return down
            // the same-index columns; the x line returns as the y column,
            // with the parameter change just below the fold corner. The
            // corner cell, where the x/y line crosses itself at parameter 1,
            // is the weightless junction; every fold arc carries a divalent.
            for (int g = 1; g <= K; ++g) {
                int row_slot = (g <= K - 1) ? g - 1 : sx;
                int i = n + 1 - g;
                for (int c = 1; c <= K; ++c) {
                    if (g == K && c == K) continue;  // junction crossing, weight 1
                    int col_slot = (c <= K - 1) ? c - 1 : sy;
                    m.cells_.push_back({i, c, row_slot, col_slot});
                }
            }
            for (int g = 1; g <= K; ++g) m.divalent_arcs_.push_back(g);
            break;
        }
    }
    return m;
}

std::optional<std::pair<int, int>> IceModel::junction_cell() const {
    switch (kind_) {
        case ModelKind::Dwbc: return std::nullopt;
        case ModelKind::HtEven: return std::pair{N_ + 1, N_};  // x-track fold cut
        case ModelKind::HtOdd: return std::pair{N_ + 1, N_ + 1};  // central bend
        case ModelKind::Qt:
        case ModelKind::Qqt: return std::pair{n_ / 2 + 1, n_ / 2};  // fold corner
    }
    return std::nullopt;
}

std::pair<EdgeTag, EdgeTag> IceModel::tag_pair() const {
    switch (kind_) {
        case ModelKind::HtEven: return {EdgeTag::ArcUp, EdgeTag::ArcDown};
        case ModelKind::HtOdd:
        case ModelKind::Qqt: return {EdgeTag::UpLeft, EdgeTag::DownRight};
        case ModelKind::Qt: return {EdgeTag::Converging, EdgeTag::Diverging};
        case ModelKind::Dwbc: break;
    }
    throw ValidationError("model has no resolved tags");
}

EdgeTag IceModel::state_tag(const FullIceState& s) const {
    switch (kind_) {
        case ModelKind::HtEven: {
            int N = N_;
            // Flow on the x track (matrix row N+1) across the fold.
            return s.h_east(N + 1, N) ? EdgeTag::ArcUp : EdgeTag::ArcDown;
        }
        case ModelKind::HtOdd: {
            int c = (n_ + 1) / 2;
            return s.entry(c, c) == 1 ? EdgeTag::DownRight : EdgeTag::UpLeft;
        }
        case ModelKind::Qt: {
            int K = n_ / 2;
            VertexKind k = s.kind(K + 1, K);  // fold corner cell
            if (k == VertexKind::ZeroEastUp) return EdgeTag::Converging;
            if (k == VertexKind::ZeroWestDown) return EdgeTag::Diverging;
            throw ValidationError("quarter-turn fold corner has unexpected orientation");
        }
        case ModelKind::Qqt: {
            int K = n_ / 2;
            return s.v_up(K + 1, K) ? EdgeTag::UpLeft : EdgeTag::DownRight;
        }
        case ModelKind::Dwbc: break;
    }
    throw ValidationError("model has no resolved tags");
}

bool IceModel::wiring_consistent(const FullIceState& s) const {
    switch (kind_) {
        case ModelKind::Dwbc:
            return true;
        case ModelKind::HtEven: {
            int N = N_;
            // Fold arcs carry a single flow: the two cut edges of tracks g
            // and 2N+1-g point the same way around the arc.
            for (int g = 1; g <= N; ++g) {
                int i = 2 * N + 1 - g, ip = g;  // matrix rows of the paired tracks
                if (s.h_east(i, N) == s.h_east(ip, N)) return false;
            }
            return true;
        }
        case ModelKind::HtOdd: {
            int N = N_;
            for (int g = 1; g <= N; ++g) {
                // Matrix row i crosses the median column, so its fold cut
                // sits one column further east than its partner's.
                int i = 2 * N + 2 - g, ip = g;
                if (s.h_east(i, N + 1) == s.h_east(ip, N)) return false;
            }
            // Center bend always passes flow between the x row and y column.
            if (s.h_east(N + 1, N) == s.v_up(N + 1, N + 1)) return false;
            return s.entry(N + 1, N + 1) != 0;
        }
        case ModelKind::Qt: {
            int K = n_ / 2;
            // Every fold arc bounces at its divalent: both cut edges in or
            // both out.
            for (int g = 1; g <= K; ++g)
                if (s.h_east(n_ + 1 - g, K) != s.v_up(n_ - K, g)) return false;
            return true;
        }
        case ModelKind::Qqt: {
            int K = n_ / 2;
            for (int g = 1; g < K; ++g)
                if (s.h_east(n_ + 1 - g, K) != s.v_up(n_ - K, g)) return false;
            // The junction arc carries a fixed flow out of the corner row
            // and into the corner column.
            return s.h_east(K + 1, K) && !s.v_up(K, K);
        }
    }
    return false;
}

std::string IceModel::describe() const {
    std::string out = std::string(to_string(kind_)) + " size " + std::to_string(n_) +
                      ", slots [";
    for (size_t k = 0; k < slots_.size(); ++k)
        out += (k ? ", " : "") + slots_[k];
    out += "], " + std::to_string(cells_.size()) + " tetravalent vertices";
    if (!divalent_arcs_.empty())
        out += ", " + std::to_string(divalent_arcs_.size()) + " fold divalents";
    return out;
}

} // namespace icelab
