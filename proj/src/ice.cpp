#include "icelab/ice.hpp"

namespace icelab {

FullIceState::FullIceState(const AsmMatrix& m) : n_(m.size()), m_(m) {
    if (!m.is_valid()) throw ValidationError("not an alternating sign matrix");
    hpre_.assign(static_cast<size_t>(n_) * (n_ + 1), 0);
    vsuf_.assign(static_cast<size_t>(n_ + 1) * n_, 0);
    for (int i = 1; i <= n_; ++i) {
        int s = 0;
        hpre_[(i - 1) * (n_ + 1)] = 0;
        for (int j = 1; j <= n_; ++j) {
            s += m.at(i, j);
            hpre_[(i - 1) * (n_ + 1) + j] = static_cast<int8_t>(s);
        }
    }
    for (int j = 1; j <= n_; ++j) {
        int s = 0;
        vsuf_[j - 1 + static_cast<size_t>(n_) * n_] = 0;
        for (int i = n_ - 1; i >= 0; --i) {
            s += m.at(i + 1, j);
            vsuf_[j - 1 + static_cast<size_t>(n_) * i] = static_cast<int8_t>(s);
        }
    }
}

VertexKind FullIceState::kind(int i, int j) const {
    int e = m_.at(i, j);
    if (e == 1) return VertexKind::Plus;
    if (e == -1) return VertexKind::Minus;
    bool east = h_east(i, j);
    bool up = v_up(i, j);
    if (east) return up ? VertexKind::ZeroEastUp : VertexKind::ZeroEastDown;
    return up ? VertexKind::ZeroWestUp : VertexKind::ZeroWestDown;
}

AsmMatrix FullIceState::to_asm() const {
    std::vector<int8_t> e(static_cast<size_t>(n_) * n_, 0);
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            bool west_east = h_east(i, j - 1);
            bool east_east = h_east(i, j);
            int v = 0;
            if (west_east && !east_east) v = 1;   // arrows converge
            if (!west_east && east_east) v = -1;  // arrows diverge
            e[static_cast<size_t>(i - 1) * n_ + (j - 1)] = static_cast<int8_t>(v);
        }
    }
    return AsmMatrix(n_, std::move(e));
}

bool FullIceState::obeys_ice_rule() const {
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            int in = 0;
            in += h_east(i, j - 1) ? 1 : 0;   // west edge pointing east = in
            in += !h_east(i, j) ? 1 : 0;      // east edge pointing west = in
            in += v_up(i, j) ? 1 : 0;         // south edge pointing up = in
            in += !v_up(i - 1, j) ? 1 : 0;    // north edge pointing down = in
            if (in != 2) return false;
        }
    }
    return true;
}

} // namespace icelab
