#pragma once

#include <vector>

#include "icelab/asm_matrix.hpp"

namespace icelab {

// The six tetravalent orientation types plus the degree-two vertex used on
// quotient fold arcs. For a tetravalent vertex with parameter x the weights
// are:
//   Plus, Minus                -> sigma(a^2)   (matrix entries +1, -1)
//   ZeroWestUp, ZeroEastDown   -> sigma(a*x)
//   ZeroEastUp, ZeroWestDown   -> sigma(a/x)
//   Divalent                   -> 1            (both edges in or both out)
// Zero kinds are named by the direction the horizontal flow points (West or
// East) and the vertical flow (Up or Down) as it passes through the vertex.
enum class VertexKind : uint8_t {
    Plus,
    Minus,
    ZeroWestUp,
    ZeroEastDown,
    ZeroEastUp,
    ZeroWestDown,
    Divalent
};

// Full-grid six-vertex state with domain-wall boundary, in bijection with
// the matrix it was built from. Matrix coordinates: row 1 is the top row;
// "up" points toward row 1.
//
// h(i, j), j = 0..n: the horizontal edge between columns j and j+1 in row i
// (j = 0: west boundary stub, j = n: east stub); true = arrow points east.
// v(i, j), i = 0..n: the vertical edge between rows i and i+1 in column j
// (i = 0: north boundary stub, i = n: south stub); true = arrow points up.
class FullIceState {
public:
    explicit FullIceState(const AsmMatrix& m);

    int size() const { return n_; }

    bool h_east(int i, int j) const { return row_prefix(i, j) == 0; }
    bool v_up(int i, int j) const { return col_suffix(i, j) == 1; }

    VertexKind kind(int i, int j) const;

    // Recovers the matrix from edge orientations alone (sign changes of the
    // horizontal flow), exercising the inverse direction of the bijection.
    AsmMatrix to_asm() const;

    // Ice rule at every vertex: exactly two incoming and two outgoing edges.
    bool obeys_ice_rule() const;

    int entry(int i, int j) const { return m_.at(i, j); }
    const AsmMatrix& matrix() const { return m_; }

private:
    int row_prefix(int i, int j) const { return hpre_[(i - 1) * (n_ + 1) + j]; }
    int col_suffix(int i, int j) const { return vsuf_[j - 1 + n_ * i]; }

    int n_;
    AsmMatrix m_;
    std::vector<int8_t> hpre_;  // row prefix sums, (n) x (n+1)
    std::vector<int8_t> vsuf_;  // column suffix sums, (n+1) x (n)
};

} // namespace icelab
