#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icelab/ice.hpp"

namespace icelab {

enum class ModelKind { Dwbc, HtEven, HtOdd, Qt, Qqt };

const char* to_string(ModelKind k);
std::optional<ModelKind> model_kind_from_string(const std::string& s);

// Orientation of the distinguished edge where the x and y parameters meet.
//   ArcUp / ArcDown       : even half-turn model, flow direction on the
//                           innermost fold arc (from the x track toward the
//                           y track, or back).
//   DownRight / UpLeft    : odd half-turn and quasi-quarter-turn models,
//                           flow through the central bend / below the fold
//                           corner.
//   Converging / Diverging: quarter-turn model, both fold-corner edges into
//                           the corner divalent or both out of it.
enum class EdgeTag : uint8_t { ArcUp, ArcDown, UpLeft, DownRight, Converging, Diverging };

const char* to_string(EdgeTag t);

// One tetravalent slot of the quotient model: the matrix cell it weights
// and the parameter slots of the two lines crossing there. The weight
// parameter is slot[row_slot] / slot[col_slot].
struct WeightedCell {
    int i, j;            // matrix coordinates, row 1 = top
    int row_slot, col_slot;
};

// A boundary class plus wiring: the fundamental-domain cells with their
// line-parameter pairs, fold-arc metadata, and the x/y junction location.
// States are the members of the associated symmetry class, transported
// through the grid bijection; the partition function weights each state by
// the product over the listed cells only.
class IceModel {
public:
    static IceModel build(ModelKind kind, int n);

    ModelKind kind() const { return kind_; }
    int size() const { return n_; }             // full matrix size
    int size_param() const { return N_; }       // N of the family
    SymmetryClass symmetry_class() const { return cls_; }

    const std::vector<std::string>& slots() const { return slots_; }
    const std::vector<WeightedCell>& cells() const { return cells_; }
    int tetravalent_count() const { return static_cast<int>(cells_.size()); }

    // Fold arcs carrying a divalent vertex, identified by line index
    // (quarter-turn quotients only; both edges in or both out).
    const std::vector<int>& divalent_arcs() const { return divalent_arcs_; }

    // Matrix cell next to which the line parameter changes from x to y:
    // the innermost fold arc, the central bend, or the fold corner.
    std::optional<std::pair<int, int>> junction_cell() const;

    bool has_resolved_tags() const { return kind_ != ModelKind::Dwbc; }
    std::pair<EdgeTag, EdgeTag> tag_pair() const;  // (odd-side, even-side) order as listed
    EdgeTag state_tag(const FullIceState& s) const;

    // Structural checks of one class member against the quotient wiring:
    // arc flow/bounce rules and the fixed junction flow.
    bool wiring_consistent(const FullIceState& s) const;

    std::string describe() const;

private:
    ModelKind kind_ = ModelKind::Dwbc;
    int n_ = 0;
    int N_ = 0;
    SymmetryClass cls_ = SymmetryClass::Unrestricted;
    std::vector<std::string> slots_;
    std::vector<WeightedCell> cells_;
    std::vector<int> divalent_arcs_;
};

} // namespace icelab
