#pragma once

// Lecouvey-Sheats symplectic jeu de taquin.
//
// A punctured tableau carries one hole inside a column's track: the column
// stores the track's top row and the cells filling every track row except
// the hole's. An elementary forward slide looks at alpha, the right-split
// value of the cell under the hole, and beta, the left-split value of the
// cell right of the hole, and either swaps the hole downward (vertical,
// alpha <= beta or beta absent) or moves beta's cell across (horizontal).
// A barred beta travels into Phi of the left column (step B.1); an
// unbarred beta joins the left column directly (step B.2) and, when that
// breaks the one-column condition at z, the pair {z, zbar} is erased and
// the column's track loses its top and bottom rows. When neither alpha
// nor beta exists the hole sits at the track bottom and leaves the shape.
// Reverse slides invert the forward steps; ties push the reverse slide
// vertical, and growth that would undo a forced pair erasure is refused.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sptab/tableau.hpp"

namespace sptab {

struct PuncturedTableau {
    SkewTableau t;      // the hole column's top is its track top
    int hole_col = -1;  // 0-based; -1 when the hole has left the shape
    int hole_row = 0;

    bool has_hole() const { return hole_col >= 0; }
    // Track bottom of the hole column (cells count one less than rows).
    int track_bottom() const { return t.cols[hole_col].top + (int)t.cols[hole_col].cells.size(); }
};

enum class SlideKind { Vertical, HorizontalBarred, HorizontalUnbarred, Terminal };

struct SlideOutcome {
    SlideKind kind;
    Letter moved = 0;    // beta (forward) or b (reverse) for horizontal steps
    int lost = 0;        // pair value erased on a 1CC break
    int cells_lost = 0;  // 0, or 2 for a breaking HorizontalUnbarred
};

using StepTrace = std::vector<std::string>;

// Mutates p; Terminal clears the hole (the caller drops emptied columns).
SlideOutcome elementary_forward_slide(PuncturedTableau& p, StepTrace* trace = nullptr);
SlideOutcome elementary_reverse_slide(PuncturedTableau& p, StepTrace* trace = nullptr);

// Inner corners available for rectification: 0-based column indices whose
// top cell has an addable hole position directly above it.
std::vector<int> inner_corner_columns(const SkewTableau& t);

// Rectification; corner choice defaults to the topmost (equivalently the
// unique corner of minimal row). The chooser, when given, picks among
// inner_corner_columns' result.
SkewTableau rectify(const SkewTableau& t, StepTrace* trace = nullptr,
                    const std::function<int(const std::vector<int>&)>& chooser = {});

// One forward play on an isolated column pair: the hole enters above the
// left column's top and a cell ends up moving from the right column to the
// left one. One reverse play enters below the right column's bottom and
// moves a cell from the left column to the right one. Both realign the
// pair canonically first and return plain contents.
std::pair<Column, Column> pair_forward_play(const Column& left, const Column& right, int n,
                                            StepTrace* trace = nullptr);
std::pair<Column, Column> pair_reverse_play(const Column& left, const Column& right, int n,
                                            StepTrace* trace = nullptr);

// Exchanges the two columns' lengths inside the Knuth class (identity for
// equal lengths).
std::pair<Column, Column> swap_adjacent_column_lengths(const Column& c1, const Column& c2, int n,
                                                       StepTrace* trace = nullptr);

// The unique Knuth-equivalent skew tableau whose column lengths match
// target (zeros allowed; the nonzero part must permute the current
// lengths). Output is canonically aligned. stages, when given, receives
// the column contents after every adjacent swap.
SkewTableau reshape(const SkewTableau& t, const std::vector<int>& target,
                    std::vector<std::vector<Column>>* stages = nullptr);

}  // namespace sptab
