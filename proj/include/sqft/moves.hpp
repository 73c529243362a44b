#pragma once

#include "sqft/curves.hpp"

#include <optional>
#include <vector>

namespace sqft {

struct CollapseRecord {
    int collapsed_square = 0;
    int corner = 0;  // corner of the collapsed square at the internal vertex
    VertexClass internal_vertex;
    VertexClass target_vertex;
    int vertex_sign = 0;
    std::vector<int> wedge_squares;  // w1..w_{n-1}, anticlockwise, repeats kept
    std::vector<Side> edge_fan;      // e1 = collapsed.(corner-1) .. e_n = collapsed.(corner)
};

struct SlideRecord {
    int square_a = 0;
    int square_b = 0;
    std::pair<Side, Side> removed_edge;
    std::pair<Side, Side> added_edge;
    SlideDirection direction = SlideDirection::Clockwise;
};

struct CollapseSite {
    int square = 0;
    int corner = 0;
    int target = 0;  // vertex class index of the opposite corner
};

// Breadth-first over same-sign internal vertices joined by opposite corners,
// starting at vertex class y; first (square, corner) whose opposite corner is
// on the boundary.
CollapseSite find_collapsible_square(const SquareComplex& c, int y);
CollapseRecord collapse_record(const SquareComplex& c, int square, int corner);

// old slot -> new slot, -1 where the side no longer exists.
using SlotMap = std::vector<int>;

struct MoveResult {
    SquareComplex complex;
    std::optional<CurveSystem> curves;
    SlotMap slot_map;
};

SquareComplex collapse_slack_square(const SquareComplex& c, const CollapseRecord& r);
MoveResult collapse_slack_square(const SquareComplex& c, const CurveSystem* g, const CollapseRecord& r);

struct TightenResult {
    SquareComplex complex;
    std::optional<CurveSystem> curves;
    std::vector<CollapseRecord> records;
    SlotMap slot_map;
};

// Collapses the internal vertex with the smallest corner until none remain.
TightenResult tighten(const SquareComplex& c, const CurveSystem* g = nullptr);

struct SlideResult {
    SquareComplex complex;
    std::optional<CurveSystem> curves;
    SlideRecord record;
    SlotMap slot_map;
};

// The square holding the even side of the edge plays the role A.
SlideResult diagonal_slide(const SquareComplex& c, Side edge, SlideDirection d, const CurveSystem* g = nullptr);

}  // namespace sqft
