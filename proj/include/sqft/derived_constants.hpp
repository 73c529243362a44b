#pragma once

// Values computed by the engine and frozen here. tests/test_engine.cpp
// recomputes each one from suture elements and fails on any drift.

namespace sqft::derived {

// Diagonal slide of an internal edge, on factors (i, j) where i holds the
// even (outgoing) side of the edge. Block on basis ((0,1),(1,0)) at (i, j),
// columns are images.
inline constexpr int kSlideClockwise[2][2] = {{0, 1}, {1, 1}};
inline constexpr int kSlideAnticlockwise[2][2] = {{1, 1}, {1, 0}};

}  // namespace sqft::derived
