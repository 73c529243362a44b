#pragma once

#include "sqft/curves.hpp"

#include <vector>

namespace sqft::detail {

// Chord diagram on a polygon with sides listed anticlockwise; points are
// numbered cyclically side by side, as in SquareCurves.
struct Polygon {
    std::vector<int> count;
    std::vector<int> match;
    int loops = 0;

    int sides() const { return static_cast<int>(count.size()); }
    int total() const;
    int offset(int side) const;
};

Polygon from_square(const SquareCurves& s);
SquareCurves to_square(const Polygon& p);
// Side i of the result is side i + r of p.
Polygon rotate(const Polygon& p, int r);
// Glues side i of p to side j of q (point k on one meets point m-1-k on the
// other). Sides of the result: p's i+1..i-1, then q's j+1..j-1.
Polygon glue(const Polygon& p, int i, const Polygon& q, int j);
// Glues side i to side i+1, folding at their shared vertex.
Polygon self_glue(const Polygon& p, int i);
// Cuts along the diagonal from vertex u to vertex v (vertex k starts side k).
// First: sides u..v-1 then the diagonal v->u. Second: sides v..u-1 then the
// diagonal u->v. Loops stay with the first piece.
std::pair<Polygon, Polygon> cut(const Polygon& p, int u, int v);

}  // namespace sqft::detail
