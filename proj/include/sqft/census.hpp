#pragma once

#include "sqft/engine.hpp"

#include <cstdint>
#include <vector>

namespace sqft {

// Fan quadrangulation of the disc with 2n boundary vertices v0..v_{2n-1}:
// square i has corners (v0, v_{2i+1}, v_{2i+2}, v_{2i+3}) and its side 3 is
// glued to side 0 of square i+1.
SquareComplex disc_family(int n);

// Non-crossing perfect matchings of 2n points on a circle; m[i] = partner.
std::vector<std::vector<int>> noncrossing_matchings(int n);

// Sutures on disc_family(n) whose endpoints on boundary edge v_j v_{j+1} are
// paired by the given matching. Needs n >= 2.
CurveSystem disc_sutures(int n, const std::vector<int>& matching);

// One normalized representative per class, in matching order; 2 <= n <= 7.
std::vector<CurveSystem> enumerate_disc_sutures(int n);
std::vector<CurveSystem> enumerate_basic(const SquareComplex& c);

struct TripleRef {
    Side edge;  // lower slot of the glued pair
    int start = 0;
    bool operator==(const TripleRef&) const = default;
};
std::vector<TripleRef> bypass_triples(const SquareComplex& c, const CurveSystem& g);

// Script from the empty complex to a connected bona fide complex.
MorphismScript random_surface(std::uint64_t seed, int max_squares);
// Random efficient sutures: odd point counts on internal edges, random
// non-crossing chords per square, rejected when trivial. Samples with a bypass
// triple are preferred; basic sutures are the last resort.
CurveSystem random_sutures(std::uint64_t seed, const SquareComplex& c);
// Random bona fide source plus random moves keeping at most max_squares squares.
MorphismScript random_script(std::uint64_t seed, int max_squares);

}  // namespace sqft
