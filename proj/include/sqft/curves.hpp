#pragma once

#include "sqft/complex.hpp"

#include <array>
#include <optional>
#include <vector>

namespace sqft {

// A point on a square side; pos counts in the side direction from 0.
struct Pt {
    int side = 0;
    int pos = 0;
    bool operator==(const Pt&) const = default;
    auto operator<=>(const Pt&) const = default;
};

struct Chord {
    Pt a;
    Pt b;
    bool operator==(const Chord&) const = default;
};

// Chord diagram of one square. Points are numbered cyclically: side 0 positions
// first, then side 1, and so on; match pairs cyclic indices.
struct SquareCurves {
    std::array<int, 4> count{};
    std::vector<int> match;
    int loops = 0;

    int total() const { return count[0] + count[1] + count[2] + count[3]; }
    int offset(int side) const;
    int index(Pt p) const { return offset(p.side) + p.pos; }
    Pt point(int idx) const;
    bool operator==(const SquareCurves&) const = default;
};

class CurveSystem {
public:
    CurveSystem() = default;
    explicit CurveSystem(int squares) : sq_(static_cast<std::size_t>(squares)) {}

    // Throws when endpoints are not a perfect matching of dense positions.
    static CurveSystem from_chords(int squares, const std::vector<std::vector<Chord>>& chords,
                                   const std::vector<int>& loops = {});

    int square_count() const { return static_cast<int>(sq_.size()); }
    const SquareCurves& square(int q) const { return sq_[static_cast<std::size_t>(q)]; }
    SquareCurves& square(int q) { return sq_[static_cast<std::size_t>(q)]; }
    std::vector<SquareCurves>& squares() { return sq_; }
    const std::vector<SquareCurves>& squares() const { return sq_; }

    // Chords of a square, each once, in increasing order of the first endpoint.
    std::vector<Chord> chords(int q) const;
    int points(Side s) const { return square(s.sq).count[static_cast<std::size_t>(s.side)]; }
    int loop_count() const;

    // Loops of vacuum components removed during collapse.
    int detached_loops = 0;

    bool operator==(const CurveSystem&) const = default;

private:
    std::vector<SquareCurves> sq_;
};

ValidationReport validate_sutures(const SquareComplex& c, const CurveSystem& g);
void require_valid(const SquareComplex& c, const CurveSystem& g);

// Bit 1: chords side0-side1 and side2-side3. Bit 0: side3-side0 and side1-side2.
SquareCurves basic_square(int bit);
CurveSystem basic_sutures(const SquareComplex& c, Word w);
// The sign word when every side carries one point and there are no loops.
std::optional<Word> basic_word(const CurveSystem& g);

struct Region {
    int sign = 0;
    int chi = 0;
    bool touches_boundary = false;
};

struct RegionDecomposition {
    std::vector<Region> regions;
    int chi_plus = 0;
    int chi_minus = 0;
};

RegionDecomposition regions(const SquareComplex& c, const CurveSystem& g);
int euler_class(const SquareComplex& c, const CurveSystem& g);
bool is_trivial(const SquareComplex& c, const CurveSystem& g);
bool is_confining(const SquareComplex& c, const CurveSystem& g);

// Removes innermost edge bigons in (slot, position) order until none remain.
CurveSystem normalize(const SquareComplex& c, const CurveSystem& g);

enum class BypassDir { Up, Down };
const char* to_string(BypassDir d);

// Surgery on the triple t, t+1, t+2 of the glued side `edge` (positions in that
// side's direction). The result is normalized.
CurveSystem bypass_surgery(const SquareComplex& c, const CurveSystem& g, Side edge, int t, BypassDir d);

// Curve data is unchanged by cutting or gluing along an edge carrying one point;
// these check that precondition and the colour match.
CurveSystem transport_unglue(const SquareComplex& c, const CurveSystem& g, Side edge);
CurveSystem transport_glue(const SquareComplex& c, const CurveSystem& g, Side a, Side b);

CurveSystem disjoint_union(const CurveSystem& a, const CurveSystem& b);

// Square i of the result is square perm[i] of g turned by rot[i] (0 or 2).
SquareCurves rotate_square(const SquareCurves& s, int rot);
CurveSystem relabel(const CurveSystem& g, const std::vector<int>& perm, const std::vector<int>& rot);

// Canonical form of the pair (complex, curves).
struct CanonicalPair {
    Canonical canon;
    CurveSystem curves;
};
CanonicalPair canonicalize(const SquareComplex& c, const CurveSystem& g);

}  // namespace sqft
