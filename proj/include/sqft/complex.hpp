#pragma once

#include "sqft/tensor.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sqft {

// Side k of a square runs from corner k to corner k+1; corners go anticlockwise
// and corner k has sign (-1)^k.
struct Side {
    int sq = 0;
    int side = 0;
    int slot() const { return 4 * sq + side; }
    static Side of(int slot) { return {slot / 4, slot % 4}; }
    bool operator==(const Side&) const = default;
    auto operator<=>(const Side&) const = default;
};

inline int corner_sign(int corner) { return (corner % 2) ? +1 : -1; }

struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
    std::string to_string() const;
};

class SquareComplex {
public:
    SquareComplex() = default;
    explicit SquareComplex(int squares, bool slack = false);

    int square_count() const { return static_cast<int>(partner_.size() / 4); }
    bool slack() const { return slack_; }
    void set_slack(bool s) { slack_ = s; }

    // Partner slot or -1 when the side is on the boundary.
    int partner(int slot) const { return partner_[static_cast<std::size_t>(slot)]; }
    int partner(Side s) const { return partner(s.slot()); }
    bool glued(int slot) const { return partner(slot) >= 0; }
    bool glued(Side s) const { return glued(s.slot()); }
    const std::vector<int>& partners() const { return partner_; }

    // Raw edit; no checks beyond bounds. Use glue() for the checked version.
    void set_pair(int a, int b);
    void clear_pair(int a);
    int add_square();

    // Glued pairs (lower slot first), sorted.
    std::vector<std::pair<Side, Side>> gluings() const;
    int glued_pair_count() const;

    bool operator==(const SquareComplex&) const = default;

private:
    std::vector<int> partner_;
    bool slack_ = false;
};

SquareComplex disjoint_union(const SquareComplex& a, const SquareComplex& b);

struct VertexClass {
    std::vector<int> corners;  // 4*sq + corner, sorted
    int sign = 0;
    bool internal = false;
};

// Vertex classes ordered by smallest member corner; class_of[4*sq+k] indexes them.
struct VertexClasses {
    std::vector<VertexClass> classes;
    std::vector<int> class_of;
};

VertexClasses vertex_classes(const SquareComplex& c);
ValidationReport validate_complex(const SquareComplex& c);
void require_valid(const SquareComplex& c);

struct InvariantSummary {
    int N = 0;
    int chi = 0;
    int B = 0;
    int C = 0;
    int genus_total = 0;
    int index_I = 0;
    int gluing_G = 0;
    int internal_vertices = 0;
    bool operator==(const InvariantSummary&) const = default;
};

InvariantSummary invariants(const SquareComplex& c);

// Connected components as sorted square lists, ordered by smallest square.
std::vector<std::vector<int>> components(const SquareComplex& c);

struct BoundaryEdge {
    Side side;
    bool outgoing = false;  // even sides are outgoing
    int from_vertex = 0;
    int to_vertex = 0;
};
using BoundaryCycle = std::vector<BoundaryEdge>;

// Boundary edge following the unglued slot s along the boundary.
int next_boundary(const SquareComplex& c, int slot);
// Each cycle starts at its smallest slot.
std::vector<BoundaryCycle> boundary_structure(const SquareComplex& c);

SquareComplex unglue(const SquareComplex& c, Side edge);

enum class GluingKind { Standard, Fold, Zip };
const char* to_string(GluingKind k);

struct GluingClass {
    GluingKind kind = GluingKind::Standard;
    std::vector<int> swallowed;  // vertex classes (in the input complex) made internal
    int sign = 0;                // sign of the swallowed vertex for a fold
};

// Classifies gluing a to b; throws when the pair cannot be glued.
GluingClass classify_gluing(const SquareComplex& c, Side a, Side b);

struct GlueResult {
    SquareComplex complex;
    GluingClass info;
};

// Fold and zip results carry slack = true.
GlueResult glue(const SquareComplex& c, Side a, Side b);

// Square i of the result is square perm[i] of c turned so that its side k is
// the old side (k + rot[i]) mod 4; rot is 0 or 2 to keep corner signs.
SquareComplex relabel(const SquareComplex& c, const std::vector<int>& perm, const std::vector<int>& rot);

struct Canonical {
    SquareComplex complex;
    std::vector<int> perm;  // new -> old
    std::vector<int> rot;
    std::vector<int> key;
};

// Per-square extra data in the rotated frame (e.g. curve content), or empty.
using SquareEncoder = std::function<std::vector<int>(int sq, int rot)>;

// Deterministic breadth-first renumbering per component, minimised over
// starting square and rotation; components sorted by their encodings.
Canonical canonicalize(const SquareComplex& c, const SquareEncoder& extra = {});

struct RibbonGraph {
    int vertices = 0;
    std::vector<std::pair<Side, Side>> edges;
    // ends[v][k] = edge index at side k of square v, or -1.
    std::vector<std::array<int, 4>> ends;
};

RibbonGraph dual_graph(const SquareComplex& c);

}  // namespace sqft
