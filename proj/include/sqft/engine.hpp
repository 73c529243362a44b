#pragma once

#include "sqft/moves.hpp"

#include <random>
#include <string>
#include <vector>

namespace sqft {

struct ElementOptions {
    bool use_cache = true;
    // When set, each bypass step picks a random triple; the cache is bypassed.
    std::mt19937_64* shuffle = nullptr;
    // When set, receives one indented line per recursion node.
    std::vector<std::string>* trace = nullptr;
};

// Bypass reduction. On slack complexes the basic words are carried through
// the square-collapse operators of tighten().
Z2Tensor suture_element(const SquareComplex& c, const CurveSystem& g, const ElementOptions& opt = {});
// Collapses the complex together with the curves first, then reduces.
Z2Tensor suture_element_geometric(const SquareComplex& c, const CurveSystem& g);
void clear_element_cache();
std::size_t element_cache_size();

// Annihilation attached to a collapse performed on a complex with arity_in squares.
DigitalOp fold_operator(const CollapseRecord& r, int arity_in);

enum class MoveKind { Create, Glue, Fold, Zip };
const char* to_string(MoveKind k);

struct Move {
    MoveKind kind = MoveKind::Create;
    int sign = +1;  // creations only
    Side a;
    Side b;
    bool operator==(const Move&) const = default;
};

// Slots in each move refer to the running complex, which is tightened after
// every fold and zip. Created squares are appended last.
struct MorphismScript {
    SquareComplex source;
    std::vector<Move> moves;
};

struct StepInfo {
    Move move;
    int index_before = 0;
    int index_after = 0;
    std::vector<CollapseRecord> records;
    std::vector<DigitalOp> ops;
    SlotMap slot_map;  // slots before the move -> slots after it
};

struct ScriptRun {
    SquareComplex target;
    std::vector<StepInfo> steps;
    Factorization factorization;
    std::optional<CurveSystem> curves;
};

ScriptRun run_script(const MorphismScript& s, const CurveSystem* g = nullptr);
std::pair<LinearMap, Factorization> morphism_operator(const MorphismScript& s);
CurveSystem apply_script_to_sutures(const MorphismScript& s, const CurveSystem& g);

// Moves gluing a new square of the given sign onto the consecutive boundary
// edges e1, e2, e3 of c: create, glue to e2, then two folds.
std::vector<Move> annihilation_as_fold(const SquareComplex& c, Side e1, Side e2, Side e3, int sign);

// Operator of turning the sutures of a two-square hexagon anticlockwise by
// `sides` hexagon sides (2 = 120 degrees), read in the same quadrangulation.
LinearMap hexagon_rotation(const SquareComplex& hex, int sides);

}  // namespace sqft
