#include "sqft/engine.hpp"

#include "dsu.hpp"
#include "polygon.hpp"

#include <map>
#include <mutex>

namespace sqft {

using detail::mod4;

namespace {

std::mutex cache_mutex;
std::map<std::vector<int>, Z2Tensor> cache;

struct Triple {
    Side edge;
    int start = 0;
};

std::vector<Triple> triples_of(const SquareComplex& c, const CurveSystem& g) {
    std::vector<Triple> out;
    for (int s = 0; s < 4 * c.square_count(); ++s) {
        int p = c.partner(s);
        if (p < s) continue;
        int m = g.points(Side::of(s));
        for (int t = 0; t + 2 < m; ++t) out.push_back({Side::of(s), t});
    }
    return out;
}

std::string indent(int depth) { return std::string(static_cast<std::size_t>(2 * depth), ' '); }

// Canonical factor i is factor perm[i] of the original.
Z2Tensor from_canonical(const Z2Tensor& x, const std::vector<int>& perm) {
    std::vector<Word> out;
    for (Word w : x.words()) {
        Word v = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            if (bit(w, static_cast<int>(i))) v |= Word{1} << perm[i];
        out.push_back(v);
    }
    return Z2Tensor::from_words(x.arity(), std::move(out));
}

Z2Tensor reduce(const SquareComplex& c, const CurveSystem& g0, const ElementOptions& opt, int depth);

Z2Tensor compute(const SquareComplex& c, const CurveSystem& g, const ElementOptions& opt, int depth) {
    int n = c.square_count();
    auto triples = triples_of(c, g);
    if (triples.empty()) {
        auto w = basic_word(g);
        if (!w) throw Error("internal: efficient sutures without triples are not basic");
        if (opt.trace) opt.trace->push_back(indent(depth) + "basic " + word_string(*w, n));
        return Z2Tensor::basis(n, *w);
    }
    Triple t = triples.front();
    if (opt.shuffle) {
        std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);
        t = triples[pick(*opt.shuffle)];
    }
    if (opt.trace)
        opt.trace->push_back(indent(depth) + "bypass at " + std::to_string(t.edge.sq) + "." +
                             std::to_string(t.edge.side) + " points " + std::to_string(t.start) + ".." +
                             std::to_string(t.start + 2));
    Z2Tensor up = reduce(c, bypass_surgery(c, g, t.edge, t.start, BypassDir::Up), opt, depth + 1);
    Z2Tensor down = reduce(c, bypass_surgery(c, g, t.edge, t.start, BypassDir::Down), opt, depth + 1);
    return up + down;
}

Z2Tensor reduce(const SquareComplex& c, const CurveSystem& g0, const ElementOptions& opt, int depth) {
    CurveSystem g = normalize(c, g0);
    if (is_trivial(c, g)) {
        if (opt.trace) opt.trace->push_back(indent(depth) + "trivial, 0");
        return Z2Tensor(c.square_count());
    }
    if (!opt.use_cache || opt.shuffle || opt.trace) return compute(c, g, opt, depth);
    auto cp = canonicalize(c, g);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(cp.canon.key);
        if (it != cache.end()) return from_canonical(it->second, cp.canon.perm);
    }
    Z2Tensor x = compute(cp.canon.complex, cp.curves, opt, depth);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(cp.canon.key, x);
    }
    return from_canonical(x, cp.canon.perm);
}

}  // namespace

void clear_element_cache() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.clear();
}

std::size_t element_cache_size() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.size();
}

DigitalOp fold_operator(const CollapseRecord& r, int arity_in) {
    if (r.collapsed_square < 0 || r.collapsed_square >= arity_in) throw Error("inconsistent collapse record");
    std::map<int, int> seen;
    for (int w : r.wedge_squares) {
        if (w < 0 || w >= arity_in || w == r.collapsed_square) throw Error("inconsistent collapse record");
        ++seen[w];
    }
    std::vector<int> acted;
    for (int w : r.wedge_squares)
        if (seen[w] % 2 == 1 && std::find(acted.begin(), acted.end(), w) == acted.end()) acted.push_back(w);
    int value = r.vertex_sign > 0 ? 0 : 1;
    return DigitalOp::annihilate(value, arity_in, r.collapsed_square, acted);
}

Z2Tensor suture_element(const SquareComplex& c, const CurveSystem& g, const ElementOptions& opt) {
    require_valid(c, g);
    Z2Tensor x = reduce(c, g, opt, 0);
    if (!c.slack()) return x;
    auto t = tighten(c);
    int arity = c.square_count();
    for (const auto& r : t.records) {
        DigitalOp op = fold_operator(r, arity);
        if (opt.trace) opt.trace->push_back("collapse " + to_string(op));
        x = apply(op, x);
        arity = op.arity_out();
    }
    return x;
}

Z2Tensor suture_element_geometric(const SquareComplex& c, const CurveSystem& g) {
    require_valid(c, g);
    auto t = tighten(c, &g);
    return suture_element(t.complex, *t.curves);
}

const char* to_string(MoveKind k) {
    switch (k) {
        case MoveKind::Create: return "create";
        case MoveKind::Glue: return "glue";
        case MoveKind::Fold: return "fold";
        case MoveKind::Zip: return "zip";
    }
    return "?";
}

namespace {

SlotMap identity_map(int squares) {
    SlotMap m(static_cast<std::size_t>(4 * squares));
    for (int i = 0; i < 4 * squares; ++i) m[static_cast<std::size_t>(i)] = i;
    return m;
}

std::string side_name(Side s) { return std::to_string(s.sq) + "." + std::to_string(s.side); }

}  // namespace

ScriptRun run_script(const MorphismScript& s, const CurveSystem* g) {
    require_valid(s.source);
    if (s.source.slack()) throw Error("script source must be bona fide");
    if (g) require_valid(s.source, *g);
    ScriptRun run;
    run.target = s.source;
    if (g) run.curves = *g;
    for (std::size_t i = 0; i < s.moves.size(); ++i) {
        const Move& mv = s.moves[i];
        StepInfo st;
        st.move = mv;
        st.index_before = run.target.square_count();
        std::string where = "move " + std::to_string(i) + " (" + to_string(mv.kind) + "): ";
        if (mv.kind == MoveKind::Create) {
            if (mv.sign != 1 && mv.sign != -1) throw Error(where + "sign must be + or -");
            st.slot_map = identity_map(run.target.square_count());
            st.ops.push_back(DigitalOp::create(mv.sign > 0 ? 1 : 0, run.target.square_count()));
            run.target.add_square();
            if (run.curves) {
                CurveSystem next(run.target.square_count());
                for (int q = 0; q + 1 < run.target.square_count(); ++q) next.square(q) = run.curves->square(q);
                next.square(run.target.square_count() - 1) = basic_square(mv.sign > 0 ? 1 : 0);
                next.detached_loops = run.curves->detached_loops;
                run.curves = next;
            }
        } else {
            GluingClass cls;
            try {
                cls = classify_gluing(run.target, mv.a, mv.b);
            } catch (const Error& e) {
                throw Error(where + e.what());
            }
            GluingKind want = mv.kind == MoveKind::Glue ? GluingKind::Standard
                              : mv.kind == MoveKind::Fold ? GluingKind::Fold
                                                          : GluingKind::Zip;
            if (cls.kind != want)
                throw Error(where + side_name(mv.a) + " with " + side_name(mv.b) + " is a " + to_string(cls.kind) +
                            " gluing");
            if (run.curves) run.curves = transport_glue(run.target, *run.curves, mv.a, mv.b);
            SquareComplex glued = glue(run.target, mv.a, mv.b).complex;
            if (mv.kind == MoveKind::Glue) {
                run.target = glued;
                st.slot_map = identity_map(run.target.square_count());
            } else {
                auto t = tighten(glued, run.curves ? &*run.curves : nullptr);
                int arity = glued.square_count();
                for (const auto& r : t.records) {
                    st.ops.push_back(fold_operator(r, arity));
                    arity = st.ops.back().arity_out();
                }
                st.records = t.records;
                st.slot_map = t.slot_map;
                run.target = t.complex;
                if (run.curves) run.curves = t.curves;
            }
        }
        st.index_after = run.target.square_count();
        for (const auto& op : st.ops) run.factorization.push_back(op);
        run.steps.push_back(std::move(st));
    }
    return run;
}

std::pair<LinearMap, Factorization> morphism_operator(const MorphismScript& s) {
    auto run = run_script(s);
    return {LinearMap::compose(run.factorization, s.source.square_count()), run.factorization};
}

CurveSystem apply_script_to_sutures(const MorphismScript& s, const CurveSystem& g) {
    return *run_script(s, &g).curves;
}

std::vector<Move> annihilation_as_fold(const SquareComplex& c, Side e1, Side e2, Side e3, int sign) {
    require_valid(c);
    for (Side e : {e1, e2, e3})
        if (e.sq < 0 || e.sq >= c.square_count() || e.side < 0 || e.side > 3 || c.glued(e))
            throw Error("annihilation edges must be boundary edges");
    if (next_boundary(c, e1.slot()) != e2.slot() || next_boundary(c, e2.slot()) != e3.slot())
        throw Error("annihilation edges are not consecutive");
    if (e1 == e3) throw Error("annihilation needs a boundary component with at least four edges");
    int z = c.square_count();
    int zeta = e2.side % 2 == 0 ? 1 : 0;
    std::vector<Move> moves;
    moves.push_back({MoveKind::Create, sign, {}, {}});
    moves.push_back({MoveKind::Glue, +1, Side{z, zeta}, e2});
    moves.push_back({MoveKind::Fold, +1, e1, Side{z, mod4(zeta + 1)}});
    // The first fold tightens the complex; follow the remaining edges through it.
    MorphismScript probe{c, moves};
    auto run = run_script(probe);
    const auto& map = run.steps.back().slot_map;
    int a = map[static_cast<std::size_t>(Side{z, mod4(zeta + 3)}.slot())];
    int b = map[static_cast<std::size_t>(e3.slot())];
    if (a < 0 || b < 0) throw Error("internal: annihilation edges lost during tightening");
    moves.push_back({MoveKind::Fold, +1, Side::of(a), Side::of(b)});
    return moves;
}

LinearMap hexagon_rotation(const SquareComplex& hex, int sides) {
    require_valid(hex);
    auto gl = hex.gluings();
    if (hex.square_count() != 2 || gl.size() != 1 || gl[0].first.sq == gl[0].second.sq)
        throw Error("hexagon rotation needs two squares glued along one edge");
    Side a = gl[0].first.side % 2 == 0 ? gl[0].first : gl[0].second;
    Side b = gl[0].first.side % 2 == 0 ? gl[0].second : gl[0].first;
    std::vector<Z2Tensor> cols;
    for (Word w = 0; w < 4; ++w) {
        CurveSystem g = basic_sutures(hex, w);
        auto pa = detail::rotate(detail::from_square(g.square(a.sq)), a.side + 1);
        auto pb = detail::rotate(detail::from_square(g.square(b.sq)), b.side + 1);
        auto h = detail::rotate(detail::glue(pa, 3, pb, 3), -sides);
        auto [first, second] = detail::cut(h, 0, 3);
        CurveSystem r(2);
        r.square(a.sq) = detail::to_square(detail::rotate(first, -(a.side + 1)));
        r.square(b.sq) = detail::to_square(detail::rotate(second, -(b.side + 1)));
        cols.push_back(suture_element(hex, r));
    }
    return LinearMap::from_columns(2, 2, std::move(cols));
}

}  // namespace sqft
