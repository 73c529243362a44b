#include "support.hpp"

#include "sqft/derived_constants.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace sqft;
using namespace sqft::test;

namespace {

MorphismScript script(const SquareComplex& source, std::vector<Move> moves) { return MorphismScript{source, std::move(moves)}; }

Move create(int sign) { return Move{MoveKind::Create, sign, {}, {}}; }
Move glue_move(MoveKind k, Side a, Side b) { return Move{k, +1, a, b}; }

// Block of the slide on (even square i, odd square j) read off from suture
// elements before and after sliding the hexagon's diagonal.
Block2 derive_slide_block(SlideDirection d) {
    SquareComplex hex = hexagon();
    auto gl = hex.gluings().at(0);
    int i = gl.first.side % 2 == 0 ? gl.first.sq : gl.second.sq;
    int j = 1 - i;
    Word basis[2] = {Word{1} << j, Word{1} << i};
    Block2 m{};
    for (int col = 0; col < 2; ++col) {
        CurveSystem g = basic_sutures(hex, basis[col]);
        auto r = diagonal_slide(hex, Side{i, i == gl.first.sq ? gl.first.side : gl.second.side}, d, &g);
        EXPECT_EQ(r.record.square_a, i);
        Z2Tensor img = suture_element(r.complex, *r.curves);
        for (int row = 0; row < 2; ++row) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = img.contains(basis[row]) ? 1 : 0;
        EXPECT_EQ(img.size(), static_cast<std::size_t>(m[0][static_cast<std::size_t>(col)] + m[1][static_cast<std::size_t>(col)]));
    }
    return m;
}

}  // namespace

TEST(Engine, BasicElements) {
    SquareComplex sq(1);
    EXPECT_EQ(suture_element(sq, basic_sutures(sq, 1)), words(1, {"1"}));
    EXPECT_EQ(suture_element(sq, basic_sutures(sq, 0)), words(1, {"0"}));
    for (const auto& c : {hexagon(), annulus(), punctured_torus(), disc12()}) {
        int n = c.square_count();
        for (Word w = 0; w < (Word{1} << n); ++w) EXPECT_EQ(suture_element(c, basic_sutures(c, w)), Z2Tensor::basis(n, w));
    }
}

TEST(Engine, HexagonSwapIsSuperposition) {
    SquareComplex hex = fixture_surface("hexagon.surface.json");
    CurveSystem g = parse_sutures(fixture("hexagon_swap.sutures.json"), hex);
    EXPECT_EQ(euler_class(hex, g), 0);
    EXPECT_EQ(suture_element(hex, g), words(2, {"01", "10"}));
}

TEST(Engine, VanishingExamples) {
    SquareComplex sq(1);
    EXPECT_TRUE(suture_element(sq, parse_sutures(fixture("square_loop.sutures.json"), sq)).is_zero());
    SquareComplex ann = fixture_surface("annulus.surface.json");
    EXPECT_TRUE(suture_element(ann, parse_sutures(fixture("annulus_core.sutures.json"), ann)).is_zero());
    SquareComplex tor = fixture_surface("punctured_torus.surface.json");
    EXPECT_TRUE(suture_element(tor, parse_sutures(fixture("punctured_torus_confined.sutures.json"), tor)).is_zero());
}

TEST(Engine, DiscTwelveFold) {
    SquareComplex d = fixture_surface("disc12.surface.json");
    CurveSystem g = parse_sutures(fixture("disc12.sutures.json"), d);
    EXPECT_EQ(suture_element(d, g), words(5, {"01110"}));
    MorphismScript s = parse_script(fixture("disc12_fold.script.json"));
    auto [L, f] = morphism_operator(s);
    ASSERT_EQ(f.size(), 1u);
    const auto& op = std::get<DigitalOp>(f[0]);
    EXPECT_EQ(op, DigitalOp::annihilate(1, 5, 0, {1, 2}));
    EXPECT_EQ(to_string(op), "a1[5->4; factor 0; acted {1,2}]");
    Z2Tensor out = L.column(parse_word("01110"));
    EXPECT_EQ(out, words(4, {"1010", "0110"}));
    EXPECT_EQ(out.to_string(), "0110 + 1010");

    CurveSystem h = apply_script_to_sutures(s, g);
    SquareComplex t = run_script(s).target;
    EXPECT_EQ(suture_element(t, h), out);
    EXPECT_EQ(suture_element_geometric(t, h), out);
    EXPECT_EQ(bypass_triples(tighten(t, &h).complex, *tighten(t, &h).curves).size(), 1u);
}

TEST(Engine, CreationScripts) {
    SquareComplex sq(1);
    auto [Lp, fp] = morphism_operator(script(sq, {create(+1)}));
    ASSERT_EQ(fp.size(), 1u);
    EXPECT_EQ(std::get<DigitalOp>(fp[0]), DigitalOp::create(1, 1));
    for (Word w = 0; w < 2; ++w) EXPECT_EQ(Lp.column(w), Z2Tensor::basis(2, w | 2));

    auto s = script(sq, {create(-1)});
    auto [Ln, fn] = morphism_operator(s);
    CurveSystem g = basic_sutures(sq, 1);
    CurveSystem h = apply_script_to_sutures(s, g);
    EXPECT_EQ(h, basic_sutures(SquareComplex(2), parse_word("10")));
    EXPECT_EQ(suture_element(run_script(s).target, h), words(2, {"10"}));
    EXPECT_EQ(Ln.column(1), words(2, {"10"}));
}

TEST(Engine, StandardGlueIsIdentity) {
    auto s = script(SquareComplex(2), {glue_move(MoveKind::Glue, Side{0, 0}, Side{1, 1})});
    EXPECT_EQ(morphism_operator(s).first, LinearMap::identity(2));
    EXPECT_EQ(morphism_operator(script(hexagon(), {})).first, LinearMap::identity(2));
    CurveSystem g = parse_sutures(fixture("hexagon_swap.sutures.json"), hexagon());
    EXPECT_EQ(apply_script_to_sutures(script(hexagon(), {}), g), g);
}

TEST(Engine, BuildScriptFixture) {
    MorphismScript s = parse_script(fixture("hexagon_build.script.json"));
    auto run = run_script(s);
    EXPECT_EQ(canonicalize(run.target).key, canonicalize(hexagon()).key);
    auto [L, f] = morphism_operator(s);
    EXPECT_EQ(L.arity_in(), 0);
    EXPECT_EQ(L.column(0), words(2, {"10"}));
}

TEST(Engine, ZipFixture) {
    MorphismScript s = parse_script(fixture("zip.script.json"));
    auto run = run_script(s);
    ASSERT_EQ(run.steps.size(), 1u);
    EXPECT_EQ(run.steps[0].index_before - run.steps[0].index_after, 2);
    ASSERT_EQ(run.steps[0].ops.size(), 2u);
    EXPECT_NE(run.steps[0].ops[0].bit_value(), run.steps[0].ops[1].bit_value());
    auto [L, f] = morphism_operator(s);
    for (Word w = 0; w < 8; ++w) {
        CurveSystem g = basic_sutures(s.source, w);
        EXPECT_EQ(suture_element(run.target, apply_script_to_sutures(s, g)), L.column(w)) << w;
    }
}

TEST(Engine, AnnihilationAsFold) {
    SquareComplex hex = hexagon();
    auto cyc = boundary_structure(hex).at(0);
    std::size_t m = cyc.size();
    for (std::size_t k = 0; k < m; ++k)
        for (int sign : {+1, -1}) {
            Side e1 = cyc[k].side, e2 = cyc[(k + 1) % m].side, e3 = cyc[(k + 2) % m].side;
            auto moves = annihilation_as_fold(hex, e1, e2, e3, sign);
            ASSERT_EQ(moves.size(), 4u);
            EXPECT_EQ(moves[0].kind, MoveKind::Create);
            EXPECT_EQ(moves[0].sign, sign);
            EXPECT_EQ(moves[2].kind, MoveKind::Fold);
            EXPECT_EQ(moves[3].kind, MoveKind::Fold);
            LinearMap L = morphism_operator(script(hex, moves)).first;
            // A single annihilation; positive gives the a0 form. Whether the other
            // square is acted on depends on where the three edges sit.
            int v = sign > 0 ? 0 : 1;
            bool found = false;
            for (int f = 0; f < 2; ++f)
                for (const std::vector<int>& acted : {std::vector<int>{}, std::vector<int>{1 - f}})
                    found = found || L == LinearMap::from_step(DigitalOp::annihilate(v, 2, f, acted), 2);
            EXPECT_TRUE(found) << "start " << k << " sign " << sign;
        }
    // With e1 on the even side of square 0, the positive case acts on the other square.
    auto pos = annihilation_as_fold(hex, cyc[0].side, cyc[1].side, cyc[2].side, +1);
    EXPECT_EQ(morphism_operator(script(hex, pos)).first,
              LinearMap::from_step(DigitalOp::annihilate(0, 2, 0, {1}), 2));
    EXPECT_THROW(annihilation_as_fold(hex, cyc[0].side, cyc[2].side, cyc[1].side, +1), Error);
    EXPECT_THROW(annihilation_as_fold(hex, Side{0, 1}, cyc[1].side, cyc[2].side, +1), Error);
}

TEST(Engine, AnnihilationUndoesCreation) {
    SquareComplex hex = hexagon();
    for (int cs : {+1, -1})
        for (int as : {+1, -1}) {
            std::vector<Move> moves{create(cs), glue_move(MoveKind::Glue, Side{2, 0}, Side{1, 1})};
            SquareComplex c = run_script(script(hex, moves)).target;
            auto cyc = boundary_structure(c).at(0);
            std::size_t k = 0;
            while (!(cyc[k].side == Side{2, 1})) ++k;
            auto ann = annihilation_as_fold(c, cyc[k].side, cyc[(k + 1) % cyc.size()].side, cyc[(k + 2) % cyc.size()].side, as);
            moves.insert(moves.end(), ann.begin(), ann.end());
            LinearMap L = morphism_operator(script(hex, moves)).first;
            EXPECT_EQ(L == LinearMap::identity(2), cs != as) << cs << " " << as;
        }
}

TEST(Engine, HexagonRotation) {
    SquareComplex hex = fixture_surface("hexagon.surface.json");
    LinearMap R = hexagon_rotation(hex, 2);
    EXPECT_EQ(R.column(parse_word("00")), words(2, {"00"}));
    EXPECT_EQ(R.column(parse_word("11")), words(2, {"11"}));
    // Both off-diagonal coefficients are forced to 1 by order three.
    EXPECT_EQ(R.column(parse_word("01")), words(2, {"10"}));
    EXPECT_EQ(R.column(parse_word("10")), words(2, {"01", "10"}));
    EXPECT_EQ(R.then(R).then(R), LinearMap::identity(2));
    EXPECT_NE(R, LinearMap::identity(2));
    EXPECT_EQ(hexagon_rotation(hex, 4), R.then(R));
    EXPECT_EQ(hexagon_rotation(hex, 6), LinearMap::identity(2));
}

TEST(Engine, SlideBlocksMatchFrozenConstants) {
    Block2 cw = derive_slide_block(SlideDirection::Clockwise);
    Block2 ccw = derive_slide_block(SlideDirection::Anticlockwise);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            EXPECT_EQ(cw[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], derived::kSlideClockwise[r][c]);
            EXPECT_EQ(ccw[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], derived::kSlideAnticlockwise[r][c]);
        }
    EXPECT_EQ(cw, slide_matrix(SlideDirection::Clockwise));
    EXPECT_EQ(ccw, slide_matrix(SlideDirection::Anticlockwise));
}

TEST(Engine, ElementsFollowSlideMap) {
    int slid = 0;
    for (int i = 0; i < 40; ++i) {
        auto [c, g] = random_pair(static_cast<std::uint64_t>(i), 5);
        Z2Tensor before = suture_element(c, g);
        for (const auto& [a, b] : c.gluings()) {
            if (a.sq == b.sq) continue;
            Side even = a.side % 2 == 0 ? a : b, odd = a.side % 2 == 0 ? b : a;
            for (auto d : {SlideDirection::Clockwise, SlideDirection::Anticlockwise}) {
                auto r = diagonal_slide(c, a, d, &g);
                EXPECT_EQ(suture_element(r.complex, *r.curves), slide_map(before, even.sq, odd.sq, d));
                ++slid;
            }
        }
    }
    EXPECT_GT(slid, 40);
}

TEST(Engine, FoldOperatorFromDiscRecord) {
    SquareComplex folded = glue(disc12(), Side{0, 1}, Side{1, 0}).complex;
    auto t = tighten(folded);
    ASSERT_EQ(t.records.size(), 1u);
    EXPECT_EQ(fold_operator(t.records[0], 5), DigitalOp::annihilate(1, 5, 0, {1, 2}));
}

TEST(Engine, GradingAndOrderIndependence) {
    for (int i = 0; i < 40; ++i) {
        auto [c, g] = random_pair(static_cast<std::uint64_t>(i), 6);
        Z2Tensor x = suture_element(c, g);
        if (!x.is_zero()) EXPECT_TRUE(is_homogeneous(x, euler_class(c, g)));
        ElementOptions fresh;
        fresh.use_cache = false;
        EXPECT_EQ(suture_element(c, g, fresh), x);
        for (std::uint64_t k = 0; k < 3; ++k) {
            std::mt19937_64 rng(k);
            ElementOptions shuffled;
            shuffled.shuffle = &rng;
            EXPECT_EQ(suture_element(c, g, shuffled), x);
        }
    }
}

TEST(Engine, CacheIsTransparent) {
    clear_element_cache();
    EXPECT_EQ(element_cache_size(), 0u);
    SquareComplex hex = hexagon();
    CurveSystem g = parse_sutures(fixture("hexagon_swap.sutures.json"), hex);
    Z2Tensor a = suture_element(hex, g);
    EXPECT_GT(element_cache_size(), 0u);
    EXPECT_EQ(suture_element(hex, g), a);
}

TEST(Engine, TraceRecordsRecursion) {
    SquareComplex hex = hexagon();
    CurveSystem g = parse_sutures(fixture("hexagon_swap.sutures.json"), hex);
    std::vector<std::string> lines;
    ElementOptions opt;
    opt.use_cache = false;
    opt.trace = &lines;
    suture_element(hex, g, opt);
    EXPECT_GE(lines.size(), 3u);
}

TEST(Engine, NaturalityAndFactorization) {
    for (int i = 0; i < 25; ++i) {
        MorphismScript s = random_script(static_cast<std::uint64_t>(i), 6);
        auto run = run_script(s);
        auto [L, f] = morphism_operator(s);
        int n = s.source.square_count();
        // Arity path follows the index path.
        int arity = n;
        for (const auto& st : run.steps) {
            EXPECT_EQ(st.index_before, arity);
            for (const auto& op : st.ops) arity = op.arity_out();
            EXPECT_EQ(st.index_after, arity);
        }
        EXPECT_EQ(L.arity_out(), arity);
        for (Word w = 0; w < (Word{1} << n); ++w) {
            EXPECT_EQ(evaluate(f, Z2Tensor::basis(n, w)), L.column(w));
            CurveSystem h = apply_script_to_sutures(s, basic_sutures(s.source, w));
            EXPECT_EQ(suture_element(run.target, h), L.column(w));
        }
    }
}
