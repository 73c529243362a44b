#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace sqft;
using namespace sqft::test;

namespace {

std::vector<SquareComplex> generated(int count, int max_squares) {
    std::vector<SquareComplex> out;
    for (int i = 0; i < count; ++i) {
        out.push_back(run_script(random_surface(static_cast<std::uint64_t>(i), max_squares)).target);
        auto s = random_script(static_cast<std::uint64_t>(1000 + i), max_squares);
        out.push_back(s.source);
        out.push_back(run_script(s).target);
    }
    return out;
}

}  // namespace

TEST(Complex, ValidationExamples) {
    EXPECT_TRUE(validate_complex(SquareComplex(1)).ok());
    EXPECT_FALSE(validate_complex(make(2, {{0, 0, 1, 0}})).ok());
    EXPECT_FALSE(validate_complex(make(1, {{0, 0, 0, 1}})).ok());
    EXPECT_TRUE(validate_complex(make(1, {{0, 0, 0, 1}}, true)).ok());
    EXPECT_THROW(require_valid(make(2, {{0, 0, 1, 0}})), Error);
}

TEST(Complex, BonaFideRejectsInternalVertices) {
    // Folding a hexagon leaves an internal vertex that only a slack complex may carry.
    SquareComplex folded = make(2, {{0, 1, 1, 0}, {0, 2, 1, 3}});
    EXPECT_FALSE(validate_complex(folded).ok());
    folded.set_slack(true);
    EXPECT_TRUE(validate_complex(folded).ok());
}

TEST(Complex, InvariantExamples) {
    auto sq = invariants(SquareComplex(1));
    EXPECT_EQ(sq.N, 2);
    EXPECT_EQ(sq.chi, 1);
    EXPECT_EQ(sq.index_I, 1);
    EXPECT_EQ(sq.gluing_G, 0);
    EXPECT_EQ(sq.B, 1);

    auto hex = invariants(make(2, {{0, 0, 1, 1}}));
    EXPECT_EQ(hex.N, 3);
    EXPECT_EQ(hex.chi, 1);
    EXPECT_EQ(hex.index_I, 2);
    EXPECT_EQ(hex.gluing_G, 1);

    auto tor = invariants(punctured_torus());
    EXPECT_EQ(tor.N, 1);
    EXPECT_EQ(tor.chi, -1);
    EXPECT_EQ(tor.index_I, 2);
    EXPECT_EQ(tor.gluing_G, 3);
    EXPECT_EQ(tor.B, 1);
    EXPECT_EQ(tor.genus_total, 1);

    auto ann = invariants(annulus());
    EXPECT_EQ(ann.chi, 0);
    EXPECT_EQ(ann.B, 2);
}

TEST(Complex, BoundaryExamples) {
    auto sq = boundary_structure(SquareComplex(1));
    ASSERT_EQ(sq.size(), 1u);
    ASSERT_EQ(sq[0].size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(sq[0][i].outgoing, i % 2 == 0);
    auto hex = boundary_structure(hexagon());
    ASSERT_EQ(hex.size(), 1u);
    EXPECT_EQ(hex[0].size(), 6u);
    auto ann = boundary_structure(annulus());
    ASSERT_EQ(ann.size(), 2u);
    EXPECT_EQ(ann[0].size(), 2u);
    EXPECT_EQ(ann[1].size(), 2u);
}

TEST(Complex, BoundaryAlternatesAndChains) {
    for (const auto& c : generated(30, 6))
        for (const auto& cyc : boundary_structure(c))
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                const auto& e = cyc[i];
                const auto& f = cyc[(i + 1) % cyc.size()];
                EXPECT_NE(e.outgoing, f.outgoing);
                EXPECT_EQ(e.to_vertex, f.from_vertex);
            }
}

TEST(Complex, UnglueExamples) {
    SquareComplex hex = hexagon();
    SquareComplex cut = unglue(hex, Side{0, 1});
    EXPECT_EQ(invariants(cut).index_I, 2);
    EXPECT_EQ(invariants(cut).gluing_G, 0);
    EXPECT_EQ(invariants(cut).C, 2);
    SquareComplex tor = punctured_torus();
    for (const auto& [a, b] : tor.gluings()) {
        auto inv = invariants(unglue(tor, a));
        EXPECT_EQ(inv.index_I, 2);
        EXPECT_EQ(inv.gluing_G, 2);
    }
    EXPECT_THROW(unglue(SquareComplex(1), Side{0, 0}), Error);
}

TEST(Complex, UnglueThenGlueIsIdentity) {
    for (const auto& c : generated(20, 6))
        for (const auto& [a, b] : c.gluings()) {
            SquareComplex u = unglue(c, a);
            EXPECT_EQ(glue(u, a, b).complex, c);
        }
}

TEST(Complex, GlueExamples) {
    auto two = glue(SquareComplex(2), Side{0, 0}, Side{1, 1});
    EXPECT_EQ(two.info.kind, GluingKind::Standard);
    EXPECT_EQ(invariants(two.complex).index_I, 2);

    // A.1 and B.0 meet at the vertex class {A.c1, B.c1} of the hexagon A.0-B.1.
    SquareComplex hex = make(2, {{0, 0, 1, 1}});
    auto fold = glue(hex, Side{0, 1}, Side{1, 0});
    EXPECT_EQ(fold.info.kind, GluingKind::Fold);
    EXPECT_EQ(fold.info.sign, +1);
    EXPECT_TRUE(fold.complex.slack());
    EXPECT_EQ(invariants(fold.complex).index_I, 1);

    SquareComplex ann = annulus();
    auto cycles = boundary_structure(ann);
    EXPECT_THROW(classify_gluing(ann, cycles[0][0].side, cycles[0][1].side), Error);

    MorphismScript zs = parse_script(fixture("zip.script.json"));
    const Move& mv = zs.moves.at(0);
    auto zip = glue(zs.source, mv.a, mv.b);
    EXPECT_EQ(zip.info.kind, GluingKind::Zip);
    EXPECT_EQ(invariants(zs.source).index_I - invariants(zip.complex).index_I, 2);
}

TEST(Complex, GlueRejectsBadPairs) {
    SquareComplex hex = hexagon();
    EXPECT_THROW(classify_gluing(hex, Side{0, 0}, Side{1, 2}), Error);  // same parity
    EXPECT_THROW(classify_gluing(hex, Side{0, 1}, Side{0, 2}), Error);  // already glued
    EXPECT_THROW(classify_gluing(hex, Side{0, 0}, Side{0, 0}), Error);
}

TEST(Complex, ClassificationMatchesVertexOracle) {
    for (const auto& c : generated(25, 6)) {
        auto vc = vertex_classes(c);
        auto cycles = boundary_structure(c);
        auto ends = [&](Side s) {
            return std::set<int>{vc.class_of[static_cast<std::size_t>(s.slot())],
                                 vc.class_of[static_cast<std::size_t>(4 * s.sq + (s.side + 1) % 4)]};
        };
        for (int a = 0; a < 4 * c.square_count(); ++a)
            for (int b = a + 1; b < 4 * c.square_count(); ++b) {
                if (c.glued(a) || c.glued(b) || (a + b) % 2 == 0) continue;
                Side sa = Side::of(a), sb = Side::of(b);
                auto ea = ends(sa), eb = ends(sb);
                int shared = 0;
                for (int v : ea) shared += static_cast<int>(eb.count(v));
                bool whole_cycle = false;
                for (const auto& cyc : cycles)
                    if (cyc.size() == 2 && ((cyc[0].side == sa && cyc[1].side == sb) || (cyc[0].side == sb && cyc[1].side == sa)))
                        whole_cycle = true;
                int comp_size = 0, comp_cycles = 0;
                for (const auto& comp : components(c))
                    if (std::find(comp.begin(), comp.end(), sa.sq) != comp.end()) {
                        comp_size = static_cast<int>(comp.size());
                        for (const auto& cyc : cycles)
                            if (std::find(comp.begin(), comp.end(), cyc.front().side.sq) != comp.end()) ++comp_cycles;
                    }
                bool closes = whole_cycle && comp_cycles == 1;
                bool vacuum = (whole_cycle && comp_size < 3) || (!whole_cycle && shared == 1 && comp_size < 2);
                if (closes || vacuum) {
                    EXPECT_THROW(classify_gluing(c, sa, sb), Error);
                    continue;
                }
                auto k = classify_gluing(c, sa, sb).kind;
                if (whole_cycle) EXPECT_EQ(k, GluingKind::Zip);
                else if (shared == 1) EXPECT_EQ(k, GluingKind::Fold);
                else EXPECT_EQ(k, GluingKind::Standard);
            }
    }
}

TEST(Complex, GeneratedComplexesRespectParityAndCounts) {
    for (const auto& c : generated(40, 8)) {
        ASSERT_TRUE(validate_complex(c).ok());
        EXPECT_FALSE(c.slack());
        for (const auto& [a, b] : c.gluings()) EXPECT_EQ((a.side + b.side) % 2, 1);
        auto inv = invariants(c);
        EXPECT_EQ(inv.index_I, c.square_count());
        EXPECT_EQ(inv.gluing_G, c.glued_pair_count());
        EXPECT_EQ(inv.internal_vertices, 0);
    }
}

TEST(Complex, InvariantsAddOverDisjointUnion) {
    auto cs = generated(10, 5);
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
        auto a = invariants(cs[i]), b = invariants(cs[i + 1]);
        auto u = invariants(disjoint_union(cs[i], cs[i + 1]));
        EXPECT_EQ(u.index_I, a.index_I + b.index_I);
        EXPECT_EQ(u.gluing_G, a.gluing_G + b.gluing_G);
        EXPECT_EQ(u.N, a.N + b.N);
        EXPECT_EQ(u.chi, a.chi + b.chi);
        EXPECT_EQ(u.C, a.C + b.C);
    }
}

TEST(Complex, CanonicalFormIgnoresLabels) {
    std::mt19937_64 rng(3);
    for (const auto& c : generated(20, 6)) {
        int n = c.square_count();
        std::vector<int> perm(static_cast<std::size_t>(n)), rot(perm.size());
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (auto& r : rot) r = 2 * static_cast<int>(rng() % 2);
        SquareComplex d = relabel(c, perm, rot);
        ASSERT_TRUE(validate_complex(d).ok());
        auto kc = canonicalize(c), kd = canonicalize(d);
        EXPECT_EQ(kc.key, kd.key);
        EXPECT_EQ(kc.complex, kd.complex);
        EXPECT_EQ(relabel(c, kc.perm, kc.rot), kc.complex);
    }
    EXPECT_NE(canonicalize(hexagon()).key, canonicalize(annulus()).key);
}

TEST(Complex, DualGraphExamples) {
    auto g1 = dual_graph(SquareComplex(1));
    EXPECT_EQ(g1.vertices, 1);
    EXPECT_EQ(g1.edges.size(), 0u);
    auto g2 = dual_graph(hexagon());
    EXPECT_EQ(g2.vertices, 2);
    EXPECT_EQ(g2.edges.size(), 1u);
    auto g3 = dual_graph(punctured_torus());
    EXPECT_EQ(g3.vertices, 2);
    EXPECT_EQ(g3.edges.size(), 3u);
    EXPECT_THROW(dual_graph(make(1, {{0, 0, 0, 1}}, true)), Error);
    for (const auto& c : generated(10, 6)) {
        auto g = dual_graph(c);
        for (const auto& e : g.ends) {
            int deg = 0;
            for (int x : e) deg += x >= 0;
            EXPECT_LE(deg, 4);
        }
    }
}
