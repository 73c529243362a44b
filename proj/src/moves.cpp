#include "sqft/moves.hpp"

#include "dsu.hpp"
#include "polygon.hpp"

#include <algorithm>
#include <numeric>

namespace sqft {

using detail::mod4;
using detail::Polygon;

namespace {

struct Working {
    SquareComplex c;
    std::optional<CurveSystem> g;
    SlotMap map;

    Working(const SquareComplex& c0, const CurveSystem* g0) : c(c0) {
        if (g0) g = *g0;
        map.resize(static_cast<std::size_t>(4 * c.square_count()));
        std::iota(map.begin(), map.end(), 0);
    }

    void remap(const std::vector<std::pair<int, int>>& changes) {
        for (int& e : map) {
            if (e < 0) continue;
            for (auto [from, to] : changes)
                if (e == from) {
                    e = to;
                    break;
                }
        }
    }
};

int slot(int sq, int side) { return 4 * sq + mod4(side); }

// Re-cuts the hexagon A ∪ B (A.a glued to B.b) along another diagonal.
void slide(Working& w, int A, int a, SlideDirection d) {
    int p = w.c.partner(slot(A, a));
    if (p < 0) throw Error("slide edge is not glued");
    int B = p / 4, b = p % 4;
    if (B == A) throw Error("slide needs two distinct squares");
    std::array<int, 6> hex = {slot(A, a + 1), slot(A, a + 2), slot(A, a + 3),
                              slot(B, b + 1), slot(B, b + 2), slot(B, b + 3)};
    std::array<int, 6> to;
    std::pair<int, int> added;
    if (d == SlideDirection::Clockwise) {
        to = {slot(A, a + 1), slot(A, a + 2), slot(B, b), slot(B, b + 1), slot(B, b + 2), slot(A, a)};
        added = {slot(A, a + 3), slot(B, b + 3)};
    } else {
        to = {slot(B, b), slot(A, a + 2), slot(A, a + 3), slot(A, a), slot(B, b + 2), slot(B, b + 3)};
        added = {slot(A, a + 1), slot(B, b + 1)};
    }
    std::array<int, 6> old_partner;
    for (int h = 0; h < 6; ++h) old_partner[static_cast<std::size_t>(h)] = w.c.partner(hex[static_cast<std::size_t>(h)]);
    for (int k = 0; k < 4; ++k) {
        w.c.clear_pair(slot(A, k));
        w.c.clear_pair(slot(B, k));
    }
    auto image = [&](int s) {
        for (int h = 0; h < 6; ++h)
            if (hex[static_cast<std::size_t>(h)] == s) return to[static_cast<std::size_t>(h)];
        return s;
    };
    for (int h = 0; h < 6; ++h) {
        int op = old_partner[static_cast<std::size_t>(h)];
        if (op >= 0) w.c.set_pair(to[static_cast<std::size_t>(h)], image(op));
    }
    w.c.set_pair(added.first, added.second);

    std::vector<std::pair<int, int>> changes;
    for (int h = 0; h < 6; ++h) changes.emplace_back(hex[static_cast<std::size_t>(h)], to[static_cast<std::size_t>(h)]);
    changes.emplace_back(slot(A, a), -1);
    changes.emplace_back(slot(B, b), -1);
    w.remap(changes);

    if (!w.g) return;
    auto& g = *w.g;
    Polygon pa = detail::rotate(detail::from_square(g.square(A)), a + 1);
    Polygon pb = detail::rotate(detail::from_square(g.square(B)), b + 1);
    Polygon h = detail::glue(pa, 3, pb, 3);
    int loops = h.loops;
    if (d == SlideDirection::Clockwise) {
        auto [first, second] = detail::cut(h, 2, 5);
        g.square(B) = detail::to_square(detail::rotate(first, -b));
        g.square(A) = detail::to_square(detail::rotate(second, -a));
    } else {
        auto [first, second] = detail::cut(h, 1, 4);
        g.square(A) = detail::to_square(detail::rotate(first, -(a + 2)));
        g.square(B) = detail::to_square(detail::rotate(second, -(b + 2)));
    }
    g.square(A).loops = loops;
    g.square(B).loops = 0;
}

void remove_square(Working& w, int S) {
    int n = w.c.square_count();
    auto shift = [&](int s) {
        if (s < 0) return -1;
        int q = s / 4;
        if (q == S) return -1;
        return q > S ? s - 4 : s;
    };
    SquareComplex out(n - 1, w.c.slack());
    for (int s = 0; s < 4 * n; ++s) {
        int p = w.c.partner(s);
        if (p > s && s / 4 != S && p / 4 != S) out.set_pair(shift(s), shift(p));
    }
    w.c = out;
    for (int& e : w.map) e = shift(e);
    if (w.g) {
        CurveSystem g(n - 1);
        g.detached_loops = w.g->detached_loops;
        for (int q = 0, k = 0; q < n; ++q)
            if (q != S) g.square(k++) = w.g->square(q);
        w.g = g;
    }
}

void refresh_slack(SquareComplex& c) {
    bool internal = false;
    for (const auto& v : vertex_classes(c).classes) internal = internal || v.internal;
    bool self = false;
    for (int s = 0; s < 4 * c.square_count(); ++s)
        if (c.partner(s) >= 0 && c.partner(s) / 4 == s / 4) self = true;
    c.set_slack(internal || self);
}

void collapse(Working& w, const CollapseRecord& r) {
    int S = r.collapsed_square, k = r.corner;
    int guard = 0;
    while (w.c.partner(slot(S, k + 3)) != slot(S, k)) {
        if (++guard > 4 * w.c.square_count() + 4) throw Error("internal: collapse slides did not close the cone");
        int p = w.c.partner(slot(S, k + 3));
        if (p < 0 || p / 4 == S) throw Error("internal: degenerate fan around the collapsed vertex");
        slide(w, S, k + 3, SlideDirection::Clockwise);
    }
    // The cone S.(k+3) ~ S.k folds S into a bigon with sides S.(k+1), S.(k+2).
    int s1 = slot(S, k + 1), s2 = slot(S, k + 2);
    int p1 = w.c.partner(s1), p2 = w.c.partner(s2);
    if ((p1 >= 0 && p1 / 4 == S) || (p2 >= 0 && p2 / 4 == S)) throw Error("internal: degenerate bigon");
    std::optional<Polygon> bigon;
    if (w.g) bigon = detail::self_glue(detail::rotate(detail::from_square(w.g->square(S)), k + 1), 2);
    for (int j = 0; j < 4; ++j) w.c.clear_pair(slot(S, j));
    if (p1 >= 0) {
        int N = p1 / 4, sigma = p1 % 4;
        if (p2 >= 0) w.c.set_pair(p1, p2);
        w.remap({{p1, -1}, {s2, p1}});
        if (w.g) {
            Polygon pn = detail::rotate(detail::from_square(w.g->square(N)), sigma);
            w.g->square(N) = detail::to_square(detail::rotate(detail::glue(*bigon, 0, pn, 0), -sigma));
        }
    } else if (p2 >= 0) {
        int Z = p2 / 4, zeta = p2 % 4;
        w.remap({{p2, -1}, {s1, p2}});
        if (w.g) {
            Polygon pz = detail::rotate(detail::from_square(w.g->square(Z)), zeta);
            w.g->square(Z) = detail::to_square(detail::rotate(detail::glue(*bigon, 1, pz, 0), -zeta));
        }
    } else if (w.g) {
        // The component was a vacuum; only its loops matter.
        w.g->detached_loops += bigon->loops;
    }
    remove_square(w, S);
    refresh_slack(w.c);
}

}  // namespace

CollapseSite find_collapsible_square(const SquareComplex& c, int y) {
    auto vc = vertex_classes(c);
    if (y < 0 || y >= static_cast<int>(vc.classes.size())) throw Error("unknown vertex class");
    if (!vc.classes[static_cast<std::size_t>(y)].internal) throw Error("vertex is not internal");
    std::vector<int> queue{y};
    std::vector<char> seen(vc.classes.size(), 0);
    seen[static_cast<std::size_t>(y)] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        for (int corner : vc.classes[static_cast<std::size_t>(queue[h])].corners) {
            int q = corner / 4, k = corner % 4;
            int opp = vc.class_of[static_cast<std::size_t>(4 * q + mod4(k + 2))];
            if (!vc.classes[static_cast<std::size_t>(opp)].internal) {
                bool degenerate = false;
                for (int e : {slot(q, k + 3), slot(q, k)}) {
                    int p = c.partner(e);
                    if (p == slot(q, k + 1) || p == slot(q, k + 2)) degenerate = true;
                }
                if (!degenerate) return {q, k, opp};
                continue;
            }
            if (!seen[static_cast<std::size_t>(opp)]) {
                seen[static_cast<std::size_t>(opp)] = 1;
                queue.push_back(opp);
            }
        }
    }
    throw Error("internal: no collapsible square found for an internal vertex");
}

CollapseRecord collapse_record(const SquareComplex& c, int square, int corner) {
    auto vc = vertex_classes(c);
    CollapseRecord r;
    r.collapsed_square = square;
    r.corner = corner;
    int y = vc.class_of[static_cast<std::size_t>(4 * square + corner)];
    int x = vc.class_of[static_cast<std::size_t>(4 * square + mod4(corner + 2))];
    r.internal_vertex = vc.classes[static_cast<std::size_t>(y)];
    r.target_vertex = vc.classes[static_cast<std::size_t>(x)];
    if (!r.internal_vertex.internal) throw Error("collapse corner is not internal");
    if (r.target_vertex.internal) throw Error("collapse target is not a boundary vertex");
    r.vertex_sign = r.internal_vertex.sign;
    int q = square, k = corner;
    r.edge_fan.push_back(Side::of(slot(q, k + 3)));
    for (int guard = 0;; ++guard) {
        if (guard > 4 * c.square_count()) throw Error("internal: fan walk did not close");
        int p = c.partner(slot(q, k - 1));
        q = p / 4;
        k = p % 4;
        if (q == square && k == corner) break;
        r.wedge_squares.push_back(q);
        r.edge_fan.push_back(Side::of(slot(q, k - 1)));
    }
    if (r.wedge_squares.empty()) r.edge_fan.push_back(Side{square, corner});
    else r.edge_fan.back() = Side{square, corner};
    return r;
}

namespace {

void check_record(const SquareComplex& c, const CollapseRecord& r) {
    if (r.collapsed_square < 0 || r.collapsed_square >= c.square_count() || r.corner < 0 || r.corner > 3)
        throw Error("inconsistent collapse record");
    auto fresh = collapse_record(c, r.collapsed_square, r.corner);
    if (fresh.wedge_squares != r.wedge_squares || fresh.edge_fan != r.edge_fan ||
        fresh.internal_vertex.corners != r.internal_vertex.corners || fresh.vertex_sign != r.vertex_sign)
        throw Error("inconsistent collapse record");
}

}  // namespace

SquareComplex collapse_slack_square(const SquareComplex& c, const CollapseRecord& r) {
    return collapse_slack_square(c, nullptr, r).complex;
}

MoveResult collapse_slack_square(const SquareComplex& c, const CurveSystem* g, const CollapseRecord& r) {
    check_record(c, r);
    Working w(c, g);
    collapse(w, r);
    return {w.c, w.g, w.map};
}

TightenResult tighten(const SquareComplex& c, const CurveSystem* g) {
    require_valid(c);
    Working w(c, g);
    TightenResult out;
    for (;;) {
        auto vc = vertex_classes(w.c);
        int y = -1;
        for (std::size_t i = 0; i < vc.classes.size() && y < 0; ++i)
            if (vc.classes[i].internal) y = static_cast<int>(i);
        if (y < 0) break;
        auto site = find_collapsible_square(w.c, y);
        auto r = collapse_record(w.c, site.square, site.corner);
        collapse(w, r);
        out.records.push_back(std::move(r));
    }
    refresh_slack(w.c);
    out.complex = w.c;
    out.curves = w.g;
    out.slot_map = w.map;
    return out;
}

SlideResult diagonal_slide(const SquareComplex& c, Side edge, SlideDirection d, const CurveSystem* g) {
    require_valid(c);
    if (c.slack()) throw Error("diagonal slides need a bona fide complex");
    if (edge.sq < 0 || edge.sq >= c.square_count() || edge.side < 0 || edge.side > 3) throw Error("unknown edge");
    int p = c.partner(edge);
    if (p < 0) throw Error("slide edge is not internal");
    Side other = Side::of(p);
    if (other.sq == edge.sq) throw Error("slide edge joins a square to itself");
    Side a = edge.side % 2 == 0 ? edge : other;
    Side b = edge.side % 2 == 0 ? other : edge;
    Working w(c, g);
    slide(w, a.sq, a.side, d);
    // The even side of the new edge lies on B; the two squares trade indices so
    // that factor a.sq again holds it.
    std::vector<int> perm(static_cast<std::size_t>(c.square_count())), rot(perm.size(), 0);
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::swap(perm[static_cast<std::size_t>(a.sq)], perm[static_cast<std::size_t>(b.sq)]);
    auto swap_slot = [&](int s) { return s < 0 ? s : 4 * perm[static_cast<std::size_t>(s / 4)] + s % 4; };
    SlideResult r;
    r.record.square_a = a.sq;
    r.record.square_b = b.sq;
    r.record.removed_edge = {std::min(a, b), std::max(a, b)};
    Side na = d == SlideDirection::Clockwise ? Side{a.sq, mod4(a.side + 3)} : Side{a.sq, mod4(a.side + 1)};
    Side nb = Side::of(w.c.partner(na));
    na = Side::of(swap_slot(na.slot()));
    nb = Side::of(swap_slot(nb.slot()));
    r.record.added_edge = {std::min(na, nb), std::max(na, nb)};
    r.record.direction = d;
    r.complex = relabel(w.c, perm, rot);
    if (w.g) r.curves = relabel(*w.g, perm, rot);
    r.slot_map = w.map;
    for (int& t : r.slot_map) t = swap_slot(t);
    return r;
}

}  // namespace sqft
