#include "sqft/complex.hpp"

#include "dsu.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace sqft {

using detail::Dsu;
using detail::mod4;

std::string ValidationReport::to_string() const {
    if (issues.empty()) return "valid";
    std::string s;
    for (const auto& i : issues) s += i + "\n";
    return s;
}

SquareComplex::SquareComplex(int squares, bool slack) : slack_(slack) {
    if (squares < 0) throw Error("negative square count");
    partner_.assign(static_cast<std::size_t>(4 * squares), -1);
}

void SquareComplex::set_pair(int a, int b) {
    if (a < 0 || b < 0 || a >= 4 * square_count() || b >= 4 * square_count()) throw Error("slot out of range");
    partner_[static_cast<std::size_t>(a)] = b;
    partner_[static_cast<std::size_t>(b)] = a;
}

void SquareComplex::clear_pair(int a) {
    int b = partner(a);
    partner_[static_cast<std::size_t>(a)] = -1;
    if (b >= 0) partner_[static_cast<std::size_t>(b)] = -1;
}

int SquareComplex::add_square() {
    partner_.insert(partner_.end(), 4, -1);
    return square_count() - 1;
}

std::vector<std::pair<Side, Side>> SquareComplex::gluings() const {
    std::vector<std::pair<Side, Side>> out;
    for (int s = 0; s < 4 * square_count(); ++s)
        if (partner(s) > s) out.emplace_back(Side::of(s), Side::of(partner(s)));
    return out;
}

int SquareComplex::glued_pair_count() const {
    int n = 0;
    for (int s = 0; s < 4 * square_count(); ++s)
        if (partner(s) > s) ++n;
    return n;
}

SquareComplex disjoint_union(const SquareComplex& a, const SquareComplex& b) {
    SquareComplex out(a.square_count() + b.square_count(), a.slack() || b.slack());
    int off = 4 * a.square_count();
    for (int s = 0; s < 4 * a.square_count(); ++s)
        if (a.partner(s) > s) out.set_pair(s, a.partner(s));
    for (int s = 0; s < 4 * b.square_count(); ++s)
        if (b.partner(s) > s) out.set_pair(s + off, b.partner(s) + off);
    return out;
}

VertexClasses vertex_classes(const SquareComplex& c) {
    int n = c.square_count();
    Dsu d(4 * n);
    for (int s = 0; s < 4 * n; ++s) {
        int p = c.partner(s);
        if (p < s) continue;
        Side a = Side::of(s), b = Side::of(p);
        d.unite(4 * a.sq + a.side, 4 * b.sq + mod4(b.side + 1));
        d.unite(4 * a.sq + mod4(a.side + 1), 4 * b.sq + b.side);
    }
    VertexClasses vc;
    vc.class_of.assign(static_cast<std::size_t>(4 * n), -1);
    std::map<int, int> root_to_class;
    for (int k = 0; k < 4 * n; ++k) {
        int r = d.find(k);
        auto it = root_to_class.find(r);
        if (it == root_to_class.end()) {
            it = root_to_class.emplace(r, static_cast<int>(vc.classes.size())).first;
            VertexClass v;
            v.sign = corner_sign(k % 4);
            v.internal = true;
            vc.classes.push_back(v);
        }
        auto& v = vc.classes[static_cast<std::size_t>(it->second)];
        v.corners.push_back(k);
        vc.class_of[static_cast<std::size_t>(k)] = it->second;
        int q = k / 4, corner = k % 4;
        if (!c.glued(4 * q + corner) || !c.glued(4 * q + mod4(corner - 1))) v.internal = false;
    }
    return vc;
}

ValidationReport validate_complex(const SquareComplex& c) {
    ValidationReport r;
    int n = c.square_count();
    for (int s = 0; s < 4 * n; ++s) {
        int p = c.partner(s);
        if (p < 0) continue;
        Side a = Side::of(s);
        if (p >= 4 * n) {
            r.issues.push_back("square " + std::to_string(a.sq) + " side " + std::to_string(a.side) +
                               " glued to a missing slot");
            continue;
        }
        Side b = Side::of(p);
        if (p == s) {
            r.issues.push_back("square " + std::to_string(a.sq) + " side " + std::to_string(a.side) +
                               " glued to itself");
            continue;
        }
        if (c.partner(p) != s) {
            r.issues.push_back("square " + std::to_string(a.sq) + " side " + std::to_string(a.side) +
                               " doubly glued");
            continue;
        }
        if (s > p) continue;
        if ((a.side + b.side) % 2 == 0)
            r.issues.push_back("gluing " + std::to_string(a.sq) + "." + std::to_string(a.side) + " - " +
                               std::to_string(b.sq) + "." + std::to_string(b.side) + " pairs sides of equal parity");
        if (!c.slack() && a.sq == b.sq)
            r.issues.push_back("square " + std::to_string(a.sq) + " glued to itself (" + std::to_string(a.side) + "," +
                               std::to_string(b.side) + ") in a bona fide complex");
    }
    if (!r.ok()) return r;
    if (!c.slack()) {
        auto vc = vertex_classes(c);
        for (const auto& v : vc.classes)
            if (v.internal)
                r.issues.push_back("internal vertex at corner " + std::to_string(v.corners.front() / 4) + "." +
                                   std::to_string(v.corners.front() % 4) + " in a bona fide complex");
    }
    return r;
}

void require_valid(const SquareComplex& c) {
    auto r = validate_complex(c);
    if (!r.ok()) throw Error("invalid complex: " + r.issues.front());
}

std::vector<std::vector<int>> components(const SquareComplex& c) {
    int n = c.square_count();
    Dsu d(n);
    for (int s = 0; s < 4 * n; ++s)
        if (c.partner(s) >= 0) d.unite(s / 4, c.partner(s) / 4);
    std::map<int, std::vector<int>> by_root;
    for (int q = 0; q < n; ++q) by_root[d.find(q)].push_back(q);
    std::vector<std::vector<int>> out;
    for (auto& [r, v] : by_root) out.push_back(std::move(v));
    std::sort(out.begin(), out.end());
    return out;
}

int next_boundary(const SquareComplex& c, int slot) {
    Side s = Side::of(slot);
    int q = s.sq, k = mod4(s.side + 1);
    for (int guard = 0; guard <= 4 * c.square_count(); ++guard) {
        int p = c.partner(4 * q + k);
        if (p < 0) return 4 * q + k;
        q = p / 4;
        k = mod4(p % 4 + 1);
    }
    throw Error("boundary walk did not terminate");
}

std::vector<BoundaryCycle> boundary_structure(const SquareComplex& c) {
    require_valid(c);
    auto vc = vertex_classes(c);
    std::vector<BoundaryCycle> out;
    std::vector<char> seen(static_cast<std::size_t>(4 * c.square_count()), 0);
    for (int s = 0; s < 4 * c.square_count(); ++s) {
        if (c.glued(s) || seen[static_cast<std::size_t>(s)]) continue;
        BoundaryCycle cyc;
        int cur = s;
        do {
            seen[static_cast<std::size_t>(cur)] = 1;
            Side sd = Side::of(cur);
            BoundaryEdge e;
            e.side = sd;
            e.outgoing = sd.side % 2 == 0;
            e.from_vertex = vc.class_of[static_cast<std::size_t>(4 * sd.sq + sd.side)];
            e.to_vertex = vc.class_of[static_cast<std::size_t>(4 * sd.sq + mod4(sd.side + 1))];
            cyc.push_back(e);
            cur = next_boundary(c, cur);
        } while (cur != s);
        out.push_back(std::move(cyc));
    }
    return out;
}

InvariantSummary invariants(const SquareComplex& c) {
    require_valid(c);
    InvariantSummary inv;
    int n = c.square_count();
    auto vc = vertex_classes(c);
    int boundary_edges = 0;
    for (int s = 0; s < 4 * n; ++s)
        if (!c.glued(s)) ++boundary_edges;
    int glued = c.glued_pair_count();
    inv.N = boundary_edges / 2;
    inv.chi = static_cast<int>(vc.classes.size()) - (glued + boundary_edges) + n;
    inv.index_I = inv.N - inv.chi;
    inv.gluing_G = inv.N - 2 * inv.chi;
    for (const auto& v : vc.classes)
        if (v.internal) ++inv.internal_vertices;

    auto comps = components(c);
    inv.C = static_cast<int>(comps.size());
    std::vector<int> comp_of(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (int q : comps[i]) comp_of[static_cast<std::size_t>(q)] = static_cast<int>(i);
    std::vector<int> chi(comps.size(), 0), cycles(comps.size(), 0);
    for (const auto& v : vc.classes) ++chi[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(v.corners.front() / 4)])];
    for (int s = 0; s < 4 * n; ++s) {
        auto& x = chi[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(s / 4)])];
        if (!c.glued(s)) --x;
        else if (c.partner(s) > s) --x;
    }
    for (int q = 0; q < n; ++q) ++chi[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(q)])];
    auto cyc = boundary_structure(c);
    inv.B = static_cast<int>(cyc.size());
    for (const auto& b : cyc) ++cycles[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(b.front().side.sq)])];
    for (std::size_t i = 0; i < comps.size(); ++i) inv.genus_total += (2 - chi[i] - cycles[i]) / 2;
    return inv;
}

SquareComplex unglue(const SquareComplex& c, Side edge) {
    if (edge.sq < 0 || edge.sq >= c.square_count() || edge.side < 0 || edge.side > 3) throw Error("unknown edge");
    if (!c.glued(edge)) throw Error("edge " + std::to_string(edge.sq) + "." + std::to_string(edge.side) + " is not glued");
    SquareComplex out = c;
    out.clear_pair(edge.slot());
    return out;
}

const char* to_string(GluingKind k) {
    switch (k) {
        case GluingKind::Standard: return "standard";
        case GluingKind::Fold: return "fold";
        case GluingKind::Zip: return "zip";
    }
    return "?";
}

namespace {

// Index of the component holding square q: each internal vertex stands for
// one square a collapse would remove.
int component_index(const SquareComplex& c, const VertexClasses& vc, int q) {
    std::vector<int> mine;
    for (const auto& comp : components(c))
        if (std::find(comp.begin(), comp.end(), q) != comp.end()) mine = comp;
    int internal = 0;
    for (const auto& v : vc.classes)
        if (v.internal && std::find(mine.begin(), mine.end(), v.corners.front() / 4) != mine.end()) ++internal;
    return static_cast<int>(mine.size()) - internal;
}

void check_side(const SquareComplex& c, Side s) {
    if (s.sq < 0 || s.sq >= c.square_count() || s.side < 0 || s.side > 3)
        throw Error("side " + std::to_string(s.sq) + "." + std::to_string(s.side) + " out of range");
}

}  // namespace

GluingClass classify_gluing(const SquareComplex& c, Side a, Side b) {
    check_side(c, a);
    check_side(c, b);
    if (a == b) throw Error("cannot glue a side to itself");
    if (c.glued(a) || c.glued(b)) throw Error("side already glued");
    if ((a.side + b.side) % 2 == 0) throw Error("gluing must pair an even side with an odd side");
    std::vector<int> cyc;
    int cur = a.slot();
    do {
        cyc.push_back(cur);
        cur = next_boundary(c, cur);
    } while (cur != a.slot());
    GluingClass g;
    if (std::find(cyc.begin(), cyc.end(), b.slot()) == cyc.end()) return g;
    auto vc = vertex_classes(c);
    auto vertex_at = [&](int slot, int offset) {
        Side s = Side::of(slot);
        return vc.class_of[static_cast<std::size_t>(4 * s.sq + mod4(s.side + offset))];
    };
    if (cyc.size() == 2) {
        // The component must keep another boundary cycle.
        auto comps = components(c);
        std::vector<int> mine;
        for (const auto& comp : comps)
            if (std::find(comp.begin(), comp.end(), a.sq) != comp.end()) mine = comp;
        int cycles = 0;
        for (const auto& bc : boundary_structure(c))
            if (std::find(mine.begin(), mine.end(), bc.front().side.sq) != mine.end()) ++cycles;
        if (cycles < 2) throw Error("zip would close up a surface with a single boundary component");
        if (component_index(c, vc, a.sq) < 3) throw Error("zip would leave a vacuum");
        g.kind = GluingKind::Zip;
        g.swallowed = {vertex_at(a.slot(), 0), vertex_at(a.slot(), 1)};
        std::sort(g.swallowed.begin(), g.swallowed.end());
        return g;
    }
    if (next_boundary(c, a.slot()) == b.slot()) {
        g.kind = GluingKind::Fold;
        g.swallowed = {vertex_at(a.slot(), 1)};
    } else if (next_boundary(c, b.slot()) == a.slot()) {
        g.kind = GluingKind::Fold;
        g.swallowed = {vertex_at(b.slot(), 1)};
    } else {
        return g;
    }
    if (component_index(c, vc, a.sq) < 2) throw Error("fold would leave a vacuum");
    g.sign = vc.classes[static_cast<std::size_t>(g.swallowed.front())].sign;
    return g;
}

GlueResult glue(const SquareComplex& c, Side a, Side b) {
    GlueResult r{c, classify_gluing(c, a, b)};
    r.complex.set_pair(a.slot(), b.slot());
    if (r.info.kind != GluingKind::Standard) r.complex.set_slack(true);
    if (a.sq == b.sq) r.complex.set_slack(true);
    return r;
}

SquareComplex relabel(const SquareComplex& c, const std::vector<int>& perm, const std::vector<int>& rot) {
    int n = c.square_count();
    if (static_cast<int>(perm.size()) != n || static_cast<int>(rot.size()) != n) throw Error("relabel size mismatch");
    std::vector<int> inv(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    SquareComplex out(n, c.slack());
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < 4; ++k) {
            int old = 4 * perm[static_cast<std::size_t>(i)] + mod4(k + rot[static_cast<std::size_t>(i)]);
            int p = c.partner(old);
            if (p < 0) continue;
            int ni = inv[static_cast<std::size_t>(p / 4)];
            out.set_pair(4 * i + k, 4 * ni + mod4(p % 4 - rot[static_cast<std::size_t>(ni)]));
        }
    }
    return out;
}

namespace {

struct Labelling {
    std::vector<int> order;
    std::vector<int> rot;
    std::vector<int> enc;
};

Labelling bfs_label(const SquareComplex& c, int start, int r0, const SquareEncoder& extra,
                    std::vector<int>& local, std::vector<int>& rot) {
    Labelling l;
    l.order.push_back(start);
    local[static_cast<std::size_t>(start)] = 0;
    rot[static_cast<std::size_t>(start)] = r0;
    for (std::size_t h = 0; h < l.order.size(); ++h) {
        int q = l.order[h];
        for (int k = 0; k < 4; ++k) {
            int p = c.partner(4 * q + mod4(k + rot[static_cast<std::size_t>(q)]));
            if (p < 0) continue;
            int q2 = p / 4, j = p % 4;
            if (local[static_cast<std::size_t>(q2)] >= 0) continue;
            local[static_cast<std::size_t>(q2)] = static_cast<int>(l.order.size());
            rot[static_cast<std::size_t>(q2)] = (j <= 1) ? 0 : 2;
            l.order.push_back(q2);
        }
    }
    for (int q : l.order) {
        int r = rot[static_cast<std::size_t>(q)];
        for (int k = 0; k < 4; ++k) {
            int p = c.partner(4 * q + mod4(k + r));
            if (p < 0) {
                l.enc.push_back(-1);
                l.enc.push_back(-1);
            } else {
                l.enc.push_back(local[static_cast<std::size_t>(p / 4)]);
                l.enc.push_back(mod4(p % 4 - rot[static_cast<std::size_t>(p / 4)]));
            }
        }
        if (extra) {
            auto e = extra(q, r);
            l.enc.push_back(static_cast<int>(e.size()));
            l.enc.insert(l.enc.end(), e.begin(), e.end());
        }
        l.rot.push_back(r);
    }
    for (int q : l.order) local[static_cast<std::size_t>(q)] = -1;
    return l;
}

}  // namespace

Canonical canonicalize(const SquareComplex& c, const SquareEncoder& extra) {
    int n = c.square_count();
    std::vector<int> local(static_cast<std::size_t>(n), -1), rot(static_cast<std::size_t>(n), 0);
    std::vector<Labelling> best;
    for (const auto& comp : components(c)) {
        Labelling b;
        bool have = false;
        for (int s : comp)
            for (int r : {0, 2}) {
                Labelling l = bfs_label(c, s, r, extra, local, rot);
                if (!have || l.enc < b.enc) {
                    b = std::move(l);
                    have = true;
                }
            }
        best.push_back(std::move(b));
    }
    std::sort(best.begin(), best.end(), [](const Labelling& x, const Labelling& y) {
        if (x.enc.size() != y.enc.size()) return x.enc.size() < y.enc.size();
        return x.enc < y.enc;
    });
    Canonical out;
    for (const auto& b : best) {
        out.perm.insert(out.perm.end(), b.order.begin(), b.order.end());
        out.rot.insert(out.rot.end(), b.rot.begin(), b.rot.end());
        out.key.push_back(static_cast<int>(b.order.size()));
        out.key.insert(out.key.end(), b.enc.begin(), b.enc.end());
    }
    out.key.push_back(c.slack() ? 1 : 0);
    out.complex = relabel(c, out.perm, out.rot);
    return out;
}

RibbonGraph dual_graph(const SquareComplex& c) {
    require_valid(c);
    if (c.slack()) throw Error("dual graph needs a bona fide complex");
    RibbonGraph g;
    g.vertices = c.square_count();
    g.edges = c.gluings();
    g.ends.assign(static_cast<std::size_t>(g.vertices), {-1, -1, -1, -1});
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [a, b] = g.edges[e];
        g.ends[static_cast<std::size_t>(a.sq)][static_cast<std::size_t>(a.side)] = static_cast<int>(e);
        g.ends[static_cast<std::size_t>(b.sq)][static_cast<std::size_t>(b.side)] = static_cast<int>(e);
    }
    return g;
}

}  // namespace sqft
