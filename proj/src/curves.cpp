#include "sqft/curves.hpp"

#include "dsu.hpp"

#include <algorithm>
#include <map>

namespace sqft {

using detail::Dsu;
using detail::mod4;

int SquareCurves::offset(int side) const {
    int o = 0;
    for (int k = 0; k < side; ++k) o += count[static_cast<std::size_t>(k)];
    return o;
}

Pt SquareCurves::point(int idx) const {
    for (int k = 0; k < 4; ++k) {
        if (idx < count[static_cast<std::size_t>(k)]) return {k, idx};
        idx -= count[static_cast<std::size_t>(k)];
    }
    throw Error("point index out of range");
}

CurveSystem CurveSystem::from_chords(int squares, const std::vector<std::vector<Chord>>& chords,
                                     const std::vector<int>& loops) {
    if (static_cast<int>(chords.size()) > squares || static_cast<int>(loops.size()) > squares)
        throw Error("curve data names a square beyond the complex");
    CurveSystem g(squares);
    for (int q = 0; q < squares; ++q) {
        auto& sc = g.square(q);
        if (q < static_cast<int>(loops.size())) {
            if (loops[static_cast<std::size_t>(q)] < 0) throw Error("negative loop count");
            sc.loops = loops[static_cast<std::size_t>(q)];
        }
        if (q >= static_cast<int>(chords.size())) continue;
        const auto& cs = chords[static_cast<std::size_t>(q)];
        std::array<std::vector<int>, 4> used;
        for (const auto& ch : cs)
            for (const Pt& p : {ch.a, ch.b}) {
                if (p.side < 0 || p.side > 3) throw Error("square " + std::to_string(q) + ": side index out of range");
                if (p.pos < 0) throw Error("square " + std::to_string(q) + ": negative position");
                used[static_cast<std::size_t>(p.side)].push_back(p.pos);
            }
        for (int k = 0; k < 4; ++k) {
            auto& u = used[static_cast<std::size_t>(k)];
            std::sort(u.begin(), u.end());
            for (std::size_t i = 0; i < u.size(); ++i)
                if (u[i] != static_cast<int>(i))
                    throw Error("square " + std::to_string(q) + " side " + std::to_string(k) +
                                ": positions must be 0..m-1, each used once");
            sc.count[static_cast<std::size_t>(k)] = static_cast<int>(u.size());
        }
        sc.match.assign(static_cast<std::size_t>(sc.total()), -1);
        for (const auto& ch : cs) {
            int i = sc.index(ch.a), j = sc.index(ch.b);
            if (i == j) throw Error("square " + std::to_string(q) + ": chord joins a point to itself");
            sc.match[static_cast<std::size_t>(i)] = j;
            sc.match[static_cast<std::size_t>(j)] = i;
        }
    }
    return g;
}

std::vector<Chord> CurveSystem::chords(int q) const {
    const auto& sc = square(q);
    std::vector<Chord> out;
    for (int i = 0; i < sc.total(); ++i) {
        int j = sc.match[static_cast<std::size_t>(i)];
        if (j > i) out.push_back({sc.point(i), sc.point(j)});
    }
    return out;
}

int CurveSystem::loop_count() const {
    int n = detached_loops;
    for (const auto& s : sq_) n += s.loops;
    return n;
}

namespace {

bool non_crossing(const std::vector<int>& match) {
    std::vector<int> stack;
    for (int i = 0; i < static_cast<int>(match.size()); ++i) {
        int j = match[static_cast<std::size_t>(i)];
        if (j > i) {
            stack.push_back(i);
        } else {
            if (stack.empty() || stack.back() != j) return false;
            stack.pop_back();
        }
    }
    return stack.empty();
}

int corner_gap(const SquareCurves& sc, int k) {
    int t = sc.total();
    return ((sc.offset(k) - 1) % t + t) % t;
}

// Gap g lies between cyclic points g and g+1; colour 1 = positive. Corner 0
// is negative and colours alternate across points.
int gap_colour(const SquareCurves& sc, int gap) {
    int t = sc.total();
    return (((gap - corner_gap(sc, 0)) % t + t) % t) % 2;
}

std::string where(int q, int side) { return "square " + std::to_string(q) + " side " + std::to_string(side); }

}  // namespace

ValidationReport validate_sutures(const SquareComplex& c, const CurveSystem& g) {
    ValidationReport r;
    if (g.square_count() != c.square_count()) {
        r.issues.push_back("curve data covers " + std::to_string(g.square_count()) + " squares, complex has " +
                           std::to_string(c.square_count()));
        return r;
    }
    if (g.detached_loops < 0) r.issues.push_back("negative detached loop count");
    for (int q = 0; q < c.square_count(); ++q) {
        const auto& sc = g.square(q);
        if (sc.loops < 0) r.issues.push_back("square " + std::to_string(q) + ": negative loop count");
        if (static_cast<int>(sc.match.size()) != sc.total()) {
            r.issues.push_back("square " + std::to_string(q) + ": match table size mismatch");
            continue;
        }
        bool involution = true;
        for (int i = 0; i < sc.total(); ++i) {
            int j = sc.match[static_cast<std::size_t>(i)];
            if (j < 0 || j >= sc.total() || j == i || sc.match[static_cast<std::size_t>(j)] != i) involution = false;
        }
        if (!involution) {
            r.issues.push_back("square " + std::to_string(q) + ": chords are not a perfect matching");
            continue;
        }
        if (!non_crossing(sc.match)) r.issues.push_back("square " + std::to_string(q) + ": chords cross");
        for (int k = 0; k < 4; ++k) {
            int m = sc.count[static_cast<std::size_t>(k)];
            int p = c.partner(4 * q + k);
            if (p < 0) {
                if (m != 1) r.issues.push_back(where(q, k) + ": boundary side carries " + std::to_string(m) + " points");
            } else {
                if (m % 2 == 0) r.issues.push_back(where(q, k) + ": glued side carries an even number of points");
                if (g.points(Side::of(p)) != m)
                    r.issues.push_back(where(q, k) + ": point count differs from its partner");
            }
        }
    }
    if (!r.ok()) return r;
    // Sign coherence: corner faces carry the corner sign, chords separate
    // opposite colours, glued segments agree.
    for (int q = 0; q < c.square_count(); ++q) {
        const auto& sc = g.square(q);
        for (int k = 0; k < 4; ++k)
            if (gap_colour(sc, corner_gap(sc, k)) != (k % 2))
                r.issues.push_back("square " + std::to_string(q) + ": face at corner " + std::to_string(k) +
                                   " has the wrong sign");
        for (int i = 0; i < sc.total(); ++i) {
            int j = sc.match[static_cast<std::size_t>(i)];
            if (j > i && (j - i) % 2 == 0)
                r.issues.push_back("square " + std::to_string(q) + ": chord joins points of equal sign");
        }
        for (int k = 0; k < 4; ++k) {
            int p = c.partner(4 * q + k);
            if (p < 0) continue;
            const auto& sb = g.square(p / 4);
            int m = sc.count[static_cast<std::size_t>(k)];
            for (int t = 0; t <= m; ++t) {
                int ga = (sc.offset(k) + t - 1 + sc.total()) % sc.total();
                int gb = (sb.offset(p % 4) + (m - t) - 1 + sb.total()) % sb.total();
                if (gap_colour(sc, ga) != gap_colour(sb, gb)) {
                    r.issues.push_back(where(q, k) + ": colours disagree across the gluing");
                    break;
                }
            }
        }
    }
    return r;
}

void require_valid(const SquareComplex& c, const CurveSystem& g) {
    require_valid(c);
    auto r = validate_sutures(c, g);
    if (!r.ok()) throw Error("invalid sutures: " + r.issues.front());
}

SquareCurves basic_square(int bit) {
    SquareCurves s;
    s.count = {1, 1, 1, 1};
    if (bit) s.match = {1, 0, 3, 2};
    else s.match = {3, 2, 1, 0};
    return s;
}

CurveSystem basic_sutures(const SquareComplex& c, Word w) {
    CurveSystem g(c.square_count());
    for (int q = 0; q < c.square_count(); ++q) g.square(q) = basic_square(bit(w, q));
    return g;
}

std::optional<Word> basic_word(const CurveSystem& g) {
    if (g.detached_loops) return std::nullopt;
    Word w = 0;
    for (int q = 0; q < g.square_count(); ++q) {
        const auto& s = g.square(q);
        if (s.loops || s.count != std::array<int, 4>{1, 1, 1, 1}) return std::nullopt;
        if (s == basic_square(1)) w |= Word{1} << q;
        else if (!(s == basic_square(0))) return std::nullopt;
    }
    return w;
}

RegionDecomposition regions(const SquareComplex& c, const CurveSystem& g) {
    require_valid(c, g);
    int n = c.square_count();
    std::vector<int> base(static_cast<std::size_t>(n + 1), 0);
    for (int q = 0; q < n; ++q) base[static_cast<std::size_t>(q + 1)] = base[static_cast<std::size_t>(q)] + g.square(q).total();
    int gaps = base[static_cast<std::size_t>(n)];
    auto gid = [&](int q, int gap) {
        int t = g.square(q).total();
        return base[static_cast<std::size_t>(q)] + ((gap % t) + t) % t;
    };
    auto seg = [&](int q, int side, int t) { return gid(q, g.square(q).offset(side) + t - 1); };

    Dsu face(gaps);
    for (int q = 0; q < n; ++q) {
        const auto& sc = g.square(q);
        for (int i = 0; i < sc.total(); ++i) {
            int j = sc.match[static_cast<std::size_t>(i)];
            if (j < i) continue;
            face.unite(gid(q, i - 1), gid(q, j));
            face.unite(gid(q, i), gid(q, j - 1));
        }
    }
    Dsu reg = face;
    for (int s = 0; s < 4 * n; ++s) {
        int p = c.partner(s);
        if (p < s) continue;
        int q = s / 4, k = s % 4, m = g.square(q).count[static_cast<std::size_t>(k)];
        for (int t = 0; t <= m; ++t) reg.unite(seg(q, k, t), seg(p / 4, p % 4, m - t));
    }

    std::map<int, int> idx;
    RegionDecomposition rd;
    auto region_of = [&](int gapid) -> Region& {
        int r = reg.find(gapid);
        auto it = idx.find(r);
        if (it == idx.end()) {
            it = idx.emplace(r, static_cast<int>(rd.regions.size())).first;
            rd.regions.push_back({});
        }
        return rd.regions[static_cast<std::size_t>(it->second)];
    };

    for (int q = 0; q < n; ++q) {
        const auto& sc = g.square(q);
        for (int gp = 0; gp < sc.total(); ++gp) region_of(gid(q, gp)).sign = gap_colour(sc, gp) ? +1 : -1;
    }
    // Faces.
    for (int q = 0; q < n; ++q)
        for (int gp = 0; gp < g.square(q).total(); ++gp)
            if (face.find(gid(q, gp)) == gid(q, gp)) region_of(gid(q, gp)).chi += 1;
    // Corner vertices.
    auto vc = vertex_classes(c);
    for (const auto& v : vc.classes) {
        int k = v.corners.front();
        region_of(gid(k / 4, corner_gap(g.square(k / 4), k % 4))).chi += 1;
    }
    // Points, segments and chords.
    for (int q = 0; q < n; ++q) {
        const auto& sc = g.square(q);
        for (int k = 0; k < 4; ++k) {
            int p = c.partner(4 * q + k);
            if (p >= 0 && p < 4 * q + k) continue;
            int m = sc.count[static_cast<std::size_t>(k)];
            for (int t = 0; t < m; ++t) {
                int i = sc.offset(k) + t;
                region_of(gid(q, i - 1)).chi += 1;
                region_of(gid(q, i)).chi += 1;
            }
            for (int t = 0; t <= m; ++t) {
                Region& r = region_of(seg(q, k, t));
                r.chi -= 1;
                if (p < 0) r.touches_boundary = true;
            }
        }
        for (int i = 0; i < sc.total(); ++i) {
            int j = sc.match[static_cast<std::size_t>(i)];
            if (j < i) continue;
            region_of(gid(q, i)).chi -= 1;
            region_of(gid(q, j)).chi -= 1;
        }
    }
    // Loose loops sit in the face at corner 1 and bound negative discs.
    std::vector<Region> extra;
    for (int q = 0; q < n; ++q) {
        const auto& sc = g.square(q);
        if (!sc.loops) continue;
        Region& host = region_of(gid(q, corner_gap(sc, 1)));
        host.chi -= sc.loops;
        for (int l = 0; l < sc.loops; ++l) extra.push_back({-host.sign, 1, false});
    }
    rd.regions.insert(rd.regions.end(), extra.begin(), extra.end());
    for (const auto& r : rd.regions) (r.sign > 0 ? rd.chi_plus : rd.chi_minus) += r.chi;
    return rd;
}

int euler_class(const SquareComplex& c, const CurveSystem& g) {
    auto rd = regions(c, g);
    return rd.chi_plus - rd.chi_minus;
}

bool is_trivial(const SquareComplex& c, const CurveSystem& g) {
    if (g.detached_loops > 0) return true;
    for (const auto& r : regions(c, g).regions)
        if (!r.touches_boundary && r.chi == 1) return true;
    return false;
}

bool is_confining(const SquareComplex& c, const CurveSystem& g) {
    if (g.detached_loops > 0) return true;
    for (const auto& r : regions(c, g).regions)
        if (!r.touches_boundary) return true;
    return false;
}

namespace {

// Mutable endpoint tables used by the rewrites below.
struct Editor {
    std::vector<std::array<std::vector<Pt>, 4>> other;
    std::vector<std::array<std::vector<char>, 4>> dead;
    std::vector<int> loops;
    int detached = 0;

    explicit Editor(const CurveSystem& g) {
        int n = g.square_count();
        other.resize(static_cast<std::size_t>(n));
        dead.resize(static_cast<std::size_t>(n));
        loops.resize(static_cast<std::size_t>(n));
        detached = g.detached_loops;
        for (int q = 0; q < n; ++q) {
            const auto& sc = g.square(q);
            loops[static_cast<std::size_t>(q)] = sc.loops;
            for (int k = 0; k < 4; ++k) {
                other[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)].resize(
                    static_cast<std::size_t>(sc.count[static_cast<std::size_t>(k)]));
                dead[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)].assign(
                    static_cast<std::size_t>(sc.count[static_cast<std::size_t>(k)]), 0);
            }
            for (int i = 0; i < sc.total(); ++i) at(q, sc.point(i)) = sc.point(sc.match[static_cast<std::size_t>(i)]);
        }
    }

    Pt& at(int q, Pt p) {
        return other[static_cast<std::size_t>(q)][static_cast<std::size_t>(p.side)][static_cast<std::size_t>(p.pos)];
    }
    void kill(int q, Pt p) {
        dead[static_cast<std::size_t>(q)][static_cast<std::size_t>(p.side)][static_cast<std::size_t>(p.pos)] = 1;
    }

    // Chords p1-x and p2-y become x-y; a chord p1-p2 becomes a loop.
    void merge(int q, Pt p1, Pt p2) {
        Pt x = at(q, p1), y = at(q, p2);
        if (x == p2) {
            ++loops[static_cast<std::size_t>(q)];
        } else {
            at(q, x) = y;
            at(q, y) = x;
        }
        kill(q, p1);
        kill(q, p2);
    }

    void drop_chord(int q, Pt p1, Pt p2) {
        if (!(at(q, p1) == p2)) throw Error("internal: dropped points are not a chord");
        kill(q, p1);
        kill(q, p2);
    }

    CurveSystem finish() const {
        int n = static_cast<int>(other.size());
        CurveSystem g(n);
        g.detached_loops = detached;
        for (int q = 0; q < n; ++q) {
            auto& sc = g.square(q);
            sc.loops = loops[static_cast<std::size_t>(q)];
            std::array<std::vector<int>, 4> newpos;
            for (int k = 0; k < 4; ++k) {
                const auto& d = dead[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)];
                int cnt = 0;
                for (char x : d) newpos[static_cast<std::size_t>(k)].push_back(x ? -1 : cnt++);
                sc.count[static_cast<std::size_t>(k)] = cnt;
            }
            sc.match.assign(static_cast<std::size_t>(sc.total()), -1);
            for (int k = 0; k < 4; ++k) {
                const auto& o = other[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)];
                for (std::size_t p = 0; p < o.size(); ++p) {
                    int np = newpos[static_cast<std::size_t>(k)][p];
                    if (np < 0) continue;
                    Pt x = o[p];
                    int nx = newpos[static_cast<std::size_t>(x.side)][static_cast<std::size_t>(x.pos)];
                    if (nx < 0) throw Error("internal: chord ends at a removed point");
                    sc.match[static_cast<std::size_t>(sc.index({k, np}))] = sc.index({x.side, nx});
                }
            }
        }
        return g;
    }
};

}  // namespace

CurveSystem normalize(const SquareComplex& c, const CurveSystem& g0) {
    CurveSystem g = g0;
    for (;;) {
        bool found = false;
        for (int s = 0; s < 4 * c.square_count() && !found; ++s) {
            int p = c.partner(s);
            if (p < 0) continue;
            int q = s / 4, k = s % 4;
            const auto& sc = g.square(q);
            int m = sc.count[static_cast<std::size_t>(k)];
            for (int t = 0; t + 1 < m; ++t) {
                int i = sc.offset(k) + t;
                if (sc.match[static_cast<std::size_t>(i)] != i + 1) continue;
                Editor e(g);
                Side b = Side::of(p);
                int u = m - 2 - t;
                e.drop_chord(q, {k, t}, {k, t + 1});
                e.merge(b.sq, {b.side, u}, {b.side, u + 1});
                g = e.finish();
                found = true;
                break;
            }
        }
        if (!found) return g;
    }
}

const char* to_string(BypassDir d) { return d == BypassDir::Up ? "up" : "down"; }

CurveSystem bypass_surgery(const SquareComplex& c, const CurveSystem& g, Side edge, int t, BypassDir d) {
    int p = c.partner(edge);
    if (p < 0) throw Error("bypass surgery needs a glued edge");
    int m = g.points(edge);
    if (m < 3) throw Error("edge carries fewer than 3 points");
    if (t < 0 || t + 2 >= m) throw Error("triple start out of range");
    Side b = Side::of(p);
    Editor e(g);
    if (d == BypassDir::Up) {
        e.merge(edge.sq, {edge.side, t + 1}, {edge.side, t + 2});
        e.merge(b.sq, {b.side, m - 2 - t}, {b.side, m - 1 - t});
    } else {
        e.merge(edge.sq, {edge.side, t}, {edge.side, t + 1});
        e.merge(b.sq, {b.side, m - 3 - t}, {b.side, m - 2 - t});
    }
    return normalize(c, e.finish());
}

CurveSystem transport_unglue(const SquareComplex& c, const CurveSystem& g, Side edge) {
    require_valid(c, g);
    if (!c.glued(edge)) throw Error("edge is not glued");
    if (g.points(edge) != 1) throw Error("cutting needs an edge met by the sutures exactly once");
    return g;
}

CurveSystem transport_glue(const SquareComplex& c, const CurveSystem& g, Side a, Side b) {
    require_valid(c, g);
    if (c.glued(a) || c.glued(b)) throw Error("sides already glued");
    if (g.points(a) != 1 || g.points(b) != 1) throw Error("internal: boundary side without exactly one point");
    if ((a.side + b.side) % 2 == 0) throw Error("gluing must pair an even side with an odd side");
    return g;
}

CurveSystem disjoint_union(const CurveSystem& a, const CurveSystem& b) {
    CurveSystem g(a.square_count() + b.square_count());
    for (int q = 0; q < a.square_count(); ++q) g.square(q) = a.square(q);
    for (int q = 0; q < b.square_count(); ++q) g.square(a.square_count() + q) = b.square(q);
    g.detached_loops = a.detached_loops + b.detached_loops;
    return g;
}

SquareCurves rotate_square(const SquareCurves& s, int rot) {
    rot = mod4(rot);
    if (rot == 0) return s;
    SquareCurves out;
    out.loops = s.loops;
    for (int k = 0; k < 4; ++k) out.count[static_cast<std::size_t>(k)] = s.count[static_cast<std::size_t>(mod4(k + rot))];
    int t = s.total(), sh = s.offset(rot);
    out.match.resize(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        int j = s.match[static_cast<std::size_t>((i + sh) % t)];
        out.match[static_cast<std::size_t>(i)] = ((j - sh) % t + t) % t;
    }
    return out;
}

CurveSystem relabel(const CurveSystem& g, const std::vector<int>& perm, const std::vector<int>& rot) {
    CurveSystem out(g.square_count());
    out.detached_loops = g.detached_loops;
    for (int i = 0; i < g.square_count(); ++i)
        out.square(i) = rotate_square(g.square(perm[static_cast<std::size_t>(i)]), rot[static_cast<std::size_t>(i)]);
    return out;
}

CanonicalPair canonicalize(const SquareComplex& c, const CurveSystem& g) {
    auto enc = [&](int q, int r) {
        SquareCurves s = rotate_square(g.square(q), r);
        std::vector<int> v(s.count.begin(), s.count.end());
        v.insert(v.end(), s.match.begin(), s.match.end());
        v.push_back(s.loops);
        return v;
    };
    CanonicalPair cp;
    cp.canon = canonicalize(c, enc);
    cp.curves = relabel(g, cp.canon.perm, cp.canon.rot);
    cp.canon.key.push_back(g.detached_loops);
    return cp;
}

}  // namespace sqft
