#include "sqft/census.hpp"

#include "dsu.hpp"
#include "polygon.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <random>

namespace sqft {

using detail::mod4;

SquareComplex disc_family(int n) {
    if (n < 2) throw Error("disc family needs n >= 2");
    SquareComplex c(n - 1);
    for (int i = 0; i + 1 < n - 1; ++i) c.set_pair(4 * i + 3, 4 * (i + 1) + 0);
    return c;
}

namespace {

void matchings_rec(std::vector<int>& cur, std::vector<int>& free, std::vector<std::vector<int>>& out) {
    if (free.empty()) {
        out.push_back(cur);
        return;
    }
    int first = free.front();
    for (std::size_t j = 1; j < free.size(); j += 2) {
        // free[1..j-1] must pair among themselves, as must free[j+1..].
        std::vector<int> inside(free.begin() + 1, free.begin() + static_cast<long>(j));
        std::vector<int> outside(free.begin() + static_cast<long>(j) + 1, free.end());
        cur[static_cast<std::size_t>(first)] = free[j];
        cur[static_cast<std::size_t>(free[j])] = first;
        std::vector<std::vector<int>> inner;
        matchings_rec(cur, inside, inner);
        for (auto& m : inner) matchings_rec(m, outside, out);
    }
}

}  // namespace

std::vector<std::vector<int>> noncrossing_matchings(int n) {
    if (n < 0) throw Error("negative matching size");
    std::vector<int> cur(static_cast<std::size_t>(2 * n), -1), free;
    for (int i = 0; i < 2 * n; ++i) free.push_back(i);
    std::vector<std::vector<int>> out;
    matchings_rec(cur, free, out);
    return out;
}

CurveSystem disc_sutures(int n, const std::vector<int>& matching) {
    if (n < 2) throw Error("disc sutures need n >= 2");
    if (static_cast<int>(matching.size()) != 2 * n) throw Error("matching size must be 2n");
    detail::Polygon p;
    p.count.assign(static_cast<std::size_t>(2 * n), 1);
    p.match = matching;
    CurveSystem g(n - 1);
    for (int i = 0; i + 1 < n - 1; ++i) {
        auto [first, second] = detail::cut(p, 0, 3);
        g.square(i) = detail::to_square(first);
        p = detail::rotate(second, second.sides() - 1);
    }
    g.square(n - 2) = detail::to_square(p);
    return g;
}

std::vector<CurveSystem> enumerate_disc_sutures(int n) {
    if (n < 2 || n > 7) throw Error("disc census supports 2 <= n <= 7");
    SquareComplex c = disc_family(n);
    std::vector<CurveSystem> out;
    for (const auto& m : noncrossing_matchings(n)) out.push_back(normalize(c, disc_sutures(n, m)));
    return out;
}

std::vector<CurveSystem> enumerate_basic(const SquareComplex& c) {
    require_valid(c);
    if (c.slack()) throw Error("basic sutures are enumerated on bona fide complexes");
    if (c.square_count() > 20) throw Error("too many squares to enumerate basic sutures");
    std::vector<CurveSystem> out;
    for (Word w = 0; w < (Word{1} << c.square_count()); ++w) out.push_back(basic_sutures(c, w));
    return out;
}

std::vector<TripleRef> bypass_triples(const SquareComplex& c, const CurveSystem& g) {
    require_valid(c, g);
    std::vector<TripleRef> out;
    for (int s = 0; s < 4 * c.square_count(); ++s) {
        int p = c.partner(s);
        if (p < s) continue;
        int m = g.points(Side::of(s));
        for (int t = 0; t + 2 < m; ++t) out.push_back({Side::of(s), t});
    }
    return out;
}

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<int> boundary_slots(const SquareComplex& c) {
    std::vector<int> out;
    for (int s = 0; s < 4 * c.square_count(); ++s)
        if (!c.glued(s)) out.push_back(s);
    return out;
}

// Applies a move to a bona fide complex the way run_script does.
SquareComplex step(const SquareComplex& c, const Move& mv) {
    if (mv.kind == MoveKind::Create) {
        SquareComplex out = c;
        out.add_square();
        return out;
    }
    SquareComplex glued = glue(c, mv.a, mv.b).complex;
    if (mv.kind == MoveKind::Glue) return glued;
    return tighten(glued).complex;
}

struct Candidate {
    Move move;
    int delta = 0;
};

// All glue/fold/zip moves available on the current boundary.
std::vector<Candidate> gluing_moves(const SquareComplex& c) {
    std::vector<Candidate> out;
    auto bs = boundary_slots(c);
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i + 1; j < bs.size(); ++j) {
            Side a = Side::of(bs[i]), b = Side::of(bs[j]);
            if ((a.side + b.side) % 2 == 0) continue;
            try {
                auto cls = classify_gluing(c, a, b);
                Move mv;
                mv.a = a;
                mv.b = b;
                mv.kind = cls.kind == GluingKind::Standard ? MoveKind::Glue
                          : cls.kind == GluingKind::Fold   ? MoveKind::Fold
                                                           : MoveKind::Zip;
                int delta = cls.kind == GluingKind::Standard ? 0 : cls.kind == GluingKind::Fold ? -1 : -2;
                out.push_back({mv, delta});
            } catch (const Error&) {
            }
        }
    return out;
}

// Standard gluings of the last square to the rest.
std::vector<Move> attach_moves(const SquareComplex& c) {
    int z = c.square_count() - 1;
    std::vector<Move> out;
    for (int s : boundary_slots(c)) {
        if (s / 4 == z) continue;
        for (int k = 0; k < 4; ++k) {
            if ((k + s % 4) % 2 == 0) continue;
            out.push_back({MoveKind::Glue, +1, Side{z, k}, Side::of(s)});
        }
    }
    return out;
}

MorphismScript grow(Rng& rng, int target, int max_squares) {
    MorphismScript s;
    s.source = SquareComplex(0);
    SquareComplex c = s.source;
    auto push = [&](const Move& mv) {
        c = step(c, mv);
        s.moves.push_back(mv);
    };
    push({MoveKind::Create, uniform(rng, 0, 1) ? +1 : -1, {}, {}});
    for (int iter = 0; iter < 200 && c.square_count() < target; ++iter) {
        if (c.square_count() < max_squares) {
            push({MoveKind::Create, uniform(rng, 0, 1) ? +1 : -1, {}, {}});
            auto att = attach_moves(c);
            push(att[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(att.size()) - 1))]);
        }
        if (uniform(rng, 0, 9) < 3) {
            std::vector<Candidate> ok;
            for (auto& cand : gluing_moves(c))
                if (c.square_count() + cand.delta >= 1) ok.push_back(cand);
            if (!ok.empty()) push(ok[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ok.size()) - 1))].move);
        }
    }
    return s;
}

}  // namespace

MorphismScript random_surface(std::uint64_t seed, int max_squares) {
    if (max_squares < 1) throw Error("max_squares must be positive");
    Rng rng(seed);
    return grow(rng, uniform(rng, 1, max_squares), max_squares);
}

CurveSystem random_sutures(std::uint64_t seed, const SquareComplex& c) {
    require_valid(c);
    Rng rng(seed);
    // Nontrivial samples that normalize to basic sutures are kept only as a fallback.
    std::optional<CurveSystem> fallback;
    for (int attempt = 0; attempt < 400; ++attempt) {
        std::vector<int> count(static_cast<std::size_t>(4 * c.square_count()), 1);
        for (int s = 0; s < 4 * c.square_count(); ++s) {
            int p = c.partner(s);
            if (p <= s) continue;
            int r = uniform(rng, 0, 9);
            int m = r < 4 ? 1 : r < 8 ? 3 : 5;
            count[static_cast<std::size_t>(s)] = count[static_cast<std::size_t>(p)] = m;
        }
        CurveSystem g(c.square_count());
        for (int q = 0; q < c.square_count(); ++q) {
            auto& sc = g.square(q);
            for (int k = 0; k < 4; ++k) sc.count[static_cast<std::size_t>(k)] = count[static_cast<std::size_t>(4 * q + k)];
            sc.match.assign(static_cast<std::size_t>(sc.total()), -1);
            std::vector<std::vector<int>> work;
            std::vector<int> all;
            for (int i = 0; i < sc.total(); ++i) all.push_back(i);
            work.push_back(all);
            while (!work.empty()) {
                auto pts = std::move(work.back());
                work.pop_back();
                if (pts.empty()) continue;
                // Avoid chords that normalize() would remove at once: adjacent
                // points on one glued side.
                std::vector<std::size_t> ok, any;
                for (std::size_t j = 1; j < pts.size(); j += 2) {
                    any.push_back(j);
                    Pt a = sc.point(pts[0]), b = sc.point(pts[j]);
                    bool bigon = a.side == b.side && std::abs(a.pos - b.pos) == 1 && c.glued(Side{q, a.side});
                    if (!bigon) ok.push_back(j);
                }
                const auto& from = ok.empty() ? any : ok;
                std::size_t j = from[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(from.size()) - 1))];
                sc.match[static_cast<std::size_t>(pts[0])] = pts[j];
                sc.match[static_cast<std::size_t>(pts[j])] = pts[0];
                work.emplace_back(pts.begin() + 1, pts.begin() + static_cast<long>(j));
                work.emplace_back(pts.begin() + static_cast<long>(j) + 1, pts.end());
            }
        }
        g = normalize(c, g);
        if (is_trivial(c, g)) continue;
        if (bypass_triples(c, g).size() > 0) return g;
        if (!fallback) fallback = g;
    }
    if (fallback) return *fallback;
    return basic_sutures(c, static_cast<Word>(rng()) & ((Word{1} << c.square_count()) - 1));
}

MorphismScript random_script(std::uint64_t seed, int max_squares) {
    if (max_squares < 1) throw Error("max_squares must be positive");
    Rng rng(seed);
    int src_max = std::max(1, std::min(5, max_squares - 1));
    MorphismScript src = grow(rng, uniform(rng, 1, src_max), src_max);
    SquareComplex c(0);
    for (const auto& mv : src.moves) c = step(c, mv);
    MorphismScript s;
    s.source = c;
    int moves = uniform(rng, 1, 6);
    for (int i = 0; i < moves; ++i) {
        // Pick the kind first so that rare zips still show up.
        std::map<MoveKind, std::vector<Move>> options;
        if (c.square_count() < max_squares) options[MoveKind::Create].push_back({MoveKind::Create, uniform(rng, 0, 1) ? +1 : -1, {}, {}});
        for (auto& cand : gluing_moves(c))
            if (c.square_count() + cand.delta >= 1) options[cand.move.kind].push_back(cand.move);
        if (options.empty()) break;
        auto kind = std::next(options.begin(), uniform(rng, 0, static_cast<int>(options.size()) - 1));
        const auto& pool = kind->second;
        Move mv = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
        c = step(c, mv);
        s.moves.push_back(mv);
    }
    return s;
}

}  // namespace sqft
