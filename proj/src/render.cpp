#include "sqft/io.hpp"

#include <cstdio>
#include <map>
#include <queue>
#include <sstream>

namespace sqft {

namespace {

constexpr double kCell = 120.0;
constexpr double kMargin = 30.0;

struct Placement {
    int x = 0, y = 0;  // grid cell, y grows upward
    int rot = 0;       // side k is drawn in direction k + rot
    bool placed = false;
};

struct P2 {
    double x, y;
};

// Drawn corner positions: 0 bottom-left, 1 bottom-right, 2 top-right, 3 top-left.
P2 unit_corner(int e) {
    static const P2 c[4] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    return c[e & 3];
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string render_svg(const SquareComplex& c, const CurveSystem* g) {
    int n = c.square_count();
    if (g && g->square_count() != n) throw Error("curve system does not match the complex");
    std::vector<Placement> pl(static_cast<std::size_t>(n));
    std::map<std::pair<int, int>, int> occupied;
    static const int dx[4] = {0, 1, 0, -1}, dy[4] = {-1, 0, 1, 0};

    // Components side by side; a glued neighbour goes next to its square when that cell is free.
    int next_x = 0;
    for (int root = 0; root < n; ++root) {
        if (pl[static_cast<std::size_t>(root)].placed) continue;
        int base = next_x;
        while (occupied.count({base, 0})) ++base;
        pl[static_cast<std::size_t>(root)] = {base, 0, 0, true};
        occupied[{base, 0}] = root;
        int max_x = base;
        std::queue<int> todo;
        todo.push(root);
        while (!todo.empty()) {
            int q = todo.front();
            todo.pop();
            const Placement& p = pl[static_cast<std::size_t>(q)];
            max_x = std::max(max_x, p.x);
            for (int k = 0; k < 4; ++k) {
                int s = c.partner(4 * q + k);
                if (s < 0) continue;
                int nq = s / 4;
                if (pl[static_cast<std::size_t>(nq)].placed) continue;
                int d = (k + p.rot) & 3;
                int nx = p.x + dx[d], ny = p.y + dy[d];
                if (occupied.count({nx, ny})) continue;
                pl[static_cast<std::size_t>(nq)] = {nx, ny, ((d + 2 - s % 4) % 4 + 4) % 4, true};
                occupied[{nx, ny}] = nq;
                todo.push(nq);
            }
        }
        // Squares that found no free cell start their own cluster further right.
        next_x = max_x + 2;
    }

    int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (const auto& p : pl) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    double width = (n ? (max_x - min_x + 1) * kCell : 0) + 2 * kMargin;
    double height = (n ? (max_y - min_y + 1) * kCell : 0) + 2 * kMargin;
    auto to_svg = [&](int q, P2 u) {
        const Placement& p = pl[static_cast<std::size_t>(q)];
        double x = kMargin + (p.x - min_x + u.x) * kCell;
        double y = kMargin + (max_y - p.y + 1 - u.y) * kCell;
        return P2{x, y};
    };
    auto corner_at = [&](int q, int k) {
        return to_svg(q, unit_corner(k + pl[static_cast<std::size_t>(q)].rot));
    };
    auto side_point = [&](int q, int k, double f) {
        P2 a = corner_at(q, k), b = corner_at(q, k + 1);
        return P2{a.x + (b.x - a.x) * f, a.y + (b.y - a.y) * f};
    };
    auto adjacent = [&](int s, int t) {
        int q = s / 4, r = t / 4;
        const Placement& p = pl[static_cast<std::size_t>(q)];
        int d = (s % 4 + p.rot) & 3;
        auto it = occupied.find({p.x + dx[d], p.y + dy[d]});
        if (it == occupied.end() || it->second != r) return false;
        return (((t % 4) + pl[static_cast<std::size_t>(r)].rot) & 3) == ((d + 2) & 3);
    };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (c.slack()) o << "<text x=\"4\" y=\"14\" font-size=\"11\" font-family=\"sans-serif\">slack</text>\n";

    int label = 0;
    std::map<int, int> label_of;
    for (int q = 0; q < n; ++q) {
        for (int k = 0; k < 4; ++k) {
            int s = 4 * q + k, t = c.partner(s);
            P2 a = corner_at(q, k), b = corner_at(q, k + 1);
            bool boundary = t < 0;
            if (!boundary && adjacent(s, t) && t < s) continue;  // shared edge drawn once
            o << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\""
              << num(b.y) << "\" stroke=\"black\" stroke-width=\"" << (boundary ? "2.5" : "1") << "\""
              << (boundary ? "" : " stroke-dasharray=\"4 3\"") << "/>\n";
            if (!boundary && !adjacent(s, t)) {
                int id;
                auto it = label_of.find(std::min(s, t));
                if (it == label_of.end()) {
                    id = label++;
                    label_of[std::min(s, t)] = id;
                } else {
                    id = it->second;
                }
                P2 m = side_point(q, k, 0.5);
                P2 ctr = to_svg(q, {0.5, 0.5});
                P2 at{m.x + (ctr.x - m.x) * 0.18, m.y + (ctr.y - m.y) * 0.18};
                o << "<text x=\"" << num(at.x) << "\" y=\"" << num(at.y)
                  << "\" font-size=\"10\" font-family=\"sans-serif\" text-anchor=\"middle\" fill=\"#1f4e9a\">g"
                  << id << "</text>\n";
            }
        }
        P2 ctr = to_svg(q, {0.5, 0.5});
        o << "<text x=\"" << num(ctr.x) << "\" y=\"" << num(ctr.y + 4)
          << "\" font-size=\"12\" font-family=\"sans-serif\" text-anchor=\"middle\" fill=\"#888\">" << q
          << "</text>\n";
        for (int k = 0; k < 4; ++k) {
            P2 p = corner_at(q, k);
            P2 at{p.x + (ctr.x - p.x) * 0.12, p.y + (ctr.y - p.y) * 0.12 + 4};
            o << "<text x=\"" << num(at.x) << "\" y=\"" << num(at.y)
              << "\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"middle\" fill=\""
              << (corner_sign(k) > 0 ? "#b22222\">+" : "#1f4e9a\">-") << "</text>\n";
        }
    }

    if (g) {
        for (int q = 0; q < n; ++q) {
            const SquareCurves& sc = g->square(q);
            P2 ctr = to_svg(q, {0.5, 0.5});
            for (const Chord& ch : g->chords(q)) {
                P2 a = side_point(q, ch.a.side, (ch.a.pos + 1.0) / (sc.count[static_cast<std::size_t>(ch.a.side)] + 1));
                P2 b = side_point(q, ch.b.side, (ch.b.pos + 1.0) / (sc.count[static_cast<std::size_t>(ch.b.side)] + 1));
                P2 ctl{(a.x + b.x) / 4 + ctr.x / 2, (a.y + b.y) / 4 + ctr.y / 2};
                o << "<path d=\"M " << num(a.x) << " " << num(a.y) << " Q " << num(ctl.x) << " " << num(ctl.y)
                  << " " << num(b.x) << " " << num(b.y) << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
            }
            P2 k1 = corner_at(q, 1);
            for (int l = 0; l < sc.loops; ++l) {
                double f = 0.22 + 0.06 * l;
                P2 at{k1.x + (ctr.x - k1.x) * f * 2, k1.y + (ctr.y - k1.y) * f * 2};
                o << "<circle cx=\"" << num(at.x) << "\" cy=\"" << num(at.y)
                  << "\" r=\"6\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
            }
        }
        if (g->detached_loops)
            o << "<text x=\"4\" y=\"" << num(height - 6) << "\" font-size=\"11\" font-family=\"sans-serif\">detached loops: "
              << g->detached_loops << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace sqft
