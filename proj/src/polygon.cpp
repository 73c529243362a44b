#include "polygon.hpp"

namespace sqft::detail {

int Polygon::total() const {
    int t = 0;
    for (int c : count) t += c;
    return t;
}

int Polygon::offset(int side) const {
    int o = 0;
    for (int k = 0; k < side; ++k) o += count[static_cast<std::size_t>(k)];
    return o;
}

Polygon from_square(const SquareCurves& s) {
    Polygon p;
    p.count.assign(s.count.begin(), s.count.end());
    p.match = s.match;
    p.loops = s.loops;
    return p;
}

SquareCurves to_square(const Polygon& p) {
    if (p.sides() != 4) throw Error("internal: polygon is not a square");
    SquareCurves s;
    for (int k = 0; k < 4; ++k) s.count[static_cast<std::size_t>(k)] = p.count[static_cast<std::size_t>(k)];
    s.match = p.match;
    s.loops = p.loops;
    return s;
}

Polygon rotate(const Polygon& p, int r) {
    int k = p.sides();
    r = ((r % k) + k) % k;
    if (r == 0) return p;
    Polygon out;
    out.loops = p.loops;
    for (int i = 0; i < k; ++i) out.count.push_back(p.count[static_cast<std::size_t>((i + r) % k)]);
    int t = p.total(), sh = p.offset(r);
    out.match.resize(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        int j = p.match[static_cast<std::size_t>((i + sh) % t)];
        out.match[static_cast<std::size_t>(i)] = ((j - sh) % t + t) % t;
    }
    return out;
}

namespace {

// Joins chords through glued points. across[x] is the point glued to x, or -1
// when x survives; order lists surviving points in their new cyclic order.
Polygon trace(const std::vector<int>& chord, const std::vector<int>& across, const std::vector<int>& order,
              std::vector<int> counts, int loops) {
    int n = static_cast<int>(chord.size());
    std::vector<int> newidx(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < order.size(); ++i) newidx[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    Polygon out;
    out.count = std::move(counts);
    out.loops = loops;
    out.match.assign(order.size(), -1);
    for (int x : order) {
        int y = chord[static_cast<std::size_t>(x)];
        while (across[static_cast<std::size_t>(y)] >= 0) {
            seen[static_cast<std::size_t>(y)] = 1;
            int z = across[static_cast<std::size_t>(y)];
            seen[static_cast<std::size_t>(z)] = 1;
            y = chord[static_cast<std::size_t>(z)];
        }
        out.match[static_cast<std::size_t>(newidx[static_cast<std::size_t>(x)])] = newidx[static_cast<std::size_t>(y)];
    }
    for (int x = 0; x < n; ++x) {
        if (across[static_cast<std::size_t>(x)] < 0 || seen[static_cast<std::size_t>(x)]) continue;
        int cur = x;
        do {
            seen[static_cast<std::size_t>(cur)] = 1;
            int z = across[static_cast<std::size_t>(cur)];
            seen[static_cast<std::size_t>(z)] = 1;
            cur = chord[static_cast<std::size_t>(z)];
        } while (cur != x);
        ++out.loops;
    }
    return out;
}

}  // namespace

Polygon glue(const Polygon& p, int i, const Polygon& q, int j) {
    int m = p.count[static_cast<std::size_t>(i)];
    if (q.count[static_cast<std::size_t>(j)] != m) throw Error("internal: glued polygon sides differ in point count");
    int tp = p.total(), tq = q.total();
    std::vector<int> chord(static_cast<std::size_t>(tp + tq)), across(static_cast<std::size_t>(tp + tq), -1);
    for (int x = 0; x < tp; ++x) chord[static_cast<std::size_t>(x)] = p.match[static_cast<std::size_t>(x)];
    for (int x = 0; x < tq; ++x) chord[static_cast<std::size_t>(tp + x)] = tp + q.match[static_cast<std::size_t>(x)];
    for (int k = 0; k < m; ++k) {
        int a = p.offset(i) + k, b = tp + q.offset(j) + (m - 1 - k);
        across[static_cast<std::size_t>(a)] = b;
        across[static_cast<std::size_t>(b)] = a;
    }
    std::vector<int> order, counts;
    for (int s = 1; s < p.sides(); ++s) {
        int side = (i + s) % p.sides();
        counts.push_back(p.count[static_cast<std::size_t>(side)]);
        for (int k = 0; k < p.count[static_cast<std::size_t>(side)]; ++k) order.push_back(p.offset(side) + k);
    }
    for (int s = 1; s < q.sides(); ++s) {
        int side = (j + s) % q.sides();
        counts.push_back(q.count[static_cast<std::size_t>(side)]);
        for (int k = 0; k < q.count[static_cast<std::size_t>(side)]; ++k) order.push_back(tp + q.offset(side) + k);
    }
    return trace(chord, across, order, std::move(counts), p.loops + q.loops);
}

Polygon self_glue(const Polygon& p, int i) {
    int k = p.sides();
    int i2 = (i + 1) % k;
    int m = p.count[static_cast<std::size_t>(i)];
    if (p.count[static_cast<std::size_t>(i2)] != m) throw Error("internal: folded sides differ in point count");
    std::vector<int> across(static_cast<std::size_t>(p.total()), -1);
    for (int t = 0; t < m; ++t) {
        int a = p.offset(i) + t, b = p.offset(i2) + (m - 1 - t);
        across[static_cast<std::size_t>(a)] = b;
        across[static_cast<std::size_t>(b)] = a;
    }
    std::vector<int> order, counts;
    for (int s = 2; s < k; ++s) {
        int side = (i + s) % k;
        counts.push_back(p.count[static_cast<std::size_t>(side)]);
        for (int t = 0; t < p.count[static_cast<std::size_t>(side)]; ++t) order.push_back(p.offset(side) + t);
    }
    return trace(p.match, across, order, std::move(counts), p.loops);
}

std::pair<Polygon, Polygon> cut(const Polygon& p0, int u, int v) {
    int k = p0.sides();
    Polygon p = rotate(p0, u);
    int w = ((v - u) % k + k) % k;
    if (w == 0) throw Error("internal: degenerate cut");
    int a = p.offset(w), t = p.total();
    std::vector<int> crossing;
    for (int x = 0; x < a; ++x)
        if (p.match[static_cast<std::size_t>(x)] >= a) crossing.push_back(x);
    int d = static_cast<int>(crossing.size());

    Polygon first, second;
    first.loops = p.loops;
    for (int s = 0; s < w; ++s) first.count.push_back(p.count[static_cast<std::size_t>(s)]);
    first.count.push_back(d);
    for (int s = w; s < k; ++s) second.count.push_back(p.count[static_cast<std::size_t>(s)]);
    second.count.push_back(d);

    first.match.assign(static_cast<std::size_t>(a + d), -1);
    second.match.assign(static_cast<std::size_t>(t - a + d), -1);
    for (int x = 0; x < a; ++x) {
        int y = p.match[static_cast<std::size_t>(x)];
        if (y < a) first.match[static_cast<std::size_t>(x)] = y;
    }
    for (int x = a; x < t; ++x) {
        int y = p.match[static_cast<std::size_t>(x)];
        if (y >= a) second.match[static_cast<std::size_t>(x - a)] = y - a;
    }
    for (int c = 0; c < d; ++c) {
        int x = crossing[static_cast<std::size_t>(c)];
        int y = p.match[static_cast<std::size_t>(x)];
        int d1 = a + (d - 1 - c);
        first.match[static_cast<std::size_t>(x)] = d1;
        first.match[static_cast<std::size_t>(d1)] = x;
        int d2 = (t - a) + c;
        second.match[static_cast<std::size_t>(y - a)] = d2;
        second.match[static_cast<std::size_t>(d2)] = y - a;
    }
    return {first, second};
}

}  // namespace sqft::detail
