#pragma once

#include <numeric>
#include <vector>

namespace sqft::detail {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[static_cast<std::size_t>(x)] != x) {
            p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
            x = p[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a < b) p[static_cast<std::size_t>(b)] = a;
        else p[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

inline int mod4(int x) { return ((x % 4) + 4) % 4; }

}  // namespace sqft::detail
