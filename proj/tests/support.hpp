#pragma once

#include "sqft/checks.hpp"
#include "sqft/io.hpp"

#include <array>
#include <string>
#include <vector>

namespace sqft::test {

inline SquareComplex make(int squares, const std::vector<std::array<int, 4>>& gluings, bool slack = false) {
    SquareComplex c(squares, slack);
    for (const auto& g : gluings) c.set_pair(Side{g[0], g[1]}.slot(), Side{g[2], g[3]}.slot());
    return c;
}

inline std::string fixture(const std::string& name) { return read_file(std::string(SQFT_FIXTURES) + "/" + name); }

inline SquareComplex fixture_surface(const std::string& name) { return parse_surface(fixture(name)); }

inline SquareComplex hexagon() { return make(2, {{0, 1, 1, 0}}); }
inline SquareComplex annulus() { return make(2, {{0, 0, 1, 1}, {0, 2, 1, 3}}); }
inline SquareComplex punctured_torus() { return make(2, {{0, 0, 1, 1}, {0, 1, 1, 2}, {0, 2, 1, 3}}); }
inline SquareComplex disc12() { return make(5, {{0, 2, 2, 3}, {1, 3, 2, 0}, {4, 2, 2, 1}, {3, 3, 2, 2}}); }

inline Z2Tensor words(int arity, const std::vector<std::string>& ws) {
    std::vector<Word> v;
    for (const auto& w : ws) v.push_back(parse_word(w));
    return Z2Tensor::from_words(arity, v);
}

}  // namespace sqft::test
