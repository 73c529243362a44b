#pragma once

#include "sqft/census.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sqft {

struct CheckResult {
    std::string name;
    bool passed = true;
    int cases = 0;
    std::string detail;  // first failure, or a short summary
    double seconds = 0;
};

// Seeded random pair: a connected bona fide complex and nontrivial sutures on it.
struct RandomPair {
    SquareComplex complex;
    CurveSystem curves;
};
RandomPair random_pair(std::uint64_t seed, int max_squares);

// Elements of every bypass triple sum to zero.
CheckResult check_bypass(std::uint64_t seed, int pairs, int max_squares = 6);
// Shuffled triple orders give the same element.
CheckResult check_order(std::uint64_t seed, int pairs, int orders = 5, int max_squares = 6);
// Region Euler characteristics, index bounds and element grading.
CheckResult check_euler(std::uint64_t seed, int pairs, int max_disc = 6, int max_squares = 6);
// Catalan counts, basis property and graded ranks of the disc census.
CheckResult check_census(int max_n = 6);
// Factorization against the composed map, and naturality on basic sutures.
CheckResult check_naturality(std::uint64_t seed, int scripts, int max_squares = 8);
// Index change of every elementary move.
CheckResult check_index(std::uint64_t seed, int scripts, int max_squares = 8);
// Slide cubed is the identity, and elements follow slide_map across a slide.
CheckResult check_slide(int max_n = 6);

// Suites: all, bypass, order, naturality, euler, census, index, slide.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed, int cases);

}  // namespace sqft
