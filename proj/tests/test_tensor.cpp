#include "support.hpp"

#include "sqft/derived_constants.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace sqft;
using sqft::test::words;

namespace {

// Annihilation written out on strings, straight from the definition.
Z2Tensor annihilate_oracle(int value, const std::string& w, int factor, const std::vector<int>& acted) {
    std::vector<std::string> out;
    std::string rest = w;
    rest.erase(static_cast<std::size_t>(factor), 1);
    auto shifted = [&](int i) { return i > factor ? i - 1 : i; };
    if (w[static_cast<std::size_t>(factor)] - '0' == value) {
        out.push_back(rest);
    } else {
        char from = value ? '1' : '0', to = value ? '0' : '1';
        for (int a : acted) {
            std::string v = rest;
            auto& ch = v[static_cast<std::size_t>(shifted(a))];
            if (ch != from) continue;
            ch = to;
            out.push_back(v);
        }
    }
    return words(static_cast<int>(w.size()) - 1, out);
}

std::string bits(Word w, int n) { return word_string(w, n); }

}  // namespace

TEST(Tensor, WordStringRoundTrip) {
    EXPECT_EQ(word_string(parse_word("01101"), 5), "01101");
    EXPECT_EQ(parse_word("1"), Word{1});
    EXPECT_THROW(parse_word("012"), Error);
}

TEST(Tensor, AdditionIsSymmetricDifference) {
    Z2Tensor a = words(2, {"01", "10"}), b = words(2, {"10", "11"});
    EXPECT_EQ(a + b, words(2, {"01", "11"}));
    EXPECT_TRUE((a + a).is_zero());
    EXPECT_EQ(words(2, {"01", "01", "10"}), words(2, {"10"}));
    EXPECT_THROW(a + Z2Tensor(3), Error);
}

TEST(Tensor, ToStringSortsWords) {
    EXPECT_EQ(words(4, {"0110", "1010"}).to_string(), "0110 + 1010");
    EXPECT_EQ(Z2Tensor(3).to_string(), "0");
}

TEST(Tensor, Grading) {
    auto g = grading(parse_word("01101"), 5);
    EXPECT_EQ(g.n0, 2);
    EXPECT_EQ(g.n1, 3);
    EXPECT_EQ(g.e, 1);
    EXPECT_TRUE(is_homogeneous(words(2, {"10", "01"}), 0));
    EXPECT_EQ(homogeneous_grade(words(2, {"10", "01"})), 0);
    EXPECT_FALSE(homogeneous_grade(words(2, {"11", "00"})).has_value());
}

TEST(Tensor, CreationExamples) {
    EXPECT_EQ(apply_create(DigitalOp::create(0, 1), words(1, {"1"})), words(2, {"10"}));
    EXPECT_EQ(apply_create(DigitalOp::create(1, 0), Z2Tensor::scalar(true)), words(1, {"1"}));
    EXPECT_TRUE(apply_create(DigitalOp::create(0, 2), Z2Tensor(2)).is_zero());
    EXPECT_EQ(apply_create(DigitalOp::create(1, 2, 0), words(2, {"01"})), words(3, {"101"}));
}

TEST(Tensor, AnnihilationExamples) {
    auto a1 = DigitalOp::annihilate(1, 4, 0, {1, 2, 3});
    EXPECT_EQ(apply_annihilate(a1, words(4, {"0011"})), words(3, {"001", "010"}));
    EXPECT_TRUE(apply_annihilate(a1, words(4, {"0000"})).is_zero());
    for (std::string x : {"000", "011", "101", "111"})
        EXPECT_EQ(apply_annihilate(a1, words(4, {"1" + x})), words(3, {x}));
    auto a0 = DigitalOp::annihilate(0, 3, 1, {0, 2});
    EXPECT_EQ(apply_annihilate(a0, words(3, {"010"})), words(2, {"10", "01"}));
    EXPECT_THROW(apply_annihilate(DigitalOp::create(0, 1), words(1, {"1"})), Error);
    EXPECT_THROW(DigitalOp::annihilate(1, 3, 0, {0}), Error);
    EXPECT_THROW(DigitalOp::annihilate(1, 3, 1, {2, 2}), Error);
}

TEST(Tensor, AnnihilationMatchesOracleExhaustively) {
    for (int n = 1; n <= 6; ++n)
        for (int f = 0; f < n; ++f)
            for (Word mask = 0; mask < (Word{1} << n); ++mask) {
                if (bit(mask, f)) continue;
                std::vector<int> acted;
                for (int i = 0; i < n; ++i)
                    if (bit(mask, i)) acted.push_back(i);
                for (int v = 0; v < 2; ++v) {
                    auto op = DigitalOp::annihilate(v, n, f, acted);
                    for (Word w = 0; w < (Word{1} << n); ++w)
                        ASSERT_EQ(sqft::apply(op, Z2Tensor::basis(n, w)), annihilate_oracle(v, bits(w, n), f, acted))
                            << to_string(op) << " on " << bits(w, n);
                }
            }
}

TEST(Tensor, AnnihilationGrading) {
    for (int n = 1; n <= 6; ++n)
        for (int v = 0; v < 2; ++v) {
            std::vector<int> others;
            for (int i = 1; i < n; ++i) others.push_back(i);
            auto op = DigitalOp::annihilate(v, n, 0, others);
            for (Word w = 0; w < (Word{1} << n); ++w) {
                auto g = grading(w, n);
                Z2Tensor out = sqft::apply(op, Z2Tensor::basis(n, w));
                for (Word u : out.words()) {
                    auto h = grading(u, n - 1);
                    if (v == 1) {
                        EXPECT_EQ(h.n1, g.n1 - 1);
                        EXPECT_EQ(h.n0, g.n0);
                    } else {
                        EXPECT_EQ(h.n0, g.n0 - 1);
                        EXPECT_EQ(h.n1, g.n1);
                    }
                }
            }
        }
}

TEST(Tensor, OperatorsAreLinear) {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 6; ++n) {
        std::vector<FactorStep> ops = {DigitalOp::create(0, n), DigitalOp::create(1, n, 1),
                                       DigitalOp::annihilate(1, n, 0, {1}), DigitalOp::annihilate(0, n, n - 1, {0})};
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Word> xs, ys;
            for (int k = 0; k < 4; ++k) {
                xs.push_back(rng() & ((Word{1} << n) - 1));
                ys.push_back(rng() & ((Word{1} << n) - 1));
            }
            Z2Tensor x = Z2Tensor::from_words(n, xs), y = Z2Tensor::from_words(n, ys);
            for (const auto& op : ops) EXPECT_EQ(sqft::apply(op, x + y), sqft::apply(op, x) + sqft::apply(op, y));
        }
    }
}

TEST(Tensor, ComposeExamples) {
    for (int n = 0; n <= 8; ++n) {
        Factorization f = {DigitalOp::create(0, n), DigitalOp::annihilate(0, n + 1, n, {})};
        EXPECT_EQ(LinearMap::compose(f, n), LinearMap::identity(n)) << n;
    }
    EXPECT_EQ(LinearMap::compose({}, 3), LinearMap::identity(3));
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> all;
        for (int i = 0; i < n; ++i) all.push_back(i);
        Factorization f = {DigitalOp::create(1, n), DigitalOp::annihilate(0, n + 1, n, all)};
        LinearMap L = LinearMap::compose(f, n);
        for (Word w = 0; w < (Word{1} << n); ++w) {
            std::vector<Word> flips;
            for (int i = 0; i < n; ++i)
                if (!bit(w, i)) flips.push_back(w | (Word{1} << i));
            EXPECT_EQ(L.column(w), Z2Tensor::from_words(n, flips));
        }
    }
}

TEST(Tensor, LargeArityUsesSteps) {
    int n = kMatrixArityCap + 2;
    Factorization f = {DigitalOp::create(1, n), DigitalOp::annihilate(1, n + 1, 0, {n})};
    LinearMap L = LinearMap::compose(f, n);
    EXPECT_FALSE(L.has_matrix());
    Word w = parse_word("01010101010101");
    EXPECT_EQ(L.column(w), evaluate(f, Z2Tensor::basis(n, w)));
}

TEST(Tensor, ReindexPermutesFactors) {
    Reindex r{{2, 0, 1}};
    EXPECT_EQ(sqft::apply(FactorStep{r}, words(3, {"100"})), words(3, {"010"}));
}

TEST(Tensor, Rank) {
    EXPECT_EQ(gf2_rank({words(3, {"100"}), words(3, {"010"}), words(3, {"100", "010"})}), 2);
    EXPECT_EQ(gf2_rank({}), 0);
    EXPECT_EQ(gf2_rank({Z2Tensor(2)}), 0);
}

TEST(Tensor, SlideBlocksAreTheOrderThreePair) {
    Block2 p = {{{0, 1}, {1, 1}}}, q = {{{1, 1}, {1, 0}}};
    Block2 cw = slide_matrix(SlideDirection::Clockwise), ccw = slide_matrix(SlideDirection::Anticlockwise);
    EXPECT_TRUE((cw == p && ccw == q) || (cw == q && ccw == p));
    Block2 id = {{{1, 0}, {0, 1}}};
    EXPECT_EQ(block_power(cw, 3), id);
    EXPECT_EQ(block_power(ccw, 3), id);
    EXPECT_NE(block_power(cw, 1), id);
    EXPECT_EQ(block_power(cw, 2), ccw);
}

TEST(Tensor, SlideMapFixesExtremeWordsAndCubesToIdentity) {
    EXPECT_EQ(slide_map(words(2, {"00"}), 0, 1, SlideDirection::Clockwise), words(2, {"00"}));
    EXPECT_EQ(slide_map(words(2, {"11"}), 1, 0, SlideDirection::Anticlockwise), words(2, {"11"}));
    for (int n = 2; n <= 6; ++n)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                for (auto d : {SlideDirection::Clockwise, SlideDirection::Anticlockwise})
                    for (Word w = 0; w < (Word{1} << n); ++w) {
                        Z2Tensor x = Z2Tensor::basis(n, w);
                        EXPECT_EQ(slide_map(slide_map(slide_map(x, i, j, d), i, j, d), i, j, d), x);
                    }
            }
}
