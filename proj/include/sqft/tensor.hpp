#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sqft {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bit i of a word is tensor factor i; factor 0 prints first.
using Word = std::uint64_t;
constexpr int kMaxArity = 62;

inline int bit(Word w, int i) { return static_cast<int>((w >> i) & 1u); }

std::string word_string(Word w, int arity);
Word parse_word(std::string_view s);

// Element of V^{⊗n} over GF(2): a set of basis words.
class Z2Tensor {
public:
    Z2Tensor() = default;
    explicit Z2Tensor(int arity);

    static Z2Tensor basis(int arity, Word w);
    static Z2Tensor scalar(bool one);
    // Multiset of words reduced mod 2.
    static Z2Tensor from_words(int arity, std::vector<Word> words);

    int arity() const { return arity_; }
    const std::vector<Word>& words() const { return words_; }
    bool is_zero() const { return words_.empty(); }
    bool contains(Word w) const;
    std::size_t size() const { return words_.size(); }

    Z2Tensor& operator+=(const Z2Tensor& other);
    friend Z2Tensor operator+(Z2Tensor a, const Z2Tensor& b) { return a += b; }
    bool operator==(const Z2Tensor& other) const = default;

    // "0" for zero, otherwise "0110 + 1010" in sorted word order.
    std::string to_string() const;

private:
    int arity_ = 0;
    std::vector<Word> words_;
};

struct GradingTriple {
    int n0 = 0;
    int n1 = 0;
    int e = 0;
    bool operator==(const GradingTriple&) const = default;
};

GradingTriple grading(Word w, int arity);
std::optional<int> homogeneous_grade(const Z2Tensor& x);
bool is_homogeneous(const Z2Tensor& x, int e);

enum class OpKind { Create0, Create1, Annihilate0, Annihilate1 };

struct DigitalOp {
    OpKind kind = OpKind::Create0;
    int factor = 0;            // created or annihilated factor
    std::vector<int> acted;    // annihilations only; indices in the input arity
    int arity_in = 0;

    int arity_out() const { return is_creation() ? arity_in + 1 : arity_in - 1; }
    bool is_creation() const { return kind == OpKind::Create0 || kind == OpKind::Create1; }
    int bit_value() const { return (kind == OpKind::Create1 || kind == OpKind::Annihilate1) ? 1 : 0; }

    // factor < 0 appends the created factor last.
    static DigitalOp create(int value, int arity_in, int factor = -1);
    static DigitalOp annihilate(int value, int arity_in, int factor, std::vector<int> acted);

    bool operator==(const DigitalOp&) const = default;
};

std::string to_string(const DigitalOp& op);

Z2Tensor apply_word(const DigitalOp& op, Word w);
Z2Tensor apply_create(const DigitalOp& op, const Z2Tensor& x);
Z2Tensor apply_annihilate(const DigitalOp& op, const Z2Tensor& x);
Z2Tensor apply(const DigitalOp& op, const Z2Tensor& x);

// Output factor i is input factor perm[i].
struct Reindex {
    std::vector<int> perm;
    bool operator==(const Reindex&) const = default;
};

using FactorStep = std::variant<DigitalOp, Reindex>;
using Factorization = std::vector<FactorStep>;

int arity_out(const FactorStep& s, int arity_in);
Z2Tensor apply(const FactorStep& s, const Z2Tensor& x);
// Word-by-word evaluation of a factorization.
Z2Tensor evaluate(const Factorization& f, const Z2Tensor& x);
std::string to_string(const Factorization& f);

constexpr int kMatrixArityCap = 12;

// GF(2) linear map V^{⊗in} -> V^{⊗out}. Stored as explicit columns when
// arity_in <= kMatrixArityCap, otherwise as a step list evaluated per word.
class LinearMap {
public:
    LinearMap() = default;
    static LinearMap identity(int arity);
    static LinearMap from_columns(int arity_in, int arity_out, std::vector<Z2Tensor> columns);
    static LinearMap from_step(const FactorStep& s, int arity_in);
    // Product of per-step matrices (falls back to step chaining above the cap).
    static LinearMap compose(const Factorization& steps, int arity_in);

    int arity_in() const { return in_; }
    int arity_out() const { return out_; }
    bool has_matrix() const { return matrix_; }

    Z2Tensor column(Word w) const;
    Z2Tensor apply(const Z2Tensor& x) const;
    // other ∘ this
    LinearMap then(const LinearMap& other) const;
    bool operator==(const LinearMap& other) const;

private:
    int in_ = 0;
    int out_ = 0;
    bool matrix_ = true;
    std::vector<Z2Tensor> columns_;
    Factorization steps_;
};

// Rank over GF(2) of a list of tensors of one arity.
int gf2_rank(const std::vector<Z2Tensor>& xs);

enum class SlideDirection { Clockwise, Anticlockwise };

const char* to_string(SlideDirection d);
// 2x2 block on basis ((0,1),(1,0)) at (i, j); m[r][c] is the coefficient of
// basis r in the image of basis c.
using Block2 = std::array<std::array<int, 2>, 2>;
Block2 slide_matrix(SlideDirection d);
Block2 block_power(const Block2& m, int k);
Z2Tensor apply_block(const Z2Tensor& x, int i, int j, const Block2& m);
Z2Tensor slide_map(const Z2Tensor& x, int i, int j, SlideDirection d);

}  // namespace sqft
