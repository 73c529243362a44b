#include "sqft/tensor.hpp"

#include "sqft/derived_constants.hpp"

#include <algorithm>
#include <bit>

namespace sqft {

std::string word_string(Word w, int arity) {
    std::string s(static_cast<std::size_t>(arity), '0');
    for (int i = 0; i < arity; ++i)
        if (bit(w, i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

Word parse_word(std::string_view s) {
    if (s.size() > static_cast<std::size_t>(kMaxArity)) throw Error("word too long");
    Word w = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') w |= Word{1} << i;
        else if (s[i] != '0') throw Error("word must consist of 0 and 1");
    }
    return w;
}

Z2Tensor::Z2Tensor(int arity) : arity_(arity) {
    if (arity < 0 || arity > kMaxArity) throw Error("arity out of range");
}

Z2Tensor Z2Tensor::basis(int arity, Word w) {
    Z2Tensor t(arity);
    t.words_.push_back(w);
    return t;
}

Z2Tensor Z2Tensor::scalar(bool one) {
    Z2Tensor t(0);
    if (one) t.words_.push_back(0);
    return t;
}

Z2Tensor Z2Tensor::from_words(int arity, std::vector<Word> words) {
    Z2Tensor t(arity);
    std::sort(words.begin(), words.end());
    for (std::size_t i = 0; i < words.size();) {
        std::size_t j = i;
        while (j < words.size() && words[j] == words[i]) ++j;
        if ((j - i) % 2 == 1) t.words_.push_back(words[i]);
        i = j;
    }
    return t;
}

bool Z2Tensor::contains(Word w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

Z2Tensor& Z2Tensor::operator+=(const Z2Tensor& other) {
    if (other.arity_ != arity_) throw Error("arity mismatch in tensor sum");
    std::vector<Word> out;
    out.reserve(words_.size() + other.words_.size());
    std::set_symmetric_difference(words_.begin(), words_.end(), other.words_.begin(),
                                  other.words_.end(), std::back_inserter(out));
    words_ = std::move(out);
    return *this;
}

std::string Z2Tensor::to_string() const {
    if (words_.empty()) return "0";
    if (arity_ == 0) return "1";
    std::vector<std::string> parts;
    for (Word w : words_) parts.push_back(word_string(w, arity_));
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += " + ";
        s += parts[i];
    }
    return s;
}

GradingTriple grading(Word w, int arity) {
    int n1 = std::popcount(w & ((arity >= 64) ? ~Word{0} : ((Word{1} << arity) - 1)));
    int n0 = arity - n1;
    return {n0, n1, n1 - n0};
}

std::optional<int> homogeneous_grade(const Z2Tensor& x) {
    if (x.is_zero()) return std::nullopt;
    int e = grading(x.words().front(), x.arity()).e;
    for (Word w : x.words())
        if (grading(w, x.arity()).e != e) return std::nullopt;
    return e;
}

bool is_homogeneous(const Z2Tensor& x, int e) {
    for (Word w : x.words())
        if (grading(w, x.arity()).e != e) return false;
    return true;
}

namespace {

Word insert_bit(Word w, int at, int value) {
    Word low = w & ((Word{1} << at) - 1);
    Word high = (w >> at) << (at + 1);
    return low | high | (static_cast<Word>(value) << at);
}

Word erase_bit(Word w, int at) {
    Word low = w & ((Word{1} << at) - 1);
    Word high = (w >> (at + 1)) << at;
    return low | high;
}

void check_arity(const Z2Tensor& x, int expected) {
    if (x.arity() != expected) throw Error("arity mismatch: operator expects " + std::to_string(expected) +
                                           ", tensor has " + std::to_string(x.arity()));
}

}  // namespace

DigitalOp DigitalOp::create(int value, int arity_in, int factor) {
    if (arity_in < 0 || arity_in + 1 > kMaxArity) throw Error("creation arity out of range");
    if (factor < 0) factor = arity_in;
    if (factor > arity_in) throw Error("created factor index out of range");
    DigitalOp op;
    op.kind = value ? OpKind::Create1 : OpKind::Create0;
    op.factor = factor;
    op.arity_in = arity_in;
    return op;
}

DigitalOp DigitalOp::annihilate(int value, int arity_in, int factor, std::vector<int> acted) {
    if (factor < 0 || factor >= arity_in) throw Error("annihilated factor index out of range");
    for (int a : acted)
        if (a < 0 || a >= arity_in || a == factor) throw Error("bad acted factor index");
    std::vector<int> sorted = acted;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error("repeated acted factor");
    DigitalOp op;
    op.kind = value ? OpKind::Annihilate1 : OpKind::Annihilate0;
    op.factor = factor;
    op.acted = std::move(acted);
    op.arity_in = arity_in;
    return op;
}

std::string to_string(const DigitalOp& op) {
    std::string s;
    switch (op.kind) {
        case OpKind::Create0: s = "a*0"; break;
        case OpKind::Create1: s = "a*1"; break;
        case OpKind::Annihilate0: s = "a0"; break;
        case OpKind::Annihilate1: s = "a1"; break;
    }
    s += "[" + std::to_string(op.arity_in) + "->" + std::to_string(op.arity_out()) + "; factor " +
         std::to_string(op.factor);
    if (!op.is_creation()) {
        s += "; acted {";
        for (std::size_t i = 0; i < op.acted.size(); ++i) s += (i ? "," : "") + std::to_string(op.acted[i]);
        s += "}";
    }
    return s + "]";
}

Z2Tensor apply_word(const DigitalOp& op, Word w) {
    if (op.is_creation()) return Z2Tensor::basis(op.arity_out(), insert_bit(w, op.factor, op.bit_value()));
    int b = op.bit_value();
    if (bit(w, op.factor) == b) return Z2Tensor::basis(op.arity_out(), erase_bit(w, op.factor));
    // Flip-sum: each acted factor holding b is flipped to the other value.
    std::vector<Word> terms;
    for (int a : op.acted)
        if (bit(w, a) == b) terms.push_back(erase_bit(w ^ (Word{1} << a), op.factor));
    return Z2Tensor::from_words(op.arity_out(), std::move(terms));
}

Z2Tensor apply_create(const DigitalOp& op, const Z2Tensor& x) {
    if (!op.is_creation()) throw Error("not a creation operator");
    return apply(op, x);
}

Z2Tensor apply_annihilate(const DigitalOp& op, const Z2Tensor& x) {
    if (op.is_creation()) throw Error("not an annihilation operator");
    return apply(op, x);
}

Z2Tensor apply(const DigitalOp& op, const Z2Tensor& x) {
    check_arity(x, op.arity_in);
    std::vector<Word> out;
    for (Word w : x.words()) {
        Z2Tensor t = apply_word(op, w);
        out.insert(out.end(), t.words().begin(), t.words().end());
    }
    return Z2Tensor::from_words(op.arity_out(), std::move(out));
}

int arity_out(const FactorStep& s, int arity_in) {
    if (auto op = std::get_if<DigitalOp>(&s)) {
        if (op->arity_in != arity_in) throw Error("factorization arity chain broken");
        return op->arity_out();
    }
    const auto& r = std::get<Reindex>(s);
    if (static_cast<int>(r.perm.size()) != arity_in) throw Error("reindex arity mismatch");
    return arity_in;
}

Z2Tensor apply(const FactorStep& s, const Z2Tensor& x) {
    if (auto op = std::get_if<DigitalOp>(&s)) return apply(*op, x);
    const auto& r = std::get<Reindex>(s);
    check_arity(x, static_cast<int>(r.perm.size()));
    std::vector<Word> out;
    for (Word w : x.words()) {
        Word v = 0;
        for (std::size_t i = 0; i < r.perm.size(); ++i)
            if (bit(w, r.perm[i])) v |= Word{1} << i;
        out.push_back(v);
    }
    return Z2Tensor::from_words(x.arity(), std::move(out));
}

Z2Tensor evaluate(const Factorization& f, const Z2Tensor& x) {
    Z2Tensor cur = x;
    for (const auto& s : f) cur = sqft::apply(s, cur);
    return cur;
}

std::string to_string(const Factorization& f) {
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += "\n";
        if (auto op = std::get_if<DigitalOp>(&f[i])) {
            s += to_string(*op);
        } else {
            s += "reindex [";
            const auto& p = std::get<Reindex>(f[i]).perm;
            for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
            s += "]";
        }
    }
    return s;
}

LinearMap LinearMap::identity(int arity) {
    LinearMap m;
    m.in_ = m.out_ = arity;
    if (arity <= kMatrixArityCap) {
        for (Word w = 0; w < (Word{1} << arity); ++w) m.columns_.push_back(Z2Tensor::basis(arity, w));
    } else {
        m.matrix_ = false;
    }
    return m;
}

LinearMap LinearMap::from_columns(int arity_in, int arity_out, std::vector<Z2Tensor> columns) {
    if (arity_in > kMatrixArityCap) throw Error("matrix form capped at arity 12");
    if (columns.size() != (std::size_t{1} << arity_in)) throw Error("wrong column count");
    for (const auto& c : columns) check_arity(c, arity_out);
    LinearMap m;
    m.in_ = arity_in;
    m.out_ = arity_out;
    m.columns_ = std::move(columns);
    return m;
}

LinearMap LinearMap::from_step(const FactorStep& s, int arity_in) {
    int out = sqft::arity_out(s, arity_in);
    LinearMap m;
    m.in_ = arity_in;
    m.out_ = out;
    if (arity_in <= kMatrixArityCap) {
        for (Word w = 0; w < (Word{1} << arity_in); ++w)
            m.columns_.push_back(sqft::apply(s, Z2Tensor::basis(arity_in, w)));
    } else {
        m.matrix_ = false;
        m.steps_.push_back(s);
    }
    return m;
}

LinearMap LinearMap::compose(const Factorization& steps, int arity_in) {
    LinearMap m = identity(arity_in);
    int cur = arity_in;
    for (const auto& s : steps) {
        m = m.then(from_step(s, cur));
        cur = m.out_;
    }
    return m;
}

Z2Tensor LinearMap::column(Word w) const {
    if (matrix_) return columns_.at(static_cast<std::size_t>(w));
    return evaluate(steps_, Z2Tensor::basis(in_, w));
}

Z2Tensor LinearMap::apply(const Z2Tensor& x) const {
    check_arity(x, in_);
    if (!matrix_) return evaluate(steps_, x);
    Z2Tensor out(out_);
    for (Word w : x.words()) out += columns_[static_cast<std::size_t>(w)];
    return out;
}

LinearMap LinearMap::then(const LinearMap& other) const {
    if (other.in_ != out_) throw Error("linear map arity chain broken");
    LinearMap m;
    m.in_ = in_;
    m.out_ = other.out_;
    if (matrix_ && other.matrix_) {
        m.columns_.reserve(columns_.size());
        for (const auto& c : columns_) m.columns_.push_back(other.apply(c));
        return m;
    }
    m.matrix_ = false;
    auto append = [&](const LinearMap& x) {
        if (x.matrix_) throw Error("cannot chain a matrix above the arity cap");
        m.steps_.insert(m.steps_.end(), x.steps_.begin(), x.steps_.end());
    };
    if (matrix_ && in_ > kMatrixArityCap) append(*this);
    else if (!matrix_) append(*this);
    else throw Error("cannot chain a matrix into a large step map");
    append(other);
    return m;
}

bool LinearMap::operator==(const LinearMap& other) const {
    if (in_ != other.in_ || out_ != other.out_) return false;
    if (in_ > kMatrixArityCap) throw Error("equality of maps above the arity cap is not decided");
    for (Word w = 0; w < (Word{1} << in_); ++w)
        if (!(column(w) == other.column(w))) return false;
    return true;
}

int gf2_rank(const std::vector<Z2Tensor>& xs) {
    if (xs.empty()) return 0;
    int n = xs.front().arity();
    if (n > 24) throw Error("rank computation capped at arity 24");
    std::size_t bits = std::size_t{1} << n;
    std::size_t blocks = (bits + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& x : xs) {
        check_arity(x, n);
        std::vector<std::uint64_t> r(blocks, 0);
        for (Word w : x.words()) r[w / 64] |= std::uint64_t{1} << (w % 64);
        rows.push_back(std::move(r));
    }
    int rank = 0;
    for (std::size_t col = 0; col < bits && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t blk = col / 64;
        std::uint64_t mask = std::uint64_t{1} << (col % 64);
        std::size_t pivot = rows.size();
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
            if (rows[r][blk] & mask) { pivot = r; break; }
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || !(rows[r][blk] & mask)) continue;
            for (std::size_t b = 0; b < blocks; ++b) rows[r][b] ^= rows[static_cast<std::size_t>(rank)][b];
        }
        ++rank;
    }
    return rank;
}

const char* to_string(SlideDirection d) {
    return d == SlideDirection::Clockwise ? "cw" : "ccw";
}

Block2 slide_matrix(SlideDirection d) {
    const auto& src = d == SlideDirection::Clockwise ? derived::kSlideClockwise : derived::kSlideAnticlockwise;
    return {{{src[0][0], src[0][1]}, {src[1][0], src[1][1]}}};
}

Block2 block_power(const Block2& m, int k) {
    Block2 r{{{1, 0}, {0, 1}}};
    for (int t = 0; t < k; ++t) {
        Block2 n{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) n[i][j] = (m[i][0] * r[0][j] + m[i][1] * r[1][j]) % 2;
        r = n;
    }
    return r;
}

Z2Tensor apply_block(const Z2Tensor& x, int i, int j, const Block2& m) {
    if (i == j || i < 0 || j < 0 || i >= x.arity() || j >= x.arity()) throw Error("bad factor pair for slide map");
    std::vector<Word> out;
    Word mi = Word{1} << i, mj = Word{1} << j;
    for (Word w : x.words()) {
        int bi = bit(w, i), bj = bit(w, j);
        if (bi == bj) {
            out.push_back(w);
            continue;
        }
        Word rest = w & ~mi & ~mj;
        int c = bi == 0 ? 0 : 1;  // basis index: (0,1) -> 0, (1,0) -> 1
        if (m[0][c]) out.push_back(rest | mj);
        if (m[1][c]) out.push_back(rest | mi);
    }
    return Z2Tensor::from_words(x.arity(), std::move(out));
}

Z2Tensor slide_map(const Z2Tensor& x, int i, int j, SlideDirection d) {
    return apply_block(x, i, j, slide_matrix(d));
}

}  // namespace sqft
