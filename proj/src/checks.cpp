#include "sqft/checks.hpp"

#include <chrono>
#include <map>
#include <random>
#include <sstream>

namespace sqft {

namespace {

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void fail(CheckResult& r, const std::string& msg) {
    if (r.passed) r.detail = msg;
    r.passed = false;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (std::uint64_t{out[0]} << 32) | out[1];
}

std::string describe(const SquareComplex& c, const CurveSystem& g) {
    std::ostringstream o;
    o << c.square_count() << " squares, gluings";
    for (auto& [a, b] : c.gluings()) o << " " << a.sq << "." << a.side << "-" << b.sq << "." << b.side;
    o << ", points per slot";
    for (int s = 0; s < 4 * c.square_count(); ++s) o << " " << g.points(Side::of(s));
    return o.str();
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

RandomPair random_pair(std::uint64_t seed, int max_squares) {
    SquareComplex c = run_script(random_surface(seed, max_squares)).target;
    return {c, random_sutures(mix(seed, 0x5eed), c)};
}

CheckResult check_bypass(std::uint64_t seed, int pairs, int max_squares) {
    Timer t;
    CheckResult r{"bypass", true, 0, "", 0};
    int triples = 0;
    for (int i = 0; i < pairs && r.passed; ++i) {
        auto [c, g] = random_pair(mix(seed, static_cast<std::uint64_t>(i)), max_squares);
        Z2Tensor x = suture_element(c, g);
        for (const auto& tr : bypass_triples(c, g)) {
            Z2Tensor up = suture_element(c, bypass_surgery(c, g, tr.edge, tr.start, BypassDir::Up));
            Z2Tensor down = suture_element(c, bypass_surgery(c, g, tr.edge, tr.start, BypassDir::Down));
            ++triples;
            if (!(x + up + down).is_zero()) {
                fail(r, "triple at " + std::to_string(tr.edge.sq) + "." + std::to_string(tr.edge.side) + "/" +
                            std::to_string(tr.start) + " on " + describe(c, g) + ": " + x.to_string() + " | " +
                            up.to_string() + " | " + down.to_string());
                break;
            }
        }
        ++r.cases;
    }
    if (r.passed) r.detail = std::to_string(r.cases) + " pairs, " + std::to_string(triples) + " triples";
    r.seconds = t.seconds();
    return r;
}

CheckResult check_order(std::uint64_t seed, int pairs, int orders, int max_squares) {
    Timer t;
    CheckResult r{"order", true, 0, "", 0};
    for (int i = 0; i < pairs && r.passed; ++i) {
        auto [c, g] = random_pair(mix(seed, static_cast<std::uint64_t>(i) + 7919), max_squares);
        Z2Tensor ref = suture_element(c, g);
        for (int k = 0; k < orders; ++k) {
            std::mt19937_64 rng(mix(seed, static_cast<std::uint64_t>(1000 * i + k)));
            ElementOptions opt;
            opt.shuffle = &rng;
            Z2Tensor x = suture_element(c, g, opt);
            if (!(x == ref)) {
                fail(r, "order " + std::to_string(k) + " on " + describe(c, g) + ": " + x.to_string() + " vs " +
                            ref.to_string());
                break;
            }
        }
        ++r.cases;
    }
    if (r.passed) r.detail = std::to_string(r.cases) + " pairs x " + std::to_string(orders) + " orders";
    r.seconds = t.seconds();
    return r;
}

namespace {

void euler_case(CheckResult& r, const SquareComplex& c, const CurveSystem& g) {
    auto inv = invariants(c);
    auto rd = regions(c, g);
    int e = euler_class(c, g);
    Z2Tensor x = suture_element(c, g);
    std::string where = describe(c, g);
    if (2 * rd.chi_plus != inv.N + inv.chi + e) fail(r, "2chi(R+) != N+chi+e on " + where);
    if (2 * rd.chi_minus != inv.N + inv.chi - e) fail(r, "2chi(R-) != N+chi-e on " + where);
    if (e < -inv.index_I || e > inv.index_I) fail(r, "|e| > I on " + where);
    if ((e - inv.index_I) % 2 != 0) fail(r, "e and I differ in parity on " + where);
    if (!is_homogeneous(x, e)) fail(r, "element " + x.to_string() + " not of grade " + std::to_string(e) + " on " + where);
    ++r.cases;
}

}  // namespace

CheckResult check_euler(std::uint64_t seed, int pairs, int max_disc, int max_squares) {
    Timer t;
    CheckResult r{"euler", true, 0, "", 0};
    for (int n = 2; n <= max_disc; ++n) {
        SquareComplex c = disc_family(n);
        for (const auto& g : enumerate_disc_sutures(n)) euler_case(r, c, g);
    }
    for (int i = 0; i < pairs; ++i) {
        auto [c, g] = random_pair(mix(seed, static_cast<std::uint64_t>(i)), max_squares);
        euler_case(r, c, g);
    }
    if (r.passed) r.detail = std::to_string(r.cases) + " sutured surfaces";
    r.seconds = t.seconds();
    return r;
}

CheckResult check_census(int max_n) {
    Timer t;
    CheckResult r{"census", true, 0, "", 0};
    for (int n = 2; n <= max_n; ++n) {
        SquareComplex c = disc_family(n);
        auto classes = enumerate_disc_sutures(n);
        long long catalan = binom(2 * n, n) / (n + 1);
        if (static_cast<long long>(classes.size()) != catalan)
            fail(r, "n=" + std::to_string(n) + ": " + std::to_string(classes.size()) + " classes, expected " +
                        std::to_string(catalan));
        int I = n - 1;
        auto basic = enumerate_basic(c);
        for (Word w = 0; w < basic.size(); ++w)
            if (!(suture_element(c, basic[w]) == Z2Tensor::basis(I, w)))
                fail(r, "n=" + std::to_string(n) + ": basic sutures " + word_string(w, I) + " give " +
                            suture_element(c, basic[w]).to_string());
        std::map<int, std::vector<Z2Tensor>> by_grade;
        for (const auto& g : classes) by_grade[euler_class(c, g)].push_back(suture_element(c, g));
        for (int e = -I; e <= I; e += 2) {
            int rank = gf2_rank(by_grade[e]);
            if (rank != binom(I, (I + e) / 2))
                fail(r, "n=" + std::to_string(n) + " grade " + std::to_string(e) + ": rank " + std::to_string(rank));
        }
        ++r.cases;
    }
    if (r.passed) r.detail = "discs n=2.." + std::to_string(max_n);
    r.seconds = t.seconds();
    return r;
}

CheckResult check_naturality(std::uint64_t seed, int scripts, int max_squares) {
    Timer t;
    CheckResult r{"naturality", true, 0, "", 0};
    int words = 0;
    for (int i = 0; i < scripts && r.passed; ++i) {
        MorphismScript s = random_script(mix(seed, static_cast<std::uint64_t>(i) + 104729), max_squares);
        auto run = run_script(s);
        int n = s.source.square_count();
        LinearMap L = LinearMap::compose(run.factorization, n);
        for (Word w = 0; w < (Word{1} << n) && r.passed; ++w) {
            Z2Tensor b = Z2Tensor::basis(n, w);
            Z2Tensor via_steps = evaluate(run.factorization, b);
            if (!(via_steps == L.column(w))) fail(r, "script " + std::to_string(i) + ": factorization differs on " + word_string(w, n));
            CurveSystem out = apply_script_to_sutures(s, basic_sutures(s.source, w));
            Z2Tensor geo = suture_element(run.target, out);
            if (!(geo == L.column(w)))
                fail(r, "script " + std::to_string(i) + ", word " + word_string(w, n) + ": D(c) = " +
                            L.column(w).to_string() + ", c(D) = " + geo.to_string());
            ++words;
        }
        ++r.cases;
    }
    if (r.passed) r.detail = std::to_string(r.cases) + " scripts, " + std::to_string(words) + " basic sutures";
    r.seconds = t.seconds();
    return r;
}

CheckResult check_index(std::uint64_t seed, int scripts, int max_squares) {
    Timer t;
    CheckResult r{"index", true, 0, "", 0};
    int moves = 0;
    for (int i = 0; i < scripts; ++i) {
        MorphismScript s = random_script(mix(seed, static_cast<std::uint64_t>(i) + 104729), max_squares);
        MorphismScript prefix{s.source, {}};
        int before = invariants(s.source).index_I;
        for (const Move& mv : s.moves) {
            prefix.moves.push_back(mv);
            SquareComplex target = run_script(prefix).target;
            int after = invariants(target).index_I;
            int want = mv.kind == MoveKind::Create ? 1 : mv.kind == MoveKind::Glue ? 0 : mv.kind == MoveKind::Fold ? -1 : -2;
            if (after - before != want)
                fail(r, "script " + std::to_string(i) + ": " + to_string(mv.kind) + " changed the index by " +
                            std::to_string(after - before));
            if (after != target.square_count()) fail(r, "script " + std::to_string(i) + ": tightened target has I != squares");
            before = after;
            ++moves;
        }
        ++r.cases;
    }
    if (r.passed) r.detail = std::to_string(r.cases) + " scripts, " + std::to_string(moves) + " moves";
    r.seconds = t.seconds();
    return r;
}

CheckResult check_slide(int max_n) {
    Timer t;
    CheckResult r{"slide", true, 0, "", 0};
    int slides = 0;
    for (int n = 3; n <= max_n; ++n) {
        SquareComplex c = disc_family(n);
        auto key = canonicalize(c).key;
        auto census = enumerate_disc_sutures(n);
        for (const auto& [ea, eb] : c.gluings()) {
            Side even = ea.side % 2 == 0 ? ea : eb;
            Side odd = ea.side % 2 == 0 ? eb : ea;
            for (auto d : {SlideDirection::Clockwise, SlideDirection::Anticlockwise}) {
                SquareComplex cur = c;
                Side e = ea;
                for (int k = 0; k < 3; ++k) {
                    auto res = diagonal_slide(cur, e, d);
                    cur = res.complex;
                    e = res.record.added_edge.first;
                }
                if (!(canonicalize(cur).key == key))
                    fail(r, "n=" + std::to_string(n) + ": three " + to_string(d) + " slides at " +
                                std::to_string(ea.sq) + "." + std::to_string(ea.side) + " change the complex");
                for (const auto& g : census) {
                    auto res = diagonal_slide(c, ea, d, &g);
                    Z2Tensor before = suture_element(c, g);
                    Z2Tensor after = suture_element(res.complex, *res.curves);
                    Z2Tensor mapped = slide_map(before, even.sq, odd.sq, d);
                    if (!(after == mapped))
                        fail(r, "n=" + std::to_string(n) + " " + to_string(d) + " slide at " + std::to_string(ea.sq) +
                                    "." + std::to_string(ea.side) + ": " + after.to_string() + " vs " + mapped.to_string());
                    ++slides;
                }
            }
        }
        ++r.cases;
    }
    if (r.passed) r.detail = std::to_string(slides) + " sutured slides";
    r.seconds = t.seconds();
    return r;
}

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed, int cases) {
    auto n = [&](int def) { return cases > 0 ? cases : def; };
    std::vector<CheckResult> out;
    bool all = suite == "all";
    bool known = all;
    if (all || suite == "bypass") known = true, out.push_back(check_bypass(seed, n(200)));
    if (all || suite == "order") known = true, out.push_back(check_order(seed, n(100)));
    if (all || suite == "euler") known = true, out.push_back(check_euler(seed, n(200)));
    if (all || suite == "census") known = true, out.push_back(check_census(6));
    if (all || suite == "naturality") known = true, out.push_back(check_naturality(seed, n(100)));
    if (all || suite == "index") known = true, out.push_back(check_index(seed, n(100)));
    if (all || suite == "slide") known = true, out.push_back(check_slide(6));
    if (!known) throw Error("unknown suite '" + suite + "'");
    return out;
}

}  // namespace sqft
