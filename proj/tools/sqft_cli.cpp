#include "sqft/checks.hpp"
#include "sqft/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace sqft;

namespace {

Side parse_side(const std::string& s) {
    auto dot = s.find('.');
    try {
        if (dot == std::string::npos) throw Error("");
        std::size_t u1 = 0, u2 = 0;
        int sq = std::stoi(s.substr(0, dot), &u1);
        int side = std::stoi(s.substr(dot + 1), &u2);
        if (u1 != dot || u2 != s.size() - dot - 1 || sq < 0 || side < 0 || side > 3) throw Error("");
        return {sq, side};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--edge", "expected SQUARE.SIDE with side 0..3, got '" + s + "'");
    }
}

void print_map(const LinearMap& L) {
    int in = L.arity_in();
    if (in > 10) {
        std::cout << "operator on " << in << " factors (columns omitted)\n";
        return;
    }
    for (Word w = 0; w < (Word{1} << in); ++w)
        std::cout << "  " << (in ? word_string(w, in) : "1") << " -> " << L.column(w).to_string() << "\n";
}

int cmd_validate(const std::string& file, const std::string& surface) {
    std::string text = read_file(file);
    switch (detect_kind(text)) {
        case DocumentKind::Surface: {
            auto rep = validate_complex(parse_surface(text));
            std::cout << rep.to_string() << "\n";
            return rep.ok() ? 0 : 1;
        }
        case DocumentKind::Sutures: {
            if (surface.empty()) throw CLI::ValidationError("--surface", "sutures are validated against a surface");
            SquareComplex c = parse_surface(read_file(surface));
            require_valid(c);
            auto rep = validate_sutures(c, parse_sutures(text, c));
            std::cout << rep.to_string() << "\n";
            return rep.ok() ? 0 : 1;
        }
        case DocumentKind::Script: {
            MorphismScript s = parse_script(text);
            auto run = run_script(s);
            std::cout << "valid: " << s.moves.size() << " moves, " << s.source.square_count() << " -> "
                      << run.target.square_count() << " squares\n";
            return 0;
        }
        case DocumentKind::Unknown: break;
    }
    std::cerr << "error: " << file << " is not a surface, sutures or script document\n";
    return 1;
}

int cmd_info(const std::string& file) {
    SquareComplex c = parse_surface(read_file(file));
    auto inv = invariants(c);
    std::cout << "squares " << c.square_count() << (c.slack() ? " (slack)" : "") << "\n"
              << "N " << inv.N << "\nchi " << inv.chi << "\nB " << inv.B << "\nC " << inv.C << "\ngenus "
              << inv.genus_total << "\nI " << inv.index_I << "\nG " << inv.gluing_G << "\ninternal vertices "
              << inv.internal_vertices << "\n";
    auto cycles = boundary_structure(c);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        std::cout << "boundary " << i << ":";
        for (const auto& e : cycles[i]) std::cout << " " << e.side.sq << "." << e.side.side;
        std::cout << "\n";
    }
    return 0;
}

int cmd_element(const std::string& sf, const std::string& gf, bool trace) {
    SquareComplex c = parse_surface(read_file(sf));
    CurveSystem g = parse_sutures(read_file(gf), c);
    std::vector<std::string> lines;
    ElementOptions opt;
    if (trace) opt.trace = &lines;
    Z2Tensor x = suture_element(c, g, opt);
    for (const auto& l : lines) std::cout << l << "\n";
    std::cout << x.to_string() << "\n";
    return 0;
}

int cmd_apply(const std::string& sf, const std::string& gf, bool factorize) {
    MorphismScript s = parse_script(read_file(sf));
    std::optional<CurveSystem> g;
    if (!gf.empty()) g = parse_sutures(read_file(gf), s.source);
    auto run = run_script(s, g ? &*g : nullptr);
    if (factorize) {
        std::cout << "factorization:\n";
        for (const auto& step : run.factorization) std::cout << "  " << to_string(Factorization{step}) << "\n";
    }
    std::cout << "operator:\n";
    print_map(LinearMap::compose(run.factorization, s.source.square_count()));
    std::cout << "target:\n" << emit_surface(run.target);
    if (g) {
        std::cout << "sutures:\n" << emit_sutures(*run.curves);
        std::cout << "element " << suture_element(run.target, *run.curves).to_string() << "\n";
    }
    return 0;
}

int cmd_slide(const std::string& sf, const std::string& edge, const std::string& dir, const std::string& gf,
              const std::string& out) {
    SquareComplex c = parse_surface(read_file(sf));
    Side e = parse_side(edge);
    SlideDirection d = dir == "cw" ? SlideDirection::Clockwise : SlideDirection::Anticlockwise;
    std::optional<CurveSystem> g;
    if (!gf.empty()) g = parse_sutures(read_file(gf), c);
    auto res = diagonal_slide(c, e, d, g ? &*g : nullptr);
    std::string doc = emit_surface(res.complex);
    if (!out.empty()) write_file(out, doc);
    else std::cout << doc;
    const auto& rec = res.record;
    std::cerr << "removed " << rec.removed_edge.first.sq << "." << rec.removed_edge.first.side << "-"
              << rec.removed_edge.second.sq << "." << rec.removed_edge.second.side << ", added "
              << rec.added_edge.first.sq << "." << rec.added_edge.first.side << "-" << rec.added_edge.second.sq << "."
              << rec.added_edge.second.side << "\n";
    if (g) {
        std::cout << emit_sutures(*res.curves);
        Z2Tensor before = suture_element(c, *g);
        std::cout << "element before " << before.to_string() << "\nelement after "
                  << suture_element(res.complex, *res.curves).to_string() << "\nslide_map "
                  << slide_map(before, rec.square_a, rec.square_b, d).to_string() << "\n";
    }
    return 0;
}

int cmd_census(int n) {
    SquareComplex c = disc_family(n);
    auto classes = enumerate_disc_sutures(n);
    std::cout << "disc with " << 2 * n << " vertices: " << classes.size() << " classes\n";
    for (std::size_t i = 0; i < classes.size(); ++i)
        std::cout << "  " << i << "  e=" << euler_class(c, classes[i]) << "  " << suture_element(c, classes[i]).to_string()
                  << "\n";
    return 0;
}

int cmd_check(const std::string& suite, std::uint64_t seed, int cases) {
    bool ok = true;
    for (const auto& r : run_suite(suite, seed, cases)) {
        std::printf("%-11s %s  %.2fs  %s\n", r.name.c_str(), r.passed ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}

int cmd_render(const std::string& sf, const std::string& gf, const std::string& out) {
    SquareComplex c = parse_surface(read_file(sf));
    std::optional<CurveSystem> g;
    if (!gf.empty()) {
        g = parse_sutures(read_file(gf), c);
        require_valid(c, *g);
    } else {
        require_valid(c);
    }
    write_file(out, render_svg(c, g ? &*g : nullptr));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sutured quadrangulated surfaces: elements, morphisms and checks"};
    app.require_subcommand(1);

    std::string file, surface, sutures, script, edge, dir = "ccw", out, suite = "all";
    bool trace = false, factorize = false;
    int n = 0, cases = 0;
    std::uint64_t seed = 1;
    if (const char* env = std::getenv("SQFT_SEED")) seed = std::strtoull(env, nullptr, 10);

    auto* validate = app.add_subcommand("validate", "Validate a surface, sutures or script document");
    validate->add_option("file", file)->required()->check(CLI::ExistingFile);
    validate->add_option("--surface", surface, "Surface for a sutures document")->check(CLI::ExistingFile);

    auto* info = app.add_subcommand("info", "Print surface invariants");
    info->add_option("surface", surface)->required()->check(CLI::ExistingFile);

    auto* element = app.add_subcommand("element", "Suture element");
    element->add_option("surface", surface)->required()->check(CLI::ExistingFile);
    element->add_option("sutures", sutures)->required()->check(CLI::ExistingFile);
    element->add_flag("--trace", trace, "Print the bypass recursion tree");

    auto* apply = app.add_subcommand("apply", "Run a morphism script");
    apply->add_option("script", script)->required()->check(CLI::ExistingFile);
    apply->add_option("sutures", sutures)->check(CLI::ExistingFile);
    apply->add_flag("--factorize", factorize, "Print the creation/annihilation steps");

    auto* slide = app.add_subcommand("slide", "Diagonal slide of an internal edge");
    slide->add_option("surface", surface)->required()->check(CLI::ExistingFile);
    slide->add_option("--edge", edge, "Edge as SQUARE.SIDE")->required();
    slide->add_option("--dir", dir)->check(CLI::IsMember({"cw", "ccw"}));
    slide->add_option("--sutures", sutures)->check(CLI::ExistingFile);
    slide->add_option("-o,--output", out);

    auto* census = app.add_subcommand("census", "Enumerate suture classes");
    auto* disc = census->add_subcommand("disc", "Discs with 2n boundary vertices");
    census->require_subcommand(1);
    disc->add_option("--n", n)->required()->check(CLI::Range(2, 7));

    auto* check = app.add_subcommand("check", "Run property suites");
    check->add_option("--suite", suite)->check(
        CLI::IsMember({"all", "bypass", "order", "naturality", "euler", "census", "index", "slide"}));
    check->add_option("--seed", seed);
    check->add_option("--cases", cases)->check(CLI::PositiveNumber);

    auto* render = app.add_subcommand("render", "Draw a surface as SVG");
    render->add_option("surface", surface)->required()->check(CLI::ExistingFile);
    render->add_option("sutures", sutures)->check(CLI::ExistingFile);
    render->add_option("-o,--output", out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) return cmd_validate(file, surface);
        if (*info) return cmd_info(surface);
        if (*element) return cmd_element(surface, sutures, trace);
        if (*apply) return cmd_apply(script, sutures, factorize);
        if (*slide) return cmd_slide(surface, edge, dir, sutures, out);
        if (*census) return cmd_census(n);
        if (*check) return cmd_check(suite, seed, cases);
        if (*render) return cmd_render(surface, sutures, out);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
