#include "sqft/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sqft {

using nlohmann::json;

ParseError::ParseError(const std::string& msg, int line_, int column_)
    : Error(line_ > 0 ? "line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + msg : msg),
      line(line_),
      column(column_) {}

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into a line and column.
        std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        int line = 1, col = 1;
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        auto pos = msg.find("syntax error");
        throw ParseError(pos == std::string::npos ? msg : msg.substr(pos), line, col);
    }
}

[[noreturn]] void field_error(const std::string& field, const std::string& msg) {
    throw ParseError("field '" + field + "': " + msg, 0, 0);
}

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
    if (!j.is_object()) field_error(where.empty() ? "<root>" : where, "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : keys) known = known || it.key() == k;
        if (!known) field_error(where.empty() ? it.key() : where + "." + it.key(), "unknown field");
    }
}

int get_int(const json& j, const std::string& field, int lo, int hi, const char* what) {
    if (!j.is_number_integer()) field_error(field, std::string("expected an integer ") + what);
    long long v = j.get<long long>();
    if (v < lo || v > hi) field_error(field, std::string(what) + " " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
}

Side get_side(const json& j, const std::string& field, int squares) {
    if (!j.is_array() || j.size() != 2) field_error(field, "expected [square, side]");
    return Side{get_int(j[0], field + "[0]", 0, squares - 1, "square index"),
                get_int(j[1], field + "[1]", 0, 3, "side index")};
}

std::pair<Side, Side> get_pair(const json& j, const std::string& field, int squares) {
    if (!j.is_array() || j.size() != 2) field_error(field, "expected a pair of sides");
    return {get_side(j[0], field + "[0]", squares), get_side(j[1], field + "[1]", squares)};
}

SquareComplex surface_from(const json& j, const std::string& where) {
    only_keys(j, where, {"squares", "slack", "gluings"});
    auto path = [&](const std::string& k) { return where.empty() ? k : where + "." + k; };
    if (!j.contains("squares")) field_error(path("squares"), "missing");
    int n = get_int(j["squares"], path("squares"), 0, kMaxArity, "square count");
    bool slack = false;
    if (j.contains("slack")) {
        if (!j["slack"].is_boolean()) field_error(path("slack"), "expected true or false");
        slack = j["slack"].get<bool>();
    }
    SquareComplex c(n, slack);
    if (j.contains("gluings")) {
        const json& gl = j["gluings"];
        if (!gl.is_array()) field_error(path("gluings"), "expected an array");
        for (std::size_t i = 0; i < gl.size(); ++i) {
            std::string f = path("gluings") + "[" + std::to_string(i) + "]";
            auto [a, b] = get_pair(gl[i], f, n);
            if (c.glued(a) || c.glued(b) || a == b) field_error(f, "side glued twice");
            c.set_pair(a.slot(), b.slot());
        }
    }
    return c;
}

std::string side_json(Side s) { return "[" + std::to_string(s.sq) + ", " + std::to_string(s.side) + "]"; }

std::string surface_body(const SquareComplex& c, const std::string& ind) {
    std::ostringstream o;
    o << "{\n";
    o << ind << "  \"squares\": " << c.square_count() << ",\n";
    o << ind << "  \"slack\": " << (c.slack() ? "true" : "false") << ",\n";
    auto gl = c.gluings();
    if (gl.empty()) {
        o << ind << "  \"gluings\": []\n";
    } else {
        o << ind << "  \"gluings\": [\n";
        for (std::size_t i = 0; i < gl.size(); ++i)
            o << ind << "    [" << side_json(gl[i].first) << ", " << side_json(gl[i].second) << "]"
              << (i + 1 < gl.size() ? "," : "") << "\n";
        o << ind << "  ]\n";
    }
    o << ind << "}";
    return o.str();
}

}  // namespace

SquareComplex parse_surface(const std::string& text) { return surface_from(parse_json(text), ""); }

std::string emit_surface(const SquareComplex& c) { return surface_body(c, "") + "\n"; }

CurveSystem parse_sutures(const std::string& text, const SquareComplex& c) {
    json j = parse_json(text);
    only_keys(j, "", {"chords", "loops", "detached_loops"});
    int n = c.square_count();
    std::vector<std::vector<Chord>> chords(static_cast<std::size_t>(n));
    std::vector<int> loops(static_cast<std::size_t>(n), 0);
    auto square_key = [&](const std::string& field, const std::string& key) {
        int q = -1;
        try {
            std::size_t used = 0;
            q = std::stoi(key, &used);
            if (used != key.size()) q = -1;
        } catch (const std::exception&) {
        }
        if (q < 0 || q >= n) field_error(field, "square key '" + key + "' out of range");
        return q;
    };
    if (j.contains("chords")) {
        const json& ch = j["chords"];
        if (!ch.is_object()) field_error("chords", "expected an object keyed by square");
        for (auto it = ch.begin(); it != ch.end(); ++it) {
            std::string f = "chords." + it.key();
            int q = square_key(f, it.key());
            if (!it.value().is_array()) field_error(f, "expected an array of chords");
            for (std::size_t i = 0; i < it.value().size(); ++i) {
                std::string fi = f + "[" + std::to_string(i) + "]";
                const json& cj = it.value()[i];
                if (!cj.is_array() || cj.size() != 2) field_error(fi, "expected [[side, pos], [side, pos]]");
                Pt pts[2];
                for (int e = 0; e < 2; ++e) {
                    std::string fe = fi + "[" + std::to_string(e) + "]";
                    if (!cj[static_cast<std::size_t>(e)].is_array() || cj[static_cast<std::size_t>(e)].size() != 2)
                        field_error(fe, "expected [side, pos]");
                    pts[e].side = get_int(cj[static_cast<std::size_t>(e)][0], fe + "[0]", 0, 3, "side index");
                    pts[e].pos = get_int(cj[static_cast<std::size_t>(e)][1], fe + "[1]", 0, 1 << 20, "position");
                }
                chords[static_cast<std::size_t>(q)].push_back({pts[0], pts[1]});
            }
        }
    }
    if (j.contains("loops")) {
        const json& lj = j["loops"];
        if (!lj.is_object()) field_error("loops", "expected an object keyed by square");
        for (auto it = lj.begin(); it != lj.end(); ++it) {
            std::string f = "loops." + it.key();
            loops[static_cast<std::size_t>(square_key(f, it.key()))] = get_int(it.value(), f, 0, 1 << 20, "loop count");
        }
    }
    CurveSystem g;
    try {
        g = CurveSystem::from_chords(n, chords, loops);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        field_error("chords", e.what());
    }
    if (j.contains("detached_loops")) g.detached_loops = get_int(j["detached_loops"], "detached_loops", 0, 1 << 20, "loop count");
    return g;
}

std::string emit_sutures(const CurveSystem& g) {
    std::ostringstream o;
    o << "{\n";
    std::vector<int> used;
    for (int q = 0; q < g.square_count(); ++q)
        if (g.square(q).total() > 0) used.push_back(q);
    if (used.empty()) {
        o << "  \"chords\": {},\n";
    } else {
        o << "  \"chords\": {\n";
        for (std::size_t u = 0; u < used.size(); ++u) {
            int q = used[u];
            std::vector<std::pair<Pt, Pt>> cs;
            for (const auto& c : g.chords(q)) cs.emplace_back(std::min(c.a, c.b), std::max(c.a, c.b));
            std::sort(cs.begin(), cs.end());
            o << "    \"" << q << "\": [";
            for (std::size_t i = 0; i < cs.size(); ++i) {
                o << (i ? ", " : "") << "[[" << cs[i].first.side << ", " << cs[i].first.pos << "], ["
                  << cs[i].second.side << ", " << cs[i].second.pos << "]]";
            }
            o << "]" << (u + 1 < used.size() ? "," : "") << "\n";
        }
        o << "  },\n";
    }
    std::vector<int> looped;
    for (int q = 0; q < g.square_count(); ++q)
        if (g.square(q).loops) looped.push_back(q);
    o << "  \"loops\": {";
    for (std::size_t i = 0; i < looped.size(); ++i)
        o << (i ? ", " : "") << "\"" << looped[i] << "\": " << g.square(looped[i]).loops;
    o << "}";
    if (g.detached_loops) o << ",\n  \"detached_loops\": " << g.detached_loops;
    o << "\n}\n";
    return o.str();
}

MorphismScript parse_script(const std::string& text) {
    json j = parse_json(text);
    only_keys(j, "", {"source", "moves"});
    if (!j.contains("source")) field_error("source", "missing");
    MorphismScript s;
    s.source = surface_from(j["source"], "source");
    if (!j.contains("moves")) return s;
    const json& mv = j["moves"];
    if (!mv.is_array()) field_error("moves", "expected an array");
    for (std::size_t i = 0; i < mv.size(); ++i) {
        std::string f = "moves[" + std::to_string(i) + "]";
        const json& m = mv[i];
        if (!m.is_object() || m.size() != 1) field_error(f, "expected an object with one of create, glue, fold, zip");
        Move move;
        if (m.contains("create")) {
            const json& v = m["create"];
            if (!v.is_string() || (v.get<std::string>() != "+" && v.get<std::string>() != "-"))
                field_error(f + ".create", "expected \"+\" or \"-\"");
            move.kind = MoveKind::Create;
            move.sign = v.get<std::string>() == "+" ? +1 : -1;
        } else {
            std::string key = m.begin().key();
            if (key == "glue") move.kind = MoveKind::Glue;
            else if (key == "fold") move.kind = MoveKind::Fold;
            else if (key == "zip") move.kind = MoveKind::Zip;
            else field_error(f + "." + key, "unknown move");
            // Square indices refer to the running complex; range is checked when run.
            auto [a, b] = get_pair(m[key], f + "." + key, kMaxArity);
            move.a = a;
            move.b = b;
        }
        s.moves.push_back(move);
    }
    return s;
}

std::string emit_script(const MorphismScript& s) {
    std::ostringstream o;
    o << "{\n  \"source\": " << surface_body(s.source, "  ") << ",\n";
    if (s.moves.empty()) {
        o << "  \"moves\": []\n}\n";
        return o.str();
    }
    o << "  \"moves\": [\n";
    for (std::size_t i = 0; i < s.moves.size(); ++i) {
        const Move& m = s.moves[i];
        o << "    {\"" << to_string(m.kind) << "\": ";
        if (m.kind == MoveKind::Create) o << (m.sign > 0 ? "\"+\"" : "\"-\"");
        else o << "[" << side_json(m.a) << ", " << side_json(m.b) << "]";
        o << "}" << (i + 1 < s.moves.size() ? "," : "") << "\n";
    }
    o << "  ]\n}\n";
    return o.str();
}

DocumentKind detect_kind(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) return DocumentKind::Unknown;
    if (j.contains("squares")) return DocumentKind::Surface;
    if (j.contains("moves") || j.contains("source")) return DocumentKind::Script;
    if (j.contains("chords") || j.contains("loops")) return DocumentKind::Sutures;
    return DocumentKind::Unknown;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

}  // namespace sqft
