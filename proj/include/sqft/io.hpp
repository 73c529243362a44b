#pragma once

#include "sqft/engine.hpp"

#include <string>

namespace sqft {

// Syntax or schema error; line and column are 1-based, 0 when unknown.
struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_, int column_);
};

SquareComplex parse_surface(const std::string& text);
std::string emit_surface(const SquareComplex& c);

// Chord endpoints are checked against the complex's square count; the
// suture rules themselves are left to validate_sutures.
CurveSystem parse_sutures(const std::string& text, const SquareComplex& c);
std::string emit_sutures(const CurveSystem& g);

MorphismScript parse_script(const std::string& text);
std::string emit_script(const MorphismScript& s);

enum class DocumentKind { Surface, Sutures, Script, Unknown };
DocumentKind detect_kind(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Deterministic SVG drawing; glued neighbours are placed side by side where
// the grid allows, other gluings are shown by matching labels.
std::string render_svg(const SquareComplex& c, const CurveSystem* g = nullptr);

}  // namespace sqft
