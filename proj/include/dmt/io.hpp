#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dmt/gradient.hpp"
#include "dmt/simplicial_complex.hpp"

namespace dmt {

/// Malformed input text; the location is 1-based.
struct ParseError : BuildError {
    int line, column;
    ParseError(int line, int column, const std::string& detail);
};

/// Complex description, line oriented:
///   v <name>              declare a vertex
///   s <label>: <v1> ...   explicit simplex; the listed order is the orientation
///   facet: <v1> ...       generate the closure of a facet
///   # comment to end of line
/// Vertices must be declared before use; labels and listed simplices must be
/// unique.
SimplicialComplex parse_complex_file(const std::string& text);

/// Field description: either `pair <face> <coface>` lines naming a gradient
/// field, or `f <simplex> <value>` lines naming a discrete Morse function
/// (never both).  An empty file is the empty field.
struct FieldFile {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::pair<std::string, double>> values;
    bool is_function = false;
};

FieldFile parse_field_file(const std::string& text);

/// Pair labels resolved to ids (pair files only).
std::vector<std::pair<SimplexId, SimplexId>> resolve_pairs(const SimplicialComplex& K,
                                                           const FieldFile& file);

/// The gradient field a field file describes: validated directly for pair
/// files, induced through the function for f files.  Throws BuildError when
/// the description is not a valid field / function on K.
GradientField resolve_field(const SimplicialComplex& K, const FieldFile& file);

/// The function of an f file as an id-indexed value table; every simplex of K
/// must receive exactly one value.
MorseFunction resolve_function(const SimplicialComplex& K, const FieldFile& file);

/// Fully explicit round-trippable descriptions.
std::string serialize_complex(const SimplicialComplex& K);
std::string serialize_field(const SimplicialComplex& K, const GradientField& V);
std::string serialize_function(const SimplicialComplex& K, const MorseFunction& f);

std::string read_file(const std::string& path);  // BuildError when unreadable
void write_file(const std::string& path, const std::string& text);

}  // namespace dmt
