#include "dmt/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace dmt {

ParseError::ParseError(int line, int column, const std::string& detail)
    : BuildError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                 detail),
      line(line),
      column(column) {}

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
               line[j] != '#')
            ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

}  // namespace

SimplicialComplex parse_complex_file(const std::string& text) {
    SimplicialComplex::Builder builder(/*strict=*/true);
    std::set<std::string> vertices, labels;
    std::map<std::vector<std::string>, int> listed;  // sorted vertex names -> first line
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) continue;
        const Token& head = tokens[0];

        if (head.text == "v") {
            if (tokens.size() != 2)
                throw ParseError(lineno, head.column, "expected: v <name>");
            if (!vertices.insert(tokens[1].text).second)
                throw ParseError(lineno, tokens[1].column,
                                 "duplicate vertex '" + tokens[1].text + "'");
            builder.add_vertex(tokens[1].text);
            continue;
        }

        bool explicit_simplex = head.text == "s";
        bool facet = head.text == "facet" || head.text == "facet:";
        if (!explicit_simplex && !facet)
            throw ParseError(lineno, head.column, "unknown directive '" + head.text + "'");

        size_t first = 1;  // first vertex token
        std::string label;
        if (explicit_simplex) {
            if (tokens.size() < 2) throw ParseError(lineno, head.column, "expected: s <label>: <vertices>");
            label = tokens[1].text;
            first = 2;
            if (label.size() > 1 && label.back() == ':') {
                label.pop_back();
            } else if (tokens.size() > 2 && tokens[2].text == ":") {
                first = 3;
            } else {
                throw ParseError(lineno, tokens[1].column, "expected ':' after the simplex label");
            }
            if (!labels.insert(label).second)
                throw ParseError(lineno, tokens[1].column, "duplicate label '" + label + "'");
        } else if (head.text == "facet" && tokens.size() > 1 && tokens[1].text == ":") {
            first = 2;
        } else if (head.text == "facet") {
            throw ParseError(lineno, head.column, "expected ':' after 'facet'");
        }

        if (first >= tokens.size())
            throw ParseError(lineno, head.column, "expected at least one vertex");
        std::vector<std::string> names;
        for (size_t t = first; t < tokens.size(); ++t) {
            if (!vertices.count(tokens[t].text))
                throw ParseError(lineno, tokens[t].column,
                                 "undeclared vertex '" + tokens[t].text + "'");
            if (std::count(names.begin(), names.end(), tokens[t].text))
                throw ParseError(lineno, tokens[t].column,
                                 "repeated vertex '" + tokens[t].text + "'");
            names.push_back(tokens[t].text);
        }

        if (explicit_simplex) {
            std::vector<std::string> key = names;
            std::sort(key.begin(), key.end());
            auto [it, fresh] = listed.emplace(key, lineno);
            if (!fresh)
                throw ParseError(lineno, head.column,
                                 "simplex already listed on line " + std::to_string(it->second));
            builder.add_simplex(label, names);
        } else {
            builder.add_facet(names);
        }
    }
    return builder.build();
}

FieldFile parse_field_file(const std::string& text) {
    FieldFile out;
    std::map<std::pair<std::string, std::string>, int> pair_lines;
    std::map<std::string, int> value_lines;
    bool saw_pair = false, saw_value = false;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) continue;
        const Token& head = tokens[0];

        if (head.text == "pair") {
            if (tokens.size() != 3)
                throw ParseError(lineno, head.column, "expected: pair <face> <coface>");
            if (saw_value)
                throw ParseError(lineno, head.column, "pair line in a function file");
            saw_pair = true;
            auto key = std::make_pair(tokens[1].text, tokens[2].text);
            auto [it, fresh] = pair_lines.emplace(key, lineno);
            if (!fresh)
                throw ParseError(lineno, head.column,
                                 "pair already listed on line " + std::to_string(it->second));
            out.pairs.push_back(key);
        } else if (head.text == "f") {
            if (tokens.size() != 3)
                throw ParseError(lineno, head.column, "expected: f <simplex> <value>");
            if (saw_pair)
                throw ParseError(lineno, head.column, "function line in a pair file");
            saw_value = true;
            size_t used = 0;
            double value = 0;
            try {
                value = std::stod(tokens[2].text, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tokens[2].text.size())
                throw ParseError(lineno, tokens[2].column,
                                 "bad number '" + tokens[2].text + "'");
            auto [it, fresh] = value_lines.emplace(tokens[1].text, lineno);
            if (!fresh)
                throw ParseError(lineno, tokens[1].column,
                                 "value for '" + tokens[1].text + "' already set on line " +
                                     std::to_string(it->second));
            out.values.emplace_back(tokens[1].text, value);
        } else {
            throw ParseError(lineno, head.column, "unknown directive '" + head.text + "'");
        }
    }
    out.is_function = saw_value;
    return out;
}

std::vector<std::pair<SimplexId, SimplexId>> resolve_pairs(const SimplicialComplex& K,
                                                           const FieldFile& file) {
    if (file.is_function) throw BuildError("function file where a pair file was expected");
    std::vector<std::pair<SimplexId, SimplexId>> ids;
    ids.reserve(file.pairs.size());
    for (const auto& [face, coface] : file.pairs)
        ids.emplace_back(K.id_of_label(face), K.id_of_label(coface));
    return ids;
}

MorseFunction resolve_function(const SimplicialComplex& K, const FieldFile& file) {
    if (!file.is_function && !file.pairs.empty())
        throw BuildError("pair file where a function file was expected");
    MorseFunction f(static_cast<size_t>(K.size()), 0.0);
    std::vector<bool> set(static_cast<size_t>(K.size()), false);
    for (const auto& [label, value] : file.values) {
        SimplexId id = K.id_of_label(label);
        f[static_cast<size_t>(id)] = value;
        set[static_cast<size_t>(id)] = true;
    }
    for (SimplexId id = 0; id < K.size(); ++id)
        if (!set[static_cast<size_t>(id)])
            throw BuildError("no value for simplex '" + K.simplex(id).label + "'");
    return f;
}

GradientField resolve_field(const SimplicialComplex& K, const FieldFile& file) {
    if (!file.is_function) return GradientField::make(K, resolve_pairs(K, file));
    MorseFunction f = resolve_function(K, file);
    std::vector<Violation> bad = validate_morse_function(K, f);
    if (!bad.empty()) throw BuildError("not a discrete Morse function: " + bad.front().detail);
    return gradient_field_of(K, f);
}

std::string serialize_complex(const SimplicialComplex& K) {
    std::ostringstream os;
    for (int v = 0; v < K.vertex_count(); ++v) os << "v " << K.vertex_name(v) << "\n";
    for (SimplexId id = 0; id < K.size(); ++id) {
        const Simplex& s = K.simplex(id);
        if (s.dim == 0 && s.label == K.vertex_name(s.vertices[0])) continue;
        os << "s " << s.label << ":";
        for (int v : s.vertices) os << ' ' << K.vertex_name(v);
        os << "\n";
    }
    return os.str();
}

std::string serialize_field(const SimplicialComplex& K, const GradientField& V) {
    std::ostringstream os;
    for (auto [face, coface] : V.pairs())
        os << "pair " << K.simplex(face).label << ' ' << K.simplex(coface).label << "\n";
    return os.str();
}

std::string serialize_function(const SimplicialComplex& K, const MorseFunction& f) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (SimplexId id = 0; id < K.size(); ++id)
        os << "f " << K.simplex(id).label << ' ' << f.at(static_cast<size_t>(id)) << "\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BuildError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw BuildError("cannot write '" + path + "'");
    out << text;
    if (!out.flush()) throw BuildError("cannot write '" + path + "'");
}

}  // namespace dmt
