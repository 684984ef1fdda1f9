#include "grm/quiver_file.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

namespace grm {

namespace {

struct Token {
    std::string text;
    unsigned column = 0;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        if (line[pos] == '#') break;
        if (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r') {
            ++pos;
            continue;
        }
        std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' &&
               line[pos] != '\r' && line[pos] != '#') {
            ++pos;
        }
        tokens.push_back(Token{std::string(line.substr(start, pos - start)),
                               static_cast<unsigned>(start + 1)});
    }
    return tokens;
}

std::vector<std::string> split_list(const std::string& text, unsigned line, unsigned column,
                                    const char* what) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string part = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (part.empty()) {
            throw ParseError(line, column, std::string("empty ") + what + " in list '" + text + "'");
        }
        parts.push_back(std::move(part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return parts;
}

Rational parse_weight_value(const Token& token, unsigned line) {
    Rational value;
    try {
        value = Rational::parse(token.text);
    } catch (const std::exception& e) {
        throw ParseError(line, token.column, e.what());
    }
    if (!value.is_positive()) {
        throw ParseError(line, token.column, "weight must be positive, got '" + token.text + "'");
    }
    return value;
}

void expect_tokens(const std::vector<Token>& tokens, std::size_t lo, std::size_t hi,
                   unsigned line, const char* usage) {
    if (tokens.size() < lo || tokens.size() > hi) {
        throw ParseError(line, tokens.front().column,
                         "expected '" + std::string(usage) + "'");
    }
}

struct WeightDirective {
    std::string vertex;
    Rational value;
    unsigned line = 0;
    unsigned column = 0;
};

std::vector<WeightDirective> parse_weight_lines(std::string_view text) {
    std::vector<WeightDirective> out;
    std::istringstream stream{std::string(text)};
    std::string raw;
    unsigned line = 0;
    while (std::getline(stream, raw)) {
        ++line;
        std::vector<Token> tokens = tokenize(raw);
        if (tokens.empty()) continue;
        if (tokens[0].text != "w") {
            throw ParseError(line, tokens[0].column,
                             "only 'w' directives are allowed in a weights file, got '" +
                                 tokens[0].text + "'");
        }
        expect_tokens(tokens, 3, 3, line, "w <vertex-id> <value>");
        out.push_back(WeightDirective{tokens[1].text, parse_weight_value(tokens[2], line),
                                      line, tokens[1].column});
    }
    return out;
}

} // namespace

const ThinRepDecl& QuiverFile::rep(std::string_view name) const {
    auto it = reps.find(std::string(name));
    if (it == reps.end()) {
        throw std::invalid_argument("unknown representation '" + std::string(name) + "'");
    }
    return it->second;
}

QuiverFile parse_quiver_file(std::string_view text) {
    std::optional<std::string> quiver_name;
    std::vector<std::string> vertices;
    std::map<std::string, unsigned> vertex_lines;
    std::vector<Quiver::ArrowDecl> arrows;
    std::map<std::string, unsigned> arrow_lines;
    std::vector<WeightDirective> weight_directives;
    std::map<std::string, ThinRepDecl> reps;

    std::istringstream stream{std::string(text)};
    std::string raw;
    unsigned line = 0;
    while (std::getline(stream, raw)) {
        ++line;
        std::vector<Token> tokens = tokenize(raw);
        if (tokens.empty()) continue;
        const std::string& directive = tokens[0].text;
        if (directive == "q") {
            expect_tokens(tokens, 2, 2, line, "q <name>");
            if (quiver_name) {
                throw ParseError(line, tokens[0].column, "duplicate 'q' header");
            }
            quiver_name = tokens[1].text;
        } else if (directive == "v") {
            expect_tokens(tokens, 2, 2, line, "v <vertex-id>");
            if (!vertex_lines.emplace(tokens[1].text, line).second) {
                throw ParseError(line, tokens[1].column,
                                 "duplicate vertex id '" + tokens[1].text + "'");
            }
            vertices.push_back(tokens[1].text);
        } else if (directive == "a") {
            expect_tokens(tokens, 4, 4, line, "a <arrow-id> <src> <tgt>");
            if (!arrow_lines.emplace(tokens[1].text, line).second) {
                throw ParseError(line, tokens[1].column,
                                 "duplicate arrow id '" + tokens[1].text + "'");
            }
            arrows.push_back(Quiver::ArrowDecl{tokens[1].text, tokens[2].text, tokens[3].text});
        } else if (directive == "w") {
            expect_tokens(tokens, 3, 3, line, "w <vertex-id> <value>");
            weight_directives.push_back(WeightDirective{
                tokens[1].text, parse_weight_value(tokens[2], line), line, tokens[1].column});
        } else if (directive == "rep") {
            expect_tokens(tokens, 3, 4, line, "rep <name> <v>[,<v>...] [!<arrow>[,<arrow>...]]");
            ThinRepDecl decl;
            decl.name = tokens[1].text;
            decl.line = line;
            decl.vertices = split_list(tokens[2].text, line, tokens[2].column, "vertex id");
            if (tokens.size() == 4) {
                if (tokens[3].text.size() < 2 || tokens[3].text[0] != '!') {
                    throw ParseError(line, tokens[3].column,
                                     "expected '!<arrow>[,<arrow>...]', got '" + tokens[3].text + "'");
                }
                decl.zero_arrows =
                    split_list(tokens[3].text.substr(1), line, tokens[3].column, "arrow id");
            }
            if (reps.count(decl.name)) {
                throw ParseError(line, tokens[1].column,
                                 "duplicate representation name '" + decl.name + "'");
            }
            reps.emplace(decl.name, std::move(decl));
        } else {
            throw ParseError(line, tokens[0].column, "unknown directive '" + directive + "'");
        }
    }

    if (!quiver_name) {
        throw ParseError(line + 1, 1, "missing 'q' header");
    }
    if (vertices.empty()) {
        throw ParseError(line + 1, 1, "quiver '" + *quiver_name + "' declares no vertices");
    }
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        for (const std::string* endpoint : {&arrows[i].src, &arrows[i].tgt}) {
            if (!vertex_lines.count(*endpoint)) {
                throw ParseError(arrow_lines.at(arrows[i].id), 1,
                                 "arrow '" + arrows[i].id + "' references unknown vertex '" +
                                     *endpoint + "'");
            }
        }
    }

    QuiverFile file{Quiver(*quiver_name, std::move(vertices), std::move(arrows)),
                    WeightFunction::ones(vertex_lines.size()), std::move(reps)};

    std::map<std::string, unsigned> weighted;
    for (const WeightDirective& w : weight_directives) {
        auto v = file.quiver.find_vertex(w.vertex);
        if (!v) {
            throw ParseError(w.line, w.column, "unknown vertex '" + w.vertex + "'");
        }
        if (!weighted.emplace(w.vertex, w.line).second) {
            throw ParseError(w.line, w.column, "duplicate weight for vertex '" + w.vertex + "'");
        }
        file.weights.set(*v, w.value);
    }

    for (auto& [name, decl] : file.reps) {
        std::map<std::string, bool> seen;
        for (const std::string& id : decl.vertices) {
            if (!file.quiver.find_vertex(id)) {
                throw ParseError(decl.line, 1,
                                 "representation '" + name + "' references unknown vertex '" + id + "'");
            }
            if (!seen.emplace(id, true).second) {
                throw ParseError(decl.line, 1,
                                 "representation '" + name + "' repeats vertex '" + id + "'");
            }
        }
        std::vector<std::uint32_t> indices;
        for (const std::string& id : decl.vertices) indices.push_back(file.quiver.vertex_index(id));
        VertexSet support(std::move(indices));
        std::map<std::string, bool> zeroed;
        for (const std::string& id : decl.zero_arrows) {
            auto a = file.quiver.find_arrow(id);
            if (!a) {
                throw ParseError(decl.line, 1,
                                 "representation '" + name + "' references unknown arrow '" + id + "'");
            }
            const Arrow& arrow = file.quiver.arrows()[*a];
            if (!support.contains(arrow.src) || !support.contains(arrow.tgt)) {
                throw ParseError(decl.line, 1,
                                 "arrow '" + id + "' is not induced by the vertices of '" + name + "'");
            }
            if (!zeroed.emplace(id, true).second) {
                throw ParseError(decl.line, 1,
                                 "representation '" + name + "' repeats arrow '" + id + "'");
            }
        }
    }

    return file;
}

QuiverFile load_quiver_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) {
        throw std::runtime_error("cannot open quiver file '" + path + "'");
    }
    std::ostringstream text;
    text << stream.rdbuf();
    return parse_quiver_file(text.str());
}

Quiver parse_quiver(std::string_view text) {
    return parse_quiver_file(text).quiver;
}

void apply_weight_overrides(QuiverFile& file, std::string_view text) {
    std::map<std::string, bool> seen;
    for (const WeightDirective& w : parse_weight_lines(text)) {
        auto v = file.quiver.find_vertex(w.vertex);
        if (!v) {
            throw ParseError(w.line, w.column, "unknown vertex '" + w.vertex + "'");
        }
        if (!seen.emplace(w.vertex, true).second) {
            throw ParseError(w.line, w.column, "duplicate weight for vertex '" + w.vertex + "'");
        }
        file.weights.set(*v, w.value);
    }
}

void load_weight_overrides(QuiverFile& file, const std::string& path) {
    std::ifstream stream(path);
    if (!stream) {
        throw std::runtime_error("cannot open weights file '" + path + "'");
    }
    std::ostringstream text;
    text << stream.rdbuf();
    apply_weight_overrides(file, text.str());
}

} // namespace grm
