#pragma once

#include "grm/errors.hpp"
#include "grm/quiver.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace grm {

// `rep` line as written in the file: vertex ids plus arrows declared zero.
struct ThinRepDecl {
    std::string name;
    std::vector<std::string> vertices;
    std::vector<std::string> zero_arrows;
    unsigned line = 0;
};

// Parsed quiver file: the quiver, its vertex weights (default 1) and the
// declared thin representations.
struct QuiverFile {
    Quiver quiver;
    WeightFunction weights;
    std::map<std::string, ThinRepDecl> reps;

    const ThinRepDecl& rep(std::string_view name) const;
};

// Grammar, one directive per line, '#' starts a comment:
//   q <name>                       exactly once
//   v <vertex-id>
//   a <arrow-id> <src> <tgt>
//   w <vertex-id> <value>          value "3", "1/2" or "0.5"
//   rep <name> <v>[,<v>...] [!<arrow>[,<arrow>...]]
QuiverFile parse_quiver_file(std::string_view text);

QuiverFile load_quiver_file(const std::string& path);

Quiver parse_quiver(std::string_view text);

// Applies the `w` directives of a weights-only file on top of file.weights.
void apply_weight_overrides(QuiverFile& file, std::string_view text);

void load_weight_overrides(QuiverFile& file, const std::string& path);

} // namespace grm
