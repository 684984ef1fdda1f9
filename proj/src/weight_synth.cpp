#include "grm/weight_synth.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace grm {

namespace {

std::string trim(const std::string& text) {
    std::size_t lo = text.find_first_not_of(" \t");
    if (lo == std::string::npos) return "";
    std::size_t hi = text.find_last_not_of(" \t");
    return text.substr(lo, hi - lo + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = text.find(sep, pos);
        parts.push_back(text.substr(pos, next == std::string::npos ? next : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return parts;
}

} // namespace

SubsetFiltration parse_filtration(std::string_view text,
                                  const std::vector<std::string>& universe) {
    SubsetFiltration f;
    for (const std::string& raw_stage : split(std::string(text), '|')) {
        std::string stage = trim(raw_stage);
        if (stage.empty()) {
            throw std::invalid_argument("empty filtration stage");
        }
        std::vector<std::uint32_t> indices;
        for (const std::string& raw_id : split(stage, ',')) {
            std::string id = trim(raw_id);
            if (id.empty()) {
                throw std::invalid_argument("empty vertex id in filtration stage '" + stage + "'");
            }
            auto it = std::lower_bound(universe.begin(), universe.end(), id);
            if (it == universe.end() || *it != id) {
                throw std::invalid_argument("unknown vertex '" + id + "' in filtration");
            }
            indices.push_back(static_cast<std::uint32_t>(it - universe.begin()));
        }
        f.stages.push_back(VertexSet(std::move(indices)));
    }
    return f;
}

std::vector<ElementId> resolve_filtration(const SubobjectPoset& p, const SubsetFiltration& f) {
    if (f.stages.empty()) {
        throw std::invalid_argument("empty filtration");
    }
    std::vector<ElementId> ids;
    ids.reserve(f.stages.size());
    for (const VertexSet& stage : f.stages) {
        auto id = p.index_of(stage);
        if (!id) {
            throw std::invalid_argument("stage " + stage.str(p.universe) +
                                        " is not a subobject element");
        }
        ids.push_back(*id);
    }
    if (!p.order.is_minimal(ids.front())) {
        throw std::invalid_argument("first stage " + f.stages.front().str(p.universe) +
                                    " is not a minimal element");
    }
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
        const auto& up = p.order.upper_covers(ids[i]);
        if (std::find(up.begin(), up.end(), ids[i + 1]) == up.end()) {
            throw std::invalid_argument("stage " + f.stages[i + 1].str(p.universe) +
                                        " does not cover stage " + f.stages[i].str(p.universe));
        }
    }
    return ids;
}

namespace {

void check_synthesized(const SubobjectPoset& p, const std::vector<ElementId>& ids,
                       const WeightFunction& w) {
    LengthAssignment la = p.lengths(w);
    if (l_star(p.order, la, ids.back()) != chain_measure(la, ids)) {
        throw std::logic_error("synthesized weights do not make the filtration a best chain");
    }
}

// Unique means no other filtration with the same number of stages, ending
// anywhere in the poset, reaches an equal or greater chain value. With one
// stage this asks for the strictly lightest minimal element; with the target
// on top it asks for a single best filtration of the whole representation.
bool is_unique_best(const SubobjectPoset& p, const std::vector<ElementId>& ids,
                    const WeightFunction& w) {
    LengthAssignment la = p.lengths(w);
    Measure mine = chain_measure(la, ids);
    for (ElementId x = 0; x < p.elements.size(); ++x) {
        for (const Filtration& g : all_filtrations(p.order, x)) {
            if (g.stages.size() != ids.size() || g.stages == ids) continue;
            if (lex_compare(chain_measure(la, g.stages), mine) !=
                std::strong_ordering::less) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

SynthesisResult synthesize(const SubobjectPoset& p, const SubsetFiltration& f) {
    std::vector<ElementId> ids = resolve_filtration(p, f);
    WeightFunction w = WeightFunction::ones(p.universe.size());
    std::vector<Rational> constants;
    for (std::size_t n = 0; n + 1 < f.stages.size(); ++n) {
        Rational c = set_weight(w, f.stages[n]) + Rational(1);
        for (std::uint32_t v : f.stages[n + 1].minus(f.stages[n])) w.set(v, c);
        constants.push_back(c);
    }
    check_synthesized(p, ids, w);
    return SynthesisResult{std::move(w), std::move(constants), Uniqueness::Unknown};
}

VerifyOutcome verify_filtration(const SubobjectPoset& p, const SubsetFiltration& f,
                                const WeightFunction& w) {
    std::vector<ElementId> ids = resolve_filtration(p, f);
    LengthAssignment la = p.lengths(w);
    Measure best = l_star(p.order, la, ids.back());
    if (chain_measure(la, ids) == best) {
        return VerifyOutcome{true, {}, {}};
    }
    VerifyOutcome out;
    out.is_gr = false;
    std::vector<Filtration> best_chains = max_filtrations(p.order, la, ids.back());
    for (ElementId x : best_chains.front().stages) out.witness.push_back(p.elements[x]);
    out.witness_measure = best;
    return out;
}

Uniqueness filtration_uniqueness(const SubobjectPoset& p, const SubsetFiltration& f,
                                 const WeightFunction& w) {
    std::vector<ElementId> ids = resolve_filtration(p, f);
    return is_unique_best(p, ids, w) ? Uniqueness::Unique : Uniqueness::NotUnique;
}

SynthesisResult synthesize_unique(const SubobjectPoset& p, const SubsetFiltration& f,
                                  unsigned budget) {
    if (budget == 0) {
        throw std::invalid_argument("perturbation budget must be positive");
    }
    SynthesisResult result = synthesize(p, f);
    std::vector<ElementId> ids = resolve_filtration(p, f);
    if (is_unique_best(p, ids, result.weights)) {
        result.unique = Uniqueness::Unique;
        return result;
    }
    std::int64_t m = static_cast<std::int64_t>(f.stages.size());
    const std::vector<Rational> base_constants = result.stage_constants;
    for (unsigned k = 1; k <= budget; ++k) {
        std::vector<Rational> constants;
        WeightFunction w = WeightFunction::ones(p.universe.size());
        for (std::size_t n = 0; n + 1 < f.stages.size(); ++n) {
            Rational nudge(static_cast<std::int64_t>(n) + 1,
                           static_cast<std::int64_t>(k) * (m + 1));
            Rational c = base_constants[n] + nudge;
            Rational stage = set_weight(w, f.stages[n]);
            if (!(stage < c)) c = stage + nudge;
            for (std::uint32_t v : f.stages[n + 1].minus(f.stages[n])) w.set(v, c);
            constants.push_back(c);
        }
        check_synthesized(p, ids, w);
        bool unique = is_unique_best(p, ids, w);
        result = SynthesisResult{std::move(w), std::move(constants),
                                 unique ? Uniqueness::Unique : Uniqueness::NotUnique};
        if (unique) return result;
    }
    return result;
}

} // namespace grm
