#pragma once

#include "grm/poset.hpp"
#include "grm/quiver.hpp"

#include <string_view>
#include <vector>

namespace grm {

// Filtration written as vertex sets, stage by stage.
struct SubsetFiltration {
    std::vector<VertexSet> stages;

    friend bool operator==(const SubsetFiltration& a, const SubsetFiltration& b) = default;
};

// "3 | 3,4,5 | 3,4,5,6" against the given sorted vertex ids.
SubsetFiltration parse_filtration(std::string_view text, const std::vector<std::string>& universe);

// Maps the stages onto poset elements and checks the filtration shape: the
// first stage must be minimal and every step a cover.
std::vector<ElementId> resolve_filtration(const SubobjectPoset& p, const SubsetFiltration& f);

enum class Uniqueness { Unique, NotUnique, Unknown };

struct SynthesisResult {
    WeightFunction weights;
    std::vector<Rational> stage_constants;
    Uniqueness unique = Uniqueness::Unknown;
};

struct VerifyOutcome {
    bool is_gr = false;
    // on failure: a filtration that beats f, and the best measure
    std::vector<VertexSet> witness;
    Measure witness_measure;
};

// Weights that make f a best filtration of its target: start from all ones
// and give the vertices entering at stage n+1 the constant
// c_n = (weight of stage n so far) + 1. Vertices outside the target keep
// weight 1. The result is checked against the chain engine before returning.
SynthesisResult synthesize(const SubobjectPoset& p, const SubsetFiltration& f);

// Whether f achieves the largest chain value for its target under w.
VerifyOutcome verify_filtration(const SubobjectPoset& p, const SubsetFiltration& f,
                                const WeightFunction& w);

// Whether f ranks strictly above every other filtration with the same
// number of stages, anywhere in the poset.
Uniqueness filtration_uniqueness(const SubobjectPoset& p, const SubsetFiltration& f,
                                 const WeightFunction& w);

// synthesize, then while the result is not unique retry up to `budget`
// rounds with stage constants nudged by n/(k*(m+1)) in round k, keeping
// every constant above the weight of the previous stage.
SynthesisResult synthesize_unique(const SubobjectPoset& p, const SubsetFiltration& f,
                                  unsigned budget = 8);

} // namespace grm
