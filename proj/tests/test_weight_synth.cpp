#include "grm/weight_synth.hpp"

#include "grm/quiver_file.hpp"
#include "grm/thin_rep.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

#include <string>
#include <vector>

using namespace grm;
using grm::testing::random_cycle_quiver;
using grm::testing::random_tree_quiver;
using grm::testing::Rng;

namespace {

const std::string kFixtures = GRM_FIXTURE_DIR;

VertexSet verts(const Quiver& q, std::initializer_list<const char*> ids) {
    std::vector<std::uint32_t> indices;
    for (const char* id : ids) indices.push_back(q.vertex_index(id));
    return VertexSet(std::move(indices));
}

struct SubCase {
    QuiverFile file;
    SubobjectPoset poset;
};

// unit-weight path with the representation on {3,4,5,6}
SubCase sub_case() {
    QuiverFile file = load_quiver_file(kFixtures + "/example_sub.quiver");
    ThinRep m = ThinRep::from_decl(file.quiver, file.rep("M"));
    SubobjectPoset p = materialize_poset(m.support());
    return SubCase{std::move(file), std::move(p)};
}

WeightFunction weights_of(std::initializer_list<std::int64_t> nums) {
    std::vector<Rational> values;
    for (std::int64_t n : nums) values.push_back(Rational(n));
    return WeightFunction(std::move(values));
}

} // namespace

TEST_CASE("parse_filtration splits stages and vertices") {
    std::vector<std::string> universe{"1", "2", "3", "4", "5", "6"};
    SubsetFiltration f = parse_filtration("3 | 3,4,5 | 3,4,5,6", universe);
    REQUIRE(f.stages.size() == 3);
    CHECK(f.stages[0] == VertexSet({2}));
    CHECK(f.stages[1] == VertexSet({2, 3, 4}));
    CHECK(f.stages[2] == VertexSet({2, 3, 4, 5}));
    CHECK(parse_filtration("  5  ", universe).stages ==
          std::vector<VertexSet>{VertexSet({4})});

    CHECK_THROWS_WITH_AS(parse_filtration("", universe), "empty filtration stage",
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_filtration("3 | | 5", universe), std::invalid_argument);
    CHECK_THROWS_AS(parse_filtration("3,,4", universe), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_filtration("9", universe), "unknown vertex '9' in filtration",
                         std::invalid_argument);
}

TEST_CASE("resolve_filtration checks shape against the poset") {
    auto [file, p] = sub_case();
    const Quiver& q = file.quiver;

    SubsetFiltration good{{verts(q, {"3"}), verts(q, {"3", "4", "5"}),
                           verts(q, {"3", "4", "5", "6"})}};
    std::vector<ElementId> ids = resolve_filtration(p, good);
    CHECK(ids == std::vector<ElementId>{0, 3, 4});

    CHECK_THROWS_WITH_AS(resolve_filtration(p, SubsetFiltration{}), "empty filtration",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(resolve_filtration(p, SubsetFiltration{{verts(q, {"4"})}}),
                         "stage {4} is not a subobject element", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        resolve_filtration(p, SubsetFiltration{{verts(q, {"3", "4", "5"})}}),
        "first stage {3,4,5} is not a minimal element", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        resolve_filtration(
            p, SubsetFiltration{{verts(q, {"3"}), verts(q, {"3", "4", "5", "6"})}}),
        "stage {3,4,5,6} does not cover stage {3}", std::invalid_argument);
}

TEST_CASE("synthesize reproduces the worked path example") {
    auto [file, p] = sub_case();
    const Quiver& q = file.quiver;
    SubsetFiltration f{{verts(q, {"3"}), verts(q, {"3", "4", "5"}),
                        verts(q, {"3", "4", "5", "6"})}};

    SynthesisResult r = synthesize(p, f);
    CHECK(r.weights == weights_of({1, 1, 1, 2, 2, 6}));
    CHECK(r.stage_constants == std::vector<Rational>{Rational(2), Rational(6)});
    CHECK(r.unique == Uniqueness::Unknown);
    CHECK(verify_filtration(p, f, r.weights).is_gr);
    // the same weights given by hand verify as well
    CHECK(verify_filtration(p, f, weights_of({1, 1, 1, 2, 2, 6})).is_gr);

    SubsetFiltration single{{verts(q, {"5"})}};
    SynthesisResult s = synthesize(p, single);
    CHECK(s.weights == WeightFunction::ones(6));
    CHECK(s.stage_constants.empty());
}

TEST_CASE("verify_filtration answers with a better filtration on failure") {
    QuiverFile file = load_quiver_file(kFixtures + "/example_path.quiver");
    const Quiver& q = file.quiver;
    SubobjectPoset p =
        materialize_poset(ThinRep::from_decl(q, file.rep("Q")).support());

    SubsetFiltration best{{verts(q, {"3"}), verts(q, {"3", "4", "5"}),
                           verts(q, {"3", "4", "5", "6"}), VertexSet::full(6)}};
    VerifyOutcome ok = verify_filtration(p, best, file.weights);
    CHECK(ok.is_gr);
    CHECK(ok.witness.empty());

    SubsetFiltration losing{{verts(q, {"3"}), verts(q, {"1", "2", "3"}),
                             verts(q, {"1", "2", "3", "4", "5"}), VertexSet::full(6)}};
    VerifyOutcome bad = verify_filtration(p, losing, file.weights);
    CHECK_FALSE(bad.is_gr);
    CHECK(bad.witness == best.stages);
    CHECK(bad.witness_measure ==
          Measure({Rational(1, 2), Rational(5, 2), Rational(7, 2), Rational(11, 2)}));
}

TEST_CASE("uniqueness compares against every filtration of the same length") {
    auto [file, p] = sub_case();
    const Quiver& q = file.quiver;
    SubsetFiltration f{{verts(q, {"3"}), verts(q, {"3", "4", "5"}),
                        verts(q, {"3", "4", "5", "6"})}};

    CHECK(filtration_uniqueness(p, f, weights_of({1, 1, 1, 2, 2, 6})) == Uniqueness::Unique);
    // dropping w(5) to 1 lets the start at {5} reach the same values
    CHECK(filtration_uniqueness(p, f, weights_of({1, 1, 1, 2, 1, 6})) ==
          Uniqueness::NotUnique);

    SubsetFiltration other{{verts(q, {"5"}), verts(q, {"3", "4", "5"}),
                            verts(q, {"3", "4", "5", "6"})}};
    CHECK(filtration_uniqueness(p, other, weights_of({1, 1, 1, 2, 1, 6})) ==
          Uniqueness::NotUnique);

    // a single stage is unique exactly when its sink is strictly lightest
    SubsetFiltration start5{{verts(q, {"5"})}};
    CHECK(filtration_uniqueness(p, start5, file.weights) == Uniqueness::NotUnique);
    WeightFunction cheap5(std::vector<Rational>{Rational(1), Rational(1), Rational(1),
                                                Rational(1), Rational(1, 2), Rational(1)});
    CHECK(filtration_uniqueness(p, start5, cheap5) == Uniqueness::Unique);
    SubsetFiltration start3{{verts(q, {"3"})}};
    CHECK(filtration_uniqueness(p, start3, cheap5) == Uniqueness::NotUnique);
}

TEST_CASE("synthesize_unique reports the verdict for the synthesized weights") {
    auto [file, p] = sub_case();
    const Quiver& q = file.quiver;

    SubsetFiltration f{{verts(q, {"3"}), verts(q, {"3", "4", "5"}),
                        verts(q, {"3", "4", "5", "6"})}};
    SynthesisResult r = synthesize_unique(p, f);
    CHECK(r.unique == Uniqueness::Unique);
    CHECK(r.weights == weights_of({1, 1, 1, 2, 2, 6}));

    // both sinks weigh 1 under synthesis, so a one-stage prefix stays tied
    SubsetFiltration single{{verts(q, {"5"})}};
    SynthesisResult s = synthesize_unique(p, single);
    CHECK(s.unique == Uniqueness::NotUnique);
    CHECK(s.weights == WeightFunction::ones(6));

    CHECK_THROWS_WITH_AS(synthesize_unique(p, f, 0), "perturbation budget must be positive",
                         std::invalid_argument);
}

TEST_CASE("synthesized prefixes stay best for their own targets") {
    auto [file, p] = sub_case();
    const Quiver& q = file.quiver;
    SubsetFiltration f{{verts(q, {"5"}), verts(q, {"5", "6"}),
                        verts(q, {"3", "4", "5", "6"})}};
    SynthesisResult r = synthesize(p, f);
    for (std::size_t n = 1; n <= f.stages.size(); ++n) {
        SubsetFiltration prefix{{f.stages.begin(), f.stages.begin() + n}};
        CHECK(verify_filtration(p, prefix, r.weights).is_gr);
    }
}

TEST_CASE("weights outside the target never change the verdict") {
    auto [file, p] = sub_case();
    const Quiver& q = file.quiver;
    SubsetFiltration f{{verts(q, {"3"}), verts(q, {"3", "4", "5"})}};
    SynthesisResult r = synthesize(p, f);
    CHECK(verify_filtration(p, f, r.weights).is_gr);

    SubsetFiltration losing{{verts(q, {"5"}), verts(q, {"3", "4", "5"})}};
    CHECK_FALSE(verify_filtration(p, losing, r.weights).is_gr);

    for (std::int64_t outside : {2, 17, 1000}) {
        WeightFunction w = r.weights;
        w.set(q.vertex_index("6"), Rational(outside));
        w.set(q.vertex_index("1"), Rational(outside, 7));
        CHECK(verify_filtration(p, f, w).is_gr);
        CHECK_FALSE(verify_filtration(p, losing, w).is_gr);
    }
}

TEST_CASE("every synthesized filtration passes verification") {
    Rng rng(47);
    std::size_t checked = 0;
    for (int round = 0; round < 25; ++round) {
        std::size_t n = static_cast<std::size_t>(rng.pick(1, 8));
        Quiver q = rng.coin() && n >= 3 ? random_cycle_quiver(rng, n)
                                        : random_tree_quiver(rng, n);
        SupportQuiver whole = SupportQuiver::induced(q, VertexSet::full(n));
        SubobjectPoset p = materialize_poset(whole);
        for (ElementId x = 0; x < p.elements.size(); ++x) {
            for (const Filtration& g : all_filtrations(p.order, x)) {
                SubsetFiltration f;
                for (ElementId id : g.stages) f.stages.push_back(p.elements[id]);
                SynthesisResult r = synthesize(p, f);
                CHECK(verify_filtration(p, f, r.weights).is_gr);
                // constants climb and always clear the stage below
                for (std::size_t i = 0; i < r.stage_constants.size(); ++i) {
                    CHECK(r.stage_constants[i] ==
                          set_weight(r.weights, f.stages[i]) + Rational(1));
                    if (i > 0) CHECK(r.stage_constants[i - 1] < r.stage_constants[i]);
                }
                ++checked;
                if (checked >= 400) return;
            }
        }
    }
    CHECK(checked > 50);
}
