#pragma once

#include "grm/poset.hpp"
#include "grm/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grm {

struct Arrow {
    std::string id;
    std::uint32_t src = 0;
    std::uint32_t tgt = 0;
};

// Finite quiver without oriented cycles. Vertices carry arbitrary string ids
// and are indexed in sorted id order, so every set-valued result is
// reported in one canonical order.
class Quiver {
public:
    struct ArrowDecl {
        std::string id;
        std::string src;
        std::string tgt;
    };

    Quiver(std::string name, std::vector<std::string> vertex_ids, std::vector<ArrowDecl> arrows);

    const std::string& name() const { return name_; }
    std::size_t vertex_count() const { return vertex_ids_.size(); }
    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::string& vertex_id(std::uint32_t v) const;
    std::optional<std::uint32_t> find_vertex(std::string_view id) const;
    std::uint32_t vertex_index(std::string_view id) const;

    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::optional<std::uint32_t> find_arrow(std::string_view id) const;
    const std::vector<std::uint32_t>& arrows_out(std::uint32_t v) const;
    const std::vector<std::uint32_t>& arrows_in(std::uint32_t v) const;

private:
    std::string name_;
    std::vector<std::string> vertex_ids_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<std::uint32_t>> out_;
    std::vector<std::vector<std::uint32_t>> in_;
};

// Vertex subset in canonical encoding: sorted unique indices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<std::uint32_t> indices);

    static VertexSet full(std::size_t vertex_count);

    bool contains(std::uint32_t v) const;
    bool subset_of(const VertexSet& other) const;
    VertexSet united(const VertexSet& other) const;
    std::vector<std::uint32_t> minus(const VertexSet& other) const;

    const std::vector<std::uint32_t>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }

    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) = default;

    // "{3,4,5}" using the given vertex ids
    std::string str(std::span<const std::string> ids) const;

private:
    std::vector<std::uint32_t> indices_;
};

enum class SupportClass { Tree, CycleAn, Other };

std::string_view to_string(SupportClass c);

// Support of a thin representation: the vertices where it is nonzero plus
// the arrows acting by the identity. Holds a pointer to the ambient quiver,
// which must outlive it.
class SupportQuiver {
public:
    SupportQuiver(const Quiver& ambient, VertexSet vertices, std::vector<std::uint32_t> arrow_indices);

    // every ambient arrow between the chosen vertices
    static SupportQuiver induced(const Quiver& ambient, VertexSet vertices);
    // induced arrows minus the named ones
    static SupportQuiver induced_without(const Quiver& ambient, VertexSet vertices,
                                         std::span<const std::string> zero_arrow_ids);

    const Quiver& ambient() const { return *ambient_; }
    const VertexSet& vertices() const { return vertices_; }
    const std::vector<std::uint32_t>& arrow_indices() const { return arrows_; }
    bool has_arrow(std::uint32_t arrow) const;
    bool is_full() const;
    bool is_connected() const;
    std::vector<std::uint32_t> sinks() const;
    std::vector<std::uint32_t> sources() const;

private:
    const Quiver* ambient_;
    VertexSet vertices_;
    std::vector<std::uint32_t> arrows_;
};

// Tree when the underlying graph is a tree, CycleAn when it is a single
// undirected cycle (two vertices with a double arrow count), Other otherwise.
// The support must be connected.
SupportClass classify_support(const SupportQuiver& s);

// Smallest superset of `start` closed under following arrows forward.
VertexSet forward_closure(const Quiver& q, const VertexSet& start);
VertexSet forward_closure(const SupportQuiver& m, const VertexSet& start);

// Whether x describes a subobject of the thin representation on m: nonempty,
// closed under m's arrows, and connected in the induced subquiver.
bool is_subobject_element(const SupportQuiver& m, const VertexSet& x);

// Sink singletons, ascending by vertex index.
std::vector<VertexSet> minimal_elements(const SupportQuiver& m);

// Elements directly above x in the subobject order: join x with the forward
// closure of one adjacent vertex and keep the inclusion-minimal results.
std::vector<VertexSet> covers_above(const SupportQuiver& m, const VertexSet& x);

// Positive weight per vertex, indexed like the owning quiver.
class WeightFunction {
public:
    explicit WeightFunction(std::vector<Rational> values);

    static WeightFunction ones(std::size_t vertex_count);

    const Rational& at(std::uint32_t v) const;
    void set(std::uint32_t v, const Rational& value);
    std::size_t size() const { return values_.size(); }

    friend bool operator==(const WeightFunction& a, const WeightFunction& b) = default;

private:
    std::vector<Rational> values_;
};

// Total weight of a nonempty vertex set.
Rational set_weight(const WeightFunction& w, const VertexSet& x);

// Subobject poset of a support with its elements materialized. Element ids
// are positions in `elements`, which is sorted by (size, indices), so ids
// ascend along the order.
struct SubobjectPoset {
    std::vector<std::string> universe;
    std::vector<VertexSet> elements;
    FinitePoset order;

    std::optional<ElementId> index_of(const VertexSet& x) const;
    ElementId top() const;
    LengthAssignment lengths(const WeightFunction& w) const;
};

// Builds the subobject poset by walking covers upward from the minimal
// elements. Requires a connected Tree or CycleAn support.
SubobjectPoset materialize_poset(const SupportQuiver& m);

} // namespace grm
