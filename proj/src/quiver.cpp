#include "grm/quiver.hpp"

#include "grm/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace grm {

Quiver::Quiver(std::string name, std::vector<std::string> vertex_ids,
               std::vector<ArrowDecl> arrows)
    : name_(std::move(name)), vertex_ids_(std::move(vertex_ids)) {
    if (vertex_ids_.empty()) {
        throw std::invalid_argument("quiver '" + name_ + "' has no vertices");
    }
    std::sort(vertex_ids_.begin(), vertex_ids_.end());
    for (std::size_t i = 1; i < vertex_ids_.size(); ++i) {
        if (vertex_ids_[i - 1] == vertex_ids_[i]) {
            throw std::invalid_argument("duplicate vertex id '" + vertex_ids_[i] + "'");
        }
    }

    out_.resize(vertex_ids_.size());
    in_.resize(vertex_ids_.size());
    std::set<std::string_view> arrow_ids;
    for (const auto& decl : arrows) {
        if (!arrow_ids.insert(decl.id).second) {
            throw std::invalid_argument("duplicate arrow id '" + decl.id + "'");
        }
        auto src = find_vertex(decl.src);
        auto tgt = find_vertex(decl.tgt);
        if (!src) {
            throw std::invalid_argument("arrow '" + decl.id + "' references unknown vertex '" +
                                        decl.src + "'");
        }
        if (!tgt) {
            throw std::invalid_argument("arrow '" + decl.id + "' references unknown vertex '" +
                                        decl.tgt + "'");
        }
        std::uint32_t index = static_cast<std::uint32_t>(arrows_.size());
        arrows_.push_back(Arrow{decl.id, *src, *tgt});
        out_[*src].push_back(index);
        in_[*tgt].push_back(index);
    }

    // Kahn's algorithm; leftovers witness an oriented cycle
    std::vector<std::size_t> indegree(vertex_ids_.size());
    for (std::size_t v = 0; v < vertex_ids_.size(); ++v) indegree[v] = in_[v].size();
    std::deque<std::uint32_t> queue;
    for (std::size_t v = 0; v < vertex_ids_.size(); ++v) {
        if (indegree[v] == 0) queue.push_back(static_cast<std::uint32_t>(v));
    }
    std::size_t seen = 0;
    while (!queue.empty()) {
        std::uint32_t v = queue.front();
        queue.pop_front();
        ++seen;
        for (std::uint32_t a : out_[v]) {
            if (--indegree[arrows_[a].tgt] == 0) queue.push_back(arrows_[a].tgt);
        }
    }
    if (seen != vertex_ids_.size()) {
        // every leftover vertex keeps an incoming arrow from a leftover vertex,
        // so walking predecessors must revisit one
        std::uint32_t start = 0;
        while (indegree[start] == 0) ++start;
        std::vector<std::uint32_t> walk{start};
        std::vector<char> visited(vertex_ids_.size(), 0);
        visited[start] = 1;
        std::uint32_t at = start;
        for (;;) {
            std::uint32_t prev = at;
            for (std::uint32_t a : in_[at]) {
                if (indegree[arrows_[a].src] > 0) {
                    prev = arrows_[a].src;
                    break;
                }
            }
            if (visited[prev]) {
                walk.push_back(prev);
                break;
            }
            visited[prev] = 1;
            walk.push_back(prev);
            at = prev;
        }
        auto entry = std::find(walk.begin(), walk.end(), walk.back());
        std::string cycle;
        for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
            cycle += vertex_ids_[*it];
            if (*it == *entry && it != walk.rbegin()) break;
            cycle += " -> ";
        }
        throw std::invalid_argument("oriented cycle: " + cycle);
    }
}

const std::string& Quiver::vertex_id(std::uint32_t v) const {
    if (v >= vertex_ids_.size()) {
        throw std::invalid_argument("vertex index " + std::to_string(v) + " is out of range");
    }
    return vertex_ids_[v];
}

std::optional<std::uint32_t> Quiver::find_vertex(std::string_view id) const {
    auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), id);
    if (it == vertex_ids_.end() || *it != id) return std::nullopt;
    return static_cast<std::uint32_t>(it - vertex_ids_.begin());
}

std::uint32_t Quiver::vertex_index(std::string_view id) const {
    auto v = find_vertex(id);
    if (!v) throw std::invalid_argument("unknown vertex '" + std::string(id) + "'");
    return *v;
}

std::optional<std::uint32_t> Quiver::find_arrow(std::string_view id) const {
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
        if (arrows_[a].id == id) return static_cast<std::uint32_t>(a);
    }
    return std::nullopt;
}

const std::vector<std::uint32_t>& Quiver::arrows_out(std::uint32_t v) const {
    if (v >= out_.size()) {
        throw std::invalid_argument("vertex index " + std::to_string(v) + " is out of range");
    }
    return out_[v];
}

const std::vector<std::uint32_t>& Quiver::arrows_in(std::uint32_t v) const {
    if (v >= in_.size()) {
        throw std::invalid_argument("vertex index " + std::to_string(v) + " is out of range");
    }
    return in_[v];
}

VertexSet::VertexSet(std::vector<std::uint32_t> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

VertexSet VertexSet::full(std::size_t vertex_count) {
    std::vector<std::uint32_t> all(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) all[v] = static_cast<std::uint32_t>(v);
    return VertexSet(std::move(all));
}

bool VertexSet::contains(std::uint32_t v) const {
    return std::binary_search(indices_.begin(), indices_.end(), v);
}

bool VertexSet::subset_of(const VertexSet& other) const {
    return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                         indices_.end());
}

VertexSet VertexSet::united(const VertexSet& other) const {
    std::vector<std::uint32_t> merged;
    merged.reserve(indices_.size() + other.indices_.size());
    std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                   std::back_inserter(merged));
    VertexSet out;
    out.indices_ = std::move(merged);
    return out;
}

std::vector<std::uint32_t> VertexSet::minus(const VertexSet& other) const {
    std::vector<std::uint32_t> diff;
    std::set_difference(indices_.begin(), indices_.end(), other.indices_.begin(),
                        other.indices_.end(), std::back_inserter(diff));
    return diff;
}

std::string VertexSet::str(std::span<const std::string> ids) const {
    std::string out = "{";
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i > 0) out += ",";
        out += ids[indices_[i]];
    }
    out += "}";
    return out;
}

std::string_view to_string(SupportClass c) {
    switch (c) {
        case SupportClass::Tree: return "Tree";
        case SupportClass::CycleAn: return "CycleAn";
        case SupportClass::Other: return "Other";
    }
    return "Other";
}

SupportQuiver::SupportQuiver(const Quiver& ambient, VertexSet vertices,
                             std::vector<std::uint32_t> arrow_indices)
    : ambient_(&ambient), vertices_(std::move(vertices)), arrows_(std::move(arrow_indices)) {
    if (vertices_.empty()) {
        throw std::invalid_argument("support has no vertices");
    }
    if (!vertices_.indices().empty() &&
        vertices_.indices().back() >= ambient.vertex_count()) {
        throw std::invalid_argument("support vertex index out of range");
    }
    std::sort(arrows_.begin(), arrows_.end());
    arrows_.erase(std::unique(arrows_.begin(), arrows_.end()), arrows_.end());
    for (std::uint32_t a : arrows_) {
        if (a >= ambient.arrows().size()) {
            throw std::invalid_argument("support arrow index out of range");
        }
        const Arrow& arrow = ambient.arrows()[a];
        if (!vertices_.contains(arrow.src) || !vertices_.contains(arrow.tgt)) {
            throw std::invalid_argument("support arrow '" + arrow.id +
                                        "' leaves the support vertices");
        }
    }
}

SupportQuiver SupportQuiver::induced(const Quiver& ambient, VertexSet vertices) {
    std::vector<std::uint32_t> arrows;
    for (std::size_t a = 0; a < ambient.arrows().size(); ++a) {
        const Arrow& arrow = ambient.arrows()[a];
        if (vertices.contains(arrow.src) && vertices.contains(arrow.tgt)) {
            arrows.push_back(static_cast<std::uint32_t>(a));
        }
    }
    return SupportQuiver(ambient, std::move(vertices), std::move(arrows));
}

SupportQuiver SupportQuiver::induced_without(const Quiver& ambient, VertexSet vertices,
                                             std::span<const std::string> zero_arrow_ids) {
    SupportQuiver full = induced(ambient, std::move(vertices));
    std::vector<std::uint32_t> arrows = full.arrows_;
    for (const std::string& id : zero_arrow_ids) {
        auto a = ambient.find_arrow(id);
        if (!a) throw std::invalid_argument("unknown arrow '" + id + "'");
        auto it = std::find(arrows.begin(), arrows.end(), *a);
        if (it == arrows.end()) {
            throw std::invalid_argument("arrow '" + id +
                                        "' is not induced by the support vertices");
        }
        arrows.erase(it);
    }
    return SupportQuiver(ambient, full.vertices_, std::move(arrows));
}

bool SupportQuiver::has_arrow(std::uint32_t arrow) const {
    return std::binary_search(arrows_.begin(), arrows_.end(), arrow);
}

bool SupportQuiver::is_full() const {
    std::size_t induced_count = 0;
    for (const Arrow& arrow : ambient_->arrows()) {
        if (vertices_.contains(arrow.src) && vertices_.contains(arrow.tgt)) ++induced_count;
    }
    return arrows_.size() == induced_count;
}

bool SupportQuiver::is_connected() const {
    const auto& verts = vertices_.indices();
    std::map<std::uint32_t, std::vector<std::uint32_t>> adj;
    for (std::uint32_t v : verts) adj[v];
    for (std::uint32_t a : arrows_) {
        const Arrow& arrow = ambient_->arrows()[a];
        adj[arrow.src].push_back(arrow.tgt);
        adj[arrow.tgt].push_back(arrow.src);
    }
    std::set<std::uint32_t> seen{verts.front()};
    std::deque<std::uint32_t> queue{verts.front()};
    while (!queue.empty()) {
        std::uint32_t v = queue.front();
        queue.pop_front();
        for (std::uint32_t u : adj[v]) {
            if (seen.insert(u).second) queue.push_back(u);
        }
    }
    return seen.size() == verts.size();
}

std::vector<std::uint32_t> SupportQuiver::sinks() const {
    std::set<std::uint32_t> has_out;
    for (std::uint32_t a : arrows_) has_out.insert(ambient_->arrows()[a].src);
    std::vector<std::uint32_t> out;
    for (std::uint32_t v : vertices_.indices()) {
        if (!has_out.count(v)) out.push_back(v);
    }
    return out;
}

std::vector<std::uint32_t> SupportQuiver::sources() const {
    std::set<std::uint32_t> has_in;
    for (std::uint32_t a : arrows_) has_in.insert(ambient_->arrows()[a].tgt);
    std::vector<std::uint32_t> out;
    for (std::uint32_t v : vertices_.indices()) {
        if (!has_in.count(v)) out.push_back(v);
    }
    return out;
}

SupportClass classify_support(const SupportQuiver& s) {
    if (!s.is_connected()) {
        throw std::invalid_argument("support is disconnected");
    }
    std::size_t n = s.vertices().size();
    std::size_t e = s.arrow_indices().size();
    if (e == n - 1) return SupportClass::Tree;
    std::map<std::uint32_t, std::size_t> degree;
    for (std::uint32_t a : s.arrow_indices()) {
        ++degree[s.ambient().arrows()[a].src];
        ++degree[s.ambient().arrows()[a].tgt];
    }
    if (n >= 2) {
        bool all_two = true;
        for (std::uint32_t v : s.vertices().indices()) {
            if (degree[v] != 2) all_two = false;
        }
        if (all_two) return SupportClass::CycleAn;
    }
    return SupportClass::Other;
}

VertexSet forward_closure(const Quiver& q, const VertexSet& start) {
    std::set<std::uint32_t> closed(start.indices().begin(), start.indices().end());
    std::deque<std::uint32_t> queue(start.indices().begin(), start.indices().end());
    while (!queue.empty()) {
        std::uint32_t v = queue.front();
        queue.pop_front();
        for (std::uint32_t a : q.arrows_out(v)) {
            std::uint32_t t = q.arrows()[a].tgt;
            if (closed.insert(t).second) queue.push_back(t);
        }
    }
    return VertexSet(std::vector<std::uint32_t>(closed.begin(), closed.end()));
}

VertexSet forward_closure(const SupportQuiver& m, const VertexSet& start) {
    if (!start.subset_of(m.vertices())) {
        throw std::invalid_argument("closure start is not within the support");
    }
    std::set<std::uint32_t> closed(start.indices().begin(), start.indices().end());
    std::deque<std::uint32_t> queue(start.indices().begin(), start.indices().end());
    while (!queue.empty()) {
        std::uint32_t v = queue.front();
        queue.pop_front();
        for (std::uint32_t a : m.arrow_indices()) {
            const Arrow& arrow = m.ambient().arrows()[a];
            if (arrow.src != v) continue;
            if (closed.insert(arrow.tgt).second) queue.push_back(arrow.tgt);
        }
    }
    return VertexSet(std::vector<std::uint32_t>(closed.begin(), closed.end()));
}

bool is_subobject_element(const SupportQuiver& m, const VertexSet& x) {
    if (x.empty() || !x.subset_of(m.vertices())) return false;
    std::map<std::uint32_t, std::vector<std::uint32_t>> adj;
    for (std::uint32_t v : x.indices()) adj[v];
    for (std::uint32_t a : m.arrow_indices()) {
        const Arrow& arrow = m.ambient().arrows()[a];
        if (!x.contains(arrow.src)) continue;
        if (!x.contains(arrow.tgt)) return false;
        adj[arrow.src].push_back(arrow.tgt);
        adj[arrow.tgt].push_back(arrow.src);
    }
    // connectivity of the induced subquiver
    std::set<std::uint32_t> seen{x.indices().front()};
    std::deque<std::uint32_t> queue{x.indices().front()};
    while (!queue.empty()) {
        std::uint32_t v = queue.front();
        queue.pop_front();
        for (std::uint32_t u : adj[v]) {
            if (seen.insert(u).second) queue.push_back(u);
        }
    }
    return seen.size() == x.size();
}

std::vector<VertexSet> minimal_elements(const SupportQuiver& m) {
    std::vector<VertexSet> out;
    for (std::uint32_t v : m.sinks()) out.push_back(VertexSet({v}));
    return out;
}

std::vector<VertexSet> covers_above(const SupportQuiver& m, const VertexSet& x) {
    if (!is_subobject_element(m, x)) {
        throw std::invalid_argument("covers_above: " + x.str(m.ambient().vertex_ids()) +
                                    " is not a subobject element");
    }
    if (x == m.vertices()) {
        throw std::invalid_argument("covers_above: the top element has no covers");
    }
    std::set<std::uint32_t> adjacent;
    for (std::uint32_t a : m.arrow_indices()) {
        const Arrow& arrow = m.ambient().arrows()[a];
        if (x.contains(arrow.src) && !x.contains(arrow.tgt)) adjacent.insert(arrow.tgt);
        if (x.contains(arrow.tgt) && !x.contains(arrow.src)) adjacent.insert(arrow.src);
    }
    std::vector<VertexSet> candidates;
    for (std::uint32_t v : adjacent) {
        VertexSet cand = x.united(forward_closure(m, VertexSet({v})));
        if (std::find(candidates.begin(), candidates.end(), cand) == candidates.end()) {
            candidates.push_back(std::move(cand));
        }
    }
    std::vector<VertexSet> out;
    for (const VertexSet& cand : candidates) {
        bool minimal = true;
        for (const VertexSet& other : candidates) {
            if (other != cand && other.subset_of(cand)) minimal = false;
        }
        if (minimal) out.push_back(cand);
    }
    std::sort(out.begin(), out.end());
    return out;
}

WeightFunction::WeightFunction(std::vector<Rational> values) : values_(std::move(values)) {
    for (std::size_t v = 0; v < values_.size(); ++v) {
        if (!values_[v].is_positive()) {
            throw std::invalid_argument("weight of vertex index " + std::to_string(v) +
                                        " must be positive, got " + values_[v].str());
        }
    }
}

WeightFunction WeightFunction::ones(std::size_t vertex_count) {
    return WeightFunction(std::vector<Rational>(vertex_count, Rational(1)));
}

const Rational& WeightFunction::at(std::uint32_t v) const {
    if (v >= values_.size()) {
        throw std::invalid_argument("no weight for vertex index " + std::to_string(v));
    }
    return values_[v];
}

void WeightFunction::set(std::uint32_t v, const Rational& value) {
    if (v >= values_.size()) {
        throw std::invalid_argument("no weight for vertex index " + std::to_string(v));
    }
    if (!value.is_positive()) {
        throw std::invalid_argument("weight of vertex index " + std::to_string(v) +
                                    " must be positive, got " + value.str());
    }
    values_[v] = value;
}

Rational set_weight(const WeightFunction& w, const VertexSet& x) {
    if (x.empty()) {
        throw std::invalid_argument("weight of the empty vertex set is undefined");
    }
    Rational total(0);
    for (std::uint32_t v : x.indices()) total += w.at(v);
    return total;
}

namespace {

bool size_lex_less(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

} // namespace

std::optional<ElementId> SubobjectPoset::index_of(const VertexSet& x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x, size_lex_less);
    if (it == elements.end() || *it != x) return std::nullopt;
    return static_cast<ElementId>(it - elements.begin());
}

ElementId SubobjectPoset::top() const {
    if (elements.empty()) {
        throw std::logic_error("subobject poset has no elements");
    }
    return elements.size() - 1;
}

LengthAssignment SubobjectPoset::lengths(const WeightFunction& w) const {
    std::vector<Rational> values;
    values.reserve(elements.size());
    for (const VertexSet& x : elements) values.push_back(set_weight(w, x));
    return LengthAssignment(std::move(values));
}

SubobjectPoset materialize_poset(const SupportQuiver& m) {
    if (!m.is_connected()) {
        throw std::invalid_argument("support is disconnected");
    }
    if (classify_support(m) == SupportClass::Other) {
        throw UnsupportedSupportError("subobject poset needs a Tree or CycleAn support, got Other");
    }

    std::set<VertexSet> found;
    std::deque<VertexSet> queue;
    for (VertexSet& x : minimal_elements(m)) {
        if (found.insert(x).second) queue.push_back(std::move(x));
    }
    std::vector<std::pair<VertexSet, VertexSet>> cover_sets;
    while (!queue.empty()) {
        VertexSet x = std::move(queue.front());
        queue.pop_front();
        if (x == m.vertices()) continue;
        for (VertexSet& y : covers_above(m, x)) {
            cover_sets.emplace_back(x, y);
            if (found.insert(y).second) queue.push_back(std::move(y));
        }
    }

    SubobjectPoset out{m.ambient().vertex_ids(),
                       std::vector<VertexSet>(found.begin(), found.end()),
                       FinitePoset(0, {})};
    std::sort(out.elements.begin(), out.elements.end(), size_lex_less);
    std::vector<std::pair<ElementId, ElementId>> covers;
    covers.reserve(cover_sets.size());
    for (const auto& [lo, hi] : cover_sets) {
        covers.emplace_back(*out.index_of(lo), *out.index_of(hi));
    }
    out.order = FinitePoset(out.elements.size(), std::move(covers));
    return out;
}

} // namespace grm
