#include "grm/thin_rep.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace grm {

DimVector::DimVector(std::size_t vertex_count) : dims_(vertex_count, 0) {}

DimVector DimVector::of_support(const VertexSet& support, std::size_t vertex_count) {
    DimVector d(vertex_count);
    for (std::uint32_t v : support.indices()) d.set(v, 1);
    return d;
}

std::uint32_t DimVector::at(std::uint32_t v) const {
    if (v >= dims_.size()) {
        throw std::invalid_argument("dimension index " + std::to_string(v) + " is out of range");
    }
    return dims_[v];
}

void DimVector::set(std::uint32_t v, std::uint32_t d) {
    if (v >= dims_.size()) {
        throw std::invalid_argument("dimension index " + std::to_string(v) + " is out of range");
    }
    dims_[v] = d;
}

bool DimVector::is_thin() const {
    return std::all_of(dims_.begin(), dims_.end(), [](std::uint32_t d) { return d <= 1; });
}

VertexSet DimVector::support() const {
    std::vector<std::uint32_t> indices;
    for (std::size_t v = 0; v < dims_.size(); ++v) {
        if (dims_[v] > 0) indices.push_back(static_cast<std::uint32_t>(v));
    }
    return VertexSet(std::move(indices));
}

ThinRep::ThinRep(const Quiver& ambient, SupportQuiver support) : support_(std::move(support)) {
    if (&support_.ambient() != &ambient) {
        throw std::invalid_argument("support belongs to a different quiver");
    }
}

ThinRep ThinRep::canonical(const Quiver& ambient, VertexSet vertices) {
    return ThinRep(ambient, SupportQuiver::induced(ambient, std::move(vertices)));
}

ThinRep ThinRep::from_decl(const Quiver& ambient, const ThinRepDecl& decl) {
    std::vector<std::uint32_t> indices;
    indices.reserve(decl.vertices.size());
    for (const std::string& id : decl.vertices) indices.push_back(ambient.vertex_index(id));
    return ThinRep(ambient,
                   SupportQuiver::induced_without(ambient, VertexSet(std::move(indices)),
                                                  decl.zero_arrows));
}

DimVector ThinRep::dim_vector() const {
    return DimVector::of_support(support_.vertices(), ambient().vertex_count());
}

bool is_indecomposable(const ThinRep& r) {
    return r.support().is_connected();
}

namespace {

// union-find cycle test on the undirected support graph
bool has_undirected_cycle(const SupportQuiver& s) {
    std::map<std::uint32_t, std::uint32_t> parent;
    for (std::uint32_t v : s.vertices().indices()) parent[v] = v;
    auto find = [&](std::uint32_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (std::uint32_t a : s.arrow_indices()) {
        const Arrow& arrow = s.ambient().arrows()[a];
        std::uint32_t rs = find(arrow.src);
        std::uint32_t rt = find(arrow.tgt);
        if (rs == rt) return true;
        parent[rs] = rt;
    }
    return false;
}

void require_same_ambient(const ThinRep& a, const ThinRep& b, const char* op) {
    if (&a.ambient() != &b.ambient()) {
        throw std::invalid_argument(std::string(op) + " needs representations of the same quiver");
    }
}

std::vector<std::uint32_t> induced_arrows(const SupportQuiver& m, const VertexSet& x) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t a : m.arrow_indices()) {
        const Arrow& arrow = m.ambient().arrows()[a];
        if (x.contains(arrow.src) && x.contains(arrow.tgt)) out.push_back(a);
    }
    return out;
}

} // namespace

bool iso_equal(const ThinRep& a, const ThinRep& b) {
    require_same_ambient(a, b, "iso_equal");
    for (const ThinRep* r : {&a, &b}) {
        if (has_undirected_cycle(r->support())) {
            throw std::invalid_argument("iso_equal needs forest supports, got an undirected cycle");
        }
    }
    return a.support().vertices() == b.support().vertices() &&
           a.support().arrow_indices() == b.support().arrow_indices();
}

bool embeds(const ThinRep& n, const ThinRep& m) {
    require_same_ambient(n, m, "embeds");
    if (!is_indecomposable(n) || !is_indecomposable(m)) {
        throw std::invalid_argument("embeds needs indecomposable representations");
    }
    if (has_undirected_cycle(n.support())) {
        throw std::invalid_argument("embeds needs a tree support on the candidate subobject");
    }
    return is_subobject_element(m.support(), n.support().vertices()) &&
           n.support().arrow_indices() == induced_arrows(m.support(), n.support().vertices());
}

Rational length_of(const ThinRep& r, const SimpleLengths& l) {
    return set_weight(l, r.support().vertices());
}

Rational length_of(const DimVector& d, const SimpleLengths& l) {
    Rational total(0);
    bool nonzero = false;
    for (std::uint32_t v = 0; v < d.size(); ++v) {
        if (d.at(v) == 0) continue;
        nonzero = true;
        total += Rational(d.at(v)) * l.at(v);
    }
    if (!nonzero) {
        throw std::invalid_argument("length of the zero dimension vector is undefined");
    }
    return total;
}

namespace {

SubobjectPoset poset_of(const ThinRep& m) {
    if (!is_indecomposable(m)) {
        throw std::invalid_argument("representation is decomposable; its support is disconnected");
    }
    return materialize_poset(m.support());
}

} // namespace

Measure gr_measure(const ThinRep& m, const SimpleLengths& l) {
    SubobjectPoset p = poset_of(m);
    return l_star(p.order, p.lengths(l), p.top());
}

std::vector<SupportChain> gr_filtrations(const ThinRep& m, const SimpleLengths& l) {
    SubobjectPoset p = poset_of(m);
    std::vector<SupportChain> out;
    for (const Filtration& f : max_filtrations(p.order, p.lengths(l), p.top())) {
        SupportChain chain;
        chain.reserve(f.stages.size());
        for (ElementId x : f.stages) chain.push_back(p.elements[x]);
        out.push_back(std::move(chain));
    }
    return out;
}

DimVector gr_factor(const ThinRep& m, const VertexSet& x, const VertexSet& y) {
    std::vector<VertexSet> covers = covers_above(m.support(), x);
    if (std::find(covers.begin(), covers.end(), y) == covers.end()) {
        throw std::invalid_argument("gr_factor: " + y.str(m.ambient().vertex_ids()) +
                                    " does not cover " + x.str(m.ambient().vertex_ids()));
    }
    DimVector d(m.ambient().vertex_count());
    for (std::uint32_t v : y.minus(x)) d.set(v, 1);
    return d;
}

Quiver d4_star_quiver() {
    return Quiver("d4", {"1", "2", "3", "4"},
                  {{"a1", "3", "1"}, {"a2", "3", "2"}, {"a3", "3", "4"}});
}

bool d4_limit_holds(const Quiver& star, const SimpleLengths& l) {
    SupportQuiver whole = SupportQuiver::induced(star, VertexSet::full(star.vertex_count()));
    std::vector<std::uint32_t> sinks = whole.sinks();
    std::vector<std::uint32_t> sources = whole.sources();
    if (sources.size() != 1 || sinks.size() + 1 != star.vertex_count() || sinks.size() < 2) {
        throw std::invalid_argument("d4_limit_holds needs a one-source star with two or more sinks");
    }
    std::uint32_t lightest = sinks.front();
    for (std::uint32_t v : sinks) {
        if (l.at(v) < l.at(lightest)) lightest = v;
    }
    VertexSet small_support;
    for (std::uint32_t other : sinks) {
        if (other == lightest) continue;
        VertexSet candidate({lightest, sources.front(), other});
        if (small_support.empty() || candidate < small_support) small_support = candidate;
    }
    Measure full = gr_measure(ThinRep::canonical(star, whole.vertices()), l);
    Measure small = gr_measure(ThinRep::canonical(star, small_support), l);
    return lex_compare(full, small) == std::strong_ordering::less;
}

std::size_t d4_limit_violations(std::size_t samples, std::uint64_t seed) {
    if (samples == 0) {
        throw std::invalid_argument("sample count must be positive");
    }
    Quiver star = d4_star_quiver();
    std::mt19937_64 rng(seed);
    std::size_t violations = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Rational> weights;
        weights.reserve(star.vertex_count());
        for (std::size_t v = 0; v < star.vertex_count(); ++v) {
            weights.push_back(Rational(static_cast<std::int64_t>(rng() % 1000) + 1, 100));
        }
        if (!d4_limit_holds(star, SimpleLengths(std::move(weights)))) ++violations;
    }
    return violations;
}

} // namespace grm
