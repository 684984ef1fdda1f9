#pragma once

#include "grm/measure.hpp"
#include "grm/quiver.hpp"
#include "grm/quiver_file.hpp"

#include <cstdint>
#include <vector>

namespace grm {

// Length function on representations, determined by its values on the
// simples; one positive rational per vertex.
using SimpleLengths = WeightFunction;

// Dimension vector with nonnegative entries, indexed by vertex.
class DimVector {
public:
    explicit DimVector(std::size_t vertex_count);

    static DimVector of_support(const VertexSet& support, std::size_t vertex_count);

    std::uint32_t at(std::uint32_t v) const;
    void set(std::uint32_t v, std::uint32_t d);
    std::size_t size() const { return dims_.size(); }

    bool is_thin() const;
    VertexSet support() const;

    friend bool operator==(const DimVector& a, const DimVector& b) = default;

private:
    std::vector<std::uint32_t> dims_;
};

// Thin representation: one-dimensional on its support vertices, identity on
// its support arrows, zero elsewhere. The ambient quiver must outlive it.
class ThinRep {
public:
    ThinRep(const Quiver& ambient, SupportQuiver support);

    // thin representation with every induced arrow acting by the identity
    static ThinRep canonical(const Quiver& ambient, VertexSet vertices);
    static ThinRep from_decl(const Quiver& ambient, const ThinRepDecl& decl);

    const Quiver& ambient() const { return support_.ambient(); }
    const SupportQuiver& support() const { return support_; }
    DimVector dim_vector() const;

private:
    SupportQuiver support_;
};

bool is_indecomposable(const ThinRep& r);

// Isomorphism test for thin representations whose underlying support graphs
// are forests; throws on a support with an undirected cycle.
bool iso_equal(const ThinRep& a, const ThinRep& b);

// Whether n embeds into m. Both must be indecomposable and n must have a
// tree support.
bool embeds(const ThinRep& n, const ThinRep& m);

Rational length_of(const ThinRep& r, const SimpleLengths& l);
Rational length_of(const DimVector& d, const SimpleLengths& l);

using SupportChain = std::vector<VertexSet>;

// Largest chain value over the subobject poset of m, achieved by its
// best filtrations.
Measure gr_measure(const ThinRep& m, const SimpleLengths& l);

// All filtrations of m achieving gr_measure, as chains of supports sorted
// by their stage sequences.
std::vector<SupportChain> gr_filtrations(const ThinRep& m, const SimpleLengths& l);

// Dimension vector of the quotient step y/x for a cover pair x, y in the
// subobject poset of m.
DimVector gr_factor(const ThinRep& m, const VertexSet& x, const VertexSet& y);

// Star with center "3", arrows to "1", "2" and "4".
Quiver d4_star_quiver();

// On a one-source star: let j be the lightest sink (ties to the smallest
// id), N the full thin representation and N' the thin representation on the
// source, j and the next sink (smallest such support). True when
// gr_measure(N) ranks strictly below gr_measure(N').
bool d4_limit_holds(const Quiver& star, const SimpleLengths& l);

// Counts failures of d4_limit_holds over `samples` weight functions on the
// d4 star, drawn per vertex as (1..1000)/100 from a fixed-seed generator.
std::size_t d4_limit_violations(std::size_t samples, std::uint64_t seed);

} // namespace grm
