#pragma once

#include "grm/measure.hpp"
#include "grm/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace grm {

using ElementId = std::size_t;

// Finite poset given by its Hasse diagram. The constructor rejects cover
// graphs that are cyclic, contain duplicate pairs or are not transitively
// reduced; the order relation is the reflexive-transitive closure of the
// covers.
class FinitePoset {
public:
    FinitePoset(std::size_t element_count,
                std::vector<std::pair<ElementId, ElementId>> covers);

    std::size_t size() const { return up_.size(); }
    const std::vector<std::pair<ElementId, ElementId>>& covers() const { return covers_; }
    const std::vector<ElementId>& upper_covers(ElementId x) const;
    const std::vector<ElementId>& lower_covers(ElementId x) const;
    bool is_minimal(ElementId x) const;
    std::vector<ElementId> minimal_elements() const;

    // true iff x <= y
    bool leq(ElementId x, ElementId y) const;

    // all y <= x, ascending by id
    std::vector<ElementId> ideal(ElementId x) const;

private:
    void check_id(ElementId x) const;

    std::vector<std::pair<ElementId, ElementId>> covers_;
    std::vector<std::vector<ElementId>> up_;
    std::vector<std::vector<ElementId>> down_;
    std::size_t words_ = 0;
    // below_[x] is the bitset of elements <= x, including x itself
    std::vector<std::vector<std::uint64_t>> below_;
};

// Positive rational length per element, indexed by element id. Strict
// monotonicity along the order is a property of the pair (poset, assignment)
// and is checked by the operations that need it.
class LengthAssignment {
public:
    explicit LengthAssignment(std::vector<Rational> values);

    const Rational& at(ElementId x) const;
    std::size_t size() const { return values_.size(); }

private:
    std::vector<Rational> values_;
};

// Chain of covers from a minimal element up to its target (the last stage).
struct Filtration {
    std::vector<ElementId> stages;

    ElementId target() const { return stages.back(); }
    friend bool operator==(const Filtration& a, const Filtration& b) = default;
};

// Thrown when exhaustive chain enumeration exceeds its budget.
class SizeGuardError : public std::runtime_error {
public:
    explicit SizeGuardError(const std::string& message) : std::runtime_error(message) {}
};

inline constexpr std::size_t kDefaultChainGuard = std::size_t{1} << 20;

bool order_leq(const FinitePoset& p, ElementId x, ElementId y);

// First cover pair (x, y) with l(x) >= l(y) if the assignment fails to be
// strictly monotone on p, nullopt otherwise.
std::optional<std::pair<ElementId, ElementId>>
find_monotonicity_violation(const FinitePoset& p, const LengthAssignment& l);

// Values of the stages under l; stages must be strictly increasing in l.
Measure chain_measure(const LengthAssignment& l, const std::vector<ElementId>& stages);

// Largest chain value among chains ending at x, computed by the cover
// recursion: take the best of the lower covers and extend by l(x).
Measure l_star(const FinitePoset& p, const LengthAssignment& l, ElementId x);

// Every filtration with target x, sorted by stage sequence. Intended for
// small posets; the count can grow exponentially.
std::vector<Filtration> all_filtrations(const FinitePoset& p, ElementId x);

// All filtrations of x whose chain value equals l_star(p, l, x), found by a
// greedy walk that branches on every tie.
std::vector<Filtration> max_filtrations(const FinitePoset& p, const LengthAssignment& l, ElementId x);

// Exhaustive maximum of chain values over all chains ending at x, not just
// filtrations. Enumeration past `chain_guard` chains throws SizeGuardError.
Measure oracle_l_star(const FinitePoset& p, const LengthAssignment& l, ElementId x,
                      std::size_t chain_guard = kDefaultChainGuard);

} // namespace grm
