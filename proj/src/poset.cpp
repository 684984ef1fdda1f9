#include "grm/poset.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace grm {

namespace {

std::string cover_str(ElementId lo, ElementId hi) {
    return "(" + std::to_string(lo) + ", " + std::to_string(hi) + ")";
}

} // namespace

FinitePoset::FinitePoset(std::size_t element_count,
                         std::vector<std::pair<ElementId, ElementId>> covers)
    : covers_(std::move(covers)), up_(element_count), down_(element_count) {
    for (const auto& [lo, hi] : covers_) {
        if (lo >= element_count || hi >= element_count) {
            throw std::invalid_argument("cover " + cover_str(lo, hi) + " is out of range");
        }
        if (lo == hi) {
            throw std::invalid_argument("cover " + cover_str(lo, hi) + " relates an element to itself");
        }
        up_[lo].push_back(hi);
        down_[hi].push_back(lo);
    }
    for (std::size_t x = 0; x < element_count; ++x) {
        std::sort(up_[x].begin(), up_[x].end());
        std::sort(down_[x].begin(), down_[x].end());
        if (std::adjacent_find(up_[x].begin(), up_[x].end()) != up_[x].end()) {
            throw std::invalid_argument("duplicate cover above element " + std::to_string(x));
        }
    }

    // topological order of the cover graph; a shortfall means a cycle
    std::vector<std::size_t> indegree(element_count);
    for (std::size_t x = 0; x < element_count; ++x) indegree[x] = down_[x].size();
    std::deque<ElementId> queue;
    for (std::size_t x = 0; x < element_count; ++x) {
        if (indegree[x] == 0) queue.push_back(x);
    }
    std::vector<ElementId> topo;
    topo.reserve(element_count);
    while (!queue.empty()) {
        ElementId x = queue.front();
        queue.pop_front();
        topo.push_back(x);
        for (ElementId y : up_[x]) {
            if (--indegree[y] == 0) queue.push_back(y);
        }
    }
    if (topo.size() != element_count) {
        throw std::invalid_argument("cover graph contains a cycle");
    }

    words_ = (element_count + 63) / 64;
    below_.assign(element_count, std::vector<std::uint64_t>(words_, 0));
    for (ElementId x : topo) {
        below_[x][x / 64] |= std::uint64_t{1} << (x % 64);
        for (ElementId y : down_[x]) {
            for (std::size_t w = 0; w < words_; ++w) below_[x][w] |= below_[y][w];
        }
    }

    // transitive reduction: no declared cover may be implied by another
    for (std::size_t x = 0; x < element_count; ++x) {
        const auto& d = down_[x];
        for (std::size_t i = 0; i < d.size(); ++i) {
            for (std::size_t j = 0; j < d.size(); ++j) {
                if (i != j && leq(d[i], d[j])) {
                    throw std::invalid_argument("cover " + cover_str(d[i], x) +
                                                " is implied by " + cover_str(d[j], x));
                }
            }
        }
    }
}

void FinitePoset::check_id(ElementId x) const {
    if (x >= up_.size()) {
        throw std::invalid_argument("unknown element id " + std::to_string(x));
    }
}

const std::vector<ElementId>& FinitePoset::upper_covers(ElementId x) const {
    check_id(x);
    return up_[x];
}

const std::vector<ElementId>& FinitePoset::lower_covers(ElementId x) const {
    check_id(x);
    return down_[x];
}

bool FinitePoset::is_minimal(ElementId x) const {
    check_id(x);
    return down_[x].empty();
}

std::vector<ElementId> FinitePoset::minimal_elements() const {
    std::vector<ElementId> out;
    for (std::size_t x = 0; x < up_.size(); ++x) {
        if (down_[x].empty()) out.push_back(x);
    }
    return out;
}

bool FinitePoset::leq(ElementId x, ElementId y) const {
    check_id(x);
    check_id(y);
    return (below_[y][x / 64] >> (x % 64)) & 1;
}

std::vector<ElementId> FinitePoset::ideal(ElementId x) const {
    check_id(x);
    std::vector<ElementId> out;
    for (std::size_t y = 0; y < up_.size(); ++y) {
        if ((below_[x][y / 64] >> (y % 64)) & 1) out.push_back(y);
    }
    return out;
}

LengthAssignment::LengthAssignment(std::vector<Rational> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!values_[i].is_positive()) {
            throw std::invalid_argument("length of element " + std::to_string(i) +
                                        " must be positive, got " + values_[i].str());
        }
    }
}

const Rational& LengthAssignment::at(ElementId x) const {
    if (x >= values_.size()) {
        throw std::invalid_argument("no length for element id " + std::to_string(x));
    }
    return values_[x];
}

bool order_leq(const FinitePoset& p, ElementId x, ElementId y) {
    return p.leq(x, y);
}

std::optional<std::pair<ElementId, ElementId>>
find_monotonicity_violation(const FinitePoset& p, const LengthAssignment& l) {
    for (const auto& [lo, hi] : p.covers()) {
        if (!(l.at(lo) < l.at(hi))) return std::make_pair(lo, hi);
    }
    return std::nullopt;
}

Measure chain_measure(const LengthAssignment& l, const std::vector<ElementId>& stages) {
    std::vector<Rational> values;
    values.reserve(stages.size());
    for (ElementId x : stages) values.push_back(l.at(x));
    return Measure(std::move(values));
}

namespace {

void require_valid(const FinitePoset& p, const LengthAssignment& l, ElementId x) {
    if (l.size() != p.size()) {
        throw std::invalid_argument("length assignment covers " + std::to_string(l.size()) +
                                    " elements, poset has " + std::to_string(p.size()));
    }
    if (x >= p.size()) {
        throw std::invalid_argument("unknown element id " + std::to_string(x));
    }
    if (auto v = find_monotonicity_violation(p, l)) {
        throw std::invalid_argument("length assignment is not strictly monotone at cover " +
                                    cover_str(v->first, v->second));
    }
}

const Measure& l_star_memo(const FinitePoset& p, const LengthAssignment& l, ElementId x,
                           std::vector<std::optional<Measure>>& memo) {
    if (memo[x]) return *memo[x];
    Measure best;
    for (ElementId y : p.lower_covers(x)) {
        const Measure& my = l_star_memo(p, l, y, memo);
        if (best.empty() || lex_compare(my, best) == std::strong_ordering::greater) best = my;
    }
    memo[x] = best.extended(l.at(x));
    return *memo[x];
}

} // namespace

Measure l_star(const FinitePoset& p, const LengthAssignment& l, ElementId x) {
    require_valid(p, l, x);
    std::vector<std::optional<Measure>> memo(p.size());
    return l_star_memo(p, l, x, memo);
}

namespace {

void collect_filtrations(const FinitePoset& p, ElementId x, std::vector<ElementId>& suffix,
                         std::vector<Filtration>& out) {
    suffix.push_back(x);
    if (p.is_minimal(x)) {
        Filtration f;
        f.stages.assign(suffix.rbegin(), suffix.rend());
        out.push_back(std::move(f));
    } else {
        for (ElementId y : p.lower_covers(x)) collect_filtrations(p, y, suffix, out);
    }
    suffix.pop_back();
}

} // namespace

std::vector<Filtration> all_filtrations(const FinitePoset& p, ElementId x) {
    if (x >= p.size()) {
        throw std::invalid_argument("unknown element id " + std::to_string(x));
    }
    std::vector<Filtration> out;
    std::vector<ElementId> suffix;
    collect_filtrations(p, x, suffix, out);
    std::sort(out.begin(), out.end(),
              [](const Filtration& a, const Filtration& b) { return a.stages < b.stages; });
    return out;
}

namespace {

void greedy_walk(const FinitePoset& p, const LengthAssignment& l, ElementId target,
                 std::vector<ElementId>& chain, std::vector<Filtration>& candidates) {
    ElementId here = chain.back();
    if (here == target) {
        candidates.push_back(Filtration{chain});
        return;
    }
    std::optional<Rational> best;
    for (ElementId y : p.upper_covers(here)) {
        if (!p.leq(y, target)) continue;
        if (!best || l.at(y) < *best) best = l.at(y);
    }
    for (ElementId y : p.upper_covers(here)) {
        if (!p.leq(y, target) || l.at(y) != *best) continue;
        chain.push_back(y);
        greedy_walk(p, l, target, chain, candidates);
        chain.pop_back();
    }
}

} // namespace

std::vector<Filtration> max_filtrations(const FinitePoset& p, const LengthAssignment& l, ElementId x) {
    require_valid(p, l, x);
    Measure target = l_star(p, l, x);

    std::optional<Rational> least;
    for (ElementId m : p.minimal_elements()) {
        if (!p.leq(m, x)) continue;
        if (!least || l.at(m) < *least) least = l.at(m);
    }

    std::vector<Filtration> candidates;
    for (ElementId m : p.minimal_elements()) {
        if (!p.leq(m, x) || l.at(m) != *least) continue;
        std::vector<ElementId> chain{m};
        greedy_walk(p, l, x, chain, candidates);
    }

    std::vector<Filtration> out;
    for (auto& f : candidates) {
        if (chain_measure(l, f.stages) == target) out.push_back(std::move(f));
    }
    if (out.empty()) {
        throw std::logic_error("greedy walk produced no chain matching l_star");
    }
    std::sort(out.begin(), out.end(),
              [](const Filtration& a, const Filtration& b) { return a.stages < b.stages; });
    return out;
}

namespace {

struct OracleState {
    const FinitePoset& p;
    const LengthAssignment& l;
    std::size_t guard;
    std::size_t count = 0;
    Measure best;
    std::vector<Rational> descending;
    std::vector<std::vector<ElementId>> strict_ideal;

    const std::vector<ElementId>& below(ElementId x) {
        if (strict_ideal[x].empty() && !p.is_minimal(x)) {
            std::vector<ElementId> ids = p.ideal(x);
            ids.erase(std::remove(ids.begin(), ids.end(), x), ids.end());
            strict_ideal[x] = std::move(ids);
        }
        return strict_ideal[x];
    }

    void visit(ElementId x) {
        if (++count > guard) {
            throw SizeGuardError("chain enumeration exceeded the guard of " +
                                 std::to_string(guard) + " chains");
        }
        Measure m(std::vector<Rational>(descending.rbegin(), descending.rend()));
        if (best.empty() || lex_compare(m, best) == std::strong_ordering::greater) best = std::move(m);
        for (ElementId y : below(x)) {
            descending.push_back(l.at(y));
            visit(y);
            descending.pop_back();
        }
    }
};

} // namespace

Measure oracle_l_star(const FinitePoset& p, const LengthAssignment& l, ElementId x,
                      std::size_t chain_guard) {
    require_valid(p, l, x);
    OracleState state{p, l, chain_guard, 0, {}, {}, {}};
    state.strict_ideal.resize(p.size());
    state.descending.push_back(l.at(x));
    state.visit(x);
    return state.best;
}

} // namespace grm
