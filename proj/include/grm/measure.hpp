#pragma once

#include "grm/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace grm {

// Value of a chain under a length function: finitely many positive rationals
// in strictly increasing order. The default-constructed empty measure stands
// for "no chain" and sits below everything else.
class Measure {
public:
    Measure() = default;
    explicit Measure(std::vector<Rational> values);

    static Measure single(const Rational& v);

    // Copy with `v` appended; `v` must exceed the current last value.
    Measure extended(const Rational& v) const;

    bool empty() const { return values_.empty(); }
    std::size_t size() const { return values_.size(); }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& front() const { return values_.front(); }
    const Rational& back() const { return values_.back(); }

    friend bool operator==(const Measure& a, const Measure& b) = default;

    // "1/2, 5/2, 7/2"
    std::string str() const;

private:
    std::vector<Rational> values_;
};

// Order used to rank chains: at the first position where the sorted value
// sequences differ the smaller value wins, and a sequence beats every proper
// prefix of itself. `greater` means `a` ranks strictly above `b`.
std::strong_ordering lex_compare(const Measure& a, const Measure& b);

} // namespace grm
