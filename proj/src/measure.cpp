#include "grm/measure.hpp"

#include <stdexcept>
#include <utility>

namespace grm {

Measure::Measure(std::vector<Rational> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!values_[i].is_positive()) {
            throw std::invalid_argument("measure values must be positive, got " + values_[i].str());
        }
        if (i > 0 && !(values_[i - 1] < values_[i])) {
            throw std::invalid_argument("measure values must strictly increase, got " +
                                        values_[i - 1].str() + " before " + values_[i].str());
        }
    }
}

Measure Measure::single(const Rational& v) {
    return Measure(std::vector<Rational>{v});
}

Measure Measure::extended(const Rational& v) const {
    std::vector<Rational> vals = values_;
    vals.push_back(v);
    return Measure(std::move(vals));
}

std::string Measure::str() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i > 0) out += ", ";
        out += values_[i].str();
    }
    return out;
}

std::strong_ordering lex_compare(const Measure& a, const Measure& b) {
    const auto& va = a.values();
    const auto& vb = b.values();
    std::size_t n = va.size() < vb.size() ? va.size() : vb.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (va[i] != vb[i]) {
            // smaller value at the first difference wins
            return va[i] < vb[i] ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    if (va.size() == vb.size()) return std::strong_ordering::equal;
    return va.size() < vb.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

} // namespace grm
