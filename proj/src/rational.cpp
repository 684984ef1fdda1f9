#include "grm/rational.hpp"

#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace grm {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
    if (v > Wide(std::numeric_limits<std::int64_t>::max()) ||
        v < Wide(std::numeric_limits<std::int64_t>::min())) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

Wide wide_gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational reduce(Wide num, Wide den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Rational(0);
    Wide g = wide_gcd(num, den);
    return Rational(narrow(num / g), narrow(den / g));
}

std::int64_t parse_digits(std::string_view text, std::size_t& pos) {
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') {
        throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
    }
    Wide value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + (text[pos] - '0');
        if (value > Wide(std::numeric_limits<std::int64_t>::max())) {
            throw std::overflow_error("rational literal out of range: '" + std::string(text) + "'");
        }
        ++pos;
    }
    return static_cast<std::int64_t>(value);
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Wide n = num;
    Wide d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        den_ = 1;
        return;
    }
    Wide g = wide_gcd(n, d);
    num_ = narrow(n / g);
    den_ = narrow(d / g);
}

Rational operator+(const Rational& a, const Rational& b) {
    return reduce(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return reduce(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return reduce(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return reduce(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Wide lhs = Wide(a.num_) * b.den_;
    Wide rhs = Wide(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    std::int64_t head = parse_digits(text, pos);
    if (pos == text.size()) {
        return negative ? Rational(-head) : Rational(head);
    }
    if (text[pos] == '/') {
        ++pos;
        std::int64_t den = parse_digits(text, pos);
        if (pos != text.size()) {
            throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
        }
        return Rational(negative ? -head : head, den);
    }
    if (text[pos] == '.') {
        ++pos;
        std::size_t start = pos;
        std::int64_t frac = parse_digits(text, pos);
        std::size_t digits = pos - start;
        if (pos != text.size() || digits > 18) {
            throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
        }
        Wide scale = 1;
        for (std::size_t i = 0; i < digits; ++i) scale *= 10;
        Wide num = Wide(head) * scale + frac;
        return reduce(negative ? -num : num, scale);
    }
    throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace grm
