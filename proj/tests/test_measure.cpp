#include "grm/measure.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

#include <stdexcept>

using grm::lex_compare;
using grm::Measure;
using grm::Rational;
using grm::testing::lex_by_set_formula;
using grm::testing::random_measure;
using grm::testing::Rng;

namespace {

Measure of(std::initializer_list<Rational> values) {
    return Measure(std::vector<Rational>(values));
}

} // namespace

TEST_CASE("measure construction enforces positive strictly increasing values") {
    CHECK(of({Rational(1, 2), Rational(5, 2)}).size() == 2);
    CHECK(Measure().empty());
    CHECK_THROWS_AS(of({Rational(1), Rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(of({Rational(2), Rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(of({Rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(of({Rational(-1)}), std::invalid_argument);
    CHECK_THROWS_AS(of({Rational(1)}).extended(Rational(1)), std::invalid_argument);
    CHECK(of({Rational(1)}).extended(Rational(2)) == of({Rational(1), Rational(2)}));
}

TEST_CASE("lex_compare prefers the smaller value at the first difference") {
    // {1/2, 5/2, 9/2, 11/2} loses to {1/2, 5/2, 7/2, 11/2}: 7/2 beats 9/2
    Measure left = of({Rational(1, 2), Rational(5, 2), Rational(9, 2), Rational(11, 2)});
    Measure right = of({Rational(1, 2), Rational(5, 2), Rational(7, 2), Rational(11, 2)});
    CHECK(lex_compare(left, right) == std::strong_ordering::less);
    CHECK(lex_compare(right, left) == std::strong_ordering::greater);

    CHECK(lex_compare(of({Rational(1), Rational(3), Rational(4)}),
                      of({Rational(1), Rational(2), Rational(4)})) ==
          std::strong_ordering::less);
    CHECK(lex_compare(of({Rational(1)}), of({Rational(1)})) == std::strong_ordering::equal);
}

TEST_CASE("lex_compare ranks a chain above its proper prefixes") {
    Measure whole = of({Rational(1), Rational(2), Rational(4)});
    Measure prefix = of({Rational(1), Rational(2)});
    CHECK(lex_compare(prefix, whole) == std::strong_ordering::less);
    CHECK(lex_compare(whole, prefix) == std::strong_ordering::greater);
    CHECK(lex_compare(Measure(), whole) == std::strong_ordering::less);
    CHECK(lex_compare(Measure(), Measure()) == std::strong_ordering::equal);
}

TEST_CASE("lex_compare matches the set-difference definition") {
    Rng rng(21);
    for (int i = 0; i < 2000; ++i) {
        Measure a = random_measure(rng, 6);
        Measure b = random_measure(rng, 6);
        CHECK(lex_compare(a, b) == lex_by_set_formula(a, b));
    }
}

TEST_CASE("lex_compare is a total order") {
    Rng rng(22);
    std::vector<Measure> pool;
    for (int i = 0; i < 40; ++i) pool.push_back(random_measure(rng, 5));
    for (const Measure& a : pool) {
        for (const Measure& b : pool) {
            auto ab = lex_compare(a, b);
            auto ba = lex_compare(b, a);
            if (ab == std::strong_ordering::equal) {
                CHECK(a == b);
                CHECK(ba == std::strong_ordering::equal);
            } else if (ab == std::strong_ordering::less) {
                CHECK(ba == std::strong_ordering::greater);
            } else {
                CHECK(ba == std::strong_ordering::less);
            }
            for (const Measure& c : pool) {
                if (lex_compare(a, b) != std::strong_ordering::greater &&
                    lex_compare(b, c) != std::strong_ordering::greater) {
                    CHECK(lex_compare(a, c) != std::strong_ordering::greater);
                }
            }
        }
    }
}

TEST_CASE("inserting an extra value always increases a measure") {
    Rng rng(23);
    for (int i = 0; i < 500; ++i) {
        Measure base = random_measure(rng, 5);
        std::set<Rational> values(base.values().begin(), base.values().end());
        std::size_t before = values.size();
        while (values.size() == before) {
            values.insert(Rational(rng.pick(1, 20), rng.pick(1, 4)));
        }
        Measure bigger(std::vector<Rational>(values.begin(), values.end()));
        CHECK(lex_compare(base, bigger) == std::strong_ordering::less);
    }
}

TEST_CASE("measure str joins values with commas") {
    CHECK(of({Rational(1, 2), Rational(5, 2), Rational(7, 2), Rational(11, 2)}).str() ==
          "1/2, 5/2, 7/2, 11/2");
    CHECK(of({Rational(1)}).str() == "1");
    CHECK(Measure().str().empty());
}
