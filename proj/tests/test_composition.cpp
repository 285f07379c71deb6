#include <doctest.h>

#include "nsymkit/composition.hpp"
#include "nsymkit/errors.hpp"

using namespace nsymkit;

TEST_CASE("set_of and comp_of are inverse") {
    CHECK(set_of(Composition{2, 1, 3}) == std::set<int>{2, 3});
    CHECK(comp_of({2, 3}, 6) == Composition{2, 1, 3});
    CHECK(set_of(Composition{}).empty());
    CHECK(comp_of({}, 0) == Composition{});
    CHECK(comp_of({}, 4) == Composition{4});
    for (int n = 1; n <= 7; ++n) {
        for (const auto& a : compositions_of(n)) CHECK(comp_of(set_of(a), n) == a);
    }
    CHECK_THROWS_AS(comp_of({0}, 3), DomainError);
    CHECK_THROWS_AS(comp_of({3}, 3), DomainError);
}

TEST_CASE("compositions_of counts and order") {
    CHECK(compositions_of(0) == std::vector<Composition>{Composition{}});
    for (int n = 1; n <= 10; ++n) CHECK(compositions_of(n).size() == (std::size_t{1} << (n - 1)));
    const auto c3 = compositions_of(3);
    CHECK(c3 == std::vector<Composition>{{1, 1, 1}, {1, 2}, {2, 1}, {3}});
}

TEST_CASE("coarsening order") {
    CHECK(is_coarsening(Composition{3, 3}, Composition{2, 1, 3}));
    CHECK(is_coarsening(Composition{2, 1, 3}, Composition{2, 1, 3}));
    CHECK(is_coarsening(Composition{2, 4}, Composition{2, 1, 3}));
    CHECK_FALSE(is_coarsening(Composition{1, 5}, Composition{2, 1, 3}));
    CHECK_FALSE(is_coarsening(Composition{2, 1, 3}, Composition{3, 3}));
    const auto c = coarsenings_of(Composition{1, 1, 2});
    CHECK(c == std::vector<Composition>{{1, 1, 2}, {1, 3}, {2, 2}, {4}});
}

TEST_CASE("construction and parsing") {
    CHECK_THROWS_AS(Composition({2, 0, 1}), DomainError);
    CHECK(parse_composition("2,1,3") == Composition{2, 1, 3});
    CHECK(parse_composition("empty") == Composition{});
    CHECK(parse_composition("") == Composition{});
    CHECK_THROWS_AS(parse_composition("2,,1"), DomainError);
    CHECK_THROWS_AS(parse_composition("2,-1"), DomainError);
    CHECK_THROWS_AS(parse_composition("(2,1)"), DomainError);
    CHECK(Composition{2, 1, 3}.to_string() == "(2,1,3)");
    CHECK(Composition{}.to_string() == "()");
    CHECK(Composition{2, 1, 3}.size() == 6);
    CHECK(Composition{2, 1, 3}.max_part() == 3);
    CHECK(Composition{1, 2} < Composition{2});
}
