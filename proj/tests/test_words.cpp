#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plcover/words.hpp"

using namespace plcover::words;

TEST_CASE("free reduction") {
    CHECK(reduce({1, -1}) == FreeWord{});
    CHECK(reduce({1, 2, -2, -1}) == FreeWord{});
    CHECK(reduce({1, 2, -2, 3}) == FreeWord{1, 3});
    CHECK(cyclic_reduce({2, 1, -2}) == FreeWord{1});
    CHECK(cyclic_reduce({-3, 1, 2, 3}) == FreeWord{1, 2});
}

TEST_CASE("canonical forms separate conjugacy classes") {
    // conjugates agree
    CHECK(canonical_oriented({1, 2}) == canonical_oriented({2, 1}));
    CHECK(canonical_oriented({3, 1, 2, -3}) == canonical_oriented({1, 2}));
    // unoriented: inverse identified
    CHECK(canonical_unoriented({1, 2}) == canonical_unoriented({-2, -1}));
    // distinct classes stay distinct
    CHECK(canonical_unoriented({1, 2}) != canonical_unoriented({1, -2}));
    CHECK(canonical_unoriented({1}) != canonical_unoriented({2}));
    CHECK(canonical_unoriented({1, 1}) != canonical_unoriented({1}));
}

TEST_CASE("word string round trip") {
    FreeWord w{1, -3, 2};
    CHECK(parse_word(word_str(w)) == w);
    CHECK(parse_word("e").empty());
}

TEST_CASE("classification in cut-path letters") {
    int m = 5;
    CHECK(classify_word({}, m) == CurveClassKind::Inessential);
    CHECK(classify_word({2, -2}, m) == CurveClassKind::Inessential);
    CHECK(classify_word({1}, m) == CurveClassKind::Peripheral);
    CHECK(peripheral_mark({1}, m) == 1);
    CHECK(peripheral_mark({4}, m) == 5);
    CHECK(peripheral_mark({3, -2}, m) == 3);
    CHECK(peripheral_mark({2, -3}, m) == 3); // inverse loop
    CHECK(classify_word({3}, m) == CurveClassKind::EssentialNonperipheral);
    CHECK(classify_word({1, 3}, m) == CurveClassKind::EssentialNonperipheral);
}

TEST_CASE("substitution is a homomorphism") {
    Substitution phi;
    phi.images = {{2}, {1, 2, -1}, {3}};
    FreeWord a{1, 3}, b{-2, 1};
    CHECK(phi.apply(concat(a, b)) == concat(phi.apply(a), phi.apply(b)));
    CHECK(phi.apply(inverse(a)) == inverse(phi.apply(a)));
}
