#include "doctest.h"

#include <algorithm>
#include <set>

#include "verma_ext/coxeter.hpp"
#include "verma_ext/error.hpp"

using namespace verma_ext;

namespace {

GroupElement word(const CoxeterSystem& sys, std::vector<int> w) { return from_word(sys, w); }

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::InvariantViolation;
}

} // namespace

TEST_CASE("parse_type accepts products and rejects junk") {
    CHECK(parse_type("A1xA2").to_string() == "A1xA2");
    CHECK(parse_type("b3").to_string() == "B3");
    CHECK(parse_type("g2").total_rank() == 2);
    for (const char* bad : {"", "A0", "H3", "B1", "D3", "E5", "F3", "G3", "A1x", "xA1", "A-1", "A1*A2", "A 2"})
        CHECK_MESSAGE(kind_of([&] { parse_type(bad); }) == ErrorKind::InvalidType, bad);
}

TEST_CASE("group orders") {
    CHECK(weyl_group_order(parse_type("A1")) == 2);
    CHECK(weyl_group_order(parse_type("A4")) == 120);
    CHECK(weyl_group_order(parse_type("B3")) == 48);
    CHECK(weyl_group_order(parse_type("D4")) == 192);
    CHECK(weyl_group_order(parse_type("G2")) == 12);
    CHECK(weyl_group_order(parse_type("F4")) == 1152);
    CHECK(weyl_group_order(parse_type("E8")) == 696729600);
    CHECK(weyl_group_order(parse_type("A1xA2")) == 12);
}

TEST_CASE("build_system examples") {
    const auto a1 = build_system("A1");
    CHECK(a1.rank() == 1);
    CHECK(a1.cartan(0, 0) == 2);
    CHECK(a1.positive_roots().size() == 1);

    const auto a2 = build_system("A2");
    CHECK(a2.cartan_matrix() == std::vector<int>{2, -1, -1, 2});
    CHECK(a2.positive_roots().size() == 3);
    CHECK(a2.coxeter_m(0, 1) == 3);

    const auto g2 = build_system("G2");
    CHECK(g2.positive_roots().size() == 6);
    CHECK(g2.coxeter_m(0, 1) == 6);
    CHECK(g2.cartan(0, 1) * g2.cartan(1, 0) == 3);

    const auto b2 = build_system("B2");
    CHECK(b2.coxeter_m(0, 1) == 4);
    CHECK(b2.longest_length() == 4);

    CHECK(build_system("B3").longest_length() == 9);
    CHECK(build_system("C3").longest_length() == 9);
    CHECK(build_system("D4").longest_length() == 12);
    CHECK(build_system("A4").longest_length() == 10);
    CHECK(build_system("F4").longest_length() == 24);

    const auto prod = build_system("A1xA1");
    CHECK(prod.coxeter_m(0, 1) == 2);
    CHECK(prod.cartan(0, 1) == 0);
}

TEST_CASE("budget rejects the large exceptional groups") {
    CHECK(kind_of([] { build_system("E7"); }) == ErrorKind::RankOverflow);
    CHECK(kind_of([] { build_system("E8"); }) == ErrorKind::RankOverflow);
    CHECK(kind_of([] { build_system("E6"); }) == ErrorKind::RankOverflow);
    CHECK(kind_of([] { build_system("A4", 1000); }) == ErrorKind::RankOverflow);
    CHECK_NOTHROW(build_system("A4", 14400));
}

TEST_CASE("B and C are dual") {
    const auto b = build_system("B3");
    const auto c = build_system("C3");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(b.cartan(i, j) == c.cartan(j, i));
    CHECK(b.fingerprint() != c.fingerprint());
    CHECK(b.fingerprint().starts_with("B3#"));
}

TEST_CASE("multiplication basics in A2") {
    const auto sys = build_system("A2");
    const auto e = identity(sys);
    const auto s1 = simple_reflection(sys, 0);
    const auto s2 = simple_reflection(sys, 1);
    CHECK(multiply(sys, s1, e) == s1);
    CHECK(multiply(sys, s1, s1) == e);
    const auto c = multiply(sys, s1, s2);
    CHECK(multiply(sys, c, multiply(sys, c, c)) == e);
    CHECK(!(multiply(sys, c, c) == e));
    CHECK(length(sys, c) == 2);
    CHECK(right_descents(sys, c) == std::vector<int>{1});
    CHECK(multiply(sys, c, inverse(sys, c)) == e);
    CHECK(longest_element(sys) == word(sys, {0, 1, 0}));
    CHECK(word(sys, {0, 1, 0}) == word(sys, {1, 0, 1}));
    CHECK(kind_of([&] { simple_reflection(sys, 2); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("Bruhat examples") {
    const auto sys = build_system("B2");
    const auto s1 = simple_reflection(sys, 0);
    const auto s2 = simple_reflection(sys, 1);
    const auto e = identity(sys);
    CHECK(bruhat_leq(sys, e, s1));
    CHECK(!bruhat_leq(sys, s1, s2));
    CHECK(!bruhat_leq(sys, s2, s1));
    CHECK(bruhat_leq(sys, s1, word(sys, {1, 0})));
    CHECK(bruhat_leq(sys, word(sys, {0, 1}), longest_element(sys)));
    CHECK(!bruhat_leq(sys, word(sys, {0, 1}), word(sys, {1, 0})));
    CHECK(bruhat_leq_oracle(sys, s1, word(sys, {1, 0})));
}

TEST_CASE("subword oracle respects its length cap") {
    const auto sys = build_system("A3");
    const auto w0 = longest_element(sys);
    CHECK(subword_products(sys, w0).size() == 24);  // all of W lies below w0
    CHECK(kind_of([&] { subword_products(sys, w0, 5); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("enumerate and reduced words") {
    for (const char* t : {"A1", "A2", "B2", "G2", "A3", "B3", "A1xA2"}) {
        const auto sys = build_system(t);
        const auto all = enumerate(sys);
        CHECK(all.size() == sys.group_order());
        CHECK(std::is_sorted(all.begin(), all.end()));
        std::set<std::vector<int>> seen;
        for (const auto& g : all) {
            seen.insert(g.matrix());
            const auto w = reduced_word(sys, g);
            CHECK(static_cast<int>(w.size()) == g.length());
            CHECK(from_word(sys, w) == g);
        }
        CHECK(seen.size() == all.size());
        CHECK(all.front() == identity(sys));
        CHECK(all.back() == longest_element(sys));
    }
}

TEST_CASE("min_coset_reps") {
    const auto sys = build_system("A2");
    const std::vector<int> j{0};
    const auto reps = min_coset_reps(sys, j);
    REQUIRE(reps.size() == 3);
    CHECK(reps[0] == identity(sys));
    CHECK(reps[1] == simple_reflection(sys, 1));
    CHECK(reps[2] == word(sys, {0, 1}));
    const auto b3 = build_system("B3");
    const std::vector<int> j2{0, 2};
    CHECK(min_coset_reps(b3, j2).size() == 12);
}

TEST_CASE("word formatting and parsing") {
    CHECK(format_word(std::vector<int>{}) == "");
    CHECK(format_word(std::vector<int>{0, 2, 1}) == "1,3,2");
    CHECK(parse_word("1,3,2", 3) == std::vector<int>{0, 2, 1});
    CHECK(parse_word("e", 3).empty());
    CHECK(parse_word("", 3).empty());
    for (const char* bad : {"0", "4", "1,,2", "a", "1,", "-1"})
        CHECK_MESSAGE(kind_of([&] { parse_word(bad, 3); }) == ErrorKind::ParseError, bad);
}

TEST_CASE("WeylGroup tables agree with direct computation") {
    const auto sys = build_system("B3");
    const WeylGroup group(sys);
    CHECK(group.size() == 48);
    CHECK(group.length(group.longest()) == 9);
    CHECK(group.parse("") == group.identity());
    std::size_t pairs = 0;
    for (WeylGroup::Index x = 0; x < group.size(); ++x) {
        CHECK(group.from_word(group.reduced_word(x)) == x);
        for (int s = 0; s < group.rank(); ++s) {
            const auto xs = group.right_mult(x, s);
            CHECK(group.element(xs) == multiply(sys, group.element(x), simple_reflection(sys, s)));
            CHECK(group.has_descent(x, s) == (group.length(xs) < group.length(x)));
        }
        for (WeylGroup::Index y = 0; y < group.size(); ++y) {
            CHECK(group.leq(y, x) == bruhat_leq(sys, group.element(y), group.element(x)));
            pairs += group.leq(y, x);
        }
    }
    CHECK(pairs == group.comparable_pairs());
    CHECK(pairs == 847);
}

TEST_CASE("comparable pair counts") {
    CHECK(WeylGroup(build_system("A1")).comparable_pairs() == 3);
    CHECK(WeylGroup(build_system("A2")).comparable_pairs() == 19);
    CHECK(WeylGroup(build_system("A3")).comparable_pairs() == 213);
    CHECK(WeylGroup(build_system("A4")).comparable_pairs() == 3781);
    CHECK(WeylGroup(build_system("A1xA1")).comparable_pairs() == 9);
    CHECK(WeylGroup(build_system("B2")).comparable_pairs() == 33);
    CHECK(WeylGroup(build_system("G2")).comparable_pairs() == 73);
    CHECK(WeylGroup(build_system("C3")).comparable_pairs() == 847);
    CHECK(WeylGroup(build_system("D4")).comparable_pairs() == 9817);
    CHECK(WeylGroup(build_system("A1xA2")).comparable_pairs() == 57);
}
