#include "doctest.h"

#include <bit>

#include "verma_ext/error.hpp"
#include "verma_ext/vtable.hpp"

using namespace verma_ext;
using Index = WeylGroup::Index;

namespace {

bool same_tables(VTable& a, VTable& b) {
    const auto& g = a.group();
    for (Index x = 0; x < g.size(); ++x)
        for (Index y = 0; y < g.size(); ++y)
            if (g.leq(y, x) && !(a.get(x, y) == b.get(x, y))) return false;
    return true;
}

} // namespace

TEST_CASE("small examples") {
    const WeylGroup a1(build_system("A1"));
    VTable t1(a1);
    CHECK(t1.get(a1.identity(), a1.identity()).dim() == 0);
    CHECK(t1.get(a1.longest(), a1.longest()).dim() == 0);
    CHECK(t1.get(a1.longest(), a1.identity()) == RationalSubspace::full(1));
    CHECK(contains(t1.get(a1.longest(), a1.identity()), t1.v(0)));

    const WeylGroup a2(build_system("A2"));
    VTable t2(a2);
    CHECK(t2.get(a2.longest(), a2.identity()) == RationalSubspace::full(2));
    // V(s1, e) = K v_1
    CHECK(t2.get(a2.parse("1"), a2.identity()) == RationalSubspace::span(2, {t2.v(0)}));
    CHECK_THROWS_AS(t2.get(a2.parse("1"), a2.parse("2")), Error);
}

TEST_CASE("dimensions computed independently for A3") {
    const WeylGroup g(build_system("A3"));
    VTable t(g);
    auto d = [&](const char* x, const char* y) { return t.get(g.parse(x), g.parse(y)).dim(); };
    CHECK(d("3,2,1", "") == 3);
    CHECK(d("3,2,1", "3") == 2);
    CHECK(d("3,2,1", "2") == 2);
    CHECK(d("3,2,1", "3,2") == 1);
    CHECK(d("3,2,1", "3,2,1") == 0);
    CHECK(d("1,2,3,2,1", "") == 3);
    CHECK(d("1,2,3,2,1", "2") == 3);
    CHECK(d("1,2,3,2,1", "2,3,2") == 2);
    CHECK(d("1,2,3,2,1", "1,2,3") == 2);
}

TEST_CASE("entry counts match the comparable pairs") {
    for (const auto& [type, pairs] : std::vector<std::pair<const char*, std::size_t>>{{"A1", 3}, {"A2", 19}, {"B2", 33}}) {
        const WeylGroup g(build_system(type));
        const VTable t = compute_all(g);
        CHECK(t.entries() == pairs);
    }
    const WeylGroup a4(build_system("A4"));
    CHECK_THROWS_AS(compute_all(a4, {}, 1, 1000), Error);
}

TEST_CASE("descent policy and thread count do not change V") {
    for (const char* type : {"A3", "B2", "G2", "A1xA2"}) {
        const WeylGroup g(build_system(type));
        VTable a = compute_all(g, {DescentPolicy::smallest, {}});
        VTable b = compute_all(g, {DescentPolicy::largest, {}}, 3);
        CHECK_MESSAGE(same_tables(a, b), type);
    }
}

TEST_CASE("scaling v_s leaves every V unchanged") {
    const WeylGroup g(build_system("B3"));
    VTable a = compute_all(g);
    VTable b = compute_all(g, {DescentPolicy::smallest, {Rational(3), Rational(3), Rational(3)}});
    VTable c = compute_all(g, {DescentPolicy::smallest, {Rational(2), Rational(-1, 5), Rational(7)}});
    CHECK(same_tables(a, b));
    CHECK(same_tables(a, c));
    CHECK_THROWS_AS(VTable(g, {DescentPolicy::smallest, {Rational(1)}}), Error);
    CHECK_THROWS_AS(VTable(g, {DescentPolicy::smallest, {Rational(1), Rational(0), Rational(1)}}), Error);
}

TEST_CASE("V(w0, e) is the whole space") {
    for (const char* type : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "A1xA1", "A1xA2"}) {
        const WeylGroup g(build_system(type));
        VTable t(g);
        CHECK_MESSAGE(t.get(g.longest(), g.identity()).dim() == static_cast<std::size_t>(g.rank()), type);
    }
}

TEST_CASE("top row: dim V(w0, x) counts s with w0 s >= x") {
    for (const char* type : {"A3", "B3", "G2", "D4"}) {
        const WeylGroup g(build_system(type));
        VTable t(g);
        for (Index x = 0; x < g.size(); ++x) {
            std::size_t expected = 0;
            for (int s = 0; s < g.rank(); ++s) expected += g.leq(x, g.right_mult(g.longest(), s));
            CHECK(t.get(g.longest(), x).dim() == expected);
        }
    }
}

TEST_CASE("double ascent step adds at most one dimension") {
    for (const char* type : {"A3", "B3"}) {
        const WeylGroup g(build_system(type));
        VTable t = compute_all(g);
        for (Index x = 0; x < g.size(); ++x)
            for (Index y = 0; y < g.size(); ++y) {
                if (!g.leq(y, x)) continue;
                for (int s = 0; s < g.rank(); ++s) {
                    const Index xs = g.right_mult(x, s);
                    const Index ys = g.right_mult(y, s);
                    if (g.has_descent(x, s) || g.has_descent(y, s) || g.leq(ys, x)) continue;
                    CHECK(t.get(xs, y).dim() <= t.get(x, y).dim() + 1);
                }
            }
    }
}

TEST_CASE("s acts compatibly on double ascents") {
    // For xs > x, ys > y: V(xs, ys) = s V(x, y).
    const WeylGroup g(build_system("B3"));
    VTable t = compute_all(g);
    const auto& sys = g.system();
    for (Index x = 0; x < g.size(); ++x)
        for (Index y = 0; y < g.size(); ++y) {
            if (!g.leq(y, x)) continue;
            for (int s = 0; s < g.rank(); ++s) {
                if (g.has_descent(x, s) || g.has_descent(y, s)) continue;
                CHECK(t.get(g.right_mult(x, s), g.right_mult(y, s)) == reflect_subspace(sys, s, t.get(x, y)));
            }
        }
}

TEST_CASE("dim V never exceeds the q-coefficient") {
    for (const char* type : {"A3", "B3", "D4"}) {
        const WeylGroup g(build_system(type));
        VTable t = compute_all(g);
        RTable r(g);
        for (Index x = 0; x < g.size(); ++x)
            for (Index y = 0; y < g.size(); ++y)
                if (g.leq(y, x)) CHECK(static_cast<std::int64_t>(t.get(x, y).dim()) <= gj_coefficient(r, x, y));
    }
}

TEST_CASE("equality with the q-coefficient in rank two and A1xA2") {
    for (const char* type : {"A1", "A2", "B2", "G2", "A1xA1", "A1xA2"}) {
        const WeylGroup g(build_system(type));
        VTable t = compute_all(g);
        RTable r(g);
        std::size_t bad = 0;
        for (Index x = 0; x < g.size(); ++x)
            for (Index y = 0; y < g.size(); ++y)
                if (g.leq(y, x)) bad += static_cast<std::int64_t>(t.get(x, y).dim()) != gj_coefficient(r, x, y);
        CHECK_MESSAGE(bad == 0, type);
    }
}

TEST_CASE("A3 pair where the q-coefficient exceeds the rank") {
    const WeylGroup g(build_system("A3"));
    VTable t(g);
    RTable r(g);
    const Index x = g.parse("1,2,3,2,1");
    const Index y = g.parse("2");
    CHECK(gj_coefficient(r, x, y) == 4);
    CHECK(t.get(x, y).dim() == 3);
}

TEST_CASE("singular quotients") {
    const WeylGroup g(build_system("B3"));
    VTable t(g);
    const Index w0 = g.longest();
    const Index e = g.identity();
    CHECK(singular_v(t, SingularSpec{{}}, w0, e).dim() == 3);
    CHECK(singular_v(t, SingularSpec{{0}}, w0, e).dim() == 2);
    CHECK(singular_v(t, SingularSpec{{0, 1, 2}}, w0, e).dim() == 0);
    CHECK_THROWS_AS(singular_v(t, SingularSpec{{3}}, w0, e), Error);

    // dim of the image = dim(V + K-span of the killed v_s) - |S_lambda|
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
        std::vector<int> subset;
        for (int s = 0; s < 3; ++s)
            if (mask >> s & 1u) subset.push_back(s);
        for (Index x = 0; x < g.size(); x += 5)
            for (Index y = 0; y < g.size(); ++y) {
                if (!g.leq(y, x)) continue;
                RationalSubspace big = t.get(x, y);
                for (int s : subset) big = add_line(big, t.v(s));
                CHECK(singular_v(t, SingularSpec{subset}, x, y).dim() == big.dim() - subset.size());
                if (subset.empty()) CHECK(singular_v(t, SingularSpec{subset}, x, y) == t.get(x, y));
            }
    }
}

TEST_CASE("membership report") {
    for (const char* type : {"A2", "B2", "G2"}) {
        const WeylGroup g(build_system(type));
        VTable t = compute_all(g);
        const auto rows = membership_report(t);
        CHECK(!rows.empty());
        for (const auto& row : rows) {
            CHECK(row.rank2);
            CHECK(!g.has_descent(row.x, row.s));
            CHECK(!g.has_descent(row.y, row.s));
            CHECK(row.member == row.x_geq_ys);
        }
    }
    // A1: V(s, e) = K v_s although s is a descent of x.
    const WeylGroup a1(build_system("A1"));
    VTable t1(a1);
    CHECK(contains(t1.get(a1.longest(), a1.identity()), t1.v(0)));
    CHECK(membership_report(t1).size() == 1);
}

TEST_CASE("exports") {
    const WeylGroup g(build_system("A2"));
    VTable v = compute_all(g);
    RTable r(g);
    const std::string csv = dimension_csv(v, r, "T");
    CHECK(csv.find("x_word;y_word;dimV;gj_coeff;match\n") != std::string::npos);
    CHECK(csv.find("1,2,1;;2;2;true\n") != std::string::npos);
    std::size_t rows = 0;
    for (char c : csv) rows += c == '\n';
    CHECK(rows == 4 + 19);
    const auto doc = subspace_export(v, "T");
    CHECK(doc["subspaces"].size() == 19);
    CHECK(doc["subspaces"]["1,2,1|"]["dim"] == 2);
}
