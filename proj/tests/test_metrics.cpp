#include <doctest.h>

#include <bit>

#include "dyadic/error.hpp"
#include "dyadic/metrics.hpp"
#include "fixtures.hpp"

using namespace dyadic;

namespace {

CharacteristicAssignment labels(std::initializer_list<int> v)
{
    std::vector<std::uint8_t> l;
    for (int x : v)
        l.push_back(static_cast<std::uint8_t>(x));
    return CharacteristicAssignment(l);
}

} // namespace

TEST_CASE("count_dyads: hand-classified examples")
{
    Graph tri = parse_edge_list("a b\nb c\nc a");
    CHECK(count_dyads(tri, labels({1, 1, 0})) == DyadCounts{1, 2, 0});

    Graph p4 = fixtures::path(4);
    CHECK(count_dyads(p4, labels({1, 1, 0, 0})) == DyadCounts{1, 1, 1});
    CHECK(count_dyads(p4, labels({1, 1, 1, 1})) == DyadCounts{3, 0, 0});

    CHECK_THROWS_AS(count_dyads(p4, labels({1, 0})), Error);
}

TEST_CASE("expected_dyads: closed form")
{
    DyadStats s = expected_dyads(25, 32, 10);
    CHECK(s.expected_m11 == Rational(24, 5));
    CHECK(s.expected_m10 == Rational(16));
    CHECK(s.density == Rational(64, 600));

    DyadStats z = expected_dyads(25, 32, 0);
    CHECK(z.expected_m11 == 0);
    CHECK(z.expected_m10 == 0);

    DyadStats k3 = expected_dyads(3, 3, 2);
    CHECK(k3.density == 1);
    CHECK(k3.expected_m11 == 1);
    CHECK(k3.expected_m10 == 2);

    CHECK_THROWS_AS(expected_dyads(1, 0, 0), Error);
    CHECK_THROWS_AS(expected_dyads(5, 3, 6), Error);
}

TEST_CASE("dyadicity and heterophilicity")
{
    Graph tri = parse_edge_list("a b\nb c\nc a");
    auto a = labels({1, 1, 0});
    auto e = dyadicity_heterophilicity(count_dyads(tri, a), expected_dyads(3, 3, 2));
    REQUIRE(e.dyadicity);
    REQUIRE(e.heterophilicity);
    CHECK(*e.dyadicity == 1);
    CHECK(*e.heterophilicity == 1);

    Graph p4 = fixtures::path(4);
    auto alt = labels({1, 0, 1, 0});
    auto e2 = dyadicity_heterophilicity(count_dyads(p4, alt), expected_dyads(4, 3, 2));
    REQUIRE(e2.dyadicity);
    CHECK(*e2.dyadicity == 0);

    auto single = labels({1, 0, 0, 0});
    auto e3 = dyadicity_heterophilicity(count_dyads(p4, single), expected_dyads(4, 3, 1));
    CHECK_FALSE(e3.dyadicity);
    CHECK(e3.heterophilicity);

    auto all = labels({1, 1, 1, 1});
    auto e4 = dyadicity_heterophilicity(count_dyads(p4, all), expected_dyads(4, 3, 4));
    CHECK(e4.dyadicity);
    CHECK_FALSE(e4.heterophilicity);
}

TEST_CASE("characteristic files")
{
    Graph g = parse_edge_list("a b\nb c\nc d\n");
    auto v = parse_characteristic("1\n0\n# comment\n1\n0\n", LabelFormat::vector, g);
    CHECK(v.n1() == 2);
    CHECK(v[0]);
    CHECK(v[2]);

    auto s = parse_characteristic("c\nd\n", LabelFormat::set, g);
    CHECK(s.n1() == 2);
    CHECK(s[2]);
    CHECK(s[3]);

    CHECK_THROWS_AS(parse_characteristic("1\n0\n", LabelFormat::vector, g), Error);
    CHECK_THROWS_AS(parse_characteristic("1\n2\n0\n0\n", LabelFormat::vector, g), Error);
    CHECK_THROWS_AS(parse_characteristic("zz\n", LabelFormat::set, g), Error);
}

TEST_CASE("dyad invariants over all assignments of small corpus graphs")
{
    // Brute force over label bitmasks: totals, complement symmetry, exact
    // ratio identities, and the average over each n1 class equals the closed form.
    for (const Graph& g : fixtures::small_corpus(45)) {
        const auto n = g.node_count();
        if (n > 10)
            continue;
        const auto m = static_cast<std::int64_t>(g.edge_count());
        std::vector<Rational> sum11(n + 1), sum10(n + 1);
        std::vector<std::int64_t> count(n + 1, 0);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<std::uint8_t> l(n);
            for (std::size_t i = 0; i < n; ++i)
                l[i] = (mask >> i) & 1;
            CharacteristicAssignment a(l);
            DyadCounts c = count_dyads(g, a);
            CHECK(c.total() == m);
            DyadCounts flipped = count_dyads(g, a.complement());
            CHECK(flipped == DyadCounts{c.m00, c.m10, c.m11});

            auto k = static_cast<std::size_t>(std::popcount(mask));
            sum11[k] += c.m11;
            sum10[k] += c.m10;
            ++count[k];

            auto stats = expected_dyads(static_cast<std::int64_t>(n), m, static_cast<std::int64_t>(k));
            auto e = dyadicity_heterophilicity(c, stats);
            if (e.dyadicity)
                CHECK(*e.dyadicity * stats.expected_m11 == c.m11);
            if (e.heterophilicity)
                CHECK(*e.heterophilicity * stats.expected_m10 == c.m10);
        }
        for (std::size_t k = 0; k <= n; ++k) {
            auto stats = expected_dyads(static_cast<std::int64_t>(n), m, static_cast<std::int64_t>(k));
            CHECK(sum11[k] / count[k] == stats.expected_m11);
            CHECK(sum10[k] / count[k] == stats.expected_m10);
        }
    }
}
