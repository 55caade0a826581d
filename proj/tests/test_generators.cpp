#include <doctest.h>

#include <sstream>

#include "dyadic/error.hpp"
#include "dyadic/generators.hpp"
#include "dyadic/graphicality.hpp"

using namespace dyadic;

namespace {

GeneratorSpec make(Family f, std::int64_t n, GeneratorTarget t, std::uint64_t seed = 1,
                   bool connected = false)
{
    GeneratorSpec s;
    s.family = f;
    s.node_count = n;
    s.target = t;
    s.seed = seed;
    s.require_connected = connected;
    return s;
}

std::string edge_text(const Graph& g)
{
    std::ostringstream os;
    write_edge_list(g, os);
    return os.str();
}

} // namespace

TEST_CASE("ER with mean degree 6 on 1000 nodes has exactly 3000 edges")
{
    Graph g = generate(make(Family::erdos_renyi, 1000, MeanDegree{Rational(6)}, 1));
    CHECK(g.edge_count() == 3000);
    CHECK(g.node_count() == 1000);
}

TEST_CASE("ER density target resolves M = round(delta N(N-1)/2)")
{
    auto s = make(Family::erdos_renyi, 200, Density{parse_decimal("0.9")});
    CHECK(resolved_edge_count(s) == 17910);
    Graph g = generate(s);
    CHECK(g.edge_count() == 17910);
    CHECK(erdos_gallai_graphic(g.degree_sequence()));
}

TEST_CASE("regular family with density 0.9 on 1000 nodes is 899-regular")
{
    auto s = make(Family::regular, 1000, Density{parse_decimal("0.9")}, 5);
    CHECK(resolved_regular_degree(s) == 899);
    Graph g = generate(s);
    CHECK(g.degree_sequence().front() == 899);
    CHECK(g.degree_sequence().back() == 899);
    CHECK(g.edge_count() == 1000 * 899 / 2);
}

TEST_CASE("regular degree parity adjustment")
{
    // N=7, <d>=3 -> N*d odd -> d=2 (tie goes down)
    CHECK(resolved_regular_degree(make(Family::regular, 7, MeanDegree{Rational(3)})) == 2);
    // N=7, <d>=3.4 -> rounds to 3, nearer even is 4
    CHECK(resolved_regular_degree(make(Family::regular, 7, MeanDegree{parse_decimal("3.4")})) == 4);
    for (std::int64_t d = 0; d <= 9; d += 1) {
        auto s = make(Family::regular, 10, MeanDegree{Rational(d)}, 3);
        Graph g = generate(s);
        CHECK(g.degree_sequence().front() == d);
        CHECK(g.degree_sequence().back() == d);
    }
}

TEST_CASE("sparse random regular graphs")
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Graph g = generate(make(Family::regular, 200, MeanDegree{Rational(6)}, seed, true));
        CHECK(g.is_connected());
        CHECK(g.degree_sequence().front() == 6);
        CHECK(g.degree_sequence().back() == 6);
    }
}

TEST_CASE("BA is deterministic for a fixed seed")
{
    auto s = make(Family::barabasi_albert, 5, MeanDegree{Rational(2)}, 7);
    Graph a = generate(s);
    Graph b = generate(s);
    CHECK(a.edges() == b.edges());
    CHECK(a.edge_count() == 4);
    CHECK(a.is_connected());
}

TEST_CASE("BA grows by m = round(<d>/2) edges per node")
{
    auto s = make(Family::barabasi_albert, 300, MeanDegree{Rational(6)}, 2);
    CHECK(resolved_attachment_count(s) == 3);
    Graph g = generate(s);
    CHECK(g.edge_count() == 6 + (300 - 4) * 3);
    CHECK(g.is_connected());
    CHECK(g.degree_sequence().back() >= 3);
}

TEST_CASE("seeded determinism and seed sensitivity")
{
    for (Family f : {Family::erdos_renyi, Family::barabasi_albert, Family::regular}) {
        auto s = make(f, 60, MeanDegree{Rational(4)}, 11, true);
        CHECK(edge_text(generate(s)) == edge_text(generate(s)));
        auto t = s;
        t.seed = 12;
        CHECK(edge_text(generate(s)) != edge_text(generate(t)));
    }
}

TEST_CASE("require_connected regenerates until connected")
{
    auto s = make(Family::erdos_renyi, 25, EdgeCount{32}, 3, true);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        s.seed = seed;
        Graph g = generate(s);
        CHECK(g.is_connected());
        CHECK(g.edge_count() == 32);
    }
}

TEST_CASE("unsatisfiable specs")
{
    auto expect = [](const GeneratorSpec& s, ErrorKind k) {
        try {
            generate(s);
            FAIL("no throw");
        } catch (const Error& e) {
            CHECK(e.kind() == k);
        }
    };
    expect(make(Family::erdos_renyi, 5, EdgeCount{11}), ErrorKind::config);
    expect(make(Family::erdos_renyi, 5, EdgeCount{3}, 1, true), ErrorKind::config);
    expect(make(Family::regular, 5, MeanDegree{Rational(5)}), ErrorKind::config);
    expect(make(Family::regular, 6, MeanDegree{Rational(1)}, 1, true), ErrorKind::config);
    expect(make(Family::barabasi_albert, 3, MeanDegree{Rational(6)}), ErrorKind::config);
    expect(make(Family::erdos_renyi, 0, EdgeCount{0}), ErrorKind::config);
    expect(make(Family::erdos_renyi, 10, Density{Rational(3, 2)}), ErrorKind::config);

    auto tight = make(Family::erdos_renyi, 40, EdgeCount{39}, 1, true);
    tight.max_attempts = 2;  // a random tree on 40 nodes is vanishingly unlikely
    expect(tight, ErrorKind::generation);
}

TEST_CASE("generator config file")
{
    auto s = parse_generator_config("# comment\nfamily = regular\nn=12\ndensity=0.5\nseed=9\nconnected=true\n");
    CHECK(s.family == Family::regular);
    CHECK(s.node_count == 12);
    CHECK(std::get<Density>(s.target).value == Rational(1, 2));
    CHECK(s.seed == 9);
    CHECK(s.require_connected);

    CHECK_THROWS_AS(parse_generator_config("n=3\n"), Error);
    CHECK_THROWS_AS(parse_generator_config("n=3\nedges=2\nbogus=1\n"), Error);
    CHECK_THROWS_AS(parse_generator_config("n=x\nedges=2\n"), Error);
}
