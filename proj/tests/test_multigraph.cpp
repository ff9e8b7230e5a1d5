#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "mengerian/errors.hpp"
#include "mengerian/multigraph.hpp"
#include "support.hpp"

using namespace mengerian;
using support::named;

namespace {

const Multigraph& f1() { return pattern(PatternId::F1).graph; }

std::set<std::pair<std::size_t, std::size_t>> adjacent_pairs(const Multigraph& g) {
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (const Edge& e : g.edges()) out.emplace(std::minmax(e.u.index(), e.v.index()));
    return out;
}

}  // namespace

TEST_CASE("construction rejects self-loops and unknown endpoints") {
    CHECK_THROWS_AS(Multigraph::from_pairs(2, {{0, 0}}), ArgumentError);
    CHECK_THROWS_AS(Multigraph::from_pairs(2, {{0, 2}}), ArgumentError);
    CHECK_THROWS_AS(Multigraph::from_pairs(2, {{0, 1}}, {"a"}), ArgumentError);
}

TEST_CASE("multiplicity") {
    const Multigraph& g = f1();
    CHECK(multiplicity(g, named(g, "w"), named(g, "w'")) == 2);
    CHECK(multiplicity(g, named(g, "w'"), named(g, "w")) == 2);
    CHECK(multiplicity(g, named(g, "s"), named(g, "u")) == 1);
    CHECK(multiplicity(g, named(g, "s"), named(g, "t")) == 0);
    CHECK_THROWS_AS(multiplicity(g, VertexId(0), VertexId(6)), ArgumentError);
}

TEST_CASE("degrees") {
    const Multigraph& g = f1();
    CHECK(edge_degree(g, named(g, "w")) == 4);
    CHECK(simple_degree(g, named(g, "w")) == 3);

    Multigraph lonely(3);
    CHECK(edge_degree(lonely, VertexId(1)) == 0);
    CHECK(simple_degree(lonely, VertexId(1)) == 0);
    CHECK_THROWS_AS(simple_degree(lonely, VertexId(3)), ArgumentError);

    const Multigraph& gem = pattern(PatternId::F3).graph;
    CHECK(edge_degree(gem, named(gem, "w")) == 4);
    CHECK(simple_degree(gem, named(gem, "w")) == 4);
}

TEST_CASE("underlying simple graph") {
    const Multigraph& g = f1();
    Subgraph u = underlying_simple(g);
    CHECK(u.graph.vertex_count() == 6);
    CHECK(u.graph.edge_count() == 8);
    CHECK(u.graph.is_simple());
    CHECK(adjacent_pairs(u.graph) == adjacent_pairs(g));
    // The smaller id of the doubled pair survives.
    CHECK(std::find(u.host_edge.begin(), u.host_edge.end(), EdgeId(2)) != u.host_edge.end());
    CHECK(std::find(u.host_edge.begin(), u.host_edge.end(), EdgeId(5)) == u.host_edge.end());

    Multigraph doubled = Multigraph::from_pairs(2, {{0, 1}, {0, 1}});
    CHECK(underlying_simple(doubled).graph.edge_count() == 1);

    Multigraph simple = support::cycle_graph(5);
    CHECK(oracle::counts_of(underlying_simple(simple).graph) == oracle::counts_of(simple));
}

TEST_CASE("identify") {
    const Multigraph& g = f1();
    std::vector<VertexId> z{named(g, "w"), named(g, "w'")};
    Identification id = identify(g, z);
    CHECK(id.graph.vertex_count() == 5);
    CHECK(id.graph.edge_count() == 7);
    CHECK(id.merged == VertexId(4));
    CHECK(oracle::isomorphic(oracle::counts_of(underlying_simple(id.graph).graph), support::gem_counts()));
    CHECK(!id.edge_map[2].has_value());
    CHECK(!id.edge_map[5].has_value());

    std::vector<VertexId> single{VertexId(2)};
    Identification renamed = identify(g, single);
    CHECK(oracle::isomorphic(oracle::counts_of(renamed.graph), oracle::counts_of(g)));

    Multigraph path = support::path_graph(3);
    std::vector<VertexId> ends{VertexId(0), VertexId(2)};
    Identification folded = identify(path, ends);
    CHECK(folded.graph.vertex_count() == 2);
    CHECK(multiplicity(folded.graph, VertexId(0), folded.merged) == 2);

    CHECK_THROWS_AS(identify(g, std::vector<VertexId>{}), ArgumentError);
}

TEST_CASE("m_subdivide") {
    Multigraph doubled = Multigraph::from_pairs(2, {{0, 1}, {0, 1}});
    MSubdivision sub = m_subdivide(doubled, VertexId(0), VertexId(1));
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(multiplicity(sub.graph, VertexId(0), sub.midpoint) == 2);
    CHECK(multiplicity(sub.graph, sub.midpoint, VertexId(1)) == 2);
    CHECK(multiplicity(sub.graph, VertexId(0), VertexId(1)) == 0);
    CHECK(sub.first_half == std::vector<EdgeId>{EdgeId(0), EdgeId(1)});

    Multigraph single = Multigraph::from_pairs(2, {{0, 1}});
    MSubdivision plain = m_subdivide(single, VertexId(0), VertexId(1));
    CHECK(plain.graph.edge_count() == 2);
    CHECK(simple_degree(plain.graph, plain.midpoint) == 2);

    CHECK_THROWS_AS(m_subdivide(support::path_graph(3), VertexId(0), VertexId(2)), ArgumentError);

    const Multigraph& g = f1();
    MSubdivision longer = m_subdivide(g, named(g, "w"), named(g, "w'"));
    auto emb = is_m_subdivision(longer.graph, pattern(PatternId::F1));
    REQUIRE(emb);
    CHECK(emb->branch_map[named(g, "w").index()] == named(g, "w"));
}

TEST_CASE("maximal chains") {
    auto chains = maximal_chains(f1());
    REQUIRE(chains.size() == 1);
    CHECK(chains[0].vertices == std::vector<VertexId>{VertexId(3), VertexId(4)});

    CHECK(maximal_chains(support::cycle_graph(6)).empty());

    Multigraph two = Multigraph::from_pairs(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}});
    auto through = maximal_chains(two);
    REQUIRE(through.size() == 1);
    CHECK(through[0].vertices == std::vector<VertexId>{VertexId(0), VertexId(1), VertexId(2)});

    // b has a third neighbour, so the chain stops there and a second one starts.
    Multigraph branching = Multigraph::from_pairs(4, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {1, 3}});
    CHECK(maximal_chains(branching).size() == 2);

    // A closed ring of doubled edges is cut open at its smallest vertex.
    Multigraph ring = Multigraph::from_pairs(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 0}, {2, 0}});
    auto cut = maximal_chains(ring);
    REQUIRE(cut.size() == 1);
    CHECK(cut[0].vertices == std::vector<VertexId>{VertexId(0), VertexId(1), VertexId(2)});
}

TEST_CASE("biconnected components") {
    Multigraph bowtie = Multigraph::from_pairs(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    CHECK(biconnected_components(bowtie).size() == 2);
    CHECK(articulation_points(bowtie) == std::vector<VertexId>{VertexId(2)});

    CHECK(biconnected_components(f1()).size() == 1);
    // No single vertex deletion disconnects F1.
    for (VertexId v : f1().vertices()) {
        std::vector<VertexId> gone{v};
        CHECK(is_connected(remove_vertices(f1(), gone).graph));
    }

    Multigraph star = Multigraph::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(biconnected_components(star).size() == 3);

    Multigraph pair = Multigraph::from_pairs(3, {{0, 1}, {0, 1}, {1, 2}});
    auto blocks = biconnected_components(pair);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].graph.edge_count() == 2);
}

TEST_CASE("paths and reachability") {
    Multigraph g = support::cycle_graph(6);
    std::vector<VertexId> from{VertexId(0)}, to{VertexId(3)};
    auto direct = find_path(g, from, to);
    REQUIRE(direct);
    CHECK(direct->size() == 4);
    CHECK((*direct)[1] == VertexId(1));

    Blocked blocked;
    blocked.vertices.assign(6, false);
    blocked.vertices[1] = true;
    auto around = find_path(g, from, to, blocked);
    REQUIRE(around);
    CHECK((*around)[1] == VertexId(5));

    blocked.vertices[5] = true;
    CHECK(!find_path(g, from, to, blocked));
    auto seen = reachable_set(g, VertexId(0), blocked);
    CHECK(std::count(seen.begin(), seen.end(), true) == 1);

    CHECK(connected_components(Multigraph(3)).size() == 3);
}

TEST_CASE("multigraph invariants on random graphs") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 2 + rng() % 7;
        Multigraph g = oracle::random_multigraph(rng, n, rng() % 14, 3);

        std::size_t total = 0;
        for (VertexId u : g.vertices())
            for (VertexId v : g.vertices()) {
                CHECK(multiplicity(g, u, v) == multiplicity(g, v, u));
                if (u < v) total += multiplicity(g, u, v);
            }
        CHECK(total == g.edge_count());

        Multigraph u = underlying_simple(g).graph;
        CHECK(oracle::counts_of(underlying_simple(u).graph) == oracle::counts_of(u));
        for (VertexId v : g.vertices()) CHECK(simple_degree(u, v) == simple_degree(g, v));

        if (g.edge_count() > 0) {
            const Edge& e = g.edges()[rng() % g.edge_count()];
            const std::size_t mu = multiplicity(g, e.u, e.v);
            MSubdivision sub = m_subdivide(g, e.u, e.v);
            CHECK(sub.graph.vertex_count() == n + 1);
            CHECK(sub.graph.edge_count() == g.edge_count() + mu);
            CHECK(simple_degree(sub.graph, sub.midpoint) == 2);
            CHECK(edge_degree(sub.graph, sub.midpoint) == 2 * mu);
        }

        std::vector<VertexId> z;
        for (VertexId v : g.vertices())
            if (rng() % 3 == 0) z.push_back(v);
        if (!z.empty()) {
            std::vector<bool> in(n, false);
            for (VertexId v : z) in[v.index()] = true;
            std::size_t inside = 0;
            for (const Edge& e : g.edges()) inside += in[e.u.index()] && in[e.v.index()];
            Identification id = identify(g, z);
            CHECK(id.graph.edge_count() == g.edge_count() - inside);
            std::set<EdgeId> images;
            for (const auto& m : id.edge_map)
                if (m) images.insert(*m);
            CHECK(images.size() == id.graph.edge_count());
        }

        // Every doubled pair sits in exactly one chain, and chains are maximal.
        std::map<std::pair<std::size_t, std::size_t>, int> covered;
        for (const Chain& chain : maximal_chains(g)) {
            CHECK(chain.length() >= 1);
            for (std::size_t i = 0; i + 1 < chain.vertices.size(); ++i) {
                CHECK(multiplicity(g, chain.vertices[i], chain.vertices[i + 1]) >= 2);
                ++covered[std::minmax(chain.vertices[i].index(), chain.vertices[i + 1].index())];
            }
            for (std::size_t i = 1; i + 1 < chain.vertices.size(); ++i)
                CHECK(simple_degree(g, chain.vertices[i]) == 2);
            // The closing pair of a ring is left out when the ring is cut.
            const bool ring = chain.length() >= 2 && multiplicity(g, chain.front(), chain.back()) >= 2 &&
                              std::all_of(chain.vertices.begin(), chain.vertices.end(),
                                          [&](VertexId v) { return simple_degree(g, v) == 2; });
            if (ring) ++covered[std::minmax(chain.front().index(), chain.back().index())];
        }
        std::size_t doubled = 0;
        for (VertexId a : g.vertices())
            for (VertexId b : g.vertices())
                if (a < b && multiplicity(g, a, b) >= 2) {
                    ++doubled;
                    CHECK(covered[{a.index(), b.index()}] == 1);
                }
        CHECK(covered.size() == doubled);

        auto blocks = biconnected_components(g);
        std::vector<int> owners(g.edge_count(), 0);
        for (const Subgraph& b : blocks)
            for (EdgeId e : b.host_edge) ++owners[e.index()];
        CHECK(std::all_of(owners.begin(), owners.end(), [](int k) { return k == 1; }));
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (std::size_t j = i + 1; j < blocks.size(); ++j) {
                std::vector<VertexId> shared;
                std::set_intersection(blocks[i].host_vertex.begin(), blocks[i].host_vertex.end(),
                                      blocks[j].host_vertex.begin(), blocks[j].host_vertex.end(),
                                      std::back_inserter(shared));
                CHECK(shared.size() <= 1);
            }
    }
}
