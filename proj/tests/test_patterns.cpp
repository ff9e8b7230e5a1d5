#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mengerian/errors.hpp"
#include "mengerian/menger.hpp"
#include "mengerian/patterns.hpp"
#include "support.hpp"

using namespace mengerian;
using support::named;

namespace {

// z0 = 0, z1 = 1, h1 = 2, h2 = 3, h3 = 4, h4 = 5
Multigraph crossed(bool with_b1) {
    if (with_b1)
        return Multigraph::from_pairs(
            6, {{0, 1}, {0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {2, 5}},
            {"z0", "z1", "h1", "h2", "h3", "h4"});
    return Multigraph::from_pairs(6, {{0, 1}, {0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3}, {3, 4}, {4, 5}},
                                  {"z0", "z1", "h1", "h2", "h3", "h4"});
}

Chain chain_of(const Multigraph& g) {
    auto chains = maximal_chains(g);
    REQUIRE(chains.size() == 1);
    return chains.front();
}

std::vector<EdgeId> ids(std::initializer_list<int> list) {
    std::vector<EdgeId> out;
    for (int e : list) out.emplace_back(e);
    return out;
}

Multigraph random_simple(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    return oracle::random_multigraph(rng, n, m, 1);
}

void check_structure(const Multigraph& g, const CrossedStructure& cs) {
    CHECK(cs.exact);
    CHECK(parts_are_attached_only_at_ends(g, cs));
    CHECK(g.adjacent(cs.chain.front(), cs.h[0]));
    CHECK(g.adjacent(cs.chain.front(), cs.h[2]));
    CHECK(g.adjacent(cs.chain.back(), cs.h[1]));
    CHECK(g.adjacent(cs.chain.back(), cs.h[3]));
    CHECK(std::set<VertexId>{cs.a1.first, cs.a1.second} == std::set<VertexId>{cs.h[0], cs.h[1]});
    CHECK(std::set<VertexId>{cs.a2.first, cs.a2.second} == std::set<VertexId>{cs.h[2], cs.h[3]});
    CHECK(std::set<VertexId>{cs.b2.first, cs.b2.second} == std::set<VertexId>{cs.h[1], cs.h[2]});
    if (cs.b1) CHECK(std::set<VertexId>{cs.b1->first, cs.b1->second} == std::set<VertexId>{cs.h[0], cs.h[3]});
}

}  // namespace

TEST_CASE("pattern data") {
    for (PatternId id : kAllPatterns) {
        const Pattern& f = pattern(id);
        CHECK(parse_pattern_id(to_string(id)) == id);
        CHECK(!f.graph.adjacent(f.s, f.t));
        CHECK(simple_degree(f.graph, f.s) == 2);
        CHECK(simple_degree(f.graph, f.t) == 2);
        CHECK(f.bad_labeling.size() == f.graph.edge_count());
        CHECK(biconnected_components(f.graph).size() == 1);
    }
    CHECK(pattern(PatternId::F1).graph.edge_count() == 9);
    CHECK(pattern(PatternId::F2).graph.edge_count() == 9);
    CHECK(pattern(PatternId::F3).graph.is_simple());
    CHECK(!parse_pattern_id("F4"));

    // F1 and F2 are different graphs; both collapse onto the gem.
    CHECK(!oracle::isomorphic(oracle::counts_of(pattern(PatternId::F1).graph),
                              oracle::counts_of(pattern(PatternId::F2).graph)));
    for (PatternId id : {PatternId::F1, PatternId::F2}) {
        const Multigraph& g = pattern(id).graph;
        std::vector<VertexId> z{named(g, "w"), named(g, "w'")};
        CHECK(oracle::isomorphic(oracle::counts_of(identify(g, z).graph), support::gem_counts()));
    }
}

TEST_CASE("find_f3_subdivision") {
    const Multigraph& gem = pattern(PatternId::F3).graph;
    auto found = find_f3_subdivision(gem);
    REQUIRE(found);
    CHECK(!embedding_error(gem, *found));
    CHECK(found->vertices().size() == 5);
    CHECK(found->edges().size() == 7);

    CHECK(!find_f3_subdivision(support::cycle_graph(5)));
    CHECK(!find_f3_subdivision(Multigraph(0)));

    Multigraph spread = support::subdivide_all(gem, 1);
    auto far = find_f3_subdivision(spread);
    REQUIRE(far);
    CHECK(!embedding_error(spread, *far));
    // u, v and w are pinned by degree; s and t may sit anywhere on their threads.
    std::set<VertexId> branch(far->branch_map.begin(), far->branch_map.end());
    CHECK(branch.size() == 5);
    for (const char* name : {"u", "v", "w"}) CHECK(branch.count(named(gem, name)) == 1);

    CHECK_THROWS_AS(find_f3_subdivision(pattern(PatternId::F1).graph), ArgumentError);

    // The apex has to be a vertex of degree 4 or more.
    CHECK(!find_f3_with_apex(gem, named(gem, "s")));
    CHECK(find_f3_with_apex(gem, named(gem, "w")));
}

TEST_CASE("gem search agrees with brute force on small simple graphs") {
    std::mt19937_64 rng(4242);
    int hits = 0;
    for (int round = 0; round < 400; ++round) {
        const std::size_t n = 5 + rng() % 4;
        Multigraph g = random_simple(rng, n, 6 + rng() % 9);
        auto found = find_f3_subdivision(g);
        CHECK(found.has_value() == support::gem_by_brute_force(g));
        if (found) {
            ++hits;
            CHECK(!embedding_error(g, *found));
        }
    }
    CHECK(hits > 50);
}

TEST_CASE("is_m_subdivision") {
    for (PatternId id : kAllPatterns) {
        const Pattern& f = pattern(id);
        auto self = is_m_subdivision(f.graph, f);
        REQUIRE(self);
        CHECK(!embedding_error(f.graph, *self));
    }
    CHECK(!is_m_subdivision(pattern(PatternId::F1).graph, pattern(PatternId::F2)));
    CHECK(!is_m_subdivision(pattern(PatternId::F2).graph, pattern(PatternId::F1)));

    const Multigraph& g = pattern(PatternId::F1).graph;
    MSubdivision once = m_subdivide(g, named(g, "w"), named(g, "w'"));
    MSubdivision twice = m_subdivide(once.graph, named(g, "s"), named(g, "u"));
    auto emb = is_m_subdivision(twice.graph, pattern(PatternId::F1));
    REQUIRE(emb);
    CHECK(!embedding_error(twice.graph, *emb));

    // Every host edge has to be used.
    Multigraph extra = support::with_pendants(g, {named(g, "s")});
    CHECK(!is_m_subdivision(extra, pattern(PatternId::F1)));
    auto inside = find_m_topological_minor(extra, pattern(PatternId::F1));
    REQUIRE(inside);
    CHECK(!embedding_error(extra, *inside));
}

TEST_CASE("embedding_error catches tampering") {
    const Multigraph& g = pattern(PatternId::F1).graph;
    MEmbedding emb = *is_m_subdivision(g, pattern(PatternId::F1));
    MEmbedding swapped = emb;
    std::swap(swapped.branch_map[0], swapped.branch_map[5]);
    CHECK(embedding_error(g, swapped));

    MEmbedding thin = emb;
    for (Segment& seg : thin.segments)
        if (seg.hops.front().size() == 2) seg.hops.front().pop_back();
    CHECK(embedding_error(g, thin));
}

TEST_CASE("assemble_f1") {
    const Multigraph& g = pattern(PatternId::F1).graph;
    Chain chain = chain_of(g);
    // C1 = s u w' w, C2 = w w' v t, J = u v.
    MEmbedding emb = assemble_f1(g, chain, ids({2, 1, 0, 4}), ids({5, 7, 8, 3}), ids({6}));
    CHECK(emb.pattern == PatternId::F1);
    CHECK(!embedding_error(g, emb));
    CHECK(emb.edges().size() == 9);

    CHECK_THROWS_AS(assemble_f1(g, chain, ids({2, 1, 0, 4}), ids({5, 7, 8, 3}), ids({1})), AssemblyError);
    CHECK_THROWS_AS(assemble_f1(g, chain, ids({2, 1, 0, 4}), ids({2, 7, 8, 3}), ids({6})), AssemblyError);

    // Same pieces after m-subdividing the chain.
    MSubdivision sub = m_subdivide(g, named(g, "w"), named(g, "w'"));
    Chain longer{{named(g, "w"), sub.midpoint, named(g, "w'")}};
    std::vector<EdgeId> c1 = ids({2, 1, 0, 4}), c2 = ids({5, 7, 8, 3});
    c1.push_back(sub.second_half[0]);
    c2.push_back(sub.second_half[1]);
    MEmbedding lifted = assemble_f1(sub.graph, longer, c1, c2, ids({6}));
    CHECK(!embedding_error(sub.graph, lifted));
}

TEST_CASE("assemble_f2") {
    const Multigraph& g = pattern(PatternId::F2).graph;
    Chain chain = chain_of(g);
    // C0 = s u w, Cq = w' v t, J = u v.
    MEmbedding emb = assemble_f2(g, chain, ids({0, 1, 4}), ids({3, 8, 7}), ids({6}));
    CHECK(emb.pattern == PatternId::F2);
    CHECK(!embedding_error(g, emb));

    // Cycles through a shared vertex x: z0 a x, z1 b x.
    Multigraph shared = Multigraph::from_pairs(
        5, {{0, 1}, {0, 1}, {0, 2}, {2, 4}, {4, 0}, {1, 3}, {3, 4}, {4, 1}, {2, 3}}, {"z0", "z1", "a", "b", "x"});
    Chain z{{VertexId(0), VertexId(1)}};
    CHECK_THROWS_AS(assemble_f2(shared, z, ids({2, 3, 4}), ids({5, 6, 7}), ids({8})), AssemblyError);
}

TEST_CASE("helpcrossed on F1 and F2") {
    for (PatternId id : {PatternId::F1, PatternId::F2}) {
        const Multigraph& g = pattern(id).graph;
        ChainOutcome out = helpcrossed(g, chain_of(g));
        REQUIRE(std::holds_alternative<MEmbedding>(out));
        const MEmbedding& emb = std::get<MEmbedding>(out);
        CHECK(emb.pattern == id);
        CHECK(!embedding_error(g, emb));
    }
}

TEST_CASE("helpcrossed on m-subdivided patterns") {
    for (PatternId id : {PatternId::F1, PatternId::F2}) {
        const Multigraph& g = pattern(id).graph;
        MSubdivision sub = m_subdivide(g, named(g, "s"), named(g, "u"));
        MSubdivision sub2 = m_subdivide(sub.graph, named(g, "w"), named(g, "w'"));
        Chain chain = chain_of(sub2.graph);
        CHECK(chain.length() == 2);
        ChainOutcome out = helpcrossed(sub2.graph, chain);
        REQUIRE(std::holds_alternative<MEmbedding>(out));
        CHECK(std::get<MEmbedding>(out).pattern == id);
        CHECK(!embedding_error(sub2.graph, std::get<MEmbedding>(out)));
    }
}

TEST_CASE("helpcrossed finds the crossed structure") {
    Multigraph g = crossed(true);
    ChainOutcome out = helpcrossed(g, chain_of(g));
    REQUIRE(std::holds_alternative<CrossedStructure>(out));
    const CrossedStructure& cs = std::get<CrossedStructure>(out);
    check_structure(g, cs);
    CHECK(cs.kind == CrossedStructure::Kind::TwoCrossed);
    REQUIRE(cs.b1);
    CHECK(std::set<VertexId>(cs.h.begin(), cs.h.end()) ==
          std::set<VertexId>{VertexId(2), VertexId(3), VertexId(4), VertexId(5)});

    Multigraph open = crossed(false);
    ChainOutcome one = helpcrossed(open, chain_of(open));
    REQUIRE(std::holds_alternative<CrossedStructure>(one));
    check_structure(open, std::get<CrossedStructure>(one));
    CHECK(std::get<CrossedStructure>(one).kind == CrossedStructure::Kind::OneCrossed);
    CHECK(!std::get<CrossedStructure>(one).b1);
}

TEST_CASE("crossed structure with a longer chain and parts") {
    Multigraph g = crossed(true);
    MSubdivision longer = m_subdivide(g, VertexId(0), VertexId(1));
    // The part on h1-h2 becomes a path through the new midpoint.
    MSubdivision part = m_subdivide(longer.graph, VertexId(2), VertexId(3));
    Chain chain = chain_of(part.graph);
    CHECK(chain.length() == 2);
    ChainOutcome out = helpcrossed(part.graph, chain);
    REQUIRE(std::holds_alternative<CrossedStructure>(out));
    const CrossedStructure& cs = std::get<CrossedStructure>(out);
    check_structure(part.graph, cs);
    // Which rim pair is labelled A1 depends on the rotation chosen for h; exactly one part holds the midpoint.
    std::vector<const CrossedPart*> parts{&cs.a1, &cs.a2, &cs.b2};
    if (cs.b1) parts.push_back(&*cs.b1);
    std::size_t holding = 0;
    for (const CrossedPart* p : parts) {
        if (p->vertices.empty()) continue;
        CHECK(p->vertices == std::vector<VertexId>{part.midpoint});
        CHECK(((p->first == VertexId(2) && p->second == VertexId(3)) || (p->first == VertexId(3) && p->second == VertexId(2))));
        ++holding;
    }
    CHECK(holding == 1);
}

TEST_CASE("helpcrossed preconditions") {
    // Identifying the chain of a doubled-edge square gives a triangle: no gem.
    Multigraph square = Multigraph::from_pairs(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Chain z{{VertexId(0), VertexId(1)}};
    CHECK(!examine_chain(square, z));
    CHECK_THROWS_AS(helpcrossed(square, z), ContractError);

    // A host that already contains a gem subdivision.
    const Multigraph& gem = pattern(PatternId::F3).graph;
    auto pairs = support::edge_pairs(gem);
    pairs.emplace_back(VertexId(0), VertexId(1));
    Multigraph heavy(gem.vertex_count(), pairs);
    CHECK_THROWS_AS(helpcrossed(heavy, chain_of(heavy)), ContractError);

    // Not 2-connected.
    Multigraph f1 = support::with_pendants(pattern(PatternId::F1).graph, {VertexId(0)});
    CHECK_THROWS_AS(helpcrossed(f1, chain_of(f1)), ContractError);
}

TEST_CASE("find_crossed_structures") {
    Multigraph g = crossed(true);
    auto found = find_crossed_structures(g);
    REQUIRE(found.size() == 1);
    check_structure(g, found.front());
    CHECK(find_crossed_structures(pattern(PatternId::F1).graph).empty());
    CHECK(find_crossed_structures(Multigraph::from_pairs(4, {{0, 1}, {1, 2}, {1, 3}})).empty());
}
