#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gsx/errors.hpp"
#include "gsx/primitives.hpp"
#include "oracle_check.hpp"

using namespace gsx;
using gsx::testing::random_graph;
using gsx::testing::sequence_matches_oracle;
using gsx::testing::sequence_matches_tableau;

namespace {

std::vector<SequenceStep> to_sequence(const GridSpec& spec, const std::vector<PlanStep>& steps) {
    std::vector<SequenceStep> out;
    for (const auto& s : steps) {
        if (s.local_complementation) {
            out.push_back(SequenceStep::lc(spec.vertex_id(s.coord)));
        } else {
            std::optional<int> b0;
            if (s.chosen_neighbor) b0 = spec.vertex_id(*s.chosen_neighbor);
            out.push_back({spec.vertex_id(s.coord), s.basis, false, b0});
        }
    }
    return out;
}

bool isolated_pair(const Graph& g, int a, int b) {
    return g.neighbors(a) == std::set<int>{b} && g.neighbors(b) == std::set<int>{a};
}

bool connected(const Graph& g, const std::set<int>& skip) {
    std::set<int> todo;
    for (int v : g.vertices()) {
        if (!skip.count(v)) todo.insert(v);
    }
    if (todo.empty()) return true;
    std::vector<int> stack{*todo.begin()};
    std::set<int> seen{*todo.begin()};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (skip.count(w) || seen.count(w)) continue;
            if (seen.insert(w).second) stack.push_back(w);
        }
    }
    return seen == todo;
}

}  // namespace

TEST_CASE("zipper connects a pure staircase pair into an isolated Bell edge") {
    PlanContext ctx(GridSpec{5, 5});
    Coord a{0, 4}, b{4, 0};
    ctx.pattern.set(a, CellRole::Target);
    ctx.pattern.set(b, CellRole::Target);
    Fragment frag = zipper_connect(ctx, a, b);
    CHECK(frag.step_count > 0);

    int av = ctx.pattern.spec().vertex_id(a), bv = ctx.pattern.spec().vertex_id(b);
    CHECK(isolated_pair(ctx.graph, av, bv));
    CHECK(connected(ctx.graph, {av, bv}));

    // Re-execution through the graph rules reproduces the prediction.
    Graph replay = execute_sequence(cluster_graph(ctx.pattern.spec()),
                                    to_sequence(ctx.pattern.spec(), ctx.steps))
                       .graph;
    CHECK(replay == ctx.graph);
}

TEST_CASE("zipper between grid-adjacent endpooints is an empty fragment") {
    PlanContext ctx(GridSpec{4, 4});
    Fragment frag = zipper_connect(ctx, {1, 1}, {1, 2});
    CHECK(frag.step_count == 0);
    CHECK(ctx.steps.empty());
}

TEST_CASE("two crossing zippers both isolate their pairs") {
    PlanContext ctx(GridSpec{10, 10});
    Coord a1{0, 0}, b1{9, 9}, a2{0, 9}, b2{9, 0};
    for (Coord t : {a1, b1, a2, b2}) ctx.pattern.set(t, CellRole::Target);
    zipper_connect(ctx, a1, b1);
    zipper_connect(ctx, a2, b2);
    const GridSpec& spec = ctx.pattern.spec();
    CHECK(isolated_pair(ctx.graph, spec.vertex_id(a1), spec.vertex_id(b1)));
    CHECK(isolated_pair(ctx.graph, spec.vertex_id(a2), spec.vertex_id(b2)));
}

TEST_CASE("zipper execution matches the statevector oracle") {
    GridSpec spec{4, 5};  // 20 qubits, within the statevector cap
    PlanContext ctx(spec);
    Coord a{0, 4}, b{3, 1};
    ctx.pattern.set(a, CellRole::Target);
    ctx.pattern.set(b, CellRole::Target);
    zipper_connect(ctx, a, b);
    CHECK(sequence_matches_oracle(cluster_graph(spec), to_sequence(spec, ctx.steps)));
    CHECK(sequence_matches_oracle(cluster_graph(spec), to_sequence(spec, ctx.steps), 77u));
}

TEST_CASE("merge_subgraphs fuses the y1 side onto y2") {
    // Star at y1 with leaves {p,q}, connector y3, G2 a single edge y2-r.
    Graph g = Graph::from_edges({0, 1, 2, 3, 4, 5},
                                {{2, 0}, {2, 1}, {2, 3}, {3, 4}, {4, 5}});
    Graph m = merge_subgraphs(g, 2, 3, 4);
    CHECK(m.neighbors(4) == std::set<int>{0, 1, 5});
    CHECK(!m.has_vertex(2));
    CHECK(!m.has_vertex(3));

    // Leaf y1: nothing to transfer, y2 keeps only its G2 adjacency.
    Graph leaf = Graph::from_edges({2, 3, 4, 5}, {{2, 3}, {3, 4}, {4, 5}});
    CHECK(merge_subgraphs(leaf, 2, 3, 4).neighbors(4) == std::set<int>{5});
}

TEST_CASE("merge_subgraphs rejects precondition violations") {
    Graph g = Graph::from_edges({0, 1, 2, 3, 4, 5},
                                {{2, 0}, {2, 1}, {2, 3}, {3, 4}, {4, 5}});
    Graph bad_edge = g;
    bad_edge.add_edge(2, 5);  // y1 reaches into G2
    CHECK_THROWS_WITH_AS(merge_subgraphs(bad_edge, 2, 3, 4) , doctest::Contains("2-5"),
                         MergePreconditionError);
    Graph bad_deg = g;
    bad_deg.add_edge(3, 0);  // connector degree 3
    CHECK_THROWS_AS(merge_subgraphs(bad_deg, 2, 3, 4), MergePreconditionError);
    CHECK_THROWS_AS(merge_subgraphs(g, 0, 3, 4), MergePreconditionError);  // no edge y1-y3
}

TEST_CASE("merge_subgraphs matches the statevector oracle on random instances") {
    std::mt19937 rng(4242);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 40; ++trial) {
        Graph g1 = random_graph(rng, 4);                       // vertices 0..3, y1 = 0
        Graph g;
        for (int v : g1.vertices()) g.add_vertex(v);
        for (auto [a, b] : g1.edges()) g.add_edge(a, b);
        for (int v = 5; v <= 8; ++v) g.add_vertex(v);          // G2 on 5..8, y2 = 5
        Graph g2 = random_graph(rng, 4);
        for (auto [a, b] : g2.edges()) g.add_edge(a + 5, b + 5);
        g.add_vertex(4);
        g.add_edge(0, 4);
        g.add_edge(4, 5);

        Graph merged = merge_subgraphs(g, 0, 4, 5);
        ++checked;

        // Edges internal to G1 minus y1 and internal to G2 are untouched.
        for (auto [a, b] : g.edges()) {
            if (a != 0 && a != 4 && b != 0 && b != 4) CHECK(merged.has_edge(a, b));
        }
        // The transfer rule itself.
        std::set<int> want;
        for (int w : g.neighbors(0)) {
            if (w != 4) want.insert(w);
        }
        for (int w : g.neighbors(5)) {
            if (w != 4) want.insert(w);
        }
        CHECK(merged.neighbors(5) == want);
        // Oracle equivalence of the realizing measurement sequence.
        std::vector<SequenceStep> seq{{0, Basis::Y, false}, {4, Basis::Y, false}};
        CHECK(sequence_matches_oracle(g, seq));
        CHECK(execute_sequence(g, seq).graph == merged);
    }
    CHECK(checked == 40);
}

TEST_CASE("expand_degree hits the exact counts in every direction") {
    for (Dir d : {Dir::Up, Dir::Down, Dir::Left, Dir::Right}) {
        for (int n = 1; n <= 3; ++n) {
            PlanContext ctx(GridSpec{15, 15});
            Coord v{7, 7};
            Fragment frag = expand_degree(ctx, v, d, n);
            CHECK(frag.step_count == std::size_t(4 * n));
            CHECK(frag.stubs.size() == std::size_t(2 * n + 1));
            int vid = ctx.pattern.spec().vertex_id(v);
            CHECK(ctx.graph.degree(vid) == std::size_t(4 + 2 * n));
            for (Coord s : frag.stubs) {
                CHECK(ctx.graph.has_edge(vid, ctx.pattern.spec().vertex_id(s)));
            }
        }
    }
}

TEST_CASE("expand_degree matches both oracles on small grids") {
    {
        GridSpec spec{5, 4};  // 20 qubits: statevector
        PlanContext ctx(spec);
        expand_degree(ctx, {1, 1}, Dir::Right, 1);
        CHECK(sequence_matches_oracle(cluster_graph(spec), to_sequence(spec, ctx.steps)));
    }
    {
        GridSpec spec{7, 4};
        PlanContext ctx(spec);
        expand_degree(ctx, {1, 1}, Dir::Right, 2);
        CHECK(sequence_matches_tableau(cluster_graph(spec), to_sequence(spec, ctx.steps)));
    }
}

TEST_CASE("expand_degree rejects a blocked footprint with the coordinate") {
    PlanContext ctx(GridSpec{9, 9});
    ctx.pattern.set({4, 2}, CellRole::Target);
    CHECK_THROWS_WITH_AS(expand_degree(ctx, {4, 4}, Dir::Up, 2), doctest::Contains("(4,2)"),
                         SpaceError);
    CHECK_THROWS_AS(expand_degree(ctx, {4, 1}, Dir::Up, 1), SpaceError);  // off-grid
}

TEST_CASE("u-shaped expansion: 12n+8 steps, +2n degree, stubs exit on top") {
    for (int n = 1; n <= 3; ++n) {
        PlanContext ctx(GridSpec{26, 9});
        Coord v{3, 6};
        Fragment frag = expand_degree_u_shaped(ctx, v, n);
        CHECK(frag.step_count == std::size_t(12 * n + 8));
        CHECK(frag.stubs.size() == std::size_t(2 * n + 1));
        int vid = ctx.pattern.spec().vertex_id(v);
        CHECK(ctx.graph.degree(vid) == std::size_t(4 + 2 * n));
        for (Coord s : frag.stubs) {
            CHECK(ctx.graph.has_edge(vid, ctx.pattern.spec().vertex_id(s)));
            CHECK(s.y <= v.y - 2);                       // at or above the arm row
            CHECK(ctx.pattern.is_free({s.x, s.y - 1}));  // upward exit stays open
        }
        Graph replay = execute_sequence(cluster_graph(ctx.pattern.spec()),
                                        to_sequence(ctx.pattern.spec(), ctx.steps))
                           .graph;
        CHECK(replay == ctx.graph);
    }
}

TEST_CASE("u-shaped expansion matches the tableau oracle") {
    GridSpec spec{12, 8};
    PlanContext ctx(spec);
    expand_degree_u_shaped(ctx, {2, 6}, 1);
    CHECK(sequence_matches_tableau(cluster_graph(spec), to_sequence(spec, ctx.steps)));
}

TEST_CASE("u-shaped expansion rejects blocked footprints") {
    PlanContext ctx(GridSpec{26, 9});
    ctx.pattern.set({6, 4}, CellRole::MeasZ);
    CHECK_THROWS_AS(expand_degree_u_shaped(ctx, {3, 6}, 2), SpaceError);
    CHECK_THROWS_AS(expand_degree_u_shaped(ctx, {3, 3}, 1), SpaceError);  // riser off-grid
}

TEST_CASE("hub_connect_degree4 extracts the 5-qubit star") {
    PlanContext ctx(GridSpec{12, 12});
    Coord a{5, 5};
    std::array<Coord, 4> ends{{{2, 2}, {9, 2}, {2, 9}, {9, 9}}};
    for (Coord e : ends) ctx.pattern.set(e, CellRole::Target);
    hub_connect_degree4(ctx, a, ends);

    const GridSpec& spec = ctx.pattern.spec();
    std::set<int> leaves;
    for (Coord e : ends) leaves.insert(spec.vertex_id(e));
    CHECK(ctx.graph.neighbors(spec.vertex_id(a)) == leaves);
    for (int e : leaves) {
        CHECK(ctx.graph.neighbors(e) == std::set<int>{spec.vertex_id(a)});
    }
    Graph replay =
        execute_sequence(cluster_graph(spec), to_sequence(spec, ctx.steps)).graph;
    CHECK(replay == ctx.graph);
}

TEST_CASE("hub_connect_degree4 rejects degenerate geometry") {
    PlanContext ctx(GridSpec{12, 12});
    std::array<Coord, 4> adjacent{{{5, 4}, {4, 5}, {6, 5}, {5, 6}}};
    CHECK_THROWS_AS(hub_connect_degree4(ctx, {5, 5}, adjacent), DomainError);
    std::array<Coord, 4> ends{{{3, 3}, {8, 3}, {3, 8}, {8, 8}}};
    CHECK_THROWS_AS(hub_connect_degree4(ctx, {0, 5}, ends), DomainError);  // boundary hub
}

namespace {

/// Star center 0 with leaves {1,2}, an interior path 10..10+k-1 to the
/// fresh vertex 5, and aux vertices 6,7 hanging off the path ends.
Graph collect_fixture(int k) {
    Graph g;
    for (int v : {0, 1, 2, 5, 6, 7}) g.add_vertex(v);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    int prev = 0;
    for (int i = 0; i < k; ++i) {
        g.add_vertex(10 + i);
        g.add_edge(prev, 10 + i);
        prev = 10 + i;
    }
    g.add_edge(prev, 5);
    g.add_edge(6, 10);
    g.add_edge(7, 10 + k - 1);
    return g;
}

std::vector<int> collect_path(int k) {
    std::vector<int> p;
    for (int i = 0; i < k; ++i) p.push_back(10 + i);
    return p;
}

bool is_star_at_5(const Graph& g) {
    std::set<std::pair<int, int>> edges;
    for (auto e : g.edges()) edges.insert(e);
    return edges == std::set<std::pair<int, int>>{{0, 5}, {1, 5}, {2, 5}};
}

}  // namespace

TEST_CASE("ghz collection: odd paths transfer the center directly") {
    for (int k : {1, 3, 5}) {
        Graph out = ghz_collect_step(collect_fixture(k), 0, collect_path(k), 5,
                                     std::pair<int, int>{6, 7});
        CHECK(is_star_at_5(out));
    }
}

TEST_CASE("ghz collection: plain X chain fails on even paths (regression)") {
    for (int k : {2, 4}) {
        Graph out = collect_fixture(k);
        for (int v : collect_path(k)) out = measure_x(out, v, 1).graph;
        CHECK(!is_star_at_5(out));
        CHECK_THROWS_AS(ghz_collect_step(collect_fixture(k), 0, collect_path(k), 5),
                        SpaceError);  // fix requires the aux pair
    }
}

TEST_CASE("ghz collection: even paths transfer with the aux fix") {
    for (int k : {2, 4, 6}) {
        Graph out = ghz_collect_step(collect_fixture(k), 0, collect_path(k), 5,
                                     std::pair<int, int>{6, 7});
        CHECK(is_star_at_5(out));
    }
}

TEST_CASE("ghz even-path fix matches the statevector oracle") {
    for (int k : {2, 4}) {
        Graph g = collect_fixture(k);
        std::vector<SequenceStep> seq{{6, Basis::Z, false}, {7, Basis::Z, false}};
        auto path = collect_path(k);
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            seq.push_back({path[i], Basis::Y, false});
        }
        seq.push_back(SequenceStep::lc(0));
        seq.push_back({path.back(), Basis::Y, false});
        seq.push_back({path.front(), Basis::Y, false});
        CHECK(sequence_matches_oracle(g, seq));
        CHECK(execute_sequence(g, seq).graph ==
              ghz_collect_step(g, 0, path, 5, std::pair<int, int>{6, 7}));
    }
}

TEST_CASE("ghz collection validates the path") {
    Graph g = collect_fixture(3);
    CHECK_THROWS_AS(ghz_collect_step(g, 0, {10, 12}, 5), DomainError);  // path break
    CHECK_THROWS_AS(ghz_collect_step(g, 0, {}, 5), DomainError);
}

TEST_CASE("plan context guards its cells") {
    PlanContext ctx(GridSpec{4, 4});
    ctx.apply({1, 1}, Basis::Z, "t");
    CHECK_THROWS_AS(ctx.apply({1, 1}, Basis::X, "t"), SpaceError);
    CHECK_THROWS_AS(ctx.apply({7, 0}, Basis::Z, "t"), SpaceError);
    CHECK_THROWS_AS(ctx.apply_lc({1, 1}, "t"), DomainError);
    ctx.pattern.set({2, 2}, CellRole::Target);
    CHECK_THROWS_AS(ctx.apply({2, 2}, Basis::Z, "t"), SpaceError);
}

TEST_CASE("plan JSON roundtrip") {
    GridSpec spec{6, 6};
    PlanContext ctx(spec);
    Coord a{0, 5}, b{5, 0};
    ctx.pattern.set(a, CellRole::Target);
    ctx.pattern.set(b, CellRole::Target);
    zipper_connect(ctx, a, b);
    ctx.apply_lc({0, 5}, "demo-lc");

    Plan plan{spec, {a, b}, ctx.steps, ctx.graph, {}};
    for (const auto& s : ctx.steps) {
        if (s.local_complementation) continue;
        if (s.basis == Basis::X) ++plan.stats.n_x;
        if (s.basis == Basis::Y) ++plan.stats.n_y;
        if (s.basis == Basis::Z) ++plan.stats.n_z;
    }
    plan.stats.total = plan.stats.n_x + plan.stats.n_y + plan.stats.n_z;
    plan.stats.n_e = 1;
    plan.stats.N = 6;

    Plan back = Plan::from_json(plan.to_json());
    CHECK(back == plan);
}
