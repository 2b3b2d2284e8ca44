#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsx/lattice.hpp"

namespace gsx {

/// One planned cell measurement. A step with `local_complementation` set
/// is a free single-qubit operation (no measurement); `basis` is ignored
/// and it is not counted in CostReport totals.
struct PlanStep {
    Coord coord;
    Basis basis = Basis::Z;
    bool local_complementation = false;
    int order = 0;
    std::string tag;
    std::optional<Coord> chosen_neighbor;  // pins the X-rule b0 cell

    bool operator==(const PlanStep&) const = default;
};

struct CostReport {
    int n_x = 0;
    int n_y = 0;
    int n_z = 0;
    int total = 0;  // n_x + n_y + n_z
    int n_e = 0;    // target edge count
    int n_l = 0;    // long-range edge count
    int N = 0;      // grid scale (side length)
    int N_c = 0;    // short-range scale
    int n_exp = 0;  // expansion applications

    bool operator==(const CostReport&) const = default;
};

struct Plan {
    GridSpec grid;
    std::vector<Coord> targets;
    std::vector<PlanStep> steps;
    Graph predicted_graph;
    CostReport stats;

    std::string to_json() const;
    static Plan from_json(const std::string& text);

    bool operator==(const Plan&) const = default;
};

/// Mutable planning state threaded through the fragment builders: the
/// measurement pattern so far, the simulated post-measurement graph
/// (all outcomes +1), and the ordered step list.
struct PlanContext {
    explicit PlanContext(GridSpec spec)
        : pattern(spec), graph(cluster_graph(spec)) {}

    GridPattern pattern;
    Graph graph;
    std::vector<PlanStep> steps;

    /// Marks the cell, simulates the measurement (outcome +1), appends
    /// the step. Throws SpaceError when the cell is off-grid or taken.
    /// `b0` pins the X-rule neighbor choice when given.
    void apply(Coord c, Basis b, const std::string& tag,
               std::optional<Coord> b0 = std::nullopt);

    /// Appends a free local-complementation step at a live cell.
    void apply_lc(Coord c, const std::string& tag);
};

/// The portion of a PlanContext contributed by one primitive.
struct Fragment {
    std::size_t first_step = 0;  // index into PlanContext::steps
    std::size_t step_count = 0;
    std::vector<Coord> stubs;  // new neighbor stubs (expansion tools)
};

enum class Dir : uint8_t { Up, Down, Left, Right };

Coord dir_delta(Dir d);

/// Connects a and b along a routed path (one-turn staircase preferred,
/// then a monotone staircase router, then a graph router). A pure
/// alternating staircase is X-chained with each step's b0 pinned to an
/// off-path side neighbor (which leaves {a,b} behind as a Bell edge and
/// knits the surrounding lattice back together); bent routes fall back
/// to an isolated wire (Z the interior neighbors, Y-contract the
/// interiors). The residual isolation set is computed semantically:
/// after simulating the chain, Z whatever still clings to a or b.
/// Vertices in `keep` are never measured and routes keep clear of
/// them, including their graph neighborhoods: an X or Y measurement on
/// a cell adjacent to a protected vertex would toggle its edges.
Fragment zipper_connect(PlanContext& ctx, Coord a, Coord b,
                        const std::vector<Coord>& keep = {});

/// Fuses the subgraph hanging off y1 onto y2 through the degree-2
/// connector y3 (Y on y1, then Y on y3). Requires edges y1-y3 and y3-y2,
/// degree(y3) == 2, and disjoint sides: no edge from y1 or y2 into the
/// opposite subgraph.
Graph merge_subgraphs(const Graph& g, int y1, int y3, int y2);

/// Unidirectional vertex degree expansion: n_exp applications along
/// `direction`, 4 steps each (2 Z, then Y on Y1, Y on Y3), raising
/// deg(v) by 2 per application. Stubs exit on both sides of the column.
Fragment expand_degree(PlanContext& ctx, Coord v, Dir direction, int n_exp);

/// Degree expansion whose stubs all exit on the top side of the region:
/// a two-cell riser above v feeds a horizontal chain of gadget
/// applications. Exactly 12 * n_exp + 8 steps, degree delta 2 * n_exp.
Fragment expand_degree_u_shaped(PlanContext& ctx, Coord v, int n_exp);

/// Turns interior cell a plus four routed endpoints into the 5-qubit
/// star (GHZ) centered at a: zipper from each grid neighbor of a to its
/// assigned endpoint (minimum total Manhattan assignment), then Y-merge
/// the four neighbors.
Fragment hub_connect_degree4(PlanContext& ctx, Coord a,
                             const std::array<Coord, 4>& endpoints);

/// One GHZ-collection move: transfers the star center along `path`
/// (interior vertices between center and next). Odd path: plain X chain.
/// Even path: Z both aux vertices (adjacent to the first/last path
/// vertex), Y-contract the middle vertices, local-complement the old
/// center, then Y the last and first path vertices.
Graph ghz_collect_step(const Graph& g, int center, const std::vector<int>& path,
                       int next, std::optional<std::pair<int, int>> aux = std::nullopt);

}  // namespace gsx
