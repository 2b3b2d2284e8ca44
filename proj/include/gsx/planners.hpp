#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsx/primitives.hpp"

namespace gsx {

enum class Strategy : uint8_t { Lvde, Ovde, Cg };

std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

/// Axis-aligned rectangle, both corners inclusive.
struct Rect {
    Coord min;
    Coord max;

    bool operator==(const Rect&) const = default;
};

struct ExtractionRequest {
    GridSpec grid;
    std::vector<std::pair<std::string, Coord>> targets;  // label -> cell
    std::vector<std::pair<std::string, std::string>> edges;
    Strategy strategy = Strategy::Lvde;
    std::optional<Rect> cg_region;

    Coord coord_of(const std::string& label) const;
    /// Labels unique, coords distinct and in-grid, edges reference known
    /// labels and are distinct; throws DomainError otherwise.
    void validate() const;

    std::string to_json() const;
    static ExtractionRequest from_json(const std::string& text);

    bool operator==(const ExtractionRequest&) const = default;
};

/// One logical gate of the central-generation schedule.
struct GateOp {
    enum class Kind : uint8_t { CZ, Swap } kind;
    std::string a;
    std::string b;

    bool operator==(const GateOp&) const = default;
};

/// Stage-1 schedule for central generation: walks each vertex rightward
/// along a logical wire, emitting a CZ per required edge met and a SWAP
/// to keep walking.
std::vector<GateOp> cg_schedule(const ExtractionRequest& req);

/// Local vertex degree expansion strategy: per-target degree expansion
/// where the free lattice neighbors do not cover the required degree,
/// then one zipper + junction merge per requested edge.
Plan plan_lvde(const ExtractionRequest& req);

/// Optimized vertex degree expansion: vertices in descending
/// required-degree order; a vertex with >= 2 outstanding edges gets its
/// star built around an ancilla hub placed in a free patch near the
/// leaves (nearest-first leaf order), then the hub is X-walked onto the
/// vertex; single outstanding edges connect as in plan_lvde.
Plan plan_ovde(const ExtractionRequest& req);

/// Central generation: compiles the cg_schedule onto proxy cells inside
/// cg_region (or an auto-selected central row), then transports each
/// proxy to its target with a zipper + X-walk.
Plan plan_cg(const ExtractionRequest& req);

Plan plan(const ExtractionRequest& req);

/// Replays the plan through the graph rules (outcome +1) and checks the
/// result against predicted_graph; mismatch throws ConsistencyError.
std::pair<Graph, CorrectionFrame> execute_plan(const Plan& plan);

/// Per-basis counts recomputed from the steps, request parameters taken
/// from the plan.
CostReport cost_report(const Plan& plan);

}  // namespace gsx
