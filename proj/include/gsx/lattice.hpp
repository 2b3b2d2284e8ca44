#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gsx/graph.hpp"

namespace gsx {

struct Coord {
    int x = 0;
    int y = 0;

    auto operator<=>(const Coord&) const = default;
};

/// Rectangular cluster-lattice dimensions. Vertex id = y * width + x.
struct GridSpec {
    int width = 0;
    int height = 0;

    bool operator==(const GridSpec&) const = default;

    bool contains(Coord c) const {
        return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height;
    }
    int vertex_id(Coord c) const { return c.y * width + c.x; }
    Coord coord_of(int id) const { return {id % width, id / width}; }
};

enum class CellRole : uint8_t { Free, Target, MeasX, MeasY, MeasZ, Junction };

char role_char(CellRole r);
CellRole role_from_char(char c);

/// Per-site measurement-role array over a grid. FREE cells are implicit.
class GridPattern {
  public:
    explicit GridPattern(GridSpec spec);

    const GridSpec& spec() const { return spec_; }

    CellRole at(Coord c) const;
    bool is_free(Coord c) const { return at(c) == CellRole::Free; }

    /// Marks a cell. A TARGET cell is never overwritten by a measurement
    /// role (domain error); re-marking with the same role is a no-op.
    void set(Coord c, CellRole role);

    /// Non-FREE cells sorted by (y, x).
    std::vector<std::pair<Coord, CellRole>> cells() const;

    std::string to_json() const;
    static GridPattern from_json(const std::string& text);

    bool operator==(const GridPattern&) const = default;

  private:
    GridSpec spec_;
    std::vector<CellRole> roles_;  // dense, row-major
};

/// Full grid graph with 4-neighbor edges.
Graph cluster_graph(const GridSpec& spec);

int manhattan(Coord a, Coord b);

struct Patch {
    std::vector<Coord> cells;  // sorted by (y, x)
};

/// Maximal 4-connected components of FREE cells.
std::vector<Patch> find_free_patches(const GridPattern& p);

struct NearestResult {
    Coord n;       // chosen vertex from S
    Coord j;       // pattern cell realizing the connection
    int distance;  // unit-step path length from j to n
};

/// Finds the vertex of S nearest to the marked pattern (unit-cost
/// 4-neighbor search through FREE cells) and the junction cell j serving
/// it. j must keep at least two FREE orthogonal neighbors spare (merge +
/// isolation); otherwise the next-nearest qualifying pattern cell is
/// taken. Throws NoPathError when no vertex of S is reachable.
NearestResult dijkstra_nearest(const GridPattern& p, const std::vector<Coord>& s);

/// Staircase path with at most one turn between a and b, from the two
/// intersection-column candidates (ascending-first preference). Interior
/// cells must be FREE; returns the full cell sequence a..b, or nullopt
/// when both branches are blocked or the parity does not admit one.
std::optional<std::vector<Coord>> one_turn_staircase(const GridPattern& p, Coord a, Coord b);

/// Marks the interior of a one-turn staircase between j and n as MEAS_X.
/// Throws NoPathError when no one-turn staircase exists.
GridPattern one_turn_zipper(Coord n, Coord j, const GridPattern& p);

/// Fallback router over an arbitrary current-graph adjacency (used when
/// the one-turn staircase is blocked, e.g. across an already-zippered
/// region). Interior cells must be FREE in the pattern. Straight
/// continuations cost 3 per step, turns cost 1, so staircases win.
std::optional<std::vector<Coord>> route_on_graph(const GridPattern& p, const Graph& g,
                                                 Coord from, Coord to);

}  // namespace gsx
