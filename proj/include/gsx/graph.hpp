#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gsx/clifford.hpp"

namespace gsx {

/// Simple undirected graph describing a graph state up to tracked local
/// corrections. Vertex ids are opaque integers.
class Graph {
  public:
    Graph() = default;

    static Graph from_edges(const std::vector<int>& vertices,
                            const std::vector<std::pair<int, int>>& edges);

    void add_vertex(int v);
    void remove_vertex(int v);  // also removes incident edges
    bool has_vertex(int v) const { return adj_.count(v) != 0; }

    void add_edge(int a, int b);
    void remove_edge(int a, int b);
    void toggle_edge(int a, int b);
    bool has_edge(int a, int b) const;

    const std::set<int>& neighbors(int v) const;
    std::size_t degree(int v) const { return neighbors(v).size(); }

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const;

    std::vector<int> vertices() const;
    /// Edges with smaller id first, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    /// Canonical JSON: {"vertices":[...],"edges":[[a,b],...]}.
    std::string to_json() const;
    static Graph from_json(const std::string& text);

    bool operator==(const Graph&) const = default;

  private:
    void require_vertex(int v) const;

    std::map<int, std::set<int>> adj_;
};

enum class Basis : uint8_t { X, Y, Z };

char basis_char(Basis b);

struct MeasurementRecord {
    int vertex;
    Basis basis;
    int outcome;  // +1 or -1
    std::optional<int> chosen_neighbor;  // X rule only, when degree >= 1
};

struct MeasureResult {
    Graph graph;
    CorrectionFrame frame;  // byproduct only, for this single measurement
    MeasurementRecord record;
};

/// Toggles all edges among the neighbors of `a`. Involution.
Graph local_complement(const Graph& g, int a);

/// Per-qubit unitaries realizing local complementation at `a`:
/// sqrt(-iX) on a, sqrt(iZ) on each neighbor. Applied after `frame`.
void accumulate_lc_unitaries(const Graph& g, int a, CorrectionFrame& frame);

MeasureResult measure_z(const Graph& g, int a, int outcome);
MeasureResult measure_y(const Graph& g, int a, int outcome);
MeasureResult measure_x(const Graph& g, int a, int outcome,
                        std::optional<int> b0 = std::nullopt);

/// One step of a measurement sequence: a plain Pauli measurement, or a
/// local complementation (realizable by single-qubit unitaries, so it is
/// free at the measurement-count level).
struct SequenceStep {
    int vertex;
    Basis basis;
    bool local_complementation = false;  // when set, basis is ignored
    std::optional<int> chosen_neighbor = std::nullopt;  // pins the X-rule b0

    static SequenceStep lc(int vertex) { return {vertex, Basis::X, true}; }
};

struct SequenceResult {
    Graph graph;
    CorrectionFrame frame;
    std::vector<MeasurementRecord> records;
};

/// Applies the graphical rules in order with fixed outcome +1 (or random
/// outcomes from `rng_seed` if given). Each rule acts on the bare graph
/// in the requested basis; physically this assumes the pending byproduct
/// on the measured qubit is undone first (a free local unitary).
SequenceResult execute_sequence(const Graph& g, const std::vector<SequenceStep>& steps,
                                std::optional<unsigned> rng_seed = std::nullopt);

}  // namespace gsx
