#include "gsx/graph.hpp"

#include <algorithm>
#include <random>

#include <json.hpp>

#include "gsx/errors.hpp"

namespace gsx {

char basis_char(Basis b) {
    switch (b) {
        case Basis::X: return 'X';
        case Basis::Y: return 'Y';
        case Basis::Z: return 'Z';
    }
    return '?';
}

Graph Graph::from_edges(const std::vector<int>& vertices,
                        const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    for (int v : vertices) g.add_vertex(v);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

void Graph::add_vertex(int v) { adj_.try_emplace(v); }

void Graph::remove_vertex(int v) {
    require_vertex(v);
    for (int b : adj_[v]) adj_[b].erase(v);
    adj_.erase(v);
}

void Graph::require_vertex(int v) const {
    if (!has_vertex(v)) throw DomainError("unknown vertex " + std::to_string(v));
}

void Graph::add_edge(int a, int b) {
    require_vertex(a);
    require_vertex(b);
    if (a == b) throw DomainError("self-loop at vertex " + std::to_string(a));
    adj_[a].insert(b);
    adj_[b].insert(a);
}

void Graph::remove_edge(int a, int b) {
    require_vertex(a);
    require_vertex(b);
    adj_[a].erase(b);
    adj_[b].erase(a);
}

void Graph::toggle_edge(int a, int b) {
    if (has_edge(a, b)) {
        remove_edge(a, b);
    } else {
        add_edge(a, b);
    }
}

bool Graph::has_edge(int a, int b) const {
    auto it = adj_.find(a);
    return it != adj_.end() && it->second.count(b) != 0;
}

const std::set<int>& Graph::neighbors(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw DomainError("unknown vertex " + std::to_string(v));
    return it->second;
}

std::size_t Graph::num_edges() const {
    std::size_t twice = 0;
    for (const auto& [v, nbrs] : adj_) twice += nbrs.size();
    return twice / 2;
}

std::vector<int> Graph::vertices() const {
    std::vector<int> out;
    out.reserve(adj_.size());
    for (const auto& [v, nbrs] : adj_) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [v, nbrs] : adj_) {
        for (int b : nbrs) {
            if (v < b) out.emplace_back(v, b);
        }
    }
    return out;  // adj_ is an ordered map, so this is already sorted
}

std::string Graph::to_json() const {
    nlohmann::json j;
    j["vertices"] = vertices();
    auto es = nlohmann::json::array();
    for (auto [a, b] : edges()) es.push_back({a, b});
    j["edges"] = es;
    return j.dump();
}

Graph Graph::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Graph g;
    for (int v : j.at("vertices")) g.add_vertex(v);
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0), e.at(1));
    return g;
}

Graph local_complement(const Graph& g, int a) {
    const auto& nbrs = g.neighbors(a);
    Graph out = g;
    for (auto it = nbrs.begin(); it != nbrs.end(); ++it) {
        for (auto jt = std::next(it); jt != nbrs.end(); ++jt) {
            out.toggle_edge(*it, *jt);
        }
    }
    return out;
}

void accumulate_lc_unitaries(const Graph& g, int a, CorrectionFrame& frame) {
    // state F|G> -> L F |G> = (L F Ldag) |tau_a G>
    auto conj = [&](int v, const LocalClifford& l) {
        frame.set(v, compose(compose(l, frame.at(v)), l.inverse()));
    };
    conj(a, cliffords::sqrt_mi_x);
    for (int b : g.neighbors(a)) conj(b, cliffords::sqrt_i_z);
}

static void check_outcome(int outcome) {
    if (outcome != 1 && outcome != -1) throw DomainError("outcome must be +1 or -1");
}

MeasureResult measure_z(const Graph& g, int a, int outcome) {
    check_outcome(outcome);
    auto nbrs = g.neighbors(a);
    Graph out = g;
    out.remove_vertex(a);
    CorrectionFrame frame;
    if (outcome == -1) {
        for (int b : nbrs) frame.set(b, cliffords::pauli_z);
    }
    return {std::move(out), std::move(frame), {a, Basis::Z, outcome, std::nullopt}};
}

MeasureResult measure_y(const Graph& g, int a, int outcome) {
    check_outcome(outcome);
    auto nbrs = g.neighbors(a);
    Graph out = local_complement(g, a);
    out.remove_vertex(a);
    CorrectionFrame frame;
    const auto& byproduct = outcome == 1 ? cliffords::sqrt_mi_z : cliffords::sqrt_i_z;
    for (int b : nbrs) frame.set(b, byproduct);
    return {std::move(out), std::move(frame), {a, Basis::Y, outcome, std::nullopt}};
}

MeasureResult measure_x(const Graph& g, int a, int outcome, std::optional<int> b0) {
    check_outcome(outcome);
    const auto& na = g.neighbors(a);
    if (na.empty()) {
        if (outcome == -1) {
            throw ImpossibleOutcomeError("X on isolated vertex " + std::to_string(a) +
                                         " is deterministically +1");
        }
        Graph out = g;
        out.remove_vertex(a);
        return {std::move(out), CorrectionFrame{}, {a, Basis::X, outcome, std::nullopt}};
    }
    int chosen = b0.value_or(*na.begin());
    if (na.count(chosen) == 0) {
        throw DomainError("chosen neighbor " + std::to_string(chosen) +
                          " is not adjacent to " + std::to_string(a));
    }
    const auto nb0 = g.neighbors(chosen);

    Graph out = local_complement(local_complement(g, chosen), a);
    out.remove_vertex(a);
    out = local_complement(out, chosen);

    CorrectionFrame frame;
    if (outcome == 1) {
        frame.set(chosen, cliffords::sqrt_i_y);
        for (int b : na) {
            if (b != chosen && nb0.count(b) == 0) frame.apply_after(b, cliffords::pauli_z);
        }
    } else {
        frame.set(chosen, cliffords::sqrt_mi_y);
        for (int b : nb0) {
            if (b != a && na.count(b) == 0) frame.apply_after(b, cliffords::pauli_z);
        }
    }
    return {std::move(out), std::move(frame), {a, Basis::X, outcome, chosen}};
}

SequenceResult execute_sequence(const Graph& g, const std::vector<SequenceStep>& steps,
                                std::optional<unsigned> rng_seed) {
    std::set<int> seen;
    for (const auto& s : steps) {
        if (s.local_complementation) continue;
        if (!seen.insert(s.vertex).second) {
            throw DomainError("duplicate vertex " + std::to_string(s.vertex) + " in steps");
        }
        if (!g.has_vertex(s.vertex)) {
            throw DomainError("unknown vertex " + std::to_string(s.vertex) + " in steps");
        }
    }

    std::mt19937 rng(rng_seed.value_or(0));
    auto coin = [&]() { return rng_seed ? (rng() & 1u ? 1 : -1) : 1; };

    SequenceResult res{g, CorrectionFrame{}, {}};
    for (const auto& s : steps) {
        if (s.local_complementation) {
            accumulate_lc_unitaries(res.graph, s.vertex, res.frame);
            res.graph = local_complement(res.graph, s.vertex);
            continue;
        }
        // Ideal-rule semantics: the rule for the requested basis acts on
        // the bare graph. Physically this corresponds to undoing the
        // pending byproduct on this qubit (a free local unitary) before
        // measuring; outcomes recorded here are bare-graph outcomes.
        int outcome = coin();
        if (s.basis == Basis::X && res.graph.neighbors(s.vertex).empty()) {
            outcome = 1;  // X on an isolated vertex is deterministic
        }

        MeasureResult m = s.basis == Basis::X
                              ? measure_x(res.graph, s.vertex, outcome, s.chosen_neighbor)
                          : s.basis == Basis::Y
                              ? measure_y(res.graph, s.vertex, outcome)
                              : measure_z(res.graph, s.vertex, outcome);
        res.graph = std::move(m.graph);
        res.frame.erase(s.vertex);
        for (const auto& [v, op] : m.frame.entries()) res.frame.apply_before(v, op);
        res.records.push_back({s.vertex, s.basis, outcome, m.record.chosen_neighbor});
    }
    return res;
}

}  // namespace gsx
