#include "gsx/primitives.hpp"
#include <cstdio>
#include <cstdlib>

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "gsx/errors.hpp"

namespace gsx {

namespace {

Coord operator+(Coord a, Coord b) { return {a.x + b.x, a.y + b.y}; }
Coord operator*(Coord a, int k) { return {a.x * k, a.y * k}; }

std::string coord_str(Coord c) {
    return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

CellRole role_for(Basis b) {
    switch (b) {
        case Basis::X: return CellRole::MeasX;
        case Basis::Y: return CellRole::MeasY;
        case Basis::Z: return CellRole::MeasZ;
    }
    return CellRole::MeasZ;
}

/// Cells a primitive may still measure: FREE, or a reserved junction.
bool measurable(const GridPattern& p, Coord c) {
    CellRole r = p.at(c);
    return r == CellRole::Free || r == CellRole::Junction;
}

void require_free(const GridPattern& p, Coord c, const std::string& what) {
    if (!p.spec().contains(c)) {
        throw SpaceError(what + " needs cell " + coord_str(c) + " outside the grid");
    }
    if (!p.is_free(c)) {
        throw SpaceError(what + " blocked at " + coord_str(c));
    }
}

Graph simulate(Graph g, int v, Basis b, std::optional<int> b0 = std::nullopt) {
    switch (b) {
        case Basis::X: return measure_x(g, v, 1, b0).graph;
        case Basis::Y: return measure_y(g, v, 1).graph;
        case Basis::Z: return measure_z(g, v, 1).graph;
    }
    return g;
}

/// Shortest monotone grid route (moves only toward `to` on both axes,
/// so the path can never touch itself) over live free cells, with turns
/// preferred over straight runs. Staircase generalization for endpoint
/// pairs whose one-turn staircase is blocked or has odd parity.
std::optional<std::vector<Coord>> monotone_route(const GridPattern& p, const Graph& g, Coord from,
                                                 Coord to, const std::set<int>& avoid_near = {},
                                                 const std::set<int>& blocked = {}) {
    const GridSpec& spec = p.spec();
    // Isolation Z measurements for a wire interior reach one cell out, so
    // penalize cells within two steps of a protected cell: a wire hugging
    // one would seal the free pocket around it.
    auto near_penalty = [&](Coord c) {
        int pen = 0;
        for (int dx = -2; dx <= 2; ++dx) {
            for (int dy = -2 + std::abs(dx); dy <= 2 - std::abs(dx); ++dy) {
                Coord n = c + Coord{dx, dy};
                if (!spec.contains(n) || !avoid_near.count(spec.vertex_id(n))) continue;
                pen += std::abs(dx) + std::abs(dy) <= 1 ? 50 : 20;
            }
        }
        return pen;
    };
    int sx = to.x > from.x ? 1 : -1, sy = to.y > from.y ? 1 : -1;
    std::vector<Coord> moves;
    if (to.x != from.x) moves.push_back({sx, 0});
    if (to.y != from.y) moves.push_back({0, sy});
    if (moves.empty()) return std::nullopt;

    using State = std::pair<Coord, Coord>;  // cell, incoming delta
    std::map<State, int> best;
    std::map<State, State> parent;
    std::priority_queue<std::pair<int, State>, std::vector<std::pair<int, State>>, std::greater<>>
        queue;
    State start{from, {0, 0}};
    best[start] = 0;
    queue.push({0, start});
    std::optional<State> goal;
    while (!queue.empty()) {
        auto [cost, state] = queue.top();
        queue.pop();
        if (cost > best.at(state)) continue;
        if (state.first == to) {
            goal = state;
            break;
        }
        for (Coord d : moves) {
            Coord nc = state.first + d;
            if ((sx > 0 ? nc.x > to.x : nc.x < to.x) || (sy > 0 ? nc.y > to.y : nc.y < to.y)) {
                continue;
            }
            if (nc != to && (!p.is_free(nc) || blocked.count(spec.vertex_id(nc)))) continue;
            if (!g.has_edge(spec.vertex_id(state.first), spec.vertex_id(nc))) continue;
            int step = (d == state.second ? 3 : 1) + near_penalty(nc);  // prefer staircase turns
            State next{nc, d};
            auto it = best.find(next);
            if (it != best.end() && it->second <= cost + step) continue;
            best[next] = cost + step;
            parent[next] = state;
            queue.push({cost + step, next});
        }
    }
    if (!goal) return std::nullopt;
    std::vector<Coord> path;
    for (State s = *goal;; s = parent.at(s)) {
        path.push_back(s.first);
        if (s.first == from && s.second == Coord{0, 0}) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

/// Component of `start` in g with `removed` taken out.
std::set<int> component_without(const Graph& g, int start, int removed) {
    std::set<int> seen{start};
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (w == removed || seen.count(w)) continue;
            seen.insert(w);
            stack.push_back(w);
        }
    }
    return seen;
}

}  // namespace

Coord dir_delta(Dir d) {
    switch (d) {
        case Dir::Up: return {0, -1};
        case Dir::Down: return {0, 1};
        case Dir::Left: return {-1, 0};
        case Dir::Right: return {1, 0};
    }
    return {0, 0};
}

void PlanContext::apply(Coord c, Basis b, const std::string& tag, std::optional<Coord> b0) {
    if (!pattern.spec().contains(c)) {
        throw SpaceError("step at " + coord_str(c) + " outside the grid");
    }
    if (!measurable(pattern, c)) {
        throw SpaceError("step at " + coord_str(c) + " hits an occupied cell");
    }
    std::optional<int> b0v;
    if (b0) b0v = pattern.spec().vertex_id(*b0);
    pattern.set(c, role_for(b));
    graph = simulate(graph, pattern.spec().vertex_id(c), b, b0v);
    steps.push_back({c, b, false, int(steps.size()), tag, b0});
}

void PlanContext::apply_lc(Coord c, const std::string& tag) {
    int v = pattern.spec().vertex_id(c);
    if (!graph.has_vertex(v)) {
        throw DomainError("local complementation at measured cell " + coord_str(c));
    }
    graph = local_complement(graph, v);
    steps.push_back({c, Basis::X, true, int(steps.size()), tag});
}

Fragment zipper_connect(PlanContext& ctx, Coord a, Coord b, const std::vector<Coord>& keep) {
    const GridSpec& spec = ctx.pattern.spec();
    int av = spec.vertex_id(a);
    int bv = spec.vertex_id(b);
    if (!ctx.graph.has_vertex(av) || !ctx.graph.has_vertex(bv)) {
        throw DomainError("zipper endpoint already measured");
    }
    Fragment frag{ctx.steps.size(), 0, {a, b}};
    if (ctx.graph.has_edge(av, bv)) return frag;

    std::set<int> protected_ids{av, bv};
    for (Coord k : keep) protected_ids.insert(spec.vertex_id(k));

    // Foreign protected cells: routes must keep their distance, or the
    // chain sprays junk edges onto them that nothing may prune later.
    std::set<int> foreign = protected_ids;
    foreign.erase(av);
    foreign.erase(bv);
    auto hugs_foreign = [&](const std::vector<Coord>& p) {
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            for (Coord d : {Coord{0, -1}, Coord{-1, 0}, Coord{1, 0}, Coord{0, 1}}) {
                Coord n = p[i] + d;
                if (spec.contains(n) && foreign.count(spec.vertex_id(n))) return true;
            }
        }
        return false;
    };

    // A one-turn staircase whose turn column falls outside the a-b
    // bounding box doubles back on itself; the monotone router handles
    // those pairs better.
    auto in_box = [&](const std::vector<Coord>& p) {
        for (Coord c : p) {
            if (c.x < std::min(a.x, b.x) || c.x > std::max(a.x, b.x) ||
                c.y < std::min(a.y, b.y) || c.y > std::max(a.y, b.y)) {
                return false;
            }
        }
        return true;
    };
    // Route interiors carry X or Y measurements whose local
    // complementations reach one cell further, so any cell graph-adjacent
    // to a foreign protected cell is off limits for routing.
    std::set<int> blocked;
    for (int f : foreign) {
        if (!ctx.graph.has_vertex(f)) continue;
        for (int w : ctx.graph.neighbors(f)) {
            if (w != av && w != bv) blocked.insert(w);
        }
    }
    auto path = one_turn_staircase(ctx.pattern, a, b);
    if (path) {
        for (std::size_t i = 1; path && i < path->size(); ++i) {
            if (i + 1 < path->size() && blocked.count(spec.vertex_id((*path)[i]))) path.reset();
            if (path &&
                !ctx.graph.has_edge(spec.vertex_id((*path)[i - 1]), spec.vertex_id((*path)[i]))) {
                path.reset();
            }
        }
    }
    if (path && (hugs_foreign(*path) || !in_box(*path))) path.reset();
    if (!path) path = monotone_route(ctx.pattern, ctx.graph, a, b, foreign, blocked);
    if (!path) {
        Graph masked = ctx.graph;
        for (int w : blocked) {
            if (masked.has_vertex(w)) masked.remove_vertex(w);
        }
        path = route_on_graph(ctx.pattern, masked, a, b);
    }
    if (!path) {
        if (getenv("GSX_DEBUG")) {
            fprintf(stderr, "[zip] NO ROUTE %s -> %s\n", coord_str(a).c_str(),
                    coord_str(b).c_str());
            for (int y = 0; y < spec.height; ++y) {
                for (int x = 0; x < spec.width; ++x) {
                    Coord c{x, y};
                    int v = spec.vertex_id(c);
                    char ch = role_char(ctx.pattern.at(c));
                    if (c == a || c == b) ch = '@';
                    else if (blocked.count(v)) ch = '#';
                    else if (ch == '.' && !ctx.graph.has_vertex(v)) ch = ' ';
                    fputc(ch, stderr);
                }
                fputc('\n', stderr);
            }
        }
        throw NoPathError("no zipper route between " + coord_str(a) + " and " + coord_str(b));
    }
    if (getenv("GSX_DEBUG")) {
        fprintf(stderr, "[zip] %s -> %s route:", coord_str(a).c_str(), coord_str(b).c_str());
        for (Coord c : *path) fprintf(stderr, " %s", coord_str(c).c_str());
        fprintf(stderr, "\n");
    }

    // Routes through lattice regions rewired by earlier fragments can
    // carry chords (graph edges between non-consecutive route cells);
    // contracting a chordy path scrambles the wire. Greedy shortcut to
    // the latest adjacent route cell leaves a chordless graph path.
    {
        std::vector<Coord> cut{(*path)[0]};
        std::size_t i = 0;
        while (i + 1 < path->size()) {
            std::size_t j = path->size() - 1;
            while (j > i + 1 &&
                   !ctx.graph.has_edge(spec.vertex_id((*path)[i]), spec.vertex_id((*path)[j]))) {
                --j;
            }
            cut.push_back((*path)[j]);
            i = j;
        }
        *path = std::move(cut);
    }

    std::set<int> path_ids;
    for (Coord c : *path) path_ids.insert(spec.vertex_id(c));
    bool staircase = true;
    for (std::size_t i = 1; i < path->size(); ++i) {
        if (manhattan((*path)[i - 1], (*path)[i]) != 1) staircase = false;
    }
    for (std::size_t i = 1; staircase && i + 1 < path->size(); ++i) {
        Coord prev = (*path)[i - 1], next = (*path)[i + 1];
        if (prev.x == next.x || prev.y == next.y) staircase = false;
    }

    // The whole fragment is simulated on a trial graph first, recording
    // each op; emission replays the record through the plan context.
    struct Op {
        Coord c;
        Basis basis;
        std::optional<Coord> b0;
        const char* tag;
    };
    Graph trial = ctx.graph;
    std::vector<Op> ops;
    auto done = [&](Coord c) {
        for (const Op& o : ops) {
            if (o.c == c) return true;
        }
        return false;
    };
    auto record = [&](Coord c, Basis basis, std::optional<Coord> b0, const char* tag) {
        std::optional<int> b0v;
        if (b0) b0v = spec.vertex_id(*b0);
        trial = simulate(trial, spec.vertex_id(c), basis, b0v);
        ops.push_back({c, basis, b0, tag});
    };

    if (staircase) {
        // Pure staircase: X-chain the interiors, each step's b0 pinned to
        // an off-path side neighbor where one is live (this choice makes
        // the chain leave the pair behind and knit the lattice back
        // together across the path); fall back to the path successor,
        // then to any unprotected neighbor. The X rule applies local
        // complementations at b0, so candidates whose neighborhood
        // touches a foreign protected cell are taken only as last resort.
        for (std::size_t i = 1; i + 1 < path->size(); ++i) {
            Coord cur = (*path)[i];
            int v = spec.vertex_id(cur);
            int succ = spec.vertex_id((*path)[i + 1]);
            auto touches_foreign = [&](int w) {
                for (int n : trial.neighbors(w)) {
                    if (foreign.count(n)) return true;
                }
                return false;
            };
            std::optional<int> b0;
            for (bool strict : {true, false}) {
                for (Coord d : {Coord{0, -1}, Coord{-1, 0}, Coord{1, 0}, Coord{0, 1}}) {
                    Coord s = cur + d;
                    if (!spec.contains(s)) continue;
                    int sv = spec.vertex_id(s);
                    if (path_ids.count(sv) || protected_ids.count(sv)) continue;
                    if (!trial.has_vertex(sv) || !trial.has_edge(v, sv)) continue;
                    if (strict && touches_foreign(sv)) continue;
                    b0 = sv;
                    break;
                }
                if (!b0 && trial.has_edge(v, succ) &&
                    (!strict || (!protected_ids.count(succ) && !touches_foreign(succ)))) {
                    b0 = succ;
                }
                if (b0) break;
            }
            if (!b0) {
                for (int w : trial.neighbors(v)) {
                    if (!protected_ids.count(w)) {
                        b0 = w;
                        break;
                    }
                }
            }
            record(cur, Basis::X, b0 ? std::optional<Coord>(spec.coord_of(*b0)) : std::nullopt,
                   "zipper-path");
        }
        // If the chain left the pair linked only through leftover junk
        // (it happens when the route leans on lattice regions rewired by
        // earlier fragments), fuse a shortest junk path with Y steps.
        if (!trial.has_edge(av, bv)) {
            std::map<int, int> parent;
            std::vector<int> frontier{av};
            parent[av] = av;
            while (!frontier.empty() && !parent.count(bv)) {
                std::vector<int> next;
                for (int v : frontier) {
                    for (int w : trial.neighbors(v)) {
                        if (parent.count(w)) continue;
                        if (w != bv && (protected_ids.count(w) || blocked.count(w) ||
                                        ctx.pattern.at(spec.coord_of(w)) == CellRole::Target)) {
                            continue;
                        }
                        parent[w] = v;
                        next.push_back(w);
                    }
                }
                frontier = std::move(next);
            }
            if (!parent.count(bv)) {
                if (getenv("GSX_DEBUG")) fprintf(stderr, "[zip] BFS fuse failed\n");
                throw ConsistencyError("zipper failed to connect " + coord_str(a) + " and " +
                                       coord_str(b));
            }
            std::vector<int> fuse;
            for (int v = parent[bv]; v != av; v = parent[v]) fuse.push_back(v);
            std::reverse(fuse.begin(), fuse.end());
            for (int w : fuse) record(spec.coord_of(w), Basis::Y, std::nullopt, "zipper-fuse");
        }
    } else {
        // Bent route: carve the path into an isolated wire (Z every live
        // neighbor of the interiors) and contract the interiors with Y
        // measurements. Costs more Z steps than the staircase chain but
        // involves no local complementation outside the wire, so nothing
        // sprays junk onto protected cells.
        for (std::size_t i = 1; i + 1 < path->size(); ++i) {
            Coord cur = (*path)[i];
            for (Coord d : {Coord{0, -1}, Coord{-1, 0}, Coord{1, 0}, Coord{0, 1}}) {
                Coord s = cur + d;
                if (!spec.contains(s) || !ctx.pattern.is_free(s)) continue;
                int sv = spec.vertex_id(s);
                if (path_ids.count(sv) || protected_ids.count(sv)) continue;
                if (!trial.has_vertex(sv) || done(s)) continue;
                record(s, Basis::Z, std::nullopt, "isolation");
            }
            // Stray graph edges inherited from earlier fragments.
            int v = spec.vertex_id(cur);
            for (int w : std::set<int>(trial.neighbors(v).begin(), trial.neighbors(v).end())) {
                Coord s = spec.coord_of(w);
                if (path_ids.count(w) || protected_ids.count(w) || done(s)) continue;
                if (ctx.pattern.at(s) == CellRole::Target) continue;
                record(s, Basis::Z, std::nullopt, "isolation");
            }
        }
        for (std::size_t i = 1; i + 1 < path->size(); ++i) {
            record((*path)[i], Basis::Y, std::nullopt, "zipper-path");
        }
        if (!trial.has_edge(av, bv)) {
            if (getenv("GSX_DEBUG")) fprintf(stderr, "[zip] wire left no edge\n");
            throw ConsistencyError("zipper failed to connect " + coord_str(a) + " and " +
                                   coord_str(b));
        }
    }

    // Z whatever still clings to the endpoints.
    for (int end : {av, bv}) {
        for (int w : std::set<int>(trial.neighbors(end).begin(), trial.neighbors(end).end())) {
            Coord s = spec.coord_of(w);
            if (protected_ids.count(w) || ctx.pattern.at(s) == CellRole::Target) continue;
            if (!done(s)) record(s, Basis::Z, std::nullopt, "isolation");
        }
    }

    for (const Op& o : ops) ctx.apply(o.c, o.basis, o.tag, o.b0);
    if (!ctx.graph.has_edge(av, bv)) {
        throw ConsistencyError("zipper failed to connect " + coord_str(a) + " and " +
                               coord_str(b));
    }
    frag.step_count = ctx.steps.size() - frag.first_step;
    return frag;
}

Graph merge_subgraphs(const Graph& g, int y1, int y3, int y2) {
    if (!g.has_edge(y1, y3)) throw MergePreconditionError("missing edge y1-y3");
    if (!g.has_edge(y3, y2)) throw MergePreconditionError("missing edge y3-y2");
    if (g.degree(y3) != 2) {
        throw MergePreconditionError("connector y3 has degree " + std::to_string(g.degree(y3)) +
                                     ", expected 2");
    }
    auto check_side = [&](int from, int other, const char* label) {
        std::set<int> side = component_without(g, other, y3);
        std::string bad;
        for (int w : g.neighbors(from)) {
            if (w != y3 && side.count(w)) {
                bad += " " + std::to_string(from) + "-" + std::to_string(w);
            }
        }
        if (!bad.empty()) {
            throw MergePreconditionError(std::string("edges cross into ") + label + ":" + bad);
        }
    };
    check_side(y1, y2, "G2");
    check_side(y2, y1, "G1");
    Graph out = measure_y(g, y1, 1).graph;
    return measure_y(out, y3, 1).graph;
}

Fragment expand_degree(PlanContext& ctx, Coord v, Dir direction, int n_exp) {
    if (n_exp < 1) throw DomainError("n_exp must be >= 1");
    Coord d = dir_delta(direction);
    Coord p = d.x == 0 ? Coord{1, 0} : Coord{0, 1};

    // Footprint: the column v+d .. v+d*(2n+1) plus both side cells of
    // every measured column cell (stubs included).
    for (int j = 1; j <= 2 * n_exp + 1; ++j) {
        require_free(ctx.pattern, v + d * j, "expansion");
        if (j <= 2 * n_exp) {
            require_free(ctx.pattern, v + d * j + p, "expansion");
            require_free(ctx.pattern, v + d * j + p * -1, "expansion");
        }
    }

    Fragment frag{ctx.steps.size(), 0, {}};
    for (int k = 0; k < n_exp; ++k) {
        Coord y3 = v + d * (2 * k + 1);
        Coord y1 = v + d * (2 * k + 2);
        ctx.apply(y3 + p, Basis::Z, "expansion-isolation");
        ctx.apply(y3 + p * -1, Basis::Z, "expansion-isolation");
        ctx.apply(y1, Basis::Y, "expansion-Y1");
        ctx.apply(y3, Basis::Y, "expansion-Y3");
        frag.stubs.push_back(y1 + p);
        frag.stubs.push_back(y1 + p * -1);
    }
    frag.stubs.push_back(v + d * (2 * n_exp + 1));
    frag.step_count = ctx.steps.size() - frag.first_step;
    return frag;
}

Fragment expand_degree_u_shaped(PlanContext& ctx, Coord v, int n_exp) {
    if (n_exp < 1) throw DomainError("n_exp must be >= 1");
    int c = v.x, y0 = v.y, L = v.y - 2;

    // Footprint: riser plus the horizontal gadget chain, rows L-3..y0-1,
    // columns c-1..c+4*n_exp+2 (stub exit cells included).
    for (int x = c - 1; x <= c + 4 * n_exp + 2; ++x) {
        for (int y = L - 3; y <= y0 - 1; ++y) {
            require_free(ctx.pattern, {x, y}, "u-shaped expansion");
        }
    }

    Fragment frag{ctx.steps.size(), 0, {}};
    // Riser: one cell up, pruned so v keeps exactly the arm entry cell.
    ctx.apply({c - 1, y0 - 1}, Basis::Z, "u-riser-isolation");
    ctx.apply({c + 1, y0 - 1}, Basis::Z, "u-riser-isolation");
    ctx.apply({c, y0 - 1}, Basis::X, "u-riser");
    ctx.apply({c - 1, L}, Basis::Z, "u-riser-prune");
    ctx.apply({c, L - 1}, Basis::Z, "u-riser-prune");
    ctx.apply({c, L}, Basis::Z, "u-riser-prune");

    for (int i = 0; i < n_exp; ++i) {
        int xb = c + 1 + 4 * i;
        ctx.apply({xb, L - 2}, Basis::Z, "u-column");
        ctx.apply({xb, L - 3}, Basis::Z, "u-column");
        for (int u = 0; u < 2; ++u) {
            int x = xb + 2 * u;
            if (i != 0 || u != 0) ctx.apply({x, L + 1}, Basis::Z, "u-isolation");
            ctx.apply({x, L - 1}, Basis::Z, "u-isolation");
            ctx.apply({x + 1, L}, Basis::Y, "u-expansion-Y1");
            ctx.apply({x, L}, Basis::Y, "u-expansion-Y3");
            ctx.apply({x + 1, L + 1}, Basis::Z, "u-stub-prune");
            frag.stubs.push_back({x + 1, L - 1});
        }
    }
    int f = c + 4 * n_exp + 1;
    ctx.apply({f, L + 1}, Basis::Z, "u-frontier-isolation");
    ctx.apply({f + 1, L}, Basis::Z, "u-frontier-isolation");
    ctx.apply({f + 1, L - 1}, Basis::Z, "u-frontier-isolation");
    frag.stubs.push_back({f, L});

    frag.step_count = ctx.steps.size() - frag.first_step;
    return frag;
}

Fragment hub_connect_degree4(PlanContext& ctx, Coord a,
                             const std::array<Coord, 4>& endpoints) {
    const GridSpec& spec = ctx.pattern.spec();
    const std::array<Coord, 4> deltas{{{0, -1}, {-1, 0}, {1, 0}, {0, 1}}};
    std::array<Coord, 4> yellows;
    for (int i = 0; i < 4; ++i) {
        Coord y = a + deltas[std::size_t(i)];
        if (!spec.contains(y)) {
            throw DomainError("hub vertex " + coord_str(a) + " lies on the grid boundary");
        }
        yellows[std::size_t(i)] = y;
    }
    for (Coord e : endpoints) {
        if (manhattan(a, e) < 2) {
            throw DomainError("hub endpoint " + coord_str(e) + " is adjacent to " + coord_str(a));
        }
    }

    // Minimum total Manhattan assignment of endpoints to the four arms.
    std::array<int, 4> perm{0, 1, 2, 3}, best = perm;
    int best_cost = -1;
    do {
        int cost = 0;
        for (int i = 0; i < 4; ++i) {
            cost += manhattan(yellows[std::size_t(i)], endpoints[std::size_t(perm[std::size_t(i)])]);
        }
        if (best_cost < 0 || cost < best_cost) {
            best_cost = cost;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    Fragment frag{ctx.steps.size(), 0, {}};
    // Reserve the hub so no route runs through it.
    for (Coord y : yellows) ctx.pattern.set(y, CellRole::Junction);
    std::vector<Coord> keep{a};
    keep.insert(keep.end(), yellows.begin(), yellows.end());
    keep.insert(keep.end(), endpoints.begin(), endpoints.end());
    for (int i = 0; i < 4; ++i) {
        zipper_connect(ctx, yellows[std::size_t(i)], endpoints[std::size_t(best[std::size_t(i)])],
                       keep);
    }
    for (Coord y : yellows) ctx.apply(y, Basis::Y, "hub-merge");
    frag.stubs.assign(endpoints.begin(), endpoints.end());
    frag.step_count = ctx.steps.size() - frag.first_step;
    return frag;
}

Graph ghz_collect_step(const Graph& g, int center, const std::vector<int>& path, int next,
                       std::optional<std::pair<int, int>> aux) {
    if (path.empty()) throw DomainError("ghz_collect_step needs a nonempty path");
    int prev = center;
    for (int v : path) {
        if (!g.has_edge(prev, v)) {
            throw DomainError("path break between " + std::to_string(prev) + " and " +
                              std::to_string(v));
        }
        prev = v;
    }
    if (!g.has_edge(path.back(), next)) throw DomainError("path does not reach next");

    Graph out = g;
    if (aux) {
        auto [a1, a2] = *aux;
        if (!g.has_edge(a1, path.front()) || !g.has_edge(a2, path.back())) {
            throw SpaceError("aux vertices must touch the first and last path vertex");
        }
        out = measure_z(out, a1, 1).graph;
        out = measure_z(out, a2, 1).graph;
    }
    if (path.size() % 2 == 1) {
        for (int v : path) out = measure_x(out, v, 1).graph;
        return out;
    }
    if (!aux) throw SpaceError("even collection path needs two aux vertices");
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        out = measure_y(out, path[i], 1).graph;  // contract the middles
    }
    out = local_complement(out, center);
    out = measure_y(out, path.back(), 1).graph;
    return measure_y(out, path.front(), 1).graph;
}

}  // namespace gsx
