#include "gsx/planners.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gsx/errors.hpp"
#include "json.hpp"

namespace gsx {

namespace {

Coord operator+(Coord a, Coord b) { return {a.x + b.x, a.y + b.y}; }

std::string coord_str(Coord c) {
    return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

constexpr std::array<Coord, 4> kDirs{{{0, -1}, {-1, 0}, {1, 0}, {0, 1}}};
constexpr std::array<Dir, 4> kExpandDirs{Dir::Up, Dir::Right, Dir::Down, Dir::Left};

/// Shared planning state: the plan context plus the growing set of
/// protected cells (targets, connection points, hubs) that zipper routes
/// must keep clear of and prunes must never touch.
struct Builder {
    explicit Builder(const ExtractionRequest& request) : req(request), ctx(request.grid) {
        req.validate();
        for (const auto& [label, c] : req.targets) {
            ctx.pattern.set(c, CellRole::Target);
            keep.push_back(c);
        }
    }

    const ExtractionRequest& req;
    PlanContext ctx;
    std::vector<Coord> keep;
    std::map<Coord, std::vector<Coord>> stub_pool;  // expansion stubs per expanded cell
    int expansions = 0;

    int id(Coord c) const { return ctx.pattern.spec().vertex_id(c); }
    bool protected_cell(Coord c) const {
        return std::find(keep.begin(), keep.end(), c) != keep.end();
    }

    /// Free cells usable as a connection point on `at`: graph-adjacent
    /// to it and not grid-adjacent to any other protected cell (a Y
    /// merge there would fuse onto the wrong vertex).
    std::vector<Coord> attach_candidates(Coord at) {
        std::vector<Coord> out;
        auto usable = [&](Coord s) {
            if (!ctx.pattern.spec().contains(s) || !ctx.pattern.is_free(s)) return false;
            if (!ctx.graph.has_vertex(id(s)) || !ctx.graph.has_edge(id(at), id(s))) return false;
            for (Coord d : kDirs) {
                Coord n = s + d;
                if (n != at && ctx.pattern.spec().contains(n) && protected_cell(n)) return false;
            }
            return true;
        };
        for (Coord d : kDirs) {
            Coord s = at + d;
            if (usable(s)) out.push_back(s);
        }
        auto it = stub_pool.find(at);
        if (it != stub_pool.end()) {
            for (Coord s : it->second) {
                if (usable(s)) out.push_back(s);
            }
        }
        return out;
    }

    /// Reserves the attach candidate of `at` best aligned with the
    /// direction of `toward` (ties by distance): the launch cell should
    /// face the far endpoint so routes do not wrap around `at`.
    Coord take_cp(Coord at, Coord toward, const std::string& what) {
        std::vector<Coord> cands = attach_candidates(at);
        if (cands.empty()) {
            throw PlanningError(what + ": no attach cell left at " + coord_str(at));
        }
        auto alignment = [&](Coord c) {
            double ox = c.x - at.x, oy = c.y - at.y;
            double tx = toward.x - at.x, ty = toward.y - at.y;
            double n = std::hypot(ox, oy) * std::hypot(tx, ty);
            return n == 0 ? 0.0 : (ox * tx + oy * ty) / n;
        };
        std::sort(cands.begin(), cands.end(), [&](Coord a, Coord b) {
            return std::tuple(-alignment(a), manhattan(a, toward), a.y, a.x) <
                   std::tuple(-alignment(b), manhattan(b, toward), b.y, b.x);
        });
        Coord cp = cands.front();
        ctx.pattern.set(cp, CellRole::Junction);
        keep.push_back(cp);
        return cp;
    }

    /// Prunes the reserved junction point and Y-merges it into its
    /// neighbors.
    void merge_cp(Coord c) {
        prune(c, "merge-isolation");
        ctx.apply(c, Basis::Y, "junction-merge");
    }

    void zipper(Coord a, Coord b, const std::string& what) {
        try {
            zipper_connect(ctx, a, b, keep);
        } catch (const NoPathError& e) {
            throw PlanningError(what + ": " + e.what());
        } catch (const SpaceError& e) {
            throw PlanningError(what + ": " + e.what());
        }
    }

    /// Z-measures every unprotected neighbor of `c` (graph junk).
    void prune(Coord c, const std::string& tag) {
        const GridSpec& spec = ctx.pattern.spec();
        std::set<int> nbrs(ctx.graph.neighbors(id(c)).begin(), ctx.graph.neighbors(id(c)).end());
        for (int w : nbrs) {
            Coord s = spec.coord_of(w);
            if (protected_cell(s) || ctx.pattern.at(s) == CellRole::Target) continue;
            ctx.apply(s, Basis::Z, tag);
        }
    }

    /// One requested edge under construction: the two cells to connect
    /// and the zipper endpoint reserved for each side. A direct side is
    /// its own endpoint (deg-1 targets take the zipper straight on);
    /// otherwise the endpoint is a reserved connection point that gets
    /// fused in with a Y measurement afterwards.
    struct Link {
        Coord ca, cb;
        Coord ea, eb;
        std::string what;
    };

    /// Reserves the endpoints now so no zipper routed in between can
    /// measure them away.
    Link reserve_link(Coord ca, Coord cb, bool direct_a, bool direct_b,
                      const std::string& what) {
        Coord ea = direct_a ? ca : take_cp(ca, cb, what);
        Coord eb = direct_b ? cb : take_cp(cb, ca, what);
        return {ca, cb, ea, eb, what};
    }

    void connect_link(const Link& l) {
        const auto& [ca, cb, ea, eb, what] = l;
        zipper(ea, eb, what);
        if (ea != ca) merge_cp(ea);
        if (eb != cb) merge_cp(eb);
        if (!ctx.graph.has_edge(id(ca), id(cb))) {
            throw ConsistencyError(what + ": junction merge lost the edge");
        }
    }

    void connect_cells(Coord ca, Coord cb, bool direct_a, bool direct_b,
                       const std::string& what) {
        if (ctx.graph.has_edge(id(ca), id(cb))) return;
        connect_link(reserve_link(ca, cb, direct_a, direct_b, what));
    }

    /// Degree expansion at `c` when its attach candidates cannot cover
    /// `need` connection points. Unidirectional preferred, U-shaped
    /// fallback on footprint conflicts.
    void ensure_capacity(Coord c, int need, const std::string& what) {
        int avail = int(attach_candidates(c).size());
        if (avail >= need) return;
        int n_exp = (need - avail + 1) / 2;
        // Stubs go straight into the protected set so no later zipper
        // routes through them before they get reserved.
        auto adopt = [&](const Fragment& f) {
            auto& pool = stub_pool[c];
            pool.insert(pool.end(), f.stubs.begin(), f.stubs.end());
            keep.insert(keep.end(), f.stubs.begin(), f.stubs.end());
            expansions += n_exp;
        };
        for (Dir d : kExpandDirs) {
            try {
                adopt(expand_degree(ctx, c, d, n_exp));
                return;
            } catch (const SpaceError&) {
            }
        }
        try {
            adopt(expand_degree_u_shaped(ctx, c, n_exp));
        } catch (const SpaceError& e) {
            throw PlanningError(what + ": no room to expand " + coord_str(c) + " (" + e.what() +
                                ")");
        }
    }

    Plan finish() {
        Plan plan{req.grid, {}, std::move(ctx.steps), std::move(ctx.graph), {}};
        for (const auto& [label, c] : req.targets) plan.targets.push_back(c);
        // Soundness gate: the predicted graph restricted to target cells
        // must equal the requested graph.
        for (std::size_t i = 0; i < req.targets.size(); ++i) {
            for (std::size_t j = i + 1; j < req.targets.size(); ++j) {
                const auto& [la, ca] = req.targets[i];
                const auto& [lb, cb] = req.targets[j];
                bool want = false;
                for (const auto& [ea, eb] : req.edges) {
                    if ((ea == la && eb == lb) || (ea == lb && eb == la)) want = true;
                }
                if (plan.predicted_graph.has_edge(id(ca), id(cb)) != want) {
                    throw ConsistencyError("edge " + la + "-" + lb + ": predicted " +
                                           (want ? "missing" : "spurious"));
                }
            }
        }
        plan.stats = cost_report_for(plan);
        return plan;
    }

    CostReport cost_report_for(const Plan& plan) const {
        CostReport r;
        for (const auto& s : plan.steps) {
            if (s.local_complementation) continue;
            if (s.basis == Basis::X) ++r.n_x;
            if (s.basis == Basis::Y) ++r.n_y;
            if (s.basis == Basis::Z) ++r.n_z;
        }
        r.total = r.n_x + r.n_y + r.n_z;
        r.n_e = int(req.edges.size());
        r.N = std::max(req.grid.width, req.grid.height);
        // Long-range edges span more than a quarter of the grid scale;
        // N_c is the largest span among the short-range ones.
        for (const auto& [la, lb] : req.edges) {
            int d = manhattan(req.coord_of(la), req.coord_of(lb));
            if (d > r.N / 4) {
                ++r.n_l;
            } else {
                r.N_c = std::max(r.N_c, d);
            }
        }
        r.n_exp = expansions;
        return r;
    }
};

std::map<std::string, int> required_degree(const ExtractionRequest& req) {
    std::map<std::string, int> deg;
    for (const auto& [label, c] : req.targets) deg[label] = 0;
    for (const auto& [a, b] : req.edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

void reject_adjacent_unrequested(const ExtractionRequest& req) {
    for (std::size_t i = 0; i < req.targets.size(); ++i) {
        for (std::size_t j = i + 1; j < req.targets.size(); ++j) {
            const auto& [la, ca] = req.targets[i];
            const auto& [lb, cb] = req.targets[j];
            if (manhattan(ca, cb) != 1) continue;
            bool wanted = false;
            for (const auto& [ea, eb] : req.edges) {
                if ((ea == la && eb == lb) || (ea == lb && eb == la)) wanted = true;
            }
            if (!wanted) {
                throw PlanningError("targets " + la + " and " + lb +
                                    " are grid-adjacent without a requested edge");
            }
        }
    }
}

/// Builds the star v-l for every leaf around an ancilla hub placed near
/// the leaves, then X-walks the hub onto v. Requires v to carry no
/// established target edge yet (the walk identity needs a bare acceptor).
void star_extract(Builder& b, const std::string& center,
                  const std::vector<std::string>& leaves) {
    const GridSpec& spec = b.req.grid;
    Coord vc = b.req.coord_of(center);
    int arms = int(leaves.size()) + 1;

    // Hub placement: free interior cell with all four neighbors free,
    // clear of protected cells, minimizing total distance to the leaves.
    std::optional<Coord> hub;
    long best = 0;
    for (int y = 1; y + 1 < spec.height; ++y) {
        for (int x = 1; x + 1 < spec.width; ++x) {
            Coord h{x, y};
            bool ok = b.ctx.pattern.is_free(h);
            for (Coord d : kDirs) ok = ok && b.ctx.pattern.is_free(h + d);
            for (Coord k : b.keep) ok = ok && manhattan(h, k) >= 2;
            if (!ok) continue;
            long score = manhattan(h, vc);
            for (const auto& l : leaves) score += manhattan(h, b.req.coord_of(l));
            if (!hub || score < best) {
                hub = h;
                best = score;
            }
        }
    }
    if (!hub) throw PlanningError("vertex " + center + ": no free hub cell near its leaves");
    Coord h = *hub;
    b.ctx.pattern.set(h, CellRole::Junction);
    b.keep.push_back(h);
    if (arms > 4) b.ensure_capacity(h, arms, "vertex " + center);

    // Arm roots: one attach cell of the hub per arm, long arm first.
    // All candidates are protected while the star is under construction
    // so arm zippers cannot route through a root reserved for later.
    std::vector<Coord> roots = b.attach_candidates(h);
    if (int(roots.size()) < arms) {
        throw PlanningError("vertex " + center + ": hub at " + coord_str(h) + " has " +
                            std::to_string(roots.size()) + " arms, needs " +
                            std::to_string(arms));
    }
    for (Coord r : roots) b.keep.push_back(r);
    auto take_root = [&](Coord toward) {
        auto it = std::min_element(roots.begin(), roots.end(), [&](Coord a, Coord c) {
            return std::tuple(manhattan(a, toward), a.y, a.x) <
                   std::tuple(manhattan(c, toward), c.y, c.x);
        });
        Coord r = *it;
        roots.erase(it);
        b.ctx.pattern.set(r, CellRole::Junction);
        return r;
    };
    // Center arm first, while the corridor between hub and vertex is
    // still clear: after it the hub carries the edge to v.
    Coord root_v = take_root(vc);
    {
        std::string what = "vertex " + center + " hub arm";
        Coord cpv = b.take_cp(vc, h, what);
        b.zipper(root_v, cpv, what);
        b.merge_cp(root_v);
        b.merge_cp(cpv);
    }

    // Leaves nearest-first, each fused onto the hub through its root.
    std::vector<std::string> order = leaves;
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& c) {
        return std::tuple(manhattan(h, b.req.coord_of(a)), a) <
               std::tuple(manhattan(h, b.req.coord_of(c)), c);
    });
    for (const auto& leaf : order) {
        Coord lc = b.req.coord_of(leaf);
        std::string what = "edge " + center + "-" + leaf;
        Coord root = take_root(lc);
        Coord cp = b.take_cp(lc, h, what);
        b.zipper(root, cp, what);
        b.merge_cp(cp);
        b.merge_cp(root);
    }

    // Walk the completed star from the hub onto v.
    b.prune(vc, "star-isolation");
    b.prune(h, "star-isolation");
    b.ctx.apply(h, Basis::X, "hub-walk", vc);

    // Unused root candidates go back to the routable pool.
    for (Coord r : roots) {
        b.keep.erase(std::remove(b.keep.begin(), b.keep.end(), r), b.keep.end());
    }
}

}  // namespace

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Lvde: return "lvde";
        case Strategy::Ovde: return "ovde";
        case Strategy::Cg: return "cg";
    }
    return "lvde";
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "lvde") return Strategy::Lvde;
    if (name == "ovde") return Strategy::Ovde;
    if (name == "cg") return Strategy::Cg;
    throw DomainError("unknown strategy '" + name + "'");
}

Coord ExtractionRequest::coord_of(const std::string& label) const {
    for (const auto& [l, c] : targets) {
        if (l == label) return c;
    }
    throw DomainError("unknown target label '" + label + "'");
}

void ExtractionRequest::validate() const {
    if (grid.width < 2 || grid.height < 2) throw DomainError("grid must be at least 2x2");
    std::set<std::string> labels;
    std::set<Coord> coords;
    for (const auto& [l, c] : targets) {
        if (!labels.insert(l).second) throw DomainError("duplicate target label '" + l + "'");
        if (!grid.contains(c)) throw DomainError("target " + l + " outside the grid");
        if (!coords.insert(c).second) {
            throw DomainError("target " + l + " reuses an occupied cell");
        }
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& [a, b] : edges) {
        if (!labels.count(a) || !labels.count(b)) {
            throw DomainError("edge " + a + "-" + b + " references an unknown label");
        }
        if (a == b) throw DomainError("edge " + a + "-" + b + " is a self-loop");
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second) throw DomainError("duplicate edge " + a + "-" + b);
    }
    if (cg_region) {
        if (!grid.contains(cg_region->min) || !grid.contains(cg_region->max) ||
            cg_region->min.x > cg_region->max.x || cg_region->min.y > cg_region->max.y) {
            throw DomainError("cg_region is not a rectangle inside the grid");
        }
    }
}

std::vector<GateOp> cg_schedule(const ExtractionRequest& req) {
    req.validate();
    std::vector<std::string> slots;
    for (const auto& [l, c] : req.targets) slots.push_back(l);
    std::set<std::pair<std::string, std::string>> remaining;
    for (const auto& [a, b] : req.edges) remaining.insert(std::minmax(a, b));
    auto has_remaining = [&](const std::string& v) {
        for (const auto& [a, b] : remaining) {
            if (a == v || b == v) return true;
        }
        return false;
    };

    std::vector<GateOp> ops;
    for (const auto& [v, c] : req.targets) {
        std::size_t pos = std::size_t(std::find(slots.begin(), slots.end(), v) - slots.begin());
        while (has_remaining(v) && pos + 1 < slots.size()) {
            const std::string& q = slots[pos + 1];
            auto key = std::minmax(v, q);
            if (remaining.count(key)) {
                ops.push_back({GateOp::Kind::CZ, v, q});
                remaining.erase(key);
            }
            if (!has_remaining(v)) break;
            ops.push_back({GateOp::Kind::Swap, v, q});
            std::swap(slots[pos], slots[pos + 1]);
            ++pos;
        }
    }
    return ops;
}

Plan plan_lvde(const ExtractionRequest& req) {
    reject_adjacent_unrequested(req);
    Builder b(req);
    auto deg = required_degree(req);
    for (const auto& [label, c] : req.targets) {
        if (deg[label] > 1) b.ensure_capacity(c, deg[label], "vertex " + label);
    }
    std::vector<Builder::Link> links;
    for (const auto& [la, lb] : req.edges) {
        links.push_back(b.reserve_link(req.coord_of(la), req.coord_of(lb), deg[la] == 1,
                                       deg[lb] == 1, "edge " + la + "-" + lb));
    }
    for (const auto& l : links) b.connect_link(l);
    return b.finish();
}

Plan plan_ovde(const ExtractionRequest& req) {
    reject_adjacent_unrequested(req);
    Builder b(req);
    auto deg = required_degree(req);

    // Vertices in descending required-degree order, ties by label.
    std::vector<std::string> order;
    for (const auto& [l, c] : req.targets) order.push_back(l);
    std::stable_sort(order.begin(), order.end(),
                     [&](const auto& a, const auto& c) { return deg[a] > deg[c]; });

    std::set<std::pair<std::string, std::string>> remaining;
    for (const auto& [a, c] : req.edges) remaining.insert(std::minmax(a, c));
    std::map<std::string, int> established;

    for (const auto& v : order) {
        std::vector<std::string> out;
        for (const auto& [a, c] : remaining) {
            if (a == v) out.push_back(c);
            if (c == v) out.push_back(a);
        }
        if (out.empty()) continue;
        std::sort(out.begin(), out.end());
        if (out.size() >= 2 && established[v] == 0) {
            star_extract(b, v, out);
        } else {
            for (const auto& u : out) {
                bool du = deg[u] == 1 && established[u] == 0;
                b.connect_cells(req.coord_of(v), req.coord_of(u), false, du,
                                "edge " + v + "-" + u);
            }
        }
        for (const auto& u : out) {
            remaining.erase(std::minmax(v, u));
            ++established[v];
            ++established[u];
        }
    }
    return b.finish();
}

Plan plan_cg(const ExtractionRequest& req) {
    reject_adjacent_unrequested(req);
    Builder b(req);
    const GridSpec& spec = req.grid;
    int n = int(req.targets.size());
    int span = 5 * (n - 1) + 1;

    // Proxy row: requested region, or an auto-selected central row kept
    // clear of the targets.
    std::optional<Coord> origin;
    if (req.cg_region) {
        const Rect& r = *req.cg_region;
        if (r.max.x - r.min.x + 1 < span) {
            throw PlanningError("cg region needs " + std::to_string(span) + " columns, has " +
                                std::to_string(r.max.x - r.min.x + 1));
        }
        origin = Coord{r.min.x, (r.min.y + r.max.y) / 2};
    } else {
        int x0 = (spec.width - span) / 2;
        if (x0 < 1 || x0 + span >= spec.width) {
            throw PlanningError("grid too narrow for " + std::to_string(n) +
                                " proxies (needs " + std::to_string(span + 2) + " columns)");
        }
        // Prefer rows near the middle whose proxy cells keep a margin of
        // two from every protected cell.
        for (int off = 0; !origin && off < spec.height; ++off) {
            for (int sign : {1, -1}) {
                int y = spec.height / 2 + sign * off;
                if (y < 1 || y + 1 >= spec.height) continue;
                bool ok = true;
                for (int i = 0; i < n; ++i) {
                    Coord p{x0 + 5 * i, y};
                    ok = ok && b.ctx.pattern.is_free(p);
                    for (Coord k : b.keep) ok = ok && manhattan(p, k) >= 3;
                }
                if (ok) {
                    origin = Coord{x0, y};
                    break;
                }
            }
        }
        if (!origin) throw PlanningError("no clear central row for the cg proxies");
    }

    // One proxy cell per logical qubit.
    std::map<std::string, Coord> cell_of;
    for (int i = 0; i < n; ++i) {
        Coord p{origin->x + 5 * i, origin->y};
        if (!spec.contains(p) || !b.ctx.pattern.is_free(p)) {
            throw PlanningError("cg proxy cell " + coord_str(p) + " is not free");
        }
        b.ctx.pattern.set(p, CellRole::Junction);
        b.keep.push_back(p);
        cell_of[req.targets[std::size_t(i)].first] = p;
    }

    // All connection points are reserved before any routing: the CZ
    // endpoints in schedule order (these want the row-aligned neighbor
    // cells), then one transport exit per proxy, facing its target.
    std::vector<Builder::Link> czs;
    for (const GateOp& op : cg_schedule(req)) {
        if (op.kind == GateOp::Kind::CZ) {
            czs.push_back(b.reserve_link(cell_of.at(op.a), cell_of.at(op.b), false, false,
                                         "cz " + op.a + "-" + op.b));
        }
    }
    std::map<std::string, Coord> exit_of;
    for (const auto& [label, t] : req.targets) {
        exit_of[label] = b.take_cp(cell_of.at(label), t, "transport " + label);
    }

    // SWAPs are slot bookkeeping inside the schedule; physically each
    // logical qubit keeps its proxy cell (edges stay attached to the
    // qubit, so nothing needs to move) and each CZ becomes a junction
    // merge between the two proxies, however far apart.
    for (const auto& l : czs) b.connect_link(l);

    // Transport: edge proxy-target, then X-walk the proxy onto the bare
    // target (the zipper's residual isolation bares it).
    for (const auto& [label, t] : req.targets) {
        Coord p = cell_of.at(label);
        Coord e = exit_of.at(label);
        b.zipper(e, t, "transport " + label);
        b.merge_cp(e);
        b.prune(p, "transport-isolation");
        b.prune(t, "transport-isolation");
        if (getenv("GSX_DEBUG")) {
            auto dump = [&](const char* n, Coord c) {
                fprintf(stderr, "[cg] %s %s N:", n, coord_str(c).c_str());
                for (int w : b.ctx.graph.neighbors(b.id(c)))
                    fprintf(stderr, " %s", coord_str(spec.coord_of(w)).c_str());
                fprintf(stderr, "\n");
            };
            fprintf(stderr, "[cg] transport %s\n", label.c_str());
            dump("p", p);
            dump("t", t);
        }
        b.ctx.apply(p, Basis::X, "transport", t);
    }
    return b.finish();
}

Plan plan(const ExtractionRequest& req) {
    switch (req.strategy) {
        case Strategy::Lvde: return plan_lvde(req);
        case Strategy::Ovde: return plan_ovde(req);
        case Strategy::Cg: return plan_cg(req);
    }
    throw DomainError("unknown strategy");
}

std::pair<Graph, CorrectionFrame> execute_plan(const Plan& plan) {
    std::vector<SequenceStep> seq;
    for (const auto& s : plan.steps) {
        std::optional<int> b0;
        if (s.chosen_neighbor) b0 = plan.grid.vertex_id(*s.chosen_neighbor);
        seq.push_back({plan.grid.vertex_id(s.coord), s.basis, s.local_complementation, b0});
    }
    SequenceResult res = execute_sequence(cluster_graph(plan.grid), seq);
    if (res.graph != plan.predicted_graph) {
        throw ConsistencyError("executed plan disagrees with its predicted graph");
    }
    return {res.graph, res.frame};
}

CostReport cost_report(const Plan& plan) {
    CostReport r = plan.stats;
    r.n_x = r.n_y = r.n_z = 0;
    for (const auto& s : plan.steps) {
        if (s.local_complementation) continue;
        if (s.basis == Basis::X) ++r.n_x;
        if (s.basis == Basis::Y) ++r.n_y;
        if (s.basis == Basis::Z) ++r.n_z;
    }
    r.total = r.n_x + r.n_y + r.n_z;
    return r;
}

std::string ExtractionRequest::to_json() const {
    nlohmann::json j;
    j["grid"] = {{"width", grid.width}, {"height", grid.height}};
    j["targets"] = nlohmann::json::array();
    for (const auto& [l, c] : targets) {
        j["targets"].push_back({{"label", l}, {"x", c.x}, {"y", c.y}});
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : edges) j["edges"].push_back({a, b});
    j["strategy"] = strategy_name(strategy);
    if (cg_region) {
        j["cg_region"] = {{"x0", cg_region->min.x},
                          {"y0", cg_region->min.y},
                          {"x1", cg_region->max.x},
                          {"y1", cg_region->max.y}};
    }
    return j.dump(2);
}

ExtractionRequest ExtractionRequest::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ExtractionRequest req;
    req.grid = {j.at("grid").at("width").get<int>(), j.at("grid").at("height").get<int>()};
    for (const auto& t : j.at("targets")) {
        req.targets.push_back(
            {t.at("label").get<std::string>(), {t.at("x").get<int>(), t.at("y").get<int>()}});
    }
    for (const auto& e : j.at("edges")) {
        req.edges.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>()});
    }
    if (j.contains("strategy")) req.strategy = strategy_from_name(j.at("strategy"));
    if (j.contains("cg_region")) {
        const auto& r = j.at("cg_region");
        req.cg_region = Rect{{r.at("x0").get<int>(), r.at("y0").get<int>()},
                             {r.at("x1").get<int>(), r.at("y1").get<int>()}};
    }
    req.validate();
    return req;
}

}  // namespace gsx
