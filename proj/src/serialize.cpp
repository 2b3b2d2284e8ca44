#include <json.hpp>

#include "gsx/errors.hpp"
#include "gsx/primitives.hpp"

namespace gsx {

namespace {

std::string basis_str(const PlanStep& s) {
    if (s.local_complementation) return "L";
    return std::string(1, basis_char(s.basis));
}

void parse_basis(PlanStep& s, const std::string& b) {
    if (b == "L") {
        s.local_complementation = true;
        s.basis = Basis::X;
        return;
    }
    if (b == "X") s.basis = Basis::X;
    else if (b == "Y") s.basis = Basis::Y;
    else if (b == "Z") s.basis = Basis::Z;
    else throw DomainError("unknown step basis '" + b + "'");
}

}  // namespace

std::string Plan::to_json() const {
    nlohmann::json j;
    j["grid"] = {{"width", grid.width}, {"height", grid.height}};
    auto tj = nlohmann::json::array();
    for (Coord t : targets) tj.push_back({{"x", t.x}, {"y", t.y}});
    j["targets"] = tj;
    auto sj = nlohmann::json::array();
    for (const PlanStep& s : steps) {
        nlohmann::json e{{"x", s.coord.x},
                         {"y", s.coord.y},
                         {"basis", basis_str(s)},
                         {"order", s.order},
                         {"tag", s.tag}};
        if (s.chosen_neighbor) {
            e["b0"] = {{"x", s.chosen_neighbor->x}, {"y", s.chosen_neighbor->y}};
        }
        sj.push_back(e);
    }
    j["steps"] = sj;
    j["predicted_graph"] = nlohmann::json::parse(predicted_graph.to_json());
    j["stats"] = {{"n_x", stats.n_x}, {"n_y", stats.n_y},   {"n_z", stats.n_z},
                  {"total", stats.total}, {"n_e", stats.n_e}, {"n_l", stats.n_l},
                  {"N", stats.N},     {"N_c", stats.N_c},  {"n_exp", stats.n_exp}};
    return j.dump();
}

Plan Plan::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Plan plan;
    plan.grid = {j.at("grid").at("width").get<int>(), j.at("grid").at("height").get<int>()};
    for (const auto& t : j.at("targets")) {
        plan.targets.push_back({t.at("x").get<int>(), t.at("y").get<int>()});
    }
    for (const auto& s : j.at("steps")) {
        PlanStep step;
        step.coord = {s.at("x").get<int>(), s.at("y").get<int>()};
        parse_basis(step, s.at("basis").get<std::string>());
        step.order = s.at("order").get<int>();
        step.tag = s.at("tag").get<std::string>();
        if (s.contains("b0")) {
            step.chosen_neighbor = Coord{s.at("b0").at("x").get<int>(),
                                         s.at("b0").at("y").get<int>()};
        }
        plan.steps.push_back(step);
    }
    plan.predicted_graph = Graph::from_json(j.at("predicted_graph").dump());
    const auto& st = j.at("stats");
    plan.stats = {st.at("n_x").get<int>(), st.at("n_y").get<int>(),  st.at("n_z").get<int>(),
                  st.at("total").get<int>(), st.at("n_e").get<int>(), st.at("n_l").get<int>(),
                  st.at("N").get<int>(),   st.at("N_c").get<int>(), st.at("n_exp").get<int>()};
    return plan;
}

}  // namespace gsx
