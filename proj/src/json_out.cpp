#include "tuttex/json_out.hpp"

namespace tuttex {

using nlohmann::json;

json to_json(const BiPoly& p) {
    json terms = json::array();
    for (const auto& [key, c] : p.terms())
        terms.push_back({{"i", key.first}, {"j", key.second}, {"c", c.str()}});
    return terms;
}

json to_json(const UniPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"e", e}, {"c", c.str()}});
    return terms;
}

json to_json(const CoeffReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries) {
        json row = {{"name", e.name},
                    {"position", {e.i, e.j}},
                    {"match", e.match}};
        if (e.formula)
            row["formula"] = *e.formula;
        else
            row["formula"] = nullptr;
        if (e.present)
            row["oracle"] = e.oracle.str();
        else
            row["oracle"] = nullptr;
        entries.push_back(std::move(row));
    }
    return {{"entries", entries}, {"all_match", report.all_match}};
}

json to_json(const StructureSummary& summary, const SpecialClasses& classes) {
    auto class_row = [](const SpecialClass& c) {
        json row = {{"edges", c.edges}};
        if (c.shape.kind == Nullity2Shape::Kind::theta) {
            row["kind"] = "theta";
            row["parts"] = {c.shape.parts[0], c.shape.parts[1], c.shape.parts[2]};
        } else {
            row["kind"] = "infinity";
            row["parts"] = {c.shape.parts[0], c.shape.parts[1]};
        }
        return row;
    };
    json special = json::array();
    for (const auto& c : classes.theta) special.push_back(class_row(c));
    for (const auto& c : classes.infinity) special.push_back(class_row(c));
    return {{"p", summary.p},
            {"p_star", summary.p_star},
            {"s", summary.s},
            {"s_star", summary.s_star},
            {"triangles", summary.triangles},
            {"theta", summary.theta},
            {"infinity", summary.infinity},
            {"classes", special}};
}

json to_json(const JonesReport& report) {
    json b = json::array();
    for (const auto& c : report.b) b.push_back(c.str());
    json formulas = json::array();
    for (const auto& c : report.formulas) {
        json row = {{"name", c.name}, {"index", c.index}, {"match", c.match}};
        row["formula"] = c.present ? json(c.formula) : json(nullptr);
        row["actual"] = c.present ? json(c.actual.str()) : json(nullptr);
        formulas.push_back(std::move(row));
    }
    return {{"poly", to_json(report.poly)},
            {"b", b},
            {"formulas", formulas},
            {"signs_alternate", report.signs_alternate},
            {"all_match", report.all_match}};
}

json to_json(const DualReport& report) {
    json identities = json::array();
    for (const auto& identity : report.identities)
        identities.push_back({{"name", identity.name},
                              {"lhs", identity.lhs},
                              {"rhs", identity.rhs},
                              {"ok", identity.ok}});
    json dual_edges = json::array();
    for (const auto& [u, v] : report.dual_graph.g.edges) dual_edges.push_back({u, v});
    return {{"dual", {{"n", report.dual_graph.g.n}, {"edges", dual_edges}}},
            {"tutte_primal", to_json(report.t_primal)},
            {"tutte_dual", to_json(report.t_dual)},
            {"tutte_swap_ok", report.tutte_swap_ok},
            {"identities", identities},
            {"all_ok", report.all_ok}};
}

json to_json(const VerifyReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        const char* status = c.status == CheckResult::Status::pass      ? "pass"
                             : c.status == CheckResult::Status::skipped ? "skipped"
                                                                        : "fail";
        checks.push_back({{"name", c.name}, {"status", status}, {"detail", c.detail}});
    }
    return {{"checks", checks}, {"ok", report.ok()}};
}

} // namespace tuttex
