#pragma once

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "annulus/angulation.hpp"
#include "annulus/diagcat.hpp"
#include "annulus/errors.hpp"
#include "annulus/mutclass.hpp"
#include "annulus/quiver.hpp"

// JSON wire formats shared by the CLI and the class databases.
//   Diagonal    {"t":"S","u":..,"v":..} | {"t":"O","i":..,"k":..} | {"t":"I",...}
//   Angulation  {"p":..,"q":..,"m":..,"strict":..,"diagonals":[...]}
//   Quiver      {"n":..,"m":..,"arrows":[{"from","to","colour","mult"},...]}

namespace annulus {

inline nlohmann::json to_json(const Diagonal& d) {
    nlohmann::json j;
    if (d.is_spanning()) {
        j["t"] = "S";
        j["u"] = d.a;
        j["v"] = d.b;
    } else {
        j["t"] = d.kind == DiagKind::OuterPeripheral ? "O" : "I";
        j["i"] = d.a;
        j["k"] = d.b;
    }
    return j;
}

inline Diagonal diagonal_from_json(const nlohmann::json& j, const AnnulusConfig& cfg) {
    try {
        std::string t = j.at("t").get<std::string>();
        if (t == "S") return Diagonal::spanning(j.at("u").get<long long>(),
                                                j.at("v").get<long long>(), cfg);
        if (t == "O") return Diagonal::outer_peripheral(j.at("i").get<long long>(),
                                                        j.at("k").get<long long>(), cfg);
        if (t == "I") return Diagonal::inner_peripheral(j.at("i").get<long long>(),
                                                        j.at("k").get<long long>(), cfg);
        throw ValidationError("unknown diagonal tag \"" + t + "\"");
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed diagonal: ") + e.what());
    }
}

inline nlohmann::json to_json(const Angulation& a) {
    nlohmann::json j;
    j["p"] = a.cfg.p;
    j["q"] = a.cfg.q;
    j["m"] = a.cfg.m;
    j["strict"] = a.strict;
    j["diagonals"] = nlohmann::json::array();
    for (const auto& d : a.diagonals) j["diagonals"].push_back(to_json(d));
    return j;
}

inline Angulation angulation_from_json(const nlohmann::json& j) {
    try {
        AnnulusConfig cfg(j.at("p").get<int>(), j.at("q").get<int>(), j.at("m").get<int>());
        Angulation a{cfg, j.value("strict", true), {}};
        for (const auto& dj : j.at("diagonals")) a.diagonals.push_back(diagonal_from_json(dj, cfg));
        return a;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed angulation: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("malformed angulation: ") + e.what());
    }
}

inline nlohmann::json to_json(const ColouredQuiver& q) {
    nlohmann::json j;
    j["n"] = q.size();
    j["m"] = q.max_colour();
    j["arrows"] = nlohmann::json::array();
    for (const auto& a : q.arrows())
        j["arrows"].push_back(
            {{"from", a.from}, {"to", a.to}, {"colour", a.colour}, {"mult", a.mult}});
    return j;
}

inline ColouredQuiver quiver_from_json(const nlohmann::json& j) {
    try {
        ColouredQuiver q(j.at("n").get<int>(), j.at("m").get<int>());
        for (const auto& aj : j.at("arrows"))
            q.add_arrows(aj.at("from").get<int>(), aj.at("to").get<int>(),
                         aj.at("colour").get<int>(), aj.at("mult").get<long long>());
        return q;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed quiver: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("malformed quiver: ") + e.what());
    }
}

// Graphviz rendering of a coloured quiver.  By default only colours
// 0..m/2 are drawn (each arrow of colour c is mirrored by one of colour
// m-c, so half the picture is redundant); full = true draws everything.
inline std::string quiver_dot(const ColouredQuiver& q, bool full = false) {
    std::ostringstream os;
    os << "digraph quiver {\n  rankdir=LR;\n";
    for (int v = 0; v < q.size(); ++v) os << "  v" << v << " [label=\"" << v << "\"];\n";
    for (const auto& a : q.arrows()) {
        if (!full && 2 * a.colour > q.max_colour()) continue;
        os << "  v" << a.from << " -> v" << a.to << " [label=\"(" << a.colour << ")";
        if (a.mult > 1) os << " x" << a.mult;
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

inline nlohmann::json to_json(const ARQuiver& ar) {
    nlohmann::json j;
    j["p"] = ar.cfg.p;
    j["q"] = ar.cfg.q;
    j["m"] = ar.cfg.m;
    j["window"] = {{"w", ar.window_w}, {"l", ar.window_l}};
    j["vertices"] = nlohmann::json::array();
    for (std::size_t i = 0; i < ar.vertices.size(); ++i) {
        const auto& v = ar.vertices[i];
        nlohmann::json vj{{"diagonal", to_json(v.diag)},
                          {"component", v.component},
                          {"text", ar_vertex_text(ar, static_cast<int>(i))}};
        vj["labelled"] = v.label.has_value();
        j["vertices"].push_back(std::move(vj));
    }
    j["moves"] = nlohmann::json::array();
    for (const auto& [a, b] : ar.moves) j["moves"].push_back({a, b});
    j["tau"] = nlohmann::json::array();
    for (const auto& [a, b] : ar.tau_edges) j["tau"].push_back({a, b});
    j["components"] = ar.component_count;
    j["core_components"] = ar.core_component_count;
    nlohmann::json names = nlohmann::json::array();
    for (const auto& [id, name] : ar.component_names) names.push_back({{"id", id}, {"name", name}});
    j["core_names"] = std::move(names);
    return j;
}

// Class databases as JSON lines: one {"key":..,"witness":..} object per
// line, so files diff and concatenate cleanly.
inline void write_classes_jsonl(std::ostream& out, const ClassDatabase<Angulation>& db) {
    for (const auto& [key, wit] : db.classes) {
        nlohmann::json line{{"key", key}, {"witness", to_json(wit)}};
        out << line.dump() << "\n";
    }
}

inline void write_classes_jsonl(std::ostream& out, const ClassDatabase<ColouredQuiver>& db) {
    for (const auto& [key, wit] : db.classes) {
        nlohmann::json line{{"key", key}, {"witness", to_json(wit)}};
        out << line.dump() << "\n";
    }
}

}  // namespace annulus
