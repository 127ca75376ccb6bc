#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings for polynomials, multipartitions, Fock vectors,
 *        crystal graphs, face classifications and the G(mu) cache file.
 */

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "faces/canonical.hpp"
#include "faces/closedform.hpp"
#include "faces/crystal.hpp"
#include "faces/errors.hpp"
#include "faces/fock.hpp"
#include "faces/partitions.hpp"
#include "faces/qpoly.hpp"
#include "faces/weights.hpp"

namespace faces {

using json = nlohmann::json;

// LaurentPoly: {"terms": [[exponent, coefficient], ...]}, exponents ascending.
inline json to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [ex, c] : p.terms()) terms.push_back({ex, c});
    return {{"terms", terms}};
}

inline LaurentPoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
        throw DomainError("polynomial JSON must be {\"terms\": [[exponent, coefficient], ...]}");
    LaurentPoly p;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2) throw DomainError("polynomial term must be [exponent, coefficient]");
        p.add_term(t[0].get<int>(), t[1].get<std::int64_t>());
    }
    return p;
}

inline json to_json(const Multipartition& mu) {
    json out = json::array();
    for (const auto& part : mu.components()) out.push_back(part.parts());
    return out;
}

inline Multipartition multipartition_from_json(const json& j, const Multicharge& charge) {
    if (!j.is_array()) throw DomainError("multipartition JSON must be an array of arrays");
    std::vector<Partition> comps;
    for (const auto& c : j) {
        if (!c.is_array()) throw DomainError("multipartition component must be an array");
        comps.emplace_back(c.get<std::vector<int>>());
    }
    return Multipartition(charge, std::move(comps));
}

inline json to_json(const FockVector& x) {
    json out = json::array();
    for (const auto& [mu, c] : x.terms()) out.push_back({{"mp", to_json(mu)}, {"coef", to_json(c)}});
    return out;
}

inline FockVector fock_from_json(const json& j, const Multicharge& charge) {
    if (!j.is_array()) throw DomainError("Fock vector JSON must be an array of {\"mp\", \"coef\"}");
    FockVector x(charge);
    for (const auto& t : j) x.add(multipartition_from_json(t.at("mp"), charge), poly_from_json(t.at("coef")));
    return x;
}

inline json to_json(const CanonicalElement& g) {
    return {{"leader", to_json(g.leader)}, {"vector", to_json(g.vector)}, {"shape", to_json(g.shape)}};
}

// Crystal graphs ------------------------------------------------------------

inline json to_json(const CrystalGraph& g) {
    json vs = json::array();
    for (const auto& v : g.vertices()) {
        json jv = {{"content", v.content}, {"hub", v.hub}, {"defect", v.defect}, {"count", v.count}};
        if (!v.multipartitions.empty()) {
            json mps = json::array();
            for (const auto& mu : v.multipartitions) mps.push_back(to_json(mu));
            jv["multipartitions"] = mps;
        }
        vs.push_back(jv);
    }
    json es = json::array();
    for (const auto& ed : g.edges()) es.push_back({{"from", ed.from}, {"to", ed.to}, {"residue", ed.residue}});
    json out = {{"e", g.base().e()}, {"lambda", g.base().a()}, {"vertices", vs}, {"edges", es}};
    out["interval"] = g.interval() ? json(*g.interval()) : json(nullptr);
    return out;
}

/// Rebuilds a graph; hub, defect and degree are recomputed and checked against the file.
inline CrystalGraph crystal_from_json(const json& j) {
    const DominantWeight base(j.at("e").get<int>(), j.at("lambda").get<IntVec>());
    std::optional<std::vector<int>> interval;
    if (j.contains("interval") && !j.at("interval").is_null()) interval = j.at("interval").get<std::vector<int>>();
    std::vector<CrystalVertex> vertices;
    for (const auto& jv : j.at("vertices")) {
        CrystalVertex v;
        v.content = jv.at("content").get<IntVec>();
        const WeightPoint p(base, v.content);
        v.hub = hub(p);
        v.defect = defect(p);
        v.degree = p.degree();
        if (jv.contains("hub") && jv.at("hub").get<IntVec>() != v.hub)
            throw IntegrityError("stored hub does not match content " + content_string(v.content));
        if (jv.contains("defect") && jv.at("defect").get<int>() != v.defect)
            throw IntegrityError("stored defect does not match content " + content_string(v.content));
        v.count = jv.value("count", std::size_t{0});
        if (jv.contains("multipartitions"))
            for (const auto& m : jv.at("multipartitions"))
                v.multipartitions.push_back(multipartition_from_json(m, base.multicharge()));
        vertices.push_back(std::move(v));
    }
    std::vector<CrystalEdge> edges;
    for (const auto& je : j.at("edges"))
        edges.push_back({je.at("from").get<std::size_t>(), je.at("to").get<std::size_t>(), je.at("residue").get<int>()});
    return CrystalGraph::assemble(base, std::move(interval), std::move(vertices), edges);
}

// Face classification -------------------------------------------------------

inline json to_json(const FaceMultipartition& f) {
    return {{"w", f.w}, {"mu", to_json(f.mu)}, {"path", to_string(f.path)}, {"u", f.u}};
}

// G(mu) cache ---------------------------------------------------------------

/// One file per multicharge: {"e", "charge", "elements": [{"leader", "vector"}]}.
inline std::string cache_file_name(const Multicharge& charge) {
    std::string name = "g-e" + std::to_string(charge.e());
    for (int k : charge.residues()) name += "-" + std::to_string(k);
    return name + ".json";
}

inline void save_cache(const CanonicalBasis& basis, const std::string& path) {
    json els = json::array();
    for (const auto& [mu, g] : basis.memo()) els.push_back({{"leader", to_json(mu)}, {"vector", to_json(g.vector)}});
    json out = {{"e", basis.charge().e()}, {"charge", basis.charge().residues()}, {"elements", els}};
    std::ofstream f(path);
    if (!f) throw DomainError("cannot write cache file " + path);
    f << out.dump() << '\n';
}

/// Loads a cache written by save_cache; every element is re-validated on insert.
/// Missing files are not an error.
inline std::size_t load_cache(CanonicalBasis& basis, const std::string& path) {
    std::ifstream f(path);
    if (!f) return 0;
    json j;
    try {
        f >> j;
    } catch (const json::exception& ex) {
        throw IntegrityError("corrupt cache file " + path + ": " + ex.what());
    }
    const Multicharge& ch = basis.charge();
    if (j.at("e").get<int>() != ch.e() || j.at("charge").get<std::vector<int>>() != ch.residues())
        throw IntegrityError("cache file " + path + " belongs to a different multicharge");
    std::size_t n = 0;
    for (const auto& el : j.at("elements")) {
        auto mu = multipartition_from_json(el.at("leader"), ch);
        auto x = fock_from_json(el.at("vector"), ch);
        basis.insert({mu, x, shape(x)});
        ++n;
    }
    return n;
}

}  // namespace faces
