#ifndef DELTAGRAPH_JSON_IO_HPP
#define DELTAGRAPH_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "delta.hpp"
#include "msr.hpp"
#include "ortho_rep.hpp"
#include "rational.hpp"

namespace deltagraph
{

using Json = nlohmann::ordered_json;

inline Json to_json(const DeltaCertificate& c)
{
    return Json{{"ordering", c.ordering},
                {"base_kind", std::string(to_string(c.base_kind))},
                {"excluded_counts", c.excluded_counts},
                {"mode", std::string(to_string(c.mode))}};
}

inline DeltaCertificate certificate_from_json(const Json& j)
{
    DeltaCertificate c;
    c.ordering = j.at("ordering").get<std::vector<Vertex>>();
    c.base_kind = parse_base_kind(j.at("base_kind").get<std::string>());
    c.excluded_counts = j.at("excluded_counts").get<std::vector<std::size_t>>();
    c.mode = parse_mode(j.at("mode").get<std::string>());
    return c;
}

inline Json to_json(const RationalMatrix& m)
{
    Json rows = Json::array();
    for (const auto& r : m) {
        Json row = Json::array();
        for (const auto& x : r)
            row.push_back(to_fraction_string(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline RationalMatrix matrix_from_json(const Json& j)
{
    RationalMatrix m;
    for (const auto& row : j) {
        RationalVector r;
        for (const auto& x : row)
            r.push_back(parse_fraction(x.get<std::string>()));
        m.push_back(std::move(r));
    }
    return m;
}

inline Json to_json(const OrthoRep& rep) { return Json{{"dim", rep.dim}, {"vectors", to_json(rep.vectors)}}; }

inline OrthoRep rep_from_json(const Json& j)
{
    return OrthoRep{j.at("dim").get<std::size_t>(), matrix_from_json(j.at("vectors"))};
}

inline Json to_json(const GramMatrix& g) { return to_json(g.entries); }

inline Json to_json(const RepReport& r)
{
    Json j{{"pattern", r.pattern_matches},
           {"nonzero_coordinates", r.coordinates_nonzero},
           {"pairwise_independent", r.pairwise_independent},
           {"dimension", r.dimension_matches}};
    j["certified_bound"] = r.certified_bound ? Json(*r.certified_bound) : Json(nullptr);
    return j;
}

inline Json to_json(const MsrBounds& b)
{
    Json prov = Json::array();
    for (const auto& s : b.provenance)
        prov.push_back(Json{{"rule", s.rule}, {"side", s.side}, {"value", s.value}});
    return Json{{"lo", b.lo},
                {"hi", b.hi},
                {"exact", b.exact()},
                {"consistent", b.consistent()},
                {"nullity", Json::array({b.nullity_lo(), b.nullity_hi()})},
                {"provenance", std::move(prov)}};
}

inline Json to_json(const ConjectureReport& r)
{
    Json j{{"graph", r.graph_id},
           {"order", r.order},
           {"min_degree", r.min_degree},
           {"delta_bound", r.delta_bound},
           {"certified_hi", r.certified_hi},
           {"verdict", std::string(to_string(r.verdict))}};
    j["msr"] = r.msr ? Json(*r.msr) : Json(nullptr);
    j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
    return j;
}

} // namespace deltagraph

#endif // DELTAGRAPH_JSON_IO_HPP
