#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "latnorm/bounds.hpp"
#include "latnorm/cn.hpp"
#include "latnorm/corner.hpp"
#include "latnorm/hilbert.hpp"
#include "latnorm/normality.hpp"

namespace latnorm {

using json = nlohmann::ordered_json;

// Exact scalars serialize as JSON integers when they fit in int64, otherwise
// as "n" / "n/d" strings; the parser accepts both forms everywhere.
inline json int_to_json(const Int& z) {
    static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
    static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
    if (z >= lo && z <= hi) return z.convert_to<std::int64_t>();
    return int_str(z);
}

inline json rat_to_json(const Rat& r) {
    if (is_integer(r)) return int_to_json(num(r));
    return rat_str(r);
}

inline Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(Int(j.get<std::int64_t>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw format_error("expected an integer or a rational string, got " + j.dump());
}

inline Int int_from_json(const json& j) {
    Rat r = rat_from_json(j);
    if (!is_integer(r)) throw format_error("expected an integer, got " + j.dump());
    return num(r);
}

inline json qvec_to_json(const QVec& v) {
    json a = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) a.push_back(rat_to_json(v[i]));
    return a;
}

inline json zvec_to_json(const ZVec& v) {
    json a = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) a.push_back(int_to_json(v[i]));
    return a;
}

inline QVec qvec_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw format_error("expected a non-empty coordinate array");
    QVec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = rat_from_json(j[i]);
    return v;
}

inline ZVec zvec_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw format_error("expected a non-empty coordinate array");
    ZVec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = int_from_json(j[i]);
    return v;
}

inline json polytope_to_json(const Polytope& p) {
    json j;
    j["ambient_dim"] = p.ambient;
    j["dim"] = p.dim;
    json vs = json::array();
    for (const QVec& v : p.verts) vs.push_back(qvec_to_json(v));
    j["vertices"] = vs;
    json fs = json::array();
    for (const Facet& f : p.facets) {
        json fj;
        fj["normal"] = zvec_to_json(f.normal);
        fj["offset"] = rat_to_json(f.offset);
        fj["vertices"] = f.verts;
        fs.push_back(fj);
    }
    j["facets"] = fs;
    json eqs = json::array();
    for (const Hyperplane& h : p.aff) {
        json hj;
        hj["normal"] = zvec_to_json(h.normal);
        hj["offset"] = rat_to_json(h.offset);
        eqs.push_back(hj);
    }
    j["affine_hull"] = eqs;
    json es = json::array();
    for (const auto& e : p.edges) es.push_back({e.first, e.second});
    j["edges"] = es;
    return j;
}

// Only "vertices" is required on input; everything else is recomputed so that
// loaded polytopes are always in canonical form. Fixture envelopes (objects
// with a "polytope" member) are unwrapped transparently.
inline Polytope polytope_from_json(const json& j) {
    if (j.is_object() && j.contains("polytope")) return polytope_from_json(j["polytope"]);
    if (!j.is_object() || !j.contains("vertices"))
        throw format_error("polytope object needs a \"vertices\" array");
    const json& vs = j["vertices"];
    if (!vs.is_array() || vs.empty()) throw format_error("\"vertices\" must be a non-empty array");
    std::vector<QVec> pts;
    for (const json& vj : vs) pts.push_back(qvec_from_json(vj));
    for (const QVec& v : pts)
        if (v.size() != pts.front().size())
            throw format_error("all vertices must share one ambient dimension");
    if (j.contains("ambient_dim")) {
        std::size_t amb = j["ambient_dim"].get<std::size_t>();
        if (amb != pts.front().size())
            throw format_error("\"ambient_dim\" disagrees with vertex coordinates");
    }
    return from_vertices(pts);
}

// Named fixture envelope around a polytope. The polytope member is canonical
// (it comes out of from_vertices), so serialization is reproducible byte for
// byte.
inline json fixture_to_json(const std::string& name, const std::vector<std::string>& tags,
                            const Polytope& p) {
    json j;
    j["name"] = name;
    j["tags"] = tags;
    j["polytope"] = polytope_to_json(p);
    return j;
}

inline json cover_report_to_json(const CoverReport& r) {
    json j;
    j["covered"] = r.covered;
    j["witness"] = r.witness ? qvec_to_json(*r.witness) : json(nullptr);
    j["mode"] = r.mode;
    j["pieces_used"] = r.pieces_used;
    j["regions_explored"] = r.regions_explored;
    j["c"] = r.c ? rat_to_json(*r.c) : json(nullptr);
    j["notes"] = r.notes;
    return j;
}

inline json ic_report_to_json(const ICReport& r) {
    json j;
    j["integrally_closed"] = r.integrally_closed;
    j["normal"] = r.normal;
    j["lattice_summand"] = r.summand;
    if (r.witness) {
        json w;
        w["degree"] = int_to_json(r.witness->first);
        w["point"] = zvec_to_json(r.witness->second);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    json degs = json::array();
    for (const Int& d : r.degrees_checked) degs.push_back(int_to_json(d));
    j["degrees_checked"] = degs;
    json inv = json::array();
    for (const Int& f : r.invariant_factors) inv.push_back(int_to_json(f));
    j["invariant_factors"] = inv;
    return j;
}

inline json cn_report_to_json(const CnReport& r) {
    json j;
    j["holds"] = r.holds;
    j["k"] = rat_to_json(r.k);
    json grid = json::array();
    for (const Rat& c : r.grid) grid.push_back(rat_to_json(c));
    j["grid"] = grid;
    json per = json::array();
    for (const CoverReport& cr : r.per_c) per.push_back(cover_report_to_json(cr));
    j["per_c"] = per;
    j["notes"] = r.notes;
    return j;
}

inline json bcn_report_to_json(const BcnReport& r) {
    json j;
    j["holds"] = r.holds;
    j["k"] = rat_to_json(r.k);
    json grid = json::array();
    for (const Rat& c : r.grid) grid.push_back(rat_to_json(c));
    j["grid"] = grid;
    json per = json::array();
    for (const auto& [fi, cr] : r.per_facet_c) {
        json e;
        e["facet"] = fi;
        e["report"] = cover_report_to_json(cr);
        per.push_back(e);
    }
    j["per_facet_c"] = per;
    j["notes"] = r.notes;
    return j;
}

inline json corner_report_to_json(const CornerCoverReport& r) {
    json j;
    j["covered"] = r.covered;
    j["witness"] = r.witness ? qvec_to_json(*r.witness) : json(nullptr);
    j["boxes_per_cone"] = r.boxes_per_cone;
    j["regions_explored"] = r.regions_explored;
    json per = json::array();
    for (const CoverReport& cr : r.per_cone) per.push_back(cover_report_to_json(cr));
    j["per_cone"] = per;
    return j;
}

inline json ppd_report_to_json(const SimplexPpdReport& r) {
    json j;
    j["covered"] = r.covered;
    j["homothety_union_covers"] = r.homothety_union_covers;
    j["witness"] = r.witness ? qvec_to_json(*r.witness) : json(nullptr);
    json boxes = json::array();
    for (const auto& lst : r.boxes_per_vertex) {
        json bl = json::array();
        for (const ZVec& t : lst) bl.push_back(zvec_to_json(t));
        boxes.push_back(bl);
    }
    j["boxes_per_vertex"] = boxes;
    json per = json::array();
    for (const CornerCoverReport& cr : r.per_vertex) per.push_back(corner_report_to_json(cr));
    j["per_vertex"] = per;
    return j;
}

inline json gauge_report_to_json(const GaugeReport& r) {
    json j;
    j["gauge"] = rat_to_json(r.gauge);
    json per = json::array();
    for (const Rat& g : r.per_vertex) per.push_back(rat_to_json(g));
    j["per_vertex"] = per;
    return j;
}

inline json hilbert_to_json(const HilbertBasis& hb) {
    json j;
    json gens = json::array();
    for (const ZVec& g : hb.cone.gens) gens.push_back(zvec_to_json(g));
    j["generators"] = gens;
    json els = json::array();
    for (std::size_t i = 0; i < hb.elements.size(); ++i) {
        json e;
        e["point"] = zvec_to_json(hb.elements[i]);
        e["height"] = rat_to_json(hb.heights[i]);
        e["box_coords"] = qvec_to_json(hb.box_coords[i]);
        els.push_back(e);
    }
    j["elements"] = els;
    return j;
}

inline json recursive_bound_to_json(const RecursiveBound& rb) {
    json j;
    j["cn"] = rat_to_json(rb.cn);
    j["bcn"] = rat_to_json(rb.bcn);
    json steps = json::array();
    for (const BoundStep& st : rb.steps) {
        json s;
        s["d"] = st.d;
        s["k"] = rat_to_json(st.k);
        s["bcn"] = rat_to_json(st.bcn);
        s["cn"] = rat_to_json(st.cn);
        steps.push_back(s);
    }
    j["steps"] = steps;
    return j;
}

inline json bound_table_to_json(const BoundTable& t) {
    json j;
    json rows = json::array();
    for (const BoundRow& r : t.rows) {
        json row;
        row["d"] = r.d;
        row["k"] = rat_to_json(r.k);
        row["recursive_cn"] = rat_to_json(r.recursive_cn);
        row["recursive_bcn"] = rat_to_json(r.recursive_bcn);
        row["closed"] = rat_to_json(r.closed);
        rows.push_back(row);
    }
    j["rows"] = rows;
    j["notes"] = t.notes;
    return j;
}

inline json gauge_falsify_to_json(const GaugeFalsifyReport& r) {
    json j;
    j["trials"] = r.trials;
    j["violations"] = r.violations;
    j["min_squared_distance"] = rat_to_json(r.min_sq);
    return j;
}

// Parses JSON text, converting byte-offset parse errors into
// "origin:line:col: message" format errors.
inline json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        if (byte > text.size()) byte = text.size();
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < byte; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::ostringstream os;
        os << origin << ":" << line << ":" << col << ": " << e.what();
        throw format_error(os.str());
    }
}

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

inline Polytope load_polytope(const std::string& path) {
    try {
        return polytope_from_json(load_json(path));
    } catch (const format_error&) {
        throw;
    } catch (const std::exception& e) {
        throw format_error(path + ": " + e.what());
    }
}

inline void save_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw format_error("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

}  // namespace latnorm
