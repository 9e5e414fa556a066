#include "polychow/document.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <set>
#include <stdexcept>

#include "polychow/polyhedron.hpp"

namespace polychow {

namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ValidationError("document: " + where + ": " + what);
}

void expect_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& item : obj.items())
        if (!allowed.count(item.key())) fail(where, "unknown field '" + item.key() + "'");
}

const Json& field(const Json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, "missing field '" + key + "'");
    return *it;
}

Rat rat_at(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return Rat(v.get<long>());
    if (v.is_string()) {
        try {
            return parse_rat(v.get<std::string>());
        } catch (const std::exception& e) {
            fail(where, std::string("malformed rational: ") + e.what());
        }
    }
    fail(where, "expected an integer or a rational string \"p/q\"");
}

Int int_at(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return Int(v.get<long>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::exception&) {
            fail(where, "malformed integer '" + v.get<std::string>() + "'");
        }
    }
    fail(where, "expected an integer");
}

size_t index_at(const Json& v, size_t limit, const std::string& where) {
    if (!v.is_number_integer() || v.is_number_float())
        fail(where, "expected an index");
    long long raw = v.get<long long>();
    if (raw < 0 || size_t(raw) >= limit)
        fail(where, "index " + std::to_string(raw) + " out of range [0, " +
                        std::to_string(limit) + ")");
    return size_t(raw);
}

std::vector<size_t> index_list_at(const Json& v, size_t limit, const std::string& where) {
    if (!v.is_array()) fail(where, "expected an index list");
    std::vector<size_t> out;
    std::set<size_t> seen;
    for (size_t i = 0; i < v.size(); ++i) {
        size_t idx = index_at(v[i], limit, where + "[" + std::to_string(i) + "]");
        if (!seen.insert(idx).second)
            fail(where + "[" + std::to_string(i) + "]", "repeated index");
        out.push_back(idx);
    }
    return out;
}

// scalar for serialization: plain number when it fits, string otherwise
OrderedJson scalar(const Int& z) {
    if (mpz_fits_slong_p(z.get_mpz_t())) return OrderedJson(z.get_si());
    return OrderedJson(to_string(z));
}

OrderedJson scalar(const Rat& q) {
    if (q.get_den() == 1) return scalar(Int(q.get_num()));
    return OrderedJson(to_string(q));
}

}  // namespace

ComplexDocument parse_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("document: ") + e.what());
    }
    if (!j.is_object()) fail("$", "expected a JSON object");
    expect_keys(j, {"lattice_rank", "vertices", "rays", "maximal_cells"}, "$");

    ComplexDocument d;
    const Json& rank = field(j, "lattice_rank", "$");
    if (!rank.is_number_integer() || rank.get<long long>() < 1)
        fail("lattice_rank", "expected a positive integer");
    d.lattice_rank = rank.get<size_t>();

    const Json& verts = field(j, "vertices", "$");
    if (!verts.is_array()) fail("vertices", "expected an array");
    for (size_t i = 0; i < verts.size(); ++i) {
        std::string where = "vertices[" + std::to_string(i) + "]";
        if (!verts[i].is_array() || verts[i].size() != d.lattice_rank)
            fail(where, "expected " + std::to_string(d.lattice_rank) + " coordinates");
        QVec v;
        for (size_t k = 0; k < verts[i].size(); ++k)
            v.push_back(rat_at(verts[i][k], where + "[" + std::to_string(k) + "]"));
        d.vertices.push_back(std::move(v));
    }

    const Json& rays = field(j, "rays", "$");
    if (!rays.is_array()) fail("rays", "expected an array");
    for (size_t i = 0; i < rays.size(); ++i) {
        std::string where = "rays[" + std::to_string(i) + "]";
        if (!rays[i].is_array() || rays[i].size() != d.lattice_rank)
            fail(where, "expected " + std::to_string(d.lattice_rank) + " coordinates");
        ZVec r;
        for (size_t k = 0; k < rays[i].size(); ++k)
            r.push_back(int_at(rays[i][k], where + "[" + std::to_string(k) + "]"));
        if (std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; }))
            fail(where, "zero vector is not a ray");
        d.rays.push_back(std::move(r));
    }

    const Json& cells = field(j, "maximal_cells", "$");
    if (!cells.is_array()) fail("maximal_cells", "expected an array");
    for (size_t i = 0; i < cells.size(); ++i) {
        std::string where = "maximal_cells[" + std::to_string(i) + "]";
        if (!cells[i].is_object()) fail(where, "expected an object");
        expect_keys(cells[i], {"vertices", "rays"}, where);
        CellRecord rec;
        rec.vertices =
            index_list_at(field(cells[i], "vertices", where), d.vertices.size(), where + ".vertices");
        rec.rays = index_list_at(field(cells[i], "rays", where), d.rays.size(), where + ".rays");
        if (rec.vertices.empty()) fail(where + ".vertices", "a cell needs at least one vertex");
        d.maximal_cells.push_back(std::move(rec));
    }
    return d;
}

std::string serialize(const ComplexDocument& d) {
    OrderedJson j;
    j["lattice_rank"] = d.lattice_rank;
    j["vertices"] = OrderedJson::array();
    for (const QVec& v : d.vertices) {
        OrderedJson row = OrderedJson::array();
        for (const Rat& x : v) row.push_back(scalar(x));
        j["vertices"].push_back(std::move(row));
    }
    j["rays"] = OrderedJson::array();
    for (const ZVec& r : d.rays) {
        OrderedJson row = OrderedJson::array();
        for (const Int& x : r) row.push_back(scalar(x));
        j["rays"].push_back(std::move(row));
    }
    j["maximal_cells"] = OrderedJson::array();
    for (const CellRecord& rec : d.maximal_cells) {
        OrderedJson cell;
        cell["vertices"] = rec.vertices;
        cell["rays"] = rec.rays;
        j["maximal_cells"].push_back(std::move(cell));
    }
    return j.dump(2) + "\n";
}

ComplexDocument document_of(const PolyhedralComplex& c) {
    ComplexDocument d;
    d.lattice_rank = c.ambient_rank();
    std::map<QVec, size_t> vertex_pos;
    for (size_t vi : c.skeleton_indices(0)) {
        vertex_pos[c.cell(vi).vertices()[0]] = d.vertices.size();
        d.vertices.push_back(c.cell(vi).vertices()[0]);
    }
    d.rays = recession_rays(c);
    for (size_t mi : c.maximal()) {
        const Polyhedron& cell = c.cell(mi);
        CellRecord rec;
        for (const QVec& v : cell.vertices()) rec.vertices.push_back(vertex_pos.at(v));
        for (const ZVec& r : cell.rays())
            rec.rays.push_back(std::lower_bound(d.rays.begin(), d.rays.end(), r) - d.rays.begin());
        d.maximal_cells.push_back(std::move(rec));
    }
    return d;
}

PolyhedralComplex build_from_document(const ComplexDocument& d, uint64_t audit_seed) {
    std::vector<Polyhedron> cells;
    for (size_t i = 0; i < d.maximal_cells.size(); ++i) {
        const CellRecord& rec = d.maximal_cells[i];
        std::vector<QVec> verts;
        std::vector<ZVec> rays;
        for (size_t idx : rec.vertices) verts.push_back(d.vertices[idx]);
        for (size_t idx : rec.rays) rays.push_back(d.rays[idx]);
        try {
            cells.emplace_back(d.lattice_rank, verts, rays);
        } catch (const std::exception& e) {
            throw ValidationError("document: maximal_cells[" + std::to_string(i) + "]: " +
                                  e.what());
        }
    }
    return build_complex(d.lattice_rank, cells, audit_seed);
}

PiecewiseAffine parse_piecewise_affine(const std::string& text, const PolyhedralComplex& c) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("piecewise affine document: ") + e.what());
    }
    if (!j.is_array()) fail("$", "expected an array of {cell, m, l} records");

    const std::vector<size_t>& mx = c.maximal();
    std::map<size_t, size_t> position;
    for (size_t p = 0; p < mx.size(); ++p) position[mx[p]] = p;

    std::vector<QVec> forms(mx.size());
    std::vector<Rat> offsets(mx.size());
    std::vector<bool> covered(mx.size(), false);
    for (size_t i = 0; i < j.size(); ++i) {
        std::string where = "[" + std::to_string(i) + "]";
        if (!j[i].is_object()) fail(where, "expected an object");
        expect_keys(j[i], {"cell", "m", "l"}, where);
        size_t cell = index_at(field(j[i], "cell", where), c.size(), where + ".cell");
        auto pos = position.find(cell);
        if (pos == position.end()) fail(where + ".cell", "not a maximal cell");
        if (covered[pos->second]) fail(where + ".cell", "repeated cell");
        covered[pos->second] = true;
        const Json& m = field(j[i], "m", where);
        if (!m.is_array() || m.size() != c.ambient_rank())
            fail(where + ".m", "expected " + std::to_string(c.ambient_rank()) + " coordinates");
        QVec form;
        for (size_t k = 0; k < m.size(); ++k)
            form.push_back(rat_at(m[k], where + ".m[" + std::to_string(k) + "]"));
        forms[pos->second] = std::move(form);
        offsets[pos->second] = rat_at(field(j[i], "l", where), where + ".l");
    }
    for (size_t p = 0; p < mx.size(); ++p)
        if (!covered[p])
            fail("$", "no record for maximal cell " + std::to_string(mx[p]));
    return PiecewiseAffine(c, std::move(forms), std::move(offsets));
}

}  // namespace polychow
