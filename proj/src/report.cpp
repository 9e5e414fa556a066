#include "polychow/report.hpp"

#include <algorithm>
#include <sstream>

#include "polychow/polyhedron.hpp"

namespace polychow {

namespace {

ReportJson matrix_json(const QMat& m) {
    ReportJson rows = ReportJson::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        ReportJson row = ReportJson::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ReportJson matrix_json(const ZMat& m) {
    ReportJson rows = ReportJson::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        ReportJson row = ReportJson::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ReportJson qvec_json(const QVec& v) {
    ReportJson out = ReportJson::array();
    for (const Rat& x : v) out.push_back(to_string(x));
    return out;
}

std::string pad_left(const std::string& s, size_t w) {
    return std::string(w - std::min(w, s.size()), ' ') + s;
}

std::string pad_right(const std::string& s, size_t w) {
    return s + std::string(w - std::min(w, s.size()), ' ');
}

// generic value formatting for echoed options
std::string scalar_text(const ReportJson& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "on" : "off";
    return v.dump();
}

std::string join_labels(const ReportJson& labels) {
    std::string out;
    for (const auto& l : labels) {
        if (!out.empty()) out += " ";
        out += l.get<std::string>();
    }
    return out;
}

// "(a,b,c)" from a JSON array of scalar strings
std::string tuple_text(const ReportJson& arr) {
    std::string out = "(";
    for (size_t i = 0; i < arr.size(); ++i) {
        if (i) out += ",";
        out += scalar_text(arr[i]);
    }
    return out + ")";
}

// linear combination over labeled generators, coefficient strings exact
std::string combination_text(const ReportJson& coeffs, const ReportJson& labels) {
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Rat c = parse_rat(coeffs[i].get<std::string>());
        if (c == 0) continue;
        Rat mag = c < 0 ? Rat(-c) : c;
        out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (mag != 1) out += to_string(mag) + " ";
        out += labels[i].get<std::string>();
    }
    return out.empty() ? "0" : out;
}

void render_table(std::ostringstream& os, const std::string& indent,
                  const std::vector<std::string>& col_labels,
                  const std::vector<std::string>& row_labels, const ReportJson& rows) {
    const size_t ncols = col_labels.size();
    std::vector<size_t> w(ncols);
    for (size_t j = 0; j < ncols; ++j) w[j] = col_labels[j].size();
    for (const auto& row : rows)
        for (size_t j = 0; j < ncols; ++j)
            w[j] = std::max(w[j], row[j].get<std::string>().size());
    size_t rw = 0;
    for (const std::string& r : row_labels) rw = std::max(rw, r.size());

    os << indent;
    if (!row_labels.empty()) os << std::string(rw + 2, ' ');
    for (size_t j = 0; j < ncols; ++j) os << (j ? "  " : "") << pad_left(col_labels[j], w[j]);
    os << "\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        os << indent;
        if (!row_labels.empty()) os << pad_right(row_labels[i], rw) << "  ";
        for (size_t j = 0; j < ncols; ++j)
            os << (j ? "  " : "") << pad_left(rows[i][j].get<std::string>(), w[j]);
        os << "\n";
    }
}

std::vector<std::string> string_list(const ReportJson& arr) {
    std::vector<std::string> out;
    for (const auto& x : arr) out.push_back(x.get<std::string>());
    return out;
}

// matrices beyond this edge length are elided from text output
constexpr size_t kTextMatrixLimit = 30;

void render_labeled_matrix(std::ostringstream& os, const std::string& indent,
                           const std::string& name, const ReportJson& col_labels,
                           const ReportJson& row_labels, const ReportJson& entries) {
    const size_t nrows = entries.size();
    const size_t ncols = col_labels.size();
    os << indent << name << " (" << nrows << " x " << ncols << ")";
    if (nrows == 0 || ncols == 0) {
        os << ": empty\n";
        return;
    }
    if (nrows > kTextMatrixLimit || ncols > kTextMatrixLimit) {
        os << ": elided in text output, included in json\n";
        return;
    }
    os << ":\n";
    render_table(os, indent + "  ", string_list(col_labels), string_list(row_labels), entries);
}

ReportJson polynomial_json(const RankPolynomial& p) {
    ReportJson out;
    out["text"] = p.str();
    ReportJson coeffs = ReportJson::array();
    for (const Int& c : p.coefficients) coeffs.push_back(to_string(c));
    out["coefficients"] = coeffs;
    return out;
}

}  // namespace

ReportJson summary_section(const PolyhedralComplex& c) {
    ReportJson s;
    s["lattice_rank"] = c.ambient_rank();
    s["cells"] = c.size();
    s["maximal_cells"] = c.maximal().size();
    ReportJson skel = ReportJson::array();
    for (size_t d = 0; d <= c.ambient_rank(); ++d) skel.push_back(c.skeleton_indices(d).size());
    s["skeleton"] = skel;
    s["complete"] = c.is_complete();
    s["regular"] = c.is_regular();
    s["reduced_special_fiber"] = c.is_reduced();
    return s;
}

ReportJson presentation_payload(const ChowData& data, const std::vector<long>& ks) {
    ReportJson arr = ReportJson::array();
    for (long k : ks) {
        ChowPresentation p = data.presentation(k);
        ReportJson jk;
        jk["k"] = k;
        jk["generators"] = p.basis.labels;
        jk["relations"] = matrix_json(p.relations);
        jk["rank"] = p.rank;
        jk["dimension"] = p.dim;
        ReportJson free = ReportJson::array();
        for (size_t idx : p.free_generators) free.push_back(p.basis.labels[idx]);
        jk["free_generators"] = free;
        ReportJson exprs = ReportJson::array();
        for (const auto& e : p.expressions) {
            ReportJson je;
            je["generator"] = p.basis.labels[e.generator];
            je["coefficients"] = qvec_json(e.coefficients);
            exprs.push_back(std::move(je));
        }
        jk["expressions"] = exprs;
        arr.push_back(std::move(jk));
    }
    ReportJson out;
    out["presentations"] = std::move(arr);
    return out;
}

ReportJson fiber_payload(const ChowData& data, const std::vector<long>& ks, bool special) {
    ReportJson arr = ReportJson::array();
    for (long k : ks) {
        ReportJson jk;
        jk["k"] = k;
        jk["dimension"] = special ? data.special_fiber_dim(k) : data.generic_fiber_dim(k);
        arr.push_back(std::move(jk));
    }
    ReportJson out;
    out["fiber"] = special ? "special" : "generic";
    out["dimensions"] = std::move(arr);
    return out;
}

ReportJson rank_poly_payload(const RankPolynomial& p) {
    ReportJson out;
    out["rank_polynomial"] = polynomial_json(p);
    return out;
}

ReportJson verify_payload(const RankFormulaCheck& chk, size_t lattice_rank) {
    ReportJson v;
    v["ok"] = chk.ok;
    v["polynomial"] = polynomial_json(chk.polynomial);
    ReportJson cmp = ReportJson::array();
    for (size_t j = 0; j < chk.polynomial.coefficients.size(); ++j) {
        ReportJson row;
        row["power"] = j;
        row["coefficient"] = to_string(chk.polynomial.coefficients[j]);
        row["k"] = long(lattice_rank) + 1 - long(j);
        row["chow_dimension"] = chk.chow_dims[j];
        row["match"] = chk.polynomial.coefficients[j] == long(chk.chow_dims[j]);
        cmp.push_back(std::move(row));
    }
    v["comparisons"] = std::move(cmp);
    ReportJson out;
    out["rank_formula"] = std::move(v);
    return out;
}

ReportJson divisor_payload(const PolyhedralComplex& c, const TWeilDivisor& d) {
    ReportJson components = ReportJson::array();
    std::vector<ZVec> rays = recession_rays(c);
    for (size_t i = 0; i < rays.size(); ++i) {
        ReportJson e;
        e["label"] = "H[" + to_string(rays[i]) + "]";
        e["coefficient"] = to_string(d.horizontal[i]);
        components.push_back(std::move(e));
    }
    std::vector<size_t> verts = c.skeleton_indices(0);
    for (size_t i = 0; i < verts.size(); ++i) {
        ReportJson e;
        e["label"] = vertical_label(verts[i]);
        e["coefficient"] = to_string(d.vertical[i]);
        components.push_back(std::move(e));
    }
    ReportJson out;
    out["components"] = std::move(components);
    return out;
}

ReportJson pieces_payload(const PiecewiseAffine& phi) {
    const PolyhedralComplex& c = phi.complex();
    ReportJson arr = ReportJson::array();
    for (size_t p = 0; p < phi.pieces(); ++p) {
        ReportJson e;
        e["cell"] = c.maximal()[p];
        e["m"] = qvec_json(phi.form(p));
        e["l"] = to_string(phi.offset(p));
        arr.push_back(std::move(e));
    }
    ReportJson out;
    out["pieces"] = std::move(arr);
    return out;
}

ReportJson specialize_payload(const ChowData& data, const std::vector<long>& ks) {
    ReportJson arr = ReportJson::array();
    for (long k : ks) {
        SpecializationMatrix s = data.specialize(k);
        ReportJson jk;
        jk["k"] = k;
        ReportJson rows = ReportJson::array();
        for (size_t i : s.rows) rows.push_back(vertical_label(i));
        ReportJson cols = ReportJson::array();
        for (size_t i : s.cols) cols.push_back(horizontal_label(data.fan().cell(i)));
        jk["rows"] = std::move(rows);
        jk["cols"] = std::move(cols);
        jk["entries"] = matrix_json(s.entries);
        arr.push_back(std::move(jk));
    }
    ReportJson out;
    out["specializations"] = std::move(arr);
    return out;
}

ReportJson orbits_payload(const PolyhedralComplex& c) {
    const size_t n = c.ambient_rank();
    PolyhedralComplex fan = recession_fan(c);
    ReportJson cones = ReportJson::array();
    for (size_t i = 0; i < fan.size(); ++i) {
        ReportJson e;
        e["label"] = horizontal_label(fan.cell(i));
        e["dimension"] = fan.cell(i).dim();
        e["orbit_dimension"] = n - fan.cell(i).dim();
        cones.push_back(std::move(e));
    }
    ReportJson cells = ReportJson::array();
    for (size_t i = 0; i < c.size(); ++i) {
        const Polyhedron& cell = c.cell(i);
        ReportJson e;
        e["label"] = vertical_label(i);
        e["dimension"] = cell.dim();
        e["multiplicity"] = to_string(multiplicity(cell));
        size_t rec = fan.find(cone_polyhedron(recession_cone(cell)));
        e["recession"] = horizontal_label(fan.cell(rec));
        e["orbit_dimension"] = n - cell.dim();
        cells.push_back(std::move(e));
    }
    ReportJson out;
    out["recession_cones"] = std::move(cones);
    out["cells"] = std::move(cells);
    return out;
}

ReportJson document_payload(const ComplexDocument& d) {
    ReportJson out;
    out["document"] = ReportJson::parse(serialize(d));
    return out;
}

ReportJson report_envelope(const std::string& command, const ReportJson& input,
                           const ReportJson& options, const ReportJson& summary,
                           const std::vector<std::string>& warnings, ReportJson result) {
    ReportJson r;
    r["command"] = command;
    r["input"] = input;
    r["options"] = options;
    r["complex"] = summary;
    r["warnings"] = warnings;
    r["result"] = std::move(result);
    return r;
}

namespace {

void render_presentations(std::ostringstream& os, const ReportJson& result) {
    for (const auto& p : result.at("presentations")) {
        os << "k = " << p.at("k").get<long>() << "\n";
        const ReportJson& gens = p.at("generators");
        os << "  generators (" << gens.size() << "): " << join_labels(gens) << "\n";
        os << "  relations: " << p.at("relations").size() << ", rank: " << p.at("rank")
           << ", dimension: " << p.at("dimension") << "\n";
        render_labeled_matrix(os, "  ", "relation matrix", gens, ReportJson::array(),
                              p.at("relations"));
        os << "  free generators: " << join_labels(p.at("free_generators")) << "\n";
        if (!p.at("expressions").empty()) {
            os << "  expressions:\n";
            for (const auto& e : p.at("expressions"))
                os << "    " << e.at("generator").get<std::string>() << " = "
                   << combination_text(e.at("coefficients"), p.at("free_generators")) << "\n";
        }
    }
}

void render_fiber(std::ostringstream& os, const ReportJson& result) {
    os << result.at("fiber").get<std::string>() << " fiber dimensions:\n";
    for (const auto& d : result.at("dimensions"))
        os << "  k = " << d.at("k").get<long>() << ": " << d.at("dimension") << "\n";
}

void render_verify(std::ostringstream& os, const ReportJson& result) {
    const ReportJson& v = result.at("rank_formula");
    os << "rank formula: " << (v.at("ok").get<bool>() ? "OK" : "MISMATCH") << " ("
       << v.at("polynomial").at("text").get<std::string>() << ")\n";
    for (const auto& row : v.at("comparisons")) {
        os << "  z^" << row.at("power") << ": coefficient "
           << row.at("coefficient").get<std::string>() << ", dimension at k = "
           << row.at("k").get<long>() << ": " << row.at("chow_dimension") << ", "
           << (row.at("match").get<bool>() ? "match" : "MISMATCH") << "\n";
    }
}

void render_divisor_components(std::ostringstream& os, const ReportJson& divisor) {
    os << "divisor:\n";
    for (const auto& e : divisor.at("components"))
        os << "  " << e.at("label").get<std::string>() << ": "
           << e.at("coefficient").get<std::string>() << "\n";
}

void render_pieces(std::ostringstream& os, const ReportJson& result) {
    os << "pieces:\n";
    for (const auto& e : result.at("pieces"))
        os << "  cell " << e.at("cell") << ": m = " << tuple_text(e.at("m"))
           << ", l = " << e.at("l").get<std::string>() << "\n";
}

void render_specializations(std::ostringstream& os, const ReportJson& result) {
    for (const auto& s : result.at("specializations")) {
        os << "specialization at k = " << s.at("k").get<long>()
           << " (rows: cells, columns: recession cones)\n";
        render_labeled_matrix(os, "  ", "matrix", s.at("cols"), s.at("rows"), s.at("entries"));
    }
}

void render_orbits(std::ostringstream& os, const ReportJson& result) {
    const ReportJson& cones = result.at("recession_cones");
    os << "recession cones (" << cones.size() << "):\n";
    for (const auto& e : cones)
        os << "  " << e.at("label").get<std::string>() << ": dimension " << e.at("dimension")
           << ", orbit dimension " << e.at("orbit_dimension") << "\n";
    const ReportJson& cells = result.at("cells");
    os << "cells (" << cells.size() << "):\n";
    for (const auto& e : cells)
        os << "  " << e.at("label").get<std::string>() << ": dimension " << e.at("dimension")
           << ", multiplicity " << e.at("multiplicity").get<std::string>() << ", recession "
           << e.at("recession").get<std::string>() << ", orbit dimension "
           << e.at("orbit_dimension") << "\n";
}

}  // namespace

std::string render_text(const ReportJson& report) {
    std::ostringstream os;
    os << "command: " << report.at("command").get<std::string>() << "\n";
    for (const auto& item : report.at("input").items())
        os << "input: " << item.key() << " " << scalar_text(item.value()) << "\n";
    std::string opts;
    for (const auto& item : report.at("options").items()) {
        if (!opts.empty()) opts += ", ";
        opts += item.key() + "=" + scalar_text(item.value());
    }
    os << "options: " << opts << "\n";

    const ReportJson& s = report.at("complex");
    os << "complex: lattice rank " << s.at("lattice_rank") << ", " << s.at("cells")
       << " cells, " << s.at("maximal_cells") << " maximal, skeleton " << tuple_text(s.at("skeleton"))
       << "\n";
    auto yesno = [&](const char* key) { return s.at(key).get<bool>() ? "yes" : "no"; };
    os << "properties: complete " << yesno("complete") << ", regular " << yesno("regular")
       << ", reduced special fiber " << yesno("reduced_special_fiber") << "\n";
    for (const auto& w : report.at("warnings"))
        os << "warning: " << w.get<std::string>() << "\n";

    const std::string command = report.at("command").get<std::string>();
    const ReportJson& result = report.at("result");
    if (command == "check") {
        os << "validation: " << result.at("validation").get<std::string>() << "\n";
    } else if (command == "chow") {
        render_presentations(os, result);
    } else if (command == "generic-fiber" || command == "special-fiber") {
        render_fiber(os, result);
    } else if (command == "rank-poly") {
        os << "rank polynomial: " << result.at("rank_polynomial").at("text").get<std::string>()
           << "\n  coefficients: " << tuple_text(result.at("rank_polynomial").at("coefficients"))
           << "\n";
    } else if (command == "verify") {
        render_verify(os, result);
    } else if (command == "divisor") {
        const ReportJson& m = result.at("monomial");
        os << "monomial: m = " << tuple_text(m.at("m")) << ", l = "
           << m.at("l").get<std::string>() << "\n";
        render_divisor_components(os, result.at("divisor"));
    } else if (command == "pa-divisor") {
        render_pieces(os, result);
        render_divisor_components(os, result.at("divisor"));
    } else if (command == "specialize") {
        render_specializations(os, result);
    } else if (command == "orbits") {
        render_orbits(os, result);
    } else if (command == "fixture") {
        os << result.at("document").dump(2) << "\n";
    }
    return os.str();
}

std::string render(const ReportJson& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    return render_text(report);
}

}  // namespace polychow
