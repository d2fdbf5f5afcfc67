#include "cthopf/io.hpp"

#include <fstream>

namespace cthopf {

json field_to_json(const Field& f) {
    if (f.kind == FieldKind::Rational) return json("Q");
    return json{{"GFp", f.p}};
}

Field field_from_json(const nlohmann::json& j) {
    if (j.is_string() && j.get<std::string>() == "Q") return Field::rational();
    if (j.is_object() && j.contains("GFp")) return Field::prime(j.at("GFp").get<std::uint64_t>());
    throw std::invalid_argument("field must be \"Q\" or {\"GFp\": p}");
}

json matrix_to_json(const LinMap& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dst(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.src(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

LinMap matrix_from_json(const nlohmann::json& j, const Field& f) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j.at(0).size();
    LinMap m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols) throw std::invalid_argument("ragged matrix");
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = Scalar::parse(j.at(i).at(k).get<std::string>(), f);
    }
    return m;
}

namespace {

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(c.str());
    return a;
}

Vec vec_from_json(const nlohmann::json& j, const Field& f) {
    Vec v;
    for (const auto& e : j) v.push_back(Scalar::parse(e.get<std::string>(), f));
    return v;
}

json tensor2to1_to_json(const Tensor2to1& t) {
    json rows = json::array();
    for (std::size_t i = 0; i < t.left(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < t.right(); ++j) row.push_back(vec_to_json(t.slot(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Tensor2to1 tensor2to1_from_json(const nlohmann::json& j, std::size_t out, const Field& f) {
    const std::size_t l = j.size();
    if (l == 0) throw std::invalid_argument("empty bilinear tensor");
    const std::size_t r = j.at(0).size();
    Tensor2to1 t(l, r, out, f);
    for (std::size_t i = 0; i < l; ++i) {
        if (j.at(i).size() != r) throw std::invalid_argument("ragged bilinear tensor");
        for (std::size_t k = 0; k < r; ++k) {
            Vec v = vec_from_json(j.at(i).at(k), f);
            if (v.size() != out) throw std::invalid_argument("bilinear tensor slot has wrong length");
            t.slot(i, k) = std::move(v);
        }
    }
    return t;
}

json tensor1to2_to_json(const Tensor1to2& t) {
    json rows = json::array();
    for (std::size_t i = 0; i < t.src(); ++i) {
        json row = json::array();
        for (const auto& term : t.terms(i)) row.push_back(json::array({term.a, term.b, term.coeff.str()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

Tensor1to2 tensor1to2_from_json(const nlohmann::json& j, std::size_t l, std::size_t r, const Field& f) {
    Tensor1to2 t(j.size(), l, r, f);
    for (std::size_t i = 0; i < j.size(); ++i)
        for (const auto& term : j.at(i)) {
            if (!term.is_array() || term.size() != 3)
                throw std::invalid_argument("comultiplication terms must be [a, b, coeff] triples");
            t.add(i, term.at(0).get<std::uint32_t>(), term.at(1).get<std::uint32_t>(),
                  Scalar::parse(term.at(2).get<std::string>(), f));
        }
    t.normalize_terms();
    return t;
}

}  // namespace

json hopf_to_json(const FiniteDimHopfAlgebra& h) {
    json j;
    j["field"] = field_to_json(h.field);
    j["dim"] = h.dim;
    j["basis"] = h.basis;
    j["mult"] = tensor2to1_to_json(h.mult);
    j["unit"] = vec_to_json(h.unit);
    j["comult"] = tensor1to2_to_json(h.comult);
    j["counit"] = vec_to_json(h.counit);
    j["antipode"] = matrix_to_json(h.antipode);
    return j;
}

FiniteDimHopfAlgebra hopf_from_json(const nlohmann::json& j) {
    FiniteDimHopfAlgebra h;
    h.field = field_from_json(j.at("field"));
    h.dim = j.at("dim").get<std::size_t>();
    if (j.contains("basis")) h.basis = j.at("basis").get<std::vector<std::string>>();
    h.mult = tensor2to1_from_json(j.at("mult"), h.dim, h.field);
    h.unit = vec_from_json(j.at("unit"), h.field);
    h.comult = tensor1to2_from_json(j.at("comult"), h.dim, h.dim, h.field);
    h.counit = vec_from_json(j.at("counit"), h.field);
    h.antipode = matrix_from_json(j.at("antipode"), h.field);
    return finalize_hopf(std::move(h));
}

json automorphism_to_json(const LinMap& m) { return json{{"matrix", matrix_to_json(m)}}; }

LinMap automorphism_from_json(const nlohmann::json& j, const Field& f) {
    return matrix_from_json(j.at("matrix"), f);
}

json group_to_json(const FiniteGroup& g) {
    json t = json::array();
    for (std::size_t a = 0; a < g.order; ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < g.order; ++b) row.push_back(g.table[a * g.order + b]);
        t.push_back(std::move(row));
    }
    return json{{"order", g.order}, {"table", t}, {"names", g.names}};
}

FiniteGroup group_from_json(const nlohmann::json& j) {
    const std::size_t order = j.at("order").get<std::size_t>();
    std::vector<std::uint32_t> table;
    for (const auto& row : j.at("table"))
        for (const auto& e : row) table.push_back(e.get<std::uint32_t>());
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return group_from_table(order, std::move(table), std::move(names));
}

json coalgebra_to_json(const Coalgebra& c, const json& meta) {
    json j;
    j["field"] = field_to_json(c.field);
    j["dim"] = c.dim;
    j["basis"] = c.basis;
    j["comult"] = tensor1to2_to_json(c.comult);
    j["counit"] = vec_to_json(c.counit);
    for (auto it = meta.begin(); it != meta.end(); ++it) j[it.key()] = it.value();
    return j;
}

Coalgebra coalgebra_from_json(const nlohmann::json& j) {
    Coalgebra c;
    c.field = field_from_json(j.at("field"));
    c.dim = j.at("dim").get<std::size_t>();
    if (j.contains("basis")) c.basis = j.at("basis").get<std::vector<std::string>>();
    c.comult = tensor1to2_from_json(j.at("comult"), c.dim, c.dim, c.field);
    c.counit = vec_from_json(j.at("counit"), c.field);
    if (c.counit.size() != c.dim) throw std::invalid_argument("counit length mismatch");
    return c;
}

json yd_to_json(const YDModule& m) {
    json j;
    j["label"] = json{{"alpha", matrix_to_json(m.label.alpha)}, {"beta", matrix_to_json(m.label.beta)}};
    j["dim"] = m.dim;
    j["action"] = tensor2to1_to_json(m.action);
    j["coaction"] = tensor1to2_to_json(m.coaction);
    return j;
}

YDModule yd_from_json(const nlohmann::json& j, const FiniteDimHopfAlgebra& h) {
    YDModule m;
    m.algebra = &h;
    m.label = make_gpair(h, matrix_from_json(j.at("label").at("alpha"), h.field),
                         matrix_from_json(j.at("label").at("beta"), h.field));
    m.dim = j.at("dim").get<std::size_t>();
    m.action = tensor2to1_from_json(j.at("action"), m.dim, h.field);
    m.coaction = tensor1to2_from_json(j.at("coaction"), m.dim, h.dim, h.field);
    if (m.action.left() != h.dim) throw std::invalid_argument("YD action has wrong H dimension");
    return m;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const json& j) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << dump_json(j);
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot read " + path);
    return nlohmann::json::parse(is);
}

}  // namespace cthopf
