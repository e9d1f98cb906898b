#include "gkm/io.hpp"
#include "gkm/error.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace gkm {

namespace {

Json coefficient_to_json(const BigInt& c) {
    if (auto v = c.to_int64()) return Json(*v);
    return Json(c.str());
}

BigInt coefficient_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_number_unsigned()) {
        unsigned long long u = j.get<unsigned long long>();
        if (u <= 0x7fffffffffffffffull) return BigInt(static_cast<long long>(u));
        return BigInt::from_string(std::to_string(u));
    }
    if (j.is_string()) return BigInt::from_string(j.get<std::string>());
    throw ParseError("integer coefficient expected as a JSON integer or decimal string, got " +
                     std::string(j.type_name()));
}

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
    return *it;
}

Flag flag_from_key(const std::string& key) {
    auto bar = key.find('|');
    if (bar == std::string::npos || bar == 0 || bar + 1 == key.size())
        throw ParseError("flag key must be \"vertexId|edgeId\": " + key);
    return {key.substr(0, bar), key.substr(bar + 1)};
}

void check_header(const Json& j, const std::string& expected_kind) {
    const Json& version = field(j, "schema_version");
    if (!version.is_number_integer() || version.get<int>() != kSchemaVersion)
        throw ParseError("unsupported schema_version");
    std::string kind = field(j, "kind").get<std::string>();
    if (kind != expected_kind)
        throw ParseError("expected a " + expected_kind + " document, got " + kind);
}

} // namespace

Json polynomial_to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["coefficient"] = coefficient_to_json(c);
        term["exponents"] = e;
        terms.push_back(std::move(term));
    }
    return terms;
}

Polynomial polynomial_from_json(uint32_t rank, const Json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be an array of terms");
    Polynomial p(rank);
    for (const auto& term : j) {
        BigInt c = coefficient_from_json(field(term, "coefficient"));
        const Json& ejson = field(term, "exponents");
        if (!ejson.is_array() || ejson.size() != rank)
            throw ParseError("term exponents must have length " + std::to_string(rank));
        Exponents e;
        for (const auto& x : ejson) {
            long long v = x.get<long long>();
            if (v < 0) throw ParseError("negative exponent in polynomial term");
            e.push_back(static_cast<uint32_t>(v));
        }
        p.add_term(e, c);
    }
    return p;
}

Json form_to_json(const LinearForm& f) {
    Json out = Json::array();
    for (const auto& c : f.coefficients()) out.push_back(coefficient_to_json(c));
    return out;
}

LinearForm form_from_json(uint32_t rank, const Json& j) {
    if (!j.is_array() || j.size() != rank)
        throw ParseError("label must be an integer vector of length " + std::to_string(rank));
    std::vector<BigInt> c;
    for (const auto& x : j) c.push_back(coefficient_from_json(x));
    return LinearForm::make(std::move(c));
}

namespace {

// shared by labeled-graph and projectivization payloads
void write_labeled_fields(Json& out, const LabeledGraph& lg) {
    out["rank"] = lg.rank;
    out["vertices"] = lg.graph.vertices();
    Json edges = Json::array();
    for (const auto& e : lg.graph.edges()) {
        Json edge;
        edge["id"] = e.id;
        edge["ends"] = e.ends;
        edges.push_back(std::move(edge));
    }
    out["edges"] = std::move(edges);
    Json labels = Json::object();
    for (const auto& [flag, form] : lg.labels.labels()) {
        labels[flag_key(flag)] = form_to_json(form);
    }
    out["labels"] = std::move(labels);
    Json conn = Json::object();
    for (const auto& [flag, map] : lg.connection.maps()) {
        Json entry = Json::object();
        for (const auto& [from, to] : map) entry[from] = to;
        conn[flag_key(flag)] = std::move(entry);
    }
    out["connection"] = std::move(conn);
}

LabeledGraph labeled_fields_from_json(const Json& j) {
    long long rank_ll = field(j, "rank").get<long long>();
    if (rank_ll < 0) throw ParseError("rank must be non-negative");
    uint32_t rank = static_cast<uint32_t>(rank_ll);

    std::vector<std::string> vertices = field(j, "vertices").get<std::vector<std::string>>();
    std::vector<Edge> edges;
    for (const auto& e : field(j, "edges")) {
        Edge edge;
        edge.id = field(e, "id").get<std::string>();
        edge.ends = field(e, "ends").get<std::vector<std::string>>();
        edges.push_back(std::move(edge));
    }
    Graph g = Graph::make(std::move(vertices), std::move(edges));

    LabelFunction labels(rank);
    for (const auto& [key, value] : field(j, "labels").items()) {
        labels.set(flag_from_key(key), form_from_json(rank, value));
    }

    Connection conn;
    auto cit = j.find("connection");
    bool has_compact = g.compact_edge_count() > 0;
    if (cit != j.end() && !cit->empty()) {
        for (const auto& [key, value] : cit->items()) {
            Connection::FlagMap map;
            for (const auto& [from, to] : value.items()) map[from] = to.get<std::string>();
            conn.set(flag_from_key(key), std::move(map));
        }
    } else if (has_compact) {
        if (!is_regular(g, 2))
            throw ParseError("\"connection\" is required unless the graph is 2-valent");
        conn = two_valent_connection(g);
    }
    return LabeledGraph{std::move(g), std::move(conn), std::move(labels), rank};
}

} // namespace

Json labeled_graph_to_json(const LabeledGraph& lg) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "labeled-graph";
    write_labeled_fields(out, lg);
    return out;
}

LabeledGraph labeled_graph_from_json(const Json& j) {
    check_header(j, "labeled-graph");
    return labeled_fields_from_json(j);
}

Json leg_bundle_to_json(const LegBundle& xi) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "leg-bundle";
    out["base"] = labeled_graph_to_json(xi.base);
    Json fibers = Json::object();
    for (const auto& p : xi.base.graph.vertices()) {
        Json fiber = Json::array();
        for (const auto& w : xi.fiber_labels(p)) fiber.push_back(form_to_json(w));
        fibers[p] = std::move(fiber);
    }
    out["fibers"] = std::move(fibers);
    Json transport = Json::object();
    for (const auto& [flag, perm] : xi.transport) {
        Json arr = Json::array();
        for (uint32_t v : perm) arr.push_back(v + 1); // 1-based in documents
        transport[flag_key(flag)] = std::move(arr);
    }
    out["transport"] = std::move(transport);
    return out;
}

LegBundle leg_bundle_from_json(const Json& j) {
    check_header(j, "leg-bundle");
    LabeledGraph base = labeled_graph_from_json(field(j, "base"));

    std::map<std::string, std::vector<LinearForm>> leg_labels;
    for (const auto& [vertex, fiber] : field(j, "fibers").items()) {
        if (!base.graph.has_vertex(vertex)) throw ParseError("fiber at unknown vertex " + vertex);
        std::vector<LinearForm> forms;
        for (const auto& w : fiber) forms.push_back(form_from_json(base.rank, w));
        leg_labels[vertex] = std::move(forms);
    }
    for (const auto& v : base.graph.vertices()) {
        if (!leg_labels.count(v)) leg_labels[v] = {};
    }

    auto tit = j.find("transport");
    if (tit == j.end()) {
        return build_leg_bundle(base, leg_labels, infer_transport(base, leg_labels));
    }
    Transport transport;
    for (const auto& [key, value] : tit->items()) {
        std::vector<uint32_t> perm;
        for (const auto& x : value) {
            long long v = x.get<long long>();
            if (v < 1) throw ParseError("transport indices are 1-based");
            perm.push_back(static_cast<uint32_t>(v - 1));
        }
        transport[flag_from_key(key)] = std::move(perm);
    }
    return build_leg_bundle(base, leg_labels, transport);
}

Json projectivization_to_json(const Projectivization& proj) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "projectivization";
    out["bundle_rank"] = proj.bundle_rank;
    out["gkm"] = is_gkm(proj.total).gkm;
    write_labeled_fields(out, proj.total);
    Json classification = Json::object();
    for (const auto& [e, c] : proj.classification)
        classification[e] = c == EdgeClass::vertical ? "vertical" : "horizontal";
    out["classification"] = std::move(classification);
    Json projection;
    Json pv = Json::object();
    for (const auto& [v, img] : proj.projection.vertex_map) pv[v] = img;
    projection["vertices"] = std::move(pv);
    Json pe = Json::object();
    for (const auto& [e, target] : proj.projection.edge_map) {
        Json t;
        t[target.is_vertex() ? "vertex" : "edge"] = target.id;
        pe[e] = std::move(t);
    }
    projection["edges"] = std::move(pe);
    out["projection"] = std::move(projection);
    return out;
}

Json class_to_json(const CohomologyClass& f) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "class";
    out["rank"] = f.rank;
    Json values = Json::object();
    for (const auto& [v, p] : f.values) values[v] = polynomial_to_json(p);
    out["values"] = std::move(values);
    return out;
}

std::pair<uint32_t, std::map<std::string, Polynomial>> class_values_from_json(const Json& j) {
    check_header(j, "class");
    uint32_t rank = static_cast<uint32_t>(field(j, "rank").get<long long>());
    std::map<std::string, Polynomial> values;
    for (const auto& [v, p] : field(j, "values").items()) {
        values.emplace(v, polynomial_from_json(rank, p));
    }
    return {rank, std::move(values)};
}

Json decomposition_to_json(uint32_t rank, const std::vector<CohomologyClass>& q) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "decomposition";
    out["rank"] = rank;
    Json list = Json::array();
    for (const auto& f : q) {
        Json entry = Json::object();
        Json values = Json::object();
        for (const auto& [v, p] : f.values) values[v] = polynomial_to_json(p);
        entry["values"] = std::move(values);
        list.push_back(std::move(entry));
    }
    out["Q"] = std::move(list);
    return out;
}

namespace {

std::vector<std::pair<uint32_t, std::map<std::string, Polynomial>>> class_list_from(const Json& j,
                                                                                    const char* key) {
    uint32_t rank = static_cast<uint32_t>(field(j, "rank").get<long long>());
    std::vector<std::pair<uint32_t, std::map<std::string, Polynomial>>> out;
    for (const auto& entry : field(j, key)) {
        std::map<std::string, Polynomial> values;
        for (const auto& [v, p] : field(entry, "values").items()) {
            values.emplace(v, polynomial_from_json(rank, p));
        }
        out.emplace_back(rank, std::move(values));
    }
    return out;
}

} // namespace

std::vector<std::pair<uint32_t, std::map<std::string, Polynomial>>> decomposition_values_from_json(
    const Json& j) {
    check_header(j, "decomposition");
    return class_list_from(j, "Q");
}

Json presentation_to_json(uint32_t rank, const PresentationElement& a) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "presentation";
    out["rank"] = rank;
    Json list = Json::array();
    for (const auto& f : a.kappa_coeffs) {
        Json entry = Json::object();
        Json values = Json::object();
        for (const auto& [v, p] : f.values) values[v] = polynomial_to_json(p);
        entry["values"] = std::move(values);
        list.push_back(std::move(entry));
    }
    out["kappa_coeffs"] = std::move(list);
    return out;
}

std::vector<std::pair<uint32_t, std::map<std::string, Polynomial>>> presentation_values_from_json(
    const Json& j) {
    check_header(j, "presentation");
    return class_list_from(j, "kappa_coeffs");
}

std::string document_kind(const Json& j) {
    auto it = j.find("kind");
    if (it == j.end() || !it->is_string()) throw ParseError("document has no \"kind\" field");
    return it->get<std::string>();
}

Json load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string dump_document(const Json& j) {
    return j.dump(2) + "\n";
}

void write_document(const Json& j, const std::string& out_path) {
    std::string text = dump_document(j);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write " + out_path);
    out << text;
}

} // namespace gkm
