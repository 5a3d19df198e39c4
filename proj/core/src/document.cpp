#include "kforms/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace kforms {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& msg) {
    throw UsageError(origin + ": " + msg);
}

unsigned get_small_int(const json& j, const std::string& origin, const char* key,
                       unsigned lo, unsigned hi) {
    if (!j.at(key).is_number_unsigned())
        fail(origin, std::string(key) + " must be a positive integer");
    unsigned long long v = j.at(key).get<unsigned long long>();
    if (v < lo || v > hi)
        fail(origin, std::string(key) + " must be between " + std::to_string(lo) +
                         " and " + std::to_string(hi));
    return unsigned(v);
}

std::vector<std::string> get_matrix(const json& j, const std::string& origin,
                                    const char* key, unsigned rank) {
    const json& m = j.at(key);
    if (!m.is_array() || m.size() != rank)
        fail(origin, std::string(key) + " must be a " + std::to_string(rank) + "x" +
                         std::to_string(rank) + " matrix of strings");
    std::vector<std::string> out;
    out.reserve(std::size_t(rank) * rank);
    for (const json& row : m) {
        if (!row.is_array() || row.size() != rank)
            fail(origin, std::string(key) + " must be a " + std::to_string(rank) + "x" +
                             std::to_string(rank) + " matrix of strings");
        for (const json& cell : row) {
            if (!cell.is_string())
                fail(origin, std::string(key) + " entries must be expression strings");
            out.push_back(cell.get<std::string>());
        }
    }
    return out;
}

FormMatrix matrix_of(const std::vector<std::string>& entries, unsigned rank,
                     unsigned dim, bool cylinder) {
    FormMatrix m(rank, rank, dim, cylinder);
    for (unsigned r = 0; r < rank; ++r)
        for (unsigned c = 0; c < rank; ++c) {
            const std::string& src = entries[std::size_t(r) * rank + c];
            m.at(r, c) = cylinder ? parse_form_cylinder(src, dim) : parse_form(src, dim);
        }
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

Document parse_document(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(origin, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        fail(origin, "document must be a JSON object");

    static const std::set<std::string> known = {"dimension", "rank",  "entries",
                                                "alpha",     "metric", "gauge",
                                                "sign"};
    for (const auto& item : j.items())
        if (!known.count(item.key()))
            fail(origin, "unknown field \"" + item.key() + "\"");
    for (const char* req : {"dimension", "rank", "entries"})
        if (!j.contains(req))
            fail(origin, std::string("missing field \"") + req + "\"");

    Document doc;
    doc.dimension = get_small_int(j, origin, "dimension", 1, 8);
    doc.rank = get_small_int(j, origin, "rank", 1, 8);
    doc.entries = get_matrix(j, origin, "entries", doc.rank);

    if (j.contains("alpha")) {
        if (!j.at("alpha").is_string())
            fail(origin, "alpha must be an expression string");
        doc.alpha = j.at("alpha").get<std::string>();
    }
    if (j.contains("metric"))
        doc.metric = get_matrix(j, origin, "metric", doc.rank);
    if (j.contains("gauge"))
        doc.gauge = get_matrix(j, origin, "gauge", doc.rank);
    if (j.contains("sign")) {
        if (!j.at("sign").is_number_integer())
            fail(origin, "sign must be +1 or -1");
        long long s = j.at("sign").get<long long>();
        if (s != 1 && s != -1)
            fail(origin, "sign must be +1 or -1");
        doc.sign = int(s);
    }
    return doc;
}

Document load_document(const std::string& path) {
    return parse_document(read_file(path), path);
}

Connection document_connection(const Document& doc) {
    return Connection(matrix_of(doc.entries, doc.rank, doc.dimension, false));
}

ConnectionPath document_path(const Document& doc) {
    return ConnectionPath(matrix_of(doc.entries, doc.rank, doc.dimension, true));
}

Triple document_triple(const Document& doc) {
    Form alpha = doc.alpha ? parse_form(*doc.alpha, doc.dimension)
                           : Form::zero(doc.dimension);
    return Triple(document_connection(doc), alpha);
}

SignedTriple document_signed_triple(const Document& doc) {
    return SignedTriple{doc.sign, document_triple(doc)};
}

Metric document_metric(const Document& doc) {
    const std::vector<std::string>& src = doc.metric ? *doc.metric : doc.entries;
    return Metric(matrix_of(src, doc.rank, doc.dimension, false));
}

Gauge document_gauge(const Document& doc) {
    if (!doc.gauge)
        throw UsageError("document has no gauge field");
    return Gauge(matrix_of(*doc.gauge, doc.rank, doc.dimension, false));
}

Form load_form_file(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        fail(path, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        fail(path, "form file must be a JSON object");
    for (const auto& item : j.items())
        if (item.key() != "dimension" && item.key() != "form")
            fail(path, "unknown field \"" + item.key() + "\"");
    for (const char* req : {"dimension", "form"})
        if (!j.contains(req))
            fail(path, std::string("missing field \"") + req + "\"");
    unsigned dim = get_small_int(j, path, "dimension", 1, 8);
    if (!j.at("form").is_string())
        fail(path, "form must be an expression string");
    return parse_form(j.at("form").get<std::string>(), dim);
}

} // namespace kforms
