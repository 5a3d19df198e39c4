#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kforms/ktheory.hpp"
#include "kforms/matrix.hpp"
#include "kforms/parse.hpp"
#include "kforms/transgression.hpp"

namespace kforms {

// JSON document describing a connection, optionally with an odd form and
// metric/gauge data.  Field set is closed: unknown keys are rejected.
//
//   dimension  integer, 1..8
//   rank       integer, 1..8
//   entries    rank x rank matrix (array of arrays) of expression strings
//   alpha      optional expression string (odd form)
//   metric     optional rank x rank matrix of expression strings; the
//              hermitian metric is conj(g)^T * g for the given factor g
//   gauge      optional rank x rank matrix of expression strings; must have
//              constant nonzero determinant
//   sign       optional, +1 or -1; orientation of the term in a formal sum
struct Document {
    unsigned dimension = 0;
    unsigned rank = 0;
    std::vector<std::string> entries; // row-major, rank*rank
    std::optional<std::string> alpha;
    std::optional<std::vector<std::string>> metric;
    std::optional<std::vector<std::string>> gauge;
    int sign = 1;
};

// Parses document text; origin names the source in error messages.
Document parse_document(const std::string& text, const std::string& origin);

// Reads and parses a document file.
Document load_document(const std::string& path);

// Entry expressions on the base: a connection matrix.
Connection document_connection(const Document& doc);

// Entry expressions on the cylinder (t, dt allowed): a connection path.
ConnectionPath document_path(const Document& doc);

// Connection plus alpha (default 0): a K-theory triple.
Triple document_triple(const Document& doc);

// SignedTriple carrying the document's sign field.
SignedTriple document_signed_triple(const Document& doc);

// Metric from the metric field, or from entries when the document is used
// as a bare factor matrix (borel --metric file).
Metric document_metric(const Document& doc);

// Gauge from the gauge field.
Gauge document_gauge(const Document& doc);

// {"dimension": m, "form": "<expr>"}: a bare form file (primitive command).
Form load_form_file(const std::string& path);

} // namespace kforms
