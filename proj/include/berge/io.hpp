#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "berge/constructions.hpp"
#include "berge/detection.hpp"
#include "berge/hypergraph.hpp"
#include "berge/sdr.hpp"

namespace berge {

/// Text edge list, bit-exact: header "N r m", then one line per edge with
/// its vertices ascending, lines in canonical (lexicographic) order, LF
/// endings, no trailing whitespace.
std::string to_text(const Hypergraph& h);

/// Parses the text format. Vertex order inside an edge is not enforced on
/// input (edges are canonicalised), but counts must match the header and
/// duplicate edges are rejected. Throws std::invalid_argument on malformed
/// input.
Hypergraph hypergraph_from_text(const std::string& text);

/// {"n":N,"r":r,"edges":[[...],...]} with edges in canonical order.
nlohmann::ordered_json hypergraph_json(const Hypergraph& h);

/// Accepts the JSON mirror; unknown keys are ignored.
Hypergraph hypergraph_from_json(const nlohmann::json& j);

/// {"parts":[[...],...]}
nlohmann::ordered_json partite_json(const PartiteStructure& p);

/// {"core":[...],"assignment":[{"pair":[i,j],"edge":[...]},...]} — the
/// assigned edges are spelled out as vertex lists, resolved against h.
nlohmann::ordered_json witness_json(const Hypergraph& h,
                                    const BergeWitness& w);

/// {"indices":[...],"union_size":k}
nlohmann::ordered_json violator_json(const HallViolator& v);

/// Set family parsed from {"sets":[[...],...]} where elements are opaque
/// strings or integers. Elements are interned in first-appearance order
/// (row by row); labels maps each dense id back to the original JSON value.
struct LabeledSetFamily {
  SetFamily family;
  std::vector<nlohmann::json> labels;
};

LabeledSetFamily set_family_from_json(const nlohmann::json& j);

/// Reads either format, sniffing JSON by a leading '{'.
Hypergraph read_hypergraph_file(const std::string& path);

void write_hypergraph_file(const std::string& path, const Hypergraph& h,
                           bool as_json);

}  // namespace berge
