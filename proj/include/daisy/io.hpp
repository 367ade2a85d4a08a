#ifndef DAISY_IO_HPP
#define DAISY_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "daisy/classify.hpp"
#include "daisy/gplus.hpp"
#include "daisy/graph.hpp"

namespace daisy {

// Insertion order is preserved so every writer below is byte-deterministic.
using Json = nlohmann::ordered_json;

// Graph files, format tag "pcg-1". Either labels form
//   { "format": "pcg-1", "name": ..., "labels": ["000", ...], "base": ... }
// or edge form
//   { "format": "pcg-1", "name": ..., "vertices": n,
//     "edges": [[a, b], ...], "base": ... }
// "base" is optional: a vertex id, or in labels form also a label string.
struct NamedGraph {
    Graph graph;
    std::string name;
};

NamedGraph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g, const std::string& name);

NamedGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g, const std::string& name);

// Analysis reports, format tag "pcr-1".
Json report_to_json(const AnalysisReport& rep, const std::string& name);

Json gplus_trace_to_json(const GPlusTrace& trace, const GPlusVerification& ver,
                         const std::string& name);

// The one canonical serialization: 2-space indent plus trailing newline.
std::string canonical_dump(const Json& j);
void write_json_file(const std::string& path, const Json& j);

}  // namespace daisy

#endif
