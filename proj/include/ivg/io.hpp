#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ivg/certificate.hpp"
#include "ivg/graph.hpp"
#include "ivg/ordering.hpp"
#include "ivg/recognize.hpp"

namespace ivg {

enum class Format { edgelist, dimacs };

Format parse_format(std::string_view name);

/// Edgelist: "n m" header, then m lines "u v"; '#' starts a comment.
/// DIMACS: "c" comment lines, one "p edge n m" line, then "e u v" lines.
/// Errors are ParseError with the line number.
Graph parse_graph(std::istream& in, Format format);
Graph read_graph_file(const std::string& path, Format format);

std::string write_graph(const Graph& g, Format format);

/// Whitespace- or comma-separated vertex ids.
VertexOrdering parse_ordering(std::string_view text);

using Json = nlohmann::ordered_json;

Json to_json(const VertexOrdering& sigma);
/// {"1": ["l", "r"], ...} with endpoints as "num/den".
Json to_json(const IntervalRepresentation& rep);
Json to_json(const CliquePath& cp);
Json to_json(const OrderingViolation& violation);
Json to_json(const RecognitionOutcome& outcome);

VertexOrdering ordering_from_json(const Json& j);
IntervalRepresentation representation_from_json(const Json& j);
CliquePath clique_path_from_json(const Json& j, Vertex n);

}  // namespace ivg
