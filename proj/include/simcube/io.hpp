#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "simcube/bounds.hpp"
#include "simcube/planner.hpp"
#include "simcube/simplex.hpp"

namespace simcube {
namespace io {

using nlohmann::json;

// Embedding JSON schema:
//   {"dim": n, "edge_length": l, "edge_ratio": r, "vertices": [[...], ...]}
// nlohmann prints doubles with the shortest round-trip representation, so
// parse(dump(x)) restores every coordinate bit for bit.
json embedding_to_json(const SimplexEmbedding& s);
SimplexEmbedding embedding_from_json(const json& j);

// CSV: one vertex per row, 17 significant digits. A CSV file carries no
// metadata, so the claimed edge length is recovered as the mean pairwise
// distance of the parsed vertices.
std::string embedding_to_csv(const SimplexEmbedding& s);
SimplexEmbedding embedding_from_csv(std::istream& in);

/// Reads a file in either format (sniffs the leading '{' for JSON).
SimplexEmbedding load_embedding(const std::string& path);

json plan_to_json(const ConstructionPlan& p);

json report_to_json(const bounds::BoundReport& r);
std::string report_csv_header();
std::string report_to_csv_row(const bounds::BoundReport& r);

json sweep_row_to_json(const SweepRow& r);
std::string sweep_csv_header(); // n,edge_length,edge_ratio,best_lower,upper,strategy
std::string sweep_row_to_csv(const SweepRow& r);

json hadamard_to_json(const HadamardMatrix& h, const std::string& recipe);
std::string hadamard_to_text(const HadamardMatrix& h); // +/- character grid

/// %.17g — enough digits for an exact double round-trip.
std::string format_full(double v);

} // namespace io
} // namespace simcube
