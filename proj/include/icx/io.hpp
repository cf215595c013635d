#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "icx/collapse.hpp"
#include "icx/complex.hpp"
#include "icx/graph.hpp"
#include "icx/homology.hpp"

namespace icx {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message), line(line_number) {}
};

// Edge-list format: first line "n m", then m lines "u v" with 0-indexed
// endpoints. Self-loops and out-of-range indices are rejected with the
// offending line number.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

// Complex format: "ground n" with ground set {0,...,n-1}, then either
// "missing k" or "facets k" followed by k lines of space-separated vertex
// indices (a line may be empty for the empty face), or the single keyword
// "void". Writing requires a contiguous ground set.
Complex read_complex(std::istream& in);
void write_complex(std::ostream& out, const Complex& x, bool as_facets = false);
Complex load_complex(const std::string& path);
void save_complex(const std::string& path, const Complex& x, bool as_facets = false);

// Betti vectors as {"-1": b, "0": b, ...} over the stored degree range.
nlohmann::json betti_to_json(const BettiVector& betti);

// Collapse witnesses as {"d": d, "steps": [{"free": [...], "carrier": [...]}]}.
nlohmann::json witness_to_json(const CollapseSequence& seq);
CollapseSequence witness_from_json(const nlohmann::json& j);

}  // namespace icx
