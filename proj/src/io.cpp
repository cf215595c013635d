#include "icx/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace icx {

namespace {

// Reads the next non-empty line, tracking the line counter.
bool next_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos != std::string::npos) return true;
    }
    return false;
}

std::vector<long> parse_ints(const std::string& line, int line_no) {
    std::istringstream ss(line);
    std::vector<long> out;
    long v;
    while (ss >> v) out.push_back(v);
    if (!ss.eof()) {
        ss.clear();
        std::string rest;
        ss >> rest;
        if (!rest.empty()) throw ParseError(line_no, "expected integers, got '" + rest + "'");
    }
    return out;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_line(in, line, line_no)) throw ParseError(1, "missing header 'n m'");
    std::istringstream header(line);
    long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0) throw ParseError(line_no, "expected header 'n m'");
    if (n > kMaxVertices) throw ParseError(line_no, "at most 64 vertices supported");
    std::vector<std::pair<int, int>> edges;
    for (long e = 0; e < m; ++e) {
        if (!next_line(in, line, line_no)) throw ParseError(line_no + 1, "expected an edge line 'u v'");
        std::istringstream es(line);
        long u = -1, v = -1;
        if (!(es >> u >> v)) throw ParseError(line_no, "expected an edge line 'u v'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line_no, "edge endpoint out of range [0," + std::to_string(n - 1) + "]");
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    auto edges = g.edges();
    out << g.vertex_count() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << u << " " << v << "\n";
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_edge_list(in);
}

void save_graph(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    write_edge_list(out, g);
}

Complex read_complex(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_line(in, line, line_no)) throw ParseError(1, "missing header 'ground n'");
    std::istringstream header(line);
    std::string keyword;
    long n = -1;
    if (!(header >> keyword >> n) || keyword != "ground" || n < 0)
        throw ParseError(line_no, "expected header 'ground n'");
    if (n > kMaxVertices) throw ParseError(line_no, "at most 64 vertices supported");
    VertexSet ground = VertexSet::range(static_cast<int>(n));

    if (!next_line(in, line, line_no)) throw ParseError(line_no + 1, "expected 'missing k', 'facets k' or 'void'");
    std::istringstream mode_line(line);
    std::string mode;
    mode_line >> mode;
    if (mode == "void") return Complex::void_complex(ground);
    long k = -1;
    if (!(mode_line >> k) || k < 0 || (mode != "missing" && mode != "facets"))
        throw ParseError(line_no, "expected 'missing k', 'facets k' or 'void'");

    std::vector<VertexSet> faces;
    for (long i = 0; i < k; ++i) {
        // A face line may legitimately be blank (the empty face), so read raw.
        if (!std::getline(in, line)) throw ParseError(line_no + 1, "expected a face line");
        ++line_no;
        VertexSet face;
        for (long v : parse_ints(line, line_no)) {
            if (v < 0 || v >= n)
                throw ParseError(line_no, "vertex out of range [0," + std::to_string(n - 1) + "]");
            if (face.contains(static_cast<int>(v))) throw ParseError(line_no, "repeated vertex in face");
            face = face.with(static_cast<int>(v));
        }
        faces.push_back(face);
    }
    if (mode == "missing") {
        for (VertexSet f : faces)
            if (f.empty()) throw ParseError(line_no, "the empty set cannot be a missing face (use 'void')");
        return Complex::from_missing_faces(ground, std::move(faces));
    }
    return Complex::from_facets(ground, std::move(faces));
}

void write_complex(std::ostream& out, const Complex& x, bool as_facets) {
    VertexSet ground = x.ground_set();
    const int n = ground.size();
    if (!(ground == VertexSet::range(n)))
        throw std::invalid_argument("write_complex: ground set must be {0,...,n-1}; relabel first");
    out << "ground " << n << "\n";
    if (x.is_void()) {
        out << "void\n";
        return;
    }
    const std::vector<VertexSet>& faces = as_facets ? x.facets() : x.missing_faces();
    out << (as_facets ? "facets " : "missing ") << faces.size() << "\n";
    for (VertexSet f : faces) {
        bool first = true;
        for (int v : f) {
            if (!first) out << " ";
            out << v;
            first = false;
        }
        out << "\n";
    }
}

Complex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open complex file: " + path);
    return read_complex(in);
}

void save_complex(const std::string& path, const Complex& x, bool as_facets) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write complex file: " + path);
    write_complex(out, x, as_facets);
}

nlohmann::json betti_to_json(const BettiVector& betti) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [degree, value] : betti.entries()) j[std::to_string(degree)] = value;
    return j;
}

nlohmann::json witness_to_json(const CollapseSequence& seq) {
    nlohmann::json steps = nlohmann::json::array();
    for (const CollapseStep& s : seq.steps)
        steps.push_back({{"free", s.free_face.to_vector()}, {"carrier", s.carrier.to_vector()}});
    return {{"d", seq.d}, {"steps", steps}};
}

CollapseSequence witness_from_json(const nlohmann::json& j) {
    CollapseSequence seq;
    seq.d = j.at("d").get<int>();
    for (const auto& step : j.at("steps")) {
        VertexSet free_face, carrier;
        for (int v : step.at("free").get<std::vector<int>>()) free_face = free_face.with(v);
        for (int v : step.at("carrier").get<std::vector<int>>()) carrier = carrier.with(v);
        seq.steps.push_back({free_face, carrier});
    }
    return seq;
}

}  // namespace icx
