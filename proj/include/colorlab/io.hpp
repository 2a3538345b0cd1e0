#ifndef COLORLAB_IO_HPP
#define COLORLAB_IO_HPP

#include <iosfwd>
#include <string>

#include "colorlab/graph.hpp"
#include "colorlab/oracles.hpp"
#include "colorlab/peel.hpp"

namespace colorlab {

// Line-oriented edge list:
//   # comment
//   vertex <label>          declares an isolated vertex
//   <label> <label>         an edge
// Labels are arbitrary whitespace-free strings, mapped to dense ids in order
// of first appearance; the mapping is retained. Duplicate edges and
// self-loops are rejected.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;  // labels[v] is the file label of vertex v

    int id_of(const std::string& label) const;  // throws IoError if unknown
};

LabeledGraph load_edge_list(std::istream& in);
LabeledGraph load_edge_list_file(const std::string& path);
void save_edge_list(std::ostream& out, const Graph& g,
                    const std::vector<std::string>* labels = nullptr);
void save_edge_list_file(const std::string& path, const Graph& g,
                         const std::vector<std::string>* labels = nullptr);

// Structured JSON carrying graph + order + (d, f); round-trips byte-exactly.
std::string ordered_graph_to_json(const OrderedGraph& og,
                                  const std::vector<std::string>* labels = nullptr);
struct LoadedOrderedGraph {
    OrderedGraph ordered;
    std::vector<std::string> labels;
};
LoadedOrderedGraph ordered_graph_from_json(const std::string& text);

// Coloring as "vertex,color" CSV with a header line.
std::string coloring_to_csv(const Coloring& coloring,
                            const std::vector<std::string>* labels = nullptr);
Coloring coloring_from_csv(const std::string& text, const LabeledGraph& g);

// Weight certificates as plain text: a bound line, then one "w <label>
// <num/den>" line per vertex. Emission is canonical, so emit + parse is
// byte-exact.
std::string certificate_to_text(const WeightCertificate& cert,
                                const std::vector<std::string>* labels = nullptr);
WeightCertificate certificate_from_text(const std::string& text, const LabeledGraph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace colorlab

#endif
