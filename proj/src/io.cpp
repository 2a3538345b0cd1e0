#include "colorlab/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace colorlab {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string default_label(int v) { return std::to_string(v); }

std::vector<std::string> labels_or_default(int n, const std::vector<std::string>* labels) {
    if (labels) {
        if (static_cast<int>(labels->size()) != n) throw IoError("label count mismatch");
        return *labels;
    }
    std::vector<std::string> result;
    result.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) result.push_back(default_label(v));
    return result;
}

} // namespace

int LabeledGraph::id_of(const std::string& label) const {
    for (std::size_t v = 0; v < labels.size(); ++v) {
        if (labels[v] == label) return static_cast<int>(v);
    }
    throw IoError("unknown vertex label '" + label + "'");
}

LabeledGraph load_edge_list(std::istream& in) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    std::unordered_map<std::string, int> id_of;
    auto intern = [&](const std::string& label) {
        auto [it, inserted] = id_of.try_emplace(label, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string first, second, extra;
        if (!(fields >> first)) continue;  // blank
        if (first == "vertex") {
            if (!(fields >> second)) throw IoError("line " + std::to_string(line_no) +
                                                   ": 'vertex' needs a label");
            intern(second);
        } else {
            if (!(fields >> second)) {
                throw IoError("line " + std::to_string(line_no) + ": edge needs two labels");
            }
            if (first == second) {
                throw IoError("line " + std::to_string(line_no) + ": self-loop at '" + first + "'");
            }
            int u = intern(first);
            int v = intern(second);
            edges.emplace_back(u, v);
        }
        if (fields >> extra) {
            throw IoError("line " + std::to_string(line_no) + ": trailing content '" + extra + "'");
        }
    }
    LabeledGraph result;
    try {
        result.graph = Graph(static_cast<int>(labels.size()), edges);
    } catch (const GraphError& e) {
        throw IoError(std::string("bad edge list: ") + e.what());
    }
    result.labels = std::move(labels);
    return result;
}

LabeledGraph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return load_edge_list(in);
}

void save_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>* labels) {
    std::vector<std::string> names = labels_or_default(g.vertex_count(), labels);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) out << "vertex " << names[v] << "\n";
    }
    for (auto [u, v] : g.edges()) out << names[u] << " " << names[v] << "\n";
}

void save_edge_list_file(const std::string& path, const Graph& g,
                         const std::vector<std::string>* labels) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    save_edge_list(out, g, labels);
}

std::string ordered_graph_to_json(const OrderedGraph& og, const std::vector<std::string>* labels) {
    ordered_json j;
    j["kind"] = "ordered_graph";
    j["n"] = og.vertex_count();
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : og.graph().edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    j["order"] = og.order();
    j["d"] = og.d();
    if (og.f()) {
        j["f"] = *og.f();
    } else {
        j["f"] = nullptr;
    }
    j["labels"] = labels_or_default(og.vertex_count(), labels);
    return j.dump(2) + "\n";
}

LoadedOrderedGraph ordered_graph_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw IoError(std::string("ordered graph parse error: ") + e.what());
    }
    if (j.value("kind", "") != "ordered_graph") throw IoError("not an ordered_graph file");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::vector<int> order = j.at("order").get<std::vector<int>>();
    double d = j.at("d").get<double>();
    std::optional<double> f;
    if (!j.at("f").is_null()) f = j.at("f").get<double>();
    LoadedOrderedGraph result{OrderedGraph(Graph(n, edges), std::move(order), d, f),
                              j.value("labels", std::vector<std::string>{})};
    if (result.labels.empty()) result.labels = labels_or_default(n, nullptr);
    return result;
}

std::string coloring_to_csv(const Coloring& coloring, const std::vector<std::string>* labels) {
    std::vector<std::string> names =
        labels_or_default(static_cast<int>(coloring.color.size()), labels);
    std::ostringstream out;
    out << "vertex,color\n";
    for (std::size_t v = 0; v < coloring.color.size(); ++v) {
        out << names[v] << "," << coloring.color[v] << "\n";
    }
    return out.str();
}

Coloring coloring_from_csv(const std::string& text, const LabeledGraph& g) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "vertex,color") {
        throw IoError("coloring csv: missing 'vertex,color' header");
    }
    Coloring coloring;
    coloring.color.assign(static_cast<std::size_t>(g.graph.vertex_count()), -1);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw IoError("coloring csv: bad line '" + line + "'");
        int v = g.id_of(line.substr(0, comma));
        coloring.color[v] = std::stoi(line.substr(comma + 1));
        coloring.num_colors = std::max(coloring.num_colors, coloring.color[v] + 1);
    }
    for (std::size_t v = 0; v < coloring.color.size(); ++v) {
        if (coloring.color[v] < 0) throw IoError("coloring csv: vertex " + g.labels[v] +
                                                 " is uncolored");
    }
    return coloring;
}

std::string certificate_to_text(const WeightCertificate& cert,
                                const std::vector<std::string>* labels) {
    std::vector<std::string> names =
        labels_or_default(static_cast<int>(cert.weights.size()), labels);
    std::ostringstream out;
    out << "# colorlab weight certificate\n";
    out << "bound " << rat_to_string(cert.bound) << "\n";
    for (std::size_t v = 0; v < cert.weights.size(); ++v) {
        out << "w " << names[v] << " " << rat_to_string(cert.weights[v]) << "\n";
    }
    return out.str();
}

WeightCertificate certificate_from_text(const std::string& text, const LabeledGraph& g) {
    std::istringstream in(text);
    WeightCertificate cert;
    cert.weights.assign(static_cast<std::size_t>(g.graph.vertex_count()), Rational(-1));
    bool have_bound = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string keyword;
        if (!(fields >> keyword)) continue;
        if (keyword == "bound") {
            std::string value;
            if (!(fields >> value)) throw IoError("certificate: bound needs a value");
            cert.bound = rat_from_string(value);
            have_bound = true;
        } else if (keyword == "w") {
            std::string label, value;
            if (!(fields >> label >> value)) {
                throw IoError("certificate line " + std::to_string(line_no) + ": expected "
                              "'w <label> <weight>'");
            }
            cert.weights[g.id_of(label)] = rat_from_string(value);
        } else {
            throw IoError("certificate line " + std::to_string(line_no) + ": unknown keyword '" +
                          keyword + "'");
        }
    }
    if (!have_bound) throw IoError("certificate: missing bound line");
    for (std::size_t v = 0; v < cert.weights.size(); ++v) {
        if (cert.weights[v] < 0) {
            throw IoError("certificate: vertex " + g.labels[v] + " has no weight");
        }
    }
    return cert;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << content;
}

} // namespace colorlab
