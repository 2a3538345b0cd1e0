#include "colorlab/zoo.hpp"

#include <cctype>

namespace colorlab::zoo {

Graph edgeless(int n) { return Graph(n); }

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph(n, edges);
}

Graph cycle(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    edges.emplace_back(n - 1, 0);
    return Graph(n, edges);
}

Graph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u) {
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    }
    return Graph(a + b, edges);
}

Graph petersen() {
    // Outer 5-cycle 0..4, inner 5-cycle 5..9 with step 2, spokes i -- i+5.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return Graph(10, edges);
}

Graph grotzsch() {
    // Mycielskian of C_5: cycle 0..4, shadows 5..9, apex 10.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        edges.emplace_back(i, j);
        edges.emplace_back(5 + i, j);
        edges.emplace_back(5 + j, i);
        edges.emplace_back(5 + i, 10);
    }
    return Graph(11, edges);
}

std::optional<Graph> by_name(const std::string& name) {
    std::string lower;
    for (char c : name) lower.push_back(static_cast<char>(std::tolower(c)));
    if (lower == "petersen") return petersen();
    if (lower == "grotzsch") return grotzsch();
    auto parse_int = [](const std::string& s) -> std::optional<int> {
        if (s.empty()) return std::nullopt;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        }
        return std::stoi(s);
    };
    if (lower.size() >= 2) {
        char kind = lower[0];
        auto num = parse_int(lower.substr(1));
        if (num) {
            switch (kind) {
                case 'k': return complete(*num);
                case 'c': return cycle(*num);
                case 'p': return path(*num);
                case 'e': return edgeless(*num);
                case 's': return star(*num);
                default: break;
            }
        }
    }
    return std::nullopt;
}

} // namespace colorlab::zoo
