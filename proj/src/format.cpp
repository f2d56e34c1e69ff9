#include "stablegraphs/format.hpp"

#include <sstream>

#include <json.hpp>

namespace stablegraphs {

namespace {

std::string encode_text(const StableGraphMatrix& m) {
    std::ostringstream out;
    auto row = [&](auto value_at) {
        for (int j = 0; j < m.K; ++j) {
            if (j) out << ' ';
            out << value_at(j);
        }
        out << '\n';
    };
    row([&](int j) { return m.g[j]; });
    row([&](int j) { return m.n[j]; });
    row([&](int j) { return m.l[j]; });
    for (int i = 0; i < m.K; ++i)
        row([&](int j) { return m.at(i, j); });
    return out.str();
}

std::string encode_json(const StableGraphMatrix& m) {
    nlohmann::ordered_json j;
    j["genera"] = m.g;
    j["marks"] = m.n;
    j["loops"] = m.l;
    std::vector<std::vector<int>> adj(m.K, std::vector<int>(m.K));
    for (int i = 0; i < m.K; ++i)
        for (int k = 0; k < m.K; ++k) adj[i][k] = m.at(i, k);
    j["adjacency"] = adj;
    return j.dump();
}

std::string encode_dot(const StableGraphMatrix& m) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < m.K; ++v)
        out << "  v" << v << " [label=\"g=" << m.g[v] << ",n=" << m.n[v] << "\"];\n";
    for (int i = 0; i < m.K; ++i)
        for (int t = 0; t < m.l[i]; ++t) out << "  v" << i << " -- v" << i << ";\n";
    for (int i = 0; i < m.K; ++i)
        for (int j = i + 1; j < m.K; ++j)
            for (int t = 0; t < m.at(i, j); ++t) out << "  v" << i << " -- v" << j << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace

std::string encode_graph(const StableGraphMatrix& m, GraphFormat format) {
    switch (format) {
        case GraphFormat::text:
            return encode_text(m);
        case GraphFormat::json:
            return encode_json(m);
        case GraphFormat::dot:
            return encode_dot(m);
    }
    throw std::invalid_argument("unknown format");
}

StableGraphMatrix decode_graph_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<int> g = j.at("genera").get<std::vector<int>>();
    std::vector<int> n = j.at("marks").get<std::vector<int>>();
    std::vector<int> l = j.at("loops").get<std::vector<int>>();
    auto adj = j.at("adjacency").get<std::vector<std::vector<int>>>();
    const size_t K = g.size();
    if (n.size() != K || l.size() != K || adj.size() != K)
        throw std::invalid_argument("inconsistent field lengths");
    StableGraphMatrix m(static_cast<int>(K));
    m.g = std::move(g);
    m.n = std::move(n);
    m.l = std::move(l);
    for (size_t i = 0; i < K; ++i) {
        if (adj[i].size() != K) throw std::invalid_argument("adjacency is not square");
        for (size_t k = 0; k < K; ++k) m.entry(static_cast<int>(i), static_cast<int>(k)) = adj[i][k];
    }
    if (!m.structurally_valid())
        throw std::invalid_argument("adjacency must be symmetric with the loop diagonal");
    return m;
}

}  // namespace stablegraphs
