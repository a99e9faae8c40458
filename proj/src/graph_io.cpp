#include "minorlab/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace minorlab {

Graph read_graph_text(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("graph text: missing 'n m' header");
    if (n < 0 || m < 0) throw std::invalid_argument("graph text: negative counts");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("graph text: truncated edge list");
        g.add_edge(u, v);
    }
    return g;
}

void write_graph_text(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

namespace {

constexpr int kG6Base = 63;  // printable offset

int g6_decode_order(const std::string& s, size_t& pos) {
    if (pos >= s.size()) throw std::invalid_argument("graph6: empty string");
    int c = s[pos] - kG6Base;
    if (c < 0 || c > 63) throw std::invalid_argument("graph6: bad character");
    if (c < 63) {
        ++pos;
        return c;
    }
    // 126 escape: 3 or 6 more bytes; desk-scale graphs only need the 3-byte form
    if (pos + 3 >= s.size()) throw std::invalid_argument("graph6: truncated order");
    int n = 0;
    for (int i = 1; i <= 3; ++i) {
        int d = s[pos + i] - kG6Base;
        if (d < 0 || d > 63) throw std::invalid_argument("graph6: bad character");
        n = (n << 6) | d;
    }
    pos += 4;
    return n;
}

}  // namespace

Graph read_graph6(const std::string& line) {
    std::string s = line;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    size_t pos = 0;
    int n = g6_decode_order(s, pos);
    Graph g(n);
    int bit = 0;
    int cur = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bit == 0) {
                if (pos >= s.size()) throw std::invalid_argument("graph6: truncated bit stream");
                cur = s[pos++] - kG6Base;
                if (cur < 0 || cur > 63) throw std::invalid_argument("graph6: bad character");
                bit = 6;
            }
            --bit;
            if ((cur >> bit) & 1) g.add_edge(u, v);
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string s;
    if (n < 63) {
        s.push_back(static_cast<char>(n + kG6Base));
    } else {
        s.push_back(static_cast<char>(126));
        s.push_back(static_cast<char>(((n >> 12) & 63) + kG6Base));
        s.push_back(static_cast<char>(((n >> 6) & 63) + kG6Base));
        s.push_back(static_cast<char>((n & 63) + kG6Base));
    }
    int bit = 6;
    int cur = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            --bit;
            if (g.has_edge(u, v)) cur |= 1 << bit;
            if (bit == 0) {
                s.push_back(static_cast<char>(cur + kG6Base));
                bit = 6;
                cur = 0;
            }
        }
    }
    if (bit != 6) s.push_back(static_cast<char>(cur + kG6Base));
    return s;
}

Graph parse_graph(const std::string& content) {
    size_t i = 0;
    while (i < content.size() && std::isspace(static_cast<unsigned char>(content[i]))) ++i;
    if (i < content.size() && std::isdigit(static_cast<unsigned char>(content[i]))) {
        std::istringstream in(content);
        return read_graph_text(in);
    }
    // first line as graph6
    size_t end = content.find('\n', i);
    return read_graph6(content.substr(i, end == std::string::npos ? end : end - i));
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

}  // namespace

Graph resolve_pattern(const std::string& spec) {
    std::string s = spec;
    if (s.rfind("builtin:", 0) == 0) s = s.substr(8);
    auto colon = s.find(':');
    std::string head = colon == std::string::npos ? s : s.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : s.substr(colon + 1);
    try {
        if (head == "kpath") return path_with_edges(std::stoi(args));
        if (head == "cycle") return cycle_graph(std::stoi(args));
        if (head == "clique") return complete_graph(std::stoi(args));
        if (head == "star") return star_graph(std::stoi(args));
        if (head == "claw") {
            auto d = parse_int_list(args);
            if (d.size() != 3) throw std::invalid_argument("claw:a,b,c needs three branch lengths");
            return claw_subdivision(d[0], d[1], d[2]);
        }
        if (head == "biclique") {
            auto d = parse_int_list(args);
            if (d.size() != 2) throw std::invalid_argument("biclique:s,t needs two part sizes");
            return complete_bipartite(d[0], d[1]);
        }
        if (head.size() >= 2 && head[0] == 'c' && colon == std::string::npos &&
            std::isdigit(static_cast<unsigned char>(head[1]))) {
            return cycle_graph(std::stoi(head.substr(1)));
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad pattern spec: " + spec);
    }
    if (spec.rfind("builtin:", 0) == 0) throw std::invalid_argument("unknown builtin pattern: " + spec);
    return load_graph_file(spec);
}

}  // namespace minorlab
