#ifndef CLIQUEPICK_IO_HPP
#define CLIQUEPICK_IO_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cliquepick/errors.hpp"
#include "cliquepick/graph.hpp"

namespace cliquepick {

// Graph file format (1-indexed, '#' starts a comment line, blank lines
// ignored):
//   n m_u m_d
//   m_u lines "u v"  (undirected u - v)
//   m_d lines "u v"  (directed u -> v)

namespace detail {

// Reads whitespace separated integers from a line; false if anything else
// is present or the count differs.
inline bool read_ints(std::string_view line, std::vector<long long>& out, std::size_t expected) {
    out.clear();
    std::istringstream in{std::string(line)};
    long long x;
    while (in >> x) out.push_back(x);
    if (!in.eof()) return false;
    return out.size() == expected;
}

inline bool skippable(const std::string& line) {
    auto p = line.find_first_not_of(" \t\r");
    return p == std::string::npos || line[p] == '#';
}

}  // namespace detail

namespace detail {

class LineReader {
  public:
    explicit LineReader(std::istream& in) {
        std::string line;
        while (std::getline(in, line)) lines_.push_back(std::move(line));
    }

    // Advances to the next meaningful line; false at end of input.
    bool next() {
        while (index_ < lines_.size()) {
            if (!skippable(lines_[index_++])) return true;
        }
        return false;
    }

    bool more() const {
        for (std::size_t i = index_; i < lines_.size(); ++i)
            if (!skippable(lines_[i])) return true;
        return false;
    }

    const std::string& line() const { return lines_[index_ - 1]; }
    int line_no() const { return static_cast<int>(index_); }

  private:
    std::vector<std::string> lines_;
    std::size_t index_ = 0;
};

inline PartialGraph parse_one(LineReader& reader) {
    std::vector<long long> nums;
    if (!reader.next() || !read_ints(reader.line(), nums, 3) || nums[0] < 0 || nums[1] < 0 || nums[2] < 0)
        throw ParseError(ParseErrorKind::MalformedHeader, reader.line_no());
    const long long n = nums[0], mu = nums[1], md = nums[2];
    if (n > (1 << 26)) throw ParseError(ParseErrorKind::MalformedHeader, reader.line_no());

    PartialGraph g(static_cast<int>(n));
    // unordered pair -> listed as undirected?
    std::unordered_map<std::uint64_t, bool> listed;
    for (long long i = 0; i < mu + md; ++i) {
        if (!reader.next()) throw ParseError(ParseErrorKind::MissingEdges, reader.line_no());
        const int line_no = reader.line_no();
        if (!read_ints(reader.line(), nums, 2)) throw ParseError(ParseErrorKind::MalformedEdge, line_no);
        const long long a = nums[0], b = nums[1];
        if (a < 1 || a > n || b < 1 || b > n) throw ParseError(ParseErrorKind::VertexOutOfRange, line_no);
        const Vertex u = static_cast<Vertex>(a - 1), v = static_cast<Vertex>(b - 1);
        if (u == v) throw ParseError(ParseErrorKind::SelfLoop, line_no);
        const bool undirected = i < mu;
        const std::uint64_t pair =
            static_cast<std::uint64_t>(std::min(u, v)) << 32 | static_cast<std::uint32_t>(std::max(u, v));
        auto [it, fresh] = listed.emplace(pair, undirected);
        if (!fresh) {
            throw ParseError(it->second == undirected ? ParseErrorKind::DuplicateEdge : ParseErrorKind::MixedEdge,
                             line_no);
        }
        if (undirected) g.add_undirected(u, v);
        else g.add_directed(u, v);
    }
    g.normalize();
    return g;
}

}  // namespace detail

/// Parses exactly one graph; content after the last announced edge (other
/// than comments and blank lines) is an error.
inline PartialGraph parse_graph(std::istream& in) {
    detail::LineReader reader(in);
    PartialGraph g = detail::parse_one(reader);
    if (reader.more()) {
        reader.next();
        throw ParseError(ParseErrorKind::TrailingContent, reader.line_no());
    }
    return g;
}

inline PartialGraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

/// Parses a sequence of graphs, e.g. the output of `sample`.
inline std::vector<PartialGraph> parse_graphs(std::istream& in) {
    detail::LineReader reader(in);
    std::vector<PartialGraph> out;
    while (reader.more()) out.push_back(detail::parse_one(reader));
    return out;
}

inline void write_graph(std::ostream& out, const PartialGraph& g) {
    out << g.n << ' ' << g.undirected_edge_count() << ' ' << g.directed_edge_count() << '\n';
    for (int u = 0; u < g.n; ++u)
        for (Vertex v : g.undirected[u])
            if (u < v) out << u + 1 << ' ' << v + 1 << '\n';
    for (int u = 0; u < g.n; ++u)
        for (Vertex v : g.directed_out[u]) out << u + 1 << ' ' << v + 1 << '\n';
}

inline std::string serialize(const PartialGraph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

inline std::string serialize(const Dag& d) { return serialize(to_partial(d)); }

/// All vertices of the universe plus the graph's edges, undirected.
inline PartialGraph to_partial(const UndirectedGraph& g) {
    PartialGraph p(g.universe);
    for (std::size_t u = 0; u < g.size(); ++u)
        for (Vertex w : g.adj[u])
            if (static_cast<Vertex>(u) < w) p.add_undirected(g.labels[u], g.labels[w]);
    p.normalize();
    return p;
}

}  // namespace cliquepick

#endif
