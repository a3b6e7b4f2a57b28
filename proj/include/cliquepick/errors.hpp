#ifndef CLIQUEPICK_ERRORS_HPP
#define CLIQUEPICK_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliquepick {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
    MalformedHeader,
    MalformedEdge,
    VertexOutOfRange,
    SelfLoop,
    DuplicateEdge,
    MixedEdge,  // same pair listed as directed and undirected
    MissingEdges,
    TrailingContent,
};

inline const char* to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::MalformedHeader: return "malformed header";
        case ParseErrorKind::MalformedEdge: return "malformed edge line";
        case ParseErrorKind::VertexOutOfRange: return "vertex index out of range";
        case ParseErrorKind::SelfLoop: return "self-loop";
        case ParseErrorKind::DuplicateEdge: return "duplicate edge";
        case ParseErrorKind::MixedEdge: return "edge listed as both directed and undirected";
        case ParseErrorKind::MissingEdges: return "fewer edge lines than announced";
        case ParseErrorKind::TrailingContent: return "unexpected content after last edge";
    }
    return "parse error";
}

class ParseError : public Error {
  public:
    ParseError(ParseErrorKind kind, int line)
        : Error("line " + std::to_string(line) + ": " + to_string(kind)), kind_(kind), line_(line) {}

    ParseErrorKind kind() const { return kind_; }
    int line() const { return line_; }

  private:
    ParseErrorKind kind_;
    int line_;
};

// Carries the global labels of the offending component.
class NotChordal : public Error {
  public:
    explicit NotChordal(std::vector<int> component)
        : Error("not chordal (component of " + std::to_string(component.size()) + " vertices)"),
          component_(std::move(component)) {}

    const std::vector<int>& component() const { return component_; }

  private:
    std::vector<int> component_;
};

class NotConnected : public Error {
  public:
    NotConnected() : Error("graph is not connected") {}
};

class NotAClique : public Error {
  public:
    NotAClique() : Error("vertex set is not a clique of the graph") {}
};

class InvalidOrdering : public Error {
  public:
    InvalidOrdering() : Error("ordering is not a permutation of the graph's vertices") {}
};

enum class ChainErrorKind { NotNested, NotProperSubset };

class InvalidChain : public Error {
  public:
    explicit InvalidChain(ChainErrorKind kind)
        : Error(kind == ChainErrorKind::NotNested ? "chain is not strictly nested"
                                                  : "chain element is not a proper subset"),
          kind_(kind) {}

    ChainErrorKind kind() const { return kind_; }

  private:
    ChainErrorKind kind_;
};

// Input exceeds the size guard of an exhaustive routine.
class TooLarge : public Error {
  public:
    using Error::Error;
};

class KeyMissing : public Error {
  public:
    KeyMissing() : Error("no sampler entry for this vertex set") {}
};

class ModelMismatch : public Error {
  public:
    ModelMismatch() : Error("sampler model was not built for this graph") {}
};

class Timeout : public Error {
  public:
    Timeout() : Error("deadline exceeded") {}
};

}  // namespace cliquepick

#endif
