#ifndef MODEC_ERRORS_HPP
#define MODEC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modec {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class CyclicInputError : public Error {
public:
    explicit CyclicInputError(const std::string& what = "input graph contains a cycle")
        : Error(what) {}
};

class NotUndirectedError : public Error {
public:
    explicit NotUndirectedError(const std::string& what = "graph is not undirected")
        : Error(what) {}
};

class NotTransitiveError : public Error {
public:
    explicit NotTransitiveError(const std::string& what = "graph is not transitive")
        : Error(what) {}
};

class NotAModuleError : public Error {
public:
    explicit NotAModuleError(const std::string& what = "vertex set is not a module")
        : Error(what) {}
};

class NotCongruenceError : public Error {
public:
    explicit NotCongruenceError(const std::string& what = "partition block is not a module")
        : Error(what) {}
};

class OracleBoundError : public Error {
public:
    explicit OracleBoundError(const std::string& what = "graph exceeds the oracle vertex bound")
        : Error(what) {}
};

class NotTotalError : public Error {
public:
    explicit NotTotalError(const std::string& what = "orientation does not totalize the order")
        : Error(what) {}
};

class UnknownVertexError : public Error {
public:
    explicit UnknownVertexError(const std::string& what = "unknown vertex") : Error(what) {}
};

class EdgeNotInGraphError : public Error {
public:
    explicit EdgeNotInGraphError(const std::string& what = "edge not in graph") : Error(what) {}
};

/// Malformed edge-list input. `line` is 1-based; 0 means "not tied to a line".
class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + reason : reason),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

class SelfLoopError : public ParseError {
public:
    explicit SelfLoopError(int line, const std::string& label = "")
        : ParseError(line, label.empty() ? "self-loop rejected"
                                         : "self-loop on vertex '" + label + "' rejected") {}
};

}  // namespace modec

#endif
