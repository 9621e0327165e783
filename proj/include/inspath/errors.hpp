#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace inspath {

// Root of every exception thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    ParseError(std::size_t line, const std::string& what)
        : Error("parse error at line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

struct SchemaError : Error {
    SchemaError(std::string path_, const std::string& what)
        : Error("schema error at " + path_ + ": " + what), path(std::move(path_)) {}
    std::string path;
};

struct MissingEdgeError : Error {
    MissingEdgeError(int i_, int j_)
        : Error("no edge between nodes " + std::to_string(i_) + " and " + std::to_string(j_)),
          i(i_), j(j_) {}
    int i;
    int j;
};

struct InvalidRouteError : Error {
    explicit InvalidRouteError(const std::string& what) : Error("invalid route: " + what) {}
};

struct DisconnectedError : Error {
    explicit DisconnectedError(std::vector<std::vector<int>> components_)
        : Error("graph is disconnected (" + std::to_string(components_.size()) + " components)"),
          components(std::move(components_)) {}
    std::vector<std::vector<int>> components;
};

struct NotCompleteError : Error {
    NotCompleteError(int i_, int j_)
        : Error("cost matrix is not complete: missing entry (" + std::to_string(i_) + ", " +
                std::to_string(j_) + ")"),
          i(i_), j(j_) {}
    int i;
    int j;
};

struct DummyMissingError : Error {
    explicit DummyMissingError(int dummy_)
        : Error("tour does not contain dummy node " + std::to_string(dummy_)), dummy(dummy_) {}
    int dummy;
};

struct InconsistentViaError : Error {
    InconsistentViaError(int i_, int j_)
        : Error("predecessor table does not reconstruct a path from " + std::to_string(i_) +
                " to " + std::to_string(j_)),
          i(i_), j(j_) {}
    int i;
    int j;
};

struct TooLargeError : Error {
    TooLargeError(int n_, int limit_)
        : Error("instance has " + std::to_string(n_) + " nodes, solver limit is " +
                std::to_string(limit_)),
          n(n_), limit(limit_) {}
    int n;
    int limit;
};

struct BadStartError : Error {
    BadStartError(int start_, int n_)
        : Error("start node " + std::to_string(start_) + " out of range [0, " +
                std::to_string(n_) + ")"),
          start(start_), n(n_) {}
    int start;
    int n;
};

struct BaselineWorseError : Error {
    BaselineWorseError(double baseline_, double obtained_)
        : Error("baseline cost " + std::to_string(baseline_) +
                " exceeds obtained cost " + std::to_string(obtained_)),
          baseline(baseline_), obtained(obtained_) {}
    double baseline;
    double obtained;
};

struct BaselineUnavailableError : Error {
    explicit BaselineUnavailableError(const std::string& instance_name)
        : Error("no baseline cost available for instance '" + instance_name + "'") {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace inspath
