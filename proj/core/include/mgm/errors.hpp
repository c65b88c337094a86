#pragma once

#include <stdexcept>
#include <string>

namespace mgm {

// Thrown when an input file cannot be turned into a valid multigraph.
struct load_error : std::runtime_error {
    explicit load_error(const std::string & what) : std::runtime_error("load: " + what) {}
};

// Thrown by the query parser; carries a 1-based position into the query text.
struct parse_error : std::runtime_error {
    int line;
    int column;
    parse_error(const std::string & what, int line_, int column_) :
        std::runtime_error("parse: " + what + " (line " + std::to_string(line_) +
                           ", column " + std::to_string(column_) + ")"),
        line(line_), column(column_) {}
};

// Thrown while evaluating WHERE / RETURN expressions (e.g. ordering values of
// different kinds).
struct eval_error : std::runtime_error {
    explicit eval_error(const std::string & what) : std::runtime_error("eval: " + what) {}
};

// Bad engine configuration (unknown ordering kind, query above the node cap, ...).
struct config_error : std::runtime_error {
    explicit config_error(const std::string & what) : std::runtime_error("config: " + what) {}
};

}
