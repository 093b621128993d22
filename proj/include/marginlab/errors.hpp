#ifndef MARGINLAB_ERRORS_HPP
#define MARGINLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace marginlab {

// Malformed input data (bad CSV row, unparseable JSON, ...).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input that violates a schema contract
// (wrong label kind, inconsistent dimension, dangling reference, ...).
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace marginlab

#endif
