#pragma once

#include <stdexcept>
#include <string>

namespace linkctr {

// bad parameter value or out-of-range id
class argument_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// malformed input file; carries the 1-based line number
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& path, std::size_t line, const std::string& what)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// incompatible option combination (e.g. mutual filter on an undirected stream)
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// inputs that violate a structural contract (e.g. branching tree not over this graph)
class structural_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace linkctr
