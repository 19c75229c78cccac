#pragma once

#include <stdexcept>
#include <string>

namespace nuosc {

/// Invalid physical input (non-finite, out of range, bad enum value).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

/// A guarded denominator fell below its configured floor, so the requested
/// quantity is not numerically meaningful at this configuration.
class degenerate_error : public std::runtime_error {
public:
    explicit degenerate_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A bracketed search found no sign change over its search interval.
class not_found_error : public std::runtime_error {
public:
    explicit not_found_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal numerical consistency check failed (e.g. an imaginary residue
/// or a row sum drifted beyond its tolerance).
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Configuration text or CLI input could not be parsed or validated.
/// line is 1-based; 0 means no specific line applies.
class config_error : public std::runtime_error {
public:
    config_error(const std::string& msg, int line_no = 0)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg
                                         : msg),
          line(line_no) {}
    int line;
};

} // namespace nuosc
