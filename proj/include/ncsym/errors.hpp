#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncsym {

/// Base for failures that are mathematical rather than syntactic
/// (singular minors, dependent roots, failed forcing steps).
class math_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class division_by_zero : public math_error {
public:
    division_by_zero() : math_error("division by zero") {}
};

/// A quasideterminant (or anything built from one) that does not exist.
class undefined_error : public math_error {
public:
    using math_error::math_error;
};

/// An index, generator or degree outside the configured range.
class range_error : public math_error {
public:
    using math_error::math_error;
};

/// The relation span met the admissible-string span. Never expected to fire.
class inconsistency_error : public math_error {
public:
    using math_error::math_error;
};

class parse_error : public std::runtime_error {
public:
    parse_error(std::string message, std::size_t offset, std::vector<std::string> expected = {})
        : std::runtime_error(format(message, offset, expected)),
          offset_(offset),
          expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string format(const std::string& message, std::size_t offset,
                              const std::vector<std::string>& expected) {
        std::string s = "parse error at byte " + std::to_string(offset) + ": " + message;
        if (!expected.empty()) {
            s += " (expected one of:";
            for (const auto& e : expected) s += " " + e;
            s += ")";
        }
        return s;
    }

    std::size_t offset_;
    std::vector<std::string> expected_;
};

} // namespace ncsym
