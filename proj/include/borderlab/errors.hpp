#pragma once

#include <stdexcept>
#include <string>

namespace borderlab {

// Bad mathematical input: inadmissible Hilbert function, LM not minimal,
// coefficient keys outside the distinguished index set, and the like.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Monomials over different variable counts mixed in one operation.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed file contents; `pointer` is a JSON-pointer-style path to the
// offending element.
class SchemaError : public std::runtime_error {
public:
    SchemaError(const std::string& pointer, const std::string& what)
        : std::runtime_error(pointer.empty() ? what : what + " (at " + pointer + ")"),
          pointer_(pointer) {}
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

// Buchberger S-pair budget exhausted: the answer is "inconclusive", which is
// distinct from a negative result.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

// A supposedly-impossible state; indicates corrupted input data or a bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace borderlab
