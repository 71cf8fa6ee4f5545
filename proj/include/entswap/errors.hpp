#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace entswap {

// Linear algebra preconditions.
struct NotHermitian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotPsd : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadQubitSet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// State construction.
struct BadIndex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadWeights : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// POVM construction and validation.
enum class PovmDefect { NotHermitian, NotPsd, NotComplete };

class PovmValidationError : public std::runtime_error {
public:
    PovmValidationError(PovmDefect defect, std::size_t element, const std::string& what)
        : std::runtime_error(what), defect_(defect), element_(element) {}

    PovmDefect defect() const { return defect_; }
    // Index of the offending element; for NotComplete this is the element count.
    std::size_t element() const { return element_; }

private:
    PovmDefect defect_;
    std::size_t element_;
};

struct NotOrthonormal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadLambda : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Swap engine.
struct ZeroProbability : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidPovm : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Information measure.
struct NotBellDiagonal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EmptyInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadSchmidt : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// CLI.
struct BadRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace entswap
