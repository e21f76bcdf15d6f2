#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace octmod {

/// Error raised while parsing a literal; `position` is the byte offset of the
/// offending character in the input (after whitespace stripping).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Operands have incompatible module shapes, chiralities, or dimensions.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A real-linear map failed the para-linearity test.  The witness records the
/// imaginary unit index p = e_{unit} and the flat domain basis index at which
/// the real part of the second associator is nonzero.
class NotParaLinearError : public std::domain_error {
public:
    NotParaLinearError(int unit, std::size_t basis)
        : std::domain_error("map is not para-linear: re A_{e" + std::to_string(unit) +
                            "}(basis " + std::to_string(basis) + ", f) != 0"),
          unit_(unit),
          basis_(basis) {}

    [[nodiscard]] int unit() const noexcept { return unit_; }
    [[nodiscard]] std::size_t basis_index() const noexcept { return basis_; }

private:
    int unit_;
    std::size_t basis_;
};

} // namespace octmod
