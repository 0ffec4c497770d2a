#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsmale {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroScale : public Error {
public:
    ZeroScale() : Error("scale factor must be nonzero") {}
};

class DegenerateInput : public Error {
public:
    using Error::Error;
};

class NotInClass : public Error {
public:
    using Error::Error;
};

/// Root iteration ran out of budget; carries the best iterate seen.
class NonConvergence : public Error {
public:
    NonConvergence(std::string what, std::vector<std::complex<double>> best)
        : Error(std::move(what)), best_iterate(std::move(best)) {}

    std::vector<std::complex<double>> best_iterate;
};

/// Local descent hit its evaluation cap.
class RefineNonConvergence : public Error {
public:
    RefineNonConvergence(std::string what, std::vector<double> best, double value)
        : Error(std::move(what)), best_point(std::move(best)), best_value(value) {}

    std::vector<double> best_point;
    double best_value;
};

class BadIndex : public Error {
public:
    using Error::Error;
};

class ResidualYVariable : public Error {
public:
    using Error::Error;
};

class UnsupportedShape : public Error {
public:
    using Error::Error;
};

class InputParseError : public Error {
public:
    InputParseError(std::size_t line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_number(line) {}

    std::size_t line_number;
};

class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace dsmale
