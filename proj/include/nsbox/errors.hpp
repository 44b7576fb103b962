#pragma once

#include <stdexcept>
#include <string>

namespace nsbox {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WeightError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct ShapeError : Error {
    using Error::Error;
};

struct EmptyListError : Error {
    using Error::Error;
};

struct GridError : Error {
    using Error::Error;
};

struct UnknownNameError : Error {
    using Error::Error;
};

struct DegenerateAngleError : Error {
    using Error::Error;
};

// Behavior JSON file with a wrong/unknown schema or malformed payload.
struct SchemaError : Error {
    using Error::Error;
};

// Requested behavior lies outside the 9-vertex simplex.
struct NotInSimplexError : Error {
    NotInSimplexError(const std::string& msg, double residual_, double min_weight_)
        : Error(msg), residual(residual_), min_weight(min_weight_) {}
    double residual;
    double min_weight;
};

}  // namespace nsbox
