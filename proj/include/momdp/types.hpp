#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace momdp {

/// A value vector in objective space; the library supports k in {1,2,3}.
using Point = std::vector<double>;

/// Nonnegative weights over the objectives, L1-normalized to 1 (within 1e-12).
struct WeightVector {
    std::vector<double> values;

    WeightVector() = default;
    explicit WeightVector(std::vector<double> v);

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }

    static WeightVector unit(std::size_t k, std::size_t axis);
    static WeightVector uniform(std::size_t k);
};

/// Region {q : w.q <= b}.
struct Halfspace {
    WeightVector w;
    double b = 0.0;
};

double dot(const Point& a, const Point& b);
double dot(const WeightVector& w, const Point& p);

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Syntax error in an input document; line/column are 1-based.
struct ParseError : Error {
    std::size_t line;
    std::size_t column;
    ParseError(std::size_t line_, std::size_t column_, const std::string& message);
};

/// Structural error in an input document, naming the offending field.
struct SchemaError : Error {
    std::string field;
    SchemaError(std::string field_, const std::string& message);
};

/// A name (proposition or reward structure) that does not resolve against the model.
struct ResolutionError : Error {
    using Error::Error;
};

/// Model invariant violations found while decoding a document.
struct ValidationError : Error {
    std::vector<std::string> violations;
    explicit ValidationError(std::vector<std::string> violations_);
};

/// Value iteration exceeded the 1e12 magnitude guard ("possibly infinite value").
struct DivergenceError : Error {
    using Error::Error;
};

/// Shortest decimal that round-trips through a 64-bit float ("0.1", "1", "0").
std::string format_double(double v);

/// Same, but always with a decimal point ("0.1", "1.0", "0.0").
std::string format_double_point(double v);

} // namespace momdp
