#include "momdp/types.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace momdp {

WeightVector::WeightVector(std::vector<double> v) : values(std::move(v)) {
    if (values.empty())
        throw std::invalid_argument("weight vector must not be empty");
    double sum = 0.0;
    for (double x : values) {
        if (!std::isfinite(x) || x < 0.0)
            throw std::invalid_argument("weight vector entries must be finite and nonnegative");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("weight vector must sum to 1 within 1e-12");
}

WeightVector WeightVector::unit(std::size_t k, std::size_t axis) {
    std::vector<double> v(k, 0.0);
    v.at(axis) = 1.0;
    return WeightVector(std::move(v));
}

WeightVector WeightVector::uniform(std::size_t k) {
    std::vector<double> v(k, 1.0 / static_cast<double>(k));
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < k; ++i) sum += v[i];
    v[k - 1] = 1.0 - sum; // make the sum exact
    return WeightVector(std::move(v));
}

double dot(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double dot(const WeightVector& w, const Point& p) { return dot(w.values, p); }

ParseError::ParseError(std::size_t line_, std::size_t column_, const std::string& message)
    : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + message),
      line(line_),
      column(column_) {}

SchemaError::SchemaError(std::string field_, const std::string& message)
    : Error("field \"" + field_ + "\": " + message), field(std::move(field_)) {}

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
    std::string out = "model validation failed:";
    for (const auto& v : violations) {
        out += "\n  - ";
        out += v;
    }
    return out;
}

} // namespace

ValidationError::ValidationError(std::vector<std::string> violations_)
    : Error(join_violations(violations_)), violations(std::move(violations_)) {}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_double_point(double v) {
    std::string s = format_double(v);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

} // namespace momdp
