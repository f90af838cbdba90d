#pragma once

#include <stdexcept>
#include <string>

#include "beansub/subordination.hpp"

namespace beansub::cli {

/// Malformed function file. what() carries "line L, column C" for syntax errors.
class FunctionFormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Reads a function file:
///   {"type": "polynomial" | "bean_composed" | "ratio", "coefficients": [c0, c1, ...]}
/// where each coefficient is a number or a [re, im] pair.
AnalyticFunction parse_function(const std::string& text);
AnalyticFunction load_function(const std::string& path);

}  // namespace beansub::cli
