#include "beansub_cli/function_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace beansub::cli {

namespace {

using nlohmann::json;

std::string position_of(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Complex coefficient(const json& c, std::size_t index) {
    if (c.is_number()) {
        return {c.get<double>(), 0.0};
    }
    if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number()) {
        return {c[0].get<double>(), c[1].get<double>()};
    }
    throw FunctionFormatError("coefficient " + std::to_string(index) + " must be a number or [re, im]");
}

}  // namespace

AnalyticFunction parse_function(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FunctionFormatError("function file: syntax error at " + position_of(text, e.byte));
    }
    if (!doc.is_object()) {
        throw FunctionFormatError("function file: top level must be an object");
    }
    if (!doc.contains("type") || !doc["type"].is_string()) {
        throw FunctionFormatError("function file: missing string field \"type\"");
    }
    if (!doc.contains("coefficients") || !doc["coefficients"].is_array()) {
        throw FunctionFormatError("function file: missing array field \"coefficients\"");
    }

    std::vector<Complex> coeffs;
    const auto& raw = doc["coefficients"];
    for (std::size_t i = 0; i < raw.size(); ++i) {
        coeffs.push_back(coefficient(raw[i], i));
    }

    const std::string type = doc["type"];
    if (type == "polynomial") {
        return AnalyticFunction::polynomial(std::move(coeffs));
    }
    if (type == "bean_composed") {
        return AnalyticFunction::bean_composed(std::move(coeffs));
    }
    if (type == "ratio") {
        return AnalyticFunction::ratio(NormalizedFunction(std::move(coeffs)));
    }
    throw FunctionFormatError("function file: unknown type \"" + type + "\"");
}

AnalyticFunction load_function(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FunctionFormatError("cannot open function file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_function(buffer.str());
}

}  // namespace beansub::cli
