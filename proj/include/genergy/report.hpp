#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "genergy/classification.hpp"
#include "genergy/spectral.hpp"
#include "genergy/verification.hpp"

namespace genergy {

/// Everything the energy command prints about one graph.
struct GraphReport {
    std::string label;   // input line as given
    std::string graph6;  // canonical
    int n = 0;
    int e = 0;
    Spectrum spectrum;
    std::optional<CoulsonEstimate> coulson;
    std::string coulson_error;  // set when the quadrature gave up
    CharPoly poly;
    BCoeffs b;
    bool bipartite = false;
    std::optional<ClassLabel> class_label;  // absent above 12 vertices
};

GraphReport analyze(const Graph& g, const std::string& label, const QuadratureSettings& quadrature = {});

nlohmann::json to_json(const GraphReport& r);
nlohmann::json to_json(const CheckResult& r);
/// Top `top` rows; all rows when top < 0.
nlohmann::json to_json(const RankReport& r, int top = -1);

std::string to_text(const GraphReport& r);
std::string to_text(const CheckResult& r);
std::string to_text(const RankReport& r, int top = -1);

std::string csv_header_graph();
std::string to_csv_row(const GraphReport& r);
std::string to_csv(const RankReport& r, int top = -1);
std::string to_csv(const std::vector<CheckResult>& results);

}  // namespace genergy
