#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pathex/constructions.hpp"
#include "pathex/optimizer.hpp"
#include "pathex/oracle.hpp"

namespace pathex {

/// {"n": int, "entries": [[i, j, weight], ...]} listing the positive edges.
/// Rational weights are written as exact strings ("p/q").
nlohmann::json to_json(const EdgeMeasure<double>& mu);
nlohmann::json to_json(const EdgeMeasure<Rational>& mu);

template <class S>
EdgeMeasure<S> measure_from_json(const nlohmann::json& j);

nlohmann::json to_json(const KKTReport& report);
nlohmann::json to_json(const OptimizeResult& result);
nlohmann::json to_json(const OracleResult& result);
nlohmann::json to_json(const GapRow& row);

nlohmann::json pattern_to_json(const PatternSpec& pattern);
PatternSpec pattern_from_json(const nlohmann::json& j);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

std::string gap_report_csv(const std::vector<GapRow>& rows);

}  // namespace pathex
