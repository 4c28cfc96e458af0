#pragma once

#include <ostream>
#include <span>
#include <string>

#include "omega/constant_value.hpp"
#include "omega/counting.hpp"
#include "omega/moments.hpp"

namespace omega {

enum class OutputFormat { csv, json };

/// "csv" or "json"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& text);

/// Shortest text that reads back to the same double.
std::string format_double(double v);

inline constexpr const char* kCountCsvHeader = "x,h,excluded,exact,predicted,residual,normalized_residual";
inline constexpr const char* kMomentCsvHeader =
    "x,h,population,statistic,power,exact,predicted,residual,normalized_residual";
inline constexpr const char* kConstantCsvHeader = "name,h,value,truncation_prime,tail_bound";
inline constexpr const char* kVarianceCsvHeader =
    "x,h,exact,predicted,residual,normalized_residual,excluded_count";
inline constexpr const char* kConcentrationCsvHeader =
    "x,h,mode,parameter,exceptional_count,population_count,fraction";

// JSON output is one object per line.
void write_constants(std::ostream& out, std::span<const ConstantValue> values, OutputFormat format);
void write_counts(std::ostream& out, std::span<const CountComparison> rows, OutputFormat format);
void write_moments(std::ostream& out, std::span<const MomentReport> rows, OutputFormat format);
void write_variance(std::ostream& out, std::span<const VarianceReport> rows, OutputFormat format);
void write_concentration(std::ostream& out, std::span<const ConcentrationReport> rows, OutputFormat format);

}  // namespace omega
