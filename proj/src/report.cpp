#include "omega/report.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace omega {

namespace {

using nlohmann::ordered_json;

// exact counts past 2^64 go out as strings
ordered_json exact_json(u128 v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return to_string(v);
}

std::string excluded_text(const std::vector<std::uint64_t>& excluded) {
  std::string s;
  for (const std::uint64_t q : excluded) {
    if (!s.empty()) s += ';';
    s += std::to_string(q);
  }
  return s;
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format '" + text + "'");
}

std::string format_double(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

void write_constants(std::ostream& out, std::span<const ConstantValue> values, OutputFormat format) {
  if (format == OutputFormat::csv) {
    out << kConstantCsvHeader << '\n';
    for (const auto& v : values) {
      out << v.name << ',' << v.h << ',' << format_double(v.value) << ',' << v.truncation_prime << ','
          << format_double(v.tail_bound) << '\n';
    }
    return;
  }
  for (const auto& v : values) {
    ordered_json j;
    j["name"] = v.name;
    j["h"] = v.h;
    j["value"] = v.value;
    j["truncation_prime"] = v.truncation_prime;
    j["tail_bound"] = v.tail_bound;
    out << j.dump() << '\n';
  }
}

void write_counts(std::ostream& out, std::span<const CountComparison> rows, OutputFormat format) {
  if (format == OutputFormat::csv) {
    out << kCountCsvHeader << '\n';
    for (const auto& r : rows) {
      out << r.x << ',' << r.h << ',' << excluded_text(r.excluded) << ',' << r.exact << ','
          << format_double(r.predicted) << ',' << format_double(r.residual) << ','
          << format_double(r.normalized_residual) << '\n';
    }
    return;
  }
  for (const auto& r : rows) {
    ordered_json j;
    j["x"] = r.x;
    j["h"] = r.h;
    j["excluded"] = r.excluded;
    j["exact"] = r.exact;
    j["predicted"] = r.predicted;
    j["residual"] = r.residual;
    j["normalized_residual"] = r.normalized_residual;
    out << j.dump() << '\n';
  }
}

void write_moments(std::ostream& out, std::span<const MomentReport> rows, OutputFormat format) {
  if (format == OutputFormat::csv) {
    out << kMomentCsvHeader << '\n';
    for (const auto& r : rows) {
      out << r.x << ',' << r.h << ',' << to_string(r.population) << ',' << to_string(r.statistic) << ','
          << r.power << ',' << to_string(r.exact_sum) << ',' << format_double(r.predicted) << ','
          << format_double(r.residual) << ',' << format_double(r.normalized_residual) << '\n';
    }
    return;
  }
  for (const auto& r : rows) {
    ordered_json j;
    j["x"] = r.x;
    j["h"] = r.h;
    j["population"] = to_string(r.population);
    j["statistic"] = to_string(r.statistic);
    j["power"] = r.power;
    j["exact"] = exact_json(r.exact_sum);
    j["predicted"] = r.predicted;
    j["residual"] = r.residual;
    j["normalized_residual"] = r.normalized_residual;
    j["theorem"] = r.theorem;
    out << j.dump() << '\n';
  }
}

void write_variance(std::ostream& out, std::span<const VarianceReport> rows, OutputFormat format) {
  if (format == OutputFormat::csv) {
    out << kVarianceCsvHeader << '\n';
    for (const auto& r : rows) {
      out << r.x << ',' << r.h << ',' << format_double(r.exact_variance_sum) << ',' << format_double(r.predicted)
          << ',' << format_double(r.residual) << ',' << format_double(r.normalized_residual) << ','
          << r.excluded_count << '\n';
    }
    return;
  }
  for (const auto& r : rows) {
    ordered_json j;
    j["x"] = r.x;
    j["h"] = r.h;
    j["exact"] = r.exact_variance_sum;
    j["predicted"] = r.predicted;
    j["residual"] = r.residual;
    j["normalized_residual"] = r.normalized_residual;
    j["excluded_count"] = r.excluded_count;
    j["theorem"] = "h-full omega variance";
    out << j.dump() << '\n';
  }
}

void write_concentration(std::ostream& out, std::span<const ConcentrationReport> rows, OutputFormat format) {
  auto mode = [](ConcentrationMode m) { return m == ConcentrationMode::epsilon ? "epsilon" : "threshold"; };
  if (format == OutputFormat::csv) {
    out << kConcentrationCsvHeader << '\n';
    for (const auto& r : rows) {
      out << r.x << ',' << r.h << ',' << mode(r.mode) << ',' << format_double(r.parameter) << ','
          << r.exceptional_count << ',' << r.population_count << ',' << format_double(r.fraction) << '\n';
    }
    return;
  }
  for (const auto& r : rows) {
    ordered_json j;
    j["x"] = r.x;
    j["h"] = r.h;
    j["mode"] = mode(r.mode);
    j["parameter"] = r.parameter;
    j["exceptional_count"] = r.exceptional_count;
    j["population_count"] = r.population_count;
    j["fraction"] = r.fraction;
    out << j.dump() << '\n';
  }
}

}  // namespace omega
