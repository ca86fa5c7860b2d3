#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "etg4/classifier.hpp"
#include "etg4/graph.hpp"

namespace etg4 {

// Reports render either as plain text or as a JSON document carrying
// "schema_version". JSON keys are sorted, so output is byte-stable.

inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { Text, Json };

std::string analyze_report(const Graph& g, ReportFormat format);

enum class ClassifyOutcome { Classified, NotMember, Violation };

struct ClassifyReport {
  ClassifyOutcome outcome = ClassifyOutcome::Classified;
  std::string text;
};

ClassifyReport classify_report(const Graph& g, ReportFormat format);

struct VerifyReport {
  bool passed = false;
  std::string text;
};

VerifyReport verify_report(ReportFormat format);

struct CensusText {
  bool clean = false;  // every member classified and every k in the table
  bool partial = false;
  std::string text;
};

CensusText census_report(int max_n, std::optional<std::chrono::milliseconds> time_limit, ReportFormat format);

}  // namespace etg4
