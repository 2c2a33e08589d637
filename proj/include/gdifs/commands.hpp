#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "gdifs/classifier.hpp"
#include "gdifs/document.hpp"
#include "gdifs/ifs_graph.hpp"

namespace gdifs {

enum class Command { Validate, Dimension, Measure, Gaps, Density, Classify, Render };
enum class Format { Text, Machine };

std::optional<Command> parse_command(std::string_view name);
const char* to_string(Command c) noexcept;

struct CommandOptions {
  Format format = Format::Text;
  std::optional<std::size_t> depth;  // gaps: 6, density: 10
  std::optional<Rational> cutoff;
  double tol = 1e-12;
  std::size_t levels = 4;
  std::string out_path;  // render: empty writes the SVG to the output
  VertexId vertex = 0;
  std::optional<Interval> interval;
};

enum ExitCode : int { kExitOk = 0, kExitInternal = 1, kExitInvalid = 2, kExitNotCertified = 3 };

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;  // report document, or SVG for render without --out
  std::string error;   // diagnostic when exit_code is 1 or 2
};

std::string format_certificate(const Certificate& certificate, Format format);

/// Never throws: library errors become exit code 2, anything unexpected 1.
CommandResult run_command(Command command, const IfsDocument& doc, const CommandOptions& options);

}  // namespace gdifs
