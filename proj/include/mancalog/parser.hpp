#ifndef MANCALOG_PARSER_HPP
#define MANCALOG_PARSER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mancalog/program.hpp"

namespace mancalog {

struct Diagnostic {
  std::string file;
  int line = 0;
  int column = 0;
  std::string message;
  std::string to_string() const;
};

/// Network plus label partition and horizon, as loaded from the network
/// file; t_max = -1 means not set (a #tmax directive must supply it).
struct NetworkData {
  Network network;
  LabelRegistry registry;
  int t_max = -1;
};

struct ParseResult {
  std::optional<Program> program;  // present iff diagnostics is empty
  std::vector<Diagnostic> diagnostics;
};

/// Parses the program DSL against an already-loaded network.  Never
/// throws; every failure is a diagnostic with a source position.
ParseResult parse_program(std::string_view text, const NetworkData& net,
                          const std::string& file = "<input>");

/// Canonical DSL printer; parse_program(print_program(p), {p.network})
/// reproduces a structurally equal program.
std::string print_program(const Program& p);

/// Parses a single fact in the CLI form
/// "label:[l,u] @ node ID in [t1,t2]" against a parsed program.
struct FactParseResult {
  std::optional<Fact> fact;
  std::vector<Diagnostic> diagnostics;
};
FactParseResult parse_fact_text(std::string_view text, const Program& p);

}  // namespace mancalog

#endif
