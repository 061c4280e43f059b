#ifndef MANCALOG_JSON_IO_HPP
#define MANCALOG_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "mancalog/interpretation.hpp"
#include "mancalog/parser.hpp"
#include "mancalog/program.hpp"

namespace mancalog {

struct LoadResult {
  std::optional<NetworkData> data;  // present iff diagnostics is empty
  std::vector<Diagnostic> diagnostics;
};

/// Loads the network JSON:
///   {"t_max": N, "fluent": [...], "nonfluent": [...],
///    "nodes": ["1","2",...], "edges": [["1","2"],...]}
/// t_max may be omitted (a #tmax directive must then supply it).
LoadResult load_network(const std::string& json_text,
                        const std::string& file = "<network>");

enum class TimelineFormat { Csv, Json };

/// Serializes an interpretation as rows (t, component, label, bound),
/// sorted by (t, component name, label name).  Sparse output omits [0,1]
/// rows.  Output is byte-stable across runs.
std::string export_timeline(const Interpretation& i, const Program& p,
                            TimelineFormat format, bool sparse);

/// Inverse of the CSV export (up to normalization).
std::optional<Interpretation> import_timeline_csv(const std::string& csv,
                                                  const Program& p,
                                                  std::string* error = nullptr);

}  // namespace mancalog

#endif
