#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gtrunc/graph.hpp"
#include "gtrunc/truncation.hpp"

namespace gtrunc {

// Partition of a cubic graph into induced cycle_len-cycles such that every
// vertex has exactly one neighbor outside its block and no two vertices of a
// block have neighbors in the same other block; the quotient then carries an
// arc-transitive action and the graph is the corresponding truncation.
struct Decomposition {
  std::vector<std::vector<int>> blocks;  // each block in cycle order
  std::vector<int> block_of;
  Graph quotient;
  Graph inserted;  // the cycle C_cycle_len
  Labeling labeling;
};

// Primary route: every vertex lies on exactly one cycle of the given length
// and those cycles satisfy the block conditions. When that fails and
// allow_partition_search is set, a bounded backtracking search over
// partitions into induced cycles is attempted (at most ~10^6 partial states).
std::optional<Decomposition> truncation_decomposition(const Graph& g, int cycle_len,
                                                      bool allow_partition_search = false);

enum class ClassTag {
  K4,
  Prism3,
  TruncC3,
  K33_Ml3,
  Prism,
  Moebius,
  GenPrism,
  TruncC4,
  Petersen,
  Dodecahedron,
  TruncC5,
  NotCubicVTGirth345,
};
std::string to_string(ClassTag tag);

struct ClassLabel {
  ClassTag tag = ClassTag::NotCubicVTGirth345;
  std::optional<Graph> quotient;
  unsigned long long aut_order = 0;
};

// Decision procedure for connected cubic vertex-transitive graphs of girth
// 3, 4 or 5; anything else gets NotCubicVTGirth345.
ClassLabel classify_cubic_vt(const Graph& g);

struct CorpusLine {
  int line_no = 0;  // 1-based input line
  int n = 0;
  std::string tag;
  std::string quotient_canonical = "-";
  unsigned long long aut_order = 0;
  std::optional<std::string> error;
};

struct CorpusReport {
  std::vector<CorpusLine> lines;
  std::map<std::string, int> summary;  // tag -> count
};

// One classification per graph6 line; unreadable lines are recorded as errors
// and processing continues. Parallel over lines, output ordered by line.
CorpusReport classify_corpus(std::istream& in, int jobs = 1);

}  // namespace gtrunc
