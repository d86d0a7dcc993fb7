#include "gtrunc/graph6.hpp"

namespace gtrunc {

namespace {

[[noreturn]] void fail(const std::string& what, size_t offset) {
  throw Graph6Error("graph6: " + what + " at byte " + std::to_string(offset));
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 65535) throw Graph6Error("graph6: vertex count exceeds 65535");
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out += static_cast<char>((acc << (6 - nbits)) + 63);
  return out;
}

Graph decode_graph6(std::string_view line) {
  for (size_t i = 0; i < line.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) fail("byte out of range", i);
  }
  if (line.empty()) fail("empty input", 0);

  size_t pos = 0;
  long n = 0;
  if (line[0] != 126) {
    n = line[0] - 63;
    pos = 1;
  } else {
    if (line.size() >= 2 && line[1] == 126) fail("vertex count out of supported range", 1);
    if (line.size() < 4) fail("truncated vertex count", line.size());
    n = (static_cast<long>(line[1] - 63) << 12) | (static_cast<long>(line[2] - 63) << 6) |
        static_cast<long>(line[3] - 63);
    pos = 4;
  }
  if (n > 65535) fail("vertex count out of supported range", 0);

  const long nbits = n * (n - 1) / 2;
  const size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
  if (line.size() < pos + nbytes) fail("truncated edge bits", line.size());
  if (line.size() > pos + nbytes) fail("trailing garbage", pos + nbytes);

  Graph g(static_cast<int>(n));
  long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = static_cast<int>(line[pos + bit / 6]) - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  // padding must be zero so encode(decode(x)) == x
  for (long b = nbits; b < static_cast<long>(nbytes) * 6; ++b) {
    int byte = static_cast<int>(line[pos + b / 6]) - 63;
    if ((byte >> (5 - b % 6)) & 1) fail("nonzero padding", pos + b / 6);
  }
  return g;
}

}  // namespace gtrunc
