#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gtrunc {

// A permutation of {0, ..., n-1} stored as its image sequence: img[x] = x^p.
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);

  int degree() const { return static_cast<int>(img.size()); }
  int of(int x) const { return img[x]; }
  bool is_identity() const;

  bool operator==(const Perm&) const = default;
  bool operator<(const Perm& o) const { return img < o.img; }
};

// x^(compose(a,b)) = (x^a)^b: a is applied first.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);

// 1-based disjoint-cycle text, e.g. "(1 2 3)(4 5)". Fixed points may be
// omitted; "()" denotes the identity. Throws std::invalid_argument on
// repeated points, points outside 1..degree or unbalanced parentheses.
Perm parse_perm(std::string_view text, int degree);
std::string format_perm(const Perm& p);

// Generator file: first line "degree n", then one permutation per line.
struct GeneratorFile {
  int degree = 0;
  std::vector<Perm> perms;
};
GeneratorFile parse_generator_file(std::istream& in);

}  // namespace gtrunc
