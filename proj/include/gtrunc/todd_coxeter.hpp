#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "gtrunc/permgroup.hpp"

namespace gtrunc {

// Finitely presented group over single-letter generator names. Relator words
// are stored as sequences of letters, entry 2*i for generator i and 2*i+1 for
// its inverse.
struct Presentation {
  std::vector<char> generators;
  std::vector<std::vector<int>> relators;
};

// Word grammar: generator letters, optional ' or ^-1 for inverses, and
// (...)^k powers, e.g. "acabcbcb", "a^2", "(ac)^6", "b^-1ab".
std::vector<int> parse_word(std::string_view text, const std::vector<char>& generators);

// File format: first line lists the generator names, each following nonempty
// line is one relator word.
Presentation parse_presentation(std::istream& in);

// HLT coset enumeration over the trivial subgroup. Returns the regular
// representation (generators acting on cosets, |group| = degree) or nullopt
// when the table would exceed max_cosets.
std::optional<PermGroup> todd_coxeter(const Presentation& p, int max_cosets = 100000);

}  // namespace gtrunc
