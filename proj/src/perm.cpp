#include "gtrunc/perm.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace gtrunc {

Perm::Perm(std::vector<int> images) : img(std::move(images)) {
  std::vector<bool> seen(img.size(), false);
  for (int x : img) {
    if (x < 0 || x >= static_cast<int>(img.size()) || seen[x])
      throw std::invalid_argument("image sequence is not a permutation");
    seen[x] = true;
  }
}

Perm Perm::identity(int n) {
  Perm p;
  p.img.resize(n);
  for (int i = 0; i < n; ++i) p.img[i] = i;
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img[i] != i) return false;
  return true;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  Perm c;
  c.img.resize(a.degree());
  for (int i = 0; i < a.degree(); ++i) c.img[i] = b.img[a.img[i]];
  return c;
}

Perm inverse(const Perm& p) {
  Perm q;
  q.img.resize(p.degree());
  for (int i = 0; i < p.degree(); ++i) q.img[p.img[i]] = i;
  return q;
}

Perm parse_perm(std::string_view text, int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  std::vector<bool> used(degree, false);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };

  skip_ws();
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    any_cycle = true;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected point or ')' in cycle notation");
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > degree) throw std::invalid_argument("point exceeds degree");
        ++i;
      }
      if (v < 1) throw std::invalid_argument("points are 1-based");
      int p = static_cast<int>(v) - 1;
      if (used[p]) throw std::invalid_argument("repeated point in cycle notation");
      used[p] = true;
      cycle.push_back(p);
      skip_ws();
    }
    if (i >= text.size()) throw std::invalid_argument("unbalanced parentheses");
    ++i;  // ')'
    for (size_t j = 0; j + 1 < cycle.size(); ++j) img[cycle[j]] = cycle[j + 1];
    if (cycle.size() >= 2) img[cycle.back()] = cycle.front();
    skip_ws();
  }
  if (!any_cycle) throw std::invalid_argument("empty permutation text");
  return Perm(std::move(img));
}

std::string format_perm(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p.img[i] == i) continue;
    out += '(';
    int x = i;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = p.img[x];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

GeneratorFile parse_generator_file(std::istream& in) {
  GeneratorFile gf;
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty generator file");
  std::istringstream head(line);
  std::string kw;
  if (!(head >> kw >> gf.degree) || kw != "degree" || gf.degree < 0)
    throw std::invalid_argument("generator file must start with 'degree n'");
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) continue;
    if (line[a] == '#') continue;
    gf.perms.push_back(parse_perm(line, gf.degree));
  }
  return gf;
}

}  // namespace gtrunc
