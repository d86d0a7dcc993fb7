#include "gtrunc/todd_coxeter.hpp"

#include <cctype>
#include <deque>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gtrunc {

namespace {

int inv_col(int c) { return c ^ 1; }

std::vector<int> invert_word(const std::vector<int>& w) {
  std::vector<int> out(w.rbegin(), w.rend());
  for (int& c : out) c = inv_col(c);
  return out;
}

struct WordParser {
  std::string_view text;
  size_t pos = 0;
  const std::map<char, int>& index;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  std::vector<int> parse_group() {
    std::vector<int> out;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      auto item = parse_item();
      out.insert(out.end(), item.begin(), item.end());
      skip_ws();
    }
    return out;
  }

  std::vector<int> parse_item() {
    skip_ws();
    std::vector<int> atom;
    if (text[pos] == '(') {
      ++pos;
      atom = parse_group();
      if (pos >= text.size() || text[pos] != ')')
        throw std::invalid_argument("unbalanced parentheses in word");
      ++pos;
    } else {
      char c = text[pos];
      auto it = index.find(c);
      if (it == index.end())
        throw std::invalid_argument(std::string("unknown generator '") + c + "' in word");
      atom = {2 * it->second};
      ++pos;
      if (pos < text.size() && text[pos] == '\'') {
        atom = invert_word(atom);
        ++pos;
      }
    }
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      bool negate = false;
      if (pos < text.size() && text[pos] == '-') {
        negate = true;
        ++pos;
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected exponent after '^'");
      long k = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        k = k * 10 + (text[pos] - '0');
        if (k > 1000000) throw std::invalid_argument("exponent too large");
        ++pos;
      }
      std::vector<int> base = negate ? invert_word(atom) : atom;
      std::vector<int> out;
      for (long i = 0; i < k; ++i) out.insert(out.end(), base.begin(), base.end());
      return out;
    }
    return atom;
  }
};

}  // namespace

std::vector<int> parse_word(std::string_view text, const std::vector<char>& generators) {
  std::map<char, int> index;
  for (size_t i = 0; i < generators.size(); ++i) index[generators[i]] = static_cast<int>(i);
  WordParser wp{text, 0, index};
  auto out = wp.parse_group();
  wp.skip_ws();
  if (wp.pos != text.size()) throw std::invalid_argument("trailing characters in word");
  return out;
}

Presentation parse_presentation(std::istream& in) {
  Presentation p;
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty presentation file");
  std::istringstream head(line);
  std::string tok;
  while (head >> tok) {
    if (tok.size() != 1 || !std::isalpha(static_cast<unsigned char>(tok[0])))
      throw std::invalid_argument("generator names must be single letters");
    p.generators.push_back(tok[0]);
  }
  if (p.generators.empty()) throw std::invalid_argument("no generators declared");
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r\n");
    if (a == std::string::npos || line[a] == '#') continue;
    auto w = parse_word(line, p.generators);
    if (w.empty()) throw std::invalid_argument("empty relator");
    p.relators.push_back(std::move(w));
  }
  if (p.relators.empty()) throw std::invalid_argument("presentation has no relators");
  return p;
}

namespace {

// HLT coset enumeration over the trivial subgroup, with immediate
// coincidence processing (Holt's COINCIDENCE/SCANANDFILL routines).
struct CosetTable {
  int ncols;
  int max_cosets;
  std::vector<std::vector<int>> tab;  // tab[coset][col], -1 undefined
  std::vector<int> parent;            // union-find for coincidences
  std::deque<int> dead_queue;
  int live = 0;
  bool overflow = false;

  CosetTable(int ngens, int max) : ncols(2 * ngens), max_cosets(max) { new_coset(); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool alive(int x) { return find(x) == x; }

  int new_coset() {
    if (static_cast<int>(tab.size()) >= max_cosets) {
      overflow = true;
      return -1;
    }
    tab.emplace_back(ncols, -1);
    parent.push_back(static_cast<int>(tab.size()) - 1);
    ++live;
    return static_cast<int>(tab.size()) - 1;
  }

  void merge(int a, int b) {
    int x = find(a), y = find(b);
    if (x == y) return;
    if (x > y) std::swap(x, y);
    parent[y] = x;
    --live;
    dead_queue.push_back(y);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!dead_queue.empty()) {
      int gamma = dead_queue.front();
      dead_queue.pop_front();
      for (int c = 0; c < ncols; ++c) {
        int delta = tab[gamma][c];
        if (delta < 0) continue;
        tab[delta][inv_col(c)] = -1;
        int mu = find(gamma), nu = find(delta);
        if (tab[mu][c] >= 0) {
          merge(nu, tab[mu][c]);
        } else if (tab[nu][inv_col(c)] >= 0) {
          merge(mu, tab[nu][inv_col(c)]);
        } else {
          tab[mu][c] = nu;
          tab[nu][inv_col(c)] = mu;
        }
      }
    }
  }

  void scan_and_fill(int alpha, const std::vector<int>& word) {
    int f = alpha, b = alpha;
    int i = 0, j = static_cast<int>(word.size()) - 1;
    for (;;) {
      while (i <= j && tab[f][word[i]] >= 0) f = find(tab[f][word[i]]), ++i;
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tab[b][inv_col(word[j])] >= 0) b = find(tab[b][inv_col(word[j])]), --j;
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        tab[f][word[i]] = b;
        tab[b][inv_col(word[i])] = f;
        return;
      }
      int nu = new_coset();
      if (nu < 0) return;
      tab[f][word[i]] = nu;
      tab[nu][inv_col(word[i])] = f;
      f = nu;
      ++i;
    }
  }
};

}  // namespace

std::optional<PermGroup> todd_coxeter(const Presentation& p, int max_cosets) {
  for (const auto& r : p.relators)
    if (r.empty()) throw std::invalid_argument("empty relator");
  CosetTable ct(static_cast<int>(p.generators.size()), max_cosets);

  for (int alpha = 0; alpha < static_cast<int>(ct.tab.size()); ++alpha) {
    if (!ct.alive(alpha)) continue;
    for (const auto& rel : p.relators) {
      ct.scan_and_fill(alpha, rel);
      if (ct.overflow) return std::nullopt;
      if (!ct.alive(alpha)) break;
    }
    if (!ct.alive(alpha)) continue;
    for (int c = 0; c < ct.ncols; ++c) {
      if (ct.tab[alpha][c] >= 0) continue;
      int nu = ct.new_coset();
      if (nu < 0) return std::nullopt;
      ct.tab[alpha][c] = nu;
      ct.tab[nu][inv_col(c)] = alpha;
    }
  }

  // compress live cosets and read off the regular representation
  std::vector<int> newid(ct.tab.size(), -1);
  int n = 0;
  for (size_t x = 0; x < ct.tab.size(); ++x)
    if (ct.alive(static_cast<int>(x))) newid[x] = n++;
  std::vector<Perm> gens;
  for (size_t i = 0; i < p.generators.size(); ++i) {
    std::vector<int> img(n);
    for (size_t x = 0; x < ct.tab.size(); ++x) {
      if (newid[x] < 0) continue;
      int y = ct.tab[x][2 * i];
      if (y < 0) throw std::logic_error("incomplete coset table");
      img[newid[x]] = newid[ct.find(y)];
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup::from_generators(std::move(gens), n);
}

}  // namespace gtrunc
