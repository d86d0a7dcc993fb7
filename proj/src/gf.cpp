#include "gtrunc/gf.hpp"

#include <array>
#include <stdexcept>

namespace gtrunc {

namespace {

struct FieldDef {
  int q, p, deg;
  // irreducible polynomial as coefficient digits above the leading term
  // stripped: for q = p^d, poly = x^d + sum(c[i] x^i), stored c packed base p.
  int reduction;  // encodes c_0 + c_1 p + ... + c_{d-1} p^{d-1}
};

// Fixed irreducible polynomials: x^2+x+1 (4), x^3+x+1 (8), x^2+1 (9),
// x^4+x+1 (16), x^2+x+1 over GF(5) (25), x^3+2x+1 (27).
constexpr std::array<FieldDef, 15> kFields = {{
    {2, 2, 1, 0},
    {3, 3, 1, 0},
    {4, 2, 2, 1 + 2 * 1},
    {5, 5, 1, 0},
    {7, 7, 1, 0},
    {8, 2, 3, 1 + 2 * 1 + 4 * 0},
    {9, 3, 2, 1 + 3 * 0},
    {11, 11, 1, 0},
    {13, 13, 1, 0},
    {16, 2, 4, 1 + 2 * 1},
    {17, 17, 1, 0},
    {19, 19, 1, 0},
    {23, 23, 1, 0},
    {25, 5, 2, 1 + 5 * 1},
    {27, 3, 3, 1 + 3 * 2 + 9 * 0},
}};

const FieldDef* find_field(int q) {
  for (const auto& f : kFields)
    if (f.q == q) return &f;
  return nullptr;
}

std::vector<int> digits(int x, int p, int len) {
  std::vector<int> d(len, 0);
  for (int i = 0; i < len && x > 0; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

int pack(const std::vector<int>& d, int p) {
  int x = 0;
  for (size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

}  // namespace

bool GF::supported(int q) { return find_field(q) != nullptr; }

GF::GF(int q) : q_(q) {
  const FieldDef* def = find_field(q);
  if (!def) throw std::invalid_argument("unsupported field size " + std::to_string(q));
  p_ = def->p;
  deg_ = def->deg;

  auto red = digits(def->reduction, p_, deg_);
  // polynomial multiplication mod the reduction polynomial
  auto poly_mul = [&](int a, int b) {
    std::vector<int> da = digits(a, p_, deg_), db = digits(b, p_, deg_);
    std::vector<int> prod(2 * deg_ - 1, 0);
    for (int i = 0; i < deg_; ++i)
      for (int j = 0; j < deg_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (int i = 2 * deg_ - 2; i >= deg_; --i) {
      int c = prod[i];
      if (c == 0) continue;
      prod[i] = 0;
      // x^i = x^(i-deg) * x^deg = -x^(i-deg) * red(x)
      for (int j = 0; j < deg_; ++j)
        prod[i - deg_ + j] = ((prod[i - deg_ + j] - c * red[j]) % p_ + p_) % p_;
    }
    prod.resize(deg_);
    return pack(prod, p_);
  };

  mul_table_.assign(q_ * q_, 0);
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) mul_table_[a * q_ + b] = poly_mul(a, b);

  inv_table_.assign(q_, 0);
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1) {
        inv_table_[a] = b;
        break;
      }

  primitive_ = 0;
  for (int a = 1; a < q_ && primitive_ == 0; ++a) {
    int x = a, ord = 1;
    while (x != 1) {
      x = mul(x, a);
      ++ord;
    }
    if (ord == q_ - 1) primitive_ = a;
  }
}

int GF::add(int a, int b) const {
  auto da = digits(a, p_, deg_), db = digits(b, p_, deg_);
  for (int i = 0; i < deg_; ++i) da[i] = (da[i] + db[i]) % p_;
  return pack(da, p_);
}

int GF::neg(int a) const {
  auto d = digits(a, p_, deg_);
  for (int i = 0; i < deg_; ++i) d[i] = (p_ - d[i]) % p_;
  return pack(d, p_);
}

int GF::inv(int a) const {
  if (a == 0) throw std::invalid_argument("division by zero in GF");
  return inv_table_[a];
}

}  // namespace gtrunc
