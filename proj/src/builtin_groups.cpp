#include "gtrunc/builtin_groups.hpp"

#include <stdexcept>

#include "gtrunc/gf.hpp"

namespace gtrunc {

namespace {

Perm field_map(const GF& f, int extra, auto&& fn) {
  // extra = 0: act on the q field elements; extra = 1: projective line with
  // infinity encoded as q.
  std::vector<int> img(f.q() + extra);
  for (int x = 0; x < f.q() + extra; ++x) img[x] = fn(x);
  return Perm(std::move(img));
}

}  // namespace

PermGroup builtin_group(BuiltinKind kind, int q) {
  GF f(q);
  const int inf = q;
  const int omega = f.primitive_element();

  switch (kind) {
    case BuiltinKind::AGL1: {
      Perm t = field_map(f, 0, [&](int x) { return f.add(x, 1); });
      Perm m = field_map(f, 0, [&](int x) { return f.mul(omega, x); });
      return PermGroup::from_generators({t, m}, q);
    }
    case BuiltinKind::PSL2: {
      Perm t = field_map(f, 1, [&](int x) { return x == inf ? inf : f.add(x, 1); });
      int w2 = f.mul(omega, omega);
      Perm m = field_map(f, 1, [&](int x) { return x == inf ? inf : f.mul(w2, x); });
      Perm s = field_map(f, 1, [&](int x) {
        if (x == inf) return 0;
        if (x == 0) return inf;
        return f.neg(f.inv(x));
      });
      return PermGroup::from_generators({t, m, s}, q + 1);
    }
    case BuiltinKind::PGL2: {
      Perm t = field_map(f, 1, [&](int x) { return x == inf ? inf : f.add(x, 1); });
      Perm m = field_map(f, 1, [&](int x) { return x == inf ? inf : f.mul(omega, x); });
      Perm s = field_map(f, 1, [&](int x) {
        if (x == inf) return 0;
        if (x == 0) return inf;
        return f.inv(x);
      });
      return PermGroup::from_generators({t, m, s}, q + 1);
    }
  }
  throw std::invalid_argument("unknown builtin group kind");
}

}  // namespace gtrunc
