#pragma once

#include "gtrunc/permgroup.hpp"

namespace gtrunc {

enum class BuiltinKind { AGL1, PSL2, PGL2 };

// AGL1(q) acts on the q field elements; PSL2(q)/PGL2(q) act on the projective
// line with the field elements first (in additive enumeration order) and the
// point at infinity last. Throws std::invalid_argument for unsupported q.
PermGroup builtin_group(BuiltinKind kind, int q);

}  // namespace gtrunc
