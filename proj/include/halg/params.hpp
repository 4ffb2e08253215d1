#pragma once

#include <cstdint>
#include <string>

namespace halg {

using VarId = std::uint32_t;

// Process-wide registry of parameter names. Ids are handed out in first-use
// order, so for any given run (one CLI invocation, one test binary) the order
// in which an input declares its parameters is the order that breaks grlex
// ties. The registry only grows; names are never re-keyed.
namespace params {

VarId intern(const std::string& name);
const std::string& name(VarId id);

} // namespace params
} // namespace halg
