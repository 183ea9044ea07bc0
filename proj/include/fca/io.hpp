#pragma once

#include <string>

#include "fca/context.hpp"
#include "fca/lattice.hpp"
#include "fca/morphisms.hpp"

namespace fca {

/// Burmeister format. Layout: `B`, a name line (may be empty), the object
/// count, the attribute count, one blank line, object names one per line,
/// attribute names one per line, then one row per object of exactly |M|
/// characters (`X` incident, `.` not), with a trailing newline. Any other
/// character is a ParseError with line and column.
Context parse_cxt(const std::string& text);
std::string emit_cxt(const Context& ctx);

/// JSON object with `objects`, `attributes`, and `incidence` (|G| boolean
/// rows of length |M|).
Context parse_context_json(const std::string& text);
std::string emit_context_json(const Context& ctx);

/// JSON object with `alpha` and `beta` maps from source names to target
/// names; totality is enforced.
MappingPair parse_pair_json(const std::string& text, const Context& k,
                            const Context& l);
std::string emit_pair_json(const MappingPair& p);

/// Hasse diagram in DOT, bottom-to-top, one node per concept with the
/// reduced labeling (objects at their γ-concept, attributes at their
/// μ-concept), edges along the cover relation.
std::string emit_dot(const ConceptLattice& cl);

}  // namespace fca
