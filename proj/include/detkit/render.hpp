#pragma once

#include <string>

#include "detkit/chio.hpp"
#include "detkit/dodgson.hpp"

namespace detkit {

// Matrix block rendering: one row per line, space-separated tokens. The
// rational form delegates to serialize_matrix; polynomial entries use the
// compact style so tokens stay whitespace-free.
std::string render_matrix_block(const RationalMatrix& m);
std::string render_matrix_block(const EpsMatrix& m);

// Step traces: stages separated by "=>" lines, annotations on "#" lines.
std::string render_dodgson_text(const DodgsonResult& result, bool with_trace);
std::string render_symbolic_text(const SymbolicResult& result, bool with_trace);
std::string render_chio_text(const ChioResult& result, bool with_trace);

// Stable JSON schema; exact scalars are strings.
struct EvalOutcome {
    std::string method;
    BigRational value;
    const CondensationTrace* condensation = nullptr; // dodgson runs
    const ChioTrace* chio = nullptr;                 // chio runs
};

std::string render_eval_json(const EvalOutcome& outcome);

} // namespace detkit
