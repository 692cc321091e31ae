#pragma once

#include <optional>

#include "hopfca/functors.hpp"
#include "hopfca/partialdual.hpp"
#include "hopfca/registry.hpp"

namespace hopfca {

// Text document format.  Tokens are whitespace separated, `{` and `}` are
// their own tokens, `#` starts a comment running to the end of the line.
//
//   hopf {
//     name c2
//     field Q            # or: field Fp 7
//     dim 2
//     mult ...           # dim^3 entries, flat row-major
//     unit ...           # dim entries
//     comult ...         # dim^3 entries
//     counit ...         # dim entries
//     antipode ...       # dim^2 entries
//   }
//
//   pairing {
//     name eval-c2
//     k_alg hopf { ... }
//     h_alg hopf { ... }
//     form ...           # dim(K) * dim(H) entries
//   }
//
// Rationals are integers or "p/q"; prime-field scalars are integers.
// name, field and dim must appear before any tensor block.
std::string emit_hopf(const HopfAlgebraData& h);
std::string emit_pairing(const HopfPairing& p);

// Throws ParseError with line/column on malformed input and ValidationError
// when the parsed object fails its axiom suite.
HopfAlgebraData parse_hopf(const std::string& text);
HopfPairing parse_pairing(const std::string& text);

// Either document kind, dispatched on the leading keyword.
struct ParsedInput {
  std::optional<HopfAlgebraData> algebra;
  std::optional<HopfPairing> pairing;
};
ParsedInput parse_input(const std::string& text);

// Registry name or path to a document file; throws UnknownExample when the
// target is neither.
ParsedInput resolve_target(const std::string& target);

// Suite ids: axioms, pairing, pams, realization, yd-rep, phi-psi,
// theorem-1-2, schauenburg.  The pams suite additionally accepts the
// shipped mutation fixtures mutant-1, mutant-2, mutant-3 as targets.
std::vector<std::string> suite_names();
VerificationReport run_suite(const std::string& suite, const std::string& target);

enum class ReportFormat { text, machine };

// Byte-deterministic rendering: one line per check in ledger order, with
// witness indices and both scalar values on failing entries.
std::string emit_report(const VerificationReport& r, ReportFormat fmt);

// Command-line front end; returns the process exit status (0 iff pass).
int run_cli(const std::vector<std::string>& args);

}  // namespace hopfca
