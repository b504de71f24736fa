#ifndef INDSHAPE_PROVER_VERDICT_HPP
#define INDSHAPE_PROVER_VERDICT_HPP

#include <string>
#include <vector>

namespace indshape::prover {

enum class VerdictKind { Proved, Refuted, Unknown };

/**
 * Outcome of one proof attempt. Proved carries a derivation trace (one line
 * per inference, ending in the empty clause). Refuted means the negation was
 * satisfiable as far as the backend could tell: saturated for the built-in
 * prover, a countermodel claim for external ones. Unknown names the
 * resource that ran out.
 */
struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::string detail;               // "saturated", "timeout", "clause-limit", ...
  std::vector<std::string> trace;   // derivation lines for Proved
  bool saturated = false;

  static Verdict proved(std::vector<std::string> trace) {
    Verdict v;
    v.kind = VerdictKind::Proved;
    v.trace = std::move(trace);
    return v;
  }
  static Verdict refuted(bool saturated, std::string detail) {
    Verdict v;
    v.kind = VerdictKind::Refuted;
    v.saturated = saturated;
    v.detail = std::move(detail);
    return v;
  }
  static Verdict unknown(std::string detail) {
    Verdict v;
    v.detail = std::move(detail);
    return v;
  }
};

std::string to_string(VerdictKind k);

}  // namespace indshape::prover

#endif
