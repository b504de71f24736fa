#include "indshape/prover/prover.hpp"

#include <cstdlib>

#include "indshape/fol/dnf.hpp"
#include "indshape/prover/clausify.hpp"
#include "indshape/prover/tptp_bridge.hpp"

namespace indshape::prover {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Proved: return "Proved";
    case VerdictKind::Refuted: return "Refuted";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::optional<std::string> external_command_from_env() {
  const char* cmd = std::getenv("INDSHAPE_PROVER_CMD");
  if (!cmd || !*cmd) return std::nullopt;
  return std::string(cmd);
}

Verdict prove_goal(const std::vector<fol::FormulaPtr>& axioms, const fol::FormulaPtr& goal,
                   const Backend& backend) {
  if (backend.kind == Backend::Kind::External)
    return run_external(backend.command, axioms, goal, backend.timeout_seconds);
  try {
    auto clauses = clausify(axioms, goal, backend.limits.max_clauses);
    return saturate(clauses, backend.limits);
  } catch (const fol::ResourceLimitError&) {
    return Verdict::unknown("clause-limit");
  } catch (const std::invalid_argument& e) {
    return Verdict::unknown(std::string("error: ") + e.what());
  }
}

std::map<std::string, Verdict> prove(const schemes::ObligationSet& obls, const Backend& backend) {
  std::map<std::string, Verdict> out;
  for (const auto& obl : obls.obligations) {
    std::vector<fol::FormulaPtr> axioms = schemes::ObligationSet::axioms();
    axioms.insert(axioms.end(), obl.hypotheses.begin(), obl.hypotheses.end());
    out[obl.tag] = prove_goal(axioms, obl.goal, backend);
  }
  return out;
}

}  // namespace indshape::prover
