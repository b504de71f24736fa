#ifndef INDSHAPE_PROVER_PROVER_HPP
#define INDSHAPE_PROVER_PROVER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "indshape/fol/formula.hpp"
#include "indshape/prover/saturate.hpp"
#include "indshape/prover/verdict.hpp"
#include "indshape/schemes/schemes.hpp"

namespace indshape::prover {

struct Backend {
  enum class Kind { Builtin, External };
  Kind kind = Kind::Builtin;
  BuiltinLimits limits;
  std::string command;           // external tool, may contain {file}
  double timeout_seconds = 30;   // external deadline

  static Backend builtin(BuiltinLimits limits = {}) {
    Backend b;
    b.limits = limits;
    return b;
  }
  static Backend external(std::string command, double timeout_seconds = 30) {
    Backend b;
    b.kind = Kind::External;
    b.command = std::move(command);
    b.timeout_seconds = timeout_seconds;
    return b;
  }
};

// INDSHAPE_PROVER_CMD, when set and nonempty.
std::optional<std::string> external_command_from_env();

/**
 * Semi-decides axioms |- goal. Free variables of the goal are read
 * universally. Resource exhaustion and tool failures surface as Unknown,
 * never as exceptions.
 */
Verdict prove_goal(const std::vector<fol::FormulaPtr>& axioms, const fol::FormulaPtr& goal,
                   const Backend& backend);

/**
 * Discharges each obligation independently against the sixteen base axioms
 * plus the obligation's own hypotheses.
 */
std::map<std::string, Verdict> prove(const schemes::ObligationSet& obls, const Backend& backend);

}  // namespace indshape::prover

#endif
