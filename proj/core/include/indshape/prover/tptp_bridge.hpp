#ifndef INDSHAPE_PROVER_TPTP_BRIDGE_HPP
#define INDSHAPE_PROVER_TPTP_BRIDGE_HPP

#include <optional>
#include <string>
#include <vector>

#include "indshape/fol/formula.hpp"
#include "indshape/prover/verdict.hpp"

namespace indshape::prover {

/**
 * The problem as FOF lines: axioms named ax1..axN, the goal as conjecture.
 * Free variables are closed universally before printing.
 */
std::string tptp_problem(const std::vector<fol::FormulaPtr>& axioms, const fol::FormulaPtr& goal);

// First SZS status word in the tool output, if any.
std::optional<std::string> parse_szs_status(const std::string& output);

/**
 * Writes the problem to a temp file, runs the command (the {file}
 * placeholder is replaced by the path; without one the path is appended),
 * kills the process group at the deadline, and maps the SZS status:
 * Theorem/Unsatisfiable -> Proved, CounterSatisfiable/Satisfiable ->
 * Refuted, anything else -> Unknown. Never throws on tool failure.
 */
Verdict run_external(const std::string& command_template,
                     const std::vector<fol::FormulaPtr>& axioms, const fol::FormulaPtr& goal,
                     double timeout_seconds);

}  // namespace indshape::prover

#endif
