#ifndef INDSHAPE_FOL_CLASSIFY_HPP
#define INDSHAPE_FOL_CLASSIFY_HPP

#include <optional>
#include <string>

#include "indshape/fol/formula.hpp"

namespace indshape::fol {

/**
 * Syntactic complexity classes, totally ordered by rank():
 * Atomic < QuantifierFree < Bounded < SigmaK(1) < SigmaK(2) < ... < Unrestricted.
 * SigmaK(k) counts alternating quantifier blocks of a prenex form, with
 * bounded quantifiers inside a fully bounded matrix not counted.
 */
struct FormulaClass {
  enum class Tag { Atomic, QuantifierFree, Bounded, SigmaK, Unrestricted };
  Tag tag;
  unsigned k = 0;  // SigmaK only

  unsigned long rank() const;
  std::string to_string() const;  // atomic | qf | bounded | sigma:k | any
  static std::optional<FormulaClass> parse(const std::string& s);

  static FormulaClass atomic() { return {Tag::Atomic, 0}; }
  static FormulaClass quantifier_free() { return {Tag::QuantifierFree, 0}; }
  static FormulaClass bounded() { return {Tag::Bounded, 0}; }
  static FormulaClass sigma(unsigned k) { return {Tag::SigmaK, k}; }
  static FormulaClass unrestricted() { return {Tag::Unrestricted, 0}; }
};

bool operator==(const FormulaClass& a, const FormulaClass& b);

// a lies within b (subsumption along the rank order).
bool class_within(const FormulaClass& a, const FormulaClass& b);

// Smallest class containing f. Deterministic; adding a quantifier never
// yields a smaller class. Rejects template predicate atoms.
FormulaClass classify(const FormulaPtr& f);

// Every quantifier in f matches one of the bounded patterns
// !x.(x < t -> ...) or ?x.(x < t & ...) with x not in t.
bool is_bounded_formula(const FormulaPtr& f);

}  // namespace indshape::fol

#endif
