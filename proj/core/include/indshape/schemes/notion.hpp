#ifndef INDSHAPE_SCHEMES_NOTION_HPP
#define INDSHAPE_SCHEMES_NOTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "indshape/fol/term.hpp"

namespace indshape::schemes {

/**
 * A notion of inductiveness. The classic ones are fixed shapes; Generalized
 * carries an explicit base set B of naturals and step set S of terms over
 * the induction variable x (and parameters). Cut, ACut and AMCut exist only
 * through their obligation sets: they have no single-axiom form.
 */
struct Notion {
  enum class Kind {
    Successor,    // base 0, step x -> x+1
    LessThan,     // step: everything below y forces y
    StepK,        // bases 0..k-1, step x -> x+k
    KInduction,   // bases 0..k-1, window of k forces x+k
    PolyInd,      // base 0, step x -> b*x, b*x+1, ..., b*x+(b-1)
    Generalized,  // bases B, steps S
    Cut,          // successor plus downward closure
    ACut,         // cut plus closure under doubling
    AMCut,        // a-cut plus closure under squaring
  };

  Kind kind = Kind::Successor;
  unsigned k = 0;                          // StepK/KInduction step, PolyInd base
  std::vector<unsigned long> bases;        // Generalized: sorted, duplicates dropped
  std::vector<fol::TermPtr> steps;         // Generalized: given order, duplicates dropped

  static Notion successor();
  static Notion less_than();
  static Notion step_k(unsigned k);        // k >= 1
  static Notion k_induction(unsigned k);   // k >= 1
  static Notion poly_ind(unsigned base);   // base >= 2
  static Notion generalized(std::vector<unsigned long> bases, std::vector<fol::TermPtr> steps);
  static Notion cut();
  static Notion a_cut();
  static Notion am_cut();

  bool is_cut_kind() const {
    return kind == Kind::Cut || kind == Kind::ACut || kind == Kind::AMCut;
  }

  /**
   * CLI notation: succ | less | step:k | kind:k | pind[:b] | cut | acut |
   * amcut | gen:B=0,1;S=x+2 (B and S comma-separated, either may be empty).
   */
  static std::optional<Notion> parse(const std::string& text);
  std::string to_string() const;
};

}  // namespace indshape::schemes

#endif
