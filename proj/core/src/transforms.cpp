#include "indshape/transforms/transforms.hpp"

#include <set>
#include <stdexcept>

namespace indshape::transforms {

using fol::FormulaPtr;
using fol::TermPtr;

namespace {

void check_closable(const FormulaPtr& f, const std::string& x,
                    const std::vector<std::string>& params) {
  std::set<std::string> declared(params.begin(), params.end());
  declared.insert(x);
  for (const auto& v : fol::free_vars(f)) {
    if (!declared.count(v))
      throw std::invalid_argument("free variable '" + v + "' is not x or a parameter");
  }
}

FormulaPtr close_over(FormulaPtr f, const std::vector<std::string>& params) {
  for (auto it = params.rbegin(); it != params.rend(); ++it) f = fol::forall(*it, f);
  return f;
}

}  // namespace

FormulaPtr axiom_to_inductive(const FormulaPtr& theta, const std::string& x,
                              const std::vector<std::string>& params) {
  check_closable(theta, x, params);
  if (fol::contains_pred(theta))
    throw std::invalid_argument("targets may not contain a predicate template");

  std::set<std::string> avoid = fol::all_names(theta);
  avoid.insert(x);
  avoid.insert(params.begin(), params.end());
  std::string y = fol::fresh_name("y", avoid);
  const TermPtr vy = fol::Term::var(y);

  FormulaPtr base = fol::substitute(theta, x, fol::Term::zero());
  FormulaPtr step = fol::forall(
      y, fol::implies(fol::substitute(theta, x, vy),
                      fol::substitute(theta, x, fol::Term::add(vy, fol::Term::one()))));
  return close_over(fol::implies(fol::land(base, step), theta), params);
}

FormulaPtr merge(const std::vector<MergeEntry>& entries) {
  if (entries.empty()) throw std::invalid_argument("merge needs at least one target");
  const std::string& x = entries.front().x;
  FormulaPtr acc;
  for (const auto& e : entries) {
    FormulaPtr psi = axiom_to_inductive(e.theta, e.x, e.params);
    if (e.x != x) psi = fol::substitute(psi, e.x, fol::Term::var(x));
    acc = acc ? fol::land(acc, psi) : psi;
  }
  return acc;
}

FormulaPtr equivalence_shape(const FormulaPtr& sigma, const FormulaPtr& psi) {
  if (!fol::free_vars(sigma).empty())
    throw std::invalid_argument("the switch formula must be closed");
  return fol::implies(fol::lnot(sigma), psi);
}

namespace {

void collect_pred_names(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind()) {
    case fol::FormulaKind::Pred: out.insert(f->pred_name()); break;
    case fol::FormulaKind::Eq:
    case fol::FormulaKind::Lt: break;
    case fol::FormulaKind::Not: collect_pred_names(f->left(), out); break;
    case fol::FormulaKind::And:
    case fol::FormulaKind::Or:
    case fol::FormulaKind::Implies:
    case fol::FormulaKind::Iff:
      collect_pred_names(f->left(), out);
      collect_pred_names(f->right(), out);
      break;
    case fol::FormulaKind::ForAll:
    case fol::FormulaKind::Exists: collect_pred_names(f->body(), out); break;
  }
}

// Rewrites placeholder atoms to instances of phi. Binders of the template
// that would capture a free parameter of phi are renamed first.
FormulaPtr plug(const FormulaPtr& f, const FormulaPtr& phi, const std::string& x,
                const std::set<std::string>& unsafe) {
  switch (f->kind()) {
    case fol::FormulaKind::Pred: return fol::substitute(phi, x, f->pred_arg());
    case fol::FormulaKind::Eq:
    case fol::FormulaKind::Lt: return f;
    case fol::FormulaKind::Not: return fol::lnot(plug(f->left(), phi, x, unsafe));
    case fol::FormulaKind::And:
      return fol::land(plug(f->left(), phi, x, unsafe), plug(f->right(), phi, x, unsafe));
    case fol::FormulaKind::Or:
      return fol::lor(plug(f->left(), phi, x, unsafe), plug(f->right(), phi, x, unsafe));
    case fol::FormulaKind::Implies:
      return fol::implies(plug(f->left(), phi, x, unsafe), plug(f->right(), phi, x, unsafe));
    case fol::FormulaKind::Iff:
      return fol::iff(plug(f->left(), phi, x, unsafe), plug(f->right(), phi, x, unsafe));
    case fol::FormulaKind::ForAll:
    case fol::FormulaKind::Exists: {
      std::string v = f->bound_var();
      FormulaPtr body = f->body();
      if (unsafe.count(v)) {
        std::set<std::string> avoid = fol::all_names(body);
        avoid.insert(unsafe.begin(), unsafe.end());
        avoid.insert(fol::all_names(phi).begin(), fol::all_names(phi).end());
        std::string v2 = fol::fresh_name(v, avoid);
        body = fol::substitute(body, v, fol::Term::var(v2));
        v = v2;
      }
      body = plug(body, phi, x, unsafe);
      return f->kind() == fol::FormulaKind::ForAll ? fol::forall(v, body) : fol::exists(v, body);
    }
  }
  return f;
}

}  // namespace

FormulaPtr scheme_substitute(const SchemeTemplate& tmpl, const FormulaPtr& phi,
                             const std::string& x, const std::vector<std::string>& params) {
  check_closable(phi, x, params);
  if (fol::contains_pred(phi))
    throw std::invalid_argument("the plugged formula may not contain a predicate template");

  std::set<std::string> names;
  collect_pred_names(tmpl.sentence, names);
  if (names.size() > 1)
    throw std::invalid_argument("template must use a single predicate symbol");

  std::set<std::string> unsafe(params.begin(), params.end());
  for (const auto& v : fol::free_vars(phi))
    if (v != x) unsafe.insert(v);
  return close_over(plug(tmpl.sentence, phi, x, unsafe), params);
}

namespace {

struct GalleryNames {
  std::string c, y, z;
};

GalleryNames fresh_gallery_names(const GalleryInputs& in) {
  std::set<std::string> avoid = fol::all_names(in.phi);
  if (in.delta) {
    auto d = fol::all_names(in.delta);
    avoid.insert(d.begin(), d.end());
  }
  avoid.insert(in.x);
  GalleryNames names;
  names.c = fol::fresh_name("c", avoid);
  avoid.insert(names.c);
  names.y = fol::fresh_name("y", avoid);
  avoid.insert(names.y);
  names.z = fol::fresh_name("z", avoid);
  return names;
}

const fol::FormulaPtr& require_delta(const GalleryInputs& in, const char* name) {
  if (!in.delta)
    throw std::invalid_argument(std::string(name) + " needs the delta formula");
  return in.delta;
}

}  // namespace

FormulaPtr gallery(const std::string& name, const GalleryInputs& in) {
  if (!in.phi) throw std::invalid_argument("gallery needs the phi formula");
  const GalleryNames fresh = fresh_gallery_names(in);
  const TermPtr vx = fol::Term::var(in.x);
  const TermPtr vc = fol::Term::var(fresh.c);
  const TermPtr c_sq = fol::Term::mul(vc, vc);

  auto delta_at_c = [&](const char* who) {
    return fol::substitute(require_delta(in, who), in.x, vc);
  };

  if (name == "not_cut") {
    FormulaPtr inner = fol::land(delta_at_c("not_cut"), fol::leq(c_sq, vx));
    return fol::lor(in.phi, fol::exists(fresh.c, inner));
  }
  if (name == "not_acut") {
    const TermPtr vz = fol::Term::var(fresh.z);
    FormulaPtr phi_z = fol::substitute(in.phi, in.x, vz);
    FormulaPtr inner = fol::land(fol::land(phi_z, delta_at_c("not_acut")),
                                 fol::leq(vx, fol::Term::add(c_sq, vz)));
    return fol::exists(fresh.c, fol::exists(fresh.z, inner));
  }
  if (name == "chi") {
    const TermPtr vy = fol::Term::var(fresh.y);
    FormulaPtr multiple = fol::eq(vx, fol::Term::mul(fol::nat_term(in.m + 1), vy));
    return fol::lor(in.phi, fol::exists(fresh.y, multiple));
  }
  if (name == "rho" || name == "rho0") {
    std::vector<FormulaPtr> cases;
    unsigned long upto = name == "rho0" ? 0 : in.n;
    for (unsigned long k = 0; k <= upto; ++k) {
      TermPtr rhs = k == 0 ? c_sq : fol::Term::add(c_sq, fol::nat_term(k));
      cases.push_back(fol::eq(vx, rhs));
    }
    FormulaPtr near_square = fol::implies(delta_at_c(name.c_str()), fol::disjoin(cases));
    return fol::lor(in.phi, fol::forall(fresh.c, near_square));
  }
  if (name == "square") {
    return fol::substitute(in.phi, in.x, fol::Term::mul(vx, vx));
  }
  throw std::invalid_argument("unknown gallery construction '" + name + "'");
}

const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names = {"not_cut", "not_acut", "chi",
                                                 "rho",     "rho0",     "square"};
  return names;
}

}  // namespace indshape::transforms
