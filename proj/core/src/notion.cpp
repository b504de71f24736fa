#include "indshape/schemes/notion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "indshape/fol/parse.hpp"
#include "indshape/fol/print.hpp"

namespace indshape::schemes {

Notion Notion::successor() { return Notion{}; }

Notion Notion::less_than() {
  Notion n;
  n.kind = Kind::LessThan;
  return n;
}

Notion Notion::step_k(unsigned k) {
  if (k < 1) throw std::invalid_argument("step induction needs k >= 1");
  Notion n;
  n.kind = Kind::StepK;
  n.k = k;
  return n;
}

Notion Notion::k_induction(unsigned k) {
  if (k < 1) throw std::invalid_argument("k-induction needs k >= 1");
  Notion n;
  n.kind = Kind::KInduction;
  n.k = k;
  return n;
}

Notion Notion::poly_ind(unsigned base) {
  if (base < 2) throw std::invalid_argument("polynomial induction needs base >= 2");
  Notion n;
  n.kind = Kind::PolyInd;
  n.k = base;
  return n;
}

Notion Notion::generalized(std::vector<unsigned long> bases, std::vector<fol::TermPtr> steps) {
  Notion n;
  n.kind = Kind::Generalized;
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  n.bases = std::move(bases);
  for (const auto& t : steps) {
    bool seen = false;
    for (const auto& have : n.steps) {
      if (fol::term_equal(have, t)) {
        seen = true;
        break;
      }
    }
    if (!seen) n.steps.push_back(t);
  }
  return n;
}

Notion Notion::cut() {
  Notion n;
  n.kind = Kind::Cut;
  return n;
}

Notion Notion::a_cut() {
  Notion n;
  n.kind = Kind::ACut;
  return n;
}

Notion Notion::am_cut() {
  Notion n;
  n.kind = Kind::AMCut;
  return n;
}

namespace {

std::optional<unsigned> parse_positive(const std::string& text) {
  if (text.empty()) return std::nullopt;
  unsigned long value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + static_cast<unsigned long>(c - '0');
    if (value > 1000000) return std::nullopt;
  }
  return static_cast<unsigned>(value);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::optional<Notion> parse_generalized(const std::string& spec) {
  // Expected: B=0,1;S=x+2 with either list possibly empty.
  auto halves = split(spec, ';');
  if (halves.size() != 2) return std::nullopt;
  if (halves[0].rfind("B=", 0) != 0 || halves[1].rfind("S=", 0) != 0) return std::nullopt;
  std::string b_text = halves[0].substr(2);
  std::string s_text = halves[1].substr(2);

  std::vector<unsigned long> bases;
  if (!b_text.empty()) {
    for (const auto& item : split(b_text, ',')) {
      auto n = parse_positive(item);
      if (!n) return std::nullopt;
      bases.push_back(*n);
    }
  }

  std::vector<fol::TermPtr> steps;
  if (!s_text.empty()) {
    for (const auto& item : split(s_text, ',')) {
      try {
        steps.push_back(fol::parse_term(item));
      } catch (const fol::ParseError&) {
        return std::nullopt;
      }
    }
  }
  return Notion::generalized(std::move(bases), std::move(steps));
}

std::string compact(const fol::TermPtr& t) {
  std::string s = fol::print_term(t);
  std::string out;
  for (char c : s)
    if (c != ' ') out.push_back(c);
  return out;
}

}  // namespace

std::optional<Notion> Notion::parse(const std::string& text) {
  if (text == "succ") return successor();
  if (text == "less") return less_than();
  if (text == "cut") return cut();
  if (text == "acut") return a_cut();
  if (text == "amcut") return am_cut();
  if (text == "pind") return poly_ind(2);
  if (text.rfind("step:", 0) == 0) {
    auto k = parse_positive(text.substr(5));
    if (!k || *k < 1) return std::nullopt;
    return step_k(*k);
  }
  if (text.rfind("kind:", 0) == 0) {
    auto k = parse_positive(text.substr(5));
    if (!k || *k < 1) return std::nullopt;
    return k_induction(*k);
  }
  if (text.rfind("pind:", 0) == 0) {
    auto b = parse_positive(text.substr(5));
    if (!b || *b < 2) return std::nullopt;
    return poly_ind(*b);
  }
  if (text.rfind("gen:", 0) == 0) return parse_generalized(text.substr(4));
  return std::nullopt;
}

std::string Notion::to_string() const {
  switch (kind) {
    case Kind::Successor:
      return "succ";
    case Kind::LessThan:
      return "less";
    case Kind::StepK:
      return "step:" + std::to_string(k);
    case Kind::KInduction:
      return "kind:" + std::to_string(k);
    case Kind::PolyInd:
      return "pind:" + std::to_string(k);
    case Kind::Cut:
      return "cut";
    case Kind::ACut:
      return "acut";
    case Kind::AMCut:
      return "amcut";
    case Kind::Generalized: {
      std::string out = "gen:B=";
      for (std::size_t i = 0; i < bases.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(bases[i]);
      }
      out += ";S=";
      for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) out.push_back(',');
        out += compact(steps[i]);
      }
      return out;
    }
  }
  return "succ";
}

}  // namespace indshape::schemes
