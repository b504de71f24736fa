#include "indshape/model/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace indshape::model {

namespace detail {

static void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  zp_trim(out);
  return out;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] -= b[i];
  }
  zp_trim(out);
  return out;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  zp_trim(out);
  return out;
}

ZPoly zp_neg(ZPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

bool zp_is_zero(const ZPoly& a) { return a.empty(); }

bool zp_pos_leading(const ZPoly& a) { return !a.empty() && a.back() > 0; }

std::optional<ZPoly> zp_div_exact(const ZPoly& num, const ZPoly& den) {
  if (den.empty()) return std::nullopt;
  if (num.empty()) return ZPoly{};
  if (num.size() < den.size()) return std::nullopt;
  ZPoly rem = num;
  ZPoly quot(num.size() - den.size() + 1);
  const Int& lead = den.back();
  for (size_t k = quot.size(); k-- > 0;) {
    size_t top = k + den.size() - 1;
    if (rem.size() <= top || rem[top] == 0) {
      quot[k] = 0;
      continue;
    }
    if (rem[top] % lead != 0) return std::nullopt;
    Int q = rem[top] / lead;
    quot[k] = q;
    for (size_t i = 0; i < den.size(); ++i) rem[k + i] -= q * den[i];
    zp_trim(rem);
  }
  if (!rem.empty()) return std::nullopt;
  zp_trim(quot);
  return quot;
}

std::string zp_to_string(const ZPoly& a) {
  if (a.empty()) return "0";
  std::string out;
  for (size_t k = a.size(); k-- > 0;) {
    const Int& c = a[k];
    if (c == 0) continue;
    Int mag = c < 0 ? Int(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.str();
    } else {
      if (mag != 1) {
        out += mag.str();
        out += "*";
      }
      out += "X";
      if (k >= 2) {
        out += "^";
        out += std::to_string(k);
      }
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

using detail::ZPoly;

PolyPlus PolyPlus::constant(const Int& c) {
  if (c < 0) throw std::invalid_argument("negative constant is not in Z[X]+");
  PolyPlus p;
  if (c != 0) p.c_ = {c};
  return p;
}

PolyPlus PolyPlus::indeterminate() {
  PolyPlus p;
  p.c_ = {0, 1};
  return p;
}

PolyPlus PolyPlus::from_coeffs(ZPoly c) {
  detail::zp_trim(c);
  if (!c.empty() && c.back() < 0)
    throw std::invalid_argument("negative leading coefficient is not in Z[X]+");
  PolyPlus p;
  p.c_ = std::move(c);
  return p;
}

PolyPlus PolyPlus::operator+(const PolyPlus& o) const {
  PolyPlus p;
  p.c_ = detail::zp_add(c_, o.c_);
  return p;
}

PolyPlus PolyPlus::operator*(const PolyPlus& o) const {
  PolyPlus p;
  p.c_ = detail::zp_mul(c_, o.c_);
  return p;
}

bool PolyPlus::less(const PolyPlus& o) const {
  return detail::zp_pos_leading(detail::zp_sub(o.c_, c_));
}

std::string PolyPlus::to_string() const { return detail::zp_to_string(c_); }

PolyPlus PolyPlus::parse(std::string_view text) {
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const char* what) -> void {
    throw std::invalid_argument(std::string("bad polynomial: ") + what);
  };
  ZPoly coeffs;
  auto addmono = [&](const Int& c, size_t exp) {
    if (coeffs.size() <= exp) coeffs.resize(exp + 1);
    coeffs[exp] += c;
  };
  skip();
  if (i == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip();
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (first && text[i] == '+') fail("leading '+'");
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      break;
    }
    Int coeff = 1;
    bool saw_digits = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      Int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      coeff = v;
      saw_digits = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    size_t exp = 0;
    if (i < text.size() && text[i] == 'X') {
      ++i;
      exp = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          fail("exponent expected after '^'");
        size_t e = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          e = e * 10 + static_cast<size_t>(text[i] - '0');
          if (e > 4096) fail("exponent too large");
          ++i;
        }
        exp = e;
      }
    } else if (!saw_digits) {
      fail("expected coefficient or X");
    }
    addmono(sign * coeff, exp);
    first = false;
    skip();
    if (i == text.size()) break;
    if (text[i] != '+' && text[i] != '-') fail("expected '+' or '-'");
  }
  skip();
  if (i != text.size()) fail("trailing input");
  return from_coeffs(std::move(coeffs));
}

PolyPlus poly_eval(const fol::TermPtr& t, const ZxEnv& env) {
  using fol::TermKind;
  switch (t->kind()) {
    case TermKind::Var: {
      auto it = env.find(t->var_name());
      if (it == env.end())
        throw std::out_of_range("unbound variable " + t->var_name());
      return it->second;
    }
    case TermKind::Zero: return PolyPlus();
    case TermKind::One: return PolyPlus::constant(1);
    case TermKind::Add: return poly_eval(t->left(), env) + poly_eval(t->right(), env);
    case TermKind::Mul: return poly_eval(t->left(), env) * poly_eval(t->right(), env);
  }
  return PolyPlus();
}

}  // namespace indshape::model
