#include "fracdyn/poly.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "fracdyn/errors.hpp"

namespace fracdyn {

const Factor* GenTerm::factor(int var) const {
  for (const auto& f : factors) {
    if (f.var == var) return &f;
    if (f.var > var) break;
  }
  return nullptr;
}

double GenTerm::exponent(int var) const {
  const Factor* f = factor(var);
  return f ? f->exponent : 0.0;
}

double quantize_exponent(double e) {
  const double r = std::round(e);
  if (std::fabs(e - r) <= 1e-10) return r + 0.0;
  return std::round(e * 1e12) / 1e12;
}

bool is_integer_exponent(double e) { return e == std::floor(e); }

std::string format_real(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<std::string> default_var_names(std::size_t nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  if (nvars <= 3) {
    for (std::size_t i = 0; i < nvars; ++i) names.emplace_back(1, "xyz"[i]);
    return names;
  }
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

GenTerm multiply_terms(const GenTerm& a, const GenTerm& b) {
  GenTerm out;
  out.coeff = a.coeff * b.coeff;
  out.factors.reserve(a.factors.size() + b.factors.size());
  auto ia = a.factors.begin();
  auto ib = b.factors.begin();
  while (ia != a.factors.end() || ib != b.factors.end()) {
    if (ib == b.factors.end() || (ia != a.factors.end() && ia->var < ib->var)) {
      out.factors.push_back(*ia++);
    } else if (ia == a.factors.end() || ib->var < ia->var) {
      out.factors.push_back(*ib++);
    } else {
      const double e = quantize_exponent(ia->exponent + ib->exponent);
      if (e != 0.0) out.factors.push_back({ia->var, e, ia->abs || ib->abs});
      ++ia;
      ++ib;
    }
  }
  return out;
}

namespace {

double degree(const GenTerm& t) {
  double d = 0.0;
  for (const auto& f : t.factors) d += f.exponent;
  return quantize_exponent(d);
}

// Higher total degree first, then larger exponents on earlier variables.
bool term_before(const GenTerm& a, const GenTerm& b) {
  const double da = degree(a);
  const double db = degree(b);
  if (da != db) return da > db;
  auto ia = a.factors.begin();
  auto ib = b.factors.begin();
  while (ia != a.factors.end() || ib != b.factors.end()) {
    // Missing factor means exponent 0 on that variable.
    int var;
    if (ia == a.factors.end()) {
      var = ib->var;
    } else if (ib == b.factors.end()) {
      var = ia->var;
    } else {
      var = std::min(ia->var, ib->var);
    }
    const bool ha = ia != a.factors.end() && ia->var == var;
    const bool hb = ib != b.factors.end() && ib->var == var;
    const double ea = ha ? ia->exponent : 0.0;
    const double eb = hb ? ib->exponent : 0.0;
    if (ea != eb) return ea > eb;
    const bool aa = ha && ia->abs;
    const bool ab = hb && ib->abs;
    if (aa != ab) return !aa;
    if (ha) ++ia;
    if (hb) ++ib;
  }
  return false;
}

double ipow(double x, long k) {
  if (k < 0) return 1.0 / ipow(x, -k);
  double r = 1.0;
  while (k) {
    if (k & 1) r *= x;
    x *= x;
    k >>= 1;
  }
  return r;
}

// Returns false and reports the factor when the point is outside the domain.
bool eval_term(const GenTerm& t, std::span<const double> point, double& out,
               const Factor** bad) {
  double v = t.coeff;
  for (const auto& f : t.factors) {
    const double x = point[static_cast<std::size_t>(f.var)];
    const bool integral = is_integer_exponent(f.exponent);
    if (f.abs) {
      const double b = std::fabs(x);
      if (f.exponent < 0.0 && b == 0.0) {
        *bad = &f;
        return false;
      }
      v *= integral && std::fabs(f.exponent) <= 64 ? ipow(b, static_cast<long>(f.exponent))
                                                   : std::pow(b, f.exponent);
    } else if (integral) {
      if (f.exponent < 0.0 && x == 0.0) {
        *bad = &f;
        return false;
      }
      v *= std::fabs(f.exponent) <= 64 ? ipow(x, static_cast<long>(f.exponent))
                                       : std::pow(x, f.exponent);
    } else {
      if (!(x > 0.0)) {
        *bad = &f;
        return false;
      }
      v *= std::pow(x, f.exponent);
    }
  }
  out = v;
  return true;
}

}  // namespace

GenPoly::GenPoly(std::size_t nvars, std::vector<GenTerm> terms)
    : nvars_(nvars), terms_(std::move(terms)) {
  canonicalize();
}

GenPoly GenPoly::constant(std::size_t nvars, double c) {
  return GenPoly(nvars, {GenTerm{c, {}}});
}

GenPoly GenPoly::variable(std::size_t nvars, int var) {
  return GenPoly(nvars, {GenTerm{1.0, {Factor{var, 1.0, false}}}});
}

GenPoly GenPoly::monomial(std::size_t nvars, double coeff, std::vector<Factor> factors) {
  return GenPoly(nvars, {GenTerm{coeff, std::move(factors)}});
}

void GenPoly::canonicalize() {
  for (auto& t : terms_) {
    // Normalize the factor list of each term by multiplying factors into 1.
    GenTerm norm{t.coeff, {}};
    std::stable_sort(t.factors.begin(), t.factors.end(),
                     [](const Factor& a, const Factor& b) { return a.var < b.var; });
    for (auto f : t.factors) {
      if (f.var < 0 || static_cast<std::size_t>(f.var) >= nvars_) {
        throw DomainError("factor variable index out of range");
      }
      f.exponent = quantize_exponent(f.exponent);
      if (f.exponent == 0.0) continue;
      norm = multiply_terms(norm, GenTerm{1.0, {f}});
    }
    t = std::move(norm);
  }
  std::stable_sort(terms_.begin(), terms_.end(), term_before);
  std::vector<GenTerm> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().same_signature(t)) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const GenTerm& t) { return t.coeff == 0.0; });
  terms_ = std::move(merged);
}

double GenPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::fabs(t.coeff));
  return m;
}

bool GenPoly::is_classical() const {
  for (const auto& t : terms_) {
    for (const auto& f : t.factors) {
      if (f.abs || f.exponent < 0.0 || !is_integer_exponent(f.exponent)) return false;
    }
  }
  return true;
}

GenPoly GenPoly::pruned(double tol) const {
  GenPoly out(nvars_);
  for (const auto& t : terms_) {
    if (std::fabs(t.coeff) > tol) out.terms_.push_back(t);
  }
  return out;
}

GenPoly GenPoly::widened(std::size_t nvars) const {
  if (nvars < nvars_) throw DomainError("cannot narrow a polynomial");
  GenPoly out = *this;
  out.nvars_ = nvars;
  return out;
}

double GenPoly::eval(std::span<const double> point) const {
  if (point.size() != nvars_) throw DomainError("eval: point has wrong dimension");
  double sum = 0.0;
  for (const auto& t : terms_) {
    double v = 0.0;
    const Factor* bad = nullptr;
    if (!eval_term(t, point, v, &bad)) {
      std::ostringstream msg;
      msg << "eval: variable index " << bad->var << " = "
          << format_real(point[static_cast<std::size_t>(bad->var)])
          << " outside the domain of exponent " << format_real(bad->exponent);
      throw DomainError(msg.str(), bad->var, bad->exponent);
    }
    sum += v;
  }
  return sum;
}

std::optional<double> GenPoly::try_eval(std::span<const double> point) const {
  if (point.size() != nvars_) return std::nullopt;
  double sum = 0.0;
  for (const auto& t : terms_) {
    double v = 0.0;
    const Factor* bad = nullptr;
    if (!eval_term(t, point, v, &bad)) return std::nullopt;
    sum += v;
  }
  return sum;
}

std::string GenPoly::to_string(std::span<const std::string> var_names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const double mag = std::fabs(t.coeff);
    if (first) {
      if (t.coeff < 0.0) out += "-";
    } else {
      out += t.coeff < 0.0 ? " - " : " + ";
    }
    first = false;
    bool need_star = false;
    if (mag != 1.0 || t.factors.empty()) {
      out += format_real(mag);
      need_star = true;
    }
    for (const auto& f : t.factors) {
      if (need_star) out += "*";
      need_star = true;
      const std::string& name = var_names[static_cast<std::size_t>(f.var)];
      out += f.abs ? "|" + name + "|" : name;
      if (f.exponent != 1.0) out += "^" + format_real(f.exponent);
    }
  }
  return out;
}

std::string GenPoly::to_string() const {
  const auto names = default_var_names(nvars_);
  return to_string(names);
}

GenPoly& GenPoly::operator+=(const GenPoly& rhs) {
  nvars_ = std::max(nvars_, rhs.nvars_);
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  canonicalize();
  return *this;
}

GenPoly& GenPoly::operator-=(const GenPoly& rhs) { return *this += -rhs; }

GenPoly& GenPoly::operator*=(const GenPoly& rhs) {
  std::vector<GenTerm> prod;
  prod.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : rhs.terms_) prod.push_back(multiply_terms(a, b));
  }
  nvars_ = std::max(nvars_, rhs.nvars_);
  terms_ = std::move(prod);
  canonicalize();
  return *this;
}

GenPoly& GenPoly::operator*=(double s) {
  for (auto& t : terms_) t.coeff *= s;
  std::erase_if(terms_, [](const GenTerm& t) { return t.coeff == 0.0; });
  return *this;
}

bool operator==(const GenPoly& a, const GenPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff ||
        !a.terms_[i].same_signature(b.terms_[i])) {
      return false;
    }
  }
  return true;
}

bool approx_equal(const GenPoly& a, const GenPoly& b, double tol) {
  return (a - b).max_abs_coeff() <= tol;
}

}  // namespace fracdyn
