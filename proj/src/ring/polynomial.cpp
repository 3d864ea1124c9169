#include "homlie/ring/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "homlie/errors.hpp"

namespace homlie {

int compare_grlex(const Monomial& a, const Monomial& b) {
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

namespace {

bool grlex_greater(const Term& a, const Term& b) {
  return compare_grlex(a.exponents, b.exponents) > 0;
}

// Sorts by descending grlex and merges equal monomials, dropping zeros.
void normalize_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), grlex_greater);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().exponents == t.exponents) {
      merged.back().coefficient += t.coefficient;
      if (merged.back().coefficient == 0) merged.pop_back();
    } else if (t.coefficient != 0) {
      merged.push_back(std::move(t));
    }
  }
  terms = std::move(merged);
}

}  // namespace

Polynomial::Polynomial(const Rational& c, std::size_t nvars) : nvars_(nvars) {
  if (c != 0) terms_.push_back(Term{Monomial(nvars, 0), c});
}

Polynomial Polynomial::variable(std::size_t index, std::size_t nvars) {
  if (index >= nvars) throw DimensionError("variable index out of range");
  Monomial m(nvars, 0);
  m[index] = 1;
  return monomial(std::move(m), Rational(1));
}

Polynomial Polynomial::monomial(Monomial exponents, const Rational& coefficient) {
  Polynomial p(exponents.size());
  if (coefficient != 0) p.terms_.push_back(Term{std::move(exponents), coefficient});
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto e : terms_.front().exponents) {
    if (e != 0) return false;
  }
  return true;
}

bool Polynomial::is_one() const {
  return is_constant() && !terms_.empty() && terms_.front().coefficient == 1;
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not a constant");
  return terms_.empty() ? Rational(0) : terms_.front().coefficient;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.front();
}

std::uint32_t Polynomial::total_degree() const {
  if (terms_.empty()) return 0;
  std::uint32_t d = 0;
  for (auto e : terms_.front().exponents) d += e;
  return d;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) {
    if (var < t.exponents.size()) d = std::max(d, t.exponents[var]);
  }
  return d;
}

Polynomial Polynomial::coefficient_in(std::size_t var, std::uint32_t power) const {
  Polynomial out(nvars_);
  for (const auto& t : terms_) {
    if (t.exponents[var] == power) {
      Term stripped = t;
      stripped.exponents[var] = 0;
      out.terms_.push_back(std::move(stripped));
    }
  }
  normalize_terms(out.terms_);
  return out;
}

Polynomial Polynomial::times_variable_power(std::size_t var, std::uint32_t power) const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.exponents[var] += power;
  return out;  // multiplying every term by the same monomial keeps grlex order
}

Polynomial Polynomial::lifted(std::size_t nvars) const {
  if (nvars == nvars_) return *this;
  if (nvars_ != 0) {
    throw RingMismatchError("cannot embed a polynomial in " + std::to_string(nvars_) +
                            " variables into a ring with " + std::to_string(nvars));
  }
  Polynomial out(nvars);
  for (const auto& t : terms_) out.terms_.push_back(Term{Monomial(nvars, 0), t.coefficient});
  return out;
}

std::size_t Polynomial::common_nvars(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ == b.nvars_) return a.nvars_;
  if (a.nvars_ == 0) return b.nvars_;
  if (b.nvars_ == 0) return a.nvars_;
  throw RingMismatchError("polynomials over " + std::to_string(a.nvars_) + " and " +
                          std::to_string(b.nvars_) + " variables cannot be combined");
}

void Polynomial::adopt_nvars(std::size_t nvars) {
  if (nvars != nvars_) *this = lifted(nvars);
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  const std::size_t n = common_nvars(*this, other);
  adopt_nvars(n);
  if (other.terms_.empty()) return *this;
  const Polynomial& rhs = other.nvars_ == n ? other : other.lifted(n);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < rhs.terms_.size()) {
    if (j == rhs.terms_.size()) {
      merged.push_back(std::move(terms_[i++]));
      continue;
    }
    if (i == terms_.size()) {
      merged.push_back(rhs.terms_[j++]);
      continue;
    }
    const int c = compare_grlex(terms_[i].exponents, rhs.terms_[j].exponents);
    if (c > 0) {
      merged.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      merged.push_back(rhs.terms_[j++]);
    } else {
      Rational sum = terms_[i].coefficient + rhs.terms_[j].coefficient;
      if (sum != 0) merged.push_back(Term{std::move(terms_[i].exponents), std::move(sum)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = Polynomial::common_nvars(a, b);
  Polynomial out(n);
  if (a.is_zero() || b.is_zero()) return out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Monomial m(n, 0);
      for (std::size_t k = 0; k < n; ++k) {
        m[k] = (k < ta.exponents.size() ? ta.exponents[k] : 0) +
               (k < tb.exponents.size() ? tb.exponents[k] : 0);
      }
      out.terms_.push_back(Term{std::move(m), ta.coefficient * tb.coefficient});
    }
  }
  normalize_terms(out.terms_);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.nvars_ != b.nvars_ && !(a.is_constant() && b.is_constant())) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
    if (a.nvars_ == b.nvars_ && a.terms_[i].exponents != b.terms_[i].exponents) return false;
  }
  return true;
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
  Polynomial result(Rational(1), nvars_);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial out(nvars_);
  if (var >= nvars_) return out;
  for (const auto& t : terms_) {
    if (t.exponents[var] == 0) continue;
    Term d = t;
    d.coefficient *= t.exponents[var];
    d.exponents[var] -= 1;
    out.terms_.push_back(std::move(d));
  }
  normalize_terms(out.terms_);
  return out;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != nvars_) {
    throw DimensionError("substitution needs one image per variable");
  }
  std::size_t target = 0;
  for (const auto& img : images) target = std::max(target, img.nvars());
  Polynomial out(Rational(0), target);
  if (terms_.empty()) return out;

  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (std::size_t v = 0; v < nvars_; ++v) {
    powers[v].push_back(Polynomial(Rational(1), target));
  }
  auto power_of = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[v];
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };

  for (const auto& t : terms_) {
    Polynomial term(t.coefficient, target);
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (t.exponents[v] != 0) term *= power_of(v, t.exponents[v]);
    }
    out += term;
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / leading_coefficient();
  return *this * inv;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    const bool negative = c < 0;
    if (negative) c = -c;
    std::string mono;
    for (std::size_t v = 0; v < t.exponents.size(); ++v) {
      if (t.exponents[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += v < names.size() ? names[v] : "x" + std::to_string(v + 1);
      if (t.exponents[v] > 1) mono += "^" + std::to_string(t.exponents[v]);
    }
    std::string body;
    if (mono.empty()) {
      body = c.get_str();
    } else if (c == 1) {
      body = mono;
    } else {
      body = c.get_str() + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZeroError();
  const std::size_t n = std::max(a.nvars(), b.nvars());
  Polynomial r = a.lifted(n);
  const Polynomial d = b.lifted(n);
  Polynomial q(n);
  const Term& lead = d.leading_term();
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    Monomial m(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      if (lr.exponents[k] < lead.exponents[k]) return std::nullopt;
      m[k] = lr.exponents[k] - lead.exponents[k];
    }
    Polynomial t = Polynomial::monomial(std::move(m), lr.coefficient / lead.coefficient);
    q += t;
    r -= t * d;
  }
  return q;
}

namespace {

// Highest-index variable occurring in p, or nvars when p is constant.
std::size_t main_variable(const Polynomial& p) {
  for (std::size_t v = p.nvars(); v-- > 0;) {
    if (p.degree_in(v) > 0) return v;
  }
  return p.nvars();
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.nvars());
  for (std::uint32_t k = 0; k <= p.degree_in(var); ++k) {
    Polynomial c = p.coefficient_in(var, k);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  return *divide_exact(p, content_in(p, var));
}

// Lazy pseudo-remainder of a by b with respect to var.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const std::uint32_t db = b.degree_in(var);
  const Polynomial lb = b.coefficient_in(var, db);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const std::uint32_t da = a.degree_in(var);
    const Polynomial la = a.coefficient_in(var, da);
    a = lb * a - la * b.times_variable_power(var, da - db);
  }
  return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a_in, const Polynomial& b_in) {
  const std::size_t n = std::max(a_in.nvars(), b_in.nvars());
  const Polynomial a = a_in.nvars() == n ? a_in : a_in.lifted(n);
  const Polynomial b = b_in.nvars() == n ? b_in : b_in.lifted(n);
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(Rational(1), n);

  const std::size_t va = main_variable(a);
  const std::size_t vb = main_variable(b);
  const std::size_t v = std::max(va, vb);
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);

  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  Polynomial pa = *divide_exact(a, ca);
  Polynomial pb = *divide_exact(b, cb);
  const Polynomial g = gcd(ca, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

  while (!pb.is_zero()) {
    Polynomial r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      pa = Polynomial(Rational(1), n);
      break;
    }
    pb = primitive_part(r, v);
  }
  return (primitive_part(pa, v) * g).monic();
}

}  // namespace homlie
