#include "naive.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

namespace {

Section add(Section a, const Section& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Section times(const Scalar& f, Section a) {
  for (auto& x : a) x = f * x;
  return a;
}

int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      if (p[a] > p[b]) sign = -sign;
    }
  }
  return sign;
}

void all_tuples(std::size_t n, std::size_t q, std::vector<std::size_t>& current,
                std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == q) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    current.push_back(i);
    all_tuples(n, q, current, out);
    current.pop_back();
  }
}

Section basis(std::size_t n, std::size_t i) {
  Section e(n);
  e[i] = Scalar(1);
  return e;
}

}  // namespace

Rational evaluate_at(const Scalar& f, const std::vector<Rational>& point) {
  auto eval = [&](const homlie::Polynomial& p) {
    Rational total = 0;
    for (const auto& t : p.terms()) {
      Rational value = t.coefficient;
      for (std::size_t v = 0; v < t.exponents.size(); ++v) {
        for (std::uint32_t e = 0; e < t.exponents[v]; ++e) value *= point[v];
      }
      total += value;
    }
    return total;
  };
  return eval(f.numerator()) / eval(f.denominator());
}

Section phi(const HomAlgebroid& s, const Section& x) {
  const Matrix& m = s.bundle().twist();
  const auto& ring = s.coefficients();
  Section out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += m(i, j) * ring.phi(x[j]);
  }
  return out;
}

Section phi_inverse(const HomAlgebroid& s, const Section& y) {
  const Matrix& m = s.bundle().inverse_twist();
  const auto& ring = s.coefficients();
  Section out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out[i] += m(i, j) * ring.phi_inverse(y[j]);
  }
  return out;
}

Scalar anchor(const HomAlgebroid& s, const Section& w, const Scalar& f) {
  Scalar out(0);
  if (s.anchors().empty()) return out;
  for (std::size_t k = 0; k < w.size(); ++k) out += w[k] * s.anchors()[k](f);
  return out;
}

Section bracket(const HomAlgebroid& s, const Section& x, const Section& y) {
  const std::size_t n = s.rank();
  const auto& ring = s.coefficients();
  Section out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out = add(out, times(ring.phi(x[i]) * ring.phi(y[j]), s.table()[i][j]));
    }
  }
  const Section px = phi(s, x);
  const Section py = phi(s, y);
  for (std::size_t j = 0; j < n; ++j) out = add(out, times(anchor(s, px, y[j]), phi(s, basis(n, j))));
  if (s.kind() == homlie::StructureKind::Lie) {
    for (std::size_t i = 0; i < n; ++i) out = add(out, times(-anchor(s, py, x[i]), phi(s, basis(n, i))));
  }
  return out;
}

Scalar evaluate(const Form& omega, const std::vector<Section>& args) {
  const std::size_t n = omega.rank();
  if (omega.degree() == 0) return omega[0];
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> current;
  all_tuples(n, omega.degree(), current, tuples);
  Scalar out(0);
  for (const auto& t : tuples) {
    Scalar term = omega.get(t);
    for (std::size_t l = 0; l < t.size() && !term.is_zero(); ++l) term *= args[l][t[l]];
    out += term;
  }
  return out;
}

Scalar exterior_derivative(const HomAlgebroid& s, const Form& omega, const std::vector<Section>& z) {
  const auto& ring = s.coefficients();
  const std::size_t m = z.size();
  if (omega.degree() == 0) return anchor(s, z[0], omega[0]);
  std::vector<Section> pre;
  for (const auto& zi : z) pre.push_back(phi_inverse(s, zi));
  Scalar out(0);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Section> args;
    for (std::size_t l = 0; l < m; ++l) {
      if (l != i) args.push_back(pre[l]);
    }
    const Scalar term = anchor(s, z[i], evaluate(omega, args));
    out += (i % 2 == 0) ? term : -term;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      // phi^dagger(omega)(W, z..) = phi*(omega(phi^{-1} W, phi^{-1} z..))
      std::vector<Section> args{phi_inverse(s, bracket(s, pre[i], pre[j]))};
      for (std::size_t l = 0; l < m; ++l) {
        if (l != i && l != j) args.push_back(pre[l]);
      }
      const Scalar term = ring.phi(evaluate(omega, args));
      out += ((i + j) % 2 == 0) ? term : -term;
    }
  }
  return out;
}

Scalar lie_derivative(const HomAlgebroid& s, const Section& z, const Form& omega, const std::vector<Section>& args) {
  const auto& ring = s.coefficients();
  std::vector<Section> pre;
  for (const auto& a : args) pre.push_back(phi_inverse(s, a));
  Scalar out = anchor(s, phi(s, z), evaluate(omega, pre));
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::vector<Section> moved = pre;
    moved[i] = phi_inverse(s, bracket(s, z, pre[i]));
    out -= ring.phi(evaluate(omega, moved));
  }
  return out;
}

Tensor wedge(const std::vector<Section>& factors) {
  Tensor out;
  const std::size_t p = factors.size();
  if (p == 0) return out;
  const std::size_t n = factors[0].size();
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> current;
  all_tuples(n, p, current, tuples);
  std::vector<std::size_t> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const int sign = permutation_sign(perm);
    for (const auto& t : tuples) {
      Scalar term(sign);
      for (std::size_t l = 0; l < p && !term.is_zero(); ++l) term *= factors[perm[l]][t[l]];
      if (!term.is_zero()) out[t] += term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Multivector to_multivector(const Tensor& t, std::size_t rank, std::size_t degree) {
  Multivector out(rank, degree);
  const auto& tuples = out.tuples();
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    auto it = t.find(tuples[k]);
    if (it != t.end()) out[k] = it->second;
  }
  return out;
}

Multivector schouten(const HomAlgebroid& s, const Multivector& u, const Multivector& v) {
  const std::size_t n = s.rank();
  const std::size_t p = u.degree();
  const std::size_t q = v.degree();
  Tensor total;
  if (p + q - 1 > n) return Multivector(n, p + q - 1);
  for (std::size_t I = 0; I < u.size(); ++I) {
    if (u[I].is_zero()) continue;
    std::vector<Section> us;
    for (auto i : u.tuples()[I]) us.push_back(basis(n, i));
    us[0] = times(u[I], us[0]);
    for (std::size_t J = 0; J < v.size(); ++J) {
      if (v[J].is_zero()) continue;
      std::vector<Section> vs;
      for (auto j : v.tuples()[J]) vs.push_back(basis(n, j));
      vs[0] = times(v[J], vs[0]);
      for (std::size_t i = 1; i <= p; ++i) {
        for (std::size_t j = 1; j <= q; ++j) {
          std::vector<Section> factors{bracket(s, us[i - 1], vs[j - 1])};
          for (std::size_t l = 1; l <= p; ++l) {
            if (l != i) factors.push_back(phi(s, us[l - 1]));
          }
          for (std::size_t l = 1; l <= q; ++l) {
            if (l != j) factors.push_back(phi(s, vs[l - 1]));
          }
          const int sign = ((p + 1 + i + j) % 2 == 0) ? 1 : -1;
          for (const auto& [key, value] : wedge(factors)) total[key] += Scalar(sign) * value;
        }
      }
    }
  }
  return to_multivector(total, n, p + q - 1);
}

Section nijenhuis(const HomAlgebroid& s, const Matrix& k, const Section& x, const Section& y) {
  auto P = [&](const Section& z) {
    Section kz(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      for (std::size_t j = 0; j < z.size(); ++j) kz[i] += k(i, j) * z[j];
    }
    return phi(s, kz);
  };
  const Section px = P(x);
  const Section py = P(y);
  Section out = bracket(s, px, py);
  out = add(out, times(Scalar(-1), P(bracket(s, px, y))));
  out = add(out, times(Scalar(-1), P(bracket(s, x, py))));
  return add(out, bracket(s, x, y));
}

}  // namespace oracle
