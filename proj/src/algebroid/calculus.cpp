#include "homlie/algebroid/calculus.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "homlie/errors.hpp"

namespace homlie {

namespace {

void build_tuples(std::size_t rank, std::size_t degree, std::size_t start,
                  std::vector<std::size_t>& current, std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == degree) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i < rank; ++i) {
    current.push_back(i);
    build_tuples(rank, degree, i + 1, current, out);
    current.pop_back();
  }
}

/// Sorts in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (idx[i - 1] == idx[i]) return 0;
  }
  return sign;
}

/// det[m_l(k)] with m_l = rows[l] restricted to columns `cols`, expanded by
/// permutations; the sizes here are tiny.
Scalar minor_det(std::span<const Section> factors, std::span<const std::size_t> rows) {
  const std::size_t q = rows.size();
  if (q == 0) return Scalar(1);
  if (q == 1) return factors[0][rows[0]];
  if (q == 2) {
    return factors[0][rows[0]] * factors[1][rows[1]] - factors[1][rows[0]] * factors[0][rows[1]];
  }
  std::vector<std::size_t> perm(q);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total(0);
  do {
    Scalar term(1);
    bool zero = false;
    for (std::size_t k = 0; k < q && !zero; ++k) {
      const Scalar& entry = factors[k][rows[perm[k]]];
      if (entry.is_zero()) {
        zero = true;
      } else {
        term *= entry;
      }
    }
    if (zero) continue;
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = a + 1; b < q; ++b) inversions += perm[a] > perm[b];
    }
    if (inversions % 2) {
      total -= term;
    } else {
      total += term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<Section> frame_preimages(const HomBundle& b) {
  std::vector<Section> out;
  for (std::size_t i = 0; i < b.rank(); ++i) out.push_back(b.inverse_twist().column(i));
  return out;
}

std::vector<Section> frame_images(const HomBundle& b) {
  std::vector<Section> out;
  for (std::size_t i = 0; i < b.rank(); ++i) out.push_back(b.twist().column(i));
  return out;
}

/// omega(first, e_rest...) by linearity in the first slot.
Scalar evaluate_first_general(const Form& omega, const Section& first,
                              std::span<const std::size_t> rest) {
  Scalar out(0);
  std::vector<std::size_t> idx(rest.size() + 1);
  std::copy(rest.begin(), rest.end(), idx.begin() + 1);
  for (std::size_t k = 0; k < first.size(); ++k) {
    if (first[k].is_zero()) continue;
    idx[0] = k;
    const Scalar v = omega.get(idx);
    if (!v.is_zero()) out += first[k] * v;
  }
  return out;
}

}  // namespace

AlternatingTable::AlternatingTable(std::size_t rank, std::size_t degree)
    : rank_(rank), degree_(degree), values_(tuples(rank, degree).size()) {}

const std::vector<std::vector<std::size_t>>& AlternatingTable::tuples(std::size_t rank,
                                                                      std::size_t degree) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>,
                  std::unique_ptr<std::vector<std::vector<std::size_t>>>>
      cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{rank, degree}];
  if (!slot) {
    slot = std::make_unique<std::vector<std::vector<std::size_t>>>();
    std::vector<std::size_t> current;
    if (degree <= rank) build_tuples(rank, degree, 0, current, *slot);
  }
  return *slot;
}

std::size_t AlternatingTable::index_of(std::span<const std::size_t> increasing) const {
  const auto& all = tuples();
  const std::vector<std::size_t> key(increasing.begin(), increasing.end());
  const auto it = std::lower_bound(all.begin(), all.end(), key);
  if (it == all.end() || *it != key) throw DimensionError("index tuple out of range");
  return static_cast<std::size_t>(it - all.begin());
}

Scalar AlternatingTable::get(std::span<const std::size_t> indices) const {
  if (indices.size() != degree_) throw DimensionError("tuple length differs from the degree");
  std::vector<std::size_t> idx(indices.begin(), indices.end());
  const int sign = sort_with_sign(idx);
  if (sign == 0) return Scalar(0);
  const Scalar& v = values_[index_of(idx)];
  return sign > 0 ? v : -v;
}

void AlternatingTable::add(std::span<const std::size_t> indices, const Scalar& value) {
  if (indices.size() != degree_) throw DimensionError("tuple length differs from the degree");
  if (value.is_zero()) return;
  std::vector<std::size_t> idx(indices.begin(), indices.end());
  const int sign = sort_with_sign(idx);
  if (sign == 0) return;
  Scalar& slot = values_[index_of(idx)];
  if (sign > 0) {
    slot += value;
  } else {
    slot -= value;
  }
}

bool AlternatingTable::is_zero() const {
  for (const auto& v : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

Form function_form(std::size_t rank, const Scalar& f) {
  Form out(rank, 0);
  out[0] = f;
  return out;
}

Form covector(const Vector& values) {
  Form out(values.size(), 1);
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i];
  return out;
}

Multivector vector_field(const Section& x) {
  Multivector out(x.size(), 1);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i];
  return out;
}

Scalar evaluate(const Form& omega, std::span<const Section> args) {
  if (args.size() != omega.degree()) throw DimensionError("form evaluated on the wrong number of sections");
  const auto& all = omega.tuples();
  Scalar out(0);
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (omega[k].is_zero()) continue;
    const Scalar d = minor_det(args, all[k]);
    if (!d.is_zero()) out += omega[k] * d;
  }
  return out;
}

Form dual_twist(const HomBundle& bundle, const Form& omega) {
  const auto pre = frame_preimages(bundle);
  Form out(omega.rank(), omega.degree());
  const auto& all = out.tuples();
  std::vector<Section> args(omega.degree());
  for (std::size_t k = 0; k < all.size(); ++k) {
    for (std::size_t l = 0; l < all[k].size(); ++l) args[l] = pre[all[k][l]];
    out[k] = bundle.coefficients().phi(evaluate(omega, args));
  }
  return out;
}

Form exterior_derivative(const HomAlgebroid& s, const Form& omega) {
  const std::size_t n = s.rank();
  const std::size_t q = omega.degree();
  if (omega.rank() != n) throw DimensionError("form rank differs from the structure rank");
  Form out(n, q + 1);
  const auto& all = out.tuples();
  if (all.empty()) return out;
  const auto pre = frame_preimages(s.bundle());
  const Form twisted = dual_twist(s.bundle(), omega);
  std::vector<std::vector<Section>> brackets(n, std::vector<Section>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) brackets[i][j] = s.bracket(pre[i], pre[j]);
  }
  const bool anchored = !s.has_zero_anchor();
  std::vector<Section> args(q);
  std::vector<std::size_t> rest;
  for (std::size_t t = 0; t < all.size(); ++t) {
    const auto& tuple = all[t];
    Scalar value(0);
    if (anchored) {
      for (std::size_t a = 0; a <= q; ++a) {
        std::size_t m = 0;
        for (std::size_t l = 0; l <= q; ++l) {
          if (l != a) args[m++] = pre[tuple[l]];
        }
        const Scalar inner = evaluate(omega, args);
        const Scalar d = s.anchors()[tuple[a]](inner);
        if (a % 2) {
          value -= d;
        } else {
          value += d;
        }
      }
    }
    for (std::size_t a = 0; a <= q; ++a) {
      for (std::size_t b = a + 1; b <= q; ++b) {
        rest.clear();
        for (std::size_t l = 0; l <= q; ++l) {
          if (l != a && l != b) rest.push_back(tuple[l]);
        }
        const Scalar term = evaluate_first_general(twisted, brackets[tuple[a]][tuple[b]], rest);
        if ((a + b) % 2) {
          value -= term;
        } else {
          value += term;
        }
      }
    }
    out[t] = value;
  }
  return out;
}

Scalar exterior_derivative_at(const HomAlgebroid& s, const Form& omega,
                              std::span<const Section> z) {
  const std::size_t q = omega.degree();
  if (z.size() != q + 1) throw DimensionError("d of a q-form takes q+1 sections");
  if (q == 0) return s.anchor_apply(z[0], omega[0]);
  std::vector<Section> pre;
  for (const auto& zi : z) pre.push_back(s.phi_inverse(zi));
  const Form twisted = dual_twist(s.bundle(), omega);
  Scalar value(0);
  std::vector<Section> args;
  for (std::size_t a = 0; a <= q; ++a) {
    args.clear();
    for (std::size_t l = 0; l <= q; ++l) {
      if (l != a) args.push_back(pre[l]);
    }
    const Scalar d = s.anchor_apply(z[a], evaluate(omega, args));
    if (a % 2) {
      value -= d;
    } else {
      value += d;
    }
  }
  for (std::size_t a = 0; a <= q; ++a) {
    for (std::size_t b = a + 1; b <= q; ++b) {
      args.clear();
      args.push_back(s.bracket(pre[a], pre[b]));
      for (std::size_t l = 0; l <= q; ++l) {
        if (l != a && l != b) args.push_back(z[l]);
      }
      const Scalar term = evaluate(twisted, args);
      if ((a + b) % 2) {
        value -= term;
      } else {
        value += term;
      }
    }
  }
  return value;
}

Form lie_derivative_form(const HomAlgebroid& s, const Section& z, const Form& omega) {
  const std::size_t n = s.rank();
  const std::size_t q = omega.degree();
  Form out(n, q);
  const auto& all = out.tuples();
  const auto pre = frame_preimages(s.bundle());
  const Section phz = s.phi(z);
  if (q == 0) {
    out[0] = s.anchor_apply(phz, omega[0]);
    return out;
  }
  const Form twisted = dual_twist(s.bundle(), omega);
  std::vector<Section> moved(n);
  for (std::size_t i = 0; i < n; ++i) moved[i] = s.bracket(z, pre[i]);
  std::vector<Section> args(q);
  for (std::size_t t = 0; t < all.size(); ++t) {
    const auto& tuple = all[t];
    for (std::size_t l = 0; l < q; ++l) args[l] = pre[tuple[l]];
    Scalar value = s.anchor_apply(phz, evaluate(omega, args));
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t l = 0; l < q; ++l) args[l] = s.bundle().basis(tuple[l]);
      args[a] = moved[tuple[a]];
      value -= evaluate(twisted, args);
    }
    out[t] = value;
  }
  return out;
}

Scalar lie_derivative_form_at(const HomAlgebroid& s, const Section& z, const Form& omega,
                              std::span<const Section> zs) {
  const std::size_t q = omega.degree();
  if (zs.size() != q) throw DimensionError("a q-form takes q sections");
  const Section phz = s.phi(z);
  if (q == 0) return s.anchor_apply(phz, omega[0]);
  std::vector<Section> pre;
  for (const auto& zi : zs) pre.push_back(s.phi_inverse(zi));
  Scalar value = s.anchor_apply(phz, evaluate(omega, pre));
  const Form twisted = dual_twist(s.bundle(), omega);
  std::vector<Section> args(zs.begin(), zs.end());
  for (std::size_t a = 0; a < q; ++a) {
    args[a] = s.bracket(z, pre[a]);
    value -= evaluate(twisted, args);
    args[a] = zs[a];
  }
  return value;
}

Multivector wedge_sections(std::size_t rank, std::span<const Section> factors) {
  Multivector out(rank, factors.size());
  const auto& all = out.tuples();
  for (std::size_t k = 0; k < all.size(); ++k) out[k] = minor_det(factors, all[k]);
  return out;
}

Multivector wedge(const Multivector& u, const Multivector& v) {
  if (u.rank() != v.rank()) throw DimensionError("wedge of multivectors of different ranks");
  Multivector out(u.rank(), u.degree() + v.degree());
  if (out.size() == 0) return out;
  const auto& tu = u.tuples();
  const auto& tv = v.tuples();
  std::vector<std::size_t> idx;
  for (std::size_t a = 0; a < tu.size(); ++a) {
    if (u[a].is_zero()) continue;
    for (std::size_t b = 0; b < tv.size(); ++b) {
      if (v[b].is_zero()) continue;
      idx = tu[a];
      idx.insert(idx.end(), tv[b].begin(), tv[b].end());
      out.add(idx, u[a] * v[b]);
    }
  }
  return out;
}

Multivector twist(const HomBundle& bundle, const Multivector& u) {
  const auto images = frame_images(bundle);
  Multivector out(u.rank(), u.degree());
  const auto& all = u.tuples();
  std::vector<Section> factors(u.degree());
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (u[k].is_zero()) continue;
    for (std::size_t l = 0; l < all[k].size(); ++l) factors[l] = images[all[k][l]];
    out = out + bundle.coefficients().phi(u[k]) * wedge_sections(u.rank(), factors);
  }
  return out;
}

Multivector schouten_bracket(const HomAlgebroid& s, const Multivector& u, const Multivector& v) {
  const std::size_t n = s.rank();
  const std::size_t p = u.degree();
  const std::size_t q = v.degree();
  if (p == 0 || q == 0) throw DimensionError("the Schouten bracket needs degrees p, q >= 1");
  if (u.rank() != n || v.rank() != n) throw DimensionError("multivector rank differs from the structure rank");
  Multivector out(n, p + q - 1);
  if (out.size() == 0) return out;
  const HomBundle& b = s.bundle();
  const auto images = frame_images(b);
  const auto& tu = u.tuples();
  const auto& tv = v.tuples();
  std::vector<Section> U(p), V(q), phU(p), phV(q), factors;
  for (std::size_t I = 0; I < tu.size(); ++I) {
    if (u[I].is_zero()) continue;
    for (std::size_t l = 0; l < p; ++l) {
      U[l] = b.basis(tu[I][l]);
      phU[l] = images[tu[I][l]];
    }
    U[0] = scale(u[I], U[0]);
    phU[0] = scale(b.coefficients().phi(u[I]), phU[0]);
    for (std::size_t J = 0; J < tv.size(); ++J) {
      if (v[J].is_zero()) continue;
      for (std::size_t l = 0; l < q; ++l) {
        V[l] = b.basis(tv[J][l]);
        phV[l] = images[tv[J][l]];
      }
      V[0] = scale(v[J], V[0]);
      phV[0] = scale(b.coefficients().phi(v[J]), phV[0]);
      for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t c = 0; c < q; ++c) {
          factors.clear();
          factors.push_back(s.bracket(U[a], V[c]));
          for (std::size_t l = 0; l < p; ++l) {
            if (l != a) factors.push_back(phU[l]);
          }
          for (std::size_t l = 0; l < q; ++l) {
            if (l != c) factors.push_back(phV[l]);
          }
          // (-1)^{p+1} (-1)^{a+c} with 1-based a, c.
          const bool negative = ((p + 1) + (a + 1) + (c + 1)) % 2 == 1;
          const Multivector term = wedge_sections(n, factors);
          out = negative ? out - term : out + term;
        }
      }
    }
  }
  return out;
}

Multivector lie_derivative_multivector(const HomAlgebroid& s, const Section& u,
                                       const Multivector& v) {
  return schouten_bracket(s, vector_field(u), v);
}

}  // namespace homlie
