#pragma once

#include <numeric>
#include <vector>

#include "pfl/quadform/forms.hpp"

namespace pfl {

/// Quadratic form on E^n given by upper triangular coefficients: q(v) = sum_{i<=j} m[i][j] v_i v_j.
template <FieldElement E>
struct GeneralQuad {
  E unit;
  std::vector<Vec<E>> m;

  GeneralQuad(E one, int n) : unit(one.one_like()), m(n, Vec<E>(n, one.zero_like())) { require_char2(unit); }

  int dim() const { return static_cast<int>(m.size()); }

  E eval(const Vec<E>& v) const {
    E acc = unit.zero_like();
    for (int i = 0; i < dim(); ++i) {
      if (v[i].is_zero()) continue;
      E row = unit.zero_like();
      for (int j = i; j < dim(); ++j)
        if (!m[i][j].is_zero() && !v[j].is_zero()) row = row + m[i][j] * v[j];
      acc = acc + v[i] * row;
    }
    return acc;
  }

  E polar(const Vec<E>& v, const Vec<E>& w) const {
    E acc = unit.zero_like();
    for (int i = 0; i < dim(); ++i)
      for (int j = i + 1; j < dim(); ++j)
        if (!m[i][j].is_zero()) acc = acc + m[i][j] * (v[i] * w[j] + v[j] * w[i]);
    return acc;
  }
};

template <FieldElement E>
GeneralQuad<E> to_general(const QForm<E>& phi) {
  GeneralQuad<E> g(phi.unit, phi.dim());
  size_t i = 0;
  for (const auto& [a, b] : phi.blocks) {
    g.m[i][i] = a;
    g.m[i][i + 1] = phi.unit;
    g.m[i + 1][i + 1] = b;
    i += 2;
  }
  for (const auto& c : phi.quasi) {
    g.m[i][i] = c;
    ++i;
  }
  return g;
}

/// Basis adapted to a quadratic form: pairs (e, f) with B(e, f) = 1 spanning mutually orthogonal
/// planes, plus a basis of the radical of the polar form.
template <FieldElement E>
struct NormalBasis {
  std::vector<std::pair<Vec<E>, Vec<E>>> pairs;
  std::vector<Vec<E>> radical;
};

template <FieldElement E>
Vec<E> axpy(const Vec<E>& y, const E& a, const Vec<E>& x) {
  Vec<E> r = y;
  if (a.is_zero()) return r;
  for (size_t i = 0; i < r.size(); ++i)
    if (!x[i].is_zero()) r[i] = r[i] + a * x[i];
  return r;
}

template <FieldElement E>
Vec<E> scale_vec(const Vec<E>& x, const E& a) {
  Vec<E> r = x;
  for (auto& c : r) c = c * a;
  return r;
}

/// Symplectic-style reduction. `order` fixes the order in which the standard basis vectors are
/// used as pivots (identity when empty).
template <FieldElement E>
NormalBasis<E> normalize(const GeneralQuad<E>& q, std::vector<int> order = {}) {
  const int n = q.dim();
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  if (static_cast<int>(order.size()) != n) throw Error(ErrorKind::DimensionMismatch, "pivot order has wrong length");
  std::vector<Vec<E>> work;
  for (int idx : order) {
    Vec<E> e(n, q.unit.zero_like());
    e.at(idx) = q.unit;
    work.push_back(e);
  }
  NormalBasis<E> out;
  while (true) {
    int pi = -1, pj = -1;
    E c = q.unit.zero_like();
    for (int i = 0; i < static_cast<int>(work.size()) && pi < 0; ++i)
      for (int j = i + 1; j < static_cast<int>(work.size()); ++j) {
        c = q.polar(work[i], work[j]);
        if (!c.is_zero()) {
          pi = i;
          pj = j;
          break;
        }
      }
    if (pi < 0) break;
    Vec<E> u = work[pi];
    Vec<E> v = scale_vec(work[pj], c.inverse());
    std::vector<Vec<E>> rest;
    for (int k = 0; k < static_cast<int>(work.size()); ++k) {
      if (k == pi || k == pj) continue;
      const Vec<E>& w = work[k];
      rest.push_back(axpy(axpy(w, q.polar(w, v), u), q.polar(w, u), v));
    }
    out.pairs.emplace_back(std::move(u), std::move(v));
    work = std::move(rest);
  }
  out.radical = std::move(work);
  return out;
}

/// Block shape of the form in the adapted basis.
template <FieldElement E>
QForm<E> to_qform(const GeneralQuad<E>& q, const NormalBasis<E>& nb) {
  QForm<E> r(q.unit);
  for (const auto& [e, f] : nb.pairs) r.add_block(q.eval(e), q.eval(f));
  for (const auto& z : nb.radical) r.add_quasi(q.eval(z));
  return r;
}

/// B (x) phi with (B (x) phi)(v (x) w) = B(v, v) phi(w).
template <FieldElement E>
QForm<E> tensor_bq(const BForm<E>& B, const QForm<E>& phi) {
  if (!B.is_symmetric()) throw Error(ErrorKind::InvalidArgument, "bilinear form must be symmetric");
  bool diag_units = B.is_diagonal();
  for (int i = 0; i < B.dim() && diag_units; ++i) diag_units = !B.gram[i][i].is_zero();
  if (diag_units) {
    QForm<E> r(phi.unit);
    for (int i = 0; i < B.dim(); ++i) r = orthogonal_sum(r, scaled(phi, B.gram[i][i]));
    return r;
  }
  const GeneralQuad<E> g = to_general(phi);
  const int n = B.dim(), m = g.dim();
  GeneralQuad<E> t(phi.unit, n * m);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k)
      for (int l = k; l < m; ++l) {
        if (g.m[k][l].is_zero()) continue;
        t.m[i * m + k][i * m + l] = t.m[i * m + k][i * m + l] + B.gram[i][i] * g.m[k][l];
        if (k == l) continue;
        for (int j = i + 1; j < n; ++j) {
          if (B.gram[i][j].is_zero()) continue;
          E c = B.gram[i][j] * g.m[k][l];
          t.m[i * m + k][j * m + l] = t.m[i * m + k][j * m + l] + c;
          t.m[i * m + l][j * m + k] = t.m[i * m + l][j * m + k] + c;
        }
      }
  return to_qform(t, normalize(t));
}

}  // namespace pfl
