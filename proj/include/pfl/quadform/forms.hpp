#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pfl/error.hpp"
#include "pfl/exactfield/field.hpp"

namespace pfl {

template <FieldElement E>
using Vec = std::vector<E>;

template <FieldElement E>
void require_char2(const E& x) {
  if (x.characteristic() != 2) throw Error(ErrorKind::WrongCharacteristic, "quadratic forms need characteristic 2");
}

/// [a1,b1] _|_ ... _|_ [an,bn] _|_ <c1,...,cr>_q. Coordinates are ordered block by block
/// (x1, y1, x2, y2, ...) followed by the quasilinear coordinates; [a,b] has value
/// a x^2 + x y + b y^2 and <c>_q has value c z^2.
template <FieldElement E>
struct QForm {
  E unit;
  std::vector<std::pair<E, E>> blocks;
  std::vector<E> quasi;

  explicit QForm(E one) : unit(one.one_like()) { require_char2(unit); }

  int dim() const { return static_cast<int>(2 * blocks.size() + quasi.size()); }
  bool nonsingular() const { return quasi.empty(); }
  E zero() const { return unit.zero_like(); }
  Vec<E> zero_vector() const { return Vec<E>(dim(), zero()); }

  QForm& add_block(E a, E b) {
    blocks.emplace_back(std::move(a), std::move(b));
    return *this;
  }
  QForm& add_quasi(E c) {
    quasi.push_back(std::move(c));
    return *this;
  }

  bool operator==(const QForm& o) const { return blocks == o.blocks && quasi == o.quasi; }
};

/// Orthogonal sum; coordinates of the result put all blocks first, then all quasi entries.
template <FieldElement E>
QForm<E> orthogonal_sum(const QForm<E>& a, const QForm<E>& b) {
  QForm<E> r = a;
  r.blocks.insert(r.blocks.end(), b.blocks.begin(), b.blocks.end());
  r.quasi.insert(r.quasi.end(), b.quasi.begin(), b.quasi.end());
  return r;
}

/// The form c * phi, rewritten in block shape: c[a,b] = [c a, b / c].
template <FieldElement E>
QForm<E> scaled(const QForm<E>& phi, const E& c) {
  if (c.is_zero()) throw Error(ErrorKind::ZeroArgument, "scaling a form by zero");
  QForm<E> r(phi.unit);
  for (const auto& [a, b] : phi.blocks) r.add_block(c * a, b / c);
  for (const auto& q : phi.quasi) r.add_quasi(c * q);
  return r;
}

/// Maps coordinates of `orthogonal_sum(a, b)` back to the concatenation (coords of a, coords of b).
template <FieldElement E>
Vec<E> sum_coordinates(const QForm<E>& a, const QForm<E>& b, const Vec<E>& va, const Vec<E>& vb) {
  Vec<E> r;
  r.insert(r.end(), va.begin(), va.begin() + 2 * a.blocks.size());
  r.insert(r.end(), vb.begin(), vb.begin() + 2 * b.blocks.size());
  r.insert(r.end(), va.begin() + 2 * a.blocks.size(), va.end());
  r.insert(r.end(), vb.begin() + 2 * b.blocks.size(), vb.end());
  return r;
}

template <FieldElement E>
E eval_quadratic(const QForm<E>& phi, const Vec<E>& v) {
  if (static_cast<int>(v.size()) != phi.dim()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from form dimension");
  E acc = phi.zero();
  size_t i = 0;
  for (const auto& [a, b] : phi.blocks) {
    const E& x = v[i];
    const E& y = v[i + 1];
    acc = acc + a * x * x + x * y + b * y * y;
    i += 2;
  }
  for (const auto& c : phi.quasi) {
    acc = acc + c * v[i] * v[i];
    ++i;
  }
  return acc;
}

/// Polar form value B(v, w) = phi(v + w) - phi(v) - phi(w).
template <FieldElement E>
E polar_value(const QForm<E>& phi, const Vec<E>& v, const Vec<E>& w) {
  if (static_cast<int>(v.size()) != phi.dim() || static_cast<int>(w.size()) != phi.dim())
    throw Error(ErrorKind::DimensionMismatch, "vector length differs from form dimension");
  E acc = phi.zero();
  for (size_t k = 0; k < phi.blocks.size(); ++k) acc = acc + v[2 * k] * w[2 * k + 1] + v[2 * k + 1] * w[2 * k];
  return acc;
}

/// Symmetric bilinear form given by its Gram matrix.
template <FieldElement E>
struct BForm {
  std::vector<Vec<E>> gram;

  static BForm diagonal(const Vec<E>& d) {
    if (d.empty()) throw Error(ErrorKind::InvalidArgument, "empty diagonal");
    BForm r;
    r.gram.assign(d.size(), Vec<E>(d.size(), d[0].zero_like()));
    for (size_t i = 0; i < d.size(); ++i) r.gram[i][i] = d[i];
    return r;
  }

  int dim() const { return static_cast<int>(gram.size()); }

  bool is_symmetric() const {
    for (size_t i = 0; i < gram.size(); ++i) {
      if (gram[i].size() != gram.size()) return false;
      for (size_t j = 0; j < i; ++j)
        if (!(gram[i][j] == gram[j][i])) return false;
    }
    return true;
  }

  bool is_diagonal() const {
    for (size_t i = 0; i < gram.size(); ++i)
      for (size_t j = 0; j < gram.size(); ++j)
        if (i != j && !gram[i][j].is_zero()) return false;
    return true;
  }

  bool operator==(const BForm& o) const { return gram == o.gram; }
};

/// Gram matrix of the polar form.
template <FieldElement E>
BForm<E> polar_form(const QForm<E>& phi) {
  const int n = phi.dim();
  BForm<E> r;
  r.gram.assign(n, Vec<E>(n, phi.zero()));
  for (size_t k = 0; k < phi.blocks.size(); ++k) {
    r.gram[2 * k][2 * k + 1] = phi.unit;
    r.gram[2 * k + 1][2 * k] = phi.unit;
  }
  return r;
}

/// Quasilinear form v -> B(v, v): in characteristic 2 only the diagonal survives.
template <FieldElement E>
QForm<E> q_of_bilinear(const BForm<E>& B) {
  if (B.gram.empty()) throw Error(ErrorKind::InvalidArgument, "empty bilinear form");
  QForm<E> r(B.gram[0][0]);
  for (int i = 0; i < B.dim(); ++i) r.add_quasi(B.gram[i][i]);
  return r;
}

/// <<a1,...,an>> = <1,a1> (x) ... (x) <1,an>; diagonal entries indexed by subsets S as prod_{i in S} a_i.
template <FieldElement E>
struct PfisterBilin {
  E unit;
  Vec<E> slots;

  PfisterBilin(E one, Vec<E> s) : unit(one.one_like()), slots(std::move(s)) {
    for (const auto& a : slots)
      if (a.is_zero()) throw Error(ErrorKind::ZeroArgument, "Pfister slot must be nonzero");
  }

  int fold() const { return static_cast<int>(slots.size()); }

  Vec<E> diagonal() const {
    Vec<E> d{unit};
    for (const auto& a : slots) {
      const size_t m = d.size();
      for (size_t i = 0; i < m; ++i) d.push_back(d[i] * a);
    }
    return d;
  }

  BForm<E> expand() const { return BForm<E>::diagonal(diagonal()); }
};

/// <<a1,...,a_{n-1}, b]] = <<a1,...,a_{n-1}>> (x) [1,b]; fold n.
template <FieldElement E>
struct PfisterQuad {
  Vec<E> bilin_slots;
  E as_slot;

  PfisterQuad(Vec<E> slots, E b) : bilin_slots(std::move(slots)), as_slot(std::move(b)) {
    require_char2(as_slot);
    for (const auto& a : bilin_slots)
      if (a.is_zero()) throw Error(ErrorKind::ZeroArgument, "Pfister slot must be nonzero");
  }

  int fold() const { return static_cast<int>(bilin_slots.size()) + 1; }
  PfisterBilin<E> bilinear_part() const { return PfisterBilin<E>(as_slot.one_like(), bilin_slots); }

  /// Block expansion: the S-th block is a_S [1, b] = [a_S, b / a_S].
  QForm<E> expand() const {
    QForm<E> r(as_slot);
    for (const auto& c : bilinear_part().diagonal()) r.add_block(c, as_slot / c);
    return r;
  }
};

}  // namespace pfl
