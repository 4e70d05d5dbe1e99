#include "pfl/laurent/value_sets.hpp"

#include "pfl/error.hpp"
#include "pfl/exactfield/linalg.hpp"

namespace pfl {
namespace {

// d = sum_eps x^eps c_eps^2, so the K^2-coordinates of d are the c_eps^2; the K^2-span is then the
// K-span of the vectors (c_eps) after applying the (injective, additive) square root.
std::vector<std::vector<RatFunc>> coordinate_rows(const std::vector<RatFunc>& values) {
  std::vector<std::vector<RatFunc>> rows;
  for (const auto& d : values) {
    if (d.characteristic() != 2) throw Error(ErrorKind::WrongCharacteristic, "value sets need characteristic 2");
    rows.push_back(two_basis_coordinates(d));
  }
  return rows;
}

}  // namespace

int square_span_rank(const std::vector<RatFunc>& values) {
  if (values.empty()) return 0;
  return matrix_rank(coordinate_rows(values));
}

bool same_value_set(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b) {
  std::vector<RatFunc> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const int r = square_span_rank(both);
  return r == square_span_rank(a) && r == square_span_rank(b);
}

bool represented_by(const BForm<RatFunc>& B, const RatFunc& beta) {
  if (beta.is_zero()) return false;
  std::vector<RatFunc> diag;
  for (int i = 0; i < B.dim(); ++i) diag.push_back(B.gram[i][i]);
  const int r = square_span_rank(diag);
  diag.push_back(beta);
  return square_span_rank(diag) == r;
}

bool quasilinear_anisotropic(const BForm<RatFunc>& B) {
  std::vector<RatFunc> diag;
  for (int i = 0; i < B.dim(); ++i) {
    if (B.gram[i][i].is_zero()) return false;
    diag.push_back(B.gram[i][i]);
  }
  return square_span_rank(diag) == B.dim();
}

}  // namespace pfl
