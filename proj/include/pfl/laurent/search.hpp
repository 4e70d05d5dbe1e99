#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pfl/laurent/lpoly.hpp"
#include "pfl/quadform/general_quad.hpp"

namespace pfl {

/// Bounded-support isotropy search. Candidates are enumerated in a fixed order: first every vector
/// whose first nonzero coordinate is 1 and whose remaining nonzero coordinates (at most
/// `exhaustive_support - 1` of them) are single monomials in the window; then `random_trials`
/// vectors drawn from a counter-based generator, each coordinate a sum of at most `max_terms`
/// window monomials.
struct SearchParams {
  int max_terms = 6;
  int window = 3;
  int exhaustive_support = 2;
  uint64_t random_trials = 20000;
  uint64_t seed = 1;
};

struct SearchHit {
  uint64_t index = 0;  // position in the candidate order; the least hit is reported
  std::vector<RatFunc> vector;  // t-coordinates
};

class LaurentSearch {
 public:
  /// `q` in t-coordinates over m variables. Denominators are cleared first.
  LaurentSearch(const GeneralQuad<RatFunc>& q, int m, SearchParams params);

  /// False when the coefficients do not fit the packed kernel; the search then finds nothing.
  bool supported() const { return supported_; }
  uint64_t candidate_count() const { return exhaustive_total_ + params_.random_trials; }

  std::vector<LPoly> candidate(uint64_t index) const;
  bool isotropic(const std::vector<LPoly>& v) const;

  std::optional<SearchHit> run_serial() const;
  /// Same result as run_serial: the least isotropic candidate index.
  std::optional<SearchHit> run_parallel() const;

 private:
  SearchHit hit(uint64_t index) const;

  int m_;
  int n_;
  SearchParams params_;
  bool supported_ = true;
  std::vector<std::vector<LPoly>> coef_;  // upper triangular
  std::vector<uint64_t> window_monomials_;
  struct Shape {
    std::vector<int> positions;
    uint64_t offset;
    uint64_t count;
  };
  std::vector<Shape> shapes_;
  uint64_t exhaustive_total_ = 0;
};

}  // namespace pfl
