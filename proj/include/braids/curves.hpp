#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braids/word.hpp"

namespace braids {

struct Circle {
  int a = 1;  // first enclosed puncture
  int b = 2;  // last enclosed puncture
  auto operator<=>(const Circle&) const = default;
};

// A family of disjoint round circles on the n-punctured disc, each enclosing
// a block of consecutive punctures, at least two and at most n-1 of them.
class CurveSystem {
public:
  explicit CurveSystem(int punctures);
  CurveSystem(int punctures, std::vector<Circle> circles);

  int punctures() const { return punctures_; }
  const std::vector<Circle>& circles() const { return circles_; }
  bool empty() const { return circles_.empty(); }

  bool operator==(const CurveSystem&) const = default;

private:
  int punctures_ = 2;
  std::vector<Circle> circles_;
};

CurveSystem make_curves(int n, const std::vector<std::pair<int, int>>& intervals);

// Integral lamination coordinates, 2n-4 integers
// (a_1..a_{n-2}, b_1..b_{n-2}). a_i is half the difference between the
// crossings of the up and down rays at puncture i+1; b_i is half the
// difference between the crossings of the vertical lines in gaps i and i+1.
using LaminationCoords = std::vector<long long>;

LaminationCoords lamination_coords(const CurveSystem& c);

// Group action of braid words on coordinates, left to right:
// apply(ab, x) = apply(b, apply(a, x)).
LaminationCoords apply_braid(const BraidWord& w, const LaminationCoords& coords);

bool preserves(const BraidWord& w, const CurveSystem& c);

// Inverse of lamination_coords on the round family.
std::optional<CurveSystem> decode_round_coords(int n, const LaminationCoords& coords);

// Text form "n=<int>; [a-b],[c-d]".
std::string format_curves(const CurveSystem& c);
CurveSystem parse_curves(const std::string& text);

}  // namespace braids
