#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braids/curves.hpp"
#include "braids/word.hpp"

namespace braids {

// One strand of the tubular braid: a collapsed circle carrying that many
// ambient strands, or a free puncture of size one.
struct TubularStrand {
  bool is_circle = false;
  int size = 1;
  bool operator==(const TubularStrand&) const = default;
};

// An element of B_C presented constructively: the tubular braid on the m
// collapsed strands plus one interior braid per circle position. The
// interior at position u is the braid carried by the tube that starts at u.
class TubularDecomposition {
public:
  TubularDecomposition(int n, CurveSystem curves, BraidWord tubular,
                       std::vector<BraidWord> interiors);

  int ambient_strands() const { return n_; }
  const CurveSystem& curves() const { return curves_; }
  const BraidWord& tubular() const { return tubular_; }
  int tubular_strands() const { return tubular_.strands(); }
  const std::vector<TubularStrand>& strands() const { return strands_; }

  // Positions are 1-based tubular strand indices; circle positions carry
  // interiors, listed here in increasing position order.
  const std::vector<int>& circle_positions() const { return circle_positions_; }
  const BraidWord& interior_at(int position) const;
  const std::vector<BraidWord>& interiors() const { return interiors_; }

  int block_offset(int position) const;  // ambient strands before the block
  int block_size(int position) const { return strands_[static_cast<size_t>(position - 1)].size; }

  bool operator==(const TubularDecomposition&) const = default;

private:
  int n_ = 2;
  CurveSystem curves_{2};
  BraidWord tubular_;
  std::vector<BraidWord> interiors_;
  std::vector<TubularStrand> strands_;
  std::vector<int> circle_positions_;
};

std::vector<TubularStrand> tubular_strands_of(const CurveSystem& c);

TubularDecomposition make_decomposition(int n, const CurveSystem& curves,
                                        const BraidWord& tubular,
                                        const std::vector<BraidWord>& interiors);

TubularDecomposition identity_decomposition(int n, const CurveSystem& curves);

// Cabling: replace each tubular strand by its block, interiors first, then
// the tubular braid as rigid block crossings.
BraidWord embed(const TubularDecomposition& d);

TubularDecomposition dec_product(const TubularDecomposition& a, const TubularDecomposition& b);
TubularDecomposition dec_inverse(const TubularDecomposition& d);
TubularDecomposition dec_power(const TubularDecomposition& d, long long k);

// Orbits of circle positions under the tubular braid's strand motion. Each
// orbit is listed so that the motion sends entry u to entry u+1 cyclically
// and the largest position comes last; orbits are sorted by smallest member.
struct OrbitStructure {
  std::vector<std::vector<int>> orbits;
};

OrbitStructure orbits(const TubularDecomposition& d);

class ExtractError : public std::runtime_error {
public:
  ExtractError(const std::string& what, int letter_index)
      : std::runtime_error(what), letter_index(letter_index) {}
  int letter_index;  // 1-based position in the word, 0 for end-of-word
};

// Inverse of embed on tube-respecting words: every letter either braids
// inside one tube or belongs to a contiguous run crossing two whole
// adjacent blocks rigidly.
TubularDecomposition extract(const BraidWord& w, const CurveSystem& curves);

std::string format_decomposition(const TubularDecomposition& d);
TubularDecomposition parse_decomposition(const std::string& text);

}  // namespace braids
