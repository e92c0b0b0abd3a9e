#pragma once

#include <string>
#include <vector>

#include "braids/permutation.hpp"

namespace braids {

// A braid word over the Artin generators of B_n. Letters are nonzero
// integers: +i stands for sigma_i, -i for its inverse, 1 <= i <= n-1.
// Words are kept freely reduced; no further normalization happens here,
// semantic equality lives in the Garside engine.
class BraidWord {
public:
  BraidWord() = default;  // identity on two strands
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  bool is_identity_word() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  bool operator==(const BraidWord&) const = default;

private:
  int strands_ = 2;
  std::vector<int> letters_;
};

BraidWord multiply(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);
BraidWord power(const BraidWord& w, long long k);
long long exponent_sum(const BraidWord& w);

// Motion of strands: position i goes to motion_permutation(w)[i].
// Built by applying the letters left to right.
Permutation motion_permutation(const BraidWord& w);

// Permutation of the word read as a composite of transpositions in
// left-to-right word order, evaluated right to left; the inverse of the
// strand motion. underlying_permutation(delta in B_4) is the 4-cycle
// 1 -> 2 -> 3 -> 4 -> 1.
Permutation underlying_permutation(const BraidWord& w);

enum class StandardElement { HalfTwist, Delta, Gamma };

// HalfTwist: s1 (s2 s1) ... (s_{n-1} ... s1); Delta: s1 s2 ... s_{n-1};
// Gamma: s1^2 s2 ... s_{n-1}.
BraidWord standard_element(StandardElement kind, int n);

// Word grammar: whitespace-separated tokens ['s'] INT ['^' INT].
BraidWord parse_word(const std::string& text, int strands);
std::string format_word(const BraidWord& w);

}  // namespace braids
