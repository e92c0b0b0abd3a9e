#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace braids {

// A permutation of {1,...,n}, stored 0-based internally.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int n);                      // identity
  explicit Permutation(std::vector<int> images01);  // 0-based images, validated

  static Permutation identity(int n) { return Permutation(n); }
  static Permutation reversal(int n);         // i -> n+1-i
  static Permutation transposition(int n, int i);  // swaps i, i+1 (1-based i)
  static Permutation from_one_based(const std::vector<int>& images);

  int size() const { return static_cast<int>(images_.size()); }
  bool is_identity() const;

  // 0-based access: image of position i.
  int operator[](int i) const { return images_[i]; }
  int image_one_based(int i) const { return images_[i - 1] + 1; }

  // this followed by other: (a.then(b))(x) = b(a(x)).
  Permutation then(const Permutation& other) const;
  Permutation inverse() const;

  std::vector<std::vector<int>> cycles() const;  // 1-based, fixed points included
  std::string one_line() const;                  // "2 1 3"

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

}  // namespace braids
