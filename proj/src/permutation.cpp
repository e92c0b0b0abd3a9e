#include "braids/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braids {

Permutation::Permutation(int n) : images_(static_cast<size_t>(n)) {
  if (n < 1) throw std::invalid_argument("permutation size must be positive");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images01) : images_(std::move(images01)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("images do not form a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::reversal(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[i] = n - 1 - i;
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("transposition index out of range");
  Permutation p(n);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> img(images.size());
  for (size_t i = 0; i < images.size(); ++i) img[i] = images[i] - 1;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation r;
  r.images_.resize(images_.size());
  for (int i = 0; i < size(); ++i) r.images_[i] = other.images_[images_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (int i = 0; i < size(); ++i) r.images_[images_[i]] = i;
  return r;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      cyc.push_back(j + 1);
      j = images_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::one_line() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i) os << ' ';
    os << images_[i] + 1;
  }
  return os.str();
}

}  // namespace braids
