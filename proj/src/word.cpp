#include "braids/word.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace braids {

namespace {

void check_strands(int n) {
  if (n < 2) throw std::invalid_argument("strand count must be at least 2");
}

void check_letter(int letter, int n) {
  int idx = letter < 0 ? -letter : letter;
  if (letter == 0 || idx > n - 1)
    throw std::invalid_argument("generator index out of range for " + std::to_string(n) +
                                " strands: " + std::to_string(letter));
}

// Free reduction with a stack; cancels adjacent s_i s_i^-1 pairs.
std::vector<int> freely_reduce(const std::vector<int>& letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int l : letters) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands) {
  check_strands(strands);
  for (int l : letters) check_letter(l, strands);
  letters_ = freely_reduce(letters);
}

BraidWord multiply(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("strand count mismatch in product");
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& l : letters) l = -l;
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord power(const BraidWord& w, long long k) {
  BraidWord base = k < 0 ? inverse(w) : w;
  long long reps = k < 0 ? -k : k;
  std::vector<int> letters;
  letters.reserve(base.letters().size() * static_cast<size_t>(reps));
  for (long long i = 0; i < reps; ++i)
    letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  return BraidWord(w.strands(), std::move(letters));
}

long long exponent_sum(const BraidWord& w) {
  long long s = 0;
  for (int l : w.letters()) s += l > 0 ? 1 : -1;
  return s;
}

Permutation motion_permutation(const BraidWord& w) {
  Permutation p(w.strands());
  for (int l : w.letters()) {
    int i = l < 0 ? -l : l;
    p = p.then(Permutation::transposition(w.strands(), i));
  }
  return p;
}

Permutation underlying_permutation(const BraidWord& w) {
  return motion_permutation(w).inverse();
}

BraidWord standard_element(StandardElement kind, int n) {
  check_strands(n);
  std::vector<int> letters;
  switch (kind) {
    case StandardElement::HalfTwist:
      for (int k = 1; k <= n - 1; ++k)
        for (int i = k; i >= 1; --i) letters.push_back(i);
      break;
    case StandardElement::Delta:
      for (int i = 1; i <= n - 1; ++i) letters.push_back(i);
      break;
    case StandardElement::Gamma:
      letters.push_back(1);
      for (int i = 1; i <= n - 1; ++i) letters.push_back(i);
      break;
  }
  return BraidWord(n, std::move(letters));
}

BraidWord parse_word(const std::string& text, int strands) {
  check_strands(strands);
  std::vector<int> letters;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    size_t pos = 0;
    if (tok[pos] == 's' || tok[pos] == 'S') ++pos;
    size_t caret = tok.find('^', pos);
    std::string base_str = tok.substr(pos, caret == std::string::npos ? std::string::npos : caret - pos);
    long long exp = 1;
    if (caret != std::string::npos) {
      std::string exp_str = tok.substr(caret + 1);
      char* end = nullptr;
      exp = std::strtoll(exp_str.c_str(), &end, 10);
      if (exp_str.empty() || *end != '\0')
        throw std::invalid_argument("bad exponent in token '" + tok + "'");
    }
    char* end = nullptr;
    long long base = std::strtoll(base_str.c_str(), &end, 10);
    if (base_str.empty() || *end != '\0' || base == 0)
      throw std::invalid_argument("bad generator token '" + tok + "'");
    int letter = static_cast<int>(base);
    check_letter(letter, strands);
    int signed_letter = exp < 0 ? -letter : letter;
    long long reps = exp < 0 ? -exp : exp;
    for (long long i = 0; i < reps; ++i) letters.push_back(signed_letter);
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_word(const BraidWord& w) {
  std::ostringstream os;
  const auto& ls = w.letters();
  size_t i = 0;
  bool first = true;
  while (i < ls.size()) {
    size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long long run = static_cast<long long>(j - i);
    int idx = ls[i] < 0 ? -ls[i] : ls[i];
    long long exp = ls[i] < 0 ? -run : run;
    if (!first) os << ' ';
    first = false;
    os << 's' << idx;
    if (exp != 1) os << '^' << exp;
    i = j;
  }
  return os.str();
}

}  // namespace braids
