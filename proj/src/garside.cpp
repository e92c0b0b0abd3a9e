#include "braids/garside.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace braids {

namespace {

Permutation reversal_cached(int n) { return Permutation::reversal(n); }

void strands_match(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("strand count mismatch");
}

}  // namespace

int inversions(const Permutation& p) {
  int n = p.size(), count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p[i] > p[j]) ++count;
  return count;
}

bool is_delta_perm(const Simple& s) {
  int n = s.size();
  for (int i = 0; i < n; ++i)
    if (s[i] != n - 1 - i) return false;
  return true;
}

bool simple_divides(const Simple& s, const Simple& t) {
  Permutation q = s.inverse().then(t);
  return inversions(s) + inversions(q) == inversions(t);
}

Simple simple_quotient(const Simple& s, const Simple& t) {
  Permutation q = s.inverse().then(t);
  assert(inversions(s) + inversions(q) == inversions(t));
  return q;
}

// Greedy ascent inside the set of common prefixes; the set is the prefix
// lattice of the meet, so any maximal chain reaches it. The quotients
// m^{-1}a, m^{-1}b are maintained; sigma_i extends m iff i is a position
// descent of both.
Simple simple_meet(const Simple& a, const Simple& b) {
  const int n = a.size();
  std::vector<int> qa(n), qb(n);
  for (int i = 0; i < n; ++i) {
    qa[i] = a[i];
    qb[i] = b[i];
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (qa[i] > qa[i + 1] && qb[i] > qb[i + 1]) {
        std::swap(qa[i], qa[i + 1]);
        std::swap(qb[i], qb[i + 1]);
        grew = true;
      }
    }
  }
  return a.then(Permutation(std::move(qa)).inverse());
}

Simple right_complement(const Simple& a) {
  return a.inverse().then(reversal_cached(a.size()));
}

Simple flip_simple(const Simple& a) {
  const Permutation rev = reversal_cached(a.size());
  return rev.then(a).then(rev);
}

// Word reversal is an anti-automorphism of the positive monoid fixing Delta;
// on permutation braids it is inversion. Joins come from meets through the
// complement L(x) = Delta x^{-1}, which reverses divisibility.
Simple simple_join(const Simple& a, const Simple& b) {
  const int n = a.size();
  const Permutation rev = reversal_cached(n);
  auto left_complement = [&](const Simple& x) { return rev.then(x.inverse()); };
  auto join_right = [&](const Simple& x, const Simple& y) {
    Simple m = simple_meet(left_complement(x), left_complement(y));
    return right_complement(m);
  };
  return join_right(a.inverse(), b.inverse()).inverse();
}

BraidWord simple_word(const Simple& s) {
  int n = s.size();
  std::vector<int> letters;
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = s[i];
  bool descent = true;
  while (descent) {
    descent = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (img[i] > img[i + 1]) {
        letters.push_back(i + 1);
        std::swap(img[i], img[i + 1]);
        descent = true;
        break;
      }
    }
  }
  return BraidWord(std::max(n, 2), std::move(letters));
}

std::vector<int> starting_set(const Simple& s) {
  std::vector<int> out;
  for (int i = 0; i + 1 < s.size(); ++i)
    if (s[i] > s[i + 1]) out.push_back(i + 1);
  return out;
}

std::vector<int> finishing_set(const Simple& s) {
  return starting_set(s.inverse());
}

std::string NormalForm::serialize() const {
  std::ostringstream os;
  os << "D^" << inf;
  for (const auto& f : factors) os << " | " << f.one_line();
  return os.str();
}

bool nf_less(const NormalForm& a, const NormalForm& b) {
  if (a.inf != b.inf) return a.inf < b.inf;
  if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
  return a.factors < b.factors;
}

namespace {

// Left-weights a factor sequence in place, extracting Delta powers to the
// front and dropping trivial factors. Each weighting step moves inversions
// strictly leftward, so the loop terminates.
void normalize_factors(long long& inf, std::vector<Simple>& fs) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t j = 0; j < fs.size();) {
      if (fs[j].is_identity()) {
        fs.erase(fs.begin() + static_cast<long>(j));
        changed = true;
      } else if (is_delta_perm(fs[j])) {
        for (size_t k = 0; k < j; ++k) fs[k] = flip_simple(fs[k]);
        fs.erase(fs.begin() + static_cast<long>(j));
        ++inf;
        changed = true;
        j = 0;
      } else {
        ++j;
      }
    }
    for (size_t j1 = fs.size(); j1 >= 2; --j1) {
      size_t j = j1 - 2;
      Simple c = simple_meet(right_complement(fs[j]), fs[j + 1]);
      if (!c.is_identity()) {
        fs[j] = fs[j].then(c);
        fs[j + 1] = c.inverse().then(fs[j + 1]);
        changed = true;
      }
    }
  }
}

NormalForm from_pieces(int n, std::vector<std::pair<long long, Simple>> pieces) {
  // Each piece is Delta^e s; pull all Delta powers to the front.
  long long total = 0;
  for (auto& [e, s] : pieces) total += e;
  long long suffix = 0;
  std::vector<Simple> fs;
  fs.reserve(pieces.size());
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    Simple s = it->second;
    if (suffix % 2 != 0) s = flip_simple(s);
    fs.push_back(std::move(s));
    suffix += it->first;
  }
  std::reverse(fs.begin(), fs.end());
  NormalForm out;
  out.n = n;
  out.inf = total;
  out.factors = std::move(fs);
  normalize_factors(out.inf, out.factors);
  return out;
}

}  // namespace

NormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  std::vector<std::pair<long long, Simple>> pieces;
  pieces.reserve(w.letters().size());
  const Permutation rev = reversal_cached(n);
  for (int l : w.letters()) {
    int i = l < 0 ? -l : l;
    Permutation tau = Permutation::transposition(n, i);
    if (l > 0)
      pieces.emplace_back(0, tau);
    else
      pieces.emplace_back(-1, rev.then(tau));  // sigma_i^-1 = Delta^-1 (Delta sigma_i^-1)
  }
  return from_pieces(n, std::move(pieces));
}

BraidWord nf_to_word(const NormalForm& x) {
  BraidWord out(x.n);
  BraidWord delta = standard_element(StandardElement::HalfTwist, x.n);
  if (x.inf != 0) out = power(delta, x.inf);
  for (const auto& f : x.factors) out = multiply(out, simple_word(f));
  return out;
}

NormalForm nf_delta_power(int n, long long p) {
  NormalForm out;
  out.n = n;
  out.inf = p;
  return out;
}

NormalForm nf_of_simple(int n, const Simple& s) {
  NormalForm out;
  out.n = n;
  if (is_delta_perm(s)) {
    out.inf = 1;
  } else if (!s.is_identity()) {
    out.factors.push_back(s);
  }
  return out;
}

NormalForm nf_multiply(const NormalForm& a, const NormalForm& b) {
  if (a.n != b.n) throw std::invalid_argument("strand count mismatch");
  NormalForm out;
  out.n = a.n;
  out.inf = a.inf + b.inf;
  out.factors.reserve(a.factors.size() + b.factors.size());
  bool flip = (b.inf % 2) != 0;
  for (const auto& f : a.factors) out.factors.push_back(flip ? flip_simple(f) : f);
  for (const auto& f : b.factors) out.factors.push_back(f);
  normalize_factors(out.inf, out.factors);
  return out;
}

NormalForm nf_inverse(const NormalForm& a) {
  std::vector<std::pair<long long, Simple>> pieces;
  pieces.reserve(a.factors.size() + 1);
  for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it)
    pieces.emplace_back(-1, flip_simple(right_complement(*it)));
  pieces.emplace_back(-a.inf, Permutation(a.n));
  return from_pieces(a.n, std::move(pieces));
}

NormalForm nf_power(const NormalForm& a, long long k) {
  NormalForm base = k < 0 ? nf_inverse(a) : a;
  long long reps = k < 0 ? -k : k;
  NormalForm acc = nf_delta_power(a.n, 0);
  while (reps > 0) {
    if (reps & 1) acc = nf_multiply(acc, base);
    base = nf_multiply(base, base);
    reps >>= 1;
  }
  return acc;
}

NormalForm nf_flip(const NormalForm& a) {
  NormalForm out = a;
  for (auto& f : out.factors) f = flip_simple(f);
  return out;
}

NormalForm nf_conjugate(const NormalForm& x, const Simple& s) {
  NormalForm si = nf_inverse(nf_of_simple(x.n, s));
  return nf_multiply(nf_multiply(si, x), nf_of_simple(x.n, s));
}

namespace {

// s v B for a simple s and positive B: peel the factors of B one by one,
// carrying the residual s' = b_1^{-1}(b_1 v s).
NormalForm join_simple_positive(int n, Simple s, const NormalForm& b) {
  assert(b.inf >= 0);
  std::vector<Simple> bf;
  for (long long i = 0; i < b.inf; ++i) bf.push_back(Permutation::reversal(n));
  bf.insert(bf.end(), b.factors.begin(), b.factors.end());
  std::vector<Simple> acc;
  acc.reserve(bf.size() + 1);
  for (size_t k = 0; k < bf.size(); ++k) {
    if (s.is_identity()) {
      acc.insert(acc.end(), bf.begin() + static_cast<long>(k), bf.end());
      break;
    }
    Simple j = simple_join(s, bf[k]);
    acc.push_back(bf[k]);
    s = simple_quotient(bf[k], j);
  }
  NormalForm out;
  out.n = n;
  out.factors = std::move(acc);
  if (!s.is_identity()) out.factors.push_back(s);
  normalize_factors(out.inf, out.factors);
  return out;
}

}  // namespace

NormalForm positive_join(const NormalForm& a, const NormalForm& b) {
  if (a.n != b.n) throw std::invalid_argument("strand count mismatch");
  if (a.inf < 0 || b.inf < 0) throw std::invalid_argument("positive_join needs positive braids");
  const int n = a.n;
  std::vector<Simple> af;
  for (long long i = 0; i < a.inf; ++i) af.push_back(Permutation::reversal(n));
  af.insert(af.end(), a.factors.begin(), a.factors.end());
  NormalForm rest = b;
  std::vector<Simple> acc;
  for (const auto& a1 : af) {
    NormalForm j = join_simple_positive(n, a1, rest);
    acc.push_back(a1);
    rest = nf_multiply(nf_inverse(nf_of_simple(n, a1)), j);
    assert(rest.inf >= 0);
  }
  NormalForm out;
  out.n = n;
  out.factors = std::move(acc);
  normalize_factors(out.inf, out.factors);
  return nf_multiply(out, rest);
}

// g v 1 = Delta^q (P v Delta^{-q}) for g = Delta^q P with q < 0; the
// leading Delta of each P v Delta cancels one Delta^{-1}, so the loop's
// final residue is the answer.
NormalForm positive_part(const NormalForm& g) {
  if (g.inf >= 0) return g;
  const int n = g.n;
  NormalForm p;
  p.n = n;
  p.factors = g.factors;
  for (long long m = -g.inf; m > 0; --m) {
    NormalForm j = join_simple_positive(n, Permutation::reversal(n), p);
    assert(j.inf >= 1);
    j.inf -= 1;
    p = j;
  }
  return p;
}

bool equals(const BraidWord& a, const BraidWord& b) {
  strands_match(a, b);
  return normal_form(a) == normal_form(b);
}

std::optional<long long> full_twist_power(const BraidWord& w) {
  NormalForm x = normal_form(w);
  if (!x.factors.empty() || x.inf % 2 != 0) return std::nullopt;
  return x.inf / 2;
}

ConjugacyCertificate make_certificate(const BraidWord& alpha, const BraidWord& beta,
                                      const BraidWord& witness) {
  ConjugacyCertificate c;
  c.n = alpha.strands();
  c.alpha = alpha;
  c.beta = beta;
  c.witness = witness;
  c.verified = equals(multiply(multiply(inverse(witness), alpha), witness), beta);
  return c;
}

std::pair<NormalForm, BraidWord> cycle_once(const NormalForm& x) {
  if (x.factors.empty()) return {x, BraidWord(x.n)};
  Simple u = x.factors.front();
  if (x.inf % 2 != 0) u = flip_simple(u);
  NormalForm rest;
  rest.n = x.n;
  rest.inf = x.inf;
  rest.factors.assign(x.factors.begin() + 1, x.factors.end());
  NormalForm out = nf_multiply(rest, nf_of_simple(x.n, u));
  return {out, simple_word(u)};
}

std::pair<NormalForm, BraidWord> decycle_once(const NormalForm& x) {
  if (x.factors.empty()) return {x, BraidWord(x.n)};
  Simple last = x.factors.back();
  Simple moved = x.inf % 2 != 0 ? flip_simple(last) : last;
  NormalForm out;
  out.n = x.n;
  out.inf = x.inf;
  out.factors.clear();
  out.factors.push_back(moved);
  out.factors.insert(out.factors.end(), x.factors.begin(), x.factors.end() - 1);
  normalize_factors(out.inf, out.factors);
  return {out, inverse(simple_word(last))};
}

namespace {

bool summit_better(const NormalForm& cand, const NormalForm& cur) {
  if (cand.inf != cur.inf) return cand.inf > cur.inf;
  return cand.canonical_length() < cur.canonical_length();
}

// Iterate op until (inf, -len) improves or the orbit closes.
template <typename Op>
bool orbit_improve(NormalForm& x, BraidWord& conj, Op op) {
  std::set<std::string> seen;
  seen.insert(x.serialize());
  NormalForm y = x;
  BraidWord acc(x.n);
  while (true) {
    auto [y2, u] = op(y);
    acc = multiply(acc, u);
    if (summit_better(y2, x)) {
      x = y2;
      conj = multiply(conj, acc);
      return true;
    }
    std::string key = y2.serialize();
    if (!seen.insert(key).second) return false;
    y = y2;
  }
}

}  // namespace

SummitResult summit_form(const BraidWord& w) {
  NormalForm x = normal_form(w);
  BraidWord conj(w.strands());
  bool improved = true;
  while (improved) {
    improved = orbit_improve(x, conj, [](const NormalForm& y) { return cycle_once(y); });
    if (improved) continue;
    improved = orbit_improve(x, conj, [](const NormalForm& y) { return decycle_once(y); });
  }
  return {x, conj};
}

Simple minimal_summit_conjugator(const NormalForm& x, int atom) {
  const int n = x.n;
  const long long p = x.inf;
  const long long l = x.canonical_length();
  NormalForm z;  // positive part Delta^{-p} x
  z.n = n;
  z.factors = x.factors;
  const bool flip_p = (p % 2) != 0;
  const bool flip_pl = ((p + l) % 2) != 0;

  Simple s = Permutation::transposition(n, atom);
  for (int guard = 0; guard <= n * (n - 1) / 2 + 2; ++guard) {
    NormalForm y = nf_conjugate(x, s);
    if (y.inf < p) {
      // inf repair: need flip^p(s) to divide z s.
      Simple v = flip_p ? flip_simple(s) : s;
      NormalForm g = nf_multiply(nf_inverse(z), nf_of_simple(n, v));
      NormalForm c = positive_part(g);
      NormalForm j = join_simple_positive(n, s, c);
      assert(j.sup() <= 1);
      s = j.inf == 1 ? Permutation::reversal(n) : (j.factors.empty() ? Permutation(n) : j.factors[0]);
      continue;
    }
    if (y.sup() > p + l) {
      // sup repair: need z s to divide Delta^l flip^{p+l}(s).
      NormalForm g = nf_multiply(nf_multiply(nf_delta_power(n, -l), z), nf_of_simple(n, s));
      if (flip_pl) g = nf_flip(g);
      NormalForm c = positive_part(g);
      NormalForm j = join_simple_positive(n, s, c);
      assert(j.sup() <= 1);
      s = j.inf == 1 ? Permutation::reversal(n) : (j.factors.empty() ? Permutation(n) : j.factors[0]);
      continue;
    }
    return s;
  }
  throw std::logic_error("minimal summit conjugator did not converge");
}

SummitEnumeration enumerate_summit_set(const BraidWord& w, long long budget,
                                       const std::optional<NormalForm>& stop) {
  SummitEnumeration out;
  auto [x0, c0] = summit_form(w);
  const int n = w.strands();

  auto cmp = [](const NormalForm& a, const NormalForm& b) { return nf_less(a, b); };
  std::map<NormalForm, BraidWord, decltype(cmp)> known(cmp);
  known.emplace(x0, c0);
  std::vector<NormalForm> layer{x0};

  if (stop && x0 == *stop) {
    out.complete = false;
    out.elements.push_back({x0, c0});
    out.found = 0;
    return out;
  }

  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), nf_less);
    std::vector<NormalForm> next;
    for (const auto& y : layer) {
      const BraidWord conj_y = known.at(y);
      for (int atom = 1; atom <= n - 1; ++atom) {
        Simple rho = minimal_summit_conjugator(y, atom);
        NormalForm z = nf_conjugate(y, rho);
        assert(z.inf == x0.inf && z.canonical_length() == x0.canonical_length());
        if (known.count(z)) continue;
        BraidWord conj_z = multiply(conj_y, simple_word(rho));
        known.emplace(z, conj_z);
        next.push_back(z);
        if (stop && z == *stop) {
          out.complete = false;
          out.elements.push_back({z, conj_z});
          out.found = 0;
          return out;
        }
        if (static_cast<long long>(known.size()) > budget) {
          out.complete = false;
          for (auto& [nf, cj] : known) out.elements.push_back({nf, cj});
          return out;
        }
      }
    }
    layer = std::move(next);
  }
  out.complete = true;
  out.elements.reserve(known.size());
  for (auto& [nf, cj] : known) out.elements.push_back({nf, cj});
  if (stop) out.found = std::nullopt;
  return out;
}

ConjugacyResult conjugacy_test(const BraidWord& a, const BraidWord& b, long long budget) {
  strands_match(a, b);
  ConjugacyResult res;
  if (exponent_sum(a) != exponent_sum(b)) {
    res.status = ConjugacyStatus::NotConjugate;
    return res;
  }
  SummitResult sa = summit_form(a);
  SummitResult sb = summit_form(b);
  if (sa.form.inf != sb.form.inf ||
      sa.form.canonical_length() != sb.form.canonical_length()) {
    res.status = ConjugacyStatus::NotConjugate;
    return res;
  }
  BraidWord witness(a.strands());
  if (sa.form == sb.form) {
    witness = multiply(sa.conjugator, inverse(sb.conjugator));
  } else {
    SummitEnumeration en = enumerate_summit_set(a, budget, sb.form);
    if (en.found) {
      witness = multiply(en.elements[*en.found].conjugator, inverse(sb.conjugator));
    } else if (en.complete) {
      res.status = ConjugacyStatus::NotConjugate;
      return res;
    } else {
      res.status = ConjugacyStatus::Unknown;
      return res;
    }
  }
  ConjugacyCertificate cert = make_certificate(a, b, witness);
  if (!cert.verified) throw std::logic_error("conjugacy witness failed verification");
  res.status = ConjugacyStatus::Conjugate;
  res.certificate = std::move(cert);
  return res;
}

std::vector<BraidWord> centralizer_samples(const BraidWord& w, long long budget,
                                           size_t max_count) {
  std::vector<BraidWord> out;
  auto [x0, c0] = summit_form(w);
  const int n = w.strands();
  auto cmp = [](const NormalForm& a, const NormalForm& b) { return nf_less(a, b); };
  std::map<NormalForm, BraidWord, decltype(cmp)> known(cmp);
  known.emplace(x0, c0);
  std::vector<NormalForm> layer{x0};
  while (!layer.empty() && out.size() < max_count) {
    std::sort(layer.begin(), layer.end(), nf_less);
    std::vector<NormalForm> next;
    for (const auto& y : layer) {
      const BraidWord conj_y = known.at(y);
      for (int atom = 1; atom <= n - 1 && out.size() < max_count; ++atom) {
        Simple rho = minimal_summit_conjugator(y, atom);
        NormalForm z = nf_conjugate(y, rho);
        auto it = known.find(z);
        if (it != known.end()) {
          BraidWord g = multiply(conj_y, multiply(simple_word(rho), inverse(it->second)));
          if (!g.is_identity_word() && !equals(g, BraidWord(n))) out.push_back(g);
          continue;
        }
        BraidWord conj_z = multiply(conj_y, simple_word(rho));
        known.emplace(z, conj_z);
        next.push_back(z);
        if (static_cast<long long>(known.size()) > budget) return out;
      }
    }
    layer = std::move(next);
  }
  return out;
}

CanonicalRep canonical_rep(const BraidWord& w, long long budget) {
  CanonicalRep out;
  SummitEnumeration en = enumerate_summit_set(w, budget);
  out.complete = en.complete;
  if (!en.complete) return out;
  size_t best = 0;
  for (size_t i = 1; i < en.elements.size(); ++i)
    if (nf_less(en.elements[i].form, en.elements[best].form)) best = i;
  out.form = en.elements[best].form;
  out.conjugator = en.elements[best].conjugator;
  return out;
}

}  // namespace braids
