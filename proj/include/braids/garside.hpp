#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braids/word.hpp"

namespace braids {

// Simple elements (positive permutation braids) are identified with their
// strand-motion permutations. All divisibility below is prefix order:
// s divides t iff s^{-1} t is a positive braid.

using Simple = Permutation;

int inversions(const Permutation& p);
bool is_delta_perm(const Simple& s);
bool simple_divides(const Simple& s, const Simple& t);
Simple simple_quotient(const Simple& s, const Simple& t);  // s^{-1} t, requires s | t
Simple simple_meet(const Simple& a, const Simple& b);
Simple simple_join(const Simple& a, const Simple& b);
Simple right_complement(const Simple& a);  // a^{-1} Delta
Simple flip_simple(const Simple& a);       // Delta^{-1} a Delta
BraidWord simple_word(const Simple& s);    // a positive reduced word for s
std::vector<int> starting_set(const Simple& s);
std::vector<int> finishing_set(const Simple& s);

// Left canonical form Delta^inf f_1 ... f_len with proper left-weighted factors.
struct NormalForm {
  int n = 2;
  long long inf = 0;
  std::vector<Simple> factors;

  int canonical_length() const { return static_cast<int>(factors.size()); }
  long long sup() const { return inf + canonical_length(); }
  bool is_identity() const { return inf == 0 && factors.empty(); }

  std::string serialize() const;  // "D^<p> | <perm> | ..."
  bool operator==(const NormalForm&) const = default;
};

// Canonical total order: lexicographic on (inf, factor count, factors).
bool nf_less(const NormalForm& a, const NormalForm& b);

NormalForm normal_form(const BraidWord& w);
BraidWord nf_to_word(const NormalForm& x);
NormalForm nf_delta_power(int n, long long p);
NormalForm nf_of_simple(int n, const Simple& s);
NormalForm nf_multiply(const NormalForm& a, const NormalForm& b);
NormalForm nf_inverse(const NormalForm& a);
NormalForm nf_power(const NormalForm& a, long long k);
NormalForm nf_flip(const NormalForm& a);
NormalForm nf_conjugate(const NormalForm& x, const Simple& s);  // s^{-1} x s

// Positive part g v 1 in prefix order; join of positive braids.
NormalForm positive_join(const NormalForm& a, const NormalForm& b);
NormalForm positive_part(const NormalForm& g);

bool equals(const BraidWord& a, const BraidWord& b);
std::optional<long long> full_twist_power(const BraidWord& w);

struct ConjugacyCertificate {
  int n = 2;
  BraidWord alpha;
  BraidWord beta;
  BraidWord witness;  // witness^{-1} alpha witness = beta
  bool verified = false;
};

ConjugacyCertificate make_certificate(const BraidWord& alpha, const BraidWord& beta,
                                      const BraidWord& witness);

struct SummitResult {
  NormalForm form;
  BraidWord conjugator;  // conjugator^{-1} w conjugator = form
};

// Cycling and decycling on normal forms; second member is the conjugator.
std::pair<NormalForm, BraidWord> cycle_once(const NormalForm& x);
std::pair<NormalForm, BraidWord> decycle_once(const NormalForm& x);

SummitResult summit_form(const BraidWord& w);

// Minimal simple element s with atom | s and s^{-1} x s in the super summit
// set; x itself must lie in the SSS.
Simple minimal_summit_conjugator(const NormalForm& x, int atom);

struct SummitSetElement {
  NormalForm form;
  BraidWord conjugator;  // from the original input braid
};

struct SummitEnumeration {
  bool complete = false;  // the whole super summit set fits in the budget
  std::vector<SummitSetElement> elements;
  std::optional<size_t> found;  // index of the stop element when requested
};

SummitEnumeration enumerate_summit_set(const BraidWord& w, long long budget,
                                       const std::optional<NormalForm>& stop = std::nullopt);

enum class ConjugacyStatus { Conjugate, NotConjugate, Unknown };

struct ConjugacyResult {
  ConjugacyStatus status = ConjugacyStatus::Unknown;
  std::optional<ConjugacyCertificate> certificate;
};

ConjugacyResult conjugacy_test(const BraidWord& a, const BraidWord& b, long long budget);

// Minimal super-summit element under nf_less, with a verifying conjugator.
struct CanonicalRep {
  bool complete = false;  // false: budget exhausted, representative unreliable
  NormalForm form;
  BraidWord conjugator;
};

CanonicalRep canonical_rep(const BraidWord& w, long long budget);

// Nontrivial elements commuting with w, harvested from the closing edges of
// the summit-set graph; at most max_count of them.
std::vector<BraidWord> centralizer_samples(const BraidWord& w, long long budget,
                                           size_t max_count);

}  // namespace braids
