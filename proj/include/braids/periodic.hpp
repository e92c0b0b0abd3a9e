#pragma once

#include <optional>

#include "braids/garside.hpp"

namespace braids {

enum class PeriodicBase { Delta, Gamma, Central };

struct PeriodicClass {
  PeriodicBase base = PeriodicBase::Central;
  long long t = 0;
  int n = 2;
};

// Periodic braids are the roots of powers of the full twist. A braid on n
// strands is periodic iff w^n or w^{n-1} is a power of Delta^2.
bool is_periodic(const BraidWord& w);

// Requires is_periodic(w). The base and exponent follow from the exponent
// sum: s = (n-1)t gives delta^t, s = nt gives gamma^t, and the ambiguous
// s = n(n-1)q is reported as the central element Delta^{2q}.
PeriodicClass classify_periodic(const BraidWord& w);

// The standard element the class describes: delta^t, gamma^t or Delta^{2t}.
BraidWord periodic_standard_word(const PeriodicClass& cls);

struct StandardizeResult {
  bool known = false;  // false: summit search exceeded the budget
  ConjugacyCertificate certificate;
  PeriodicClass cls;
};

// Verified certificate conjugating w onto its standard power.
StandardizeResult standardize_periodic(const BraidWord& w, long long budget = 10000);

}  // namespace braids
