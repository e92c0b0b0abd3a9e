#include "braids/periodic.hpp"

#include <stdexcept>

namespace braids {

bool is_periodic(const BraidWord& w) {
  const int n = w.strands();
  if (full_twist_power(power(w, n)).has_value()) return true;
  return full_twist_power(power(w, n - 1)).has_value();
}

PeriodicClass classify_periodic(const BraidWord& w) {
  if (!is_periodic(w)) throw std::invalid_argument("braid is not periodic");
  const int n = w.strands();
  const long long s = exponent_sum(w);
  PeriodicClass cls;
  cls.n = n;
  const long long full = static_cast<long long>(n) * (n - 1);
  if (s % full == 0) {
    cls.base = PeriodicBase::Central;
    cls.t = s / full;
  } else if (s % (n - 1) == 0) {
    cls.base = PeriodicBase::Delta;
    cls.t = s / (n - 1);
  } else if (s % n == 0) {
    cls.base = PeriodicBase::Gamma;
    cls.t = s / n;
  } else {
    throw std::logic_error("periodic braid with impossible exponent sum");
  }
  return cls;
}

BraidWord periodic_standard_word(const PeriodicClass& cls) {
  switch (cls.base) {
    case PeriodicBase::Delta:
      return power(standard_element(StandardElement::Delta, cls.n), cls.t);
    case PeriodicBase::Gamma:
      return power(standard_element(StandardElement::Gamma, cls.n), cls.t);
    case PeriodicBase::Central:
      return power(standard_element(StandardElement::HalfTwist, cls.n), 2 * cls.t);
  }
  throw std::logic_error("bad periodic base");
}

StandardizeResult standardize_periodic(const BraidWord& w, long long budget) {
  StandardizeResult out;
  out.cls = classify_periodic(w);
  BraidWord target = periodic_standard_word(out.cls);
  ConjugacyResult res = conjugacy_test(w, target, budget);
  if (res.status == ConjugacyStatus::Unknown) {
    out.known = false;
    return out;
  }
  if (res.status != ConjugacyStatus::Conjugate)
    throw std::logic_error("periodic braid not conjugate to its standard power");
  out.known = true;
  out.certificate = *res.certificate;
  return out;
}

}  // namespace braids
