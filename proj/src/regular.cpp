#include "braids/regular.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <numeric>
#include <stdexcept>

namespace braids {

namespace {

TubularDecomposition conj_dec(const TubularDecomposition& d, const TubularDecomposition& by) {
  return dec_product(dec_inverse(by), dec_product(d, by));
}

}  // namespace

BraidWord orbit_interior_product(const TubularDecomposition& d, const std::vector<int>& orbit) {
  BraidWord prod(d.block_size(orbit.front()));
  for (int u : orbit) prod = multiply(prod, d.interior_at(u));
  return prod;
}

TubularDecomposition mu_element(const TubularDecomposition& d) {
  OrbitStructure orb = orbits(d);
  std::map<int, BraidWord> interiors;
  for (const auto& orbit : orb.orbits) {
    BraidWord suffix(d.block_size(orbit.front()));
    for (auto it = orbit.rbegin(); it != orbit.rend(); ++it) {
      suffix = multiply(d.interior_at(*it), suffix);
      interiors.emplace(*it, suffix);
    }
  }
  std::vector<BraidWord> ordered;
  for (int u : d.circle_positions()) ordered.push_back(interiors.at(u));
  return TubularDecomposition(d.ambient_strands(), d.curves(),
                              BraidWord(d.tubular_strands()), std::move(ordered));
}

std::optional<NuResult> nu_element(const TubularDecomposition& d_prime, long long budget) {
  OrbitStructure orb = orbits(d_prime);
  for (const auto& orbit : orb.orbits)
    for (size_t u = 0; u + 1 < orbit.size(); ++u)
      if (!equals(d_prime.interior_at(orbit[u]), BraidWord(d_prime.block_size(orbit[u]))))
        throw std::invalid_argument("interiors must be trivial away from the last tubes");

  std::map<int, BraidWord> nu_at;
  std::vector<BraidWord> kappa;
  for (const auto& orbit : orb.orbits) {
    const BraidWord& prod = d_prime.interior_at(orbit.back());
    CanonicalRep rep = canonical_rep(prod, budget);
    if (!rep.complete) return std::nullopt;
    kappa.push_back(nf_to_word(rep.form));
    for (int u : orbit) nu_at.emplace(u, rep.conjugator);
  }
  std::vector<BraidWord> nu_interiors;
  for (int u : d_prime.circle_positions()) nu_interiors.push_back(nu_at.at(u));
  NuResult out{TubularDecomposition(d_prime.ambient_strands(), d_prime.curves(),
                                    BraidWord(d_prime.tubular_strands()),
                                    std::move(nu_interiors)),
               std::move(kappa)};
  return out;
}

std::optional<RegularFormResult> to_regular_form(const TubularDecomposition& d,
                                                 long long budget) {
  TubularDecomposition mu = mu_element(d);
  TubularDecomposition transfused = conj_dec(d, mu);
  std::optional<NuResult> nu = nu_element(transfused, budget);
  if (!nu) return std::nullopt;
  RegularFormResult out{conj_dec(transfused, nu->nu),
                        embed(dec_product(mu, nu->nu)),
                        std::move(nu->kappa)};
  return out;
}

Check is_regular_form(const TubularDecomposition& d, long long budget) {
  OrbitStructure orb = orbits(d);
  for (const auto& orbit : orb.orbits)
    for (size_t u = 0; u + 1 < orbit.size(); ++u)
      if (!d.interior_at(orbit[u]).is_identity_word() &&
          !equals(d.interior_at(orbit[u]), BraidWord(d.block_size(orbit[u]))))
        return Check::No;

  bool unknown = false;
  for (size_t i = 0; i < orb.orbits.size(); ++i) {
    for (size_t j = i + 1; j < orb.orbits.size(); ++j) {
      const BraidWord& x = d.interior_at(orb.orbits[i].back());
      const BraidWord& y = d.interior_at(orb.orbits[j].back());
      if (x.strands() != y.strands()) continue;
      if (equals(x, y)) continue;
      ConjugacyResult c = conjugacy_test(x, y, budget);
      if (c.status == ConjugacyStatus::Conjugate) return Check::No;
      if (c.status == ConjugacyStatus::Unknown) unknown = true;
    }
  }
  return unknown ? Check::Unknown : Check::Yes;
}

BraidWord orbit_swap_element(StandardElement kind, long long s, int r, int i, int m) {
  if (m < 2) throw std::invalid_argument("need at least two strands");
  if (kind == StandardElement::Delta) {
    long long sbar = ((s % m) + m) % m;
    long long g = std::gcd<long long>(m, sbar);
    int orbit_count = static_cast<int>(g);
    if (r != m / orbit_count)
      throw std::invalid_argument("orbit length r does not match delta^s");
    if (i < 1 || i >= orbit_count)
      throw std::invalid_argument("orbit index out of range for delta^s");
    BraidWord base = multiply(BraidWord(m, {i}),
                              power(standard_element(StandardElement::Delta, m), s));
    return power(base, r);
  }
  if (kind == StandardElement::Gamma) {
    long long sbar = ((s % (m - 1)) + (m - 1)) % (m - 1);
    long long g = std::gcd<long long>(m - 1, sbar);
    int moving = static_cast<int>((m - 1) / g);
    if (moving <= 1)
      throw std::invalid_argument("gamma^s is central here; use the delta form");
    if (r != moving) throw std::invalid_argument("orbit length r does not match gamma^s");
    int orbit_count = 1 + static_cast<int>(g);
    if (i < 2 || i >= orbit_count)
      throw std::invalid_argument("orbit index out of range for gamma^s");
    BraidWord base = multiply(BraidWord(m, {i}),
                              power(standard_element(StandardElement::Gamma, m), s));
    return power(base, r);
  }
  throw std::invalid_argument("orbit swaps exist for delta and gamma powers only");
}

namespace {

struct OrbitKey {
  int length;
  int size;
  std::string kappa;
  auto operator<=>(const OrbitKey&) const = default;
};

OrbitKey key_of(const TubularDecomposition& d, const std::vector<int>& orbit,
                const BraidWord& kappa) {
  return {static_cast<int>(orbit.size()), d.block_size(orbit.front()),
          normal_form(kappa).serialize()};
}

// Point orbits of the standard periodic braid on m strands, each sorted, in
// increasing order of minimum; delta^s has gcd-many, gamma^s keeps {1} fixed.
std::vector<std::vector<int>> standard_orbits(const BraidWord& std_word) {
  Permutation motion = motion_permutation(std_word);
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<size_t>(motion.size() + 1), 0);
  for (int u = 1; u <= motion.size(); ++u) {
    if (seen[static_cast<size_t>(u)]) continue;
    std::vector<int> orbit;
    int v = u;
    while (!seen[static_cast<size_t>(v)]) {
      seen[static_cast<size_t>(v)] = 1;
      orbit.push_back(v);
      v = motion.image_one_based(v);
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int orbit_index_of(const std::vector<std::vector<int>>& orbits_list, int position) {
  for (size_t k = 0; k < orbits_list.size(); ++k)
    if (std::find(orbits_list[k].begin(), orbits_list[k].end(), position) !=
        orbits_list[k].end())
      return static_cast<int>(k);
  throw std::logic_error("position missing from orbit list");
}

// Realizes the permutation pi of the standard braid's orbits (0-based over
// the movable range [lo, t)) as a product of adjacent swap elements.
BraidWord realize_orbit_permutation(StandardElement kind, long long s, int r, int m,
                                    std::vector<int> pi, int lo) {
  BraidWord word(m);
  const int t = static_cast<int>(pi.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int o = lo; o + 1 < t; ++o) {
      // bubble: swap whenever the targets are out of order
      if (pi[static_cast<size_t>(o)] > pi[static_cast<size_t>(o + 1)]) {
        word = multiply(word, orbit_swap_element(kind, s, r, o + 1, m));
        std::swap(pi[static_cast<size_t>(o)], pi[static_cast<size_t>(o + 1)]);
        changed = true;
      }
    }
  }
  return word;
}

}  // namespace

ConjugacyResult regular_conjugacy_test(const RegularFormResult& a, const RegularFormResult& b,
                                       long long budget) {
  const TubularDecomposition& da = a.regular;
  const TubularDecomposition& db = b.regular;
  if (da.ambient_strands() != db.ambient_strands() || !(da.curves() == db.curves()))
    throw std::invalid_argument("regular forms live over different curve systems");

  ConjugacyResult res;
  BraidWord ea = embed(da), eb = embed(db);
  if (exponent_sum(ea) != exponent_sum(eb)) {
    res.status = ConjugacyStatus::NotConjugate;
    return res;
  }
  if (equals(ea, eb)) {
    res.status = ConjugacyStatus::Conjugate;
    res.certificate = make_certificate(ea, eb, BraidWord(ea.strands()));
    return res;
  }

  OrbitStructure orbA = orbits(da), orbB = orbits(db);
  if (orbA.orbits.size() != b.kappa.size() || orbA.orbits.size() != a.kappa.size() ||
      orbB.orbits.size() != b.kappa.size()) {
    if (orbA.orbits.size() != orbB.orbits.size()) {
      res.status = ConjugacyStatus::NotConjugate;
      return res;
    }
  }

  std::multiset<OrbitKey> profA, profB;
  for (size_t i = 0; i < orbA.orbits.size(); ++i)
    profA.insert(key_of(da, orbA.orbits[i], a.kappa[i]));
  for (size_t j = 0; j < orbB.orbits.size(); ++j)
    profB.insert(key_of(db, orbB.orbits[j], b.kappa[j]));
  if (profA != profB) {
    res.status = ConjugacyStatus::NotConjugate;
    return res;
  }

  const BraidWord& ta = da.tubular();
  const BraidWord& tb = db.tubular();
  const int m = da.tubular_strands();

  auto finish_with_eta = [&](const BraidWord& eta) -> std::optional<ConjugacyCertificate> {
    // eta must conjugate the tubular braids and induce a kappa-compatible
    // orbit matching with size-compatible motion.
    if (!equals(multiply(multiply(inverse(eta), ta), eta), tb)) return std::nullopt;
    Permutation motion = motion_permutation(eta);
    for (int u = 1; u <= m; ++u) {
      int v = motion.image_one_based(u);
      if (da.strands()[static_cast<size_t>(u - 1)] != db.strands()[static_cast<size_t>(v - 1)])
        return std::nullopt;
    }
    for (size_t i = 0; i < orbA.orbits.size(); ++i) {
      int v = motion.image_one_based(orbA.orbits[i].front());
      size_t j = 0;
      while (j < orbB.orbits.size() &&
             std::find(orbB.orbits[j].begin(), orbB.orbits[j].end(), v) ==
                 orbB.orbits[j].end())
        ++j;
      if (j == orbB.orbits.size()) return std::nullopt;
      if (normal_form(a.kappa[i]) != normal_form(b.kappa[j])) return std::nullopt;
    }
    TubularDecomposition lift =
        make_decomposition(da.ambient_strands(), da.curves(), eta,
                           identity_decomposition(da.ambient_strands(), da.curves()).interiors());
    TubularDecomposition a1 = dec_product(dec_inverse(lift), dec_product(da, lift));
    TubularDecomposition mu1 = mu_element(a1);
    BraidWord witness = multiply(embed(lift), embed(mu1));
    ConjugacyCertificate cert = make_certificate(ea, eb, witness);
    if (!cert.verified) return std::nullopt;
    return cert;
  };

  std::optional<ConjugacyCertificate> cert;
  bool tubular_unknown = false;

  if (is_periodic(ta)) {
    StandardizeResult za = standardize_periodic(ta, budget);
    StandardizeResult zb = standardize_periodic(tb, budget);
    if (!za.known || !zb.known) {
      res.status = ConjugacyStatus::Unknown;
      return res;
    }
    if (za.cls.base == zb.cls.base && za.cls.t == zb.cls.t) {
      BraidWord std_word = periodic_standard_word(za.cls);
      auto sorb = standard_orbits(std_word);
      const int t = static_cast<int>(sorb.size());
      Permutation ma = motion_permutation(za.certificate.witness);
      Permutation mb = motion_permutation(zb.certificate.witness);
      // standard-orbit slot of every a-orbit and b-orbit
      std::vector<int> slotA(orbA.orbits.size()), slotB(orbB.orbits.size());
      for (size_t i = 0; i < orbA.orbits.size(); ++i)
        slotA[i] = orbit_index_of(sorb, ma.image_one_based(orbA.orbits[i].front()));
      for (size_t j = 0; j < orbB.orbits.size(); ++j)
        slotB[j] = orbit_index_of(sorb, mb.image_one_based(orbB.orbits[j].front()));
      bool gamma_kind = za.cls.base == PeriodicBase::Gamma;
      // kappa-compatible matching, greedy inside equal keys; for gamma the
      // length-one orbit in slot 0 can only pair with its counterpart
      std::vector<int> match(orbA.orbits.size(), -1);
      std::vector<char> used(orbB.orbits.size(), 0);
      for (size_t i = 0; i < orbA.orbits.size(); ++i) {
        OrbitKey ka = key_of(da, orbA.orbits[i], a.kappa[i]);
        for (size_t j = 0; j < orbB.orbits.size(); ++j) {
          if (used[j]) continue;
          if (gamma_kind && (slotA[i] == 0) != (slotB[j] == 0)) continue;
          if (key_of(db, orbB.orbits[j], b.kappa[j]) == ka) {
            match[i] = static_cast<int>(j);
            used[j] = 1;
            break;
          }
        }
      }
      bool matched = std::all_of(match.begin(), match.end(), [](int v) { return v >= 0; });
      if (matched) {
        // permutation of the standard orbits: matched slots follow the
        // matching, the remaining slots pair off in increasing order
        std::vector<int> pi(static_cast<size_t>(t), -1);
        std::vector<char> target_used(static_cast<size_t>(t), 0);
        for (size_t i = 0; i < match.size(); ++i) {
          pi[static_cast<size_t>(slotA[i])] = slotB[static_cast<size_t>(match[i])];
          target_used[static_cast<size_t>(slotB[static_cast<size_t>(match[i])])] = 1;
        }
        std::vector<int> rest_targets;
        for (int o = 0; o < t; ++o)
          if (!target_used[static_cast<size_t>(o)]) rest_targets.push_back(o);
        size_t rk = 0;
        for (int o = 0; o < t; ++o)
          if (pi[static_cast<size_t>(o)] < 0) pi[static_cast<size_t>(o)] = rest_targets[rk++];
        int lo = gamma_kind ? 1 : 0;
        bool fixed_ok = !gamma_kind || pi[0] == 0;
        if (fixed_ok) {
          int r = t > 0 ? static_cast<int>(sorb.back().size()) : 1;
          long long s_exp = za.cls.t;
          StandardElement kind =
              gamma_kind ? StandardElement::Gamma : StandardElement::Delta;
          if (za.cls.base == PeriodicBase::Central) {
            // central standard braid: every position is its own orbit
            kind = StandardElement::Delta;
            s_exp = static_cast<long long>(za.cls.t) * m;
            r = 1;
          }
          BraidWord swap = realize_orbit_permutation(kind, s_exp, r, m, pi, lo);
          BraidWord eta =
              multiply(za.certificate.witness, multiply(swap, inverse(zb.certificate.witness)));
          cert = finish_with_eta(eta);
        }
      }
    }
  } else {
    if (equals(ta, tb)) {
      cert = finish_with_eta(BraidWord(m));
    }
    if (!cert) {
      ConjugacyResult ct = conjugacy_test(ta, tb, budget);
      if (ct.status == ConjugacyStatus::NotConjugate) {
        res.status = ConjugacyStatus::NotConjugate;
        return res;
      }
      if (ct.status == ConjugacyStatus::Unknown) {
        tubular_unknown = true;
      } else {
        cert = finish_with_eta(ct.certificate->witness);
        if (!cert) {
          // bounded fallback: twist the witness by sampled centralizer loops
          for (const BraidWord& c : centralizer_samples(ta, budget, 16)) {
            cert = finish_with_eta(multiply(c, ct.certificate->witness));
            if (cert) break;
          }
        }
      }
    }
  }

  if (cert) {
    res.status = ConjugacyStatus::Conjugate;
    res.certificate = std::move(cert);
    return res;
  }
  res.status = ConjugacyStatus::Unknown;
  (void)tubular_unknown;
  return res;
}

}  // namespace braids
