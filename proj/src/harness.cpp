#include "braids/harness.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "braids/rng.hpp"

#include <json.hpp>

namespace braids {

std::string to_string(TrialOutcome o) {
  switch (o) {
    case TrialOutcome::CertifiedConjugate: return "CertifiedConjugate";
    case TrialOutcome::Equal: return "Equal";
    case TrialOutcome::Unknown: return "Unknown";
    case TrialOutcome::PreconditionFailed: return "PreconditionFailed";
  }
  return "?";
}

std::string to_string(InstanceFamily f) {
  switch (f) {
    case InstanceFamily::F1PeriodicCentral: return "F1";
    case InstanceFamily::F2Equal: return "F2";
    case InstanceFamily::F3ReducibleOrbitSwap: return "F3";
    case InstanceFamily::F4Negative: return "F4";
  }
  return "?";
}

std::optional<InstanceFamily> family_from_string(const std::string& s) {
  if (s == "F1") return InstanceFamily::F1PeriodicCentral;
  if (s == "F2") return InstanceFamily::F2Equal;
  if (s == "F3") return InstanceFamily::F3ReducibleOrbitSwap;
  if (s == "F4") return InstanceFamily::F4Negative;
  return std::nullopt;
}

namespace {

NormalForm nf_of_power(const BraidWord& w, long long k) {
  return nf_power(normal_form(w), k);
}

BraidWord conj_word(const BraidWord& w, const BraidWord& by) {
  return multiply(multiply(inverse(by), w), by);
}

TubularDecomposition conj_dec(const TubularDecomposition& d, const TubularDecomposition& by) {
  return dec_product(dec_inverse(by), dec_product(d, by));
}

std::vector<std::vector<int>> point_orbits(const BraidWord& w) {
  Permutation motion = motion_permutation(w);
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

int orbit_index_of(const std::vector<std::vector<int>>& list, int position) {
  for (size_t k = 0; k < list.size(); ++k)
    if (std::find(list[k].begin(), list[k].end(), position) != list[k].end())
      return static_cast<int>(k);
  throw std::logic_error("position missing from orbit list");
}

// Both braids reducible along the same curves with garside-equal tubular
// parts: recurse on the orbitwise interior products.
std::optional<PowersResult> tubular_equal_path(const BraidWord& alpha, const BraidWord& beta,
                                               long long k, const DecompositionHints& hints,
                                               long long budget) {
  const TubularDecomposition& da = hints.alpha;
  const TubularDecomposition& db = hints.beta;
  OrbitStructure orb = orbits(da);

  std::map<int, BraidWord> nu_at;
  for (const auto& orbit : orb.orbits) {
    BraidWord x = orbit_interior_product(da, orbit);
    BraidWord y = orbit_interior_product(db, orbit);
    long long r = static_cast<long long>(orbit.size());
    long long p = k / std::gcd(k < 0 ? -k : k, r);
    PowersResult rec = conjugacy_via_powers(x, y, p, std::nullopt, budget);
    if (rec.outcome == TrialOutcome::Unknown) {
      PowersResult out;
      out.outcome = TrialOutcome::Unknown;
      return out;
    }
    if (rec.outcome == TrialOutcome::PreconditionFailed)
      throw std::logic_error("interior powers of equal powers differ");
    BraidWord w = rec.outcome == TrialOutcome::Equal ? BraidWord(x.strands())
                                                     : rec.certificate->witness;
    for (int u : orbit) nu_at.emplace(u, w);
  }
  TubularDecomposition mu_a = mu_element(da);
  TubularDecomposition mu_b = mu_element(db);
  std::vector<BraidWord> nu_interiors;
  for (int u : da.circle_positions()) nu_interiors.push_back(nu_at.at(u));
  TubularDecomposition nu(da.ambient_strands(), da.curves(),
                          BraidWord(da.tubular_strands()), std::move(nu_interiors));
  BraidWord witness = multiply(embed(mu_a), multiply(embed(nu), inverse(embed(mu_b))));
  ConjugacyCertificate cert = make_certificate(alpha, beta, witness);
  if (!cert.verified) throw std::logic_error("reducible witness failed verification");
  PowersResult out;
  out.outcome = TrialOutcome::CertifiedConjugate;
  out.certificate = std::move(cert);
  return out;
}

struct OrbitData {
  std::vector<int> positions;  // orbit listing
  BraidWord product;
  int size = 2;  // circle size
  int length = 1;
};

// Tubular parts periodic: standardize them, match the orbits through
// recursive root comparison of the interior products, realize the matching
// inside the centralizer of the standard power, then align tubes.
std::optional<PowersResult> tubular_periodic_path(const BraidWord& alpha, const BraidWord& beta,
                                                  long long k, const DecompositionHints& hints,
                                                  long long budget) {
  const TubularDecomposition& da = hints.alpha;
  const TubularDecomposition& db = hints.beta;
  const int m = da.tubular_strands();
  PowersResult unknown;
  unknown.outcome = TrialOutcome::Unknown;

  StandardizeResult za = standardize_periodic(da.tubular(), budget);
  StandardizeResult zb = standardize_periodic(db.tubular(), budget);
  if (!za.known || !zb.known) return unknown;
  if (za.cls.base != zb.cls.base || za.cls.t != zb.cls.t)
    throw std::logic_error("tubular braids of equal powers in distinct periodic classes");

  auto collect = [](const TubularDecomposition& d) {
    std::vector<OrbitData> out;
    for (const auto& orbit : orbits(d).orbits) {
      OrbitData o;
      o.positions = orbit;
      o.product = orbit_interior_product(d, orbit);
      o.size = d.block_size(orbit.front());
      o.length = static_cast<int>(orbit.size());
      out.push_back(std::move(o));
    }
    return out;
  };
  std::vector<OrbitData> oa = collect(da), ob = collect(db);
  if (oa.size() != ob.size()) throw std::logic_error("orbit counts of equal powers differ");

  long long bigk = k;
  for (const auto& o : oa) bigk = std::lcm(bigk < 0 ? -bigk : bigk, static_cast<long long>(o.length));
  if (k < 0) bigk = -bigk;

  // kappa matching through the recursion, with explicit witnesses
  std::vector<int> match(oa.size(), -1);
  std::vector<BraidWord> wit(oa.size());
  std::vector<char> used(ob.size(), 0);
  bool saw_unknown = false;
  for (size_t i = 0; i < oa.size(); ++i) {
    long long p = bigk / oa[i].length;
    NormalForm xp = nf_of_power(oa[i].product, p);
    (void)xp;
    for (size_t j = 0; j < ob.size(); ++j) {
      if (used[j] || ob[j].size != oa[i].size || ob[j].length != oa[i].length) continue;
      // conjugate the p-th powers first; transporting x along the witness
      // makes the powers equal on the nose, which lets the recursion run
      ConjugacyResult cx = conjugacy_test(power(oa[i].product, p), power(ob[j].product, p), budget);
      if (cx.status != ConjugacyStatus::Conjugate) {
        if (cx.status == ConjugacyStatus::Unknown) saw_unknown = true;
        continue;
      }
      BraidWord xi = cx.certificate->witness;
      PowersResult rec =
          conjugacy_via_powers(conj_word(oa[i].product, xi), ob[j].product, p, std::nullopt, budget);
      if (rec.outcome == TrialOutcome::Unknown) {
        saw_unknown = true;
        continue;
      }
      if (rec.outcome == TrialOutcome::PreconditionFailed)
        throw std::logic_error("transported interior powers differ");
      BraidWord w = rec.outcome == TrialOutcome::Equal
                        ? BraidWord(oa[i].product.strands())
                        : rec.certificate->witness;
      match[i] = static_cast<int>(j);
      wit[i] = multiply(xi, w);
      used[j] = 1;
      break;
    }
    if (match[i] < 0) {
      if (saw_unknown) return unknown;
      throw std::logic_error("no interior matching although powers agree");
    }
  }

  // realize the orbit matching in the centralizer of the standard power
  BraidWord std_word = periodic_standard_word(za.cls);
  auto sorb = point_orbits(std_word);
  const int t = static_cast<int>(sorb.size());
  Permutation ma = motion_permutation(za.certificate.witness);
  Permutation mb = motion_permutation(zb.certificate.witness);
  std::vector<int> pi(static_cast<size_t>(t), -1);
  std::vector<char> target_used(static_cast<size_t>(t), 0);
  bool gamma_kind = za.cls.base == PeriodicBase::Gamma;
  for (size_t i = 0; i < oa.size(); ++i) {
    int sa = orbit_index_of(sorb, ma.image_one_based(oa[i].positions.front()));
    int sb = orbit_index_of(sorb, mb.image_one_based(ob[static_cast<size_t>(match[i])]
                                                         .positions.front()));
    if (gamma_kind && (sa == 0) != (sb == 0)) return unknown;
    pi[static_cast<size_t>(sa)] = sb;
    target_used[static_cast<size_t>(sb)] = 1;
  }
  {
    std::vector<int> rest;
    for (int o = 0; o < t; ++o)
      if (!target_used[static_cast<size_t>(o)]) rest.push_back(o);
    size_t rk = 0;
    for (int o = 0; o < t; ++o)
      if (pi[static_cast<size_t>(o)] < 0) pi[static_cast<size_t>(o)] = rest[rk++];
  }
  if (gamma_kind && pi[0] != 0) return unknown;

  BraidWord swap(m);
  {
    StandardElement kind = gamma_kind ? StandardElement::Gamma : StandardElement::Delta;
    long long s_exp = za.cls.t;
    int r = static_cast<int>(sorb.back().size());
    if (za.cls.base == PeriodicBase::Central) {
      kind = StandardElement::Delta;
      s_exp = za.cls.t * m;
      r = 1;
    }
    std::vector<int> work = pi;
    int lo = gamma_kind ? 1 : 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int o = lo; o + 1 < t; ++o) {
        if (work[static_cast<size_t>(o)] > work[static_cast<size_t>(o + 1)]) {
          swap = multiply(swap, orbit_swap_element(kind, s_exp, r, o + 1, m));
          std::swap(work[static_cast<size_t>(o)], work[static_cast<size_t>(o + 1)]);
          changed = true;
        }
      }
    }
  }
  BraidWord eta = multiply(za.certificate.witness,
                           multiply(swap, inverse(zb.certificate.witness)));
  if (!equals(conj_word(da.tubular(), eta), db.tubular())) return unknown;
  Permutation mo = motion_permutation(eta);
  for (int u = 1; u <= m; ++u)
    if (!(da.strands()[static_cast<size_t>(u - 1)] ==
          db.strands()[static_cast<size_t>(mo.image_one_based(u) - 1)]))
      return unknown;

  // lift eta, relocate, transfuse, and align the interiors
  TubularDecomposition lift =
      make_decomposition(da.ambient_strands(), da.curves(), eta,
                         identity_decomposition(da.ambient_strands(), da.curves()).interiors());
  TubularDecomposition a1 = conj_dec(da, lift);
  TubularDecomposition mu1 = mu_element(a1);
  TubularDecomposition mu_b = mu_element(db);

  OrbitStructure orb1 = orbits(a1);
  std::map<int, BraidWord> nu_at;
  for (const auto& orbit : orb1.orbits) {
    BraidWord prod = orbit_interior_product(a1, orbit);
    // this orbit is the eta-image of a unique orbit of da
    int i = -1;
    for (size_t ii = 0; ii < oa.size(); ++ii) {
      int img = mo.image_one_based(oa[ii].positions.front());
      if (std::find(orbit.begin(), orbit.end(), img) != orbit.end()) {
        i = static_cast<int>(ii);
        break;
      }
    }
    if (i < 0) throw std::logic_error("relocated orbit lost");
    const OrbitData& src = oa[static_cast<size_t>(i)];
    const OrbitData& dst = ob[static_cast<size_t>(match[static_cast<size_t>(i)])];
    // prod is a cyclic rotation of src.product: prefix^{-1} src prefix, so
    // prefix^{-1} wit conjugates prod to dst.product
    std::optional<BraidWord> v;
    BraidWord prefix(src.product.strands());
    for (size_t u = 0; u <= src.positions.size(); ++u) {
      if (equals(conj_word(src.product, prefix), prod)) {
        v = multiply(inverse(prefix), wit[static_cast<size_t>(i)]);
        break;
      }
      if (u < src.positions.size())
        prefix = multiply(prefix, da.interior_at(src.positions[u]));
    }
    if (!v) throw std::logic_error("orbit product is not a rotation of its source");
    if (!equals(conj_word(prod, *v), dst.product))
      throw std::logic_error("interior alignment failed");
    for (int u : orbit) nu_at.emplace(u, *v);
  }
  std::vector<BraidWord> nu_interiors;
  for (int u : a1.circle_positions()) nu_interiors.push_back(nu_at.at(u));
  TubularDecomposition nu(da.ambient_strands(), da.curves(),
                          BraidWord(da.tubular_strands()), std::move(nu_interiors));
  BraidWord witness = multiply(embed(lift),
                               multiply(embed(mu1), multiply(embed(nu), inverse(embed(mu_b)))));
  ConjugacyCertificate cert = make_certificate(alpha, beta, witness);
  if (!cert.verified) throw std::logic_error("periodic-tubular witness failed verification");
  PowersResult out;
  out.outcome = TrialOutcome::CertifiedConjugate;
  out.certificate = std::move(cert);
  return out;
}

}  // namespace

PowersResult conjugacy_via_powers(const BraidWord& alpha, const BraidWord& beta, long long k,
                                  const std::optional<DecompositionHints>& hints,
                                  long long budget) {
  if (k == 0) throw std::invalid_argument("power index must be nonzero");
  if (alpha.strands() != beta.strands())
    throw std::invalid_argument("strand count mismatch");
  PowersResult out;
  NormalForm ak = nf_of_power(alpha, k);
  NormalForm bk = nf_of_power(beta, k);
  if (!(ak == bk)) {
    out.outcome = TrialOutcome::PreconditionFailed;
    out.detail = "alpha^k = " + ak.serialize() + "; beta^k = " + bk.serialize();
    return out;
  }
  if (equals(alpha, beta)) {
    out.outcome = TrialOutcome::Equal;
    return out;
  }
  if (is_periodic(alpha) && is_periodic(beta)) {
    StandardizeResult sa = standardize_periodic(alpha, budget);
    StandardizeResult sb = standardize_periodic(beta, budget);
    if (!sa.known || !sb.known) {
      out.outcome = TrialOutcome::Unknown;
      return out;
    }
    if (sa.cls.base != sb.cls.base || sa.cls.t != sb.cls.t)
      throw std::logic_error("equal powers with distinct periodic classes");
    BraidWord witness =
        multiply(sa.certificate.witness, inverse(sb.certificate.witness));
    ConjugacyCertificate cert = make_certificate(alpha, beta, witness);
    if (!cert.verified) throw std::logic_error("periodic witness failed verification");
    out.outcome = TrialOutcome::CertifiedConjugate;
    out.certificate = std::move(cert);
    return out;
  }
  if (hints) {
    if (!(hints->alpha.curves() == hints->beta.curves()))
      throw std::invalid_argument("decomposition hints over different curve systems");
    if (!equals(embed(hints->alpha), alpha) || !equals(embed(hints->beta), beta))
      throw std::invalid_argument("decomposition hints do not match the braids");
    std::optional<PowersResult> res;
    if (equals(hints->alpha.tubular(), hints->beta.tubular()))
      res = tubular_equal_path(alpha, beta, k, *hints, budget);
    else if (is_periodic(hints->alpha.tubular()) && is_periodic(hints->beta.tubular()))
      res = tubular_periodic_path(alpha, beta, k, *hints, budget);
    if (res) return *res;
  }
  ConjugacyResult cr = conjugacy_test(alpha, beta, budget);
  if (cr.status == ConjugacyStatus::Conjugate) {
    out.outcome = TrialOutcome::CertifiedConjugate;
    out.certificate = cr.certificate;
    return out;
  }
  if (cr.status == ConjugacyStatus::Unknown) {
    out.outcome = TrialOutcome::Unknown;
    return out;
  }
  throw std::logic_error("equal powers refuted as conjugate; this cannot happen");
}

namespace {

Instance f1_instance(const InstanceParams& params, Rng& rng) {
  // periodic pair: conjugates of the same standard power whose k-th power is
  // central, hence equal on the nose
  for (int attempt = 0; attempt < 200; ++attempt) {
    int n = static_cast<int>(rng.range(3, std::min(params.max_strands, 7)));
    bool gamma = rng.coin();
    long long base_order = gamma ? n - 1 : n;
    long long t = rng.range(1, 3) * (rng.coin() ? 1 : -1);
    // choose k with base_order | t*k
    long long g = std::gcd(base_order, t < 0 ? -t : t);
    long long step = base_order / g;
    if (step > params.max_k) continue;
    long long k = step * rng.range(1, params.max_k / step);
    if (rng.coin()) k = -k;
    BraidWord base = gamma ? standard_element(StandardElement::Gamma, n)
                           : standard_element(StandardElement::Delta, n);
    BraidWord target = power(base, t);
    BraidWord eta = rng.word(n, static_cast<int>(rng.range(4, params.max_conjugator_letters)));
    BraidWord xi = rng.word(n, static_cast<int>(rng.range(4, params.max_conjugator_letters)));
    Instance inst;
    inst.alpha = conj_word(target, eta);
    inst.beta = conj_word(target, xi);
    inst.k = k;
    if (!(nf_of_power(inst.alpha, k) == nf_of_power(inst.beta, k))) continue;
    return inst;
  }
  throw std::logic_error("could not build an F1 instance");
}

Instance f2_instance(const InstanceParams& params, Rng& rng) {
  int n = static_cast<int>(rng.range(3, params.max_strands));
  Instance inst;
  inst.alpha = rng.word(n, static_cast<int>(rng.range(0, 25)));
  inst.beta = inst.alpha;
  inst.k = rng.range(1, params.max_k) * (rng.coin() ? 1 : -1);
  return inst;
}

// Four flavors of reducible pairs with equal k-th powers. The swap flavors
// conjugate by a centralizer element of the tubular power; the central-power
// flavors conjugate by an arbitrary lifted braid, sound because the k-th
// power has a central tubular part and constant interiors along each orbit.
Instance f3_instance(const InstanceParams& params, Rng& rng) {
  if (params.max_strands < 8) throw std::invalid_argument("F3 needs at least 8 strands");
  for (int attempt = 0; attempt < 400; ++attempt) {
    int flavor = static_cast<int>(rng.range(0, 3));
    if (params.max_strands < 10 && flavor == 1) flavor = 0;
    const int circle = 2;
    int m = 4;
    long long s = 2;
    int r = 2;
    StandardElement kind = StandardElement::Delta;
    long long k = 0;
    switch (flavor) {
      case 0:  // delta^2 on four tubes, swap orbits {1,3} and {2,4}
        break;
      case 1:  // gamma^2 on five tubes, swap orbits {2,4} and {3,5}
        kind = StandardElement::Gamma;
        m = 5;
        break;
      case 2:  // delta on four tubes, k a multiple of four makes delta^k central
        s = 1;
        r = 4;
        k = 4;
        break;
      case 3:  // gamma on four tubes, k a multiple of three makes gamma^k central
        kind = StandardElement::Gamma;
        s = 1;
        r = 3;
        k = 3 * rng.range(1, 2);
        break;
    }
    int n = m * circle;
    std::vector<std::pair<int, int>> intervals;
    for (int u = 0; u < m; ++u) intervals.emplace_back(2 * u + 1, 2 * u + 2);
    CurveSystem c = make_curves(n, intervals);
    BraidWord tub = power(standard_element(kind, m), s);

    BraidWord w0 = rng.word(circle, static_cast<int>(rng.range(1, 4)));
    std::vector<BraidWord> interiors(static_cast<size_t>(m), BraidWord(circle));
    if (kind == StandardElement::Gamma) {
      interiors[0] = rng.word(circle, static_cast<int>(rng.range(0, 3)));
      interiors[1] = w0;
      interiors[2] = w0;
    } else {
      interiors[0] = w0;
      interiors[static_cast<size_t>(m - 1)] = w0;
    }
    TubularDecomposition d = make_decomposition(n, c, tub, interiors);

    BraidWord conjugator(m);
    if (flavor <= 1) {
      conjugator = kind == StandardElement::Gamma
                       ? orbit_swap_element(StandardElement::Gamma, s, r, 2, m)
                       : orbit_swap_element(StandardElement::Delta, s, r, 1, m);
      k = r * rng.range(1, params.max_k / r);
    } else if (flavor == 2) {
      conjugator = rng.word(m, static_cast<int>(rng.range(2, 6)));
    } else {
      // keep the fixed gamma orbit in place: avoid the first generator
      std::vector<int> ls;
      for (int q = static_cast<int>(rng.range(2, 6)); q > 0; --q) {
        int idx = static_cast<int>(rng.range(2, m - 1));
        ls.push_back(rng.coin() ? idx : -idx);
      }
      conjugator = BraidWord(m, ls);
    }
    if (rng.coin()) k = -k;
    TubularDecomposition lift = make_decomposition(
        n, c, conjugator, identity_decomposition(n, c).interiors());
    TubularDecomposition dbeta = conj_dec(d, lift);
    Instance inst;
    inst.alpha = embed(d);
    inst.beta = embed(dbeta);
    inst.k = k;
    inst.hints = DecompositionHints{d, dbeta};
    if (equals(inst.alpha, inst.beta)) continue;
    if (!(nf_of_power(inst.alpha, k) == nf_of_power(inst.beta, k))) continue;
    return inst;
  }
  throw std::logic_error("could not build an F3 instance");
}

Instance f4_instance(const InstanceParams& params, Rng& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    int n = static_cast<int>(rng.range(3, params.max_strands));
    Instance inst;
    inst.alpha = rng.word(n, static_cast<int>(rng.range(1, 12)));
    inst.beta = rng.word(n, static_cast<int>(rng.range(1, 12)));
    inst.k = rng.range(1, params.max_k) * (rng.coin() ? 1 : -1);
    if (nf_of_power(inst.alpha, inst.k) == nf_of_power(inst.beta, inst.k)) continue;
    return inst;
  }
  throw std::logic_error("could not build an F4 instance");
}

}  // namespace

Instance generate_instance(InstanceFamily family, const InstanceParams& params, uint64_t seed) {
  Rng rng(seed);
  switch (family) {
    case InstanceFamily::F1PeriodicCentral: return f1_instance(params, rng);
    case InstanceFamily::F2Equal: return f2_instance(params, rng);
    case InstanceFamily::F3ReducibleOrbitSwap: return f3_instance(params, rng);
    case InstanceFamily::F4Negative: return f4_instance(params, rng);
  }
  throw std::invalid_argument("unknown family");
}

std::vector<BraidWord> brute_force_root(const BraidWord& rho, long long k, int max_letters) {
  const int n = rho.strands();
  NormalForm target = normal_form(rho);
  std::map<std::string, BraidWord> roots;
  std::vector<int> alphabet;
  for (int i = 1; i <= n - 1; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  std::vector<int> word;
  auto visit = [&](auto&& self, int remaining) -> void {
    BraidWord w(n, word);
    NormalForm x = normal_form(w);
    if (nf_power(x, k) == target) roots.emplace(x.serialize(), w);
    if (remaining == 0) return;
    for (int l : alphabet) {
      word.push_back(l);
      self(self, remaining - 1);
      word.pop_back();
    }
  };
  visit(visit, max_letters);
  std::vector<BraidWord> out;
  out.reserve(roots.size());
  for (auto& [key, w] : roots) out.push_back(w);
  return out;
}

RunSummary run_trials(const RunConfig& config) {
  RunSummary summary;
  summary.ok = true;
  for (int trial = 0; trial < config.trials; ++trial) {
    InstanceFamily family = config.families[static_cast<size_t>(trial) % config.families.size()];
    uint64_t seed = config.master_seed * 0x100000001b3ULL + static_cast<uint64_t>(trial);
    Instance inst = generate_instance(family, config.params, seed);
    TrialReport report;
    report.trial = trial;
    report.family = family;
    report.seed = seed;
    report.n = inst.alpha.strands();
    report.k = inst.k;
    report.alpha = inst.alpha;
    report.beta = inst.beta;
    auto start = std::chrono::steady_clock::now();
    PowersResult res = conjugacy_via_powers(inst.alpha, inst.beta, inst.k, inst.hints,
                                            config.budget);
    auto stop = std::chrono::steady_clock::now();
    report.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    report.outcome = res.outcome;
    if (res.certificate) report.witness = res.certificate->witness;
    switch (res.outcome) {
      case TrialOutcome::CertifiedConjugate: summary.certified++; break;
      case TrialOutcome::Equal: summary.equal++; break;
      case TrialOutcome::Unknown: summary.unknown++; break;
      case TrialOutcome::PreconditionFailed: summary.precondition_failed++; break;
    }
    bool expected = family == InstanceFamily::F4Negative
                        ? res.outcome == TrialOutcome::PreconditionFailed
                        : (res.outcome == TrialOutcome::CertifiedConjugate ||
                           res.outcome == TrialOutcome::Equal);
    if (!expected) summary.ok = false;
    summary.reports.push_back(std::move(report));
  }
  return summary;
}

void write_report(std::ostream& os, const RunConfig& config, const RunSummary& summary) {
  for (const TrialReport& r : summary.reports) {
    std::ostringstream seed_hex;
    seed_hex << std::hex << r.seed;
    nlohmann::json j{{"trial", r.trial},
                     {"family", to_string(r.family)},
                     {"seed", seed_hex.str()},
                     {"n", r.n},
                     {"k", r.k},
                     {"alpha", format_word(r.alpha)},
                     {"beta", format_word(r.beta)},
                     {"outcome", to_string(r.outcome)},
                     {"millis", r.millis}};
    if (r.witness) j["witness"] = format_word(*r.witness);
    os << j.dump() << "\n";
  }
  nlohmann::json foot{{"summary",
                       {{"trials", config.trials},
                        {"certified", summary.certified},
                        {"equal", summary.equal},
                        {"unknown", summary.unknown},
                        {"precondition_failed", summary.precondition_failed},
                        {"ok", summary.ok}}}};
  os << foot.dump() << "\n";
}

}  // namespace braids
