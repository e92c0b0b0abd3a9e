// End-to-end acceptance runs: exact identities, seeded randomized contracts,
// oracle cross-checks, and the trial harness, each with a wall-clock bound.

#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "braids/harness.hpp"
#include "braids/rng.hpp"

using namespace braids;

namespace {

int failures = 0;

struct Criterion {
  const char* label;
  double limit_seconds;
  bool (*run)(std::string& message);
};

BraidWord conj_word(const BraidWord& w, const BraidWord& by) {
  return multiply(multiply(inverse(by), w), by);
}

// 1. word problem on the motivating example
bool crit_word_problem(std::string&) {
  BraidWord a = power(BraidWord(3, {1, 2}), 3);
  BraidWord b = power(BraidWord(3, {2, 1}), 3);
  return equals(a, b) && !equals(BraidWord(3, {1, 2}), BraidWord(3, {2, 1}));
}

// 2. delta^n = gamma^{n-1} = Delta^2 and the exponent sums
bool crit_standard_identities(std::string& msg) {
  for (int n = 3; n <= 8; ++n) {
    BraidWord d2 = power(standard_element(StandardElement::HalfTwist, n), 2);
    BraidWord delta = standard_element(StandardElement::Delta, n);
    BraidWord gamma = standard_element(StandardElement::Gamma, n);
    if (!equals(power(delta, n), d2) || !equals(power(gamma, n - 1), d2) ||
        exponent_sum(delta) != n - 1 || exponent_sum(gamma) != n) {
      msg = "identity failed at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

// 3. periodic classification and standardization over 100 seeded conjugates
bool crit_periodic_classification(std::string& msg) {
  Rng rng(0xACC3);
  for (int trial = 0; trial < 100; ++trial) {
    int n = static_cast<int>(rng.range(3, 7));
    long long t = rng.range(1, 6) * (rng.coin() ? 1 : -1);
    bool gamma = rng.coin();
    BraidWord base = gamma ? standard_element(StandardElement::Gamma, n)
                           : standard_element(StandardElement::Delta, n);
    BraidWord eta = rng.word(n, static_cast<int>(rng.range(1, 20)));
    BraidWord w = conj_word(power(base, t), eta);

    long long s = exponent_sum(w);
    PeriodicBase want_base = gamma ? PeriodicBase::Gamma : PeriodicBase::Delta;
    long long want_t = t;
    if (s % (static_cast<long long>(n) * (n - 1)) == 0) {
      want_base = PeriodicBase::Central;
      want_t = s / (static_cast<long long>(n) * (n - 1));
    }
    if (!is_periodic(w)) {
      msg = "conjugate of a standard power not recognized, trial " + std::to_string(trial);
      return false;
    }
    PeriodicClass cls = classify_periodic(w);
    if (cls.base != want_base || cls.t != want_t) {
      msg = "classification mismatch, trial " + std::to_string(trial);
      return false;
    }
    StandardizeResult res = standardize_periodic(w, 1000000);
    if (!res.known || !res.certificate.verified) {
      msg = "standardization failed, trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

// 4. exponent-sum conjugation invariance
bool crit_exponent_invariance(std::string& msg) {
  Rng rng(0xACC4);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = static_cast<int>(rng.range(3, 6));
    BraidWord w = rng.word(n, static_cast<int>(rng.range(0, 18)));
    BraidWord eta = rng.word(n, static_cast<int>(rng.range(0, 18)));
    if (exponent_sum(conj_word(w, eta)) != exponent_sum(w)) {
      msg = "invariance failed, trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

// 5. conjugacy against brute-force conjugator search over all short words
bool crit_conjugacy_oracle(std::string& msg) {
  const int n = 3;
  const long long budget = 1000000;
  // all braids with at most six letters, one representative word each
  std::map<std::string, BraidWord> elements;
  std::vector<std::vector<int>> stack{{}};
  std::vector<int> alphabet{1, -1, 2, -2};
  std::vector<int> word;
  auto visit = [&](auto&& self, int remaining) -> void {
    BraidWord w(n, word);
    elements.emplace(normal_form(w).serialize(), w);
    if (remaining == 0) return;
    for (int l : alphabet) {
      word.push_back(l);
      self(self, remaining - 1);
      word.pop_back();
    }
  };
  visit(visit, 6);

  // conjugacy classes via the garside engine
  std::vector<BraidWord> reps;
  std::map<std::string, int> class_of;
  for (const auto& [key, w] : elements) {
    int found = -1;
    for (size_t c = 0; c < reps.size(); ++c) {
      if (exponent_sum(reps[c]) != exponent_sum(w)) continue;
      ConjugacyResult r = conjugacy_test(w, reps[c], budget);
      if (r.status == ConjugacyStatus::Unknown) {
        msg = "unexpected Unknown while classifying";
        return false;
      }
      if (r.status == ConjugacyStatus::Conjugate) {
        if (!r.certificate->verified) {
          msg = "certificate failed verification";
          return false;
        }
        found = static_cast<int>(c);
        break;
      }
    }
    if (found < 0) {
      reps.push_back(w);
      found = static_cast<int>(reps.size()) - 1;
    }
    class_of[key] = found;
  }

  // brute-force conjugator search: breadth-first over single-letter
  // conjugations, eight letters deep, must stay inside one class
  for (const auto& [key, w] : elements) {
    int cls = class_of.at(key);
    std::set<std::string> seen{normal_form(w).serialize()};
    std::vector<NormalForm> frontier{normal_form(w)};
    for (int depth = 1; depth <= 8; ++depth) {
      std::vector<NormalForm> next;
      for (const NormalForm& x : frontier) {
        for (int l : alphabet) {
          NormalForm y = nf_multiply(
              nf_multiply(normal_form(BraidWord(n, {-l})), x), normal_form(BraidWord(n, {l})));
          std::string yk = y.serialize();
          if (!seen.insert(yk).second) continue;
          auto it = class_of.find(yk);
          if (it != class_of.end() && it->second != cls) {
            msg = "brute-force witness contradicts the conjugacy test";
            return false;
          }
          next.push_back(std::move(y));
        }
      }
      frontier = std::move(next);
    }
  }
  msg = std::to_string(elements.size()) + " elements, " + std::to_string(reps.size()) +
        " classes";
  return true;
}

TubularDecomposition acceptance_decomposition(Rng& rng, int max_orbits) {
  while (true) {
    int n = static_cast<int>(rng.range(4, 10));
    // a packed layout of equal circles half the time, so the tubular braid
    // moves circles around and orbits of length greater than one are common
    bool uniform = rng.coin();
    std::vector<std::pair<int, int>> intervals;
    if (uniform) {
      n = 2 * static_cast<int>(rng.range(2, 5));
      for (int at = 1; at + 1 <= n; at += 2) intervals.emplace_back(at, at + 1);
    } else {
      int at = 1;
      while (at + 1 <= n) {
        if (rng.coin()) {
          int len = 2 + static_cast<int>(rng.range(0, 1));
          if (at + len - 1 > n || len > n - 1) break;
          intervals.emplace_back(at, at + len - 1);
          at += len + 1;
        } else {
          ++at;
        }
      }
    }
    if (intervals.empty()) continue;
    CurveSystem c = make_curves(n, intervals);
    auto strands = tubular_strands_of(c);
    int m = static_cast<int>(strands.size());
    if (m < 2) continue;
    for (int attempt = 0; attempt < 60; ++attempt) {
      BraidWord tub = rng.word(m, static_cast<int>(rng.range(1, 7)));
      Permutation motion = motion_permutation(tub);
      bool ok = true;
      for (int u = 1; u <= m; ++u) {
        auto& src = strands[static_cast<size_t>(u - 1)];
        auto& dst = strands[static_cast<size_t>(motion.image_one_based(u) - 1)];
        if (src.is_circle != dst.is_circle || src.size != dst.size) ok = false;
      }
      if (!ok) continue;
      std::vector<BraidWord> interiors;
      for (const auto& s : strands)
        if (s.is_circle) interiors.push_back(rng.word(s.size, static_cast<int>(rng.range(0, 6))));
      TubularDecomposition d = make_decomposition(n, c, tub, interiors);
      if (static_cast<int>(orbits(d).orbits.size()) > max_orbits) continue;
      return d;
    }
  }
}

// 6. regular-form pipeline over 100 seeded decompositions
bool crit_regular_form(std::string& msg) {
  Rng rng(0xACC6);
  for (int trial = 0; trial < 100; ++trial) {
    TubularDecomposition d = acceptance_decomposition(rng, 3);
    auto r = to_regular_form(d, 1000000);
    if (!r) {
      msg = "regular form hit the budget, trial " + std::to_string(trial);
      return false;
    }
    if (is_regular_form(r->regular, 1000000) != Check::Yes) {
      msg = "output not in regular form, trial " + std::to_string(trial);
      return false;
    }
    if (!equals(conj_word(embed(d), r->conjugator), embed(r->regular))) {
      msg = "conjugator failed, trial " + std::to_string(trial);
      return false;
    }
    OrbitStructure orb = orbits(d);
    for (size_t i = 0; i < orb.orbits.size(); ++i) {
      ConjugacyResult c =
          conjugacy_test(r->kappa[i], orbit_interior_product(d, orb.orbits[i]), 1000000);
      if (c.status != ConjugacyStatus::Conjugate || !c.certificate->verified) {
        msg = "kappa not certified conjugate to its orbit product, trial " +
              std::to_string(trial);
        return false;
      }
    }
  }
  return true;
}

// 7. centralizer elements for every valid parameter combination up to m = 8
bool crit_centralizer_elements(std::string& msg) {
  for (int m = 3; m <= 8; ++m) {
    for (long long s = 1; s <= m; ++s) {
      long long g = std::gcd<long long>(m, s);
      int t = static_cast<int>(g);
      int r = m / t;
      BraidWord ds = power(standard_element(StandardElement::Delta, m), s);
      Permutation motion_std = motion_permutation(ds);
      for (int i = 1; i <= t - 1; ++i) {
        BraidWord si = orbit_swap_element(StandardElement::Delta, s, r, i, m);
        if (!equals(multiply(si, ds), multiply(ds, si))) {
          msg = "S does not commute, m=" + std::to_string(m) + " s=" + std::to_string(s);
          return false;
        }
        // orbit of a point p under delta^s is p + Z s (mod m); the swap must
        // exchange the orbits through i and i+1 and fix the others setwise
        Permutation mo = motion_permutation(si);
        auto orbit_id = [&](int p) {
          int q = p;
          int best = p;
          do {
            q = motion_std.image_one_based(q);
            best = std::min(best, q);
          } while (q != p);
          return best;
        };
        for (int p = 1; p <= m; ++p) {
          int from = orbit_id(p), to = orbit_id(mo.image_one_based(p));
          int want = from == i ? i + 1 : (from == i + 1 ? i : from);
          if (to != want) {
            msg = "S swaps the wrong orbits, m=" + std::to_string(m);
            return false;
          }
        }
      }
      if (s <= m - 1) {
        long long g2 = std::gcd<long long>(m - 1, s);
        int r2 = static_cast<int>((m - 1) / g2);
        int t2 = 1 + static_cast<int>(g2);
        if (r2 > 1) {
          BraidWord gs = power(standard_element(StandardElement::Gamma, m), s);
          Permutation motion_g = motion_permutation(gs);
          for (int i = 2; i <= t2 - 1; ++i) {
            BraidWord ti = orbit_swap_element(StandardElement::Gamma, s, r2, i, m);
            if (!equals(multiply(ti, gs), multiply(gs, ti))) {
              msg = "T does not commute, m=" + std::to_string(m) + " s=" + std::to_string(s);
              return false;
            }
            Permutation mo = motion_permutation(ti);
            auto orbit_id = [&](int p) {
              int q = p;
              int best = p;
              do {
                q = motion_g.image_one_based(q);
                best = std::min(best, q);
              } while (q != p);
              return best;
            };
            for (int p = 1; p <= m; ++p) {
              int from = orbit_id(p), to = orbit_id(mo.image_one_based(p));
              int want = from == i ? i + 1 : (from == i + 1 ? i : from);
              if (to != want) {
                msg = "T swaps the wrong orbits, m=" + std::to_string(m);
                return false;
              }
            }
          }
        }
      }
    }
  }
  return true;
}

// 8. the theorem harness across the three positive families
bool crit_theorem_harness(std::string& msg) {
  RunConfig config;
  config.trials = 210;
  config.master_seed = 42;
  config.budget = 1000000;
  RunSummary summary = run_trials(config);
  if (summary.unknown != 0 || summary.precondition_failed != 0 || !summary.ok) {
    msg = "unknown=" + std::to_string(summary.unknown) +
          " precondition_failed=" + std::to_string(summary.precondition_failed);
    return false;
  }
  for (const TrialReport& r : summary.reports) {
    if (r.outcome == TrialOutcome::CertifiedConjugate) {
      if (!r.witness) {
        msg = "certified trial without witness";
        return false;
      }
      if (!equals(conj_word(r.alpha, *r.witness), r.beta)) {
        msg = "witness failed re-verification, trial " + std::to_string(r.trial);
        return false;
      }
    }
  }
  msg = std::to_string(summary.certified) + " certified, " + std::to_string(summary.equal) +
        " equal";
  return true;
}

// 9. root sets: several full-twist cube roots, all conjugate; rigid square root
bool crit_root_sets(std::string& msg) {
  BraidWord d2 = power(standard_element(StandardElement::HalfTwist, 3), 2);
  std::vector<BraidWord> cube_roots = brute_force_root(d2, 3, 4);
  if (cube_roots.size() < 2) {
    msg = "expected at least two cube roots of the full twist";
    return false;
  }
  for (size_t i = 0; i < cube_roots.size(); ++i) {
    for (size_t j = i + 1; j < cube_roots.size(); ++j) {
      ConjugacyResult c = conjugacy_test(cube_roots[i], cube_roots[j], 1000000);
      if (c.status != ConjugacyStatus::Conjugate || !c.certificate->verified) {
        msg = "cube roots not certified conjugate";
        return false;
      }
    }
  }
  BraidWord rho = power(BraidWord(3, {1, -2}), 2);
  std::vector<BraidWord> square_roots = brute_force_root(rho, 2, 4);
  if (square_roots.empty()) {
    msg = "missing the square root";
    return false;
  }
  for (const BraidWord& w : square_roots) {
    if (!equals(w, BraidWord(3, {1, -2}))) {
      msg = "extra square root found";
      return false;
    }
  }
  msg = std::to_string(cube_roots.size()) + " cube roots, " +
        std::to_string(square_roots.size()) + " square root";
  return true;
}

// 10. curve preservation laws and the coordinate action properties
bool crit_curve_laws(std::string& msg) {
  Rng rng(0xACC10);
  for (int trial = 0; trial < 100; ++trial) {
    TubularDecomposition d = acceptance_decomposition(rng, 3);
    BraidWord w = embed(d);
    if (!preserves(w, d.curves()) || !preserves(power(w, 2), d.curves()) ||
        !preserves(power(w, 3), d.curves())) {
      msg = "embedded decomposition does not preserve its curves, trial " +
            std::to_string(trial);
      return false;
    }
  }
  for (int trial = 0; trial < 1000; ++trial) {
    int n = static_cast<int>(rng.range(3, 8));
    LaminationCoords x(static_cast<size_t>(2 * n - 4));
    for (auto& v : x) v = rng.range(-10, 10);
    BraidWord a = rng.word(n, 5);
    BraidWord b = rng.word(n, 5);
    if (apply_braid(multiply(a, b), x) != apply_braid(b, apply_braid(a, x))) {
      msg = "action property failed, trial " + std::to_string(trial);
      return false;
    }
    for (int i = 1; i + 1 <= n - 1; ++i) {
      if (apply_braid(BraidWord(n, {i, i + 1, i}), x) !=
          apply_braid(BraidWord(n, {i + 1, i, i + 1}), x)) {
        msg = "braid relation failed on coordinates, trial " + std::to_string(trial);
        return false;
      }
    }
    if (n >= 4 &&
        apply_braid(BraidWord(n, {1, 3}), x) != apply_braid(BraidWord(n, {3, 1}), x)) {
      msg = "commutation relation failed on coordinates, trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

const Criterion kCriteria[] = {
    {"1 word problem on (s1 s2)^3 = (s2 s1)^3", 1.0, crit_word_problem},
    {"2 standard identities delta^n = gamma^(n-1) = Delta^2, n=3..8", 1.0,
     crit_standard_identities},
    {"3 periodic classification and standardization, 100 seeded conjugates", 60.0,
     crit_periodic_classification},
    {"4 exponent-sum conjugacy invariance, 1000 seeded pairs", 10.0, crit_exponent_invariance},
    {"5 conjugacy vs brute-force search, all B_3 words of <= 6 letters", 300.0,
     crit_conjugacy_oracle},
    {"6 regular-form contract, 100 seeded decompositions", 120.0, crit_regular_form},
    {"7 centralizer elements S_i, T_i for m <= 8", 30.0, crit_centralizer_elements},
    {"8 theorem harness, 210 trials across F1-F3", 180.0, crit_theorem_harness},
    {"9 root sets of the full twist and a rigid square root", 120.0, crit_root_sets},
    {"10 curve preservation and coordinate action laws", 60.0, crit_curve_laws},
};

}  // namespace

int main() {
  for (const Criterion& c : kCriteria) {
    std::string message;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(message);
    } catch (const std::exception& e) {
      message = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      ok = false;
      message += (message.empty() ? "" : "; ") + std::string("over the ") +
                 std::to_string(c.limit_seconds) + " s limit";
    }
    std::printf("[%s] criterion %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.label, seconds,
                message.empty() ? "" : " -- ", message.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criteria failed\n", failures);
  else std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
