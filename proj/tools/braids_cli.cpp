#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "braids/harness.hpp"

using namespace braids;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnknown = 2;

struct Output {
  bool as_json = false;
  std::string path;

  void emit(const std::string& text, const json& j) const {
    std::string payload = as_json ? j.dump() : text;
    if (path.empty()) {
      std::cout << payload << "\n";
    } else {
      std::ofstream os(path);
      os << payload << "\n";
    }
  }
};

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

json certificate_json(const ConjugacyCertificate& c) {
  return json{{"claim", {{"alpha", format_word(c.alpha)},
                         {"beta", format_word(c.beta)},
                         {"n", c.n}}},
              {"witness", format_word(c.witness)},
              {"verified", c.verified}};
}

std::string periodic_base_name(PeriodicBase b) {
  switch (b) {
    case PeriodicBase::Delta: return "delta";
    case PeriodicBase::Gamma: return "gamma";
    case PeriodicBase::Central: return "central";
  }
  return "?";
}

std::string regular_form_text(const RegularFormResult& r) {
  std::ostringstream os;
  os << format_decomposition(r.regular);
  for (size_t i = 0; i < r.kappa.size(); ++i)
    os << "kappa[" << i + 1 << "]: " << format_word(r.kappa[i]) << "\n";
  os << "conjugator: " << format_word(r.conjugator) << "\n";
  return os.str();
}

json regular_form_json(const RegularFormResult& r) {
  json kappas = json::array();
  for (const auto& k : r.kappa) kappas.push_back(format_word(k));
  return json{{"decomposition", format_decomposition(r.regular)},
              {"kappa", kappas},
              {"conjugator", format_word(r.conjugator)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid group computations: garside forms, conjugacy, reducible decompositions"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json_format = false;
  std::string out_path;
  app.add_flag("--json", json_format, "emit JSON instead of text");
  std::string format_choice = "text";
  app.add_option("--format", format_choice, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "write results to this file");
  long long budget = 10000;
  app.add_option("--budget", budget, "summit elements explored before Unknown");

  int n = 0;
  long long k = 1;
  std::string word_a, word_b, curves_text, in_a, in_b;
  int max_letters = 4;

  auto* normalize = app.add_subcommand("normalize", "left canonical form of a word");
  normalize->add_option("-n,--strands", n)->required();
  normalize->add_option("word", word_a)->required();

  auto* eq = app.add_subcommand("eq", "decide equality of two words");
  eq->add_option("-n,--strands", n)->required();
  eq->add_option("a", word_a)->required();
  eq->add_option("b", word_b)->required();

  auto* mul = app.add_subcommand("mul", "product of two words");
  mul->add_option("-n,--strands", n)->required();
  mul->add_option("a", word_a)->required();
  mul->add_option("b", word_b)->required();

  auto* inv = app.add_subcommand("inv", "inverse of a word");
  inv->add_option("-n,--strands", n)->required();
  inv->add_option("word", word_a)->required();

  auto* pow_cmd = app.add_subcommand("pow", "power of a word");
  pow_cmd->add_option("-n,--strands", n)->required();
  pow_cmd->add_option("-k,--power", k)->required();
  pow_cmd->add_option("word", word_a)->required();

  auto* expsum = app.add_subcommand("expsum", "exponent sum");
  expsum->add_option("-n,--strands", n)->required();
  expsum->add_option("word", word_a)->required();

  auto* perm = app.add_subcommand("perm", "underlying permutation");
  perm->add_option("-n,--strands", n)->required();
  perm->add_option("word", word_a)->required();

  auto* periodic = app.add_subcommand("periodic", "periodicity test and classification");
  periodic->add_option("-n,--strands", n)->required();
  periodic->add_option("word", word_a)->required();

  auto* standardize = app.add_subcommand("standardize", "conjugate a periodic braid standard");
  standardize->add_option("-n,--strands", n)->required();
  standardize->add_option("word", word_a)->required();

  auto* conj = app.add_subcommand("conj", "conjugacy test with certificate");
  conj->add_option("-n,--strands", n)->required();
  conj->add_option("a", word_a)->required();
  conj->add_option("b", word_b)->required();

  auto* preserves_cmd = app.add_subcommand("curves-preserves", "does the braid fix the curves");
  preserves_cmd->add_option("--curves", curves_text)->required();
  preserves_cmd->add_option("word", word_a)->required();

  auto* decompose = app.add_subcommand("decompose", "tubular decomposition of a word");
  decompose->add_option("--curves", curves_text)->required();
  decompose->add_option("word", word_a)->required();

  auto* embed_cmd = app.add_subcommand("embed", "ambient word of a decomposition");
  embed_cmd->add_option("--in", in_a, "decomposition file, - for stdin")->required();

  auto* regform = app.add_subcommand("regular-form", "conjugate a decomposition regular");
  regform->add_option("--in", in_a, "decomposition file, - for stdin")->required();

  auto* regconj = app.add_subcommand("reg-conj", "conjugacy of two regular forms");
  regconj->add_option("--in-a", in_a)->required();
  regconj->add_option("--in-b", in_b)->required();

  auto* rootsconj = app.add_subcommand("roots-conj", "conjugacy of two k-th roots");
  rootsconj->add_option("-n,--strands", n)->required();
  rootsconj->add_option("-k,--power", k)->required();
  rootsconj->add_option("a", word_a)->required();
  rootsconj->add_option("b", word_b)->required();

  auto* bruteroot = app.add_subcommand("brute-root", "all bounded k-th roots");
  bruteroot->add_option("-n,--strands", n)->required();
  bruteroot->add_option("-k,--power", k)->required();
  bruteroot->add_option("--max-letters", max_letters);
  bruteroot->add_option("word", word_a)->required();

  auto* verify = app.add_subcommand("verify", "run the root-conjugacy trial harness");
  int trials = 200;
  std::string families_str = "F1,F2,F3";
  std::string seed_hex = "2a";
  int n_max = 10, k_max = 6;
  verify->add_option("--trials", trials);
  verify->add_option("--families", families_str, "comma separated subset of F1,F2,F3,F4");
  verify->add_option("--seed", seed_hex, "master seed, hex");
  verify->add_option("--n-max", n_max);
  verify->add_option("--k-max", k_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }
  Output out{json_format || format_choice == "json", out_path};

  try {
    if (*normalize) {
      NormalForm x = normal_form(parse_word(word_a, n));
      out.emit(x.serialize(), json{{"normal_form", x.serialize()}});
      return kExitOk;
    }
    if (*eq) {
      bool same = equals(parse_word(word_a, n), parse_word(word_b, n));
      out.emit(same ? "true" : "false", json{{"equal", same}});
      return kExitOk;
    }
    if (*mul) {
      BraidWord w = multiply(parse_word(word_a, n), parse_word(word_b, n));
      out.emit(format_word(w), json{{"word", format_word(w)}});
      return kExitOk;
    }
    if (*inv) {
      BraidWord w = inverse(parse_word(word_a, n));
      out.emit(format_word(w), json{{"word", format_word(w)}});
      return kExitOk;
    }
    if (*pow_cmd) {
      BraidWord w = power(parse_word(word_a, n), k);
      out.emit(format_word(w), json{{"word", format_word(w)}});
      return kExitOk;
    }
    if (*expsum) {
      long long s = exponent_sum(parse_word(word_a, n));
      out.emit(std::to_string(s), json{{"exponent_sum", s}});
      return kExitOk;
    }
    if (*perm) {
      Permutation p = underlying_permutation(parse_word(word_a, n));
      out.emit(p.one_line(), json{{"permutation", p.one_line()}});
      return kExitOk;
    }
    if (*periodic) {
      BraidWord w = parse_word(word_a, n);
      if (!is_periodic(w)) {
        out.emit("not periodic", json{{"periodic", false}});
        return kExitOk;
      }
      PeriodicClass cls = classify_periodic(w);
      json j{{"base", periodic_base_name(cls.base)}, {"t", cls.t}, {"n", cls.n}};
      out.emit(j.dump(), j);
      return kExitOk;
    }
    if (*standardize) {
      BraidWord w = parse_word(word_a, n);
      if (!is_periodic(w)) {
        std::cerr << "input is not periodic\n";
        return kExitError;
      }
      StandardizeResult r = standardize_periodic(w, budget);
      if (!r.known) {
        out.emit("unknown (budget exhausted)", json{{"outcome", "Unknown"}});
        return kExitUnknown;
      }
      json j = certificate_json(r.certificate);
      j["base"] = periodic_base_name(r.cls.base);
      j["t"] = r.cls.t;
      out.emit(j.dump(), j);
      return r.certificate.verified ? kExitOk : kExitError;
    }
    if (*conj) {
      ConjugacyResult r = conjugacy_test(parse_word(word_a, n), parse_word(word_b, n), budget);
      if (r.status == ConjugacyStatus::Unknown) {
        out.emit("unknown", json{{"outcome", "Unknown"}});
        return kExitUnknown;
      }
      if (r.status == ConjugacyStatus::NotConjugate) {
        out.emit("not conjugate", json{{"outcome", "NotConjugate"}});
        return kExitOk;
      }
      json j = certificate_json(*r.certificate);
      j["outcome"] = "Conjugate";
      out.emit(j.dump(), j);
      return r.certificate->verified ? kExitOk : kExitError;
    }
    if (*preserves_cmd) {
      CurveSystem c = parse_curves(curves_text);
      bool p = preserves(parse_word(word_a, c.punctures()), c);
      out.emit(p ? "true" : "false", json{{"preserves", p}});
      return kExitOk;
    }
    if (*decompose) {
      CurveSystem c = parse_curves(curves_text);
      TubularDecomposition d = extract(parse_word(word_a, c.punctures()), c);
      out.emit(format_decomposition(d), json{{"decomposition", format_decomposition(d)}});
      return kExitOk;
    }
    if (*embed_cmd) {
      TubularDecomposition d = parse_decomposition(read_text(in_a));
      BraidWord w = embed(d);
      out.emit(format_word(w), json{{"word", format_word(w)}, {"n", w.strands()}});
      return kExitOk;
    }
    if (*regform) {
      TubularDecomposition d = parse_decomposition(read_text(in_a));
      auto r = to_regular_form(d, budget);
      if (!r) {
        out.emit("unknown (budget exhausted)", json{{"outcome", "Unknown"}});
        return kExitUnknown;
      }
      out.emit(regular_form_text(*r), regular_form_json(*r));
      return kExitOk;
    }
    if (*regconj) {
      auto ra = to_regular_form(parse_decomposition(read_text(in_a)), budget);
      auto rb = to_regular_form(parse_decomposition(read_text(in_b)), budget);
      if (!ra || !rb) {
        out.emit("unknown (budget exhausted)", json{{"outcome", "Unknown"}});
        return kExitUnknown;
      }
      ConjugacyResult r = regular_conjugacy_test(*ra, *rb, budget);
      if (r.status == ConjugacyStatus::Unknown) {
        out.emit("unknown", json{{"outcome", "Unknown"}});
        return kExitUnknown;
      }
      if (r.status == ConjugacyStatus::NotConjugate) {
        out.emit("not conjugate", json{{"outcome", "NotConjugate"}});
        return kExitOk;
      }
      json j = certificate_json(*r.certificate);
      j["outcome"] = "Conjugate";
      out.emit(j.dump(), j);
      return r.certificate->verified ? kExitOk : kExitError;
    }
    if (*rootsconj) {
      PowersResult r =
          conjugacy_via_powers(parse_word(word_a, n), parse_word(word_b, n), k, std::nullopt, budget);
      json j{{"outcome", to_string(r.outcome)}};
      if (!r.detail.empty()) j["detail"] = r.detail;
      if (r.certificate) j["certificate"] = certificate_json(*r.certificate);
      out.emit(j.dump(), j);
      if (r.outcome == TrialOutcome::Unknown) return kExitUnknown;
      if (r.certificate && !r.certificate->verified) return kExitError;
      return kExitOk;
    }
    if (*bruteroot) {
      std::vector<BraidWord> roots = brute_force_root(parse_word(word_a, n), k, max_letters);
      std::ostringstream text;
      json arr = json::array();
      for (const auto& w : roots) {
        text << format_word(w) << "\n";
        arr.push_back(format_word(w));
      }
      out.emit(text.str(), json{{"roots", arr}});
      return kExitOk;
    }
    if (*verify) {
      RunConfig config;
      config.trials = trials;
      config.master_seed = std::stoull(seed_hex, nullptr, 16);
      config.budget = budget;
      config.params.max_strands = n_max;
      config.params.max_k = k_max;
      config.families.clear();
      std::istringstream fs(families_str);
      std::string tok;
      while (std::getline(fs, tok, ',')) {
        auto f = family_from_string(tok);
        if (!f) throw std::runtime_error("unknown family " + tok);
        config.families.push_back(*f);
      }
      RunSummary summary = run_trials(config);
      if (out_path.empty()) {
        write_report(std::cout, config, summary);
      } else {
        std::ofstream os(out_path);
        write_report(os, config, summary);
      }
      return summary.ok ? kExitOk : kExitError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
