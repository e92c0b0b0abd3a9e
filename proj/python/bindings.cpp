#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "braids/harness.hpp"

namespace py = pybind11;
using namespace braids;

namespace {

std::string periodic_base_name(PeriodicBase b) {
  switch (b) {
    case PeriodicBase::Delta: return "delta";
    case PeriodicBase::Gamma: return "gamma";
    case PeriodicBase::Central: return "central";
  }
  return "?";
}

py::dict certificate_dict(const ConjugacyCertificate& c) {
  py::dict d;
  d["alpha"] = format_word(c.alpha);
  d["beta"] = format_word(c.beta);
  d["witness"] = format_word(c.witness);
  d["verified"] = c.verified;
  d["n"] = c.n;
  return d;
}

}  // namespace

PYBIND11_MODULE(_braids, m) {
  m.doc() = "Garside-theoretic braid computations: canonical forms, conjugacy "
            "certificates, periodic classification, tubular decompositions.";

  m.def("normalize", [](int n, const std::string& w) {
    return normal_form(parse_word(w, n)).serialize();
  });
  m.def("eq", [](int n, const std::string& a, const std::string& b) {
    return equals(parse_word(a, n), parse_word(b, n));
  });
  m.def("mul", [](int n, const std::string& a, const std::string& b) {
    return format_word(multiply(parse_word(a, n), parse_word(b, n)));
  });
  m.def("inv", [](int n, const std::string& w) {
    return format_word(inverse(parse_word(w, n)));
  });
  m.def("pow", [](int n, const std::string& w, long long k) {
    return format_word(power(parse_word(w, n), k));
  });
  m.def("exponent_sum", [](int n, const std::string& w) {
    return exponent_sum(parse_word(w, n));
  });
  m.def("permutation", [](int n, const std::string& w) {
    Permutation p = underlying_permutation(parse_word(w, n));
    std::vector<int> images;
    for (int i = 1; i <= p.size(); ++i) images.push_back(p.image_one_based(i));
    return images;
  });
  m.def("standard_element", [](const std::string& kind, int n) {
    if (kind == "half_twist") return format_word(standard_element(StandardElement::HalfTwist, n));
    if (kind == "delta") return format_word(standard_element(StandardElement::Delta, n));
    if (kind == "gamma") return format_word(standard_element(StandardElement::Gamma, n));
    throw std::invalid_argument("kind must be half_twist, delta or gamma");
  });

  m.def("is_periodic", [](int n, const std::string& w) {
    return is_periodic(parse_word(w, n));
  });
  m.def("classify_periodic", [](int n, const std::string& w) {
    PeriodicClass cls = classify_periodic(parse_word(w, n));
    py::dict d;
    d["base"] = periodic_base_name(cls.base);
    d["t"] = cls.t;
    d["n"] = cls.n;
    return d;
  });
  m.def("standardize_periodic",
        [](int n, const std::string& w, long long budget) -> py::object {
          StandardizeResult r = standardize_periodic(parse_word(w, n), budget);
          if (!r.known) return py::none();
          py::dict d = certificate_dict(r.certificate);
          d["base"] = periodic_base_name(r.cls.base);
          d["t"] = r.cls.t;
          return d;
        },
        py::arg("n"), py::arg("word"), py::arg("budget") = 10000);

  m.def("conjugacy",
        [](int n, const std::string& a, const std::string& b, long long budget) {
          ConjugacyResult r = conjugacy_test(parse_word(a, n), parse_word(b, n), budget);
          py::dict d;
          d["outcome"] = r.status == ConjugacyStatus::Conjugate     ? "Conjugate"
                         : r.status == ConjugacyStatus::NotConjugate ? "NotConjugate"
                                                                      : "Unknown";
          if (r.certificate) d["certificate"] = certificate_dict(*r.certificate);
          return d;
        },
        py::arg("n"), py::arg("a"), py::arg("b"), py::arg("budget") = 10000);

  m.def("preserves", [](const std::string& curves, const std::string& w) {
    CurveSystem c = parse_curves(curves);
    return preserves(parse_word(w, c.punctures()), c);
  });
  m.def("lamination_coords", [](const std::string& curves) {
    return lamination_coords(parse_curves(curves));
  });
  m.def("apply_braid", [](int n, const std::string& w, const LaminationCoords& coords) {
    return apply_braid(parse_word(w, n), coords);
  });

  m.def("decompose", [](const std::string& curves, const std::string& w) {
    CurveSystem c = parse_curves(curves);
    return format_decomposition(extract(parse_word(w, c.punctures()), c));
  });
  m.def("embed", [](const std::string& decomposition) {
    TubularDecomposition d = parse_decomposition(decomposition);
    return py::make_tuple(d.ambient_strands(), format_word(embed(d)));
  });
  m.def("regular_form",
        [](const std::string& decomposition, long long budget) -> py::object {
          auto r = to_regular_form(parse_decomposition(decomposition), budget);
          if (!r) return py::none();
          py::dict d;
          d["decomposition"] = format_decomposition(r->regular);
          py::list kappas;
          for (const auto& k : r->kappa) kappas.append(format_word(k));
          d["kappa"] = kappas;
          d["conjugator"] = format_word(r->conjugator);
          return d;
        },
        py::arg("decomposition"), py::arg("budget") = 10000);

  m.def("roots_conjugacy",
        [](int n, const std::string& a, const std::string& b, long long k, long long budget) {
          PowersResult r =
              conjugacy_via_powers(parse_word(a, n), parse_word(b, n), k, std::nullopt, budget);
          py::dict d;
          d["outcome"] = to_string(r.outcome);
          if (!r.detail.empty()) d["detail"] = r.detail;
          if (r.certificate) d["certificate"] = certificate_dict(*r.certificate);
          return d;
        },
        py::arg("n"), py::arg("a"), py::arg("b"), py::arg("k"), py::arg("budget") = 10000);

  m.def("brute_force_root",
        [](int n, const std::string& rho, long long k, int max_letters) {
          std::vector<std::string> out;
          for (const BraidWord& w : brute_force_root(parse_word(rho, n), k, max_letters))
            out.push_back(format_word(w));
          return out;
        },
        py::arg("n"), py::arg("rho"), py::arg("k"), py::arg("max_letters") = 4);

  m.def("run_trials",
        [](int trials, const std::string& families, const std::string& seed_hex,
           long long budget) {
          RunConfig config;
          config.trials = trials;
          config.master_seed = std::stoull(seed_hex, nullptr, 16);
          config.budget = budget;
          config.families.clear();
          std::string tok;
          std::istringstream fs(families);
          while (std::getline(fs, tok, ',')) {
            auto f = family_from_string(tok);
            if (!f) throw std::invalid_argument("unknown family " + tok);
            config.families.push_back(*f);
          }
          RunSummary s = run_trials(config);
          py::dict d;
          d["certified"] = s.certified;
          d["equal"] = s.equal;
          d["unknown"] = s.unknown;
          d["precondition_failed"] = s.precondition_failed;
          d["ok"] = s.ok;
          return d;
        },
        py::arg("trials") = 30, py::arg("families") = "F1,F2,F3", py::arg("seed_hex") = "2a",
        py::arg("budget") = 100000);
}
