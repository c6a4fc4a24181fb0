#include "ogw/json_io.hpp"

#include <fstream>

namespace ogw {

namespace {

Json rational_to_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return Json{{"num", r.num()}, {"den", r.den()}};
}

int get_bit(const Json& j, const char* key) {
  return require_bit(j.at(key).get<long long>(), key);
}

void require_fields(const Json& j, std::initializer_list<const char*> fields,
                    const char* what) {
  if (!j.is_object()) {
    throw std::invalid_argument(std::string(what) + ": expected a JSON object");
  }
  for (const char* f : fields) {
    if (!j.contains(f)) {
      throw std::invalid_argument(std::string(what) + ": missing field '" + f + "'");
    }
  }
}

}  // namespace

Json sign_context_to_json(const SignContext& ctx) {
  return Json{{"n", ctx.n},       {"g0", ctx.g0},
              {"m", ctx.m},       {"mu_d", ctx.mu_d},
              {"w1_da", ctx.w1_da}, {"k_a", ctx.k_a},
              {"l", ctx.l},       {"w2_psi_d", ctx.w2_psi_d},
              {"model", to_string(ctx.model)}};
}

SignContext sign_context_from_json(const Json& j) {
  require_fields(j, {"n", "mu_d", "w1_da", "k_a"}, "sign context");
  SignContext ctx;
  ctx.n = j.at("n").get<int>();
  ctx.g0 = j.value("g0", 0);
  ctx.m = j.value("m", static_cast<int>(j.at("k_a").size()));
  ctx.mu_d = j.at("mu_d").get<long long>();
  ctx.w1_da = j.at("w1_da").get<std::vector<int>>();
  ctx.k_a = j.at("k_a").get<std::vector<int>>();
  ctx.l = j.value("l", 0);
  ctx.w2_psi_d = j.value("w2_psi_d", 0);
  ctx.model = pin_from_string(j.value("model", "pin-"));
  ctx.validate();
  return ctx;
}

Json bubble_context_to_json(const BubbleContext& b) {
  return Json{{"n", b.n},
              {"mu_dpp", b.mu_dpp},
              {"w1_bdpp", b.w1_bdpp},
              {"w1_dpb", b.w1_dpb},
              {"k_b", b.k_b},
              {"k_prime", b.k_prime},
              {"k_dprime", b.k_dprime},
              {"l_dprime", b.l_dprime},
              {"w2_psi_dpp", b.w2_psi_dpp},
              {"z1_bubbles", b.z1_bubbles},
              {"model", to_string(b.model)}};
}

BubbleContext bubble_context_from_json(const Json& j) {
  require_fields(j, {"n", "mu_dpp", "k_dprime"}, "bubble context");
  BubbleContext b;
  b.n = j.at("n").get<int>();
  b.mu_dpp = j.at("mu_dpp").get<long long>();
  b.w1_bdpp = j.contains("w1_bdpp") ? get_bit(j, "w1_bdpp") : mod2(b.mu_dpp);
  b.w1_dpb = j.contains("w1_dpb") ? get_bit(j, "w1_dpb") : 0;
  b.k_dprime = j.at("k_dprime").get<int>();
  b.k_prime = j.value("k_prime", 0);
  b.k_b = j.value("k_b", b.k_prime + b.k_dprime);
  b.l_dprime = j.value("l_dprime", 0);
  b.w2_psi_dpp = j.contains("w2_psi_dpp") ? get_bit(j, "w2_psi_dpp") : 0;
  b.z1_bubbles = j.value("z1_bubbles", false);
  b.model = pin_from_string(j.value("model", "pin-"));
  b.validate();
  return b;
}

Json loop_to_json(const TotallyRealLoop& loop) {
  const int n = loop.rank();
  Json samples = Json::array();
  for (const Frame& f : loop.samples()) {
    Json entries = Json::array();
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        entries.push_back(Json::array({f(r, c).real(), f(r, c).imag()}));
      }
    }
    samples.push_back(std::move(entries));
  }
  return Json{{"schema", "ogw/loop-v1"}, {"n", n}, {"samples", samples}};
}

TotallyRealLoop loop_from_json(const Json& j, const MaslovOptions& opts) {
  require_fields(j, {"n", "samples"}, "loop file");
  const int n = j.at("n").get<int>();
  if (n < 1) throw std::invalid_argument("loop file: n must be >= 1");
  std::vector<Frame> frames;
  for (const Json& sample : j.at("samples")) {
    if (!sample.is_array() || static_cast<int>(sample.size()) != n * n) {
      throw std::invalid_argument("loop file: each sample needs n*n [re, im] entries");
    }
    Frame f(n, n);
    int idx = 0;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c, ++idx) {
        const Json& e = sample[idx];
        if (!e.is_array() || e.size() != 2) {
          throw std::invalid_argument("loop file: entries must be [re, im] pairs");
        }
        f(r, c) = std::complex<double>(e[0].get<double>(), e[1].get<double>());
      }
    }
    frames.push_back(std::move(f));
  }
  return TotallyRealLoop::from_samples(std::move(frames), opts);
}

Json schur_class_to_json(const SchurClass& u) {
  Json terms = Json::array();
  for (const auto& [p, c] : u.coeffs()) {
    terms.push_back(Json{{"partition", {p.a, p.b}}, {"coeff", rational_to_json(c)}});
  }
  return Json{{"schema", "ogw/class-v1"}, {"ambient_n", u.ambient()}, {"terms", terms}};
}

Json cancellation_report_to_json(const CancellationReport& r) {
  Json failures = Json::array();
  for (const CancellationFailure& f : r.failures) {
    failures.push_back(Json{{"context", bubble_context_to_json(f.ctx)},
                            {"branch", f.branch},
                            {"sign", f.sign}});
  }
  return Json{{"schema", "ogw/cancellation-v1"},
              {"n", r.n},
              {"hypothesis", r.hypothesis == ParityHypothesis::Standard ? "standard" : "broken"},
              {"tuples_checked", r.tuples_checked},
              {"admissible", r.admissible},
              {"evaluations", r.evaluations},
              {"failure_count", r.failure_count},
              {"failures", failures},
              {"verified", r.verified()},
              {"notes", r.notes}};
}

Json stratum_to_json(const StratumDescriptor& s) {
  return Json{{"b", s.b},
              {"k_dprime", s.k_dprime},
              {"z1_in_sigma", s.z1_in_sigma},
              {"l_dprime", s.l_dprime},
              {"mu_dprime", s.mu_dprime},
              {"mu_dprime_parent", s.mu_dprime_parent},
              {"w1_dpb", s.w1_dpb},
              {"w1_bdpp", s.w1_bdpp},
              {"r", s.r},
              {"subset_count", s.subset_count},
              {"side", s.side == ConjugateSide::Primary ? "primary" : "conjugate"},
              {"self_conjugate", s.self_conjugate},
              {"mu_zero_risk", s.mu_zero_risk}};
}

Json certificate_to_json(const CancellationCertificate& c) {
  Json strata = Json::array();
  for (const StratumDescriptor& s : c.strata) strata.push_back(stratum_to_json(s));
  Json sign_failures = Json::array();
  for (std::size_t i : c.sign_failures) sign_failures.push_back(i);
  return Json{{"schema", "ogw/certificate-v1"},
              {"strata_count", c.strata_count},
              {"strata", strata},
              {"sign_failures", sign_failures},
              {"pair_count", c.pair_count},
              {"fixed_count", c.fixed_count},
              {"weight_failures", c.weight_failures},
              {"formal_total", rational_to_json(c.formal_total)},
              {"certified", c.certified},
              {"notes", c.notes}};
}

void validate_report(const Json& j) {
  if (!j.is_object() || !j.contains("schema")) {
    throw std::invalid_argument("report is missing its schema field");
  }
  const std::string schema = j.at("schema").get<std::string>();
  auto need = [&](std::initializer_list<const char*> fields) {
    require_fields(j, fields, schema.c_str());
  };
  if (schema == "ogw/cancellation-v1") {
    need({"n", "hypothesis", "tuples_checked", "admissible", "evaluations", "failure_count",
          "failures", "verified", "notes"});
  } else if (schema == "ogw/certificate-v1") {
    need({"strata_count", "strata", "sign_failures", "pair_count", "fixed_count",
          "weight_failures", "formal_total", "certified"});
  } else if (schema == "ogw/class-v1") {
    need({"ambient_n", "terms"});
  } else if (schema == "ogw/loop-v1") {
    need({"n", "samples"});
  } else if (schema == "ogw/maslov-v1") {
    need({"mu", "w1", "samples"});
  } else if (schema == "ogw/quintic-v1") {
    need({"count"});
  } else if (schema == "ogw/sign-v1") {
    need({"sign"});
  } else if (schema == "ogw/clifford-v1") {
    need({"result"});
  } else {
    throw std::invalid_argument("unknown report schema: " + schema);
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace ogw
