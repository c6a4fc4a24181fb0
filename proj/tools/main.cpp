// Command-line surface for the exact-arithmetic toolkit: Clifford/Pin
// checks, Maslov indices of sampled loops, sign-formula evaluation,
// boundary-stratum certification and the Schubert-calculus counts.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "ogw/class_expr.hpp"
#include "ogw/clifford.hpp"
#include "ogw/json_io.hpp"
#include "ogw/maslov.hpp"
#include "ogw/schubert.hpp"
#include "ogw/signs.hpp"
#include "ogw/strata.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

struct Output {
  bool json = false;

  void emit(const std::string& text, const ogw::Json& j) const {
    if (json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text << "\n";
    }
  }
};

// Parses "e1*e2", "e1e2", "-e1", "3*e1e2", "1", "-1/2*e2".
ogw::CliffordElement parse_clifford_word(const std::string& text, ogw::CliffordModel model) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  skip_ws();
  long long num = 1, den = 1;
  bool have_coeff = false;
  if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    have_coeff = true;
    num = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      num = num * 10 + (text[i] - '0');
      ++i;
    }
    if (i < text.size() && text[i] == '/') {
      ++i;
      den = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        den = den * 10 + (text[i] - '0');
        ++i;
      }
    }
  }
  std::vector<int> indices;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] == '*') {
      ++i;
      continue;
    }
    if (text[i] != 'e') {
      throw std::invalid_argument("bad Clifford expression near '" + text.substr(i) + "'");
    }
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("generator needs an index, e.g. e1");
    }
    int idx = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      idx = idx * 10 + (text[i] - '0');
      ++i;
    }
    indices.push_back(idx);
  }
  if (!have_coeff && indices.empty()) {
    throw std::invalid_argument("empty Clifford expression");
  }
  ogw::Rational coeff(negative ? -num : num, den);
  return ogw::CliffordElement::blade(model, indices, coeff);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact sign, index and intersection computations for real enumerative geometry"};
  app.require_subcommand(1);

  Output out;
  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // clifford
  auto* clifford = app.add_subcommand("clifford", "Clifford/Pin blade arithmetic");
  clifford->require_subcommand(1);
  std::string cl_model = "pin-";
  int cl_n = 3;
  clifford->add_option("--model", cl_model, "pin+ or pin-");
  clifford->add_option("-n,--dim", cl_n, "number of generators");
  std::string cl_a, cl_b;
  auto* cl_mul = clifford->add_subcommand("mul", "product of two elements");
  cl_mul->add_option("a", cl_a)->required();
  cl_mul->add_option("b", cl_b)->required();
  auto* cl_cover = clifford->add_subcommand("covering", "image under the covering map");
  cl_cover->add_option("a", cl_a)->required();
  auto* cl_const = clifford->add_subcommand("lift-constant", "constant-path lifting check");
  cl_const->add_option("a", cl_a)->required();
  auto* cl_conj = clifford->add_subcommand("lift-conjugation", "conjugation lifting check");
  cl_conj->add_option("a", cl_a)->required();

  // maslov
  auto* maslov = app.add_subcommand("maslov", "Maslov index of a sampled loop");
  std::string loop_path;
  double maslov_tol = 1e-9;
  maslov->add_option("--loop", loop_path, "loop JSON file")->required();
  maslov->add_option("--tol", maslov_tol, "determinant degeneracy tolerance");

  // sign
  auto* sign = app.add_subcommand("sign", "evaluate a sign formula on a context file");
  sign->require_subcommand(1);
  std::string sign_path;
  auto* sign_phi = sign->add_subcommand("phi", "involution sign on the marked moduli space");
  sign_phi->add_option("--json", sign_path, "SignContext JSON file")->required();
  auto* sign_t = sign->add_subcommand("T", "conjugation sign on a determinant line");
  sign_t->add_option("--json", sign_path, "SignContext JSON file")->required();
  auto* sign_bubble = sign->add_subcommand("bubble", "boundary stratum sign");
  sign_bubble->add_option("--json", sign_path, "BubbleContext JSON file")->required();
  auto* sign_dim = sign->add_subcommand("dim", "expected-dimension balance");
  sign_dim->add_option("--json", sign_path, "SignContext JSON file")->required();

  // strata
  auto* strata = app.add_subcommand("strata", "boundary strata of the invariance cobordism");
  strata->require_subcommand(1);
  std::string strata_path;
  long long strata_bound = 12;
  bool strata_aod = false;
  strata->add_option("--json", strata_path, "SignContext JSON file")->required();
  strata->add_option("--bound", strata_bound, "Maslov index bound for bubbles");
  strata->add_flag("--aod", strata_aod, "assert the sphere-bubble avoidance condition");
  auto* strata_enum = strata->add_subcommand("enumerate", "list boundary strata");
  auto* strata_cert = strata->add_subcommand("certify", "cancellation certificate");

  // schubert
  auto* schubert = app.add_subcommand("schubert", "evaluate a class expression on G(2,n)");
  int schubert_n = 5;
  std::string schubert_expr;
  bool schubert_integrate = false;
  schubert->add_option("--n", schubert_n, "ambient Grassmannian G(2,n)")->required();
  schubert->add_option("--expr", schubert_expr, "class expression")->required();
  schubert->add_flag("--integrate", schubert_integrate, "integrate over G(2,n)");

  // quintic
  auto* quintic = app.add_subcommand("quintic", "line counts on the quintic threefold");
  bool quintic_real = false, quintic_complex = false;
  quintic->add_flag("--real", quintic_real, "count of oriented real lines");
  quintic->add_flag("--complex", quintic_complex, "classical complex count");

  // verify
  auto* verify = app.add_subcommand("verify", "exhaustive identity verification");
  verify->require_subcommand(1);
  auto* verify_canc = verify->add_subcommand("cancellation", "boundary sign cancellation sweep");
  int verify_n = 2;
  long long verify_bound = 12;
  bool break_hypothesis = false;
  verify_canc->add_option("--n", verify_n, "dim L (2 or 3)")->required();
  verify_canc->add_option("--bound", verify_bound, "sweep bound");
  verify_canc->add_flag("--break-hypothesis", break_hypothesis,
                        "use w1(d_b) = k_b mod 2 instead of k_b + 1");

  CLI11_PARSE(app, argc, argv);
  out.json = (format == "json");

  try {
    if (clifford->parsed()) {
      ogw::CliffordModel model(ogw::pin_from_string(cl_model), cl_n);
      if (cl_mul->parsed()) {
        auto r = parse_clifford_word(cl_a, model) * parse_clifford_word(cl_b, model);
        out.emit(r.str(), ogw::Json{{"schema", "ogw/clifford-v1"}, {"result", r.str()}});
      } else if (cl_cover->parsed()) {
        auto p = ogw::covering_map(parse_clifford_word(cl_a, model));
        out.emit(p.str(), ogw::Json{{"schema", "ogw/clifford-v1"}, {"result", p.str()}});
      } else if (cl_const->parsed()) {
        bool ok = ogw::check_constant_lift(parse_clifford_word(cl_a, model));
        out.emit(ok ? "true" : "false",
                 ogw::Json{{"schema", "ogw/clifford-v1"}, {"result", ok}});
      } else {
        bool ok = ogw::check_conjugation_lift(parse_clifford_word(cl_a, model));
        out.emit(ok ? "true" : "false",
                 ogw::Json{{"schema", "ogw/clifford-v1"}, {"result", ok}});
      }
      return kExitOk;
    }

    if (maslov->parsed()) {
      ogw::MaslovOptions opts;
      opts.tol = maslov_tol;
      auto loop = ogw::loop_from_json(ogw::load_json_file(loop_path), opts);
      const int mu = ogw::maslov_index(loop);
      out.emit(std::to_string(mu), ogw::Json{{"schema", "ogw/maslov-v1"},
                                             {"mu", mu},
                                             {"w1", ogw::mod2(mu)},
                                             {"samples", loop.sample_count()}});
      return kExitOk;
    }

    if (sign->parsed()) {
      const ogw::Json j = ogw::load_json_file(sign_path);
      if (sign_dim->parsed()) {
        auto ctx = ogw::sign_context_from_json(j);
        auto bal = ogw::expected_dim_balance(ctx);
        out.emit("lhs=" + std::to_string(bal.lhs) + " rhs=" + std::to_string(bal.rhs) +
                     (bal.admissible ? " admissible" : " vanishes"),
                 ogw::Json{{"schema", "ogw/sign-v1"},
                           {"lhs", bal.lhs},
                           {"rhs", bal.rhs},
                           {"admissible", bal.admissible},
                           {"sign", bal.admissible ? 1 : 0}});
        return kExitOk;
      }
      int s;
      if (sign_phi->parsed()) {
        auto ctx = ogw::sign_context_from_json(j);
        s = ogw::sign_phi_L(ctx);
      } else if (sign_t->parsed()) {
        auto ctx = ogw::sign_context_from_json(j);
        s = ogw::sign_T(ctx.mu_d, ctx.n, ctx.g0, ctx.m, ctx.w1_da, ctx.model);
      } else {
        auto b = ogw::bubble_context_from_json(j);
        s = b.z1_bubbles ? ogw::sign_boundary_with_z1(b) : ogw::sign_boundary_no_z1(b);
      }
      out.emit(std::to_string(s), ogw::Json{{"schema", "ogw/sign-v1"}, {"sign", s}});
      return kExitOk;
    }

    if (strata->parsed()) {
      auto ctx = ogw::sign_context_from_json(ogw::load_json_file(strata_path));
      ogw::StrataOptions opts;
      opts.aod_asserted = strata_aod;
      if (strata_enum->parsed()) {
        auto list = ogw::enumerate_boundary_strata(ctx, strata_bound, opts);
        ogw::Json arr = ogw::Json::array();
        for (const auto& s : list) arr.push_back(ogw::stratum_to_json(s));
        out.emit(std::to_string(list.size()) + " strata",
                 ogw::Json{{"schema", "ogw/certificate-v1"},
                           {"strata_count", list.size()},
                           {"strata", arr},
                           {"sign_failures", ogw::Json::array()},
                           {"pair_count", list.size() / 2},
                           {"fixed_count", 0},
                           {"weight_failures", 0},
                           {"formal_total", 0},
                           {"certified", nullptr}});
        return kExitOk;
      }
      if (strata_cert->parsed()) {
        auto cert = ogw::cancellation_certificate(ctx, strata_bound, opts);
        out.emit(std::string(cert.certified ? "certified" : "FAILED") +
                     ": strata=" + std::to_string(cert.strata_count) +
                     " pairs=" + std::to_string(cert.pair_count) +
                     " total=" + cert.formal_total.str(),
                 ogw::certificate_to_json(cert));
        return cert.certified ? kExitOk : kExitVerificationFailure;
      }
    }

    if (schubert->parsed()) {
      auto ast = ogw::parse_class_expression(schubert_expr, schubert_n);
      auto value = ogw::evaluate_class_expression(*ast, schubert_n);
      if (schubert_integrate) {
        auto integral = ogw::integrate(value);
        ogw::Json j = ogw::schur_class_to_json(value);
        j["integral"] = integral.is_integer() ? ogw::Json(integral.as_integer())
                                              : ogw::Json(integral.str());
        out.emit(integral.str(), j);
      } else {
        out.emit(value.str(), ogw::schur_class_to_json(value));
      }
      return kExitOk;
    }

    if (quintic->parsed()) {
      if (quintic_real == quintic_complex) {
        std::cerr << "quintic: choose exactly one of --real, --complex\n";
        return kExitInputError;
      }
      if (quintic_real) {
        auto r = ogw::count_real_lines_quintic();
        out.emit(std::to_string(r.count), ogw::Json{{"schema", "ogw/quintic-v1"},
                                                    {"count", r.count},
                                                    {"euler_coeff", r.euler_coeff},
                                                    {"base_integral", r.base_integral}});
      } else {
        const long long c = ogw::count_complex_lines_quintic();
        out.emit(std::to_string(c), ogw::Json{{"schema", "ogw/quintic-v1"}, {"count", c}});
      }
      return kExitOk;
    }

    if (verify_canc->parsed()) {
      auto report = ogw::verify_cancellation(
          verify_n, ogw::SweepBounds::from_bound(verify_bound),
          break_hypothesis ? ogw::ParityHypothesis::Broken : ogw::ParityHypothesis::Standard);
      out.emit(std::string(report.verified() ? "verified" : "FAILED") +
                   ": tuples=" + std::to_string(report.tuples_checked) +
                   " admissible=" + std::to_string(report.admissible) +
                   " failures=" + std::to_string(report.failure_count),
               ogw::cancellation_report_to_json(report));
      return report.verified() ? kExitOk : kExitVerificationFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  std::cerr << "no subcommand executed\n";
  return kExitInputError;
}
