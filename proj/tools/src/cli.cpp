#include "cli.hpp"

#include "slope_kernel/arith.hpp"
#include "slope_kernel/asymptotics.hpp"
#include "slope_kernel/bijection.hpp"
#include "slope_kernel/enumerate.hpp"
#include "slope_kernel/identities.hpp"
#include "slope_kernel/jump_set.hpp"
#include "slope_kernel/kernel.hpp"
#include "slope_kernel/real.hpp"
#include "slope_kernel/recurrence.hpp"
#include "slope_kernel/series.hpp"

#include <CLI11.hpp>
#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace slope_kernel::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "slope-kernel/1";

// Raised for bad arguments discovered after parsing.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  std::string format = "json";
  std::string output;
  std::optional<unsigned> precision;
};

unsigned resolve_precision(const Common& common) {
  unsigned bits = kDefaultPrecisionBits;
  if (common.precision) {
    bits = *common.precision;
  } else if (const char* env = std::getenv("SLOPE_KERNEL_PRECISION"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(env, &used);
      if (used != std::string(env).size()) {
        throw std::invalid_argument(env);
      }
      bits = static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("SLOPE_KERNEL_PRECISION is not a number: ") + env);
    }
  }
  if (bits < kMinPrecisionBits || bits > 65536) {
    throw UsageError("precision must be between " + std::to_string(kMinPrecisionBits) + " and 65536 bits");
  }
  return bits;
}

int decimal_digits(unsigned bits) { return static_cast<int>(bits * 30103UL / 100000UL) - 3; }

Json header(const std::string& command) { return Json{{"schema", kSchema}, {"command", command}}; }

Json rational_pair(const Rational& q) { return Json::array({q.get_num().get_str(), q.get_den().get_str()}); }

Json series_json(const TruncSeries& s, const std::string& variable) {
  Json coeffs = Json::array();
  for (const Rational& q : s.coeffs()) {
    coeffs.push_back(rational_pair(q));
  }
  return Json{{"variable", variable}, {"ramification", s.ramification()}, {"order", s.order()}, {"coeffs", coeffs}};
}

Json report_json(const IdentityReport& r) {
  Json j{{"identity", r.identity}, {"from", r.from}, {"to", r.to}, {"passed", r.passed}};
  j["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
  if (!r.convention.empty()) {
    j["convention"] = r.convention;
  }
  j["notes"] = r.notes;
  return j;
}

class Sink {
 public:
  Sink(const Common& common, std::ostream& fallback) {
    if (!common.output.empty()) {
      file_.open(common.output);
      if (!file_) {
        throw UsageError("cannot open output file " + common.output);
      }
    }
    out_ = common.output.empty() ? &fallback : &file_;
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void add_common(CLI::App* sub, Common& common, bool with_precision) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();
  sub->add_flag_callback("--csv", [&common] { common.format = "csv"; }, "Shorthand for --format csv");
  sub->add_option("-o,--output", common.output, "Write to this file instead of standard output");
  if (with_precision) {
    sub->add_option("--precision", common.precision, "Working precision in bits (default 256)");
  }
}

void require_format(const Common& common, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (common.format == f) {
      return;
    }
  }
  throw UsageError("format " + common.format + " is not available for this command");
}

// ---------------------------------------------------------------------------

struct CountArgs {
  std::string jumps = "+5:1,-2:1";
  int start = 0;
  int floor = 0;
  bool unconstrained = false;
  int n_max = 10;
};

int cmd_count(const CountArgs& a, const Common& common, std::ostream& os) {
  const JumpSet jumps = JumpSet::parse(a.jumps);
  const std::optional<int> floor = a.unconstrained ? std::nullopt : std::optional<int>(a.floor);
  const CountTable table = build_counts(jumps, a.start, floor, a.n_max);
  if (common.format == "csv") {
    os << "n,k,count\n";
    for (int n = 0; n <= a.n_max; ++n) {
      for (int k = table.min_altitude(n); k <= table.max_altitude(n); ++k) {
        const Rational c = table.count(n, k);
        if (c != 0) {
          os << n << ',' << k << ',' << c.get_str() << '\n';
        }
      }
    }
    return 0;
  }
  if (common.format == "plain") {
    for (int n = 0; n <= a.n_max; ++n) {
      os << "n=" << n << ':';
      for (int k = table.min_altitude(n); k <= table.max_altitude(n); ++k) {
        const Rational c = table.count(n, k);
        if (c != 0) {
          os << ' ' << k << ':' << c.get_str();
        }
      }
      os << '\n';
    }
    return 0;
  }
  Json j = header("count");
  j["jumps"] = jumps.to_string();
  j["start"] = a.start;
  j["floor"] = floor ? Json(*floor) : Json(nullptr);
  j["n_max"] = a.n_max;
  Json rows = Json::array();
  for (int n = 0; n <= a.n_max; ++n) {
    Json counts = Json::array();
    for (int k = table.min_altitude(n); k <= table.max_altitude(n); ++k) {
      counts.push_back(table.count(n, k).get_str());
    }
    rows.push_back(Json{{"n", n}, {"lo", table.min_altitude(n)}, {"counts", counts}, {"total", table.row_sum(n).get_str()}});
  }
  j["rows"] = rows;
  os << j.dump(2) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

struct KnuthArgs {
  std::optional<int> n;
  std::optional<int> n_max;
  std::string column = "A_plus_B";
};

int cmd_knuth(const KnuthArgs& a, const Common& common, std::ostream& os) {
  if (a.n.has_value() == a.n_max.has_value()) {
    throw UsageError("give exactly one of --n and --n-max");
  }
  const int last = a.n ? *a.n : *a.n_max;
  if (last < 1) {
    throw UsageError("n must be >= 1");
  }
  const std::vector<KnuthCounts> seq = knuth_AB_sequence(last);
  const int first = a.n ? last : 1;
  auto ratio = [](const KnuthCounts& c) { return Real(make_rational(c.a, c.b), 128).to_string(30); };
  auto entry = [&](int n) {
    const KnuthCounts& c = seq[static_cast<std::size_t>(n - 1)];
    return Json{{"n", n}, {"A", c.a.get_str()}, {"B", c.b.get_str()}, {"A_plus_B", c.sum().get_str()},
                {"ratio", ratio(c)}};
  };
  if (common.format == "csv" || common.format == "plain") {
    if (common.format == "csv") {
      os << "n,value\n";
    }
    for (int n = first; n <= last; ++n) {
      const Json e = entry(n);
      if (!e.contains(a.column)) {
        throw UsageError("unknown column " + a.column + " (A, B, A_plus_B, ratio)");
      }
      os << n << (common.format == "csv" ? "," : " ") << e[a.column].get<std::string>() << '\n';
    }
    return 0;
  }
  Json j = header("knuth");
  if (a.n) {
    const Json e = entry(*a.n);
    for (auto it = e.begin(); it != e.end(); ++it) {
      j[it.key()] = it.value();
    }
  } else {
    Json rows = Json::array();
    for (int n = 1; n <= last; ++n) {
      rows.push_back(entry(n));
    }
    j["rows"] = rows;
  }
  os << j.dump(2) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

struct SeriesArgs {
  std::string which = "F0";
  int order = 20;
};

int cmd_series(const SeriesArgs& a, const Common& common, std::ostream& os) {
  if (a.order < 1) {
    throw UsageError("--order must be >= 1");
  }
  const auto order = static_cast<std::size_t>(a.order);
  TruncSeries s(1, 0);
  std::string variable = "z";
  if (a.which == "F0" || a.which == "G1") {
    const KnuthSeries ks = series_F0_G1(order);
    s = a.which == "F0" ? ks.f0 : ks.g1;
  } else if (a.which == "u1" || a.which == "u2") {
    const SmallBranchSeries b = small_branch_series(KernelForm::from_jumps(knuth_jumps()), order);
    s = a.which == "u1" ? b.u1 : b.u2;
    variable = "t";
  } else if (a.which == "sympower") {
    s = sym_power_series(order);
  } else {
    throw UsageError("unknown series " + a.which + " (F0, G1, u1, u2, sympower)");
  }
  if (common.format == "csv" || common.format == "plain") {
    if (common.format == "csv") {
      os << "n,value\n";
    }
    for (std::size_t i = 0; i <= s.order(); ++i) {
      os << i << (common.format == "csv" ? "," : " ") << s[i].get_str() << '\n';
    }
    return 0;
  }
  Json j = header("series");
  j["series"] = a.which;
  const Json body = series_json(s, variable);
  for (auto it = body.begin(); it != body.end(); ++it) {
    j[it.key()] = it.value();
  }
  os << j.dump(2) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_constants(const Common& common, std::ostream& os) {
  require_format(common, {"json", "plain"});
  const unsigned bits = resolve_precision(common);
  const AsymptoticConstants c = knuth_constants(bits);
  const MinimalPolynomialReport mp = verify_minimal_polynomials(c);
  const int digits = decimal_digits(bits);
  const std::vector<std::pair<std::string, const Real*>> values{
      {"tau", &c.tau},
      {"rho", &c.rho},
      {"P_at_tau", &c.p_at_tau},
      {"tau2", &c.tau2},
      {"mu", &c.mu},
      {"alpha1", &c.alpha1},
      {"beta1", &c.beta1},
      {"alpha2", &c.alpha2},
      {"beta2", &c.beta2},
      {"alpha2_display", &c.alpha2_display},
      {"beta2_display", &c.beta2_display},
      {"kappa1", &c.kappa1},
      {"kappa2", &c.kappa2},
      {"kappa1_mu_form", &c.kappa1_mu_form},
      {"kappa2_ratio_form", &c.kappa2_ratio_form},
      {"kappa2_display_ratio", &c.kappa2_display_ratio},
  };
  if (common.format == "plain") {
    for (const auto& [name, v] : values) {
      os << name << " = " << v->to_string(digits) << '\n';
    }
    for (const std::string& f : c.findings) {
      os << "note: " << f << '\n';
    }
    return mp.passed ? 0 : 1;
  }
  Json j = header("constants");
  j["precision_bits"] = bits;
  for (const auto& [name, v] : values) {
    j[name] = v->to_string(digits);
  }
  Json residuals = Json::object();
  for (const auto& [name, v] : c.residuals) {
    residuals[name] = v.to_string(6);
  }
  j["residuals"] = residuals;
  j["minimal_polynomials"] = Json{{"kappa1_residual", mp.kappa1_residual.to_string(6)},
                                  {"kappa2_residual", mp.kappa2_residual.to_string(6)},
                                  {"tau2_residual", mp.tau2_residual.to_string(6)},
                                  {"kappa1_real_roots", mp.kappa1_real_roots},
                                  {"kappa2_real_roots", mp.kappa2_real_roots},
                                  {"tau2_real_roots", mp.tau2_real_roots},
                                  {"tolerance", mp.tolerance.to_string(6)},
                                  {"passed", mp.passed}};
  j["findings"] = c.findings;
  os << j.dump(2) << '\n';
  return mp.passed ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string identity;
  std::optional<int> n_max;
  std::optional<int> order;
  int a = 2;
  int c = 5;
  int b = 2;
  int s_max = 4;
  int samples = 20;
  std::vector<double> z;
  bool touching = false;
};

int cmd_verify(const VerifyArgs& a, const Common& common, std::ostream& os) {
  require_format(common, {"json", "plain"});
  Json j = header("verify");
  j["identity"] = a.identity;
  bool passed = false;
  if (a.identity == "aplusb" || a.identity == "recurrence" || a.identity == "sympower" ||
      a.identity == "series-vs-dp") {
    IdentityReport r;
    if (a.identity == "aplusb") {
      r = verify_aplusb(a.n_max.value_or(50));
    } else if (a.identity == "recurrence") {
      r = verify_hypergeometric_recurrence(a.n_max.value_or(40));
    } else if (a.identity == "sympower") {
      r = verify_sym_power(a.n_max.value_or(25));
    } else {
      r = verify_series_vs_dp(a.order.value_or(a.n_max.value_or(200)));
    }
    j["report"] = report_json(r);
    passed = r.passed;
  } else if (a.identity == "thm61") {
    const IdentityReport r = verify_thm61(a.a, a.c, a.s_max);
    j["report"] = report_json(r);
    passed = r.passed;
  } else if (a.identity == "bijection") {
    const BijectionReport r = verify_bijection(SlopeBarrier(a.a, a.c, a.b), a.n_max.value_or(12), a.touching);
    Json lengths = Json::array();
    for (const BijectionLengthCheck& l : r.lengths) {
      lengths.push_back(Json{{"length", l.length},
                             {"ne_count", l.ne_count.get_str()},
                             {"directed_count", l.directed_count.get_str()},
                             {"pathwise_ok", l.pathwise_ok}});
    }
    j["report"] = Json{{"barrier", Json::array({a.a, a.c, a.b})},
                       {"touching", r.touching},
                       {"passed", r.passed},
                       {"lengths", lengths}};
    passed = r.passed;
  } else if (a.identity == "rotation") {
    const unsigned bits = resolve_precision(common);
    std::vector<Complex> points;
    if (!a.z.empty()) {
      if (a.z.size() != 2) {
        throw UsageError("--z takes the real and the imaginary part");
      }
      points.emplace_back(Real::from_double(a.z[0], bits), Real::from_double(a.z[1], bits));
    } else {
      points = rotation_sample_points(a.samples, bits);
    }
    Json checks = Json::array();
    passed = true;
    for (const Complex& z : points) {
      const RotationCheck r = verify_rotation_law(z, bits);
      checks.push_back(Json{{"z", Json::array({z.re().to_string(20), z.im().to_string(20)})},
                            {"rotation_residual_u1", r.rotation_residual_u1.to_string(6)},
                            {"rotation_residual_u2", r.rotation_residual_u2.to_string(6)},
                            {"conjugation_residual_u1", r.conjugation_residual_u1.to_string(6)},
                            {"conjugation_residual_u2", r.conjugation_residual_u2.to_string(6)},
                            {"tolerance", r.tolerance.to_string(6)},
                            {"passed", r.passed}});
      passed = passed && r.passed;
    }
    j["precision_bits"] = bits;
    j["report"] = Json{{"passed", passed}, {"points", checks}};
  } else {
    throw UsageError("unknown identity " + a.identity +
                     " (aplusb, recurrence, sympower, thm61, rotation, bijection, series-vs-dp)");
  }
  if (common.format == "plain") {
    os << a.identity << ": " << (passed ? "pass" : "FAIL") << '\n';
  } else {
    os << j.dump(2) << '\n';
  }
  return passed ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct DuchonArgs {
  int n_max = 60;
  bool fit = false;
  std::string column = "count";
};

int cmd_duchon(const DuchonArgs& a, const Common& common, std::ostream& os) {
  if (a.n_max < 0) {
    throw UsageError("--n-max must be >= 0");
  }
  const std::vector<ExcursionArea> profile = excursion_area_profile(duchon_jumps(), a.n_max);
  auto mean = [&](int n) {
    const ExcursionArea& e = profile[static_cast<std::size_t>(n)];
    return e.count == 0 ? std::string() : make_rational(e.twice_area, e.count * 2).get_str();
  };
  if (common.format == "csv" || common.format == "plain") {
    if (a.column != "count" && a.column != "mean_area") {
      throw UsageError("unknown column " + a.column + " (count, mean_area)");
    }
    if (common.format == "csv") {
      os << "n,value\n";
    }
    for (int n = 0; n <= a.n_max; ++n) {
      const std::string v = a.column == "count" ? profile[static_cast<std::size_t>(n)].count.get_str() : mean(n);
      if (!v.empty()) {
        os << n << (common.format == "csv" ? "," : " ") << v << '\n';
      }
    }
    return 0;
  }
  Json j = header("duchon");
  j["n_max"] = a.n_max;
  Json rows = Json::array();
  for (int n = 0; n <= a.n_max; ++n) {
    const ExcursionArea& e = profile[static_cast<std::size_t>(n)];
    if (e.count != 0) {
      rows.push_back(Json{{"n", n}, {"count", e.count.get_str()}, {"mean_area", mean(n)}});
    }
  }
  j["excursions"] = rows;
  if (a.fit) {
    const unsigned bits = resolve_precision(common);
    const DuchonAreaFit fit = duchon_area_constant(a.n_max, bits);
    j["fit"] = Json{{"c0", fit.c0.to_string(12)},
                    {"c1", fit.c1.to_string(12)},
                    {"K_est", fit.k_est.to_string(12)},
                    {"K_target", fit.target.to_string(12)},
                    {"relative_error", fit.relative_error.to_string(6)}};
  }
  os << j.dump(2) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

struct GuessArgs {
  std::string file;
  int max_order = 5;
  int max_degree = 10;
  int offset = 1;
};

std::vector<BigInt> read_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot read " + path);
  }
  std::vector<BigInt> terms;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream words(line);
    std::string w;
    while (words >> w) {
      for (char& ch : w) {
        ch = ch == ',' ? ' ' : ch;
      }
      std::istringstream parts(w);
      std::string t;
      while (parts >> t) {
        BigInt v;
        if (v.set_str(t, 10) != 0) {
          throw UsageError("not an integer: " + t);
        }
        terms.push_back(v);
      }
    }
  }
  return terms;
}

int cmd_guess(const GuessArgs& a, const Common& common, std::ostream& os) {
  require_format(common, {"json", "plain"});
  const std::vector<BigInt> terms = read_sequence(a.file);
  std::optional<PRecurrence> rec;
  try {
    rec = guess_precurrence(terms, GuessOptions{a.max_order, a.max_degree, a.offset});
  } catch (const InsufficientTermsError& e) {
    throw UsageError(e.what());
  }
  if (common.format == "plain") {
    os << (rec ? rec->to_string() : std::string("no recurrence within the bounds")) << '\n';
    return 0;
  }
  Json j = header("guess-rec");
  j["terms"] = terms.size();
  j["max_order"] = a.max_order;
  j["max_degree"] = a.max_degree;
  j["found"] = rec.has_value();
  if (rec) {
    Json coeffs = Json::array();
    for (const auto& poly : rec->coeffs) {
      Json p = Json::array();
      for (const Rational& q : poly) {
        p.push_back(q.get_str());
      }
      coeffs.push_back(p);
    }
    j["recurrence"] = Json{{"order", rec->order},
                           {"degree", rec->degree},
                           {"offset", rec->offset},
                           {"convention", "c0(n) a(n+r) = sum_{i=1..r} ci(n) a(n+r-i)"},
                           {"coeffs", coeffs},
                           {"text", rec->to_string()}};
  }
  os << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of lattice paths below a rational slope"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "slope-kernel 0.1.0");

  Common common;
  std::function<int(std::ostream&)> action;

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Walk counts f(n, k) by dynamic programming");
  count->add_option("--jumps", count_args.jumps, "Jump set, e.g. \"+5:1,-2:1\"")->capture_default_str();
  count->add_option("--start", count_args.start, "Start altitude")->capture_default_str();
  count->add_option("--floor", count_args.floor, "Lowest allowed altitude")->capture_default_str();
  count->add_flag("--unconstrained", count_args.unconstrained, "No floor (walks and bridges)");
  count->add_option("--n-max", count_args.n_max, "Largest length")->check(CLI::Range(0, 100000))->capture_default_str();
  add_common(count, common, false);
  count->callback([&] { action = [&](std::ostream& os) { return cmd_count(count_args, common, os); }; });

  KnuthArgs knuth_args;
  auto* knuth = app.add_subcommand("knuth", "A_n, B_n under slope 2/5 and their ratio");
  knuth->add_option("--n", knuth_args.n, "Single index");
  knuth->add_option("--n-max", knuth_args.n_max, "All indices 1..n-max");
  knuth->add_option("--column", knuth_args.column, "CSV column: A, B, A_plus_B, ratio")->capture_default_str();
  add_common(knuth, common, false);
  knuth->callback([&] { action = [&](std::ostream& os) { return cmd_knuth(knuth_args, common, os); }; });

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Exact series: F0, G1, u1, u2, sympower");
  series->add_option("which", series_args.which, "Series name")->required();
  series->add_option("--order", series_args.order, "Truncation order")->capture_default_str();
  add_common(series, common, false);
  series->callback([&] { action = [&](std::ostream& os) { return cmd_series(series_args, common, os); }; });

  auto* constants = app.add_subcommand("constants", "Asymptotic constants of the slope-2/5 model");
  add_common(constants, common, true);
  constants->callback([&] { action = [&](std::ostream& os) { return cmd_constants(common, os); }; });

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check an identity on a range");
  verify->add_option("--identity", verify_args.identity, "aplusb | recurrence | sympower | thm61 | rotation | bijection | series-vs-dp")
      ->required();
  verify->add_option("--n-max", verify_args.n_max, "Range end (n, or path length for bijection)");
  verify->add_option("--order", verify_args.order, "Series order for series-vs-dp");
  verify->add_option("--a", verify_args.a, "Slope numerator")->capture_default_str();
  verify->add_option("--c", verify_args.c, "Slope denominator")->capture_default_str();
  verify->add_option("--b", verify_args.b, "Barrier offset (bijection)")->capture_default_str();
  verify->add_option("--s-max", verify_args.s_max, "Largest s for thm61")->capture_default_str();
  verify->add_option("--samples", verify_args.samples, "Sample points for rotation")->capture_default_str();
  verify->add_option("--z", verify_args.z, "Single point for rotation: re im")->expected(2);
  verify->add_flag("--touching", verify_args.touching, "Bijection with the barrier allowed");
  add_common(verify, common, true);
  verify->callback([&] { action = [&](std::ostream& os) { return cmd_verify(verify_args, common, os); }; });

  DuchonArgs duchon_args;
  auto* duchon = app.add_subcommand("duchon", "Excursions with jumps +2/-3, mean areas, area constant");
  duchon->add_option("--n-max", duchon_args.n_max, "Largest length")->capture_default_str();
  duchon->add_flag("--fit", duchon_args.fit, "Extrapolate the area constant");
  duchon->add_option("--column", duchon_args.column, "CSV column: count, mean_area")->capture_default_str();
  add_common(duchon, common, true);
  duchon->callback([&] { action = [&](std::ostream& os) { return cmd_duchon(duchon_args, common, os); }; });

  GuessArgs guess_args;
  auto* guess = app.add_subcommand("guess-rec", "Guess a P-recurrence for a sequence file");
  guess->add_option("file", guess_args.file, "Integers separated by whitespace or commas")->required();
  guess->add_option("--max-order", guess_args.max_order)->capture_default_str();
  guess->add_option("--max-degree", guess_args.max_degree)->capture_default_str();
  guess->add_option("--offset", guess_args.offset, "Index of the first term")->capture_default_str();
  add_common(guess, common, false);
  guess->callback([&] { action = [&](std::ostream& os) { return cmd_guess(guess_args, common, os); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Sink sink(common, out);
    return action(sink.stream());
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace slope_kernel::cli
