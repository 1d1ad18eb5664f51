// nckit: command-line front end for the nckit library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage, parse or domain error.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nckit/nckit.hpp"

namespace {

using namespace nckit;
using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

// raised for flag combinations CLI11 cannot express (kind mismatches etc.)
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool g_float = false;

std::string show(const Rational& r) {
  if (!g_float) return to_string(r);
  std::ostringstream os;
  os << std::setprecision(12) << r.convert_to<double>();
  return os.str();
}

void emit(const SeriesDocument& doc, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") std::cout << to_json(doc);
  else write_series_file(out_path, doc);
}

void require_kind(const SeriesDocument& doc, SeriesKind want, const std::string& what) {
  if (doc.kind != want) {
    throw usage_error(what + " needs kind '" + to_string(want) + "', input has kind '" + to_string(doc.kind) + "'");
  }
}

// ---- transform -------------------------------------------------------------

struct TransformArgs {
  std::string input;
  std::string to;
  std::string out;
};

int cmd_transform(const TransformArgs& a) {
  const SeriesDocument in = read_series_file(a.input);
  const NCSeries& f = in.series;
  const std::string what = "--to " + a.to;
  SeriesDocument out{NCSeries(f.k(), f.degree()), SeriesKind::moments};

  if (a.to == "moments") {
    switch (in.kind) {
    case SeriesKind::moments: out.series = f; break;
    case SeriesKind::r_transform: out.series = r_to_moments(f); break;
    case SeriesKind::eta: out.series = eta_to_moments(f); break;
    }
  } else if (a.to == "r") {
    require_kind(in, SeriesKind::moments, what);
    out = {moments_to_r(f), SeriesKind::r_transform};
  } else if (a.to == "eta") {
    require_kind(in, SeriesKind::moments, what);
    out = {moments_to_eta(f), SeriesKind::eta};
  } else if (a.to == "reta") {
    require_kind(in, SeriesKind::r_transform, what);
    out = {reta(f), SeriesKind::eta};
  } else if (a.to == "reta-inv") {
    require_kind(in, SeriesKind::eta, what);
    out = {reta_inv(f), SeriesKind::r_transform};
  } else if (a.to == "bp") {
    require_kind(in, SeriesKind::moments, what);
    out.series = bp_map(Distribution(f)).moments;
  } else { // bp-inv
    require_kind(in, SeriesKind::moments, what);
    out.series = bp_inv(Distribution(f)).moments;
  }
  emit(out, a.out);
  return kOk;
}

// ---- convolve --------------------------------------------------------------

struct ConvolveArgs {
  std::string a;
  std::string b;
  std::string op;
  std::string out;
};

int cmd_convolve(const ConvolveArgs& args) {
  const SeriesDocument a = read_series_file(args.a);
  const SeriesDocument b = read_series_file(args.b);
  if (a.series.k() != b.series.k()) {
    throw usage_error("operands have different k (" + std::to_string(a.series.k()) + " vs " +
                      std::to_string(b.series.k()) + ")");
  }
  if (args.op == "boxed") {
    if (a.kind != b.kind) throw usage_error("--op boxed needs operands of the same kind");
    emit({boxed_convolution(a.series, b.series), a.kind}, args.out);
    return kOk;
  }
  const std::string what = "--op " + args.op;
  require_kind(a, SeriesKind::moments, what);
  require_kind(b, SeriesKind::moments, what);
  const Distribution da(a.series), db(b.series);
  const Distribution r = args.op == "free-add" ? free_add_convolve(da, db)
                         : args.op == "boolean" ? boolean_convolve(da, db)
                                                : free_mult_convolve(da, db);
  emit({r.moments, SeriesKind::moments}, args.out);
  return kOk;
}

// ---- power -----------------------------------------------------------------

struct PowerArgs {
  std::string input;
  std::string kind;
  std::string t;
  std::string out;
};

int cmd_power(const PowerArgs& a) {
  const SeriesDocument in = read_series_file(a.input);
  require_kind(in, SeriesKind::moments, "power");
  const Rational t = parse_rational(a.t);
  const Distribution d(in.series);
  const Distribution r = a.kind == "free" ? free_power(d, t) : boolean_power(d, t);
  emit({r.moments, SeriesKind::moments}, a.out);
  return kOk;
}

// ---- random ----------------------------------------------------------------

struct RandomArgs {
  int k = 1;
  int degree = 4;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_random(const RandomArgs& a) {
  SeriesGenerator gen(a.seed);
  emit({gen.dense(a.k, a.degree), SeriesKind::moments}, a.out);
  return kOk;
}

// ---- partitions ------------------------------------------------------------

struct PartitionsArgs {
  int n = 1;
  std::string filter = "nc";
  bool stats = false;
  bool json = false;
};

int cmd_partitions(const PartitionsArgs& a) {
  std::vector<Partition> list;
  if (a.filter == "nc") list = enumerate_nc(a.n);
  else if (a.filter == "interval") list = enumerate_interval(a.n);
  else list = all_partitions(a.n);

  ordered_json rows = ordered_json::array();
  for (const Partition& p : list) {
    const bool nc = is_noncrossing(p);
    if (a.json) {
      ordered_json row;
      row["partition"] = p.to_string();
      if (a.stats) {
        row["blocks"] = p.block_count();
        row["noncrossing"] = nc;
        if (nc) {
          const Partition k = kreweras(p);
          row["outer"] = outer_profile(p).count;
          row["kreweras"] = k.to_string();
          row["kreweras_blocks"] = k.block_count();
          row["s"] = to_string(s_coefficient(p));
        }
      }
      rows.push_back(std::move(row));
      continue;
    }
    std::cout << p.to_string();
    if (a.stats) {
      std::cout << "  |pi|=" << p.block_count();
      if (nc) {
        const Partition k = kreweras(p);
        std::cout << "  |pi|_out=" << outer_profile(p).count << "  K=" << k.to_string()
                  << "  |K|=" << k.block_count() << "  |pi|+|K|=" << p.block_count() + k.block_count()
                  << "  s=" << show(s_coefficient(p));
      } else {
        std::cout << "  crossing";
      }
    }
    std::cout << '\n';
  }
  if (a.json) std::cout << rows.dump(2) << '\n';
  return kOk;
}

// ---- gram ------------------------------------------------------------------

struct GramArgs {
  std::string input;
  int cap = 1;
  bool json = false;
};

int cmd_gram(const GramArgs& a) {
  const SeriesDocument in = read_series_file(a.input);
  require_kind(in, SeriesKind::moments, "gram");
  const GramReport r = gram_check(Distribution(in.series), a.cap);
  if (a.json) {
    ordered_json j;
    j["degree_cap"] = r.degree_cap;
    j["matrix_dim"] = r.matrix_dim;
    j["min_eigen_sign"] = to_string(r.min_eigen_sign);
    if (r.witness) {
      ordered_json w = ordered_json::object();
      for (std::size_t i = 0; i < r.basis.size(); ++i) {
        if ((*r.witness)[i] != 0) w[r.basis[i].empty() ? "" : word_key(r.basis[i])] = to_string((*r.witness)[i]);
      }
      j["witness"] = std::move(w);
      j["witness_value"] = to_string(*r.witness_value);
    }
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "degree_cap: " << r.degree_cap << "\nmatrix_dim: " << r.matrix_dim
            << "\nmin_eigen_sign: " << to_string(r.min_eigen_sign) << '\n';
  if (r.witness) {
    std::cout << "witness (x^T G x = " << show(*r.witness_value) << "):\n";
    for (std::size_t i = 0; i < r.basis.size(); ++i) {
      if ((*r.witness)[i] == 0) continue;
      std::cout << "  " << (r.basis[i].empty() ? "()" : word_key(r.basis[i])) << ": " << show((*r.witness)[i])
                << '\n';
    }
  }
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  VerifyOptions options;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a) {
  std::vector<std::string> suites =
      a.suite == "all" ? verify_suites() : std::vector<std::string>{a.suite};
  bool ok = true;
  ordered_json reports = ordered_json::array();
  for (const std::string& s : suites) {
    const VerifyOutcome o = run_verify_suite(s, a.options);
    ok = ok && o.passed();
    if (a.json) {
      ordered_json j;
      j["suite"] = o.suite;
      j["cases_run"] = o.cases_run;
      j["failures"] = ordered_json::array();
      for (const VerifyFailure& f : o.failures) {
        j["failures"].push_back({{"case", f.descriptor}, {"expected", f.expected}, {"actual", f.actual}});
      }
      reports.push_back(std::move(j));
      continue;
    }
    std::cout << (o.passed() ? "PASS " : "FAIL ") << o.suite << ": " << o.cases_run << " cases, "
              << o.failures.size() << " failures\n";
    for (const VerifyFailure& f : o.failures) {
      std::cout << "  " << f.descriptor;
      if (!f.expected.empty() || !f.actual.empty()) {
        std::cout << "\n    expected: " << f.expected << "\n    actual:   " << f.actual;
      }
      std::cout << '\n';
    }
  }
  if (a.json) std::cout << reports.dump(2) << '\n';
  return ok ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated non-commutative power series, free and Boolean convolutions, exactly."};
  app.require_subcommand(1);
  app.add_flag("--float", g_float, "Render rationals in text reports as decimals (approximate)");

  TransformArgs transform;
  auto* t = app.add_subcommand("transform", "Convert a series between moments, R-transform and eta forms");
  t->add_option("input", transform.input, "Series JSON file")->required()->check(CLI::ExistingFile);
  t->add_option("--to", transform.to, "Target")
      ->required()
      ->check(CLI::IsMember({"moments", "r", "eta", "reta", "reta-inv", "bp", "bp-inv"}));
  t->add_option("--out,-o", transform.out, "Output file (default: stdout)");

  ConvolveArgs convolve;
  auto* c = app.add_subcommand("convolve", "Convolve two series files");
  c->add_option("a", convolve.a, "First series JSON file")->required()->check(CLI::ExistingFile);
  c->add_option("b", convolve.b, "Second series JSON file")->required()->check(CLI::ExistingFile);
  c->add_option("--op", convolve.op, "Operation")
      ->required()
      ->check(CLI::IsMember({"free-add", "boolean", "free-mult", "boxed"}));
  c->add_option("--out,-o", convolve.out, "Output file (default: stdout)");

  PowerArgs power;
  auto* pw = app.add_subcommand("power", "Free or Boolean convolution power with a rational exponent t > 0");
  pw->add_option("input", power.input, "Moments JSON file")->required()->check(CLI::ExistingFile);
  pw->add_option("--kind", power.kind, "free or boolean")->required()->check(CLI::IsMember({"free", "boolean"}));
  pw->add_option("--t", power.t, "Exponent, e.g. 3 or 1/2")->required();
  pw->add_option("--out,-o", power.out, "Output file (default: stdout)");

  RandomArgs random;
  auto* rnd = app.add_subcommand("random", "Seeded random moment series (the verify generator)");
  rnd->add_option("--k", random.k, "Number of variables")->check(CLI::Range(1, 16));
  rnd->add_option("--degree", random.degree, "Truncation degree")->check(CLI::Range(1, 24));
  rnd->add_option("--seed", random.seed, "Generator seed");
  rnd->add_option("--out,-o", random.out, "Output file (default: stdout)");

  PartitionsArgs parts;
  auto* p = app.add_subcommand("partitions", "List partitions of {1..n}");
  p->add_option("n", parts.n, "Ground set size")->required()->check(CLI::PositiveNumber);
  p->add_option("--filter", parts.filter, "nc, interval or all")->check(CLI::IsMember({"nc", "interval", "all"}));
  p->add_flag("--stats", parts.stats, "Show |pi|, |pi|_out, K(pi) and s(pi)");
  p->add_flag("--json", parts.json, "JSON output");

  GramArgs gram;
  auto* g = app.add_subcommand("gram", "Exact positivity check of the truncated Gram matrix");
  g->add_option("input", gram.input, "Moments JSON file")->required()->check(CLI::ExistingFile);
  g->add_option("--cap", gram.cap, "Word-length cap d (needs degree >= 2d)")->required()->check(CLI::PositiveNumber);
  g->add_flag("--json", gram.json, "JSON output");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run seeded identity batteries");
  std::vector<std::string> suite_names = verify_suites();
  suite_names.push_back("all");
  v->add_option("--suite", verify.suite, "Suite name")->check(CLI::IsMember(suite_names));
  v->add_option("--seed", verify.options.seed, "Generator seed");
  v->add_option("--trials", verify.options.trials, "Random trials per suite")->check(CLI::Range(1, 100000));
  v->add_option("--kmax", verify.options.kmax, "Largest k drawn")->check(CLI::Range(1, 4));
  v->add_option("--dmax", verify.options.dmax, "Truncation degree")->check(CLI::Range(1, 8));
  v->add_flag("--json", verify.json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*t) return cmd_transform(transform);
    if (*c) return cmd_convolve(convolve);
    if (*pw) return cmd_power(power);
    if (*rnd) return cmd_random(random);
    if (*p) return cmd_partitions(parts);
    if (*g) return cmd_gram(gram);
    if (*v) return cmd_verify(verify);
  } catch (const std::exception& e) {
    // parse, domain, size and I/O errors all land here
    std::cerr << "nckit: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
