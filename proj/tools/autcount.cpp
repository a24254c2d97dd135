// autcount: counts, series, bounds and normal forms for automorphisms of
// F_q[x, y] from the command line.
//
// Exit codes: 0 success, 2 usage or input error, 3 input is not an
// automorphism, 4 a verification failed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "autcount/counting.hpp"
#include "autcount/dirichlet.hpp"
#include "autcount/oracle.hpp"
#include "autcount/serialization.hpp"

using namespace autcount;

namespace {

constexpr int kUsage = 2;
constexpr int kNotAutomorphism = 3;
constexpr int kVerifyFailed = 4;

// Signals an exit code chosen by a command.
struct ExitStatus {
  int code;
};

struct FieldArgs {
  std::uint32_t p = 0;
  unsigned k = 1;
};

void add_field_options(CLI::App* cmd, FieldArgs& f) {
  cmd->add_option("--p", f.p, "characteristic (prime)")->required();
  cmd->add_option("--k", f.k, "extension degree")->capture_default_str()->check(CLI::PositiveNumber);
}

// q = p^k without building the field; counting only needs q.
std::uint64_t field_order(const FieldArgs& f) {
  if (!is_prime(f.p)) throw InvalidArgument("p = " + std::to_string(f.p) + " is not prime");
  if (f.k < 1) throw InvalidArgument("k must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < f.k; ++i) {
    q *= f.p;
    if (q > (std::uint64_t{1} << 31)) throw InvalidArgument("p^k above 2^31 is not supported");
  }
  return q;
}

std::uint64_t ceiling_from_env() {
  const char* raw = std::getenv("AUTCOUNT_CEILING");
  if (!raw || !*raw) return kDefaultCeiling;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(raw, &used);
    if (used != std::string(raw).size() || v == 0) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument(std::string("AUTCOUNT_CEILING is not a positive integer: ") + raw);
  }
}

Json header(const std::string& command, const FieldArgs& f, std::uint64_t q) {
  return {{"command", command}, {"p", f.p}, {"k", f.k}, {"q", q}};
}

DimensionSequence dims_for(const std::string& variety, const std::vector<std::uint64_t>& custom, std::uint64_t horizon) {
  if (variety == "custom") {
    if (custom.size() < horizon)
      throw InvalidArgument("--dims lists " + std::to_string(custom.size()) + " values, need " + std::to_string(horizon));
    return DimensionSequence::custom(custom);
  }
  return DimensionSequence::preset(variety, horizon);
}

const std::vector<std::string> kVarieties{"polynomial", "lie", "anticommutative", "nonassociative", "custom"};

// ---- count

struct CountArgs {
  FieldArgs field;
  std::uint64_t n = 1;
  std::string what = "p";
  std::string format = "plain";
};

void run_count(const CountArgs& a) {
  const auto q = field_order(a.field);
  BigInt v;
  if (a.what == "p")
    v = p_n(q, a.n);
  else if (a.what == "l")
    v = l_n(q, a.n);
  else
    v = z_n(q, a.n);
  if (a.format == "json") {
    auto j = header("count", a.field, q);
    j["n"] = a.n;
    j["what"] = a.what;
    j["value"] = to_decimal(v);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << to_decimal(v) << '\n';
  }
}

// ---- series

struct SeriesArgs {
  FieldArgs field;
  std::uint64_t terms = 10;
  std::string series = "p";
  std::string variety = "polynomial";
  std::vector<std::uint64_t> dims;
  bool nonunitary = false;
  std::string format = "csv";
};

void run_series(const SeriesArgs& a) {
  const auto q = field_order(a.field);
  DirichletSeries s = DirichletSeries::zero(a.terms);
  if (a.series == "p") {
    s = p_series(q, a.terms);
  } else if (a.series == "l") {
    s = l_series(q, a.terms);
  } else if (a.series == "rho") {
    s = rho(q, a.terms);
  } else {
    const auto dims = dims_for(a.variety, a.dims, a.terms);
    s = a.series == "sigma" ? sigma(q, dims, a.terms) : ns_p_series(q, dims, !a.nonunitary, a.terms);
  }
  if (a.format == "json") {
    std::cout << to_json(s).dump() << '\n';
    return;
  }
  std::cout << "n,value\n";
  for (std::uint64_t n = 1; n <= s.horizon(); ++n) std::cout << n << ',' << format_rational(s[n]) << '\n';
}

// ---- bounds

struct RangeArgs {
  FieldArgs field;
  std::uint64_t max_n = 10;
  std::string format = "plain";
};

void run_bounds(const RangeArgs& a) {
  const auto q = field_order(a.field);
  if (a.max_n < 2) throw InvalidArgument("--max-n must be >= 2");
  bool all = true;
  Json rows = Json::array();
  if (a.format != "json") std::cout << "n,lower,value,upper,holds\n";
  for (std::uint64_t n = 2; n <= a.max_n; ++n) {
    const auto b = bounds_check(q, n);
    all = all && b.holds;
    if (a.format == "json") {
      rows.push_back({{"n", n},
                      {"lower", to_decimal(b.lower)},
                      {"value", to_decimal(b.value)},
                      {"upper", to_decimal(b.upper)},
                      {"holds", b.holds}});
    } else {
      std::cout << n << ',' << to_decimal(b.lower) << ',' << to_decimal(b.value) << ',' << to_decimal(b.upper) << ','
                << (b.holds ? "true" : "false") << '\n';
    }
  }
  if (a.format == "json") {
    auto j = header("bounds", a.field, q);
    j["max_n"] = a.max_n;
    j["rows"] = rows;
    j["verdict"] = all ? "PASS" : "FAIL";
    std::cout << j.dump() << '\n';
  } else {
    std::cout << (all ? "PASS" : "FAIL") << '\n';
  }
  if (!all) throw ExitStatus{kVerifyFailed};
}

// ---- verify

struct VerifyArgs {
  RangeArgs range;
  unsigned threads = 0;
  bool roundtrip = false;
};

void run_verify(const VerifyArgs& a) {
  const auto field = FieldSpec::make(a.range.field.p, a.range.field.k);
  const auto q = field.order();
  OracleOptions options;
  options.ceiling = ceiling_from_env();
  options.threads = a.threads;
  options.check_roundtrip = a.roundtrip;

  bool all = true;
  std::cout << "n,p_formula,p_oracle,l_formula,l_oracle,status\n";
  for (std::uint64_t n = 1; n <= a.range.max_n; ++n) {
    const auto pf = p_n(q, n), lf = l_n(q, n);
    std::string po, lo, status;
    try {
      const auto pe = count_by_enumeration(field, n, options);
      const auto le = distinct_components(field, n, options);
      po = to_decimal(pe);
      lo = to_decimal(le);
      status = (pe == pf && le == lf) ? "ok" : "MISMATCH";
    } catch (const ConsistencyError& e) {
      po = lo = "-";
      status = std::string("ERROR: ") + e.what();
    }
    all = all && status == "ok";
    std::cout << n << ',' << to_decimal(pf) << ',' << po << ',' << to_decimal(lf) << ',' << lo << ',' << status << '\n';
  }
  std::cout << (all ? "PASS" : "FAIL") << '\n';
  if (!all) throw ExitStatus{kVerifyFailed};
}

// ---- enumerate

struct EnumerateArgs {
  FieldArgs field;
  std::uint64_t n = 1;
  std::string out = "-";
};

void run_enumerate(const EnumerateArgs& a) {
  const auto field = FieldSpec::make(a.field.p, a.field.k);
  const auto ceiling = ceiling_from_env();
  if (a.out == "-") {
    dump_automorphisms(field, a.n, std::cout, ceiling);
    return;
  }
  std::ofstream file(a.out);
  if (!file) throw InvalidArgument("cannot open " + a.out + " for writing");
  dump_automorphisms(field, a.n, file, ceiling);
}

// ---- decompose

// A single JSON object, a JSON array of objects, or JSON lines.
std::vector<Json> read_pairs(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::vector<Json> out;
  if (auto whole = Json::parse(text, nullptr, false); !whole.is_discarded()) {
    if (whole.is_array())
      for (auto& e : whole) out.push_back(std::move(e));
    else
      out.push_back(std::move(whole));
    return out;
  }
  std::istringstream lines(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto j = Json::parse(line, nullptr, false);
    if (j.is_discarded()) throw InvalidArgument("line " + std::to_string(number) + ": malformed JSON");
    out.push_back(std::move(j));
  }
  return out;
}

void run_decompose(const std::string& input) {
  std::vector<Json> pairs;
  if (input == "-") {
    pairs = read_pairs(std::cin);
  } else {
    std::ifstream file(input);
    if (!file) throw InvalidArgument("cannot open " + input);
    pairs = read_pairs(file);
  }
  bool failed = false;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto e = endo_from_json(pairs[i]);
    const auto r = try_decompose(e);
    if (!r.ok()) {
      failed = true;
      std::cerr << "input " << i + 1 << ": not an automorphism (reduction step " << r.failed_step << "): " << r.reason
                << '\n';
      continue;
    }
    std::cout << to_json(*r.word).dump() << '\n';
  }
  if (failed) throw ExitStatus{kNotAutomorphism};
}

// ---- ns

struct NsArgs {
  FieldArgs field;
  std::uint64_t n = 1;
  std::string variety = "polynomial";
  std::vector<std::uint64_t> dims;
  bool nonunitary = false;
  std::string format = "plain";
};

void run_ns(const NsArgs& a) {
  const auto q = field_order(a.field);
  const auto v = ns_p_n(q, a.n, dims_for(a.variety, a.dims, a.n), !a.nonunitary);
  if (a.format == "json") {
    auto j = header("ns", a.field, q);
    j["n"] = a.n;
    j["variety"] = a.variety;
    j["unitary"] = !a.nonunitary;
    j["value"] = to_decimal(v);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << to_decimal(v) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphisms of F_q[x, y]: exact counts, generating series, bounds and normal forms"};
  app.require_subcommand(1);

  CountArgs count;
  auto* c = app.add_subcommand("count", "number of automorphisms (p), coordinates (l) or z_n of degree n");
  add_field_options(c, count.field);
  c->add_option("--n", count.n, "degree")->required()->check(CLI::PositiveNumber);
  c->add_option("--what", count.what)->capture_default_str()->check(CLI::IsMember({"p", "l", "z"}));
  c->add_option("--format", count.format)->capture_default_str()->check(CLI::IsMember({"plain", "json"}));

  SeriesArgs series;
  auto* s = app.add_subcommand("series", "coefficients of a Dirichlet series up to --terms");
  add_field_options(s, series.field);
  s->add_option("--terms", series.terms)->capture_default_str()->check(CLI::PositiveNumber);
  s->add_option("--series", series.series)
      ->capture_default_str()
      ->check(CLI::IsMember({"p", "l", "rho", "sigma", "ns"}));
  s->add_option("--variety", series.variety, "for sigma and ns")->capture_default_str()->check(CLI::IsMember(kVarieties));
  s->add_option("--dims", series.dims, "c_1,c_2,... for --variety custom")->delimiter(',');
  s->add_flag("--nonunitary", series.nonunitary, "use GL_2 instead of the affine group");
  s->add_option("--format", series.format)->capture_default_str()->check(CLI::IsMember({"csv", "json"}));

  RangeArgs bounds;
  auto* b = app.add_subcommand("bounds", "check lower <= p_n <= upper for 2 <= n <= max-n");
  add_field_options(b, bounds.field);
  b->add_option("--max-n", bounds.max_n)->required();
  b->add_option("--format", bounds.format)->capture_default_str()->check(CLI::IsMember({"plain", "json"}));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "compare the formulas with brute-force enumeration for 1 <= n <= max-n");
  add_field_options(v, verify.range.field);
  v->add_option("--max-n", verify.range.max_n)->required()->check(CLI::PositiveNumber);
  v->add_option("--threads", verify.threads, "worker threads (0: all cores)")->capture_default_str();
  v->add_flag("--roundtrip", verify.roundtrip, "also decompose every enumerated automorphism");

  EnumerateArgs enumerate;
  auto* e = app.add_subcommand("enumerate", "write every automorphism of degree n as JSON lines");
  add_field_options(e, enumerate.field);
  e->add_option("--n", enumerate.n)->required()->check(CLI::PositiveNumber);
  e->add_option("--out", enumerate.out, "output file, - for stdout")->capture_default_str();

  std::string input = "-";
  auto* d = app.add_subcommand("decompose", "normal form of each input pair (JSON object, array or JSON lines)");
  d->add_option("--input", input, "input file, - for stdin")->capture_default_str();

  NsArgs ns;
  auto* n = app.add_subcommand("ns", "automorphisms of degree n of a free algebra in a Nielsen-Schreier variety");
  add_field_options(n, ns.field);
  n->add_option("--n", ns.n)->required()->check(CLI::PositiveNumber);
  n->add_option("--variety", ns.variety)->capture_default_str()->check(CLI::IsMember(kVarieties));
  n->add_option("--dims", ns.dims, "c_1,c_2,... for --variety custom")->delimiter(',');
  n->add_flag("--nonunitary", ns.nonunitary, "use GL_2 instead of the affine group");
  n->add_option("--format", ns.format)->capture_default_str()->check(CLI::IsMember({"plain", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kUsage;
  }

  try {
    if (*c) run_count(count);
    if (*s) run_series(series);
    if (*b) run_bounds(bounds);
    if (*v) run_verify(verify);
    if (*e) run_enumerate(enumerate);
    if (*d) run_decompose(input);
    if (*n) run_ns(ns);
  } catch (const ExitStatus& status) {
    std::cout.flush();
    return status.code;
  } catch (const NotAutomorphism& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kNotAutomorphism;
  } catch (const ConsistencyError& ex) {
    std::cerr << "verification failed: " << ex.what() << '\n';
    return kVerifyFailed;
  } catch (const Error& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return 0;
}
