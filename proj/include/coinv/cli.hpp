#pragma once

// Command-line front end. run() parses an argument vector (without the program
// name) and returns the exit code, a JSON payload and a plain-text rendering.

#include <coinv/descent_monomials.hpp>
#include <coinv/oracle.hpp>
#include <coinv/points_ideal.hpp>
#include <coinv/representations.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace coinv::cli {

using json = nlohmann::json;

struct CommandResult {
  int exit_code = 0;
  json payload;
  std::string text;
};

namespace detail {

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

inline json partition_json(const Partition& p) { return json(p.trimmed().parts()); }

inline json rpartition_json(const RPartition& p) {
  json out = json::array();
  for (const auto& c : p.components()) out.push_back(partition_json(c));
  return out;
}

inline json qpolynomial_json(const QPolynomial& p) { return json(p.coefficients()); }

inline json monomial_json(const Monomial& m) {
  std::vector<int> e;
  for (int i = 1; i <= m.nvars(); ++i) e.push_back(m.exp(i));
  return json(e);
}

inline std::vector<int> parse_csv(const std::string& text, const std::string& what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used > 0 && used == item.size(), what + ": '" + item + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

inline Partition parse_partition(const std::string& text, const std::string& what) {
  return Partition(parse_csv(text, what));
}

inline RPartition parse_rpartition(const std::string& text, int r) {
  std::vector<Partition> comps;
  std::size_t start = 0;
  while (true) {
    std::size_t semi = text.find(';', start);
    comps.push_back(parse_partition(text.substr(start, semi == std::string::npos ? std::string::npos : semi - start),
                                    "--lambda-bar"));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  require(static_cast<int>(comps.size()) == r,
          "--lambda-bar: expected " + std::to_string(r) + " components, got " + std::to_string(comps.size()));
  return RPartition(std::move(comps));
}

inline DescentSet parse_descent_set(const std::string& text, const std::string& what) {
  return DescentSet::from_range(parse_csv(text, what));
}

template <class Key>
json key_json(const Key& key) {
  if constexpr (std::is_same_v<Key, Partition>) return partition_json(key);
  else return rpartition_json(key);
}

template <class Key>
json expansion_json(const Expansion<Key, Integer>& e) {
  json out = json::array();
  for (const auto& [key, c] : e.terms()) out.push_back({{"lambda", key_json(key)}, {"value", integer_json(c)}});
  return out;
}

template <class Key>
std::string expansion_lines(const Expansion<Key, Integer>& e) {
  std::string s;
  for (const auto& [key, c] : e.terms()) s += key.to_string() + " " + c.get_str() + "\n";
  return s;
}

inline json basis_expansion_json(const BasisExpansion& e) {
  json out = json::array();
  for (const auto& [b, c] : e) {
    json colors = b.g.colors();
    out.push_back({{"g", b.g.word().word()},
                   {"colors", colors},
                   {"I", b.I},
                   {"nu", partition_json(b.nu)},
                   {"coefficient", coinv::to_string(c)}});
  }
  return out;
}

inline std::string basis_expansion_text(const BasisExpansion& e) {
  if (e.empty()) return "0\n";
  std::string s;
  for (const auto& [b, c] : e) s += coinv::to_string(c) + " * [" + b.to_string() + "]\n";
  return s;
}

inline json quadratic_json(const QuadraticNumber& x) {
  return {{"a", coinv::to_string(x.a())}, {"b", coinv::to_string(x.b())}, {"d", x.d()}};
}

inline json polynomial_json(const ExactPolynomial& f) {
  json terms = json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    terms.push_back({{"monomial", monomial_json(it->first)}, {"coefficient", quadratic_json(it->second)}});
  return terms;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open input file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

/// Reads a point configuration {"n", "d", "group", "orbit_seeds"} and returns
/// the union of the orbits of the seeds, sorted.
inline std::vector<Point> load_point_configuration(const json& doc) {
  require(doc.is_object(), "point file: expected a JSON object");
  int n = doc.at("n").get<int>();
  int d = doc.value("d", 1);
  std::string group = doc.value("group", "D");
  require(group == "D", "point file: only group \"D\" is supported");
  std::vector<SignedPermutation> g = dn_elements(n);
  std::set<Point> points;
  for (const auto& seed : doc.at("orbit_seeds")) {
    require(seed.is_array() && static_cast<int>(seed.size()) == n, "point file: each seed needs n coordinates");
    Point p;
    for (const auto& c : seed) {
      Rational a = parse_rational(c.at("a").get<std::string>());
      Rational b = c.contains("b") ? parse_rational(c.at("b").get<std::string>()) : Rational(0);
      p.emplace_back(a, b, d);
    }
    auto o = orbit(g, p);
    points.insert(o.begin(), o.end());
  }
  require(!points.empty(), "point file: no points");
  return {points.begin(), points.end()};
}

namespace detail {

struct Options {
  int n = 0, k = 0, r = 1, max_degree = -1;
  std::string rho, lambda, lambda_bar, monomial, input, shape, des_lo, des_hi;
  bool all = false, ribbon = false, omega = false, one_per_step = false;
};

inline json header(const std::string& command, const Options& o) {
  return {{"command", command}, {"n", o.n}, {"k", o.k}, {"r", o.r}};
}

inline CommandResult run_mult(const Options& o, bool has_lambda, bool has_lambda_bar) {
  int choices = int(has_lambda) + int(has_lambda_bar) + int(o.all);
  if (choices != 1) throw usage_error("mult: give exactly one of --lambda, --lambda-bar, --all");
  Partition rho = parse_partition(o.rho, "--rho");
  CommandResult res;
  res.payload = header("mult", o);
  res.payload["rho"] = partition_json(rho);
  if (o.all) {
    if (o.r == 1) {
      SchurExpansion e = frob_rnk_rho(o.n, o.k, rho);
      res.payload["multiplicities"] = expansion_json(e);
      res.text = expansion_lines(e);
    } else {
      WreathExpansion e = multiplicity_table_snk(o.n, o.k, o.r, rho);
      res.payload["multiplicities"] = expansion_json(e);
      res.text = expansion_lines(e);
    }
    if (res.text.empty()) res.text = "0\n";
    return res;
  }
  Integer m;
  if (has_lambda) {
    if (o.r != 1) throw usage_error("mult: --lambda needs r = 1; use --lambda-bar for r > 1");
    Partition lambda = parse_partition(o.lambda, "--lambda");
    res.payload["lambda"] = partition_json(lambda);
    m = multiplicity_rnk(o.n, o.k, rho, lambda);
  } else {
    RPartition lambda = parse_rpartition(o.lambda_bar, o.r);
    res.payload["lambda_bar"] = rpartition_json(lambda);
    m = multiplicity_snk(o.n, o.k, o.r, rho, lambda);
  }
  res.payload["multiplicity"] = integer_json(m);
  res.text = m.get_str() + "\n";
  return res;
}

inline CommandResult run_frob(const Options& o) {
  Partition rho = parse_partition(o.rho, "--rho");
  CommandResult res;
  res.payload = header("frob", o);
  res.payload["rho"] = partition_json(rho);
  res.payload["omega"] = o.omega;
  SchurExpansion theorem = frob_rnk_rho(o.n, o.k, rho);
  SchurExpansion e = o.omega ? omega(theorem) : theorem;
  if (o.ribbon) {
    SchurExpansion product = frob_ribbon_product(o.n, o.k, rho, o.omega);
    RibbonFactorisation f = ribbon_factorisation(o.n, o.k, rho);
    res.payload["ribbon"] = {{"d", f.d}, {"p", f.p}, {"rows", f.rows}, {"agrees", product == e}};
    res.text = "ribbon rows (";
    for (std::size_t i = 0; i < f.rows.size(); ++i) res.text += (i ? "," : "") + std::to_string(f.rows[i]);
    res.text += ") times " + std::string(o.omega ? "e" : "h") + "_d for d in (";
    for (int i = 0; i < f.p; ++i) res.text += (i ? "," : "") + std::to_string(f.d[static_cast<std::size_t>(i)]);
    res.text += ")\n";
    e = product;
  }
  res.payload["expansion"] = expansion_json(e);
  res.text += expansion_to_string(e) + "\n";
  return res;
}

inline CommandResult run_gf(const Options& o, bool has_lambda, bool has_lambda_bar) {
  if (int(has_lambda) + int(has_lambda_bar) != 1) throw usage_error("gf: give exactly one of --lambda, --lambda-bar");
  CommandResult res;
  res.payload = header("gf", o);
  QPolynomial f;
  if (has_lambda) {
    if (o.r != 1) throw usage_error("gf: --lambda needs r = 1; use --lambda-bar for r > 1");
    Partition lambda = parse_partition(o.lambda, "--lambda");
    res.payload["lambda"] = partition_json(lambda);
    f = graded_mult_gf(o.n, o.k, lambda);
  } else {
    RPartition lambda = parse_rpartition(o.lambda_bar, o.r);
    res.payload["lambda_bar"] = rpartition_json(lambda);
    f = graded_mult_gf_wreath(o.n, o.k, o.r, lambda);
  }
  res.payload["gf"] = qpolynomial_json(f);
  res.text = f.to_string() + "\n";
  return res;
}

inline CommandResult run_straighten(const Options& o) {
  Monomial m = Monomial::parse(o.monomial, o.n);
  BasisExpansion full = straighten_full(m, o.n, o.k, o.r);
  BasisExpansion proj = project_to_quotient(m, o.n, o.k, o.r);
  CommandResult res;
  res.payload = header("straighten", o);
  res.payload["monomial"] = monomial_json(m);
  res.payload["expansion"] = basis_expansion_json(full);
  res.payload["projection"] = basis_expansion_json(proj);
  res.text = "expansion:\n" + basis_expansion_text(full) + "in the quotient:\n" + basis_expansion_text(proj);
  return res;
}

inline CommandResult run_oracle_build(const Options& o) {
  GradedQuotient q = build_quotient(o.n, o.k, o.r, o.max_degree);
  CommandResult res;
  res.payload = header("oracle build", o);
  res.payload["hilbert"] = qpolynomial_json(q.hilbert());
  res.payload["total_dim"] = q.total_dim();
  res.payload["complete"] = q.complete();
  json standard = json::array();
  res.text = "hilbert: " + q.hilbert().to_string() + "\ndimension: " + std::to_string(q.total_dim()) +
             (q.complete() ? "" : " (truncated)") + "\n";
  for (int d = 0; d <= q.computed_degree(); ++d) {
    json row = json::array();
    std::string line = "degree " + std::to_string(d) + ":";
    for (const auto& m : q.standard_monomials(d)) {
      row.push_back(monomial_json(m));
      line += " " + m.to_string();
    }
    standard.push_back(row);
    res.text += line + "\n";
  }
  res.payload["standard_monomials"] = standard;
  return res;
}

inline CommandResult run_oracle_verify(const Options& o) {
  VerifyReport report = verify_theorem(o.n, o.k, o.r);
  CommandResult res;
  res.payload = header("oracle verify", o);
  res.payload["hilbert"] = qpolynomial_json(report.hilbert);
  json cells = json::array();
  std::string bad;
  for (const auto& c : report.cells) {
    cells.push_back({{"rho", partition_json(c.rho)},
                     {"dim", c.dim},
                     {"agree", c.agree()},
                     {"oracle", expansion_json(c.oracle)},
                     {"theorem", expansion_json(c.theorem)}});
    if (!c.agree())
      bad += "mismatch at rho=" + c.rho.to_string() + ": oracle " + expansion_to_string(c.oracle) + ", theorem " +
             expansion_to_string(c.theorem) + "\n";
  }
  res.payload["cells"] = cells;
  res.payload["mismatches"] = report.mismatches();
  res.text = std::to_string(report.cells.size()) + " cells, " + std::to_string(report.mismatches()) +
             " mismatches\n" + bad;
  if (report.mismatches() > 0) {
    res.exit_code = 1;
    res.payload["error"] = {{"type", "mismatch"},
                            {"message", std::to_string(report.mismatches()) + " cells disagree with the theorem"}};
  }
  return res;
}

inline CommandResult run_points_tideal(const Options& o) {
  json doc;
  try {
    doc = json::parse(read_file(o.input));
  } catch (const json::exception& e) {
    throw precondition_error("point file '" + o.input + "': " + e.what());
  }
  std::vector<Point> points;
  try {
    points = load_point_configuration(doc);
  } catch (const json::exception& e) {
    throw precondition_error("point file '" + o.input + "': " + e.what());
  }
  TIdealResult t = o.one_per_step ? compute_t_ideal_one_per_step(points) : compute_t_ideal(points);
  CommandResult res;
  res.payload = {{"command", "points tideal"},
                 {"n", t.n},
                 {"points", points.size()},
                 {"method", o.one_per_step ? "one-per-step" : "batched"},
                 {"hilbert", qpolynomial_json(t.hilbert)}};
  json stair = json::array();
  for (const auto& m : t.staircase) stair.push_back(monomial_json(m));
  res.payload["staircase"] = stair;
  json gens = json::array();
  for (const auto& g : t.generators)
    gens.push_back({{"lead", monomial_json(g.top.leading_monomial())}, {"terms", polynomial_json(g.top)}});
  res.payload["generators"] = gens;
  res.text = "points: " + std::to_string(points.size()) + "\nhilbert: " + t.hilbert.to_string() +
             "\nstandard monomials: " + std::to_string(t.staircase.size()) +
             "\ngenerators: " + std::to_string(t.generators.size()) + "\n";
  for (const auto& g : t.generators) res.text += "  " + g.top.to_string() + "\n";
  return res;
}

inline CommandResult run_tableaux_count(const Options& o) {
  Partition shape = parse_partition(o.shape, "--shape");
  DescentSet lo = parse_descent_set(o.des_lo, "--des-lo");
  DescentSet hi = parse_descent_set(o.des_hi, "--des-hi");
  Integer c = count_syt_descents_between(shape, lo, hi);
  CommandResult res;
  res.payload = {{"command", "tableaux count"},
                 {"shape", partition_json(shape)},
                 {"des_lo", lo.to_vector()},
                 {"des_hi", hi.to_vector()},
                 {"count", integer_json(c)}};
  res.text = c.get_str() + "\n";
  return res;
}

inline CommandResult failure(int code, const std::string& type, const std::string& message, const std::string& usage) {
  CommandResult res;
  res.exit_code = code;
  res.payload = {{"error", {{"type", type}, {"message", message}}}};
  res.text = "error: " + message + "\n" + usage;
  return res;
}

}  // namespace detail

/// Parses and executes one command. `--json` selects the JSON rendering in main;
/// the payload is always filled.
inline CommandResult run(const std::vector<std::string>& args) {
  using detail::Options;
  Options o;
  CLI::App app{"Coinvariant quotient computations", "coinv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", "print the JSON payload");

  auto add_nkr = [&](CLI::App* sub, bool with_r) {
    sub->add_option("--n", o.n, "number of variables")->required()->check(CLI::PositiveNumber);
    sub->add_option("--k", o.k, "number of e_d generators")->required()->check(CLI::PositiveNumber);
    if (with_r) sub->add_option("--r", o.r, "color count (default 1)")->check(CLI::PositiveNumber);
  };

  CLI::App* mult = app.add_subcommand("mult", "multiplicity of an irreducible in a refined component");
  add_nkr(mult, true);
  mult->add_option("--rho", o.rho, "partition, comma separated")->required();
  CLI::Option* mult_lambda = mult->add_option("--lambda", o.lambda, "partition of n");
  CLI::Option* mult_lambda_bar = mult->add_option("--lambda-bar", o.lambda_bar, "r-partition, components split by ;");
  mult->add_flag("--all", o.all, "list every nonzero multiplicity");

  CLI::App* frob = app.add_subcommand("frob", "Frobenius image of a refined component");
  add_nkr(frob, false);
  frob->add_option("--rho", o.rho, "partition, comma separated")->required();
  frob->add_flag("--ribbon", o.ribbon, "compute through the ribbon factorisation");
  frob->add_flag("--omega", o.omega, "apply omega");

  CLI::App* gf = app.add_subcommand("gf", "graded multiplicity generating function");
  add_nkr(gf, true);
  CLI::Option* gf_lambda = gf->add_option("--lambda", o.lambda, "partition of n");
  CLI::Option* gf_lambda_bar = gf->add_option("--lambda-bar", o.lambda_bar, "r-partition, components split by ;");

  CLI::App* straighten = app.add_subcommand("straighten", "expand a monomial in the descent basis");
  add_nkr(straighten, true);
  straighten->add_option("--monomial", o.monomial, "monomial such as x1^2*x3")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "direct linear-algebra model of the quotient");
  oracle->require_subcommand(1);
  CLI::App* build = oracle->add_subcommand("build", "Hilbert series and standard monomials");
  add_nkr(build, true);
  build->add_option("--max-degree", o.max_degree, "stop after this degree");
  CLI::App* verify = oracle->add_subcommand("verify", "compare every refined component with the theorem");
  add_nkr(verify, true);

  CLI::App* points = app.add_subcommand("points", "top-degree ideals of point sets");
  points->require_subcommand(1);
  CLI::App* tideal = points->add_subcommand("tideal", "Hilbert series and generators of T(X)");
  tideal->add_option("--input", o.input, "JSON point file")->required();
  tideal->add_flag("--one-per-step", o.one_per_step, "add one null vector per iteration");

  CLI::App* tableaux = app.add_subcommand("tableaux", "standard Young tableaux");
  tableaux->require_subcommand(1);
  CLI::App* count = tableaux->add_subcommand("count", "count SYT with lo <= Des(T) <= hi");
  count->add_option("--shape", o.shape, "partition")->required();
  count->add_option("--des-lo", o.des_lo, "descent set, comma separated")->required();
  count->add_option("--des-hi", o.des_hi, "descent set, comma separated")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CommandResult res;
    res.text = app.help();
    res.payload = {{"help", res.text}};
    return res;
  } catch (const CLI::ParseError& e) {
    return detail::failure(2, "usage", e.what(), app.help());
  }

  try {
    CommandResult res;
    if (mult->parsed()) res = detail::run_mult(o, mult_lambda->count() > 0, mult_lambda_bar->count() > 0);
    else if (frob->parsed()) res = detail::run_frob(o);
    else if (gf->parsed()) res = detail::run_gf(o, gf_lambda->count() > 0, gf_lambda_bar->count() > 0);
    else if (straighten->parsed()) res = detail::run_straighten(o);
    else if (build->parsed()) res = detail::run_oracle_build(o);
    else if (verify->parsed()) res = detail::run_oracle_verify(o);
    else if (tideal->parsed()) res = detail::run_points_tideal(o);
    else res = detail::run_tableaux_count(o);
    return res;
  } catch (const detail::usage_error& e) {
    return detail::failure(2, "usage", e.what(), app.help());
  } catch (const resource_error& e) {
    return detail::failure(1, "resource", e.what(), "");
  } catch (const precondition_error& e) {
    return detail::failure(1, "precondition", e.what(), "");
  } catch (const internal_error& e) {
    return detail::failure(1, "internal", e.what(), "");
  } catch (const std::exception& e) {
    return detail::failure(1, "error", e.what(), "");
  }
}

/// True when the arguments ask for JSON output.
inline bool wants_json(const std::vector<std::string>& args) {
  return std::find(args.begin(), args.end(), "--json") != args.end();
}

}  // namespace coinv::cli
