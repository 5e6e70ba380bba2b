#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lgforge/cover.hpp"
#include "lgforge/critical.hpp"
#include "lgforge/errors.hpp"
#include "lgforge/expression.hpp"
#include "lgforge/io.hpp"
#include "lgforge/lattice.hpp"
#include "lgforge/laurent.hpp"
#include "lgforge/mutation.hpp"
#include "lgforge/periods.hpp"

using namespace lgforge;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
  std::string expr;
  std::string vars;
  std::string spec;
  std::string other;
  std::string sub;
  std::string images;
  std::string reference;
  std::string at;
  std::string weights;
  std::string mults;
  std::string boundary;
  std::string descendant = "0";
  std::string output;
  std::string format = "text";
  std::string strategy = "incremental";
  unsigned K = 10;
  bool K_given = false;
  unsigned k_min = 2;
  std::int64_t r = 2;
  unsigned starts = 200;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  bool smooth = false;
};

// Everything that determines the output, hashed into the provenance block.
struct Run {
  std::string command;
  std::string hashed;
  Json result;
  std::string text;

  void feed(const std::string& key, const std::string& value) { hashed += key + "=" + value + "\n"; }
};

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

unsigned worker_threads() {
  unsigned cap = 0;
  if (const char* env = std::getenv("LGFORGE_THREADS")) {
    try {
      cap = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw InputError(std::string("LGFORGE_THREADS must be a non-negative integer, got '") + env + "'");
    }
  }
  if (cap == 0) cap = std::max(1u, std::thread::hardware_concurrency());
  return cap;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string read_stdin() { return std::string(std::istreambuf_iterator<char>(std::cin), {}); }

std::vector<std::int64_t> int_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used == 0 || used != item.size()) throw InputError(std::string("bad integer '") + item + "' in " + what);
  }
  return out;
}

// "1.5" or "1.5:-2" (real:imaginary), comma separated.
std::vector<Complex> point_list(const std::string& text) {
  std::vector<Complex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    try {
      std::size_t used = 0;
      const double re = std::stod(item.substr(0, colon), &used);
      double im = 0.0;
      if (colon != std::string::npos) im = std::stod(item.substr(colon + 1));
      out.emplace_back(re, im);
    } catch (const std::exception&) {
      throw InputError("bad coordinate '" + item + "' in --at");
    }
  }
  return out;
}

// Resolves the potential from --spec or --expr/--vars; the spec file wins.
LaurentPoly potential(const Options& o, Run& run) {
  if (!o.spec.empty()) {
    if (!o.expr.empty() || !o.vars.empty())
      std::cerr << "warning: --spec " << o.spec << " overrides --expr/--vars\n";
    const Json doc = load_json_file(o.spec);
    run.feed("spec", doc.dump());
    if (!doc.contains("potential") || !doc["potential"].is_string())
      throw InputError(o.spec + ": missing field 'potential'");
    if (!doc.contains("vars")) throw InputError(o.spec + ": missing field 'vars'");
    return parse_laurent(doc["potential"].get<std::string>(), varnames_from_json(doc["vars"]));
  }
  if (o.expr.empty()) throw InputError("no potential given: use --expr with --vars, or --spec");
  if (o.vars.empty()) throw InputError("--expr needs --vars");
  const std::string text = o.expr == "-" ? read_stdin() : o.expr;
  run.feed("expr", text);
  run.feed("vars", o.vars);
  return parse_laurent(text, parse_varnames(o.vars));
}

PeriodOptions period_options(const Options& o) {
  PeriodOptions p;
  if (o.strategy == "split")
    p.strategy = PeriodStrategy::split;
  else if (o.strategy != "incremental")
    throw InputError("--strategy must be incremental or split");
  p.threads = worker_threads();
  return p;
}

// Aligned plain-text table.
std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t j = 0; j < header.size(); ++j) width[j] = header[j].size();
  for (const auto& row : rows)
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (j) s += "  ";
      s += cells[j] + std::string(width[j] - cells[j].size(), ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    os << s << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& row : rows) line(row);
  return os.str();
}

// Twelve significant digits keeps floating output stable across runs;
// round-off below 1e-10 prints as 0.
double tidy(double v) {
  if (std::abs(v) < 1e-10 || !std::isfinite(v)) return std::abs(v) < 1e-10 ? 0.0 : v;
  std::ostringstream os;
  os << std::setprecision(12) << v;
  const double r = std::stod(os.str());
  return r == 0.0 ? 0.0 : r;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << tidy(v);
  return os.str();
}

std::string fmt(Complex z) {
  const double re = tidy(z.real()), im = tidy(z.imag());
  if (im == 0.0) return fmt(re);
  std::ostringstream os;
  os << fmt(re) << (im < 0 ? " - " : " + ") << fmt(std::abs(im)) << "i";
  return os.str();
}

Json cjson(Complex z) { return Json::array({tidy(z.real()), tidy(z.imag())}); }

std::string vec_string(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string columns_string(const IntMatrix& m) {
  std::string s;
  for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + vec_string(m.column(j));
  return s;
}

Json columns_json(const IntMatrix& m) {
  Json cols = Json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return cols;
}

// Names for quotient coordinates: the original names when the rank matches.
LaurentPoly named(const LaurentPoly& f, const std::vector<std::string>& names) {
  return names.size() == f.rank() ? f.with_varnames(names) : f;
}

// ---------------------------------------------------------------------------

void cmd_eval(const Options& o, Run& run) {
  const LaurentPoly f = potential(o, run);
  run.result["polynomial"] = render(f);
  run.result["terms"] = f.size();
  run.text = "polynomial: " + render(f) + "\n";
  if (!o.at.empty()) {
    run.feed("at", o.at);
    const auto point = point_list(o.at);
    if (point.size() != f.rank()) throw RankMismatchError(f.rank(), point.size());
    Complex v;
    try {
      v = evaluate(f, point);
    } catch (const std::domain_error& e) {
      throw InputError(e.what());
    }
    run.result["value"] = cjson(v);
    run.text += "value:      " + fmt(v) + "\n";
  }
}

void cmd_period(const Options& o, Run& run) {
  const LaurentPoly f = potential(o, run);
  run.feed("K", std::to_string(o.K));
  const auto p = period_sequence(f, o.K, period_options(o));
  run.result["polynomial"] = render(f);
  run.result["K"] = o.K;
  run.result["coeffs"] = to_json(p);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) rows.push_back({std::to_string(k), p.coeffs[k].get_str()});
  run.text = "period of " + render(f) + "\n" + table({"k", "c_k"}, rows);
}

void cmd_cover(const Options& o, Run& run) {
  if (o.spec.empty()) throw InputError("cover needs --spec");
  const Json doc = load_json_file(o.spec);
  run.feed("spec", doc.dump());
  const CoverSpec spec = cover_spec_from_json(doc);
  const CoverResult res = build_cover_potential(spec);
  const auto& names = spec.potential.varnames();
  const LaurentPoly quotient = named(res.quotient_potential, names);

  Json& out = run.result;
  out["complement"] = render(res.complement);
  out["divisor"] = render(res.divisor);
  out["upstairs"] = render(res.upstairs_potential);
  out["action"] = {{"weights", res.action.weights()}, {"modulus", res.action.modulus()}};
  out["basis"] = columns_json(res.basis.basis());
  out["index"] = res.basis.index();
  out["quotient"] = render(quotient);

  std::ostringstream os;
  os << "complement: " << render(res.complement) << '\n'
     << "divisor:    " << render(res.divisor) << '\n'
     << "upstairs:   " << render(res.upstairs_potential) << '\n'
     << "action:     w = " << vec_string(res.action.weights()) << " mod " << res.action.modulus() << '\n'
     << "basis:      " << columns_string(res.basis.basis()) << " (index " << res.basis.index() << ")\n"
     << "quotient:   " << render(quotient) << '\n';
  run.text = os.str();
}

void cmd_quotient(const Options& o, Run& run) {
  const LaurentPoly f = potential(o, run);
  if (o.weights.empty()) throw InputError("quotient needs --weights");
  run.feed("weights", o.weights);
  run.feed("r", std::to_string(o.r));
  auto w = int_list(o.weights, "--weights");
  if (w.size() != f.rank()) throw RankMismatchError(f.rank(), w.size());
  if (o.r < 1) throw InputError("-r must be positive");
  const CharacterAction action(std::move(w), o.r);
  const Sublattice lattice = invariant_sublattice(action);
  const LaurentPoly q = named(rewrite_in_sublattice(f, lattice), f.varnames());
  run.result["action"] = {{"weights", action.weights()}, {"modulus", action.modulus()}};
  run.result["basis"] = columns_json(lattice.basis());
  run.result["index"] = lattice.index();
  run.result["quotient"] = render(q);
  std::ostringstream os;
  os << "action:   w = " << vec_string(action.weights()) << " mod " << action.modulus() << '\n'
     << "basis:    " << columns_string(lattice.basis()) << " (index " << lattice.index() << ")\n"
     << "quotient: " << render(q) << '\n';
  run.text = os.str();
}

void cmd_crit(const Options& o, Run& run) {
  const LaurentPoly f = potential(o, run);
  run.feed("seed", std::to_string(o.seed));
  run.feed("starts", std::to_string(o.starts));
  std::ostringstream tol;
  tol << o.tol;
  run.feed("tol", tol.str());
  if (o.starts == 0) throw InputError("--starts must be positive");
  if (!(o.tol > 0)) throw InputError("--tol must be positive");

  CriticalOptions opt;
  opt.starts = o.starts;
  opt.tol = o.tol;
  opt.seed = o.seed;
  opt.threads = worker_threads();
  const CriticalSearch search = critical_points(f, opt);
  if (search.degenerate_input) throw Error("every logarithmic derivative of " + render(f) + " vanishes identically");
  const auto values = critical_values(search);

  Json points = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < search.points.size(); ++i) {
    const auto& p = search.points[i];
    Json coords = Json::array();
    std::string ctext;
    for (std::size_t j = 0; j < p.coords.size(); ++j) {
      coords.push_back(cjson(p.coords[j]));
      ctext += (j ? ", " : "") + fmt(p.coords[j]);
    }
    const double residual = log_gradient_residual(f, p.coords);
    points.push_back({{"coords", coords},
                      {"value", cjson(p.value)},
                      {"nondegenerate", p.nondegenerate},
                      {"log_hessian_det", cjson(p.log_hessian_det)},
                      {"residual_below_tol", residual < o.tol}});
    std::ostringstream res;
    res << std::scientific << std::setprecision(1) << residual;
    rows.push_back({std::to_string(i + 1), ctext, fmt(p.value), p.nondegenerate ? "yes" : "no", res.str()});
  }
  Json vals = Json::array();
  std::vector<std::vector<std::string>> vrows;
  for (const auto& v : values) {
    vals.push_back({{"value", cjson(v.value)}, {"multiplicity", v.multiplicity}});
    vrows.push_back({fmt(v.value), std::to_string(v.multiplicity)});
  }
  run.result["polynomial"] = render(f);
  run.result["points"] = points;
  run.result["values"] = vals;
  run.result["converged_starts"] = search.converged_starts;
  run.text = "critical points of " + render(f) + "\n" +
             table({"#", "point", "value", "nondegenerate", "residual"}, rows) + "\ncritical values\n" +
             table({"value", "multiplicity"}, vrows);
}

void cmd_mutate(const Options& o, Run& run) {
  const LaurentPoly f = potential(o, run);
  Substitution sub = Substitution::identity(f.rank(), f.varnames());
  if (!o.sub.empty()) {
    const Json doc = load_json_file(o.sub);
    run.feed("sub", doc.dump());
    auto file = substitution_from_json(doc);
    if (file.vars != f.varnames())
      throw InputError("substitution variables do not match the potential's variables");
    sub = std::move(file.substitution);
  } else if (!o.images.empty()) {
    run.feed("images", o.images);
    std::vector<std::string> texts;
    std::stringstream ss(o.images);
    std::string item;
    while (std::getline(ss, item, ';')) texts.push_back(item);
    sub = Substitution::parse(f.varnames(), texts);
  } else {
    throw InputError("mutate needs --sub or --images");
  }
  const LaurentPoly g = apply(f, sub);
  run.result["input"] = render(f);
  run.result["image"] = render(g);
  run.text = "input: " + render(f) + "\nimage: " + render(g) + "\n";
  if (o.K_given) {
    run.feed("K", std::to_string(o.K));
    const auto cmp = check_period_invariance(f, g, o.K, period_options(o));
    run.result["periods_match"] = cmp.pass;
    run.text += std::string("periods up to K = ") + std::to_string(o.K) + ": " + (cmp.pass ? "match" : "differ") + "\n";
  }
}

void cmd_tangency(const Options& o, Run& run) {
  const LaurentPoly f = potential(o, run);
  if (o.boundary.empty()) throw InputError("tangency needs --boundary");
  run.feed("r", std::to_string(o.r));
  run.feed("boundary", o.boundary);
  run.feed("mults", o.mults);
  run.feed("descendant", o.descendant);
  run.feed("smooth", o.smooth ? "1" : "0");
  const ExponentVector boundary(int_list(o.boundary, "--boundary"));
  const auto mults = o.mults.empty() ? std::vector<std::int64_t>{} : int_list(o.mults, "--mults");
  if (o.r < 1 || o.r > 1000) throw InputError("-r must be between 1 and 1000");
  const DescendantConstant desc{static_cast<int>(o.r), parse_rational(o.descendant)};
  const auto t = tangency_number(f, o.r, mults, desc, boundary, o.smooth);
  run.result["tau"] = to_json(t.value);
  run.result["integral"] = t.integral;
  run.result["mode"] = o.smooth ? "smooth" : "snc";
  run.text = std::string("tau = ") + t.value.get_str() + (t.integral ? "" : "  (not an integer)") + "\n";
}

void cmd_compare(const Options& o, Run& run) {
  const LaurentPoly f = potential(o, run);
  if (o.other.empty()) throw InputError("compare needs --other");
  run.feed("other", o.other);
  run.feed("K", std::to_string(o.K));
  const LaurentPoly g = parse_laurent(o.other, f.varnames());
  const auto cmp = check_period_invariance(f, g, o.K, period_options(o));
  Json rows = Json::array();
  std::vector<std::vector<std::string>> trows;
  for (const auto& r : cmp.rows) {
    rows.push_back({{"k", r.k}, {"first", to_json(r.computed)}, {"second", to_json(r.reference)}, {"match", r.match}});
    trows.push_back({std::to_string(r.k), r.computed.get_str(), r.reference.get_str(), r.match ? "yes" : "NO"});
  }
  run.result["first"] = render(f);
  run.result["second"] = render(g);
  run.result["rows"] = rows;
  run.result["pass"] = cmp.pass;
  run.text = table({"k", "first", "second", "match"}, trows);
  run.text += cmp.pass ? "PASS\n" : "FAIL at k = " + std::to_string(cmp.first_mismatch) + "\n";
}

void cmd_check_weak_lg(const Options& o, Run& run) {
  const LaurentPoly f = potential(o, run);
  if (o.reference.empty()) throw InputError("check-weak-lg needs --reference");
  run.feed("reference", read_file(o.reference));
  const PeriodSequence ref = ingest_reference(o.reference);
  const unsigned K = o.K_given ? o.K : static_cast<unsigned>(ref.max_k());
  run.feed("K", std::to_string(K));
  run.feed("k_min", std::to_string(o.k_min));
  const auto report = is_weak_lg(f, ref, K, o.k_min, period_options(o));
  Json rows = Json::array();
  std::vector<std::vector<std::string>> trows;
  for (const auto& r : report.rows) {
    rows.push_back(
        {{"k", r.k}, {"computed", to_json(r.computed)}, {"reference", to_json(r.reference)}, {"match", r.match}});
    trows.push_back({std::to_string(r.k), r.computed.get_str(), r.reference.get_str(), r.match ? "yes" : "NO"});
  }
  run.result["rows"] = rows;
  run.result["pass"] = report.pass;
  run.result["k_min"] = o.k_min;
  run.result["K"] = K;
  if (!report.pass) run.result["first_mismatch"] = report.first_mismatch;
  run.text = table({"k", "computed", "reference", "match"}, trows);
  run.text += report.pass ? "PASS\n" : "FAIL at k = " + std::to_string(report.first_mismatch) + "\n";
}

void cmd_ledger(const Options& o, Run& run) {
  if (o.spec.empty()) throw InputError("ledger needs --spec");
  const Json doc = load_json_file(o.spec);
  run.feed("spec", doc.dump());
  const LedgerInput in = ledger_from_json(doc);

  const auto maslov = maslov_positive(in.classes, in.divisor_components);
  std::optional<Rational> lambda;
  try {
    lambda = monotonicity_check(in.classes);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  Json rows = Json::array();
  std::vector<std::vector<std::string>> trows;
  for (std::size_t i = 0; i < in.classes.size(); ++i) {
    const auto& c = in.classes[i];
    const auto& m = maslov.rows[i];
    Json row = {{"half_maslov", c.half_maslov}, {"hits", m.hits}, {"area", to_json(c.area)},
                {"maslov_positive", m.pass}};
    std::vector<std::string> trow = {std::to_string(i), std::to_string(c.half_maslov), std::to_string(m.hits),
                                     c.area.get_str(), m.pass ? "yes" : "NO"};
    if (in.cover_degree) {
      const auto lift = riemann_hurwitz_lift(c.half_maslov, m.hits, *in.cover_degree);
      row["lift_half_maslov"] = to_json(lift.half_maslov);
      row["lift_integral"] = lift.integral;
      trow.push_back(lift.half_maslov.get_str() + (lift.integral ? "" : " *"));
    }
    rows.push_back(row);
    trows.push_back(trow);
  }
  std::vector<std::string> header = {"class", "mu/2", "hits", "area", "maslov+"};
  if (in.cover_degree) header.push_back("lift mu/2");

  run.result["classes"] = rows;
  run.result["maslov_positive"] = maslov.pass;
  run.result["monotone"] = lambda.has_value();
  if (lambda) run.result["lambda"] = lambda->get_str();
  run.text = table(header, trows);
  run.text += std::string("maslov positive: ") + (maslov.pass ? "yes" : "no") + "\n";
  run.text += "monotone:        " + (lambda ? "yes, lambda = " + lambda->get_str() : std::string("no")) + "\n";
  if (in.cover_degree) {
    run.result["r"] = *in.cover_degree;
    if (!in.linking.empty()) {
      const bool connected = cover_connected(in.linking, *in.cover_degree);
      run.result["connected"] = connected;
      run.text += std::string("connected:       ") + (connected ? "yes" : "no") + "\n";
    }
  }
}

void emit(const Options& o, const Run& run) {
  const std::string hash = hex(fnv1a(run.command + "\n" + run.hashed));
  std::string body;
  if (o.format == "json") {
    Json doc;
    doc["command"] = run.command;
    doc["result"] = run.result;
    doc["provenance"] = {{"input_hash", hash}, {"seed", o.seed}, {"version", kVersion}};
    body = doc.dump(2) + "\n";
  } else {
    body = run.text + "# input " + hash + ", seed " + std::to_string(o.seed) + ", lgforge " + kVersion + "\n";
  }
  if (o.output.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(o.output);
    if (!out || !(out << body)) throw Error("cannot write " + o.output);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau-Ginzburg potentials of tori in cyclic covers"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("-o,--output", o.output, "Write the report to a file");
    sub->add_option("--seed", o.seed, "Random seed");
  };
  auto add_potential = [&](CLI::App* sub) {
    sub->add_option("--expr", o.expr, "Laurent polynomial, or - to read stdin");
    sub->add_option("--vars", o.vars, "Comma separated variable names");
    sub->add_option("--spec", o.spec, "JSON file with \"potential\" and \"vars\"");
  };
  auto add_K = [&](CLI::App* sub) {
    sub->add_option_function<unsigned>(
        "-K", [&](unsigned k) { o.K = k; o.K_given = true; }, "Largest power k");
    sub->add_option("--strategy", o.strategy, "incremental or split")->check(CLI::IsMember({"incremental", "split"}));
  };

  auto* eval = app.add_subcommand("eval", "Normalize an expression, optionally evaluate it");
  add_potential(eval);
  eval->add_option("--at", o.at, "Point, e.g. 1,2 or 1:0.5,2 (real:imag)");

  auto* period = app.add_subcommand("period", "Constant terms of powers c_0..c_K");
  add_potential(period);
  add_K(period);

  auto* cover = app.add_subcommand("cover", "Cyclic cover potential and its quotient");
  cover->add_option("--spec", o.spec, "Cover spec JSON")->required();

  auto* quotient = app.add_subcommand("quotient", "Rewrite on the invariant sublattice of a Z_r action");
  add_potential(quotient);
  quotient->add_option("--weights", o.weights, "Character weights w, comma separated");
  quotient->add_option("-r", o.r, "Order of the cyclic group");

  auto* crit = app.add_subcommand("crit", "Critical points and values");
  add_potential(crit);
  crit->add_option("--starts", o.starts, "Random Newton starts");
  crit->add_option("--tol", o.tol, "Residual tolerance");

  auto* mutate = app.add_subcommand("mutate", "Apply a birational substitution");
  add_potential(mutate);
  mutate->add_option("--sub", o.sub, "Substitution JSON file");
  mutate->add_option("--images", o.images, "Images separated by ';'");
  add_K(mutate);

  auto* tangency = app.add_subcommand("tangency", "Tangency number of a class");
  add_potential(tangency);
  tangency->add_option("-r", o.r, "Total tangency order");
  tangency->add_option("--mults", o.mults, "Tangency multiplicities (snc mode)");
  tangency->add_option("--boundary", o.boundary, "Boundary class exponent");
  tangency->add_option("--descendant", o.descendant, "Descendant constant");
  tangency->add_flag("--smooth", o.smooth, "Smooth divisor mode");

  auto* compare = app.add_subcommand("compare", "Compare period sequences of two polynomials");
  add_potential(compare);
  compare->add_option("--other", o.other, "Second polynomial, same variables");
  add_K(compare);

  auto* weak = app.add_subcommand("check-weak-lg", "Compare periods with a reference sequence");
  add_potential(weak);
  weak->add_option("--reference", o.reference, "Reference CSV or JSON");
  weak->add_option("--k-min", o.k_min, "First k compared");
  add_K(weak);

  auto* ledger = app.add_subcommand("ledger", "Maslov positivity and monotonicity of disc classes");
  ledger->add_option("--spec", o.spec, "Ledger JSON")->required();

  for (auto* sub : {eval, period, cover, quotient, crit, mutate, tangency, compare, weak, ledger}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Run run;
  run.command = app.get_subcommands().front()->get_name();
  try {
    if (run.command == "eval") cmd_eval(o, run);
    else if (run.command == "period") cmd_period(o, run);
    else if (run.command == "cover") cmd_cover(o, run);
    else if (run.command == "quotient") cmd_quotient(o, run);
    else if (run.command == "crit") cmd_crit(o, run);
    else if (run.command == "mutate") cmd_mutate(o, run);
    else if (run.command == "tangency") cmd_tangency(o, run);
    else if (run.command == "compare") cmd_compare(o, run);
    else if (run.command == "check-weak-lg") cmd_check_weak_lg(o, run);
    else if (run.command == "ledger") cmd_ledger(o, run);
    emit(o, run);
  } catch (const InputError& e) {
    std::cerr << "lgforge " << run.command << ": " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "lgforge " << run.command << ": malformed JSON input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "lgforge " << run.command << ": " << e.what() << '\n';
    return 1;
  }
  return 0;
}
