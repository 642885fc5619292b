#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "circinv/closed_form.hpp"
#include "circinv/error.hpp"
#include "circinv/singular.hpp"
#include "circinv/spectral.hpp"

namespace circinv::cli {

namespace {

using json = nlohmann::ordered_json;
using namespace circinv::closed_form;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Options

struct Options {
  // input sources
  std::string row, file, three, sym3, geom, arith, tridiag, quad, alt, cycle;
  std::size_t n = 0;

  double tol = kSingularTolerance;
  std::size_t cap = kDefaultDenseCap;
  bool csv = false;
  bool dense = false;

  // solve / green
  std::string rhs;
  double gamma = 0.0;
  double alpha = 0.0;
  bool laplacian = false, q1 = false, qm1 = false;
  std::optional<double> q;

  // bench
  std::string sizes;
  std::string forms = "sym3";
  int trials = 3;
};

void add_common(CLI::App& app, Options& o) {
  app.add_option("--tol", o.tol, "Singularity tolerance for normalized certificate margins")
      ->envname(kToleranceEnv)
      ->capture_default_str();
  app.add_option("--cap", o.cap, "Largest order for dense or O(n^2) work")->capture_default_str();
  app.add_flag("--csv", o.csv, "CSV instead of JSON");
}

void add_input(CLI::App& app, Options& o) {
  auto* g = app.add_option_group("input", "Exactly one input source");
  g->add_option("--row", o.row, "First row, comma separated");
  g->add_option("--file", o.file, "File with one number per line or a JSON array");
  g->add_option("--three", o.three, "a,b,c: row (a, b, c, ..., c)");
  g->add_option("--sym3", o.sym3, "a,b,c: row (a, b, c, ..., c, b)");
  g->add_option("--geom", o.geom, "a,r: row (a r^{n-1}, ..., a r, a)");
  g->add_option("--arith", o.arith, "a,b: row (a, a+b, ..., a+(n-1)b)");
  g->add_option("--tridiag", o.tridiag, "a,b: row (a, b, 0, ..., 0, b)");
  g->add_option("--quad", o.quad, "a,b: row a + j b (n - j)");
  g->add_option("--alt", o.alt, "case,a,b: alternating family 1-4");
  g->add_option("--cycle", o.cycle, "q: row (2q, -1, 0, ..., 0, -1)");
  app.add_option("--n", o.n, "Order for generator inputs");
}

// ---------------------------------------------------------------------------
// Parsing helpers

double parse_number(const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  while (end && *end && std::isspace(static_cast<unsigned char>(*end))) ++end;
  if (end == begin || (end && *end != '\0')) throw UsageError("not a number: '" + text + "'");
  return v;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(parse_number(item));
  if (values.empty()) throw UsageError("empty number list");
  return values;
}

std::vector<double> parse_params(const std::string& text, std::size_t count, const char* flag) {
  auto v = parse_list(text);
  if (v.size() != count)
    throw UsageError(std::string(flag) + " expects " + std::to_string(count) + " comma-separated values");
  return v;
}

std::vector<double> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto first = text.find_first_not_of(" \t\r\n");
  std::vector<double> values;
  if (first != std::string::npos && text[first] == '[') {
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array()) throw UsageError(path + ": malformed JSON array");
    for (const auto& x : j) {
      if (!x.is_number()) throw UsageError(path + ": JSON array must hold numbers");
      values.push_back(x.get<double>());
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) values.push_back(parse_number(line));
  }
  if (values.empty()) throw UsageError(path + ": no values");
  return values;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  if (text.find_first_not_of(" ,") == std::string::npos) throw UsageError("bench needs a non-empty --sizes list");
  for (double v : parse_list(text)) {
    if (v < 3 || v != std::floor(v)) throw UsageError("bench sizes must be integers >= 3");
    sizes.push_back(static_cast<std::size_t>(v));
  }
  if (!std::is_sorted(sizes.begin(), sizes.end())) throw UsageError("bench sizes must be ascending");
  return sizes;
}

// ---------------------------------------------------------------------------
// Input resolution

struct Input {
  CirculantVector row{0.0};
  std::optional<StructuredForm> form;  // set for generator inputs
  json description;
};

json form_params(const StructuredForm& f) {
  struct Visitor {
    json operator()(const ThreeParamRow& x) const { return {{"a", x.a}, {"b", x.b}, {"c", x.c}}; }
    json operator()(const SymThreeParam& x) const { return {{"a", x.a}, {"b", x.b}, {"c", x.c}}; }
    json operator()(const Geometric& x) const { return {{"a", x.a}, {"r", x.r}}; }
    json operator()(const Arithmetic& x) const { return {{"a", x.a}, {"b", x.b}}; }
    json operator()(const TridiagSym& x) const { return {{"a", x.a}, {"b", x.b}}; }
    json operator()(const QuadraticPattern& x) const { return {{"a", x.a}, {"b", x.b}}; }
    json operator()(const AlternatingPattern& x) const {
      return {{"family", x.family}, {"a", x.a}, {"b", x.b}};
    }
    json operator()(const CycleSchrodinger& x) const { return {{"q", x.q}}; }
  };
  return std::visit(Visitor{}, f);
}

Input resolve_input(const Options& o) {
  const std::pair<const std::string*, const char*> sources[] = {
      {&o.row, "row"},         {&o.file, "file"},       {&o.three, "three"}, {&o.sym3, "sym3"},
      {&o.geom, "geom"},       {&o.arith, "arith"},     {&o.tridiag, "tridiag"}, {&o.quad, "quad"},
      {&o.alt, "alt"},         {&o.cycle, "cycle"}};
  const char* chosen = nullptr;
  const std::string* text = nullptr;
  for (const auto& [value, name] : sources) {
    if (value->empty()) continue;
    if (chosen) throw UsageError("give exactly one input source (got --" + std::string(chosen) + " and --" + name + ")");
    chosen = name;
    text = value;
  }
  if (!chosen) throw UsageError("no input: give --row, --file or a generator such as --sym3 a,b,c --n N");

  Input in;
  const std::string source = chosen;
  if (source == "row" || source == "file") {
    in.row = CirculantVector(source == "row" ? parse_list(*text) : read_file(*text));
    in.description = {{"source", source}};
    return in;
  }

  if (o.n == 0) throw UsageError("--" + source + " needs --n");
  const std::size_t n = o.n;
  StructuredForm form;
  if (source == "three") {
    const auto p = parse_params(*text, 3, "--three");
    form = ThreeParamRow{p[0], p[1], p[2], n};
  } else if (source == "sym3") {
    const auto p = parse_params(*text, 3, "--sym3");
    form = SymThreeParam{p[0], p[1], p[2], n};
  } else if (source == "geom") {
    const auto p = parse_params(*text, 2, "--geom");
    form = Geometric{p[0], p[1], n};
  } else if (source == "arith") {
    const auto p = parse_params(*text, 2, "--arith");
    form = Arithmetic{p[0], p[1], n};
  } else if (source == "tridiag") {
    const auto p = parse_params(*text, 2, "--tridiag");
    form = TridiagSym{p[0], p[1], n};
  } else if (source == "quad") {
    const auto p = parse_params(*text, 2, "--quad");
    form = QuadraticPattern{p[0], p[1], n};
  } else if (source == "alt") {
    const auto p = parse_params(*text, 3, "--alt");
    if (p[0] != std::floor(p[0])) throw UsageError("--alt case must be an integer 1-4");
    form = AlternatingPattern{static_cast<int>(p[0]), p[1], p[2], n};
  } else {
    form = CycleSchrodinger{parse_params(*text, 1, "--cycle")[0], n};
  }
  in.row = generate(form);
  in.form = form;
  in.description = {{"source", source}, {"params", form_params(form)}};
  return in;
}

// ---------------------------------------------------------------------------
// Output helpers

json certificate_json(const InvertCertificate& c) {
  return {{"invertible", c.invertible}, {"margin", c.margin}, {"witness", c.witness}};
}

json matrix_json(const DenseMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    const auto r = m.row(i);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  return rows;
}

void emit(std::ostream& out, const json& j) { out << to_json_text(j) << '\n'; }

void emit_vector_csv(std::ostream& out, const std::vector<double>& v) {
  out << "index,value\n";
  for (std::size_t i = 0; i < v.size(); ++i) out << i << ',' << format_double(v[i]) << '\n';
}

std::string structure_name(const Input& in, const std::optional<StructuredForm>& form) {
  (void)in;
  return form ? kind_name(*form) : "unstructured";
}

// max |Circ(a) Circ(h) - I| read off the first row of the product
double inverse_residual(const CirculantVector& a, const CirculantVector& h) {
  const auto p = multiply(a, h);
  double r = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) r = std::max(r, std::abs(p[j] - (j == 0 ? 1.0 : 0.0)));
  return r;
}

struct Inversion {
  InverseResult result;
  std::optional<StructuredForm> form;
  std::vector<std::string> notes;
};

Inversion compute_inverse(const Input& in, const Options& o) {
  Inversion inv{{CirculantVector{0.0}, "", {}}, in.form, {}};
  if (!inv.form) inv.form = detect_structure(in.row);
  const std::size_t n = in.row.size();
  if (inv.form) {
    inv.result = invert(*inv.form, o.tol);
  } else if (n == 2 || n == 3) {
    inv.result = spectral::closed_form_small(in.row, o.tol);
  } else {
    if (n > o.cap) throw CapError(n, o.cap);
    inv.result = spectral::dft_inverse(in.row, o.tol, o.cap);
    inv.notes.push_back("no closed form: spectral oracle used");
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_invert(const Options& o, std::ostream& out) {
  const auto in = resolve_input(o);
  const auto inv = compute_inverse(in, o);
  const std::size_t n = in.row.size();
  if (o.dense && n > o.cap) throw CapError(n, o.cap);
  if (o.csv) {
    emit_vector_csv(out, inv.result.row.values());
    return kOk;
  }

  json j;
  j["command"] = "invert";
  j["n"] = n;
  j["input"] = in.description;
  j["structure"] = structure_name(in, inv.form);
  j["method"] = inv.result.method;
  j["certificate"] = certificate_json(inv.result.certificate);
  j["inverse_row"] = inv.result.row.values();
  auto notes = inv.notes;
  if (n <= o.cap) {
    j["residual"] = inverse_residual(in.row, inv.result.row);
  } else {
    j["residual"] = nullptr;
    notes.push_back("residual skipped: n=" + std::to_string(n) + " exceeds dense cap " + std::to_string(o.cap));
  }
  if (o.dense) j["inverse_matrix"] = matrix_json(materialize(inv.result.row, o.cap));
  j["notes"] = notes;
  emit(out, j);
  return kOk;
}

int cmd_det(const Options& o, std::ostream& out) {
  const auto in = resolve_input(o);
  const std::size_t n = in.row.size();
  double value = 0.0;
  bool overflow = false;
  std::string method;
  if (n == 2 || n == 3) {
    value = spectral::small_determinant(in.row);
    method = "explicit";
  } else {
    if (n > o.cap) throw CapError(n, o.cap);
    const auto d = spectral::determinant(in.row, o.cap);
    value = d.value;
    overflow = d.overflow;
    method = "spectral-product";
  }
  if (o.csv) {
    out << "determinant\n" << format_double(value) << '\n';
    return kOk;
  }
  json j;
  j["command"] = "det";
  j["n"] = n;
  j["input"] = in.description;
  j["method"] = method;
  j["determinant"] = value;
  j["overflow"] = overflow;
  emit(out, j);
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto in = resolve_input(o);
  auto form = in.form ? in.form : detect_structure(in.row);
  const std::size_t n = in.row.size();
  InvertCertificate cert;
  std::string method;
  std::vector<std::string> notes;
  if (form) {
    cert = certify(*form, o.tol);
    method = "closed-form";
  } else {
    if (n > o.cap) throw CapError(n, o.cap);
    cert = spectral::spectral_certificate(in.row, o.tol, o.cap);
    method = "spectral";
    notes.push_back("no closed form: spectral oracle used");
  }
  if (o.csv) {
    out << "invertible,margin,witness\n"
        << (cert.invertible ? "true" : "false") << ',' << format_double(cert.margin) << ',' << cert.witness << '\n';
    return kOk;
  }
  json j;
  j["command"] = "check";
  j["n"] = n;
  j["input"] = in.description;
  j["structure"] = form ? kind_name(*form) : "unstructured";
  j["method"] = method;
  j["certificate"] = certificate_json(cert);
  j["notes"] = notes;
  emit(out, j);
  return kOk;
}

int cmd_detect(const Options& o, std::ostream& out) {
  const auto in = resolve_input(o);
  const auto form = detect_structure(in.row);
  if (o.csv) {
    out << "structure\n" << (form ? kind_name(*form) : "unstructured") << '\n';
    return kOk;
  }
  json j;
  j["command"] = "detect";
  j["n"] = in.row.size();
  j["structure"] = form ? kind_name(*form) : "unstructured";
  j["params"] = form ? form_params(*form) : json(nullptr);
  emit(out, j);
  return kOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  if (o.rhs.empty()) throw UsageError("solve needs --rhs");
  const auto v = parse_list(o.rhs);
  const std::size_t n = v.size();
  const int modes = int(o.laplacian) + int(o.q1) + int(o.qm1);
  if (modes > 1) throw UsageError("choose at most one of --laplacian, --q1, --qm1");

  json j;
  j["command"] = "solve";
  j["n"] = n;
  SolveReport report;
  if (modes == 1) {
    if (o.n != 0 && o.n != n) throw UsageError("--n does not match the length of --rhs");
    if (o.laplacian) {
      j["system"] = "cycle-laplacian";
      report = solve_singular_cycle(v, o.gamma, o.tol);
    } else if (o.q1) {
      j["system"] = "q=1";
      report = solve_singular_q1(v, o.gamma, o.tol);
    } else {
      j["system"] = "q=-1";
      report = solve_singular_qm1(v, o.alpha, o.tol);
    }
    j["method"] = "closed-form";
  } else {
    const auto in = resolve_input(o);
    if (in.row.size() != n) throw UsageError("--rhs length does not match the circulant order");
    const auto inv = compute_inverse(in, o);
    report.solution = circinv::apply(inv.result.row, v);
    report.residual = residual(in.row, report.solution, v);
    j["system"] = "circulant";
    j["input"] = in.description;
    j["method"] = inv.result.method;
    j["certificate"] = certificate_json(inv.result.certificate);
  }

  if (o.csv) {
    emit_vector_csv(out, report.solution);
    return kOk;
  }
  j["solution"] = report.solution;
  j["residual"] = report.residual;
  if (report.constraint)
    j["constraint"] = {{"target", report.constraint->target}, {"achieved", report.constraint->achieved}};
  else
    j["constraint"] = nullptr;
  j["alpha"] = report.alpha ? json(*report.alpha) : json(nullptr);
  emit(out, j);
  return kOk;
}

int cmd_green(const Options& o, std::ostream& out) {
  if (o.n < 3) throw UsageError("green needs --n >= 3");
  const std::size_t n = o.n;
  if (o.dense && n > o.cap) throw CapError(n, o.cap);
  json j;
  j["command"] = "green";
  j["n"] = n;
  CirculantVector row{0.0};
  if (o.q && *o.q != 1.0) {
    const auto r = cycle_green(*o.q, n, o.tol);
    row = r.row;
    j["operator"] = "cycle-schrodinger";
    j["q"] = *o.q;
    j["method"] = r.method;
    j["certificate"] = certificate_json(r.certificate);
  } else {
    row = laplacian_green_row(n);
    j["operator"] = "cycle-laplacian";
    j["method"] = "green-function";
  }
  if (o.csv) {
    emit_vector_csv(out, row.values());
    return kOk;
  }
  j["row"] = row.values();
  if (o.dense) j["matrix"] = matrix_json(materialize(row, o.cap));
  emit(out, j);
  return kOk;
}

// ---------------------------------------------------------------------------
// bench

StructuredForm bench_form(const std::string& name, std::size_t n) {
  if (name == "3param") return ThreeParamRow{4, 1, 0.5, n};
  if (name == "sym3") return SymThreeParam{4, 1, 0.5, n};
  if (name == "tridiag") return TridiagSym{4, 1, n};
  if (name == "geometric") return Geometric{1, 0.5, n};
  if (name == "arithmetic") return Arithmetic{1, 1, n};
  if (name == "quadratic") return QuadraticPattern{1, 1, n};
  if (name == "cycle") return CycleSchrodinger{3, n};
  throw UsageError("unknown bench form '" + name + "' (3param, sym3, tridiag, geometric, arithmetic, quadratic, cycle)");
}

template <class F>
double best_time(int trials, F&& f) {
  double best = HUGE_VAL;
  for (int t = 0; t < trials; ++t) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
    best = std::min(best, d.count());
  }
  return best;
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", s);
  return buf;
}

double max_rel(const CirculantVector& x, const CirculantVector& y) {
  const double scale = std::max(1.0, y.max_abs());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d / scale;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const auto sizes = parse_sizes(o.sizes);
  if (o.trials < 1) throw UsageError("--trials must be >= 1");
  std::vector<std::string> forms;
  {
    std::stringstream ss(o.forms);
    std::string f;
    while (std::getline(ss, f, ','))
      if (!f.empty()) forms.push_back(f);
  }
  if (forms.empty()) throw UsageError("bench needs at least one form");
  for (const auto& f : forms) (void)bench_form(f, 3);

  out << "form,n,closed_form_s,dft_s,dense_s,max_rel_diff\n";
  for (const auto& name : forms) {
    for (std::size_t n : sizes) {
      const auto form = bench_form(name, n);
      const auto row = generate(form);
      InverseResult closed{CirculantVector{0.0}, "", {}};
      const double t_closed = best_time(o.trials, [&] { closed = invert(form, o.tol); });

      std::string dft_col = "skipped", dense_col = "skipped", diff_col = "skipped";
      if (n <= o.cap) {
        InverseResult dft{CirculantVector{0.0}, "", {}};
        CirculantVector dense{0.0};
        dft_col = seconds(best_time(o.trials, [&] { dft = spectral::dft_inverse(row, o.tol, o.cap); }));
        dense_col = seconds(best_time(o.trials, [&] { dense = spectral::dense_inverse_row(row, o.cap); }));
        diff_col = format_double(std::max(max_rel(closed.row, dft.row), max_rel(closed.row, dense)));
      }
      out << name << ',' << n << ',' << seconds(t_closed) << ',' << dft_col << ',' << dense_col << ','
          << diff_col << '\n';
    }
  }
  return kOk;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) return std::signbit(x) ? "-0" : "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void write_json(const json& j, std::string& s, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        s += "{}";
        return;
      }
      s += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) s += ",\n";
        first = false;
        s += pad + json(it.key()).dump() + ": ";
        write_json(it.value(), s, indent + 2);
      }
      s += "\n" + close + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        s += "[]";
        return;
      }
      const bool flat = std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
      if (flat) {
        s += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) s += ", ";
          write_json(j[i], s, indent);
        }
        s += "]";
        return;
      }
      s += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) s += ",\n";
        s += pad;
        write_json(j[i], s, indent + 2);
      }
      s += "\n" + close + "]";
      return;
    }
    case json::value_t::number_float:
      s += format_double(j.get<double>());
      return;
    default:
      s += j.dump();
  }
}

}  // namespace

std::string to_json_text(const json& value) {
  std::string s;
  write_json(value, s, 0);
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form inversion of structured circulant matrices", "circinv"};
  app.footer(std::string("Environment:\n  ") + kToleranceEnv +
             "  default for --tol (normalized singularity tolerance, built-in 1e-10)\n"
             "Exit codes: 0 ok, 1 usage, 2 singular, 3 size cap, 4 incompatible system");
  app.require_subcommand(1);

  Options o;
  auto* invert_cmd = app.add_subcommand("invert", "First row of the inverse, with certificate and residual");
  add_input(*invert_cmd, o);
  add_common(*invert_cmd, o);
  invert_cmd->add_flag("--dense", o.dense, "Also print the full inverse matrix (n <= cap)");

  auto* det_cmd = app.add_subcommand("det", "Determinant");
  add_input(*det_cmd, o);
  add_common(*det_cmd, o);

  auto* check_cmd = app.add_subcommand("check", "Invertibility certificate");
  add_input(*check_cmd, o);
  add_common(*check_cmd, o);

  auto* detect_cmd = app.add_subcommand("detect", "Recognize a structured family");
  add_input(*detect_cmd, o);
  add_common(*detect_cmd, o);

  auto* solve_cmd = app.add_subcommand("solve", "Solve Circ(a) h = v, including the singular systems");
  add_input(*solve_cmd, o);
  add_common(*solve_cmd, o);
  solve_cmd->add_option("--rhs", o.rhs, "Right-hand side v, comma separated");
  solve_cmd->add_option("--gamma", o.gamma, "Required <h, 1> for the --q1 and --laplacian systems");
  solve_cmd->add_option("--alpha", o.alpha, "Multiple of z(-1) added for the --qm1 system");
  solve_cmd->add_flag("--laplacian", o.laplacian, "Cycle Laplacian Circ(2,-1,0,...,0,-1)");
  solve_cmd->add_flag("--q1", o.q1, "Circ(1,-1,0,...,0)");
  solve_cmd->add_flag("--qm1", o.qm1, "Circ(-1,-1,0,...,0), even n");

  auto* green_cmd = app.add_subcommand("green", "Green function of the cycle Laplacian or Schrodinger operator");
  green_cmd->add_option("--n", o.n, "Cycle length")->required();
  green_cmd->add_option("--q", o.q, "Inverse of Circ(2q,-1,0,...,0,-1) instead of the Laplacian Green function");
  green_cmd->add_flag("--dense", o.dense, "Also print the full matrix (n <= cap)");
  add_common(*green_cmd, o);

  auto* bench_cmd = app.add_subcommand("bench", "Timing table: closed form vs DFT vs dense (CSV)");
  bench_cmd->add_option("--sizes", o.sizes, "Ascending orders, comma separated")->required();
  bench_cmd->add_option("--forms", o.forms, "Families to time, comma separated")->capture_default_str();
  bench_cmd->add_option("--trials", o.trials, "Repetitions per cell; the minimum is reported")->capture_default_str();
  bench_cmd->add_option("--tol", o.tol, "Singularity tolerance")->envname(kToleranceEnv)->capture_default_str();
  bench_cmd->add_option("--cap", o.cap, "Largest order for the oracle columns")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*invert_cmd) return cmd_invert(o, out);
    if (*det_cmd) return cmd_det(o, out);
    if (*check_cmd) return cmd_check(o, out);
    if (*detect_cmd) return cmd_detect(o, out);
    if (*solve_cmd) return cmd_solve(o, out);
    if (*green_cmd) return cmd_green(o, out);
    if (*bench_cmd) return cmd_bench(o, out);
  } catch (const SingularError& e) {
    err << "error: " << e.what() << '\n';
    return kSingular;
  } catch (const CapError& e) {
    err << "error: " << e.what() << '\n';
    return kCap;
  } catch (const IncompatibleError& e) {
    err << "error: " << e.what() << '\n';
    return kIncompatible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace circinv::cli
