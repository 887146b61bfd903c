#include "liekv/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "liekv/corpus.hpp"
#include "liekv/error.hpp"
#include "liekv/spectral.hpp"

namespace liekv {

using ojson = nlohmann::ordered_json;

std::string tool_version() { return LIEKV_VERSION; }

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Vector parse_field(const LieAlgebra& a, const std::string& text) {
  if (auto i = a.index_of(text)) return unit_vector(a.dim(), *i);
  std::vector<Scalar> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      coords.push_back(parse_scalar(item));
    } catch (const Error& e) {
      throw Error(ErrorKind::UsageError, "--field: " + std::string(e.what()));
    }
  }
  if (coords.size() != a.dim())
    throw Error(ErrorKind::UsageError, "--field has " + std::to_string(coords.size()) + " coordinates, expected " +
                                           std::to_string(a.dim()));
  Vector v(a.dim());
  for (std::size_t i = 0; i < coords.size(); ++i) v[i] = coords[i];
  return v;
}

namespace {

struct Input {
  SpaceDocument doc;
  ReductiveSpace space;
};

Input read_input(const std::string& bytes) {
  SpaceDocument doc = parse_document(bytes);
  ReductiveSpace space = to_space(doc);
  return {std::move(doc), std::move(space)};
}

Report start(const std::string& command, const std::string& input_name, const std::string& bytes,
             const CommandOptions& opts) {
  Report r;
  r.command = command;
  r.version = tool_version();
  r.input = std::filesystem::path(input_name).filename().string();
  r.input_digest = fnv1a_hex(bytes);
  ojson& p = r.parameters;
  p["samples"] = opts.sampling.samples;
  p["order"] = opts.sampling.order;
  p["tol"] = opts.sampling.tolerance;
  p["seed"] = opts.sampling.seed;
  p["max_word_length"] = opts.sampling.max_word_length;
  p["max_parameter"] = opts.sampling.max_parameter;
  p["inner_samples"] = opts.inner_samples;
  p["field"] = opts.field.empty() ? "candidates" : opts.field;
  p["go"] = opts.go;
  p["statements"] = opts.statements;
  return r;
}

ojson subspace_json(const LieAlgebra& a, const Subspace& s) {
  ojson j;
  j["dim"] = s.dim();
  ojson basis = ojson::array();
  for (const auto& v : s.basis()) basis.push_back(a.format(v));
  j["basis"] = basis;
  return j;
}

std::vector<Vector> fields_for(const ReductiveSpace& s, const CommandOptions& opts) {
  if (!opts.field.empty()) return {parse_field(s.algebra(), opts.field)};
  return candidate_fields(s);
}

std::string eigenvalue_text(const RationalPolynomial& f) {
  if (f.degree() == 1) return to_string(-f.coefficient(0));
  if (f.degree() == 2 && sgn(f.coefficient(1)) == 0 && sgn(f.coefficient(0)) > 0) {
    const Scalar& c = f.coefficient(0);
    mpz_class num = c.get_num(), den = c.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
      Scalar b(mpz_class(sqrt(num)), mpz_class(sqrt(den)));
      return "+-" + to_string(b) + "i";
    }
    return "+-i*sqrt(" + to_string(c) + ")";
  }
  return "roots of " + f.to_string("t");
}

ojson spectrum_json(const LieAlgebra& a, const Vector& x) {
  SpectralAnalysis sa = analyze(a, x);
  ojson j;
  j["field"] = a.format(x);
  j["char_poly"] = sa.char_poly.to_string("t");
  j["min_poly"] = sa.min_poly.to_string("t");
  ojson eig = ojson::array();
  for (const auto& f : factor_over_rationals(sa.char_poly)) {
    ojson e;
    e["factor"] = f.factor.to_string("t");
    e["multiplicity"] = f.multiplicity;
    e["eigenvalues"] = eigenvalue_text(f.factor);
    if (!f.irreducible) e["irreducible"] = "unproven";
    eig.push_back(e);
  }
  j["spectrum"] = eig;
  j["pure_imaginary"] = spectrum_is_pure_imaginary(sa.char_poly);
  ojson fit;
  fit["dim_A1"] = sa.fitting.a1.dim();
  fit["dim_A2"] = sa.fitting.a2.dim();
  fit["exponent"] = sa.fitting.exponent;
  j["fitting"] = fit;
  ojson roots = ojson::array();
  for (std::size_t i = 0; i < sa.root_spaces.size(); ++i) {
    const RootSpace& rs = sa.root_spaces[i];
    ojson e;
    e["factor"] = rs.factor.to_string("mu");
    e["multiplicity"] = rs.multiplicity;
    e["dim"] = rs.space.dim();
    if (rs.beta_sq) e["beta_sq"] = to_string(*rs.beta_sq);
    if (i < sa.betas.size()) e["beta"] = to_string(sa.betas[i]);
    roots.push_back(e);
  }
  j["root_spaces"] = roots;
  j["sigma"] = sa.sigma ? "defined" : sa.sigma_status;
  j["semisimple_part_zero"] = sa.jc.semisimple.is_zero();
  j["compact_vector"] = is_compact_vector(a, x);
  return j;
}

void count(Summary& s, const Verdict& v) {
  if (v.certified()) ++s.certified;
  else if (v.refuted()) ++s.refuted;
  else ++s.undecided;
}

std::string witness_line(const LieAlgebra& a, const std::string& what, const Verdict& v) {
  std::string line = what + ": " + to_string(v.status);
  if (v.witness) {
    const Witness& w = *v.witness;
    line += w.point ? " at point " + a.format(*w.point) : " word " + w.word.to_string(a);
    line += ": F=" + w.lhs.to_string() + " vs " + w.rhs.to_string();
  }
  return line;
}

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> ids;
  if (text == "all" || text.empty()) return ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) ids.push_back(item);
  return ids;
}

}  // namespace

Report cmd_inspect(const std::string& input_name, const std::string& bytes, const CommandOptions& opts) {
  Report r = start("inspect", input_name, bytes, opts);
  Input in = read_input(bytes);
  const LieAlgebra& a = in.space.algebra();
  ojson& j = r.results;
  j["name"] = in.doc.name;
  j["dimension"] = a.dim();
  j["basis"] = a.names();
  j["center"] = subspace_json(a, center(a));
  j["radical"] = subspace_json(a, radical(a));
  try {
    Subspace n = nilradical(a);
    j["nilradical"] = subspace_json(a, n);
    auto cls = nilpotency_class(a, n);
    j["nilpotency_class"] = cls ? ojson(*cls) : ojson(nullptr);
    j["center_of_nilradical"] = subspace_json(a, center_of(a, n));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NilradicalUndecided) throw;
    j["nilradical"] = "Undecided";
  }
  j["semisimple"] = is_semisimple(a);
  ojson derived = ojson::array();
  for (const auto& d : derived_series(a, Subspace::full(a.dim()))) derived.push_back(d.dim());
  j["derived_series_dims"] = derived;

  // Declarations are checked when the document is loaded; reaching this
  // point means each one held.
  const DeclaredStructure& d = a.declared();
  ojson decl = ojson::object();
  if (d.radical) decl["radical"] = "verified";
  if (d.nilradical) decl["nilradical"] = "verified";
  if (d.levi) decl["levi"] = "verified";
  if (d.center) decl["center"] = "verified";
  if (!d.direct_sum.empty()) decl["direct_sum"] = "verified (" + std::to_string(d.direct_sum.size()) + " ideals)";
  if (!d.abelian_ideals.empty())
    decl["abelian_ideals"] = "verified (" + std::to_string(d.abelian_ideals.size()) + " ideals)";
  decl["go"] = in.space.declared_go() ? ojson(*in.space.declared_go()) : ojson("undeclared");
  j["declared"] = decl;

  if (d.levi) {
    LeviReport lr = verify_levi(a, d);
    ojson levi;
    levi["dim"] = lr.levi.dim();
    ojson simple = ojson::array();
    for (std::size_t i = 0; i < lr.simple_ideals.size(); ++i) {
      ojson s = subspace_json(a, lr.simple_ideals[i]);
      s["compact"] = static_cast<bool>(lr.simple_is_compact[i]);
      simple.push_back(s);
    }
    levi["simple_ideals"] = simple;
    levi["dim_compact"] = lr.compact_part.dim();
    levi["dim_noncompact"] = lr.noncompact_part.dim();
    j["levi"] = levi;
  } else {
    j["levi"] = "undeclared";
  }
  ojson sp;
  sp["h"] = subspace_json(a, in.space.h());
  sp["m"] = subspace_json(a, in.space.m());
  sp["metric"] = "positive definite, Ad(H)-invariant";
  j["space"] = sp;
  return r;
}

Report cmd_spectrum(const std::string& input_name, const std::string& bytes, const CommandOptions& opts) {
  Report r = start("spectrum", input_name, bytes, opts);
  Input in = read_input(bytes);
  ojson fields = ojson::array();
  for (const auto& x : fields_for(in.space, opts)) fields.push_back(spectrum_json(in.space.algebra(), x));
  r.results["fields"] = fields;
  return r;
}

Report cmd_check(const std::string& input_name, const std::string& bytes, const CommandOptions& opts) {
  Report r = start("check", input_name, bytes, opts);
  Input in = read_input(bytes);
  const LieAlgebra& a = in.space.algebra();
  ojson fields = ojson::array();
  for (const auto& x : fields_for(in.space, opts)) {
    Verdict v = check_constant_length(in.space, x, opts.sampling);
    ojson e;
    e["field"] = a.format(x);
    e["verdict"] = verdict_json(v, a);
    fields.push_back(e);
    count(r.summary, v);
    if (v.refuted()) {
      r.refutation = true;
      r.witnesses.push_back(witness_line(a, "constant length of " + a.format(x), v));
    }
  }
  r.results["constant_length"] = fields;
  if (opts.go) {
    Verdict v = check_go(in.space, opts.sampling.samples, opts.sampling.seed);
    r.results["go"] = verdict_json(v, a);
    count(r.summary, v);
    if (v.refuted()) {
      r.refutation = true;
      r.witnesses.push_back(witness_line(a, "GO criterion", v));
    }
  }
  return r;
}

Report cmd_verify(const std::string& input_name, const std::string& bytes, const CommandOptions& opts) {
  Report r = start("verify", input_name, bytes, opts);
  Input in = read_input(bytes);
  VerifyParams params;
  params.sampling = opts.sampling;
  params.inner_samples = opts.inner_samples;
  std::vector<std::string> ids = split_ids(opts.statements);
  bool probes = ids.empty();
  std::vector<std::string> theorem_ids;
  for (const auto& id : ids) {
    if (statement(id).probe) probes = true;
    else theorem_ids.push_back(id);
  }
  if (!ids.empty() && theorem_ids.empty()) {
    // Only probes requested.
  } else {
    r.findings = verify_suite(in.space, theorem_ids, params, in.doc.name);
  }
  if (probes) {
    std::vector<Finding> pf = probe_conjectures(in.space, params, in.doc.name);
    for (auto& f : pf)
      if (ids.empty() || std::find(ids.begin(), ids.end(), f.statement_id) != ids.end()) r.findings.push_back(std::move(f));
  }
  for (const auto& f : r.findings) {
    switch (f.status) {
      case FindingStatus::Holds: ++r.summary.certified; break;
      case FindingStatus::HoldsSampled:
      case FindingStatus::Inconclusive: ++r.summary.undecided; break;
      case FindingStatus::Violated:
        ++r.summary.refuted;
        r.refutation = true;
        r.witnesses.push_back(f.statement_id + (f.field.empty() ? "" : " [" + f.field + "]") + ": " +
                              f.evidence.dump());
        break;
      case FindingStatus::PremiseNotMet:
      case FindingStatus::Skipped: ++r.summary.skipped; break;
      case FindingStatus::Counterexample: ++r.summary.counterexamples; break;
    }
  }
  return r;
}

ojson finding_json(const Finding& f) {
  ojson j;
  j["statement"] = f.statement_id;
  j["space"] = f.space;
  if (!f.field.empty()) j["field"] = f.field;
  j["status"] = to_string(f.status);
  j["evidence"] = f.evidence;
  return j;
}

ojson report_json(const Report& r) {
  ojson j;
  j["tool"] = "liekv";
  j["version"] = r.version;
  j["command"] = r.command;
  j["input"] = r.input;
  j["input_digest"] = r.input_digest;
  j["parameters"] = r.parameters;
  j["results"] = r.results;
  ojson findings = ojson::array();
  for (const auto& f : r.findings) findings.push_back(finding_json(f));
  j["findings"] = findings;
  ojson s;
  s["certified"] = r.summary.certified;
  s["refuted"] = r.summary.refuted;
  s["undecided"] = r.summary.undecided;
  s["skipped"] = r.summary.skipped;
  s["counterexamples"] = r.summary.counterexamples;
  j["summary"] = s;
  return j;
}

std::string render_json(const Report& r) { return report_json(r).dump(2) + "\n"; }

namespace {

std::string scalar_text(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "null";
  return v.dump();
}

bool is_flat(const ojson& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& e : v)
    if (e.is_array() || e.is_object()) return false;
  return true;
}

std::string flat_text(const ojson& v) {
  if (!v.is_array()) return scalar_text(v);
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
  return s + "]";
}

void walk(std::ostream& os, const ojson& v, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (v.is_object()) {
    for (const auto& [k, e] : v.items()) {
      if (is_flat(e)) {
        os << pad << "- " << k << ": " << flat_text(e) << "\n";
      } else {
        os << pad << "- " << k << ":\n";
        walk(os, e, depth + 1);
      }
    }
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (is_flat(v[i])) {
        os << pad << "- " << flat_text(v[i]) << "\n";
      } else {
        os << pad << "- item " << i + 1 << ":\n";
        walk(os, v[i], depth + 1);
      }
    }
  } else {
    os << pad << "- " << scalar_text(v) << "\n";
  }
}

}  // namespace

std::string render_markdown(const Report& r) {
  const ojson j = report_json(r);
  std::ostringstream os;
  os << "# liekv " << r.command << " report\n\n";
  os << "| key | value |\n|---|---|\n";
  os << "| version | " << r.version << " |\n";
  os << "| input | " << r.input << " |\n";
  os << "| input digest | " << r.input_digest << " |\n\n";
  os << "## Parameters\n\n| flag | value |\n|---|---|\n";
  for (const auto& [k, v] : r.parameters.items()) os << "| " << k << " | " << scalar_text(v) << " |\n";
  os << "\n## Results\n\n";
  if (r.results.empty()) os << "(none)\n";
  else walk(os, r.results, 0);
  if (!r.findings.empty()) {
    os << "\n## Findings\n\n| statement | field | status |\n|---|---|---|\n";
    for (const auto& f : r.findings)
      os << "| " << f.statement_id << " | " << (f.field.empty() ? "-" : f.field) << " | " << to_string(f.status) << " |\n";
    os << "\n### Evidence\n";
    for (const auto& f : r.findings) {
      os << "\n#### " << f.statement_id;
      if (!f.field.empty()) os << " [" << f.field << "]";
      os << ": " << to_string(f.status) << "\n\n";
      if (f.evidence.empty()) os << "(none)\n";
      else walk(os, f.evidence, 0);
    }
  }
  os << "\n## Summary\n\n";
  walk(os, j["summary"], 0);
  return os.str();
}

namespace {

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::UsageError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error(ErrorKind::UsageError, "cannot write " + out_path);
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Killing vector fields of constant length on reductive homogeneous spaces", "liekv"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  CommandOptions opts;
  std::string format = "json";
  std::string out_path;
  std::string input;
  std::string export_dir;

  auto add_common = [&](CLI::App* sub, bool sampling) {
    sub->add_option("path", input, "space document (JSON)")->required();
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "markdown"}))->capture_default_str();
    sub->add_option("--out", out_path, "write the report here instead of standard output");
    if (!sampling) return;
    sub->add_option("--samples", opts.sampling.samples, "sampled group elements")->capture_default_str();
    sub->add_option("--order", opts.sampling.order, "Taylor order of the infinitesimal test")->capture_default_str();
    sub->add_option("--seed", opts.sampling.seed, "random seed")->capture_default_str();
    sub->add_option("--tol", opts.sampling.tolerance, "relative tolerance for floating words")->capture_default_str();
    sub->add_option("--max-word-length", opts.sampling.max_word_length, "letters per sampled word")->capture_default_str();
    sub->add_option("--max-parameter", opts.sampling.max_parameter, "numerator/denominator bound for exact parameters")
        ->capture_default_str();
    sub->add_option("--inner-samples", opts.inner_samples, "samples per pairwise check inside verifiers")
        ->capture_default_str();
  };

  CLI::App* inspect = app.add_subcommand("inspect", "structure report");
  add_common(inspect, false);
  CLI::App* spectrum = app.add_subcommand("spectrum", "spectral data of ad(X)");
  add_common(spectrum, false);
  spectrum->add_option("--field", opts.field, "c1,...,cn or a basis name; default all candidate fields");
  CLI::App* check = app.add_subcommand("check", "constant-length verdicts");
  add_common(check, true);
  check->add_option("--field", opts.field, "c1,...,cn or a basis name; default all candidate fields");
  check->add_flag("--go", opts.go, "also run the GO criterion");
  CLI::App* verify = app.add_subcommand("verify", "run statement verifiers and conjecture probes");
  add_common(verify, true);
  verify->add_option("--statements", opts.statements, "all or a comma-separated list of ids")->capture_default_str();
  CLI::App* corpus = app.add_subcommand("corpus", "built-in example spaces");
  corpus->require_subcommand(1);
  CLI::App* list = corpus->add_subcommand("list", "print the built-in space names");
  CLI::App* exp = corpus->add_subcommand("export", "write the built-in spaces as documents");
  exp->add_option("dir", export_dir, "target directory")->required();
  CLI::App* stmts = app.add_subcommand("statements", "list registered statement ids");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*stmts) {
      for (const auto& s : registry()) out << s.id << "\t" << s.summary << "\n";
      return 0;
    }
    if (*corpus) {
      if (*list) {
        for (const auto& d : builtin_corpus()) out << d.name << "\n";
        return 0;
      }
      std::filesystem::create_directories(export_dir);
      for (const auto& d : builtin_corpus()) save(d, std::filesystem::path(export_dir) / (d.name + ".json"));
      return 0;
    }
    const std::string bytes = read_bytes(input);
    Report r;
    if (*inspect) r = cmd_inspect(input, bytes, opts);
    else if (*spectrum) r = cmd_spectrum(input, bytes, opts);
    else if (*check) r = cmd_check(input, bytes, opts);
    else r = cmd_verify(input, bytes, opts);
    r.parameters["format"] = format;
    write_output(format == "json" ? render_json(r) : render_markdown(r), out_path, out);
    for (const auto& w : r.witnesses) err << "refuted: " << w << "\n";
    return r.refutation ? 1 : 0;
  } catch (const Error& e) {
    err << "liekv: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "liekv: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace liekv
