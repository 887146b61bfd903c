#include "liekv/corpus.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

#include "liekv/error.hpp"

namespace liekv {

using json = nlohmann::ordered_json;

SubspaceSpec SubspaceSpec::axes(std::vector<std::size_t> indices) {
  SubspaceSpec s;
  s.by_index = true;
  s.indices = std::move(indices);
  return s;
}

SubspaceSpec SubspaceSpec::spanned_by(std::vector<Vector> rows) {
  SubspaceSpec s;
  s.by_index = false;
  s.rows = std::move(rows);
  return s;
}

SubspaceSpec SubspaceSpec::from(const Subspace& sub) {
  std::vector<std::size_t> idx;
  for (const auto& row : sub.basis()) {
    std::size_t nonzero = 0, where = 0;
    for (std::size_t i = 0; i < row.size(); ++i)
      if (sgn(row[i]) != 0) ++nonzero, where = i;
    if (nonzero != 1) return spanned_by(sub.basis());
    idx.push_back(where);
  }
  return axes(std::move(idx));
}

std::vector<Vector> SubspaceSpec::vectors(std::size_t dim) const {
  if (!by_index) {
    for (const auto& r : rows)
      if (r.size() != dim) throw Error(ErrorKind::DimensionMismatch, "subspace row has the wrong length");
    return rows;
  }
  std::vector<Vector> out;
  for (std::size_t i : indices) {
    if (i >= dim) throw Error(ErrorKind::DimensionMismatch, "subspace index out of range");
    out.push_back(unit_vector(dim, i));
  }
  return out;
}

Subspace SubspaceSpec::to_subspace(std::size_t dim) const { return Subspace::span(dim, vectors(dim)); }

namespace {

[[noreturn]] void invalid(const std::string& component, const std::string& reason) {
  throw Error(ErrorKind::ValidationError, component + ": " + reason);
}

DeclaredStructure to_declared(const DeclaredSpec& d, std::size_t dim) {
  DeclaredStructure out;
  auto conv = [dim](const std::optional<SubspaceSpec>& s) -> std::optional<Subspace> {
    if (!s) return std::nullopt;
    return s->to_subspace(dim);
  };
  out.radical = conv(d.radical);
  out.nilradical = conv(d.nilradical);
  out.levi = conv(d.levi);
  out.center = conv(d.center);
  for (const auto& s : d.direct_sum) out.direct_sum.push_back(s.to_subspace(dim));
  for (const auto& s : d.abelian_ideals) out.abelian_ideals.push_back(s.to_subspace(dim));
  return out;
}

}  // namespace

LieAlgebra to_algebra(const SpaceDocument& doc) {
  try {
    return LieAlgebra::create(doc.basis, doc.brackets, to_declared(doc.declared, doc.dimension()));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ValidationError) throw;
    invalid("algebra", e.what());
  }
}

ReductiveSpace to_space(const SpaceDocument& doc) {
  LieAlgebra a = to_algebra(doc);
  const std::size_t n = doc.dimension();
  try {
    Subspace h = doc.h.to_subspace(n);
    std::vector<Vector> m_rows = doc.m.vectors(n);
    Subspace m = Subspace::span(n, m_rows);
    if (m.dim() != m_rows.size()) invalid("m", "rows are linearly dependent");
    if (doc.metric.rows() != m_rows.size() || doc.metric.cols() != m_rows.size())
      invalid("metric", "must be " + std::to_string(m_rows.size()) + "x" + std::to_string(m_rows.size()));
    // Rewrite the metric in the canonical basis R = T B of m.
    Matrix b_t = Matrix::from_columns(m_rows, n);
    Matrix t(m.dim(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
      auto coeffs = b_t.solve(m.basis_vector(i));
      if (!coeffs) throw Error(ErrorKind::InternalInconsistency, "canonical basis of m outside the span of its rows");
      for (std::size_t j = 0; j < m.dim(); ++j) t(i, j) = (*coeffs)[j];
    }
    Matrix g = t * doc.metric * t.transpose();
    return ReductiveSpace::create(std::move(a), std::move(h), std::move(m), std::move(g), doc.declared.go);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ValidationError) throw;
    invalid("space", e.what());
  }
}

namespace {

json scalar_json(const Scalar& q) { return to_string(q); }

json vector_json(const Vector& v) {
  json arr = json::array();
  for (const auto& q : v) arr.push_back(scalar_json(q));
  return arr;
}

json subspace_json(const SubspaceSpec& s) {
  if (s.by_index) return json(s.indices);
  json arr = json::array();
  for (const auto& r : s.rows) arr.push_back(vector_json(r));
  return arr;
}

struct Reader {
  std::string path;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, "at " + (path.empty() ? std::string("/") : path) + ": " + msg);
  }

  Reader at(const std::string& key) const { return {path + "/" + key}; }
  Reader at(std::size_t i) const { return {path + "/" + std::to_string(i)}; }

  const json& field(const json& obj, const std::string& key) const {
    if (!obj.is_object()) fail("expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail("missing field \"" + key + "\"");
    return *it;
  }

  Scalar scalar(const json& j) const {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (!j.is_string()) fail("expected a rational string");
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  Vector vector(const json& j, std::size_t dim) const {
    if (!j.is_array() || j.size() != dim) fail("expected an array of " + std::to_string(dim) + " rationals");
    Vector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(at(i).scalar(j[i]));
    return v;
  }

  std::size_t index(const json& j, std::size_t dim) const {
    if (!j.is_number_unsigned() || j.get<std::size_t>() >= dim) fail("expected a basis index below " + std::to_string(dim));
    return j.get<std::size_t>();
  }

  SubspaceSpec subspace(const json& j, std::size_t dim) const {
    if (!j.is_array()) fail("expected an index list or a list of rows");
    if (j.empty() || !j[0].is_array()) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < j.size(); ++i) idx.push_back(at(i).index(j[i], dim));
      return SubspaceSpec::axes(std::move(idx));
    }
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(at(i).vector(j[i], dim));
    return SubspaceSpec::spanned_by(std::move(rows));
  }
};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') ++line, col = 1;
    else ++col;
  }
  return {line, col};
}

/// One top-level field per line; brackets, metric rows and declarations
/// get a line each so corpus diffs stay readable.
std::string layout(const json& root) {
  std::string out = "{\n";
  bool first = true;
  for (const auto& [key, value] : root.items()) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + json(key).dump() + ": ";
    const bool nested = (key == "brackets" || key == "declared") ? value.is_object() && !value.empty()
                                                                  : key == "metric" && !value.empty();
    if (!nested) {
      out += value.dump();
      continue;
    }
    const bool is_object = value.is_object();
    out += is_object ? "{\n" : "[\n";
    bool inner_first = true;
    for (const auto& [k, v] : value.items()) {
      if (!inner_first) out += ",\n";
      inner_first = false;
      out += "    ";
      if (is_object) out += json(k).dump() + ": ";
      out += v.dump();
    }
    out += is_object ? "\n  }" : "\n  ]";
  }
  return out + "\n}\n";
}

}  // namespace

SpaceDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what(),
                {static_cast<long>(line), static_cast<long>(col)});
  }
  Reader r;
  SpaceDocument doc;
  const json& name = r.field(root, "name");
  if (!name.is_string()) r.at("name").fail("expected a string");
  doc.name = name.get<std::string>();

  const json& dimension = r.field(root, "dimension");
  if (!dimension.is_number_unsigned()) r.at("dimension").fail("expected a non-negative integer");
  const std::size_t dim = dimension.get<std::size_t>();

  const json& basis = r.field(root, "basis");
  if (!basis.is_array() || basis.size() != dim) r.at("basis").fail("expected " + std::to_string(dim) + " names");
  for (std::size_t i = 0; i < dim; ++i) {
    if (!basis[i].is_string()) r.at("basis").at(i).fail("expected a string");
    doc.basis.push_back(basis[i].get<std::string>());
  }

  doc.brackets = empty_table(dim);
  Reader br = r.at("brackets");
  const json& brackets = r.field(root, "brackets");
  if (!brackets.is_object()) br.fail("expected an object");
  for (const auto& [key, terms] : brackets.items()) {
    Reader kr = br.at(key);
    std::size_t i = 0, j = 0;
    char comma = 0;
    std::istringstream is(key);
    if (!(is >> i >> comma >> j) || comma != ',' || !is.eof() || i >= dim || j >= dim || i >= j)
      kr.fail("key must be \"i,j\" with i < j < dimension");
    if (!terms.is_array()) kr.fail("expected a list of [k, coefficient] pairs");
    Vector v = zero_vector(dim);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      Reader tr = kr.at(t);
      if (!terms[t].is_array() || terms[t].size() != 2) tr.fail("expected [k, coefficient]");
      std::size_t k = tr.at(0).index(terms[t][0], dim);
      v[k] += tr.at(1).scalar(terms[t][1]);
    }
    set_bracket(doc.brackets, i, j, v);
  }

  doc.h = r.at("h").subspace(r.field(root, "h"), dim);
  doc.m = r.at("m").subspace(r.field(root, "m"), dim);
  const std::size_t mdim = doc.m.by_index ? doc.m.indices.size() : doc.m.rows.size();
  const json& metric = r.field(root, "metric");
  if (!metric.is_array() || metric.size() != mdim) r.at("metric").fail("expected " + std::to_string(mdim) + " rows");
  doc.metric = Matrix(mdim, mdim);
  for (std::size_t i = 0; i < mdim; ++i) {
    Vector row = r.at("metric").at(i).vector(metric[i], mdim);
    for (std::size_t j = 0; j < mdim; ++j) doc.metric(i, j) = row[j];
  }

  if (root.contains("declared")) {
    Reader dr = r.at("declared");
    const json& d = root["declared"];
    if (!d.is_object()) dr.fail("expected an object");
    for (const auto& [key, value] : d.items()) {
      Reader kr = dr.at(key);
      if (key == "radical") doc.declared.radical = kr.subspace(value, dim);
      else if (key == "nilradical") doc.declared.nilradical = kr.subspace(value, dim);
      else if (key == "levi") doc.declared.levi = kr.subspace(value, dim);
      else if (key == "center") doc.declared.center = kr.subspace(value, dim);
      else if (key == "direct_sum" || key == "abelian_ideals") {
        if (!value.is_array()) kr.fail("expected a list of subspaces");
        auto& target = key == "direct_sum" ? doc.declared.direct_sum : doc.declared.abelian_ideals;
        for (std::size_t i = 0; i < value.size(); ++i) target.push_back(kr.at(i).subspace(value[i], dim));
      } else if (key == "go") {
        if (!value.is_boolean()) kr.fail("expected true or false");
        doc.declared.go = value.get<bool>();
      } else {
        kr.fail("unknown declaration");
      }
    }
  }
  if (root.contains("provenance")) {
    if (!root["provenance"].is_string()) r.at("provenance").fail("expected a string");
    doc.provenance = root["provenance"].get<std::string>();
  }
  return doc;
}

std::string serialize(const SpaceDocument& doc) {
  const std::size_t dim = doc.dimension();
  json root;
  root["name"] = doc.name;
  root["dimension"] = dim;
  root["basis"] = doc.basis;
  json brackets = json::object();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Vector& v = doc.brackets[i][j];
      if (is_zero(v)) continue;
      json terms = json::array();
      for (std::size_t k = 0; k < dim; ++k)
        if (sgn(v[k]) != 0) terms.push_back(json::array({k, scalar_json(v[k])}));
      brackets[std::to_string(i) + "," + std::to_string(j)] = terms;
    }
  }
  root["brackets"] = brackets;
  root["h"] = subspace_json(doc.h);
  root["m"] = subspace_json(doc.m);
  json metric = json::array();
  for (std::size_t i = 0; i < doc.metric.rows(); ++i) metric.push_back(vector_json(doc.metric.row(i)));
  root["metric"] = metric;
  json declared = json::object();
  const auto& d = doc.declared;
  if (d.radical) declared["radical"] = subspace_json(*d.radical);
  if (d.nilradical) declared["nilradical"] = subspace_json(*d.nilradical);
  if (d.levi) declared["levi"] = subspace_json(*d.levi);
  if (d.center) declared["center"] = subspace_json(*d.center);
  if (!d.direct_sum.empty()) {
    json arr = json::array();
    for (const auto& s : d.direct_sum) arr.push_back(subspace_json(s));
    declared["direct_sum"] = arr;
  }
  if (!d.abelian_ideals.empty()) {
    json arr = json::array();
    for (const auto& s : d.abelian_ideals) arr.push_back(subspace_json(s));
    declared["abelian_ideals"] = arr;
  }
  if (d.go) declared["go"] = *d.go;
  root["declared"] = declared;
  root["provenance"] = doc.provenance;
  return layout(root);
}

std::pair<SpaceDocument, ReductiveSpace> load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  SpaceDocument doc = parse_document(buf.str());
  ReductiveSpace space = to_space(doc);
  return {std::move(doc), std::move(space)};
}

void save(const SpaceDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::UsageError, "cannot write " + path.string());
  out << serialize(doc);
}

namespace {

Vector vec(std::initializer_list<long> values) {
  Vector v;
  for (long x : values) v.emplace_back(x);
  return v;
}

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(i);
  return out;
}

}  // namespace

SpaceDocument build_so3() {
  SpaceDocument doc;
  doc.name = "so3";
  doc.basis = {"e1", "e2", "e3"};
  doc.brackets = empty_table(3);
  set_bracket(doc.brackets, 0, 1, vec({0, 0, 1}));
  set_bracket(doc.brackets, 1, 2, vec({1, 0, 0}));
  set_bracket(doc.brackets, 0, 2, vec({0, -1, 0}));
  doc.h = SubspaceSpec::axes({});
  doc.m = SubspaceSpec::axes({0, 1, 2});
  doc.metric = Matrix::identity(3);
  doc.declared.levi = SubspaceSpec::axes({0, 1, 2});
  doc.declared.go = true;
  doc.provenance = "round sphere SO(3)/{e} with the bi-invariant metric";
  return doc;
}

SpaceDocument build_sl2_hyperbolic() {
  SpaceDocument doc;
  doc.name = "sl2_hyperbolic";
  doc.basis = {"h", "e", "f"};
  doc.brackets = empty_table(3);
  set_bracket(doc.brackets, 0, 1, vec({0, 2, 0}));
  set_bracket(doc.brackets, 0, 2, vec({0, 0, -2}));
  set_bracket(doc.brackets, 1, 2, vec({1, 0, 0}));
  doc.h = SubspaceSpec::spanned_by({vec({0, 1, -1})});
  doc.m = SubspaceSpec::spanned_by({vec({1, 0, 0}), vec({0, 1, 1})});
  // Killing form on m is 8 Id; scaled by 1/8.
  doc.metric = Matrix::identity(2);
  doc.declared.levi = SubspaceSpec::axes({0, 1, 2});
  doc.declared.go = true;
  doc.provenance = "hyperbolic plane SL(2,R)/SO(2), Killing metric scaled by 1/8";
  return doc;
}

SpaceDocument build_e2_plane() {
  SpaceDocument doc;
  doc.name = "e2_plane";
  doc.basis = {"r", "x", "y"};
  doc.brackets = empty_table(3);
  set_bracket(doc.brackets, 0, 1, vec({0, 0, 1}));
  set_bracket(doc.brackets, 0, 2, vec({0, -1, 0}));
  doc.h = SubspaceSpec::axes({0});
  doc.m = SubspaceSpec::axes({1, 2});
  doc.metric = Matrix::identity(2);
  doc.declared.nilradical = SubspaceSpec::axes({1, 2});
  doc.declared.levi = SubspaceSpec::axes({});
  doc.declared.abelian_ideals = {SubspaceSpec::axes({1, 2})};
  doc.declared.go = true;
  doc.provenance = "Euclidean plane E(2)/SO(2)";
  return doc;
}

SpaceDocument build_heis_go(unsigned n) {
  if (n == 0) throw Error(ErrorKind::UsageError, "heis_go needs n >= 1");
  const std::size_t dim = 2 * n + 2;
  SpaceDocument doc;
  doc.name = "heis_go_" + std::to_string(n);
  if (n == 1) {
    doc.basis = {"e1", "e2", "e3", "D"};
  } else {
    for (unsigned i = 1; i <= n; ++i) {
      doc.basis.push_back("x" + std::to_string(i));
      doc.basis.push_back("y" + std::to_string(i));
    }
    doc.basis.push_back("z");
    doc.basis.push_back("D");
  }
  const std::size_t z = 2 * n, d = 2 * n + 1;
  doc.brackets = empty_table(dim);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t x = 2 * i, y = 2 * i + 1;
    set_bracket(doc.brackets, x, y, unit_vector(dim, z));
    // [D, x] = y and [D, y] = -x.
    set_bracket(doc.brackets, x, d, scale(-1, unit_vector(dim, y)));
    set_bracket(doc.brackets, y, d, unit_vector(dim, x));
  }
  doc.h = SubspaceSpec::axes({d});
  doc.m = SubspaceSpec::axes(range(0, d));
  doc.metric = Matrix::identity(d);
  doc.declared.nilradical = SubspaceSpec::axes(range(0, d));
  doc.declared.levi = SubspaceSpec::axes({});
  doc.declared.go = true;
  doc.provenance = "Heisenberg group of dimension " + std::to_string(2 * n + 1) +
                   " as a quotient of its extension by a rotation, left-invariant metric Id";
  return doc;
}

namespace {

std::vector<Vector> embed(const std::vector<Vector>& rows, std::size_t offset, std::size_t dim) {
  std::vector<Vector> out;
  for (const auto& r : rows) {
    Vector v = zero_vector(dim);
    for (std::size_t i = 0; i < r.size(); ++i) v[offset + i] = r[i];
    out.push_back(std::move(v));
  }
  return out;
}

SubspaceSpec embed_spec(const SubspaceSpec& s, std::size_t own_dim, std::size_t offset, std::size_t dim) {
  if (s.by_index) {
    std::vector<std::size_t> idx;
    for (std::size_t i : s.indices) idx.push_back(offset + i);
    return SubspaceSpec::axes(std::move(idx));
  }
  return SubspaceSpec::spanned_by(embed(s.vectors(own_dim), offset, dim));
}

SubspaceSpec join(const SubspaceSpec& a, std::size_t da, const SubspaceSpec& b, std::size_t db) {
  const std::size_t dim = da + db;
  SubspaceSpec ea = embed_spec(a, da, 0, dim), eb = embed_spec(b, db, da, dim);
  if (ea.by_index && eb.by_index) {
    ea.indices.insert(ea.indices.end(), eb.indices.begin(), eb.indices.end());
    return ea;
  }
  std::vector<Vector> rows = ea.vectors(dim);
  for (auto& r : eb.vectors(dim)) rows.push_back(std::move(r));
  return SubspaceSpec::spanned_by(std::move(rows));
}

/// Declared value if present, otherwise the library's answer when it exists.
std::optional<SubspaceSpec> known_nilradical(const SpaceDocument& doc) {
  if (doc.declared.nilradical) return doc.declared.nilradical;
  try {
    return SubspaceSpec::from(nilradical(to_algebra(doc)));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NilradicalUndecided) throw;
    return std::nullopt;
  }
}

}  // namespace

SpaceDocument build_direct_sum(const SpaceDocument& a, const SpaceDocument& b) {
  const std::size_t da = a.dimension(), db = b.dimension(), dim = da + db;
  SpaceDocument doc;
  doc.name = a.name + "+" + b.name;
  doc.basis = a.basis;
  for (const auto& nm : b.basis) doc.basis.push_back(nm + "'");
  doc.brackets = empty_table(dim);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = i + 1; j < da; ++j) set_bracket(doc.brackets, i, j, embed({a.brackets[i][j]}, 0, dim)[0]);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = i + 1; j < db; ++j)
      set_bracket(doc.brackets, da + i, da + j, embed({b.brackets[i][j]}, da, dim)[0]);
  doc.h = join(a.h, da, b.h, db);
  doc.m = join(a.m, da, b.m, db);
  const std::size_t ma = a.metric.rows(), mb = b.metric.rows();
  doc.metric = Matrix(ma + mb, ma + mb);
  for (std::size_t i = 0; i < ma; ++i)
    for (std::size_t j = 0; j < ma; ++j) doc.metric(i, j) = a.metric(i, j);
  for (std::size_t i = 0; i < mb; ++i)
    for (std::size_t j = 0; j < mb; ++j) doc.metric(ma + i, ma + j) = b.metric(i, j);

  const auto& x = a.declared;
  const auto& y = b.declared;
  if (x.radical && y.radical) doc.declared.radical = join(*x.radical, da, *y.radical, db);
  auto na = known_nilradical(a), nb = known_nilradical(b);
  if (na && nb) doc.declared.nilradical = join(*na, da, *nb, db);
  if (x.levi && y.levi) doc.declared.levi = join(*x.levi, da, *y.levi, db);
  if (x.center && y.center) doc.declared.center = join(*x.center, da, *y.center, db);
  doc.declared.direct_sum = {SubspaceSpec::axes(range(0, da)), SubspaceSpec::axes(range(da, dim))};
  for (const auto& s : x.abelian_ideals) doc.declared.abelian_ideals.push_back(embed_spec(s, da, 0, dim));
  for (const auto& s : y.abelian_ideals) doc.declared.abelian_ideals.push_back(embed_spec(s, db, da, dim));
  if (x.go && y.go) doc.declared.go = *x.go && *y.go;
  doc.provenance = "product of " + a.name + " and " + b.name;
  return doc;
}

std::vector<SpaceDocument> builtin_corpus() {
  return {build_so3(),     build_sl2_hyperbolic(),
          build_e2_plane(), build_heis_go(1),
          build_heis_go(2), build_direct_sum(build_so3(), build_so3()),
          build_direct_sum(build_e2_plane(), build_so3())};
}

}  // namespace liekv
