#include "fstruct/manifest.hpp"

#include <fstream>
#include <sstream>

#include "fstruct/errors.hpp"

namespace fstruct {

namespace {

using nlohmann::json;

std::string child(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string child(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const json& require(const json& obj, const std::string& key, const std::string& at) {
  if (!obj.contains(key)) throw SchemaError(child(at, key), "missing required member");
  return obj.at(key);
}

std::string expect_string(const json& v, const std::string& at) {
  if (!v.is_string()) throw SchemaError(at, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> string_array(const json& v, const std::string& at) {
  if (!v.is_array()) throw SchemaError(at, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(expect_string(v[i], child(at, i)));
  return out;
}

std::string rational_string(const json& v, const std::string& at) {
  std::string s;
  if (v.is_number_integer()) {
    s = std::to_string(v.get<long long>());
  } else if (v.is_string()) {
    s = v.get<std::string>();
  } else {
    throw SchemaError(at, "expected a rational string \"p/q\"");
  }
  try {
    parse_rational(s);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(at, e.what());
  }
  return s;
}

StringMatrix square_matrix(const json& v, std::size_t n, const std::string& at) {
  if (!v.is_array()) throw SchemaError(at, "expected an array of rows");
  if (v.size() != n) {
    throw SchemaError(at, "expected " + std::to_string(n) + " rows to match the chart, got " +
                              std::to_string(v.size()));
  }
  StringMatrix out;
  for (std::size_t i = 0; i < n; ++i) {
    auto row = string_array(v[i], child(at, i));
    if (row.size() != n) {
      throw SchemaError(child(at, i), "expected " + std::to_string(n) + " entries, got " +
                                          std::to_string(row.size()));
    }
    out.push_back(std::move(row));
  }
  return out;
}

TensorField11 parse_matrix(const Chart& chart, const StringMatrix& rows, const std::string& at) {
  std::vector<std::vector<Expr>> m;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<Expr> r;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      try {
        r.push_back(chart.parse_expr(rows[i][j]));
      } catch (const ParseError& e) {
        throw SchemaError(child(child(at, i), j), e.what());
      }
    }
    m.push_back(std::move(r));
  }
  return TensorField11(std::move(m));
}

}  // namespace

Manifest manifest_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("", "manifest must be a JSON object");
  Manifest m;
  const json& chart = require(j, "chart", "");
  if (!chart.is_object()) throw SchemaError("/chart", "expected an object");
  m.vars = string_array(require(chart, "vars", "/chart"), "/chart/vars");
  if (m.vars.empty()) throw SchemaError("/chart/vars", "chart needs at least one variable");
  if (chart.contains("nonvanishing")) {
    m.nonvanishing = string_array(chart.at("nonvanishing"), "/chart/nonvanishing");
  }
  m.F = square_matrix(require(j, "F", ""), m.vars.size(), "/F");
  m.alpha = rational_string(require(j, "alpha", ""), "/alpha");
  m.beta = rational_string(require(j, "beta", ""), "/beta");
  const json& k = require(j, "K", "");
  if (!k.is_number_integer()) throw SchemaError("/K", "expected an integer");
  m.K = k.get<int>();
  if (m.K < 3) throw SchemaError("/K", "K must be at least 3, got " + std::to_string(m.K));
  if (j.contains("Fhat") && !j.at("Fhat").is_null()) {
    m.fhat = square_matrix(j.at("Fhat"), m.vars.size(), "/Fhat");
  }
  return m;
}

nlohmann::ordered_json to_json(const Manifest& m) {
  nlohmann::ordered_json j;
  j["chart"]["vars"] = m.vars;
  j["chart"]["nonvanishing"] = m.nonvanishing;
  j["F"] = m.F;
  j["alpha"] = m.alpha;
  j["beta"] = m.beta;
  j["K"] = m.K;
  if (m.fhat) j["Fhat"] = *m.fhat;
  return j;
}

Manifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  json j;
  try {
    j = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return manifest_from_json(j);
}

LoadedStructure load(const Manifest& m) {
  Chart chart = [&] {
    try {
      return Chart::parse(m.vars, m.nonvanishing);
    } catch (const ParseError& e) {
      throw SchemaError("/chart/nonvanishing", e.what());
    } catch (const std::invalid_argument& e) {
      throw SchemaError("/chart", e.what());
    }
  }();
  TensorField11 F = parse_matrix(chart, m.F, "/F");
  std::optional<TensorField11> fhat;
  if (m.fhat) fhat = parse_matrix(chart, *m.fhat, "/Fhat");
  FStructure s = make_structure(std::move(chart), std::move(F), parse_rational(m.alpha),
                                parse_rational(m.beta), m.K);
  return LoadedStructure{std::move(s), std::move(fhat)};
}

LoadedStructure load_manifest(const std::filesystem::path& path) { return load(read_manifest(path)); }

Manifest canonical_manifest(const LoadedStructure& s) {
  const FStructure& st = s.structure;
  Manifest m;
  m.vars = st.chart.vars();
  for (const auto& e : st.chart.nonvanishing()) m.nonvanishing.push_back(st.chart.str(e));
  m.F = to_strings(st.F, st.chart);
  m.alpha = to_string(st.alpha);
  m.beta = to_string(st.beta);
  m.K = st.K;
  if (s.fhat) m.fhat = to_strings(*s.fhat, st.chart);
  return m;
}

Manifest builtin_example(int id) {
  Manifest m;
  switch (id) {
    case 1:
      m.vars = {"x", "y"};
      m.nonvanishing = {"y"};
      m.F = {{"-1", "y"}, {"-1/y", "2"}};
      m.alpha = "1";
      m.beta = "-2";
      m.K = 3;
      break;
    case 2:
      m.vars = {"x1", "x2"};
      m.F = {{"1", "-1"}, {"1", "-2"}};
      m.alpha = "-1";
      m.beta = "-2";
      m.K = 3;
      m.fhat = StringMatrix{{"0", "1"}, {"-1", "0"}};
      break;
    case 3:
      m.vars = {"x", "y", "z"};
      m.nonvanishing = {"x"};
      m.F = {{"0", "0", "x"}, {"0", "0", "0"}, {"-1/x", "0", "-1"}};
      m.alpha = "1";
      m.beta = "1";
      m.K = 5;
      break;
    case 4:
      m.vars = {"x", "y", "z", "t"};
      m.nonvanishing = {"x"};
      m.F = {{"1", "0", "0", "-x"}, {"0", "1", "-1/x", "0"}, {"0", "x", "0", "0"}, {"1/x", "0", "0", "0"}};
      m.alpha = "-1";
      m.beta = "1";
      m.K = 5;
      break;
    default:
      throw std::out_of_range("example id must be 1..4, got " + std::to_string(id));
  }
  return m;
}

}  // namespace fstruct
