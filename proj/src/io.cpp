#include "hyperpoly/io.hpp"

#include <fstream>
#include <sstream>

namespace hyperpoly {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw io_error(where + ": missing field '" + key + "'");
  return *it;
}

int require_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw io_error(where + ": expected an integer");
  return j.get<int>();
}

std::optional<std::vector<std::string>> optional_variables(const json& j, int nvars,
                                                           const std::string& where) {
  auto it = j.find("variables");
  if (it == j.end()) return std::nullopt;
  if (!it->is_array()) throw io_error(where + ".variables: expected an array");
  std::vector<std::string> names;
  for (const auto& v : *it) {
    if (!v.is_string()) throw io_error(where + ".variables: expected strings");
    names.push_back(v.get<std::string>());
  }
  if (static_cast<int>(names.size()) != nvars) {
    throw io_error(where + ".variables: got " + std::to_string(names.size()) +
                   " names for " + std::to_string(nvars) + " variables");
  }
  return names;
}

std::vector<Rational> rational_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw io_error(where + ": expected an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

PolynomialModel parse_polynomial_model(const json& j, const std::string& where) {
  const int nvars = require_int(require_field(j, "nvars", where), where + ".nvars");
  if (nvars < 1) throw io_error(where + ".nvars: must be positive");
  const json& terms = require_field(j, "terms", where);
  if (!terms.is_array()) throw io_error(where + ".terms: expected an array");
  Polynomial p(nvars);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tw = where + ".terms[" + std::to_string(t) + "]";
    const json& term = terms[t];
    if (!term.is_object()) throw io_error(tw + ": expected an object");
    const json& exps_json = require_field(term, "exponents", tw);
    if (!exps_json.is_array()) throw io_error(tw + ".exponents: expected an array");
    Polynomial::Exponents exps;
    for (const auto& e : exps_json) {
      const int v = require_int(e, tw + ".exponents");
      if (v < 0) throw io_error(tw + ".exponents: negative exponent");
      exps.push_back(v);
    }
    if (static_cast<int>(exps.size()) != nvars) {
      throw io_error(tw + ".exponents: length " + std::to_string(exps.size()) +
                     " does not match nvars " + std::to_string(nvars));
    }
    const Rational c = rational_from_json(require_field(term, "coeff", tw), tw + ".coeff");
    if (c.is_zero()) throw io_error(tw + ".coeff: zero coefficient not allowed");
    if (!p.coeff(exps).is_zero()) throw io_error(tw + ": duplicate exponent vector");
    p += Polynomial::monomial(nvars, std::move(exps), c);
  }
  return {std::move(p), optional_variables(j, nvars, where)};
}

FormsModel parse_forms_model(const json& j, const std::string& where) {
  const int nvars = require_int(require_field(j, "nvars", where), where + ".nvars");
  if (nvars < 1) throw io_error(where + ".nvars: must be positive");
  const json& forms_json = require_field(j, "forms", where);
  if (!forms_json.is_array() || forms_json.empty()) {
    throw io_error(where + ".forms: expected a nonempty array");
  }
  std::vector<LinearForm> forms;
  for (std::size_t i = 0; i < forms_json.size(); ++i) {
    const std::string fw = where + ".forms[" + std::to_string(i) + "]";
    auto coeffs = rational_array(forms_json[i], fw);
    if (static_cast<int>(coeffs.size()) != nvars) {
      throw io_error(fw + ": length " + std::to_string(coeffs.size()) +
                     " does not match nvars " + std::to_string(nvars));
    }
    forms.push_back(LinearForm(std::move(coeffs)));
  }
  return {nvars, std::move(forms), optional_variables(j, nvars, where)};
}

PencilModel parse_pencil_model(const json& j, const std::string& where) {
  const int nvars = require_int(require_field(j, "nvars", where), where + ".nvars");
  const int size = require_int(require_field(j, "size", where), where + ".size");
  if (nvars < 1) throw io_error(where + ".nvars: must be positive");
  if (size < 0) throw io_error(where + ".size: must be nonnegative");
  const json& mats = require_field(j, "mats", where);
  if (!mats.is_array() || static_cast<int>(mats.size()) != nvars) {
    throw io_error(where + ".mats: expected exactly nvars matrices");
  }
  std::vector<SymmetricMatrix> parsed;
  for (int k = 0; k < nvars; ++k) {
    const std::string mw = where + ".mats[" + std::to_string(k) + "]";
    auto entries = rational_array(mats[k], mw);
    if (entries.size() != static_cast<std::size_t>(size) * size) {
      throw io_error(mw + ": expected " + std::to_string(size * size) +
                     " row-major entries, got " + std::to_string(entries.size()));
    }
    for (int i = 0; i < size; ++i) {
      for (int p = i + 1; p < size; ++p) {
        if (entries[i * size + p] != entries[p * size + i]) {
          throw io_error(mw + ": not symmetric at entry (" + std::to_string(i) + "," +
                         std::to_string(p) + ")");
        }
      }
    }
    parsed.emplace_back(size, std::move(entries));
  }
  return {SymmetricPencil(nvars, std::move(parsed))};
}

RealizationModel parse_realization_model(const json& j, const std::string& where) {
  const int rows = require_int(require_field(j, "rows", where), where + ".rows");
  const int cols = require_int(require_field(j, "cols", where), where + ".cols");
  if (rows < 0 || cols < 0) throw io_error(where + ": negative shape");
  auto entries = rational_array(require_field(j, "entries", where), where + ".entries");
  if (entries.size() != static_cast<std::size_t>(rows) * cols) {
    throw io_error(where + ".entries: expected " + std::to_string(rows * cols) +
                   " row-major entries, got " + std::to_string(entries.size()));
  }
  return {RealizationMatrix(rows, cols, std::move(entries))};
}

RankModel parse_rank_model(const json& j, const std::string& where) {
  const int n = require_int(require_field(j, "n", where), where + ".n");
  if (n < 0 || n > 16) throw io_error(where + ".n: must be in [0, 16]");
  const json& ranks_json = require_field(j, "ranks", where);
  if (!ranks_json.is_array() || ranks_json.size() != (std::size_t(1) << n)) {
    throw io_error(where + ".ranks: expected exactly 2^n integers");
  }
  std::vector<int> ranks;
  for (const auto& r : ranks_json) {
    const int v = require_int(r, where + ".ranks");
    if (v < 0) throw io_error(where + ".ranks: negative rank");
    ranks.push_back(v);
  }
  return {RankFunction(n, std::move(ranks))};
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw io_error(where + ": " + e.what());
  }
  throw io_error(where + ": expected a rational as \"num/den\" or integer string");
}

ModelFile parse_model_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw io_error(where + ": expected a JSON object");
  const json& kind_json = require_field(j, "kind", where);
  if (!kind_json.is_string()) throw io_error(where + ".kind: expected a string");
  const std::string kind = kind_json.get<std::string>();
  if (kind == "polynomial") return parse_polynomial_model(j, where);
  if (kind == "forms") return parse_forms_model(j, where);
  if (kind == "pencil") return parse_pencil_model(j, where);
  if (kind == "realization") return parse_realization_model(j, where);
  if (kind == "rank") return parse_rank_model(j, where);
  throw io_error(where + ".kind: unknown model kind '" + kind + "'");
}

ModelFile parse_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error(path.string() + ": cannot open file");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw io_error(path.string() + ": " + e.what());
  }
  return parse_model_json(j, path.string());
}

json polynomial_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back(json{{"exponents", e}, {"coeff", c.str()}});
  }
  return json{{"kind", "polynomial"}, {"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const json& j, const std::string& where) {
  return parse_polynomial_model(j, where).poly;
}

json univariate_to_json(const UnivariatePolynomial& u) {
  json coeffs = json::array();
  for (const auto& c : u.coeffs()) coeffs.push_back(c.str());
  return json{{"degree", u.degree()}, {"coeffs", std::move(coeffs)}};
}

json pencil_to_json(const SymmetricPencil& pencil) {
  json mats = json::array();
  for (int k = 0; k < pencil.nvars(); ++k) {
    json rows = json::array();
    for (const auto& v : pencil.mat(k).row_major()) rows.push_back(v.str());
    mats.push_back(std::move(rows));
  }
  return json{{"kind", "pencil"},
              {"nvars", pencil.nvars()},
              {"size", pencil.size()},
              {"mats", std::move(mats)}};
}

SymmetricPencil pencil_from_json(const json& j, const std::string& where) {
  return parse_pencil_model(j, where).pencil;
}

json matrix_to_json(const SymmetricMatrix& m) {
  json entries = json::array();
  for (const auto& v : m.row_major()) entries.push_back(v.str());
  return json{{"size", m.size()}, {"entries", std::move(entries)}};
}

json realization_to_json(const RealizationMatrix& m) {
  json entries = json::array();
  for (const auto& v : m.row_major()) entries.push_back(v.str());
  return json{{"kind", "realization"},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", std::move(entries)}};
}

json rank_to_json(const RankFunction& rk) {
  return json{{"kind", "rank"}, {"n", rk.n}, {"ranks", rk.ranks}};
}

json point_to_json(const Point& x) {
  json coords = json::array();
  for (const auto& c : x.coords) coords.push_back(c.str());
  return coords;
}

json forms_to_json(const std::vector<LinearForm>& forms) {
  json out = json::array();
  for (const auto& f : forms) {
    json row = json::array();
    for (const auto& c : f.coeffs) row.push_back(c.str());
    out.push_back(std::move(row));
  }
  return out;
}

json serialize_model(const ModelFile& model) {
  return std::visit(
      [](const auto& m) -> json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PolynomialModel>) {
          json j = polynomial_to_json(m.poly);
          if (m.variables) j["variables"] = *m.variables;
          return j;
        } else if constexpr (std::is_same_v<T, FormsModel>) {
          json j{{"kind", "forms"}, {"nvars", m.nvars}, {"forms", forms_to_json(m.forms)}};
          if (m.variables) j["variables"] = *m.variables;
          return j;
        } else if constexpr (std::is_same_v<T, PencilModel>) {
          return pencil_to_json(m.pencil);
        } else if constexpr (std::is_same_v<T, RealizationModel>) {
          return realization_to_json(m.matrix);
        } else {
          return rank_to_json(m.rk);
        }
      },
      model);
}

Point point_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw io_error(where + ": expected a nonempty array of rationals");
  }
  return Point(rational_array(j, where));
}

Point parse_point_arg(const std::string& arg) {
  std::string body = arg;
  const bool parenthesized = !body.empty() && body.front() == '(' && body.back() == ')';
  if (parenthesized) body = body.substr(1, body.size() - 2);
  if (parenthesized || body.find(',') != std::string::npos) {
    std::vector<Rational> coords;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto b = item.find_first_not_of(" \t");
      const auto e = item.find_last_not_of(" \t");
      if (b == std::string::npos) throw io_error("point '" + arg + "': empty coordinate");
      try {
        coords.push_back(Rational::parse(item.substr(b, e - b + 1)));
      } catch (const std::invalid_argument& ex) {
        throw io_error("point '" + arg + "': " + ex.what());
      }
    }
    if (coords.empty()) throw io_error("point '" + arg + "': no coordinates");
    return Point(std::move(coords));
  }
  // otherwise treat as a path to a JSON array
  std::ifstream in(arg);
  if (!in) throw io_error(arg + ": cannot open file (and not an inline point)");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw io_error(arg + ": " + e.what());
  }
  return point_from_json(j, arg);
}

}  // namespace hyperpoly
