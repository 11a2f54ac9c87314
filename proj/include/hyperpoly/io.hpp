#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hyperpoly/matroid.hpp"
#include "hyperpoly/pencil.hpp"
#include "hyperpoly/polynomial.hpp"

namespace hyperpoly {

// A model file failed to parse or violated a type invariant. Message
// carries the offending location.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct PolynomialModel {
  Polynomial poly;
  std::optional<std::vector<std::string>> variables;
  bool operator==(const PolynomialModel&) const = default;
};

struct FormsModel {
  int nvars = 0;
  std::vector<LinearForm> forms;
  std::optional<std::vector<std::string>> variables;
  bool operator==(const FormsModel&) const = default;
};

struct PencilModel {
  SymmetricPencil pencil;
  bool operator==(const PencilModel&) const = default;
};

struct RealizationModel {
  RealizationMatrix matrix;
  bool operator==(const RealizationModel&) const = default;
};

struct RankModel {
  RankFunction rk;
  bool operator==(const RankModel&) const = default;
};

using ModelFile =
    std::variant<PolynomialModel, FormsModel, PencilModel, RealizationModel, RankModel>;

// Parses and validates a model file; every type invariant (symmetry,
// table sizes, canonical rationals, exponent shapes) is enforced here.
ModelFile parse_model(const std::filesystem::path& path);
ModelFile parse_model_json(const nlohmann::json& j, const std::string& where);

nlohmann::json serialize_model(const ModelFile& model);

// JSON building blocks shared with the CLI reports.
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json univariate_to_json(const UnivariatePolynomial& u);
nlohmann::json pencil_to_json(const SymmetricPencil& pencil);
SymmetricPencil pencil_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json matrix_to_json(const SymmetricMatrix& m);
nlohmann::json realization_to_json(const RealizationMatrix& m);
nlohmann::json rank_to_json(const RankFunction& rk);
nlohmann::json point_to_json(const Point& x);
nlohmann::json forms_to_json(const std::vector<LinearForm>& forms);

// A point given either inline as "(a,b,c)" / "a,b,c" or as a path to a
// JSON file holding an array of rational strings.
Point parse_point_arg(const std::string& arg);
Point point_from_json(const nlohmann::json& j, const std::string& where);

Rational rational_from_json(const nlohmann::json& j, const std::string& where);

}  // namespace hyperpoly
