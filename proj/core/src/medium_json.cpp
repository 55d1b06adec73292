#include "frontspeed/medium_json.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "frontspeed/errors.hpp"

namespace frontspeed {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw ConfigError(path + ": " + why);
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key)) fail(path + "." + key, "unknown key");
  }
}

double require_number(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) fail(path + "." + key, "missing");
  if (!obj[key].is_number()) fail(path + "." + key, "expected a number");
  return obj[key].get<double>();
}

std::vector<double> number_list(const json& value, const std::string& path) {
  if (!value.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_number())
      fail(path + "[" + std::to_string(i) + "]", "expected a number");
    out.push_back(value[i].get<double>());
  }
  return out;
}

CoefficientField parse_profile(const json& profile, int dimension,
                               const std::vector<double>& periods,
                               const std::string& path) {
  if (!profile.is_object()) fail(path, "expected a profile object");
  reject_unknown(profile, {"kind", "params"}, path);
  if (!profile.contains("kind") || !profile["kind"].is_string())
    fail(path + ".kind", "missing or not a string");
  const std::string kind = profile["kind"].get<std::string>();
  std::vector<double> params;
  if (profile.contains("params")) params = number_list(profile["params"], path + ".params");

  auto need = [&](size_t n) {
    if (params.size() != n)
      fail(path + ".params", "profile '" + kind + "' takes " + std::to_string(n) +
                                 " parameter(s), got " + std::to_string(params.size()));
  };
  try {
    if (kind == "constant") {
      need(1);
      return CoefficientField::constant(params[0], dimension, periods);
    }
    if (kind == "cosine") {
      need(2);
      return CoefficientField::cosine(params[0], params[1], dimension, periods);
    }
    if (kind == "inverse_cosine") {
      need(2);
      if (dimension != 1) fail(path, "inverse_cosine profiles are 1D only");
      return CoefficientField::inverse_cosine(params[0], params[1], periods[0]);
    }
    if (kind == "sine_product") {
      need(2);
      if (dimension != 2) fail(path, "sine_product profiles are 2D only");
      return CoefficientField::sine_product(params[0], params[1], periods);
    }
    if (kind == "samples") {
      if (dimension != 1) fail(path, "sample profiles are 1D only");
      if (params.size() < 4) fail(path + ".params", "need at least 4 samples");
      return CoefficientField::samples(params, periods[0]);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
  fail(path + ".kind", "unknown profile kind '" + kind + "'");
}

}  // namespace

MediumDocument parse_medium(const json& document) {
  if (!document.is_object()) fail("$", "medium document must be a JSON object");
  reject_unknown(document,
                 {"dimension", "periods", "fields", "stream_function", "zeta", "q1",
                  "reaction_shape"},
                 "$");

  if (!document.contains("dimension") || !document["dimension"].is_number_integer())
    fail("$.dimension", "missing or not an integer");
  const int dimension = document["dimension"].get<int>();
  if (dimension != 1 && dimension != 2) fail("$.dimension", "must be 1 or 2");

  if (!document.contains("periods")) fail("$.periods", "missing");
  const std::vector<double> periods = number_list(document["periods"], "$.periods");
  if (static_cast<int>(periods.size()) != dimension)
    fail("$.periods", "must list exactly " + std::to_string(dimension) + " period(s)");
  for (size_t i = 0; i < periods.size(); ++i)
    if (!(periods[i] > 0.0))
      fail("$.periods[" + std::to_string(i) + "]", "period must be positive");

  if (!document.contains("fields") || !document["fields"].is_object())
    fail("$.fields", "missing or not an object");
  const json& fields = document["fields"];

  if (!document.contains("zeta")) fail("$.zeta", "missing");
  if (document.contains("reaction_shape")) {
    if (!document["reaction_shape"].is_string())
      fail("$.reaction_shape", "expected a string");
    if (document["reaction_shape"].get<std::string>() != "logistic")
      fail("$.reaction_shape", "only 'logistic' is supported");
  }

  auto stream = [&]() -> std::optional<CoefficientField> {
    if (!document.contains("stream_function") || document["stream_function"].is_null())
      return std::nullopt;
    return parse_profile(document["stream_function"], dimension, periods,
                         "$.stream_function");
  };
  auto q1 = [&]() -> std::optional<CoefficientField> {
    if (!document.contains("q1") || document["q1"].is_null()) return std::nullopt;
    return parse_profile(document["q1"], dimension, periods, "$.q1");
  };

  MediumDocument out;
  if (dimension == 1 && fields.contains("a")) {
    reject_unknown(fields, {"a"}, "$.fields");
    if (document.contains("stream_function") && !document["stream_function"].is_null())
      fail("$.stream_function", "not valid for a 1D line medium");
    if (document.contains("q1") && !document["q1"].is_null())
      fail("$.q1", "not valid for a 1D line medium");
    LineMedium m;
    m.period = periods[0];
    m.a = parse_profile(fields["a"], 1, periods, "$.fields.a");
    m.zeta = parse_profile(document["zeta"], 1, periods, "$.zeta");
    out.medium = std::move(m);
  } else if (dimension == 1 && (fields.contains("alpha") || fields.contains("d"))) {
    reject_unknown(fields, {"alpha", "d"}, "$.fields");
    if (!fields.contains("alpha")) fail("$.fields.alpha", "missing");
    if (!fields.contains("d")) fail("$.fields.d", "missing");
    if (document.contains("stream_function") && !document["stream_function"].is_null())
      fail("$.stream_function", "not valid for a shear medium; use q1");
    ShearMedium m;
    m.period_y = periods[0];
    m.alpha = parse_profile(fields["alpha"], 1, periods, "$.fields.alpha");
    m.d = parse_profile(fields["d"], 1, periods, "$.fields.d");
    m.zeta = parse_profile(document["zeta"], 1, periods, "$.zeta");
    m.q1 = q1();
    out.medium = std::move(m);
  } else if (dimension == 2 && fields.contains("a11")) {
    reject_unknown(fields, {"a11", "a12", "a22"}, "$.fields");
    if (document.contains("q1") && !document["q1"].is_null())
      fail("$.q1", "not valid for a 2D cell medium; use stream_function");
    CellMedium2D m;
    m.period_x = periods[0];
    m.period_y = periods[1];
    m.a11 = parse_profile(fields["a11"], 2, periods, "$.fields.a11");
    m.a12 = fields.contains("a12")
                ? parse_profile(fields["a12"], 2, periods, "$.fields.a12")
                : CoefficientField::constant(0.0, 2, periods);
    m.a22 = fields.contains("a22")
                ? parse_profile(fields["a22"], 2, periods, "$.fields.a22")
                : CoefficientField::constant(1.0, 2, periods);
    m.stream_function = stream();
    m.zeta = parse_profile(document["zeta"], 2, periods, "$.zeta");
    out.medium = std::move(m);
  } else {
    fail("$.fields", "cannot infer geometry: expected key 'a' (line), "
                     "'alpha'+'d' (shear), or 'a11' (2D cell)");
  }
  return out;
}

MediumDocument parse_medium_string(const std::string& text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  return parse_medium(document);
}

MediumDocument load_medium_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open medium file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_medium_string(buf.str());
}

namespace {

json profile_to_json(const CoefficientField& field) {
  json j;
  switch (field.kind()) {
    case ProfileKind::Constant: j["kind"] = "constant"; break;
    case ProfileKind::Cosine: j["kind"] = "cosine"; break;
    case ProfileKind::InverseCosine: j["kind"] = "inverse_cosine"; break;
    case ProfileKind::SineProduct: j["kind"] = "sine_product"; break;
    case ProfileKind::Samples: j["kind"] = "samples"; break;
  }
  j["params"] = field.params();
  return j;
}

}  // namespace

json medium_to_json(const MediumDocument& document) {
  json j;
  j["reaction_shape"] = document.reaction.shape_name;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LineMedium>) {
          j["dimension"] = 1;
          j["periods"] = {m.period};
          j["fields"] = {{"a", profile_to_json(m.a)}};
          j["zeta"] = profile_to_json(m.zeta);
        } else if constexpr (std::is_same_v<T, ShearMedium>) {
          j["dimension"] = 1;
          j["periods"] = {m.period_y};
          j["fields"] = {{"alpha", profile_to_json(m.alpha)},
                         {"d", profile_to_json(m.d)}};
          j["zeta"] = profile_to_json(m.zeta);
          j["q1"] = m.q1 ? profile_to_json(*m.q1) : json(nullptr);
        } else {
          j["dimension"] = 2;
          j["periods"] = {m.period_x, m.period_y};
          j["fields"] = {{"a11", profile_to_json(m.a11)},
                         {"a12", profile_to_json(m.a12)},
                         {"a22", profile_to_json(m.a22)}};
          j["stream_function"] =
              m.stream_function ? profile_to_json(*m.stream_function) : json(nullptr);
          j["zeta"] = profile_to_json(m.zeta);
        }
      },
      document.medium);
  return j;
}

std::string medium_id(const AnyMedium& medium) {
  return std::visit([](const auto& m) { return medium_id(m); }, medium);
}

}  // namespace frontspeed
