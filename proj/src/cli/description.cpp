#include "koszulcy/cli/description.hpp"

#include "koszulcy/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace koszulcy::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    fail(path, "missing field \"" + key + "\"");
  }
  return *it;
}

Scalar rational(const json& j, const std::string& path) {
  if (!j.is_string()) {
    fail(path, "expected a rational string such as \"-1/2\"");
  }
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

Term term(const json& j, const std::string& path, const std::set<std::string>& names,
          std::size_t length) {
  if (!j.is_object()) {
    fail(path, "expected an object with \"coeff\" and \"word\"");
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "coeff" && key != "word") {
      fail(path, "unknown field \"" + key + "\"");
    }
  }
  Term t;
  t.coeff = rational(field(j, "coeff", path), path + ".coeff");
  const json& w = field(j, "word", path);
  if (!w.is_array()) {
    fail(path + ".word", "expected a list of generator names");
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::string p = path + ".word[" + std::to_string(i) + "]";
    if (!w[i].is_string()) {
      fail(p, "expected a generator name");
    }
    if (names.count(w[i].get<std::string>()) == 0) {
      fail(p, "undeclared generator \"" + w[i].get<std::string>() + "\"");
    }
    t.word.push_back(w[i].get<std::string>());
  }
  if (t.word.size() != length) {
    fail(path + ".word", length == 2 ? "relations must be quadratic"
                                     : "deformation terms must have degree 1");
  }
  return t;
}

Combination combination(const json& j, const std::string& path, const std::set<std::string>& names,
                        std::size_t length) {
  if (!j.is_array()) {
    fail(path, "expected a list of terms");
  }
  Combination c;
  for (std::size_t i = 0; i < j.size(); ++i) {
    c.push_back(term(j[i], path + "[" + std::to_string(i) + "]", names, length));
  }
  return c;
}

json to_json(const Combination& c) {
  json out = json::array();
  for (const auto& t : c) {
    out.push_back({{"coeff", to_string(t.coeff)}, {"word", t.word}});
  }
  return out;
}

std::size_t line_of(std::string_view document, std::size_t byte) {
  const std::size_t end = std::min(byte, document.size());
  return 1 + static_cast<std::size_t>(std::count(document.begin(), document.begin() + end, '\n'));
}

}  // namespace

AlgebraDescription parse_description(std::string_view document) {
  json root;
  try {
    root = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(document, e.byte)) + ": malformed JSON");
  }
  if (!root.is_object()) {
    fail("$", "expected a JSON object");
  }
  static const std::set<std::string> known{"name",  "generators", "relations",
                                           "sigma", "deformation", "domain"};
  for (const auto& [key, value] : root.items()) {
    if (known.count(key) == 0) {
      fail("$", "unknown field \"" + key + "\"");
    }
  }

  AlgebraDescription d;
  if (root.contains("name")) {
    if (!root["name"].is_string()) {
      fail("name", "expected a string");
    }
    d.name = root["name"].get<std::string>();
  }

  const json& gens = field(root, "generators", "$");
  if (!gens.is_array() || gens.empty()) {
    fail("generators", "expected a non-empty list of names");
  }
  std::set<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string p = "generators[" + std::to_string(i) + "]";
    if (!gens[i].is_string() || gens[i].get<std::string>().empty()) {
      fail(p, "expected a non-empty name");
    }
    const auto name = gens[i].get<std::string>();
    if (!names.insert(name).second) {
      fail(p, "duplicate generator \"" + name + "\"");
    }
    d.generators.push_back(name);
  }

  const json& rels = field(root, "relations", "$");
  if (!rels.is_array()) {
    fail("relations", "expected a list of relations");
  }
  for (std::size_t r = 0; r < rels.size(); ++r) {
    d.relations.push_back(combination(rels[r], "relations[" + std::to_string(r) + "]", names, 2));
  }

  const std::size_t n = d.generators.size();
  if (root.contains("sigma")) {
    const json& s = root["sigma"];
    if (!s.is_array() || s.size() != n) {
      fail("sigma", "expected " + std::to_string(n) + " rows");
    }
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string p = "sigma[" + std::to_string(i) + "]";
      if (!s[i].is_array() || s[i].size() != n) {
        fail(p, "expected " + std::to_string(n) + " entries");
      }
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = rational(s[i][j], p + "[" + std::to_string(j) + "]");
      }
    }
    d.sigma = m;
  }

  if (root.contains("deformation")) {
    const json& def = root["deformation"];
    if (!def.is_object()) {
      fail("deformation", "expected an object with \"nu\" and \"theta\"");
    }
    for (const auto& [key, value] : def.items()) {
      if (key != "nu" && key != "theta") {
        fail("deformation", "unknown field \"" + key + "\"");
      }
    }
    DeformationSpec spec;
    const json& nu = field(def, "nu", "deformation");
    const json& theta = field(def, "theta", "deformation");
    if (!nu.is_array() || nu.size() != d.relations.size()) {
      fail("deformation.nu", "expected one entry per relation");
    }
    if (!theta.is_array() || theta.size() != d.relations.size()) {
      fail("deformation.theta", "expected one entry per relation");
    }
    for (std::size_t r = 0; r < nu.size(); ++r) {
      spec.nu.push_back(
          combination(nu[r], "deformation.nu[" + std::to_string(r) + "]", names, 1));
      spec.theta.push_back(rational(theta[r], "deformation.theta[" + std::to_string(r) + "]"));
    }
    d.deformation = std::move(spec);
  }

  if (root.contains("domain")) {
    if (!root["domain"].is_boolean()) {
      fail("domain", "expected true or false");
    }
    d.domain = root["domain"].get<bool>();
  }
  return d;
}

std::string serialize(const AlgebraDescription& d) {
  json root;
  if (d.name) {
    root["name"] = *d.name;
  }
  root["generators"] = d.generators;
  root["relations"] = json::array();
  for (const auto& r : d.relations) {
    root["relations"].push_back(to_json(r));
  }
  if (d.sigma) {
    json rows = json::array();
    for (std::size_t i = 0; i < d.sigma->rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < d.sigma->cols(); ++j) {
        row.push_back(to_string((*d.sigma)(i, j)));
      }
      rows.push_back(row);
    }
    root["sigma"] = rows;
  }
  if (d.deformation) {
    json nu = json::array();
    json theta = json::array();
    for (std::size_t r = 0; r < d.deformation->nu.size(); ++r) {
      nu.push_back(to_json(d.deformation->nu[r]));
      theta.push_back(to_string(d.deformation->theta[r]));
    }
    root["deformation"] = {{"nu", nu}, {"theta", theta}};
  }
  if (d.domain) {
    root["domain"] = true;
  }
  return root.dump(2) + "\n";
}

namespace {

std::size_t index_of(const std::vector<std::string>& names, const std::string& name) {
  return static_cast<std::size_t>(std::find(names.begin(), names.end(), name) - names.begin());
}

Tensor tensor_of(const Combination& c, const std::vector<std::string>& names, std::size_t degree) {
  Tensor t(degree, names.size());
  for (const auto& term : c) {
    Word w;
    for (const auto& letter : term.word) {
      w.push_back(index_of(names, letter));
    }
    t.add_term(w, term.coeff);
  }
  return t;
}

}  // namespace

std::vector<Tensor> relation_tensors(const AlgebraDescription& d) {
  std::vector<Tensor> out;
  for (const auto& r : d.relations) {
    out.push_back(tensor_of(r, d.generators, 2));
  }
  return out;
}

QuadraticAlgebra to_algebra(const AlgebraDescription& d) {
  return QuadraticAlgebra::from_relations(d.generators, relation_tensors(d));
}

PBWDeformation to_deformation(const AlgebraDescription& d, const QuadraticAlgebra& a) {
  if (!d.deformation) {
    throw PreconditionError("the document has no deformation section");
  }
  std::vector<std::vector<Scalar>> nu;
  for (const auto& c : d.deformation->nu) {
    const Tensor t = tensor_of(c, d.generators, 1);
    std::vector<Scalar> row(d.generators.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
      row[i] = t.coeff({i});
    }
    nu.push_back(std::move(row));
  }
  return PBWDeformation::from_relations(a, relation_tensors(d), nu, d.deformation->theta);
}

Combination to_combination(const Tensor& t, const std::vector<std::string>& names) {
  Combination c;
  for (const auto& [w, coeff] : t.terms()) {
    Term term{coeff, {}};
    for (std::size_t letter : w) {
      term.word.push_back(names.at(letter));
    }
    c.push_back(std::move(term));
  }
  return c;
}

AlgebraDescription describe(const QuadraticAlgebra& a) {
  AlgebraDescription d;
  d.generators = a.names();
  for (const auto& r : a.relation_tensors()) {
    d.relations.push_back(to_combination(r, a.names()));
  }
  return d;
}

}  // namespace koszulcy::cli
