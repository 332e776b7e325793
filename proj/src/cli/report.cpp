#include "koszulcy/cli/report.hpp"

#include <cmath>
#include <cstdio>

namespace koszulcy::cli {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex_digest(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return buf;
}

Json to_json(const Scalar& s) { return to_string(s); }

Json to_json(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& s : v) {
    out.push_back(to_string(s));
  }
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out.push_back(to_json(m.row(i)));
  }
  return out;
}

Json to_json(const Tensor& t, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& [w, c] : t.terms()) {
    Json word = Json::array();
    for (std::size_t letter : w) {
      word.push_back(names.at(letter));
    }
    out.push_back({{"coeff", to_string(c)}, {"word", word}});
  }
  return out;
}

Json element_json(const GradedFDAlgebra& e, std::size_t degree, const Element& x) {
  Json out = Json::object();
  const auto& labels = e.labels(degree);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) {
      out[labels.at(i)] = to_string(x[i]);
    }
  }
  return out;
}

std::string Report::verdict_body() const { return body.dump(2); }

std::string Report::render() const {
  Json out = body;
  out["timing"] = {{"elapsed_ms", std::round(elapsed_ms * 1000) / 1000}};
  return out.dump(2) + "\n";
}

}  // namespace koszulcy::cli
