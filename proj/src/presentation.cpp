#include "rht/presentation.hpp"

#include <cctype>
#include <stdexcept>

namespace rht {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front())))
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'')
      return false;
  return true;
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error(path + ": " + what);
}

}  // namespace

std::size_t Presentation::add_generator(const std::string& name, int degree,
                                        int weight) {
  if (!valid_name(name))
    throw std::invalid_argument("generator name '" + name +
                                "' must be alphanumeric/_/' starting with a letter");
  if (has_generator(name))
    throw std::invalid_argument("duplicate generator '" + name + "'");
  if (degree < 1) throw std::invalid_argument("generator degree must be >= 1");
  if (weight < 0) throw std::invalid_argument("generator weight must be >= 0");
  gens_.push_back({name, degree, weight});
  diff_.emplace_back();
  return gens_.size() - 1;
}

void Presentation::add_relation(Element r) {
  if (!r.is_zero()) relations_.push_back(std::move(r));
}

void Presentation::set_differential(const std::string& name, Element dg) {
  diff_[index_of(name)] = std::move(dg);
}

bool Presentation::has_generator(const std::string& name) const {
  for (const auto& g : gens_)
    if (g.name == name) return true;
  return false;
}

std::size_t Presentation::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  throw std::invalid_argument("unknown generator '" + name + "'");
}

Element Presentation::gen(const std::string& name) const {
  return Element::term(Monomial{{index_of(name)}}, 1);
}

Element Presentation::mono(const std::vector<std::string>& names) const {
  std::vector<std::size_t> idx;
  idx.reserve(names.size());
  for (const auto& n : names) idx.push_back(index_of(n));
  auto canon = canonical_monomial(std::move(idx), gens_);
  if (!canon) return Element();
  return Element::term(canon->first, canon->second);
}

bool Presentation::weighted() const {
  if (gens_.empty()) return false;
  for (const auto& g : gens_)
    if (g.weight < 1) return false;
  return true;
}

nlohmann::json Presentation::element_to_json(const Element& e) const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [m, c] : e.terms())
    j[m.str(gens_)] = scalar_to_string(c);
  return j;
}

Element Presentation::element_from_json(const nlohmann::json& j,
                                        const std::string& path) const {
  if (!j.is_object()) fail(path, "element must be an object of {monomial: coefficient}");
  Element e;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    std::vector<std::size_t> idx;
    if (key != "1") {
      std::size_t pos = 0;
      while (pos <= key.size()) {
        auto next = key.find('^', pos);
        const std::string part =
            key.substr(pos, next == std::string::npos ? next : next - pos);
        if (!has_generator(part))
          fail(path + "[\"" + key + "\"]", "unknown generator '" + part + "'");
        idx.push_back(index_of(part));
        if (next == std::string::npos) break;
        pos = next + 1;
      }
    }
    Scalar c;
    if (it.value().is_string()) {
      try {
        c = scalar_from_string(it.value().get<std::string>());
      } catch (const std::invalid_argument& ex) {
        fail(path + "[\"" + key + "\"]", ex.what());
      }
    } else if (it.value().is_number_integer()) {
      c = Scalar(it.value().get<long long>());
    } else {
      fail(path + "[\"" + key + "\"]", "coefficient must be a string or integer");
    }
    auto canon = canonical_monomial(std::move(idx), gens_);
    if (!canon) continue;  // odd square: the term is zero
    e.add_term(canon->first, c * canon->second);
  }
  return e;
}

nlohmann::json Presentation::to_json() const {
  nlohmann::json j;
  if (!label.empty()) j["name"] = label;
  j["generators"] = nlohmann::json::array();
  for (const auto& g : gens_) {
    nlohmann::json jg{{"name", g.name}, {"degree", g.degree}};
    if (g.weight > 0) jg["weight"] = g.weight;
    j["generators"].push_back(jg);
  }
  j["relations"] = nlohmann::json::array();
  for (const auto& r : relations_) j["relations"].push_back(element_to_json(r));
  nlohmann::json d = nlohmann::json::object();
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (!diff_[i].is_zero()) d[gens_[i].name] = element_to_json(diff_[i]);
  j["differential"] = d;
  return j;
}

Presentation Presentation::from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail("$", "presentation must be an object");
  Presentation p;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("$.name", "must be a string");
    p.label = j["name"].get<std::string>();
  }
  if (!j.contains("generators") || !j["generators"].is_array())
    fail("$.generators", "required array");
  std::size_t gi = 0;
  for (const auto& jg : j["generators"]) {
    const std::string path = "$.generators[" + std::to_string(gi++) + "]";
    if (!jg.is_object()) fail(path, "must be an object");
    if (!jg.contains("name") || !jg["name"].is_string())
      fail(path + ".name", "required string");
    if (!jg.contains("degree") || !jg["degree"].is_number_integer())
      fail(path + ".degree", "required integer");
    int weight = 0;
    if (jg.contains("weight")) {
      if (!jg["weight"].is_number_integer())
        fail(path + ".weight", "must be an integer");
      weight = jg["weight"].get<int>();
    }
    try {
      p.add_generator(jg["name"].get<std::string>(), jg["degree"].get<int>(),
                      weight);
    } catch (const std::invalid_argument& ex) {
      fail(path, ex.what());
    }
  }
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) fail("$.relations", "must be an array");
    std::size_t ri = 0;
    for (const auto& jr : j["relations"]) {
      p.add_relation(
          p.element_from_json(jr, "$.relations[" + std::to_string(ri++) + "]"));
    }
  }
  if (j.contains("differential")) {
    const auto& jd = j["differential"];
    if (!jd.is_object()) fail("$.differential", "must be an object");
    for (auto it = jd.begin(); it != jd.end(); ++it) {
      if (!p.has_generator(it.key()))
        fail("$.differential", "unknown generator '" + it.key() + "'");
      p.set_differential(
          it.key(), p.element_from_json(it.value(), "$.differential." + it.key()));
    }
  }
  return p;
}

}  // namespace rht
