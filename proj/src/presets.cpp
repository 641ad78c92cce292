#include "rht/presets.hpp"

#include <stdexcept>

namespace rht {

namespace {

std::string num(int i) { return std::to_string(i); }

// shared relation scheme: one symplectic pair, everything else flat
void symplectic_relations(Presentation& p, const std::string& a,
                          const std::string& b, int k) {
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      p.add_relation(p.mono({a + num(i), a + num(j)}));
      p.add_relation(p.mono({b + num(i), b + num(j)}));
    }
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      if (i != j) p.add_relation(p.mono({a + num(i), b + num(j)}));
  for (int i = 2; i <= k; ++i)
    p.add_relation(p.mono({a + num(i), b + num(i)}) - p.mono({a + "1", b + "1"}));
}

}  // namespace

Presentation model_MR(int k) {
  if (k < 1) throw std::invalid_argument("model_MR: k must be >= 1");
  Presentation p;
  p.label = "mr:" + num(k);
  for (int i = 1; i <= k; ++i) p.add_generator("u" + num(i), 1, 1);
  for (int i = 1; i <= k; ++i) p.add_generator("v" + num(i), 1, 1);
  p.add_generator("g", 1, 2);
  p.add_generator("gc", 1, 2);
  symplectic_relations(p, "u", "v", k);
  p.set_differential("gc", p.mono({"u1", "v1"}));
  return p;
}

Presentation model_curve(int genus) {
  if (genus < 1) throw std::invalid_argument("model_curve: genus must be >= 1");
  Presentation p;
  p.label = "curve:" + num(genus);
  for (int i = 1; i <= genus; ++i) p.add_generator("a" + num(i), 1, 1);
  for (int i = 1; i <= genus; ++i) p.add_generator("b" + num(i), 1, 1);
  symplectic_relations(p, "a", "b", genus);
  return p;
}

Presentation model_b1_one() {
  Presentation p;
  p.label = "b1one";
  p.add_generator("g", 1, 1);
  return p;
}

Presentation model_kodaira_thurston() {
  Presentation p = model_MR(1);
  p.label = "kt";
  return p;
}

Presentation model_filiform() {
  Presentation p;
  p.label = "filiform";
  p.add_generator("e1", 1, 1);
  p.add_generator("e2", 1, 1);
  p.add_generator("e3", 1, 2);
  p.add_generator("e4", 1, 3);
  p.set_differential("e3", p.mono({"e1", "e2"}));
  p.set_differential("e4", p.mono({"e1", "e3"}));
  return p;
}

std::optional<Presentation> parse_preset_id(const std::string& id) {
  auto colon = id.find(':');
  const std::string head = id.substr(0, colon);
  int arg = -1;
  if (colon != std::string::npos) {
    const std::string tail = id.substr(colon + 1);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    try {
      arg = std::stoi(tail);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (head == "mr" && arg >= 1) return model_MR(arg);
  if (head == "curve" && arg >= 1) return model_curve(arg);
  if (colon == std::string::npos) {
    if (head == "b1one") return model_b1_one();
    if (head == "kt") return model_kodaira_thurston();
    if (head == "filiform") return model_filiform();
  }
  return std::nullopt;
}

}  // namespace rht
