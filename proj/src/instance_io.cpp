#include "ordescent/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ordescent {

namespace {

struct Field {
  std::size_t line = 0;
  std::string value;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::size_t parse_number(std::string_view token, std::size_t line, std::string_view key) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw InstanceError(line, "expected a non-negative integer for '" + std::string(key) + "', got '" +
                                  std::string(token) + "'");
  }
  return value;
}

std::vector<std::size_t> parse_sequence(const Field& field, std::string_view key) {
  std::vector<std::size_t> out;
  std::istringstream in(field.value);
  std::string token;
  while (in >> token) out.push_back(parse_number(token, field.line, key));
  return out;
}

std::vector<ElementPair> parse_pairs(const Field& field, std::string_view key) {
  std::vector<ElementPair> out;
  std::string_view rest = field.value;
  while (!(rest = trim(rest)).empty()) {
    if (rest.front() != '(') throw InstanceError(field.line, "expected '(' in '" + std::string(key) + "'");
    const auto close = rest.find(')');
    if (close == std::string_view::npos) throw InstanceError(field.line, "unclosed '(' in '" + std::string(key) + "'");
    const std::string_view inner = rest.substr(1, close - 1);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) {
      throw InstanceError(field.line, "expected a pair (i,j) in '" + std::string(key) + "'");
    }
    out.emplace_back(parse_number(trim(inner.substr(0, comma)), field.line, key),
                     parse_number(trim(inner.substr(comma + 1)), field.line, key));
    rest = rest.substr(close + 1);
    rest = trim(rest);
    if (!rest.empty() && rest.front() == ',') rest.remove_prefix(1);
  }
  return out;
}

class Fields {
 public:
  explicit Fields(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto end = text.find('\n', pos);
      std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
      pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) throw InstanceError(line_no, "expected 'key: value'");
      const std::string key(trim(line.substr(0, colon)));
      if (!kKeys.count(key)) throw InstanceError(line_no, "unknown key '" + key + "'");
      if (fields_.count(key)) throw InstanceError(line_no, "duplicate key '" + key + "'");
      fields_[key] = {line_no, std::string(trim(line.substr(colon + 1)))};
    }
  }

  const Field& required(const std::string& key) const {
    const auto it = fields_.find(key);
    if (it == fields_.end()) throw InstanceError(0, "missing key '" + key + "'");
    return it->second;
  }

  Field optional(const std::string& key) const {
    const auto it = fields_.find(key);
    return it == fields_.end() ? Field{} : it->second;
  }

 private:
  inline static const std::set<std::string> kKeys = {
      "x.size", "x.leq", "a.size", "a.leq", "alpha", "b.size", "b.leq", "beta", "f",
  };
  std::map<std::string, Field> fields_;
};

OrdSet parse_order(const Fields& fields, const std::string& prefix) {
  const Field& size_field = fields.required(prefix + ".size");
  const std::size_t size = parse_number(size_field.value, size_field.line, prefix + ".size");
  const Field leq = fields.optional(prefix + ".leq");
  const auto pairs = parse_pairs(leq, prefix + ".leq");
  for (const auto& [i, j] : pairs)
    if (i >= size || j >= size) {
      throw InstanceError(leq.line, "pair (" + std::to_string(i) + "," + std::to_string(j) + ") outside " + prefix +
                                        " of size " + std::to_string(size));
    }
  return transitive_reflexive_closure(pairs, size);
}

std::vector<Element> parse_values(const Fields& fields, const std::string& key, std::size_t length,
                                  std::size_t range, const char* range_name) {
  const Field& field = fields.required(key);
  auto values = parse_sequence(field, key);
  if (values.size() != length) {
    throw InstanceError(field.line, "'" + key + "' has " + std::to_string(values.size()) + " entries, expected " +
                                        std::to_string(length));
  }
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] >= range) {
      throw InstanceError(field.line, "'" + key + "' entry " + std::to_string(i) + " is " + std::to_string(values[i]) +
                                          ", outside " + range_name + " of size " + std::to_string(range));
    }
  return values;
}

std::string pair_text(const Witness& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.domain.size(); ++i) s += (i ? "," : "") + std::to_string(w.domain[i]);
  return s + ")";
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const Fields fields(text);
  Instance inst;
  inst.x = parse_order(fields, "x");
  const OrdSet a = parse_order(fields, "a");
  const OrdSet b = parse_order(fields, "b");
  auto alpha = parse_values(fields, "alpha", a.size(), inst.x.size(), "X");
  auto beta = parse_values(fields, "beta", b.size(), inst.x.size(), "X");
  auto map = parse_values(fields, "f", a.size(), b.size(), "B");

  if (auto v = is_lax_object(inst.x, a, alpha); !v) {
    throw InstanceError(fields.required("alpha").line, "alpha is not monotone on " + pair_text(*v.witness), v.witness);
  }
  if (auto v = is_lax_object(inst.x, b, beta); !v) {
    throw InstanceError(fields.required("beta").line, "beta is not monotone on " + pair_text(*v.witness), v.witness);
  }
  LaxObject src{a, std::move(alpha)};
  LaxObject dst{b, std::move(beta)};
  if (auto v = is_lax_morphism(inst.x, src, dst, map); !v) {
    const std::string what = v.witness->condition == condition::kMonotone
                                 ? "f is not monotone on " + pair_text(*v.witness)
                                 : "alpha(" + std::to_string(v.witness->domain[0]) + ") is not below beta(f(" +
                                       std::to_string(v.witness->domain[0]) + "))";
    throw InstanceError(fields.required("f").line, what, v.witness);
  }
  inst.f = {std::move(src), std::move(dst), std::move(map)};
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError(0, "cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_instance(text.str());
}

std::string dump_instance(const Instance& instance) {
  std::ostringstream out;
  auto order = [&](const char* prefix, const OrdSet& o) {
    out << prefix << ".size: " << o.size() << "\n" << prefix << ".leq:";
    for (const auto& [i, j] : o.strict_pairs()) out << " (" << i << "," << j << ")";
    out << "\n";
  };
  auto values = [&](const char* key, const std::vector<Element>& v) {
    out << key << ":";
    for (Element e : v) out << " " << e;
    out << "\n";
  };
  order("x", instance.x);
  order("a", instance.f.source.carrier);
  values("alpha", instance.f.source.valuation);
  order("b", instance.f.target.carrier);
  values("beta", instance.f.target.valuation);
  values("f", instance.f.map);
  return out.str();
}

}  // namespace ordescent
