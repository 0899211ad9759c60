#include "ordescent/report.hpp"

#include <map>


namespace ordescent {

namespace {

std::string join(const std::vector<std::size_t>& v, const std::string& prefix = "") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + prefix + std::to_string(v[i]);
  return s;
}

std::string name(Element e, const ElementNames& names) {
  return e < names.size() ? names[e] : std::to_string(e);
}

std::string named(const std::vector<Element>& v, const ElementNames& names) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + name(v[i], names);
  return s;
}

}  // namespace

std::string condition_number(const std::string& condition) {
  static const std::map<std::string, std::string> numbers = {
      {condition::kTripleLifting, "(1)"},
      {condition::kLiftedJoinRecovery, "(2)"},
      {condition::kLiftedJoinCover, "(2')"},
      {condition::kFamGluing, "(3)"},
  };
  const auto it = numbers.find(condition);
  return it == numbers.end() ? std::string() : it->second;
}

std::string describe(const Witness& w, const ElementNames& x_names) {
  const std::string& c = w.condition;
  if (c == condition::kLiftedJoinRecovery || c == condition::kFamDescent) {
    return "(" + join(w.codomain, "b") + ",w=" + named(w.base, x_names) + ")";
  }
  if (c == condition::kFamGluing || c == condition::kGlobalJoin) {
    return "sigma=(" + named(w.family, x_names) + ") at " + join(w.codomain, "b") + ", " + join(w.domain, "a");
  }
  if (c == condition::kFiberTripleLifting || c == condition::kFiberPairLifting) {
    return "x=" + named(w.base, x_names) + ": (" + join(w.codomain, "b") + ")";
  }
  if (c == condition::kMonotone || c == condition::kMonotoneValuation) return "(" + join(w.domain, "a") + ")";
  if (c == condition::kLaxInequality || c == condition::kFamInequality) {
    return join(w.domain, "a") + " -> " + join(w.codomain, "b");
  }
  if (c == condition::kMixedDescends) {
    return "C={" + join(w.base) + "} chi=(" + named(w.family, x_names) + ") over (" + join(w.codomain, "b") +
           ") at (" + join(w.domain, "c") + ")";
  }
  std::string s;
  if (!w.domain.empty()) s += "domain=(" + join(w.domain) + ")";
  if (!w.codomain.empty()) s += std::string(s.empty() ? "" : " ") + "(" + join(w.codomain, "b") + ")";
  if (!w.base.empty()) s += std::string(s.empty() ? "" : " ") + "x=(" + named(w.base, x_names) + ")";
  if (!w.family.empty()) s += std::string(s.empty() ? "" : " ") + "family=(" + named(w.family, x_names) + ")";
  return s;
}

std::string to_string(const Witness& w) {
  const std::string number = condition_number(w.condition);
  return (number.empty() ? "" : "condition " + number + " ") + w.condition + " fails at " + describe(w);
}

std::string to_string(const Verdict& v) { return v.holds ? "holds" : "fails: " + to_string(*v.witness); }

std::string to_string(const OracleVerdict& v) {
  if (v.holds) {
    return v.conclusive ? "holds" : "holds up to size " + std::to_string(v.bound) + " (bounded)";
  }
  return "fails (conclusive): " + (v.witness ? to_string(*v.witness) : std::string("no witness"));
}

std::string record(const std::vector<std::pair<std::string, std::string>>& fields) {
  std::string s;
  for (const auto& [key, value] : fields) {
    if (!s.empty()) s += ' ';
    s += key + '=';
    if (value.find_first_of(" \t\"") != std::string::npos || value.empty()) {
      s += '"';
      for (char ch : value) {
        if (ch == '"' || ch == '\\') s += '\\';
        s += ch;
      }
      s += '"';
    } else {
      s += value;
    }
  }
  return s;
}

std::vector<std::pair<std::string, std::string>> witness_fields(const Witness& w) {
  return {{"condition", w.condition},
          {"domain", join(w.domain)},
          {"codomain", join(w.codomain)},
          {"base", join(w.base)},
          {"family", join(w.family)}};
}

}  // namespace ordescent
