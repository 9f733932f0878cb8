#pragma once

// JSON serialization. Rationals are strings "p/q"; Laurent polynomials are
// arrays of {exponents, coeff} in the canonical graded-lex term order;
// partitions are arrays of parts. Ordered maps everywhere keep the output
// byte-stable across runs.

#include <string>

#include <json.hpp>

#include "wedgerep/bosonic.hpp"
#include "wedgerep/exterior.hpp"
#include "wedgerep/laurent.hpp"
#include "wedgerep/partition.hpp"

namespace wedgerep {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return q.str(); }

inline Json to_json(const ExpVec& e) {
  Json j = Json::object();
  for (const auto& [v, exp] : e.entries()) j[to_string(v)] = exp;
  return j;
}

inline Json to_json(const Window& w) {
  Json j = Json::object();
  for (const auto& [v, b] : w.entries()) {
    Json lim = Json::array();
    lim.push_back(b.lo);
    if (b.hi >= kExpInf)
      lim.push_back("inf");
    else
      lim.push_back(b.hi);
    j[to_string(v)] = lim;
  }
  return j;
}

inline Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t = Json::object();
    t["exponents"] = to_json(e);
    t["coeff"] = to_json(c);
    terms.push_back(t);
  }
  Json j = Json::object();
  j["terms"] = terms;
  if (!p.window().entries().empty()) j["window"] = to_json(p.window());
  return j;
}

inline Json to_json(const Partition& p) {
  Json j = Json::array();
  for (int x : p) j.push_back(x);
  return j;
}

inline Json to_json(const BrElement& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms()) {
    Json t = Json::object();
    Json mono = Json::array();
    for (int e : m) mono.push_back(e);
    t["e_exponents"] = mono;
    t["coeff"] = to_json(c);
    terms.push_back(t);
  }
  Json j = Json::object();
  j["rank"] = x.rank();
  j["terms"] = terms;
  return j;
}

template <class Tag>
Json to_json(const Multi<Tag>& u) {
  Json terms = Json::array();
  for (const auto& [m, c] : u.terms()) {
    Json t = Json::object();
    Json idx = Json::array();
    for (int i : m) idx.push_back(i);
    t["indices"] = idx;
    t["coeff"] = to_json(c);
    terms.push_back(t);
  }
  return terms;
}

inline LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& t : j.at("terms")) {
    ExpVec e;
    for (const auto& [name, exp] : t.at("exponents").items()) {
      VarFamily fam = name.at(0) == 'z' ? VarFamily::z : VarFamily::w;
      e = e + ExpVec::unit(VarId{fam, std::stoi(name.substr(1))}, exp.get<int>());
    }
    p += LaurentPoly::monomial(e, Rational(t.at("coeff").get<std::string>()));
  }
  return p;
}

inline Partition partition_from_json(const Json& j) {
  Partition p;
  for (const auto& x : j) p.push_back(x.get<int>());
  validate_partition(p);
  return p;
}

}  // namespace wedgerep
