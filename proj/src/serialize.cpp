#include "realspec/serialize.hpp"

#include <cstdio>

#include "realspec/errors.hpp"

namespace realspec {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const Rat& r) { return r.str(); }

Json to_json(const GroupVec& g) {
  Json out = Json::array();
  for (const auto& c : g.coords()) out.push_back(to_json(c));
  return out;
}

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"c", to_json(c)}, {"e", e}});
  return out;
}

Json to_json(const GenSeries& s) {
  Json terms = Json::array();
  for (const auto& [g, c] : s.terms()) terms.push_back({{"c", to_json(c)}, {"g", to_json(g)}});
  if (!s.truncation()) return terms;
  return {{"terms", terms}, {"truncation", to_json(*s.truncation())}};
}

Json to_json(const SignChar& sc) { return sc.basis_signs(); }

Json to_json(const SemiCurvette& c) {
  Json entries = Json::array();
  for (const auto& s : c.entries()) entries.push_back(to_json(s));
  Json out = {{"n", c.nvars()}, {"k", c.rank()}, {"sign_char", to_json(c.sign_char())}, {"entries", entries}};
  if (c.sign_char().denominator() != 1) out["denominator"] = c.sign_char().denominator();
  return out;
}

Json to_json(const BinomialRoot& q) { return {{"plus", q.plus}, {"minus", q.minus}, {"lambda", to_json(q.lambda)}}; }

Json to_json(const GenMonomial& m) {
  Json out = Json::object();
  for (const auto& [i, e] : m) out[std::to_string(i)] = e;
  return out;
}

Json to_json(const StandardForm& f) {
  Json tail = Json::array();
  for (const auto& t : f.tail()) tail.push_back({{"c", to_json(t.coeff)}, {"m", to_json(t.mono)}});
  Json out = {{"dominant", to_json(f.dominant())}, {"tail", tail}};
  if (f.coeff() != Rat(1)) out["coeff"] = to_json(f.coeff());
  return out;
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) throw ParseError("rational must be a string \"p/q\" or an integer");
  return Rat::parse(j.get<std::string>());
}

GroupVec group_vec_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("group vector must be a non-empty array");
  std::vector<Rat> c;
  for (const auto& x : j) c.push_back(rat_from_json(x));
  return GroupVec(std::move(c));
}

Poly poly_from_json(const Json& j, std::size_t n) {
  if (j.is_string()) return Poly::parse(j.get<std::string>(), n);
  if (!j.is_array()) throw ParseError("polynomial must be a term list or an expression string");
  Poly p(n);
  for (const auto& t : j) p.add_term(field(t, "e").get<ExpVec>(), rat_from_json(field(t, "c")));
  return p;
}

GenSeries series_from_json(const Json& j, std::size_t k) {
  const Json& terms = j.is_object() ? field(j, "terms") : j;
  if (!terms.is_array()) throw ParseError("series must be a term list");
  std::vector<std::pair<GroupVec, Rat>> parsed;
  for (const auto& t : terms) {
    GroupVec g = group_vec_from_json(field(t, "g"));
    if (g.rank() != k) throw RankMismatch("series exponent rank differs from session rank");
    parsed.emplace_back(std::move(g), rat_from_json(field(t, "c")));
  }
  std::optional<GroupVec> trunc;
  if (j.is_object() && j.contains("truncation")) trunc = group_vec_from_json(j.at("truncation"));
  return GenSeries::from_terms(k, parsed, trunc);
}

SignChar sign_char_from_json(const Json& j, long denominator) {
  if (!j.is_array()) throw ParseError("sign character must be an array of +1/-1");
  return SignChar(j.get<std::vector<int>>(), denominator);
}

SemiCurvette curvette_from_json(const Json& j) {
  const auto n = field(j, "n").get<std::size_t>();
  const auto k = field(j, "k").get<std::size_t>();
  const long den = j.contains("denominator") ? j.at("denominator").get<long>() : 1;
  SignChar sc = sign_char_from_json(field(j, "sign_char"), den);
  if (sc.rank() != k) throw RankMismatch("sign character length differs from k");
  std::vector<GenSeries> entries;
  for (const auto& e : field(j, "entries")) entries.push_back(series_from_json(e, k));
  if (entries.size() != n) throw ParseError("curvette entry count differs from n");
  return SemiCurvette(std::move(entries), std::move(sc));
}

BinomialRoot root_from_json(const Json& j) {
  const Rat lambda = j.contains("lambda") ? rat_from_json(j.at("lambda")) : Rat(1);
  return BinomialRoot(field(j, "plus").get<ExpVec>(), field(j, "minus").get<ExpVec>(), lambda);
}

GenMonomial genmon_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("generalized monomial must be an object index -> exponent");
  GenMonomial m;
  for (const auto& [key, val] : j.items()) {
    const long e = val.get<long>();
    if (e != 0) m[std::stoi(key)] = e;
  }
  return m;
}

StandardForm standard_form_from_json(const Json& j) {
  std::vector<TailTerm> tail;
  if (j.contains("tail")) {
    for (const auto& t : j.at("tail")) tail.push_back({rat_from_json(field(t, "c")), genmon_from_json(field(t, "m"))});
  }
  const Rat coeff = j.contains("coeff") ? rat_from_json(j.at("coeff")) : Rat(1);
  return StandardForm(genmon_from_json(field(j, "dominant")), std::move(tail), coeff);
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string json_hash(const Json& j) { return fnv1a_hex(j.dump()); }

}  // namespace realspec
