#include "catloc/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "catloc/fincat.hpp"

namespace catloc {

using nlohmann::json;

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw DataError(where + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw DataError("unknown key '" + it.key() + "' in " + where);
}

template <class T>
T get(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw DataError("missing key '" + std::string(key) + "' in " + where);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DataError("bad value for '" + std::string(key) + "' in " + where + ": " + e.what());
  }
}

Scalar scalar_from(const Field& F, const json& v, const std::string& where) {
  try {
    if (v.is_string()) return Scalar::parse(F, v.get<std::string>());
    if (v.is_number_integer()) return Scalar::from_int(F, v.get<long long>());
  } catch (const std::invalid_argument& e) {
    throw DataError(where + ": " + e.what());
  }
  throw DataError(where + ": coefficients must be strings or integers");
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

json field_to_json(const Field& F) {
  if (F.is_rational()) return "Q";
  return json{{"Fp", F.modulus()}};
}

Field field_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.size() == 1 && j.contains("Fp") && j["Fp"].is_number_unsigned()) {
    try {
      return Field::prime(j["Fp"].get<std::uint32_t>());
    } catch (const std::invalid_argument& e) {
      throw DataError(e.what());
    }
  }
  throw DataError("field must be \"Q\" or {\"Fp\": p}");
}

Field parse_field(const std::string& text) {
  if (text == "Q" || text == "q") return Field::rationals();
  std::string digits = text;
  for (const char* prefix : {"Fp:", "F_", "Fp", "F"})
    if (digits.rfind(prefix, 0) == 0) {
      digits = digits.substr(std::string(prefix).size());
      break;
    }
  try {
    std::size_t used = 0;
    unsigned long p = std::stoul(digits, &used);
    if (used != digits.size() || p > 0xffffffffUL) throw std::invalid_argument("");
    return Field::prime(static_cast<std::uint32_t>(p));
  } catch (const std::invalid_argument& e) {
    throw DataError("bad field '" + text + "': expected Q or Fp:<prime>");
  } catch (const std::out_of_range&) {
    throw DataError("bad field '" + text + "'");
  }
}

json to_json(const CategoryPresentation& P) {
  const std::size_t n = P.size();
  json j;
  j["format_version"] = kFormatVersion;
  j["field"] = field_to_json(P.field());
  j["indecomposables"] = P.names();
  if (P.has_sigma()) j["sigma"] = *P.sigma_table();
  json hom = json::array();
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k)
      if (P.hom_dim(i, k) != 0) hom.push_back({{"src", i}, {"dst", k}, {"dim", P.hom_dim(i, k)}});
  j["hom"] = hom;
  json comp = json::array();
  for (Index i = 0; i < n; ++i)
    for (Index jj = 0; jj < n; ++jj)
      for (Index k = 0; k < n; ++k)
        for (std::size_t a = 0; a < P.hom_dim(i, jj); ++a)
          for (std::size_t b = 0; b < P.hom_dim(jj, k); ++b)
            for (std::size_t c = 0; c < P.hom_dim(i, k); ++c) {
              const Scalar& s = P.constant(i, jj, k, a, b, c);
              if (!s.is_zero())
                comp.push_back({{"i", i}, {"j", jj}, {"k", k}, {"a", a}, {"b", b}, {"c", c}, {"coeff", s.to_string()}});
            }
  j["comp"] = comp;
  json ids = json::array();
  for (Index i = 0; i < n; ++i) {
    json v = json::array();
    for (const auto& s : P.identity(i)) v.push_back(s.to_string());
    ids.push_back(v);
  }
  j["identities"] = ids;
  json md = P.metadata();
  if (!P.aliases().empty()) {
    json al = json::object();
    for (const auto& [alias, idx] : P.aliases()) al[alias] = P.name(idx);
    md["aliases"] = al;
  }
  if (P.allows_zero_objects()) md["allows_zero_objects"] = true;
  j["metadata"] = md;
  return j;
}

CategoryPresentation from_json(const json& j, bool strict, bool validate) {
  const std::string top = "category file";
  if (!j.is_object()) throw DataError("category file must be a JSON object");
  if (strict)
    check_keys(j, {"format_version", "field", "indecomposables", "sigma", "hom", "comp", "identities", "metadata"}, top);
  const int version = get<int>(j, "format_version", top);
  if (version != kFormatVersion) throw DataError("unsupported format_version " + std::to_string(version));
  if (!j.contains("field")) throw DataError("missing key 'field'");
  const Field F = field_from_json(j["field"]);
  auto names = get<std::vector<std::string>>(j, "indecomposables", top);
  {
    std::set<std::string> uniq(names.begin(), names.end());
    if (uniq.size() != names.size()) throw DataError("duplicate indecomposable names");
  }
  const std::size_t n = names.size();
  CategoryPresentation P(F, names);

  auto index = [&](const json& e, const char* key, const std::string& where) {
    auto v = get<long long>(e, key, where);
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw DataError(where + ": index out of range");
    return static_cast<Index>(v);
  };

  for (const auto& e : j.value("hom", json::array())) {
    const std::string where = "hom entry " + e.dump();
    if (strict) check_keys(e, {"src", "dst", "dim"}, where);
    P.set_hom_dim(index(e, "src", where), index(e, "dst", where), get<std::size_t>(e, "dim", where));
  }
  for (const auto& e : j.value("comp", json::array())) {
    const std::string where = "comp entry " + e.dump();
    if (strict) check_keys(e, {"i", "j", "k", "a", "b", "c", "coeff"}, where);
    const Index i = index(e, "i", where), jj = index(e, "j", where), k = index(e, "k", where);
    const auto a = get<std::size_t>(e, "a", where), b = get<std::size_t>(e, "b", where),
               c = get<std::size_t>(e, "c", where);
    if (a >= P.hom_dim(i, jj) || b >= P.hom_dim(jj, k) || c >= P.hom_dim(i, k))
      throw DataError(where + ": basis index out of range");
    if (!e.contains("coeff")) throw DataError(where + ": missing coeff");
    P.set_constant(i, jj, k, a, b, c, scalar_from(F, e["coeff"], where));
  }
  const auto& ids = j.contains("identities") ? j["identities"] : json::array();
  if (!ids.is_array() || ids.size() != n) throw DataError("identities must list one vector per indecomposable");
  for (Index i = 0; i < n; ++i) {
    if (!ids[i].is_array() || ids[i].size() != P.hom_dim(i, i))
      throw DataError("identity of " + names[i] + " has the wrong length");
    Vector v;
    for (const auto& s : ids[i]) v.push_back(scalar_from(F, s, "identity of " + names[i]));
    P.set_identity(i, std::move(v));
  }
  if (j.contains("sigma") && !j["sigma"].is_null()) {
    std::vector<Index> sigma;
    try {
      sigma = j["sigma"].get<std::vector<Index>>();
      P.set_sigma(sigma);
    } catch (const json::exception& e) {
      throw DataError(std::string("bad sigma: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw DataError(std::string("bad sigma: ") + e.what());
    }
  }
  json md = j.value("metadata", json::object());
  if (!md.is_object()) throw DataError("metadata must be an object");
  if (md.contains("aliases")) {
    for (auto it = md["aliases"].begin(); it != md["aliases"].end(); ++it) {
      auto idx = P.find(it.value().get<std::string>());
      if (!idx) throw DataError("alias '" + it.key() + "' names an unknown object");
      P.add_alias(it.key(), *idx);
    }
    md.erase("aliases");
  }
  if (md.contains("allows_zero_objects")) {
    P.set_allows_zero_objects(md["allows_zero_objects"].get<bool>());
    md.erase("allows_zero_objects");
  }
  P.metadata() = md;
  if (validate) {
    ValidationReport rep = validate_category(P);
    if (!rep.ok()) throw DataError("category fails validation: " + rep.violations.front());
  }
  return P;
}

void save_category(const CategoryPresentation& P, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << to_json(P).dump(1) << "\n";
}

CategoryPresentation load_category(const std::filesystem::path& path, bool strict, bool validate) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  return from_json(j, strict, validate);
}

Obj parse_object(const CategoryPresentation& P, const std::string& spec) {
  Obj X = Obj::zero(P.size());
  std::string rest = spec;
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    auto plus = rest.find('+', pos);
    std::string term = trim(rest.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos));
    if (term.empty()) throw DataError("empty summand in '" + spec + "'");
    std::size_t copies = 1;
    auto star = term.find('*');
    if (star != std::string::npos) {
      try {
        copies = std::stoul(trim(term.substr(0, star)));
      } catch (const std::exception&) {
        throw DataError("bad multiplicity in '" + term + "'");
      }
      term = trim(term.substr(star + 1));
    }
    auto idx = P.find(term);
    if (!idx) throw DataError("unknown object '" + term + "'");
    X.mult[*idx] += copies;
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return X;
}

IndexSet parse_index_set(const CategoryPresentation& P, const std::string& spec) {
  std::string s = spec;
  std::replace(s.begin(), s.end(), ',', '+');
  if (trim(s).empty()) return {};
  return parse_object(P, s).support();
}

}  // namespace catloc
