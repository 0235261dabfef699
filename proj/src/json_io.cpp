#include "amds/json_io.hpp"

#include <fstream>
#include <sstream>

namespace amds {

namespace {

[[noreturn]] void bad(const std::string& pointer, const std::string& what) {
  throw SchemaError((pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

const Json& member(const Json& j, const std::string& pointer, const char* key) {
  if (!j.is_object()) bad(pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(pointer + "/" + key, "missing");
  return *it;
}

int small_int(const Json& j, const std::string& pointer) {
  Int v = int_from_json(j, pointer);
  if (v < INT32_MIN || v > INT32_MAX) bad(pointer, "out of range");
  return static_cast<int>(v);
}

}  // namespace

Json int_to_json(Int v) {
  if (fits_int64(v)) return Json(static_cast<int64_t>(v));
  return Json(to_string(v));
}

Int int_from_json(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      uint64_t u = j.get<uint64_t>();
      return static_cast<Int>(u);
    }
    return static_cast<Int>(j.get<int64_t>());
  }
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    size_t k = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (k == s.size()) bad(pointer, "expected a decimal integer string");
    for (size_t i = k; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') bad(pointer, "expected a decimal integer string");
    try {
      return int_from_string(s);
    } catch (const std::exception&) {
      bad(pointer, "integer out of range");
    }
  }
  bad(pointer, "expected an integer");
}

Json qpoly_to_json(const QLaurent& c) {
  Json o = Json::object();
  for (const auto& [h, v] : c.terms()) o[std::to_string(h)] = int_to_json(v);
  return o;
}

QLaurent qpoly_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_object()) bad(pointer, "expected an object of half-exponent keys");
  QLaurent c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    std::string p = pointer + "/" + key;
    int h = 0;
    try {
      size_t used = 0;
      h = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      bad(p, "key is not an integer half-exponent");
    }
    Int v = int_from_json(it.value(), p);
    if (v == 0) bad(p, "zero coefficient");
    if (c.coeff(h) != 0) bad(p, "duplicate exponent");
    c.add_term(h, v);
  }
  return c;
}

Json coefficients_to_json(const std::map<Exp, QLaurent, GradedLess>& terms) {
  Json arr = Json::array();
  for (const auto& [a, c] : terms) {
    if (c.is_zero()) continue;
    Json e = Json::object();
    e["index"] = a;
    e["q_poly"] = qpoly_to_json(c);
    arr.push_back(std::move(e));
  }
  return arr;
}

Json table_to_json(const CoeffTable& t) {
  Json j = Json::object();
  j["schema_version"] = 1;
  j["type"] = t.type.name;
  j["bound"] = t.bound;
  j["coefficients"] = coefficients_to_json(t.entries);
  return j;
}

CoeffTable table_from_json(const Json& j) {
  if (!j.is_object()) bad("", "expected an object");
  const Json& ver = member(j, "", "schema_version");
  if (!ver.is_number_integer() || ver.get<int64_t>() != 1) bad("/schema_version", "unsupported schema version");
  const Json& ty = member(j, "", "type");
  if (!ty.is_string()) bad("/type", "expected a string");
  CoeffTable tab;
  try {
    tab.type = parse_type(ty.get<std::string>());
  } catch (const UsageError& e) {
    bad("/type", e.what());
  }
  tab.bound = small_int(member(j, "", "bound"), "/bound");
  if (tab.bound < 0) bad("/bound", "must be nonnegative");
  const Json& co = member(j, "", "coefficients");
  if (!co.is_array()) bad("/coefficients", "expected an array");
  for (size_t k = 0; k < co.size(); ++k) {
    std::string p = "/coefficients/" + std::to_string(k);
    const Json& idx = member(co[k], p, "index");
    if (!idx.is_array() || static_cast<int>(idx.size()) != tab.type.nv)
      bad(p + "/index", "expected " + std::to_string(tab.type.nv) + " entries");
    Exp a;
    for (size_t i = 0; i < idx.size(); ++i) {
      int v = small_int(idx[i], p + "/index/" + std::to_string(i));
      if (v < 0) bad(p + "/index/" + std::to_string(i), "negative entry");
      a.push_back(v);
    }
    if (total_degree(a) > tab.bound) bad(p + "/index", "total degree exceeds the bound");
    QLaurent c = qpoly_from_json(member(co[k], p, "q_poly"), p + "/q_poly");
    if (c.is_zero()) bad(p + "/q_poly", "zero coefficient");
    if (!tab.entries.emplace(a, c).second) bad(p + "/index", "duplicate index");
  }
  tab.diag.values = {QLaurent::one()};
  if (tab.type.affine) {
    int h = tab.type.ht_alpha0();
    for (int m = 1; m * h <= tab.bound; ++m) {
      Exp a = tab.type.alpha0;
      for (int& v : a) v *= m;
      tab.diag.values.push_back(tab.at(a));
    }
  }
  return tab;
}

Json series_to_json(const TruncSeries& s) {
  Json j = Json::object();
  j["bound"] = s.bound();
  j["coefficients"] = coefficients_to_json(s.terms());
  return j;
}

Json zeta_to_json(const ZetaProduct& z) {
  Json arr = Json::array();
  for (const ZetaFactor& f : z.factors()) {
    Json e = Json::object();
    e["q_half"] = f.mu2;
    e["nu"] = f.nu;
    e["lambda"] = int_to_json(f.lambda);
    arr.push_back(std::move(e));
  }
  return arr;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("/: not valid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw UsageError("write failed for " + path);
}

}  // namespace amds
