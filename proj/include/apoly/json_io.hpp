#pragma once

// Canonical JSON serialization, hashing, golden files and the result cache.
//
// Poly:            {"vars":["L","M","x"],"terms":[{"e":[eL,eM,ex],"c":"<dec>"},...]}
//                  terms sorted descending in the canonical monomial order,
//                  coefficients as signed decimal strings.
// QuadElem:        {"a":<Poly>,"b":<Poly>}
// FactoredFraction:{"a":<Poly>,"b":<Poly>,"den":{"two":a,"M":b,"LM2p1":c}}
//
// The canonical hash of any value is FNV-1a 64 over its compact canonical
// JSON dump, printed as 16 lowercase hex digits.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "apoly/errors.hpp"
#include "apoly/poly.hpp"
#include "apoly/quad_ext.hpp"

namespace apoly {

using Json = nlohmann::ordered_json;

inline Json poly_to_json(const Poly& p) {
  Json j;
  j["vars"] = {"L", "M", "x"};
  Json terms = Json::array();
  for (const Term& t : p.terms()) {
    Json jt;
    jt["e"] = {t.m.e[0], t.m.e[1], t.m.e[2]};
    jt["c"] = t.c.str();
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline Poly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) {
    throw BadInput("poly_from_json: not a Poly object");
  }
  const Json expect_vars = {"L", "M", "x"};
  if (j["vars"] != expect_vars) throw BadInput("poly_from_json: unexpected vars");
  std::vector<Term> ts;
  for (const Json& jt : j["terms"]) {
    if (!jt.contains("e") || !jt.contains("c") || jt["e"].size() != 3) {
      throw BadInput("poly_from_json: malformed term");
    }
    Monomial m;
    for (int i = 0; i < kVarCount; ++i) m.e[i] = jt["e"][static_cast<std::size_t>(i)].get<std::int32_t>();
    Int c;
    try {
      c = Int(jt["c"].get<std::string>());
    } catch (const std::exception&) {
      throw BadInput("poly_from_json: bad coefficient string");
    }
    ts.push_back({m, std::move(c)});
  }
  return Poly::from_terms(std::move(ts));
}

inline Json quad_to_json(const QuadElem& q) {
  Json j;
  j["a"] = poly_to_json(q.a);
  j["b"] = poly_to_json(q.b);
  return j;
}

inline QuadElem quad_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) {
    throw BadInput("quad_from_json: not a QuadElem object");
  }
  return QuadElem{poly_from_json(j["a"]), poly_from_json(j["b"])};
}

inline Json ff_to_json(const FactoredFraction& f) {
  Json j = quad_to_json(f.num);
  j["den"] = Json{{"two", f.two}, {"M", f.m}, {"LM2p1", f.lm}};
  return j;
}

inline FactoredFraction ff_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("den")) throw BadInput("ff_from_json: missing den");
  FactoredFraction f;
  f.num = quad_from_json(j);
  f.two = j["den"].at("two").get<int>();
  f.m = j["den"].at("M").get<int>();
  f.lm = j["den"].at("LM2p1").get<int>();
  return f;
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (const char ch : s) {
    h ^= static_cast<std::uint8_t>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hash_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

inline std::string canonical_hash_json(const Json& j) { return hash_hex(fnv1a64(j.dump())); }
inline std::string canonical_hash(const Poly& p) { return canonical_hash_json(poly_to_json(p)); }

// ---- golden files ----
// Layout: {"format":"apoly-golden-v1","entries":{ name: entry, ... }} where a
// Poly entry is {"poly":<Poly>,"hash":"<fnv>"} and a bracket entry is
// {"bracket":<QuadElem>,"den_sqrt":{"two":k,"M":0,"LM2p1":k},"hash":"<fnv>"}.
// The hash covers the entry minus its hash field, so on-disk corruption of
// either the data or the hash is detected on load.

inline Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw BadInput("cannot parse " + path.string() + ": " + e.what());
  }
  return j;
}

inline void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw BadInput("cannot write " + path.string());
  out << j.dump(1) << "\n";
}

inline Json golden_poly_entry(const Poly& p) {
  Json e;
  e["poly"] = poly_to_json(p);
  e["hash"] = canonical_hash_json(e["poly"]);
  return e;
}

inline Json golden_bracket_entry(const BracketForm& b) {
  Json e;
  e["bracket"] = quad_to_json(b.bracket);
  e["den_sqrt"] = Json{{"two", b.half_exponent}, {"M", 0}, {"LM2p1", b.half_exponent}};
  e["hash"] = canonical_hash_json(Json{{"bracket", e["bracket"]}, {"den_sqrt", e["den_sqrt"]}});
  return e;
}

// Loads one named entry, checking its integrity hash.  Throws BadInput with
// the file and entry named on any mismatch.
inline Json load_golden_entry(const std::filesystem::path& file, const std::string& name) {
  const Json j = load_json_file(file);
  if (!j.contains("entries") || !j["entries"].contains(name)) {
    throw BadInput(file.string() + ": no golden entry named '" + name + "'");
  }
  const Json& e = j["entries"][name];
  std::string expect;
  if (e.contains("poly")) {
    expect = canonical_hash_json(e["poly"]);
  } else if (e.contains("bracket")) {
    expect = canonical_hash_json(Json{{"bracket", e["bracket"]}, {"den_sqrt", e["den_sqrt"]}});
  } else {
    throw BadInput(file.string() + ": golden entry '" + name + "' has unknown shape");
  }
  if (!e.contains("hash") || e["hash"].get<std::string>() != expect) {
    throw BadInput(file.string() + ": golden entry '" + name + "' failed its integrity hash");
  }
  return e;
}

inline Poly load_golden_poly(const std::filesystem::path& file, const std::string& name) {
  return poly_from_json(load_golden_entry(file, name)["poly"]);
}

inline BracketForm load_golden_bracket(const std::filesystem::path& file,
                                       const std::string& name) {
  const Json e = load_golden_entry(file, name);
  BracketForm b;
  b.bracket = quad_from_json(e["bracket"]);
  b.half_exponent = e["den_sqrt"].at("two").get<int>();
  if (e["den_sqrt"].at("LM2p1").get<int>() != b.half_exponent ||
      e["den_sqrt"].at("M").get<int>() != 0) {
    throw BadInput(file.string() + ": bracket '" + name +
                   "' prefactor is not of the (2(LM^2+1))^(-k/2) shape");
  }
  return b;
}

// ---- result cache ----
// cache/a_poly_<n>_<route>.json: {"n":..,"route":"..","canonical_hash":"..","poly":{..}}
// Writes are last-writer-wins only when hashes agree; a divergent hash for
// the same (n, route) is corruption or nondeterminism and aborts.

inline std::filesystem::path cache_path(const std::filesystem::path& dir, int n,
                                        const std::string& route) {
  return dir / ("a_poly_" + std::to_string(n) + "_" + route + ".json");
}

inline std::optional<Poly> cache_read(const std::filesystem::path& dir, int n,
                                      const std::string& route) {
  const auto path = cache_path(dir, n, route);
  if (!std::filesystem::exists(path)) return std::nullopt;
  const Json j = load_json_file(path);
  if (!j.contains("poly") || !j.contains("canonical_hash")) {
    throw CacheDivergence(path.string() + ": malformed cache entry");
  }
  Poly p = poly_from_json(j["poly"]);
  if (canonical_hash(p) != j["canonical_hash"].get<std::string>()) {
    throw CacheDivergence(path.string() + ": stored hash does not match stored polynomial");
  }
  return p;
}

inline void cache_write(const std::filesystem::path& dir, int n, const std::string& route,
                        const Poly& p, const std::string& hash) {
  std::filesystem::create_directories(dir);
  const auto path = cache_path(dir, n, route);
  if (std::filesystem::exists(path)) {
    const Json old = load_json_file(path);
    if (old.contains("canonical_hash") && old["canonical_hash"].get<std::string>() != hash) {
      throw CacheDivergence(path.string() + ": divergent canonical hash for same (n, route)");
    }
  }
  Json j;
  j["n"] = n;
  j["route"] = route;
  j["canonical_hash"] = hash;
  j["poly"] = poly_to_json(p);
  write_json_file(path, j);
}

}  // namespace apoly
