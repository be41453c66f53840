#include <string>

#include "json.hpp"
#include "relalg/algebra.hpp"

namespace relalg {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json square(const std::vector<Elem>& flat, std::uint64_t size) {
  auto rows = ordered_json::array();
  for (std::uint64_t x = 0; x < size; ++x) {
    rows.push_back(std::vector<Elem>(flat.begin() + static_cast<std::ptrdiff_t>(x * size),
                                     flat.begin() + static_cast<std::ptrdiff_t>((x + 1) * size)));
  }
  return rows;
}

std::vector<Elem> flatten(const json& rows, std::uint64_t size, const std::string& what) {
  if (!rows.is_array() || rows.size() != size) {
    throw ParseError(what + ": expected " + std::to_string(size) + " rows", 0);
  }
  std::vector<Elem> flat;
  flat.reserve(size * size);
  for (const auto& row : rows) {
    const auto r = row.get<std::vector<Elem>>();
    if (r.size() != size) throw ParseError(what + ": expected rows of length " + std::to_string(size), 0);
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return flat;
}

std::string delta_key(int n, int i, int j) {
  return std::to_string(n) + ":" + std::to_string(i) + "," + std::to_string(j);
}

std::tuple<int, int, int> parse_delta_key(const std::string& key) {
  int n = 0, i = 0, j = 0;
  char colon = 0, comma = 0;
  std::size_t used = 0;
  try {
    n = std::stoi(key, &used);
    std::size_t pos = used;
    colon = key.at(pos++);
    i = std::stoi(key.substr(pos), &used);
    pos += used;
    comma = key.at(pos++);
    j = std::stoi(key.substr(pos), &used);
    pos += used;
    if (pos != key.size()) throw ParseError("trailing characters in delta key '" + key + "'", pos);
  } catch (const std::logic_error&) {
    throw ParseError("malformed delta key '" + key + "'", 0);
  }
  if (colon != ':' || comma != ',') throw ParseError("malformed delta key '" + key + "'", 0);
  return {n, i, j};
}

}  // namespace

std::string tables_to_json(const TableAlgebra::Tables& t) {
  ordered_json j;
  j["fragment"] = t.fragment.to_string();
  j["max_sort"] = t.max_sort;
  j["sorts"] = ordered_json::array();
  for (const auto& s : t.sorts) {
    ordered_json o;
    o["size"] = s.size;
    o["zero"] = s.zero;
    o["one"] = s.one;
    o["meet"] = square(s.meet, s.size);
    o["join"] = square(s.join, s.size);
    if (!s.neg.empty()) o["neg"] = s.neg;
    j["sorts"].push_back(std::move(o));
  }
  j["subst"] = ordered_json::object();
  for (const auto& [alpha, row] : t.subst) j["subst"][alpha.key()] = row;
  if (!t.exists.empty()) {
    j["exists"] = ordered_json::object();
    for (const auto& [n, row] : t.exists) j["exists"][std::to_string(n)] = row;
  }
  if (!t.delta.empty()) {
    j["delta"] = ordered_json::object();
    for (const auto& [key, e] : t.delta) {
      const auto& [n, a, b] = key;
      j["delta"][delta_key(n, a, b)] = e;
    }
  }
  return j.dump();
}

TableAlgebra::Tables tables_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("table file: ") + e.what(), e.byte);
  }
  try {
    TableAlgebra::Tables t;
    t.fragment = Fragment::parse(j.at("fragment").get<std::string>());
    t.max_sort = j.at("max_sort").get<int>();
    if (t.max_sort < 0) throw ParseError("table file: negative max_sort", 0);
    for (const auto& o : j.at("sorts")) {
      TableAlgebra::SortTable s;
      s.size = o.at("size").get<std::uint64_t>();
      s.zero = o.at("zero").get<Elem>();
      s.one = o.at("one").get<Elem>();
      const auto tag = "sort " + std::to_string(t.sorts.size());
      s.meet = flatten(o.at("meet"), s.size, tag + " meet");
      s.join = flatten(o.at("join"), s.size, tag + " join");
      if (o.contains("neg")) s.neg = o.at("neg").get<std::vector<Elem>>();
      t.sorts.push_back(std::move(s));
    }
    for (const auto& [key, row] : j.at("subst").items()) {
      t.subst.emplace(Substitution::parse_key(key), row.get<std::vector<Elem>>());
    }
    if (j.contains("exists")) {
      for (const auto& [key, row] : j.at("exists").items()) {
        std::size_t used = 0;
        int n = -1;
        try {
          n = std::stoi(key, &used);
        } catch (const std::logic_error&) {
        }
        if (n < 0 || used != key.size()) throw ParseError("table file: malformed exists key '" + key + "'", 0);
        t.exists.emplace(n, row.get<std::vector<Elem>>());
      }
    }
    if (j.contains("delta")) {
      for (const auto& [key, e] : j.at("delta").items()) t.delta.emplace(parse_delta_key(key), e.get<Elem>());
    }
    return t;
  } catch (const json::exception& e) {
    throw ParseError(std::string("table file: ") + e.what(), 0);
  } catch (const std::logic_error& e) {
    throw ParseError(std::string("table file: malformed number: ") + e.what(), 0);
  }
}

}  // namespace relalg
