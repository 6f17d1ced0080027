#include "ybe/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ybe/census.hpp"
#include "ybe/error.hpp"

namespace ybe {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw FormatError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + name + "\"");
  return *it;
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

RawTable int_matrix(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of arrays");
  RawTable out;
  for (const auto& row : j) {
    if (!row.is_array()) throw FormatError(std::string(what) + " must be an array of arrays");
    std::vector<std::int64_t> r;
    for (const auto& v : row) r.push_back(as_int(v, what));
    out.push_back(std::move(r));
  }
  return out;
}

Table checked_square(const Json& j, const char* what, std::int64_t n) {
  RawTable raw = int_matrix(j, what);
  if (static_cast<std::int64_t>(raw.size()) != n) throw FormatError(std::string(what) + " must have n rows");
  Table t;
  for (const auto& row : raw) {
    if (static_cast<std::int64_t>(row.size()) != n) throw FormatError(std::string(what) + " rows must have n entries");
    std::vector<point_t> r;
    for (auto v : row) {
      if (v < 0 || v >= n) throw FormatError(std::string(what) + " entry out of range");
      r.push_back(static_cast<point_t>(v));
    }
    t.push_back(std::move(r));
  }
  return t;
}

bool default_labels(const Solution& s) {
  for (point_t x = 0; x < s.size(); ++x)
    if (s.label(x) != std::to_string(x + 1)) return false;
  return true;
}

}  // namespace

Json solution_to_json(const Solution& s) {
  Json j;
  j["n"] = s.size();
  j["sigma"] = s.table();
  if (!default_labels(s)) {
    Json labels = Json::array();
    for (point_t x = 0; x < s.size(); ++x) labels.push_back(s.label(x));
    j["labels"] = std::move(labels);
  }
  return j;
}

SolutionInput solution_input_from_json(const Json& j) {
  const std::int64_t n = as_int(field(j, "n"), "n");
  if (n < 1) throw FormatError("n must be positive");
  SolutionInput in;
  in.sigma = int_matrix(field(j, "sigma"), "sigma");
  if (static_cast<std::int64_t>(in.sigma.size()) != n) throw FormatError("sigma must have n rows");
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) throw FormatError("labels must be an array of strings");
    for (const auto& l : *it) {
      if (!l.is_string()) throw FormatError("labels must be an array of strings");
      in.labels.push_back(l.get<std::string>());
    }
    if (static_cast<std::int64_t>(in.labels.size()) != n) throw FormatError("labels must have n entries");
  }
  return in;
}

Solution solution_from_json(const Json& j) {
  SolutionInput in = solution_input_from_json(j);
  return Solution::from_raw(in.sigma, std::move(in.labels));
}

Json cycle_set_to_json(const Table& dot) {
  Json j;
  j["n"] = dot.size();
  j["dot"] = dot;
  return j;
}

Table cycle_set_from_json(const Json& j) {
  const std::int64_t n = as_int(field(j, "n"), "n");
  if (n < 1) throw FormatError("n must be positive");
  return checked_square(field(j, "dot"), "dot", n);
}

Json congruence_to_json(const Congruence& c) {
  Json j;
  j["n"] = c.size();
  j["classes"] = c.classes();
  return j;
}

Congruence congruence_from_json(const Json& j) {
  const std::int64_t n = as_int(field(j, "n"), "n");
  if (n < 1) throw FormatError("n must be positive");
  RawTable raw = int_matrix(field(j, "classes"), "classes");
  Partition p;
  std::vector<bool> seen(n, false);
  for (const auto& cls : raw) {
    std::vector<point_t> c;
    for (auto v : cls) {
      if (v < 0 || v >= n || seen[v]) throw FormatError("classes must partition 0..n-1");
      seen[v] = true;
      c.push_back(static_cast<point_t>(v));
    }
    p.push_back(std::move(c));
  }
  for (bool b : seen)
    if (!b) throw FormatError("classes must partition 0..n-1");
  return Congruence::from_classes(static_cast<std::size_t>(n), p);
}

Json brace_to_json(const LeftBrace& b) {
  Json j;
  j["order"] = b.order();
  j["add"] = b.add_table();
  j["mul"] = b.mul_table();
  return j;
}

std::pair<OpTable, OpTable> brace_tables_from_json(const Json& j) {
  const std::int64_t n = as_int(field(j, "order"), "order");
  if (n < 1) throw FormatError("order must be positive");
  return {checked_square(field(j, "add"), "add", n), checked_square(field(j, "mul"), "mul", n)};
}

Json flags_to_json(const CensusFlags& f) {
  Json j;
  j["indecomposable"] = f.indecomposable;
  j["irretractable"] = f.irretractable;
  j["square_free"] = f.square_free;
  j["simple"] = f.simple;
  return j;
}

CensusFlags flags_from_json(const Json& j) {
  CensusFlags f;
  auto get = [&](const char* k) {
    const Json& v = field(j, k);
    if (!v.is_boolean()) throw FormatError(std::string(k) + " must be a boolean");
    return v.get<bool>();
  };
  f.indecomposable = get("indecomposable");
  f.irretractable = get("irretractable");
  f.square_free = get("square_free");
  f.simple = get("simple");
  return f;
}

Json record_to_json(const CensusRecord& r) {
  Json j;
  j["key"] = r.key;
  j["flags"] = flags_to_json(r.flags);
  j["count"] = r.count;
  if (r.parameterization) {
    j["parameterization"] = {{"t", r.parameterization->t}, {"j", r.parameterization->j}};
  }
  return j;
}

CensusRecord record_from_json(const Json& j) {
  CensusRecord r;
  const Json& key = field(j, "key");
  r.key = checked_square(key, "key", static_cast<std::int64_t>(key.size()));
  r.flags = flags_from_json(field(j, "flags"));
  r.count = static_cast<std::uint64_t>(as_int(field(j, "count"), "count"));
  if (auto it = j.find("parameterization"); it != j.end()) {
    SquareParams p;
    p.n = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(r.key.size()))));
    p.t = as_int(field(*it, "t"), "t");
    for (const auto& v : field(*it, "j")) p.j.push_back(as_int(v, "j"));
    r.parameterization = p;
  }
  return r;
}

std::vector<std::string> sigma_cycles(const Solution& s) {
  std::vector<std::string> out;
  for (point_t x = 0; x < s.size(); ++x) out.push_back(s.sigma(x).to_string());
  return out;
}

}  // namespace ybe
