// Copyright 2026 The plconvex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "plconvex/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "plconvex/instances.hpp"

namespace plconvex {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(Code::PARSE_ERROR, path + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

Rational to_rational(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  } catch (const Error& e) {
    fail(path, e.what());
  }
  fail(path, "expected an exact rational (\"p/q\" string or integer)");
}

RVec to_vec(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array() || j.size() != n)
    fail(path, "expected " + std::to_string(n) + " coordinates");
  RVec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(to_rational(j[i], path + "/" + std::to_string(i)));
  return v;
}

std::vector<Index> to_ids(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of ids");
  std::vector<Index> ids;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_unsigned() || j[i].get<unsigned long long>() > 0xffffffffull)
      fail(path + "/" + std::to_string(i), "expected a non-negative integer id");
    ids.push_back(static_cast<Index>(j[i].get<unsigned long long>()));
  }
  return ids;
}

struct Records {
  std::size_t count = 0;
  std::vector<std::vector<Index>> vertices, up;
  std::vector<RVec> witness;
  bool any_vertices = false, any_up = false;
};

Records read_records(const json& list, std::size_t n, GeometryMode mode, const std::string& path) {
  if (!list.is_array()) fail(path, "expected an array of face records");
  Records r;
  r.count = list.size();
  r.vertices.resize(r.count);
  r.up.resize(r.count);
  if (mode == GeometryMode::Equations) r.witness.resize(r.count);
  std::vector<char> seen(r.count, 0);
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string at = path + "/" + std::to_string(k);
    const json& rec = list[k];
    if (!rec.is_object()) fail(at, "expected an object");
    const json& id_field = field(rec, "id", at);
    if (!id_field.is_number_unsigned() || id_field.get<unsigned long long>() >= r.count)
      fail(at + "/id", "ids must be 0.." + std::to_string(r.count - 1));
    const auto id = static_cast<std::size_t>(id_field.get<unsigned long long>());
    if (seen[id]) fail(at + "/id", "duplicate id " + std::to_string(id));
    seen[id] = 1;
    if (auto it = rec.find("vertices"); it != rec.end()) {
      r.vertices[id] = to_ids(*it, at + "/vertices");
      r.any_vertices = true;
    }
    if (auto it = rec.find("up"); it != rec.end()) {
      r.up[id] = to_ids(*it, at + "/up");
      r.any_up = true;
    }
    if (mode == GeometryMode::Equations)
      r.witness[id] = to_vec(field(rec, "witness", at), n, at + "/witness");
  }
  return r;
}

void install(RankTable& t, Records& r, const std::string& path, bool need_up) {
  t.count = r.count;
  if (r.any_vertices) {
    for (std::size_t i = 0; i < r.count; ++i)
      if (r.vertices[i].empty()) fail(path + "/" + std::to_string(i), "record lacks vertices");
    t.vertices = std::move(r.vertices);
  }
  if (r.any_up || need_up) t.up = std::move(r.up);
}

std::string ids_json(std::span<const Index> ids) {
  std::string s = "[";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? ", " : "") + std::to_string(ids[i]);
  return s + "]";
}

std::string vec_json(const RVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", \"" : "\"") + format_rational(v[i]) + "\"";
  return s + "]";
}

}  // namespace

PLSurface parse_pls(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Code::PARSE_ERROR, e.what());
  }
  if (!doc.is_object()) fail("/", "expected an object");
  const json& nj = field(doc, "n", "");
  if (!nj.is_number_unsigned() || nj.get<unsigned>() < 3 || nj.get<unsigned>() > 64)
    fail("/n", "expected an integer 3..64");
  const int n = nj.get<int>();
  const std::size_t un = static_cast<std::size_t>(n);

  GeometryMode mode = GeometryMode::Vertices;
  if (auto it = doc.find("mode"); it != doc.end()) {
    if (*it == "equations")
      mode = GeometryMode::Equations;
    else if (*it != "vertices")
      fail("/mode", "expected \"vertices\" or \"equations\"");
  }

  std::vector<RVec> coords;
  if (mode == GeometryMode::Vertices) {
    const json& vs = field(doc, "vertices", "");
    if (!vs.is_array()) fail("/vertices", "expected an array");
    for (std::size_t i = 0; i < vs.size(); ++i)
      coords.push_back(to_vec(vs[i], un, "/vertices/" + std::to_string(i)));
  }

  const json& faces = field(doc, "faces", "");
  if (!faces.is_object()) fail("/faces", "expected an object keyed by dimension");
  for (const auto& [key, _] : faces.items()) {
    const std::string dims[3] = {std::to_string(n - 3), std::to_string(n - 2),
                                 std::to_string(n - 1)};
    if (key != dims[0] && key != dims[1] && key != dims[2])
      throw Error(Code::UNEXPECTED_RANK, "/faces/" + key + ": only dimensions " + dims[0] + ", " +
                                             dims[1] + " and " + dims[2] + " are stored");
  }

  PosetData d;
  d.n = n;
  std::array<std::vector<RVec>, 3> witnesses;
  const json empty = json::array();
  for (int r = 0; r < 3; ++r) {
    const std::string key = std::to_string(n - 3 + r);
    const std::string path = "/faces/" + key;
    auto it = faces.find(key);
    const bool implied_peaks = r == 0 && n == 3 && mode == GeometryMode::Vertices;
    if (it == faces.end() && !implied_peaks) fail(path, "missing");
    Records rec = read_records(it == faces.end() ? empty : *it, un, mode, path);
    RankTable& t = r == 0 ? d.peaks : r == 1 ? d.ridges : d.facets;
    if (implied_peaks && it == faces.end()) rec.count = coords.size();
    install(t, rec, path, mode == GeometryMode::Equations && r < 2);
    if (mode == GeometryMode::Equations) witnesses[r] = std::move(rec.witness);
  }
  d.vertex_count = mode == GeometryMode::Vertices ? coords.size() : (n == 3 ? d.peaks.count : 0);
  if (n == 3 && d.peaks.count != d.vertex_count)
    fail("/faces/0", "for n = 3 there must be one record per vertex");

  PLSurface surface;
  if (mode == GeometryMode::Vertices) {
    derive_incidences(d);
    surface = PLSurface::from_vertices(FacePoset(d), std::move(coords));
  } else {
    const json& eqs = field(doc, "equations", "");
    if (!eqs.is_array()) fail("/equations", "expected an array");
    std::vector<Hyperplane> planes;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      const std::string at = "/equations/" + std::to_string(i);
      if (!eqs[i].is_object()) fail(at, "expected an object");
      planes.push_back({to_vec(field(eqs[i], "normal", at), un, at + "/normal"),
                        to_rational(field(eqs[i], "offset", at), at + "/offset")});
    }
    surface = PLSurface::from_equations(FacePoset(d), std::move(planes), std::move(witnesses));
  }

  if (ValidationReport rep = validate_poset(surface.poset(), mode); !rep.ok()) {
    const Violation& v = rep.violations.front();
    throw Error(Code::SEMANTIC_ERROR, std::string(to_string(v.code)) +
                                          (v.face ? " at " + to_string(*v.face) : "") + ": " +
                                          v.message);
  }
  return surface;
}

std::string emit_pls(const PLSurface& surface) {
  const FacePoset& poset = surface.poset();
  const int n = surface.n();
  const bool eq = surface.mode() == GeometryMode::Equations;
  std::ostringstream out;
  out << "{\n  \"n\": " << n << ",\n  \"mode\": \"" << (eq ? "equations" : "vertices") << "\",\n";
  if (!eq) {
    out << "  \"vertices\": [";
    const auto& vs = surface.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? ",\n    " : "\n    ") << vec_json(vs[i]);
    out << "\n  ],\n";
  }
  out << "  \"faces\": {";
  for (int r = 0; r < 3; ++r) {
    const Rank rank = static_cast<Rank>(r);
    out << (r ? ",\n" : "\n") << "    \"" << poset.dim_of(rank) << "\": [";
    for (Index i = 0; i < poset.count(rank); ++i) {
      out << (i ? ",\n      " : "\n      ") << "{\"id\": " << i;
      // Peak vertex lists are implied for n = 3.
      if (!eq && !(r == 0 && n == 3)) out << ", \"vertices\": " << ids_json(poset.vertices(rank, i));
      if (r < 2 && poset.has_up(rank)) out << ", \"up\": " << ids_json(poset.up(rank, i));
      if (eq) out << ", \"witness\": " << vec_json(surface.interior_point(rank, i));
      out << "}";
    }
    out << "\n    ]";
  }
  out << "\n  }";
  if (eq) {
    out << ",\n  \"equations\": [";
    const auto& eqs = surface.equations();
    for (std::size_t h = 0; h < eqs.size(); ++h)
      out << (h ? ",\n    " : "\n    ") << "{\"normal\": " << vec_json(eqs[h].normal)
          << ", \"offset\": \"" << format_rational(eqs[h].offset) << "\"}";
    out << "\n  ]";
  }
  out << "\n}\n";
  return out.str();
}

PLSurface parse_off(std::string_view text) {
  struct Token {
    std::string text;
    std::size_t line;
  };
  std::vector<Token> tokens;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream words(line);
      std::string w;
      while (words >> w) tokens.push_back({w, number});
    }
  }
  std::size_t pos = 0;
  auto line_of = [&](std::size_t i) {
    return "line " + std::to_string(i < tokens.size() ? tokens[i].line
                                                      : (tokens.empty() ? 1 : tokens.back().line));
  };
  auto next_count = [&](const char* what) {
    if (pos >= tokens.size()) fail(line_of(pos), std::string("expected ") + what);
    const std::string& t = tokens[pos].text;
    if (t.empty() || t.size() > 9 || !std::all_of(t.begin(), t.end(), ::isdigit))
      fail(line_of(pos), std::string("expected ") + what + ", got '" + t + "'");
    ++pos;
    return static_cast<std::size_t>(std::stoul(t));
  };

  if (tokens.empty() || tokens[0].text != "OFF") fail("line 1", "missing OFF header");
  pos = 1;
  const std::size_t nv = next_count("vertex count");
  const std::size_t nf = next_count("facet count");
  next_count("edge count");

  std::vector<RVec> coords(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    for (int k = 0; k < 3; ++k) {
      if (pos >= tokens.size()) fail(line_of(pos), "truncated vertex list");
      try {
        coords[v].push_back(parse_decimal(tokens[pos].text));
      } catch (const Error& e) {
        fail(line_of(pos), e.what());
      }
      ++pos;
    }
  }
  std::vector<std::vector<Index>> cycles(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    const std::size_t line = pos < tokens.size() ? tokens[pos].line : 0;
    const std::size_t k = next_count("facet size");
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t v = next_count("vertex index");
      if (v >= nv) fail(line_of(pos - 1), "vertex index " + std::to_string(v) + " out of range");
      cycles[f].push_back(static_cast<Index>(v));
    }
    // Colors may trail a facet's vertex list on the same line.
    while (pos < tokens.size() && tokens[pos].line == line) ++pos;
  }
  if (pos != tokens.size()) fail(line_of(pos), "trailing data");
  return polyhedron_from_cycles(std::move(coords), cycles);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Code::PARSE_ERROR, "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Code::BAD_PARAMETER, "cannot write '" + path + "'");
  out << text;
}

PLSurface load_surface(const std::string& path) {
  const std::string text = read_text_file(path);
  std::string ext = path.size() >= 4 ? path.substr(path.size() - 4) : "";
  std::transform(ext.begin(), ext.end(), ext.begin(), ::tolower);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  const bool off_header = first != std::string::npos && text.compare(first, 3, "OFF") == 0;
  return ext == ".off" || off_header ? parse_off(text) : parse_pls(text);
}

}  // namespace plconvex
