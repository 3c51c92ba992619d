#include "aquiver/io.hpp"

#include "aquiver/errors.hpp"

namespace aquiver {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw InputError((path.empty() ? std::string("/") : path) + ": " + msg);
}

const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing \"" + key + "\"");
  return *it;
}

std::string string_at(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

bool bool_at(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

std::size_t natural_at(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(path, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

Rational rational_at(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  try {
    return parse_rational(string_at(j, path));
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

ExtReal ext_real_at(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  try {
    return parse_ext_real(string_at(j, path));
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string index_path(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    // Drop the library's own prefix and position, keep the explanation.
    if (auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
    throw InputError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) +
                     ": " + what);
  }
}

Orientation orientation_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an orientation object");
  std::vector<Critical> crit;
  if (auto it = j.find("criticals"); it != j.end()) {
    const std::string p = path + "/criticals";
    const Json& arr = array_at(*it, p);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string q = index_path(p, i);
      const Rational pos = rational_at(member(arr[i], "pos", q), q + "/pos");
      const std::string kind = string_at(member(arr[i], "kind", q), q + "/kind");
      if (kind != "sink" && kind != "source") fail(q + "/kind", "expected \"sink\" or \"source\"");
      crit.push_back({pos, kind == "sink" ? CriticalKind::sink : CriticalKind::source});
    }
  }
  EmptyDirection dir = EmptyDirection::descending;
  if (auto it = j.find("empty_direction"); it != j.end()) {
    const std::string d = string_at(*it, path + "/empty_direction");
    if (d == "ascending") {
      dir = EmptyDirection::ascending;
    } else if (d != "descending") {
      fail(path + "/empty_direction", "expected \"descending\" or \"ascending\"");
    }
  }
  try {
    return Orientation(std::move(crit), dir);
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

Field field_from_json(const Json& j, const std::string& path) {
  const std::string kind = string_at(member(j, "kind", path), path + "/kind");
  if (kind == "Q") return Field::rationals();
  if (kind != "Fp") fail(path + "/kind", "expected \"Q\" or \"Fp\"");
  const std::size_t p = natural_at(member(j, "p", path), path + "/p");
  try {
    return Field::prime(p);
  } catch (const InputError& e) {
    fail(path + "/p", e.what());
  }
}

Interval interval_from_json(const Json& j, const std::string& path) {
  const ExtReal lo = ext_real_at(member(j, "lo", path), path + "/lo");
  const ExtReal hi = ext_real_at(member(j, "hi", path), path + "/hi");
  const bool lc = bool_at(member(j, "lo_closed", path), path + "/lo_closed");
  const bool hc = bool_at(member(j, "hi_closed", path), path + "/hi_closed");
  try {
    return Interval(lo, hi, lc, hc);
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

BarMultiset bars_from_json(const Json& j, const std::string& path) {
  BarMultiset out;
  const Json& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string q = index_path(path, i);
    std::size_t mult = 1;
    if (arr[i].is_object() && arr[i].contains("mult")) {
      mult = natural_at(arr[i]["mult"], q + "/mult");
      if (mult == 0) fail(q + "/mult", "multiplicity must be positive");
    }
    out.add(interval_from_json(arr[i], q), mult);
  }
  return out;
}

TameRep tame_from_json(const Json& j, const Orientation& o, Field field, const std::string& path) {
  std::vector<Rational> grid;
  const std::string gp = path + "/grid";
  const Json& garr = array_at(member(j, "grid", path), gp);
  for (std::size_t i = 0; i < garr.size(); ++i) grid.push_back(rational_at(garr[i], index_path(gp, i)));
  std::vector<std::size_t> dims;
  const std::string dp = path + "/dims";
  const Json& darr = array_at(member(j, "dims", path), dp);
  for (std::size_t i = 0; i < darr.size(); ++i) dims.push_back(natural_at(darr[i], index_path(dp, i)));
  if (dims.size() != 2 * grid.size() + 1) fail(dp, "expected " + std::to_string(2 * grid.size() + 1) + " entries");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i - 1] >= grid[i]) fail(gp, "grid must be strictly increasing");
  }

  const auto dirs = junction_directions(o, grid);
  std::vector<Matrix> maps;
  const std::string mp = path + "/maps";
  const Json& marr = array_at(member(j, "maps", path), mp);
  if (marr.size() != dirs.size()) fail(mp, "expected " + std::to_string(dirs.size()) + " maps");
  for (std::size_t k = 0; k < marr.size(); ++k) {
    const std::string q = index_path(mp, k);
    const std::string dir = string_at(member(marr[k], "dir", q), q + "/dir");
    if (dir != "down" && dir != "up") fail(q + "/dir", "expected \"down\" or \"up\"");
    const MapDirection want = dirs[k];
    if ((dir == "down") != (want == MapDirection::down)) {
      fail(q + "/dir", std::string("the orientation makes this map point ") +
                           (want == MapDirection::down ? "down" : "up"));
    }
    const std::size_t rows = want == MapDirection::down ? dims[k] : dims[k + 1];
    const std::size_t cols = want == MapDirection::down ? dims[k + 1] : dims[k];
    const std::string ep = q + "/entries";
    const Json& earr = array_at(member(marr[k], "entries", q), ep);
    if (earr.size() != rows) fail(ep, "expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols, field);
    for (std::size_t r = 0; r < rows; ++r) {
      const std::string rp = index_path(ep, r);
      const Json& row = array_at(earr[r], rp);
      if (row.size() != cols) fail(rp, "expected " + std::to_string(cols) + " entries");
      for (std::size_t c = 0; c < cols; ++c) {
        const Rational x = rational_at(row[c], index_path(rp, c));
        try {
          m.set(r, c, x);
        } catch (const InputError& e) {
          fail(index_path(rp, c), e.what());
        }
      }
    }
    maps.push_back(std::move(m));
  }
  try {
    return TameRep(o, std::move(grid), std::move(dims), std::move(maps), field);
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

Orientation orientation_from_any(const Json& j) {
  if (j.is_object() && j.contains("orientation")) return orientation_from_json(j["orientation"], "/orientation");
  return orientation_from_json(j, "");
}

Document document_from_json(const Json& j) {
  if (!j.is_object()) fail("", "expected a document object");
  Document d;
  d.orientation = orientation_from_json(member(j, "orientation", ""), "/orientation");
  if (auto it = j.find("field"); it != j.end()) d.field = field_from_json(*it, "/field");
  const bool has_bars = j.contains("bars");
  const bool has_tame = j.contains("tame");
  if (has_bars == has_tame) fail("", "expected exactly one of \"bars\" and \"tame\"");
  if (has_bars) {
    d.bars = bars_from_json(j["bars"], "/bars");
  } else {
    d.tame = tame_from_json(j["tame"], d.orientation, d.field, "/tame");
  }
  return d;
}

Json to_json(const Orientation& o) {
  Json crit = Json::array();
  for (const auto& c : o.criticals()) {
    crit.push_back({{"pos", format_rational(c.pos)}, {"kind", c.kind == CriticalKind::sink ? "sink" : "source"}});
  }
  Json j;
  j["criticals"] = crit;
  j["empty_direction"] = o.empty_direction() == EmptyDirection::descending ? "descending" : "ascending";
  return j;
}

Json to_json(const Field& f) {
  if (f.is_rational()) return {{"kind", "Q"}};
  return {{"kind", "Fp"}, {"p", f.characteristic()}};
}

Json to_json(const Interval& i, std::size_t mult) {
  return {{"lo", format_ext_real(i.lo())},
          {"lo_closed", i.lo_closed()},
          {"hi", format_ext_real(i.hi())},
          {"hi_closed", i.hi_closed()},
          {"mult", mult}};
}

Json to_json(const BarMultiset& b) {
  Json arr = Json::array();
  for (const auto& [i, m] : b) arr.push_back(to_json(i, m));
  return arr;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_rational(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const TameRep& v) {
  Json grid = Json::array();
  for (const auto& g : v.grid()) grid.push_back(format_rational(g));
  Json maps = Json::array();
  for (std::size_t k = 0; k < v.junction_count(); ++k) {
    maps.push_back({{"dir", v.direction(k) == MapDirection::down ? "down" : "up"}, {"entries", to_json(v.maps()[k])}});
  }
  Json j;
  j["grid"] = grid;
  j["dims"] = v.dims();
  j["maps"] = maps;
  return j;
}

Json to_json(const Document& d) {
  Json j;
  j["orientation"] = to_json(d.orientation);
  j["field"] = to_json(d.field);
  if (d.bars) j["bars"] = to_json(*d.bars);
  if (d.tame) j["tame"] = to_json(*d.tame);
  return j;
}

Json to_json(const Morphism& f) {
  Json comps = Json::array();
  for (const auto& m : f.components) comps.push_back(to_json(m));
  Json j;
  j["source"] = to_json(f.source);
  j["target"] = to_json(f.target);
  j["components"] = comps;
  return j;
}

Json to_json(const ProjPresentation& p, const Orientation& o) {
  auto labels = [&](const std::vector<ProjectiveLabel>& ls) {
    Json arr = Json::array();
    for (const auto& l : ls) {
      arr.push_back({{"label", format_label(l)}, {"support", format_interval(realize(o, l))}});
    }
    return arr;
  };
  Json j;
  j["p1"] = labels(p.p1);
  j["p0"] = labels(p.p0);
  j["map"] = to_json(p.map);
  return j;
}

Json to_json(const ARAnswer& a) {
  Json j;
  j["status"] = status_name(a.status);
  if (a.sequence) {
    const ARSequence& s = *a.sequence;
    Json middle = Json::array();
    for (const auto& m : s.middle) middle.push_back(format_interval(m));
    j["left"] = format_interval(s.left);
    j["middle"] = middle;
    j["right"] = format_interval(s.right);
    j["f"] = to_json(s.maps.f);
    j["g"] = to_json(s.maps.g);
  }
  return j;
}

Json to_json(const SymbolicTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back({{"support", r.support}, {"label", r.label}});
  Json j;
  j["header"] = t.header;
  j["rows"] = rows;
  return j;
}

Field parse_field(std::string_view text) {
  if (text == "Q") return Field::rationals();
  std::string_view num;
  if (text.substr(0, 3) == "Fp:") {
    num = text.substr(3);
  } else if (text.substr(0, 1) == "F") {
    num = text.substr(1);
  } else {
    throw InputError("unknown field \"" + std::string(text) + "\"; use Q or Fp:<prime>");
  }
  if (num.empty() || num.find_first_not_of("0123456789") != std::string_view::npos || num.size() > 12) {
    throw InputError("unknown field \"" + std::string(text) + "\"; use Q or Fp:<prime>");
  }
  return Field::prime(std::stoull(std::string(num)));
}

}  // namespace aquiver
