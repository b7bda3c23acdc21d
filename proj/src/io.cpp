#include "hap/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hap/error.hpp"

namespace hap::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool looks_like_json(std::string_view text) {
  auto t = trim(text);
  return !t.empty() && (t.front() == '{' || t.front() == '[');
}

// Whitespace-separated integers; throws with the line number on junk.
std::vector<int> parse_ints(std::string_view line, int line_no) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (std::isspace(static_cast<unsigned char>(line[i])) || line[i] == ',')) ++i;
    if (i >= line.size()) break;
    int v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
    if (ec != std::errc{})
      fail(ErrorKind::Input, "line " + std::to_string(line_no) + ": expected an integer near '" +
                                 std::string(line.substr(i, 8)) + "'");
    i = static_cast<std::size_t>(ptr - line.data());
    out.push_back(v);
  }
  return out;
}

std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    ++no;
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.emplace_back(no, line);
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Input, std::string("JSON parse error: ") + e.what());
  }
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(ErrorKind::Input, std::string("malformed JSON input: ") + e.what());
  }
}

}  // namespace

PreferenceProfile parse_profile(std::string_view text) {
  if (looks_like_json(text)) return profile_from_json(parse_json(text));
  const auto lines = content_lines(text);
  require(!lines.empty(), ErrorKind::Input, "empty profile");
  const auto header = parse_ints(lines[0].second, lines[0].first);
  require(header.size() == 2, ErrorKind::Input,
          "line " + std::to_string(lines[0].first) + ": header must be 'm u'");
  const int m = header[0], u = header[1];
  require(m >= 1, ErrorKind::Input, "line " + std::to_string(lines[0].first) + ": m must be positive");
  require(u >= 1 && u <= kMaxUniverse, ErrorKind::Input,
          "line " + std::to_string(lines[0].first) + ": universe must lie in [1, 1024]");
  require(static_cast<int>(lines.size()) - 1 == m, ErrorKind::Input,
          "expected " + std::to_string(m) + " rows, found " + std::to_string(lines.size() - 1));
  PreferenceProfile p;
  p.m = m;
  p.universe = u;
  for (int b = 0; b < m; ++b) {
    const auto& [no, line] = lines[static_cast<std::size_t>(b + 1)];
    auto row = parse_ints(line, no);
    const std::string where = "line " + std::to_string(no) + " (row " + std::to_string(b + 1) + ")";
    require(static_cast<int>(row.size()) >= m, ErrorKind::Input,
            where + ": needs at least " + std::to_string(m) + " houses");
    FiniteSet seen;
    for (int h : row) {
      require(h >= 1 && h <= u, ErrorKind::Input, where + ": house " + std::to_string(h) + " outside [1, u]");
      require(!seen.contains(h), ErrorKind::Input, where + ": duplicate house " + std::to_string(h));
      seen.insert(h);
    }
    p.rows.push_back(std::move(row));
  }
  p.validate();
  return p;
}

std::string format_profile(const PreferenceProfile& profile) {
  std::ostringstream os;
  os << profile.m << ' ' << profile.universe << '\n';
  for (const auto& row : profile.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << '\n';
  }
  return os.str();
}

json to_json(const PreferenceProfile& profile) {
  return json{{"m", profile.m}, {"u", profile.universe}, {"rows", profile.rows}};
}

PreferenceProfile profile_from_json(const json& j) {
  return guarded([&] {
    PreferenceProfile p;
    p.m = j.at("m").get<int>();
    p.universe = j.at("u").get<int>();
    p.rows = j.at("rows").get<std::vector<std::vector<int>>>();
    p.validate();
    return p;
  });
}

json to_json(const FiniteSet& s) { return json(s.elements()); }

FiniteSet set_from_json(const json& j) {
  return guarded([&] {
    require(j.is_array(), ErrorKind::Input, "a set must be a JSON array");
    return FiniteSet::from(j.get<std::vector<int>>());
  });
}

SetFamily parse_family(std::string_view text, std::optional<int> universe) {
  if (looks_like_json(text)) return family_from_json(parse_json(text), universe);
  std::vector<FiniteSet> sets;
  for (const auto& [no, line] : content_lines(text)) {
    auto elems = parse_ints(line, no);
    FiniteSet s;
    for (int e : elems) {
      require(FiniteSet::in_range(e), ErrorKind::Input,
              "line " + std::to_string(no) + ": element " + std::to_string(e) + " outside [1, 1024]");
      require(!s.contains(e), ErrorKind::Input, "line " + std::to_string(no) + ": repeated element " + std::to_string(e));
      s.insert(e);
    }
    sets.push_back(s);
  }
  return SetFamily::of(std::move(sets), universe);
}

std::string format_family(const SetFamily& family) {
  std::ostringstream os;
  for (const auto& s : family.sets) {
    bool first = true;
    s.for_each([&](int e) {
      os << (first ? "" : " ") << e;
      first = false;
    });
    os << '\n';
  }
  return os.str();
}

json to_json(const SetFamily& family) {
  json arr = json::array();
  for (const auto& s : family.sets) arr.push_back(to_json(s));
  return arr;
}

SetFamily family_from_json(const json& j, std::optional<int> universe) {
  return guarded([&] {
    require(j.is_array(), ErrorKind::Input, "a family must be a JSON array of arrays");
    std::vector<FiniteSet> sets;
    for (const auto& s : j) sets.push_back(set_from_json(s));
    return SetFamily::of(std::move(sets), universe);
  });
}

json to_json(const SetPairSystem& system) {
  json pairs = json::array();
  for (const auto& p : system.pairs) pairs.push_back(json{{"A", to_json(p.a)}, {"B", to_json(p.b)}});
  return json{{"kind", to_string(system.kind)}, {"pairs", pairs}};
}

SetPairSystem setpairs_from_json(const json& j) {
  return guarded([&] {
    SetPairSystem s;
    const json* pairs = &j;
    if (j.is_object()) {
      s.kind = pair_kind_from_string(j.at("kind").get<std::string>());
      pairs = &j.at("pairs");
    }
    require(pairs->is_array(), ErrorKind::Input, "set pairs must be a JSON array");
    for (const auto& p : *pairs) s.pairs.push_back({set_from_json(p.at("A")), set_from_json(p.at("B"))});
    return s;
  });
}

SetPairSystem parse_setpairs(std::string_view text) { return setpairs_from_json(parse_json(text)); }

json to_json(const Matching& matching) {
  json a = json::object();
  for (std::size_t b = 0; b < matching.assignment.size(); ++b) a[std::to_string(b + 1)] = matching.assignment[b];
  return a;
}

json to_json(const BoundsReport& r) {
  return json{{"m", r.m},
              {"ell", r.ell},
              {"thm_i", to_decimal(r.thm_i)},
              {"thm_i_asymptotic", r.thm_i_asymptotic},
              {"thm_ii", to_decimal(r.thm_ii)},
              {"prop_lower", to_decimal(r.prop_lower)},
              {"akm_upper", to_decimal(r.akm_upper)}};
}

json to_json(const PropertyVerdict& v) {
  json sets = json::array();
  for (const auto& s : v.witness_sets) sets.push_back(to_json(s));
  json out{{"property", to_string(v.property)},
           {"holds", v.holds},
           {"mode", to_string(v.mode)},
           {"k", v.k ? json(*v.k) : json(nullptr)},
           {"witness_sets", sets}};
  if (v.mode == CheckMode::Refute) out["verdict"] = v.holds ? "no violation found" : "violation found";
  return out;
}

json to_json(const RowChain& chain) {
  json levels = json::array();
  for (const auto& level : chain.levels) {
    json rows = json::array();
    for (int r : level) rows.push_back(r + 1);
    levels.push_back(rows);
  }
  return json{{"levels", levels}, {"prefix", chain.prefix}};
}

json to_json(const EllemOutcome& outcome) {
  json out{{"variant", variant_name(outcome)}};
  if (const auto* cc = std::get_if<CommonCore>(&outcome)) {
    out["core"] = to_json(cc->core);
    out["chain"] = to_json(cc->chain);
  } else if (const auto* lx = std::get_if<LargeX>(&outcome)) {
    out["x_set"] = to_json(lx->x_set);
    out["level"] = lx->level;
    out["chain"] = to_json(lx->chain);
  } else {
    out["reason"] = std::get<Vacuous>(outcome).reason;
  }
  return out;
}

json to_json(const FOracleResult& r) {
  return json{{"value", r.value},
              {"exact", r.exact},
              {"witness", to_json(r.witness)},
              {"seed", r.seed},
              {"profiles_examined", r.profiles_examined}};
}

json to_json(const FamilyOracleResult& r) {
  return json{{"value", r.value}, {"exact", r.exact}, {"witness", to_json(r.witness)}, {"nodes", r.nodes}};
}

json to_json(const DrFreeResult& r) {
  return json{{"r", r.r},          {"k", r.k},         {"u", r.universe},
              {"value", r.value},  {"exact", r.exact}, {"witness", to_json(r.witness)},
              {"bound", to_decimal(r.bound)}};
}

json to_json(const JOracleResult& r) {
  return json{{"m", r.m},         {"u", r.universe}, {"value", r.value}, {"exact", r.exact},
              {"witness", to_json(r.witness)}, {"bound", to_decimal(r.bound)}};
}

json to_json(const ConjectureSearchResult& r) {
  const bool tuz = r.which == ConjectureSearchResult::Which::Tuz;
  json out{{"conjecture", tuz ? "tuz" : "ak"}, {"a", r.a}, {"b", r.b}};
  if (!tuz) out["t"] = r.t;
  out["u"] = r.universe;
  out["max_found"] = r.max_found;
  out["exact"] = r.exact;
  out["conjectured_bound"] = to_decimal(r.conjectured_bound);
  out["known_bound"] = to_decimal(r.known_bound);
  out["counterexample"] = r.counterexample;
  out["known_bound_respected"] = r.known_bound_respected;
  out["witness"] = to_json(r.witness);
  return out;
}

json to_json(const FiScan& s) {
  json sizes = json::array();
  for (const auto& v : s.sizes) sizes.push_back(to_decimal(v));
  return json{{"m", s.m}, {"t", s.t}, {"sizes", sizes}, {"argmax", s.argmax}};
}

BigCount big_from_json(const json& j) {
  return guarded([&] {
    const auto s = j.get<std::string>();
    require(!s.empty() && s.find_first_not_of("0123456789") == std::string::npos, ErrorKind::Input,
            "'" + s + "' is not a decimal integer");
    return BigCount(s);
  });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::Input, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace hap::io
