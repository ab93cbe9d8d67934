#include "trisolve/purge.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_set>

#include "trisolve/classification.hpp"
#include "trisolve/error.hpp"
#include "trisolve/notation.hpp"

namespace trisolve {

extern const char* const kEmbeddedPurgeCatalog;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<Jump> parse_script(std::string_view text) {
  std::vector<Jump> out;
  for (const Move& m : parse_moves(text))
    out.insert(out.end(), m.jumps.begin(), m.jumps.end());
  return out;
}

[[noreturn]] void bad_line(int line, const std::string& what) {
  throw EngineError(ErrorKind::kInvalidArgument,
                    "purge catalog line " + std::to_string(line) + ": " + what);
}

// Images of a template under the group can have negative coordinates.
std::string name_of(Hole h) {
  if (h.x >= 0 && h.y >= 0 && h.x < 26) return to_alpha(h);
  return "(" + std::to_string(h.x) + "," + std::to_string(h.y) + ")";
}

// Pegs on a small set of holes, independent of any board shape.
struct Patch {
  std::set<Hole> region;
  std::set<Hole> pegs;

  std::optional<std::string> play(const Jump& j) {
    for (Hole h : {j.from, j.over, j.to})
      if (!region.count(h)) return "leaves the region at " + name_of(h);
    if (!pegs.count(j.from) || !pegs.count(j.over) || pegs.count(j.to))
      return std::string("is not legal");
    pegs.erase(j.from);
    pegs.erase(j.over);
    pegs.insert(j.to);
    return std::nullopt;
  }
};

std::vector<Hole> pegs_for_key(const std::vector<Hole>& holes, std::string_view key) {
  std::vector<Hole> out;
  for (std::size_t i = 0; i < holes.size(); ++i)
    if (key[i] == '1') out.push_back(holes[i]);
  return out;
}

std::string jump_text(const Jump& j) { return name_of(j.from) + "-" + name_of(j.to); }

Jump map_jump(Transform t, const Jump& j) {
  return {apply_linear(t, j.from), apply_linear(t, j.over), apply_linear(t, j.to)};
}

std::vector<Hole> map_holes(Transform t, const std::vector<Hole>& hs) {
  std::vector<Hole> out;
  for (Hole h : hs) out.push_back(apply_linear(t, h));
  return out;
}

std::vector<Jump> map_script(Transform t, const std::vector<Jump>& js) {
  std::vector<Jump> out;
  for (const Jump& j : js) out.push_back(map_jump(t, j));
  return out;
}

std::optional<std::string> check_edge_script(const PurgeTemplate& t, Hole vacancy,
                                             const std::vector<Jump>& script) {
  const auto& top = t.catalysts.front().holes;
  Patch p;
  p.region.insert(t.cells.begin(), t.cells.end());
  p.region.insert(top.begin(), top.end());
  p.pegs = p.region;
  p.pegs.erase(vacancy);
  for (std::size_t i = 0; i < script.size(); ++i)
    if (auto err = p.play(script[i]))
      return "jump " + std::to_string(i) + " (" + jump_text(script[i]) + ") " + *err;
  for (Hole h : t.cells)
    if (p.pegs.count(h)) return "cell " + name_of(h) + " still holds a peg";
  std::vector<Hole> empty_top;
  for (Hole h : top)
    if (!p.pegs.count(h)) empty_top.push_back(h);
  if (empty_top.size() != 1) return std::string("top row does not end with one vacancy");
  if (hole_class(empty_top[0]) != hole_class(vacancy))
    return "vacancy " + name_of(empty_top[0]) + " has a different class";
  return std::nullopt;
}

}  // namespace

std::string catalyst_key(const std::vector<Hole>& holes, const std::vector<Hole>& pegs_present) {
  std::string key;
  for (Hole h : holes)
    key += std::find(pegs_present.begin(), pegs_present.end(), h) != pegs_present.end() ? '1' : '0';
  return key;
}

std::string complement_key(std::string_view key) {
  std::string out(key);
  for (char& c : out) c = c == '1' ? '0' : '1';
  return out;
}

std::vector<PurgeTemplate> parse_catalog(std::string_view text) {
  std::vector<PurgeTemplate> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    try {
      if (line.starts_with("purge ")) {
        std::istringstream head{std::string(line.substr(6))};
        PurgeTemplate t;
        if (!(head >> t.name >> t.rows)) bad_line(line_no, "expected 'purge <name> <rows>'");
        t.edge = t.name == "edge";
        out.push_back(std::move(t));
        continue;
      }
      if (out.empty()) bad_line(line_no, "entry before any 'purge' header");
      PurgeTemplate& t = out.back();
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) bad_line(line_no, "missing ':'");
      const std::string_view tag = trim(line.substr(0, colon));
      const std::string_view body = trim(line.substr(colon + 1));
      if (tag == "cells") {
        t.cells = parse_hole_list(body);
      } else if (tag == "catalyst" || tag == "top") {
        t.catalysts.push_back({parse_hole_list(body), {}});
      } else if (tag.starts_with("script ")) {
        if (t.catalysts.empty()) bad_line(line_no, "script before catalyst");
        const std::string key(trim(tag.substr(7)));
        if (key.size() != t.catalysts.back().holes.size() ||
            key.find_first_not_of("01") != std::string::npos)
          bad_line(line_no, "bad catalyst configuration '" + key + "'");
        t.catalysts.back().scripts[key] = parse_script(body);
      } else if (tag.starts_with("vacancy ")) {
        t.vacancy_scripts[from_alpha(trim(tag.substr(8)))] = parse_script(body);
      } else {
        bad_line(line_no, "unknown entry '" + std::string(tag) + "'");
      }
    } catch (const EngineError& e) {
      if (std::string_view(e.what()).starts_with("purge catalog")) throw;
      bad_line(line_no, e.what());
    }
  }
  return out;
}

std::string format_catalog(const std::vector<PurgeTemplate>& templates) {
  std::ostringstream out;
  for (const PurgeTemplate& t : templates) {
    out << "purge " << t.name << ' ' << t.rows << '\n';
    out << "cells: " << format_hole_list(t.cells) << '\n';
    for (const CatalystOption& c : t.catalysts) {
      out << (t.edge ? "top: " : "catalyst: ") << format_hole_list(c.holes) << '\n';
      for (const auto& [key, script] : c.scripts)
        out << "script " << key << ": " << format_moves(group_jumps(script)) << '\n';
    }
    for (const auto& [v, script] : t.vacancy_scripts)
      out << "vacancy " << to_alpha(v) << ": " << format_moves(group_jumps(script)) << '\n';
    out << '\n';
  }
  return out.str();
}

const std::vector<PurgeTemplate>& catalog() {
  static const std::vector<PurgeTemplate> templates = [] {
    auto ts = parse_catalog(kEmbeddedPurgeCatalog);
    // Missing configurations come from playing the complementary script backwards.
    for (PurgeTemplate& t : ts)
      for (CatalystOption& c : t.catalysts) {
        auto given = c.scripts;
        for (const auto& [key, script] : given)
          c.scripts.try_emplace(complement_key(key), script.rbegin(), script.rend());
      }
    return ts;
  }();
  return templates;
}

const PurgeTemplate& find_template(std::string_view name) {
  for (const PurgeTemplate& t : catalog())
    if (t.name == name) return t;
  throw EngineError(ErrorKind::kInvalidArgument, "no purge template named " + std::string(name));
}

std::optional<std::string> check_block_script(const std::vector<Hole>& cells,
                                              const std::vector<Hole>& catalyst,
                                              std::string_view key, const std::vector<Jump>& script) {
  Patch p;
  p.region.insert(cells.begin(), cells.end());
  p.region.insert(catalyst.begin(), catalyst.end());
  p.pegs.insert(cells.begin(), cells.end());
  const auto start = pegs_for_key(catalyst, key);
  p.pegs.insert(start.begin(), start.end());
  for (std::size_t i = 0; i < script.size(); ++i)
    if (auto err = p.play(script[i]))
      return "jump " + std::to_string(i) + " (" + jump_text(script[i]) + ") " + *err;
  const std::set<Hole> expected(start.begin(), start.end());
  if (p.pegs != expected) return std::string("final state differs from the catalyst configuration");
  return std::nullopt;
}

VerifyReport verify_template(const PurgeTemplate& t) {
  VerifyReport r;
  auto fail = [&](std::string what) {
    r.ok = false;
    r.failures.push_back(t.name + ": " + std::move(what));
  };
  for (Transform g : {Transform::kIdentity, Transform::kRot, Transform::kRot2, Transform::kFlip,
                      Transform::kRotFlip, Transform::kRot2Flip}) {
    const std::string image = std::string(" [") + transform_name(g) + "]";
    const auto cells = map_holes(g, t.cells);
    if (t.edge) {
      PurgeTemplate mapped = t;
      mapped.cells = cells;
      mapped.catalysts.front().holes = map_holes(g, t.catalysts.front().holes);
      for (const auto& [v, script] : t.vacancy_scripts) {
        ++r.scripts_checked;
        if (auto err = check_edge_script(mapped, apply_linear(g, v), map_script(g, script)))
          fail("vacancy " + to_alpha(v) + image + ": " + *err);
      }
      continue;
    }
    for (std::size_t ci = 0; ci < t.catalysts.size(); ++ci) {
      const auto cat = map_holes(g, t.catalysts[ci].holes);
      for (const auto& [key, script] : t.catalysts[ci].scripts) {
        const auto mapped = map_script(g, script);
        ++r.scripts_checked;
        if (auto err = check_block_script(cells, cat, key, mapped))
          fail("script " + key + image + ": " + *err);
        std::vector<Jump> reversed(mapped.rbegin(), mapped.rend());
        ++r.scripts_checked;
        if (auto err = check_block_script(cells, cat, complement_key(key), reversed))
          fail("reversed script " + key + image + ": " + *err);
      }
    }
  }
  return r;
}

std::vector<std::vector<Jump>> derive_block_scripts(const std::vector<Hole>& cells,
                                                    const std::vector<Hole>& catalyst,
                                                    std::string_view key, std::size_t limit) {
  std::vector<Hole> holes(cells);
  holes.insert(holes.end(), catalyst.begin(), catalyst.end());
  std::sort(holes.begin(), holes.end());
  auto index = [&](Hole h) -> int {
    auto it = std::lower_bound(holes.begin(), holes.end(), h);
    return it != holes.end() && *it == h ? static_cast<int>(it - holes.begin()) : -1;
  };
  struct Local { int from, over, to; Jump jump; };
  std::vector<Local> jumps;
  for (Hole a : holes)
    for (Hole d : kDirections) {
      const Hole over = a + d, to = a + d + d;
      const int i = index(a), o = index(over), k = index(to);
      if (o >= 0 && k >= 0) jumps.push_back({i, o, k, {a, over, to}});
    }
  std::uint64_t start = 0, goal = 0;
  for (Hole h : cells) start |= std::uint64_t{1} << index(h);
  for (Hole h : pegs_for_key(catalyst, key)) {
    start |= std::uint64_t{1} << index(h);
    goal |= std::uint64_t{1} << index(h);
  }
  const int goal_pegs = std::popcount(goal);
  std::vector<std::vector<Jump>> found;
  std::unordered_set<std::uint64_t> dead;
  std::vector<Jump> path;
  std::function<bool(std::uint64_t)> dfs = [&](std::uint64_t b) -> bool {
    if (b == goal) {
      found.push_back(path);
      return true;
    }
    if (std::popcount(b) <= goal_pegs || dead.count(b)) return false;
    bool any = false;
    for (const Local& j : jumps) {
      if (((b >> j.from) & 1) && ((b >> j.over) & 1) && !((b >> j.to) & 1)) {
        path.push_back(j.jump);
        any |= dfs(b ^ (std::uint64_t{1} << j.from) ^ (std::uint64_t{1} << j.over) ^
                   (std::uint64_t{1} << j.to));
        path.pop_back();
        if (found.size() >= limit) return true;
      }
    }
    if (!any) dead.insert(b);
    return any;
  };
  dfs(start);
  return found;
}

Hole same_class_hole(const std::vector<Hole>& row, Hole vacancy) {
  for (Hole h : row)
    if (hole_class(h) == hole_class(vacancy)) return h;
  throw EngineError(ErrorKind::kInternal, "no hole of matching class in row");
}

namespace {

// Replays an edge script from its start and asks whether some intermediate
// state satisfies `want`.
bool scan_edge_states(const std::vector<Jump>& script, Hole vacancy,
                      const std::function<bool(const std::set<Hole>&)>& want) {
  std::set<Hole> pegs;
  // The block is rows 3..6 of T6 without d4, e5, f6.
  for (int y = 2; y < 6; ++y)
    for (int x = 0; x <= y; ++x) pegs.insert({x, y});
  pegs.erase({3, 3});
  pegs.erase({4, 4});
  pegs.erase({5, 5});
  pegs.erase(vacancy);
  for (const Jump& j : script) {
    if (want(pegs)) return true;
    pegs.erase(j.from);
    pegs.erase(j.over);
    pegs.insert(j.to);
  }
  return want(pegs);
}

}  // namespace

bool exposes_right_catalyst(const std::vector<Jump>& script, Hole vacancy) {
  const Hole b4{1, 3}, c4{2, 3}, d6{3, 5}, e6{4, 5};
  return scan_edge_states(script, vacancy, [&](const std::set<Hole>& p) {
    return (!p.count(c4) && p.count(b4) && p.count(e6)) ||
           (!p.count(e6) && p.count(c4) && p.count(d6));
  });
}

bool exposes_left_catalyst(const std::vector<Jump>& script, Hole vacancy) {
  const Hole a4{0, 3}, b4{1, 3}, a6{0, 5}, b6{1, 5};
  return scan_edge_states(script, vacancy, [&](const std::set<Hole>& p) {
    return (!p.count(a4) && p.count(b4) && p.count(a6)) ||
           (!p.count(a6) && p.count(a4) && p.count(b6));
  });
}

std::map<Hole, std::vector<Jump>> derive_edge_scripts() {
  const PurgeTemplate& trap = find_template("trapezoid");
  const std::vector<Hole>& cells = trap.cells;
  const std::vector<Hole>& top = trap.catalysts.front().holes;
  std::map<Hole, std::vector<Jump>> out;
  for (Hole v : cells) {
    const Hole target = same_class_hole(top, v);
    // Reach "top full except target, cells empty" from "all full except v":
    // the same search with an extra vacancy on the start side, done by
    // treating v as the goal-side catalyst of a reversed problem.
    std::vector<Hole> holes(cells);
    holes.insert(holes.end(), top.begin(), top.end());
    std::string key;
    for (Hole h : top) key += h == target ? '0' : '1';
    // Search forward from the true start.
    std::vector<std::vector<Jump>> candidates;
    {
      std::sort(holes.begin(), holes.end());
      auto index = [&](Hole h) -> int {
        auto it = std::lower_bound(holes.begin(), holes.end(), h);
        return it != holes.end() && *it == h ? static_cast<int>(it - holes.begin()) : -1;
      };
      struct Local { int from, over, to; Jump jump; };
      std::vector<Local> jumps;
      for (Hole a : holes)
        for (Hole d : kDirections) {
          const int o = index(a + d), k = index(a + d + d);
          if (o >= 0 && k >= 0) jumps.push_back({index(a), o, k, {a, a + d, a + d + d}});
        }
      std::uint64_t start = 0, goal = 0;
      for (Hole h : holes) start |= std::uint64_t{1} << index(h);
      start &= ~(std::uint64_t{1} << index(v));
      for (Hole h : top)
        if (h != target) goal |= std::uint64_t{1} << index(h);
      std::unordered_set<std::uint64_t> dead;
      std::vector<Jump> path;
      std::function<bool(std::uint64_t)> dfs = [&](std::uint64_t b) -> bool {
        if (b == goal) {
          candidates.push_back(path);
          return true;
        }
        if (std::popcount(b) <= 2 || dead.count(b)) return false;
        bool any = false;
        for (const Local& j : jumps) {
          if (((b >> j.from) & 1) && ((b >> j.over) & 1) && !((b >> j.to) & 1)) {
            path.push_back(j.jump);
            any |= dfs(b ^ (std::uint64_t{1} << j.from) ^ (std::uint64_t{1} << j.over) ^
                       (std::uint64_t{1} << j.to));
            path.pop_back();
            if (candidates.size() >= 20000) return true;
          }
        }
        if (!any) dead.insert(b);
        return any;
      };
      dfs(start);
    }
    if (candidates.empty())
      throw EngineError(ErrorKind::kInternal, "no edge script for vacancy " + to_alpha(v));
    auto score = [&](const std::vector<Jump>& s) {
      return int(exposes_right_catalyst(s, v)) + int(exposes_left_catalyst(s, v));
    };
    out[v] = *std::max_element(candidates.begin(), candidates.end(),
                               [&](const auto& a, const auto& b) { return score(a) < score(b); });
  }
  return out;
}

std::vector<Hole> PurgeInstance::cells() const {
  std::vector<Hole> out;
  for (Hole h : tmpl->cells) out.push_back(place.map(h));
  return out;
}

int PurgeInstance::jump_count() const {
  if (fixed_script) return static_cast<int>(fixed_script->size());
  if (!script.empty()) return static_cast<int>(script.size());
  const auto& scripts = tmpl->catalysts[catalyst_options.front()].scripts;
  return scripts.empty() ? 0 : static_cast<int>(scripts.begin()->second.size());
}

namespace {

Transform band_transform(BandSide side, bool mirrored) {
  const Transform rot = side == BandSide::kBottom ? Transform::kIdentity
                        : side == BandSide::kRight ? Transform::kRot
                                                   : Transform::kRot2;
  return mirrored ? compose(rot, Transform::kFlip) : rot;
}

// Places a template given in canonical band coordinates of T_side (top
// corner at the origin) under the band's transform, then shifts to `top`.
Placement place_in(Transform g, int side, Hole top, Transform lin, Hole local_offset) {
  Placement p;
  p.linear = compose(g, lin);
  p.offset = apply(g, local_offset, side) + top;
  return p;
}

}  // namespace

std::vector<PurgeInstance> plan_three_row_clear(int outer_side, Hole outer_top, BandSide side,
                                                bool mirrored) {
  if (outer_side < 7)
    throw EngineError(ErrorKind::kInvalidArgument,
                      "a three-row band needs a triangle of side at least 7");
  const int s = outer_side - 3;  // first band row
  const Transform g = band_transform(side, mirrored);
  const PurgeTemplate& trap = find_template("trapezoid");
  const PurgeTemplate& three = find_template("three");
  const PurgeTemplate& six = find_template("six");
  std::vector<PurgeInstance> out;

  PurgeInstance t;
  t.tmpl = &trap;
  t.place = place_in(g, outer_side, outer_top, Transform::kIdentity, {0, s - 3});
  t.catalyst_options = {0};
  t.label = "T";
  out.push_back(t);

  // Band columns right of the trapezoid: the top band row has s + 1 holes
  // and the trapezoid takes 3 of them.
  const int columns = s + 1 - 3;
  const bool has3 = columns % 2 == 1;
  if (has3) {
    PurgeInstance p;
    p.tmpl = &three;
    p.place = place_in(g, outer_side, outer_top, Transform::kIdentity, {2, s});
    p.catalyst_options = {0};
    p.label = "3";
    p.after = 0;
    out.push_back(p);
  }
  for (int x = 3 + has3, i = 0; x + 1 <= s; x += 2, ++i) {
    PurgeInstance p;
    p.tmpl = &six;
    p.place = place_in(g, outer_side, outer_top, Transform::kIdentity, {x - 2, s});
    p.catalyst_options = {x == 3 ? 1 : 0};
    p.label = "6";
    p.after = static_cast<int>(out.size()) - 1;
    out.push_back(p);
  }
  return out;
}

namespace {

// Diagonal-column purges to the right of column `first` in the bottom three
// rows of T_n, `width` columns in total. `g` maps the layout onto the board.
void side_purges(int n, int first, int width, Transform g, const std::string& tag,
                 std::vector<PurgeInstance>& out) {
  const PurgeTemplate& three = find_template("three");
  const PurgeTemplate& six = find_template("six");
  int x = first;
  int previous = 0;  // the edge block
  auto usable = [&](const PurgeInstance& p) {
    std::vector<int> opts;
    for (int c = 0; c < static_cast<int>(p.tmpl->catalysts.size()); ++c) {
      bool ok = true;
      for (Hole h : p.tmpl->catalysts[c].holes) ok &= on_board(p.place.map(h), n);
      if (ok) opts.push_back(c);
    }
    return opts;
  };
  if (width % 2 == 1) {
    PurgeInstance p;
    p.tmpl = &three;
    p.place = place_in(g, n, {0, 0}, Transform::kIdentity, {x - 1, n - 3});
    p.catalyst_options = usable(p);
    p.label = tag + "3";
    p.after = previous;
    previous = static_cast<int>(out.size());
    out.push_back(p);
    ++x;
  }
  for (; x < first + width; x += 2) {
    PurgeInstance p;
    p.tmpl = &six;
    p.place = place_in(g, n, {0, 0}, Transform::kIdentity, {x - 2, n - 3});
    p.catalyst_options = usable(p);
    p.label = tag + "6";
    p.after = previous;
    previous = static_cast<int>(out.size());
    out.push_back(p);
  }
}

}  // namespace

std::optional<EdgeRowPlan> edge_row_purge(int n, Hole vacancy, int shift) {
  if (n < 7) throw EngineError(ErrorKind::kInvalidArgument, "edge-row purge needs n >= 7");
  const int k = shift;
  if (k < 0 || k > n - 5 || k == 1 || n - 5 - k == 1) return std::nullopt;
  const PurgeTemplate& edge = find_template("edge");
  const Hole origin{k, n - 6};
  const Hole local = vacancy - origin;
  const auto it = edge.vacancy_scripts.find(local);
  if (it == edge.vacancy_scripts.end()) return std::nullopt;

  EdgeRowPlan plan;
  PurgeInstance block;
  block.tmpl = &edge;
  block.place.offset = origin;
  block.label = "E";
  std::vector<Jump> script;
  for (const Jump& j : it->second) script.push_back(block.place.map(j));
  block.fixed_script = script;
  plan.purges.push_back(block);
  plan.new_vacancy = same_class_hole(edge.catalysts.front().holes, local) + origin;

  side_purges(n, k + 3, n - 5 - k, Transform::kIdentity, "R", plan.purges);
  // The left side is the mirror image of a right side with k' = n - 5 - k.
  side_purges(n, n - 2 - k, k, Transform::kFlip, "L", plan.purges);
  for (const PurgeInstance& p : plan.purges)
    if (p.tmpl != &edge && p.catalyst_options.empty()) return std::nullopt;
  return plan;
}

}  // namespace trisolve
