#pragma once

// Block removals ("purges"): a script of jumps that empties a set of cells
// and leaves its catalyst holes as they were. A catalyst is usable when its
// holes are unlike (neither all full nor all empty).

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trisolve/board.hpp"

namespace trisolve {

struct CatalystOption {
  std::vector<Hole> holes;
  // Key: one character per catalyst hole, '1' for a peg, '0' for a hole.
  std::map<std::string, std::vector<Jump>> scripts;
};

struct PurgeTemplate {
  std::string name;
  int rows = 0;
  std::vector<Hole> cells;
  std::vector<CatalystOption> catalysts;  // the first is the primary one

  // Edge-row blocks start full except one vacancy among `cells` and end with
  // `cells` empty and one vacancy in the row given by catalysts[0].holes.
  bool edge = false;
  std::map<Hole, std::vector<Jump>> vacancy_scripts;
};

std::vector<PurgeTemplate> parse_catalog(std::string_view text);
std::string format_catalog(const std::vector<PurgeTemplate>& templates);

// The built-in catalog: "trapezoid", "three", "six" and "edge".
const std::vector<PurgeTemplate>& catalog();
const PurgeTemplate& find_template(std::string_view name);

std::string catalyst_key(const std::vector<Hole>& holes, const std::vector<Hole>& pegs_present);
std::string complement_key(std::string_view key);

struct VerifyReport {
  bool ok = true;
  int scripts_checked = 0;
  std::vector<std::string> failures;
};

// Replays every script in isolation and checks the effect. Block scripts
// must empty the cells and restore the catalyst; each reversed script must
// do the same for the complementary catalyst. All six symmetric images of
// the template are checked too.
VerifyReport verify_template(const PurgeTemplate& t);
// Checks one script for one catalyst configuration, naming the failing jump.
std::optional<std::string> check_block_script(const std::vector<Hole>& cells,
                                              const std::vector<Hole>& catalyst,
                                              std::string_view key, const std::vector<Jump>& script);

// Depth-first search for scripts using only the given holes. Stops after
// `limit` scripts.
std::vector<std::vector<Jump>> derive_block_scripts(const std::vector<Hole>& cells,
                                                    const std::vector<Hole>& catalyst,
                                                    std::string_view key, std::size_t limit);

// Hole of `row` with the same (x + y) mod 3 label as `vacancy`.
Hole same_class_hole(const std::vector<Hole>& row, Hole vacancy);

// Scripts for the edge-row block, one per vacancy cell, preferring scripts
// that at some point expose the catalysts needed for purges on both sides.
std::map<Hole, std::vector<Jump>> derive_edge_scripts();
bool exposes_right_catalyst(const std::vector<Jump>& script, Hole vacancy);
bool exposes_left_catalyst(const std::vector<Jump>& script, Hole vacancy);

// Where a template sits on the board: board = linear(local) + offset.
struct Placement {
  Transform linear = Transform::kIdentity;
  Hole offset;

  Hole map(Hole local) const { return apply_linear(linear, local) + offset; }
  Jump map(const Jump& j) const { return {map(j.from), map(j.over), map(j.to)}; }
};

struct PurgeInstance {
  const PurgeTemplate* tmpl = nullptr;
  Placement place;
  std::vector<int> catalyst_options;  // indices into tmpl->catalysts, tried in order
  std::string label;
  std::optional<std::vector<Jump>> fixed_script;  // board coordinates; edge blocks
  // Index of the neighbour whose cells hold this purge's catalyst. This
  // purge may only start while that one is started and unfinished.
  int after = -1;

  // Scheduler state.
  std::vector<Jump> script;  // board coordinates once started
  int next = 0;
  int start_order = -1;

  bool started() const { return start_order >= 0; }
  bool finished() const { return started() && next == static_cast<int>(script.size()); }
  std::vector<Hole> cells() const;
  int jump_count() const;  // length of the script this instance will run
};

enum class BandSide { kBottom, kRight, kLeft };

// Purges clearing the 3-hole-wide band of the triangle of side `outer_side`
// whose top corner is `outer_top` (board coordinates) left over when the
// inner triangle of side outer_side - 3 is removed. The band lies along
// `side`; `mirrored` puts the trapezoid at the other end of the band.
// Throws kInvalidArgument when outer_side < 7.
std::vector<PurgeInstance> plan_three_row_clear(int outer_side, Hole outer_top, BandSide side,
                                                bool mirrored);

struct EdgeRowPlan {
  std::vector<PurgeInstance> purges;  // the block first, then side purges
  Hole new_vacancy;                   // in row n - 4
};

// Clears the bottom three rows of T_n from the one-vacancy start with
// `vacancy` in those rows, using the block translated `shift` holes right.
// Returns nullopt when the block cannot sit there.
std::optional<EdgeRowPlan> edge_row_purge(int n, Hole vacancy, int shift);

}  // namespace trisolve
