#include "trisolve/notation.hpp"

#include <cctype>

#include "trisolve/error.hpp"

namespace trisolve {

namespace {

[[noreturn]] void syntax_error(std::string_view what, std::size_t pos) {
  throw EngineError(ErrorKind::kInvalidArgument,
                    "syntax error at offset " + std::to_string(pos) + ": " + std::string(what));
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= s_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::size_t pos() const { return pos_; }

  Hole hole() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_])))
      syntax_error("expected a hole such as 'a1'", start);
    ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    try {
      return from_alpha(s_.substr(start, pos_ - start));
    } catch (const EngineError&) {
      syntax_error("bad hole '" + std::string(s_.substr(start, pos_ - start)) + "'", start);
    }
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_alpha(Hole h) {
  if (h.x < 0 || h.x >= 26 || h.y < 0)
    throw EngineError(ErrorKind::kInvalidArgument,
                      "hole (" + std::to_string(h.x) + "," + std::to_string(h.y) +
                          ") has no alphanumeric name");
  return std::string(1, static_cast<char>('a' + h.x)) + std::to_string(h.y + 1);
}

Hole from_alpha(std::string_view text) {
  if (text.size() < 2 || !std::isalpha(static_cast<unsigned char>(text[0])))
    throw EngineError(ErrorKind::kInvalidArgument, "bad hole name '" + std::string(text) + "'");
  const int x = std::tolower(static_cast<unsigned char>(text[0])) - 'a';
  int number = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])) || i > 4)
      throw EngineError(ErrorKind::kInvalidArgument, "bad hole name '" + std::string(text) + "'");
    number = number * 10 + (text[i] - '0');
  }
  if (number < 1 || text[1] == '0')
    throw EngineError(ErrorKind::kInvalidArgument, "bad hole name '" + std::string(text) + "'");
  return {x, number - 1};
}

std::vector<Move> parse_moves(std::string_view text) {
  Scanner sc(text);
  std::vector<Move> moves;
  if (sc.done()) return moves;
  while (true) {
    const std::size_t move_pos = sc.pos();
    std::vector<Hole> path{sc.hole()};
    while (sc.accept('-')) path.push_back(sc.hole());
    if (path.size() < 2) syntax_error("a move needs at least two holes", move_pos);
    Move m;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      auto j = jump_between(path[i], path[i + 1]);
      if (!j)
        throw EngineError(ErrorKind::kIllegal, to_alpha(path[i]) + "-" + to_alpha(path[i + 1]) +
                                                   " is not a jump (offset " +
                                                   std::to_string(move_pos) + ")");
      m.jumps.push_back(*j);
    }
    moves.push_back(std::move(m));
    if (sc.done()) break;
    if (!sc.accept(',')) syntax_error("expected ',' or '-'", sc.pos());
    if (sc.done()) syntax_error("trailing ','", sc.pos());
  }
  return moves;
}

std::string format_move(const Move& m) {
  std::string out = to_alpha(m.jumps.front().from);
  for (const Jump& j : m.jumps) out += "-" + to_alpha(j.to);
  return out;
}

std::string format_moves(const std::vector<Move>& moves) {
  std::string out;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (i) out += ", ";
    out += format_move(moves[i]);
  }
  return out;
}

std::string format_jumps(const std::vector<Jump>& jumps) {
  std::string out;
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    if (i) out += ", ";
    out += to_alpha(jumps[i].from) + "-" + to_alpha(jumps[i].to);
  }
  return out;
}

Solution parse_solution(int n, std::string_view text) {
  Solution s;
  s.n = n;
  s.moves = parse_moves(text);
  if (s.moves.empty()) throw EngineError(ErrorKind::kInvalidArgument, "empty solution");
  s.vacancy = s.moves.front().jumps.front().to;
  s.finish = s.moves.back().jumps.back().to;
  return s;
}

std::string emit_solution(const Solution& s) { return format_moves(s.moves); }

std::string normalize_notation(std::string_view text) { return format_moves(parse_moves(text)); }

std::vector<Hole> parse_hole_list(std::string_view text) {
  Scanner sc(text);
  std::vector<Hole> out;
  while (!sc.done()) {
    out.push_back(sc.hole());
    sc.accept(',');
  }
  return out;
}

std::string format_hole_list(const std::vector<Hole>& holes) {
  std::string out;
  for (std::size_t i = 0; i < holes.size(); ++i) {
    if (i) out += " ";
    out += to_alpha(holes[i]);
  }
  return out;
}

}  // namespace trisolve
