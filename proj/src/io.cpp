#include "rim/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "rim/errors.hpp"

namespace rim::io {
namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw InputError("line " + std::to_string(line.number) + ": " + what);
}

std::int64_t parse_index(const Line& line, const std::string& tok) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail(line, "bad integer '" + tok + "'");
  return v;
}

Rational parse_rational(const Line& line, const std::string& tok) {
  try {
    return Rational::parse(tok);
  } catch (const InputError& e) {
    fail(line, e.what());
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  return f;
}

}  // namespace

AnyInstance parse_points(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw InputError("point file has no points");
  const std::size_t dim = lines.front().tokens.size();
  if (dim != 1 && dim != 2) fail(lines.front(), "expected 1 or 2 coordinates");
  if (dim == 1) {
    std::vector<Rational> pts;
    for (const auto& l : lines) {
      if (l.tokens.size() != 1) fail(l, "expected a single coordinate");
      pts.push_back(parse_rational(l, l.tokens[0]));
    }
    return Instance1D::from_unsorted(std::move(pts));
  }
  std::vector<Point2> pts;
  for (const auto& l : lines) {
    if (l.tokens.size() != 2) fail(l, "expected two coordinates");
    pts.push_back({parse_rational(l, l.tokens[0]), parse_rational(l, l.tokens[1])});
  }
  return Instance2D(std::move(pts));
}

Instance1D parse_points_1d(std::istream& in) {
  auto any = parse_points(in);
  if (auto* p = std::get_if<Instance1D>(&any)) return std::move(*p);
  throw InputError("expected a 1D point file");
}

Instance2D parse_points_2d(std::istream& in) {
  auto any = parse_points(in);
  if (auto* p = std::get_if<Instance2D>(&any)) return std::move(*p);
  // A 1D file is a valid 2D instance on the x axis.
  return Instance2D::from_line(std::get<Instance1D>(any));
}

ReceiverAssignment parse_assignment(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw InputError("assignment file is empty");
  const auto& head = lines.front();
  if (head.tokens.size() != 2 || head.tokens[0] != "model") fail(head, "expected 'model <kind>'");
  Model model;
  if (head.tokens[1] == "asym2d") {
    model = Model::kAsym2D;
  } else if (head.tokens[1] == "sinktree1d") {
    model = Model::kSinkTree1D;
  } else {
    fail(head, "unknown model '" + head.tokens[1] + "'");
  }

  std::optional<std::int64_t> sink;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() == 2 && l.tokens[0] == "sink") {
      if (model != Model::kSinkTree1D) fail(l, "sink line only allowed for sinktree1d");
      if (sink || !edges.empty()) fail(l, "sink line must directly follow the model line");
      sink = parse_index(l, l.tokens[1]);
      continue;
    }
    if (l.tokens.size() != 2) fail(l, "expected '<from> <to>'");
    edges.emplace_back(parse_index(l, l.tokens[0]), parse_index(l, l.tokens[1]));
  }

  const std::size_t n = edges.size() + (model == Model::kSinkTree1D ? 1 : 0);
  if (model == Model::kSinkTree1D && !sink) throw InputError("sinktree1d assignment needs a sink line");
  std::vector<PointId> rec(n, kNoPoint);
  std::vector<char> seen(n, 0);
  for (const auto& [from, to] : edges) {
    if (from < 0 || static_cast<std::size_t>(from) >= n || to < 0 || static_cast<std::size_t>(to) >= n) {
      throw InputError("edge " + std::to_string(from) + " " + std::to_string(to) + " references a missing point");
    }
    if (seen[from]) throw InputError("point " + std::to_string(from) + " has two receivers");
    seen[from] = 1;
    rec[from] = static_cast<PointId>(to);
  }
  if (model == Model::kAsym2D) return ReceiverAssignment::asym2d(std::move(rec));
  if (*sink < 0 || static_cast<std::size_t>(*sink) >= n) throw InputError("sink index out of range");
  return ReceiverAssignment::sink_tree(std::move(rec), static_cast<PointId>(*sink));
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_grid(std::istream& in) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& l : tokenize(in)) {
    if (l.tokens.size() != 2) fail(l, "expected 'x y'");
    out.emplace_back(parse_index(l, l.tokens[0]), parse_index(l, l.tokens[1]));
  }
  return out;
}

void write_points(std::ostream& out, const Instance1D& inst, const std::vector<std::string>& comments) {
  for (PointId i = 0; i < inst.size(); ++i) {
    out << inst[i];
    if (!comments.empty() && !comments[i].empty()) out << " # " << comments[i];
    out << '\n';
  }
}

void write_points(std::ostream& out, const Instance2D& inst) {
  for (const auto& p : inst.points()) out << p.x << ' ' << p.y << '\n';
}

void write_assignment(std::ostream& out, const ReceiverAssignment& n) {
  out << "model " << (n.model() == Model::kAsym2D ? "asym2d" : "sinktree1d") << '\n';
  if (n.sink()) out << "sink " << *n.sink() << '\n';
  for (PointId p = 0; p < n.size(); ++p) {
    if (n.has_receiver(p)) out << p << ' ' << n.receiver(p) << '\n';
  }
}

std::string to_string(const ReceiverAssignment& n) {
  std::ostringstream ss;
  write_assignment(ss, n);
  return ss.str();
}

AnyInstance read_points_file(const std::string& path) {
  auto f = open(path);
  return parse_points(f);
}

ReceiverAssignment read_assignment_file(const std::string& path) {
  auto f = open(path);
  return parse_assignment(f);
}

std::vector<std::pair<std::int64_t, std::int64_t>> read_grid_file(const std::string& path) {
  auto f = open(path);
  return parse_grid(f);
}

}  // namespace rim::io
