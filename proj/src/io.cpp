#include "crossfam/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "crossfam/errors.hpp"

namespace crossfam {
namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool done() {
    skip_trailing_blank();
    return pos_ >= text_.size();
  }

  std::string_view next(const char* expected) {
    if (pos_ >= text_.size()) throw ParseError(line_ + 1, std::string("unexpected end of file, expected ") + expected);
    std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) end = text_.size();
    std::string_view line = text_.substr(pos_, end - pos_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos_ = end + 1;
    ++line_;
    return line;
  }

  std::size_t line() const { return line_; }

 private:
  void skip_trailing_blank() {
    std::size_t p = pos_;
    while (p < text_.size() && (text_[p] == '\n' || text_[p] == '\r' || text_[p] == ' ' || text_[p] == '\t')) ++p;
    if (p >= text_.size()) pos_ = text_.size();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
T number(std::string_view s, std::size_t line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return value;
}

std::size_t keyed_count(std::string_view token, std::string_view key, std::size_t line) {
  if (token.substr(0, key.size()) != key) throw ParseError(line, "expected " + std::string(key) + "<count>");
  return number<std::size_t>(token.substr(key.size()), line, "count");
}

PointSet read_points(LineReader& in) {
  auto header = fields(in.next("header"));
  if (header.size() != 3 || header[0] != "pointset" || header[1] != "v1") {
    throw ParseError(in.line(), "expected 'pointset v1 n=<N>'");
  }
  const std::size_t n = keyed_count(header[2], "n=", in.line());
  const std::size_t first_line = in.line() + 1;
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto f = fields(in.next("point"));
    if (f.size() != 2) throw ParseError(in.line(), "expected '<x> <y>'");
    Point p{number<std::int64_t>(f[0], in.line(), "coordinate"), number<std::int64_t>(f[1], in.line(), "coordinate")};
    if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate || p.y > kMaxCoordinate || p.y < -kMaxCoordinate) {
      throw ParseError(in.line(), "coordinate out of range");
    }
    pts.push_back(p);
  }
  PositionCheck check = general_position_check(pts);
  if (auto* d = std::get_if<DuplicateWitness>(&check)) {
    throw ParseError(first_line + d->second, "duplicate of point " + std::to_string(d->first));
  }
  if (auto* c = std::get_if<CollinearWitness>(&check)) {
    throw ParseError(first_line + c->third, "collinear with points " + std::to_string(c->first) + " and " +
                                                std::to_string(c->second));
  }
  return PointSet::unchecked(std::move(pts));
}

std::string format_ms(std::int64_t us) {
  std::string sign = us < 0 ? "-" : "";
  const std::int64_t a = us < 0 ? -us : us;
  std::string frac = std::to_string(a % 1000);
  frac.insert(0, 3 - frac.size(), '0');
  return sign + std::to_string(a / 1000) + "." + frac;
}

std::int64_t parse_ms(std::string_view s, std::size_t line) {
  bool neg = !s.empty() && s[0] == '-';
  if (neg) s.remove_prefix(1);
  const std::size_t dot = s.find('.');
  std::int64_t whole = number<std::int64_t>(s.substr(0, dot), line, "milliseconds");
  std::int64_t frac = 0;
  if (dot != std::string_view::npos) {
    std::string_view f = s.substr(dot + 1);
    if (f.empty() || f.size() > 3) throw ParseError(line, "bad milliseconds");
    frac = number<std::int64_t>(f, line, "milliseconds");
    for (std::size_t i = f.size(); i < 3; ++i) frac *= 10;
  }
  const std::int64_t us = whole * 1000 + frac;
  return neg ? -us : us;
}

}  // namespace

std::string render_points(const PointSet& v) {
  std::ostringstream out;
  out << "pointset v1 n=" << v.size() << '\n';
  for (const Point& p : v) out << p.x << ' ' << p.y << '\n';
  return out.str();
}

PointSet parse_points(std::string_view text) {
  LineReader in(text);
  PointSet v = read_points(in);
  if (!in.done()) throw ParseError(in.line() + 1, "trailing content");
  return v;
}

GeometricGraph GraphFile::graph() const {
  return complete ? GeometricGraph::complete(points) : GeometricGraph(points, edges);
}

std::string render_graph(const GraphFile& g) {
  std::ostringstream out;
  out << render_points(g.points);
  if (g.complete) {
    out << "edges complete\n";
  } else {
    out << "edges m=" << g.edges.size() << '\n';
    for (const Edge& e : g.edges) out << e.u << ' ' << e.v << '\n';
  }
  return out.str();
}

GraphFile parse_graph(std::string_view text) {
  LineReader in(text);
  GraphFile g;
  g.points = read_points(in);
  auto header = fields(in.next("edges header"));
  if (header.size() != 2 || header[0] != "edges") throw ParseError(in.line(), "expected 'edges m=<M>' or 'edges complete'");
  if (header[1] == "complete") {
    g.complete = true;
  } else {
    const std::size_t m = keyed_count(header[1], "m=", in.line());
    std::vector<char> seen;
    const std::size_t n = g.points.size();
    for (std::size_t i = 0; i < m; ++i) {
      auto f = fields(in.next("edge"));
      if (f.size() != 2) throw ParseError(in.line(), "expected '<i> <j>'");
      const auto a = number<std::uint64_t>(f[0], in.line(), "index");
      const auto b = number<std::uint64_t>(f[1], in.line(), "index");
      if (a >= n || b >= n) throw ParseError(in.line(), "vertex index out of range");
      if (a >= b) throw ParseError(in.line(), "edge must satisfy i < j");
      Edge e{static_cast<VertexId>(a), static_cast<VertexId>(b)};
      if (!g.edges.empty() && !(g.edges.back() < e)) {
        for (const Edge& o : g.edges) {
          if (o == e) throw ParseError(in.line(), "duplicate edge");
        }
      }
      g.edges.push_back(e);
    }
  }
  if (!in.done()) throw ParseError(in.line() + 1, "trailing content");
  return g;
}

std::string render_result(const ResultFile& r) {
  std::ostringstream out;
  out << "result v1\n";
  out << "mode " << to_string(r.mode) << '\n';
  out << "run " << r.run << '\n';
  out << "size " << r.segments.size() << '\n';
  out << "verified " << (r.verified ? "true" : "false") << '\n';
  out << "params";
  for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
  out << '\n';
  out << "seed " << r.seed << '\n';
  out << "wall_ms " << format_ms(r.wall_us) << '\n';
  out << "segments\n";
  for (const Segment& s : r.segments) out << s.a << ' ' << s.b << '\n';
  return out.str();
}

ResultFile parse_result(std::string_view text) {
  LineReader in(text);
  ResultFile r;
  auto expect = [&](const char* key, std::size_t count) {
    auto f = fields(in.next(key));
    if (f.empty() || f[0] != key || (count != 0 && f.size() != count)) {
      throw ParseError(in.line(), std::string("expected '") + key + "'");
    }
    return f;
  };
  auto h = fields(in.next("header"));
  if (h.size() != 2 || h[0] != "result" || h[1] != "v1") throw ParseError(in.line(), "expected 'result v1'");
  auto mode = expect("mode", 2);
  try {
    r.mode = parse_family_mode(std::string(mode[1]));
  } catch (const Error& e) {
    throw ParseError(in.line(), e.what());
  }
  r.run = std::string(expect("run", 2)[1]);
  const auto size = number<std::size_t>(expect("size", 2)[1], in.line(), "size");
  auto ver = expect("verified", 2);
  if (ver[1] != "true" && ver[1] != "false") throw ParseError(in.line(), "verified must be true or false");
  r.verified = ver[1] == "true";
  auto params = expect("params", 0);
  for (std::size_t i = 1; i < params.size(); ++i) {
    const std::size_t eq = params[i].find('=');
    if (eq == std::string_view::npos) throw ParseError(in.line(), "parameter without '='");
    r.params.emplace_back(std::string(params[i].substr(0, eq)), std::string(params[i].substr(eq + 1)));
  }
  r.seed = number<std::uint64_t>(expect("seed", 2)[1], in.line(), "seed");
  r.wall_us = parse_ms(expect("wall_ms", 2)[1], in.line());
  expect("segments", 1);
  for (std::size_t i = 0; i < size; ++i) {
    auto f = fields(in.next("segment"));
    if (f.size() != 2) throw ParseError(in.line(), "expected '<a> <b>'");
    r.segments.push_back({number<VertexId>(f[0], in.line(), "index"), number<VertexId>(f[1], in.line(), "index")});
  }
  if (!in.done()) throw ParseError(in.line() + 1, "more segments than size");
  return r;
}

std::string strip_timing(std::string_view rendered) {
  std::string out;
  std::size_t pos = 0;
  while (pos < rendered.size()) {
    std::size_t end = rendered.find('\n', pos);
    if (end == std::string_view::npos) end = rendered.size() - 1;
    std::string_view line = rendered.substr(pos, end - pos + 1);
    if (line.substr(0, 8) != "wall_ms ") out += line;
    pos = end + 1;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

}  // namespace crossfam
