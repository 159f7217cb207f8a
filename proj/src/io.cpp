#include "ydlcat/io.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "ydlcat/errors.hpp"

namespace ydlcat {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tok;
};

class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::size_t number = 0, start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string raw(text.substr(start, end - start));
      start = end + 1;
      std::istringstream in(raw);
      Line line{number, {}};
      std::string t;
      while (in >> t) line.tok.push_back(t);
      if (line.tok.empty() || line.tok[0][0] == '#') continue;
      lines_.push_back(std::move(line));
    }
  }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const {
    if (done()) fail_eof();
    return lines_[pos_];
  }
  const Line& next() {
    const Line& l = peek();
    ++pos_;
    return l;
  }
  std::size_t last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

  [[noreturn]] void fail_eof() const {
    throw ParseError(last_line(), "unexpected end of input");
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

[[noreturn]] void fail(const Line& l, const std::string& msg) {
  throw ParseError(l.number, msg);
}

std::size_t parse_index(const Line& l, const std::string& t) {
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 12) {
    fail(l, "expected a non-negative integer, got '" + t + "'");
  }
  return std::stoull(t);
}

Scalar parse_value(const Line& l, const FieldCtx& f, const std::string& t) {
  try {
    return Scalar::parse(f, t);
  } catch (const Error& e) {
    fail(l, "bad scalar '" + t + "': " + e.what());
  }
}

const Line& expect(Reader& r, const std::string& keyword, std::size_t min_tokens) {
  const Line& l = r.next();
  if (l.tok[0] != keyword) fail(l, "expected '" + keyword + "', got '" + l.tok[0] + "'");
  if (l.tok.size() < min_tokens) fail(l, "'" + keyword + "' line is incomplete");
  return l;
}

// Reads "<i> <j> <value>" lines up to "end" for a matrix whose header has
// already been consumed.
Matrix read_entries(Reader& r, const FieldCtx& f, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (;;) {
    const Line& l = r.next();
    if (l.tok[0] == "end") {
      if (l.tok.size() != 1) fail(l, "stray tokens after 'end'");
      return m;
    }
    if (l.tok.size() != 3) fail(l, "matrix entry must be '<row> <col> <value>'");
    std::size_t i = parse_index(l, l.tok[0]), j = parse_index(l, l.tok[1]);
    if (i >= rows || j >= cols) fail(l, "matrix entry outside " + std::to_string(rows) + "x" +
                                            std::to_string(cols));
    m(i, j) = parse_value(l, f, l.tok[2]);
  }
}

// "matrix <name> <rows> <cols>" followed by entries.
std::pair<std::string, Matrix> read_matrix(Reader& r, const FieldCtx& f) {
  const Line& l = expect(r, "matrix", 4);
  if (l.tok.size() != 4) fail(l, "matrix header must be 'matrix <name> <rows> <cols>'");
  std::string name = l.tok[1];
  std::size_t rows = parse_index(l, l.tok[2]), cols = parse_index(l, l.tok[3]);
  return {name, read_entries(r, f, rows, cols)};
}

void write_entries(std::ostringstream& out, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out << i << ' ' << j << ' ' << m(i, j).to_string() << '\n';
  out << "end\n";
}

void write_matrix(std::ostringstream& out, const std::string& name, const Matrix& m) {
  out << "matrix " << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
  write_entries(out, m);
}

void write_header(std::ostringstream& out, const std::string& kind, const FieldCtx& f) {
  out << "ydlcat 1\nkind " << kind << "\nfield " << f.to_string() << '\n';
}

FieldCtx read_header(Reader& r, const std::string& kind) {
  const Line& magic = expect(r, "ydlcat", 2);
  if (magic.tok[1] != "1") fail(magic, "unsupported format version " + magic.tok[1]);
  const Line& k = expect(r, "kind", 2);
  if (k.tok[1] != kind) fail(k, "expected kind " + kind + ", got " + k.tok[1]);
  const Line& fl = expect(r, "field", 2);
  if (fl.tok[1] == "rational" && fl.tok.size() == 2) return FieldCtx::rational();
  if (fl.tok[1] == "prime" && fl.tok.size() == 3) {
    try {
      return FieldCtx::prime(static_cast<std::int64_t>(parse_index(fl, fl.tok[2])));
    } catch (const UnsupportedField& e) {
      fail(fl, e.what());
    }
  }
  fail(fl, "field must be 'rational' or 'prime <p>'");
}

std::string check_label(const std::string& s) {
  if (s.empty() || s.find_first_of(" \t\n") != std::string::npos) {
    throw Error("cannot serialize label '" + s + "': labels must be single tokens");
  }
  return s;
}

void write_hopf_body(std::ostringstream& out, const HopfAlgebra& h) {
  out << "name " << check_label(h.name()) << "\ndim " << h.dim() << "\nlabels";
  for (const auto& l : h.labels()) out << ' ' << check_label(l);
  out << '\n';
  write_matrix(out, "mult", h.mult());
  write_matrix(out, "unit", h.unit());
  write_matrix(out, "comult", h.comult());
  write_matrix(out, "counit", h.counit());
  write_matrix(out, "antipode", h.antipode());
}

// Reads the body of a Hopf algebra until `terminator` (or end of input when
// terminator is empty).
HopfPtr read_hopf_body(Reader& r, const FieldCtx& f, const std::string& terminator) {
  std::string name;
  std::optional<std::size_t> dim;
  std::vector<std::string> labels;
  std::map<std::string, Matrix> mats;
  while (terminator.empty() ? !r.done() : r.peek().tok[0] != terminator) {
    const Line& l = r.peek();
    const std::string& key = l.tok[0];
    if (key == "matrix") {
      auto [mname, m] = read_matrix(r, f);
      if (!mats.emplace(mname, std::move(m)).second) fail(l, "duplicate matrix " + mname);
      continue;
    }
    r.next();
    if (key == "name" && l.tok.size() == 2) {
      name = l.tok[1];
    } else if (key == "dim" && l.tok.size() == 2) {
      dim = parse_index(l, l.tok[1]);
    } else if (key == "labels") {
      labels.assign(l.tok.begin() + 1, l.tok.end());
    } else {
      fail(l, "unexpected '" + key + "' in a Hopf algebra");
    }
  }
  if (!terminator.empty()) {
    const Line& l = r.next();
    if (l.tok.size() != 2 || l.tok[1] != "hopf") fail(l, "expected 'end hopf'");
  }
  if (!dim) throw ParseError(r.last_line(), "Hopf algebra without 'dim'");
  for (const char* need : {"mult", "unit", "comult", "counit", "antipode"}) {
    if (!mats.count(need)) throw ParseError(r.last_line(), std::string("Hopf algebra without matrix ") + need);
  }
  if (mats.at("mult").rows() != *dim) {
    throw DimensionMismatch("declared dim " + std::to_string(*dim) +
                            " does not match the multiplication");
  }
  return std::make_shared<const HopfAlgebra>(name.empty() ? "H" : name, f, labels,
                                             mats.at("mult"), mats.at("unit"), mats.at("comult"),
                                             mats.at("counit"), mats.at("antipode"));
}

HopfPtr read_embedded_hopf(Reader& r, const FieldCtx& f, const std::string& which) {
  const Line& l = expect(r, "begin", 3);
  if (l.tok[1] != "hopf" || l.tok[2] != which) fail(l, "expected 'begin hopf " + which + "'");
  return read_hopf_body(r, f, "end");
}

void write_group(std::ostringstream& out, const std::string& which, const GroupTable& g) {
  out << "begin group " << which << "\nname " << check_label(g.name()) << "\nlabels";
  for (const auto& l : g.labels()) out << ' ' << check_label(l);
  out << '\n';
  for (const auto& row : g.table()) {
    out << "row";
    for (auto v : row) out << ' ' << v;
    out << '\n';
  }
  out << "end group\n";
}

GroupTable read_group(Reader& r, const std::string& which) {
  const Line& l = expect(r, "begin", 3);
  if (l.tok[1] != "group" || l.tok[2] != which) fail(l, "expected 'begin group " + which + "'");
  std::string name = which;
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> rows;
  for (;;) {
    const Line& x = r.next();
    if (x.tok[0] == "end") {
      if (x.tok.size() != 2 || x.tok[1] != "group") fail(x, "expected 'end group'");
      break;
    }
    if (x.tok[0] == "name" && x.tok.size() == 2) {
      name = x.tok[1];
    } else if (x.tok[0] == "labels") {
      labels.assign(x.tok.begin() + 1, x.tok.end());
    } else if (x.tok[0] == "row") {
      std::vector<std::size_t> row;
      for (std::size_t i = 1; i < x.tok.size(); ++i) row.push_back(parse_index(x, x.tok[i]));
      rows.push_back(std::move(row));
    } else {
      fail(x, "unexpected '" + x.tok[0] + "' in a group table");
    }
  }
  return GroupTable(name, std::move(rows), std::move(labels));
}

}  // namespace

std::string file_kind(std::string_view text) {
  Reader r(text);
  expect(r, "ydlcat", 2);
  return expect(r, "kind", 2).tok[1];
}

std::string serialize_hopf(const HopfAlgebra& h) {
  std::ostringstream out;
  write_header(out, "hopf", h.field());
  write_hopf_body(out, h);
  return out.str();
}

HopfPtr parse_hopf(std::string_view text) {
  Reader r(text);
  FieldCtx f = read_header(r, "hopf");
  return read_hopf_body(r, f, "");
}

std::string serialize_module(const YdlModule& m) {
  std::ostringstream out;
  write_header(out, "module", m.field());
  out << "begin hopf h1\n";
  write_hopf_body(out, *m.h1());
  out << "end hopf\nbegin hopf h2\n";
  write_hopf_body(out, *m.h2());
  out << "end hopf\n";
  const auto& c = m.component();
  write_matrix(out, "alpha", c.alpha().matrix());
  write_matrix(out, "beta", c.beta().matrix());
  write_matrix(out, "gamma", c.gamma().matrix());
  write_matrix(out, "delta", c.delta().matrix());
  out << "dim " << m.dim() << '\n';
  write_matrix(out, "left_action", m.left_action());
  write_matrix(out, "right_action", m.right_action());
  write_matrix(out, "left_coaction", m.left_coaction());
  write_matrix(out, "right_coaction", m.right_coaction());
  return out.str();
}

YdlModule parse_module(std::string_view text) {
  Reader r(text);
  FieldCtx f = read_header(r, "module");
  HopfPtr h1 = read_embedded_hopf(r, f, "h1");
  HopfPtr h2 = read_embedded_hopf(r, f, "h2");
  std::map<std::string, Matrix> mats;
  std::optional<std::size_t> dim;
  while (!r.done()) {
    const Line& l = r.peek();
    if (l.tok[0] == "dim" && l.tok.size() == 2) {
      dim = parse_index(l, l.tok[1]);
      r.next();
      continue;
    }
    if (l.tok[0] != "matrix") fail(l, "unexpected '" + l.tok[0] + "' in a module");
    auto [name, m] = read_matrix(r, f);
    if (!mats.emplace(name, std::move(m)).second) fail(l, "duplicate matrix " + name);
  }
  if (!dim) throw ParseError(r.last_line(), "module without 'dim'");
  for (const char* need : {"alpha", "beta", "gamma", "delta", "left_action", "right_action",
                           "left_coaction", "right_coaction"}) {
    if (!mats.count(need)) throw ParseError(r.last_line(), std::string("module without matrix ") + need);
  }
  AutQuadruple c(HopfAutomorphism::create(h1, mats.at("alpha")),
                 HopfAutomorphism::create(h1, mats.at("beta")),
                 HopfAutomorphism::create(h2, mats.at("gamma")),
                 HopfAutomorphism::create(h2, mats.at("delta")));
  return YdlModule(std::move(c), *dim, mats.at("left_action"), mats.at("right_action"),
                   mats.at("left_coaction"), mats.at("right_coaction"));
}

std::string serialize_quadruple(const InvolutionQuadruple& q) {
  std::ostringstream out;
  write_header(out, "quadruple", q.f1.field());
  write_matrix(out, "f1", q.f1);
  write_matrix(out, "g1", q.g1);
  write_matrix(out, "f2", q.f2);
  write_matrix(out, "g2", q.g2);
  return out.str();
}

InvolutionQuadruple parse_quadruple(std::string_view text) {
  Reader r(text);
  FieldCtx f = read_header(r, "quadruple");
  std::map<std::string, Matrix> mats;
  while (!r.done()) {
    const Line& l = r.peek();
    auto [name, m] = read_matrix(r, f);
    if (!mats.emplace(name, std::move(m)).second) fail(l, "duplicate matrix " + name);
  }
  for (const char* need : {"f1", "g1", "f2", "g2"}) {
    if (!mats.count(need)) throw ParseError(r.last_line(), std::string("quadruple without matrix ") + need);
  }
  return {mats.at("f1"), mats.at("g1"), mats.at("f2"), mats.at("g2")};
}

std::string serialize_graded(const GradedBimodule& m) {
  std::ostringstream out;
  write_header(out, "graded", m.field());
  write_group(out, "g1", m.g1());
  write_group(out, "g2", m.g2());
  const auto& x = m.component();
  auto perm = [&](const char* name, const GroupAut& a) {
    out << "perm " << name;
    for (auto v : a.images()) out << ' ' << v;
    out << '\n';
  };
  perm("alpha", x.alpha);
  perm("beta", x.beta);
  perm("gamma", x.gamma);
  perm("delta", x.delta);
  for (const auto& p : m.pieces()) {
    out << "component " << p.g << ' ' << p.h;
    for (auto b : p.basis) out << ' ' << b;
    out << '\n';
  }
  auto blocks = [&](const char* side, const std::vector<std::vector<Block>>& all) {
    for (std::size_t e = 0; e < all.size(); ++e)
      for (std::size_t c = 0; c < all[e].size(); ++c) {
        const Block& b = all[e][c];
        out << "block " << side << ' ' << e << ' ' << c << ' ' << b.target << ' '
            << b.map.rows() << ' ' << b.map.cols() << '\n';
        write_entries(out, b.map);
      }
  };
  blocks("left", m.left_blocks());
  blocks("right", m.right_blocks());
  return out.str();
}

GradedBimodule parse_graded(std::string_view text) {
  Reader r(text);
  FieldCtx f = read_header(r, "graded");
  GroupTable g1 = read_group(r, "g1");
  GroupTable g2 = read_group(r, "g2");
  std::map<std::string, std::vector<std::size_t>> perms;
  std::vector<GradedComponent> pieces;
  struct RawBlock {
    bool left;
    std::size_t element, source;
    Block block;
    std::size_t line;
  };
  std::vector<RawBlock> raw;
  while (!r.done()) {
    const Line& l = r.next();
    const std::string& key = l.tok[0];
    if (key == "perm" && l.tok.size() >= 2) {
      std::vector<std::size_t> images;
      for (std::size_t i = 2; i < l.tok.size(); ++i) images.push_back(parse_index(l, l.tok[i]));
      if (!perms.emplace(l.tok[1], std::move(images)).second) fail(l, "duplicate perm " + l.tok[1]);
    } else if (key == "component" && l.tok.size() >= 3) {
      GradedComponent p{parse_index(l, l.tok[1]), parse_index(l, l.tok[2]), {}};
      for (std::size_t i = 3; i < l.tok.size(); ++i) p.basis.push_back(parse_index(l, l.tok[i]));
      pieces.push_back(std::move(p));
    } else if (key == "block" && l.tok.size() == 7) {
      if (l.tok[1] != "left" && l.tok[1] != "right") fail(l, "block side must be left or right");
      const std::size_t rows = parse_index(l, l.tok[5]), cols = parse_index(l, l.tok[6]);
      const std::size_t line = l.number;
      RawBlock b{l.tok[1] == "left", parse_index(l, l.tok[2]), parse_index(l, l.tok[3]),
                 {parse_index(l, l.tok[4]), Matrix(f, 0, 0)}, line};
      b.block.map = read_entries(r, f, rows, cols);
      raw.push_back(std::move(b));
    } else {
      fail(l, "unexpected '" + key + "' in a graded module");
    }
  }
  for (const char* need : {"alpha", "beta", "gamma", "delta"}) {
    if (!perms.count(need)) throw ParseError(r.last_line(), std::string("graded module without perm ") + need);
  }
  GroupQuadruple x{g1, g2, GroupAut(g1, perms.at("alpha")), GroupAut(g1, perms.at("beta")),
                   GroupAut(g2, perms.at("gamma")), GroupAut(g2, perms.at("delta"))};
  const std::size_t nc = pieces.size();
  std::vector<std::vector<std::optional<Block>>> left(g1.order(),
                                                      std::vector<std::optional<Block>>(nc));
  std::vector<std::vector<std::optional<Block>>> right(g2.order(),
                                                       std::vector<std::optional<Block>>(nc));
  for (auto& b : raw) {
    auto& side = b.left ? left : right;
    if (b.element >= side.size() || b.source >= nc) {
      throw DimensionMismatch("line " + std::to_string(b.line) +
                              ": block refers to a missing element or component");
    }
    if (side[b.element][b.source]) {
      throw DimensionMismatch("line " + std::to_string(b.line) + ": duplicate block");
    }
    side[b.element][b.source] = std::move(b.block);
  }
  auto finish = [&](std::vector<std::vector<std::optional<Block>>>& side, const char* name) {
    std::vector<std::vector<Block>> out(side.size());
    for (std::size_t e = 0; e < side.size(); ++e)
      for (std::size_t c = 0; c < nc; ++c) {
        if (!side[e][c]) {
          throw DimensionMismatch(std::string("missing ") + name + " block for element " +
                                  std::to_string(e) + ", component " + std::to_string(c));
        }
        out[e].push_back(std::move(*side[e][c]));
      }
    return out;
  };
  return GradedBimodule(f, std::move(x), std::move(pieces), finish(left, "left"),
                        finish(right, "right"));
}

}  // namespace ydlcat
