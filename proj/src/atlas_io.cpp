#include "jetline/atlas_io.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

namespace jetline {

AtlasParseError::AtlasParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorKind::AtlasParseError, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

// A JSON document tree that remembers where each value started. nlohmann
// reports positions for syntax errors only, and the grammar also needs them
// for shape errors (wrong field, zero denominator, ...), so the reader is kept
// local and minimal: no floats, no exponents.
struct Node {
  enum class Type { Null, Bool, Integer, String, Array, Object };
  Type type = Type::Null;
  std::size_t line = 1;
  std::size_t column = 1;
  // Position of the field name when this node is an object member.
  std::size_t key_line = 0;
  std::size_t key_column = 0;
  std::string text;  // integer digits or string contents
  std::vector<Node> items;
  std::vector<std::pair<std::string, Node>> fields;
};

class Reader {
 public:
  explicit Reader(const std::string& s) : s_(s) {}

  Node document() {
    skip_ws();
    Node n = value();
    skip_ws();
    if (pos_ < s_.size()) fail("trailing characters after document");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw AtlasParseError(line_, col_, msg); }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r')) advance();
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  void keyword(const std::string& word) {
    if (s_.compare(pos_, word.size(), word) != 0) fail("unexpected token");
    for (std::size_t i = 0; i < word.size(); ++i) advance();
  }

  Node value() {
    Node n;
    n.line = line_;
    n.column = col_;
    const char c = peek();
    if (c == '{') {
      n.type = Node::Type::Object;
      advance();
      skip_ws();
      if (peek() == '}') {
        advance();
        return n;
      }
      while (true) {
        skip_ws();
        if (peek() != '"') fail("expected field name");
        const std::size_t key_line = line_;
        const std::size_t key_column = col_;
        std::string key = string_body();
        for (const auto& f : n.fields)
          if (f.first == key) throw AtlasParseError(key_line, key_column, "duplicate field \"" + key + "\"");
        skip_ws();
        expect(':');
        skip_ws();
        Node member = value();
        member.key_line = key_line;
        member.key_column = key_column;
        n.fields.emplace_back(std::move(key), std::move(member));
        skip_ws();
        if (peek() == ',') {
          advance();
          continue;
        }
        expect('}');
        return n;
      }
    }
    if (c == '[') {
      n.type = Node::Type::Array;
      advance();
      skip_ws();
      if (peek() == ']') {
        advance();
        return n;
      }
      while (true) {
        skip_ws();
        n.items.push_back(value());
        skip_ws();
        if (peek() == ',') {
          advance();
          continue;
        }
        expect(']');
        return n;
      }
    }
    if (c == '"') {
      n.type = Node::Type::String;
      n.text = string_body();
      return n;
    }
    if (c == '-' || (c >= '0' && c <= '9')) {
      n.type = Node::Type::Integer;
      if (c == '-') {
        n.text += c;
        advance();
      }
      if (!(peek() >= '0' && peek() <= '9')) fail("expected digit");
      while (peek() >= '0' && peek() <= '9') {
        n.text += peek();
        advance();
      }
      if (peek() == '.' || peek() == 'e' || peek() == 'E')
        throw AtlasParseError(n.line, n.column, "floating-point literals are not allowed; write [num, den]");
      return n;
    }
    if (c == 't' || c == 'f') {
      n.type = Node::Type::Bool;
      keyword(c == 't' ? "true" : "false");
      return n;
    }
    if (c == 'n') {
      keyword("null");
      return n;
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string string_body() {
    expect('"');
    std::string out;
    while (true) {
      if (pos_ >= s_.size()) fail("unterminated string");
      const char c = peek();
      if (c == '"') {
        advance();
        return out;
      }
      if (c == '\n') fail("newline in string");
      if (c == '\\') {
        advance();
        const char e = peek();
        switch (e) {
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case '/': out += '/'; break;
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          default: fail("unsupported escape sequence");
        }
        advance();
        continue;
      }
      out += c;
      advance();
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

[[noreturn]] void fail_at(const Node& n, const std::string& msg) { throw AtlasParseError(n.line, n.column, msg); }

const Node& as_array(const Node& n, const std::string& what, std::size_t size = 0) {
  if (n.type != Node::Type::Array) fail_at(n, what + " must be an array");
  if (size && n.items.size() != size) fail_at(n, what + " must have " + std::to_string(size) + " entries");
  return n;
}

std::string as_string(const Node& n, const std::string& what) {
  if (n.type != Node::Type::String) fail_at(n, what + " must be a string");
  return n.text;
}

// Known fields only; returns nullptr for an absent optional one.
const Node* field(const Node& obj, const std::string& key, bool required) {
  for (const auto& [k, v] : obj.fields)
    if (k == key) return &v;
  if (required) fail_at(obj, "missing field \"" + key + "\"");
  return nullptr;
}

void only_fields(const Node& obj, const std::string& what, std::initializer_list<const char*> allowed) {
  if (obj.type != Node::Type::Object) fail_at(obj, what + " must be an object");
  for (const auto& [k, v] : obj.fields) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw AtlasParseError(v.key_line, v.key_column, "unknown field \"" + k + "\" in " + what);
  }
}

std::string integer_text(const Node& n) {
  if (n.type == Node::Type::Integer) return n.text;
  if (n.type == Node::Type::String) {
    const std::string& t = n.text;
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i == t.size()) fail_at(n, "integer string is empty");
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') fail_at(n, "integer string must contain decimal digits only");
    return t;
  }
  fail_at(n, "expected an integer (or a string of decimal digits)");
}

Rational number(const Node& n) {
  as_array(n, "number", 2);
  const std::string num = integer_text(n.items[0]);
  const std::string den = integer_text(n.items[1]);
  const std::string digits = den[0] == '-' ? den.substr(1) : den;
  if (digits.find_first_not_of('0') == std::string::npos) fail_at(n.items[1], "zero denominator");
  return Rational::from_strings(num, den);
}

PointP1 point(const Node& n) {
  as_array(n, "sample point", 2);
  const Rational p = number(n.items[0]);
  const Rational q = number(n.items[1]);
  if (p.is_zero() && q.is_zero()) fail_at(n, "sample point [0 : 0]");
  return PointP1(p, q);
}

}  // namespace

Atlas parse_atlas(const std::string& text, const std::string& name) {
  const Node root = Reader(text).document();
  only_fields(root, "atlas", {"name", "charts", "transitions", "triples"});
  Atlas atlas;
  atlas.name = name;
  if (const Node* n = field(root, "name", false)) atlas.name = as_string(*n, "name");

  for (const Node& c : as_array(*field(root, "charts", true), "charts").items) {
    only_fields(c, "chart", {"id", "sample_points"});
    Chart chart;
    chart.id = as_string(*field(c, "id", true), "chart id");
    if (const Node* pts = field(c, "sample_points", false)) {
      for (const Node& p : as_array(*pts, "sample_points").items) chart.sample_points.push_back(point(p));
    }
    atlas.charts.push_back(std::move(chart));
  }

  if (const Node* ts = field(root, "transitions", false)) {
    for (const Node& t : as_array(*ts, "transitions").items) {
      only_fields(t, "transition", {"from", "to", "matrix"});
      Transition tr;
      tr.from = as_string(*field(t, "from", true), "from");
      tr.to = as_string(*field(t, "to", true), "to");
      const Node& m = as_array(*field(t, "matrix", true), "matrix", 2);
      const Node& r0 = as_array(m.items[0], "matrix row", 2);
      const Node& r1 = as_array(m.items[1], "matrix row", 2);
      tr.matrix = {number(r0.items[0]), number(r0.items[1]), number(r1.items[0]), number(r1.items[1])};
      atlas.transitions.push_back(std::move(tr));
    }
  }

  if (const Node* ts = field(root, "triples", false)) {
    for (const Node& t : as_array(*ts, "triples").items) {
      as_array(t, "triple", 3);
      atlas.triples.push_back({as_string(t.items[0], "triple entry"), as_string(t.items[1], "triple entry"),
                               as_string(t.items[2], "triple entry")});
    }
  }
  return atlas;
}

Atlas load_atlas(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AtlasParseError(0, 0, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_atlas(buf.str(), std::filesystem::path(path).stem().string());
}

namespace {

nlohmann::ordered_json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

nlohmann::ordered_json number_json(const Rational& r) {
  return nlohmann::ordered_json::array({integer_json(r.raw().get_num()), integer_json(r.raw().get_den())});
}

}  // namespace

std::string emit_atlas(const Atlas& atlas) {
  nlohmann::ordered_json j;
  j["name"] = atlas.name;
  j["charts"] = nlohmann::ordered_json::array();
  for (const auto& c : atlas.charts) {
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto& p : c.sample_points) pts.push_back(nlohmann::ordered_json::array({number_json(p.p()), number_json(p.q())}));
    j["charts"].push_back({{"id", c.id}, {"sample_points", std::move(pts)}});
  }
  j["transitions"] = nlohmann::ordered_json::array();
  for (const auto& t : atlas.transitions) {
    nlohmann::ordered_json m = nlohmann::ordered_json::array(
        {nlohmann::ordered_json::array({number_json(t.matrix[0]), number_json(t.matrix[1])}),
         nlohmann::ordered_json::array({number_json(t.matrix[2]), number_json(t.matrix[3])})});
    j["transitions"].push_back({{"from", t.from}, {"to", t.to}, {"matrix", std::move(m)}});
  }
  j["triples"] = nlohmann::ordered_json::array();
  for (const auto& t : atlas.triples) j["triples"].push_back(nlohmann::ordered_json::array({t.i, t.j, t.k}));
  return j.dump(2) + "\n";
}

std::string describe_atlas(const Atlas& atlas) {
  const AtlasValidation v = validate_atlas(atlas);
  std::ostringstream out;
  out << "atlas " << (atlas.name.empty() ? "unnamed" : atlas.name) << "\n";
  out << "charts: " << atlas.charts.size() << "\n";
  for (const auto& c : atlas.charts) {
    out << "  " << c.id << " (" << c.sample_points.size() << " sample points)\n";
  }
  out << "transitions: " << atlas.transitions.size() << "\n";
  for (const auto& t : atlas.transitions) {
    out << "  " << t.label() << " [[" << t.matrix[0] << ", " << t.matrix[1] << "], [" << t.matrix[2] << ", "
        << t.matrix[3] << "]] det = " << t.determinant() << "\n";
  }
  out << "triples: " << atlas.triples.size() << "\n";
  std::size_t failed = 0;
  for (const auto& c : v.checks) {
    if (c.pass) continue;
    ++failed;
    out << "  FAIL " << c.id << ": " << c.lhs << " != " << c.rhs << "\n";
  }
  out << "lift obstructions: " << v.obstructions.size() << "\n";
  for (const auto& o : v.obstructions) {
    out << "  " << o.triple.label() << ": product " << o.product << " = -(" << o.declared << ")\n";
  }
  out << "checks: " << v.checks.size() << ", failed: " << failed << "\n";
  out << (v.valid() ? "valid" : "invalid") << "\n";
  return out.str();
}

nlohmann::ordered_json describe_atlas_json(const Atlas& atlas) {
  const AtlasValidation v = validate_atlas(atlas);
  nlohmann::ordered_json j;
  j["name"] = atlas.name;
  j["charts"] = atlas.charts.size();
  j["transitions"] = atlas.transitions.size();
  j["triples"] = atlas.triples.size();
  nlohmann::ordered_json dets = nlohmann::ordered_json::object();
  for (const auto& t : atlas.transitions) dets[t.label()] = number_json(t.determinant());
  j["determinants"] = std::move(dets);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : v.checks) {
    nlohmann::ordered_json rec = {{"id", c.id}, {"pass", c.pass}};
    if (!c.pass) rec["witness"] = {{"lhs", c.lhs}, {"rhs", c.rhs}};
    checks.push_back(std::move(rec));
  }
  j["checks"] = std::move(checks);
  nlohmann::ordered_json obstructions = nlohmann::ordered_json::array();
  for (const auto& o : v.obstructions) {
    obstructions.push_back({{"triple", o.triple.label()}, {"product", o.product}, {"declared", o.declared}});
  }
  j["lift_obstructions"] = std::move(obstructions);
  j["valid"] = v.valid();
  return j;
}

}  // namespace jetline
