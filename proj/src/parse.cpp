#include "hext/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "hext/library.hpp"

namespace hext {

namespace {

struct Token {
  enum Kind { Name, Int, LParen, RParen, Colon, Comma, Json, End } kind = End;
  std::string text;
  long long value = 0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) {
      t.kind = Token::End;
      return t;
    }
    char c = src_[pos_];
    if (c == '(') return advance(t, Token::LParen, 1);
    if (c == ')') return advance(t, Token::RParen, 1);
    if (c == ':') return advance(t, Token::Colon, 1);
    if (c == ',') return advance(t, Token::Comma, 1);
    if (c == '[') {  // JSON array payload for 'table'
      size_t start = pos_;
      int depth = 0;
      while (pos_ < src_.size()) {
        if (src_[pos_] == '[') ++depth;
        if (src_[pos_] == ']') --depth;
        bump();
        if (depth == 0) break;
      }
      if (depth != 0) throw ParseError(t.line, t.col, "closing ']'");
      t.kind = Token::Json;
      t.text = src_.substr(start, pos_ - start);
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        bump();
      t.kind = Token::Int;
      t.text = src_.substr(start, pos_ - start);
      t.value = std::stoll(t.text);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '^'))
        bump();
      t.kind = Token::Name;
      t.text = src_.substr(start, pos_ - start);
      return t;
    }
    throw ParseError(line_, col_, "a group expression");
  }

 private:
  Token advance(Token t, Token::Kind k, size_t n) {
    t.kind = k;
    t.text = src_.substr(pos_, n);
    for (size_t i = 0; i < n; ++i) bump();
    return t;
  }
  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      bump();
  }
  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class GroupParser {
 public:
  explicit GroupParser(const std::string& src) : lex_(src) { shift(); }

  GroupPtr parse() {
    GroupPtr g = product();
    if (cur_.kind != Token::End) throw ParseError(cur_.line, cur_.col, "end of input");
    return g;
  }

 private:
  void shift() { cur_ = lex_.next(); }

  bool is_name(const char* s) const {
    if (cur_.kind != Token::Name) return false;
    std::string a = cur_.text;
    std::transform(a.begin(), a.end(), a.begin(), ::tolower);
    return a == s;
  }

  GroupPtr product() {
    GroupPtr g = atom();
    while (is_name("x")) {
      shift();
      GroupPtr h = atom();
      g = direct_product(g, h).group;
    }
    return g;
  }

  GroupPtr atom() {
    if (cur_.kind == Token::Name) {
      if (is_name("z")) {
        shift();
        if (cur_.kind != Token::Int)
          throw ParseError(cur_.line, cur_.col, "a cyclic order after 'Z'");
        long long m = cur_.value;
        shift();
        return cyclic_group(static_cast<int>(m));
      }
      if (is_name("perm")) {
        shift();
        return permutation_atom();
      }
      if (is_name("table")) {
        shift();
        if (cur_.kind != Token::Json)
          throw ParseError(cur_.line, cur_.col, "a JSON table after 'table'");
        nlohmann::json arr = nlohmann::json::parse(cur_.text, nullptr, false);
        if (arr.is_discarded() || !arr.is_array())
          throw ParseError(cur_.line, cur_.col, "a JSON array of rows");
        std::vector<std::vector<int>> table;
        for (const auto& row : arr) {
          if (!row.is_array()) throw ParseError(cur_.line, cur_.col, "a row array");
          table.emplace_back();
          for (const auto& v : row) table.back().push_back(v.get<int>());
        }
        shift();
        return FinGroup::from_table(table, "table");
      }
      std::string name = cur_.text;
      int line = cur_.line, col = cur_.col;
      shift();
      try {
        return library_group(name);
      } catch (const UserError&) {
        // "Z6" style names resolve through the cyclic constructor.
        if ((name[0] == 'Z' || name[0] == 'z') && name.size() > 1 &&
            std::all_of(name.begin() + 1, name.end(), [](char c) {
              return std::isdigit(static_cast<unsigned char>(c));
            }))
          return cyclic_group(std::stoi(name.substr(1)));
        throw ParseError(line, col, "a known group name");
      }
    }
    throw ParseError(cur_.line, cur_.col, "a group atom");
  }

  GroupPtr permutation_atom() {
    if (cur_.kind != Token::Int)
      throw ParseError(cur_.line, cur_.col, "a degree after 'perm'");
    int degree = static_cast<int>(cur_.value);
    shift();
    if (cur_.kind != Token::Colon) throw ParseError(cur_.line, cur_.col, "':'");
    shift();
    std::vector<std::vector<int>> gens;
    for (;;) {
      gens.push_back(cycles(degree));
      if (cur_.kind != Token::Comma) break;
      shift();
    }
    return from_permutation_generators(degree, gens, "perm" + std::to_string(degree));
  }

  // One generator: a sequence of cycles, composed right to left.
  std::vector<int> cycles(int degree) {
    if (cur_.kind != Token::LParen)
      throw ParseError(cur_.line, cur_.col, "'(' opening a cycle");
    std::vector<int> perm(degree);
    for (int i = 0; i < degree; ++i) perm[i] = i;
    std::vector<std::vector<int>> cycs;
    while (cur_.kind == Token::LParen) {
      shift();
      std::vector<int> cyc;
      while (cur_.kind == Token::Int) {
        if (cur_.value < 0 || cur_.value >= degree)
          throw ParseError(cur_.line, cur_.col, "a point below the degree");
        cyc.push_back(static_cast<int>(cur_.value));
        shift();
      }
      if (cur_.kind != Token::RParen)
        throw ParseError(cur_.line, cur_.col, "')' closing the cycle");
      shift();
      if (cyc.empty()) throw ParseError(cur_.line, cur_.col, "a non-empty cycle");
      cycs.push_back(std::move(cyc));
    }
    for (auto it = cycs.rbegin(); it != cycs.rend(); ++it) {
      std::vector<int> one(degree);
      for (int i = 0; i < degree; ++i) one[i] = i;
      for (size_t i = 0; i < it->size(); ++i)
        one[(*it)[i]] = (*it)[(i + 1) % it->size()];
      std::vector<int> next(degree);
      for (int i = 0; i < degree; ++i) next[i] = perm[one[i]];
      perm = std::move(next);
    }
    return perm;
  }

  Lexer lex_;
  Token cur_;
};

}  // namespace

GroupPtr parse_group(const std::string& text) {
  return GroupParser(text).parse();
}

std::string subset_string(Mask s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (s & (Mask{1} << i)) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
  return out + "}";
}

Mask parse_subset(const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(),
                         [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
          t.end());
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw ValidationError("subset key must look like {0,1}: " + text);
  Mask m = 0;
  std::string body = t.substr(1, t.size() - 2);
  if (body.empty()) return 0;
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      throw ValidationError("bad subset entry in " + text);
    int i = std::stoi(part);
    if (i < 0 || i >= 31) throw ValidationError("subset index out of range");
    m |= Mask{1} << i;
  }
  return m;
}

namespace {

struct QuotientExpr {
  bool is_quotient = false;
  std::vector<std::string> normal_names;  // empty with is_quotient => "top"
};

// "top" or "top / N0*N1..." (whitespace-tolerant); nullopt for anything else.
std::optional<QuotientExpr> parse_quotient_expr(const std::string& s) {
  std::string t = s;
  t.erase(std::remove_if(t.begin(), t.end(),
                         [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
          t.end());
  if (t.compare(0, 3, "top") != 0) return std::nullopt;
  QuotientExpr q;
  q.is_quotient = true;
  if (t.size() == 3) return q;
  if (t[3] != '/') return std::nullopt;
  std::stringstream ss(t.substr(4));
  std::string part;
  while (std::getline(ss, part, '*')) {
    if (part.empty()) throw ValidationError("empty normal-subgroup name in: " + s);
    q.normal_names.push_back(part);
  }
  if (q.normal_names.empty())
    throw ValidationError("quotient expression needs at least one name: " + s);
  return q;
}

GroupPtr vertex_group_spec(const nlohmann::json& v) {
  if (v.is_string()) return parse_group(v.get<std::string>());
  if (v.is_object() && v.contains("table")) {
    std::vector<std::vector<int>> table;
    for (const auto& row : v.at("table")) {
      table.emplace_back();
      for (const auto& x : row) table.back().push_back(x.get<int>());
    }
    return FinGroup::from_table(table, v.value("label", std::string("table")));
  }
  throw ValidationError("vertex must be a group spec string or a table object");
}

GroupHom explicit_arrow(const nlohmann::json& spec, GroupPtr dom, GroupPtr cod,
                        const std::string& key) {
  if (spec.is_array()) {
    std::vector<int> m;
    for (const auto& v : spec) m.push_back(v.get<int>());
    if (static_cast<int>(m.size()) != dom->order())
      throw ValidationError("arrow " + key + " has wrong map length");
    return GroupHom(std::move(dom), std::move(cod), std::move(m));
  }
  if (spec.is_object()) {
    // Generator images, closed multiplicatively.
    std::vector<int> m(dom->order(), -1);
    m[dom->identity()] = cod->identity();
    for (auto it = spec.begin(); it != spec.end(); ++it) {
      int g = 0;
      try {
        g = std::stoi(it.key());
      } catch (const std::exception&) {
        throw ValidationError("arrow " + key + " has a non-numeric id key: " +
                              it.key());
      }
      int img = it.value().get<int>();
      if (g < 0 || g >= dom->order() || img < 0 || img >= cod->order())
        throw ValidationError("arrow " + key + " has ids out of range");
      if (m[g] >= 0 && m[g] != img)
        throw ValidationError("arrow " + key + " maps an id twice");
      m[g] = img;
    }
    for (bool grew = true; grew;) {
      grew = false;
      for (int a = 0; a < dom->order(); ++a) {
        if (m[a] < 0) continue;
        for (int b = 0; b < dom->order(); ++b) {
          if (m[b] < 0) continue;
          int p = dom->mul(a, b);
          int q = cod->mul(m[a], m[b]);
          if (m[p] < 0) {
            m[p] = q;
            grew = true;
          } else if (m[p] != q) {
            throw ValidationError("arrow " + key + " is not multiplicative");
          }
        }
      }
    }
    if (std::count(m.begin(), m.end(), -1) != 0)
      throw ValidationError("arrow " + key +
                            ": generator images do not determine the map");
    return GroupHom(std::move(dom), std::move(cod), std::move(m));
  }
  throw ValidationError("arrow " + key + " must be an array or an object");
}

}  // namespace

Cube parse_cube_document(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ValidationError("cube document must be an object");
  if (!doc.contains("dim")) throw ValidationError("cube document needs \"dim\"");
  int dim = doc.at("dim").get<int>();
  if (dim < 0 || dim > limits().dim_cap)
    throw DimCapExceeded("cube dimension out of range");
  Mask full = (Mask{1} << dim) - 1;
  const auto& vspecs = doc.at("vertices");

  auto vertex_spec = [&](Mask s) -> const nlohmann::json& {
    std::string key = subset_string(s);
    if (!vspecs.contains(key))
      throw ValidationError("missing vertex " + key);
    return vspecs.at(key);
  };

  // Top vertex first; named normal subgroups live in it.
  GroupPtr top = vertex_group_spec(vertex_spec(full));
  std::map<std::string, Subgroup> normals;
  if (doc.contains("normals")) {
    for (auto it = doc.at("normals").begin(); it != doc.at("normals").end(); ++it) {
      std::vector<int> gens;
      for (const auto& v : it.value()) gens.push_back(v.get<int>());
      Subgroup s = subgroup_generated(top, gens);
      if (!is_normal(s))
        throw ValidationError("named subgroup " + it.key() + " is not normal");
      normals.emplace(it.key(), std::move(s));
    }
  }

  // Vertices: either quotients of the top (tracked for canonical arrows) or
  // free-standing groups.
  std::vector<GroupPtr> verts(size_t{1} << dim);
  std::vector<std::optional<QuotientResult>> quots(size_t{1} << dim);
  std::vector<std::optional<Subgroup>> nulled(size_t{1} << dim);
  verts[full] = top;
  quots[full] = QuotientResult{top, identity_hom(top)};
  nulled[full] = trivial_subgroup(top);
  for (Mask s = 0; s < full; ++s) {
    const nlohmann::json& v = vertex_spec(s);
    std::optional<QuotientExpr> qe =
        v.is_string() ? parse_quotient_expr(v.get<std::string>()) : std::nullopt;
    if (qe) {
      Subgroup prod = trivial_subgroup(top);
      for (const std::string& name : qe->normal_names) {
        auto it = normals.find(name);
        if (it == normals.end())
          throw ValidationError("unknown normal subgroup: " + name);
        prod = setwise_product(prod, it->second);
      }
      QuotientResult q = prod.order() == 1
                             ? QuotientResult{top, identity_hom(top)}
                             : quotient(top, prod);
      verts[s] = q.group;
      quots[s] = std::move(q);
      nulled[s] = std::move(prod);
    } else {
      verts[s] = vertex_group_spec(v);
    }
  }

  std::map<std::pair<Mask, int>, GroupHom> covers;
  const nlohmann::json empty = nlohmann::json::object();
  const nlohmann::json& arrows = doc.contains("arrows") ? doc.at("arrows") : empty;
  for (Mask t = 1; t <= full; ++t)
    for (int i = 0; i < dim; ++i) {
      if (!(t & (Mask{1} << i))) continue;
      Mask s = t & ~(Mask{1} << i);
      std::string key = subset_string(t) + "->" + subset_string(s);
      if (arrows.contains(key)) {
        covers.emplace(std::make_pair(t, i),
                       explicit_arrow(arrows.at(key), verts[t], verts[s], key));
        continue;
      }
      if (quots[t] && quots[s]) {
        if (!subgroup_contains(*nulled[s], *nulled[t]))
          throw ValidationError("no canonical arrow " + key +
                                ": quotients are not nested");
        covers.emplace(std::make_pair(t, i),
                       induced_between_quotients(*quots[t], *quots[s],
                                                 identity_hom(top)));
        continue;
      }
      throw ValidationError("arrow " + key +
                            " must be given explicitly (vertices are not "
                            "quotients of the top)");
    }
  return Cube(dim, std::move(verts), std::move(covers));
}

Cube load_cube_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UserError("cannot open " + path);
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw ValidationError("invalid JSON in " + path);
  return parse_cube_document(doc);
}

nlohmann::json cube_to_document(const Cube& c) {
  nlohmann::json doc;
  doc["dim"] = c.dim();
  nlohmann::json verts = nlohmann::json::object();
  for (Mask s = 0; s <= c.full_mask(); ++s) {
    GroupPtr g = c.vertex(s);
    nlohmann::json table = nlohmann::json::array();
    for (int a = 0; a < g->order(); ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (int b = 0; b < g->order(); ++b) row.push_back(g->mul(a, b));
      table.push_back(std::move(row));
    }
    verts[subset_string(s)] = {{"label", g->label()}, {"table", std::move(table)}};
  }
  doc["vertices"] = std::move(verts);
  nlohmann::json arrows = nlohmann::json::object();
  for (Mask t = 1; t <= c.full_mask(); ++t)
    for (int i = 0; i < c.dim(); ++i) {
      if (!(t & (Mask{1} << i))) continue;
      Mask s = t & ~(Mask{1} << i);
      arrows[subset_string(t) + "->" + subset_string(s)] = c.cover(t, i).map;
    }
  doc["arrows"] = std::move(arrows);
  return doc;
}

nlohmann::json subgroup_json(const Subgroup& s) {
  return {{"order", s.order()},
          {"generators", minimal_generators_of(s)}};
}

}  // namespace hext
