#include "fca/io.hpp"

#include <sstream>

#include "json.hpp"

namespace fca {

namespace {

/// Splits into lines; requires the text to end with a newline.
std::vector<std::string> split_lines(const std::string& text) {
  if (text.empty() || text.back() != '\n')
    throw ParseError(text.empty() ? 1 : std::count(text.begin(), text.end(), '\n') + 1,
                     1, "missing trailing newline");
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  return lines;
}

std::size_t parse_count(const std::vector<std::string>& lines, std::size_t idx) {
  if (idx >= lines.size()) throw ParseError(idx + 1, 1, "unexpected end of input");
  const std::string& s = lines[idx];
  if (s.empty()) throw ParseError(idx + 1, 1, "expected a count");
  std::size_t value = 0;
  for (std::size_t c = 0; c < s.size(); ++c) {
    if (s[c] < '0' || s[c] > '9')
      throw ParseError(idx + 1, c + 1, "expected a digit");
    value = value * 10 + static_cast<std::size_t>(s[c] - '0');
  }
  return value;
}

const std::string& need_line(const std::vector<std::string>& lines, std::size_t idx,
                             const char* what) {
  if (idx >= lines.size())
    throw ParseError(lines.size() + 1, 1, std::string("missing ") + what);
  return lines[idx];
}

}  // namespace

Context parse_cxt(const std::string& text) {
  auto lines = split_lines(text);
  if (need_line(lines, 0, "format marker") != "B")
    throw ParseError(1, 1, "expected the format marker 'B'");
  need_line(lines, 1, "context name line");
  std::size_t g = parse_count(lines, 2);
  std::size_t m = parse_count(lines, 3);
  if (!need_line(lines, 4, "separator line").empty())
    throw ParseError(5, 1, "expected a blank separator line");

  std::size_t at = 5;
  std::vector<std::string> objects, attributes;
  for (std::size_t i = 0; i < g; ++i) objects.push_back(need_line(lines, at++, "object name"));
  for (std::size_t i = 0; i < m; ++i)
    attributes.push_back(need_line(lines, at++, "attribute name"));

  std::vector<std::vector<bool>> inc(g, std::vector<bool>(m));
  for (std::size_t i = 0; i < g; ++i) {
    const std::string& row = need_line(lines, at, "incidence row");
    if (row.size() != m)
      throw ParseError(at + 1, row.size() + 1, "incidence row has the wrong length");
    for (std::size_t j = 0; j < m; ++j) {
      if (row[j] == 'X') inc[i][j] = true;
      else if (row[j] == '.') inc[i][j] = false;
      else throw ParseError(at + 1, j + 1, "expected 'X' or '.'");
    }
    ++at;
  }
  if (at != lines.size())
    throw ParseError(at + 1, 1, "unexpected trailing content");
  return Context(std::move(objects), std::move(attributes), inc);
}

std::string emit_cxt(const Context& ctx) {
  std::ostringstream out;
  out << "B\n\n" << ctx.object_count() << "\n" << ctx.attribute_count() << "\n\n";
  for (const auto& o : ctx.objects()) out << o << "\n";
  for (const auto& a : ctx.attributes()) out << a << "\n";
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
      out << (ctx.incident(g, m) ? 'X' : '.');
    out << "\n";
  }
  return out.str();
}

namespace {

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, e.byte, e.what());
  }
}

std::vector<std::string> string_list(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw ParseError(1, 1, std::string("missing or non-array '") + key + "'");
  std::vector<std::string> out;
  for (const auto& v : j[key]) {
    if (!v.is_string())
      throw ParseError(1, 1, std::string("non-string entry in '") + key + "'");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

Context parse_context_json(const std::string& text) {
  nlohmann::json j = parse_json(text);
  auto objects = string_list(j, "objects");
  auto attributes = string_list(j, "attributes");
  if (!j.contains("incidence") || !j["incidence"].is_array() ||
      j["incidence"].size() != objects.size())
    throw ParseError(1, 1, "'incidence' must list one row per object");
  std::vector<std::vector<bool>> inc;
  for (const auto& row : j["incidence"]) {
    if (!row.is_array() || row.size() != attributes.size())
      throw ParseError(1, 1, "incidence row has the wrong length");
    std::vector<bool> r;
    for (const auto& v : row) {
      if (!v.is_boolean()) throw ParseError(1, 1, "incidence entries must be booleans");
      r.push_back(v.get<bool>());
    }
    inc.push_back(std::move(r));
  }
  return Context(std::move(objects), std::move(attributes), inc);
}

std::string emit_context_json(const Context& ctx) {
  nlohmann::json j;
  j["objects"] = ctx.objects();
  j["attributes"] = ctx.attributes();
  nlohmann::json inc = nlohmann::json::array();
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
      row.push_back(ctx.incident(g, m));
    inc.push_back(std::move(row));
  }
  j["incidence"] = std::move(inc);
  return j.dump(2) + "\n";
}

namespace {

int name_index(const std::vector<std::string>& names, const std::string& name) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<int> name_map(const nlohmann::json& j, const char* key,
                          const std::vector<std::string>& src,
                          const std::vector<std::string>& tgt) {
  if (!j.contains(key) || !j[key].is_object())
    throw ParseError(1, 1, std::string("missing or non-object '") + key + "'");
  std::vector<int> table(src.size(), -1);
  for (const auto& [from, to] : j[key].items()) {
    int s = name_index(src, from);
    if (s < 0) throw ParseError(1, 1, "'" + from + "' is not a source name");
    if (!to.is_string())
      throw ParseError(1, 1, std::string("non-string value in '") + key + "'");
    int t = name_index(tgt, to.get<std::string>());
    if (t < 0)
      throw ParseError(1, 1, "'" + to.get<std::string>() + "' is not a target name");
    table[static_cast<std::size_t>(s)] = t;
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] < 0)
      throw ParseError(1, 1, "'" + src[i] + "' has no image: the map must be total");
  return table;
}

}  // namespace

MappingPair parse_pair_json(const std::string& text, const Context& k,
                            const Context& l) {
  nlohmann::json j = parse_json(text);
  return MappingPair(k, l, name_map(j, "alpha", k.objects(), l.objects()),
                     name_map(j, "beta", k.attributes(), l.attributes()));
}

std::string emit_pair_json(const MappingPair& p) {
  nlohmann::json a = nlohmann::json::object(), b = nlohmann::json::object();
  for (std::size_t g = 0; g < p.source.object_count(); ++g)
    a[p.source.objects()[g]] = p.target.objects()[p.a(g)];
  for (std::size_t m = 0; m < p.source.attribute_count(); ++m)
    b[p.source.attributes()[m]] = p.target.attributes()[p.b(m)];
  nlohmann::json j;
  j["alpha"] = std::move(a);
  j["beta"] = std::move(b);
  return j.dump(2) + "\n";
}

std::string emit_dot(const ConceptLattice& cl) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < cl.size(); ++i) {
    std::string objs, attrs;
    for (std::size_t g = 0; g < cl.context.object_count(); ++g)
      if (cl.gamma[g] == static_cast<int>(i))
        objs += (objs.empty() ? "" : " ") + cl.context.objects()[g];
    for (std::size_t m = 0; m < cl.context.attribute_count(); ++m)
      if (cl.mu[m] == static_cast<int>(i))
        attrs += (attrs.empty() ? "" : " ") + cl.context.attributes()[m];
    out << "  c" << i << " [label=\"" << attrs << "\\n" << objs << "\"];\n";
  }
  for (std::size_t x = 0; x < cl.size(); ++x)
    for (std::size_t y = 0; y < cl.size(); ++y)
      if (cl.lattice.poset().covers(x, y))
        out << "  c" << x << " -> c" << y << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace fca
