#pragma once

// The textual definition format.  A document is a sequence of declarations
//
//   # comment lines attach to the next declaration
//   kind name {
//     key: value
//     key: [item, item, ...]
//     compose g f = h
//   }
//
// Lists may span lines.  serialize() emits declarations sorted by name, one
// blank line apart, lists on one line; parse(serialize(d)) == d and
// serialize(parse(t)) == t for any t already in that form.

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "conj/fincat/report.hpp"

namespace conjlib::cli {

class ParseError : public StructuralError {
 public:
  ParseError(int line, int column, std::string name, const std::string& message)
      : StructuralError(std::to_string(line) + ":" + std::to_string(column) + ": " + message +
                        (name.empty() ? "" : " (" + name + ")")),
        line(line),
        column(column),
        name(std::move(name)) {}
  int line, column;
  std::string name;
};

struct Entry {
  enum class Kind { scalar, list, compose };
  Kind kind = Kind::scalar;
  std::string key;                 // scalar, list
  std::string value;               // scalar
  std::vector<std::string> items;  // list; compose: {g, f, h}
  int line = 0, column = 0;

  friend bool operator==(const Entry& a, const Entry& b) {
    return a.kind == b.kind && a.key == b.key && a.value == b.value && a.items == b.items;
  }
};

struct Declaration {
  std::string kind, name;
  std::vector<std::string> comments;  // without the leading "# "
  std::vector<Entry> entries;
  int line = 0, column = 0;

  const Entry* find(std::string_view key) const {
    for (const auto& e : entries)
      if (e.kind != Entry::Kind::compose && e.key == key) return &e;
    return nullptr;
  }
  bool has(std::string_view key) const { return find(key) != nullptr; }

  friend bool operator==(const Declaration& a, const Declaration& b) {
    return a.kind == b.kind && a.name == b.name && a.comments == b.comments && a.entries == b.entries;
  }
};

struct DefinitionDocument {
  std::vector<Declaration> declarations;
  std::vector<std::string> trailing_comments;

  const Declaration* find(std::string_view name) const {
    for (const auto& d : declarations)
      if (d.name == name) return &d;
    return nullptr;
  }
  bool empty() const { return declarations.empty(); }

  // Equality up to declaration order.
  friend bool operator==(const DefinitionDocument& a, const DefinitionDocument& b) {
    if (a.declarations.size() != b.declarations.size() || a.trailing_comments != b.trailing_comments) return false;
    for (const auto& d : a.declarations) {
      auto o = b.find(d.name);
      if (!o || !(*o == d)) return false;
    }
    return true;
  }
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::string collapse_spaces(std::string_view s) {
  std::string out;
  bool space = false;
  for (char c : trim(s)) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = true;
      continue;
    }
    if (space && !out.empty()) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

inline bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || std::string_view("_.*!'+-^<>=").find(c) != std::string_view::npos;
}

inline bool valid_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_name_char);
}

// Splits on commas outside (), [] and {}.
inline std::optional<std::vector<std::string>> split_top(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (depth < 0) return std::nullopt;
    if (c == ',' && depth == 0) {
      out.push_back(collapse_spaces(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) return std::nullopt;
  auto last = collapse_spaces(cur);
  if (!last.empty() || !out.empty()) out.push_back(last);
  return out;
}

inline int bracket_balance(std::string_view s) {
  int d = 0;
  for (char c : s) {
    if (c == '[') ++d;
    if (c == ']') --d;
  }
  return d;
}

}  // namespace detail

inline std::vector<std::string> split_items(std::string_view s) {
  auto v = detail::split_top(s);
  if (!v) throw StructuralError("unbalanced brackets in '" + std::string(s) + "'");
  return *v;
}

inline DefinitionDocument parse_document(std::string_view text) {
  DefinitionDocument doc;
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else if (c != '\r') {
        cur += c;
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }
  std::vector<std::string> pending;
  Declaration* open = nullptr;
  auto column_of = [&](std::size_t li) {
    const auto& l = lines[li];
    std::size_t c = 0;
    while (c < l.size() && std::isspace(static_cast<unsigned char>(l[c]))) ++c;
    return int(c + 1);
  };
  auto fail = [&](std::size_t li, const std::string& name, const std::string& msg) -> ParseError {
    return ParseError(int(li + 1), li < lines.size() ? column_of(li) : 1, name, msg);
  };
  auto parse_entry = [&](std::size_t& li, std::string body) {
    Entry e;
    e.line = int(li + 1);
    e.column = column_of(li);
    if (body.rfind("compose ", 0) == 0) {
      std::istringstream in(body.substr(8));
      std::string g, f, eq, h, extra;
      in >> g >> f >> eq >> h;
      if (eq != "=" || h.empty() || (in >> extra)) throw fail(li, open->name, "expected 'compose g f = h'");
      e.kind = Entry::Kind::compose;
      e.items = {g, f, h};
      open->entries.push_back(std::move(e));
      return;
    }
    auto colon = body.find(':');
    if (colon == std::string::npos) throw fail(li, open->name, "expected 'key: value'");
    e.key = detail::trim(body.substr(0, colon));
    if (!detail::valid_name(e.key)) throw fail(li, e.key, "malformed key");
    if (open->find(e.key)) throw fail(li, open->name + "." + e.key, "duplicate key");
    auto value = detail::trim(body.substr(colon + 1));
    if (!value.empty() && value[0] == '[') {
      const auto opened = li;
      while (detail::bracket_balance(value) > 0) {
        if (++li >= lines.size()) throw fail(opened, open->name + "." + e.key, "unterminated list");
        value += " " + detail::trim(lines[li]);
      }
      if (value.back() != ']' || detail::bracket_balance(value) != 0) throw fail(li, open->name, "malformed list");
      auto items = detail::split_top(std::string_view(value).substr(1, value.size() - 2));
      if (!items) throw fail(li, open->name, "unbalanced brackets in list");
      e.kind = Entry::Kind::list;
      e.items = std::move(*items);
      for (const auto& it : e.items)
        if (it.empty()) throw fail(li, open->name + "." + e.key, "empty list item");
    } else {
      if (value.empty()) throw fail(li, open->name + "." + e.key, "missing value");
      e.kind = Entry::Kind::scalar;
      e.value = detail::collapse_spaces(value);
    }
    open->entries.push_back(std::move(e));
  };

  for (std::size_t li = 0; li < lines.size(); ++li) {
    auto t = detail::trim(lines[li]);
    if (t.empty()) continue;
    if (t[0] == '#') {
      auto c = t.substr(1);
      if (!c.empty() && c[0] == ' ') c = c.substr(1);
      if (open) throw fail(li, open->name, "comments are not allowed inside a declaration");
      pending.push_back(c);
      continue;
    }
    if (open) {
      if (t == "}") {
        open = nullptr;
        continue;
      }
      parse_entry(li, t);
      continue;
    }
    // header: kind name {   [entry]   [}]
    auto brace = t.find('{');
    if (brace == std::string::npos) throw fail(li, "", "expected 'kind name {'");
    std::istringstream head(t.substr(0, brace));
    std::string kind, name, extra;
    head >> kind >> name;
    if (kind.empty() || name.empty() || (head >> extra)) throw fail(li, name, "expected 'kind name {'");
    if (!detail::valid_name(kind)) throw fail(li, kind, "malformed declaration kind");
    if (!detail::valid_name(name)) throw fail(li, name, "malformed name");
    if (doc.find(name)) throw fail(li, name, "duplicate name");
    Declaration d;
    d.kind = kind;
    d.name = name;
    d.comments = std::move(pending);
    pending.clear();
    d.line = int(li + 1);
    d.column = column_of(li);
    doc.declarations.push_back(std::move(d));
    open = &doc.declarations.back();
    auto rest = detail::trim(t.substr(brace + 1));
    if (rest.empty()) continue;
    bool closes = rest.back() == '}';
    if (closes) rest = detail::trim(rest.substr(0, rest.size() - 1));
    if (!rest.empty()) parse_entry(li, rest);
    if (closes) open = nullptr;
  }
  if (open) throw ParseError(open->line, open->column, open->name, "unterminated declaration");
  doc.trailing_comments = std::move(pending);
  return doc;
}

inline std::string serialize(const Entry& e) {
  switch (e.kind) {
    case Entry::Kind::scalar: return e.key + ": " + e.value;
    case Entry::Kind::compose: return "compose " + e.items[0] + " " + e.items[1] + " = " + e.items[2];
    case Entry::Kind::list: {
      std::string s = e.key + ": [";
      for (std::size_t i = 0; i < e.items.size(); ++i) s += (i ? ", " : "") + e.items[i];
      return s + "]";
    }
  }
  return {};
}

inline std::string serialize(const Declaration& d) {
  std::string s;
  for (const auto& c : d.comments) s += c.empty() ? "#\n" : "# " + c + "\n";
  s += d.kind + " " + d.name + " {\n";
  for (const auto& e : d.entries) s += "  " + serialize(e) + "\n";
  return s + "}\n";
}

inline std::string serialize(const DefinitionDocument& doc) {
  std::vector<const Declaration*> ds;
  for (const auto& d : doc.declarations) ds.push_back(&d);
  std::sort(ds.begin(), ds.end(), [](auto a, auto b) { return a->name < b->name; });
  std::string s;
  for (std::size_t i = 0; i < ds.size(); ++i) s += (i ? "\n" : "") + serialize(*ds[i]);
  if (!doc.trailing_comments.empty()) {
    if (!s.empty()) s += "\n";
    for (const auto& c : doc.trailing_comments) s += c.empty() ? "#\n" : "# " + c + "\n";
  }
  return s;
}

// Builders for emitted declarations.
inline Entry scalar_entry(std::string key, std::string value) {
  Entry e;
  e.kind = Entry::Kind::scalar;
  e.key = std::move(key);
  e.value = std::move(value);
  return e;
}
inline Entry list_entry(std::string key, std::vector<std::string> items) {
  Entry e;
  e.kind = Entry::Kind::list;
  e.key = std::move(key);
  e.items = std::move(items);
  return e;
}

}  // namespace conjlib::cli
