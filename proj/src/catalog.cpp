#include "coprime/catalog.hpp"

#include <fstream>
#include <sstream>

#include "coprime/errors.hpp"

namespace coprime {

namespace {

std::string trim(const std::string& s) {
  size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

uint64_t parse_u64(const std::string& s, size_t line) {
  if (s.empty()) throw catalog_parse_error("expected a number", line);
  uint64_t value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw catalog_parse_error("bad number '" + s + "'", line);
    value = value * 10 + static_cast<uint64_t>(c - '0');
    if (value > 1'000'000'000ull) throw catalog_parse_error("number too large", line);
  }
  return value;
}

void parse_complete_directive(const std::string& args, size_t line, Catalog& catalog) {
  std::istringstream in(args);
  std::string token;
  while (in >> token) {
    size_t dash = token.find('-');
    if (dash == std::string::npos) {
      catalog.complete_orders.insert(parse_u64(token, line));
    } else {
      uint64_t lo = parse_u64(token.substr(0, dash), line);
      uint64_t hi = parse_u64(token.substr(dash + 1), line);
      if (lo > hi || hi - lo > 10'000) throw catalog_parse_error("bad range '" + token + "'", line);
      for (uint64_t v = lo; v <= hi; ++v) catalog.complete_orders.insert(v);
    }
  }
}

std::pair<uint64_t, uint64_t> parse_sgid(const std::string& value, size_t line) {
  std::string body = trim(value);
  if (body.size() < 5 || body.front() != '(' || body.back() != ')') {
    throw catalog_parse_error("sgid must look like (order,index)", line);
  }
  body = body.substr(1, body.size() - 2);
  size_t comma = body.find(',');
  if (comma == std::string::npos) {
    throw catalog_parse_error("sgid must look like (order,index)", line);
  }
  return {parse_u64(trim(body.substr(0, comma)), line),
          parse_u64(trim(body.substr(comma + 1)), line)};
}

}  // namespace

const CatalogEntry* Catalog::find(const std::string& label) const {
  for (const CatalogEntry& e : entries) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

Catalog parse_catalog(std::istream& in) {
  Catalog catalog;
  std::string raw;
  size_t line_no = 0;
  std::set<std::string> labels;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '!') {
      std::istringstream directive(line.substr(1));
      std::string name;
      directive >> name;
      if (name != "complete") {
        throw catalog_parse_error("unknown directive '!" + name + "'", line_no);
      }
      std::string rest;
      std::getline(directive, rest);
      parse_complete_directive(rest, line_no, catalog);
      continue;
    }

    // Split on '|', but not inside a quoted string (presentation specs
    // contain '|' themselves).
    std::vector<std::string> fields;
    {
      std::string current;
      bool in_quotes = false;
      for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (c == '"') in_quotes = !in_quotes;
        if (c == '\\' && in_quotes && i + 1 < line.size()) {
          current += c;
          current += line[++i];
          continue;
        }
        if (c == '|' && !in_quotes) {
          fields.push_back(trim(current));
          current.clear();
        } else {
          current += c;
        }
      }
      if (in_quotes) throw catalog_parse_error("unterminated quoted string", line_no);
      fields.push_back(trim(current));
    }
    if (fields.size() < 3) {
      throw catalog_parse_error("entry needs label | spec | order=N", line_no);
    }

    CatalogEntry entry;
    entry.line = line_no;
    entry.label = fields[0];
    if (entry.label.empty()) throw catalog_parse_error("empty label", line_no);
    if (!labels.insert(entry.label).second) throw duplicate_label(entry.label, line_no);

    try {
      entry.spec = parse_group_spec(fields[1]);
    } catch (const syntax_error& e) {
      throw catalog_parse_error(std::string("bad spec: ") + e.what(), line_no);
    }

    bool have_order = false;
    for (size_t i = 2; i < fields.size(); ++i) {
      const std::string& field = fields[i];
      size_t eq = field.find('=');
      if (eq == std::string::npos) {
        throw catalog_parse_error("expected key=value, got '" + field + "'", line_no);
      }
      std::string key = trim(field.substr(0, eq));
      std::string value = trim(field.substr(eq + 1));
      if (key == "order") {
        entry.declared_order = parse_u64(value, line_no);
        have_order = true;
      } else if (key == "expect") {
        entry.expected_end_vertices = parse_u64(value, line_no);
      } else if (key == "sgid") {
        entry.small_group_id = parse_sgid(value, line_no);
      } else if (key == "note") {
        entry.note = value;
      } else {
        throw catalog_parse_error("unknown field '" + key + "'", line_no);
      }
    }
    if (!have_order) throw catalog_parse_error("missing order=N", line_no);
    if (entry.declared_order == 0) throw catalog_parse_error("order must be >= 1", line_no);

    catalog.entries.push_back(std::move(entry));
  }
  return catalog;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open catalog file '" + path + "'");
  return parse_catalog(in);
}

FiniteGroup realize_entry(const CatalogEntry& entry, size_t limit) {
  FiniteGroup group = build_group(entry.spec, limit);
  if (group.order() != entry.declared_order) {
    throw error("catalog entry '" + entry.label + "': declared order " +
                std::to_string(entry.declared_order) + " but realized order " +
                std::to_string(group.order()));
  }
  group.set_label(entry.label);
  return group;
}

}  // namespace coprime
