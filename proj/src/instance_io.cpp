#include "ohg/instance_io.hpp"

#include <charconv>
#include "json.hpp"
#include <sstream>

namespace ohg {

using nlohmann::json;

namespace {

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte is 1-based and points one past the offending character.
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError("JSON syntax error at " + line_col(text, at) + ": " + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + ": missing field '" + key + "'");
  return *it;
}

std::vector<std::string> string_list(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) {
      throw ParseError(path + "[" + std::to_string(i) + "]: expected a string");
    }
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

std::int64_t integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path + ": expected an integer");
  return j.get<std::int64_t>();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw ParseError("CSV line " + std::to_string(line_no) + ": unterminated quote");
  cells.push_back(std::move(cur));
  return cells;
}

std::int64_t parse_entry(const std::string& cell, std::size_t line_no) {
  std::int64_t v = 0;
  const char* end = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(cell.data(), end, v);
  if (ec != std::errc{} || ptr != end || cell.empty()) {
    throw ParseError("CSV line " + std::to_string(line_no) + ": '" + cell +
                     "' is not an integer");
  }
  return v;
}

}  // namespace

HypergraphData parse_instance_data(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");
  const auto version = integer(field(doc, "format_version", "document"), "format_version");
  if (version != kInstanceFormatVersion) {
    throw ParseError("format_version: unsupported version " + std::to_string(version));
  }
  HypergraphData d;
  d.vertices = string_list(field(doc, "vertices", "document"), "vertices");
  d.edges = string_list(field(doc, "edges", "document"), "edges");
  const json& incs = field(doc, "incidences", "document");
  if (!incs.is_array()) throw ParseError("incidences: expected an array");
  for (std::size_t i = 0; i < incs.size(); ++i) {
    const std::string path = "incidences[" + std::to_string(i) + "]";
    const json& r = incs[i];
    if (!r.is_object()) throw ParseError(path + ": expected an object");
    LabeledIncidence li;
    const json& v = field(r, "v", path);
    const json& e = field(r, "e", path);
    if (!v.is_string()) throw ParseError(path + ".v: expected a string");
    if (!e.is_string()) throw ParseError(path + ".e: expected a string");
    li.vertex = v.get<std::string>();
    li.edge = e.get<std::string>();
    li.mult_index = integer(field(r, "k", path), path + ".k");
    const auto sign = integer(field(r, "sign", path), path + ".sign");
    if (sign != 1 && sign != -1) {
      throw ParseError(path + ".sign: must be +1 or -1, got " + std::to_string(sign));
    }
    li.sign = static_cast<int>(sign);
    d.incidences.push_back(std::move(li));
  }
  return d;
}

OrientedHypergraph parse_instance(std::string_view text) {
  return OrientedHypergraph::from_data(parse_instance_data(text));
}

std::string serialize_instance(const OrientedHypergraph& g) {
  auto str_list = [](std::span<const std::string> xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ", ";
      out += json(xs[i]).dump();
    }
    return out + "]";
  };
  std::ostringstream os;
  os << "{\n";
  os << "  \"format_version\": " << kInstanceFormatVersion << ",\n";
  os << "  \"vertices\": " << str_list(g.vertices()) << ",\n";
  os << "  \"edges\": " << str_list(g.edges()) << ",\n";
  os << "  \"incidences\": [";
  const auto incs = g.incidences();
  for (std::size_t i = 0; i < incs.size(); ++i) {
    const auto& inc = incs[i];
    os << (i ? ",\n" : "\n") << "    {\"v\": " << json(g.vertices()[inc.vertex]).dump()
       << ", \"e\": " << json(g.edges()[inc.edge]).dump() << ", \"k\": " << inc.mult_index
       << ", \"sign\": " << to_int(inc.sign) << "}";
  }
  os << (incs.empty() ? "]\n" : "\n  ]\n");
  os << "}\n";
  return os.str();
}

std::string serialize_validation_report(const ValidationReport& report) {
  json out = json::array();
  for (const auto& issue : report) {
    json j = {{"kind", to_string(issue.kind)}, {"message", issue.message}, {"labels", issue.labels}};
    if (issue.incidence_index) {
      j["field"] = "incidences[" + std::to_string(*issue.incidence_index) + "]";
    }
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

SwitchingFunction parse_switching_function(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("switching function: expected a JSON object");
  SwitchingFunction theta;
  for (const auto& [label, value] : doc.items()) {
    const auto s = integer(value, label);
    if (s != 1 && s != -1) {
      throw ParseError(label + ": switching value must be +1 or -1, got " + std::to_string(s));
    }
    theta.emplace(label, s > 0 ? Sign::positive : Sign::negative);
  }
  return theta;
}

std::string serialize_switching_function(const SwitchingFunction& theta) {
  json out = json::object();
  for (const auto& [label, s] : theta) out[label] = to_int(s);
  return out.dump(2) + "\n";
}

std::string serialize_matrix(const LabeledMatrix& m, MatrixFormat format) {
  if (format == MatrixFormat::json) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
      entries.push_back(std::move(row));
    }
    json out = {{"rows", m.row_labels()}, {"cols", m.col_labels()}, {"entries", entries}};
    return out.dump() + "\n";
  }
  std::string out;
  for (const auto& c : m.col_labels()) out += "," + csv_cell(c);
  out += "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += csv_cell(m.row_labels()[r]);
    for (std::size_t c = 0; c < m.cols(); ++c) out += "," + std::to_string(m(r, c));
    out += "\n";
  }
  return out;
}

LabeledMatrix parse_matrix(std::string_view text, MatrixFormat format) {
  if (format == MatrixFormat::json) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("matrix: expected a JSON object");
    LabeledMatrix m(string_list(field(doc, "rows", "matrix"), "rows"),
                    string_list(field(doc, "cols", "matrix"), "cols"));
    const json& entries = field(doc, "entries", "matrix");
    if (!entries.is_array() || entries.size() != m.rows()) {
      throw ParseError("entries: expected " + std::to_string(m.rows()) + " rows");
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const std::string path = "entries[" + std::to_string(r) + "]";
      if (!entries[r].is_array() || entries[r].size() != m.cols()) {
        throw ParseError(path + ": expected " + std::to_string(m.cols()) + " entries");
      }
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m(r, c) = integer(entries[r][c], path + "[" + std::to_string(c) + "]");
      }
    }
    return m;
  }

  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        if (!cur.empty() && cur.back() == '\r') cur.pop_back();
        lines.push_back(std::move(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) lines.push_back(std::move(cur));
  }
  if (lines.empty()) throw ParseError("CSV: missing header row");
  auto header = split_csv_line(lines[0], 1);
  if (!header.front().empty()) throw ParseError("CSV line 1: corner cell must be empty");
  std::vector<std::string> cols(header.begin() + 1, header.end());
  std::vector<std::string> row_labels;
  std::vector<std::vector<std::int64_t>> values;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = split_csv_line(lines[i], i + 1);
    if (cells.size() != cols.size() + 1) {
      throw ParseError("CSV line " + std::to_string(i + 1) + ": expected " +
                       std::to_string(cols.size() + 1) + " cells, got " +
                       std::to_string(cells.size()));
    }
    row_labels.push_back(cells[0]);
    std::vector<std::int64_t> row;
    for (std::size_t c = 1; c < cells.size(); ++c) row.push_back(parse_entry(cells[c], i + 1));
    values.push_back(std::move(row));
  }
  LabeledMatrix m(std::move(row_labels), std::move(cols));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = values[r][c];
  return m;
}

}  // namespace ohg
