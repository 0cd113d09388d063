#include "stalg/serialize.hpp"

#include <charconv>

#include "json.hpp"
#include "stalg/error.hpp"

namespace stalg {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Splits "1-0 x3" into a row and its multiplicity.
Row parse_row_line(std::string_view line, std::size_t line_no, std::size_t& width) {
  std::string_view body = line;
  Multiplicity mult = 1;
  if (auto sp = line.find_first_of(" \t"); sp != std::string_view::npos) {
    body = line.substr(0, sp);
    std::string_view suffix = trim(line.substr(sp));
    if (suffix.size() < 2 || suffix[0] != 'x') {
      throw ParseError(line_no, sp + 1, "expected multiplicity suffix 'xK'");
    }
    auto [ptr, ec] = std::from_chars(suffix.data() + 1, suffix.data() + suffix.size(), mult);
    if (ec != std::errc() || ptr != suffix.data() + suffix.size() || mult == 0) {
      throw ParseError(line_no, sp + 2, "invalid multiplicity");
    }
  }
  if (width == 0) {
    width = body.size();
  } else if (body.size() != width) {
    throw ParseError(line_no, 1, "row width " + std::to_string(body.size()) + " differs from " +
                                     std::to_string(width));
  }
  try {
    return {parse_row(body), mult};
  } catch (const ParseError& e) {
    throw ParseError(line_no, e.column(), e.message());
  }
}

}  // namespace

std::string to_rows_text(const StateVector& s, std::size_t width) {
  if (s.empty()) return "# empty\n";
  std::string out;
  for (const Row& r : s.rows()) {
    out += to_row_string(r.term, width);
    if (r.mult != 1) {
      out += " x";
      out += std::to_string(r.mult);
    }
    out += '\n';
  }
  return out;
}

ParsedRowBlocks parse_row_blocks(std::string_view text) {
  ParsedRowBlocks result;
  std::vector<Row> current;
  bool open = false;
  std::size_t line_no = 0;
  auto flush = [&] {
    if (open) result.vectors.emplace_back(std::move(current));
    current.clear();
    open = false;
  };
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') {
      // Marks a block that is the zero vector.
      if (line == "# empty") open = true;
      continue;
    }
    open = true;
    current.push_back(parse_row_line(line, line_no, result.width));
  }
  flush();
  return result;
}

ParsedRows parse_rows_text(std::string_view text) {
  auto blocks = parse_row_blocks(text);
  std::vector<Row> rows;
  for (const auto& v : blocks.vectors) rows.insert(rows.end(), v.rows().begin(), v.rows().end());
  return {StateVector(std::move(rows)), blocks.width};
}

std::string to_json(const StateVector& s, std::size_t universe) {
  if (s.max_var() > universe) throw Error(Errc::UniverseTooSmall, "to_json: universe too small");
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const Row& r : s.rows()) {
    nlohmann::ordered_json row;
    row["upper"] = r.term.upper();
    row["lower"] = r.term.lower();
    row["mult"] = r.mult;
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json doc;
  doc["universe"] = universe;
  doc["rows"] = std::move(rows);
  return doc.dump();
}

ParsedRows parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, e.byte, e.what());
  }
  try {
    ParsedRows out;
    out.width = doc.at("universe").get<std::size_t>();
    std::vector<Row> rows;
    for (const auto& row : doc.at("rows")) {
      auto upper = row.at("upper").get<IndexSet>();
      auto lower = row.at("lower").get<IndexSet>();
      Multiplicity mult = row.contains("mult") ? row.at("mult").get<Multiplicity>() : 1;
      TObject t = TObject::make(std::move(upper), std::move(lower));
      if ((!t.upper().empty() && t.upper().front() == 0) ||
          (!t.lower().empty() && t.lower().front() == 0)) {
        throw Error(Errc::InvalidArgument, "event ids start at 1");
      }
      if (t.is_null()) throw Error(Errc::InvalidArgument, "row with overlapping index sets");
      rows.push_back({std::move(t), mult});
    }
    out.vector = StateVector(std::move(rows));
    if (out.vector.max_var() > out.width) {
      throw Error(Errc::UniverseTooSmall, "row exceeds declared universe");
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, 1, e.what());
  }
}

}  // namespace stalg
