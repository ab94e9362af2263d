#include "gridnet/csv.hpp"

#include <charconv>

#include "gridnet/errors.hpp"

namespace gridnet::csv {

std::optional<Row> Reader::next() {
  std::string raw;
  while (std::getline(in_, raw)) {
    ++line_;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) continue;
    if (raw[0] == '#') continue;

    // A quoted field may span physical lines; keep appending until the
    // quotes balance.
    std::size_t start_line = line_;
    while (count_unescaped_quotes(raw) % 2 != 0) {
      std::string more;
      if (!std::getline(in_, more)) {
        throw ParseError("unterminated quoted field", start_line);
      }
      ++line_;
      if (!more.empty() && more.back() == '\r') more.pop_back();
      raw += '\n';
      raw += more;
    }
    return Row{split_record(raw, start_line), start_line};
  }
  return std::nullopt;
}

std::size_t Reader::count_unescaped_quotes(const std::string& s) {
  std::size_t n = 0;
  for (char c : s)
    if (c == '"') ++n;
  return n;
}

std::vector<std::string> split_record(const std::string& record,
                                      std::size_t line) {
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  for (std::size_t i = 0; i < record.size(); ++i) {
    char c = record[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < record.size() && record[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (in_quotes) throw ParseError("unterminated quoted field", line);
  fields.push_back(std::move(field));
  return fields;
}

std::string escape_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << escape_field(fields[i]);
  }
  out << '\n';
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace gridnet::csv
