#ifndef GRIDNET_CSV_HPP
#define GRIDNET_CSV_HPP

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gridnet::csv {

/// One data row plus the 1-based line number it started on.
struct Row {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

/// Incremental CSV reader: comma separated, double-quote escaping,
/// '#'-prefixed comment lines and blank lines skipped.
class Reader {
public:
  explicit Reader(std::istream& in) : in_(in) {}

  /// Reads the next data row; returns nullopt at end of input.
  std::optional<Row> next();

private:
  static std::size_t count_unescaped_quotes(const std::string& s);

  std::istream& in_;
  std::size_t line_ = 0;
};

/// Splits a single CSV record. Throws ParseError on unterminated quotes.
std::vector<std::string> split_record(const std::string& record,
                                      std::size_t line);

/// Quotes a field if it contains a comma, quote or newline.
std::string escape_field(const std::string& field);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

/// Shortest decimal text that round-trips the value exactly.
std::string format_double(double value);

}  // namespace gridnet::csv

#endif
