#include "gridnet/grid_data.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "gridnet/csv.hpp"
#include "gridnet/errors.hpp"

namespace gridnet {

namespace {

int parse_year(const std::string& s, std::size_t line, const char* field) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(std::string("field '") + field +
                         "': expected a year, got '" + s + "'",
                     line);
  return value;
}

double parse_number(const std::string& s, std::size_t line,
                    const char* field) {
  try {
    std::size_t pos = 0;
    double value = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return value;
  } catch (const std::exception&) {
    throw ParseError(std::string("field '") + field +
                         "': expected a number, got '" + s + "'",
                     line);
  }
}

std::optional<int> parse_opt_year(const std::string& s, std::size_t line,
                                  const char* field) {
  if (s.empty()) return std::nullopt;
  return parse_year(s, line, field);
}

std::optional<double> parse_opt_number(const std::string& s, std::size_t line,
                                       const char* field) {
  if (s.empty()) return std::nullopt;
  return parse_number(s, line, field);
}

void expect_header(const std::optional<csv::Row>& row,
                   const std::vector<std::string>& expected,
                   const char* which) {
  if (!row)
    throw ParseError(std::string(which) + ": empty input, header expected");
  if (row->fields != expected) {
    std::string want;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) want += ',';
      want += expected[i];
    }
    throw ParseError(std::string(which) + ": header must be '" + want + "'",
                     row->line);
  }
}

void check_interval(const std::string& id, int commissioned,
                    const std::optional<int>& decommissioned,
                    std::size_t line) {
  if (decommissioned && *decommissioned < commissioned)
    throw ParseError("element '" + id + "': decommissioned year " +
                         std::to_string(*decommissioned) +
                         " precedes commissioned year " +
                         std::to_string(commissioned),
                     line);
}

std::string year_or_empty(const std::optional<int>& y) {
  return y ? std::to_string(*y) : std::string();
}

std::string number_or_empty(const std::optional<double>& v) {
  return v ? csv::format_double(*v) : std::string();
}

}  // namespace

std::string to_string(ElementKind kind) {
  return kind == ElementKind::node ? "node" : "edge";
}

ElementKind element_kind_from_string(const std::string& s) {
  if (s == "node") return ElementKind::node;
  if (s == "edge") return ElementKind::edge;
  throw std::invalid_argument("unknown element kind '" + s + "'");
}

ParseResult parse_dataset(std::istream& node_file, std::istream& edge_file) {
  ParseResult result;
  auto& ds = result.dataset;

  csv::Reader nodes(node_file);
  expect_header(nodes.next(),
                {"id", "name", "commissioned", "decommissioned", "voltage_kv",
                 "lat", "lon"},
                "nodes");
  std::unordered_map<std::string, std::size_t> node_by_id;
  while (auto row = nodes.next()) {
    if (row->fields.size() != 7)
      throw ParseError("nodes: expected 7 fields, got " +
                           std::to_string(row->fields.size()),
                       row->line);
    NodeRecord rec;
    rec.id = row->fields[0];
    rec.name = row->fields[1];
    if (rec.id.empty()) throw ParseError("field 'id': empty", row->line);
    rec.commissioned =
        parse_year(row->fields[2], row->line, "commissioned");
    rec.decommissioned =
        parse_opt_year(row->fields[3], row->line, "decommissioned");
    rec.voltage_kv =
        parse_opt_number(row->fields[4], row->line, "voltage_kv");
    if (rec.voltage_kv && *rec.voltage_kv <= 0)
      throw ParseError("field 'voltage_kv': must be positive", row->line);
    rec.lat = parse_opt_number(row->fields[5], row->line, "lat");
    rec.lon = parse_opt_number(row->fields[6], row->line, "lon");
    check_interval(rec.id, rec.commissioned, rec.decommissioned, row->line);
    if (!node_by_id.emplace(rec.id, ds.nodes.size()).second)
      throw ParseError("duplicate node id '" + rec.id + "'", row->line);
    ds.nodes.push_back(std::move(rec));
  }
  if (ds.nodes.empty()) throw ParseError("nodes: no node records");

  csv::Reader edges(edge_file);
  expect_header(
      edges.next(),
      {"id", "from_id", "to_id", "commissioned", "decommissioned",
       "voltage_kv"},
      "edges");
  std::unordered_set<std::string> edge_ids;
  while (auto row = edges.next()) {
    if (row->fields.size() != 6)
      throw ParseError("edges: expected 6 fields, got " +
                           std::to_string(row->fields.size()),
                       row->line);
    EdgeRecord rec;
    rec.id = row->fields[0];
    rec.from_id = row->fields[1];
    rec.to_id = row->fields[2];
    if (rec.id.empty()) throw ParseError("field 'id': empty", row->line);
    rec.commissioned =
        parse_year(row->fields[3], row->line, "commissioned");
    rec.decommissioned =
        parse_opt_year(row->fields[4], row->line, "decommissioned");
    rec.voltage_kv =
        parse_opt_number(row->fields[5], row->line, "voltage_kv");
    if (rec.voltage_kv && *rec.voltage_kv <= 0)
      throw ParseError("field 'voltage_kv': must be positive", row->line);
    check_interval(rec.id, rec.commissioned, rec.decommissioned, row->line);
    if (rec.from_id == rec.to_id)
      throw ParseError("edge '" + rec.id + "': self-loop at '" + rec.from_id +
                           "'",
                       row->line);
    if (!edge_ids.insert(rec.id).second)
      throw ParseError("duplicate edge id '" + rec.id + "'", row->line);

    for (const auto* endpoint : {&rec.from_id, &rec.to_id}) {
      auto it = node_by_id.find(*endpoint);
      if (it == node_by_id.end())
        throw ParseError("edge '" + rec.id +
                             "': dangling endpoint '" + *endpoint + "'",
                         row->line);
      // The edge's active interval must lie inside the endpoint's.
      const NodeRecord& node = ds.nodes[it->second];
      const bool starts_early = rec.commissioned < node.commissioned;
      const bool outlives =
          node.decommissioned &&
          (!rec.decommissioned || *rec.decommissioned > *node.decommissioned);
      if (starts_early || outlives)
        throw ParseError("edge '" + rec.id + "': active outside endpoint '" +
                             *endpoint + "' service interval",
                         row->line);
    }
    ds.edges.push_back(std::move(rec));
  }

  // Parallel lines are legal but collapse to one topological edge in any
  // snapshot; overlapping service years are worth a warning.
  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>>
      by_pair;
  for (std::size_t i = 0; i < ds.edges.size(); ++i) {
    auto key = std::minmax(ds.edges[i].from_id, ds.edges[i].to_id);
    by_pair[{key.first, key.second}].push_back(i);
  }
  for (const auto& [pair, idxs] : by_pair) {
    for (std::size_t a = 0; a < idxs.size(); ++a) {
      for (std::size_t b = a + 1; b < idxs.size(); ++b) {
        const auto& ea = ds.edges[idxs[a]];
        const auto& eb = ds.edges[idxs[b]];
        const int start = std::max(ea.commissioned, eb.commissioned);
        const bool overlap =
            (!ea.decommissioned || start < *ea.decommissioned) &&
            (!eb.decommissioned || start < *eb.decommissioned);
        if (overlap)
          result.warnings.push_back(
              "parallel lines '" + ea.id + "' and '" + eb.id + "' between '" +
              pair.first + "' and '" + pair.second +
              "' overlap in service years; snapshots collapse them to one "
              "edge");
      }
    }
  }

  int first = ds.nodes.front().commissioned;
  int last = first;
  auto widen = [&](int commissioned, const std::optional<int>& decommissioned) {
    first = std::min(first, commissioned);
    last = std::max(last, commissioned);
    if (decommissioned) last = std::max(last, *decommissioned);
  };
  for (const auto& n : ds.nodes) widen(n.commissioned, n.decommissioned);
  for (const auto& e : ds.edges) widen(e.commissioned, e.decommissioned);
  ds.first_year = first;
  ds.last_year = last;
  return result;
}

ParseResult load_dataset(const std::string& dir) {
  const auto node_path = std::filesystem::path(dir) / "nodes.csv";
  const auto edge_path = std::filesystem::path(dir) / "edges.csv";
  std::ifstream node_file(node_path);
  if (!node_file)
    throw ParseError("cannot open '" + node_path.string() + "'");
  std::ifstream edge_file(edge_path);
  if (!edge_file)
    throw ParseError("cannot open '" + edge_path.string() + "'");
  return parse_dataset(node_file, edge_file);
}

void write_nodes_csv(std::ostream& out, const TemporalDataset& ds) {
  csv::write_row(out, {"id", "name", "commissioned", "decommissioned",
                       "voltage_kv", "lat", "lon"});
  for (const auto& n : ds.nodes) {
    csv::write_row(out, {n.id, n.name, std::to_string(n.commissioned),
                         year_or_empty(n.decommissioned),
                         number_or_empty(n.voltage_kv),
                         number_or_empty(n.lat), number_or_empty(n.lon)});
  }
}

void write_edges_csv(std::ostream& out, const TemporalDataset& ds) {
  csv::write_row(out, {"id", "from_id", "to_id", "commissioned",
                       "decommissioned", "voltage_kv"});
  for (const auto& e : ds.edges) {
    csv::write_row(out, {e.id, e.from_id, e.to_id,
                         std::to_string(e.commissioned),
                         year_or_empty(e.decommissioned),
                         number_or_empty(e.voltage_kv)});
  }
}

void save_dataset(const std::string& dir, const TemporalDataset& ds) {
  std::filesystem::create_directories(dir);
  const auto node_path = std::filesystem::path(dir) / "nodes.csv";
  const auto edge_path = std::filesystem::path(dir) / "edges.csv";
  std::ofstream node_file(node_path);
  if (!node_file)
    throw ParseError("cannot write '" + node_path.string() + "'");
  write_nodes_csv(node_file, ds);
  std::ofstream edge_file(edge_path);
  if (!edge_file)
    throw ParseError("cannot write '" + edge_path.string() + "'");
  write_edges_csv(edge_file, ds);
}

Snapshot snapshot_at(const TemporalDataset& ds, int year) {
  std::vector<std::string> active_ids;
  for (const auto& n : ds.nodes)
    if (n.active_in(year)) active_ids.push_back(n.id);
  if (active_ids.empty()) {
    if (year < ds.first_year)
      throw EmptyGraphError("year " + std::to_string(year) +
                            " precedes the dataset (first element in " +
                            std::to_string(ds.first_year) + ")");
    throw EmptyGraphError("no element active in year " +
                          std::to_string(year));
  }
  std::sort(active_ids.begin(), active_ids.end());

  auto index_of = [&](const std::string& id) -> int {
    auto it = std::lower_bound(active_ids.begin(), active_ids.end(), id);
    if (it == active_ids.end() || *it != id) return -1;
    return static_cast<int>(it - active_ids.begin());
  };

  std::set<EdgeIx> edge_set;
  for (const auto& e : ds.edges) {
    if (!e.active_in(year)) continue;
    const int a = index_of(e.from_id);
    const int b = index_of(e.to_id);
    // Validation guarantees active endpoints for an active edge.
    EdgeIx ix{std::min(a, b), std::max(a, b)};
    edge_set.insert(ix);
  }
  return Snapshot::build(std::move(active_ids),
                         {edge_set.begin(), edge_set.end()}, year);
}

}  // namespace gridnet
