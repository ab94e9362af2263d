#ifndef GRIDNET_GRID_DATA_HPP
#define GRIDNET_GRID_DATA_HPP

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gridnet/graph.hpp"

namespace gridnet {

/// What an element can be; also selects removal targets in attack runs.
enum class ElementKind { node, edge };

std::string to_string(ElementKind kind);
ElementKind element_kind_from_string(const std::string& s);

/// A substation. Active in year y iff commissioned <= y < decommissioned
/// (an absent decommission year means still active).
struct NodeRecord {
  std::string id;
  std::string name;
  int commissioned = 0;
  std::optional<int> decommissioned;
  std::optional<double> voltage_kv;
  std::optional<double> lat;
  std::optional<double> lon;

  bool active_in(int year) const {
    return commissioned <= year &&
           (!decommissioned || year < *decommissioned);
  }
  friend bool operator==(const NodeRecord&, const NodeRecord&) = default;
};

/// A power line between two substations; same activity convention.
struct EdgeRecord {
  std::string id;
  std::string from_id;
  std::string to_id;
  int commissioned = 0;
  std::optional<int> decommissioned;
  std::optional<double> voltage_kv;

  bool active_in(int year) const {
    return commissioned <= year &&
           (!decommissioned || year < *decommissioned);
  }
  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// The full temporal database: every element that ever existed, with its
/// commission/decommission years. Validated so that an edge is never
/// active while one of its endpoints is inactive. Immutable after
/// construction and safe to share across threads.
struct TemporalDataset {
  std::vector<NodeRecord> nodes;
  std::vector<EdgeRecord> edges;
  int first_year = 0;  // min commissioned over all elements
  int last_year = 0;   // max year mentioned by any element

  friend bool operator==(const TemporalDataset&,
                         const TemporalDataset&) = default;
};

struct ParseResult {
  TemporalDataset dataset;
  std::vector<std::string> warnings;
};

/// Parses nodes.csv / edges.csv streams (schemas below) into a validated
/// dataset. Row order is irrelevant to the result. Throws ParseError with
/// the offending line and field on malformed rows, duplicate ids, dangling
/// endpoints, inverted intervals, self-loops, or an edge outliving an
/// endpoint. Warnings flag parallel lines with overlapping service years.
///
///   nodes.csv: id,name,commissioned,decommissioned,voltage_kv,lat,lon
///   edges.csv: id,from_id,to_id,commissioned,decommissioned,voltage_kv
///
/// Trailing optional columns may be empty; an empty decommissioned means
/// still active. Lines starting with '#' are ignored.
ParseResult parse_dataset(std::istream& node_file, std::istream& edge_file);

/// Opens <dir>/nodes.csv and <dir>/edges.csv; ParseError names the path
/// when a file is missing.
ParseResult load_dataset(const std::string& dir);

void write_nodes_csv(std::ostream& out, const TemporalDataset& ds);
void write_edges_csv(std::ostream& out, const TemporalDataset& ds);

/// Writes nodes.csv and edges.csv under dir (created if needed).
void save_dataset(const std::string& dir, const TemporalDataset& ds);

/// The graph of all elements active in `year`: nodes with
/// commissioned <= year < decommissioned, and the active edges between
/// them. Parallel active lines collapse to one edge. Throws
/// EmptyGraphError when no element is active (e.g. a year before the
/// dataset starts).
Snapshot snapshot_at(const TemporalDataset& ds, int year);

}  // namespace gridnet

#endif
