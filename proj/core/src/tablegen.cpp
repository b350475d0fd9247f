#include "qeccf/tablegen.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "qeccf/error.hpp"
#include "qeccf/parallel.hpp"

namespace qeccf {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

const char* yes_no(bool b) { return b ? "Yes" : "No"; }

bool is_zero_label(const std::string& l) { return !l.empty() && l[0] == 'O'; }

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> header_for(const Table& t) {
  std::vector<std::string> h{"Sl.", "components", "is_clifford", "in_A", "dim",
                             "detectable", "wt1", "wt2", "distance"};
  if (t.table_convention) h.push_back("is_clifford_table_convention");
  return h;
}

std::vector<std::string> cells(const TableRow& r, bool table_convention) {
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("n/a"); };
  std::vector<std::string> c{std::to_string(r.sl), components_label(r.labels), yes_no(r.is_clifford),
                             yes_no(r.in_A), std::to_string(r.dim), std::to_string(r.detectable),
                             opt(r.wt1), opt(r.wt2), r.distance};
  if (table_convention) c.push_back(r.table_convention ? yes_no(*r.table_convention) : "n/a");
  return c;
}

}  // namespace

std::string components_label(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? ";" : "") + labels[i];
  return out;
}

TableRow analyze_row(const Prepared& p, const std::vector<int>& slots, const std::vector<std::string>& labels,
                     bool table_convention, const Tol& tol) {
  const TransformAssignment assign = make_assignment(p, slots, labels);
  const Inversion inv = invert(assign, p.cs, tol);
  CodeAnalysis a = detectable_set(inv.projector, p.e, tol, 1);
  a.assignment = assign;
  classify(a, p.cs, inv.t, table_convention, tol);

  TableRow r;
  r.labels = labels;
  r.is_clifford = a.is_clifford_of_S;
  r.in_A = a.in_A_of_S;
  r.table_convention = a.table_convention;
  r.dim = a.dim_code;
  r.detectable = a.detectable.size();
  if (p.e.is_pauli()) {
    r.wt1 = a.wt_detect.count(1) ? a.wt_detect.at(1).detected : 0;
    r.wt2 = a.wt_detect.count(2) ? a.wt_detect.at(2).detected : 0;
  }
  r.distance = a.distance_label();
  return r;
}

Table run_prepared(const Prepared& p, const Scenario& s, int threads) {
  const std::vector<std::string>& values = s.values.empty() ? default_values() : s.values;
  if (s.slots.empty()) throw Error(Error::Kind::kDomain, "scenario has no slots");
  for (int slot : s.slots)
    for (const auto& v : values) value_matrix(v, p.cs.constituents.at(static_cast<std::size_t>(slot)).dim);

  std::vector<std::vector<std::string>> tuples;
  std::vector<std::size_t> digit(s.slots.size(), 0);
  while (true) {
    std::vector<std::string> labels;
    for (std::size_t d : digit) labels.push_back(values[d]);
    if (!std::all_of(labels.begin(), labels.end(), is_zero_label)) tuples.push_back(std::move(labels));
    std::size_t k = digit.size();
    while (k > 0 && ++digit[k - 1] == values.size()) digit[--k] = 0;
    if (k == 0) break;
  }

  Table t;
  t.name = s.name;
  t.table_convention = s.table_convention;
  t.rows.resize(tuples.size());
  parallel_for(tuples.size(), threads, [&](std::size_t i) {
    t.rows[i] = analyze_row(p, s.slots, tuples[i], s.table_convention);
    t.rows[i].sl = static_cast<int>(i + 1);
  });
  return t;
}

Table run_scenario(const Scenario& s, int threads) { return run_prepared(prepare(s), s, threads); }

std::string to_csv(const Table& t) {
  std::ostringstream os;
  const auto h = header_for(t);
  for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
  os << "\n";
  for (const auto& r : t.rows) {
    const auto c = cells(r, t.table_convention);
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "\n";
  }
  return os.str();
}

std::string to_markdown(const Table& t) {
  std::ostringstream os;
  std::vector<std::string> h{"Sl.", "Transform components", "Is Clifford code of S?", "In A(S)?", "Dimension",
                             "Size of detectable set", "Wt. 1 detected", "Wt. 2 detected", "Minimum distance"};
  if (t.table_convention) h.push_back("Clifford (table convention)");
  if (!t.name.empty()) os << "### " << t.name << "\n\n";
  os << "|";
  for (const auto& x : h) os << " " << x << " |";
  os << "\n|";
  for (std::size_t i = 0; i < h.size(); ++i) os << (i == 1 ? ":---|" : "---:|");
  os << "\n";
  for (const auto& r : t.rows) {
    auto c = cells(r, t.table_convention);
    c[1] = "";
    for (std::size_t i = 0; i < r.labels.size(); ++i) c[1] += (i ? ", " : "") + r.labels[i];
    os << "|";
    for (const auto& x : c) os << " " << x << " |";
    os << "\n";
  }
  return os.str();
}

void emit(const Table& t, const std::string& format, const std::filesystem::path& path) {
  std::string body;
  if (format == "csv") {
    body = to_csv(t);
  } else if (format == "md" || format == "markdown") {
    body = to_markdown(t);
  } else {
    throw Error(Error::Kind::kDomain, "unknown format '" + format + "'");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Error::Kind::kIo, "cannot write " + path.string());
  out << body;
  if (!out) throw Error(Error::Kind::kIo, "write failed for " + path.string());
}

CsvTable parse_csv(std::string_view text) {
  CsvTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    std::vector<std::string> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      row.push_back(trim(std::string_view(line).substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (t.header.empty()) {
      t.header = std::move(row);
    } else {
      if (row.size() != t.header.size()) {
        throw Error(Error::Kind::kParse, "CSV row has " + std::to_string(row.size()) + " cells, header has " +
                                             std::to_string(t.header.size()));
      }
      t.rows.push_back(std::move(row));
    }
  }
  if (t.header.empty()) throw Error(Error::Kind::kParse, "CSV has no header");
  return t;
}

CsvTable load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Kind::kIo, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_csv(ss.str());
  } catch (const Error& e) {
    throw Error(Error::Kind::kParse, path.string() + ": " + e.what());
  }
}

int DiffReport::exit_code() const {
  if (!hard.empty() || !missing_rows.empty()) return 1;
  return documented.empty() ? 0 : 2;
}

std::string DiffReport::to_string() const {
  std::ostringstream os;
  os << "compared " << compared << " cells: " << matched << " match, " << documented.size()
     << " documented discrepancies, " << hard.size() << " hard mismatches";
  if (!missing_rows.empty()) os << ", " << missing_rows.size() << " golden rows missing";
  os << "\n";
  for (const auto& d : documented)
    os << "  documented  [" << d.row << "] " << d.column << ": produced " << d.produced << ", golden " << d.golden << "\n";
  for (const auto& d : hard)
    os << "  MISMATCH    [" << d.row << "] " << d.column << ": produced " << d.produced << ", golden " << d.golden << "\n";
  for (const auto& r : missing_rows) os << "  MISSING ROW [" << r << "]\n";
  if (!extra_rows.empty()) os << "  (" << extra_rows.size() << " produced rows absent from golden, not compared)\n";
  return os.str();
}

DiffReport golden_diff(const CsvTable& produced, const CsvTable& golden) {
  auto col = [](const CsvTable& t, const std::string& name) -> int {
    const auto it = std::find(t.header.begin(), t.header.end(), name);
    return it == t.header.end() ? -1 : static_cast<int>(it - t.header.begin());
  };
  const int pkey = col(produced, "components");
  const int gkey = col(golden, "components");
  if (pkey < 0 || gkey < 0) throw Error(Error::Kind::kParse, "both tables need a 'components' column");

  std::vector<std::pair<int, int>> columns;  // golden index, produced index
  for (std::size_t g = 0; g < golden.header.size(); ++g) {
    const std::string& name = golden.header[g];
    if (name == "Sl." || name == "components") continue;
    const int p = col(produced, name);
    if (p < 0) throw Error(Error::Kind::kParse, "golden column '" + name + "' is not produced");
    columns.emplace_back(static_cast<int>(g), p);
  }

  std::map<std::string, const std::vector<std::string>*> by_label;
  for (const auto& r : produced.rows) by_label[r[static_cast<std::size_t>(pkey)]] = &r;

  DiffReport rep;
  std::map<std::string, bool> seen;
  for (const auto& grow : golden.rows) {
    const std::string& label = grow[static_cast<std::size_t>(gkey)];
    seen[label] = true;
    const auto it = by_label.find(label);
    if (it == by_label.end()) {
      rep.missing_rows.push_back(label);
      continue;
    }
    for (const auto& [g, p] : columns) {
      std::string want = grow[static_cast<std::size_t>(g)];
      if (want.empty()) continue;
      const bool documented = want.front() == '?';
      if (documented) want = trim(std::string_view(want).substr(1));
      const std::string& got = (*it->second)[static_cast<std::size_t>(p)];
      ++rep.compared;
      if (lower(got) == lower(want)) {
        ++rep.matched;
      } else {
        CellDiff d{label, golden.header[static_cast<std::size_t>(g)], got, want};
        (documented ? rep.documented : rep.hard).push_back(std::move(d));
      }
    }
  }
  for (const auto& r : produced.rows) {
    const std::string& label = r[static_cast<std::size_t>(pkey)];
    if (!seen.count(label)) rep.extra_rows.push_back(label);
  }
  return rep;
}

}  // namespace qeccf
