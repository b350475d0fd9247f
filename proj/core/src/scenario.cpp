#include "qeccf/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "qeccf/error.hpp"

namespace qeccf {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw Error(Error::Kind::kParse, "expected a boolean, got '" + v + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Kind::kIo, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<std::string> split_list(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find(sep, start), text.size());
    std::string tok = trim(text.substr(start, stop - start));
    if (!tok.empty()) out.push_back(std::move(tok));
    start = stop + 1;
  }
  return out;
}

std::filesystem::path Scenario::resolve(const std::string& p) const {
  const std::filesystem::path path(p);
  return path.is_absolute() || dir.empty() ? path : dir / path;
}

std::vector<Scenario> parse_scenarios(std::string_view text, const std::filesystem::path& dir) {
  std::vector<Scenario> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  auto current = [&]() -> Scenario& {
    if (out.empty()) {
      out.emplace_back();
      out.back().name = "default";
      out.back().dir = dir;
    }
    return out.back();
  };
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw Error(Error::Kind::kParse, where + "unterminated section header");
      out.emplace_back();
      out.back().name = trim(std::string_view(line).substr(1, line.size() - 2));
      out.back().dir = dir;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(Error::Kind::kParse, where + "expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string val = trim(std::string_view(line).substr(eq + 1));
    Scenario& s = current();
    try {
      if (key == "group") {
        s.group = val;
      } else if (key == "subgroup") {
        s.subgroup = val;
      } else if (key == "stabilizer") {
        s.stabilizer = split_list(val);
      } else if (key == "generators") {
        s.generators = split_list(val);
      } else if (key == "slots") {
        s.slots.clear();
        for (const auto& t : split_list(val)) s.slots.push_back(std::stoi(t));
      } else if (key == "values") {
        s.values = split_list(val);
      } else if (key == "basis.diag") {
        s.basis_diag = split_list(val);
      } else if (key == "basis.offdiag") {
        s.basis_offdiag = split_list(val);
      } else if (key == "seed") {
        s.seed = std::stoull(val);
      } else if (key == "golden") {
        s.golden = val;
      } else if (key == "table_convention") {
        s.table_convention = parse_bool(val);
      } else {
        throw Error(Error::Kind::kParse, "unknown key '" + key + "'");
      }
    } catch (const Error& e) {
      throw Error(Error::Kind::kParse, where + e.what());
    } catch (const std::exception&) {
      throw Error(Error::Kind::kParse, where + "bad value for '" + key + "'");
    }
  }
  return out;
}

std::vector<Scenario> load_scenarios(const std::filesystem::path& path) {
  return parse_scenarios(read_file(path), path.parent_path());
}

Scenario load_scenario(const std::filesystem::path& path, std::string_view section) {
  auto all = load_scenarios(path);
  if (all.empty()) throw Error(Error::Kind::kParse, "no scenario in " + path.string());
  if (section.empty()) return all.front();
  for (auto& s : all)
    if (s.name == section) return s;
  throw Error(Error::Kind::kParse, "no section [" + std::string(section) + "] in " + path.string());
}

void set_scenario_key(const std::filesystem::path& path, std::string_view section, std::string_view key,
                      std::string_view value) {
  const std::string text = read_file(path);
  std::string target(section);
  if (target.empty()) {
    const auto all = parse_scenarios(text);
    if (all.empty()) throw Error(Error::Kind::kParse, "no scenario in " + path.string());
    target = all.front().name;
  }
  std::istringstream in(text);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);

  // Lines before the first header belong to the implicit "default" section.
  std::string current = "default";
  std::optional<std::size_t> anchor;  // last line belonging to the target section
  bool replaced = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string t = trim(strip_comment(lines[i]));
    if (!t.empty() && t.front() == '[') {
      current = trim(std::string_view(t).substr(1, t.size() - 2));
      if (current == target) anchor = i;
      continue;
    }
    if (current != target || t.empty()) continue;
    anchor = i;
    const auto eq = t.find('=');
    if (eq != std::string::npos && trim(std::string_view(t).substr(0, eq)) == key) {
      lines[i] = std::string(key) + " = " + std::string(value);
      replaced = true;
    }
  }
  if (!replaced) {
    if (!anchor) throw Error(Error::Kind::kParse, "no section [" + target + "] in " + path.string());
    lines.insert(lines.begin() + static_cast<std::ptrdiff_t>(*anchor + 1),
                 std::string(key) + " = " + std::string(value));
  }
  std::ofstream out(path);
  if (!out) throw Error(Error::Kind::kIo, "cannot write " + path.string());
  for (const auto& l : lines) out << l << "\n";
}

CMat value_matrix(std::string_view label, int n) {
  const std::string l = trim(label);
  if (l.size() >= 2 && (l[0] == 'O' || l[0] == 'I') && std::all_of(l.begin() + 1, l.end(), ::isdigit)) {
    const int m = std::stoi(l.substr(1));
    if (m != n) throw Error(Error::Kind::kDimension, "value " + l + " does not fit a " + std::to_string(n) + "-dim constituent");
    if (l[0] == 'O') return CMat::Zero(n, n);
    return CMat::Identity(n, n);
  }
  if (l.size() == 3 && l[0] == 'P' && (l[2] == '+' || l[2] == '-')) {
    if (n != 2) throw Error(Error::Kind::kDimension, "value " + l + " needs a 2-dim constituent");
    CMat w(2, 2);
    switch (l[1]) {
      case 'X': w << 0, 1, 1, 0; break;
      case 'Y': w << 0, cd(0, -1), cd(0, 1), 0; break;
      case 'Z': w << 1, 0, 0, -1; break;
      default: throw Error(Error::Kind::kParse, "unknown value label '" + l + "'");
    }
    const double sign = l[2] == '+' ? 1.0 : -1.0;
    return 0.5 * (CMat::Identity(2, 2) + sign * w);
  }
  throw Error(Error::Kind::kParse, "unknown value label '" + l + "'");
}

Prepared prepare(const Scenario& s) {
  Prepared p;
  if (s.group.rfind("pauli:", 0) == 0) {
    const auto parts = split_list(s.group.substr(6), ':');
    if (parts.empty()) throw Error(Error::Kind::kParse, "group = pauli:<n>");
    const bool complex = parts.size() > 1 && parts[1] == "complex";
    p.e = pauli_group(std::stoi(parts[0]), complex ? PhaseConvention::kComplex : PhaseConvention::kReal);
  } else if (s.group.rfind("file:", 0) == 0) {
    p.e = load_error_basis(s.resolve(trim(s.group.substr(5))));
  } else {
    throw Error(Error::Kind::kParse, "group must be pauli:<n> or file:<path>");
  }
  const FinMatGroup& g = *p.e.group;

  auto indices = [&](const std::vector<std::string>& specs) {
    std::vector<int> out;
    for (const auto& sp : specs) out.push_back(p.e.parse_element(sp));
    return out;
  };
  if (s.subgroup == "centralizer") {
    const IndexList stab = g.subgroup_from(indices(s.stabilizer));
    p.sub = g.centralizer(stab);
  } else if (s.subgroup == "stabilizer") {
    p.sub = g.subgroup_from(indices(s.stabilizer));
  } else if (s.subgroup == "generated") {
    p.sub = g.subgroup_from(indices(s.generators));
  } else if (s.subgroup == "whole") {
    p.sub = g.all();
  } else {
    throw Error(Error::Kind::kParse, "unknown subgroup recipe '" + s.subgroup + "'");
  }
  p.cs = decompose_natural(p.e, p.sub, s.seed);

  for (int slot : s.slots)
    if (slot < 0 || static_cast<std::size_t>(slot) >= p.cs.constituents.size()) {
      throw Error(Error::Kind::kDomain, "slot " + std::to_string(slot) + " out of range (" +
                                            std::to_string(p.cs.constituents.size()) + " constituents)");
    }
  if (s.basis_diag.empty() != s.basis_offdiag.empty()) {
    throw Error(Error::Kind::kParse, "basis.diag and basis.offdiag must be given together");
  }
  auto pick = [&](const std::vector<std::string>& v, std::size_t k) -> const std::string& {
    if (v.size() == 1) return v.front();
    if (v.size() != s.slots.size()) throw Error(Error::Kind::kParse, "basis lists need one entry or one per slot");
    return v[k];
  };
  if (!s.basis_diag.empty()) {
    for (std::size_t k = 0; k < s.slots.size(); ++k) {
      adapt_basis(p.cs, s.slots[k], p.e.parse_element(pick(s.basis_diag, k)),
                  p.e.parse_element(pick(s.basis_offdiag, k)));
    }
  }
  return p;
}

TransformAssignment make_assignment(const Prepared& p, const std::vector<int>& slots,
                                    const std::vector<std::string>& labels) {
  if (slots.size() != labels.size()) {
    throw Error(Error::Kind::kDomain, "assignment has " + std::to_string(labels.size()) + " values for " +
                                          std::to_string(slots.size()) + " slots");
  }
  TransformAssignment a;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const int dim = p.cs.constituents.at(static_cast<std::size_t>(slots[k])).dim;
    CMat m = value_matrix(labels[k], dim);
    if (a.values.count(slots[k])) throw Error(Error::Kind::kDomain, "slot listed twice");
    if (cxla::max_abs(m) > 0) a.values[slots[k]] = std::move(m);
  }
  return a;
}

}  // namespace qeccf
