// qeccf: command-line driver for scenario runs, golden diffs and inspection.
#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <optional>

#include "qeccf/error.hpp"
#include "qeccf/parallel.hpp"
#include "qeccf/tablegen.hpp"

namespace {

using namespace qeccf;

void print_fingerprint(const Prepared& p) {
  const FinMatGroup& g = *p.e.group;
  std::cout << "error group: " << p.e.source << ", |E| = " << g.order() << ", |Z(E)| = " << p.e.center.size()
            << ", natural dimension " << g.dim() << "\n";
  std::cout << "  fingerprint " << g.fingerprint().to_string() << "\n";
  std::cout << "subgroup: |S| = " << p.sub.size() << (g.is_normal(p.sub) ? ", normal" : ", not normal")
            << (g.is_abelian(p.sub) ? ", abelian" : ", nonabelian") << "\n";
  std::cout << "  fingerprint " << g.fingerprint(p.sub).to_string() << "\n";
}

void print_matrix(const CMat& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    std::cout << "    ";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const cd z = m(r, c);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%8.4f%+.4fi ", std::abs(z.real()) < 5e-13 ? 0.0 : z.real(),
                    std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag());
      std::cout << buf;
    }
    std::cout << "\n";
  }
}

int cmd_run(const std::string& file, const std::string& section, const std::string& format, const std::string& out,
            int threads, std::optional<std::uint64_t> seed, bool check) {
  Scenario s = load_scenario(file, section);
  if (seed) s.seed = *seed;
  const Table t = run_scenario(s, threads);
  if (out.empty() || out == "-") {
    std::cout << (format == "csv" ? to_csv(t) : to_markdown(t));
  } else {
    emit(t, format, out);
  }
  if (!check) return 0;
  if (s.golden.empty()) throw Error(Error::Kind::kDomain, "--check needs a golden key in the scenario");
  const DiffReport rep = golden_diff(parse_csv(to_csv(t)), load_csv(s.resolve(s.golden)));
  std::cerr << rep.to_string();
  return rep.exit_code();
}

int cmd_diff(const std::string& produced, const std::string& golden) {
  const DiffReport rep = golden_diff(load_csv(produced), load_csv(golden));
  std::cout << rep.to_string();
  return rep.exit_code();
}

int cmd_decompose(const std::string& file, const std::string& section, bool show_irreps) {
  const Scenario s = load_scenario(file, section);
  const Prepared p = prepare(s);
  print_fingerprint(p);
  std::cout << describe(p.cs);
  if (show_irreps) {
    for (std::size_t k = 0; k < p.cs.constituents.size(); ++k) {
      std::cout << "isotypic projector " << k << ":\n";
      print_matrix(p.cs.constituents[k].isotypic_projector);
    }
    for (int slot : s.slots) {
      const auto& c = p.cs.constituents[static_cast<std::size_t>(slot)];
      std::cout << "slot constituent " << slot << " carrier basis:\n";
      print_matrix(c.carrier_basis);
    }
  }
  return 0;
}

int cmd_detect(const std::string& file, const std::string& section, const std::string& assignment,
               bool show_basis) {
  const Scenario s = load_scenario(file, section);
  const Prepared p = prepare(s);
  const auto labels = split_list(assignment);
  Table t;
  t.table_convention = s.table_convention;
  t.rows.push_back(analyze_row(p, s.slots, labels, s.table_convention));
  t.rows.back().sl = 1;
  std::cout << to_csv(t);
  if (show_basis) {
    const Inversion inv = invert(make_assignment(p, s.slots, labels), p.cs);
    std::cout << "projector:\n";
    print_matrix(inv.projector);
    for (int slot : s.slots) {
      std::cout << "carrier basis of constituent " << slot << ":\n";
      print_matrix(p.cs.constituents[static_cast<std::size_t>(slot)].carrier_basis);
    }
  }
  return 0;
}

// Searches ordered tuples of distinct constituents for slot choices that
// reproduce the golden table.
int cmd_match(const std::string& file, const std::string& section, const std::string& golden_path, bool write,
              int threads) {
  Scenario s = load_scenario(file, section);
  const std::string gpath = golden_path.empty() ? s.golden : golden_path;
  if (gpath.empty()) throw Error(Error::Kind::kDomain, "no golden table given");
  const CsvTable golden = load_csv(golden_path.empty() ? s.resolve(gpath) : std::filesystem::path(gpath));
  const std::size_t nslots = s.slots.size();
  if (nslots == 0 || nslots > 2) throw Error(Error::Kind::kDomain, "match supports one or two slots");
  if (s.basis_diag.size() > 1) throw Error(Error::Kind::kDomain, "match needs a single basis.diag entry");

  Scenario base = s;
  base.slots.clear();
  Prepared p = prepare(base);
  const int dim = p.cs.constituents.at(static_cast<std::size_t>(s.slots.front())).dim;
  std::vector<int> cands;
  for (std::size_t i = 0; i < p.cs.constituents.size(); ++i)
    if (p.cs.constituents[i].dim == dim) cands.push_back(static_cast<int>(i));
  if (!s.basis_diag.empty()) {
    for (int c : cands)
      adapt_basis(p.cs, c, p.e.parse_element(s.basis_diag.front()), p.e.parse_element(s.basis_offdiag.front()));
  }
  std::vector<std::vector<int>> tuples;
  for (int a : cands) {
    if (nslots == 1) {
      tuples.push_back({a});
      continue;
    }
    for (int b : cands)
      if (a != b) tuples.push_back({a, b});
  }
  const int gkey = static_cast<int>(std::find(golden.header.begin(), golden.header.end(), "components") -
                                    golden.header.begin());
  if (gkey >= static_cast<int>(golden.header.size())) throw Error(Error::Kind::kParse, "golden lacks components");

  struct Outcome {
    bool complete = false;
    std::size_t documented = 0;
  };
  std::vector<Outcome> results(tuples.size());
  parallel_for(tuples.size(), threads, [&](std::size_t i) {
    Outcome o;
    for (const auto& grow : golden.rows) {
      Table t;
      t.table_convention = s.table_convention;
      t.rows.push_back(analyze_row(p, tuples[i], split_list(grow[static_cast<std::size_t>(gkey)], ';'),
                                   s.table_convention));
      CsvTable one = golden;
      one.rows = {grow};
      const DiffReport rep = golden_diff(parse_csv(to_csv(t)), one);
      if (!rep.hard.empty() || !rep.missing_rows.empty()) {
        results[i] = o;
        return;
      }
      o.documented += rep.documented.size();
    }
    o.complete = true;
    results[i] = o;
  });

  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (!results[i].complete) continue;
    std::cout << "match: slots =";
    for (std::size_t k = 0; k < tuples[i].size(); ++k) std::cout << (k ? ", " : " ") << tuples[i][k];
    std::cout << " (" << results[i].documented << " documented discrepancies)\n";
    if (!best || results[i].documented < results[*best].documented) best = i;
  }
  std::cout << tuples.size() << " slot choices searched, "
            << std::count_if(results.begin(), results.end(), [](const Outcome& o) { return o.complete; })
            << " reproduce the golden table\n";
  if (!best) return 1;
  if (write) {
    std::string v;
    for (std::size_t k = 0; k < tuples[*best].size(); ++k) v += (k ? ", " : "") + std::to_string(tuples[*best][k]);
    set_scenario_key(file, section, "slots", v);
    std::cout << "wrote slots = " << v << " to " << file << "\n";
  }
  return 0;
}

// Lists normal subgroups of one order with a parseable generating set each.
int cmd_subgroups(const std::string& file, const std::string& section, std::size_t order, bool nonabelian_only) {
  Scenario s = load_scenario(file, section);
  s.slots.clear();
  s.subgroup = "whole";
  s.basis_diag.clear();
  s.basis_offdiag.clear();
  const Prepared p = prepare(s);
  const FinMatGroup& g = *p.e.group;
  for (const IndexList& sub : g.normal_subgroups(order)) {
    if (nonabelian_only && g.is_abelian(sub)) continue;
    IndexList gens;
    IndexList span = g.subgroup_from(gens);
    for (int x : sub) {
      if (std::binary_search(span.begin(), span.end(), x)) continue;
      gens.push_back(x);
      span = g.subgroup_from(gens);
    }
    std::cout << "generators = ";
    for (std::size_t k = 0; k < gens.size(); ++k) std::cout << (k ? ", " : "") << p.e.label(gens[k]);
    std::cout << "    # " << g.fingerprint(sub).to_string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier-inversion code search over finite error groups"};
  app.require_subcommand(1);

  std::string file, section, format = "csv", out, produced, golden, assignment;
  int threads = qeccf::default_threads();
  std::uint64_t seed = 0;
  bool check = false, show = false, write = false, nonabelian = false;
  std::size_t order = 0;

  auto* run = app.add_subcommand("run", "run a scenario and emit its table");
  run->add_option("scenario", file, "scenario file")->required()->check(CLI::ExistingFile);
  run->add_option("--section", section, "scenario section (default: first)");
  run->add_option("--format", format, "csv or md")->check(CLI::IsMember({"csv", "md"}));
  run->add_option("--out", out, "output path (default: stdout)");
  run->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  auto* seed_opt = run->add_option("--seed", seed, "commutant sampling seed");
  run->add_flag("--check", check, "diff against the scenario's golden table");

  auto* diff = app.add_subcommand("diff", "compare a produced CSV against a golden CSV");
  diff->add_option("produced", produced)->required()->check(CLI::ExistingFile);
  diff->add_option("golden", golden)->required()->check(CLI::ExistingFile);

  auto* dec = app.add_subcommand("decompose", "print the constituent inventory");
  dec->add_option("scenario", file)->required()->check(CLI::ExistingFile);
  dec->add_option("--section", section);
  dec->add_flag("--show-basis", show, "print isotypic projectors and slot carrier bases");

  auto* det = app.add_subcommand("detect", "analyze one assignment");
  det->add_option("scenario", file)->required()->check(CLI::ExistingFile);
  det->add_option("--section", section);
  det->add_option("--assignment", assignment, "comma-separated value labels, one per slot")->required();
  det->add_flag("--show-basis", show, "print the projector and carrier bases");

  auto* match = app.add_subcommand("match", "search slot choices reproducing a golden table");
  match->add_option("scenario", file)->required()->check(CLI::ExistingFile);
  match->add_option("--section", section);
  match->add_option("--golden", golden, "golden CSV (default: scenario golden)");
  match->add_flag("--write", write, "store the best slot choice in the scenario file");
  match->add_option("--threads", threads)->check(CLI::PositiveNumber);

  auto* subs = app.add_subcommand("subgroups", "list normal subgroups of the scenario's error group");
  subs->add_option("scenario", file)->required()->check(CLI::ExistingFile);
  subs->add_option("--section", section);
  subs->add_option("--order", order)->required();
  subs->add_flag("--nonabelian", nonabelian);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*run) {
      std::optional<std::uint64_t> s;
      if (*seed_opt) s = seed;
      return cmd_run(file, section, format, out, threads, s, check);
    }
    if (*diff) return cmd_diff(produced, golden);
    if (*dec) return cmd_decompose(file, section, show);
    if (*det) return cmd_detect(file, section, assignment, show);
    if (*match) return cmd_match(file, section, golden, write, threads);
    if (*subs) return cmd_subgroups(file, section, order, nonabelian);
  } catch (const std::exception& e) {
    std::cerr << "qeccf: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
