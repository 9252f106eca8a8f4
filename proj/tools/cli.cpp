#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qspec/claims.hpp"
#include "qspec/families.hpp"
#include "qspec/graph.hpp"
#include "qspec/linalg.hpp"
#include "qspec/quotient.hpp"
#include "qspec/search.hpp"

namespace qspec::cli {

namespace {

using json = nlohmann::json;

/// Rounds to 12 significant digits so the shortest round-trip form printed
/// by the serializer never carries noise digits.
double real(double x) {
  if (!std::isfinite(x))
    return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

json real_or_null(double x) {
  return std::isfinite(x) ? json(real(x)) : json(nullptr);
}

json spectrum_json(const Spectrum &s) {
  json out = json::array();
  for (const auto &e : s.entries()) {
    out.push_back({{"re", real(e.value.real())},
                   {"im", real(e.value.imag())},
                   {"mult", e.mult}});
  }
  return out;
}

std::string rational_text(const Rational &r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

json rational_json(const Rational &r) {
  if (denominator(r) == 1)
    return json(numerator(r).convert_to<long long>());
  return json(rational_text(r));
}

json matrix_json(const RationalMatrix &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.order(); ++j)
      row.push_back(rational_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json blockspec_json(const BlockSpec &spec) {
  json l = json::array(), p = json::array(), s = json::array();
  for (int i = 0; i < spec.blocks(); ++i) {
    l.push_back(rational_json(spec.l[i]));
    p.push_back(rational_json(spec.p[i]));
    json row = json::array();
    for (const auto &x : spec.s[i])
      row.push_back(rational_json(x));
    s.push_back(row);
  }
  return {{"sizes", spec.sizes}, {"l", l}, {"p", p}, {"s", s}};
}

std::string read_all(std::istream &in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Graph text from a path or `-`; a JSON document with a `graph_file` field
/// (the output of `family`) is accepted as well.
AnyGraph load_graph(const std::string &path, std::istream &in) {
  std::string text;
  if (path == "-") {
    text = read_all(in);
  } else {
    std::ifstream file(path);
    if (!file)
      throw ParseError("cannot open '" + path + "'");
    text = read_all(file);
  }
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.contains("graph_file") ||
        !doc["graph_file"].is_string())
      throw ParseError("JSON input needs a string field 'graph_file'");
    text = doc["graph_file"].get<std::string>();
  }
  return parse_graph_text(text);
}

std::vector<MatrixKind> parse_kinds(const std::string &text) {
  std::vector<MatrixKind> kinds;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty())
      kinds.push_back(parse_kind(item));
  if (kinds.empty())
    throw ParseError("--kinds is empty");
  return kinds;
}

bool is_linked(const AnyGraph &g) {
  return std::visit(
      [](const auto &x) {
        if constexpr (std::decay_t<decltype(x)>::directed)
          return is_strongly_connected(x);
        else
          return is_connected(x);
      },
      g);
}

ExactMatrix matrix_of(const AnyGraph &g, MatrixKind kind) {
  return std::visit([kind](const auto &x) { return build_matrix(x, kind); }, g);
}

// --- subcommands -------------------------------------------------------------

json analyze(const AnyGraph &g, const std::string &kinds_text) {
  const bool linked = is_linked(g);
  std::vector<MatrixKind> kinds;
  if (kinds_text.empty()) {
    for (auto kind : kAllKinds)
      if (linked || !is_distance_kind(kind))
        kinds.push_back(kind);
  } else {
    kinds = parse_kinds(kinds_text);
  }
  json out;
  out["directed"] = g.index() == 1;
  out["n"] = order(g);
  out["connected"] = linked;
  out["vertex_connectivity"] =
      linked ? std::visit([](const auto &x) { return vertex_connectivity(x); }, g)
             : 0;
  if (linked) {
    json t = json::array();
    std::visit(
        [&t](const auto &x) {
          for (const auto &v : transmissions(x))
            t.push_back(v.template convert_to<long long>());
        },
        g);
    out["transmissions"] = t;
  }
  json spectra = json::object(), radii = json::object();
  for (auto kind : kinds) {
    ExactMatrix m = matrix_of(g, kind); // throws for disconnected distance kinds
    NumericMatrix x = to_numeric(m);
    std::string name(kind_name(kind));
    spectra[name] = spectrum_json(eigenvalues(x));
    radii[name] = real(spectral_radius(x));
  }
  out["spectra"] = spectra;
  out["spectral_radius"] = radii;
  return out;
}

json quotient(const AnyGraph &g, const std::string &partition_text,
              const std::string &kind_text) {
  MatrixKind kind = parse_kind(kind_text);
  Partition part = Partition::parse(partition_text);
  if (part.ground_size() != order(g))
    throw DimensionMismatch("partition covers " +
                            std::to_string(part.ground_size()) +
                            " vertices, graph has " + std::to_string(order(g)));
  ExactMatrix m = matrix_of(g, kind);
  RationalMatrix b = quotient_matrix(m, part);
  json out;
  out["kind"] = std::string(kind_name(kind));
  out["partition"] = part.to_string();
  out["B"] = matrix_json(b);
  out["quotient_eigenvalues"] = spectrum_json(eigenvalues(to_numeric(b)));
  const bool equitable = is_equitable(m, part);
  out["equitable"] = equitable;
  if (equitable)
    out["lifted"] = lift_check(to_numeric(m), part).lifted;
  else
    out["lifted"] = nullptr;
  if (m.is_symmetric()) {
    InterlacingReport r = interlacing_check(to_numeric(m), part);
    out["interlacing"] = {{"interlaces", r.interlaces}, {"tight", r.tight}};
  }
  return out;
}

json family(const FamilySpec &spec) {
  AnyGraph g = build(spec);
  json out;
  out["family"] = family_name(spec);
  out["directed"] = is_directed(spec);
  out["n"] = order(g);
  out["graph_file"] = format_graph_text(g);
  json blocks = json::object();
  for (auto kind : kAllKinds) {
    try {
      blocks[std::string(kind_name(kind))] =
          blockspec_json(adjacency_blockspec(spec, kind));
    } catch (const UnsupportedFamily &) {
      blocks = nullptr;
      break;
    }
  }
  out["block_specs"] = blocks;
  return out;
}

json report_json(const VerificationReport &r) {
  return {{"claim", r.claim},
          {"params", r.params},
          {"exact", r.exact},
          {"pass", r.pass},
          {"max_deviation", real_or_null(r.max_deviation)},
          {"tolerance", real(r.tolerance)},
          {"closed_form", r.closed_form},
          {"oracle", r.oracle},
          {"note", r.note}};
}

json catalogue_json() {
  json out = json::array();
  for (const auto &c : claim_catalogue()) {
    json item = {{"id", c.id}, {"statement", c.statement}, {"params", c.params}};
    if (!c.erratum.empty())
      item["erratum"] = c.erratum;
    out.push_back(item);
  }
  return out;
}

json certificate_json(const ExtremalCertificate &c) {
  json members = json::array();
  for (const auto &m : c.classification)
    members.push_back({{"member", m.member},
                       {"isomorphs", m.isomorphs},
                       {"found", m.found}});
  return {{"n", c.n},
          {"k", c.k},
          {"directed", c.directed},
          {"objective", std::string(objective_name(c.objective))},
          {"mode", std::string(mode_name(c.mode))},
          {"value", real(c.value)},
          {"examined", c.examined},
          {"members", c.members},
          {"optimizer_count", c.optimizers.size()},
          {"optimizers", c.optimizers},
          {"classification", members},
          {"unclassified", c.unclassified},
          {"claim_holds", c.claim_holds},
          {"note", c.note}};
}

void emit(std::ostream &out, const json &doc, bool pretty) {
  out << doc.dump(pretty ? 2 : -1) << '\n';
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err) {
  CLI::App app{"Spectra of structured graph matrices via equitable quotients"};
  app.name("spectra");
  app.require_subcommand(1, 1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent JSON output");

  std::string file, kinds, partition, kind = "A", family_text, claim,
                                       params;
  bool emit_file = false, list_claims = false;

  auto *analyze_cmd = app.add_subcommand("analyze", "Spectra of a graph file");
  analyze_cmd->add_option("file", file, "Graph file, or - for stdin")
      ->required();
  analyze_cmd->add_option("--kinds", kinds, "Comma list of A,L,Q,D,DL,DQ");

  auto *quotient_cmd =
      app.add_subcommand("quotient", "Quotient matrix for a partition");
  quotient_cmd->add_option("file", file, "Graph file, or - for stdin")
      ->required();
  quotient_cmd->add_option("--partition", partition, "Cells, e.g. {0,1|2,3}")
      ->required();
  quotient_cmd->add_option("--kind", kind, "Matrix kind");

  auto *family_cmd = app.add_subcommand("family", "Build a family member");
  family_cmd->add_option("spec", family_text, "e.g. knkp-g:6,2,1")->required();
  family_cmd->add_flag("--emit-file", emit_file, "Print the graph file only");

  auto *verify_cmd = app.add_subcommand("verify", "Check a catalogued claim");
  verify_cmd->add_option("claim", claim, "Claim id");
  verify_cmd->add_option("--params", params, "e.g. n=6,k=2,p=1");
  verify_cmd->add_flag("--list", list_claims, "List claim ids");

  ScanJob job;
  std::string objective = "rho", mode = "max";
  auto *scan_cmd = app.add_subcommand("scan", "Exhaustive extremal scan");
  scan_cmd->add_option("--n", job.n, "Order")->required();
  scan_cmd->add_option("--k", job.k, "Vertex connectivity")->required();
  scan_cmd->add_flag("--directed", job.directed, "Scan digraphs");
  scan_cmd->add_option("--objective", objective, "rho, q, rhoD or qD");
  scan_cmd->add_option("--mode", mode, "max or min");
  scan_cmd->add_option("--shards", job.shards, "Work shards (0: per thread)");

  std::uint64_t trials = 1000, seed = 1;
  int n_max = 12, t_max = 4, threads = 0;
  auto *conj_cmd = app.add_subcommand(
      "conjecture", "Search for quotient-radius counterexamples");
  conj_cmd->add_option("--trials", trials, "Number of random instances");
  conj_cmd->add_option("--seed", seed, "Base seed");
  conj_cmd->add_option("--n-max", n_max, "Largest order");
  conj_cmd->add_option("--t-max", t_max, "Largest number of blocks");
  conj_cmd->add_option("--threads", threads, "Worker threads (0: auto)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (analyze_cmd->parsed()) {
      emit(out, analyze(load_graph(file, in), kinds), pretty);
    } else if (quotient_cmd->parsed()) {
      emit(out, quotient(load_graph(file, in), partition, kind), pretty);
    } else if (family_cmd->parsed()) {
      FamilySpec spec = parse_family(family_text);
      if (emit_file)
        out << format_graph_text(build(spec));
      else
        emit(out, family(spec), pretty);
    } else if (verify_cmd->parsed()) {
      if (list_claims) {
        emit(out, catalogue_json(), pretty);
        return 0;
      }
      if (claim.empty())
        throw ParseError("verify needs a claim id (see --list)");
      VerificationReport r = verify_claim(claim, parse_params(params));
      emit(out, report_json(r), pretty);
      return r.pass ? 0 : 1;
    } else if (scan_cmd->parsed()) {
      job.objective = parse_objective(objective);
      job.mode = parse_mode(mode);
      ExtremalCertificate c = extremal_scan(job);
      emit(out, certificate_json(c), pretty);
      return c.classification.empty() || c.claim_holds ? 0 : 1;
    } else if (conj_cmd->parsed()) {
      auto found = conjecture_search(trials, n_max, t_max, seed, threads);
      json doc = {{"trials", trials},
                  {"seed", seed},
                  {"n_max", n_max},
                  {"t_max", t_max}};
      if (found) {
        doc["counterexample"] = {
            {"trial", found->trial},
            {"spec", blockspec_json(found->spec)},
            {"rho_B", real(found->probe.rho_B)},
            {"rho_M", real(found->probe.rho_M)}};
      } else {
        doc["counterexample"] = nullptr;
      }
      emit(out, doc, pretty);
      return found ? 1 : 0;
    }
  } catch (const Error &e) {
    err << e.what() << '\n';
    return 2;
  } catch (const json::exception &e) {
    err << "ParseError: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

} // namespace qspec::cli
