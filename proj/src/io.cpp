#include "packcover/io.hpp"

#include "packcover/bounds.hpp"
#include "packcover/reference.hpp"
#include "packcover/solver.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace packcover {

namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    // strip comments and surrounding whitespace
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t\r");
    lines.push_back({number, line.substr(begin, end - begin + 1)});
  }
  return lines;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

double parse_double(const std::string& t, int line) {
  try {
    std::size_t used = 0;
    double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + t + "'", line);
  }
}

long parse_int(const std::string& t, int line) {
  try {
    std::size_t used = 0;
    long v = std::stol(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + t + "'", line);
  }
}

ParsedInput parse_matrix(const std::vector<Line>& lines) {
  auto head = tokens(lines[0].text);
  int m = int(parse_int(head[0], lines[0].number));
  int n = int(parse_int(head[1], lines[0].number));
  if (m < 1 || n < 1)
    throw ParseError("matrix dimensions must be positive", lines[0].number);
  if (int(lines.size()) < 1 + m)
    throw ParseError("expected " + std::to_string(m) + " matrix rows",
                     lines.back().number);
  ParsedInput out;
  out.kind = InstanceKind::ExplicitMatrix;
  out.matrix.payoff.resize(m, n);
  for (int r = 0; r < m; ++r) {
    const Line& line = lines[1 + r];
    auto row = tokens(line.text);
    if (int(row.size()) != n)
      throw ParseError("expected " + std::to_string(n) + " entries, got " +
                           std::to_string(row.size()),
                       line.number);
    for (int c = 0; c < n; ++c)
      out.matrix.payoff(r, c) = parse_double(row[c], line.number);
  }
  if (int(lines.size()) > 1 + m) {
    const Line& line = lines[1 + m];
    auto row = tokens(line.text);
    if (row.empty() || row[0] != "b:")
      throw ParseError("unexpected trailing line (expected 'b:' row)",
                       line.number);
    if (int(row.size()) != m + 1)
      throw ParseError("b: row must have " + std::to_string(m) + " entries",
                       line.number);
    out.matrix.offset.resize(m);
    for (int r = 0; r < m; ++r)
      out.matrix.offset[r] = parse_double(row[r + 1], line.number);
    if (int(lines.size()) > 2 + m)
      throw ParseError("unexpected trailing content", lines[2 + m].number);
  }
  return out;
}

ParsedInput parse_sets(const std::vector<Line>& lines) {
  int n = int(parse_int(tokens(lines[0].text)[0], lines[0].number));
  if (n < 1) throw ParseError("universe size must be positive", lines[0].number);
  ParsedInput out;
  out.kind = InstanceKind::Sets;
  out.sets.universe = n;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<int> set;
    for (const auto& t : tokens(lines[i].text)) {
      long j = parse_int(t, lines[i].number);
      if (j < 1 || j > n)
        throw ParseError("element id " + std::to_string(j) +
                             " outside 1.." + std::to_string(n),
                         lines[i].number);
      set.push_back(int(j));
    }
    out.sets.family.push_back(std::move(set));
  }
  if (out.sets.family.empty())
    throw ParseError("set system has no sets", lines[0].number);
  return out;
}

ParsedInput parse_flow(const std::vector<Line>& lines) {
  ParsedInput out;
  out.kind = InstanceKind::Flow;
  bool have_source = false, have_sink = false;
  int max_node = -1;
  for (const auto& line : lines) {
    auto toks = tokens(line.text);
    if (toks[0] == "source") {
      if (toks.size() != 2) throw ParseError("source line needs one node id", line.number);
      out.flow.source = int(parse_int(toks[1], line.number));
      max_node = std::max(max_node, out.flow.source);
      have_source = true;
    } else if (toks[0] == "sink") {
      if (toks.size() != 2) throw ParseError("sink line needs one node id", line.number);
      out.flow.sink = int(parse_int(toks[1], line.number));
      max_node = std::max(max_node, out.flow.sink);
      have_sink = true;
    } else {
      std::size_t base = toks[0] == "arc" ? 1 : 0;
      if (toks.size() != base + 3)
        throw ParseError("arc line must be 'u v capacity'", line.number);
      FlowInstance::Arc arc;
      arc.from = int(parse_int(toks[base], line.number));
      arc.to = int(parse_int(toks[base + 1], line.number));
      arc.capacity = parse_double(toks[base + 2], line.number);
      if (arc.from < 0 || arc.to < 0)
        throw ParseError("node ids must be nonnegative", line.number);
      if (!(arc.capacity > 0.0))
        throw ParseError("capacities must be strictly positive", line.number);
      max_node = std::max({max_node, arc.from, arc.to});
      out.flow.arcs.push_back(arc);
    }
  }
  if (!have_source || !have_sink)
    throw ParseError("flow file needs source and sink lines", lines[0].number);
  if (out.flow.arcs.empty())
    throw ParseError("flow file has no arcs", lines[0].number);
  out.flow.nodes = max_node + 1;
  return out;
}

std::string full_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

ParsedInput parse_instance_text(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty instance file", 1);
  auto head = tokens(lines[0].text);
  if (std::isalpha(static_cast<unsigned char>(head[0][0])))
    return parse_flow(lines);
  if (head.size() == 1) return parse_sets(lines);
  if (head.size() == 2) return parse_matrix(lines);
  throw ParseError("unrecognized header (expected 'n', 'm n', or flow lines)",
                   lines[0].number);
}

ParsedInput parse_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

std::string emit_instance(const ParsedInput& input) {
  std::ostringstream out;
  switch (input.kind) {
    case InstanceKind::ExplicitMatrix: {
      const auto& mat = input.matrix;
      out << mat.rows() << ' ' << mat.cols() << '\n';
      for (int r = 0; r < mat.rows(); ++r) {
        for (int c = 0; c < mat.cols(); ++c)
          out << (c ? " " : "") << full_number(mat.payoff(r, c));
        out << '\n';
      }
      if (mat.offset.size() > 0) {
        out << "b:";
        for (int r = 0; r < mat.rows(); ++r)
          out << ' ' << full_number(mat.offset[r]);
        out << '\n';
      }
      break;
    }
    case InstanceKind::Sets: {
      out << input.sets.universe << '\n';
      for (const auto& set : input.sets.family) {
        for (std::size_t i = 0; i < set.size(); ++i)
          out << (i ? " " : "") << set[i];
        out << '\n';
      }
      break;
    }
    case InstanceKind::Flow: {
      out << "source " << input.flow.source << '\n';
      out << "sink " << input.flow.sink << '\n';
      for (const auto& arc : input.flow.arcs)
        out << arc.from << ' ' << arc.to << ' ' << full_number(arc.capacity)
            << '\n';
      break;
    }
  }
  return out.str();
}

namespace {

struct SupportEntry {
  OracleAnswer answer;
  int multiplicity = 1;
};

std::vector<SupportEntry> aggregate_support(
    const std::vector<OracleAnswer>& support) {
  std::vector<SupportEntry> entries;
  for (const auto& ans : support) {
    bool merged = false;
    for (auto& entry : entries) {
      if (entry.answer.index == ans.index && entry.answer.point == ans.point) {
        ++entry.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) entries.push_back({ans, 1});
  }
  return entries;
}

void write_vector(std::ostream& out, const char* key, const Vector& v) {
  out << key << ':';
  for (int i = 0; i < v.size(); ++i) out << ' ' << format_number(v[i]);
  out << '\n';
}

void write_support(std::ostream& out,
                   const std::vector<OracleAnswer>& support) {
  auto entries = aggregate_support(support);
  out << "support_size: " << support.size() << '\n';
  out << "support_distinct: " << entries.size() << '\n';
  out << "support:\n";
  for (const auto& entry : entries) {
    out << "  " << entry.multiplicity << " idx=" << entry.answer.index;
    for (int i = 0; i < entry.answer.point.size(); ++i)
      out << ' ' << format_number(entry.answer.point[i]);
    out << '\n';
  }
}

void write_header(std::ostream& out, const RunConfig& cfg) {
  out << "packcover-result\n";
  out << "command: " << cfg.command << '\n';
  out << "eps: " << format_number(cfg.eps) << '\n';
  if (cfg.s) out << "s: " << *cfg.s << '\n';
  out << "cap_multiplier: " << format_number(cfg.cap_multiplier) << '\n';
  out << "delta1: " << format_number(cfg.delta1) << '\n';
  out << "delta2: " << format_number(cfg.delta2) << '\n';
  out << "seed: " << cfg.seed << '\n';
}

void write_fractional(std::ostream& out, const SolveResult& res, Sense sense) {
  out << "iterations: " << res.iterations << '\n';
  out << "lambda_bar: " << format_number(res.lambda_bar) << '\n';
  out << "best_dual: " << format_number(res.best_dual) << '\n';
  out << "average_dual: " << format_number(res.average_dual) << '\n';
  if (sense == Sense::GeneralizedPacking)
    out << "gap: " << format_number(res.lambda_bar - res.average_dual) << '\n';
  else if (res.best_dual != 0.0 && std::isfinite(res.best_dual))
    out << "gap: " << format_number(res.lambda_bar / res.best_dual) << '\n';
  else
    out << "gap: inf\n";
  write_vector(out, "x_bar", res.x_bar);
  write_vector(out, "image", res.image);
  write_support(out, res.support);
}

void write_integer(std::ostream& out, const IntegerSolveResult& res) {
  out << "iterations: " << res.iterations << '\n';
  out << "multiset_size: " << res.support.size() << '\n';
  write_vector(out, "constraint_sums", res.constraint_sums);
  write_support(out, res.support);
}

struct PreparedOracle {
  ProblemInstance inst;
  std::unique_ptr<Oracle> exact;
  std::unique_ptr<Oracle> approx;  // present when deltas are nonzero
  const Oracle& get() const { return approx ? *approx : *exact; }
};

PreparedOracle prepare_oracle(const RunConfig& cfg, const ParsedInput& input,
                              Sense sense) {
  PreparedOracle prep;
  switch (input.kind) {
    case InstanceKind::ExplicitMatrix:
      prep.inst = input.matrix.problem(sense);
      prep.exact = std::make_unique<SimplexOracle>(input.matrix, sense);
      break;
    case InstanceKind::Flow:
      if (sense == Sense::Covering)
        throw DomainError("flow instances support pack/int-pack only");
      prep.inst = input.flow.problem();
      prep.inst.sense = sense;
      prep.exact = std::make_unique<ShortestPathOracle>(input.flow);
      break;
    case InstanceKind::Sets: {
      if (sense != Sense::Covering)
        throw DomainError("set systems are covering instances; use 'cover' "
                          "or 'setcover'");
      SetSystemOracleView view{input.sets.universe, input.sets.family};
      prep.inst = view.problem();
      prep.exact = std::make_unique<FractionalSetCoverOracle>(std::move(view));
      break;
    }
  }
  if (cfg.delta1 > 0.0 || cfg.delta2 > 0.0)
    prep.approx = wrap_approximate_oracle(
        *prep.exact, sense, ApproxParams{cfg.delta1, cfg.delta2}, cfg.seed);
  return prep;
}

void run_dispatch(const RunConfig& cfg, const ParsedInput& input,
                  std::ostream& out) {
  SolveOptions opts;
  opts.cap_multiplier = cfg.cap_multiplier;

  write_header(out, cfg);

  if (cfg.command == "setcover") {
    if (input.kind != InstanceKind::Sets)
      throw DomainError("setcover requires a set-system file");
    auto [cover, cert] = greedy_set_cover(input.sets);
    int k = int(cover.size());
    out << "n: " << input.sets.universe << '\n';
    out << "sets: " << input.sets.family.size() << '\n';
    out << "cover_size: " << k << '\n';
    out << "cover:";
    for (int i : cover) out << ' ' << (i + 1);
    out << '\n';
    double hm = setcover_dual_bound(cert, k, input.sets.universe);
    out << "harmonic_mean_dual: " << format_number(hm) << '\n';
    out << "dual_lower_bound: "
        << format_number(double(k - 1) / std::log(double(input.sets.universe)))
        << '\n';
    out << "certificate:\n";
    for (const auto& rec : cert)
      out << "  " << rec.uncovered << ' ' << rec.best_gain << '\n';
    out << "end\n";
    return;
  }

  Sense sense = Sense::GeneralizedPacking;
  if (cfg.command == "pack" || cfg.command == "int-pack") sense = Sense::Packing;
  if (cfg.command == "cover" || cfg.command == "int-cover")
    sense = Sense::Covering;

  PreparedOracle prep = prepare_oracle(cfg, input, sense);
  out << "m: " << prep.inst.m << '\n';
  out << "n: " << prep.inst.n << '\n';
  out << "lower: " << format_number(prep.inst.lower) << '\n';
  out << "width: " << format_number(prep.inst.width) << '\n';

  if (cfg.command == "game") {
    SolveResult res =
        solve_generalized_packing(prep.inst, prep.get(), cfg.eps, opts);
    write_fractional(out, res, Sense::GeneralizedPacking);
  } else if (cfg.command == "pack") {
    SolveResult res =
        cfg.s ? solve_packing_given_s(prep.inst, prep.get(), cfg.eps, *cfg.s, opts)
              : solve_packing(prep.inst, prep.get(), cfg.eps, opts);
    write_fractional(out, res, Sense::Packing);
  } else if (cfg.command == "cover") {
    SolveResult res =
        cfg.s ? solve_covering_given_s(prep.inst, prep.get(), cfg.eps, *cfg.s, opts)
              : solve_covering(prep.inst, prep.get(), cfg.eps, opts);
    write_fractional(out, res, Sense::Covering);
  } else if (cfg.command == "int-pack") {
    write_integer(out, solve_integer_packing(prep.inst, prep.get(), cfg.eps, opts));
  } else if (cfg.command == "int-cover") {
    write_integer(out, solve_integer_covering(prep.inst, prep.get(), cfg.eps, opts));
  } else {
    throw DomainError("unknown command '" + cfg.command + "'");
  }
  out << "end\n";
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (!(cfg.eps > 0.0)) throw DomainError("eps must be positive");
    ParsedInput input = parse_instance_file(cfg.input_path);
    std::ostringstream doc;
    run_dispatch(cfg, input, doc);
    if (!cfg.output_path.empty()) {
      std::ofstream file(cfg.output_path, std::ios::binary);
      if (!file)
        throw Error(ErrorCode::Generic,
                    "cannot open output file '" + cfg.output_path + "'");
      file << doc.str();
    } else {
      out << doc.str();
    }
    return 0;
  } catch (const Error& e) {
    err << "error[" << int(e.code()) << "]: " << e.what() << '\n';
    return int(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return int(ErrorCode::Generic);
  }
}

}  // namespace packcover
