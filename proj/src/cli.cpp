#include "loopfusion/cli.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "loopfusion/abelian.hpp"
#include "loopfusion/errors.hpp"
#include "loopfusion/level_rank.hpp"

namespace loopfusion {

using nlohmann::json;

std::string format_double(double v, int precision) {
  if (v == 0.0) v = 0.0;  // folds -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

std::optional<Format> parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "dot") return Format::dot;
  if (s == "text") return Format::text;
  return std::nullopt;
}

LevelWeight parse_weight(const std::string& s, int rank, int level) {
  if (s == "vacuum") return LevelWeight::vacuum(rank, level);
  std::vector<int> labels;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      labels.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ArgumentError("cannot parse weight label '" + item + "'");
    }
  }
  return LevelWeight(rank, level, std::move(labels));
}

void validate(const RunConfig& c) {
  const auto& t = c.tolerances;
  if (!(t.unitarity > 0) || !(t.integrality > 0) || !(t.identity > 0))
    throw ArgumentError("tolerances must be > 0");
  if (c.limits.max_basis < 1 || c.limits.max_tuples < 1) throw ArgumentError("resource caps must be >= 1");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

json labels_json(const LevelWeight& w) { return json(std::vector<int>(w.labels().begin(), w.labels().end())); }

json complex_json(Complex z) { return json::array({z.real() == 0.0 ? 0.0 : z.real(), z.imag() == 0.0 ? 0.0 : z.imag()}); }

json rational_json(const Rational& r) { return json::array({r.numerator(), r.denominator()}); }

std::string rational_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string tuple_string(const SectorVector::Tuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += "⊗";
    s += t[i].to_string();
  }
  return s;
}

std::string context_string(int n, int m) {
  return "SU(" + std::to_string(n) + ") level " + std::to_string(m);
}

struct Payload {
  json params = json::object();
  json data;
  std::vector<Check> checks;
  std::string csv;
  std::string text;
  std::string dot;
};

std::string checks_text(const std::vector<Check>& checks) {
  std::string s;
  for (const auto& c : checks)
    s += std::string(c.pass ? "PASS " : "FAIL ") + c.name + "  residual=" + format_double(c.residual, 6) +
         "  tol=" + format_double(c.tolerance, 3) + "\n";
  return s;
}

std::string render(const Payload& p, Format f) {
  switch (f) {
    case Format::json: {
      json checks = json::array();
      for (const auto& c : p.checks) checks.push_back({{"name", c.name}, {"residual", c.residual}, {"pass", c.pass}});
      json doc = {{"params", p.params}, {"data", p.data}, {"checks", checks}};
      return doc.dump(2) + "\n";
    }
    case Format::csv:
      return p.csv;
    case Format::dot:
      return p.dot;
    case Format::text:
      return p.text + (p.checks.empty() ? "" : "checks:\n" + checks_text(p.checks));
  }
  return {};
}

// ---------------------------------------------------------------------------

Payload cmd_weights(const RunConfig& c) {
  const auto weights = enumerate_weights(c.n, c.m);
  Payload p;
  p.params = {{"n", c.n}, {"m", c.m}};
  p.data = json::array();
  p.csv = "index,labels,congruence,h\n";
  p.text = context_string(c.n, c.m) + ": " + std::to_string(weights.size()) + " weights\n";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto& w = weights[i];
    const Rational h = conformal_weight(w);
    p.data.push_back({{"labels", labels_json(w)}, {"congruence", congruence_class(w)}, {"h", rational_json(h)}});
    p.csv += std::to_string(i) + "," + csv_field(w.to_string()) + "," + std::to_string(congruence_class(w)) + "," +
             rational_string(h) + "\n";
    p.text += "  " + w.to_string() + "  class " + std::to_string(congruence_class(w)) + "  h = " + rational_string(h) + "\n";
  }
  if (c.verify) {
    double count = std::abs(static_cast<double>(weights.size()) - static_cast<double>(weight_count(c.n, c.m)));
    double invol = 0, action = 0, conj_class = 0, rot_class = 0;
    for (const auto& w : weights) {
      if (conjugate(conjugate(w)) != w) invol += 1;
      if ((congruence_class(conjugate(w)) + congruence_class(w)) % c.n != 0) conj_class += 1;
      if (congruence_class(rotate(w, 1)) != (congruence_class(w) + c.m) % c.n) rot_class += 1;
      if (rotate(w, c.n) != w) action += 1;
      for (int a = 0; a < c.n; ++a)
        for (int b = 0; b < c.n; ++b)
          if (rotate(rotate(w, a), b) != rotate(w, a + b)) action += 1;
    }
    p.checks = {make_check("enumeration_count", count, 0.5), make_check("conjugation_involution", invol, 0.5),
                make_check("rotation_group_action", action, 0.5),
                make_check("congruence_of_conjugate", conj_class, 0.5),
                make_check("congruence_of_rotation", rot_class, 0.5)};
  }
  return p;
}

Payload cmd_smatrix(const RunConfig& c) {
  const ModularData md = build_modular_data(c.n, c.m, c.limits);
  Payload p;
  p.params = {{"n", c.n}, {"m", c.m}};
  json basis = json::array(), s = json::array(), twists = json::array();
  p.csv = "row,col,re,im\n";
  p.text = context_string(c.n, c.m) + ": S-matrix of dimension " + std::to_string(md.size()) + "\n";
  for (std::size_t i = 0; i < md.size(); ++i) {
    basis.push_back(labels_json(md.weight(i)));
    twists.push_back(complex_json(md.twists()[i]));
    json row = json::array();
    for (std::size_t j = 0; j < md.size(); ++j) {
      row.push_back(complex_json(md.s(i, j)));
      p.csv += std::to_string(i) + "," + std::to_string(j) + "," + format_double(md.s(i, j).real()) + "," +
               format_double(md.s(i, j).imag()) + "\n";
    }
    s.push_back(row);
    p.text += "  " + md.weight(i).to_string() + "  d = " + format_double(md.qdims()[i], 12) +
              "  h = " + rational_string(conformal_weight(md.weight(i))) + "\n";
  }
  p.text += "S00 = " + format_double(md.s00(), 15) + "\nglobal index = " + format_double(global_index(md), 15) + "\n";
  p.data = {{"basis", basis},
            {"S", s},
            {"twists", twists},
            {"qdims", md.qdims()},
            {"global_index", global_index(md)}};
  if (c.verify) p.checks = verify_modular_data(md, c.tolerances);
  return p;
}

Payload cmd_fusion(const RunConfig& c) {
  auto md = std::make_shared<const ModularData>(build_modular_data(c.n, c.m, c.limits));
  const FusionTensor n = fusion_tensor(md, c.tolerances);
  Payload p;
  p.params = {{"n", c.n}, {"m", c.m}};
  json basis = json::array(), coeffs = json::array();
  p.csv = "lambda,mu,nu,N\n";
  p.text = context_string(c.n, c.m) + " fusion rules\n";
  for (std::size_t i = 0; i < md->size(); ++i) basis.push_back(labels_json(md->weight(i)));
  for (std::size_t l = 0; l < md->size(); ++l)
    for (std::size_t m = 0; m < md->size(); ++m) {
      std::string line;
      for (const auto& ch : n.product(l, m)) {
        coeffs.push_back({l, m, ch.index, ch.multiplicity});
        p.csv += csv_field(md->weight(l).to_string()) + "," + csv_field(md->weight(m).to_string()) + "," +
                 csv_field(md->weight(ch.index).to_string()) + "," + std::to_string(ch.multiplicity) + "\n";
        if (!line.empty()) line += " + ";
        if (ch.multiplicity != 1) line += std::to_string(ch.multiplicity) + " ";
        line += md->weight(ch.index).to_string();
      }
      if (l <= m) p.text += "  " + md->weight(l).to_string() + " x " + md->weight(m).to_string() + " = " + line + "\n";
    }
  p.data = {{"basis", basis}, {"coefficients", coeffs}};
  if (c.verify) p.checks = verify_fusion(n, c.tolerances);
  return p;
}

Payload cmd_levelrank(const RunConfig& c) {
  const ModularData upper = build_modular_data(c.m, c.n, c.limits);
  const ModularData lower = build_modular_data(c.n, c.m, c.limits);
  const BranchingTable table = branching_table(upper, lower);
  const LevelRankReport report = verify_level_rank(table, upper, lower, c.tolerances);
  Payload p;
  p.params = {{"m", c.m}, {"n", c.n}};
  json rows = json::array();
  p.csv = "upper,beta,sigma,lower,h_upper,h_lower\n";
  p.text = "SU(" + std::to_string(c.m) + ") level " + std::to_string(c.n) + " x SU(" + std::to_string(c.n) +
           ") level " + std::to_string(c.m) + " in SU(" + std::to_string(c.m * c.n) + ") level 1\n";
  for (const auto& row : table.rows) {
    const LevelWeight b = beta(row.upper);
    rows.push_back({{"upper", labels_json(row.upper)},
                    {"beta", labels_json(b)},
                    {"sigma", row.sigma},
                    {"lower", labels_json(row.lower)},
                    {"h_upper", rational_json(row.h_upper)},
                    {"h_lower", rational_json(row.h_lower)}});
    p.csv += csv_field(row.upper.to_string()) + "," + csv_field(b.to_string()) + "," + std::to_string(row.sigma) +
             "," + csv_field(row.lower.to_string()) + "," + rational_string(row.h_upper) + "," +
             rational_string(row.h_lower) + "\n";
    p.text += "  " + row.upper.to_string() + " -> beta " + b.to_string() + " -> sigma " + std::to_string(row.sigma) +
              " -> " + row.lower.to_string() + "   h = " + rational_string(row.h_upper) + " + " +
              rational_string(row.h_lower) + "\n";
  }
  p.text += "sum over Q0 of S(0, .)^2 = " + format_double(report.sum_upper_s_squared, 15) + "\n";
  p.data = {{"rows", rows}, {"sum_upper_s_squared", report.sum_upper_s_squared}};
  if (c.verify) p.checks = level_rank_checks(report, c.tolerances);
  return p;
}

Payload cmd_index(const RunConfig& c) {
  const ModularData md = build_modular_data(c.n, c.m, c.limits);
  const LevelWeight w = c.weight ? parse_weight(*c.weight, c.n, c.m) : LevelWeight::vacuum(c.n, c.m);
  const IndexReport r = jw_index(md, c.components, w);
  Payload p;
  p.params = {{"n", c.n}, {"m", c.m}, {"components", c.components}, {"weight", labels_json(w)}};
  p.data = {{"s00", r.s00}, {"qdim", r.qdim}, {"d", r.dimension}, {"index", r.index}, {"trace", r.trace},
            {"tau_s2_x_s1", tau_s2_x_s1(md)}};
  p.csv = "n,m,components,weight,d,index\n" + std::to_string(c.n) + "," + std::to_string(c.m) + "," +
          std::to_string(c.components) + "," + csv_field(w.to_string()) + "," + format_double(r.dimension) + "," +
          format_double(r.index) + "\n";
  p.text = context_string(c.n, c.m) + ", " + std::to_string(c.components) + " components, weight " + w.to_string() +
           "\nd = " + format_double(r.dimension, 15) + ", index = " + format_double(r.index, 15) + "\n";
  for (const auto& line : r.trace) p.text += "  " + line + "\n";
  if (c.verify) {
    const Tolerances& t = c.tolerances;
    p.checks.push_back(make_check("d_at_least_one", std::max(0.0, 1.0 - r.dimension), t.identity));
    const IndexReport vac2 = jw_index(md, 2, LevelWeight::vacuum(c.n, c.m));
    p.checks.push_back(make_check("two_component_vacuum_equals_tau", std::abs(vac2.dimension - tau_s2_x_s1(md)), t.identity));
    if (c.m == 1 && w.is_vacuum()) {
      const double expected = std::pow(static_cast<double>(c.n), c.components - 1);
      p.checks.push_back(make_check("level_one_index_is_power_of_n", std::abs(r.index - expected) / expected, t.identity));
    }
    const double target = std::pow(md.s00(), -(2 * c.components - 2));
    const double spectral = weighted_multipoint_sum_spectral(md, c.components);
    p.checks.push_back(make_check("rho_bar_rho_dimension_spectral", std::abs(spectral - target) / target, t.identity));
    if (std::pow(static_cast<double>(md.size()), c.components - 1) <= static_cast<double>(c.limits.max_tuples)) {
      auto shared = std::make_shared<const ModularData>(md);
      const FusionTensor n = fusion_tensor(shared, t);
      const double total = total_dimension(rho_bar_rho(n, c.components, c.limits), md);
      p.checks.push_back(make_check("rho_bar_rho_dimension_enumerated", std::abs(total - target) / target, t.identity));
    }
  }
  return p;
}

Payload cmd_graph(const RunConfig& c) {
  auto md = std::make_shared<const ModularData>(build_modular_data(c.n, c.m, c.limits));
  const FusionTensor n = fusion_tensor(md, c.tolerances);
  const PrincipalGraph g = dual_principal_graph(n, c.components, c.limits);
  const auto reachable = odd_vertex_reachable(g);
  Payload p;
  p.params = {{"n", c.n}, {"m", c.m}, {"components", c.components}};
  json even = json::array(), odd = json::array(), edges = json::array();
  for (const auto& t : g.even) {
    json tuple = json::array();
    for (const auto& w : t) tuple.push_back(labels_json(w));
    even.push_back(tuple);
  }
  for (std::size_t i = 0; i < g.odd.size(); ++i)
    odd.push_back({{"labels", labels_json(g.odd[i])}, {"reachable", static_cast<bool>(reachable[i])}});
  p.csv = "even,odd,multiplicity\n";
  for (const auto& e : g.edges) {
    edges.push_back({e.even, e.odd, e.multiplicity});
    p.csv += csv_field(tuple_string(g.even[e.even])) + "," + csv_field(g.odd[e.odd].to_string()) + "," +
             std::to_string(e.multiplicity) + "\n";
  }
  p.data = {{"even", even}, {"odd", odd}, {"edges", edges}, {"depth", g.depth}};
  p.dot = to_dot(g);
  p.text = "dual principal graph, " + context_string(c.n, c.m) + ", " + std::to_string(c.components) +
           " components\n  even vertices: " + std::to_string(g.even.size()) + "\n  odd vertices: " +
           std::to_string(g.odd.size()) + "\n  edges: " + std::to_string(g.edges.size()) +
           "\n  depth: " + std::to_string(g.depth) + "\n";
  for (const auto& e : g.edges)
    p.text += "  " + tuple_string(g.even[e.even]) + " -- ρ·" + g.odd[e.odd].to_string() +
              (e.multiplicity > 1 ? "  x" + std::to_string(e.multiplicity) : "") + "\n";
  if (c.verify) p.checks = verify_principal_graph(g, *md, c.tolerances);
  return p;
}

Payload cmd_u1(const RunConfig& c) {
  const AbelianModel model = build_abelian(c.n);
  const AbelianIndex idx = abelian_disconnected_index(c.n, c.components);
  Payload p;
  p.params = {{"n", c.n}, {"components", c.components}};
  json twists = json::array(), weights = json::array(), table = json::array();
  p.csv = "j,k,re,im\n";
  p.text = "U(1) at level " + std::to_string(c.n) + (model.even() ? " (even)" : " (odd)") + "\n";
  for (int j = 0; j < c.n; ++j) {
    twists.push_back(complex_json(model.twist(j)));
    weights.push_back(rational_json(model.conformal_weight(j)));
    json row = json::array();
    std::string line = "  ";
    for (int k = 0; k < c.n; ++k) {
      const Complex z = model.monodromy(j, k);
      row.push_back(complex_json(z));
      p.csv += std::to_string(j) + "," + std::to_string(k) + "," + format_double(z.real()) + "," +
               format_double(z.imag()) + "\n";
      line += (k ? " " : "") + std::string("exp(2pi i ") + rational_string(Rational((static_cast<long>(j) * k) % c.n, c.n)) + ")";
    }
    table.push_back(row);
    p.text += line + "\n";
  }
  p.text += "index for " + std::to_string(c.components) + " components: lower bound " +
            format_double(idx.lower_bound, 15) + ", value " + format_double(*idx.value, 15) + "\n";
  p.data = {{"even", model.even()},
            {"conformal_weights", weights},
            {"twists", twists},
            {"monodromy", table},
            {"index", {{"components", c.components}, {"lower_bound", idx.lower_bound}, {"value", *idx.value}}}};
  if (c.verify) p.checks = verify_abelian(model, c.tolerances);
  return p;
}

Payload cmd_inclusion(const RunConfig& c) {
  Inclusion kind;
  if (c.kind == "sumxsun")
    kind = Inclusion::SUmxSUn_in_SUmn;
  else if (c.kind == "u1xsun")
    kind = Inclusion::U1xSUn_in_Un;
  else
    throw ArgumentError("unknown inclusion kind '" + c.kind + "' (expected sumxsun or u1xsun)");
  const double d2 = conformal_inclusion_index(kind, c.m, c.n, c.components, c.limits);
  Payload p;
  p.params = {{"kind", c.kind}, {"m", c.m}, {"n", c.n}, {"components", c.components}};
  p.data = {{"d_squared", d2}};
  p.csv = "kind,m,n,components,d_squared\n" + c.kind + "," + std::to_string(c.m) + "," + std::to_string(c.n) + "," +
          std::to_string(c.components) + "," + format_double(d2) + "\n";
  p.text = std::string(kind == Inclusion::U1xSUn_in_Un ? "U(1) x SU(n) in U(n)" : "SU(m) x SU(n) in SU(mn)") +
           ", m = " + std::to_string(c.m) + ", n = " + std::to_string(c.n) + ", " + std::to_string(c.components) +
           " components: d^2 = " + format_double(d2, 15) + "\n";
  if (c.verify && kind == Inclusion::SUmxSUn_in_SUmn) {
    const FactorizationReport f = verify_index_factorization(c.m, c.n, c.components, c.tolerances, c.limits);
    const double from_upper =
        1.0 / (std::pow(static_cast<double>(c.m), c.components) * std::pow(f.upper_s00, 2 * c.components));
    p.checks = {make_check("index_factorization", f.factorization_residual, c.tolerances.identity),
                make_check("vacuum_s_ratio", f.vacuum_ratio_residual, c.tolerances.identity),
                make_check("both_sides_of_level_rank_agree", std::abs(from_upper - d2) / d2, c.tolerances.identity)};
  } else if (c.verify) {
    const double expected = std::pow(static_cast<double>(c.n), c.components);
    p.checks = {make_check("u1_index_power", std::abs(d2 - expected) / expected, c.tolerances.identity)};
  }
  return p;
}

}  // namespace

std::string to_dot(const PrincipalGraph& g) {
  std::ostringstream os;
  os << "graph dual_principal_graph {\n";
  os << "  label=\"SU(" << g.rank << ") level " << g.level << ", " << g.components << " components\";\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < g.even.size(); ++i) os << "  e" << i << " [label=\"" << tuple_string(g.even[i]) << "\"];\n";
  os << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < g.odd.size(); ++i)
    os << "  o" << i << " [label=\"ρ·" << g.odd[i].to_string() << "\"];\n";
  for (const auto& e : g.edges)
    for (std::int64_t k = 0; k < e.multiplicity; ++k) os << "  e" << e.even << " -- o" << e.odd << ";\n";
  os << "}\n";
  return os.str();
}

CommandResult run_command(const RunConfig& c) {
  static const std::map<std::string, std::function<Payload(const RunConfig&)>> commands = {
      {"weights", cmd_weights}, {"smatrix", cmd_smatrix}, {"fusion", cmd_fusion}, {"levelrank", cmd_levelrank},
      {"index", cmd_index},     {"graph", cmd_graph},     {"u1", cmd_u1},         {"inclusion", cmd_inclusion}};
  CommandResult result;
  try {
    validate(c);
    auto it = commands.find(c.command);
    if (it == commands.end()) throw ArgumentError("unknown command '" + c.command + "'");
    if (c.format == Format::dot && c.command != "graph") throw ArgumentError("--format dot is only available for graph");
    const Payload p = it->second(c);
    result.output = render(p, c.format);
    if (!all_pass(p.checks)) {
      result.exit_code = exit_code::consistency;
      for (const auto& ch : p.checks)
        if (!ch.pass) result.error += "check failed: " + ch.name + " residual " + format_double(ch.residual, 6) + "\n";
    }
  } catch (const ArgumentError& e) {
    result = {"", std::string("usage error: ") + e.what() + "\n", exit_code::usage};
  } catch (const ConsistencyError& e) {
    result = {"", std::string("consistency failure: ") + e.what() + "\n", exit_code::consistency};
  } catch (const ResourceError& e) {
    result = {"", std::string("resource cap: ") + e.what() + "\n", exit_code::resource};
  } catch (const std::exception& e) {
    result = {"", std::string("error: ") + e.what() + "\n", 1};
  }
  return result;
}

}  // namespace loopfusion
