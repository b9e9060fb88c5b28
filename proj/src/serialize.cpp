#include "ariki/serialize.hpp"

#include <sstream>

#include "ariki/error.hpp"

namespace ariki {

namespace {

template <class Part>
std::string format_shape(const MultiShape<Part>& m, const char* empty) {
  std::string out;
  for (int c = 0; c < m.d(); ++c) {
    if (c) out += ',';
    const auto parts = m[c].parts();
    if (parts.empty()) out += empty;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += '.';
      out += std::to_string(parts[i]);
    }
  }
  return out;
}

int parse_positive(const std::string& s) {
  if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidArgument("expected a positive integer, got '" + s + "'");
  const int x = std::stoi(s);
  if (x < 1) throw InvalidArgument("parts must be positive");
  return x;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::vector<int>> parse_rows(const std::string& raw, int d) {
  std::string text;
  for (char ch : raw)
    if (ch != ' ' && ch != '(' && ch != ')') text += ch;
  std::vector<std::vector<int>> rows;
  for (const auto& comp : split(text, ',')) {
    std::vector<int> parts;
    if (comp != "-" && comp != "0" && !comp.empty())
      for (const auto& x : split(comp, '.')) parts.push_back(parse_positive(x));
    rows.push_back(std::move(parts));
  }
  if (d > 0 && static_cast<int>(rows.size()) != d)
    throw InvalidArgument("expected " + std::to_string(d) + " components in '" + raw + "'");
  return rows;
}

template <class Part>
MultiShape<Part> shape_from_rows(std::vector<std::vector<int>> rows) {
  std::vector<Part> comps;
  for (auto& r : rows) comps.emplace_back(std::move(r));
  return MultiShape<Part>(std::move(comps));
}

template <class Part>
Json shape_json(const MultiShape<Part>& m) {
  Json j = Json::array();
  for (const auto& c : m.components()) j.push_back(Json(std::vector<int>(c.parts().begin(), c.parts().end())));
  return j;
}

Json avalue_json(const AValue& a) { return a.str(); }

AValue avalue_from_json(const Json& j) {
  const Rational r = Rational::parse(j.get<std::string>());
  return AValue{r.num(), static_cast<int>(r.den())};
}

}  // namespace

std::string format_multipartition(const Multipartition& m) { return format_shape(m, "-"); }
std::string format_multicomposition(const Multicomposition& m) { return format_shape(m, "-"); }

Multipartition parse_multipartition(const std::string& text, int d) {
  return shape_from_rows<Partition>(parse_rows(text, d));
}

Multicomposition parse_multicomposition(const std::string& text, int d) {
  return shape_from_rows<Composition>(parse_rows(text, d));
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split(text, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(s, &used));
      if (used != s.size()) throw InvalidArgument("bad integer '" + s + "'");
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad integer '" + s + "'");
    }
  }
  return out;
}

Json to_json(const Multipartition& m) { return shape_json(m); }
Json to_json(const Multicomposition& m) { return shape_json(m); }

Json to_json(const ChargeParams& p) {
  return Json{{"d", p.d()}, {"e", p.e()}, {"v", std::vector<int>(p.v().begin(), p.v().end())}, {"s", p.s()}};
}

Json to_json(const LaurentPoly& p) {
  Json j = Json::array();
  for (const auto& [k, c] : p.terms()) j.push_back(Json::array({k, c}));
  return j;
}

Json to_json(const FockVector& v) {
  Json j = Json::array();
  for (const auto& [m, c] : v.terms()) j.push_back(Json::array({to_json(m), to_json(c)}));
  return j;
}

Json to_json(const CrystalGraph& g) {
  Json levels = Json::array();
  for (const auto& level : g.levels) {
    Json l = Json::array();
    for (const auto& m : level) l.push_back(to_json(m));
    levels.push_back(l);
  }
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"from", to_json(e.from)},
                     {"to", to_json(e.to)},
                     {"residue", e.residue},
                     {"node", Json::array({e.node.row, e.node.col, e.node.comp})}});
  return Json{{"order", to_string(g.order)}, {"levels", levels}, {"edges", edges}};
}

Json to_json(const AGraph& g) {
  Json steps = Json::array();
  for (const auto& s : g.steps)
    steps.push_back({{"before", to_json(s.before)},
                     {"residue", s.residue},
                     {"node", Json::array({s.node.row, s.node.col, s.node.comp})},
                     {"after", to_json(s.after)}});
  return Json{{"start", to_json(g.start)}, {"steps", steps}};
}

Json to_json(const DecompositionMatrix& m) {
  Json j;
  j["rows"] = Json::array();
  for (const auto& r : m.rows) j["rows"].push_back(to_json(r));
  j["row_a"] = Json::array();
  for (const auto& a : m.row_a) j["row_a"].push_back(avalue_json(a));
  j["cols"] = Json::array();
  for (const auto& c : m.cols) j["cols"].push_back(to_json(c));
  j["col_a"] = Json::array();
  for (const auto& a : m.col_a) j["col_a"].push_back(avalue_json(a));
  j["col_kleshchev"] = Json::array();
  for (const auto& k : m.col_kleshchev) j["col_kleshchev"].push_back(k ? to_json(*k) : Json());
  j["entries"] = m.entries;
  j["graded"] = Json::array();
  for (const auto& row : m.graded) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    j["graded"].push_back(r);
  }
  return j;
}

Json to_json(const std::vector<CanonicalBasisElement>& basis) {
  Json j = Json::array();
  for (const auto& b : basis) j.push_back({{"label", to_json(b.label)}, {"a", avalue_json(b.a)}, {"vector", to_json(b.vector)}});
  return j;
}

Multipartition multipartition_from_json(const Json& j) {
  try {
    std::vector<std::vector<int>> rows = j.get<std::vector<std::vector<int>>>();
    return shape_from_rows<Partition>(std::move(rows));
  } catch (const Json::exception& ex) {
    throw InvalidArgument(std::string("bad multipartition JSON: ") + ex.what());
  }
}

ChargeParams params_from_json(const Json& j) {
  try {
    std::optional<int> s;
    if (j.contains("s") && !j.at("s").is_null()) s = j.at("s").get<int>();
    return ChargeParams::make(j.at("d").get<int>(), j.at("e").get<int>(), j.at("v").get<std::vector<int>>(), s);
  } catch (const Json::exception& ex) {
    throw InvalidArgument(std::string("bad parameter JSON: ") + ex.what());
  }
}

LaurentPoly laurent_from_json(const Json& j) {
  try {
    LaurentPoly p;
    for (const auto& t : j) {
      if (t.size() != 2) throw InvalidArgument("Laurent terms are [exponent, coefficient] pairs");
      p += LaurentPoly::monomial(t.at(0).get<int>(), t.at(1).get<std::int64_t>());
    }
    return p;
  } catch (const Json::exception& ex) {
    throw InvalidArgument(std::string("bad Laurent JSON: ") + ex.what());
  }
}

FockVector fock_from_json(const Json& j) {
  FockVector v;
  try {
    for (const auto& t : j) {
      if (t.size() != 2) throw InvalidArgument("Fock terms are [multipartition, laurent] pairs");
      v.add(multipartition_from_json(t.at(0)), laurent_from_json(t.at(1)));
    }
  } catch (const Json::exception& ex) {
    throw InvalidArgument(std::string("bad Fock JSON: ") + ex.what());
  }
  return v;
}

DecompositionMatrix matrix_from_json(const Json& j) {
  try {
    DecompositionMatrix m;
    for (const auto& r : j.at("rows")) m.rows.push_back(multipartition_from_json(r));
    for (const auto& a : j.at("row_a")) m.row_a.push_back(avalue_from_json(a));
    for (const auto& c : j.at("cols")) m.cols.push_back(multipartition_from_json(c));
    for (const auto& a : j.at("col_a")) m.col_a.push_back(avalue_from_json(a));
    for (const auto& k : j.at("col_kleshchev"))
      m.col_kleshchev.push_back(k.is_null() ? std::nullopt : std::optional(multipartition_from_json(k)));
    m.entries = j.at("entries").get<std::vector<std::vector<std::int64_t>>>();
    for (const auto& row : j.at("graded")) {
      std::vector<LaurentPoly> r;
      for (const auto& x : row) r.push_back(laurent_from_json(x));
      m.graded.push_back(std::move(r));
    }
    return m;
  } catch (const Json::exception& ex) {
    throw InvalidArgument(std::string("bad matrix JSON: ") + ex.what());
  }
}

std::string format_node(const Node& n) {
  return "(" + std::to_string(n.row) + "," + std::to_string(n.col) + "," + std::to_string(n.comp) + ")";
}

std::string format_stage(const Multipartition& m) { return "(" + format_shape(m, "0") + ")"; }

std::string format_fock(const FockVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    const bool one = c == LaurentPoly(1);
    const bool mono = c.terms().size() == 1;
    if (!one) os << (mono ? c.str() : "(" + c.str() + ")") << '*';
    os << format_stage(m);
  }
  return os.str();
}

std::string format_a_graph(const AGraph& g) {
  std::ostringstream os;
  for (const auto& s : g.steps)
    os << format_stage(s.before) << " --" << s.residue << "-opt (" << s.node.row << ',' << s.node.comp << ")--> "
       << format_stage(s.after) << '\n';
  return os.str();
}

std::string format_matrix(const DecompositionMatrix& m) {
  std::ostringstream os;
  std::vector<std::string> rl;
  std::size_t w = 0;
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    rl.push_back(format_multipartition(m.rows[r]) + " [a=" + m.row_a[r].str() + "]");
    w = std::max(w, rl.back().size());
  }
  os << "columns:\n";
  for (std::size_t c = 0; c < m.cols.size(); ++c) {
    os << "  " << c << ": " << format_multipartition(m.cols[c]) << " [a=" << m.col_a[c].str() << "]";
    if (m.col_kleshchev[c]) os << " kleshchev " << format_multipartition(*m.col_kleshchev[c]);
    os << '\n';
  }
  os << "rows:\n";
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    os << "  " << rl[r] << std::string(w - rl[r].size(), ' ') << " |";
    for (std::size_t c = 0; c < m.cols.size(); ++c) os << ' ' << m.entries[r][c];
    os << '\n';
  }
  return os.str();
}

std::string format_basis(const std::vector<CanonicalBasisElement>& basis) {
  std::ostringstream os;
  for (const auto& b : basis) os << format_multipartition(b.label) << ": " << format_fock(b.vector) << '\n';
  return os.str();
}

std::string crystal_to_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (const auto& level : g.levels)
    for (const auto& m : level) os << "  \"" << format_multipartition(m) << "\";\n";
  for (const auto& e : g.edges)
    os << "  \"" << format_multipartition(e.from) << "\" -> \"" << format_multipartition(e.to) << "\" [label=\""
       << e.residue << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace ariki
