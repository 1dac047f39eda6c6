#include "xmg/bundle.hpp"

#include <fstream>
#include <sstream>

namespace xmg {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
  std::vector<int> columns;  // 1-based start column per token
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    Line line;
    line.number = number;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      if (i >= raw.size() || raw[i] == '#') break;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      line.tokens.push_back(raw.substr(start, i - start));
      line.columns.push_back(static_cast<int>(start) + 1);
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

Idx parse_idx(const Line& line, std::size_t tok) {
  if (tok >= line.tokens.size())
    throw ParseError(line.number, 1, "missing number");
  const std::string& s = line.tokens[tok];
  for (char c : s)
    if (c < '0' || c > '9')
      throw ParseError(line.number, line.columns[tok],
                       "expected a number, got '" + s + "'");
  return static_cast<Idx>(std::stoul(s));
}

std::vector<Idx> parse_idx_list(const Line& line, std::size_t from) {
  std::vector<Idx> out;
  for (std::size_t i = from; i < line.tokens.size(); ++i)
    out.push_back(parse_idx(line, i));
  return out;
}

// Section reader: consumes lines until "end".
struct Reader {
  const std::vector<Line>& lines;
  std::size_t pos = 0;

  bool done() const { return pos >= lines.size(); }
  const Line& peek() const { return lines[pos]; }
  const Line& next() { return lines[pos++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Line& l = done() ? lines.back() : lines[pos];
    throw ParseError(done() ? l.number + 1 : l.number, 1, msg);
  }
};

TheoryPtr read_theory(Reader& r, std::optional<std::pair<MonoidKind, Idx>>& kind_out) {
  FiniteMonoid monoid;
  RightMSet xset;
  bool reflexive = false;
  bool explicit_form = false;
  bool have_kind = false;
  MonoidKind kind = MonoidKind::oriented;
  Idx x_size = 0;
  std::vector<std::vector<Idx>> mul_rows, act_rows;

  while (true) {
    if (r.done()) r.fail("unterminated theory section");
    Line line = r.next();
    const std::string& key = line.tokens[0];
    if (key == "end") break;
    if (key == "kind") {
      if (line.tokens.size() != 3)
        throw ParseError(line.number, 1, "usage: kind <name> <x-size>");
      auto k = monoid_kind_from_name(line.tokens[1]);
      if (!k)
        throw ParseError(line.number, line.columns[1],
                         "unknown monoid kind '" + line.tokens[1] + "'");
      kind = *k;
      x_size = parse_idx(line, 2);
      have_kind = true;
    } else if (key == "explicit") {
      explicit_form = true;
    } else if (key == "reflexive") {
      reflexive = parse_idx(line, 1) != 0;
    } else if (key == "elements") {
      (void)parse_idx(line, 1);
    } else if (key == "name") {
      if (line.tokens.size() != 2)
        throw ParseError(line.number, 1, "usage: name <element-name>");
      monoid.names.push_back(line.tokens[1]);
    } else if (key == "mul") {
      mul_rows.push_back(parse_idx_list(line, 1));
    } else if (key == "carrier") {
      (void)parse_idx(line, 1);
    } else if (key == "xname") {
      if (line.tokens.size() != 2)
        throw ParseError(line.number, 1, "usage: xname <carrier-name>");
      xset.names.push_back(line.tokens[1]);
    } else if (key == "xact") {
      act_rows.push_back(parse_idx_list(line, 1));
    } else {
      throw ParseError(line.number, line.columns[0],
                       "unknown theory key '" + key + "'");
    }
  }

  if (have_kind) {
    kind_out = {kind, x_size};
    return standard_theory(x_size, kind);
  }
  if (!explicit_form)
    throw ParseError(r.done() ? 0 : r.peek().number, 1,
                     "theory section needs 'kind' or 'explicit'");
  for (const auto& row : mul_rows) {
    if (row.size() != monoid.names.size())
      throw ParseError(0, 1, "mul row length differs from element count");
    for (Idx v : row) monoid.mul.push_back(v);
  }
  if (mul_rows.size() != monoid.names.size())
    throw ParseError(0, 1, "mul row count differs from element count");
  for (const auto& row : act_rows) {
    if (row.size() != monoid.names.size())
      throw ParseError(0, 1, "xact row length differs from element count");
    for (Idx v : row) xset.act.push_back(v);
  }
  if (act_rows.size() != xset.names.size())
    throw ParseError(0, 1, "xact row count differs from carrier count");
  monoid.identity = 0;
  kind_out = std::nullopt;
  return std::make_shared<const Theory>(
      make_theory(std::move(monoid), std::move(xset), reflexive));
}

GraphPtr read_graph(Reader& r, const TheoryPtr& theory,
                    const std::string& name) {
  if (!theory)
    r.fail("graph section before any theory section");
  Idx nV = 0;
  std::vector<std::vector<Idx>> inc_rows, act_rows;
  std::vector<Idx> loops;
  bool have_loops = false;
  while (true) {
    if (r.done()) r.fail("unterminated graph section");
    Line line = r.next();
    const std::string& key = line.tokens[0];
    if (key == "end") break;
    if (key == "vertices") {
      nV = parse_idx(line, 1);
    } else if (key == "arcs") {
      (void)parse_idx(line, 1);
    } else if (key == "inc") {
      inc_rows.push_back(parse_idx_list(line, 1));
    } else if (key == "act") {
      act_rows.push_back(parse_idx_list(line, 1));
    } else if (key == "loops") {
      loops = parse_idx_list(line, 1);
      have_loops = true;
    } else {
      throw ParseError(line.number, line.columns[0],
                       "unknown graph key '" + key + "'");
    }
  }
  const std::size_t nx = theory->x_size();
  const std::size_t nm = theory->m_size();
  std::vector<Idx> inc, act;
  for (const auto& row : inc_rows) {
    if (row.size() != nx)
      throw ValidationError("graph " + name + ": inc row length " +
                            std::to_string(row.size()) + " differs from |X| = " +
                            std::to_string(nx));
    for (Idx v : row) inc.push_back(v);
  }
  for (const auto& row : act_rows) {
    if (row.size() != nm)
      throw ValidationError("graph " + name + ": act row length differs from |M|");
    for (Idx v : row) act.push_back(v);
  }
  if (inc_rows.size() != act_rows.size())
    throw ValidationError("graph " + name +
                          ": inc and act row counts disagree");
  if (theory->reflexive && !have_loops)
    throw ValidationError("graph " + name + ": missing loops line");
  try {
    XMGraph g;
    g.theory = theory;
    g.nV = nV;
    g.nA = static_cast<Idx>(inc_rows.size());
    g.inc = std::move(inc);
    g.act = std::move(act);
    g.loops = std::move(loops);
    validate_graph(g);
    return std::make_shared<const XMGraph>(std::move(g));
  } catch (const ValidationError& e) {
    throw ValidationError("graph " + name + ": " + e.what());
  }
}

}  // namespace

Bundle load_bundle(std::istream& in) {
  std::vector<Line> lines = tokenize(in);
  Reader r{lines};
  if (r.done())
    throw ParseError(1, 1, "empty bundle");
  {
    const Line& head = r.next();
    if (head.tokens.size() != 2 || head.tokens[0] != "xmgraph-bundle" ||
        head.tokens[1] != "1")
      throw ParseError(head.number, 1,
                       "expected header 'xmgraph-bundle 1'");
  }
  Bundle b;
  while (!r.done()) {
    Line line = r.next();
    const std::string& key = line.tokens[0];
    auto need_name = [&]() -> std::string {
      if (line.tokens.size() < 2)
        throw ParseError(line.number, 1, key + " section needs a name");
      return line.tokens[1];
    };
    if (key == "theory") {
      b.theory = read_theory(r, b.theory_kind);
    } else if (key == "graph") {
      std::string name = need_name();
      b.graphs[name] = read_graph(r, b.theory, name);
    } else if (key == "hypergraph") {
      std::string name = need_name();
      Hypergraph h;
      while (true) {
        if (r.done()) r.fail("unterminated hypergraph section");
        Line l = r.next();
        if (l.tokens[0] == "end") break;
        if (l.tokens[0] == "vertices") h.nV = parse_idx(l, 1);
        else if (l.tokens[0] == "edge") h.edges.push_back(parse_idx_list(l, 1));
        else
          throw ParseError(l.number, l.columns[0],
                           "unknown hypergraph key '" + l.tokens[0] + "'");
      }
      try {
        validate_hypergraph(h);
      } catch (const ValidationError& e) {
        throw ValidationError("hypergraph " + name + ": " + e.what());
      }
      b.hypergraphs[name] = std::move(h);
    } else if (key == "powergraph") {
      std::string name = need_name();
      PowerGraph p;
      while (true) {
        if (r.done()) r.fail("unterminated powergraph section");
        Line l = r.next();
        if (l.tokens[0] == "end") break;
        if (l.tokens[0] == "arity") p.arity = parse_idx(l, 1);
        else if (l.tokens[0] == "vertices") p.nV = parse_idx(l, 1);
        else if (l.tokens[0] == "edge") p.edges.push_back(parse_idx_list(l, 1));
        else
          throw ParseError(l.number, l.columns[0],
                           "unknown powergraph key '" + l.tokens[0] + "'");
      }
      try {
        validate_powergraph(p);
      } catch (const ValidationError& e) {
        throw ValidationError("powergraph " + name + ": " + e.what());
      }
      b.powergraphs[name] = std::move(p);
    } else if (key == "rfgraph") {
      std::string name = need_name();
      ReflexiveFGraph g;
      while (true) {
        if (r.done()) r.fail("unterminated rfgraph section");
        Line l = r.next();
        if (l.tokens[0] == "end") break;
        if (l.tokens[0] == "arity") g.arity = parse_idx(l, 1);
        else if (l.tokens[0] == "parts") g.nParts = parse_idx(l, 1);
        else if (l.tokens[0] == "vertexset") g.vertex_parts = parse_idx_list(l, 1);
        else if (l.tokens[0] == "inc") g.inc.push_back(parse_idx_list(l, 1));
        else
          throw ParseError(l.number, l.columns[0],
                           "unknown rfgraph key '" + l.tokens[0] + "'");
      }
      try {
        validate_rfgraph(g);
      } catch (const ValidationError& e) {
        throw ValidationError("rfgraph " + name + ": " + e.what());
      }
      b.rfgraphs[name] = std::move(g);
    } else if (key == "morphism") {
      std::string name = need_name();
      std::string src, dst;
      std::vector<Idx> fv, fa;
      bool have_fv = false, have_fa = false;
      while (true) {
        if (r.done()) r.fail("unterminated morphism section");
        Line l = r.next();
        if (l.tokens[0] == "end") break;
        if (l.tokens[0] == "src") src = l.tokens.at(1);
        else if (l.tokens[0] == "dst") dst = l.tokens.at(1);
        else if (l.tokens[0] == "fv") { fv = parse_idx_list(l, 1); have_fv = true; }
        else if (l.tokens[0] == "fa") { fa = parse_idx_list(l, 1); have_fa = true; }
        else
          throw ParseError(l.number, l.columns[0],
                           "unknown morphism key '" + l.tokens[0] + "'");
      }
      if (!have_fv || !have_fa)
        throw ValidationError("morphism " + name + ": missing fv or fa line");
      auto si = b.graphs.find(src);
      auto di = b.graphs.find(dst);
      if (si == b.graphs.end() || di == b.graphs.end())
        throw ValidationError("morphism " + name +
                              ": src or dst graph not found in bundle");
      GraphMorphism m;
      m.src = si->second;
      m.dst = di->second;
      m.fV = std::move(fv);
      m.fA = std::move(fa);
      try {
        validate_morphism(m);
      } catch (const ValidationError& e) {
        throw ValidationError("morphism " + name + ": " + e.what());
      }
      b.morphisms[name] = std::move(m);
      b.morphism_ends[name] = {src, dst};
    } else {
      throw ParseError(line.number, line.columns[0],
                       "unknown section '" + key + "'");
    }
  }
  return b;
}

Bundle load_bundle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open bundle file: " + path);
  return load_bundle(in);
}

namespace {

void write_list(std::ostream& out, const char* key,
                const std::vector<Idx>& xs) {
  out << key;
  for (Idx v : xs) out << " " << v;
  out << "\n";
}

}  // namespace

void save_bundle(const Bundle& b, std::ostream& out) {
  out << "xmgraph-bundle 1\n";
  if (b.theory) {
    const Theory& t = *b.theory;
    out << "theory\n";
    if (b.theory_kind) {
      out << "  kind " << monoid_kind_name(b.theory_kind->first) << " "
          << b.theory_kind->second << "\n";
    } else {
      out << "  explicit\n";
      out << "  reflexive " << (t.reflexive ? 1 : 0) << "\n";
      out << "  elements " << t.m_size() << "\n";
      for (const auto& n : t.monoid.names) out << "  name " << n << "\n";
      for (Idx a = 0; a < t.m_size(); ++a) {
        out << "  mul";
        for (Idx c = 0; c < t.m_size(); ++c) out << " " << t.mul(a, c);
        out << "\n";
      }
      out << "  carrier " << t.x_size() << "\n";
      for (const auto& n : t.xset.names) out << "  xname " << n << "\n";
      for (Idx x = 0; x < t.x_size(); ++x) {
        out << "  xact";
        for (Idx m = 0; m < t.m_size(); ++m) out << " " << t.x_act(x, m);
        out << "\n";
      }
    }
    out << "end\n";
  }
  for (const auto& [name, g] : b.graphs) {
    out << "graph " << name << "\n";
    out << "  vertices " << g->nV << "\n";
    out << "  arcs " << g->nA << "\n";
    for (Idx a = 0; a < g->nA; ++a) {
      out << "  inc";
      for (Idx x = 0; x < g->theory->x_size(); ++x)
        out << " " << g->incidence(a, x);
      out << "\n";
    }
    for (Idx a = 0; a < g->nA; ++a) {
      out << "  act";
      for (Idx m = 0; m < g->theory->m_size(); ++m)
        out << " " << g->action(a, m);
      out << "\n";
    }
    if (g->theory->reflexive) {
      out << "  ";
      write_list(out, "loops", g->loops);
    }
    out << "end\n";
  }
  for (const auto& [name, h] : b.hypergraphs) {
    out << "hypergraph " << name << "\n";
    out << "  vertices " << h.nV << "\n";
    for (const auto& e : h.edges) {
      out << "  ";
      write_list(out, "edge", e);
    }
    out << "end\n";
  }
  for (const auto& [name, p] : b.powergraphs) {
    out << "powergraph " << name << "\n";
    out << "  arity " << p.arity << "\n";
    out << "  vertices " << p.nV << "\n";
    for (const auto& e : p.edges) {
      out << "  ";
      write_list(out, "edge", e);
    }
    out << "end\n";
  }
  for (const auto& [name, g] : b.rfgraphs) {
    out << "rfgraph " << name << "\n";
    out << "  arity " << g.arity << "\n";
    out << "  parts " << g.nParts << "\n";
    out << "  ";
    write_list(out, "vertexset", g.vertex_parts);
    for (const auto& ms : g.inc) {
      out << "  ";
      write_list(out, "inc", ms);
    }
    out << "end\n";
  }
  for (const auto& [name, m] : b.morphisms) {
    auto ends = b.morphism_ends.at(name);
    out << "morphism " << name << "\n";
    out << "  src " << ends.first << "\n";
    out << "  dst " << ends.second << "\n";
    out << "  ";
    write_list(out, "fv", m.fV);
    out << "  ";
    write_list(out, "fa", m.fA);
    out << "end\n";
  }
}

void save_bundle_file(const Bundle& b, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write bundle file: " + path);
  save_bundle(b, out);
}

}  // namespace xmg
