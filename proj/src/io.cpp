#include "bk/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bk {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string html_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

Poset load_poset_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc.contains("covers"))
    throw input_error("expected a JSON object with \"elements\" and \"covers\"");
  std::vector<std::string> labels;
  for (auto& e : doc["elements"]) {
    if (!e.is_string()) throw input_error("\"elements\" entries must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto& c : doc["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw input_error("\"covers\" entries must be [lower, higher] label pairs");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return make_poset(labels, covers);
}

std::string lattice_json(const Lattice& l) {
  std::vector<std::string> labels = l.poset.labels;
  std::sort(labels.begin(), labels.end());
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto& [lo, hi] : l.poset.covers) covers.emplace_back(l.label(lo), l.label(hi));
  std::sort(covers.begin(), covers.end());
  json doc;
  doc["elements"] = labels;
  doc["covers"] = json::array();
  for (auto& [lo, hi] : covers) doc["covers"].push_back(json::array({lo, hi}));
  return doc.dump(2) + "\n";
}

FormalContext load_cxt(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  std::size_t at = 0;
  auto next = [&](const std::string& what) -> std::string {
    if (at >= lines.size())
      throw input_error("truncated .cxt file: missing " + what + " at line " +
                        std::to_string(at + 1));
    return lines[at++];
  };
  if (trim(next("format tag")) != "B") throw input_error(".cxt line 1: expected format tag B");
  next("blank line");
  int ng = 0, nm = 0;
  try {
    ng = std::stoi(trim(next("object count")));
    nm = std::stoi(trim(next("attribute count")));
  } catch (const std::exception&) {
    throw input_error(".cxt lines 3-4: object and attribute counts must be integers");
  }
  if (ng < 0 || nm < 0 || ng > 63 || nm > 63)
    throw input_error(".cxt: counts must be between 0 and 63");
  next("blank line");
  std::vector<std::string> objects, attributes;
  for (int g = 0; g < ng; ++g) objects.push_back(next("object name " + std::to_string(g + 1)));
  for (int m = 0; m < nm; ++m)
    attributes.push_back(next("attribute name " + std::to_string(m + 1)));
  std::vector<Mask> rows;
  for (int g = 0; g < ng; ++g) {
    int lineno = static_cast<int>(at) + 1;
    std::string row = next("incidence row " + std::to_string(g + 1));
    if (static_cast<int>(row.size()) != nm)
      throw input_error(".cxt line " + std::to_string(lineno) + ": row has " +
                        std::to_string(row.size()) + " cells, expected " + std::to_string(nm));
    Mask r = 0;
    for (int m = 0; m < nm; ++m) {
      char c = row[m];
      if (c == 'X' || c == 'x')
        r |= bit(m);
      else if (c != '.')
        throw input_error(".cxt line " + std::to_string(lineno) + ", column " +
                          std::to_string(m + 1) + ": expected X or .");
    }
    rows.push_back(r);
  }
  return make_context(std::move(objects), std::move(attributes), std::move(rows));
}

std::string context_cxt(const FormalContext& k) {
  std::ostringstream out;
  out << "B\n\n" << k.nobj() << "\n" << k.nattr() << "\n\n";
  for (auto& g : k.objects) out << g << "\n";
  for (auto& m : k.attributes) out << m << "\n";
  for (int g = 0; g < k.nobj(); ++g) {
    for (int m = 0; m < k.nattr(); ++m) out << (k.incident(g, m) ? 'X' : '.');
    out << "\n";
  }
  return out.str();
}

FormalContext load_csv(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw input_error("empty CSV file");
  auto fields = [](const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
      if (c == ',') {
        out.push_back(trim(cur));
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    out.push_back(trim(cur));
    return out;
  };
  std::vector<std::string> header = fields(lines[0]);
  if (header.size() < 2) throw input_error("CSV line 1: expected attribute columns");
  std::vector<std::string> attributes(header.begin() + 1, header.end());
  std::vector<std::string> objects;
  std::vector<Mask> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> cells = fields(lines[i]);
    if (cells.size() != header.size())
      throw input_error("CSV line " + std::to_string(i + 1) + ": has " +
                        std::to_string(cells.size()) + " cells, expected " +
                        std::to_string(header.size()));
    objects.push_back(cells[0]);
    Mask r = 0;
    for (std::size_t m = 1; m < cells.size(); ++m) {
      const std::string& c = cells[m];
      if (c == "1" || c == "x" || c == "X")
        r |= bit(static_cast<int>(m - 1));
      else if (c != "0" && c != "")
        throw input_error("CSV line " + std::to_string(i + 1) + ", column " + std::to_string(m + 1) +
                          ": expected 1/0 or x/empty, got \"" + c + "\"");
    }
    rows.push_back(r);
  }
  return make_context(std::move(objects), std::move(attributes), std::move(rows));
}

std::string implication_line(const Implication& imp) {
  return join_strings(imp.premise, ", ") + " -> " + join_strings(imp.conclusion, ", ");
}

Implication parse_implication(const std::string& line) {
  std::size_t arrow = line.find("->");
  if (arrow == std::string::npos)
    throw input_error("implication \"" + line + "\" has no -> separator");
  auto side = [](const std::string& part) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : part) {
      if (c == ',') {
        out.push_back(trim(cur));
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    std::string last = trim(cur);
    if (!last.empty() || !out.empty()) out.push_back(last);
    for (auto& s : out)
      if (s.empty()) throw input_error("implication has an empty attribute label");
    return out;
  };
  std::string lhs = trim(line.substr(0, arrow));
  std::string rhs = trim(line.substr(arrow + 2));
  return make_implication(lhs.empty() ? std::vector<std::string>{} : side(lhs),
                          rhs.empty() ? std::vector<std::string>{} : side(rhs));
}

std::string basis_text(const ImplicationBasis& b) {
  std::string out;
  for (auto& imp : b.implications) out += implication_line(imp) + "\n";
  return out;
}

std::string lattice_dot(const Lattice& l) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=circle, width=0.12, fixedsize=true];\n";
  for (int x = 0; x < l.size(); ++x)
    out << "  n" << x << " [xlabel=\"" << dot_escape(l.label(x)) << "\", label=\"\"];\n";
  for (auto& [lo, hi] : l.poset.covers) out << "  n" << lo << " -> n" << hi << " [dir=none];\n";
  out << "}\n";
  return out.str();
}

namespace {

// Three-row node: objects above the marker, attributes below.
std::string labeled_node(int id, const std::vector<std::string>& above,
                         const std::vector<std::string>& below, bool marked) {
  std::ostringstream out;
  out << "  n" << id << " [shape=none, label=<<TABLE BORDER=\"0\" CELLSPACING=\"0\">";
  out << "<TR><TD>" << (above.empty() ? "&nbsp;" : html_escape(join_strings(above, ", ")))
      << "</TD></TR>";
  out << "<TR><TD BORDER=\"" << (marked ? 2 : 1) << "\" WIDTH=\"14\" HEIGHT=\"14\"></TD></TR>";
  out << "<TR><TD>" << (below.empty() ? "&nbsp;" : html_escape(join_strings(below, ", ")))
      << "</TD></TR>";
  out << "</TABLE>>];\n";
  return out.str();
}

std::string dot_graph(const Lattice& l, const std::vector<std::vector<std::string>>& above,
                      const std::vector<std::vector<std::string>>& below,
                      const std::vector<char>& marked) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n";
  for (int x = 0; x < l.size(); ++x) out << labeled_node(x, above[x], below[x], marked[x]);
  for (auto& [lo, hi] : l.poset.covers) out << "  n" << lo << " -> n" << hi << " [dir=none];\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string concept_lattice_dot(const ConceptLattice& cl) {
  int n = cl.lattice.size();
  std::vector<std::vector<std::string>> above(n), below(n);
  for (int g = 0; g < cl.context.nobj(); ++g) above[cl.gamma[g]].push_back(cl.context.objects[g]);
  for (int m = 0; m < cl.context.nattr(); ++m)
    below[cl.mu[m]].push_back(cl.context.attributes[m]);
  return dot_graph(cl.lattice, above, below, std::vector<char>(n, 0));
}

std::string completion_dot(const CompletionReport& r) {
  int n = r.completed.size();
  std::vector<std::vector<std::string>> above(n), below(n);
  std::vector<char> marked(n, 0);
  for (auto& [label, elem] : r.added_generators) {
    std::string note = label;
    for (auto& [added, original] : r.coincidences)
      if (added == label) note += " (= " + original + ")";
    (r.up ? above : below)[elem].push_back(note);
    marked[elem] = 1;
  }
  if (r.added_generators.empty()) return lattice_dot(r.completed);
  return dot_graph(r.completed, above, below, marked);
}

std::string report_json(const CompletionReport& r) {
  json doc;
  doc["direction"] = r.up ? "up" : "down";
  doc["level"] = r.context_level ? "context" : "lattice";
  json elements = json::array();
  for (int x = 0; x < r.completed.size(); ++x) elements.push_back(r.element_members(x));
  json covers = json::array();
  for (auto& [lo, hi] : r.completed.poset.covers) covers.push_back(json::array({lo, hi}));
  doc["completed"] = {{"elements", elements}, {"covers", covers}};
  json embedding = json::object();
  for (std::size_t x = 0; x < r.embedding.size(); ++x)
    embedding[r.original_labels[x]] = r.completed.label(r.embedding[x]);
  doc["embedding"] = embedding;
  json added = json::array();
  for (auto& [label, elem] : r.added_generators)
    added.push_back({{"label", label}, {"element", r.completed.label(elem)}});
  doc["added_generators"] = added;
  json coincidences = json::array();
  for (auto& [a, b] : r.coincidences) coincidences.push_back(json::array({a, b}));
  doc["coincidences"] = coincidences;
  json invalidated = json::array();
  for (auto& imp : r.invalidated.implications) invalidated.push_back(implication_line(imp));
  doc["invalidated"] = invalidated;
  if (!r.attribute_merges.empty()) {
    json merges = json::array();
    for (auto& [removed, kept] : r.attribute_merges)
      merges.push_back(json::array({removed, kept}));
    doc["attribute_merges"] = merges;
  }
  return doc.dump(2) + "\n";
}

LoadedInput load_input(const std::string& path) {
  std::string text = read_file(path);
  LoadedInput out;
  auto ends_with = [&](const std::string& suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".json")) {
    out.is_context = false;
    out.lattice = as_lattice(load_poset_json(text));
  } else if (ends_with(".cxt")) {
    out.is_context = true;
    out.context = load_cxt(text);
  } else if (ends_with(".csv")) {
    out.is_context = true;
    out.context = load_csv(text);
  } else {
    throw input_error("unsupported input extension on " + path + " (expected .json, .cxt, .csv)");
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write " + path);
  out << content;
}

}  // namespace bk
