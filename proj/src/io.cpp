#include "latnet/io.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>

#include "latnet/errors.hpp"

namespace latnet {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing key '" + key + "'");
  return *it;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ParseError(where + ": unknown key '" + key + "'");
  }
}

std::string str(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

SortedDomain parse_sorts(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw ParseError(where + ": expected an array");
  SortedDomain dom;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const json& s = arr[i];
    if (!s.is_object()) throw ParseError(at + ": expected an object");
    check_keys(s, {"name", "values", "order"}, at);
    const std::string name = str(field(s, "name", at), at + ".name");
    if (dom.sort_index(name) >= 0) throw ParseError(at + ": duplicate sort '" + name + "'");

    const json& vals = field(s, "values", at);
    if (!vals.is_array()) throw ParseError(at + ".values: expected an array");
    std::vector<std::string> value_names;
    for (std::size_t k = 0; k < vals.size(); ++k)
      value_names.push_back(str(vals[k], at + ".values[" + std::to_string(k) + "]"));

    std::vector<std::pair<int, int>> pairs;
    if (s.contains("order")) {
      const json& ord = s["order"];
      if (!ord.is_array()) throw ParseError(at + ".order: expected an array");
      for (std::size_t k = 0; k < ord.size(); ++k) {
        const std::string pat = at + ".order[" + std::to_string(k) + "]";
        if (!ord[k].is_array() || ord[k].size() != 2)
          throw ParseError(pat + ": expected a [low, high] pair");
        int lo = -1, hi = -1;
        const std::string lo_name = str(ord[k][0], pat), hi_name = str(ord[k][1], pat);
        for (std::size_t v = 0; v < value_names.size(); ++v) {
          if (value_names[v] == lo_name) lo = static_cast<int>(v);
          if (value_names[v] == hi_name) hi = static_cast<int>(v);
        }
        if (lo < 0) throw ParseError(pat + ": unknown value '" + lo_name + "'");
        if (hi < 0) throw ParseError(pat + ": unknown value '" + hi_name + "'");
        pairs.emplace_back(lo, hi);
      }
    }
    try {
      dom.values.push_back(Poset::from_pairs(value_names, pairs));
    } catch (const InputError& e) {
      throw ParseError(at + ": " + e.what());
    }
    dom.sorts.push_back(name);
  }
  return dom;
}

json emit_sorts(const SortedDomain& dom) {
  json arr = json::array();
  for (std::size_t i = 0; i < dom.sorts.size(); ++i) {
    json s;
    s["name"] = dom.sorts[i];
    s["values"] = dom.values[i].names();
    json order = json::array();
    for (const auto& [lo, hi] : dom.values[i].strict_pairs())
      order.push_back({dom.values[i].name(lo), dom.values[i].name(hi)});
    if (!order.empty()) s["order"] = order;
    arr.push_back(std::move(s));
  }
  return arr;
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

DistributedRelation parse_network(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("network: expected a top-level object");
  check_keys(doc, {"sorts", "constraints", "preorder"}, "network");

  DistributedRelation net;
  net.domain = parse_sorts(field(doc, "sorts", "network"), "sorts");

  const json& cons = field(doc, "constraints", "network");
  if (!cons.is_array()) throw ParseError("constraints: expected an array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const std::string at = "constraints[" + std::to_string(i) + "]";
    const json& c = cons[i];
    if (!c.is_object()) throw ParseError(at + ": expected an object");
    check_keys(c, {"name", "scheme", "tuples"}, at);
    const std::string name = str(field(c, "name", at), at + ".name");
    for (const auto& seen : names)
      if (seen == name) throw ParseError(at + ": duplicate constraint '" + name + "'");

    const json& scheme = field(c, "scheme", at);
    if (!scheme.is_array()) throw ParseError(at + ".scheme: expected an array");
    std::vector<int> given;
    for (std::size_t k = 0; k < scheme.size(); ++k) {
      const std::string sn = str(scheme[k], at + ".scheme[" + std::to_string(k) + "]");
      const int s = net.domain.sort_index(sn);
      if (s < 0) throw ParseError(at + ".scheme: unknown sort '" + sn + "'");
      for (int g : given)
        if (g == s) throw ParseError(at + ".scheme: duplicate sort '" + sn + "'");
      given.push_back(s);
    }
    Arity arity = given;
    std::sort(arity.begin(), arity.end());
    // Column permutation from the scheme as written to the canonical arity.
    std::vector<std::size_t> from(arity.size());
    for (std::size_t k = 0; k < arity.size(); ++k)
      from[k] = std::find(given.begin(), given.end(), arity[k]) - given.begin();

    const json& tuples = field(c, "tuples", at);
    if (!tuples.is_array()) throw ParseError(at + ".tuples: expected an array");
    std::vector<std::vector<int>> rows;
    for (std::size_t r = 0; r < tuples.size(); ++r) {
      const std::string rat = at + ".tuples[" + std::to_string(r) + "]";
      const json& tup = tuples[r];
      if (!tup.is_array() || tup.size() != given.size())
        throw ParseError(rat + ": expected " + std::to_string(given.size()) + " values");
      std::vector<int> row(arity.size());
      for (std::size_t k = 0; k < arity.size(); ++k) {
        const std::string vn = str(tup[from[k]], rat);
        const int v = net.domain.values[arity[k]].index_of(vn);
        if (v < 0)
          throw ParseError(rat + ": unknown value '" + vn + "' for sort '" +
                           net.domain.sorts[arity[k]] + "'");
        row[k] = v;
      }
      rows.push_back(std::move(row));
    }
    names.push_back(name);
    net.signature.tau.push_back(arity);
    net.rels.push_back(make_relation(arity, std::move(rows)));
  }

  std::vector<std::pair<int, int>> pairs;
  if (doc.contains("preorder")) {
    const json& pre = doc["preorder"];
    if (!pre.is_array()) throw ParseError("preorder: expected an array");
    for (std::size_t k = 0; k < pre.size(); ++k) {
      const std::string at = "preorder[" + std::to_string(k) + "]";
      if (!pre[k].is_array() || pre[k].size() != 2)
        throw ParseError(at + ": expected a [low, high] pair");
      int lo = -1, hi = -1;
      const std::string lo_name = str(pre[k][0], at), hi_name = str(pre[k][1], at);
      for (std::size_t e = 0; e < names.size(); ++e) {
        if (names[e] == lo_name) lo = static_cast<int>(e);
        if (names[e] == hi_name) hi = static_cast<int>(e);
      }
      if (lo < 0) throw ParseError(at + ": unknown constraint '" + lo_name + "'");
      if (hi < 0) throw ParseError(at + ": unknown constraint '" + hi_name + "'");
      pairs.emplace_back(lo, hi);
    }
  }
  net.signature.names = names;
  net.signature.preorder = Poset::from_pairs(names, pairs, false);
  return net;
}

std::string emit_network(const DistributedRelation& net) {
  json doc;
  doc["sorts"] = emit_sorts(net.domain);
  json cons = json::array();
  for (std::size_t e = 0; e < net.signature.names.size(); ++e) {
    json c;
    c["name"] = net.signature.names[e];
    json scheme = json::array();
    for (int s : net.signature.tau[e]) scheme.push_back(net.domain.sorts[s]);
    c["scheme"] = scheme;
    json tuples = json::array();
    for (const auto& t : net.rels[e].tuples) {
      json row = json::array();
      for (std::size_t k = 0; k < t.size(); ++k)
        row.push_back(net.domain.values[net.signature.tau[e][k]].name(t[k]));
      tuples.push_back(std::move(row));
    }
    c["tuples"] = tuples;
    cons.push_back(std::move(c));
  }
  doc["constraints"] = cons;
  json pre = json::array();
  for (const auto& [lo, hi] : net.signature.preorder.strict_pairs())
    pre.push_back({net.signature.names[lo], net.signature.names[hi]});
  if (!pre.empty()) doc["preorder"] = pre;
  return doc.dump(2) + "\n";
}

FormalContext parse_context(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);

  const auto want = [&](std::size_t i) -> const std::string& {
    if (i >= lines.size()) throw ParseError("context file is truncated");
    return lines[i];
  };
  const auto count_at = [&](std::size_t i) -> std::size_t {
    const std::string& s = want(i);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("line " + std::to_string(i + 1) + ": expected a count");
    return std::stoul(s);
  };

  if (want(0) != "B") throw ParseError("line 1: expected 'B'");
  if (!want(1).empty()) throw ParseError("line 2: expected a blank line");
  const std::size_t g = count_at(2), m = count_at(3);
  if (!want(4).empty()) throw ParseError("line 5: expected a blank line");

  std::vector<std::string> object_names, attribute_names;
  for (std::size_t i = 0; i < g; ++i) object_names.push_back(want(5 + i));
  for (std::size_t i = 0; i < m; ++i) attribute_names.push_back(want(5 + g + i));

  std::vector<std::pair<int, int>> incidence;
  for (std::size_t i = 0; i < g; ++i) {
    const std::size_t ln = 5 + g + m + i;
    const std::string& row = want(ln);
    if (row.size() != m)
      throw ParseError("line " + std::to_string(ln + 1) + ": expected " +
                       std::to_string(m) + " cells");
    for (std::size_t j = 0; j < m; ++j) {
      if (row[j] == 'X')
        incidence.emplace_back(static_cast<int>(i), static_cast<int>(j));
      else if (row[j] != '.')
        throw ParseError("line " + std::to_string(ln + 1) + ": cell must be '.' or 'X'");
    }
  }
  if (lines.size() != 5 + g + m + g)
    throw ParseError("context file has trailing content");

  try {
    return make_context(Poset::discrete(object_names), Poset::discrete(attribute_names),
                        incidence);
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
}

std::string emit_context(const FormalContext& ctx) {
  std::string out = "B\n\n";
  out += std::to_string(ctx.objects.size()) + "\n";
  out += std::to_string(ctx.attributes.size()) + "\n\n";
  for (const auto& n : ctx.objects.names()) out += n + "\n";
  for (const auto& n : ctx.attributes.names()) out += n + "\n";
  for (std::size_t i = 0; i < ctx.objects.size(); ++i) {
    for (std::size_t j = 0; j < ctx.attributes.size(); ++j)
      out += ctx.incident(static_cast<int>(i), static_cast<int>(j)) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

DomainMorphism parse_morphism(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("morphism: expected a top-level object");
  check_keys(doc, {"source", "target", "sortMap", "valueMaps", "arityMaps"}, "morphism");

  SortedDomain source = parse_sorts(field(doc, "source", "morphism"), "source");
  SortedDomain target = parse_sorts(field(doc, "target", "morphism"), "target");

  const json& sm = field(doc, "sortMap", "morphism");
  if (!sm.is_object()) throw ParseError("sortMap: expected an object");
  std::vector<int> sort_map(source.sorts.size(), -1);
  for (const auto& [key, value] : sm.items()) {
    const int a = source.sort_index(key);
    if (a < 0) throw ParseError("sortMap: unknown source sort '" + key + "'");
    const int b = target.sort_index(str(value, "sortMap." + key));
    if (b < 0)
      throw ParseError("sortMap." + key + ": unknown target sort '" +
                       value.get<std::string>() + "'");
    sort_map[a] = b;
  }
  for (std::size_t a = 0; a < sort_map.size(); ++a)
    if (sort_map[a] < 0)
      throw ParseError("sortMap: missing entry for sort '" + source.sorts[a] + "'");

  const bool has_values = doc.contains("valueMaps");
  const bool has_tables = doc.contains("arityMaps");
  if (has_values == has_tables)
    throw ParseError("morphism: exactly one of valueMaps or arityMaps is required");

  try {
    if (has_values) {
      const json& vm = doc["valueMaps"];
      if (!vm.is_object()) throw ParseError("valueMaps: expected an object");
      std::vector<std::vector<int>> maps(source.sorts.size());
      for (std::size_t a = 0; a < source.sorts.size(); ++a) {
        const std::string at = "valueMaps." + source.sorts[a];
        const auto it = vm.find(source.sorts[a]);
        if (it == vm.end()) throw ParseError(at + ": missing");
        if (!it->is_object()) throw ParseError(at + ": expected an object");
        const Poset& tv = target.values[sort_map[a]];
        maps[a].assign(tv.size(), -1);
        for (const auto& [key, value] : it->items()) {
          const int w = tv.index_of(key);
          if (w < 0) throw ParseError(at + ": unknown target value '" + key + "'");
          const int v = source.values[a].index_of(str(value, at + "." + key));
          if (v < 0)
            throw ParseError(at + "." + key + ": unknown source value '" +
                             value.get<std::string>() + "'");
          maps[a][w] = v;
        }
        for (std::size_t w = 0; w < maps[a].size(); ++w)
          if (maps[a][w] < 0)
            throw ParseError(at + ": missing entry for target value '" + tv.name(w) + "'");
      }
      for (const auto& [key, value] : vm.items())
        if (source.sort_index(key) < 0)
          throw ParseError("valueMaps: unknown source sort '" + key + "'");
      return componentwise_morphism(std::move(source), std::move(target),
                                    std::move(sort_map), std::move(maps));
    }

    const json& am = doc["arityMaps"];
    if (!am.is_array()) throw ParseError("arityMaps: expected an array");
    std::vector<std::pair<Arity, std::map<std::vector<int>, std::vector<int>>>> tables;
    for (std::size_t i = 0; i < am.size(); ++i) {
      const std::string at = "arityMaps[" + std::to_string(i) + "]";
      const json& entry = am[i];
      if (!entry.is_object()) throw ParseError(at + ": expected an object");
      check_keys(entry, {"arity", "entries"}, at);
      const json& ar = field(entry, "arity", at);
      if (!ar.is_array()) throw ParseError(at + ".arity: expected an array");
      std::vector<std::string> sort_names;
      for (std::size_t k = 0; k < ar.size(); ++k)
        sort_names.push_back(str(ar[k], at + ".arity[" + std::to_string(k) + "]"));
      Arity arity;
      try {
        arity = arity_of_names(source, sort_names);
      } catch (const InputError& e) {
        throw ParseError(at + ".arity: " + e.what());
      }
      std::set<int> image;
      for (int a : arity) image.insert(sort_map[a]);
      const Arity fu(image.begin(), image.end());

      std::map<std::vector<int>, std::vector<int>> table;
      const json& entries = field(entry, "entries", at);
      if (!entries.is_array()) throw ParseError(at + ".entries: expected an array");
      for (std::size_t r = 0; r < entries.size(); ++r) {
        const std::string rat = at + ".entries[" + std::to_string(r) + "]";
        const json& row = entries[r];
        if (!row.is_object()) throw ParseError(rat + ": expected an object");
        check_keys(row, {"from", "to"}, rat);
        const json& from = field(row, "from", rat);
        const json& to = field(row, "to", rat);
        if (!from.is_array() || from.size() != fu.size())
          throw ParseError(rat + ".from: expected " + std::to_string(fu.size()) + " values");
        if (!to.is_array() || to.size() != arity.size())
          throw ParseError(rat + ".to: expected " + std::to_string(arity.size()) + " values");
        std::vector<int> key(fu.size()), val(arity.size());
        for (std::size_t k = 0; k < fu.size(); ++k) {
          const int v = target.values[fu[k]].index_of(str(from[k], rat + ".from"));
          if (v < 0)
            throw ParseError(rat + ".from: unknown value '" +
                             from[k].get<std::string>() + "'");
          key[k] = v;
        }
        for (std::size_t k = 0; k < arity.size(); ++k) {
          const int v = source.values[arity[k]].index_of(str(to[k], rat + ".to"));
          if (v < 0)
            throw ParseError(rat + ".to: unknown value '" + to[k].get<std::string>() + "'");
          val[k] = v;
        }
        if (!table.emplace(std::move(key), std::move(val)).second)
          throw ParseError(rat + ": duplicate entry");
      }
      tables.emplace_back(std::move(arity), std::move(table));
    }
    return tabular_morphism(std::move(source), std::move(target), std::move(sort_map),
                            std::move(tables));
  } catch (const InputError& e) {
    throw ParseError(std::string("morphism: ") + e.what());
  }
}

std::string emit_morphism(const DomainMorphism& m) {
  if (m.family == DomainMorphism::Family::Projection)
    throw InputError("projection families are computed, not serialized");

  json doc;
  doc["source"] = emit_sorts(m.source);
  doc["target"] = emit_sorts(m.target);
  json sm;
  for (std::size_t a = 0; a < m.source.sorts.size(); ++a)
    sm[m.source.sorts[a]] = m.target.sorts[m.sort_map[a]];
  doc["sortMap"] = sm;

  if (m.family == DomainMorphism::Family::Componentwise) {
    json vm;
    for (std::size_t a = 0; a < m.source.sorts.size(); ++a) {
      json one;
      const Poset& tv = m.target.values[m.sort_map[a]];
      for (std::size_t w = 0; w < tv.size(); ++w)
        one[tv.name(static_cast<int>(w))] = m.source.values[a].name(m.value_maps[a][w]);
      vm[m.source.sorts[a]] = std::move(one);
    }
    doc["valueMaps"] = vm;
  } else {
    json am = json::array();
    for (const auto& [arity, table] : m.tables) {
      json one;
      json ar = json::array();
      for (int a : arity) ar.push_back(m.source.sorts[a]);
      one["arity"] = ar;
      const Arity fu = m.image_arity(arity);
      json entries = json::array();
      for (const auto& [from, to] : table) {
        json row;
        json f = json::array(), t = json::array();
        for (std::size_t k = 0; k < from.size(); ++k)
          f.push_back(m.target.values[fu[k]].name(from[k]));
        for (std::size_t k = 0; k < to.size(); ++k)
          t.push_back(m.source.values[arity[k]].name(to[k]));
        row["from"] = f;
        row["to"] = t;
        entries.push_back(std::move(row));
      }
      one["entries"] = entries;
      am.push_back(std::move(one));
    }
    doc["arityMaps"] = am;
  }
  return doc.dump(2) + "\n";
}

namespace {

std::string quote_cell(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_names(const std::vector<int>& indices, const Poset& p) {
  std::string out;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k) out += ", ";
    out += p.name(indices[k]);
  }
  return out;
}

}  // namespace

LatticeTables emit_lattice_tables(const ConceptLattice& lat) {
  const auto obj_gen = object_generators(lat);
  const auto att_gen = attribute_generators(lat);
  const std::size_t n = lat.concepts.size();

  LatticeTables out;
  out.generators = "concept,tuple_generators,constraint_generators\n";
  for (std::size_t i = 0; i < n; ++i)
    out.generators += "C_" + std::to_string(i + 1) + "," +
                      quote_cell(join_names(obj_gen[i], lat.context.objects)) + "," +
                      quote_cell(join_names(att_gen[i], lat.context.attributes)) + "\n";

  out.successors = "concept,successors\n";
  for (std::size_t i = 0; i < n; ++i) {
    std::string cell;
    for (std::size_t k = 0; k < lat.covers[i].size(); ++k) {
      if (k) cell += ", ";
      cell += "C_" + std::to_string(lat.covers[i][k] + 1);
    }
    out.successors += "C_" + std::to_string(i + 1) + "," + quote_cell(cell) + "\n";
  }

  out.order = "concept";
  for (std::size_t j = 0; j < n; ++j) out.order += ",C_" + std::to_string(j + 1);
  out.order += "\n";
  for (std::size_t i = 0; i < n; ++i) {
    out.order += "C_" + std::to_string(i + 1);
    for (std::size_t j = 0; j < n; ++j)
      out.order += lat.leq(static_cast<int>(i), static_cast<int>(j)) ? ",X" : ",.";
    out.order += "\n";
  }
  return out;
}

std::string emit_dot(const ConceptLattice& lat) {
  const auto escape = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out;
  };

  const auto obj_gen = object_generators(lat);
  const auto att_gen = attribute_generators(lat);

  std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lat.concepts.size(); ++i) {
    std::string label = "C_" + std::to_string(i + 1);
    if (!obj_gen[i].empty())
      label += "\\n" + escape(join_names(obj_gen[i], lat.context.objects));
    if (!att_gen[i].empty())
      label += "\\n" + escape(join_names(att_gen[i], lat.context.attributes));
    out += "  c" + std::to_string(i + 1) + " [label=\"" + label + "\"];\n";
  }
  for (std::size_t i = 0; i < lat.concepts.size(); ++i)
    for (int j : lat.covers[i])
      out += "  c" + std::to_string(i + 1) + " -> c" + std::to_string(j + 1) + ";\n";
  out += "}\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
  if (!out) throw ParseError("cannot write file: " + path);
}

DistributedRelation load_network(const std::string& path, bool complete_down_first,
                                 std::size_t cap) {
  DistributedRelation net = parse_network(read_file(path));
  if (complete_down_first)
    for (auto& r : net.rels) r = complete_down(net.domain, r);
  ValidationReport report = validate_network(net);
  if (!report.empty()) throw ValidationError(std::move(report));
  (void)cap;
  return net;
}

}  // namespace latnet
