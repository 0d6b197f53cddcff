#include "nas/emit.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace nas {

using json = nlohmann::ordered_json;

namespace {

json index_json(const MultiIndex& a) {
  json j = json::array();
  for (int i = 0; i < a.dim(); ++i) j.push_back(a[i]);
  return j;
}

MultiIndex index_from(const json& j) {
  std::vector<Int> c;
  for (const auto& x : j) c.push_back(x.get<Int>());
  return MultiIndex(std::move(c));
}

json coeff_json(const GfElem& c, int n0) {
  json j = json::array();
  for (int i = 0; i < n0; ++i) j.push_back(c.coord(i));
  return j;
}

json gen_json(const Gen& g) {
  json j;
  switch (g.kind) {
  case Gen::Kind::D0: j["kind"] = "D0"; break;
  case Gen::Kind::D:
    j["kind"] = "D";
    j["a"] = index_json(g.a);
    j["n"] = g.n;
    break;
  case Gen::Kind::L:
    j["kind"] = "L";
    j["m"] = g.m;
    break;
  }
  return j;
}

std::string latex_gen(const Gen& g) {
  switch (g.kind) {
  case Gen::Kind::D0: return "D_{\\bar 0}";
  case Gen::Kind::D: {
    std::string s = "D_{" + g.a.str();
    if (g.n != 0) s += "," + std::to_string(g.n);
    return s + "}";
  }
  case Gen::Kind::L: return "\\bar l^{(" + std::to_string(g.m) + ")}";
  }
  return "?";
}

std::string latex_tau(const Gen& g) {
  switch (g.kind) {
  case Gen::Kind::D0: return "\\tau_{\\bar 0}";
  case Gen::Kind::D: return "\\tau_{" + g.a.str() + "}";
  case Gen::Kind::L: return "\\bar h^{(" + std::to_string(g.m) + ")}";
  }
  return "?";
}

} // namespace

std::string emit_json(const Presentation& pres) {
  const GenTable* tab = pres.tab.get();
  json root;
  json params;
  params["p"] = pres.params.p;
  params["N"] = pres.params.N;
  params["N0"] = pres.params.n0;
  params["modulus"] = pres.params.f->modulus();
  params["cbar0"] = index_json(pres.params.cbar0);
  params["class"] = pres.class_bound;
  params["form"] = pres.form == PresForm::LieOverK ? "lie" : "group";
  json A = json::array();
  for (const auto& [iota, c] : pres.params.A) {
    json e;
    e["iota"] = index_json(iota);
    e["coeff"] = coeff_json(c, pres.params.n0);
    A.push_back(e);
  }
  params["A"] = A;
  root["params"] = params;

  json gens = json::array();
  for (int i = 0; i < tab->size(); ++i) gens.push_back(gen_json(tab->gen(i)));
  root["generators"] = gens;

  json rels = json::array();
  for (const auto& rel : pres.relations) {
    json r;
    r["label"] = rel.label();
    switch (rel.kind) {
    case Relation::Kind::LL: r["kind"] = "R"; break;
    case Relation::Kind::R0: r["kind"] = "R0"; break;
    case Relation::Kind::Ra: r["kind"] = "Ra"; break;
    case Relation::Kind::V: r["kind"] = "V"; break;
    }
    r["m1"] = rel.m1;
    r["m2"] = rel.m2;
    if (rel.kind == Relation::Kind::Ra || rel.kind == Relation::Kind::V) r["a"] = index_json(rel.a);
    json terms = json::array();
    if (pres.form == PresForm::LieOverK) {
      for (const auto& [w, c] : rel.body.terms()) {
        json t;
        json mono = json::array();
        for (int i = 0; i < w.len; ++i) mono.push_back(w.g[i]);
        t["monomial"] = mono;
        t["coeff"] = coeff_json(c, pres.params.n0);
        terms.push_back(t);
      }
    } else {
      for (const auto& f : rel.word) {
        json t;
        t["monomial"] = json::array({f.g1, f.g2});
        t["coeff"] = json::array({f.exp});
        terms.push_back(t);
      }
    }
    r["terms"] = terms;
    rels.push_back(r);
  }
  root["relations"] = rels;

  json win;
  if (pres.params.win.dim() > 0) {
    if (pres.params.win.has_lex_cut()) win["lex"] = index_json(pres.params.win.lex_cut());
    json box = json::array();
    for (int j = 0; j < pres.params.win.dim(); ++j)
      box.push_back(pres.params.win.has_box(j) ? json(pres.params.win.box(j)) : json());
    win["box"] = box;
  }
  json gbox = json::array();
  for (Int b : pres.params.gbox) gbox.push_back(b);
  win["gbox"] = gbox;
  root["window"] = win;
  return root.dump(2) + "\n";
}

Presentation parse_presentation(const std::string& text) {
  json root = json::parse(text);
  Presentation pres;
  const json& params = root["params"];
  PresParams& q = pres.params;
  q.p = params["p"].get<Int>();
  q.N = params["N"].get<int>();
  q.n0 = params["N0"].get<int>();
  std::vector<Int> mod;
  for (const auto& x : params["modulus"]) mod.push_back(x.get<Int>());
  q.f = GF::get(q.p, q.n0, mod);
  q.cbar0 = index_from(params["cbar0"]);
  pres.class_bound = params["class"].get<int>();
  pres.form = params["form"] == "lie" ? PresForm::LieOverK : PresForm::GroupZp;
  for (const auto& e : params["A"]) {
    std::vector<Int> c;
    for (const auto& x : e["coeff"]) c.push_back(x.get<Int>());
    q.A.emplace(index_from(e["iota"]), q.f->from_coords(c));
  }

  std::vector<MultiIndex> indices;
  bool with_L = false;
  for (const auto& g : root["generators"]) {
    if (g["kind"] == "D" && g["n"].get<int>() == 0) indices.push_back(index_from(g["a"]));
    if (g["kind"] == "L") with_L = true;
  }
  const json& win = root["window"];
  for (const auto& b : win["gbox"]) q.gbox.push_back(b.get<Int>());
  if (win.contains("lex")) {
    MultiIndex lex = index_from(win["lex"]);
    std::vector<Int> box;
    bool full = true;
    for (const auto& b : win["box"]) {
      if (b.is_null())
        full = false;
      else
        box.push_back(b.get<Int>());
    }
    q.win = full ? Window::lex_box(lex, box) : Window::lex(lex);
  }
  GenTable::Params tp;
  tp.p = q.p;
  tp.N = q.N;
  tp.n0 = q.n0;
  tp.cbar0 = q.cbar0;
  tp.box = q.gbox;
  tp.with_L = with_L;
  pres.tab = GenTable::explicit_indices(tp, indices);
  const GenTable* tab = pres.tab.get();

  for (const auto& r : root["relations"]) {
    Relation rel;
    std::string kind = r["kind"].get<std::string>();
    rel.kind = kind == "R"    ? Relation::Kind::LL
               : kind == "R0" ? Relation::Kind::R0
               : kind == "Ra" ? Relation::Kind::Ra
                              : Relation::Kind::V;
    rel.m1 = r["m1"].get<int>();
    rel.m2 = r["m2"].get<int>();
    if (r.contains("a")) rel.a = index_from(r["a"]);
    rel.body = LieElt(tab, pres.class_bound);
    for (const auto& t : r["terms"]) {
      Word w;
      for (const auto& gi : t["monomial"]) {
        w.g[w.len] = gi.get<int>();
        ++w.len;
      }
      if (pres.form == PresForm::LieOverK) {
        std::vector<Int> c;
        for (const auto& x : t["coeff"]) c.push_back(x.get<Int>());
        rel.body.add_term(w, q.f->from_coords(c));
      } else {
        rel.word.push_back(GroupFactor{w.g[0], w.g[1], t["coeff"][0].get<Int>()});
      }
    }
    pres.relations.push_back(std::move(rel));
  }
  return pres;
}

std::string emit_text(const Presentation& pres) {
  const GenTable* tab = pres.tab.get();
  std::ostringstream os;
  os << "presentation (" << (pres.form == PresForm::LieOverK ? "Lie over k" : "group, Z/p exponents")
     << ") p=" << pres.params.p << " N=" << pres.params.N << " N0=" << pres.params.n0
     << " cbar0=" << pres.params.cbar0.str() << " class=" << pres.class_bound << "\n";
  os << "generators (" << tab->size() << "):";
  for (int i = 0; i < tab->size(); ++i) os << " " << tab->gen(i).str();
  os << "\nrelations (" << pres.relations.size() << "):\n";
  for (const auto& rel : pres.relations) {
    os << "  " << rel.label() << ": ";
    if (pres.form == PresForm::LieOverK) {
      os << rel.body.str() << " = 0\n";
    } else {
      if (rel.word.empty()) os << "1";
      for (const auto& f : rel.word)
        os << "(" << tab->gen(f.g1).str() << "," << tab->gen(f.g2).str() << ")^" << f.exp << " ";
      os << "= 1\n";
    }
  }
  return os.str();
}

std::string emit_latex(const Presentation& pres) {
  const GenTable* tab = pres.tab.get();
  std::ostringstream os;
  os << "\\begin{align*}\n";
  for (const auto& rel : pres.relations) {
    std::string label = rel.label();
    std::string mathlabel;
    switch (rel.kind) {
    case Relation::Kind::LL:
      mathlabel = "\\mathcal R(" + std::to_string(rel.m1) + "," + std::to_string(rel.m2) + ")";
      break;
    case Relation::Kind::R0: mathlabel = "\\mathcal R_{\\bar 0}(" + std::to_string(rel.m1) + ")"; break;
    case Relation::Kind::Ra:
      mathlabel = "\\mathcal R_{" + rel.a.str() + "}(" + std::to_string(rel.m1) + "," +
                  std::to_string(rel.m2) + ")";
      break;
    case Relation::Kind::V: mathlabel = "V_{" + rel.a.str() + "}^{(" + std::to_string(rel.m1) + ")}"; break;
    }
    os << mathlabel << " &:\\ ";
    if (pres.form == PresForm::LieOverK) {
      bool first = true;
      if (rel.body.is_zero()) os << "0";
      for (const auto& [w, c] : rel.body.terms()) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        if (cs != "1") os << cs << "\\,";
        if (w.len == 1) {
          os << latex_gen(tab->gen(w.g[0]));
        } else {
          os << "[";
          for (int i = 0; i < w.len; ++i) {
            if (i) os << ",";
            os << latex_gen(tab->gen(w.g[i]));
          }
          os << "]";
        }
      }
      os << " = 0\\\\\n";
    } else {
      if (rel.word.empty()) os << "1";
      for (const auto& f : rel.word) {
        os << "(" << latex_tau(tab->gen(f.g1)) << "," << latex_tau(tab->gen(f.g2)) << ")";
        if (f.exp != 1) os << "^{" << f.exp << "}";
        os << " ";
      }
      os << "= 1\\\\\n";
    }
  }
  os << "\\end{align*}\n";
  return os.str();
}

std::string emit(const Presentation& pres, const std::string& format) {
  if (format == "text") return emit_text(pres);
  if (format == "json") return emit_json(pres);
  if (format == "latex") return emit_latex(pres);
  throw std::invalid_argument("unknown format: " + format);
}

} // namespace nas
