#include "nas/instance.hpp"

#include <fstream>
#include <iostream>

#include "nas/emit.hpp"
#include "nas/verify.hpp"

namespace nas {

bool& parallel_enabled() {
  static bool on = true;
  return on;
}

void apply_preset(InstanceConfig& cfg) {
  if (cfg.preset.empty()) return;
  if (cfg.preset == "simplest-char-p") {
    // N = 2, N0 = 1, cbar0 = (p, 0), omega = t^{cbar0/p}
    cfg.mode = "char_p";
    cfg.N = 2;
    cfg.n0 = 1;
    cfg.cbar0 = MultiIndex{cfg.p, 0};
    cfg.beta = {{MultiIndex{0, 0}, {1}}};
    if (cfg.form.empty()) cfg.form = "lie";
  } else if (cfg.preset == "q_p-zeta-x") {
    // K = Q_p(zeta_1){{pi_2}}: cbar2 = (1,0), beta_0 = 1, group form
    cfg.mode = "char_0";
    cfg.N = 2;
    cfg.n0 = 1;
    cfg.cbar2 = MultiIndex{1, 0};
    cfg.beta = {{MultiIndex{0, 0}, {1}}};
    if (cfg.form.empty()) cfg.form = "group";
  } else {
    throw UsageError("unknown preset: " + cfg.preset);
  }
}

namespace {

bool is_odd_prime(Int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (Int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

} // namespace

void validate(const InstanceConfig& cfg) {
  if (!is_odd_prime(cfg.p)) throw UsageError("p must be an odd prime");
  if (cfg.N < 1) throw UsageError("N must be >= 1");
  if (cfg.n0 < 1 || cfg.n0 > 3) throw UsageError("N0 out of supported range [1,3]");
  if (cfg.mode != "char_p" && cfg.mode != "char_0") throw UsageError("mode must be char_p or char_0");
  if (cfg.class_bound < 2 || cfg.class_bound > std::min<Int>(4, cfg.p - 1))
    throw UsageError("class bound must lie in 2..min(4, p-1)");
  if (cfg.form != "lie" && cfg.form != "group" && !cfg.form.empty())
    throw UsageError("form must be lie or group");
  if (cfg.format != "text" && cfg.format != "json" && cfg.format != "latex")
    throw UsageError("format must be text, json or latex");
  if (cfg.mode == "char_p") {
    if (!cfg.cbar0) throw UsageError("char_p mode requires --cbar0");
    if (cfg.cbar0->dim() != cfg.N) throw UsageError("cbar0 dimension mismatch");
    if (!cfg.cbar0->divisible_by(cfg.p) || (*cfg.cbar0)[0] <= 0)
      throw UsageError("cbar0 must lie in pZ^N with first component > 0");
  } else {
    if (!cfg.cbar2) throw UsageError("char_0 mode requires --cbar2");
    if (cfg.cbar2->dim() != cfg.N) throw UsageError("cbar2 dimension mismatch");
    if (!cfg.cbar2->lex_positive()) throw UsageError("cbar2 must be lex-positive");
  }
  if (cfg.beta.empty()) throw UsageError("beta coefficients required (beta_0 nonzero)");
  if (cfg.form == "group" && cfg.n0 != 1) throw UsageError("group form requires N0 = 1");
  if (cfg.form == "group" && cfg.class_bound != 2) throw UsageError("group form is mod C3 only (class 2)");
}

Instance resolve(const InstanceConfig& cfg) {
  validate(cfg);
  Instance inst;
  inst.p = cfg.p;
  inst.N = cfg.N;
  inst.n0 = cfg.n0;
  inst.f = GF::get(cfg.p, cfg.n0);
  inst.class_bound = cfg.class_bound;
  inst.form = cfg.form == "group" ? PresForm::GroupZp : PresForm::LieOverK;
  inst.cbar0 = cfg.mode == "char_p" ? *cfg.cbar0 : *cfg.cbar2 * cfg.p;

  inst.omega.p = cfg.p;
  inst.omega.cbar0 = inst.cbar0;
  for (const auto& [iota, coords] : cfg.beta) {
    if (iota.dim() != cfg.N) throw UsageError("beta index dimension mismatch");
    inst.omega.beta.emplace(iota, inst.f->from_coords(coords));
  }
  inst.omega.validate(inst.f);

  inst.gbox = cfg.gbox;
  if (inst.gbox.empty()) {
    inst.gbox.resize(cfg.N);
    for (int j = 0; j < cfg.N; ++j) {
      Int c = inst.cbar0[j] < 0 ? -inst.cbar0[j] : inst.cbar0[j];
      inst.gbox[j] = j == 0 ? std::max<Int>(c, cfg.p) : std::max<Int>(c, 8);
    }
  }
  if (static_cast<int>(inst.gbox.size()) != cfg.N) throw UsageError("gbox dimension mismatch");

  if (cfg.win_lex) {
    std::vector<Int> box = cfg.win_box;
    if (box.empty())
      inst.win = Window::lex(*cfg.win_lex);
    else
      inst.win = Window::lex_box(*cfg.win_lex, box);
  } else {
    std::vector<Int> box(cfg.N);
    for (int j = 0; j < cfg.N; ++j) {
      Int c = inst.cbar0[j] < 0 ? -inst.cbar0[j] : inst.cbar0[j];
      box[j] = cfg.p * (c + inst.gbox[j] + 1);
    }
    inst.win = Window::lex_box(inst.cbar0 * cfg.p, box);
  }

  if (cfg.mode == "char_p") {
    inst.A = omega_A_coeffs(inst.omega, inst.f, inst.win);
  } else {
    for (const auto& [iota, b] : inst.omega.beta) {
      GfElem a = b.frobenius(1);
      if (!a.is_zero()) inst.A.emplace(iota, a);
    }
  }
  // The class-2 presentation depends only on A_iota with iota < cbar0/p;
  // restricting here keeps the emitted metadata insensitive to anything
  // beyond that range (and makes the char_p and char_0 routes agree).
  MultiIndex cut = inst.cbar0.divided_by(cfg.p);
  for (auto it = inst.A.begin(); it != inst.A.end();)
    it = (it->first < cut) ? std::next(it) : inst.A.erase(it);
  return inst;
}

SolverContext Instance::solver_context(int wt_max) const {
  SolverContext ctx;
  ctx.f = f;
  ctx.omega = omega;
  ctx.win = win;
  ctx.class_bound = class_bound;
  GenTable::Params tp;
  tp.p = p;
  tp.N = N;
  tp.n0 = n0;
  tp.cbar0 = cbar0;
  tp.wt_max = wt_max;
  tp.box = gbox;
  tp.with_L = true;
  ctx.tab = GenTable::window(tp);
  return ctx;
}

Presentation build_presentation(const InstanceConfig& cfg) {
  Instance inst = resolve(cfg);
  PresParams q;
  q.p = inst.p;
  q.N = inst.N;
  q.n0 = inst.n0;
  q.cbar0 = inst.cbar0;
  q.A = inst.A;
  q.f = inst.f;
  q.gbox = inst.gbox;
  q.win = inst.win;
  Presentation pres = relations_mod_C3(q);
  if (inst.form == PresForm::GroupZp) pres = to_group_form(pres);
  return pres;
}

int run_instance(const InstanceConfig& cfg0, std::ostream& out, std::ostream& err) {
  InstanceConfig cfg = cfg0;
  try {
    apply_preset(cfg);
    if (cfg.form.empty()) cfg.form = "lie";
    validate(cfg);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  try {
    Presentation pres = build_presentation(cfg);
    std::string artifact = emit(pres, cfg.format);
    if (cfg.out_path.empty()) {
      out << artifact;
    } else {
      std::ofstream of(cfg.out_path, std::ios::binary);
      if (!of) {
        err << "cannot open output path: " << cfg.out_path << "\n";
        return 1;
      }
      of << artifact;
    }
    bool all_ok = true;
    for (const auto& suite : cfg.verify) {
      auto results = run_suite(suite, cfg.seed, &cfg);
      for (const auto& r : results) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) out << ": " << r.detail;
        out << "\n";
        all_ok = all_ok && r.pass;
      }
    }
    return all_ok ? 0 : 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace nas
