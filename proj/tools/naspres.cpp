// Command-line front end: compute generator-and-relation presentations of
// the maximal period-p, class-<p Galois quotient of an N-dimensional higher
// local field, and run the verification suites.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nas/instance.hpp"
#include "nas/parallel.hpp"
#include "nas/verify.hpp"

namespace {

nas::MultiIndex parse_index(const std::string& s) {
  std::vector<nas::Int> c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) c.push_back(std::stoll(tok));
  return nas::MultiIndex(std::move(c));
}

std::vector<nas::Int> parse_ints(const std::string& s) {
  std::vector<nas::Int> c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) c.push_back(std::stoll(tok));
  return c;
}

// "i1,i2:c0,c1;j1,j2:d0,d1"
std::vector<std::pair<nas::MultiIndex, std::vector<nas::Int>>> parse_beta(const std::string& s) {
  std::vector<std::pair<nas::MultiIndex, std::vector<nas::Int>>> out;
  std::stringstream ss(s);
  std::string entry;
  while (std::getline(ss, entry, ';')) {
    if (entry.empty()) continue;
    auto colon = entry.find(':');
    if (colon == std::string::npos) throw nas::UsageError("bad --beta entry: " + entry);
    out.push_back({parse_index(entry.substr(0, colon)), parse_ints(entry.substr(colon + 1))});
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"naspres: presentations of Galois groups of higher local fields"};
  nas::InstanceConfig cfg;
  std::string cbar0_s, cbar2_s, beta_s, window_s, gbox_s, verify_s;
  bool serial = false;

  app.add_option("--p", cfg.p, "odd prime p");
  app.add_option("--N", cfg.N, "field dimension N");
  app.add_option("--N0", cfg.n0, "last residue field degree N0");
  app.add_option("--mode", cfg.mode, "char_p | char_0");
  app.add_option("--cbar0", cbar0_s, "cbar0 as a,b,... (char_p; in pZ^N, first component > 0)");
  app.add_option("--cbar2", cbar2_s, "cbar2 as a,b,... (char_0; lex-positive)");
  app.add_option("--beta", beta_s, "omega coefficients, \"i1,i2:c0,c1;...\"");
  app.add_option("--class", cfg.class_bound, "nilpotency class bound (2..min(4,p-1))");
  app.add_option("--form", cfg.form, "lie | group");
  app.add_option("--format", cfg.format, "text | json | latex");
  app.add_option("--out", cfg.out_path, "output path (default: stdout)");
  app.add_option("--verify", verify_s, "verification suites, comma-separated or 'all'");
  app.add_option("--seed", cfg.seed, "seed for randomized suites");
  app.add_option("--preset", cfg.preset, "simplest-char-p | q_p-zeta-x");
  app.add_option("--window", window_s, "series window \"lex:a,b;box:c,d\"");
  app.add_option("--gbox", gbox_s, "generator box bounds a,b,...");
  app.add_flag("--serial", serial, "disable the OpenMP kernels");

  try {
    app.parse(argc, argv);
    if (!cbar0_s.empty()) cfg.cbar0 = parse_index(cbar0_s);
    if (!cbar2_s.empty()) cfg.cbar2 = parse_index(cbar2_s);
    if (!beta_s.empty()) cfg.beta = parse_beta(beta_s);
    if (!gbox_s.empty()) cfg.gbox = parse_ints(gbox_s);
    if (!window_s.empty()) {
      std::stringstream ss(window_s);
      std::string part;
      while (std::getline(ss, part, ';')) {
        if (part.rfind("lex:", 0) == 0) cfg.win_lex = parse_index(part.substr(4));
        else if (part.rfind("box:", 0) == 0) cfg.win_box = parse_ints(part.substr(4));
        else throw nas::UsageError("bad --window part: " + part);
      }
    }
    if (!verify_s.empty()) {
      std::stringstream ss(verify_s);
      std::string tok;
      while (std::getline(ss, tok, ',')) cfg.verify.push_back(tok);
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  nas::parallel_enabled() = !serial;
  return nas::run_instance(cfg, std::cout, std::cerr);
}
