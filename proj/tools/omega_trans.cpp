// omega-trans: command-line front end for the transducer library.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "omegatrans/constructions.hpp"
#include "omegatrans/fo.hpp"
#include "omegatrans/io.hpp"

using namespace omt;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("io", "cannot write " + path);
  f << text;
}

int report_aperiodic(const AperiodicReport& r) {
  if (r.aperiodic) {
    std::cout << "aperiodic (monoid size " << r.monoid_size << ")\n";
    return kOk;
  }
  std::cout << "not aperiodic (monoid size " << r.monoid_size << "): powers of '" << r.witness
            << "' cycle with period " << r.period << "\n";
  return kFailed;
}

Quadrant quadrant_of(const std::string& s) {
  if (s == "ll") return Quadrant::LL;
  if (s == "lr") return Quadrant::LR;
  if (s == "rl") return Quadrant::RL;
  if (s == "rr") return Quadrant::RR;
  throw Error("usage", "quadrant must be ll, lr, rl or rr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run, compare and analyse transducers over infinite words"};
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t k = 20, cap = 1000000, horizon = 6;
  unsigned seed = 0;
  app.add_option("-k", k, "Number of output letters")->capture_default_str();
  app.add_option("--cap", cap, "Limit on monoid elements")->capture_default_str();
  app.add_option("--horizon", horizon, "Positions covered by an output graph")->capture_default_str();
  app.add_option("--seed", seed, "Seed for corpus sampling")->capture_default_str();

  std::string file, file2, word, out_path, corpus_path, report_path, quadrant, after, formula, assign;
  std::size_t window = 0, sample = 0;
  bool anchored = false;
  int base_bound = 4, doublings = 2;

  auto* run = app.add_subcommand("run", "Run a machine on an ultimately periodic word u(v)^w");
  run->add_option("file", file)->required();
  run->add_option("word", word)->required();
  run->add_option("--window", window, "Initial window for FO transducers");

  auto* cmp = app.add_subcommand("compare", "Compare two transducers on a corpus");
  cmp->add_option("file1", file)->required();
  cmp->add_option("file2", file2)->required();
  cmp->add_option("--corpus", corpus_path)->required();
  cmp->add_option("--report", report_path, "Write a TSV report");
  cmp->add_option("--sample", sample, "Use a random sample of this many corpus words");

  auto* ap = app.add_subcommand("check-aperiodic", "Decide aperiodicity of the transition monoid");
  ap->add_option("file", file)->required();

  auto* ob = app.add_subcommand("check-1bounded", "Decide whether an SST is 1-bounded");
  ob->add_option("file", file)->required();

  auto* mon = app.add_subcommand("monoid", "Print the matrix of a word, or every monoid element");
  mon->add_option("file", file)->required();
  mon->add_option("word", word, "Finite word; omit to enumerate the monoid");

  auto* beh = app.add_subcommand("behavior", "Print the behaviors of a finite word on a 2WST");
  beh->add_option("file", file)->required();
  beh->add_option("word", word)->required();
  beh->add_option("--quadrant", quadrant, "ll, lr, rl or rr (default: all four)");
  beh->add_flag("--anchored", anchored, "Place the end-marker left of the word");
  beh->add_option("--after", after, "Infinite word following the factor (for look-ahead)");

  auto* gr = app.add_subcommand("graph", "Emit the output graph of an SST run as DOT");
  gr->add_option("file", file)->required();
  gr->add_option("word", word)->required();
  gr->add_option("-o,--dot", out_path, "DOT output file (default stdout)");

  auto* comp = app.add_subcommand("compile", "Compile between models");
  std::string what;
  comp->add_option("what", what, "Only 2wst-to-sst is supported")->required();
  comp->add_option("file", file)->required();
  comp->add_option("-o", out_path, "Output file (default stdout)");

  auto* el = app.add_subcommand("eliminate-la", "Remove look-around from an sstsf machine");
  el->add_option("file", file)->required();
  el->add_option("-o", out_path, "Output file (default stdout)");

  auto* ev = app.add_subcommand("eval", "Evaluate an FO formula on an ultimately periodic word");
  ev->add_option("formula", formula)->required();
  ev->add_option("word", word)->required();
  ev->add_option("--assign", assign, "Free variables, e.g. x=3,y=5");
  ev->add_option("--base-bound", base_bound)->capture_default_str();
  ev->add_option("--doublings", doublings)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (run->parsed()) {
      Machine m = load_machine(file);
      UPWord w = UPWord::parse(word);
      if (auto* a = std::get_if<Dma>(&m)) {
        bool acc = a->accepts(w);
        std::cout << (acc ? "accepted" : "rejected") << "\n";
        return acc ? kOk : kFailed;
      }
      RunOptions opt;
      opt.fot.window = window;
      Outcome o = runner_for(m, opt)(w, k);
      if (!o.accepted()) {
        std::cout << verdict_name(o.verdict) << (o.note.empty() ? "" : ": " + o.note) << "\n";
        return kFailed;
      }
      std::cout << render_output(o.out) << "\n";
      return kOk;
    }
    if (cmp->parsed()) {
      Machine a = load_machine(file), b = load_machine(file2);
      auto corpus = read_corpus(corpus_path);
      if (sample && sample < corpus.size()) {
        std::mt19937 rng(seed);
        std::shuffle(corpus.begin(), corpus.end(), rng);
        corpus.resize(sample);
      }
      auto rep = compare_outputs(runner_for(a), runner_for(b), corpus, k);
      if (!report_path.empty()) write_out(report_path, rep.tsv());
      for (auto& r : rep.rows)
        if (r.verdict == "mismatch")
          std::cout << "mismatch on " << r.word.str() << " at "
                    << (r.divergence ? std::to_string(*r.divergence) : "?") << ": " << r.detail << "\n";
      std::cout << rep.rows.size() << " words, " << rep.mismatches() << " mismatches\n";
      return rep.mismatches() ? kFailed : kOk;
    }
    if (ap->parsed()) {
      Machine m = load_machine(file);
      if (auto* a = std::get_if<Dma>(&m)) return report_aperiodic(is_aperiodic(*a, cap));
      if (auto* s = std::get_if<Sst>(&m)) return report_aperiodic(is_aperiodic_sst(*s, cap));
      if (auto* t = std::get_if<TwoWst>(&m)) return report_aperiodic(is_aperiodic_2wst(*t, cap));
      throw Error("usage", std::string("no monoid for ") + kind_name(m) + " files");
    }
    if (ob->parsed()) {
      Machine m = load_machine(file);
      auto* s = std::get_if<Sst>(&m);
      if (!s) throw Error("usage", "check-1bounded expects an sst file");
      auto r = is_1_bounded(*s, cap);
      if (r.bounded) {
        std::cout << "1-bounded (monoid size " << r.monoid_size << ")\n";
        return kOk;
      }
      std::cout << "not 1-bounded: witness '" << r.witness << "'\n";
      return kFailed;
    }
    if (mon->parsed()) {
      Machine m = load_machine(file);
      if (auto* a = std::get_if<Dma>(&m)) {
        if (!word.empty()) {
          a->alphabet.check_word(word, "word");
          std::cout << matrix_str(matrix_of_word(*a, word), *a);
          return kOk;
        }
        auto c = generate_monoid(*a, cap);
        std::cout << c.elems.size() << " elements\n";
        for (std::size_t i = 0; i < c.elems.size(); ++i)
          std::cout << "\n[" << (c.words[i].empty() ? "ε" : c.words[i]) << "]\n"
                    << matrix_str(c.elems[i], *a);
        return kOk;
      }
      if (auto* s = std::get_if<Sst>(&m)) {
        if (!word.empty()) {
          s->input.check_word(word, "word");
          std::cout << flow_matrix_str(flow_matrix(*s, word), *s);
          return kOk;
        }
        auto c = sst_monoid(*s, cap);
        std::cout << c.elems.size() << " elements\n";
        for (std::size_t i = 0; i < c.elems.size(); ++i)
          std::cout << "\n[" << (c.words[i].empty() ? "ε" : c.words[i]) << "]\n"
                    << flow_matrix_str(c.elems[i], *s);
        return kOk;
      }
      if (auto* t = std::get_if<TwoWst>(&m)) {
        TwMonoid tm(*t, cap);
        auto c = tm.generate(cap);
        std::cout << c.elems.size() << " elements, " << tm.space().contexts.size() << " guard contexts\n";
        // behaviors are per context; `behavior` prints them for one word
        for (auto& w : c.words) std::cout << (w.empty() ? "ε" : w) << "\n";
        return kOk;
      }
      throw Error("usage", std::string("no monoid for ") + kind_name(m) + " files");
    }
    if (beh->parsed()) {
      Machine m = load_machine(file);
      auto* t = std::get_if<TwoWst>(&m);
      if (!t) throw Error("usage", "behavior expects a 2wst file");
      t->input.check_word(word, "word");
      UPWord rest = after.empty() ? UPWord("", std::string(1, t->input.at(0))) : UPWord::parse(after);
      Quads q = behavior(*t, word, start_context(*t, rest), anchored);
      std::vector<Quadrant> which{Quadrant::LL, Quadrant::LR, Quadrant::RL, Quadrant::RR};
      if (!quadrant.empty()) which = {quadrant_of(quadrant)};
      for (Quadrant x : which) {
        std::cout << quadrant_name(x) << ":";
        for (auto [p, r] : behavior_pairs(q.get(x))) std::cout << " (" << t->states[p] << "," << t->states[r] << ")";
        std::cout << "\n";
      }
      return kOk;
    }
    if (gr->parsed()) {
      Machine m = load_machine(file);
      auto* s = std::get_if<Sst>(&m);
      if (!s) throw Error("usage", "graph expects an sst file");
      write_out(out_path, to_dot(build_output_graph(*s, UPWord::parse(word), horizon)));
      return kOk;
    }
    if (comp->parsed()) {
      if (what != "2wst-to-sst") throw Error("usage", "only 'compile 2wst-to-sst' is supported");
      Machine m = load_machine(file);
      auto* t = std::get_if<TwoWst>(&m);
      if (!t) throw Error("usage", "compile 2wst-to-sst expects a 2wst file");
      SstSf sf = twowst_to_sst_sf(*t);
      if (sf.lossy_moves)
        std::cerr << "omega-trans: note: " << sf.lossy_moves
                  << " moves dropped a merging excursion; check the result with compare\n";
      write_out(out_path, print_machine(sf));
      return kOk;
    }
    if (el->parsed()) {
      Machine m = load_machine(file);
      auto* s = std::get_if<SstSf>(&m);
      if (!s) throw Error("usage", "eliminate-la expects an sstsf file");
      Eliminated e = eliminate_lookaround(*s);
      std::string text = "// " + std::to_string(e.configs.size()) + " useful configurations\n";
      for (std::size_t c = 0; c < e.configs.size(); ++c)
        text += "// block " + std::to_string(c) + ": " + config_str(*s, e.configs[c]) + "\n";
      write_out(out_path, text + print_machine(e.sst));
      return kOk;
    }
    if (ev->parsed()) {
      auto f = fo::parse(formula);
      fo::Assignment a;
      if (!assign.empty())
        for (std::size_t b = 0; b < assign.size();) {
          auto e = assign.find(',', b);
          std::string part = assign.substr(b, e == std::string::npos ? std::string::npos : e - b);
          auto eq = part.find('=');
          if (eq == std::string::npos) throw Error("usage", "assignments look like x=3");
          a[part.substr(0, eq)] = std::stoul(part.substr(eq + 1));
          if (e == std::string::npos) break;
          b = e + 1;
        }
      fo::EvalConfig cfg{base_bound, doublings};
      bool holds = fo::eval(f, UPWord::parse(word), a, cfg);
      std::cout << (holds ? "true" : "false") << "\n";
      return holds ? kOk : kFailed;
    }
  } catch (const Error& e) {
    std::cerr << "omega-trans: " << e.what() << "\n";
    const auto& kind = e.kind();
    bool input_error = kind == "parse" || kind == "usage" || kind == "io" || kind == "model" ||
                       kind == "copyless violation" || kind == "nondeterministic" || kind == "muller" ||
                       kind == "alphabet";
    return input_error ? kUsage : kFailed;
  } catch (const std::exception& e) {
    std::cerr << "omega-trans: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
