#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fca/functors.hpp"
#include "fca/io.hpp"
#include "fca/lattice.hpp"
#include "fca/morphisms.hpp"
#include "fca/oracle.hpp"
#include "fca/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fca::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fca::Context load_context(const std::string& path, const std::string& format) {
  std::string fmt = format;
  if (fmt.empty()) {
    auto dot = path.rfind('.');
    fmt = dot == std::string::npos ? "json" : path.substr(dot + 1);
  }
  std::string text = slurp(path);
  if (fmt == "cxt") return fca::parse_cxt(text);
  if (fmt == "json") return fca::parse_context_json(text);
  throw fca::Error("unknown context format: " + fmt);
}

void emit_context(const fca::Context& ctx, const std::string& format) {
  if (format == "cxt")
    std::cout << fca::emit_cxt(ctx);
  else
    std::cout << fca::emit_context_json(ctx);
}

std::string set_names(const std::vector<std::string>& names, const fca::Bitset& bits) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits.test(i)) {
      if (!first) s += " ";
      s += names[i];
      first = false;
    }
  return s + "}";
}

void print_forms(const fca::LemmaForms& lf) {
  std::cout << lf.name << ": " << (lf.forms.front().second ? "yes" : "no")
            << (lf.agree() ? "" : "  [FORMS DISAGREE]") << "\n";
  for (const auto& [name, value] : lf.forms)
    std::cout << "    " << (value ? "+" : "-") << " " << name << "\n";
}

fca::Poset poset_of_order_context(const fca::Context& c) {
  if (c.objects() != c.attributes())
    throw fca::Error("a poset input must have identical object and attribute lists");
  std::vector<std::vector<bool>> leq(c.object_count(),
                                     std::vector<bool>(c.object_count()));
  for (std::size_t i = 0; i < c.object_count(); ++i)
    for (std::size_t j = 0; j < c.object_count(); ++j)
      leq[i][j] = c.incident(i, j);
  return fca::Poset(c.objects(), leq);
}

int run(int argc, char** argv) {
  CLI::App app{"Finite formal contexts, concept lattices, and their morphisms"};
  app.require_subcommand(1);

  std::string input, input2, pair_file, format, out_format = "json";
  bool want_dot = false, want_json = false;

  auto* lat = app.add_subcommand("lattice", "concept lattice of a context");
  lat->add_option("input", input)->required();
  lat->add_option("--format", format, "cxt or json (default: by extension)");
  lat->add_flag("--dot", want_dot, "print the Hasse diagram as DOT");
  lat->add_flag("--json", want_json, "print the concepts as JSON");

  auto* cls = app.add_subcommand("classify", "classify a mapping pair");
  cls->add_option("source", input)->required();
  cls->add_option("target", input2)->required();
  cls->add_option("pair", pair_file)->required();
  cls->add_option("--format", format);

  auto* lift = app.add_subcommand("lift", "lift a pair to the concept lattices");
  std::string direction = "forward";
  lift->add_option("source", input)->required();
  lift->add_option("target", input2)->required();
  lift->add_option("pair", pair_file)->required();
  lift->add_option("--direction", direction, "forward or backward");
  lift->add_option("--format", format);

  auto* pur = app.add_subcommand("purify", "purified context");
  pur->add_option("input", input)->required();
  pur->add_option("--format", format);
  pur->add_option("--out-format", out_format, "cxt or json");

  auto* red = app.add_subcommand("reduce", "reduced context");
  red->add_option("input", input)->required();
  red->add_option("--format", format);
  red->add_option("--out-format", out_format);

  auto* std_ = app.add_subcommand("standard", "standard context of the concept lattice");
  std_->add_option("input", input)->required();
  std_->add_option("--format", format);
  std_->add_option("--out-format", out_format);

  auto* dm = app.add_subcommand(
      "dm", "Dedekind-MacNeille completion of an order context");
  dm->add_option("input", input)->required();
  dm->add_option("--format", format);

  auto* enu = app.add_subcommand("enumerate", "all pairs of a class between two contexts");
  std::string class_name;
  enu->add_option("source", input)->required();
  enu->add_option("target", input2)->required();
  enu->add_option("--class", class_name)->required();
  enu->add_option("--format", format);

  auto* ver = app.add_subcommand("verify", "run the verification suites");
  fca::SuiteOptions opt;
  ver->add_option("--exhaustive-max", opt.exhaustive_max);
  ver->add_option("--random", opt.random_count);
  ver->add_option("--seed", opt.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  if (lat->parsed()) {
    fca::Context ctx = load_context(input, format);
    fca::ConceptLattice cl = fca::build_concept_lattice(ctx);
    if (want_json) {
      std::cout << "{\"count\": " << cl.size() << "}\n";
    }
    std::cout << cl.size() << " concepts\n";
    for (std::size_t i = 0; i < cl.size(); ++i)
      std::cout << "  c" << i << ": "
                << set_names(ctx.objects(), cl.concepts[i].extent.bits) << " / "
                << set_names(ctx.attributes(), cl.concepts[i].intent.bits) << "\n";
    if (want_dot) std::cout << fca::emit_dot(cl);
    return 0;
  }

  if (cls->parsed()) {
    fca::Context k = load_context(input, format), l = load_context(input2, format);
    fca::MappingPair p = fca::parse_pair_json(slurp(pair_file), k, l);
    fca::MorphismClassification mc = fca::classify(p);
    print_forms(mc.extent_continuous);
    print_forms(mc.intent_continuous);
    print_forms(mc.extent_dense);
    print_forms(mc.intent_dense);
    print_forms(mc.extent_full);
    print_forms(mc.intent_full);
    print_forms(mc.incidence_preserving);
    print_forms(mc.incidence_reflecting);
    print_forms(mc.conceptual);
    print_forms(mc.concept_continuous);
    std::cout << "separately continuous: " << (mc.separately_continuous ? "yes" : "no")
              << "\nconcept preserving: " << (mc.concept_preserving ? "yes" : "no")
              << "\nembedding: " << (mc.embedding ? "yes" : "no")
              << "\ndense embedding: " << (mc.dense_embedding ? "yes" : "no")
              << "\ncontext isomorphism: " << (mc.context_isomorphism ? "yes" : "no")
              << "\n";
    if (mc.residuated_pair)
      std::cout << "residuated pair: " << (*mc.residuated_pair ? "yes" : "no") << "\n";
    if (mc.residual_pair)
      std::cout << "residual pair: " << (*mc.residual_pair ? "yes" : "no") << "\n";
    for (const auto& f : mc.falsifications)
      std::cout << "FALSIFICATION: " << f << "\n";
    return mc.consistent() ? 0 : 1;
  }

  if (lift->parsed()) {
    fca::Context k = load_context(input, format), l = load_context(input2, format);
    fca::MappingPair p = fca::parse_pair_json(slurp(pair_file), k, l);
    auto print_map = [](const char* name, const fca::MonoMap& m) {
      std::cout << name << ":";
      for (std::size_t i = 0; i < m.table.size(); ++i)
        std::cout << " " << m.source.label(i) << "->" << m.target.label(m(i));
      std::cout << "\n";
    };
    if (direction == "forward") {
      auto [af, bf] = fca::lift_forward(p);
      print_map("object lift", af);
      print_map("attribute lift", bf);
    } else if (direction == "backward") {
      auto [ab, bb] = fca::lift_backward(p);
      print_map("object lift", ab);
      print_map("attribute lift", bb);
    } else {
      throw fca::Error("unknown direction: " + direction);
    }
    return 0;
  }

  if (pur->parsed() || red->parsed() || std_->parsed()) {
    fca::Context ctx = load_context(input, format);
    if (pur->parsed()) emit_context(fca::purify(ctx), out_format);
    else if (red->parsed()) emit_context(fca::reduce(ctx), out_format);
    else emit_context(fca::standard_context(fca::build_concept_lattice(ctx).lattice),
                      out_format);
    return 0;
  }

  if (dm->parsed()) {
    fca::Poset p = poset_of_order_context(load_context(input, format));
    fca::ConceptLattice cl = fca::dm_completion(p);
    std::cout << cl.size() << " elements\n" << fca::emit_dot(cl);
    return 0;
  }

  if (enu->parsed()) {
    fca::Context k = load_context(input, format), l = load_context(input2, format);
    using Pred = bool (*)(const fca::MappingPair&);
    Pred pred = nullptr;
    const std::pair<const char*, Pred> classes[] = {
        {"extent_continuous", fca::is_extent_continuous},
        {"intent_continuous", fca::is_intent_continuous},
        {"separately_continuous", fca::is_separately_continuous},
        {"extent_dense", fca::is_extent_dense},
        {"intent_dense", fca::is_intent_dense},
        {"extent_full", fca::is_extent_full},
        {"intent_full", fca::is_intent_full},
        {"incidence_preserving", fca::is_incidence_preserving},
        {"incidence_reflecting", fca::is_incidence_reflecting},
        {"embedding", fca::is_context_embedding},
        {"conceptual", fca::is_conceptual},
        {"concept_continuous", fca::is_concept_continuous},
        {"dense_embedding", fca::is_dense_embedding},
        {"isomorphism", fca::is_context_isomorphism},
        {"residuated", fca::is_residuated_pair},
        {"residual", fca::is_residual_pair},
    };
    for (const auto& [name, fn] : classes)
      if (class_name == name) pred = fn;
    if (!pred) throw fca::Error("unknown class name: " + class_name);
    std::size_t count = 0;
    for (const fca::MappingPair& p : fca::enumerate_pairs(k, l))
      if (pred(p)) {
        ++count;
        std::cout << fca::emit_pair_json(p);
      }
    std::cout << count << " pairs\n";
    return 0;
  }

  // verify
  fca::SuiteResult res = fca::run_suite(opt);
  std::size_t passed = 0;
  for (const auto& c : res.criteria) {
    std::cout << (c.passed ? "PASS" : "FAIL") << " " << c.name << "\n";
    for (const auto& d : c.details) std::cout << "     " << d << "\n";
    if (c.passed) ++passed;
  }
  std::cout << passed << "/" << res.criteria.size() << " criteria passed\n";
  return res.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fca::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const fca::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
