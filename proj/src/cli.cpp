#include "whp/cli.hpp"

#include "whp/decider.hpp"
#include "whp/error.hpp"
#include "whp/whitehead_free.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace whp::cli {

namespace {

struct Ambient {
  int m = 0;
  int n = 0;
};

void add_ambient(CLI::App* sub, Ambient& amb, bool with_m) {
  if (with_m) sub->add_option("--m", amb.m, "rank of the free abelian factor")->required()->check(CLI::NonNegativeNumber);
  sub->add_option("--n", amb.n, "rank of the free factor")->required()->check(CLI::NonNegativeNumber);
}

Endomorphism load_endo(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return deserialize(arg);
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot read endomorphism file '" + arg + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return deserialize(buf.str());
}

int report(const WhiteheadQuery& q, const EndoDecision& d, bool json, std::ostream& out) {
  const int code = d.is_yes() ? exit_yes : d.is_no() ? exit_no : exit_unknown;
  if (json) {
    nlohmann::ordered_json j;
    j["decision"] = d.label();
    j["family"] = family_name(q.family);
    j["m"] = q.source.m();
    j["n"] = q.source.n();
    j["source"] = to_string(q.source);
    j["target"] = to_string(q.target);
    if (d.is_yes()) {
      j["witness"] = to_json(d.witness());
      j["verified"] = verify(d.witness(), q.source, q.target, q.family);
    } else if (d.is_no()) {
      nlohmann::ordered_json reasons = nlohmann::ordered_json::array();
      for (const Certificate& c : d.no().reasons)
        reasons.push_back({{"code", reason_name(c.code)}, {"detail", c.detail}, {"rechecked", check_certificate(c, q)}});
      j["reasons"] = reasons;
    } else {
      j["bound"] = d.unknown().bound;
      j["hint"] = d.unknown().hint;
    }
    out << j.dump(2) << '\n';
    return code;
  }
  out << "decision: " << d.label() << '\n';
  if (d.is_yes()) {
    out << "witness: " << describe(d.witness()) << '\n';
    out << "endo: " << serialize(d.witness()) << '\n';
    out << "verified: " << (verify(d.witness(), q.source, q.target, q.family) ? "true" : "false") << '\n';
  } else if (d.is_no()) {
    for (const Certificate& c : d.no().reasons) out << "reason: " << reason_name(c.code) << ": " << c.detail << '\n';
  } else {
    out << "bound: " << d.unknown().bound << '\n';
    out << "hint: " << d.unknown().hint << "; re-run with a larger --bound\n";
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Whitehead problems in Z^m x F_n"};
  app.name("whp");
  app.require_subcommand(1);

  // decide
  auto* decide_cmd = app.add_subcommand("decide", "decide a Whitehead problem");
  std::string family_text, src_text, tgt_text;
  Ambient amb;
  long bound = 0;
  bool json = false;
  decide_cmd->add_option("family", family_text, "aut, mon or end")->required()->check(CLI::IsMember({"aut", "mon", "end"}));
  add_ambient(decide_cmd, amb, true);
  decide_cmd->add_option("source", src_text, "source element")->required();
  decide_cmd->add_option("target", tgt_text, "target element")->required();
  auto* bound_opt = decide_cmd->add_option("--bound", bound, "free-side search bound")->check(CLI::PositiveNumber);
  decide_cmd->add_flag("--json", json, "structured output");

  // endo
  auto* endo_cmd = app.add_subcommand("endo", "endomorphism algebra");
  endo_cmd->require_subcommand(1);
  std::string endo_a, endo_b, element_text;
  std::vector<std::string> image_texts;
  auto* endo_apply = endo_cmd->add_subcommand("apply", "apply ENDO to ELEMENT");
  endo_apply->add_option("endo", endo_a)->required();
  endo_apply->add_option("element", element_text)->required();
  auto* endo_compose = endo_cmd->add_subcommand("compose", "first ENDO, then ENDO");
  endo_compose->add_option("first", endo_a)->required();
  endo_compose->add_option("second", endo_b)->required();
  auto* endo_classify = endo_cmd->add_subcommand("classify", "mono/epi/auto (n >= 2)");
  endo_classify->add_option("endo", endo_a)->required();
  auto* endo_inverse = endo_cmd->add_subcommand("inverse", "inverse automorphism");
  endo_inverse->add_option("endo", endo_a)->required();
  auto* endo_recognize = endo_cmd->add_subcommand("recognize", "endomorphism from generator images");
  Ambient endo_amb;
  add_ambient(endo_recognize, endo_amb, true);
  endo_recognize->add_option("images", image_texts, "images of t1..tm, x1..xn")->required();

  // free
  auto* free_cmd = app.add_subcommand("free", "free-group Whitehead tools");
  free_cmd->require_subcommand(1);
  Ambient free_amb;
  std::string word_a, word_b;
  auto* free_min = free_cmd->add_subcommand("min", "minimal cyclic word in the Aut-orbit");
  add_ambient(free_min, free_amb, false);
  free_min->add_option("word", word_a)->required();
  auto* free_equiv = free_cmd->add_subcommand("equiv", "automorphism sending U to V");
  add_ambient(free_equiv, free_amb, false);
  free_equiv->add_option("u", word_a)->required();
  free_equiv->add_option("v", word_b)->required();
  auto* free_primitive = free_cmd->add_subcommand("primitive", "is WORD part of a basis");
  add_ambient(free_primitive, free_amb, false);
  free_primitive->add_option("word", word_a)->required();

  // el
  auto* el_cmd = app.add_subcommand("el", "group element arithmetic");
  el_cmd->require_subcommand(1);
  Ambient el_amb;
  std::string el_a, el_b;
  auto* el_mul = el_cmd->add_subcommand("mul", "G H");
  add_ambient(el_mul, el_amb, true);
  el_mul->add_option("first", el_a)->required();
  el_mul->add_option("other", el_b)->required();
  auto* el_inv = el_cmd->add_subcommand("inv", "G^-1");
  add_ambient(el_inv, el_amb, true);
  el_inv->add_option("g", el_a)->required();
  auto* el_parse = el_cmd->add_subcommand("parse", "normal form of G");
  add_ambient(el_parse, el_amb, true);
  el_parse->add_option("g", el_a)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_yes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (decide_cmd->parsed()) {
      WhiteheadQuery q{*parse_family(family_text), parse_element(src_text, amb.m, amb.n),
                       parse_element(tgt_text, amb.m, amb.n), std::nullopt};
      if (bound_opt->count() > 0) q.bound = bound;
      return report(q, decide(q), json, out);
    }
    if (endo_apply->parsed()) {
      const Endomorphism e = load_endo(endo_a);
      out << to_string(apply_endo(e, parse_element(element_text, e.m(), e.n()))) << '\n';
      return exit_yes;
    }
    if (endo_compose->parsed()) {
      out << serialize(compose(load_endo(endo_a), load_endo(endo_b))) << '\n';
      return exit_yes;
    }
    if (endo_classify->parsed()) {
      const Classification c = classify(load_endo(endo_a));
      out << "kind: " << (c.kind == EndoKind::TypeI ? "I" : "II") << '\n'
          << "mono: " << (c.is_mono ? "true" : "false") << '\n'
          << "epi: " << (c.is_epi ? "true" : "false") << '\n'
          << "auto: " << (c.is_auto ? "true" : "false") << '\n';
      return exit_yes;
    }
    if (endo_inverse->parsed()) {
      const auto inv = inverse(load_endo(endo_a));
      if (!inv) {
        out << "not invertible\n";
        return exit_no;
      }
      out << serialize(*inv) << '\n';
      return exit_yes;
    }
    if (endo_recognize->parsed()) {
      std::vector<GroupElement> images;
      for (const std::string& text : image_texts) images.push_back(parse_element(text, endo_amb.m, endo_amb.n));
      out << serialize(recognize(images, endo_amb.m, endo_amb.n)) << '\n';
      return exit_yes;
    }
    if (free_min->parsed()) {
      const Minimization res = minimize_cyclic(parse_word(word_a, free_amb.n));
      out << "min: " << res.min.word().str() << '\n' << "length: " << res.min.size() << '\n';
      for (const WhiteheadAut& t : res.trace) out << "step: " << t.str() << '\n';
      return exit_yes;
    }
    if (free_equiv->parsed()) {
      const auto phi = aut_equivalent(parse_word(word_a, free_amb.n), parse_word(word_b, free_amb.n));
      out << "decision: " << (phi ? "yes" : "no") << '\n';
      if (phi) out << "witness: " << to_string(*phi) << '\n';
      return phi ? exit_yes : exit_no;
    }
    if (free_primitive->parsed()) {
      const Primitivity p = is_primitive(parse_word(word_a, free_amb.n));
      out << "primitive: " << (p.primitive ? "true" : "false") << '\n';
      if (p.primitive) out << "witness: " << to_string(*p.witness) << '\n';
      return p.primitive ? exit_yes : exit_no;
    }
    if (el_mul->parsed()) {
      out << to_string(multiply(parse_element(el_a, el_amb.m, el_amb.n), parse_element(el_b, el_amb.m, el_amb.n)))
          << '\n';
      return exit_yes;
    }
    if (el_inv->parsed()) {
      out << to_string(invert(parse_element(el_a, el_amb.m, el_amb.n))) << '\n';
      return exit_yes;
    }
    if (el_parse->parsed()) {
      out << to_string(parse_element(el_a, el_amb.m, el_amb.n)) << '\n';
      return exit_yes;
    }
  } catch (const InternalDefect& e) {
    err << "internal defect: " << e.what() << '\n';
    return exit_defect;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  err << "error: no command\n";
  return exit_usage;
}

}  // namespace whp::cli
