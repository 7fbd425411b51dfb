#include "sgp/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "sgp/io.hpp"
#include "sgp/oracle.hpp"
#include "sgp/pfd.hpp"

namespace sgp {

namespace {

std::string set_text(const ZSet& s) {
  std::string out = "elems=";
  for (size_t i = 0; i < s.elements().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.elements()[i]);
  }
  out += ";tail=" + std::to_string(*s.tail());
  return out;
}

std::string csv(const std::vector<Int>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

// Window equality of computed set vs oracle membership list.
bool window_agrees(const TailSet& fast, const std::vector<Int>& brute, Int lo, Int hi) {
  for (Int z = lo; z < hi; ++z) {
    bool in_brute = std::binary_search(brute.begin(), brute.end(), z);
    if (fast.contains(z) != in_brute) return false;
  }
  return true;
}

struct OracleCheck {
  bool available = false;
  bool agrees = false;
};

void emit_oracle(const OracleCheck& check, bool json, Json& payload, std::ostream& out) {
  if (!check.available) {
    if (!json) out << "oracle: no reference for this command\n";
    return;
  }
  if (json)
    payload["oracle_agrees"] = check.agrees;
  else
    out << "oracle: " << (check.agrees ? "agree" : "DISAGREE") << "\n";
  if (!check.agrees) fail("OracleMismatch", "fast path disagrees with the brute-force oracle");
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pattern calculus for numerical semigroups and their ideals"};
  app.require_subcommand(1);
  bool json = false;
  bool use_oracle = false;
  app.add_flag("--json", json, "machine-readable JSON output");
  app.add_flag("--oracle", use_oracle, "cross-check the result against the brute-force oracle");

  auto* sgp_cmd = app.add_subcommand("sgp", "semigroup queries");
  sgp_cmd->require_subcommand(1);
  auto* info_cmd = sgp_cmd->add_subcommand("info", "notable elements of <gens>");
  std::string info_gens;
  info_cmd->add_option("gens", info_gens, "comma-separated generators")->required();

  auto* pattern_cmd = app.add_subcommand("pattern", "pattern operations");
  pattern_cmd->require_subcommand(1);

  auto* classify_cmd = pattern_cmd->add_subcommand("classify", "admissibility classes");
  std::string classify_p;
  classify_cmd->add_option("pattern", classify_p, "a1,...,an;a0")->required();

  std::string adm_p, adm_ideal = "M", adm_gens, adm_target;
  auto* admits_cmd = pattern_cmd->add_subcommand("admits", "does the ideal admit the pattern");
  admits_cmd->add_option("pattern", adm_p)->required();
  admits_cmd->add_option("--ideal", adm_ideal, "M | S | elems=...;tail=...");
  admits_cmd->add_option("--sgp", adm_gens, "parent semigroup generators")->required();
  admits_cmd->add_option("--target", adm_target, "codomain semigroup (defaults to --sgp)");

  std::string img_p, img_ideal = "M", img_gens;
  auto* image_cmd = pattern_cmd->add_subcommand("image", "exact image of the ideal");
  image_cmd->add_option("pattern", img_p)->required();
  image_cmd->add_option("--ideal", img_ideal);
  image_cmd->add_option("--sgp", img_gens)->required();

  std::string clo_p, clo_ideal = "M", clo_gens;
  auto* closure_cmd = pattern_cmd->add_subcommand("closure", "closure of the ideal under p");
  closure_cmd->add_option("pattern", clo_p)->required();
  closure_cmd->add_option("--ideal", clo_ideal);
  closure_cmd->add_option("--sgp", clo_gens)->required();

  std::vector<std::string> comp_args;
  std::string comp_gens, comp_ideal = "S";
  auto* compose_cmd = pattern_cmd->add_subcommand("compose", "substitute q1..qn into p");
  compose_cmd->add_option("patterns", comp_args, "p q1 q2 ...")->expected(-2);
  compose_cmd->add_option("--sgp", comp_gens, "certificate ideal's semigroup (default Z+)");
  compose_cmd->add_option("--ideal", comp_ideal, "certificate ideal (default S)");

  auto* pfd_cmd = app.add_subcommand("pfd", "pseudo-Frobenius level sets PF^d(I,J)");
  std::string pfd_gens, pfd_ideal = "S", pfd_jideal = "M";
  Int pfd_d = 1;
  pfd_cmd->add_option("--sgp", pfd_gens);
  pfd_cmd->add_option("--ideal", pfd_ideal);
  pfd_cmd->add_option("--jideal", pfd_jideal);
  pfd_cmd->add_option("--d", pfd_d, "emit levels 1..d");
  auto* conv_cmd = pfd_cmd->add_subcommand("converge", "cardinality convergence of PF^d");
  std::string conv_gens, conv_ideal = "S", conv_jideal = "M";
  Int conv_cap = 32;
  conv_cmd->add_option("--sgp", conv_gens)->required();
  conv_cmd->add_option("--ideal", conv_ideal);
  conv_cmd->add_option("--jideal", conv_jideal);
  conv_cmd->add_option("--cap", conv_cap);

  std::string quot_gens;
  Int quot_d = 1;
  auto* quot_cmd = app.add_subcommand("quotient", "quotient semigroup S/d");
  quot_cmd->add_option("gens", quot_gens)->required();
  quot_cmd->add_option("d", quot_d)->required();

  std::string chain_p, chain_gens;
  Int chain_k = 1;
  auto* chain_cmd = app.add_subcommand("chain", "image chain S, p(S), ..., p^k(S)");
  chain_cmd->add_option("pattern", chain_p)->required();
  chain_cmd->add_option("gens", chain_gens)->required();
  chain_cmd->add_option("k", chain_k)->required();

  std::string from_gens;
  auto* from_cmd = app.add_subcommand("fromgens", "pattern with image(Z+) = <gens>");
  from_cmd->add_option("gens", from_gens)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (info_cmd->parsed()) {
      NumericalSemigroup s = parse_semigroup(info_gens);
      NotableElements n = s.notable_elements();
      OracleCheck check;
      if (use_oracle) {
        check.available = true;
        Int bound = 3 * s.conductor() + 3;
        std::vector<Int> brute = oracle::brute_semigroup(s.minimal_generators(), bound);
        check.agrees = true;
        for (Int z = 0; z <= bound && check.agrees; ++z)
          check.agrees = s.contains(z) == std::binary_search(brute.begin(), brute.end(), z);
      }
      if (json) {
        Json j = to_json(n);
        j["set"] = to_json(s);
        emit_oracle(check, json, j, out);
        out << j.dump() << "\n";
      } else {
        out << "set: " << set_text(s.zset()) << "\n"
            << "multiplicity: " << n.multiplicity << "\n"
            << "frobenius: " << n.frobenius << "\n"
            << "conductor: " << n.conductor << "\n"
            << "genus: " << n.genus << "\n"
            << "gaps: " << csv(n.gaps) << "\n"
            << "minimal_generators: " << csv(n.minimal_generators) << "\n"
            << "embedding_dimension: " << n.embedding_dimension << "\n"
            << "pseudo_frobenius: " << csv(n.pseudo_frobenius) << "\n";
        Json unused;
        emit_oracle(check, json, unused, out);
      }
    } else if (classify_cmd->parsed()) {
      Classification c = parse_pattern(classify_p).classify();
      if (json) {
        out << Json{{"admissible_homogeneous", c.admissible_homogeneous},
                    {"strongly_admissible", c.strongly_admissible},
                    {"premonic", c.premonic},
                    {"monic", c.monic}}
                   .dump()
            << "\n";
      } else {
        out << "admissible_homogeneous: " << (c.admissible_homogeneous ? "true" : "false")
            << "\nstrongly_admissible: " << (c.strongly_admissible ? "true" : "false")
            << "\npremonic: " << (c.premonic ? "true" : "false")
            << "\nmonic: " << (c.monic ? "true" : "false") << "\n";
      }
    } else if (admits_cmd->parsed()) {
      LinearPattern p = parse_pattern(adm_p);
      NumericalSemigroup s = parse_semigroup(adm_gens);
      RelativeIdeal i = parse_ideal(adm_ideal, s);
      NumericalSemigroup target = adm_target.empty() ? s : parse_semigroup(adm_target);
      bool verdict = admits(p, i, target);
      OracleCheck check;
      if (use_oracle) {
        check.available = true;
        // every decisive tuple has entries below tail(J) - a0
        Int bound = std::max(i.min(), target.conductor() - p.constant());
        auto brute = oracle::brute_admits(p, i.set(), target.zset(), bound);
        check.agrees = brute.holds_up_to_bound == verdict;
      }
      Json j{{"admits", verdict}};
      emit_oracle(check, json, j, out);
      if (json)
        out << j.dump() << "\n";
      else
        out << (verdict ? "true" : "false") << "\n";
    } else if (image_cmd->parsed()) {
      LinearPattern p = parse_pattern(img_p);
      NumericalSemigroup s = parse_semigroup(img_gens);
      RelativeIdeal i = parse_ideal(img_ideal, s);
      TailSet t = image(p, i);
      OracleCheck check;
      if (use_oracle) {
        check.available = true;
        Int hi = t.scale * (*t.set.tail()) + t.shift + 10;
        Int lo = t.scale * t.set.min() + t.shift - 5;
        Int bound = hi - p.constant() + 1;
        auto brute = oracle::brute_image(p, i.set(), bound);
        check.agrees = window_agrees(t, brute.values, lo, std::min(hi, brute.complete_below));
      }
      Json j = to_json(t);
      emit_oracle(check, json, j, out);
      if (json) {
        out << j.dump() << "\n";
      } else {
        if (t.scale != 1) out << "scale=" << t.scale << " ";
        if (t.shift != 0) out << "shift=" << t.shift << " ";
        out << set_text(t.set) << "\n";
      }
    } else if (closure_cmd->parsed()) {
      LinearPattern p = parse_pattern(clo_p);
      NumericalSemigroup s = parse_semigroup(clo_gens);
      RelativeIdeal i = parse_ideal(clo_ideal, s);
      Ideal c = closure(p, i);
      OracleCheck check;
      if (use_oracle) {
        check.available = true;
        Int slack = (c.tail() - c.min() + 2) * (std::abs(p.constant()) + 1) + 10;
        Int bound = c.tail() + slack;
        std::vector<Int> brute = oracle::brute_closure(p, i.set(), bound);
        check.agrees = true;
        for (Int z = c.min(); z < c.tail() + 5 && check.agrees; ++z)
          check.agrees = c.contains(z) == std::binary_search(brute.begin(), brute.end(), z);
      }
      Json j{{"closure", to_json(c)}, {"parent", to_json(c.parent())}};
      emit_oracle(check, json, j, out);
      if (json)
        out << j.dump() << "\n";
      else
        out << "closure: " << set_text(c.set()) << "\nparent: " << set_text(c.parent().zset())
            << "\n";
    } else if (compose_cmd->parsed()) {
      LinearPattern p = parse_pattern(comp_args.front());
      std::vector<LinearPattern> qs;
      for (size_t k = 1; k < comp_args.size(); ++k) qs.push_back(parse_pattern(comp_args[k]));
      NumericalSemigroup s =
          comp_gens.empty() ? NumericalSemigroup::integers() : parse_semigroup(comp_gens);
      RelativeIdeal i = parse_ideal(comp_ideal, s);
      LinearPattern c = compose(p, qs, i);
      if (json)
        out << to_json(c).dump() << "\n";
      else
        out << format_pattern(c) << "\n";
    } else if (conv_cmd->parsed()) {
      NumericalSemigroup s = parse_semigroup(conv_gens);
      RelativeIdeal i = parse_ideal(conv_ideal, s);
      RelativeIdeal jj = parse_ideal(conv_jideal, s);
      PfConvergence r = pf_convergence(i, jj, conv_cap);
      if (json)
        out << Json{{"d0", r.d0}, {"stable_cardinality", r.stable_cardinality}}.dump() << "\n";
      else
        out << "d0: " << r.d0 << "\nstable_cardinality: " << r.stable_cardinality << "\n";
    } else if (pfd_cmd->parsed()) {
      if (pfd_gens.empty()) {
        err << "pfd requires --sgp\n";
        return 2;
      }
      NumericalSemigroup s = parse_semigroup(pfd_gens);
      RelativeIdeal i = parse_ideal(pfd_ideal, s);
      RelativeIdeal jj = parse_ideal(pfd_jideal, s);
      for (Int d = 1; d <= pfd_d; ++d) {
        PFLevelSet level = pf_level(i, jj, d);
        if (json)
          out << Json{{"d", level.d}, {"values", level.values}}.dump() << "\n";
        else
          out << "PF^" << level.d << ": " << csv(level.values) << "\n";
      }
    } else if (quot_cmd->parsed()) {
      NumericalSemigroup s = parse_semigroup(quot_gens);
      NumericalSemigroup q = quotient(s, quot_d);
      OracleCheck check;
      if (use_oracle) {
        check.available = true;
        Int bound = std::max(s.conductor(), quot_d * (q.conductor() + 4)) + 1;
        std::vector<Int> brute = oracle::brute_semigroup(s.minimal_generators(), bound);
        check.agrees = true;
        for (Int x = 0; x <= q.conductor() + 3 && check.agrees; ++x)
          check.agrees =
              q.contains(x) == std::binary_search(brute.begin(), brute.end(), quot_d * x);
      }
      Json j = to_json(q);
      emit_oracle(check, json, j, out);
      if (json) {
        out << j.dump() << "\n";
      } else {
        if (q == s)
          out << quot_gens << " semigroup unchanged\n";
        else
          out << csv(q.minimal_generators()) << "\n";
      }
    } else if (chain_cmd->parsed()) {
      LinearPattern p = parse_pattern(chain_p);
      NumericalSemigroup s = parse_semigroup(chain_gens);
      ImageChain c = image_chain(p, s, chain_k);
      OracleCheck check;
      if (use_oracle) {
        check.available = true;
        check.agrees = true;
        for (size_t step = 0; step + 1 < c.semigroups.size() && check.agrees; ++step) {
          const NumericalSemigroup& cur = c.semigroups[step];
          const NumericalSemigroup& nxt = c.semigroups[step + 1];
          Int hi = nxt.conductor() + 10;
          auto brute = oracle::brute_image(p, cur.zset(), hi + 1);
          for (Int z = 0; z < hi && check.agrees; ++z)
            check.agrees =
                nxt.contains(z) == std::binary_search(brute.values.begin(), brute.values.end(), z);
        }
      }
      Json j;
      j["stabilized"] = c.stabilized;
      j["semigroups"] = Json::array();
      for (const auto& s_k : c.semigroups) j["semigroups"].push_back(to_json(s_k));
      emit_oracle(check, json, j, out);
      if (json) {
        out << j.dump() << "\n";
      } else {
        for (const auto& s_k : c.semigroups) out << set_text(s_k.zset()) << "\n";
        out << "stabilized: " << (c.stabilized ? "true" : "false") << "\n";
      }
    } else if (from_cmd->parsed()) {
      NumericalSemigroup s = parse_semigroup(from_gens);
      LinearPattern p = pattern_from_generators(s);
      if (json)
        out << to_json(p).dump() << "\n";
      else
        out << format_pattern(p) << "\n";
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.get_name() << ": " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return e.name() == "ParseError" ? 2 : 1;
  }
}

}  // namespace sgp
