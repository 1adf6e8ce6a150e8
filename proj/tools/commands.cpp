#include "commands.hpp"

#include <charconv>

#include "eggbox.hpp"
#include "input.hpp"

namespace semiconj::cli {

  namespace {

    constexpr std::size_t exhaustive_triple_limit = 20'000'000;

    json names_of(FiniteSemigroup const& S, std::vector<element_id> const& ids) {
      json out = json::array();
      for (auto x : ids) {
        out.push_back(S.name(x));
      }
      return out;
    }

    std::string brace(FiniteSemigroup const& S, std::vector<element_id> const& ids) {
      std::string out = "{";
      for (std::size_t i = 0; i < ids.size(); ++i) {
        out += (i ? ", " : "") + S.name(ids[i]);
      }
      return out + "}";
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    std::string number(double v) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3g", v);
      return buf;
    }

    std::string complex_text(complex z) {
      auto const s = snap(z);
      if (s.imag() == 0) {
        return number(s.real());
      }
      return number(s.real()) + (s.imag() < 0 ? "-" : "+") + number(std::abs(s.imag()))
             + "i";
    }

    /// Report skeleton shared by commands that read a semigroup.
    Report start(Input const& in) {
      Report r;
      r.input_digest       = digest(in.S);
      r.result["order"]    = in.S.order();
      r.result["provenance"] = in.provenance;
      r.lines.push_back("order " + std::to_string(in.S.order()));
      return r;
    }

    std::size_t parse_count(std::string const& text) {
      std::size_t v = 0;
      auto const [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || end != text.data() + text.size()) {
        throw UsageError("expected a non-negative integer, got \"" + text + "\"");
      }
      return v;
    }

    // Conjugacy ------------------------------------------------------------

    void describe_partition(Report&                   r,
                            FiniteSemigroup const&    S,
                            MonoidHull const&         hull,
                            ConjugacyPartition const& p) {
      json classes = json::array();
      json sizes   = json::array();
      r.lines.push_back(std::to_string(p.partition.number_of_classes()) + " classes");
      for (auto const& c : p.partition.classes()) {
        classes.push_back(names_of(S, c));
        sizes.push_back(c.size());
        r.lines.push_back("  " + brace(S, c));
      }
      r.result["classes"]     = classes;
      r.result["class_sizes"] = sizes;
      if (!p.witnesses) {
        return;
      }
      auto const& H = hull.hull;
      json        w = json::array();
      for (auto const& m : *p.witnesses) {
        json        entry{{"x", S.name(m.x)}, {"y", S.name(m.y)}};
        std::string how;
        if (auto const* pw = std::get_if<PrimaryWitness>(&m.witness)) {
          entry["u"] = H.name(pw->u);
          entry["v"] = H.name(pw->v);
          how        = "u=" + H.name(pw->u) + " v=" + H.name(pw->v);
        } else if (auto const* aw = std::get_if<ActionWitness>(&m.witness)) {
          entry["a"] = H.name(aw->a);
          how        = "a=" + H.name(aw->a);
        } else if (auto const* gw = std::get_if<UnitWitness>(&m.witness)) {
          entry["g"] = S.name(gw->g);
          how        = "g=" + S.name(gw->g);
        }
        w.push_back(std::move(entry));
        r.lines.push_back("  merge " + S.name(m.x) + " ~ " + S.name(m.y) + " via " + how);
      }
      r.result["witnesses"] = std::move(w);
    }

    void primary_report(Report& r, FiniteSemigroup const& S) {
      auto const hull = monoid_hull(S);
      auto const& H   = hull.hull;
      json        pairs = json::array();
      std::vector<std::vector<bool>> related(S.order(), std::vector<bool>(S.order()));
      for (element_id x = 0; x < S.order(); ++x) {
        for (element_id y = 0; y < S.order(); ++y) {
          auto const w = primary_related(hull, x, y);
          related[x][y] = w.has_value();
          if (w && x < y) {
            pairs.push_back(json{{"x", S.name(x)},
                                 {"y", S.name(y)},
                                 {"u", H.name(w->u)},
                                 {"v", H.name(w->v)}});
            r.lines.push_back("  " + S.name(x) + " = uv, " + S.name(y)
                              + " = vu with u=" + H.name(w->u) + " v=" + H.name(w->v));
          }
        }
      }
      bool transitive = true;
      for (element_id x = 0; x < S.order() && transitive; ++x) {
        for (element_id y = 0; y < S.order() && transitive; ++y) {
          for (element_id z = 0; z < S.order() && transitive; ++z) {
            transitive = !(related[x][y] && related[y][z] && !related[x][z]);
          }
        }
      }
      r.result["relation"]      = "primary";
      r.result["related_pairs"] = std::move(pairs);
      r.result["transitive"]    = transitive;
      r.lines.insert(r.lines.begin() + 1, "primary relation (pairs x < y, other than x = y):");
      r.lines.push_back("transitive: " + yes_no(transitive));
      auto const closure = tilde_classes(S, Witnesses::off);
      Report     tmp;
      describe_partition(tmp, S, hull, closure);
      r.result["closure_classes"] = tmp.result["classes"];
      r.lines.push_back("closure: " + tmp.lines.front());
      r.lines.insert(r.lines.end(), tmp.lines.begin() + 1, tmp.lines.end());
    }

    void character_report(Report& r, FiniteSemigroup const& S, std::uint64_t seed) {
      CharacterOracle const oracle(S, seed);
      std::size_t const     n = S.order();
      json                  matrix = json::array();
      json                  pairs  = json::array();
      std::vector<std::string> grid;
      std::size_t              unknown = 0;
      for (element_id x = 0; x < n; ++x) {
        json        row = json::array();
        std::string line;
        for (element_id y = 0; y < n; ++y) {
          auto const d = oracle.decide(x, y);
          row.push_back(std::string(to_string(d.verdict)));
          line += d.verdict == Verdict::equivalent ? 'E'
                  : d.verdict == Verdict::distinct ? 'D'
                                                   : '?';
          if (x >= y) {
            continue;
          }
          unknown += d.verdict == Verdict::unknown ? 1 : 0;
          json entry{{"x", S.name(x)},
                     {"y", S.name(y)},
                     {"verdict", std::string(to_string(d.verdict))},
                     {"reason", d.reason}};
          if (d.character) {
            entry["character"] = oracle.family()[*d.character].provenance;
            entry["values"]    = json::array({complex_text(d.x_value), complex_text(d.y_value)});
          }
          if (d.verdict != Verdict::distinct) {
            std::string reason = d.reason;
            if (d.reason == "reduction") {
              reason += ": x e_x = y e_y = " + S.name(oracle.reduce(x));
            }
            r.lines.push_back("  " + S.name(x) + " == " + S.name(y) + " "
                              + std::string(to_string(d.verdict)) + " (" + reason + ")");
          }
          pairs.push_back(std::move(entry));
        }
        matrix.push_back(std::move(row));
        grid.push_back("  " + line + "  " + S.name(x));
      }
      r.result["relation"]     = "character";
      r.result["regular"]      = oracle.regular();
      r.result["family_size"]  = oracle.family().size();
      r.result["verdicts"]     = std::move(matrix);
      r.result["pairs"]        = std::move(pairs);
      r.result["unknown"]      = unknown;
      json            classes = json::array();
      Partition const agreement = oracle.agreement_partition();
      for (auto const& c : agreement.classes()) {
        classes.push_back(names_of(S, c));
      }
      r.result["agreement_classes"] = std::move(classes);

      std::vector<std::string> head{
          "character conjugacy, family of " + std::to_string(oracle.family().size())
              + " characters, regular: " + yes_no(oracle.regular()),
          "non-distinct pairs x < y:"};
      r.lines.insert(r.lines.begin() + 1, head.begin(), head.end());
      r.lines.push_back("verdict matrix (E equivalent, D distinct, ? unknown):");
      r.lines.insert(r.lines.end(), grid.begin(), grid.end());
    }

    // Verification ---------------------------------------------------------

    void hypotheses(Report& r, FiniteSemigroup const& S, bool& regular, bool& inverse) {
      regular              = is_regular(S);
      inverse              = regular && is_inverse(S);
      r.result["regular"]  = regular;
      r.result["inverse"]  = inverse;
      r.lines.push_back("regular: " + yes_no(regular) + ", inverse: " + yes_no(inverse));
    }

    Outcome outcome_of(bool passed) {
      return passed ? Outcome::pass : Outcome::fail;
    }

    json theorem1_json(Theorem1Report const& t) {
      return json{{"tilde_classes", t.tilde_classes},
                  {"agreement_classes", t.agreement_classes},
                  {"partitions_equal", t.partitions_equal},
                  {"pairs", t.pairs},
                  {"unknown_verdicts", t.unknown_verdicts},
                  {"inconsistent", t.inconsistent},
                  {"chain_checks", t.chain_checks},
                  {"chain_failures", t.chain_failures},
                  {"max_chain_defect", number(t.max_chain_defect)},
                  {"counterexample", t.counterexample}};
    }

    json theorem2_json(Theorem2Report const& t) {
      return json{{"tilde_classes", t.tilde_classes},
                  {"action_classes", t.action_classes},
                  {"partitions_equal", t.partitions_equal},
                  {"pairs", t.pairs},
                  {"witnessed_pairs", t.witnessed_pairs},
                  {"recipe_hits", t.recipe_hits},
                  {"failures", t.failures},
                  {"counterexample", t.counterexample}};
    }

    void theorem1_lines(Report& r, Theorem1Report const& t) {
      r.lines.push_back("closure classes " + std::to_string(t.tilde_classes)
                        + ", character agreement classes "
                        + std::to_string(t.agreement_classes) + ", equal: "
                        + yes_no(t.partitions_equal));
      r.lines.push_back("pairs " + std::to_string(t.pairs) + ", unknown "
                        + std::to_string(t.unknown_verdicts) + ", inconsistent "
                        + std::to_string(t.inconsistent));
      r.lines.push_back("trace chains " + std::to_string(t.chain_checks) + ", failures "
                        + std::to_string(t.chain_failures) + ", max defect "
                        + number(t.max_chain_defect));
      if (!t.counterexample.empty()) {
        r.lines.push_back("counterexample: " + t.counterexample);
      }
    }

    void theorem2_lines(Report& r, Theorem2Report const& t) {
      r.lines.push_back("closure classes " + std::to_string(t.tilde_classes)
                        + ", action classes " + std::to_string(t.action_classes)
                        + ", equal: " + yes_no(t.partitions_equal));
      r.lines.push_back("pairs " + std::to_string(t.pairs) + ", witnessed "
                        + std::to_string(t.witnessed_pairs) + " (constructive "
                        + std::to_string(t.recipe_hits) + "), failures "
                        + std::to_string(t.failures));
      if (!t.counterexample.empty()) {
        r.lines.push_back("counterexample: " + t.counterexample);
      }
    }

  }  // namespace

  Built build(std::string const&              family,
              std::vector<std::string> const& params,
              Options const&                  opts) {
    Input in = [&] {
      if (family == "from-table" || family == "from-generators") {
        if (params.size() != 1) {
          throw UsageError(family + " takes one file path");
        }
        auto const doc = parse_json(read_file(params[0]));
        json provenance{{"tool", "semiconj"}, {"family", family}, {"source", params[0]}};
        if (family == "from-table") {
          return Input{semigroup_from_json(doc), provenance};
        }
        return std::visit(
            [&](auto const& gens) {
              using T     = typename std::decay_t<decltype(gens)>::value_type;
              auto closed = closure_from_generators<T>(
                  gens, [](T const& a, T const& b) { return compose(a, b); });
              std::vector<std::string> names;
              for (auto const& x : closed.elements) {
                names.push_back(x.to_string());
              }
              auto table = closed.semigroup.table();
              return Input{FiniteSemigroup::from_table(table, std::move(names),
                                                       Validation::trusted),
                           provenance};
            },
            generator_set_from_json(doc));
      }
      std::vector<std::size_t> numbers;
      for (auto const& p : params) {
        numbers.push_back(parse_count(p));
      }
      return build_family(family, numbers, opts.force);
    }();

    Built out;
    out.text                   = semigroup_file(in);
    out.report.input_digest    = digest(in.S);
    out.report.result["order"] = in.S.order();
    out.report.result["path"]  = opts.out;
    out.report.lines.push_back("wrote order " + std::to_string(in.S.order()) + " to "
                               + opts.out);
    if (!opts.out.empty()) {
      write_file(opts.out, out.text);
    }
    return out;
  }

  Report analyze(std::string const& input, Options const& opts) {
    auto const in = load_input(input, opts.force);
    auto const& S = in.S;
    Report      r = start(in);
    auto const  G = greens(S);
    bool const  regular = is_regular(S);
    bool const  inverse = regular && is_inverse(S);
    r.result["regular"]     = regular;
    r.result["inverse"]     = inverse;
    r.result["idempotents"] = S.idempotents().size();
    r.result["classes"]     = json{{"R", G.R.number_of_classes()},
                                   {"L", G.L.number_of_classes()},
                                   {"H", G.H.number_of_classes()},
                                   {"D", G.D.number_of_classes()},
                                   {"J", G.J.number_of_classes()}};
    r.lines.push_back("regular: " + yes_no(regular) + ", inverse: " + yes_no(inverse)
                      + ", idempotents: " + std::to_string(S.idempotents().size()));
    r.lines.push_back("classes: R " + std::to_string(G.R.number_of_classes()) + ", L "
                      + std::to_string(G.L.number_of_classes()) + ", H "
                      + std::to_string(G.H.number_of_classes()) + ", D "
                      + std::to_string(G.D.number_of_classes()));
    json dclasses = json::array();
    for (std::size_t i = 0; i < G.d_classes.size(); ++i) {
      auto const& d    = G.d_classes[i];
      auto const  rows = d.eggbox.size();
      auto const  cols = d.eggbox.front().size();
      dclasses.push_back(json{{"members", names_of(S, d.members)},
                              {"regular", d.regular},
                              {"rows", rows},
                              {"columns", cols},
                              {"eggbox", eggbox_json(S, G, d)}});
      r.lines.push_back("");
      r.lines.push_back("D-class " + std::to_string(i + 1) + ": "
                        + std::to_string(d.members.size())
                        + (d.members.size() == 1 ? " element, " : " elements, ")
                        + (d.regular ? "regular" : "not regular") + ", "
                        + std::to_string(rows) + "x" + std::to_string(cols));
      for (auto& line : draw_eggbox(S, G, d, opts.fancy)) {
        r.lines.push_back(std::move(line));
      }
    }
    r.result["d_classes"] = std::move(dclasses);
    return r;
  }

  Report conjugacy(std::string const& input,
                   std::string const& relation,
                   Options const&     opts) {
    auto const in = load_input(input, opts.force);
    auto const& S = in.S;
    Report      r = start(in);
    if (relation == "primary") {
      primary_report(r, S);
    } else if (relation == "character") {
      character_report(r, S, opts.seed);
    } else {
      auto const p = relation == "tilde"    ? tilde_classes(S)
                     : relation == "action" ? action_classes(S)
                     : relation == "group"  ? g_conjugacy_classes(S)
                                            : throw UsageError("unknown relation \""
                                                               + relation + "\"");
      r.result["relation"] = std::string(to_string(p.relation));
      r.lines.push_back("relation " + std::string(to_string(p.relation)));
      describe_partition(r, S, monoid_hull(S), p);
    }
    return r;
  }

  Report verify(std::string const& input, std::string const& claim, Options const& opts) {
    auto const in = load_input(input, opts.force);
    auto const& S = in.S;
    Report      r = start(in);
    r.result["claim"] = claim;
    r.lines.push_back("claim " + claim);
    bool regular = false, inverse = false;
    hypotheses(r, S, regular, inverse);

    auto unmet = [&](char const* needs) {
      r.outcome = Outcome::hypothesis_not_met;
      r.lines.push_back(claim + " needs " + needs + " semigroup");
      return r;
    };

    if (claim == "theorem1") {
      if (!regular) {
        return unmet("a regular");
      }
      auto const t        = verify_theorem1(S, opts.seed);
      r.result["report"]  = theorem1_json(t);
      theorem1_lines(r, t);
      r.outcome = outcome_of(t.passed());
    } else if (claim == "theorem2") {
      if (!inverse) {
        return unmet("an inverse");
      }
      auto const t       = verify_theorem2(S);
      r.result["report"] = theorem2_json(t);
      theorem2_lines(r, t);
      r.outcome = outcome_of(t.passed());
    } else if (claim == "lemma1") {
      if (!inverse) {
        return unmet("an inverse");
      }
      std::size_t const m = monoid_hull(S).hull.order();
      bool const exhaustive = m * m * S.order() <= exhaustive_triple_limit;
      auto const t = exhaustive ? verify_action_composition(S)
                                : verify_action_composition(S, opts.samples, opts.seed);
      r.result["report"] = json{{"mode", exhaustive ? "exhaustive" : "sampled"},
                                {"triples", t.triples},
                                {"defined", t.defined},
                                {"failures", t.failures},
                                {"first_failure", t.first_failure}};
      r.lines.push_back(std::string(exhaustive ? "exhaustive" : "sampled") + ": "
                        + std::to_string(t.triples) + " triples, "
                        + std::to_string(t.defined) + " defined, "
                        + std::to_string(t.failures) + " failures");
      if (!t.passed()) {
        r.lines.push_back("first failure: " + t.first_failure);
      }
      r.outcome = outcome_of(t.passed());
    } else if (claim == "example1") {
      auto const t = verify_example1(S, opts.seed);
      json       rep{{"tilde_classes", t.tilde_classes}, {"tilde_trivial", t.tilde_trivial}};
      rep["x"]           = t.x ? json(S.name(*t.x)) : json(nullptr);
      rep["y"]           = t.y ? json(S.name(*t.y)) : json(nullptr);
      rep["certificate"] = t.certificate;
      r.result["report"] = std::move(rep);
      r.lines.push_back("closure classes " + std::to_string(t.tilde_classes)
                        + ", trivial: " + yes_no(t.tilde_trivial));
      if (t.x) {
        r.lines.push_back(S.name(*t.x) + " == " + S.name(*t.y) + " EQUIVALENT ("
                          + t.certificate + ") but not related by the closure");
      } else {
        r.lines.push_back("no pair is character-equivalent without being related");
      }
      r.outcome = outcome_of(t.passed());
    } else if (claim == "corollaries") {
      if (!regular) {
        return unmet("a regular");
      }
      auto const t = verify_corollaries(S, opts.seed);
      json       rep{{"theorem1", theorem1_json(*t.theorem1)}};
      theorem1_lines(r, *t.theorem1);
      if (t.theorem2) {
        rep["theorem2"] = theorem2_json(*t.theorem2);
        theorem2_lines(r, *t.theorem2);
      }
      if (t.three_way_equal) {
        rep["three_way_equal"] = *t.three_way_equal;
        r.lines.push_back("closure, action and character partitions equal: "
                          + yes_no(*t.three_way_equal));
      }
      r.result["report"] = std::move(rep);
      r.outcome          = outcome_of(t.passed());
    } else {
      throw UsageError("unknown claim \"" + claim + "\"");
    }
    return r;
  }

}  // namespace semiconj::cli
