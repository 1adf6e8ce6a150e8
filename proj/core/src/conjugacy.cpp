#include "semiconj/conjugacy.hpp"

#include <map>
#include <random>
#include <unordered_map>

#include "semiconj/errors.hpp"

namespace semiconj {

  std::string_view to_string(Relation r) noexcept {
    switch (r) {
      case Relation::primary_closure:
        return "primary-closure";
      case Relation::action:
        return "action";
      case Relation::character:
        return "character";
      case Relation::group_units:
        return "group-units";
    }
    return "unknown";
  }

  namespace {

    bool store_witnesses(Witnesses w, std::size_t order) {
      return w == Witnesses::on
             || (w == Witnesses::automatic && order <= witness_order_limit);
    }

  }  // namespace

  std::optional<PrimaryWitness> primary_related(MonoidHull const& hull,
                                                element_id        x,
                                                element_id        y) {
    auto const  order = hull.identity_first();
    auto const& H     = hull.hull;
    for (element_id u : order) {
      for (element_id v : order) {
        if (H.product(u, v) == x && H.product(v, u) == y) {
          return PrimaryWitness{u, v};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<PrimaryWitness> primary_related(FiniteSemigroup const& S,
                                                element_id             x,
                                                element_id             y) {
    return primary_related(monoid_hull(S), x, y);
  }

  ConjugacyPartition tilde_classes(FiniteSemigroup const& S, Witnesses w) {
    auto const  hull  = monoid_hull(S);
    auto const& H     = hull.hull;
    auto const  order = hull.identity_first();
    UnionFind   uf(S.order());

    ConjugacyPartition result{Relation::primary_closure, {}, std::nullopt};
    if (store_witnesses(w, S.order())) {
      result.witnesses.emplace();
    }
    for (element_id u : order) {
      for (element_id v : order) {
        element_id const x = H.product(u, v);
        element_id const y = H.product(v, u);
        // uv lies outside S only for u = v = adjoined identity.
        if (!hull.in_base(x) || !hull.in_base(y)) {
          continue;
        }
        if (uf.unite(x, y) && result.witnesses) {
          result.witnesses->push_back({x, y, PrimaryWitness{u, v}});
        }
      }
    }
    result.partition = Partition::from_union_find(uf);
    return result;
  }

  ConjugacyPartition g_conjugacy_classes(FiniteSemigroup const& S,
                                         Witnesses              w) {
    if (!S.identity()) {
      throw NoIdentity("G-conjugacy needs a monoid");
    }
    element_id const one = *S.identity();
    // Units and their inverses.
    std::vector<std::pair<element_id, element_id>> units;
    for (element_id g = 0; g < S.order(); ++g) {
      for (element_id h = 0; h < S.order(); ++h) {
        if (S.product(g, h) == one && S.product(h, g) == one) {
          units.emplace_back(g, h);
          break;
        }
      }
    }
    ConjugacyPartition result{Relation::group_units, {}, std::nullopt};
    if (store_witnesses(w, S.order())) {
      result.witnesses.emplace();
    }
    UnionFind uf(S.order());
    for (element_id x = 0; x < S.order(); ++x) {
      for (auto [g, h] : units) {
        element_id const y = S.product(S.product(g, x), h);
        if (uf.unite(x, y) && result.witnesses) {
          result.witnesses->push_back({x, y, UnitWitness{g}});
        }
      }
    }
    result.partition = Partition::from_union_find(uf);
    return result;
  }

  ConjugationAction::ConjugationAction(FiniteSemigroup const& S)
      : _hull(monoid_hull(S)) {
    if (!is_inverse(S)) {
      throw NotInverse("the conjugation action needs an inverse semigroup");
    }
    auto const& H = _hull.hull;
    _inverse.resize(H.order());
    for (element_id a = 0; a < H.order(); ++a) {
      _inverse[a] = *least_inverse(H, a);
    }
    _e = power_data(S).idempotent_power;
    auto const G = greens(S);
    _R           = G.R;
    _L           = G.L;
  }

  std::optional<element_id> ConjugationAction::act(element_id a,
                                                   element_id x) const {
    auto const&      H      = _hull.hull;
    element_id const source = H.product(_inverse[a], a);
    // For idempotents, a^-1 a >= e_x means (a^-1 a) e_x = e_x.
    if (H.product(source, _e[x]) != _e[x]) {
      return std::nullopt;
    }
    return H.product(H.product(a, x), _inverse[a]);
  }

  std::optional<OneStepWitness>
  ConjugationAction::one_step_witness(element_id x, element_id y) const {
    if (x == y) {
      return OneStepWitness{x, _hull.one, _hull.one, true};
    }
    auto const&      H  = _hull.hull;
    element_id const ex = _e[x];
    element_id const ey = _e[y];
    element_id const z  = H.product(x, ex);
    if (act(ex, x) == z) {
      for (element_id t = 0; t < order(); ++t) {
        if (_L.same(t, ey) && _R.same(t, ex)) {
          element_id const b = H.product(t, ey);
          if (act(b, y) == z) {
            return OneStepWitness{z, ex, b, true};
          }
        }
      }
    }

    auto const                           scan = _hull.identity_first();
    std::unordered_map<element_id, element_id> least_b;
    for (element_id b : scan) {
      if (auto zb = act(b, y)) {
        least_b.emplace(*zb, b);
      }
    }
    for (element_id a : scan) {
      if (auto za = act(a, x)) {
        if (auto it = least_b.find(*za); it != least_b.end()) {
          return OneStepWitness{*za, a, it->second, false};
        }
      }
    }
    return std::nullopt;
  }

  ConjugacyPartition ConjugationAction::classes(Witnesses w) const {
    ConjugacyPartition result{Relation::action, {}, std::nullopt};
    if (store_witnesses(w, order())) {
      result.witnesses.emplace();
    }
    UnionFind uf(order());
    for (element_id a : _hull.identity_first()) {
      for (element_id x = 0; x < order(); ++x) {
        if (auto y = act(a, x)) {
          if (uf.unite(x, *y) && result.witnesses) {
            result.witnesses->push_back({x, *y, ActionWitness{a}});
          }
        }
      }
    }
    result.partition = Partition::from_union_find(uf);
    return result;
  }

  ConjugacyPartition action_classes(FiniteSemigroup const& S, Witnesses w) {
    return ConjugationAction(S).classes(w);
  }

  std::optional<OneStepWitness>
  one_step_witness(FiniteSemigroup const& S, element_id x, element_id y) {
    return ConjugationAction(S).one_step_witness(x, y);
  }

  std::size_t count_invalid_witnesses(FiniteSemigroup const&    S,
                                      ConjugacyPartition const& p) {
    if (!p.witnesses) {
      return 0;
    }
    auto const                       hull = monoid_hull(S);
    std::optional<ConjugationAction> action;
    std::size_t                      bad = 0;
    for (auto const& [x, y, witness] : *p.witnesses) {
      bool ok = p.partition.same(x, y);
      if (auto const* pw = std::get_if<PrimaryWitness>(&witness)) {
        ok = ok && hull.hull.product(pw->u, pw->v) == x
             && hull.hull.product(pw->v, pw->u) == y;
      } else if (auto const* aw = std::get_if<ActionWitness>(&witness)) {
        if (!action) {
          action.emplace(S);
        }
        ok = ok && action->act(aw->a, x) == y;
      } else if (auto const* uw = std::get_if<UnitWitness>(&witness)) {
        auto const gi = least_inverse(S, uw->g);
        ok = ok && gi && S.product(S.product(uw->g, x), *gi) == y;
      }
      bad += ok ? 0 : 1;
    }
    return bad;
  }

  Theorem2Report verify_theorem2(FiniteSemigroup const& S) {
    ConjugationAction const action(S);
    auto const tilde  = tilde_classes(S, Witnesses::off).partition;
    auto const approx = action.classes(Witnesses::off).partition;

    Theorem2Report report;
    report.order            = S.order();
    report.tilde_classes    = tilde.number_of_classes();
    report.action_classes   = approx.number_of_classes();
    report.partitions_equal = tilde == approx;
    if (!report.partitions_equal) {
      report.counterexample = "partitions differ";
    }

    auto fail = [&](element_id x, element_id y, std::string const& why) {
      if (report.failures++ == 0 && report.counterexample.empty()) {
        report.counterexample = "x=" + S.name(x) + " y=" + S.name(y) + ": "
                                + why;
      }
    };
    for (element_id x = 0; x < S.order(); ++x) {
      for (element_id y = 0; y < S.order(); ++y) {
        ++report.pairs;
        auto const w = action.one_step_witness(x, y);
        if (w.has_value() != tilde.same(x, y)) {
          fail(x, y, w ? "witness for unrelated pair" : "no witness");
          continue;
        }
        if (!w) {
          continue;
        }
        ++report.witnessed_pairs;
        report.recipe_hits += w->from_recipe ? 1 : 0;
        if (action.act(w->a, x) != w->z || action.act(w->b, y) != w->z) {
          fail(x, y, "witness does not re-validate");
        }
      }
    }
    return report;
  }

  namespace {

    void check_abstract_triple(Lemma1Report&            report,
                               ConjugationAction const& action,
                               element_id a, element_id b, element_id x) {
      auto const& H      = action.hull().hull;
      auto const  direct = action.act(H.product(b, a), x);
      auto const  first  = action.act(a, x);
      auto const  second = first ? action.act(b, *first) : std::nullopt;
      ++report.triples;
      report.defined += direct ? 1 : 0;
      if (direct != second) {
        if (report.failures++ == 0) {
          report.first_failure = "a=" + H.name(a) + " b=" + H.name(b)
                                 + " x=" + H.name(x);
        }
      }
    }

  }  // namespace

  Lemma1Report verify_action_composition(FiniteSemigroup const& S) {
    ConjugationAction const action(S);
    auto const              all = action.hull().identity_first();
    Lemma1Report            report;
    for (auto a : all) {
      for (auto b : all) {
        for (element_id x = 0; x < S.order(); ++x) {
          check_abstract_triple(report, action, a, b, x);
        }
      }
    }
    return report;
  }

  Lemma1Report verify_action_composition(FiniteSemigroup const& S,
                                         std::size_t            samples,
                                         std::uint64_t          seed) {
    ConjugationAction const action(S);
    std::mt19937_64         rng(seed);
    std::uniform_int_distribution<element_id> hull_pick(
        0, static_cast<element_id>(action.hull().hull.order() - 1));
    std::uniform_int_distribution<element_id> base_pick(
        0, static_cast<element_id>(S.order() - 1));
    Lemma1Report report;
    for (std::size_t k = 0; k < samples; ++k) {
      auto const a = hull_pick(rng);
      auto const b = hull_pick(rng);
      check_abstract_triple(report, action, a, b, base_pick(rng));
    }
    return report;
  }

}  // namespace semiconj
