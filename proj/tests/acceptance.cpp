// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <numeric>
#include <string>
#include <vector>

#include <boost/integer/common_factor.hpp>

#include "plumbing/families.hpp"
#include "plumbing/graph.hpp"
#include "plumbing/rationality.hpp"
#include "plumbing/toric.hpp"
#include "support.hpp"

using namespace plumbing;
using plumbing::testing::Rng;
using plumbing::testing::uniform;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void report(const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("unexpected exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) {
    o.ok = false;
    o.detail += "; time limit " + std::to_string(limit_s) + " s exceeded";
  }
  if (!o.ok) ++failures;
  std::printf("[%s] %s (%s, %.2f s)\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::vector<Leg> all_legs(std::size_t max_len, Weight lo, Weight hi) {
  std::vector<Leg> out;
  std::vector<Leg> frontier{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Leg> next;
    for (const auto& prefix : frontier)
      for (Weight w = lo; w <= hi; ++w) {
        auto leg = prefix;
        leg.push_back(w);
        next.push_back(leg);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

Outcome oracle_equivalence() {
  // Definiteness is invariant under reordering legs, so legs are enumerated
  // as multisets (nondecreasing index tuples).
  const auto legs = all_legs(3, -5, -2);
  const std::size_t L = legs.size();
  std::vector<std::vector<std::size_t>> combos;
  for (std::size_t a = 0; a < L; ++a) {
    combos.push_back({a});
    for (std::size_t b = a; b < L; ++b) {
      combos.push_back({a, b});
      for (std::size_t c = b; c < L; ++c) combos.push_back({a, b, c});
    }
  }

  struct Tally {
    std::size_t graphs = 0, definite = 0, disagree = 0, oracle_checked = 0, oracle_disagree = 0;
  };
  auto work = [&](Weight central) {
    Tally t;
    std::size_t i = 0;
    for (const auto& combo : combos) {
      std::vector<Leg> ls;
      for (const auto k : combo) ls.push_back(legs[k]);
      const StarPlumbing g(central, std::move(ls));
      const auto m = intersection_matrix(g);
      const bool nr = is_negative_definite_star(g);
      const bool sylvester = is_negative_definite_matrix(m);
      ++t.graphs;
      t.definite += nr;
      t.disagree += nr != sylvester;
      // Independent spot check of both against rational elimination.
      if (++i % 97 == 0) {
        ++t.oracle_checked;
        t.oracle_disagree += plumbing::testing::ldl_negative_definite(m) != nr;
      }
    }
    return t;
  };
  std::vector<std::future<Tally>> jobs;
  for (Weight central = -6; central <= 1; ++central)
    jobs.push_back(std::async(std::launch::async, work, central));
  Tally total;
  for (auto& j : jobs) {
    const auto t = j.get();
    total.graphs += t.graphs;
    total.definite += t.definite;
    total.disagree += t.disagree;
    total.oracle_checked += t.oracle_checked;
    total.oracle_disagree += t.oracle_disagree;
  }
  return {total.disagree == 0 && total.oracle_disagree == 0,
          std::to_string(total.graphs) + " graphs, " + std::to_string(total.definite) +
              " definite, " + std::to_string(total.disagree) + " disagreements; " +
              std::to_string(total.oracle_disagree) + "/" + std::to_string(total.oracle_checked) +
              " oracle mismatches"};
}

Outcome cf_round_trip() {
  Rng rng(101);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    // x = -a/b < -1 with 1 <= b < a <= 10^6.
    const auto a = uniform(rng, 2, 1'000'000);
    const auto b = uniform(rng, 1, a - 1);
    const Rational x = -Rational(BigInt(a), BigInt(b));
    const auto cf = cf_expand(x);
    const bool coeffs_ok =
        std::all_of(cf.coeffs().begin(), cf.coeffs().end(), [](Weight w) { return w <= -2; });
    if (!coeffs_ok || cf_evaluate(cf) != x || plumbing::testing::cf_matrix_value(cf.coeffs()) != x)
      ++bad;
  }
  return {bad == 0, "1000 rationals, " + std::to_string(bad) + " failures"};
}

Outcome tau_laws() {
  Rng rng(202);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto leg = plumbing::testing::random_leg(rng, 8, -9);
    const BigInt u = uniform(rng, -5, 5);
    const auto taus = tau_sequence(leg, u);
    bool ok = taus.size() == leg.size() + 2 && taus[0] == TauVector{1, 0} && taus[1] == TauVector{u, 1};
    for (std::size_t j = 0; ok && j + 1 < taus.size(); ++j) {
      ok = det(taus[j], taus[j + 1]) == 1 &&
           boost::integer::gcd(taus[j].u, taus[j].v) == 1;
      if (ok && j >= 1) {
        ok = -det(taus[j - 1], taus[j + 1]) == leg[j - 1] &&
             plumbing::testing::tau_by_cramer(taus[j - 1], taus[j], leg[j - 1]) == taus[j + 1];
      }
    }
    const Rational r = -1 / plumbing::testing::cf_matrix_value(leg);
    ok = ok && sigma_of(taus) == Rational(u) - r;
    bad += !ok;
  }
  return {bad == 0, "1000 legs, " + std::to_string(bad) + " failures"};
}

Outcome sigma_sum() {
  Rng rng(303);
  int bad = 0, definite = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<Leg> legs(static_cast<std::size_t>(uniform(rng, 1, 4)));
    for (auto& leg : legs) leg = plumbing::testing::random_leg(rng, 8, -9);
    const Weight s0 = uniform(rng, -8, 1);
    const StarPlumbing g(s0, legs);
    // Random integral split of -s0.
    std::vector<BigInt> split(legs.size());
    BigInt rest = -s0;
    for (std::size_t k = 0; k + 1 < split.size(); ++k) {
      split[k] = uniform(rng, -5, 5);
      rest -= split[k];
    }
    split.back() = rest;
    Rational sum = 0, r_sum = 0;
    for (std::size_t k = 0; k < legs.size(); ++k) {
      sum += sigma_of(tau_sequence(legs[k], split[k]));
      r_sum += -1 / plumbing::testing::cf_matrix_value(legs[k]);
    }
    const bool oracle_definite = plumbing::testing::ldl_negative_definite(intersection_matrix(g));
    definite += oracle_definite;
    if (sum != -(Rational(s0) + r_sum) || (sum > 0) != oracle_definite) ++bad;
  }
  return {bad == 0, "1000 graphs, " + std::to_string(definite) + " definite, " +
                        std::to_string(bad) + " failures"};
}

Outcome template_end_to_end() {
  Rng rng(404);
  int verified = 0, condition4 = 0, bad = 0;
  std::string first;
  for (int i = 0; i < 500; ++i) {
    const auto g = plumbing::testing::random_definite_star(rng, 4, 8, -9);
    AreaSpec areas;
    for (const auto& leg : g.legs()) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < leg.size(); ++j)
        row.push_back(plumbing::testing::random_positive(rng, 10, 12));
      areas.legs.push_back(std::move(row));
    }
    areas.central = plumbing::testing::random_positive(rng, 10, 12);
    try {
      const auto t = build_template(g, areas);
      const auto rep = verify_template(t, g, areas);
      // Area readback and -sum u = s0 are computed independently here too.
      bool ok = rep.passed;
      BigInt u_sum = 0;
      for (const auto& u : t.u_split) u_sum += u;
      ok = ok && u_sum == -g.central();
      for (std::size_t k = 0; ok && k < g.leg_count(); ++k) {
        const auto& lt = t.legs[k];
        for (std::size_t j = 1; ok && j <= g.legs()[k].size(); ++j) {
          const Point d{lt.points[j + 1].x - lt.points[j].x, lt.points[j + 1].y - lt.points[j].y};
          ok = d == Point{areas.legs[k][j - 1] * Rational(lt.taus[j].u),
                          areas.legs[k][j - 1] * Rational(lt.taus[j].v)};
        }
      }
      if (ok) {
        ++verified;
      } else {
        ++bad;
        if (first.empty()) {
          const auto* f = rep.first_failure();
          first = f ? f->name : "independent readback";
        }
      }
    } catch (const TemplateError& e) {
      if (e.kind() == TemplateError::Kind::Condition4Violated) {
        ++condition4;
      } else {
        ++bad;
        if (first.empty()) first = e.what();
      }
    }
  }
  std::string detail = std::to_string(verified) + " verified, " + std::to_string(condition4) +
                       " condition-4 errors, " + std::to_string(bad) + " failures";
  if (!first.empty()) detail += "; first: " + first;
  return {bad == 0, detail};
}

Outcome worked_instance() {
  const StarPlumbing g(-2, {{-2}});
  const auto t = build_template(g, unit_areas(g));
  const auto& leg = t.legs.at(0);
  const bool ok = leg.offset == Rational(-1, 2) && t.y0 == 1 && leg.points.at(1) == Point{1, 1} &&
                  leg.points.at(2) == Point{3, 2} && verify_template(t, g, unit_areas(g)).passed;
  return {ok, "K = " + to_string(leg.offset) + ", y0 = " + to_string(t.y0) + ", P1 = (" +
                  to_string(leg.points.at(1).x) + ", " + to_string(leg.points.at(1).y) + "), P2 = (" +
                  to_string(leg.points.at(2).x) + ", " + to_string(leg.points.at(2).y) + ")"};
}

Outcome families() {
  struct Tally {
    int graphs = 0, round_trip_bad = 0, indefinite = 0, rational_checked = 0, not_rational = 0;
  };
  auto work = [](Family f) {
    Tally t;
    for (int p = 0; p <= 6; ++p)
      for (int q = 0; q <= 6; ++q)
        for (int r = 0; r <= 6; ++r) {
          const FamilyTag tag{f, p, q, r};
          const auto g = generate(tag);
          ++t.graphs;
          const auto back = recognize(g);
          if (!back || !isomorphic(generate(*back), g)) ++t.round_trip_bad;
          if (!is_negative_definite_star(g) || !is_negative_definite_matrix(intersection_matrix(g)))
            ++t.indefinite;
          if (p <= 4 && q <= 4 && r <= 4) {
            ++t.rational_checked;
            const auto rep = is_rational(g);
            if (!rep.rational || rep.arithmetic_genus != 0 || !rep.l_space) ++t.not_rational;
          }
        }
    return t;
  };
  std::vector<std::future<Tally>> jobs;
  for (const auto f : {Family::Gamma, Family::Delta, Family::Lambda})
    jobs.push_back(std::async(std::launch::async, work, f));
  Tally total;
  for (auto& j : jobs) {
    const auto t = j.get();
    total.graphs += t.graphs;
    total.round_trip_bad += t.round_trip_bad;
    total.indefinite += t.indefinite;
    total.rational_checked += t.rational_checked;
    total.not_rational += t.not_rational;
  }
  return {total.round_trip_bad == 0 && total.indefinite == 0 && total.not_rational == 0,
          std::to_string(total.graphs) + " graphs, " + std::to_string(total.round_trip_bad) +
              " round-trip failures, " + std::to_string(total.indefinite) + " not definite, " +
              std::to_string(total.not_rational) + "/" + std::to_string(total.rational_checked) +
              " not rational"};
}

Outcome laufer() {
  Rng rng(505);
  int order_bad = 0, genus_bad = 0;
  for (int i = 0; i < 200; ++i) {
    const auto g = plumbing::testing::random_definite_star(rng, 4, 3, -5);
    const auto z = fundamental_cycle(g);
    std::vector<std::size_t> order(g.vertex_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (int k = 0; k < 5; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      if (fundamental_cycle(g, order) != z) {
        ++order_bad;
        break;
      }
    }
    const auto rep = is_rational(g);
    if (denominator(rep.arithmetic_genus) != 1 || rep.arithmetic_genus < 0) ++genus_bad;
  }
  const bool hand = fundamental_cycle(StarPlumbing(-2, {{-2}})) == Cycle{{1, 1}} &&
                    fundamental_cycle(generate({Family::Gamma, 0, 0, 0})) == Cycle{{1, 1, 1, 1}} &&
                    fundamental_cycle(StarPlumbing(-2, {{-2}, {-2}, {-2}})) == Cycle{{2, 1, 1, 1}};
  return {order_bad == 0 && genus_bad == 0 && hand,
          "200 graphs, " + std::to_string(order_bad) + " order-dependent, " +
              std::to_string(genus_bad) + " non-integral genus, hand cycles " +
              (hand ? "match" : "differ")};
}

}  // namespace

int main() {
  report("oracle equivalence: Neumann-Raymond vs Sylvester, exhaustive", 10, oracle_equivalence);
  report("continued fraction round trip", 0, cf_round_trip);
  report("tau sequence laws", 0, tau_laws);
  report("sigma sum identity", 0, sigma_sum);
  report("template end to end", 30, template_end_to_end);
  report("worked one-leg instance", 0, worked_instance);
  report("families: round trip, definiteness, rationality", 60, families);
  report("Laufer fundamental cycle", 0, laufer);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
