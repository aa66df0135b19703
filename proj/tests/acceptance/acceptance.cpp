// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../test_support.hpp"
#include "pkfree/pkfree.hpp"
#include "pkfree_cli.hpp"

using namespace pkfree;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Every tournament on n <= 5 vertices, k in {4, 8}, both modes.
Verdict exhaustive_small() {
  auto start = std::chrono::steady_clock::now();
  std::size_t runs = 0, failures = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    const std::uint64_t codes = std::uint64_t{1} << (n * (n - (n > 0)) / 2);
    for (std::uint64_t code = 0; code < codes; ++code) {
      Tournament t = support::tournament_from_code(n, code);
      for (std::size_t k : {4u, 8u})
        for (Mode mode : {Mode::strict, Mode::relaxed}) {
          ConstantSchedule s = schedule_for(k, mode);
          ++runs;
          try {
            TransResult r = find_trans(t, s);
            bool ok = !r.has_witness() && verify_trans_result(t, r) && r.vertices.size() >= std::min<std::size_t>(2, n);
            Coloring c = acyclic_coloring(t, s);
            if (!ok || !verify_coloring(t, c)) ++failures;
          } catch (const std::exception&) {
            ++failures;
          }
        }
    }
  }
  double secs = seconds_since(start);
  std::ostringstream os;
  os << runs << " runs, " << failures << " failures, " << secs << " s";
  return {failures == 0 && secs < 60, os.str()};
}

// 2. Relaxed-mode invariants on 1000 random tournaments.
Verdict relaxed_invariants() {
  std::size_t runs = 0, failures = 0, witnesses = 0, dense = 0, recursion = 0, degenerate = 0;
  std::uint64_t seed = 0;
  for (std::size_t n : {256u, 1024u})
    for (std::size_t k : {4u, 8u})
      for (Rational lambda : {Rational(1, 4), Rational(1, 10)})
        for (int rep = 0; rep < 125; ++rep, ++seed) {
          Tournament t = random_tournament(n, seed);
          ConstantSchedule s = schedule_for(k, Mode::relaxed, lambda);
          ++runs;
          try {
            TransResult r = find_trans(t, s);
            bool ok = r.has_witness() ? check_pk_witness(t, *r.witness) : verify_trans_result(t, r);
            for (const auto& e : r.trace.recursion_pair_events) ok = ok && e.density.complete();
            for (const auto& e : r.trace.dense_pairs)
              ok = ok && e.density.at_least(1 - lambda) && e.x_size == e.m && e.y_size == e.m;
            witnesses += r.has_witness();
            dense += r.trace.dense_pairs.size();
            recursion += r.trace.recursion_pairs;
            degenerate += r.trace.degenerate_fallbacks;
            if (!ok) ++failures;
          } catch (const std::exception& e) {
            std::cerr << "AC2 seed " << seed << ": " << e.what() << '\n';
            ++failures;
          }
        }
  // Random hosts never reach the dense-pair or recursion exits, so the same
  // checks also run on structured hosts: transitive tournaments and family
  // members over P_4, which are P_5-free.
  std::size_t extra = 0;
  std::vector<Tournament> hosts = {Tournament::transitive(256), Tournament::transitive(1024),
                                   family({path_tournament(4), 4}), family({path_tournament(4), 5})};
  for (const Tournament& t : hosts)
    for (std::size_t k : {4u, 8u})
      for (Rational lambda : {Rational(1, 2), Rational(1, 4), Rational(1, 10)}) {
        ++extra;
        try {
          TransResult r = find_trans(t, schedule_for(k, Mode::relaxed, lambda));
          bool ok = r.has_witness() ? check_pk_witness(t, *r.witness) : verify_trans_result(t, r);
          for (const auto& e : r.trace.recursion_pair_events) ok = ok && e.density.complete();
          for (const auto& e : r.trace.dense_pairs)
            ok = ok && e.density.at_least(1 - lambda) && e.x_size == e.m && e.y_size == e.m;
          witnesses += r.has_witness();
          dense += r.trace.dense_pairs.size();
          recursion += r.trace.recursion_pairs;
          degenerate += r.trace.degenerate_fallbacks;
          if (!ok) ++failures;
        } catch (const std::exception& e) {
          std::cerr << "AC2 structured host: " << e.what() << '\n';
          ++failures;
        }
      }
  std::ostringstream os;
  os << runs << " random + " << extra << " structured runs, " << failures << " failures (witnesses " << witnesses
     << ", dense pairs " << dense << ", recursion pairs " << recursion << ", degenerate fallbacks " << degenerate
     << ")";
  return {failures == 0, os.str()};
}

// 3. Density lemma: d(X1, Y1) >= 1 - lambda/(c1 c2) with lambda = 1 - d(X, Y).
Verdict density_lemma() {
  std::mt19937_64 rng(2024);
  std::size_t violations = 0, adversarial = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::size_t xs = 2 + rng() % 40, ys = 2 + rng() % 40;
    const std::size_t noise = 1 + rng() % 8;  // reversal rate 1/(2^noise)
    Tournament t = Tournament::from_orientation(xs + ys, [&](Vertex a, Vertex b) {
      if (b < xs || a >= xs) return (rng() & 1) != 0;
      return (rng() >> (64 - noise)) != 0;
    });
    VertexSet x = VertexSet::range(0, static_cast<Vertex>(xs));
    VertexSet y = VertexSet::range(static_cast<Vertex>(xs), static_cast<Vertex>(xs + ys));
    Rational lambda = 1 - density(t, x, y).value();
    const std::size_t x1s = 1 + rng() % xs, y1s = 1 + rng() % ys;
    VertexSet x1, y1;
    if (i % 2 == 0) {
      x1 = support::random_subset(x, x1s, rng);
      y1 = support::random_subset(y, y1s, rng);
    } else {
      // the sparsest rows and columns
      ++adversarial;
      std::vector<std::size_t> xscore(xs), yscore(ys);
      BitMask ym = y.mask(t.size()), xm = x.mask(t.size());
      for (std::size_t a = 0; a < xs; ++a) xscore[a] = t.out_count(x[a], ym);
      for (std::size_t b = 0; b < ys; ++b) yscore[b] = t.in_count(y[b], xm);
      for (auto& s : xscore) s = xs + ys - s;
      for (auto& s : yscore) s = xs + ys - s;
      x1 = detail::top_m(x, xscore, x1s);
      y1 = detail::top_m(y, yscore, y1s);
    }
    Rational c1(x1.size(), xs), c2(y1.size(), ys);
    Rational d1(support::brute_edges(t, x1, y1), x1.size() * y1.size());
    if (d1 < 1 - lambda / (c1 * c2)) ++violations;
  }
  std::ostringstream os;
  os << "10000 instances (" << adversarial << " adversarial), " << violations << " violations";
  return {violations == 0, os.str()};
}

// 4. MakeSmooth on near-complete sequences with planted noise below lambda_k.
Verdict smoothing() {
  std::mt19937_64 rng(77);
  std::size_t failures = 0, removed_total = 0, invalid_inputs = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t k = i % 2 == 0 ? 4 : 8;
    const std::size_t denom = (i / 2) % 2 == 0 ? 8 : 16;
    // lambda_k = 4 lambda k^2 = 1/(denom k)
    ConstantSchedule s = schedule_for(k, Mode::relaxed, Rational(1, 4 * k * k * denom * k));
    const std::size_t size = 16 + rng() % 65;
    auto planted = support::planted_sequence(k, size, s.lambda_k, rng);
    AlphaSequence theta(planted.tournament, planted.elements);
    if (!check_alpha(theta, Rational(1, k), s.lambda_k).passed) {
      ++invalid_inputs;
      continue;
    }
    Trace trace;
    try {
      AlphaSequence out = make_smooth(k, theta, s, &trace);
      bool ok = check_smooth(out, 4 * Rational(k) * s.lambda_k).passed;
      for (std::size_t j = 0; j < k; ++j) ok = ok && 2 * out[j].size() >= theta[j].size();
      if (!ok) ++failures;
      removed_total += trace.smoothing_removed;
    } catch (const std::exception& e) {
      std::cerr << "AC4 instance " << i << ": " << e.what() << '\n';
      ++failures;
    }
  }
  std::ostringstream os;
  os << "1000 instances, " << failures << " failures, " << invalid_inputs << " invalid inputs, " << removed_total
     << " vertices removed in total";
  return {failures == 0 && invalid_inputs == 0, os.str()};
}

// 5. Oracle cross-checks on 200 small random tournaments.
Verdict oracle_cross_checks() {
  std::size_t violations = 0, color_checks = 0, size_checks = 0, witnesses = 0;
  double ratio_sum = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 3 + seed % 13;
    Tournament t = random_tournament(n, 5000 + seed);
    const std::size_t chi = dichromatic_exact(t).count;
    const std::size_t tr = n <= 12 ? max_transitive_exact(t).size() : 0;
    for (std::size_t k : {4u, 8u})
      for (Mode mode : {Mode::strict, Mode::relaxed}) {
        ConstantSchedule s = schedule_for(k, mode);
        try {
          Coloring c = acyclic_coloring(t, s);
          ++color_checks;
          ratio_sum += static_cast<double>(c.count()) / static_cast<double>(chi);
          if (!verify_coloring(t, c) || c.count() < chi) ++violations;
        } catch (const PatternFound& e) {
          ++witnesses;
          if (!check_pk_witness(t, e.witness())) ++violations;
        }
        if (n <= 12) {
          TransResult r = find_trans(t, s);
          if (!r.has_witness()) {
            ++size_checks;
            if (r.vertices.size() > tr) ++violations;
          }
        }
      }
  }
  std::ostringstream os;
  os << color_checks << " colouring checks (mean classes/chi " << ratio_sum / static_cast<double>(color_checks)
     << "), " << size_checks << " size checks, " << witnesses << " witnesses, " << violations << " violations";
  return {violations == 0, os.str()};
}

// 6. The product family at desk scale.
Verdict family_checks() {
  auto start = std::chrono::steady_clock::now();
  Tournament b = path_tournament(4);
  Tournament f2 = family({b, 2});
  bool p5_free = !find_pk_exhaustive(f2, 5).has_value();
  std::size_t tr_b = max_transitive_exact(b).size();
  std::size_t tr_f2 = max_transitive_exact(f2).size();
  Tournament c3 = build_tournament(3, {{0, 1}, {1, 2}, {2, 0}});
  std::size_t tr_c3c3 = max_transitive_exact(substitution_product(c3, c3)).size();
  double secs = seconds_since(start);
  std::ostringstream os;
  os << "F_2 " << f2.size() << " vertices, P_5-free " << (p5_free ? "yes" : "no") << ", tr(F_2) " << tr_f2
     << ", tr(B)^2 " << tr_b * tr_b << ", tr(C3xC3) " << tr_c3c3 << ", " << secs << " s";
  return {f2.size() == 16 && p5_free && tr_f2 == 9 && tr_b * tr_b == 9 && tr_c3c3 == 4 && secs < 10, os.str()};
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

// 7. Doubling ratios of median find_trans time, via the bench command.
Verdict scaling() {
  auto start = std::chrono::steady_clock::now();
  std::istringstream in;
  std::ostringstream out, err;
  int code = cli::run({"bench", "--k", "8", "--sizes", "1024,2048,4096,8192", "--seeds", "5", "--mode", "relaxed",
                       "--min-ms", "50"},
                      in, out, err);
  if (code != 0) return {false, "bench exited " + std::to_string(code) + ": " + err.str()};
  std::map<std::size_t, std::vector<double>> times;
  std::istringstream csv(out.str());
  std::string line;
  std::getline(csv, line);
  while (std::getline(csv, line)) {
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    times[std::stoul(f[0])].push_back(std::stod(f[3]));
  }
  std::ostringstream os;
  os << "median ms";
  bool ok = times.size() == 4;
  double prev = 0, worst = 0;
  for (const auto& [n, ts] : times) {
    double med = median(ts);
    os << ' ' << n << ':' << med;
    if (prev > 0) worst = std::max(worst, med / prev);
    prev = med;
  }
  double secs = seconds_since(start);
  os << "; worst doubling ratio " << worst << ", " << secs << " s";
  return {ok && worst <= 5.0 && secs < 600, os.str()};
}

// 8. Colouring class counts on random tournaments; the exponent is reported only.
Verdict coloring_recurrence() {
  std::vector<double> xs, ys;
  bool ok = true;
  std::ostringstream os;
  for (std::size_t n : {512u, 1024u, 2048u, 4096u}) {
    Tournament t = random_tournament(n, n);
    ConstantSchedule s = schedule_for(8, Mode::relaxed);
    Trace trace;
    try {
      Coloring c = acyclic_coloring(t, s, &trace);
      std::size_t largest = 0;
      for (const auto& cls : c.classes) largest = std::max(largest, cls.size());
      bool valid = verify_coloring(t, c) && c.count() <= n && (largest < 2 || c.count() < n);
      ok = ok && valid;
      os << "n=" << n << " classes " << c.count() << (valid ? "" : " (INVALID)") << "; ";
      xs.push_back(std::log(static_cast<double>(n)));
      ys.push_back(std::log(static_cast<double>(c.count())));
    } catch (const PatternFound& e) {
      ok = false;
      os << "n=" << n << " witness found (" << (check_pk_witness(t, e.witness()) ? "verified" : "UNVERIFIED")
         << "), no colouring; ";
    }
  }
  if (xs.size() >= 2) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(ys.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) num += (xs[i] - mx) * (ys[i] - my), den += (xs[i] - mx) * (xs[i] - mx);
    os << "fitted exponent " << num / den;
  }
  return {ok, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"AC1 exhaustive n<=5", exhaustive_small},
      {"AC2 relaxed invariants", relaxed_invariants},
      {"AC3 density lemma", density_lemma},
      {"AC4 smoothing", smoothing},
      {"AC5 oracle cross-checks", oracle_cross_checks},
      {"AC6 product family", family_checks},
      {"AC7 quadratic scaling", scaling},
      {"AC8 colouring recurrence", coloring_recurrence},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail << std::endl;
    failed += !v.pass;
  }
  return failed == 0 ? 0 : 1;
}
