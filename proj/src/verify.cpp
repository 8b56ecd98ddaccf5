// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subjaccard/verify.hpp"

#include <random>
#include <thread>
#include <utility>
#include <vector>

#include "subjaccard/errors.hpp"
#include "subjaccard/jaccard.hpp"

namespace subjaccard {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::sampled_no_violation:
      return "sampled_no_violation";
  }
  throw Error("unreachable verdict");
}

const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::triangle:
      return "triangle";
    case ViolationKind::lemma1:
      return "lemma1";
    case ViolationKind::corollary1:
      return "corollary1";
    case ViolationKind::ordering:
      return "ordering";
    case ViolationKind::property:
      return "property";
  }
  throw Error("unreachable violation kind");
}

const char* to_string(DistanceKind kind) {
  return kind == DistanceKind::cap ? "cap" : "delta";
}

DistanceKind distance_kind_from_name(const std::string& name) {
  if (name == "cap") return DistanceKind::cap;
  if (name == "delta") return DistanceKind::delta;
  throw ParseError("unknown distance kind: '" + name + "'");
}

namespace {

// Per-worker accumulator for exhaustive scans. Workers own contiguous
// ascending ranges of the outer loop variable, so concatenating shards in
// worker order reproduces the sequential scan order exactly.
struct Shard {
  std::uint64_t checked = 0;
  bool any_violation = false;
  std::vector<ViolationRecord> violations;
  std::uint64_t zero_count = 0;
  std::vector<std::pair<SubsetMask, SubsetMask>> zero_pairs;
};

struct Ctx {
  const SetFunctionSpec* spec = nullptr;
  GroundSetPtr ground;
  int n = 0;
  std::uint64_t size = 0;
  double eps = caps::kDefaultEpsilon;
  bool approx = false;
  // Materialized values when the ground set fits the materialization cap;
  // larger (sampled-only) runs fall back to per-mask evaluation.
  std::vector<Value> f;

  Value fval(std::uint64_t m) const {
    return f.empty() ? spec->evaluate_mask(m) : f[m];
  }

  Value dist(DistanceKind kind, std::uint64_t a, std::uint64_t b) const {
    if (kind == DistanceKind::cap) {
      return cap_distance_values(fval(a & b), fval(a | b), eps);
    }
    return delta_distance_values(fval(a ^ b), fval(0), fval(a | b), eps);
  }

  SubsetMask mask(std::uint64_t m) const { return SubsetMask(ground, m); }

  Value zero() const { return approx ? Value::approx(0.0) : Value::exact(0L); }
  Value one() const { return approx ? Value::approx(1.0) : Value::exact(1L); }
};

Ctx make_ctx(const SetFunctionSpec& spec, const VerifyOptions& options) {
  Ctx ctx;
  ctx.spec = &spec;
  ctx.ground = spec.ground();
  ctx.n = spec.ground()->size();
  ctx.size = ctx.n >= 64 ? 0 : (std::uint64_t{1} << ctx.n);
  ctx.eps = options.epsilon;
  ctx.approx = spec.is_approx();
  if (ctx.n <= caps::kMaterialize) ctx.f = materialized_values(spec);
  return ctx;
}

void require_cap(int n, int cap, const char* op) {
  if (n > cap) {
    throw CapExceeded(std::string(op) + " capped at n=" + std::to_string(cap) +
                      ", got n=" + std::to_string(n));
  }
}

void require_triple_cap(const SetFunctionSpec& spec, const char* op) {
  require_cap(spec.ground()->size(),
              spec.is_approx() ? caps::kExhaustiveTriplesApprox
                               : caps::kExhaustiveTriplesExact,
              op);
}

void require_pair_cap(const SetFunctionSpec& spec, const char* op) {
  require_cap(spec.ground()->size(),
              spec.is_approx() ? caps::kExhaustivePairsApprox
                               : caps::kExhaustivePairsExact,
              op);
}

void require_prereqs(const SetFunctionSpec& spec, double epsilon,
                     bool need_submodular) {
  std::vector<std::string> failed;
  if (is_nonnegative(spec, epsilon).failed()) failed.push_back("nonnegative");
  if (is_monotone(spec, epsilon).failed()) failed.push_back("monotone");
  if (need_submodular && is_submodular_pairwise(spec, epsilon).failed()) {
    failed.push_back("submodular");
  }
  if (!failed.empty()) throw PrereqFailed(std::move(failed));
}

void record(Shard& shard, ViolationKind kind, std::vector<SubsetMask> witness,
            Value lhs, Value rhs) {
  shard.any_violation = true;
  if (static_cast<int>(shard.violations.size()) < caps::kMaxWitnesses) {
    Value margin = lhs - rhs;
    shard.violations.push_back(ViolationRecord{
        kind, std::move(witness), std::move(lhs), std::move(rhs),
        std::move(margin)});
  }
}

// Runs body(a, shard) for a = 0 .. outer-1, split into contiguous ranges
// across workers. The merged result is identical to a sequential run.
template <typename Body>
Shard run_partitioned(std::uint64_t outer, unsigned workers_opt,
                      const Body& body) {
  unsigned hw = std::thread::hardware_concurrency();
  unsigned workers = workers_opt != 0 ? workers_opt : (hw != 0 ? hw : 1);
  if (workers > outer) workers = static_cast<unsigned>(outer);
  if (workers <= 1 || outer < 64) {
    Shard shard;
    for (std::uint64_t a = 0; a < outer; ++a) body(a, shard);
    return shard;
  }

  std::vector<Shard> shards(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      std::uint64_t begin = outer * w / workers;
      std::uint64_t end = outer * (w + 1) / workers;
      for (std::uint64_t a = begin; a < end; ++a) body(a, shards[w]);
    });
  }
  for (std::thread& t : threads) t.join();

  Shard merged;
  for (Shard& shard : shards) {
    merged.checked += shard.checked;
    merged.any_violation = merged.any_violation || shard.any_violation;
    for (ViolationRecord& v : shard.violations) {
      if (static_cast<int>(merged.violations.size()) < caps::kMaxWitnesses) {
        merged.violations.push_back(std::move(v));
      }
    }
    merged.zero_count += shard.zero_count;
    for (auto& p : shard.zero_pairs) {
      if (static_cast<int>(merged.zero_pairs.size()) < caps::kMaxWitnesses) {
        merged.zero_pairs.push_back(std::move(p));
      }
    }
  }
  return merged;
}

PropertyReport to_report(Shard&& merged) {
  PropertyReport report;
  report.checked = merged.checked;
  report.verdict = merged.any_violation ? Verdict::fails : Verdict::holds;
  report.violations = std::move(merged.violations);
  report.zero_distance_pair_count = merged.zero_count;
  report.zero_distance_pairs = std::move(merged.zero_pairs);
  return report;
}

// Full (not mirrored) matrix of pairwise distances, indexed a * size + b.
// Symmetric entries are computed independently so that the metric
// symmetry check actually exercises both evaluations.
std::vector<Value> pair_matrix(const Ctx& ctx, DistanceKind kind) {
  std::vector<Value> d(static_cast<std::size_t>(ctx.size) *
                       static_cast<std::size_t>(ctx.size));
  for (std::uint64_t a = 0; a < ctx.size; ++a) {
    for (std::uint64_t b = 0; b < ctx.size; ++b) {
      d[a * ctx.size + b] = ctx.dist(kind, a, b);
    }
  }
  return d;
}

}  // namespace

PropertyReport check_triangle(const SetFunctionSpec& f, DistanceKind kind,
                              const VerifyOptions& options) {
  require_triple_cap(f, "exhaustive triangle check");
  require_prereqs(f, options.epsilon, /*need_submodular=*/false);
  Ctx ctx = make_ctx(f, options);
  const std::vector<Value> d = pair_matrix(ctx, kind);
  const std::uint64_t size = ctx.size;
  const double eps = ctx.eps;

  Shard merged = run_partitioned(
      size, options.workers, [&](std::uint64_t a, Shard& shard) {
        for (std::uint64_t b = 0; b < size; ++b) {
          const Value& dab = d[a * size + b];
          for (std::uint64_t c = 0; c < size; ++c) {
            ++shard.checked;
            Value rhs = d[a * size + c] + d[c * size + b];
            if (!dab.leq(rhs, eps)) {
              record(shard, ViolationKind::triangle,
                     {ctx.mask(a), ctx.mask(b), ctx.mask(c)}, dab,
                     std::move(rhs));
            }
          }
        }
      });
  return to_report(std::move(merged));
}

PropertyReport check_lemma1(const SetFunctionSpec& f,
                            const VerifyOptions& options) {
  require_triple_cap(f, "exhaustive three-set product check");
  require_prereqs(f, options.epsilon, /*need_submodular=*/true);
  Ctx ctx = make_ctx(f, options);
  const std::vector<Value>& fv = ctx.f;
  const std::uint64_t size = ctx.size;
  const double eps = ctx.eps;

  Shard merged = run_partitioned(
      size, options.workers, [&](std::uint64_t a, Shard& shard) {
        for (std::uint64_t b = 0; b < size; ++b) {
          Value fab = fv[a] + fv[b];
          for (std::uint64_t c = 0; c < size; ++c) {
            ++shard.checked;
            Value lhs = fv[a & c] * fv[b | c] + fv[a | c] * fv[b & c];
            Value rhs = fv[c] * fab;
            if (!lhs.leq(rhs, eps)) {
              record(shard, ViolationKind::lemma1,
                     {ctx.mask(a), ctx.mask(b), ctx.mask(c)}, std::move(lhs),
                     std::move(rhs));
            }
          }
        }
      });
  return to_report(std::move(merged));
}

PropertyReport check_corollary1(const SetFunctionSpec& f,
                                const VerifyOptions& options) {
  require_pair_cap(f, "exhaustive two-set product check");
  require_prereqs(f, options.epsilon, /*need_submodular=*/true);
  Ctx ctx = make_ctx(f, options);
  const std::vector<Value>& fv = ctx.f;
  const std::uint64_t size = ctx.size;
  const double eps = ctx.eps;

  Shard merged = run_partitioned(
      size, options.workers, [&](std::uint64_t s, Shard& shard) {
        for (std::uint64_t t = 0; t < size; ++t) {
          ++shard.checked;
          Value lhs = fv[s & t] * fv[s | t];
          Value rhs = fv[s] * fv[t];
          if (!lhs.leq(rhs, eps)) {
            record(shard, ViolationKind::corollary1,
                   {ctx.mask(s), ctx.mask(t)}, std::move(lhs), std::move(rhs));
          }
        }
      });
  return to_report(std::move(merged));
}

PropertyReport check_ordering(const SetFunctionSpec& f,
                              const VerifyOptions& options) {
  require_pair_cap(f, "exhaustive distance-ordering check");
  require_prereqs(f, options.epsilon, /*need_submodular=*/true);
  const bool modular = !is_modular(f, options.epsilon).failed();
  Ctx ctx = make_ctx(f, options);
  const std::uint64_t size = ctx.size;
  const double eps = ctx.eps;

  Shard merged = run_partitioned(
      size, options.workers, [&](std::uint64_t a, Shard& shard) {
        for (std::uint64_t b = 0; b < size; ++b) {
          ++shard.checked;
          Value cap = ctx.dist(DistanceKind::cap, a, b);
          Value delta = ctx.dist(DistanceKind::delta, a, b);
          if (cap.is_negative(eps)) {
            record(shard, ViolationKind::ordering, {ctx.mask(a), ctx.mask(b)},
                   ctx.zero(), cap);
          }
          if (!cap.leq(delta, eps)) {
            record(shard, ViolationKind::ordering, {ctx.mask(a), ctx.mask(b)},
                   cap, delta);
          }
          if (!delta.leq(ctx.one(), eps)) {
            record(shard, ViolationKind::ordering, {ctx.mask(a), ctx.mask(b)},
                   delta, ctx.one());
          }
          if (modular && !cap.eq(delta, eps)) {
            bool cap_high = delta < cap;
            record(shard, ViolationKind::ordering, {ctx.mask(a), ctx.mask(b)},
                   cap_high ? cap : delta, cap_high ? delta : cap);
          }
        }
      });
  return to_report(std::move(merged));
}

PropertyReport check_metric_axioms(const SetFunctionSpec& f, DistanceKind kind,
                                   const VerifyOptions& options) {
  require_triple_cap(f, "exhaustive metric-axiom check");
  require_prereqs(f, options.epsilon, /*need_submodular=*/false);
  Ctx ctx = make_ctx(f, options);
  const std::vector<Value> d = pair_matrix(ctx, kind);
  const std::uint64_t size = ctx.size;
  const double eps = ctx.eps;

  // Identity, nonnegativity, symmetry, and zero-distance information are
  // cheap; scan them sequentially before the parallel triangle phase.
  Shard head;
  for (std::uint64_t a = 0; a < size; ++a) {
    ++head.checked;
    const Value& daa = d[a * size + a];
    if (!daa.eq(ctx.zero(), eps)) {
      bool positive = ctx.zero() < daa;
      record(head, ViolationKind::property, {ctx.mask(a), ctx.mask(a)},
             positive ? daa : ctx.zero(), positive ? ctx.zero() : daa);
    }
  }
  for (std::uint64_t a = 0; a < size; ++a) {
    for (std::uint64_t b = a + 1; b < size; ++b) {
      ++head.checked;
      const Value& dab = d[a * size + b];
      const Value& dba = d[b * size + a];
      if (dab.is_negative(eps)) {
        record(head, ViolationKind::property, {ctx.mask(a), ctx.mask(b)},
               ctx.zero(), dab);
      }
      if (!dab.eq(dba, eps)) {
        bool ab_high = dba < dab;
        record(head, ViolationKind::property, {ctx.mask(a), ctx.mask(b)},
               ab_high ? dab : dba, ab_high ? dba : dab);
      }
      if (dab.is_zero(eps)) {
        ++head.zero_count;
        if (static_cast<int>(head.zero_pairs.size()) < caps::kMaxWitnesses) {
          head.zero_pairs.emplace_back(ctx.mask(a), ctx.mask(b));
        }
      }
    }
  }

  Shard triangles = run_partitioned(
      size, options.workers, [&](std::uint64_t a, Shard& shard) {
        for (std::uint64_t b = 0; b < size; ++b) {
          const Value& dab = d[a * size + b];
          for (std::uint64_t c = 0; c < size; ++c) {
            ++shard.checked;
            Value rhs = d[a * size + c] + d[c * size + b];
            if (!dab.leq(rhs, eps)) {
              record(shard, ViolationKind::triangle,
                     {ctx.mask(a), ctx.mask(b), ctx.mask(c)}, dab,
                     std::move(rhs));
            }
          }
        }
      });

  head.checked += triangles.checked;
  head.any_violation = head.any_violation || triangles.any_violation;
  for (ViolationRecord& v : triangles.violations) {
    if (static_cast<int>(head.violations.size()) < caps::kMaxWitnesses) {
      head.violations.push_back(std::move(v));
    }
  }
  return to_report(std::move(head));
}

std::optional<ViolationRecord> find_cap_counterexample(
    const SetFunctionSpec& f, const VerifyOptions& options) {
  require_pair_cap(f, "counterexample search");
  require_prereqs(f, options.epsilon, /*need_submodular=*/true);
  Ctx ctx = make_ctx(f, options);
  const std::vector<Value>& fv = ctx.f;
  const std::uint64_t size = ctx.size;
  const double eps = ctx.eps;

  // Lexicographically first (A,B) with A, B nonempty, incomparable, and
  //   f(A) = f(B) = f(A|B) > f(A&B) >= 0.
  // Such a pair breaks the triangle inequality of the cap distance through
  // C = A|B: the left side is positive while both right-side legs vanish.
  for (std::uint64_t a = 1; a < size; ++a) {
    for (std::uint64_t b = 1; b < size; ++b) {
      std::uint64_t inter = a & b;
      if (inter == a || inter == b) continue;  // comparable (or equal)
      std::uint64_t uni = a | b;
      if (!fv[a].eq(fv[uni], eps) || !fv[b].eq(fv[uni], eps)) continue;
      if (fv[uni].leq(fv[inter], eps)) continue;  // need f(A|B) > f(A&B)

      Value lhs = ctx.dist(DistanceKind::cap, a, b);
      Value rhs = ctx.dist(DistanceKind::cap, a, uni) +
                  ctx.dist(DistanceKind::cap, uni, b);
      if (lhs.leq(rhs, eps)) continue;  // tolerance ate the margin
      Value margin = lhs - rhs;
      return ViolationRecord{ViolationKind::triangle,
                             {ctx.mask(a), ctx.mask(b), ctx.mask(uni)},
                             std::move(lhs),
                             std::move(rhs),
                             std::move(margin)};
    }
  }
  return std::nullopt;
}

namespace {

// Guarded distance for sampled runs (no prerequisite scan has vetted the
// oracle): evidence of a broken assumption becomes a property-kind
// violation instead of a PropertyViolation exception.
std::optional<Value> guarded_dist(const Ctx& ctx, DistanceKind kind,
                                  std::uint64_t a, std::uint64_t b,
                                  std::optional<ViolationRecord>& evidence) {
  const double eps = ctx.eps;
  auto negative = [&](const Value& v, std::uint64_t m) {
    if (!v.is_negative(eps)) return false;
    evidence = ViolationRecord{ViolationKind::property,
                               {ctx.mask(m)},
                               ctx.zero(),
                               v,
                               ctx.zero() - v};
    return true;
  };

  if (kind == DistanceKind::cap) {
    Value fi = ctx.fval(a & b);
    Value fu = ctx.fval(a | b);
    if (negative(fi, a & b) || negative(fu, a | b)) return std::nullopt;
    if (!fi.leq(fu, eps)) {
      evidence = ViolationRecord{ViolationKind::property,
                                 {ctx.mask(a & b), ctx.mask(a | b)},
                                 fi,
                                 fu,
                                 fi - fu};
      return std::nullopt;
    }
    if (fu.is_zero(eps)) return ctx.zero();
    return (fu - fi) / fu;
  }

  Value fs = ctx.fval(a ^ b);
  Value f0 = ctx.fval(0);
  Value fu = ctx.fval(a | b);
  if (negative(fs, a ^ b) || negative(f0, 0) || negative(fu, a | b)) {
    return std::nullopt;
  }
  if (!f0.leq(fs, eps)) {
    evidence = ViolationRecord{ViolationKind::property,
                               {ctx.mask(0), ctx.mask(a ^ b)},
                               f0,
                               fs,
                               f0 - fs};
    return std::nullopt;
  }
  if (fu.is_zero(eps)) return ctx.zero();
  return (fs - f0) / fu;
}

}  // namespace

PropertyReport sampled_check(const SetFunctionSpec& f, SampledProperty what,
                             std::uint64_t samples, std::uint64_t seed,
                             const VerifyOptions& options) {
  require_cap(f.ground()->size(), caps::kEnumerate, "sampled check");
  Ctx ctx = make_ctx(f, options);
  const double eps = ctx.eps;
  const std::uint64_t full = ctx.ground->full_mask();

  // The draw sequence is part of the contract: masks come from successive
  // mt19937_64 outputs masked to the ground set, two per sample for pair
  // properties and three per sample for triple properties, so equal seeds
  // give bit-identical reports.
  std::mt19937_64 rng(seed);
  auto draw = [&rng, full] { return rng() & full; };

  Shard shard;
  auto note = [&shard](std::optional<ViolationRecord>& evidence) {
    shard.any_violation = true;
    if (static_cast<int>(shard.violations.size()) < caps::kMaxWitnesses) {
      shard.violations.push_back(std::move(*evidence));
    }
    evidence.reset();
  };

  for (std::uint64_t s = 0; s < samples; ++s) {
    ++shard.checked;
    std::optional<ViolationRecord> evidence;

    switch (what) {
      case SampledProperty::triangle_cap:
      case SampledProperty::triangle_delta: {
        DistanceKind kind = what == SampledProperty::triangle_cap
                                ? DistanceKind::cap
                                : DistanceKind::delta;
        std::uint64_t a = draw(), b = draw(), c = draw();
        auto dab = guarded_dist(ctx, kind, a, b, evidence);
        if (evidence) { note(evidence); break; }
        auto dac = guarded_dist(ctx, kind, a, c, evidence);
        if (evidence) { note(evidence); break; }
        auto dcb = guarded_dist(ctx, kind, c, b, evidence);
        if (evidence) { note(evidence); break; }
        Value rhs = *dac + *dcb;
        if (!dab->leq(rhs, eps)) {
          record(shard, ViolationKind::triangle,
                 {ctx.mask(a), ctx.mask(b), ctx.mask(c)}, *dab,
                 std::move(rhs));
        }
        break;
      }

      case SampledProperty::lemma1: {
        std::uint64_t a = draw(), b = draw(), c = draw();
        Value lhs = ctx.fval(a & c) * ctx.fval(b | c) +
                    ctx.fval(a | c) * ctx.fval(b & c);
        Value rhs = ctx.fval(c) * (ctx.fval(a) + ctx.fval(b));
        if (!lhs.leq(rhs, eps)) {
          record(shard, ViolationKind::lemma1,
                 {ctx.mask(a), ctx.mask(b), ctx.mask(c)}, std::move(lhs),
                 std::move(rhs));
        }
        break;
      }

      case SampledProperty::corollary1: {
        std::uint64_t a = draw(), b = draw();
        Value lhs = ctx.fval(a & b) * ctx.fval(a | b);
        Value rhs = ctx.fval(a) * ctx.fval(b);
        if (!lhs.leq(rhs, eps)) {
          record(shard, ViolationKind::corollary1, {ctx.mask(a), ctx.mask(b)},
                 std::move(lhs), std::move(rhs));
        }
        break;
      }

      case SampledProperty::ordering: {
        // The modular cap == delta clause of the exhaustive check needs a
        // whole-function modularity verdict and has no per-sample analog;
        // sampling covers the chain 0 <= cap <= delta <= 1.
        std::uint64_t a = draw(), b = draw();
        auto cap = guarded_dist(ctx, DistanceKind::cap, a, b, evidence);
        if (evidence) { note(evidence); break; }
        auto delta = guarded_dist(ctx, DistanceKind::delta, a, b, evidence);
        if (evidence) { note(evidence); break; }
        if (cap->is_negative(eps)) {
          record(shard, ViolationKind::ordering, {ctx.mask(a), ctx.mask(b)},
                 ctx.zero(), *cap);
        }
        if (!cap->leq(*delta, eps)) {
          record(shard, ViolationKind::ordering, {ctx.mask(a), ctx.mask(b)},
                 *cap, *delta);
        }
        if (!delta->leq(ctx.one(), eps)) {
          record(shard, ViolationKind::ordering, {ctx.mask(a), ctx.mask(b)},
                 *delta, ctx.one());
        }
        break;
      }

      case SampledProperty::metric_cap:
      case SampledProperty::metric_delta: {
        DistanceKind kind = what == SampledProperty::metric_cap
                                ? DistanceKind::cap
                                : DistanceKind::delta;
        std::uint64_t a = draw(), b = draw(), c = draw();
        auto daa = guarded_dist(ctx, kind, a, a, evidence);
        if (evidence) { note(evidence); break; }
        if (!daa->eq(ctx.zero(), eps)) {
          bool positive = ctx.zero() < *daa;
          record(shard, ViolationKind::property, {ctx.mask(a), ctx.mask(a)},
                 positive ? *daa : ctx.zero(), positive ? ctx.zero() : *daa);
        }
        auto dab = guarded_dist(ctx, kind, a, b, evidence);
        if (evidence) { note(evidence); break; }
        auto dba = guarded_dist(ctx, kind, b, a, evidence);
        if (evidence) { note(evidence); break; }
        if (dab->is_negative(eps)) {
          record(shard, ViolationKind::property, {ctx.mask(a), ctx.mask(b)},
                 ctx.zero(), *dab);
        }
        if (!dab->eq(*dba, eps)) {
          bool ab_high = *dba < *dab;
          record(shard, ViolationKind::property, {ctx.mask(a), ctx.mask(b)},
                 ab_high ? *dab : *dba, ab_high ? *dba : *dab);
        }
        if (a != b && dab->is_zero(eps)) {
          ++shard.zero_count;
          if (static_cast<int>(shard.zero_pairs.size()) < caps::kMaxWitnesses) {
            shard.zero_pairs.emplace_back(ctx.mask(a), ctx.mask(b));
          }
        }
        auto dac = guarded_dist(ctx, kind, a, c, evidence);
        if (evidence) { note(evidence); break; }
        auto dcb = guarded_dist(ctx, kind, c, b, evidence);
        if (evidence) { note(evidence); break; }
        Value rhs = *dac + *dcb;
        if (!dab->leq(rhs, eps)) {
          record(shard, ViolationKind::triangle,
                 {ctx.mask(a), ctx.mask(b), ctx.mask(c)}, *dab,
                 std::move(rhs));
        }
        break;
      }
    }
  }

  const bool violated = shard.any_violation;
  PropertyReport report = to_report(std::move(shard));
  report.verdict = violated ? Verdict::fails : Verdict::sampled_no_violation;
  report.seed = seed;
  return report;
}

}  // namespace subjaccard
