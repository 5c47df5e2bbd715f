#include "galign/align.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

#include "galign/errors.hpp"

namespace galign {

namespace {

struct Moments {
  double w = 0.0;
  Vec3 su{};
  Vec3 sv{};
  Mat3 svu{};  // sum w v u^T

  void merge(const Moments& o) {
    w += o.w;
    su += o.su;
    sv += o.sv;
    svu += o.svu;
  }
};

Moments accumulate(const std::vector<WeightedPair>& pairs, std::size_t begin, std::size_t end) {
  Moments m;
  for (std::size_t i = begin; i < end; ++i) {
    const WeightedPair& p = pairs[i];
    if (!(p.w > 0.0)) throw NonPositiveWeight("point pair weight must be positive");
    m.w += p.w;
    m.su += p.w * p.u;
    m.sv += p.w * p.v;
    m.svu += outer(p.v, p.u) * p.w;
  }
  return m;
}

int resolve_threads(int requested, std::size_t n_chunks) {
  long n = requested > 0 ? requested : static_cast<long>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("GA_ALIGN_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0 && cap < n) n = cap;
  }
  if (static_cast<std::size_t>(n) > n_chunks) n = static_cast<long>(n_chunks);
  return static_cast<int>(n);
}

}  // namespace

Summary summarize(const AlignmentProblem& problem, const SummarizeOptions& options) {
  if (problem.pairs.empty() && problem.priors.empty())
    throw EmptyProblem("problem has neither point pairs nor rotor measurements");

  Summary out;
  out.n_pairs = problem.pairs.size();
  out.n_priors = problem.priors.size();

  if (!problem.pairs.empty()) {
    const std::size_t chunk = options.chunk > 0 ? options.chunk : SummarizeOptions{}.chunk;
    const std::size_t n_chunks = (problem.pairs.size() + chunk - 1) / chunk;
    std::vector<Moments> partial(n_chunks);
    std::vector<std::exception_ptr> failed(n_chunks);

    auto run = [&](std::size_t c) {
      try {
        partial[c] =
            accumulate(problem.pairs, c * chunk, std::min(problem.pairs.size(), (c + 1) * chunk));
      } catch (...) {
        failed[c] = std::current_exception();
      }
    };

    const int n_threads = resolve_threads(options.threads, n_chunks);
    if (n_threads == 1) {
      for (std::size_t c = 0; c < n_chunks; ++c) run(c);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(n_threads));
      for (int t = 0; t < n_threads; ++t)
        pool.emplace_back([&run, t, n_threads, n_chunks] {
          for (std::size_t c = static_cast<std::size_t>(t); c < n_chunks;
               c += static_cast<std::size_t>(n_threads))
            run(c);
        });
      for (std::thread& th : pool) th.join();
    }
    for (std::size_t c = 0; c < n_chunks; ++c)
      if (failed[c]) std::rethrow_exception(failed[c]);

    // Fixed pairwise tree over chunk indices, independent of thread count.
    for (std::size_t step = 1; step < n_chunks; step *= 2)
      for (std::size_t i = 0; i + step < n_chunks; i += 2 * step)
        partial[i].merge(partial[i + step]);

    const Moments& m = partial[0];
    out.w_total = m.w;
    out.u_bar = m.su / m.w;
    out.v_bar = m.sv / m.w;
    out.z = m.svu - outer(m.sv, m.su) * (1.0 / m.w);
  }

  for (const RotorMeasurement& rm : problem.priors) {
    if (!(rm.w > 0.0)) throw NonPositiveWeight("rotor measurement weight must be positive");
    const ga::EvenMultivector sr = ga::reverse(rm.s.even());
    const ga::EvenMultivector sq = ga::even_product(sr, sr);
    out.g += rm.w * sq.scalar;
    out.h -= rm.w * sq.bivec;
  }
  return out;
}

eig::Sym4 build_k(const Summary& s) {
  const Mat3& z = s.z;
  const double trz = z.trace();
  const Vec3 x{z(2, 1) - z(1, 2), z(0, 2) - z(2, 0), z(1, 0) - z(0, 1)};
  const Vec3 xh = x + s.h;

  std::array<double, 16> k{};
  k[0] = trz + s.g;
  for (int j = 0; j < 3; ++j) {
    k[static_cast<std::size_t>(1 + j)] = xh[j];
    k[static_cast<std::size_t>(4 * (j + 1))] = xh[j];
  }
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      double v = z(r, c) + z(c, r);
      if (r == c) v -= trz + s.g;
      k[static_cast<std::size_t>(4 * (r + 1) + c + 1)] = v;
    }
  return eig::Sym4(k);
}

eig::Sym4 build_k_ga(const AlignmentProblem& problem) {
  if (problem.pairs.empty()) throw EmptyProblem("columnwise construction needs point pairs");
  const Summary s = summarize(problem);

  const std::array<ga::Multivector, 3> unit_bivector = {
      ga::Multivector::bivector({1.0, 0.0, 0.0}),   // e2e3
      ga::Multivector::bivector({0.0, 1.0, 0.0}),   // e3e1
      ga::Multivector::bivector({0.0, 0.0, 1.0})};  // e1e2

  // e[j] accumulates the even multivector x_j - I y_j.
  std::array<ga::Multivector, 4> e{};
  for (const WeightedPair& p : problem.pairs) {
    const ga::Multivector mv = ga::Multivector::vector(p.v - s.v_bar);
    const ga::Multivector mu = ga::Multivector::vector(p.u - s.u_bar);
    e[0] += (mv * mu) * p.w;
    for (int j = 0; j < 3; ++j) e[static_cast<std::size_t>(j + 1)] += (mv * unit_bivector[static_cast<std::size_t>(j)] * mu) * -p.w;
  }

  std::array<double, 16> k{};
  for (int j = 0; j < 4; ++j) {
    const ga::Multivector& ej = e[static_cast<std::size_t>(j)];
    const Vec3 yj = -ej.bivector_part();
    k[static_cast<std::size_t>(j)] = ej.scalar_coeff();
    for (int i = 0; i < 3; ++i) k[static_cast<std::size_t>(4 * (i + 1) + j)] = yj[i];
  }

  k[0] += s.g;
  for (int j = 0; j < 3; ++j) {
    k[static_cast<std::size_t>(1 + j)] += s.h[j];
    k[static_cast<std::size_t>(4 * (j + 1))] += s.h[j];
    k[static_cast<std::size_t>(5 * (j + 1))] -= s.g;
  }
  return eig::Sym4(k);
}

RotationSolution solve_rotation(const eig::Sym4& k) {
  const eig::MaxEigenpair top = eig::max_eigenpair(k);
  return {ga::Rotor(top.vector[0], {top.vector[1], top.vector[2], top.vector[3]}), top.value,
          top.gap};
}

Vec3 solve_translation(const ga::Rotor& rotor, const Summary& s) {
  if (s.n_pairs == 0) throw NoPointData("translation is undefined without point pairs");
  return s.v_bar - ga::rotate(rotor.reversed(), s.u_bar);
}

PriorOnlySolution solve_prior_only(double g, const Vec3& h) {
  const double hn = norm(h);
  if (g == 0.0 && hn == 0.0) throw ZeroPrior("prior accumulators are identically zero");
  const double lambda = std::sqrt(g * g + hn * hn);
  if (hn == 0.0) {
    if (g < 0.0)
      throw DegeneratePrior("h = 0 with g < 0: every half-turn rotor attains the optimum");
    return {ga::Rotor{}, lambda};
  }
  // Top eigenvector is parallel to (lambda + g, h); for g < 0 the leading
  // entry is taken as h^2 / (lambda - g) to dodge cancellation.
  const double a = g >= 0.0 ? lambda + g : hn * hn / (lambda - g);
  const double inv = 1.0 / std::sqrt(a * a + hn * hn);
  return {ga::Rotor(a * inv, h * inv), lambda};
}

double cost(const ga::Rotor& rotor, const Vec3& t, const std::vector<WeightedPair>& pairs) {
  const Mat3 m = ga::rotor_to_matrix(rotor);
  double acc = 0.0;
  for (const WeightedPair& p : pairs) acc += p.w * norm2(p.u - m * (p.v - t));
  return acc;
}

AlignmentSolution solve(const AlignmentProblem& problem, const SummarizeOptions& options) {
  const Summary s = summarize(problem, options);
  const RotationSolution rot = solve_rotation(build_k(s));

  AlignmentSolution out;
  out.rotor = rot.rotor;
  out.lambda_max = rot.lambda;
  out.eigen_gap = rot.gap;
  out.ambiguous = rot.gap <= 1e-8 * std::max(1.0, std::abs(rot.lambda));
  if (s.n_pairs > 0) out.translation = solve_translation(rot.rotor, s);
  out.cost = cost(rot.rotor, out.translation, problem.pairs);
  out.n_pairs = s.n_pairs;
  out.n_priors = s.n_priors;
  return out;
}

}  // namespace galign
