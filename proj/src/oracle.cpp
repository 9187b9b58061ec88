#include "ymmst/analysis.hpp"

#include <limits>
#include <string>
#include <utility>

#include <mpfr.h>
#include <omp.h>

#include "ymmst/errors.hpp"

namespace ymmst {
namespace {

// Owning MPFR value.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real& operator=(const Real& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

struct Bracket {
  Real lo;
  Real hi;
};

// Running minimum over assignments: the best one by (lo, index) and the
// smallest lower bound among all others.
struct Summary {
  explicit Summary(mpfr_prec_t prec) : best_lo(prec), best_hi(prec), second_lo(prec) {
    mpfr_set_inf(best_lo.get(), 1);
    mpfr_set_inf(best_hi.get(), 1);
    mpfr_set_inf(second_lo.get(), 1);
  }

  Real best_lo;
  Real best_hi;
  Real second_lo;
  std::uint64_t best_index = std::numeric_limits<std::uint64_t>::max();

  void offer(const Real& lo, const Real& hi, std::uint64_t index) {
    const int c = mpfr_cmp(lo.get(), best_lo.get());
    if (c < 0 || (c == 0 && index < best_index)) {
      if (best_index != std::numeric_limits<std::uint64_t>::max() &&
          mpfr_cmp(best_lo.get(), second_lo.get()) < 0) {
        mpfr_set(second_lo.get(), best_lo.get(), MPFR_RNDN);
      }
      mpfr_set(best_lo.get(), lo.get(), MPFR_RNDN);
      mpfr_set(best_hi.get(), hi.get(), MPFR_RNDN);
      best_index = index;
    } else if (mpfr_cmp(lo.get(), second_lo.get()) < 0) {
      mpfr_set(second_lo.get(), lo.get(), MPFR_RNDN);
    }
  }

  void merge(const Summary& o) {
    if (o.best_index == std::numeric_limits<std::uint64_t>::max()) return;
    offer(o.best_lo, o.best_hi, o.best_index);
    if (mpfr_cmp(o.second_lo.get(), second_lo.get()) < 0) {
      mpfr_set(second_lo.get(), o.second_lo.get(), MPFR_RNDN);
    }
  }
};

std::string format_real(const Real& r, std::size_t bits) {
  const int digits = static_cast<int>(static_cast<double>(bits) * 0.30103) + 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, r.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace

OracleResult brute_force_ymmst(const RootedPointSet& points, const OracleOptions& options) {
  const std::size_t n = points.size();
  if (n > options.max_points) {
    throw UsageError("oracle refuses " + std::to_string(n) + " points (cap " +
                     std::to_string(options.max_points) + ")");
  }
  if (options.precision_bits < MPFR_PREC_MIN || options.precision_bits > 1u << 20) {
    throw UsageError("unsupported precision " + std::to_string(options.precision_bits));
  }
  const auto prec = static_cast<mpfr_prec_t>(options.precision_bits);

  // Candidate parents of each non-root vertex and bracketed edge lengths.
  std::vector<VertexId> movers;
  std::vector<std::vector<VertexId>> candidates;
  std::vector<std::vector<Bracket>> lengths;
  Real tmp(prec + 64);
  std::uint64_t total = 1;
  for (VertexId v = 0; v < n; ++v) {
    if (v == points.root()) continue;
    movers.push_back(v);
    auto& cand = candidates.emplace_back();
    auto& len = lengths.emplace_back();
    for (VertexId u = 0; u < n; ++u) {
      if (!(points[u].y < points[v].y)) continue;
      cand.push_back(u);
      const BigInt d2 = sq_dist(points[u], points[v]);
      Bracket b{Real(prec), Real(prec)};
      mpfr_set_z(tmp.get(), d2.raw().get_mpz_t(), MPFR_RNDD);
      mpfr_sqrt(b.lo.get(), tmp.get(), MPFR_RNDD);
      mpfr_set_z(tmp.get(), d2.raw().get_mpz_t(), MPFR_RNDU);
      mpfr_sqrt(b.hi.get(), tmp.get(), MPFR_RNDU);
      len.push_back(std::move(b));
    }
    if (total > std::numeric_limits<std::uint64_t>::max() / cand.size()) {
      throw UsageError("too many parent assignments to enumerate");
    }
    total *= cand.size();
  }

  const std::size_t k = movers.size();
  const int threads = omp_get_max_threads();
  std::vector<Summary> partial;
  partial.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) partial.emplace_back(prec);

#pragma omp parallel num_threads(threads)
  {
    const auto t = static_cast<std::uint64_t>(omp_get_thread_num());
    const auto team = static_cast<std::uint64_t>(omp_get_num_threads());
    const std::uint64_t begin = total * t / team;
    const std::uint64_t end = total * (t + 1) / team;
    Summary& local = partial[t];

    if (begin < end) {
      // Mixed-radix digits of `begin`, least significant first.
      std::vector<std::size_t> digit(k, 0);
      std::uint64_t rest = begin;
      for (std::size_t j = 0; j < k; ++j) {
        digit[j] = static_cast<std::size_t>(rest % candidates[j].size());
        rest /= candidates[j].size();
      }
      Real lo(prec), hi(prec);
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        mpfr_set_zero(lo.get(), 1);
        mpfr_set_zero(hi.get(), 1);
        for (std::size_t j = 0; j < k; ++j) {
          mpfr_add(lo.get(), lo.get(), lengths[j][digit[j]].lo.get(), MPFR_RNDD);
          mpfr_add(hi.get(), hi.get(), lengths[j][digit[j]].hi.get(), MPFR_RNDU);
        }
        local.offer(lo, hi, idx);
        for (std::size_t j = 0; j < k; ++j) {
          if (++digit[j] < candidates[j].size()) break;
          digit[j] = 0;
        }
      }
    }
  }

  Summary all(prec);
  for (const auto& s : partial) all.merge(s);

  OracleResult result{GeomTree{points, std::vector<VertexId>(n, kNoParent), true}, 0.0, 0.0, {},
                      0.0, false, 0};
  result.assignments = total;
  std::uint64_t rest = all.best_index;
  for (std::size_t j = 0; j < k; ++j) {
    result.tree.parent[movers[j]] = candidates[j][rest % candidates[j].size()];
    rest /= candidates[j].size();
  }
  if (k == 0) {
    mpfr_set_zero(all.best_lo.get(), 1);
    mpfr_set_zero(all.best_hi.get(), 1);
  }

  Real margin(prec);
  mpfr_sub(margin.get(), all.second_lo.get(), all.best_hi.get(), MPFR_RNDD);
  result.margin = mpfr_get_d(margin.get(), MPFR_RNDD);
  result.indeterminate = !(mpfr_sgn(margin.get()) > 0);
  result.tree.unique = !result.indeterminate;
  result.min_length_lo = mpfr_get_d(all.best_lo.get(), MPFR_RNDD);
  result.min_length_hi = mpfr_get_d(all.best_hi.get(), MPFR_RNDU);

  Real mid(prec);
  mpfr_add(mid.get(), all.best_lo.get(), all.best_hi.get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  result.min_length = format_real(mid, options.precision_bits);
  return result;
}

}  // namespace ymmst
