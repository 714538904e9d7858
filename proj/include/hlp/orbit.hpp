#pragma once

// Exact enumeration of the orbit points g z with u((g z)_j, z_j) <= V_j for the
// full modular group over Z or over the ring of integers of Q(sqrt m).

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "hlp/geometry.hpp"

namespace hlp {

struct OrbitPoint {
  GroupElement g;
  Reals u;
};

struct OrbitOptions {
  // OverflowGuard when a coefficient search range exceeds this magnitude.
  double bound_cap = 1e9;
  // 0 means hardware concurrency.
  int threads = 1;
};

// Enumeration is split into blocks: block 0 is the c = 0 family, block i > 0
// handles the i-th bottom-left entry c (sigma_1(c) > 0). Blocks are independent,
// so callers reduce per-block results in block order for thread-count
// independent output.
class OrbitEnumerator {
 public:
  using Visitor = std::function<void(const GroupElement&, const Reals&)>;

  OrbitEnumerator(const FieldSpec& field, const MultiPoint& z, const Reals& V, const OrbitOptions& options = {});

  std::size_t num_blocks() const { return 1 + cs_.size(); }

  // Visits each class in the block with u_j <= V_j up to a relative slack of
  // 1e-9, so callers apply their own predicate. Returns the number of
  // candidates examined.
  std::uint64_t visit_block(std::size_t i, const Visitor& visit) const;

  const FieldSpec& field() const { return field_; }
  const MultiPoint& point() const { return z_; }
  const Reals& radius() const { return V_; }

 private:
  std::uint64_t visit_c_zero(const Visitor& visit) const;
  std::uint64_t visit_c(const RingElement& c, const Visitor& visit) const;
  bool within_slack(const Reals& u) const;
  void guard(double value) const;

  FieldSpec field_;
  MultiPoint z_;
  Reals V_;
  Reals row_radius_{0.0, 0.0};  // sqrt V + sqrt(V + 1): bound on |c z + d|
  Reals w_radius_{0.0, 0.0};    // 2 sqrt(V) y: bound on |-c z^2 + (a - d) z + b|
  double cap_;
  std::vector<RingElement> cs_;
  std::vector<RingElement> units_;
};

inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for every block, dynamically scheduled over the given threads.
// The first exception thrown by any worker is rethrown.
template <class Fn>
void for_each_block(std::size_t blocks, int threads, Fn&& fn) {
  const int n = std::min<int>(resolve_threads(threads), static_cast<int>(std::max<std::size_t>(blocks, 1)));
  if (n <= 1) {
    for (std::size_t i = 0; i < blocks; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= blocks || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// Every class with u_j <= V_j, in block order.
std::vector<OrbitPoint> enumerate_box_orbit(const MultiPoint& z, const Reals& V, const FieldSpec& field,
                                            const OrbitOptions& options = {});

// Exhaustive scan of all matrices whose entries have basis coefficients of
// magnitude <= entry_bound; sorted. Complete whenever
// implied_entry_bound(z, V).coefficient <= entry_bound.
std::vector<OrbitPoint> naive_oracle(const MultiPoint& z, const Reals& V, int entry_bound, const FieldSpec& field);

struct CountResult {
  std::uint64_t count = 0;
  std::uint64_t candidates = 0;
  std::uint64_t near_boundary = 0;
  double wall_s = 0.0;
};

// U_j <= u_j, and u_j < V_j or u_j <= V_j per coordinate.
struct Region {
  Reals U{0.0, 0.0};
  Reals V{0.0, 0.0};
  std::array<bool, kMaxDegree> closed_upper{false, false};
};

struct BoxSpec {
  Reals U{0.0, 0.0};
  Reals V{0.0, 0.0};
};

// Distances in [A_j, B_j) for j in E and <= T elsewhere. Coordinates in E are
// 0-based here.
struct StripSpec {
  std::vector<int> E;
  Reals A{0.0, 0.0};
  Reals B{0.0, 0.0};
  double T = 0.0;
};

void validate_box(const BoxSpec& box, int degree);
void validate_strip(const StripSpec& strip, int degree);
bool in_strip_set(const StripSpec& strip, int j);
Region strip_region(const StripSpec& strip, int degree);

// Relative tolerance used by the boundary audit.
inline constexpr double kBoundaryTolerance = 1e-9;

CountResult count_region(const MultiPoint& z, const Region& region, const FieldSpec& field,
                         const OrbitOptions& options = {});
// cnt(U, V; z), half-open per coordinate.
CountResult count_box(const MultiPoint& z, const BoxSpec& box, const FieldSpec& field,
                      const OrbitOptions& options = {});
// N(z; T): every dist_j <= T.
CountResult count_hypercube(const MultiPoint& z, double T, const FieldSpec& field, const OrbitOptions& options = {});
CountResult count_strip(const MultiPoint& z, const StripSpec& strip, const FieldSpec& field,
                        const OrbitOptions& options = {});

}  // namespace hlp
