#include "hcnerve/kan.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "hcnerve/detail/keyed_levels.hpp"
#include "hcnerve/errors.hpp"

namespace hcn {

namespace {

bool faces_compatible(const TruncatedSSet& s, int n, int k, const std::vector<SimplexId>& f) {
  for (int j = 0; j <= n; ++j) {
    if (j == k) continue;
    for (int i = 0; i < j; ++i) {
      if (i == k) continue;
      if (n >= 2 && s.face(n - 1, j - 1, f[i]) != s.face(n - 1, i, f[j])) return false;
    }
  }
  return true;
}

// Signature of x for the horn with missing index k: its other faces.
detail::Key horn_signature(const TruncatedSSet& s, int n, int k, SimplexId x) {
  detail::Key key;
  key.reserve(n);
  for (int i = 0; i <= n; ++i)
    if (i != k) key.push_back(s.face(n, i, x));
  return key;
}

// Enumerates compatible face tuples of Lambda^n_k in lexicographic order of
// (d_{i_0}, d_{i_1}, ...) over i != k. `visit(faces)` returns false to stop.
class HornEnumerator {
 public:
  HornEnumerator(const TruncatedSSet& s, int n, int k) : s_(s), n_(n), k_(k) {
    for (int i = 0; i <= n; ++i)
      if (i != k) order_.push_back(i);
    // by_face_[t][v]: simplices y of level n-1 with d_t y = v
    if (n >= 2) {
      by_face_.resize(n);
      for (int t = 0; t < n; ++t) {
        by_face_[t].resize(s.count(n - 2));
        for (SimplexId y = 0; y < s.count(n - 1); ++y) by_face_[t][s.face(n - 1, t, y)].push_back(y);
      }
    }
  }

  std::int32_t first_choices() const { return s_.count(n_ - 1); }

  // Enumerate horns whose first face is `first`.
  template <class Visit>
  bool run_from(SimplexId first, Visit&& visit) {
    std::vector<SimplexId> faces(n_ + 1, kNoSimplex);
    faces[order_[0]] = first;
    return extend(1, faces, visit);
  }

 private:
  template <class Visit>
  bool extend(std::size_t pos, std::vector<SimplexId>& faces, Visit& visit) {
    if (pos == order_.size()) return visit(faces);
    const int j = order_[pos];
    const int i0 = order_[0];
    // constraint with the first chosen face: d_{i0}(f_j) = d_{j-1}(f_{i0})
    const SimplexId want = s_.face(n_ - 1, j - 1, faces[i0]);
    for (SimplexId y : by_face_[i0][want]) {
      bool ok = true;
      for (std::size_t q = 1; q < pos && ok; ++q) {
        const int i = order_[q];
        ok = s_.face(n_ - 1, j - 1, faces[i]) == s_.face(n_ - 1, i, y);
      }
      if (!ok) continue;
      faces[j] = y;
      if (!extend(pos + 1, faces, visit)) return false;
    }
    faces[j] = kNoSimplex;
    return true;
  }

  const TruncatedSSet& s_;
  int n_;
  int k_;
  std::vector<int> order_;
  std::vector<std::vector<std::vector<SimplexId>>> by_face_;
};

HornWitness make_witness(int n, int k, const std::vector<SimplexId>& faces) {
  HornWitness w{n, k, {}};
  for (int i = 0; i <= n; ++i)
    if (i != k) w.faces.push_back(faces[i]);
  return w;
}

// Splits [0, count) into contiguous blocks, one per thread, and calls
// scan(block, begin, end) on each. A scan returns true when it found a
// failure. The lowest failing block wins, and each block scans in order, so
// the reported failure does not depend on the thread count.
template <class Scan>
int first_failing_block(std::int32_t count, int threads, Scan&& scan) {
  threads = std::max(1, std::min<int>(threads, std::max<std::int32_t>(count, 1)));
  std::vector<char> failed(threads, 0);
  const std::int32_t block = (count + threads - 1) / threads;
  if (threads == 1) {
    failed[0] = scan(0, 0, count);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      const std::int32_t b = std::min(count, t * block);
      const std::int32_t e = std::min(count, b + block);
      pool.emplace_back([&, t, b, e] { failed[t] = scan(t, b, e); });
    }
    for (auto& th : pool) th.join();
  }
  for (int t = 0; t < threads; ++t)
    if (failed[t]) return t;
  return -1;
}

int clamp_threads(int threads) { return std::max(1, threads); }

}  // namespace

Horn Horn::make(const TruncatedSSet& ambient, int n, int k, std::vector<SimplexId> faces) {
  if (n < 1 || n > ambient.dim_cap())
    throw TruncationError("horn dimension " + std::to_string(n) + " outside 1.." +
                          std::to_string(ambient.dim_cap()));
  if (k < 0 || k > n) throw InvalidArgument("horn index out of range");
  if (faces.size() != static_cast<std::size_t>(n)) throw InvalidArgument("horn needs n faces");
  std::vector<SimplexId> full(n + 1, kNoSimplex);
  for (int i = 0, t = 0; i <= n; ++i) {
    if (i == k) continue;
    if (faces[t] < 0 || faces[t] >= ambient.count(n - 1)) throw InvalidArgument("horn face out of range");
    full[i] = faces[t++];
  }
  if (!faces_compatible(ambient, n, k, full)) throw InvalidArgument("horn faces are not compatible");
  return Horn(&ambient, n, k, std::move(full));
}

std::vector<SimplexId> Horn::faces() const {
  std::vector<SimplexId> out;
  for (int i = 0; i <= n_; ++i)
    if (i != k_) out.push_back(faces_[i]);
  return out;
}

std::optional<SimplexId> find_filler(const Horn& horn) {
  const TruncatedSSet& s = horn.ambient();
  const int n = horn.n();
  for (SimplexId x = 0; x < s.count(n); ++x) {
    bool ok = true;
    for (int i = 0; i <= n && ok; ++i)
      if (i != horn.k()) ok = s.face(n, i, x) == horn.face(i);
    if (ok) return x;
  }
  return std::nullopt;
}

std::string HornWitness::to_string() const {
  std::string out = "Lambda^" + std::to_string(n) + "_" + std::to_string(k) + " faces (";
  for (std::size_t t = 0; t < faces.size(); ++t) out += (t ? "," : "") + std::to_string(faces[t]);
  return out + ")";
}

KanReport is_kan(const TruncatedSSet& s, int up_to, int threads) {
  if (up_to > s.dim_cap())
    throw TruncationError("Kan check up to " + std::to_string(up_to) + " exceeds cap " +
                          std::to_string(s.dim_cap()));
  KanReport report;
  threads = clamp_threads(threads);
  for (int n = 1; n <= up_to; ++n)
    for (int k = 0; k <= n; ++k) {
      std::unordered_set<detail::Key, detail::KeyHash> fillable;
      for (SimplexId x = 0; x < s.count(n); ++x) fillable.insert(horn_signature(s, n, k, x));
      const HornEnumerator horns(s, n, k);
      std::vector<std::size_t> checked(threads, 0);
      std::vector<std::vector<SimplexId>> bad(threads);
      const int failed = first_failing_block(
          horns.first_choices(), threads, [&](int t, std::int32_t b, std::int32_t e) {
            HornEnumerator local = horns;
            detail::Key sig(n);
            for (SimplexId first = b; first < e; ++first) {
              local.run_from(first, [&](const std::vector<SimplexId>& faces) {
                ++checked[t];
                for (int i = 0, q = 0; i <= n; ++i)
                  if (i != k) sig[q++] = faces[i];
                if (fillable.count(sig)) return true;
                bad[t] = faces;
                return false;
              });
              if (!bad[t].empty()) return true;
            }
            return false;
          });
      for (auto c : checked) report.horns_checked += c;
      if (failed >= 0) {
        report.ok = false;
        report.failing = make_witness(n, k, bad[failed]);
        return report;
      }
    }
  return report;
}

LiftingReport has_horn_lifting(const SimplicialMap& p, int up_to, int threads) {
  if (!p.source || !p.target) throw InvalidArgument("map without source or target");
  const TruncatedSSet& e = *p.source;
  const TruncatedSSet& b = *p.target;
  if (up_to > p.top_level())
    throw TruncationError("lifting check up to " + std::to_string(up_to) + " exceeds the map's levels");
  LiftingReport report;
  threads = clamp_threads(threads);
  for (int n = 1; n <= up_to; ++n)
    for (int k = 0; k <= n; ++k) {
      // (horn signature in E, simplex of B) pairs realized by some simplex of E
      std::unordered_set<detail::Key, detail::KeyHash> liftable;
      for (SimplexId x = 0; x < e.count(n); ++x) {
        auto key = horn_signature(e, n, k, x);
        key.push_back(p.assignment[n][x]);
        liftable.insert(std::move(key));
      }
      std::unordered_map<detail::Key, std::vector<SimplexId>, detail::KeyHash> base_fillers;
      for (SimplexId y = 0; y < b.count(n); ++y) base_fillers[horn_signature(b, n, k, y)].push_back(y);

      const HornEnumerator horns(e, n, k);
      std::vector<std::size_t> checked(threads, 0);
      std::vector<std::vector<SimplexId>> bad(threads);
      std::vector<SimplexId> bad_base(threads, kNoSimplex);
      const int failed = first_failing_block(
          horns.first_choices(), threads, [&](int t, std::int32_t lo, std::int32_t hi) {
            HornEnumerator local = horns;
            detail::Key image(n);
            for (SimplexId first = lo; first < hi; ++first) {
              local.run_from(first, [&](const std::vector<SimplexId>& faces) {
                for (int i = 0, q = 0; i <= n; ++i)
                  if (i != k) image[q++] = p.assignment[n - 1][faces[i]];
                auto it = base_fillers.find(image);
                if (it == base_fillers.end()) return true;
                detail::Key key;
                for (int i = 0; i <= n; ++i)
                  if (i != k) key.push_back(faces[i]);
                key.push_back(0);
                for (SimplexId y : it->second) {
                  ++checked[t];
                  key.back() = y;
                  if (!liftable.count(key)) {
                    bad[t] = faces;
                    bad_base[t] = y;
                    return false;
                  }
                }
                return true;
              });
              if (!bad[t].empty()) return true;
            }
            return false;
          });
      for (auto c : checked) report.problems_checked += c;
      if (failed >= 0) {
        report.ok = false;
        report.failing = make_witness(n, k, bad[failed]);
        report.failing_base = bad_base[failed];
        return report;
      }
    }
  return report;
}

}  // namespace hcn
