#include "csh/scan.hpp"

#include <unistd.h>

#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace csh {

std::string scan_record::csv_line() const {
  std::ostringstream os;
  os << graph6 << "," << n << "," << m << "," << (planar ? "true" : "false") << "," << h1_free_rank
     << "," << h1_two_torsion << "," << verdict();
  return os.str();
}

scan_record scan_graph(const graph& g, i64 p, int degree) {
  scan_record rec;
  rec.graph6 = encode_graph6(g);
  rec.n = g.n;
  rec.m = g.m();
  rec.planar = is_planar(g);
  full_complex fc = build_full_complex(g, degree + 1);
  const integer_chain_complex& cc = fc.cc;
  if (degree > cc.top_degree()) return rec;  // H_degree = 0 beyond the edge count
  int rq_out = degree >= 1 ? rank_exact(cc.boundaries[degree]) : 0;
  int rq_in = degree + 1 <= cc.top_degree() ? rank_exact(cc.boundaries[degree + 1]) : 0;
  rec.h1_free_rank = cc.dims[degree] - rq_out - rq_in;
  int rp_out = degree >= 1 ? rank_mod_p(cc.boundaries[degree], p) : 0;
  if (rp_out != rq_out) {
    // H_{degree-1} has p-torsion; use the full invariant factors instead.
    homology_group h = homology_at(cc, degree);
    for (i64 t : h.torsion)
      if (t % p == 0) rec.h1_two_torsion++;
  } else if (degree + 1 <= cc.top_degree()) {
    rec.h1_two_torsion = rq_in - rank_mod_p(cc.boundaries[degree + 1], p);
  }
  return rec;
}

scan_summary scan_corpus(const std::vector<std::string>& lines, i64 p, int degree, int jobs,
                         const std::function<void(const scan_record&)>& emit,
                         const std::function<void(size_t, const std::string&)>& warn) {
  scan_summary summary;
  std::mutex mu;
  std::condition_variable cv;
  std::map<size_t, std::optional<scan_record>> ready;  // nullopt = skipped
  size_t next_emit = 0;
  std::atomic<size_t> next_job{0};

  auto worker = [&]() {
    while (true) {
      size_t i = next_job.fetch_add(1);
      if (i >= lines.size()) return;
      std::optional<scan_record> rec;
      std::string err;
      try {
        graph g = parse_graph6(lines[i]);
        rec = scan_graph(g, p, degree);
      } catch (const std::exception& e) {
        err = e.what();
      }
      std::unique_lock<std::mutex> lk(mu);
      if (!err.empty()) warn(i, err);
      ready[i] = std::move(rec);
      while (!ready.empty() && ready.begin()->first == next_emit) {
        auto& r = ready.begin()->second;
        if (r) {
          emit(*r);
          summary.total++;
          if (r->h1_two_torsion > 0) summary.torsion_count++;
          if (!r->planar) summary.nonplanar_count++;
          if (!r->consistent()) summary.counterexamples++;
        } else {
          summary.skipped++;
        }
        ready.erase(ready.begin());
        next_emit++;
      }
      cv.notify_all();
    }
  };

  int nthreads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return summary;
}

std::optional<std::string> result_cache::get(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream f(path_for(key));
  if (!f) return std::nullopt;
  std::stringstream ss;
  ss << f.rdbuf();
  std::string blob = ss.str();
  // stored as: first line = key, rest = payload (collision paranoia)
  size_t nl = blob.find('\n');
  if (nl == std::string::npos || blob.substr(0, nl) != key) return std::nullopt;
  return blob.substr(nl + 1);
}

void result_cache::put(const std::string& key, const std::string& value) const {
  if (!enabled()) return;
  std::filesystem::create_directories(dir_);
  static std::atomic<unsigned> counter{0};
  std::string final_path = path_for(key);
  std::string tmp = final_path + ".tmp" + std::to_string(::getpid()) + "." +
                    std::to_string(counter.fetch_add(1));
  {
    std::ofstream f(tmp);
    f << key << "\n" << value;
  }
  // atomic rename: concurrent writers of the same key are benign
  std::filesystem::rename(tmp, final_path);
}

std::string result_cache::key_for(const graph& g, const std::string& kind,
                                  const std::string& params) {
  std::ostringstream os;
  os << kind << "|" << params << "|n=" << g.n << "|";
  for (auto& [a, b] : g.edges) os << a << "-" << b << ";";
  return os.str();
}

std::string result_cache::path_for(const std::string& key) const {
  // FNV-1a 64-bit; the key itself is stored in the file to rule out collisions.
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return dir_ + "/" + buf + ".json";
}

}  // namespace csh
