#include "jpm/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "jpm/error.hpp"

namespace jpm {

namespace {

using Clock = std::chrono::steady_clock;
using Word = std::uint64_t;

std::chrono::milliseconds since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

std::size_t first_bit(const Word* set, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w) {
        if (set[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(set[w]));
    }
    return static_cast<std::size_t>(-1);
}

bool is_empty(const Word* set, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w) {
        if (set[w] != 0) return false;
    }
    return true;
}

// Russian-doll maximum clique search on the complement of the input graph.
//
// Vertices are renumbered into search positions 0..n-1. ceiling_[i] is the
// clique number of the subgraph on positions i..n-1; it is filled from the
// back, and the search for ceiling_[i] only has to decide whether position i
// extends to a clique of size ceiling_[i+1] + 1. Inside a search, greedy
// colouring of the candidate set and ceiling_ of its first member both bound
// the achievable clique size.
class CliqueSearch {
public:
    CliqueSearch(const DistanceGraph& g, const SolveBudget& budget)
        : n_(g.order()), words_((g.order() + 63) / 64), budget_(budget), start_(Clock::now()) {
        position_to_vertex_.resize(n_);
        std::iota(position_to_vertex_.begin(), position_to_vertex_.end(), std::size_t{0});
        // Non-increasing complement degree, i.e. non-decreasing degree in g.
        std::stable_sort(position_to_vertex_.begin(), position_to_vertex_.end(),
                         [&](std::size_t a, std::size_t b) { return g.degree(a) < g.degree(b); });
        std::vector<std::size_t> vertex_to_position(n_);
        for (std::size_t p = 0; p < n_; ++p) vertex_to_position[position_to_vertex_[p]] = p;

        adjacency_.assign(n_ * words_, 0);
        for (std::size_t p = 0; p < n_; ++p) {
            const Bitset& row = g.row(position_to_vertex_[p]);
            Word* out = adjacency_.data() + p * words_;
            for (std::size_t q = 0; q < n_; ++q) {
                if (q != p && !row.test(position_to_vertex_[q])) {
                    out[q >> 6] |= Word{1} << (q & 63);
                }
            }
        }
        ceiling_.assign(n_ + 1, 0);
    }

    void run() {
        if (n_ == 0) {
            complete_ = true;
            return;
        }
        best_positions_ = {n_ - 1};
        ceiling_[n_ - 1] = 1;
        const unsigned threads = std::max(1U, budget_.threads);
        workers_.resize(threads);
        for (auto& w : workers_) w.frames.resize(2);

        for (std::size_t i = n_ - 1; i-- > 0;) {
            const std::size_t target = ceiling_[i + 1] + 1;
            found_.store(false);
            if (search_from(i, target)) {
                ceiling_[i] = target;
            } else if (aborted_.load()) {
                return;
            } else {
                ceiling_[i] = ceiling_[i + 1];
            }
        }
        complete_ = true;
    }

    bool complete() const noexcept { return complete_; }
    std::uint64_t nodes() const noexcept { return nodes_.load(); }

    std::vector<std::size_t> best_vertices() const {
        std::vector<std::size_t> out;
        for (auto p : best_positions_) out.push_back(position_to_vertex_[p]);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    struct Frame {
        std::vector<Word> candidates;
        std::vector<Word> uncolored;
        std::vector<Word> color_class;
        std::vector<std::uint32_t> order;
        std::vector<std::uint32_t> colors;
    };

    struct Worker {
        std::vector<Frame> frames;
        std::vector<std::size_t> clique;
        std::uint64_t pending_nodes = 0;
    };

    Frame& frame(Worker& w, std::size_t depth) {
        Frame& f = w.frames[depth];
        if (f.candidates.size() != words_) {
            f.candidates.assign(words_, 0);
            f.uncolored.assign(words_, 0);
            f.color_class.assign(words_, 0);
            f.order.resize(n_);
            f.colors.resize(n_);
        }
        return f;
    }

    const Word* row(std::size_t p) const { return adjacency_.data() + p * words_; }

    // Greedy sequential colouring of f.candidates. Records, in non-decreasing
    // colour order, only the vertices whose colour reaches `min_color`.
    std::size_t color_candidates(Frame& f, std::size_t min_color) const {
        std::copy(f.candidates.begin(), f.candidates.end(), f.uncolored.begin());
        std::size_t count = 0;
        std::uint32_t color = 0;
        Word* uncolored = f.uncolored.data();
        Word* cls = f.color_class.data();
        while (!is_empty(uncolored, words_)) {
            ++color;
            std::copy(uncolored, uncolored + words_, cls);
            for (std::size_t w = 0; w < words_; ++w) {
                while (cls[w] != 0) {
                    const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(cls[w]));
                    uncolored[w] &= ~(Word{1} << (v & 63));
                    const Word* nb = row(v);
                    for (std::size_t x = w; x < words_; ++x) cls[x] &= ~nb[x];
                    cls[w] &= ~(Word{1} << (v & 63));
                    if (color >= min_color) {
                        f.order[count] = static_cast<std::uint32_t>(v);
                        f.colors[count] = color;
                        ++count;
                    }
                }
            }
        }
        return count;
    }

    bool should_stop(Worker& w) {
        if (found_.load(std::memory_order_relaxed) || aborted_.load(std::memory_order_relaxed)) {
            return true;
        }
        if (++w.pending_nodes >= 1024) {
            const std::uint64_t total = nodes_.fetch_add(w.pending_nodes) + w.pending_nodes;
            w.pending_nodes = 0;
            if (total >= budget_.node_limit || since(start_) >= budget_.time_limit) {
                aborted_.store(true);
                return true;
            }
        }
        return false;
    }

    void flush(Worker& w) {
        nodes_.fetch_add(w.pending_nodes);
        w.pending_nodes = 0;
    }

    void record(Worker& w, std::size_t size) {
        std::lock_guard lock(mutex_);
        if (found_.exchange(true)) return;
        best_positions_.assign(w.clique.begin(), w.clique.begin() + static_cast<std::ptrdiff_t>(size));
    }

    // Branches over the recorded vertices of f from the highest colour down.
    // `depth` vertices are already in the clique.
    bool expand(Worker& w, std::size_t depth, std::size_t target) {
        if (should_stop(w)) return false;
        Frame& f = frame(w, depth);
        const std::size_t need = target - depth;
        const std::size_t count = color_candidates(f, need);
        Word* candidates = f.candidates.data();
        for (std::size_t j = count; j-- > 0;) {
            if (depth + f.colors[j] < target) return false;
            const std::size_t first = first_bit(candidates, words_);
            if (depth + ceiling_[first] < target) return false;
            const std::size_t v = f.order[j];
            if (w.clique.size() <= depth) w.clique.resize(depth + 1);
            w.clique[depth] = v;
            if (depth + 1 == target) {
                record(w, target);
                return true;
            }
            Frame& next = frame(w, depth + 1);
            const Word* nb = row(v);
            bool empty = true;
            for (std::size_t x = 0; x < words_; ++x) {
                next.candidates[x] = candidates[x] & nb[x];
                empty = empty && next.candidates[x] == 0;
            }
            if (!empty && expand(w, depth + 1, target)) return true;
            if (found_.load(std::memory_order_relaxed) || aborted_.load(std::memory_order_relaxed)) {
                return false;
            }
            candidates[v >> 6] &= ~(Word{1} << (v & 63));
        }
        return false;
    }

    // Does position `root` extend to a clique of size `target` within
    // positions root+1..n-1? Level-one branches are shared among workers.
    bool search_from(std::size_t root, std::size_t target) {
        Worker& lead = workers_.front();
        if (lead.frames.size() < target + 1) lead.frames.resize(target + 1);
        Frame& f = frame(lead, 1);
        const Word* nb = row(root);
        for (std::size_t x = 0; x < words_; ++x) f.candidates[x] = nb[x];
        // Keep positions strictly after root.
        for (std::size_t x = 0; x <= root / 64; ++x) {
            if (x < root / 64) {
                f.candidates[x] = 0;
            } else {
                const std::size_t bit = root & 63;
                f.candidates[x] &= bit == 63 ? 0 : ~Word{0} << (bit + 1);
            }
        }
        for (auto& w : workers_) {
            w.clique.assign(1, root);
            // Frames are never reallocated while a search holds references.
            if (w.frames.size() < target + 1) w.frames.resize(target + 1);
        }
        if (is_empty(f.candidates.data(), words_)) return target == 1;

        if (workers_.size() == 1) {
            const bool hit = expand(lead, 1, target);
            flush(lead);
            return hit;
        }

        // Parallel split of the level-one branches. Branch j sees the
        // candidates left after all higher-colour branches were removed.
        const std::size_t count = color_candidates(f, target - 1);
        const std::vector<Word> base = f.candidates;
        const std::vector<std::uint32_t> order(f.order.begin(), f.order.begin() + static_cast<std::ptrdiff_t>(count));
        const std::vector<std::uint32_t> colors(f.colors.begin(), f.colors.begin() + static_cast<std::ptrdiff_t>(count));
        std::atomic<std::size_t> next_task{0};

        auto work = [&](Worker& w) {
            while (true) {
                const std::size_t task = next_task.fetch_add(1);
                if (task >= count) break;
                const std::size_t j = count - 1 - task;
                if (1 + colors[j] < target) break;
                if (found_.load() || aborted_.load()) break;
                std::vector<Word> remaining = base;
                for (std::size_t h = j + 1; h < count; ++h) {
                    remaining[order[h] >> 6] &= ~(Word{1} << (order[h] & 63));
                }
                const std::size_t first = first_bit(remaining.data(), words_);
                if (1 + ceiling_[first] < target) break;
                const std::size_t v = order[j];
                w.clique.assign({root, v});
                if (target == 2) {
                    record(w, 2);
                    break;
                }
                Frame& next = frame(w, 2);
                const Word* vn = row(v);
                for (std::size_t x = 0; x < words_; ++x) next.candidates[x] = remaining[x] & vn[x];
                if (!is_empty(next.candidates.data(), words_)) expand(w, 2, target);
            }
            flush(w);
        };

        std::vector<std::thread> pool;
        for (std::size_t t = 1; t < workers_.size(); ++t) {
            pool.emplace_back(work, std::ref(workers_[t]));
        }
        work(lead);
        for (auto& th : pool) th.join();
        return found_.load();
    }

    std::size_t n_;
    std::size_t words_;
    SolveBudget budget_;
    Clock::time_point start_;
    std::vector<std::size_t> position_to_vertex_;
    std::vector<Word> adjacency_;
    std::vector<std::size_t> ceiling_;
    std::vector<Worker> workers_;
    std::vector<std::size_t> best_positions_;
    std::atomic<bool> found_{false};
    std::atomic<bool> aborted_{false};
    std::atomic<std::uint64_t> nodes_{0};
    std::mutex mutex_;
    bool complete_ = false;
};

IndependenceCertificate make_certificate(const DistanceGraph& g, std::vector<std::size_t> members) {
    std::sort(members.begin(), members.end());
    IndependenceCertificate cert;
    cert.spec = g.spec();
    cert.alpha = members.size();
    for (auto v : members) cert.witness.push_back(g.vertex_label(v));
    const VerifyResult check = verify_independent(g, members);
    if (check.ok()) {
        cert.status = CertificateStatus::Verified;
    } else {
        cert.status = CertificateStatus::Failed;
        cert.violation = std::make_pair(g.vertex_label(check.violation->first),
                                        g.vertex_label(check.violation->second));
    }
    return cert;
}

}  // namespace

void SolveBudget::validate() const {
    if (time_limit.count() <= 0 || node_limit == 0 || threads == 0) {
        throw Error(ErrorCode::InvalidParams, "solve budget limits must be positive");
    }
}

VerifyResult verify_independent(const DistanceGraph& g, std::span<const std::size_t> witness) {
    std::vector<std::size_t> members(witness.begin(), witness.end());
    for (auto v : members) {
        if (v >= g.order()) throw Error(ErrorCode::UnknownVertex, "witness index out of range");
    }
    std::sort(members.begin(), members.end());
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            if (members[a] == members[b] || g.adjacent(members[a], members[b])) {
                return {std::make_pair(members[a], members[b])};
            }
        }
    }
    return {};
}

VerifyResult verify_independent(const DistanceGraph& g, std::span<const std::string> witness) {
    std::vector<std::size_t> members;
    members.reserve(witness.size());
    for (const auto& label : witness) members.push_back(g.index_of_label(label));
    return verify_independent(g, members);
}

IndependenceCertificate solve_exact(const DistanceGraph& g, const SolveBudget& budget) {
    budget.validate();
    const auto start = Clock::now();
    CliqueSearch search(g, budget);
    search.run();

    std::vector<std::size_t> best = search.best_vertices();
    if (!search.complete()) {
        // Never report less than a cheap greedy set when the search stops early.
        auto greedy = greedy_lower_bound(g, 0);
        if (greedy.alpha > best.size()) best = witness_indices(g, greedy);
    }
    IndependenceCertificate cert = make_certificate(g, std::move(best));
    cert.optimal = search.complete() && cert.status == CertificateStatus::Verified;
    if (!search.complete() && cert.status == CertificateStatus::Verified) {
        cert.status = CertificateStatus::Unverified;
    }
    cert.search_nodes = search.nodes();
    cert.elapsed = since(start);
    return cert;
}

IndependenceCertificate greedy_lower_bound(const DistanceGraph& g, std::uint64_t seed) {
    const auto start = Clock::now();
    const std::size_t n = g.order();
    std::vector<std::size_t> tiebreak(n);
    std::iota(tiebreak.begin(), tiebreak.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    std::shuffle(tiebreak.begin(), tiebreak.end(), rng);

    Bitset alive(n);
    alive.set_all();
    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(v);

    std::vector<std::size_t> chosen;
    while (alive.any()) {
        std::size_t pick = Bitset::npos;
        alive.for_each([&](std::size_t v) {
            if (pick == Bitset::npos || degree[v] < degree[pick] ||
                (degree[v] == degree[pick] && tiebreak[v] < tiebreak[pick])) {
                pick = v;
            }
        });
        chosen.push_back(pick);
        Bitset removed = g.row(pick);
        removed &= alive;
        removed.set(pick);
        alive.and_not(removed);
        removed.for_each([&](std::size_t r) {
            Bitset touched = g.row(r);
            touched &= alive;
            touched.for_each([&](std::size_t x) { --degree[x]; });
        });
    }
    IndependenceCertificate cert = make_certificate(g, std::move(chosen));
    cert.elapsed = since(start);
    return cert;
}

IndependenceCertificate solve_brute_force(const DistanceGraph& g) {
    const std::size_t n = g.order();
    if (n > 24) {
        throw Error(ErrorCode::TooLarge, "brute force is limited to 24 vertices, got " + std::to_string(n));
    }
    const auto start = Clock::now();
    std::vector<std::uint32_t> neighbours(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u = 0; u < n; ++u) {
            if (g.adjacent(v, u)) neighbours[v] |= std::uint32_t{1} << u;
        }
    }
    const std::uint32_t limit = n == 0 ? 1U : static_cast<std::uint32_t>((std::uint64_t{1} << n));
    std::vector<std::uint8_t> independent(limit, 0);
    independent[0] = 1;
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 1; mask < limit && mask != 0; ++mask) {
        const std::uint32_t low = static_cast<std::uint32_t>(std::countr_zero(mask));
        const std::uint32_t rest = mask & (mask - 1);
        independent[mask] = independent[rest] && (neighbours[low] & rest) == 0;
        if (independent[mask] && std::popcount(mask) > std::popcount(best_mask)) best_mask = mask;
    }
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < n; ++v) {
        if (best_mask & (std::uint32_t{1} << v)) members.push_back(v);
    }
    IndependenceCertificate cert = make_certificate(g, std::move(members));
    cert.optimal = true;
    cert.search_nodes = limit;
    cert.elapsed = since(start);
    return cert;
}

std::vector<std::size_t> witness_indices(const DistanceGraph& g, const IndependenceCertificate& cert) {
    std::vector<std::size_t> out;
    out.reserve(cert.witness.size());
    for (const auto& label : cert.witness) out.push_back(g.index_of_label(label));
    return out;
}

}  // namespace jpm
