#include "qwa/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace qwa {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::vector<Elem>> middle_perms(int n) {
    // permutations of [0, n) fixing 0 and n-1
    std::vector<Elem> mid;
    for (Elem x = 1; x < n - 1; ++x) mid.push_back(x);
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> img = mid;
    do {
        std::vector<Elem> pi(n);
        pi[0] = 0;
        if (n > 1) pi[n - 1] = n - 1;
        for (size_t i = 0; i < mid.size(); ++i) pi[mid[i]] = img[i];
        out.push_back(std::move(pi));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::vector<Elem> apply_perm(const std::vector<Elem>& tbl, const std::vector<Elem>& pi, int n) {
    std::vector<Elem> out(n * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) out[pi[x] * n + pi[y]] = pi[tbl[x * n + y]];
    return out;
}

// all involutions of the middle elements, deterministic order (fix-first)
void gen_involutions(std::vector<Elem>& sigma, std::vector<Elem> left,
                     std::vector<std::vector<Elem>>& out) {
    if (left.empty()) {
        out.push_back(sigma);
        return;
    }
    Elem m = left.front();
    left.erase(left.begin());
    sigma[m] = m;
    gen_involutions(sigma, left, out);
    for (size_t i = 0; i < left.size(); ++i) {
        Elem p = left[i];
        sigma[m] = p;
        sigma[p] = m;
        std::vector<Elem> rest = left;
        rest.erase(rest.begin() + i);
        gen_involutions(sigma, rest, out);
        sigma[p] = p;
    }
}

std::vector<std::vector<Elem>> star_involutions(int n) {
    std::vector<Elem> sigma(n);
    sigma[0] = n - 1;
    sigma[n - 1] = 0;
    std::vector<Elem> mid;
    for (Elem x = 1; x < n - 1; ++x) mid.push_back(x);
    std::vector<std::vector<Elem>> out;
    gen_involutions(sigma, mid, out);
    return out;
}

bool involutive_class(AlgClass c) {
    switch (c) {
        case AlgClass::InvolutiveBe:
        case AlgClass::Wajsberg:
        case AlgClass::Qw:
        case AlgClass::Pqmv:
        case AlgClass::QmvOplus:
        case AlgClass::MBe:
        case AlgClass::SAlgebra:
        case AlgClass::QuasiLinear: return true;
        default: return false;
    }
}

bool qw_family(AlgClass c) {
    return c == AlgClass::Qw || c == AlgClass::Pqmv || c == AlgClass::QmvOplus ||
           c == AlgClass::QuasiLinear;
}

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> aborted{false};
    std::uint64_t node_budget = 0;
    bool have_deadline = false;
    Clock::time_point deadline;
};

struct Dfs {
    int n = 0;
    AlgClass cls = AlgClass::Qw;
    bool involutive = false;
    const std::vector<Elem>* sigma = nullptr;  // involutive path only
    std::vector<Elem> tbl;                     // n*n, -1 unassigned
    std::vector<int> cells;                    // primary free cells, row-major
    std::vector<int> partner;                  // mirrored cell per primary (may equal it)
    const std::vector<std::vector<Elem>>* perms = nullptr;
    Shared* shared = nullptr;
    std::vector<FiniteAlgebra>* out = nullptr;
    std::uint64_t local_nodes = 0;

    Elem at(Elem x, Elem y) const { return tbl[x * n + y]; }

    // lazy meet through the fixed star map; -1 when not yet determined
    Elem lazy_meet(Elem x, Elem y) const {
        const auto& sg = *sigma;
        Elem m1 = at(sg[x], sg[y]);
        if (m1 < 0) return -1;
        Elem m2 = at(m1, sg[y]);
        if (m2 < 0) return -1;
        return sg[m2];
    }

    bool be4_ok() const {
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y)
                for (Elem z = 0; z < n; ++z) {
                    Elem t1 = at(y, z);
                    if (t1 < 0) continue;
                    Elem l = at(x, t1);
                    if (l < 0) continue;
                    Elem t2 = at(x, z);
                    if (t2 < 0) continue;
                    Elem r = at(y, t2);
                    if (r < 0) continue;
                    if (l != r) return false;
                }
        return true;
    }

    bool qw_ok() const {
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y) {
                Elem xy = lazy_meet(x, y);
                Elem r1 = at(x, y);
                for (Elem z = 0; z < n; ++z) {
                    if (xy < 0) break;
                    Elem zx = lazy_meet(z, x);
                    if (zx < 0) continue;
                    Elem inner = lazy_meet(xy, zx);
                    if (inner < 0) continue;
                    Elem lhs = at(x, inner);
                    if (lhs < 0) continue;
                    if (r1 < 0) continue;
                    Elem r2 = at(x, z);
                    if (r2 < 0) continue;
                    Elem rhs = lazy_meet(r1, r2);
                    if (rhs < 0) continue;
                    if (lhs != rhs) return false;
                }
            }
        return true;
    }

    bool comm_ok() const {
        for (Elem x = 0; x < n; ++x)
            for (Elem y = x + 1; y < n; ++y) {
                Elem t1 = at(x, y);
                Elem t2 = at(y, x);
                if (t1 < 0 || t2 < 0) continue;
                Elem l = at(t1, y);
                Elem r = at(t2, x);
                if (l < 0 || r < 0) continue;
                if (l != r) return false;
            }
        return true;
    }

    bool bck_ok() const {
        const Elem one = n - 1;
        for (Elem x = 0; x < n; ++x)
            for (Elem y = x + 1; y < n; ++y) {
                Elem t1 = at(x, y), t2 = at(y, x);
                if (t1 == one && t2 == one) return false;  // antisymmetry
            }
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y) {
                Elem xy = at(x, y);
                if (xy < 0) continue;
                for (Elem z = 0; z < n; ++z) {
                    Elem yz = at(y, z);
                    if (yz < 0) continue;
                    Elem xz = at(x, z);
                    if (xz < 0) continue;
                    Elem inner = at(yz, xz);
                    if (inner < 0) continue;
                    Elem v = at(xy, inner);
                    if (v < 0) continue;
                    if (v != one) return false;
                }
            }
        return true;
    }

    bool constraints_ok() const {
        if (!be4_ok()) return false;
        if (involutive && qw_family(cls) && !qw_ok()) return false;
        if ((cls == AlgClass::Wajsberg || cls == AlgClass::CommutativeBe) && !comm_ok())
            return false;
        if (cls == AlgClass::Bck && !bck_ok()) return false;
        return true;
    }

    // true when some middle permutation makes the (determined prefix of the)
    // table lexicographically smaller, i.e. no completion can be canonical
    bool provably_noncanonical() const {
        for (const auto& pi : *perms) {
            bool identity = true;
            for (Elem x = 0; x < n && identity; ++x)
                if (pi[x] != x) identity = false;
            if (identity) continue;
            // inverse of pi
            std::vector<Elem> inv(n);
            for (Elem x = 0; x < n; ++x) inv[pi[x]] = x;
            for (int p = 0; p < n * n; ++p) {
                Elem x = p / n, y = p % n;
                Elem a = at(x, y);
                if (a < 0) break;
                Elem raw = at(inv[x], inv[y]);
                if (raw < 0) break;
                Elem b = pi[raw];
                if (a != b) {
                    if (a > b) return true;
                    break;
                }
            }
        }
        return false;
    }

    bool canonical_complete() const {
        for (const auto& pi : *perms) {
            auto img = apply_perm(tbl, pi, n);
            if (std::lexicographical_compare(img.begin(), img.end(), tbl.begin(), tbl.end()))
                return false;
        }
        return true;
    }

    bool tick() {
        ++local_nodes;
        auto total = shared->nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (total >= shared->node_budget) shared->aborted.store(true);
        if (local_nodes % 1024 == 0 && shared->have_deadline && Clock::now() > shared->deadline)
            shared->aborted.store(true);
        return !shared->aborted.load(std::memory_order_relaxed);
    }

    void assign(size_t k, Elem v) {
        tbl[cells[k]] = v;
        tbl[partner[k]] = v;
    }
    void unassign(size_t k) {
        tbl[cells[k]] = -1;
        tbl[partner[k]] = -1;
    }

    void run(size_t k) {
        if (!tick()) return;
        if (k == cells.size()) {
            leaf();
            return;
        }
        for (Elem v = 0; v < n; ++v) {
            assign(k, v);
            if (constraints_ok() && !provably_noncanonical()) run(k + 1);
            unassign(k);
            if (shared->aborted.load(std::memory_order_relaxed)) return;
        }
    }

    void leaf() {
        if (!canonical_complete()) return;
        FiniteAlgebra a = make_algebra(n, generated_names(n), tbl, n - 1, 0);
        if (!check_class(a, cls).pass) return;
        out->push_back(std::move(a));
    }
};

// forced cells shared by every class (zero = 0, one = n-1)
std::vector<Elem> base_table(int n) {
    std::vector<Elem> tbl(n * n, -1);
    const Elem one = n - 1;
    for (Elem y = 0; y < n; ++y) tbl[0 * n + y] = one;       // bottom row
    for (Elem y = 0; y < n; ++y) tbl[one * n + y] = y;       // unit row
    for (Elem x = 0; x < n; ++x) tbl[x * n + one] = one;     // unit column
    for (Elem x = 0; x < n; ++x) tbl[x * n + x] = one;       // diagonal
    return tbl;
}

struct Task {
    std::vector<Elem> tbl;
    std::vector<int> cells;
    std::vector<int> partner;
    const std::vector<Elem>* sigma = nullptr;
    std::vector<Elem> sigma_store;
    std::vector<std::pair<size_t, Elem>> preset;  // cell index -> value
};

}  // namespace

CanonicalKey canonical_key(const FiniteAlgebra& a) {
    const int n = a.n;
    // normalize: zero to position 0, one to position n-1, middles in every order
    std::vector<Elem> mid_old;
    for (Elem x = 0; x < n; ++x)
        if (x != a.zero && x != a.one) mid_old.push_back(x);
    std::vector<Elem> slots;
    for (Elem x = 1; x < n - 1; ++x) slots.push_back(x);

    CanonicalKey best;
    best.n = n;
    std::vector<int> order(mid_old.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    bool first = true;
    do {
        std::vector<Elem> pi(n);
        pi[a.zero] = 0;
        pi[a.one] = n - 1;
        for (size_t i = 0; i < mid_old.size(); ++i) pi[mid_old[i]] = slots[order[i]];
        auto img = apply_perm(a.imp, pi, n);
        if (first || img < best.table) {
            best.table = std::move(img);
            first = false;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

std::string format_key(const CanonicalKey& k) {
    std::ostringstream out;
    out << "n=" << k.n << ':';
    for (size_t i = 0; i < k.table.size(); ++i) {
        if (i) out << ',';
        out << k.table[i];
    }
    return out.str();
}

std::optional<std::vector<Elem>> isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                            bool fix_designated) {
    if (a.n != b.n) return std::nullopt;
    const int n = a.n;
    std::vector<Elem> pi(n);
    for (Elem x = 0; x < n; ++x) pi[x] = x;
    do {
        if (fix_designated && (pi[a.one] != b.one || pi[a.zero] != b.zero)) continue;
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x)
            for (Elem y = 0; y < n && ok; ++y)
                if (pi[a.imp[x * n + y]] != b.imp[pi[x] * n + pi[y]]) ok = false;
        if (ok) return pi;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return std::nullopt;
}

ModelStream enumerate_models(const SearchSpec& spec) {
    ModelStream ms;
    ms.spec = spec;
    const int n = spec.size;
    if (n < 1) throw std::invalid_argument("size must be positive");

    if (n == 1) {
        FiniteAlgebra a = make_algebra(1, generated_names(1), {0}, 0, 0);
        if (check_class(a, spec.cls).pass) ms.models.push_back(std::move(a));
        return ms;
    }

    Shared shared;
    shared.node_budget = spec.node_budget == 0 ? ~0ull : spec.node_budget;
    if (spec.time_budget_seconds > 0) {
        shared.have_deadline = true;
        shared.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(spec.time_budget_seconds));
    }

    const auto perms = middle_perms(n);
    const bool invol = involutive_class(spec.cls);
    std::vector<Task> tasks;

    auto split_first_cell = [&](Task proto) {
        if (proto.cells.empty()) {
            tasks.push_back(std::move(proto));
            return;
        }
        for (Elem v = 0; v < n; ++v) {
            Task t = proto;
            t.preset.push_back({0, v});
            tasks.push_back(std::move(t));
        }
    };

    if (invol) {
        for (const auto& sigma : star_involutions(n)) {
            Task t;
            t.sigma_store = sigma;
            t.tbl = base_table(n);
            for (Elem x = 1; x < n - 1; ++x) t.tbl[x * n + 0] = sigma[x];  // star column
            for (Elem x = 1; x < n - 1; ++x)
                for (Elem y = 1; y < n - 1; ++y) {
                    if (x == y) continue;
                    int flat = x * n + y;
                    int mirror = sigma[y] * n + sigma[x];
                    if (flat <= mirror) {
                        t.cells.push_back(flat);
                        t.partner.push_back(mirror);
                    }
                }
            split_first_cell(std::move(t));
        }
    } else {
        Task t;
        t.tbl = base_table(n);
        for (Elem x = 1; x < n - 1; ++x)
            for (Elem y = 0; y < n - 1; ++y) {
                if (x == y) continue;
                t.cells.push_back(x * n + y);
                t.partner.push_back(x * n + y);
            }
        split_first_cell(std::move(t));
    }

    std::vector<std::vector<FiniteAlgebra>> results(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            if (shared.aborted.load()) continue;  // keep draining the queue
            const Task& task = tasks[i];
            Dfs dfs;
            dfs.n = n;
            dfs.cls = spec.cls;
            dfs.involutive = invol;
            dfs.sigma = &task.sigma_store;
            dfs.tbl = task.tbl;
            dfs.cells = task.cells;
            dfs.partner = task.partner;
            dfs.perms = &perms;
            dfs.shared = &shared;
            dfs.out = &results[i];
            size_t start = 0;
            bool viable = true;
            for (auto [k, v] : task.preset) {
                dfs.assign(k, v);
                start = k + 1;
                if (!dfs.constraints_ok() || dfs.provably_noncanonical()) viable = false;
            }
            if (viable) dfs.run(start);
        }
    };

    int nworkers = std::max(1, spec.workers);
    if (nworkers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nworkers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (auto& r : results)
        for (auto& a : r) ms.models.push_back(std::move(a));
    std::sort(ms.models.begin(), ms.models.end(),
              [](const FiniteAlgebra& a, const FiniteAlgebra& b) { return a.imp < b.imp; });
    // canonical filtering already deduplicates; drop accidental repeats anyway
    ms.models.erase(std::unique(ms.models.begin(), ms.models.end(),
                                [](const FiniteAlgebra& a, const FiniteAlgebra& b) {
                                    return a.imp == b.imp;
                                }),
                    ms.models.end());
    ms.complete = !shared.aborted.load();
    ms.nodes_explored = shared.nodes.load();
    return ms;
}

RefuteResult find_countermodel(const Statement& stmt, AlgClass cls, int max_n,
                               const SearchSpec& limits) {
    RefuteResult res;
    for (int n = 1; n <= max_n; ++n) {
        SearchSpec spec = limits;
        spec.size = n;
        spec.cls = cls;
        ModelStream ms = enumerate_models(spec);
        res.nodes_explored += ms.nodes_explored;
        res.sizes_checked = n;
        if (!ms.complete) {
            res.complete = false;
            return res;
        }
        for (const FiniteAlgebra& a : ms.models) {
            HoldsResult h = holds(a, stmt);
            if (!h.holds) {
                res.counter = Countermodel{a, h.witness};
                return res;
            }
        }
    }
    return res;
}

std::uint64_t content_hash(const FiniteAlgebra& a) {
    std::string text = format_algebra(a);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string format_hash(std::uint64_t h) {
    static const char* hex = "0123456789abcdef";
    std::string out = "fnv1a:";
    for (int i = 15; i >= 0; --i) out += hex[(h >> (4 * i)) & 0xf];
    return out;
}

}  // namespace qwa
