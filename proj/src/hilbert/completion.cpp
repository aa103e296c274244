// Contejean-Devie completion, breadth first by total.
//
// The frontier at level t holds vectors of total t. A vector with zero
// defect A x is a solution and leaves the frontier; otherwise x + e_j is
// generated only when <A x, A e_j> < 0 and x + e_j dominates no solution
// found so far. Because levels are processed in order of total, every
// solution emitted is minimal.
//
// Each frontier record is x followed by g = A^t A x, so <A x, A e_j> = g_j
// and the successor's record is an O(vars) update with one Gram row.

#include <algorithm>
#include <cstring>
#include <numeric>

#include "hilbert/kernels.hpp"
#include "oa/error.hpp"

namespace oa::detail {

namespace {

class Frontier {
public:
    explicit Frontier(std::size_t vars) : vars_(vars), width_(2 * vars) {}

    std::size_t size() const { return data_.size() / width_; }
    const std::int32_t* x(std::size_t i) const { return data_.data() + i * width_; }
    const std::int32_t* g(std::size_t i) const { return x(i) + vars_; }
    std::int32_t* append() {
        data_.resize(data_.size() + width_);
        return data_.data() + data_.size() - width_;
    }
    void append_all(const Frontier& o) { data_.insert(data_.end(), o.data_.begin(), o.data_.end()); }
    void clear() { data_.clear(); }

    // Sort by x and drop repeats; g is a function of x.
    void canonicalize() {
        const std::size_t n = size();
        std::vector<std::uint32_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0u);
        const std::size_t bytes = vars_ * sizeof(std::int32_t);
        std::sort(idx.begin(), idx.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return std::memcmp(x(a), x(b), bytes) < 0; });
        std::vector<std::int32_t> out;
        out.reserve(data_.size());
        for (std::size_t k = 0; k < n; ++k) {
            if (k > 0 && std::memcmp(x(idx[k]), x(idx[k - 1]), bytes) == 0) continue;
            out.insert(out.end(), x(idx[k]), x(idx[k]) + width_);
        }
        data_.swap(out);
    }

private:
    std::size_t vars_, width_;
    std::vector<std::int32_t> data_;
};

struct Gram {
    std::size_t vars;
    std::vector<std::int32_t> g;  // vars x vars
    explicit Gram(const ActiveSystem& sys) : vars(sys.vars), g(sys.vars * sys.vars) {
        for (std::size_t i = 0; i < vars; ++i)
            for (std::size_t j = 0; j < vars; ++j) {
                std::int32_t s = 0;
                for (std::size_t r = 0; r < sys.cons; ++r) s += sys.column(i)[r] * sys.column(j)[r];
                g[i * vars + j] = s;
            }
    }
    const std::int32_t* row(std::size_t j) const { return g.data() + j * vars; }
};

bool solved(const std::int32_t* x, const std::int32_t* g, std::size_t vars) {
    // |A x|^2 = x . g
    std::int64_t s = 0;
    for (std::size_t i = 0; i < vars; ++i) s += static_cast<std::int64_t>(x[i]) * g[i];
    return s == 0;
}

bool dominates_any(const std::int32_t* y, const std::vector<Vec>& solutions) {
    for (const Vec& b : solutions) {
        bool ge = true;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (y[i] < b[i]) {
                ge = false;
                break;
            }
        if (ge) return true;
    }
    return false;
}

void expand(const Gram& gram, const std::int32_t* x, const std::int32_t* g, const std::vector<Vec>& solutions,
            Frontier& out, std::vector<std::int32_t>& y) {
    const std::size_t V = gram.vars;
    for (std::size_t j = 0; j < V; ++j) {
        if (g[j] >= 0) continue;
        std::copy(x, x + V, y.begin());
        ++y[j];
        if (dominates_any(y.data(), solutions)) continue;
        std::int32_t* rec = out.append();
        std::copy(y.begin(), y.end(), rec);
        const std::int32_t* gj = gram.row(j);
        for (std::size_t i = 0; i < V; ++i) rec[V + i] = g[i] + gj[i];
    }
}

Frontier initial(const Gram& gram) {
    const std::size_t V = gram.vars;
    Frontier f(V);
    for (std::size_t j = 0; j < V; ++j) {
        std::int32_t* rec = f.append();
        std::fill(rec, rec + V, 0);
        rec[j] = 1;
        std::copy(gram.row(j), gram.row(j) + V, rec + V);
    }
    return f;
}

void check_level(std::size_t level) {
    // Entries and Gram products stay below level * vars; keep well inside int32.
    if (level > (1u << 20)) throw OverflowError("completion level exceeds 32-bit working range");
}

Vec to_vec(const std::int32_t* x, std::size_t vars) { return Vec(x, x + vars); }

}  // namespace

std::vector<Vec> completion_serial(const ActiveSystem& sys, RunControl& rc) {
    const Gram gram(sys);
    const std::size_t V = sys.vars;
    std::vector<Vec> solutions;
    Frontier frontier = initial(gram);
    std::vector<std::int32_t> y(V);
    for (std::size_t level = 1; frontier.size() > 0; ++level) {
        check_level(level);
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            if (solved(frontier.x(i), frontier.g(i), V))
                solutions.push_back(to_vec(frontier.x(i), V));
            else
                open.push_back(i);
        }
        rc.set_found(solutions.size());
        Frontier next(V);
        for (std::size_t i : open) expand(gram, frontier.x(i), frontier.g(i), solutions, next, y);
        next.canonicalize();
        rc.charge(next.size());
        rc.check(next.size());
        rc.report("completion", level, next.size());
        frontier = std::move(next);
    }
    std::sort(solutions.begin(), solutions.end());
    return solutions;
}

std::vector<Vec> completion_parallel(const ActiveSystem& sys, RunControl& rc) {
    const Gram gram(sys);
    const std::size_t V = sys.vars;
    std::vector<Vec> solutions;
    Frontier frontier = initial(gram);
    constexpr std::size_t kChunk = 4096;
    for (std::size_t level = 1; frontier.size() > 0; ++level) {
        check_level(level);
        const std::size_t n = frontier.size();
        std::vector<char> done(n, 0);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
            const auto k = static_cast<std::size_t>(i);
            done[k] = solved(frontier.x(k), frontier.g(k), V) ? 1 : 0;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (done[i]) solutions.push_back(to_vec(frontier.x(i), V));
        rc.set_found(solutions.size());

        // Fixed chunks expanded independently, then joined in chunk order.
        const std::size_t chunks = (n + kChunk - 1) / kChunk;
        std::vector<Frontier> parts(chunks, Frontier(V));
#pragma omp parallel
        {
            std::vector<std::int32_t> y(V);
#pragma omp for schedule(dynamic, 1)
            for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
                const std::size_t lo = static_cast<std::size_t>(c) * kChunk, hi = std::min(n, lo + kChunk);
                for (std::size_t i = lo; i < hi; ++i)
                    if (!done[i]) expand(gram, frontier.x(i), frontier.g(i), solutions, parts[static_cast<std::size_t>(c)], y);
            }
        }
        Frontier next(V);
        for (auto& p : parts) next.append_all(p);
        next.canonicalize();
        rc.charge(next.size());
        rc.check(next.size());
        rc.report("completion", level, next.size());
        frontier = std::move(next);
    }
    std::sort(solutions.begin(), solutions.end());
    return solutions;
}

}  // namespace oa::detail
