#include <algorithm>
#include <bit>
#include <unordered_set>

#include "oa/error.hpp"
#include "oa/hilbert.hpp"
#include "oa/model_matrix.hpp"

namespace oa {

ConeSystem::ConeSystem(IntMatrix a, std::vector<std::size_t> forced_zero)
    : a_(std::move(a)), forced_zero_(std::move(forced_zero)) {
    const std::size_t N = a_.cols();
    if (N == 0 || !std::has_single_bit(N)) throw DimensionError("cone system needs 2^n variables");
    n_ = std::countr_zero(N);
    check_factor_count(n_);
    for (auto v : a_.data())
        if (v != 1 && v != -1) throw ParameterError("cone system matrix entries must be -1 or +1");
    std::sort(forced_zero_.begin(), forced_zero_.end());
    forced_zero_.erase(std::unique(forced_zero_.begin(), forced_zero_.end()), forced_zero_.end());
    if (!forced_zero_.empty() && forced_zero_.back() >= N)
        throw DimensionError("forced-zero index " + std::to_string(forced_zero_.back()) +
                             " out of range [0, " + std::to_string(N) + ")");
}

ConeSystem ConeSystem::for_design(int n, int m, std::vector<std::size_t> forced_zero) {
    return from_model(build_model_matrix(n, m), std::move(forced_zero));
}

ConeSystem ConeSystem::from_model(const ModelMatrix& m, std::vector<std::size_t> forced_zero) {
    return ConeSystem(m.transposed(), std::move(forced_zero));
}

bool ConeSystem::is_forced_zero(std::size_t i) const {
    return std::binary_search(forced_zero_.begin(), forced_zero_.end(), i);
}

std::vector<std::size_t> ConeSystem::active_coordinates() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < variables(); ++i)
        if (!is_forced_zero(i)) out.push_back(i);
    return out;
}

HilbertBasis::HilbertBasis(ConeSystem system, std::vector<ReplicateVector> elements)
    : system_(std::move(system)), elements_(std::move(elements)) {
    for (const auto& e : elements_)
        if (e.size() != system_.variables()) throw DimensionError("basis element length mismatch");
    std::sort(elements_.begin(), elements_.end());
}

bool HilbertBasis::contains(const ReplicateVector& v) const {
    return std::binary_search(elements_.begin(), elements_.end(), v);
}

bool is_member(const ConeSystem& system, const ReplicateVector& v) {
    if (v.size() != system.variables())
        throw DimensionError("vector length " + std::to_string(v.size()) + " != " +
                             std::to_string(system.variables()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) return false;
        if (v[i] != 0 && system.is_forced_zero(i)) return false;
    }
    const IntMatrix& a = system.matrix();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::int64_t s = 0;
        for (std::size_t c = 0; c < a.cols(); ++c) s = checked_add(s, checked_mul(a(r, c), v[c]));
        if (s != 0) return false;
    }
    return true;
}

std::vector<ReplicateVector> minimal_elements(std::vector<ReplicateVector> vs) {
    std::erase_if(vs, [](const ReplicateVector& v) { return v.is_zero(); });
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    // A dominating vector has a strictly larger total, so scanning by total
    // only needs to look at the already-accepted smaller ones.
    std::vector<std::pair<std::int64_t, std::size_t>> by_total;
    for (std::size_t i = 0; i < vs.size(); ++i) by_total.emplace_back(vs[i].total(), i);
    std::sort(by_total.begin(), by_total.end());
    std::vector<std::size_t> kept;
    for (const auto& [t, i] : by_total) {
        bool dominated = false;
        for (auto k : kept)
            if (vs[k].dominated_by(vs[i])) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(i);
    }
    std::vector<ReplicateVector> out;
    out.reserve(kept.size());
    for (auto k : kept) out.push_back(vs[k]);
    std::sort(out.begin(), out.end());
    return out;
}

BasisCheck check_basis(const HilbertBasis& basis) {
    BasisCheck chk;
    const auto& el = basis.elements();
    for (std::size_t i = 0; i < el.size(); ++i) {
        if (el[i].is_zero()) ++chk.zero_elements;
        if (!is_member(basis.system(), el[i])) ++chk.non_members;
        if (i > 0) {
            if (el[i - 1] == el[i]) ++chk.duplicates;
            if (el[i] < el[i - 1]) chk.sorted = false;
        }
    }
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = 0; j < el.size(); ++j)
            if (i != j && el[i] != el[j] && el[i].dominated_by(el[j])) ++chk.dominated_pairs;
    return chk;
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

class Decomposer {
public:
    explicit Decomposer(const HilbertBasis& basis) : basis_(basis) {
        for (std::size_t i = 0; i < basis.size(); ++i) order_.push_back(i);
        // Largest total first.
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            return basis[a].total() > basis[b].total();
        });
        mult_.assign(basis.size(), 0);
    }

    bool run(std::vector<std::int64_t>& rem) {
        if (std::all_of(rem.begin(), rem.end(), [](std::int64_t x) { return x == 0; })) return true;
        if (failed_.count(rem)) return false;
        for (auto i : order_) {
            const auto c = basis_[i].counts();
            bool fits = true;
            for (std::size_t k = 0; k < rem.size(); ++k)
                if (c[k] > rem[k]) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            for (std::size_t k = 0; k < rem.size(); ++k) rem[k] -= c[k];
            ++mult_[i];
            if (run(rem)) return true;
            --mult_[i];
            for (std::size_t k = 0; k < rem.size(); ++k) rem[k] += c[k];
        }
        failed_.insert(rem);
        return false;
    }

    std::vector<std::int64_t> multipliers() const { return mult_; }

private:
    const HilbertBasis& basis_;
    std::vector<std::size_t> order_;
    std::vector<std::int64_t> mult_;
    std::unordered_set<std::vector<std::int64_t>, VecHash> failed_;
};

}  // namespace

std::optional<std::vector<std::int64_t>> decompose(const HilbertBasis& basis, const ReplicateVector& v) {
    if (!is_member(basis.system(), v)) throw ParameterError("vector is not a member of the cone");
    std::vector<std::int64_t> rem(v.counts().begin(), v.counts().end());
    Decomposer dec(basis);
    if (!dec.run(rem)) return std::nullopt;
    return dec.multipliers();
}

}  // namespace oa
