#include "fano/singularities.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace fano {

std::vector<Int> hj_expansion(const Int& m, const Int& q) {
    if (m <= 1 || q <= 0 || q >= m || gcd(m, q) != 1)
        throw std::invalid_argument("hj_expansion: need m > 1, 0 < q < m, gcd(m,q) = 1");
    std::vector<Int> bs;
    Int mm = m, qq = q;
    while (qq != 0) {
        Int b = ceil_rat(Rat(mm, qq));
        bs.push_back(b);
        Int next_q = b * qq - mm;
        mm = qq;
        qq = next_q;
    }
    return bs;
}

std::optional<Rat> discrepancy(const CyclicQuotientType& t) {
    if (t.smooth()) return std::nullopt;
    // Resolve the cone spanned by (0,1) and (m,-q): the exceptional rays are
    // u_1..u_r with u_0 = (0,1), u_1 = (1,0), u_{i+1} = b_i*u_i - u_{i-1}.
    std::vector<Int> bs = hj_expansion(t.m, t.q);
    Vec prev{0, 1};
    Vec cur{1, 0};
    // l = ((1+q)/m, 1) is 1 on both generators; discrepancy of a ray w is l(w)-1.
    Rat lx = Rat(1 + t.q) / Rat(t.m);
    std::optional<Rat> best;
    for (size_t i = 0; i <= bs.size(); ++i) {
        if (i > 0) {
            Vec next{bs[i - 1] * cur[0] - prev[0], bs[i - 1] * cur[1] - prev[1]};
            prev = cur;
            cur = next;
        }
        if (i == bs.size()) {
            if (cur != Vec{t.m, -t.q})
                throw std::logic_error("discrepancy: resolution chain did not close");
            break;
        }
        Rat a = lx * Rat(cur[0]) + Rat(cur[1]) - 1;
        if (!best || a < *best) best = a;
    }
    return best;
}

std::optional<TSingularityWitness> is_t_singularity(const CyclicQuotientType& t) {
    if (t.smooth()) return std::nullopt;
    if (t.is_canonical_A()) return TSingularityWitness{t.m, 1, 1, true};
    Int qinv = mod_inverse(t.q, t.m);
    for (Int n = 2; n * n <= t.m; ++n) {
        if (t.m % (n * n) != 0) continue;
        Int d = t.m / (n * n);
        for (Int a = 1; a <= n; ++a) {
            if (gcd(n, a) != 1) continue;
            Int w = mod_pos(d * n * a - 1, t.m);
            if (w == t.q || w == qinv) return TSingularityWitness{d, n, a, false};
        }
    }
    return std::nullopt;
}

std::optional<Int> qg_deformation_dim(const CyclicQuotientType& t) {
    auto w = is_t_singularity(t);
    if (!w) return std::nullopt;
    if (w->canonical_flag) return t.m - 1; // A_k has k deformation parameters
    return w->d;
}

std::vector<std::pair<Int, Int>> invariant_monoid_generators(const CyclicQuotientType& t) {
    std::vector<std::pair<Int, Int>> gens;
    if (t.smooth()) {
        gens.emplace_back(1, 0);
        gens.emplace_back(0, 1);
        return gens;
    }
    const long m = static_cast<long>(t.m);
    const long q = static_cast<long>(t.q);
    // Minimal nonzero monoid elements; all lie in [0,m]^2 because (m,0) and
    // (0,m) belong to the monoid and absorb anything beyond.
    std::vector<std::pair<long, long>> members;
    for (long i = 0; i <= m; ++i)
        for (long j = 0; j <= m; ++j) {
            if (i == 0 && j == 0) continue;
            if ((i + q * j) % m == 0) members.emplace_back(i, j);
        }
    for (const auto& [i, j] : members) {
        bool minimal = true;
        for (const auto& [x, y] : members) {
            if (x == i && y == j) continue;
            if (x <= i && y <= j) {
                minimal = false;
                break;
            }
        }
        if (minimal) gens.emplace_back(i, j);
    }
    return gens;
}

namespace {

// dim O/m_p^k for k = 1..kmax, where O is the invariant ring of 1/m(1,q):
// counts monoid elements that are sums of fewer than k minimal generators.
// Any element with f(s) < k has both coordinates below k*m, since subtracting
// copies of (m,0) or (0,m) shows f(s) >= max(floor(i/m), floor(j/m)).
std::vector<long> samuel_counts(long m, long q, int kmax,
                                const std::vector<std::pair<long, long>>& gens) {
    const long B = static_cast<long>(kmax) * m;
    const long W = B + 1;
    std::vector<int> f(static_cast<size_t>(W) * W, -1);
    auto idx = [W](long i, long j) { return static_cast<size_t>(i) * W + j; };
    std::vector<long> counts(static_cast<size_t>(kmax) + 1, 0); // counts[k] = #{f < k}
    for (long s = 0; s <= 2 * B; ++s) {
        long i_lo = std::max(0L, s - B);
        long i_hi = std::min(B, s);
        for (long i = i_lo; i <= i_hi; ++i) {
            long j = s - i;
            if ((i + q * j) % m != 0) continue;
            int best = (i == 0 && j == 0) ? 0 : -1;
            for (const auto& [gx, gy] : gens) {
                if (gx > i || gy > j) continue;
                int sub = f[idx(i - gx, j - gy)];
                if (sub >= 0 && sub + 1 > best) best = sub + 1;
            }
            if (best < 0) throw std::logic_error("samuel_counts: monoid element with no decomposition");
            f[idx(i, j)] = best;
            for (int k = best + 1; k <= kmax; ++k) ++counts[k];
        }
    }
    return counts;
}

Int multiplicity_oracle(const CyclicQuotientType& t) {
    if (t.m > 300)
        throw std::invalid_argument("multiplicity: group order too large for the oracle");
    const long m = static_cast<long>(t.m);
    const long q = static_cast<long>(t.q);
    std::vector<std::pair<long, long>> gens;
    for (const auto& [i, j] : invariant_monoid_generators(t))
        gens.emplace_back(static_cast<long>(i), static_cast<long>(j));
    for (int kmax : {10, 14, 20}) {
        std::vector<long> counts = samuel_counts(m, q, kmax, gens);
        // The count is eventually a quadratic in k whose second difference is
        // the multiplicity; require three stable consecutive differences.
        std::vector<long> dd;
        for (int k = 1; k + 2 <= kmax; ++k)
            dd.push_back(counts[k + 2] - 2 * counts[k + 1] + counts[k]);
        size_t r = dd.size();
        if (r >= 3 && dd[r - 1] == dd[r - 2] && dd[r - 2] == dd[r - 3] && dd[r - 1] > 0)
            return Int(dd[r - 1]);
    }
    throw std::logic_error("multiplicity: Hilbert-Samuel counts did not stabilize");
}

} // namespace

Int multiplicity(const CyclicQuotientType& t) {
    if (t.smooth()) return 1;
    static std::mutex cache_mutex;
    static std::map<std::pair<Int, Int>, Int> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({t.m, t.q});
        if (it != cache.end()) return it->second;
    }
    Int result = multiplicity_oracle(t);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::make_pair(t.m, t.q), result);
    return result;
}

SingularityReport classify_edges(const FanoPolytope& P) {
    if (P.dim() != 2) throw std::invalid_argument("classify_edges: 2D only");
    const auto& V = P.vertices();
    const size_t n = V.size();
    SingularityReport report;
    for (size_t i = 0; i < n; ++i) {
        SingularityEntry e;
        e.edge_index = static_cast<int>(i);
        e.type = cone_normal_form(V[i], V[(i + 1) % n]);
        e.discrepancy = discrepancy(e.type);
        e.t_witness = is_t_singularity(e.type);
        e.multiplicity = multiplicity(e.type);
        e.qg_def_dim = qg_deformation_dim(e.type);
        if (e.type.m > report.gamma_max) report.gamma_max = e.type.m;
        if (e.discrepancy &&
            (!report.min_discrepancy || *e.discrepancy < *report.min_discrepancy))
            report.min_discrepancy = e.discrepancy;
        report.entries.push_back(std::move(e));
    }
    return report;
}

bool SingularityReport::all_t_or_smooth() const {
    for (const auto& e : entries)
        if (!e.type.smooth() && !e.t_witness) return false;
    return true;
}

Int SingularityReport::max_multiplicity() const {
    Int mx = 1;
    for (const auto& e : entries)
        if (e.multiplicity > mx) mx = e.multiplicity;
    return mx;
}

bool mumford_instability(const SingularityReport& report, int complex_dim) {
    Int bound = factorial(complex_dim + 1);
    return report.max_multiplicity() > bound;
}

} // namespace fano
