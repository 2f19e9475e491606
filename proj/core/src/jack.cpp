#include "kepler/jack.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "kepler/dimension.hpp"
#include "kepler/errors.hpp"
#include "kepler/gamma.hpp"

namespace kepler {

DiagonalPoint::DiagonalPoint(std::vector<double> t_, Domain d) : t(std::move(t_)), domain(d) {
    if (t.empty()) throw domain_error("DiagonalPoint: empty eigenvalue vector");
    for (double x : t) {
        if (d == Domain::Cone && !(x > 0.0))
            throw domain_error("DiagonalPoint: cone point needs t_i > 0");
        if (d == Domain::Bounded && !(x > 0.0 && x < 1.0))
            throw domain_error("DiagonalPoint: bounded point needs 0 < t_i < 1");
    }
}

double DiagonalPoint::sum() const {
    double s = 0.0;
    for (double x : t) s += x;
    return s;
}

double DiagonalPoint::product() const {
    double p = 1.0;
    for (double x : t) p *= x;
    return p;
}

double DiagonalPoint::max_abs() const {
    double m = 0.0;
    for (double x : t) m = std::max(m, std::fabs(x));
    return m;
}

DiagonalPoint DiagonalPoint::cone(std::vector<double> t) {
    return DiagonalPoint(std::move(t), Domain::Cone);
}
DiagonalPoint DiagonalPoint::bounded(std::vector<double> t) {
    return DiagonalPoint(std::move(t), Domain::Bounded);
}
DiagonalPoint DiagonalPoint::free(std::vector<double> t) {
    return DiagonalPoint(std::move(t), Domain::Free);
}

// ---------------------------------------------------------------------------
// Jack polynomial machinery.
//
// P_mu^{(alpha)} is expanded in monomial symmetric functions; the
// coefficients satisfy the classical eigenfunction recurrence of the
// Laplace-Beltrami-type operator
//   D = (alpha/2) sum_i x_i^2 d_i^2 + sum_{i != j} x_i^2/(x_i - x_j) d_i,
// with eigenvalue e_mu = (alpha/2) sum m_i(m_i-1) + sum_i (n-i) m_i:
//   (e_kappa - e_nu) c_nu = sum_{moves} ((nu_i + t) - (nu_j - t)) c_mu,
// the sum running over all pairs i < j and t >= 1 such that moving t boxes
// from row j to row i of nu, after sorting, lands on a partition mu with
// nu < mu <= kappa in dominance order.  c_kappa = 1 (monic normalization).
// ---------------------------------------------------------------------------

namespace {

struct CoeffTable {
    // lex-descending partitions of |kappa| dominated by kappa, parallel coeffs
    std::vector<Partition> nus;
    std::vector<double> coeffs;
    size_t bytes() const {
        size_t b = 0;
        for (const auto& p : nus) b += sizeof(Partition) + p.parts().capacity() * sizeof(int);
        return b + coeffs.capacity() * sizeof(double) + 64;
    }
};

struct TableKey {
    Partition kappa;
    int n;
    double alpha;
    bool operator==(const TableKey& o) const {
        return n == o.n && alpha == o.alpha && kappa == o.kappa;
    }
};

struct TableKeyHash {
    size_t operator()(const TableKey& k) const {
        size_t h = PartitionHash{}(k.kappa);
        h ^= std::hash<int>{}(k.n) + 0x9e3779b9 + (h << 6) + (h >> 2);
        h ^= std::hash<double>{}(k.alpha) + 0x9e3779b9 + (h << 6) + (h >> 2);
        return h;
    }
};

struct ValueKey {
    Partition kappa;
    int n;
    double alpha;
    std::vector<double> point;
    bool operator==(const ValueKey& o) const {
        return n == o.n && alpha == o.alpha && point == o.point && kappa == o.kappa;
    }
};

struct ValueKeyHash {
    size_t operator()(const ValueKey& k) const {
        size_t h = TableKeyHash{}(TableKey{k.kappa, k.n, k.alpha});
        for (double x : k.point) {
            size_t bits;
            std::memcpy(&bits, &x, sizeof(bits));
            h ^= bits + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

class JackCache {
public:
    static JackCache& instance() {
        static JackCache c;
        return c;
    }

    JackCache() {
        if (const char* env = std::getenv("CACHE_MB")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v > 0) budget_bytes_ = size_t(v) << 20;
        }
    }

    std::shared_ptr<const CoeffTable> find_table(const TableKey& k) {
        std::shared_lock lock(mutex_);
        auto it = tables_.find(k);
        return it == tables_.end() ? nullptr : it->second;
    }

    std::shared_ptr<const CoeffTable> store_table(const TableKey& k,
                                                  std::shared_ptr<CoeffTable> t) {
        std::unique_lock lock(mutex_);
        evict_if_needed();
        auto [it, inserted] = tables_.try_emplace(k, std::move(t));
        if (inserted) bytes_ += it->second->bytes();
        return it->second;
    }

    bool find_value(const ValueKey& k, double& out) {
        std::shared_lock lock(mutex_);
        auto it = values_.find(k);
        if (it == values_.end()) return false;
        out = it->second;
        return true;
    }

    void store_value(const ValueKey& k, double v) {
        std::unique_lock lock(mutex_);
        bytes_ += 64 + k.point.size() * sizeof(double) + k.kappa.length() * sizeof(int);
        evict_if_needed();
        values_.emplace(k, v);
    }

    JackCacheStats stats() {
        std::shared_lock lock(mutex_);
        return JackCacheStats{tables_.size(), values_.size(), bytes_};
    }

    void set_budget_mb(size_t mb) {
        std::unique_lock lock(mutex_);
        budget_bytes_ = mb << 20;
    }

    void clear() {
        std::unique_lock lock(mutex_);
        tables_.clear();
        values_.clear();
        bytes_ = 0;
    }

private:
    // Wholesale drop keeps the policy deterministic and the bookkeeping
    // trivial; recomputation is cheap relative to a thrashing heuristic.
    void evict_if_needed() {
        if (bytes_ <= budget_bytes_) return;
        tables_.clear();
        values_.clear();
        bytes_ = 0;
    }

    std::shared_mutex mutex_;
    std::unordered_map<TableKey, std::shared_ptr<CoeffTable>, TableKeyHash> tables_;
    std::unordered_map<ValueKey, double, ValueKeyHash> values_;
    size_t bytes_ = 0;
    size_t budget_bytes_ = size_t(256) << 20;
};

double eigenvalue(const std::vector<int>& parts, int n, double alpha) {
    double e = 0.0;
    for (size_t i = 0; i < parts.size(); ++i) {
        double m = parts[i];
        e += 0.5 * alpha * m * (m - 1.0) + (n - 1.0 - double(i)) * m;
    }
    return e;
}

std::shared_ptr<CoeffTable> build_table(const Partition& kappa, int n, double alpha) {
    auto table = std::make_shared<CoeffTable>();
    const int w = kappa.weight();
    for (const auto& nu : partitions_of_weight(w, n)) {
        if (nu.dominated_by(kappa)) table->nus.push_back(nu);
    }
    // lex descending = every dominance-predecessor precedes its successors
    std::sort(table->nus.begin(), table->nus.end(),
              [](const Partition& x, const Partition& y) { return x.parts() > y.parts(); });
    table->coeffs.assign(table->nus.size(), 0.0);

    std::unordered_map<Partition, size_t, PartitionHash> index;
    for (size_t i = 0; i < table->nus.size(); ++i) index.emplace(table->nus[i], i);

    const double e_kappa = eigenvalue(kappa.parts(), n, alpha);
    table->coeffs[0] = 1.0; // kappa itself
    for (size_t idx = 1; idx < table->nus.size(); ++idx) {
        const Partition& nu = table->nus[idx];
        std::vector<int> padded(nu.parts());
        padded.resize(size_t(n), 0);
        double acc = 0.0;
        std::vector<int> moved(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (int t = 1; t <= padded[size_t(j)]; ++t) {
                    moved.assign(padded.begin(), padded.end());
                    moved[size_t(i)] += t;
                    moved[size_t(j)] -= t;
                    std::sort(moved.begin(), moved.end(), std::greater<int>());
                    Partition mu(moved);
                    auto it = index.find(mu);
                    if (it == index.end()) continue; // not dominated by kappa
                    acc += (padded[size_t(i)] + t - (padded[size_t(j)] - t)) *
                           table->coeffs[it->second];
                }
            }
        }
        table->coeffs[idx] = acc / (e_kappa - eigenvalue(nu.parts(), n, alpha));
    }
    return table;
}

std::shared_ptr<const CoeffTable> get_table(const Partition& kappa, int n, double alpha) {
    TableKey key{kappa, n, alpha};
    auto& cache = JackCache::instance();
    if (auto t = cache.find_table(key)) return t;
    return cache.store_table(key, build_table(kappa, n, alpha));
}

double monomial_value(const Partition& nu, std::span<const double> x) {
    const int n = static_cast<int>(x.size());
    std::vector<int> exps(nu.parts());
    exps.resize(size_t(n), 0);
    std::sort(exps.begin(), exps.end()); // ascending for next_permutation
    double sum = 0.0;
    do {
        double term = 1.0;
        for (int i = 0; i < n; ++i) {
            if (exps[size_t(i)] != 0) term *= std::pow(x[size_t(i)], exps[size_t(i)]);
        }
        sum += term;
    } while (std::next_permutation(exps.begin(), exps.end()));
    return sum;
}

// P at a point after stripping full columns: P_{mu}(x) = (prod x)^{mu_n} P_{mu - mu_n}(x).
double jack_p_impl(const Partition& mu, std::span<const double> x, double alpha) {
    const int n = static_cast<int>(x.size());
    if (mu.length() > n) return 0.0; // too few variables
    if (mu.empty()) return 1.0;

    Partition reduced = mu;
    double column_factor = 1.0;
    if (mu.length() == n && mu.part(n) > 0) {
        int c = mu.part(n);
        double prod = 1.0;
        for (double v : x) prod *= v;
        column_factor = std::pow(prod, c);
        std::vector<int> parts(mu.parts());
        for (int& p : parts) p -= c;
        reduced = Partition(parts);
        if (column_factor == 0.0) return 0.0;
    }
    if (reduced.empty()) return column_factor;

    ValueKey vkey{reduced, n, alpha, std::vector<double>(x.begin(), x.end())};
    auto& cache = JackCache::instance();
    double cached;
    if (cache.find_value(vkey, cached)) return column_factor * cached;

    auto table = get_table(reduced, n, alpha);
    double sum = 0.0;
    for (size_t i = 0; i < table->nus.size(); ++i)
        sum += table->coeffs[i] * monomial_value(table->nus[i], x);
    cache.store_value(vkey, sum);
    return column_factor * sum;
}

} // namespace

double jack_p(const Partition& mu, std::span<const double> t, double alpha) {
    if (!(alpha > 0.0)) throw domain_error("jack_p: alpha must be positive");
    return jack_p_impl(mu, t, alpha);
}

namespace {
// log of the arm/leg product formula; factors are positive but their
// running product swings far outside double range for long rows
double jack_p_at_ones_log(const Partition& mu, int n, double alpha) {
    Partition conj = mu.conjugate();
    double out = 0.0;
    for (int i = 1; i <= mu.length(); ++i) {
        for (int j = 1; j <= mu.part(i); ++j) {
            double arm = mu.part(i) - j;
            double leg = conj.part(j) - i;
            out += std::log(n - (i - 1) + alpha * (j - 1)) -
                   std::log(alpha * arm + leg + 1.0);
        }
    }
    return out;
}
} // namespace

double jack_p_at_ones(const Partition& mu, int n, double alpha) {
    if (mu.length() > n) return 0.0;
    return std::exp(jack_p_at_ones_log(mu, n, alpha));
}

double spherical_phi(const Partition& mu, const DiagonalPoint& t, double a) {
    return spherical_phi_log(mu, t.t, a).to_double();
}

LogValue spherical_phi_log(const Partition& mu, std::span<const double> t, double a) {
    if (!(a > 0.0)) throw domain_error("spherical_phi: multiplicity a must be positive");
    const int n = static_cast<int>(t.size());
    if (mu.length() > n)
        throw domain_error("spherical_phi: partition longer than the point");
    if (mu.empty()) return LogValue::one();
    const double alpha = 2.0 / a;

    double scale = 0.0;
    for (double v : t) scale = std::max(scale, std::fabs(v));
    if (scale == 0.0) return LogValue::zero();

    std::vector<double> unit(t.begin(), t.end());
    for (double& v : unit) v /= scale;
    // |P(unit)| <= P(1,..,1) by monomial-coefficient nonnegativity, so the
    // scaled value never overflows; the degree carries the magnitude.
    double p_unit = jack_p_impl(mu, unit, alpha);
    LogValue out = LogValue::from_double(p_unit);
    out.log_abs -= jack_p_at_ones_log(mu, n, alpha);
    out.log_abs += mu.weight() * std::log(scale);
    return out;
}

LogValue fock_component_log(const Partition& mu, std::span<const double> t, double a) {
    const int ell = static_cast<int>(t.size());
    if (mu.length() > ell)
        throw domain_error("fock_component: partition longer than the point");
    LogValue phi = spherical_phi_log(mu, t, a);
    LogValue dims = LogValue::from_double(dim_tube(mu, a, ell));
    LogValue poch = pochhammer_partition(1.0 + 0.5 * a * (ell - 1), mu, a, ell);
    return phi * dims / poch;
}

double fock_component(const Partition& mu, const DiagonalPoint& t, const JordanType& jt) {
    if (t.length() > jt.r)
        throw domain_error("fock_component: point longer than the rank");
    if (pochhammer_partition(jt.dim_over_rank(), mu, jt.a, jt.r).is_zero())
        throw pole_error("fock_component: (d/r)_mu vanishes for this type");
    return fock_component_log(mu, t.t, jt.a).to_double();
}

JackCacheStats jack_cache_stats() { return JackCache::instance().stats(); }
void jack_cache_set_budget_mb(size_t mb) { JackCache::instance().set_budget_mb(mb); }
void jack_cache_clear() { JackCache::instance().clear(); }

} // namespace kepler
