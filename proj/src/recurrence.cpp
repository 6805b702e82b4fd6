#include "chs/recurrence.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace chs {

std::optional<Polynomial> ForcingMemo::find(const std::vector<Row>& rows) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(rows);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

void ForcingMemo::insert(const std::vector<Row>& rows, const Polynomial& value) {
    std::unique_lock lock(mutex_);
    table_.emplace(rows, value);
}

std::size_t ForcingMemo::size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
}

void ForcingMemo::clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
}

std::size_t p_index(const ChsSpec& spec, int z) {
    for (std::size_t p = 1; p <= spec.size(); ++p)
        if (spec.h(p) <= z && z <= spec.k(p)) return p;
    throw std::invalid_argument("no row of " + to_string(spec) + " contains column " + std::to_string(z));
}

std::size_t q_index(const TurningChsSpec& spec) {
    const ChsSpec& lower = spec.lower();
    return p_index(lower, lower.k(lower.size()));
}

TurningCase turning_case(const TurningChsSpec& spec) {
    const ChsSpec& u = spec.upper();
    const ChsSpec& l = spec.lower();
    const std::size_t m = u.size(), mp = l.size();
    const int before = u.k(m - 1) + l.k(mp - 1);
    const int after = u.k(m) + l.k(mp);
    if (before > after) throw std::logic_error("row caps decrease in " + to_string(spec));
    if (before < after) return TurningCase::strict;
    if (u.k(m - 1) != u.k(m) || l.k(mp - 1) != l.k(mp))
        throw std::logic_error("equal case without equal end caps in " + to_string(spec));
    return TurningCase::equal;
}

int maximal_zigzag_length(const TurningChsSpec& spec) {
    if (turning_case(spec) != TurningCase::equal)
        throw std::invalid_argument("zigzag length is only defined in the equal case; " + to_string(spec) +
                                    " has k_{m-1}+k'_{m'-1} < k_m+k'_{m'}");
    const ChsSpec& u = spec.upper();
    const int m = static_cast<int>(u.size());
    const int km = u.k(u.size());
    int n = 0;
    for (int r = 1;; ++r) {
        const int row = r % 2 ? m - (r - 1) / 2 : m - r / 2;
        const int col = r % 2 ? km - (r - 1) / 2 : km - (r / 2 - 1);
        if (row < 1) break;
        const auto idx = static_cast<std::size_t>(row);
        if (col < u.h(idx) || col > u.k(idx)) break;
        n = r;
    }
    return n;
}

namespace {

ChsSpec cut(const ChsSpec& s, long count, int cap) {
    if (count < 0) throw std::logic_error("negative row count in recurrence for " + to_string(s));
    return s.truncated(static_cast<std::size_t>(count), cap);
}

ChsSpec head(const ChsSpec& s, long count) {
    if (count < 0) throw std::logic_error("negative row count in recurrence for " + to_string(s));
    return s.prefix(static_cast<std::size_t>(count));
}

class Engine {
public:
    explicit Engine(ForcingMemo& memo) : memo_(memo) {}

    Polynomial mono(const ChsSpec& s) {
        if (s.empty()) return Polynomial::one();
        if (auto hit = memo_.find(s.rows())) return *hit;
        const std::size_t m = s.size();
        const int km = s.k(m), hm = s.h(m);
        Polynomial sum;
        for (int i = hm - 1; i <= km - 1; ++i) sum += mono(s.truncated(m - 1, i));
        for (std::size_t j = p_index(s, km); j <= m; ++j) sum += mono(s.truncated(j - 1, km - 1));
        Polynomial out = shift(sum, 1);
        memo_.insert(s.rows(), out);
        return out;
    }

    Polynomial turning(const TurningChsSpec& spec) {
        const ChsSpec& up = spec.upper();
        const ChsSpec& lo = spec.lower();
        const long m = static_cast<long>(up.size()), mp = static_cast<long>(lo.size());
        const int km = up.k(up.size()), hm = up.h(up.size());
        const int kp = lo.k(lo.size()), hp = lo.h(lo.size());
        auto U = [&](long count, int cap) { return mono(cut(up, count, cap)); };
        auto L = [&](long count, int cap) { return mono(cut(lo, count, cap)); };
        const long p = static_cast<long>(p_index(up, km));
        const long q = static_cast<long>(q_index(spec));

        Polynomial shared_row;
        for (int i = hm - 1; i <= km - 1; ++i) shared_row += U(m - 1, i) * L(mp - 1, i - hm + hp);
        Polynomial upper_ends, lower_ends;
        for (long j = p; j <= m; ++j) upper_ends += U(j - 1, km - 1);
        for (long i = q; i <= mp; ++i) lower_ends += L(i - 1, kp - 1);
        const Polynomial t1 = shift(shared_row, 1);
        if (turning_case(spec) == TurningCase::strict) return t1 + shift(upper_ends * lower_ends, 1);

        const int n = maximal_zigzag_length(spec);
        if (n < 2) throw std::logic_error("zigzag walk shorter than two hexagons in " + to_string(spec));

        Polynomial upper_short, lower_short;
        for (long j = p; j <= m - 1; ++j) upper_short += U(j - 1, km - 1);
        for (long j = q; j <= mp - 1; ++j) lower_short += L(j - 1, kp - 1);
        const Polynomial t2 = shift(upper_short * mono(head(lo, mp - 1)), 1);
        const Polynomial t3 = shift(mono(head(up, m - 1)) * lower_short, 1);
        const Polynomial t4 = shift(upper_short * lower_short, 2);

        const Polynomial lower_capped = L(mp - 1, kp - 1);
        Polynomial t5;
        for (int i = up.h(static_cast<std::size_t>(m - 1)) - 1; i <= km - 2; ++i) t5 += U(m - 2, i);
        t5 = shift(t5 * lower_capped, 2);

        Polynomial lower_tail;
        for (int j = lo.h(static_cast<std::size_t>(mp - 1)) - 1; j <= kp - 1; ++j) lower_tail += L(mp - 2, j);

        Polynomial t6, t7;
        for (int w = 1; w <= n / 2 - 1; ++w) {
            Polynomial a;
            for (long i = static_cast<long>(p_index(up, km - w)); i <= m - w - 1; ++i) a += U(i - 1, km - w - 1);
            t6 += shift(a * lower_tail, static_cast<std::size_t>(w + 2));
            Polynomial b;
            const auto row = static_cast<std::size_t>(m - w - 1);
            for (int i = up.h(row) - 1; i <= km - w - 2; ++i) b += U(m - w - 2, i);
            t7 += shift(b * lower_capped, static_cast<std::size_t>(w + 2));
        }

        Polynomial xi;
        if (n % 2 == 0)
            xi = shift(U(m - n / 2 - 1, km - n / 2) * lower_tail, static_cast<std::size_t>(n / 2 + 1));
        else
            xi = shift(mono(head(up, m - (n + 1) / 2)) * lower_capped, static_cast<std::size_t>((n + 1) / 2));

        return t1 + t2 + t3 - t4 + t5 + t6 + t7 + xi;
    }

private:
    ForcingMemo& memo_;
};

Polynomial checked(Polynomial p, const std::string& what) {
    if (!p.all_nonnegative()) throw std::logic_error("negative coefficient in forcing polynomial of " + what);
    return p;
}

}  // namespace

Polynomial forcing_poly_monotonic(const ChsSpec& spec, ForcingMemo* shared) {
    ForcingMemo local;
    Engine engine(shared ? *shared : local);
    return checked(engine.mono(spec), to_string(spec));
}

Polynomial forcing_poly_turning(const TurningChsSpec& spec, ForcingMemo* shared) {
    ForcingMemo local;
    Engine engine(shared ? *shared : local);
    return checked(engine.turning(spec), to_string(spec));
}

Polynomial forcing_poly(const AnySpec& spec, ForcingMemo* shared) {
    if (const auto* m = std::get_if<ChsSpec>(&spec)) return forcing_poly_monotonic(*m, shared);
    return forcing_poly_turning(std::get<TurningChsSpec>(spec), shared);
}

Polynomial forcing_poly_truncated_parallelogram(const std::vector<int>& ks, ForcingMemo* shared) {
    return forcing_poly_monotonic(truncated_parallelogram(ks), shared);
}

Polynomial linear_chain_poly(int k) {
    if (k < 1) throw std::invalid_argument("a linear chain needs k >= 1");
    Polynomial out = Polynomial::monomial(k + 1, 1);
    if (out != forcing_poly_monotonic(linear_chain(k)))
        throw std::logic_error("linear chain closed form disagrees with the recurrence at k=" + std::to_string(k));
    return out;
}

Polynomial zigzag_poly(int n) {
    if (n < 0) throw std::invalid_argument("zigzag needs n >= 0");
    const Polynomial x = Polynomial::monomial(1, 1);
    std::vector<Polynomial> f{Polynomial::one(), Polynomial::monomial(2, 1), Polynomial::monomial(3, 1)};
    for (int i = 3; i <= n; ++i) {
        const auto s = static_cast<std::size_t>(i);
        f.push_back(shift(f[s - 2] + f[s - 2] + f[s - 3], 1));
    }
    Polynomial out = f[static_cast<std::size_t>(n)];
    if (out != forcing_poly_monotonic(zigzag(n)))
        throw std::logic_error("zigzag recurrence disagrees with the general engine at n=" + std::to_string(n));
    return out;
}

Polynomial parallelogram_poly(int k, int m) {
    if (k < 0 || m < 0) throw std::invalid_argument("parallelogram needs k, m >= 0");
    // table[i][j] = F(M(i, j))
    std::vector<std::vector<Polynomial>> table(static_cast<std::size_t>(k + 1),
                                               std::vector<Polynomial>(static_cast<std::size_t>(m + 1)));
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= m; ++j) {
            auto& cell = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (i == 0 || j == 0) {
                cell = Polynomial::one();
                continue;
            }
            Polynomial sum;
            for (int a = 0; a < i; ++a) sum += table[static_cast<std::size_t>(a)][static_cast<std::size_t>(j - 1)];
            for (int b = 0; b < j; ++b) sum += table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(b)];
            cell = shift(sum, 1);
        }
    Polynomial out = table[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
    if (k >= 1 && m >= 1 && out != forcing_poly_monotonic(parallelogram(k, m)))
        throw std::logic_error("parallelogram recurrence disagrees with the general engine at (" +
                               std::to_string(k) + "," + std::to_string(m) + ")");
    return out;
}

}  // namespace chs
