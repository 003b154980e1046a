#include "kneserq/cyclic.hpp"
#include "kneserq/error.hpp"

#include <algorithm>
#include <numeric>

namespace kq {

CyclicSubset::CyclicSubset(int modulus, std::vector<int> elements)
    : modulus_(modulus), elements_(std::move(elements))
{
    require(modulus_ >= 1, ErrorKind::InvalidParams, "modulus must be positive");
    std::sort(elements_.begin(), elements_.end());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        require(elements_[i] >= 0 && elements_[i] < modulus_, ErrorKind::InvalidParams,
                "residue " + std::to_string(elements_[i]) + " outside Z_" + std::to_string(modulus_));
        require(i == 0 || elements_[i] != elements_[i - 1], ErrorKind::InvalidParams,
                "duplicate residue " + std::to_string(elements_[i]));
    }
}

CyclicSubset CyclicSubset::full(int modulus)
{
    std::vector<int> all(static_cast<std::size_t>(std::max(modulus, 0)));
    std::iota(all.begin(), all.end(), 0);
    return CyclicSubset(modulus, std::move(all));
}

bool CyclicSubset::contains(int residue) const
{
    return std::binary_search(elements_.begin(), elements_.end(), residue);
}

bool CyclicSubset::disjoint_from(const CyclicSubset &other) const
{
    auto a = elements_.begin();
    auto b = other.elements_.begin();
    while (a != elements_.end() && b != other.elements_.end()) {
        if (*a == *b)
            return false;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return true;
}

CyclicSubset CyclicSubset::intersection(const CyclicSubset &other) const
{
    require(modulus_ == other.modulus_, ErrorKind::InvalidParams, "intersection of subsets of different cycles");
    std::vector<int> out;
    std::set_intersection(elements_.begin(), elements_.end(), other.elements_.begin(), other.elements_.end(),
                          std::back_inserter(out));
    return CyclicSubset(modulus_, std::move(out));
}

CyclicSubset CyclicSubset::complement() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(modulus_) - elements_.size());
    for (int x = 0; x < modulus_; ++x)
        if (!contains(x))
            out.push_back(x);
    return CyclicSubset(modulus_, std::move(out));
}

std::string CyclicSubset::to_string() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(elements_[i]);
    }
    return out + "}";
}

Arc::Arc(int modulus_in, int start_in, int length_in) : modulus(modulus_in), start(0), length(length_in)
{
    require(modulus >= 1, ErrorKind::InvalidParams, "arc modulus must be positive");
    require(length >= 1 && length <= modulus, ErrorKind::InvalidParams, "arc length must be in [1, n]");
    start = mod(start_in, modulus);
}

bool Arc::contains(int residue) const { return mod(residue - start, modulus) < length; }

int Arc::count(const CyclicSubset &s) const
{
    int c = 0;
    for (int x : s.elements())
        if (contains(x))
            ++c;
    return c;
}

int mod(long long x, int n)
{
    const long long r = x % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

int gcd(int a, int b) { return std::gcd(a, b); }

CyclicSubset rotate(const CyclicSubset &s, long long t)
{
    std::vector<int> out;
    out.reserve(s.elements().size());
    for (int x : s.elements())
        out.push_back(mod(static_cast<long long>(x) + t, s.modulus()));
    return CyclicSubset(s.modulus(), std::move(out));
}

bool is_r_separated(const CyclicSubset &s, int r)
{
    const auto &e = s.elements();
    const int n = s.modulus();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            const int d = e[j] - e[i];
            if (d < r || d > n - r)
                return false;
        }
    return true;
}

bool is_well_spread(const CyclicSubset &s)
{
    const int n = s.modulus();
    std::vector<int> marked(static_cast<std::size_t>(n), 0);
    for (int x : s.elements())
        marked[static_cast<std::size_t>(x)] = 1;

    for (int length = 1; length <= n - 1; ++length) {
        int count = 0;
        for (int x = 0; x < length; ++x)
            count += marked[static_cast<std::size_t>(x)];
        int lo = count, hi = count;
        for (int start = 1; start < n; ++start) {
            count -= marked[static_cast<std::size_t>(start - 1)];
            count += marked[static_cast<std::size_t>((start + length - 1) % n)];
            lo = std::min(lo, count);
            hi = std::max(hi, count);
        }
        if (hi - lo > 1)
            return false;
    }
    return true;
}

bool is_well_spread_dual(const CyclicSubset &s)
{
    const int n = s.modulus();
    const int m = s.size();
    for (int c = 1; c <= m; ++c) {
        int lo = n + 1, hi = 0;
        for (int i = 0; i < m; ++i) {
            const int last = s[(i + c - 1) % m];
            const int length = mod(last - s[i], n) + 1;
            lo = std::min(lo, length);
            hi = std::max(hi, length);
        }
        if (hi - lo > 1)
            return false;
    }
    return true;
}

CyclicSubset canonical_well_spread(int n, int k)
{
    require(n >= 1, ErrorKind::InvalidParams, "n must be positive");
    require(k >= 0 && k <= n, ErrorKind::InvalidParams, "k must lie in [0, n]");
    std::vector<int> elems;
    elems.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        elems.push_back(static_cast<int>(static_cast<long long>(i) * n / k));
    CyclicSubset s(n, std::move(elems));
    require(is_well_spread(s), ErrorKind::ValidationFailed,
            "mechanical word for (" + std::to_string(n) + "," + std::to_string(k) + ") is not well-spread");
    return s;
}

ReductionTrace euclid_reduce(const CyclicSubset &s)
{
    require(is_well_spread(s), ErrorKind::NotWellSpread, s.to_string() + " is not well-spread");
    require(s.size() >= 1 && 2 * s.size() <= s.modulus(), ErrorKind::InvalidParams,
            "reduction needs 1 <= |s| <= n/2");

    ReductionTrace trace;
    CyclicSubset current = s;
    while (true) {
        const int cycle = current.modulus();
        const int size = current.size();
        const int q = cycle / size;
        const int r = cycle % size;

        // Keep every marked element, drop q-1 unmarked vertices from each gap.
        std::vector<int> kept;
        kept.reserve(static_cast<std::size_t>(size));
        int position = 0;
        int long_gaps = 0;
        for (int i = 0; i < size; ++i) {
            kept.push_back(position);
            const int gap = size == 1 ? cycle : mod(current[(i + 1) % size] - current[i], cycle);
            require(gap == q || gap == q + 1, ErrorKind::ValidationFailed, "gap outside {q, q+1}");
            long_gaps += gap == q + 1;
            position += gap - (q - 1);
        }
        require(long_gaps == r, ErrorKind::ValidationFailed, "long-gap count differs from remainder");

        CyclicSubset surviving(size + r, std::move(kept));
        require(is_well_spread(surviving), ErrorKind::ValidationFailed, "reduced set lost well-spreadness");
        trace.steps.push_back({cycle, size, q, r, surviving});
        if (r == 0) {
            trace.terminal_size = size;
            break;
        }
        current = surviving.complement();
    }
    return trace;
}

CriticalParams critical_params(int n, int k)
{
    require(k >= 1 && n > k, ErrorKind::InvalidParams, "critical params need n > k >= 1");
    require(gcd(n, k) == 1, ErrorKind::NotCoprime,
            "gcd(" + std::to_string(n) + "," + std::to_string(k) + ") != 1");
    for (int b = 1; b <= k; ++b) {
        const long long rhs = static_cast<long long>(b) * n - 1;
        if (rhs % k == 0)
            return {static_cast<int>(rhs / k), b};
    }
    fail(ErrorKind::ValidationFailed, "no solution of a*k = b*n - 1 with b <= k");
}

int rotation_offset(const CyclicSubset &from, const CyclicSubset &to)
{
    if (from.modulus() != to.modulus() || from.size() != to.size())
        return -1;
    if (from.empty())
        return 0;
    const int n = from.modulus();
    // Any valid t sends from[0] to some element of `to`.
    int best = -1;
    for (int y : to.elements()) {
        const int t = mod(y - from[0], n);
        if ((best < 0 || t < best) && rotate(from, t) == to)
            best = t;
    }
    return best;
}

} // namespace kq
