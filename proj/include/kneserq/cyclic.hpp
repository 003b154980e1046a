#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace kq {

// A subset of Z_n stored as sorted residues. Equality is structural.
class CyclicSubset {
  public:
    CyclicSubset() = default;

    // Throws InvalidParams on modulus < 1, residues outside [0, n-1] or duplicates.
    CyclicSubset(int modulus, std::vector<int> elements);

    static CyclicSubset empty(int modulus) { return CyclicSubset(modulus, {}); }
    static CyclicSubset full(int modulus);

    int modulus() const noexcept { return modulus_; }
    int size() const noexcept { return static_cast<int>(elements_.size()); }
    bool empty() const noexcept { return elements_.empty(); }
    const std::vector<int> &elements() const noexcept { return elements_; }
    int operator[](int i) const { return elements_[static_cast<std::size_t>(i)]; }

    bool contains(int residue) const;
    bool disjoint_from(const CyclicSubset &other) const;
    CyclicSubset intersection(const CyclicSubset &other) const;
    CyclicSubset complement() const;

    std::string to_string() const; // "{0,2,5}"

    friend bool operator==(const CyclicSubset &, const CyclicSubset &) = default;
    friend auto operator<=>(const CyclicSubset &a, const CyclicSubset &b)
    {
        if (auto c = a.modulus_ <=> b.modulus_; c != 0)
            return c;
        return a.elements_ <=> b.elements_;
    }

  private:
    int modulus_ = 1;
    std::vector<int> elements_;
};

// Residues start, start+1, ..., start+length-1 (mod n).
struct Arc {
    int modulus = 1;
    int start = 0;
    int length = 1;

    Arc(int modulus, int start, int length);

    bool contains(int residue) const;
    int count(const CyclicSubset &s) const;
};

struct ReductionStep {
    int cycle_length = 0;
    int set_size = 0;
    int quotient = 0;
    int remainder = 0;
    // The reduced set on its shorter cycle of length set_size + remainder.
    CyclicSubset surviving_set;

    friend bool operator==(const ReductionStep &, const ReductionStep &) = default;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    int terminal_size = 0;

    friend bool operator==(const ReductionTrace &, const ReductionTrace &) = default;
};

// Least positive (a, b) with a*k = b*n - 1.
struct CriticalParams {
    int a = 0;
    int b = 0;

    friend bool operator==(const CriticalParams &, const CriticalParams &) = default;
};

int mod(long long x, int n);
int gcd(int a, int b);

// Clockwise rotation: x -> x + t (mod n).
CyclicSubset rotate(const CyclicSubset &s, long long t);

bool is_r_separated(const CyclicSubset &s, int r);

// Direct arc scan over every arc length 1..n-1.
bool is_well_spread(const CyclicSubset &s);

// Minimal-arc characterisation: for each count c in 1..|s| the inclusion-minimal
// arcs holding exactly c elements have lengths within one of each other.
bool is_well_spread_dual(const CyclicSubset &s);

// {floor(i*n/k) : 0 <= i < k}; checked to be well-spread before returning.
CyclicSubset canonical_well_spread(int n, int k);

// Iterated gap removal / complementation down to a set of size gcd(n, |s|).
// Requires a well-spread s with 1 <= |s| <= n/2.
ReductionTrace euclid_reduce(const CyclicSubset &s);

CriticalParams critical_params(int n, int k);

// The t with rotate(from, t) == to, if any (smallest non-negative).
int rotation_offset(const CyclicSubset &from, const CyclicSubset &to);

} // namespace kq
