#ifndef CLOSURELAB_BIGINT_HPP
#define CLOSURELAB_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace closurelab {

// Minimal unsigned big integer: just enough arithmetic for the exact
// count-bound evaluations (add, multiply, power, compare, decimal output).
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v) {
        if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }

    bool is_zero() const { return limbs_.empty(); }

    friend BigUint operator+(const BigUint& a, const BigUint& b) {
        BigUint r;
        const std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
        r.limbs_.resize(n, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t s = carry;
            if (i < a.limbs_.size()) s += a.limbs_[i];
            if (i < b.limbs_.size()) s += b.limbs_[i];
            r.limbs_[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    friend BigUint operator*(const BigUint& a, const BigUint& b) {
        BigUint r;
        if (a.is_zero() || b.is_zero()) return r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] +
                    static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t j = i + b.limbs_.size();
            while (carry) {
                std::uint64_t cur = r.limbs_[j] + carry;
                r.limbs_[j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++j;
            }
        }
        r.normalize();
        return r;
    }

    BigUint pow(std::uint64_t e) const {
        BigUint base = *this, result(1);
        while (e) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    // -1, 0, +1 comparison.
    int compare(const BigUint& o) const {
        if (limbs_.size() != o.limbs_.size())
            return limbs_.size() < o.limbs_.size() ? -1 : 1;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
        }
        return 0;
    }

    bool operator<(const BigUint& o) const { return compare(o) < 0; }
    bool operator<=(const BigUint& o) const { return compare(o) <= 0; }
    bool operator==(const BigUint& o) const { return compare(o) == 0; }

    // Increment by one (used for ceilings).
    BigUint next() const { return *this + BigUint(1); }

    // Floor division by two.
    BigUint half() const {
        BigUint r = *this;
        std::uint32_t carry = 0;
        for (std::size_t i = r.limbs_.size(); i-- > 0;) {
            std::uint32_t cur = r.limbs_[i];
            r.limbs_[i] = (cur >> 1) | (carry << 31);
            carry = cur & 1;
        }
        r.normalize();
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> work = limbs_;
        std::string digits;
        while (!work.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            for (int d = 0; d < 9; ++d) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        return std::string(digits.rbegin(), digits.rend());
    }

private:
    void normalize() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint32_t> limbs_; // little-endian base 2^32
};

// Smallest m >= 0 with m^e >= x. Binary search; e >= 1.
inline BigUint ceil_root(const BigUint& x, std::uint64_t e) {
    if (x.is_zero()) return BigUint(0);
    BigUint lo(1);
    if (x <= lo.pow(e)) return lo;
    BigUint hi(2);
    while (hi.pow(e) < x) hi = hi * BigUint(2);
    // invariant: lo^e < x <= hi^e
    while (lo.next() < hi) {
        BigUint mid = (lo + hi).half();
        if (mid.pow(e) < x) lo = mid; else hi = mid;
    }
    return hi;
}

} // namespace closurelab

#endif
