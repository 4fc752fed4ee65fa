#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace mmchaos {

// Packed bit string. Unused high bits of the last storage word stay zero, so
// content equality is plain vector equality.
class BitWord {
public:
    BitWord() = default;

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool operator[](std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void push_back(bool bit);
    void append(const BitWord& other);
    void append_run(bool bit, std::size_t count);
    // Raw little-endian chunk append; count <= 64.
    void append_bits64(std::uint64_t chunk, unsigned count);

    // count <= 64 bits starting at pos, little-endian (bit 0 = position pos).
    std::uint64_t bits64(std::size_t pos, unsigned count) const;

    BitWord slice(std::size_t pos, std::size_t count) const;

    bool operator==(const BitWord& o) const {
        return size_ == o.size_ && words_ == o.words_;
    }
    bool operator!=(const BitWord& o) const { return !(*this == o); }

    std::string str() const;
    static BitWord from_string(std::string_view text); // '0' / '1' only

    void reserve_bits(std::size_t bits) { words_.reserve((bits + 63) >> 6); }

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

// The recursive word family A_1 = 10111, A_{n+1} = A_n 0^|A_n| A_n 1^|A_n| A_n
// and the limit sequence u it generates. A_n is a prefix of A_{n+1}, so the
// symbol of u at any index can be resolved by descending the block structure
// without materializing large words. Materialized words are cached; lookups
// against the cache are read-only.
class WordSystem {
public:
    explicit WordSystem(unsigned budget_exponent = kDefaultBudgetExponent);

    unsigned budget_exponent() const { return budget_exponent_; }

    // 5^n; fails for n beyond what fits in 64 bits.
    static std::uint64_t word_length(unsigned n);

    // A_n, materialized and cached. Resource error when 5^n exceeds the budget.
    const BitWord& word(unsigned n) const;

    // Symbol of u at index i. Resource error when i >= 5^budget.
    bool u_at(std::uint64_t i) const;

    // Inclusive slice u[i..j].
    BitWord u_slice(std::uint64_t i, std::uint64_t j) const;

    static std::shared_ptr<const WordSystem> shared();

    static constexpr unsigned kDefaultBudgetExponent = 10;

private:
    unsigned budget_exponent_;
    BitWord eager_prefix_;         // A_min(7, budget): O(1) u lookups below 5^7
    unsigned eager_exponent_;
    mutable std::mutex cache_mutex_;
    mutable std::vector<std::shared_ptr<const BitWord>> cache_; // index n-1 -> A_n
};

} // namespace mmchaos
