#include "mmchaos/word.hpp"

#include "mmchaos/errors.hpp"

namespace mmchaos {

void BitWord::push_back(bool bit) {
    if ((size_ & 63) == 0)
        words_.push_back(0);
    if (bit)
        words_.back() |= std::uint64_t(1) << (size_ & 63);
    ++size_;
}

void BitWord::append_bits64(std::uint64_t chunk, unsigned count) {
    if (count == 0)
        return;
    if (count < 64)
        chunk &= (std::uint64_t(1) << count) - 1;
    unsigned offset = size_ & 63;
    if (offset == 0) {
        words_.push_back(chunk);
    } else {
        words_.back() |= chunk << offset;
        if (offset + count > 64)
            words_.push_back(chunk >> (64 - offset));
    }
    size_ += count;
}

void BitWord::append(const BitWord& other) {
    std::size_t done = 0;
    while (done < other.size_) {
        unsigned take = static_cast<unsigned>(std::min<std::size_t>(64, other.size_ - done));
        append_bits64(other.bits64(done, take), take);
        done += take;
    }
}

void BitWord::append_run(bool bit, std::size_t count) {
    std::uint64_t chunk = bit ? ~std::uint64_t(0) : 0;
    while (count > 0) {
        unsigned take = static_cast<unsigned>(std::min<std::size_t>(64, count));
        append_bits64(chunk, take);
        count -= take;
    }
}

std::uint64_t BitWord::bits64(std::size_t pos, unsigned count) const {
    if (count == 0)
        return 0;
    std::size_t w = pos >> 6;
    unsigned offset = pos & 63;
    std::uint64_t chunk = words_[w] >> offset;
    if (offset + count > 64)
        chunk |= words_[w + 1] << (64 - offset);
    if (count < 64)
        chunk &= (std::uint64_t(1) << count) - 1;
    return chunk;
}

BitWord BitWord::slice(std::size_t pos, std::size_t count) const {
    BitWord out;
    out.reserve_bits(count);
    std::size_t done = 0;
    while (done < count) {
        unsigned take = static_cast<unsigned>(std::min<std::size_t>(64, count - done));
        out.append_bits64(bits64(pos + done, take), take);
        done += take;
    }
    return out;
}

std::string BitWord::str() const {
    std::string out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i)
        out.push_back((*this)[i] ? '1' : '0');
    return out;
}

BitWord BitWord::from_string(std::string_view text) {
    BitWord out;
    out.reserve_bits(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            fail_type("word symbols must be 0 or 1");
        out.push_back(c == '1');
    }
    return out;
}

WordSystem::WordSystem(unsigned budget_exponent) : budget_exponent_(budget_exponent) {
    if (budget_exponent_ < 1 || budget_exponent_ > 12)
        fail_config("word budget exponent must be in [1, 12]");
    eager_exponent_ = std::min(7u, budget_exponent_);
    eager_prefix_ = word(eager_exponent_);
}

std::uint64_t WordSystem::word_length(unsigned n) {
    if (n < 1 || n > 27)
        fail_resource("word level out of 64-bit range");
    std::uint64_t len = 1;
    for (unsigned i = 0; i < n; ++i)
        len *= 5;
    return len;
}

const BitWord& WordSystem::word(unsigned n) const {
    if (n < 1)
        fail_config("word level must be >= 1");
    if (n > budget_exponent_)
        fail_resource("word length 5^" + std::to_string(n) + " exceeds budget 5^" +
                      std::to_string(budget_exponent_));
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (cache_.size() < n)
        cache_.resize(n);
    for (unsigned k = 1; k <= n; ++k) {
        if (cache_[k - 1])
            continue;
        auto built = std::make_shared<BitWord>();
        if (k == 1) {
            *built = BitWord::from_string("10111");
        } else {
            const BitWord& prev = *cache_[k - 2];
            built->reserve_bits(prev.size() * 5);
            built->append(prev);
            built->append_run(false, prev.size());
            built->append(prev);
            built->append_run(true, prev.size());
            built->append(prev);
        }
        cache_[k - 1] = std::move(built);
    }
    return *cache_[n - 1];
}

bool WordSystem::u_at(std::uint64_t i) const {
    if (i >= word_length(budget_exponent_))
        fail_resource("u index beyond 5^" + std::to_string(budget_exponent_) + " budget");
    if (i < eager_prefix_.size())
        return eager_prefix_[i];
    // Descend the five-block structure until the index lands in the eager
    // prefix: blocks 0/2/4 are copies of the previous level, 1 is all zeros,
    // 3 is all ones.
    unsigned n = eager_exponent_;
    while (word_length(n) <= i)
        ++n;
    while (i >= eager_prefix_.size()) {
        std::uint64_t len = word_length(n - 1);
        std::uint64_t block = i / len;
        if (block == 1)
            return false;
        if (block == 3)
            return true;
        i -= block * len;
        --n;
    }
    return eager_prefix_[i];
}

BitWord WordSystem::u_slice(std::uint64_t i, std::uint64_t j) const {
    if (j < i)
        fail_config("u_slice needs i <= j");
    if (j >= word_length(budget_exponent_))
        fail_resource("u_slice end beyond 5^" + std::to_string(budget_exponent_) + " budget");
    BitWord out;
    out.reserve_bits(j - i + 1);
    for (std::uint64_t k = i; k <= j; ++k)
        out.push_back(u_at(k));
    return out;
}

std::shared_ptr<const WordSystem> WordSystem::shared() {
    static std::shared_ptr<const WordSystem> instance = std::make_shared<WordSystem>();
    return instance;
}

} // namespace mmchaos
