#pragma once

#include "mmchaos/scalar.hpp"
#include "mmchaos/word.hpp"

#include <memory>
#include <string>
#include <variant>

namespace mmchaos {

enum class Space { Interval, Symbol };

enum class TailKind { Zeros, Ones, WordU };

// A fully determined one-sided infinite binary sequence: a finite materialized
// prefix followed by a resolvable tail (constant 0s, constant 1s, or the
// recursive word generator at some offset). Stored in canonical minimal form:
// the prefix never ends with a symbol the tail would produce at that position,
// so two equal sequences built from the same generators compare equal through
// their representations.
class SymbolPoint {
public:
    static SymbolPoint zeros();
    static SymbolPoint ones();
    static SymbolPoint u_point(std::shared_ptr<const WordSystem> u, std::uint64_t offset = 0);
    static SymbolPoint from_word(std::shared_ptr<const BitWord> prefix, TailKind tail,
                                 std::shared_ptr<const WordSystem> u = nullptr,
                                 std::string source = {}, std::uint64_t tail_offset = 0);

    bool at(std::uint64_t i) const;
    SymbolPoint shifted() const;

    TailKind tail() const { return tail_; }
    std::uint64_t prefix_length() const { return prefix_end_ - start_; }
    std::uint64_t tail_offset() const { return tail_offset_; }
    std::uint64_t shift_count() const { return start_; }
    const std::string& source() const { return source_; }
    const std::shared_ptr<const WordSystem>& word_system() const { return u_; }

    bool equals(const SymbolPoint& o) const;

    // Three-way lexicographic comparison of the resolved sequences, capped at
    // `cap` symbols. Ties past the cap fall back to a deterministic
    // representation order; cap is large enough that this never happens for
    // in-budget data.
    int compare(const SymbolPoint& o, std::uint64_t cap = kCompareCap) const;

    std::string str() const;

    static constexpr std::uint64_t kCompareCap = std::uint64_t(1) << 17;

private:
    void normalize();

    std::shared_ptr<const BitWord> prefix_; // may be null when prefix empty
    std::uint64_t start_ = 0;               // shifts applied since construction
    std::uint64_t prefix_end_ = 0;
    TailKind tail_ = TailKind::Zeros;
    std::uint64_t tail_offset_ = 0;         // WordU only
    std::shared_ptr<const WordSystem> u_;
    std::string source_;                    // compact identity, e.g. "h:112"
};

// A point of whichever ground space a system acts on.
class Point {
public:
    explicit Point(Scalar s) : v_(std::move(s)) {}
    explicit Point(SymbolPoint p) : v_(std::move(p)) {}

    Space space() const {
        return std::holds_alternative<Scalar>(v_) ? Space::Interval : Space::Symbol;
    }
    const Scalar& interval() const;
    const SymbolPoint& symbol() const;

    bool equals(const Point& o) const;
    std::string str() const;

private:
    std::variant<Scalar, SymbolPoint> v_;
};

} // namespace mmchaos
