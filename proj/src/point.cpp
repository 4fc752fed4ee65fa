#include "mmchaos/point.hpp"

#include "mmchaos/errors.hpp"

namespace mmchaos {

SymbolPoint SymbolPoint::zeros() {
    SymbolPoint p;
    p.tail_ = TailKind::Zeros;
    return p;
}

SymbolPoint SymbolPoint::ones() {
    SymbolPoint p;
    p.tail_ = TailKind::Ones;
    return p;
}

SymbolPoint SymbolPoint::u_point(std::shared_ptr<const WordSystem> u, std::uint64_t offset) {
    if (!u)
        fail_internal("u point needs a word system");
    SymbolPoint p;
    p.tail_ = TailKind::WordU;
    p.tail_offset_ = offset;
    p.u_ = std::move(u);
    return p;
}

SymbolPoint SymbolPoint::from_word(std::shared_ptr<const BitWord> prefix, TailKind tail,
                                   std::shared_ptr<const WordSystem> u, std::string source,
                                   std::uint64_t tail_offset) {
    if (tail == TailKind::WordU && !u)
        fail_internal("word-u tail needs a word system");
    SymbolPoint p;
    p.prefix_ = std::move(prefix);
    p.prefix_end_ = p.prefix_ ? p.prefix_->size() : 0;
    p.tail_ = tail;
    p.tail_offset_ = tail == TailKind::WordU ? tail_offset : 0;
    p.u_ = std::move(u);
    p.source_ = std::move(source);
    p.normalize();
    return p;
}

void SymbolPoint::normalize() {
    while (prefix_end_ > start_) {
        bool last = (*prefix_)[prefix_end_ - 1];
        bool absorbed;
        switch (tail_) {
        case TailKind::Zeros: absorbed = !last; break;
        case TailKind::Ones: absorbed = last; break;
        case TailKind::WordU:
            absorbed = tail_offset_ > 0 && u_->u_at(tail_offset_ - 1) == last;
            if (absorbed)
                --tail_offset_;
            break;
        default: absorbed = false;
        }
        if (!absorbed)
            break;
        --prefix_end_;
    }
    if (prefix_end_ == start_) {
        prefix_.reset();
        start_ = prefix_end_ = 0;
    }
}

bool SymbolPoint::at(std::uint64_t i) const {
    std::uint64_t plen = prefix_length();
    if (i < plen)
        return (*prefix_)[start_ + i];
    switch (tail_) {
    case TailKind::Zeros: return false;
    case TailKind::Ones: return true;
    case TailKind::WordU: return u_->u_at(tail_offset_ + (i - plen));
    }
    return false;
}

SymbolPoint SymbolPoint::shifted() const {
    SymbolPoint p = *this;
    if (p.prefix_length() > 0) {
        ++p.start_;
        if (p.prefix_end_ == p.start_) {
            p.prefix_.reset();
            // Pure tail now; keep start_ meaningful only for labelled sources.
            if (p.source_.empty())
                p.start_ = p.prefix_end_ = 0;
        }
    } else if (p.tail_ == TailKind::WordU) {
        ++p.tail_offset_;
    }
    // Constant tails are shift-invariant once the prefix is gone.
    return p;
}

bool SymbolPoint::equals(const SymbolPoint& o) const {
    if (tail_ != o.tail_)
        return false;
    if (tail_ == TailKind::WordU && tail_offset_ != o.tail_offset_)
        return false;
    std::uint64_t plen = prefix_length();
    if (plen != o.prefix_length())
        return false;
    if (prefix_.get() == o.prefix_.get() && start_ == o.start_)
        return true;
    for (std::uint64_t done = 0; done < plen; done += 64) {
        unsigned take = static_cast<unsigned>(std::min<std::uint64_t>(64, plen - done));
        if (prefix_->bits64(start_ + done, take) != o.prefix_->bits64(o.start_ + done, take))
            return false;
    }
    return true;
}

int SymbolPoint::compare(const SymbolPoint& o, std::uint64_t cap) const {
    if (equals(o))
        return 0;
    for (std::uint64_t i = 0; i < cap; ++i) {
        bool a = at(i);
        bool b = o.at(i);
        if (a != b)
            return a ? 1 : -1;
    }
    // Distinct sequences that agree this deep are outside any in-budget use;
    // order them by representation so sorting stays deterministic.
    auto rank = [](TailKind t) { return static_cast<int>(t); };
    if (tail_ != o.tail_)
        return rank(tail_) < rank(o.tail_) ? -1 : 1;
    if (tail_offset_ != o.tail_offset_)
        return tail_offset_ < o.tail_offset_ ? -1 : 1;
    if (prefix_length() != o.prefix_length())
        return prefix_length() < o.prefix_length() ? -1 : 1;
    if (source_ != o.source_)
        return source_ < o.source_ ? -1 : 1;
    return 0;
}

std::string SymbolPoint::str() const {
    if (!source_.empty()) {
        std::string out = source_;
        if (start_ > 0)
            out += "@" + std::to_string(start_);
        return out;
    }
    std::string out;
    std::uint64_t plen = prefix_length();
    out.reserve(plen + 8);
    for (std::uint64_t i = 0; i < plen; ++i)
        out.push_back((*prefix_)[start_ + i] ? '1' : '0');
    out.push_back('~');
    switch (tail_) {
    case TailKind::Zeros: out += "0*"; break;
    case TailKind::Ones: out += "1*"; break;
    case TailKind::WordU:
        out += "u";
        if (tail_offset_ > 0)
            out += "@" + std::to_string(tail_offset_);
        break;
    }
    return out;
}

const Scalar& Point::interval() const {
    if (space() != Space::Interval)
        fail_type("interval point required");
    return std::get<Scalar>(v_);
}

const SymbolPoint& Point::symbol() const {
    if (space() != Space::Symbol)
        fail_type("symbol point required");
    return std::get<SymbolPoint>(v_);
}

bool Point::equals(const Point& o) const {
    if (space() != o.space())
        return false;
    if (space() == Space::Interval)
        return interval() == o.interval();
    return symbol().equals(o.symbol());
}

std::string Point::str() const {
    return space() == Space::Interval ? interval().str() : symbol().str();
}

} // namespace mmchaos
