#ifndef DAISY_BITLABEL_HPP
#define DAISY_BITLABEL_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "daisy/errors.hpp"

namespace daisy {

// A fixed-width binary word, i.e. a vertex of the ambient hypercube.
// Coordinate i lives in bit i of `bits`; the string form prints
// coordinate 0 first, so "110" has coordinates 0 and 1 set.
class BitLabel {
  public:
    static constexpr int max_width = 64;

    BitLabel() = default;

    BitLabel(int width, uint64_t bits) : width_(width), bits_(bits) {
        if (width < 0 || width > max_width)
            fail(ErrorCode::DimensionTooLarge,
                 "label width " + std::to_string(width) + " outside [0, 64]");
        if ((bits & ~mask(width)) != 0)
            fail(ErrorCode::WidthMismatch, "label has bits beyond its width");
    }

    static BitLabel zeros(int width) { return BitLabel(width, 0); }

    static BitLabel from_string(const std::string& s) {
        if (s.size() > static_cast<size_t>(max_width))
            fail(ErrorCode::DimensionTooLarge, "label string longer than 64");
        uint64_t b = 0;
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                b |= uint64_t{1} << i;
            else if (s[i] != '0')
                fail(ErrorCode::ParseError, "label string must be over {0,1}: \"" + s + "\"");
        }
        return BitLabel(static_cast<int>(s.size()), b);
    }

    int width() const { return width_; }
    uint64_t bits() const { return bits_; }
    int weight() const { return std::popcount(bits_); }
    bool test(int i) const { return (bits_ >> i) & 1; }

    BitLabel with_flipped(int i) const {
        check_coord(i);
        return BitLabel(width_, bits_ ^ (uint64_t{1} << i));
    }

    BitLabel operator^(const BitLabel& o) const {
        check_same_width(o);
        return BitLabel(width_, bits_ ^ o.bits_);
    }

    // Bitwise containment: true when every set coordinate of *this is set in v.
    bool subsumed_by(const BitLabel& v) const {
        check_same_width(v);
        return (bits_ & ~v.bits_) == 0;
    }

    int hamming(const BitLabel& v) const {
        check_same_width(v);
        return std::popcount(bits_ ^ v.bits_);
    }

    std::string to_string() const {
        std::string s(width_, '0');
        for (int i = 0; i < width_; ++i)
            if (test(i)) s[i] = '1';
        return s;
    }

    bool operator==(const BitLabel&) const = default;

    // Order labels the way their strings sort: the lowest differing
    // coordinate decides. Widths must match unless one label is empty.
    static bool lex_less(const BitLabel& a, const BitLabel& b) {
        if (a.width_ != b.width_) return a.width_ < b.width_;
        uint64_t diff = a.bits_ ^ b.bits_;
        if (diff == 0) return false;
        int i = std::countr_zero(diff);
        return !a.test(i);
    }

    static uint64_t mask(int width) {
        return width >= 64 ? ~uint64_t{0} : (uint64_t{1} << width) - 1;
    }

  private:
    void check_coord(int i) const {
        if (i < 0 || i >= width_)
            fail(ErrorCode::WidthMismatch, "coordinate " + std::to_string(i) + " out of range");
    }
    void check_same_width(const BitLabel& o) const {
        if (width_ != o.width_)
            fail(ErrorCode::WidthMismatch, "labels of width " + std::to_string(width_) + " and " +
                                               std::to_string(o.width_) + " mixed");
    }

    int width_ = 0;
    uint64_t bits_ = 0;
};

inline void sort_labels_lex(std::vector<BitLabel>& labels) {
    std::sort(labels.begin(), labels.end(), BitLabel::lex_less);
}

}  // namespace daisy

#endif
