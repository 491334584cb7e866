// Copyright 2026 The oikomplex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OIKOMPLEX_OI_CAT_HPP
#define OIKOMPLEX_OI_CAT_HPP

// Skeleton of the category OI: widths [w] = {1, ..., w} and order-preserving
// injections between them. Everything is 1-based.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace oikomplex {

/// An order-preserving injection [n] -> [w], stored by its image.
class OIMorphism {
public:
    /// The unique map [0] -> [0].
    OIMorphism() = default;

    OIMorphism(int target, std::vector<int> image) : target_(target), image_(std::move(image))
    {
        if (target_ < 0) throw invalid_input("OIMorphism: negative target width");
        for (std::size_t k = 0; k < image_.size(); ++k) {
            if (image_[k] < 1 || image_[k] > target_)
                throw invalid_input("OIMorphism: image entry " + std::to_string(image_[k]) + " outside [1," +
                                    std::to_string(target_) + "]");
            if (k > 0 && image_[k - 1] >= image_[k])
                throw invalid_input("OIMorphism: image is not strictly increasing");
        }
    }

    static OIMorphism identity(int w)
    {
        std::vector<int> img(static_cast<std::size_t>(w));
        for (int k = 0; k < w; ++k) img[static_cast<std::size_t>(k)] = k + 1;
        return OIMorphism(w, std::move(img));
    }

    int source() const noexcept { return static_cast<int>(image_.size()); }
    int target() const noexcept { return target_; }
    const std::vector<int> &image() const noexcept { return image_; }

    /// Value at k in [1, source()].
    int operator()(int k) const { return image_.at(static_cast<std::size_t>(k - 1)); }

    bool is_identity() const noexcept { return source() == target_; }

    friend bool operator==(const OIMorphism &, const OIMorphism &) = default;

    /// Total order used for containers: by source, then target, then image.
    friend std::strong_ordering operator<=>(const OIMorphism &a, const OIMorphism &b)
    {
        if (auto c = a.source() <=> b.source(); c != 0) return c;
        if (auto c = a.target_ <=> b.target_; c != 0) return c;
        return a.image_ <=> b.image_;
    }

    /// Text form "n->w:[i1,...,in]".
    std::string to_string() const
    {
        std::string s = std::to_string(source()) + "->" + std::to_string(target_) + ":[";
        for (std::size_t k = 0; k < image_.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(image_[k]);
        }
        return s + "]";
    }

    static OIMorphism parse(std::string_view text);

private:
    int target_ = 0;
    std::vector<int> image_;
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline int parse_int(std::string_view s, const char *what)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw parse_error("expected an integer, got '" + std::string(s) + "'", what);
    return value;
}

/// Splits on `sep` at nesting depth zero with respect to (), [] and {}.
inline std::vector<std::string_view> split_top(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        if (c == '(' || c == '[' || c == '{') ++depth;
        else if (c == ')' || c == ']' || c == '}') --depth;
        else if (c == sep && depth == 0) {
            out.push_back(s.substr(start, k - start));
            start = k + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

/// Parses "(a,b,c)" or "[a,b,c]" (brackets given by open/close) into integers.
inline std::vector<int> parse_int_list(std::string_view s, char open, char close, const char *what)
{
    s = trim(s);
    if (s.size() < 2 || s.front() != open || s.back() != close)
        throw parse_error("expected " + std::string(1, open) + "..." + std::string(1, close) + ", got '" +
                              std::string(s) + "'",
                          what);
    s = trim(s.substr(1, s.size() - 2));
    std::vector<int> out;
    if (s.empty()) return out;
    for (auto part : split_top(s, ',')) out.push_back(parse_int(part, what));
    return out;
}

} // namespace detail

inline OIMorphism OIMorphism::parse(std::string_view text)
{
    auto s = detail::trim(text);
    auto arrow = s.find("->");
    auto colon = s.find(':');
    if (arrow == std::string_view::npos || colon == std::string_view::npos || colon < arrow)
        throw parse_error("expected 'n->w:[...]', got '" + std::string(s) + "'", "morphism");
    int n = detail::parse_int(s.substr(0, arrow), "morphism source");
    int w = detail::parse_int(s.substr(arrow + 2, colon - arrow - 2), "morphism target");
    auto image = detail::parse_int_list(s.substr(colon + 1), '[', ']', "morphism image");
    if (static_cast<int>(image.size()) != n)
        throw parse_error("image length " + std::to_string(image.size()) + " differs from source " +
                              std::to_string(n),
                          "morphism");
    try {
        return OIMorphism(w, std::move(image));
    } catch (const invalid_input &e) {
        throw parse_error(e.what(), "morphism");
    }
}

/// Lexicographic comparison of images; the canonical enumeration order of Hom(n, w).
inline bool lex_less(const OIMorphism &a, const OIMorphism &b)
{
    return std::lexicographical_compare(a.image().begin(), a.image().end(), b.image().begin(), b.image().end());
}

/// All of Hom(n, w) in lexicographic order of images.
inline std::vector<OIMorphism> enumerate_hom(int n, int w)
{
    std::vector<OIMorphism> out;
    if (n < 0 || w < 0 || n > w) return out;
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) img[static_cast<std::size_t>(k)] = k + 1;
    for (;;) {
        out.emplace_back(w, img);
        int k = n - 1;
        while (k >= 0 && img[static_cast<std::size_t>(k)] == w - n + k + 1) --k;
        if (k < 0) break;
        ++img[static_cast<std::size_t>(k)];
        for (int m = k + 1; m < n; ++m) img[static_cast<std::size_t>(m)] = img[static_cast<std::size_t>(m - 1)] + 1;
    }
    return out;
}

/// outer ∘ inner.
inline OIMorphism compose(const OIMorphism &outer, const OIMorphism &inner)
{
    if (outer.source() != inner.target())
        throw composition_error("compose: source of outer (" + std::to_string(outer.source()) +
                                ") differs from target of inner (" + std::to_string(inner.target()) + ")");
    std::vector<int> img;
    img.reserve(inner.image().size());
    for (int k : inner.image()) img.push_back(outer(k));
    return OIMorphism(outer.target(), std::move(img));
}

/// The unique morphism |S| -> w with image S. S must be strictly increasing.
inline OIMorphism inclusion_onto(std::vector<int> subset, int w) { return OIMorphism(w, std::move(subset)); }

/// Union of images as a sorted vector.
inline std::vector<int> image_union(const std::vector<const OIMorphism *> &maps)
{
    std::vector<int> out;
    for (const auto *m : maps) out.insert(out.end(), m->image().begin(), m->image().end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// The unique μ' with embedding ∘ μ' = map; requires im(map) ⊆ im(embedding).
inline OIMorphism factor_through(const OIMorphism &embedding, const OIMorphism &map)
{
    if (embedding.target() != map.target())
        throw width_mismatch("factor_through: maps have different targets");
    std::vector<int> img;
    img.reserve(map.image().size());
    const auto &e = embedding.image();
    for (int v : map.image()) {
        auto it = std::lower_bound(e.begin(), e.end(), v);
        if (it == e.end() || *it != v) throw invalid_input("factor_through: image not contained in embedding");
        img.push_back(static_cast<int>(it - e.begin()) + 1);
    }
    return OIMorphism(embedding.source(), std::move(img));
}

/// A basis element e_{(π, j)} = π_*(f_j) of a free module: generator index j (1-based) and π.
///
/// The comparison operators implement the total order
///   (π, j) > (τ, k)  iff  j < k, or j = k and im π > im τ lexicographically,
/// which is preserved by post-composition with any OI-morphism.
struct BasisOrderKey {
    int generator = 1;
    OIMorphism morphism;

    friend bool operator==(const BasisOrderKey &, const BasisOrderKey &) = default;

    friend std::strong_ordering operator<=>(const BasisOrderKey &a, const BasisOrderKey &b)
    {
        if (a.generator != b.generator) return b.generator <=> a.generator;
        if (a.morphism.image() == b.morphism.image()) return a.morphism <=> b.morphism;
        return lex_less(a.morphism, b.morphism) ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    /// Text form "j@n->w:[...]".
    std::string to_string() const { return std::to_string(generator) + "@" + morphism.to_string(); }

    static BasisOrderKey parse(std::string_view text)
    {
        auto s = detail::trim(text);
        auto at = s.find('@');
        if (at == std::string_view::npos) throw parse_error("expected 'j@n->w:[...]', got '" + std::string(s) + "'", "key");
        int j = detail::parse_int(s.substr(0, at), "key generator");
        if (j < 1) throw parse_error("generator index must be positive", "key");
        return {j, OIMorphism::parse(s.substr(at + 1))};
    }
};

/// The listing order of width-w bases: generator 1 first, then images ascending.
/// Like the key order it is preserved by post-composition.
struct ListingLess {
    bool operator()(const BasisOrderKey &a, const BasisOrderKey &b) const
    {
        if (a.generator != b.generator) return a.generator < b.generator;
        if (a.morphism.image() != b.morphism.image()) return lex_less(a.morphism, b.morphism);
        return a.morphism < b.morphism;
    }
};

/// Post-composition of the indexing morphism.
inline BasisOrderKey push_forward(const BasisOrderKey &key, const OIMorphism &eps)
{
    return {key.generator, compose(eps, key.morphism)};
}

} // namespace oikomplex

#endif
