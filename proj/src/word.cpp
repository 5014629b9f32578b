#include "ddc/word.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

namespace ddc {

namespace {

std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void check_letters(std::span<const Letter> raw, const GroupCtx& ctx) {
    for (Letter l : raw) {
        if (!ctx.valid(l)) {
            throw Error(ErrorCode::InvalidLetter,
                        "letter " + std::to_string(l) + " outside rank " + std::to_string(ctx.rank()));
        }
    }
}

}  // namespace

GroupCtx::GroupCtx(int rank) : rank_(rank) {
    if (rank < 1) throw Error(ErrorCode::BadParameter, "rank must be >= 1");
}

Word GroupCtx::reduce(std::span<const Letter> raw) const {
    check_letters(raw, *this);
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (Letter l : raw) {
        if (!out.empty() && out.back() == -l) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return Word::from_reduced(std::move(out));
}

Word GroupCtx::reduce(std::initializer_list<Letter> raw) const {
    return reduce(std::span<const Letter>(raw.begin(), raw.size()));
}

Word GroupCtx::word(std::span<const Letter> letters) const {
    check_letters(letters, *this);
    if (!is_reduced(letters)) throw Error(ErrorCode::NotReduced, "adjacent cancelling pair");
    return Word::from_reduced(std::vector<Letter>(letters.begin(), letters.end()));
}

Word GroupCtx::word(std::initializer_list<Letter> letters) const {
    return word(std::span<const Letter>(letters.begin(), letters.size()));
}

std::vector<Word> GroupCtx::generators_and_inverses() const {
    std::vector<Word> out;
    for (int i = 1; i <= rank_; ++i) out.push_back(Word::from_reduced({i}));
    for (int i = 1; i <= rank_; ++i) out.push_back(Word::from_reduced({-i}));
    return out;
}

Word Word::from_reduced(std::vector<Letter> letters) { return Word(std::move(letters)); }

int Word::max_generator() const noexcept {
    int m = 0;
    for (Letter l : letters_) m = std::max(m, l < 0 ? -l : l);
    return m;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() <=> b.length();
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
}

bool is_reduced(std::span<const Letter> letters) noexcept {
    for (std::size_t i = 1; i < letters.size(); ++i) {
        if (letters[i] == -letters[i - 1]) return false;
    }
    return true;
}

std::size_t cancellation_length(const Word& u, const Word& v) noexcept {
    const auto a = u.letters();
    const auto b = v.letters();
    const std::size_t limit = std::min(a.size(), b.size());
    std::size_t k = 0;
    while (k < limit && a[a.size() - 1 - k] == -b[k]) ++k;
    return k;
}

std::size_t common_prefix(const Word& a, const Word& b) noexcept {
    const auto x = a.letters();
    const auto y = b.letters();
    const auto [ix, iy] = std::mismatch(x.begin(), x.end(), y.begin(), y.end());
    return static_cast<std::size_t>(ix - x.begin());
}

Word mul(const Word& u, const Word& v) {
    const std::size_t k = cancellation_length(u, v);
    const auto a = u.letters();
    const auto b = v.letters();
    std::vector<Letter> out;
    out.reserve(a.size() + b.size() - 2 * k);
    out.insert(out.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(k));
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
    return Word::from_reduced(std::move(out));
}

Word inv(const Word& w) {
    const auto a = w.letters();
    std::vector<Letter> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[a.size() - 1 - i];
    return Word::from_reduced(std::move(out));
}

Word rev(const Word& w) {
    const auto a = w.letters();
    return Word::from_reduced(std::vector<Letter>(a.rbegin(), a.rend()));
}

Word prefix(const Word& w, std::size_t len) {
    const auto a = w.letters();
    len = std::min(len, a.size());
    return Word::from_reduced(std::vector<Letter>(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(len)));
}

Word suffix_from(const Word& w, std::size_t start) {
    const auto a = w.letters();
    start = std::min(start, a.size());
    return Word::from_reduced(std::vector<Letter>(a.begin() + static_cast<std::ptrdiff_t>(start), a.end()));
}

std::size_t dist(const Word& g, const Word& h) noexcept {
    return g.length() + h.length() - 2 * common_prefix(g, h);
}

void FingerprintBuilder::push(Letter l) noexcept {
    const auto x = static_cast<std::uint64_t>(static_cast<std::uint32_t>(l));
    a_ = std::rotl(a_ ^ (x * 0x9e3779b97f4a7c15ULL), 27) * 0xff51afd7ed558ccdULL;
    b_ = (b_ + mix64(x + n_)) * 0xc4ceb9fe1a85ec53ULL;
    b_ ^= b_ >> 29;
    ++n_;
}

Fingerprint FingerprintBuilder::finish() const noexcept {
    return {mix64(a_ ^ (n_ * 0x632be59bd9b4e019ULL)), mix64(b_ + n_)};
}

Fingerprint fingerprint(const Word& w) noexcept {
    FingerprintBuilder fb;
    for (Letter l : w.letters()) fb.push(l);
    return fb.finish();
}

Fingerprint difference_fingerprint(const Word& g, const Word& h) noexcept {
    const std::size_t k = common_prefix(g, h);
    const auto a = g.letters();
    const auto b = h.letters();
    FingerprintBuilder fb;
    for (std::size_t i = a.size(); i > k; --i) fb.push(-a[i - 1]);
    for (std::size_t i = k; i < b.size(); ++i) fb.push(b[i]);
    return fb.finish();
}

std::string to_string(const Word& w) {
    if (w.is_identity()) return "e";
    std::string out;
    for (Letter l : w.letters()) {
        if (!out.empty()) out.push_back(' ');
        out += std::to_string(l);
    }
    return out;
}

std::string to_compact_string(const Word& w) {
    if (w.is_identity()) return "e";
    std::string out;
    for (Letter l : w.letters()) {
        if (l > 26 || l < -26) throw Error(ErrorCode::BadParameter, "compact form needs rank <= 26");
        out.push_back(l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1));
    }
    return out;
}

Word parse_word(std::string_view text, const GroupCtx& ctx) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw Error(ErrorCode::ParseError, "empty word text");
    const auto last = text.find_last_not_of(" \t\r\n");
    text = text.substr(first, last - first + 1);
    if (text == "e") return Word{};

    const bool compact = std::any_of(text.begin(), text.end(), [](char c) {
        return std::isalpha(static_cast<unsigned char>(c)) != 0;
    });
    std::vector<Letter> letters;
    if (compact) {
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (c >= 'a' && c <= 'z') {
                letters.push_back(c - 'a' + 1);
            } else if (c >= 'A' && c <= 'Z') {
                letters.push_back(-(c - 'A' + 1));
            } else {
                throw Error(ErrorCode::ParseError, "bad character in compact word: " + std::string(text));
            }
        }
    } else {
        std::size_t pos = 0;
        while (pos < text.size()) {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == text.size()) break;
            std::size_t end = pos;
            while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
            const std::string_view token = text.substr(pos, end - pos);
            Letter value = 0;
            const char* b = token.data();
            const char* e = b + token.size();
            if (*b == '+') ++b;
            const auto [ptr, ec] = std::from_chars(b, e, value);
            if (ec != std::errc{} || ptr != e) {
                throw Error(ErrorCode::ParseError, "bad letter token: " + std::string(token));
            }
            letters.push_back(value);
            pos = end;
        }
    }
    return ctx.word(letters);
}

}  // namespace ddc
