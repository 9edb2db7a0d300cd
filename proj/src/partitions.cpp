#include "splitmeasure/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "splitmeasure/errors.hpp"

namespace splitmeasure {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InputError("a partition needs at least one part");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    if (parts_.back() < 1) throw InputError("partition parts must be positive");
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_multiplicities(const std::map<int, int>& multiplicities) {
    std::vector<int> parts;
    for (auto [part, count] : multiplicities) {
        if (part < 1 || count < 0) throw InputError("invalid multiplicity entry");
        parts.insert(parts.end(), static_cast<std::size_t>(count), part);
    }
    return Partition(std::move(parts));
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> m;
    for (int part : parts_) ++m[part];
    return m;
}

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

int Partition::distinct_parts() const { return static_cast<int>(multiplicities().size()); }

std::string Partition::to_parts_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

namespace {

void extend(std::vector<int>& prefix, int remaining, int max_part, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        extend(prefix, remaining - part, part, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 1 || n > kMaxPartitionN)
        throw BudgetError("partitions_of: n must lie in [1, " + std::to_string(kMaxPartitionN) +
                          "], got " + std::to_string(n));
    std::vector<Partition> out;
    std::vector<int> prefix;
    extend(prefix, n, n, out);
    return out;
}

BigInt class_size(const Partition& mu) {
    BigInt denom = 1;
    for (auto [part, count] : mu.multiplicities())
        denom *= pow_int(part, static_cast<unsigned>(count)) * factorial(static_cast<unsigned>(count));
    return factorial(static_cast<unsigned>(mu.n())) / denom;
}

std::string format_bracket(const Partition& mu) {
    std::string out = "<";
    bool first = true;
    for (auto [part, count] : mu.multiplicities()) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(part);
        if (count > 1) out += "^" + std::to_string(count);
    }
    return out + ">";
}

namespace {

constexpr std::string_view kOpenAngle = "\xE2\x9F\xA8";   // U+27E8
constexpr std::string_view kCloseAngle = "\xE2\x9F\xA9";  // U+27E9

int read_int(std::string_view text, std::size_t& pos) {
    const std::size_t start = pos;
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > kMaxPartitionN * kMaxPartitionN) throw ParseError("number too large", start);
        ++pos;
    }
    if (pos == start) throw ParseError("expected a positive integer", start);
    if (value == 0) throw ParseError("zero is not allowed", start);
    return static_cast<int>(value);
}

Partition parse_flat(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
        parts.push_back(read_int(text, pos));
        if (pos == text.size()) break;
        if (text[pos] != '+') throw ParseError("expected '+'", pos);
        ++pos;
    }
    return Partition(std::move(parts));
}

}  // namespace

Partition parse_bracket(std::string_view text) {
    std::size_t pos = 0;
    std::size_t close_len = 0;
    if (text.starts_with("<")) {
        pos = 1;
        if (!text.ends_with(">")) throw ParseError("missing closing '>'", text.size());
        close_len = 1;
    } else if (text.starts_with(kOpenAngle)) {
        pos = kOpenAngle.size();
        if (!text.ends_with(kCloseAngle)) throw ParseError("missing closing bracket", text.size());
        close_len = kCloseAngle.size();
    } else {
        if (text.empty()) throw ParseError("empty partition", 0);
        return parse_flat(text);
    }
    const std::size_t end = text.size() - close_len;
    if (pos >= end) throw ParseError("empty partition", pos);

    std::map<int, int> mult;
    const std::string_view body = text.substr(0, end);
    while (true) {
        const std::size_t entry_pos = pos;
        const int part = read_int(body, pos);
        int count = 1;
        if (pos < end && body[pos] == '^') {
            ++pos;
            count = read_int(body, pos);
        }
        if (mult.contains(part)) throw ParseError("part size " + std::to_string(part) + " repeated", entry_pos);
        mult[part] = count;
        if (pos == end) break;
        if (body[pos] != ',') throw ParseError("expected ',' or '^'", pos);
        ++pos;
    }
    return Partition::from_multiplicities(mult);
}

SplittingSymbol::SplittingSymbol(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    if (pairs_.empty()) throw InputError("a splitting symbol needs at least one factor");
    for (auto [degree, exponent] : pairs_) {
        if (degree < 1 || exponent < 1) throw InputError("splitting symbol entries must be positive");
        n_ += degree * exponent;
    }
    std::sort(pairs_.begin(), pairs_.end(), std::greater<>());
}

SplittingSymbol SplittingSymbol::from_partition(const Partition& mu) {
    std::vector<Pair> pairs;
    for (int part : mu.parts()) pairs.emplace_back(part, 1);
    return SplittingSymbol(std::move(pairs));
}

bool SplittingSymbol::is_squarefree() const noexcept {
    return std::all_of(pairs_.begin(), pairs_.end(), [](const Pair& p) { return p.second == 1; });
}

Partition SplittingSymbol::to_partition() const {
    if (!is_squarefree()) throw InputError("splitting symbol " + to_string() + " is not square-free");
    std::vector<int> parts;
    for (auto [degree, exponent] : pairs_) parts.push_back(degree);
    return Partition(std::move(parts));
}

std::string SplittingSymbol::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(pairs_[i].first);
        if (pairs_[i].second > 1) out += "^" + std::to_string(pairs_[i].second);
    }
    return out + ")";
}

}  // namespace splitmeasure
