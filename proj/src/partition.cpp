#include "csp/partition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace csp {

namespace {

int parse_positive_int(std::string_view token, const char* what) {
    // trim surrounding whitespace
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || token.empty())
        throw std::invalid_argument(std::string("invalid ") + what + " '" +
                                    std::string(token) + "'");
    if (value <= 0)
        throw std::invalid_argument(std::string(what) + " must be positive, got '" +
                                    std::string(token) + "'");
    return value;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("partition needs at least one part");
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition part must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
    // col_len[c] = number of rows whose part exceeds column index c (0-based)
    std::vector<int> col_len(parts_[0], 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c) ++col_len[c];
    hooks_.reserve(n_);
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < parts_[r]; ++c)
            hooks_.push_back((parts_[r] - c - 1) + (col_len[c] - r - 1) + 1);
}

Partition Partition::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty shape string");
    if (text.find(',') == std::string_view::npos &&
        text.find('x') != std::string_view::npos) {
        size_t pos = text.find('x');
        if (text.find('x', pos + 1) != std::string_view::npos)
            throw std::invalid_argument("invalid rectangle shorthand '" +
                                        std::string(text) + "'");
        int a = parse_positive_int(text.substr(0, pos), "row count");
        int b = parse_positive_int(text.substr(pos + 1), "column count");
        return Partition(std::vector<int>(a, b));
    }
    std::vector<int> parts;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string_view token =
            text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        parts.push_back(parse_positive_int(token, "part"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1])
            throw std::invalid_argument("parts must be weakly decreasing: '" +
                                        std::to_string(parts[i + 1]) + "' after '" +
                                        std::to_string(parts[i]) + "'");
    return Partition(std::move(parts));
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(n_);
    for (int r = 1; r <= rows(); ++r)
        for (int c = 1; c <= part(r); ++c) out.push_back({r, c});
    return out;
}

int Partition::hook_length(Cell c) const {
    if (!contains(c))
        throw std::domain_error("cell (" + std::to_string(c.row) + "," +
                                std::to_string(c.col) + ") outside diagram " +
                                to_string());
    size_t idx = 0;
    for (int r = 1; r < c.row; ++r) idx += part(r);
    idx += c.col - 1;
    return hooks_[idx];
}

std::optional<std::pair<int, int>> Partition::rectangle() const {
    for (int p : parts_)
        if (p != parts_[0]) return std::nullopt;
    return std::make_pair(rows(), parts_[0]);
}

Partition Partition::conjugate() const {
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c) ++conj[c];
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

int hook_length(const Partition& shape, Cell c) { return shape.hook_length(c); }

long long kappa(const Partition& shape) {
    long long total = 0;
    const auto& parts = shape.parts();
    for (size_t i = 0; i < parts.size(); ++i)
        total += static_cast<long long>(i) * parts[i];
    return total;
}

long long gamma(long long n, long long k) {
    if (k < 0 || k > n)
        throw std::domain_error("gamma requires 0 <= k <= n, got k=" +
                                std::to_string(k) + ", n=" + std::to_string(n));
    return (n - 1) * (k * (k - 1) / 2);
}

namespace {

void extend_partition(int remaining, int max_part, std::vector<int>& prefix,
                      std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int next = 1; next <= std::min(remaining, max_part); ++next) {
        prefix.push_back(next);
        extend_partition(remaining - next, next, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n <= 0) return {};
    std::vector<Partition> out;
    std::vector<int> prefix;
    extend_partition(n, n, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace csp
