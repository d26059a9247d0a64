#include "delcode/code.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "delcode/dominance.hpp"
#include "delcode/error.hpp"

namespace delcode {

Code::Code(std::vector<BinaryWord> words) : words_(std::move(words)) {
    if (words_.empty()) throw DomainError("a code needs at least one codeword");
    length_ = words_.front().size();
    for (const auto& w : words_)
        if (w.size() != length_) throw DomainError("codewords must share one length");
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool Code::contains(const BinaryWord& w) const noexcept {
    return std::binary_search(words_.begin(), words_.end(), w);
}

Code read_code(std::istream& in) {
    std::vector<BinaryWord> words;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r");
        try {
            words.push_back(BinaryWord::parse(std::string_view(line).substr(first, last - first + 1)));
        } catch (const DomainError& e) {
            throw DomainError("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (words.back().size() != words.front().size())
            throw DomainError("line " + std::to_string(line_no) + ": codeword length differs from first codeword");
    }
    return Code(std::move(words));
}

Code parse_code(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_code(in);
}

void write_code(std::ostream& out, const Code& code, std::string_view comment) {
    std::size_t start = 0;
    while (start < comment.size()) {
        auto end = comment.find('\n', start);
        if (end == std::string_view::npos) end = comment.size();
        out << "# " << comment.substr(start, end - start) << '\n';
        start = end + 1;
    }
    for (const auto& w : code) out << w << '\n';
}

Code map_code(const Code& code, BinaryWord (*transform)(const BinaryWord&) noexcept) {
    std::vector<BinaryWord> out;
    out.reserve(code.size());
    for (const auto& w : code) out.push_back(transform(w));
    return Code(std::move(out));
}

CorrectionCheck check_t_deletion_correcting(const Code& code, int t) {
    if (t < 1 || t >= code.length())
        throw DomainError("t must satisfy 1 <= t < n (got t=" + std::to_string(t) + ", n=" + std::to_string(code.length()) + ")");
    const auto& w = code.words();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (deletion_distance(w[i], w[j]) <= t) return {false, std::pair{w[i], w[j]}};
    return {};
}

bool is_t_deletion_correcting(const Code& code, int t) { return check_t_deletion_correcting(code, t).correcting; }

int code_deletion_distance(const Code& code) {
    if (code.size() < 2) throw DomainError("code deletion distance needs at least two codewords");
    int best = code.length();
    const auto& w = code.words();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) best = std::min(best, deletion_distance(w[i], w[j]));
    return best;
}

bool is_perfect(const Code& code, int t) {
    if (!is_t_deletion_correcting(code, t))
        throw PreconditionError("perfectness is only defined for t-deletion-correcting codes");
    std::uint64_t covered = 0;
    for (const auto& w : code) covered += deletion_ball(w, t).size();
    return covered == (std::uint64_t{1} << (code.length() - t));
}

BasicCheck check_basic(const Code& code, int t) {
    BasicCheck out;
    for (const auto& u : code)
        if (!subordinates_of(u, t).empty()) out.dominant.push_back(u);
    out.basic = out.dominant.empty();
    return out;
}

bool is_basic(const Code& code, int t) { return check_basic(code, t).basic; }

Replacement replace_dominant(const Code& code, int t) {
    if (!is_t_deletion_correcting(code, t))
        throw PreconditionError("dominant replacement needs a t-deletion-correcting code");
    std::vector<BinaryWord> words = code.words();
    std::vector<BinaryWord> stalled;
    // Every accepted swap strictly lowers the packed-value sum, so this ends.
    for (bool changed = true; changed;) {
        changed = false;
        stalled.clear();
        for (auto& u : words) {
            const WordSet subs = subordinates_of(u, t);
            if (subs.empty()) continue;
            auto pick = std::find_if(subs.begin(), subs.end(), [&](const BinaryWord& v) {
                return std::find(words.begin(), words.end(), v) == words.end();
            });
            if (pick == subs.end() || !(*pick < u)) {
                stalled.push_back(u);
                continue;
            }
            u = *pick;
            changed = true;
            break;
        }
    }
    Code result(std::move(words));
    const bool basic = stalled.empty();
    return {std::move(result), basic, std::move(stalled)};
}

namespace {

std::vector<Code> four_images(const Code& c) {
    return {c, map_code(c, complement), map_code(c, reverse), map_code(c, reverse_complement)};
}

}  // namespace

bool are_equivalent(const Code& a, const Code& b) {
    if (a.length() != b.length()) throw DomainError("equivalence needs codes of equal length");
    if (a.size() != b.size()) return false;
    for (const auto& image : four_images(a))
        if (image == b) return true;
    return false;
}

Code canonical_form(const Code& code) {
    auto images = four_images(code);
    return *std::min_element(images.begin(), images.end(),
                             [](const Code& x, const Code& y) { return x.words() < y.words(); });
}

int vt_checksum(const BinaryWord& w) noexcept {
    int sum = 0;
    for (int i = 1; i <= w.size(); ++i) sum += i * w.at(i);
    return sum % (w.size() + 1);
}

Code vt_code(int n, int residue) {
    if (n < 1 || n > 30) throw DomainError("VT code length must be in 1..30");
    if (residue < 0 || residue > n) throw DomainError("VT residue must be in 0..n");
    std::vector<BinaryWord> words;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        const BinaryWord w(b, n);
        if (vt_checksum(w) == residue) words.push_back(w);
    }
    return Code(std::move(words));
}

}  // namespace delcode
