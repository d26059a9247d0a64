#include "delcode/pattern.hpp"

#include <cctype>

#include "delcode/error.hpp"

namespace delcode {

std::string_view to_string(PatternSource source) noexcept {
    switch (source) {
        case PatternSource::TrivialZero: return "trivial-zero";
        case PatternSource::TrivialOne: return "trivial-one";
        case PatternSource::Table1Row: return "table1";
        case PatternSource::Prop3Form: return "hamming1";
        case PatternSource::Prop4Form: return "ends-differ";
        case PatternSource::Prop5Row: return "table2";
        case PatternSource::SmallN: return "small-n";
        case PatternSource::Monotone: return "monotone";
    }
    return "unknown";
}

namespace {

class ExponentParser {
public:
    explicit ExponentParser(std::string_view text) : text_(text) {}

    // sum := term (('+'|'-') term)*
    Exponent parse_sum() {
        Exponent e = parse_term(+1);
        while (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            const int sign = text_[pos_++] == '+' ? 1 : -1;
            e += parse_term(sign);
        }
        return e;
    }

    bool done() const noexcept { return pos_ == text_.size(); }

private:
    Exponent parse_term(int sign) {
        if (pos_ >= text_.size()) fail();
        const char c = text_[pos_];
        if (c == 'n') {
            ++pos_;
            return {0, sign, 0};
        }
        if (c == 'm') {
            ++pos_;
            return {0, 0, sign};
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) fail();
        int value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            value = value * 10 + (text_[pos_++] - '0');
        return {sign * value, 0, 0};
    }

    [[noreturn]] void fail() const { throw DomainError("malformed exponent '" + std::string(text_) + "'"); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

WordTemplate WordTemplate::parse(std::string_view text) {
    WordTemplate tpl;
    tpl.text_ = std::string(text);
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i++];
        if (c != 'p' && c != 'q') throw DomainError("template symbol must be p or q in '" + tpl.text_ + "'");
        TemplateRun run{c == 'p' ? Role::P : Role::Q, Exponent{1, 0, 0}};
        if (i < text.size() && text[i] == '^') {
            ++i;
            if (i >= text.size()) throw DomainError("dangling '^' in '" + tpl.text_ + "'");
            std::string_view body;
            if (text[i] == '{') {
                const auto close = text.find('}', i);
                if (close == std::string_view::npos) throw DomainError("unclosed '{' in '" + tpl.text_ + "'");
                body = text.substr(i + 1, close - i - 1);
                i = close + 1;
            } else {
                body = text.substr(i++, 1);
            }
            ExponentParser parser(body);
            run.exponent = parser.parse_sum();
            if (!parser.done()) throw DomainError("trailing characters in exponent of '" + tpl.text_ + "'");
        }
        tpl.runs_.push_back(run);
    }
    return tpl;
}

Exponent WordTemplate::total_length() const noexcept {
    Exponent sum;
    for (const auto& r : runs_) sum += r.exponent;
    return sum;
}

bool WordTemplate::uses_m() const noexcept {
    for (const auto& r : runs_)
        if (r.exponent.per_m != 0) return true;
    return false;
}

std::optional<BinaryWord> WordTemplate::instantiate(int n, int m, int p_symbol) const {
    std::uint64_t bits = 0;
    int length = 0;
    for (const auto& r : runs_) {
        const int k = r.exponent.eval(n, m);
        if (k < 0) return std::nullopt;
        length += k;
        if (length > BinaryWord::kMaxLength) throw DomainError("template instance exceeds word cap");
        const int symbol = r.role == Role::P ? p_symbol : 1 - p_symbol;
        bits = (bits << k) | (symbol ? low_mask(k) : 0);
    }
    return BinaryWord(bits, length);
}

std::optional<std::pair<BinaryWord, BinaryWord>> PatternPair::instantiate(int n, int m, int p_symbol) const {
    auto a = u.instantiate(n, m, p_symbol);
    auto b = v.instantiate(n, m, p_symbol);
    if (!a || !b) return std::nullopt;
    return std::pair{*a, *b};
}

namespace {

PatternPair row(PatternSource source, int id, std::string_view u, std::string_view v) {
    return {source, id, WordTemplate::parse(u), WordTemplate::parse(v)};
}

}  // namespace

const std::vector<PatternPair>& one_deletion_patterns() {
    static const std::vector<PatternPair> patterns{
        row(PatternSource::Table1Row, 3, "p^{m-1}qpq^{n-m-1}", "p^mq^{n-m}"),
    };
    return patterns;
}

const std::vector<PatternPair>& two_deletion_patterns() {
    using S = PatternSource;
    static const std::vector<PatternPair> patterns{
        row(S::Prop3Form, 1, "p^mqp^{n-m-2}q", "p^{n-1}q"),
        row(S::Prop3Form, 2, "p^mqp^{n-m-3}qp", "p^{n-2}qp"),
        row(S::Prop4Form, 1, "qpq^{n-4}pq", "pq^{n-2}p"),
        row(S::Prop4Form, 2, "qp^{n-3}qp", "p^{n-1}q"),
        row(S::Prop5Row, 1, "pqp^{m-1}qpq^{n-m-3}", "pqp^mq^{n-m-2}"),
        row(S::Prop5Row, 2, "pq^mpqp^{n-m-3}", "pq^{m+1}p^{n-m-2}"),
        row(S::Prop5Row, 3, "p^2qp^{n-3}", "pqp^{n-2}"),
        row(S::Prop5Row, 4, "p^{m-2}qppqp^{n-m-2}", "p^mqp^{n-m-1}"),
        row(S::Prop5Row, 5, "p^{m-1}qpqp^{n-m-2}", "p^mqp^{n-m-1}"),
        row(S::Prop5Row, 6, "p^{n-4}qppq", "p^{n-2}qp"),
        row(S::Prop5Row, 7, "p^{n-3}qpq", "p^{n-2}qp"),
        row(S::Prop5Row, 8, "p^mqp^{n-m-3}qp", "p^{n-1}q"),
        row(S::Prop5Row, 9, "p^{m-2}qpqpq^{n-m-2}", "p^mq^{n-m}"),
        row(S::Prop5Row, 10, "p^{m-2}qppqq^{n-m-2}", "p^mq^{n-m}"),
        row(S::Prop5Row, 11, "p^{n-2}qp", "p^{n-1}q"),
        row(S::Prop5Row, 12, "p^{n-3}qp^2", "p^{n-1}q"),
        row(S::Prop5Row, 13, "p^{m-1}qpqpq^{n-m-3}", "p^mqpq^{n-m-2}"),
        row(S::Prop5Row, 14, "p^{n-3}q^2p", "p^{n-2}q^2"),
        row(S::Prop5Row, 15, "p^{n-4}qppq", "p^{n-3}q^2p"),
        row(S::Prop5Row, 16, "p^{n-4}qpqp", "p^{n-3}qpq"),
        row(S::Prop5Row, 17, "p^{m-1}q^{n-m-1}pq", "p^mq^{n-m-1}p"),
        row(S::Prop5Row, 18, "p^{m-1}q^{n-m}p", "p^mq^{n-m}"),
    };
    return patterns;
}

}  // namespace delcode
