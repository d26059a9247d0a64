#include <doctest.h>

#include <random>

#include "delcode/error.hpp"
#include "delcode/word.hpp"
#include "oracles.hpp"

using namespace delcode;

namespace {

BinaryWord W(std::string_view s) { return BinaryWord::parse(s); }

std::vector<std::string> strings(const WordSet& set) {
    std::vector<std::string> out;
    for (const auto& w : set) out.push_back(w.str());
    return out;
}

std::vector<BinaryWord> words_up_to(int max_len) {
    std::vector<BinaryWord> out;
    for (int n = 0; n <= max_len; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.emplace_back(b, n);
    return out;
}

}  // namespace

TEST_CASE("parse and print") {
    CHECK(W("0100").str() == "0100");
    CHECK(W("").empty());
    CHECK(W("1").bits() == 1);
    CHECK(W("10").bits() == 2);
    CHECK(W("0100").at(2) == 1);
    CHECK(W("0100").symbol(1) == 0);
    CHECK_THROWS_AS(W("0100").symbol(5), DomainError);
    CHECK_THROWS_AS(W("012"), DomainError);
    CHECK_THROWS_AS(W(std::string(63, '0')), DomainError);
    CHECK_NOTHROW(W(std::string(62, '1')));
    CHECK_THROWS_AS(BinaryWord(0b100, 2), DomainError);
    CHECK(W("00") != W("000"));
    CHECK(W("001") < W("010"));
}

TEST_CASE("weight") {
    CHECK(weight(W("00000")) == 0);
    CHECK(weight(W("10101")) == 3);
    CHECK(weight(W("11000")) == 2);
}

TEST_CASE("symmetry transforms") {
    CHECK(complement(W("00011")) == W("11100"));
    CHECK(reverse(W("00011")) == W("11000"));
    CHECK(reverse_complement(W("00000")) == W("11111"));
    CHECK(reverse(W("")) == W(""));
    for (const auto& w : words_up_to(8)) {
        CHECK(complement(reverse(w)) == reverse(complement(w)));
        CHECK(reverse(reverse(w)) == w);
    }
    const auto long_word = W("1" + std::string(60, '0') + "1");
    CHECK(reverse(long_word) == long_word);
}

TEST_CASE("delete_at") {
    CHECK(delete_at(W("0100"), 1) == W("100"));
    CHECK(delete_at(W("0100"), 3) == W("010"));
    CHECK(delete_at(W("1"), 1) == W(""));
    CHECK_THROWS_AS(delete_at(W("0100"), 0), DomainError);
    CHECK_THROWS_AS(delete_at(W("0100"), 5), DomainError);
    CHECK_THROWS_AS(delete_at(W(""), 1), DomainError);
}

TEST_CASE("deletion_ball fixtures") {
    CHECK(strings(deletion_ball(W("0100"), 1)) == std::vector<std::string>{"000", "010", "100"});
    CHECK(strings(deletion_ball(W("00000"), 1)) == std::vector<std::string>{"0000"});
    // All ten double deletions of 10101, deduplicated by the oracle.
    const auto expected = oracle::ball("10101", 2);
    CHECK(strings(deletion_ball(W("10101"), 2)) == std::vector<std::string>(expected.begin(), expected.end()));
    CHECK(deletion_ball(W("10101"), 2).size() == 7);
    CHECK(strings(deletion_ball(W("0110"), 0)) == std::vector<std::string>{"0110"});
    CHECK(strings(deletion_ball(W("0110"), 4)) == std::vector<std::string>{""});
    CHECK_THROWS_AS(deletion_ball(W("01"), 3), DomainError);
    CHECK_THROWS_AS(deletion_ball(W("01"), -1), DomainError);
}

TEST_CASE("deletion_ball matches the subset-of-positions oracle") {
    for (int n = 0; n <= 9; ++n)
        for (const auto& s : oracle::all_strings(n))
            for (int t = 0; t <= std::min(n, 3); ++t) {
                const auto expected = oracle::ball(s, t);
                REQUIRE(strings(deletion_ball(W(s), t)) == std::vector<std::string>(expected.begin(), expected.end()));
            }
}

TEST_CASE("ball recursion: D_t(w) is the union of D_{t-1}(x) over x in D_1(w)") {
    for (int n = 1; n <= 10; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            const BinaryWord w(b, n);
            for (int t = 1; t <= std::min(n, 3); ++t) {
                std::vector<BinaryWord> u;
                for (const auto& x : deletion_ball(w, 1))
                    for (const auto& y : deletion_ball(x, t - 1)) u.push_back(y);
                REQUIRE(WordSet(n - t, u) == deletion_ball(w, t));
            }
        }
}

TEST_CASE("membership: x in D_t(w) iff |x| = |w| - t and x is a subsequence of w") {
    for (int n = 1; n <= 8; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            const BinaryWord w(b, n);
            for (int t = 0; t <= n; ++t) {
                const auto ball = deletion_ball(w, t);
                for (std::uint64_t xb = 0; xb < (std::uint64_t{1} << (n - t)); ++xb) {
                    const BinaryWord x(xb, n - t);
                    REQUIRE(ball.contains(x) == is_subsequence(x, w));
                }
            }
        }
}

TEST_CASE("singleton ball iff constant word") {
    for (int n = 1; n <= 10; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            const BinaryWord w(b, n);
            for (int t = 1; t <= std::min(n - 1, 2); ++t)
                REQUIRE((deletion_ball(w, t).size() == 1) == w.is_constant());
        }
}

TEST_CASE("ball intersection iff deletion distance <= t") {
    for (int n = 1; n <= 8; ++n) {
        const auto words = all_words(n);
        for (int t = 1; t <= std::min(n, 3); ++t) {
            std::vector<WordSet> balls;
            for (const auto& w : words) balls.push_back(deletion_ball(w, t));
            for (std::size_t i = 0; i < words.size(); ++i)
                for (std::size_t j = 0; j < words.size(); ++j)
                    REQUIRE(balls[i].intersects(balls[j]) ==
                            (deletion_distance(words.members()[i], words.members()[j]) <= t));
        }
    }
}

TEST_CASE("balls commute with reversal and complement") {
    for (int n = 1; n <= 10; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            const BinaryWord w(b, n);
            for (int t = 1; t <= std::min(n, 2); ++t) {
                const auto ball = deletion_ball(w, t);
                std::vector<BinaryWord> rev;
                std::vector<BinaryWord> comp;
                for (const auto& x : ball) {
                    rev.push_back(reverse(x));
                    comp.push_back(complement(x));
                }
                REQUIRE(deletion_ball(reverse(w), t) == WordSet(n - t, rev));
                REQUIRE(deletion_ball(complement(w), t) == WordSet(n - t, comp));
            }
        }
}

TEST_CASE("is_subsequence") {
    CHECK(is_subsequence(W("010"), W("0100")));
    CHECK_FALSE(is_subsequence(W("11"), W("00")));
    CHECK(is_subsequence(W(""), W("")));
    CHECK(is_subsequence(W(""), W("1011")));
    CHECK_FALSE(is_subsequence(W("0100"), W("010")));
}

TEST_CASE("lcs and distances: fixtures") {
    CHECK(lcs_length(W("0100"), W("110101")) == oracle::lcs("0100", "110101"));
    CHECK(lcs_length(W("0100"), W("110101")) == 3);
    CHECK(lcs_length(W("00000"), W("11111")) == 0);
    CHECK(lcs_length(W("10110"), W("10110")) == 5);
    CHECK(levenshtein_indel(W("0100"), W("110101")) == 4);
    CHECK(levenshtein_indel(W("00011"), W("10101")) == 4);
    CHECK(levenshtein_indel(W("0110"), W("0110")) == 0);
    CHECK(deletion_distance(W("00000"), W("11111")) == 5);
    CHECK(deletion_distance(W("00011"), W("10101")) == 2);
    CHECK(deletion_distance(W("1101"), W("1101")) == 0);
    CHECK_THROWS_AS(deletion_distance(W("01"), W("011")), DomainError);
    CHECK(hamming_distance(W("0001"), W("0101")) == 1);
    CHECK(hamming_distance(W("00011"), W("10101")) == 3);
    CHECK(hamming_distance(W("011010"), complement(W("011010"))) == 6);
    CHECK_THROWS_AS(hamming_distance(W("01"), W("011")), DomainError);
}

TEST_CASE("lcs_length agrees with the dynamic program on random long words") {
    std::mt19937_64 rng(20261015);
    for (int trial = 0; trial < 5000; ++trial) {
        const int a = static_cast<int>(rng() % 63);
        const int b = static_cast<int>(rng() % 63);
        const BinaryWord x(rng() & low_mask(a), a);
        const BinaryWord y(rng() & low_mask(b), b);
        REQUIRE(lcs_length(x, y) == oracle::lcs(x.str(), y.str()));
    }
}

TEST_CASE("indel distance via LCS equals breadth-first edit search for |x|,|y| <= 6") {
    for (int a = 0; a <= 6; ++a)
        for (const auto& x : oracle::all_strings(a)) {
            const auto dist = oracle::indel_distances(x, static_cast<std::size_t>(a) + 6);
            for (int b = 0; b <= 6; ++b)
                for (const auto& y : oracle::all_strings(b)) REQUIRE(levenshtein_indel(W(x), W(y)) == dist.at(y));
        }
}

TEST_CASE("run_length_encode") {
    CHECK(run_length_encode(W("00011")) == std::vector<Run>{{0, 3}, {1, 2}});
    CHECK(run_length_encode(W("10101")) == std::vector<Run>{{1, 1}, {0, 1}, {1, 1}, {0, 1}, {1, 1}});
    CHECK(run_length_encode(W("1111")) == std::vector<Run>{{1, 4}});
    CHECK_THROWS_AS(run_length_encode(W("")), DomainError);
    for (const auto& w : words_up_to(9)) {
        if (w.empty()) continue;
        std::string rebuilt;
        int previous = -1;
        for (const auto& r : run_length_encode(w)) {
            REQUIRE(r.length >= 1);
            REQUIRE(r.symbol != previous);
            previous = r.symbol;
            rebuilt += std::string(r.length, static_cast<char>('0' + r.symbol));
        }
        REQUIRE(rebuilt == w.str());
    }
}

TEST_CASE("WordSet") {
    const WordSet s(3, {W("101"), W("001"), W("101")});
    CHECK(s.size() == 2);
    CHECK(s.members().front() == W("001"));
    CHECK(s.contains(W("101")));
    CHECK_FALSE(s.contains(W("111")));
    CHECK(s.includes(WordSet(3, {W("001")})));
    CHECK_FALSE(WordSet(3, {W("001")}).includes(s));
    CHECK_THROWS_AS(WordSet(3, {W("01")}), DomainError);
    CHECK(all_words(4).size() == 16);
}
