#include "seal/llm/parsers.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace seal;
using namespace seal::llm;

TEST_CASE("game24 answers: the final Answer line wins") {
    std::string reply = "Steps:\nstep1: 4 + 8 = 12; (left: 4 6 12)\n"
                        "step2: 6 - 4 = 2; (left: 2 12)\n"
                        "step3: 2 * 12 = 24; (left: 24)\n"
                        "Answer: (6 - 4) * (4 + 8) = 24";
    auto parsed = parse_answer(DomainKind::game24, reply);
    REQUIRE(parsed.has_value());
    CHECK(*parsed == "(6 - 4) * (4 + 8) = 24");

    CHECK_FALSE(parse_answer(DomainKind::game24, "no answer line here").has_value());
    CHECK_FALSE(parse_answer(DomainKind::game24, "").has_value());

    auto last = parse_answer(DomainKind::game24, "Answer: 1 + 1 = 2\nAnswer: 2 * 12 = 24");
    REQUIRE(last.has_value());
    CHECK(*last == "2 * 12 = 24");

    auto markdown = parse_answer(DomainKind::game24, "**Answer:** (6 - 4) * (4 + 8) = 24");
    REQUIRE(markdown.has_value());
    CHECK(*markdown == "(6 - 4) * (4 + 8) = 24");
}

TEST_CASE("crosswords answers: the 5x5 block after Output") {
    std::string reply = "Thoughts:\nh1. A lunar valley: RILLE\n\nOutput:\n"
                        "R I L L E\nO L E I N\nT E M P T\nA B A S E\nL O N E R\n";
    auto parsed = parse_answer(DomainKind::crosswords, reply);
    REQUIRE(parsed.has_value());
    CHECK(*parsed == "R I L L E\nO L E I N\nT E M P T\nA B A S E\nL O N E R");
    CHECK_FALSE(parse_answer(DomainKind::crosswords, "Output:\nR I L L E\nO L E I N").has_value());
    CHECK_FALSE(parse_answer(DomainKind::crosswords, "no grid").has_value());
}

TEST_CASE("blocksworld answers: action lines, numbering tolerated") {
    std::string reply = "Plan:\n1. pickup a\n2. stack a b\ndone!";
    auto parsed = parse_answer(DomainKind::blocksworld, reply);
    REQUIRE(parsed.has_value());
    CHECK(*parsed == "pickup a\nstack a b");
    CHECK_FALSE(parse_answer(DomainKind::blocksworld, "I cannot help with that").has_value());
}

TEST_CASE("validity parsing: the documented examples") {
    auto yes = parse_validity("State Precheck:\nAnswer: yes; Reason: State 1 is likely to reach 24");
    REQUIRE(yes.has_value());
    CHECK(yes->yes);
    CHECK(yes->states == std::set<int>{1});

    auto no = parse_validity("Answer: no;");
    REQUIRE(no.has_value());
    CHECK_FALSE(no->yes);
    CHECK(no->states.empty());

    auto multi = parse_validity(
        "Answer: yes; Reason: State 0 and State 2 can directly reach to 24 because the single "
        "number 24 is directly equal to 24, 24 = 24.");
    REQUIRE(multi.has_value());
    CHECK(multi->states == std::set<int>{0, 2});

    CHECK_FALSE(parse_validity("").has_value());
    CHECK_FALSE(parse_validity("scrambled nonsense").has_value());
}

TEST_CASE("value parsing: conclusion buckets and the score map") {
    auto sure = parse_value("Calculation: 10 + 14 = 24; Comment: ...; Conclusion: sure");
    REQUIRE(sure.has_value());
    CHECK(*sure == ValueBucket::sure);
    CHECK(bucket_score(*sure) == doctest::Approx(1.0));

    auto impossible = parse_value("Comment: no way\nConclusion: impossible");
    REQUIRE(impossible.has_value());
    CHECK(bucket_score(*impossible) == doctest::Approx(0.1));

    auto maybe = parse_value("Conclusion: maybe");
    REQUIRE(maybe.has_value());
    CHECK(*maybe == ValueBucket::likely);
    CHECK(bucket_score(*maybe) == doctest::Approx(0.5));

    CHECK_FALSE(parse_value("sure, whatever").has_value()); // no Conclusion line
    CHECK_FALSE(parse_value("Conclusion: unsure of everything").has_value());
}

TEST_CASE("solution tag extraction: last tag wins, whitespace stripped") {
    auto one = extract_solution_tag("text <solution> 2 + 3 * 5 + 7 = 24 </solution> more");
    REQUIRE(one.has_value());
    CHECK(*one == "2 + 3 * 5 + 7 = 24");

    auto last = extract_solution_tag(
        "<solution>1 + 1 = 2</solution> rethinking <solution>(3 + 12 - 7) * 3 = 24</solution>");
    REQUIRE(last.has_value());
    CHECK(*last == "(3 + 12 - 7) * 3 = 24");

    CHECK_FALSE(extract_solution_tag("no tags at all").has_value());
    CHECK_FALSE(extract_solution_tag("<solution>   </solution>").has_value());
}

TEST_CASE("extracted self-search solutions verify against the rule verifier") {
    auto expr = extract_solution_tag("... <solution> (3 + 12 - 7) * 3 = 24 </solution>");
    REQUIRE(expr.has_value());
    CHECK(game24::verify_expression(test::g24({3, 3, 7, 12}), *expr));
}

TEST_CASE("parsers never throw on random bytes") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        std::string junk;
        std::size_t len = rng() % 200;
        for (std::size_t i = 0; i < len; ++i)
            junk += static_cast<char>(rng() % 96 + 32);
        if (rng() % 3 == 0) junk += "\nAnswer: ";
        if (rng() % 5 == 0) junk += "<solution>";
        CHECK_NOTHROW(parse_answer(DomainKind::game24, junk));
        CHECK_NOTHROW(parse_answer(DomainKind::crosswords, junk));
        CHECK_NOTHROW(parse_answer(DomainKind::blocksworld, junk));
        CHECK_NOTHROW(parse_validity(junk));
        CHECK_NOTHROW(parse_value(junk));
        CHECK_NOTHROW(extract_solution_tag(junk));
    }
}

TEST_CASE("round trip: documented few-shot completions parse back to their answers") {
    // direct solution generation examples
    CHECK(*parse_answer(DomainKind::game24,
                        "Steps:\nstep1: 1 * 1 = 1; (left: 1 4 6)\nAnswer: 1 * 1 * 4 * 6 = 24") ==
          "1 * 1 * 4 * 6 = 24");
    // ranking examples
    CHECK(*parse_value("Current numbers: 10 14; Calculation: 10 + 14 = 24; Comment: I can obtain "
                       "the 24 by using current numbers; Conclusion: sure") ==
          ValueBucket::sure);
    CHECK(*parse_value("Current numbers: 11 12; ... Conclusion: impossible") ==
          ValueBucket::impossible);
    CHECK(*parse_value("Current numbers: 5 7 8; ... Conclusion: likely") == ValueBucket::likely);
}
