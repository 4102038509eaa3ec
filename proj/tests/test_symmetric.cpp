#include <catch2/catch_amalgamated.hpp>

#include "chipgame/bounds.hpp"
#include "chipgame/solver.hpp"
#include "chipgame/symmetric.hpp"

using namespace chipgame;

TEST_CASE("one label on two columns survives one removal", "[symmetric]") {
    CHECK(symmetric_evaluate(1, 1, 2) == GameValue::PusherWins);
}

TEST_CASE("below the doubling threshold the remover wins", "[symmetric]") {
    // Pusher needs at least 2^(k-1) labels against two columns.
    for (int n = 1; n <= 3; ++n) CHECK(symmetric_evaluate(3, n, 2) == GameValue::RemoverWins);
    CHECK(symmetric_evaluate(2, 1, 2) == GameValue::RemoverWins);
}

TEST_CASE("copying each chip per column transfers plain wins", "[symmetric]") {
    REQUIRE(evaluate(GameSpec(2, {1, 1, 1})).value == GameValue::PusherWins);
    CHECK(symmetric_evaluate(2, 3, 3) == GameValue::PusherWins);
}

TEST_CASE("a symmetric win is a win for the unrestricted pusher", "[symmetric][slow]") {
    for (int k = 1; k <= 2; ++k)
        for (int n = 1; n <= 2; ++n)
            for (int r = 2; r <= 3; ++r) {
                if (symmetric_evaluate(k, n, r) != GameValue::PusherWins) continue;
                INFO("k " << k << " n " << n << " r " << r);
                CHECK(evaluate(GameSpec(k, std::vector<int>(r, n))).value ==
                      GameValue::PusherWins);
            }
}

TEST_CASE("threshold one needs only a second column", "[symmetric]") {
    // Push any one label: the removal clears one column, the other survives
    // at the threshold.
    for (int n = 1; n <= 3; ++n)
        for (int r = 2; r <= 4; ++r) CHECK(symmetric_evaluate(1, n, r) == GameValue::PusherWins);
}

TEST_CASE("a single column always loses", "[symmetric]") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 3; ++n) CHECK(symmetric_evaluate(k, n, 1) == GameValue::RemoverWins);
}

TEST_CASE("budget exhaustion is an explicit error", "[symmetric]") {
    CHECK_THROWS_AS(symmetric_evaluate(3, 4, 3, 10), SymmetricBudgetError);
    CHECK_THROWS_AS(SymmetricSolver(1, 1, 9), std::invalid_argument);
}

TEST_CASE("hyperedge bounds as exact rationals", "[symmetric]") {
    PolBounds b1 = pol_bounds(1, 2);
    CHECK(b1.lower == 1);
    CHECK(b1.upper == 32);

    PolBounds b3 = pol_bounds(3, 2);
    CHECK(b3.lower == 4);
    CHECK(b3.upper == 256);

    PolBounds b23 = pol_bounds(2, 3);
    CHECK(b23.lower == Rational(3, 2));
    CHECK(b23.upper == Rational(729, 4));

    CHECK_THROWS_AS(pol_bounds(2, 1), std::invalid_argument);
}

TEST_CASE("single edge, two colors: the presenter forces a missing color", "[symmetric]") {
    PancolorTranscript t = play_pancoloring_game(1, 1, 2, optimal_pusher_strategy(1, 1, 2),
                                                 optimal_remover_strategy(1, 1, 2));
    CHECK(t.correspondence_ok);
    REQUIRE(t.winner.has_value());
    CHECK(*t.winner == PancolorWinner::Presenter);
    CHECK(t.rounds.size() == 1);  // one vertex decides it
}

TEST_CASE("winning pusher strategies translate to presenter wins", "[symmetric]") {
    REQUIRE(symmetric_evaluate(2, 3, 3) == GameValue::PusherWins);
    PancolorTranscript t = play_pancoloring_game(2, 3, 3, optimal_pusher_strategy(2, 3, 3),
                                                 optimal_remover_strategy(2, 3, 3));
    CHECK(t.correspondence_ok);
    REQUIRE(t.winner.has_value());
    CHECK(*t.winner == PancolorWinner::Presenter);
    CHECK_FALSE(t.text().empty());
}

TEST_CASE("winning remover strategies translate to panchromatic colorings", "[symmetric]") {
    REQUIRE(symmetric_evaluate(3, 3, 2) == GameValue::RemoverWins);
    PancolorTranscript t = play_pancoloring_game(3, 3, 2, optimal_pusher_strategy(3, 3, 2),
                                                 optimal_remover_strategy(3, 3, 2));
    CHECK(t.correspondence_ok);
    REQUIRE(t.winner.has_value());
    CHECK(*t.winner == PancolorWinner::Colorer);
}

TEST_CASE("illegal strategy moves truncate the transcript with a diagnosis", "[symmetric]") {
    SymmetricPusherStrategy broken = [](const SymmetricPosition&) { return std::vector<int>{}; };
    PancolorTranscript t =
        play_pancoloring_game(2, 2, 2, broken, optimal_remover_strategy(2, 2, 2));
    CHECK_FALSE(t.correspondence_ok);
    CHECK_FALSE(t.winner.has_value());
    CHECK(t.diagnosis.find("pushed nothing") != std::string::npos);

    SymmetricPusherStrategy dead = [](const SymmetricPosition&) { return std::vector<int>{7}; };
    PancolorTranscript t2 =
        play_pancoloring_game(2, 2, 2, dead, optimal_remover_strategy(2, 2, 2));
    CHECK_FALSE(t2.correspondence_ok);
}

TEST_CASE("random-ish strategies keep the correspondence intact", "[symmetric]") {
    // Push everything alive; remove columns round-robin.
    SymmetricPusherStrategy all = [](const SymmetricPosition& p) {
        std::vector<int> out;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i].alive) out.push_back(static_cast<int>(i));
        return out;
    };
    int turn = 0;
    SymmetricRemoverStrategy rr = [&turn](const SymmetricPosition&, const std::vector<int>&) {
        return turn++ % 2;
    };
    PancolorTranscript t = play_pancoloring_game(2, 3, 2, all, rr);
    CHECK(t.correspondence_ok);
    CHECK(t.winner.has_value());
}
