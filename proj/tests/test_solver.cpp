#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chipgame/solver.hpp"
#include "helpers.hpp"
#include "reference.hpp"

using namespace chipgame;
using testutil::board;
using testutil::pusher_state;

TEST_CASE("single-column games are lost: every push is removable", "[solver]") {
    CHECK(evaluate(GameSpec(1, {1})).value == GameValue::RemoverWins);
    CHECK(testref::plain_minimax_value({1}, 1) == 0);
    CHECK(evaluate(GameSpec(3, {4})).value == GameValue::RemoverWins);
}

TEST_CASE("complete graphs: pusher wins exactly below the column count", "[solver]") {
    for (int m = 1; m <= 4; ++m) {
        std::vector<int> sizes(m, 1);
        for (int k = 1; k <= m + 1; ++k) {
            GameValue v = evaluate(GameSpec(k, sizes)).value;
            CHECK(v == (k < m ? GameValue::PusherWins : GameValue::RemoverWins));
        }
    }
}

TEST_CASE("paintability of the known small families", "[solver]") {
    CHECK(paintability({2, 2}) == 2);
    CHECK(paintability({2, 2, 2}) == 3);
    // K_{2,3} is the theta graph on three length-2 paths and is 2-paintable;
    // the n+1 pattern of the {2,...,2,3} family starts at K_{2,2,3}.
    CHECK(paintability({2, 3}) == 2);
    CHECK(paintability({2, 2, 3}) == 4);
    std::vector<std::pair<Row, GameValue>> log;
    CHECK(paintability({1, 1, 1}, SolveConfig{}, &log) == 3);
    REQUIRE(log.size() == 1);  // the default lower bound is already the answer
    CHECK(log[0].first == 3);
}

TEST_CASE("default threshold windows", "[solver]") {
    CHECK(default_gamma_bounds({3, 3, 3, 3}) == std::pair<Row, Row>{4, 6});
    CHECK(default_gamma_bounds({2, 2}) == std::pair<Row, Row>{2, 2});
    CHECK(default_gamma_bounds({2, 3}) == std::pair<Row, Row>{2, 3});
    CHECK(default_gamma_bounds({1, 1, 1}) == std::pair<Row, Row>{3, 3});
    CHECK(default_gamma_bounds({4, 2}) == std::pair<Row, Row>{2, 6});
    CHECK_THROWS_AS(paintability({2, 2}, 1, 1), PaintabilityRangeError);
}

TEST_CASE("identical-column dominance pruning", "[solver]") {
    GameState twin = pusher_state(GameSpec(2, {2, 2}), "[[0,0],[0,0]]");
    PusherMove lopsided = testutil::move({{{0, 2}}, {{0, 1}}});
    PusherMove uniform = testutil::move({{{0, 2}}, {{0, 2}}});
    CHECK(has_dominated_duplicate(twin, lopsided));
    CHECK_FALSE(has_dominated_duplicate(twin, uniform));
    auto pruned = prune_pusher_moves(twin, {lopsided, uniform});
    REQUIRE(pruned.size() == 1);
    CHECK(pruned[0] == uniform);

    // {2,0} and {1,1} are incomparable, so the mixed move survives.
    GameState mixed = pusher_state(GameSpec(3, {2, 2}), "[[1,0],[1,0]]");
    PusherMove split = testutil::move({{{1, 1}}, {{0, 1}}});
    CHECK_FALSE(has_dominated_duplicate(mixed, split));

    GameState single = pusher_state(GameSpec(2, {2}), "[[0,0]]");
    auto moves = legal_pusher_moves(single);
    CHECK(prune_pusher_moves(single, moves) == moves);

    // The generator flag matches the post-filter.
    auto generated = legal_pusher_moves(twin, MoveGenOptions{true});
    auto filtered = prune_pusher_moves(twin, legal_pusher_moves(twin));
    CHECK(generated.size() == filtered.size());
}

TEST_CASE("dominated remover responses are dropped", "[solver]") {
    GameSpec spec(3, {2, 2});
    // Pushes only in the first column: removing the other is never better.
    GameState rstate = apply_pusher(pusher_state(spec, "[[0,0],[0,0]]"),
                                    testutil::move({{{0, 1}}, {}}));
    auto kept = prune_remover_moves(rstate, {RemoverMove{0}, RemoverMove{1}});
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].column == 0);

    // Identical columns with identical pending collapse to one representative.
    GameState rsym = apply_pusher(pusher_state(GameSpec(2, {1, 1}), "[[0],[0]]"),
                                  testutil::move({{{0, 1}}, {{0, 1}}}));
    CHECK(prune_remover_moves(rsym, {RemoverMove{0}, RemoverMove{1}}).size() == 1);

    // Incomparable children both survive.
    GameState rmix = apply_pusher(pusher_state(GameSpec(3, {2, 1}), "[[1],[0,0]]"),
                                  testutil::move({{{1, 1}}, {{0, 2}}}));
    CHECK(prune_remover_moves(rmix, {RemoverMove{0}, RemoverMove{1}}).size() == 2);
}

TEST_CASE("closure classification", "[solver]") {
    GameSpec spec(3, {2, 2});
    ClosureStore store(spec);
    GameState probe = pusher_state(spec, "[[2,1],[1,0]]");
    CHECK(classify_by_closure(probe, store) == Classification::Unknown);

    store.insert(probe.board, GameValue::PusherWins);
    CHECK(classify_by_closure(probe, store) == Classification::Winning);

    GameState higher = pusher_state(spec, "[[3,2],[2,1]]");
    CHECK(classify_by_closure(higher, store) == Classification::Winning);

    GameState lower = pusher_state(spec, "[[1,0],[0,0]]");
    CHECK(classify_by_closure(lower, store) == Classification::Unknown);

    store.insert(lower.board, GameValue::RemoverWins);
    CHECK(classify_by_closure(pusher_state(spec, "[[0,0],[0]]"), store) ==
          Classification::Losing);
}

TEST_CASE("solver agrees with the plain minimax on small games", "[solver][slow]") {
    for (const auto& sizes : testref::size_profiles(5, 5)) {
        for (Row gamma = 1; gamma <= 4; ++gamma) {
            const int expected = testref::plain_minimax_value(sizes, gamma);
            SolveResult got = evaluate(GameSpec(gamma, sizes));
            INFO("sizes " << encode_sizes(GameSpec(gamma, sizes)) << " gamma " << gamma);
            CHECK((got.value == GameValue::PusherWins ? 1 : 0) == expected);
        }
    }
}

TEST_CASE("every pruning toggle yields the same values", "[solver][slow]") {
    std::vector<SolveConfig> configs(4);
    configs[1].prune_pusher = false;
    configs[2].prune_remover = false;
    configs[3].use_domination = false;
    SolveConfig compact;
    compact.compact_store = true;
    configs.push_back(compact);

    for (const auto& sizes : testref::size_profiles(4, 4)) {
        for (Row gamma = 1; gamma <= 3; ++gamma) {
            GameValue base = evaluate(GameSpec(gamma, sizes)).value;
            for (const auto& cfg : configs)
                CHECK(evaluate(GameSpec(gamma, sizes), cfg).value == base);
        }
    }
}

TEST_CASE("game value is monotone in the threshold", "[solver]") {
    for (const std::vector<int>& sizes :
         {std::vector<int>{2, 2}, std::vector<int>{1, 1, 1}, std::vector<int>{3, 2}}) {
        bool seen_remover = false;
        for (Row gamma = 1; gamma <= 5; ++gamma) {
            GameValue v = evaluate(GameSpec(gamma, sizes)).value;
            if (v == GameValue::RemoverWins) seen_remover = true;
            if (seen_remover) CHECK(v == GameValue::RemoverWins);
        }
        CHECK(seen_remover);
    }
}

TEST_CASE("stored classifications respect the domination order", "[solver]") {
    SolveResult result = evaluate(GameSpec(2, {2, 2}));
    for (const auto& losing : result.closures.losing())
        for (const auto& winning : result.closures.winning())
            CHECK_FALSE(board_geq(losing.board, winning.board));
}

TEST_CASE("the initial state lands in the closure matching the value", "[solver]") {
    for (Row gamma : {2, 3}) {
        SolveResult result = evaluate(GameSpec(gamma, {2, 2}));
        const std::string key = encode_board(initial_state(result.closures.spec()).board);
        const auto& matching = result.value == GameValue::PusherWins
                                   ? result.closures.winning()
                                   : result.closures.losing();
        bool found = false;
        for (const auto& e : matching) found |= e.key == key;
        CHECK(found);
    }
}

TEST_CASE("no board is classified both ways", "[solver]") {
    SolveResult result = evaluate(GameSpec(3, {2, 2, 1}));
    for (const auto& w : result.closures.winning())
        for (const auto& l : result.closures.losing()) CHECK(w.key != l.key);
}

TEST_CASE("single-threaded runs are byte-deterministic", "[solver]") {
    SolveResult a = evaluate(GameSpec(3, {2, 3}));
    SolveResult b = evaluate(GameSpec(3, {2, 3}));
    CHECK(a.value == b.value);
    CHECK(a.stats.nodes == b.stats.nodes);
    CHECK(serialize(a.closures.export_closure(ClosureKind::Winning)) ==
          serialize(b.closures.export_closure(ClosureKind::Winning)));
    CHECK(serialize(a.closures.export_closure(ClosureKind::Losing)) ==
          serialize(b.closures.export_closure(ClosureKind::Losing)));
}

TEST_CASE("parallel solves agree with the single-threaded value", "[solver]") {
    SolveConfig parallel;
    parallel.threads = 2;
    for (const std::vector<int>& sizes : {std::vector<int>{2, 2}, std::vector<int>{1, 1, 1}}) {
        for (Row gamma = 1; gamma <= 3; ++gamma)
            CHECK(evaluate(GameSpec(gamma, sizes), parallel).value ==
                  evaluate(GameSpec(gamma, sizes)).value);
    }
}

TEST_CASE("exhausted budgets give an explicit failure, never a value", "[solver]") {
    SolveConfig tiny;
    tiny.max_nodes = 5;
    CHECK_THROWS_AS(evaluate(GameSpec(4, {3, 3}), tiny), InconclusiveError);
    SolveConfig small_store;
    small_store.max_store_states = 3;
    CHECK_THROWS_AS(evaluate(GameSpec(4, {3, 3}), small_store), InconclusiveError);
}

TEST_CASE("mid-game positions can be solved directly", "[solver]") {
    GameSpec spec(2, {2, 2});
    // One chip already at row 1 in each column: pushing both wins outright.
    GameState state = pusher_state(spec, "[[1,0],[1,0]]");
    CHECK(evaluate_state(state).value == GameValue::PusherWins);

    GameState lost = pusher_state(spec, "[[0],[]]");
    CHECK(evaluate_state(lost).value == GameValue::RemoverWins);

    GameState rstate = apply_pusher(state, testutil::move({{{1, 1}}, {{1, 1}}}));
    CHECK_THROWS_AS(evaluate_state(rstate), std::invalid_argument);
}

TEST_CASE("antichain compaction keeps the classification power", "[solver]") {
    SolveConfig compact;
    compact.compact_store = true;
    SolveResult full = evaluate(GameSpec(3, {2, 2}));
    SolveResult small = evaluate(GameSpec(3, {2, 2}), compact);
    CHECK(full.value == small.value);
    CHECK(small.closures.winning_count() <= full.closures.winning_count());
    CHECK(small.closures.losing_count() <= full.closures.losing_count());
    // Everything the full store resolved classifies identically in the compact one.
    for (const auto& e : full.closures.winning())
        CHECK(small.closures.classify(e.board) == Classification::Winning);
    for (const auto& e : full.closures.losing())
        CHECK(small.closures.classify(e.board) == Classification::Losing);
}
