#include "moderato/sim.hpp"

#include "moderato/io.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace moderato;

namespace {

std::vector<AgentProfile> uniform_profiles(int n) {
    AgentProfile base;
    base.affinity = Eigen::VectorXd::Zero(n);
    return std::vector<AgentProfile>(n, base);
}

} // namespace

TEST_CASE("a fully compliant addressee always answers") {
    std::vector<AgentProfile> profiles = uniform_profiles(4);
    profiles[2].compliance = 1.0;
    Rng rng(5);
    for (int i = 0; i < 1000; ++i)
        CHECK(sample_next_speaker(profiles, 0, Directive::address(2), rng) == 2);
}

TEST_CASE("open floor follows extroversion weights") {
    std::vector<AgentProfile> profiles = uniform_profiles(4);
    profiles[0].extroversion = 3.0;
    Rng rng(7);
    int hits = 0;
    for (int i = 0; i < 10000; ++i)
        if (sample_next_speaker(profiles, {}, Directive::open_floor(), rng) == 0)
            ++hits;
    CHECK(std::abs(hits / 10000.0 - 0.5) < 0.03); // weight 3 of 6
}

TEST_CASE("open floor folds in affinity toward the last speaker") {
    std::vector<AgentProfile> profiles = uniform_profiles(4);
    profiles[0].affinity << 0, 4, 0, 0;
    profiles[1].affinity << 4, 0, 0, 0;
    profiles[2].affinity << 0, 0, 0, 4;
    profiles[3].affinity << 0, 0, 4, 0;
    Rng rng(9);
    int hits = 0;
    for (int i = 0; i < 10000; ++i)
        if (sample_next_speaker(profiles, 0, Directive::open_floor(), rng) == 1)
            ++hits;
    // weights (1, 5, 1, 1) after speaker 0
    CHECK(std::abs(hits / 10000.0 - 5.0 / 8.0) < 0.03);
}

TEST_CASE("non-compliance excludes the addressee") {
    std::vector<AgentProfile> profiles = uniform_profiles(4);
    profiles[2].compliance = 0.0;
    Rng rng(11);
    for (int i = 0; i < 1000; ++i)
        CHECK(sample_next_speaker(profiles, 0, Directive::repeat(2), rng) != 2);
}

TEST_CASE("turn sampling follows the configured gamma distribution") {
    AgentProfile profile;
    profile.affinity = Eigen::VectorXd::Zero(4);

    SUBCASE("empirical mean matches the configured mean") {
        Rng rng(13);
        double sum = 0.0;
        for (int i = 0; i < 10000; ++i)
            sum += sample_turn(profile, rng).first;
        CHECK(std::abs(sum / 10000.0 - 8.0) < 0.3);
    }

    SUBCASE("a huge shape collapses to the mean") {
        profile.duration_shape = 1e6;
        Rng rng(17);
        for (int i = 0; i < 100; ++i)
            CHECK(std::abs(sample_turn(profile, rng).first - 8.0) < 0.08); // within 1%
    }

    SUBCASE("words scale with duration") {
        profile.duration_shape = 1e6;
        profile.mean_turn_duration = 5.0;
        profile.words_per_second = 2.0;
        Rng rng(19);
        for (int i = 0; i < 100; ++i) {
            const auto [duration, words] = sample_turn(profile, rng);
            CHECK(words == std::lround(duration * 2.0));
            CHECK(words == 10);
        }
    }

    SUBCASE("durations are clamped and words stay positive") {
        profile.mean_turn_duration = 300.0;
        Rng rng(23);
        for (int i = 0; i < 200; ++i)
            CHECK(sample_turn(profile, rng).first <= 60.0);
        profile.mean_turn_duration = 0.01;
        profile.words_per_second = 0.01;
        for (int i = 0; i < 200; ++i) {
            const auto [duration, words] = sample_turn(profile, rng);
            CHECK(duration >= 0.5);
            CHECK(words >= 1);
        }
    }
}

TEST_CASE("config validation rejects broken setups") {
    GroupConfig config = preset_config("dominant-one");
    CHECK_NOTHROW(validate(config));

    GroupConfig tiny = config;
    tiny.profiles.resize(1);
    CHECK_THROWS_AS(validate(tiny), std::invalid_argument);

    GroupConfig bad_duration = config;
    bad_duration.session_duration_s = 0.0;
    CHECK_THROWS_AS(validate(bad_duration), std::invalid_argument);

    GroupConfig bad_compliance = config;
    bad_compliance.profiles[1].compliance = 1.5;
    CHECK_THROWS_AS(validate(bad_compliance), std::invalid_argument);

    GroupConfig bad_affinity = config;
    bad_affinity.profiles[0].affinity = Eigen::VectorXd::Zero(3);
    CHECK_THROWS_AS(validate(bad_affinity), std::invalid_argument);

    GroupConfig self_affinity = config;
    self_affinity.profiles[2].affinity[2] = 1.0;
    CHECK_THROWS_AS(validate(self_affinity), std::invalid_argument);

    GroupConfig bad_repeats = config;
    bad_repeats.max_repeats = 0;
    CHECK_THROWS_AS(validate(bad_repeats), std::invalid_argument);
}

TEST_CASE("presets define the two archetypes") {
    const GroupConfig dominant = preset_config("dominant-one");
    CHECK(dominant.n() == 4);
    CHECK(dominant.profiles[0].extroversion > dominant.profiles[1].extroversion);
    CHECK(dominant.profiles[0].mean_turn_duration ==
          doctest::Approx(2.0 * dominant.profiles[1].mean_turn_duration));

    const GroupConfig cliques = preset_config("two-cliques");
    CHECK(cliques.profiles[0].affinity[1] > 0.0);
    CHECK(cliques.profiles[0].affinity[2] == 0.0);
    CHECK(cliques.profiles[2].affinity[3] > 0.0);
    CHECK(cliques.profiles[3].affinity[2] > 0.0);
    CHECK(cliques.profiles[1].affinity[0] == cliques.profiles[0].affinity[1]);

    const GroupConfig six = preset_config("two-cliques", 6);
    CHECK(six.n() == 6);
    CHECK(six.profiles[0].affinity[2] > 0.0); // {0,1,2} vs {3,4,5}
    CHECK(six.profiles[0].affinity[3] == 0.0);

    CHECK_THROWS_AS(preset_config("nope"), std::invalid_argument);
    CHECK_THROWS_AS(preset_config("dominant-one", 1), std::invalid_argument);
}

TEST_CASE("conversations are deterministic in the seed") {
    GroupConfig config = preset_config("two-cliques");
    config.policy = PolicyKind::CommunitySoft;
    config.seed = 4242;
    const TurnLog a = run_conversation(config);
    const TurnLog b = run_conversation(config);
    REQUIRE(a.size() == b.size());
    CHECK(to_jsonl(a) == to_jsonl(b));
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].turn.speaker == b[i].turn.speaker);
        CHECK(a[i].turn.duration_s == b[i].turn.duration_s);
        CHECK(a[i].window_time_s == b[i].window_time_s);
        CHECK(a[i].n_comm == b[i].n_comm);
    }

    config.seed = 4243;
    CHECK(to_jsonl(run_conversation(config)) != to_jsonl(a));
}

TEST_CASE("a session of one turn's length logs exactly one turn") {
    GroupConfig config = preset_config("dominant-one");
    config.session_duration_s = 1.0; // less than overhead + any turn
    config.seed = 1;
    CHECK(run_conversation(config).size() == 1);
}

TEST_CASE("default sessions land in the expected turn-count band") {
    for (const char* preset : {"dominant-one", "two-cliques"})
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            GroupConfig config = preset_config(preset);
            config.seed = seed * 7919 + 3;
            const std::size_t turns = run_conversation(config).size();
            CHECK(turns >= 30);
            CHECK(turns <= 75);
        }
}

TEST_CASE("full compliance makes every directed turn land on the addressee") {
    GroupConfig config = preset_config("dominant-one");
    for (AgentProfile& p : config.profiles)
        p.compliance = 1.0;
    for (PolicyKind policy : {PolicyKind::BalancingHard, PolicyKind::BalancingSoft}) {
        config.policy = policy;
        config.seed = 31;
        const TurnLog log = run_conversation(config);
        for (const TurnLogEntry& e : log) {
            if (e.addressee >= 0)
                CHECK(e.turn.speaker == e.addressee);
            CHECK(e.directive != DirectiveKind::Repeat);
            CHECK(e.directive != DirectiveKind::ReplyThenReaddress);
        }
    }
}

TEST_CASE("a dominant profile takes over neutral conversations") {
    int emerged = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        GroupConfig config = preset_config("dominant-one");
        config.policy = PolicyKind::Neutral;
        config.seed = seed;
        const TurnLog log = run_conversation(config);
        REQUIRE_FALSE(log.empty());
        const Eigen::VectorXd& window = log.back().window_time_s;
        if (window(0) / window.sum() > 0.4)
            ++emerged;
    }
    CHECK(emerged >= 90);
}

TEST_CASE("per-turn metrics are consistent with the logged window") {
    GroupConfig config = preset_config("two-cliques");
    config.policy = PolicyKind::Neutral;
    config.seed = 77;
    const TurnLog log = run_conversation(config);
    for (const TurnLogEntry& e : log) {
        CHECK(e.time_err_s ==
              doctest::Approx(e.window_time_s.maxCoeff() - e.window_time_s.minCoeff()));
        CHECK(e.word_err >= 0.0);
        CHECK(e.n_comm >= 1);
        CHECK(e.n_comm <= 4);
    }
}
