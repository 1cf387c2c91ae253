// Edition diffing, shift detection, and per-notation lineage.

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "udc/ontogeny.hpp"
#include "udc/serialize.hpp"
#include "support/oracles.hpp"

using namespace udc;

namespace {

EditionSnapshot snap(const std::string& label, const std::string& body) {
    auto [snapshot, report] = load_edition_text(body, EditionFormat::CanonicalTsv, label);
    EXPECT_TRUE(report.rejected.empty()) << body;
    return snapshot;
}

}  // namespace

TEST(Diff, IdenticalEditionsYieldEmptyDelta) {
    EditionSnapshot a = snap("a", "2\tReligion\n2-1\tx\n(44)\tFrance\n~a\tm\n");
    EditionDelta delta = diff(a, a);
    EXPECT_TRUE(delta.empty());
    EXPECT_TRUE(delta.entered.empty());
    EXPECT_TRUE(delta.exited.empty());
    EXPECT_TRUE(delta.description_changed.empty());
    EXPECT_TRUE(delta.shifted.empty());
    EXPECT_EQ(delta.stable_count, 4u);
    EXPECT_EQ(delta.from_label, "a");
}

TEST(Diff, EnteredIsSetDifference) {
    EditionSnapshot a = snap("a", "2\tReligion\n");
    EditionSnapshot b = snap("b", "2\tReligion\n2-1\tx\n");
    EditionDelta delta = diff(a, b);
    EXPECT_EQ(delta.entered, std::vector<std::string>{"2-1"});
    EXPECT_TRUE(delta.exited.empty());
    EXPECT_EQ(delta.stable_count, 1u);
}

TEST(Diff, ShiftDetectedByExactSharedDescription) {
    EditionSnapshot a = snap("a", "21\tNatural theology\n");
    EditionSnapshot b = snap("b", "211\tNatural theology\n");
    EditionDelta delta = diff(a, b);
    EXPECT_EQ(delta.exited, std::vector<std::string>{"21"});
    EXPECT_EQ(delta.entered, std::vector<std::string>{"211"});
    ASSERT_EQ(delta.shifted.size(), 1u);
    EXPECT_EQ(delta.shifted[0].old_notation, "21");
    EXPECT_EQ(delta.shifted[0].new_notation, "211");
    EXPECT_EQ(delta.shifted[0].description, "Natural theology");
    EXPECT_EQ(delta.shifted[0].old_class, "2");
    EXPECT_EQ(delta.shifted[0].new_class, "2");
}

TEST(Diff, ShiftAcrossClassesKeepsBothClasses) {
    EditionDelta delta = diff(snap("a", "21\tSame text\n"), snap("b", "53\tSame text\n"));
    ASSERT_EQ(delta.shifted.size(), 1u);
    EXPECT_EQ(delta.shifted[0].old_class, "2");
    EXPECT_EQ(delta.shifted[0].new_class, "5");
}

TEST(Diff, AmbiguousCandidatesAreReportedNotGuessed) {
    // two exited records with identical descriptions vs one entered
    EditionSnapshot a = snap("a", "21\tShared text\n22\tShared text\n");
    EditionSnapshot b = snap("b", "31\tShared text\n");
    EditionDelta delta = diff(a, b);
    EXPECT_TRUE(delta.shifted.empty());
    ASSERT_EQ(delta.ambiguous.size(), 1u);
    EXPECT_EQ(delta.ambiguous[0].description, "Shared text");
    EXPECT_EQ(delta.ambiguous[0].old_notations, (std::vector<std::string>{"21", "22"}));
    EXPECT_EQ(delta.ambiguous[0].new_notations, std::vector<std::string>{"31"});
}

TEST(Diff, EmptyDescriptionsNeverPair) {
    // flat-format bare lines carry no description at all
    auto [a, ra] = load_edition_text("21\n", EditionFormat::FlatText, "a");
    auto [b, rb] = load_edition_text("31\n", EditionFormat::FlatText, "b");
    ASSERT_TRUE(ra.rejected.empty());
    ASSERT_TRUE(rb.rejected.empty());
    EditionDelta delta = diff(a, b);
    EXPECT_TRUE(delta.shifted.empty());
    EXPECT_TRUE(delta.ambiguous.empty());
    EXPECT_EQ(delta.exited, std::vector<std::string>{"21"});
    EXPECT_EQ(delta.entered, std::vector<std::string>{"31"});
}

TEST(Diff, MetadataRecordsNeverShift) {
    EditionDelta delta = diff(snap("a", "~a\tShared text\n"), snap("b", "21\tShared text\n"));
    EXPECT_TRUE(delta.shifted.empty());
    EXPECT_EQ(delta.exited, std::vector<std::string>{"~a"});
}

TEST(Diff, DescriptionComparisonIsNormalized) {
    // whitespace collapses; composed and decomposed accents compare equal
    EditionSnapshot a = snap("a", "21\tNatural  theology\n22\tCaf\xC3\xA9\n");
    EditionSnapshot b = snap("b", "21\tNatural theology\n22\tCafe\xCC\x81\n");
    EditionDelta delta = diff(a, b);
    EXPECT_TRUE(delta.empty());
    EXPECT_EQ(delta.stable_count, 2u);
}

TEST(Diff, ChangedDescriptionsListVerbatimTexts) {
    EditionDelta delta = diff(snap("a", "21\told text\n"), snap("b", "21\tnew text\n"));
    ASSERT_EQ(delta.description_changed.size(), 1u);
    EXPECT_EQ(delta.description_changed[0].notation, "21");
    EXPECT_EQ(delta.description_changed[0].old_description, "old text");
    EXPECT_EQ(delta.description_changed[0].new_description, "new text");
    EXPECT_FALSE(delta.empty());
}

TEST(Diff, RandomPairsSatisfyAlgebra) {
    oracles::Rng rng(42);
    for (int round = 0; round < 40; ++round) {
        EditionSnapshot a = oracles::gen_snapshot(rng, 120, "a");
        EditionSnapshot b = oracles::gen_snapshot(rng, 120, "b");
        EditionDelta ab = diff(a, b);
        EditionDelta ba = diff(b, a);

        // antisymmetry
        ASSERT_EQ(ab.entered, ba.exited);
        ASSERT_EQ(ab.exited, ba.entered);

        // partition of the union of keys
        oracles::DiffOracle oracle = oracles::brute_diff(a, b);
        ASSERT_EQ(std::set<std::string>(ab.entered.begin(), ab.entered.end()), oracle.entered);
        ASSERT_EQ(std::set<std::string>(ab.exited.begin(), ab.exited.end()), oracle.exited);
        ASSERT_EQ(ab.stable_count, oracle.stable.size());
        std::set<std::string> changed;
        for (const DescriptionChange& c : ab.description_changed) changed.insert(c.notation);
        ASSERT_EQ(changed, oracle.changed);
        ASSERT_EQ(ab.stable_count + changed.size() + ab.entered.size() + ab.exited.size(),
                  oracle.stable.size() + oracle.changed.size() + oracle.entered.size() +
                      oracle.exited.size());

        // shifts: exactly the unambiguous candidate pairs, injective both ways
        std::vector<std::pair<std::string, std::string>> lib_pairs;
        std::set<std::string> olds, news;
        for (const ShiftedEntry& s : ab.shifted) {
            lib_pairs.emplace_back(s.old_notation, s.new_notation);
            ASSERT_TRUE(olds.insert(s.old_notation).second);
            ASSERT_TRUE(news.insert(s.new_notation).second);
            ASSERT_TRUE(oracle.exited.count(s.old_notation));
            ASSERT_TRUE(oracle.entered.count(s.new_notation));
            ASSERT_EQ(normalize_description(a.find(s.old_notation)->description),
                      normalize_description(b.find(s.new_notation)->description));
        }
        std::sort(lib_pairs.begin(), lib_pairs.end());
        std::sort(oracle.unique_pairs.begin(), oracle.unique_pairs.end());
        ASSERT_EQ(lib_pairs, oracle.unique_pairs);
    }
}

TEST(Diff, TriangleConsistencyOnPresence) {
    oracles::Rng rng(43);
    for (int round = 0; round < 10; ++round) {
        EditionSnapshot a = oracles::gen_snapshot(rng, 80, "a");
        EditionSnapshot b = oracles::gen_snapshot(rng, 80, "b");
        EditionSnapshot c = oracles::gen_snapshot(rng, 80, "c");
        EditionDelta ab = diff(a, b);
        EditionDelta bc = diff(b, c);
        std::set<std::string> exited_bc(bc.exited.begin(), bc.exited.end());
        for (const std::string& n : ab.entered)
            if (!exited_bc.count(n))
                ASSERT_NE(c.find(n), nullptr)
                    << n << " entered a->b and did not exit b->c, so it must be in c";
    }
}

TEST(History, StablePresenceHasNoEvents) {
    std::vector<EditionSnapshot> series = {snap("1998", "2\tReligion\n"),
                                           snap("2008", "2\tReligion\n")};
    Lineage lineage = history("2", series);
    EXPECT_EQ(lineage.notation, "2");
    ASSERT_EQ(lineage.states.size(), 2u);
    EXPECT_TRUE(lineage.states[0].present());
    EXPECT_TRUE(lineage.states[1].present());
    EXPECT_TRUE(lineage.events.empty());
    EXPECT_FALSE(lineage.never_present);
}

TEST(History, AppearanceDisappearanceRedescription) {
    std::vector<EditionSnapshot> series = {
        snap("e1", "5\tfive\n"),
        snap("e2", "5\tfive\n2\told text\n"),
        snap("e3", "5\tfive\n2\tnew text\n"),
        snap("e4", "5\tfive\n"),
    };
    Lineage lineage = history("2", series);
    ASSERT_EQ(lineage.events.size(), 3u);
    EXPECT_EQ(lineage.events[0].kind, LineageEventKind::Appeared);
    EXPECT_EQ(lineage.events[0].edition_label, "e2");
    EXPECT_EQ(lineage.events[1].kind, LineageEventKind::Redescribed);
    EXPECT_EQ(lineage.events[1].edition_label, "e3");
    EXPECT_EQ(lineage.events[2].kind, LineageEventKind::Disappeared);
    EXPECT_EQ(lineage.events[2].edition_label, "e4");
}

TEST(History, QueryNotationIsCanonicalized) {
    std::vector<EditionSnapshot> series = {snap("e1", "539.120.2\tscattering\n")};
    Lineage lineage = history("539.12.02", series);
    EXPECT_EQ(lineage.notation, "539.120.2");
    EXPECT_TRUE(lineage.states[0].present());
}

TEST(History, NeverPresentIsFlaggedNotFatal) {
    std::vector<EditionSnapshot> series = {snap("e1", "5\tfive\n")};
    Lineage lineage = history("2", series);
    EXPECT_TRUE(lineage.never_present);
    ASSERT_EQ(lineage.states.size(), 1u);
    EXPECT_FALSE(lineage.states[0].present());
    EXPECT_TRUE(lineage.events.empty());
}

TEST(History, UnparseableNotationThrowsAndEmptySeriesThrows) {
    std::vector<EditionSnapshot> series = {snap("e1", "5\tfive\n")};
    EXPECT_THROW(history("not a notation", series), SyntaxError);
    EXPECT_THROW(history("2", {}), EmptyEdition);
}

TEST(History, MetadataTokenHasLineageToo) {
    std::vector<EditionSnapshot> series = {snap("e1", "5\tfive\n"),
                                           snap("e2", "5\tfive\n~a\tsigns\n")};
    Lineage lineage = history("~a", series);
    ASSERT_EQ(lineage.events.size(), 1u);
    EXPECT_EQ(lineage.events[0].kind, LineageEventKind::Appeared);
}

TEST(History, EventsMatchConsecutiveDiffProjection) {
    oracles::Rng rng(47);
    std::vector<EditionSnapshot> series;
    for (int i = 0; i < 4; ++i)
        series.push_back(oracles::gen_snapshot(rng, 60, "e" + std::to_string(i)));
    // project per-notation events out of consecutive diffs
    std::set<std::string> keys;
    for (const EditionSnapshot& s : series)
        for (const EditionRecord& rec : s.records())
            if (!rec.is_metadata()) keys.insert(rec.notation);
    int checked = 0;
    for (const std::string& notation : keys) {
        if (checked >= 50) break;
        ++checked;
        Lineage lineage = history(notation, series);
        std::vector<LineageEvent> expected;
        for (std::size_t i = 1; i < series.size(); ++i) {
            EditionDelta d = diff(series[i - 1], series[i]);
            const std::string& label = series[i].label();
            if (std::find(d.entered.begin(), d.entered.end(), notation) != d.entered.end())
                expected.push_back({LineageEventKind::Appeared, label});
            else if (std::find(d.exited.begin(), d.exited.end(), notation) != d.exited.end())
                expected.push_back({LineageEventKind::Disappeared, label});
            else if (std::any_of(d.description_changed.begin(), d.description_changed.end(),
                                 [&](const DescriptionChange& c) { return c.notation == notation; }))
                expected.push_back({LineageEventKind::Redescribed, label});
        }
        ASSERT_EQ(lineage.events, expected) << notation;
    }
}

TEST(Serialize, DeltaJsonShape) {
    EditionDelta delta = diff(snap("a", "21\tNatural theology\n22\tkeep\n"),
                              snap("b", "211\tNatural theology\n22\tkeep\n"));
    json j = delta_to_json(delta);
    EXPECT_EQ(j.at("from"), "a");
    EXPECT_EQ(j.at("to"), "b");
    EXPECT_EQ(j.at("stable"), 1);
    EXPECT_EQ(j.at("entered"), json::array({"211"}));
    EXPECT_EQ(j.at("exited"), json::array({"21"}));
    EXPECT_EQ(j.at("shifted")[0].at("old_notation"), "21");
    std::string dumped = j.dump();
    EXPECT_LT(dumped.find("\"from\""), dumped.find("\"to\""));
    EXPECT_LT(dumped.find("\"entered\""), dumped.find("\"exited\""));
    EXPECT_EQ(delta_to_json(delta).dump(), dumped);
}

TEST(Serialize, LineageJsonShape) {
    std::vector<EditionSnapshot> series = {snap("e1", "5\tfive\n"),
                                           snap("e2", "5\tfive\n2\ttwo\n")};
    json j = lineage_to_json(history("2", series));
    EXPECT_EQ(j.at("notation"), "2");
    EXPECT_EQ(j.at("never_present"), false);
    ASSERT_EQ(j.at("states").size(), 2u);
    EXPECT_EQ(j.at("states")[0].at("present"), false);
    EXPECT_EQ(j.at("states")[1].at("description"), "two");
    ASSERT_EQ(j.at("events").size(), 1u);
    EXPECT_EQ(j.at("events")[0].at("kind"), "Appeared");
}
