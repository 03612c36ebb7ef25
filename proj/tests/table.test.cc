// Copyright 2026 The qgf4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gtest/gtest.h"

#include "qgf4/table.hpp"

using namespace qgf4;

TEST(table, stored_cells) {
    auto c = stored_cell(7, 0);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->lo, 3u);
    EXPECT_EQ(c->hi, 3u);
    EXPECT_EQ(c->upper_mark, 'b');
    auto d = stored_cell(25, 0);
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(d->lo, 8u);
    EXPECT_EQ(d->hi, 9u);
    EXPECT_EQ(d->lower_mark, 'c');
    EXPECT_EQ(d->upper_mark, 'b');
    EXPECT_EQ(stored_cell(19, 8)->upper_mark, 'g');
    EXPECT_EQ(stored_cell(17, 9)->lower_mark, 'j');
    EXPECT_FALSE(stored_cell(24, 24).has_value());
    EXPECT_FALSE(stored_cell(2, 0).has_value());
    for (size_t n = 3; n <= 30; n++) {
        for (size_t k = 0; k <= std::min<size_t>(n, 23); k++) {
            auto s = stored_cell(n, k);
            ASSERT_TRUE(s.has_value()) << n << "," << k;
            EXPECT_LE(s->lo, s->hi);
            // Columns never increase going right.
            if (k > 0) {
                EXPECT_LE(s->lo, stored_cell(n, k - 1)->hi) << n << "," << k;
            }
        }
    }
    // Every external bound sits on a marked cell with the same value.
    for (const auto &b : external_bounds()) {
        auto s = stored_cell(b.n, b.k);
        ASSERT_TRUE(s.has_value());
        EXPECT_EQ(s->upper_mark, b.mark);
        EXPECT_EQ(s->hi, b.upper);
    }
}

TEST(table, regenerates_rows_3_to_10) {
    Table t = build_table(10, 2);
    size_t compared = 0;
    for (const auto &c : t.cells) {
        if (c.n < 3) {
            continue;
        }
        ASSERT_TRUE(c.stored.has_value());
        compared++;
        EXPECT_TRUE(c.matches()) << "(" << c.n << "," << c.k << ") computed " << c.lower << "-" << c.upper;
        EXPECT_LE(c.lower, c.upper);
        // Only marked cells may need the external bound.
        if (c.external) {
            EXPECT_NE(c.stored->upper_mark, 0) << c.n << "," << c.k;
        }
    }
    EXPECT_EQ(compared, 60u);
    EXPECT_TRUE(t.at(7, 0).external);
    EXPECT_EQ(t.at(7, 0).lp_upper, 4u);
    EXPECT_TRUE(t.mismatches().empty());
    std::string s = format_table(t);
    EXPECT_NE(s.find(" 7 | 3* 3 2 2 2 1 1 1\n"), std::string::npos);
    EXPECT_NE(s.find("mismatches: 0"), std::string::npos);
}

TEST(table, thread_count_does_not_matter) {
    Table a = build_table(8, 1);
    Table b = build_table(8, 3);
    EXPECT_EQ(format_table(a), format_table(b));
}

TEST(table, achievable_closure) {
    AchievableSet s(12);
    s.add(12, 0, 6, true, "seed");
    s.close();
    // Puncture pure, then take subcodes.
    EXPECT_EQ(s.best(11, 1).d, 5u);
    EXPECT_EQ(s.best(11, 0).d, 5u);
    EXPECT_EQ(s.best(10, 2).d, 4u);
    EXPECT_EQ(s.best(10, 1).d, 4u);
    // Lengthening keeps d but not purity.
    AchievableSet t(8);
    t.add(5, 1, 3, true, "seed");
    t.close();
    EXPECT_EQ(t.best(8, 1).d, 3u);
    EXPECT_EQ(t.best_pure(6, 1).d, 0u);
    // An impure [[6,1,3]] gives nothing at k = 0; the pure seed does at n = 5.
    EXPECT_EQ(t.best(6, 0).d, 0u);
    EXPECT_EQ(t.best(5, 0).d, 3u);
}

TEST(table, upper_cells) {
    EXPECT_EQ(upper_cell(7, 0).upper, 3u);
    EXPECT_EQ(upper_cell(7, 0).upper_source, "external b");
    EXPECT_EQ(upper_cell(6, 1).upper, 3u);
    EXPECT_FALSE(upper_cell(6, 1).external);
    EXPECT_EQ(upper_cell(5, 5).upper, 1u);
    EXPECT_EQ(upper_cell(12, 0).upper, 6u);
}
