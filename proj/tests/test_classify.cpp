#include "support.hpp"

#include "cyclerees/json_io.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <numeric>
#include <sstream>

using namespace cyclerees;

namespace {

std::string row_glyphs(std::size_t n) {
    std::string out;
    for (std::size_t t = 1; t < n; ++t) {
        out += glyph(classify(n, t).cls);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST(LinearType, Examples) {
    EXPECT_TRUE(is_linear_type(5, 2));
    EXPECT_TRUE(is_linear_type(6, 1));
    EXPECT_TRUE(is_linear_type(6, 5));
    EXPECT_FALSE(is_linear_type(6, 4));
    EXPECT_FALSE(is_linear_type(7, 4));
    EXPECT_THROW(is_linear_type(6, 6), std::invalid_argument);
}

TEST(FiberType, Examples) {
    EXPECT_TRUE(is_fiber_type(6, 4));
    EXPECT_TRUE(is_fiber_type(6, 3));
    EXPECT_FALSE(is_fiber_type(7, 4));
    EXPECT_FALSE(is_fiber_type(8, 3));
    EXPECT_TRUE(is_fiber_type(5, 3));
}

TEST(Classify, Rows) {
    EXPECT_EQ(row_glyphs(3), "LL");
    EXPECT_EQ(row_glyphs(4), "LFL");
    EXPECT_EQ(row_glyphs(5), "LLLL");
    EXPECT_EQ(row_glyphs(6), "LFFFL");
    EXPECT_EQ(row_glyphs(7), "LLL×LL");
    EXPECT_EQ(row_glyphs(8), "LF×F×FL");
}

TEST(Classify, RecordFields) {
    const auto r = classify(8, 3);
    EXPECT_EQ(r.cls, rees_class::neither);
    EXPECT_EQ(r.gcd, 1U);
    EXPECT_EQ(r.fiber_dim, 8U);
    ASSERT_TRUE(r.witness.has_value());
    const cycle_rings r8(8);
    const auto w = r8.parse(*r.witness);
    EXPECT_TRUE(ideal_membership(w, rees_ideal({8, 3}), r8.product));
    EXPECT_FALSE(ideal_membership(w, sym_relations({8, 3}), r8.product));

    const auto f = classify(6, 2);
    EXPECT_EQ(f.cls, rees_class::fiber);
    EXPECT_FALSE(f.witness.has_value());
    EXPECT_THROW(classify(2, 1), std::invalid_argument);
}

TEST(Classify, StepBudgetYieldsTimeout) {
    budget tiny;
    tiny.max_steps = 1;
    const auto r = classify(8, 6, tiny);
    EXPECT_EQ(r.cls, rees_class::timeout);
    EXPECT_EQ(glyph(r.cls), "?");
    EXPECT_THROW(is_linear_type(8, 6, tiny), budget_exceeded);
}

TEST(Classify, InvariantsOnTable) {
    const auto table = classification_table(3, 9, 60.0, 1);
    for (const auto& r : table) {
        ASSERT_NE(r.cls, rees_class::timeout) << r.n << "," << r.t;
        if (r.cls == rees_class::linear) {
            EXPECT_TRUE(is_fiber_type(r.n, r.t)) << r.n << "," << r.t;
        }
        if (r.gcd == 1) {
            EXPECT_NE(r.cls, rees_class::fiber) << r.n << "," << r.t;
        }
        if (r.t == 1 || r.t == r.n - 1) {
            EXPECT_EQ(r.cls, rees_class::linear) << r.n << "," << r.t;
        }
        if (r.n % 2 == 1 && r.t == r.n - 2) {
            EXPECT_EQ(r.cls, rees_class::linear) << r.n;
        }
        if (r.n % 2 == 0 && r.t == r.n - 2) {
            EXPECT_EQ(r.cls, rees_class::fiber) << r.n;
        }
    }
}

TEST(Classify, TableIsDeterministicAcrossJobs) {
    const auto a = classification_table(3, 8, 60.0, 1);
    const auto b = classification_table(3, 8, 60.0, 3);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(to_json(a[i]), to_json(b[i]));
    }
    EXPECT_EQ(render_grid(a), render_grid(b));
    EXPECT_EQ(render_csv(a), render_csv(b));
}

TEST(Classify, GoldenGrid) {
    const auto table = classification_table(3, 8, 60.0, 2);
    const std::string golden = read_file(CYCLEREES_TEST_DATA "/classes_n3_10.txt");
    ASSERT_FALSE(golden.empty());
    EXPECT_EQ(golden.substr(0, render_grid(table).size()), render_grid(table));
}

TEST(Classify, Formats) {
    const auto table = classification_table(4, 4, 60.0, 1);
    EXPECT_EQ(render_grid(table), "C4  L F L\n");
    EXPECT_EQ(render_csv(table), "n,t,class,gcd,fiber_dim\n4,1,linear,1,4\n4,2,fiber,2,3\n4,3,linear,1,4\n");
    const auto j = to_json(table[1]);
    EXPECT_EQ(j.at("class"), "fiber");
    EXPECT_EQ(j.at("fiber_dim"), 3);
    EXPECT_FALSE(j.contains("ms"));
    EXPECT_TRUE(to_json(table[1], true).contains("ms"));
    EXPECT_EQ(render_csv(table, true).substr(0, 40), "n,t,class,gcd,fiber_dim,ms_rees,ms_sym,m");
    EXPECT_THROW(classification_table(2, 4, 1.0), std::invalid_argument);
}

TEST(FiberDimension, Examples) {
    EXPECT_EQ(fiber_dimension(6, 4), 5U);
    EXPECT_EQ(fiber_dimension(6, 3), 4U);
    EXPECT_EQ(fiber_dimension(7, 3), 7U);
    EXPECT_EQ(fiber_dimension(6, 6), 1U);
    EXPECT_THROW(fiber_dimension(6, 7), std::invalid_argument);
}

TEST(CirculantRank, MatchesOracleAndFiberDimension) {
    for (std::size_t n = 3; n <= 12; ++n) {
        for (std::size_t t = 1; t <= n; ++t) {
            std::vector<std::vector<long>> m(n, std::vector<long>(n));
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    m[i][j] = (i + n - j) % n < t ? 1 : 0;
                }
            }
            const auto rank = circulant_rank(n, t);
            EXPECT_EQ(rank, testing_support::gauss_rank(m)) << n << "," << t;
            EXPECT_EQ(rank, fiber_dimension(n, t)) << n << "," << t;
        }
    }
}

TEST(Hilbert, ClosedFormExamples) {
    EXPECT_EQ(hilbert_closed_form_n_minus_2(3), (hilbert_series{{1, 2}, 4}));
    EXPECT_EQ(hilbert_closed_form_n_minus_2(4), (hilbert_series{{1, 3, 1}, 5}));
    EXPECT_EQ(hilbert_closed_form_n_minus_2(5), (hilbert_series{{1, 4, 5, 1}, 6}));
    EXPECT_EQ(hilbert_closed_form_n_minus_2(6), (hilbert_series{{1, 5, 9, 5, 1}, 7}));
    EXPECT_THROW(hilbert_closed_form_n_minus_2(2), std::invalid_argument);
}

TEST(Hilbert, ComputedMatchesClosedForm) {
    for (std::size_t n = 3; n <= 8; ++n) {
        EXPECT_TRUE(verify_hilbert(n)) << n;
        EXPECT_EQ(gorenstein_witness(n), n % 2 == 0) << n;
    }
}

TEST(Hilbert, JsonRoundTrip) {
    const auto h = hilbert_closed_form_n_minus_2(6);
    EXPECT_EQ(hilbert_series_from_json(to_json(h)), h);
}

TEST(CmType, OddCycles) {
    const auto r3 = cm_type_report(3);
    EXPECT_EQ(r3.type, 2U);
    EXPECT_EQ(r3.length, 3U);
    EXPECT_EQ(r3.socle_by_degree, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(cm_type_odd(5), 2U);
    EXPECT_EQ(cm_type_report(5).length, 11U);
    EXPECT_EQ(cm_type_odd(7), 2U);
    EXPECT_THROW(cm_type_odd(6), std::invalid_argument);
}

TEST(CmType, LengthMatchesHilbertValueAtOne) {
    for (std::size_t n = 3; n <= 7; n += 2) {
        const auto h = hilbert_closed_form_n_minus_2(n);
        EXPECT_EQ(static_cast<std::int64_t>(cm_type_report(n).length), zpoly::value_at_one(h.numerator)) << n;
    }
}
