#include <gtest/gtest.h>

#include "onto2cdm/cardinality.hpp"

using namespace onto2cdm;

TEST(Cardinality, RenderConventions) {
    EXPECT_EQ(render(Cardinality::any()), "0..*");
    EXPECT_EQ(render(Cardinality::exactly(1)), "1");
    EXPECT_EQ(render(Cardinality::at_most_one()), "0..1");
    EXPECT_EQ(render(Cardinality::at_least_one()), "1..*");
    EXPECT_EQ(render(Cardinality{2, 5}), "2..5");
}

TEST(Cardinality, IntersectTakesTightestBounds) {
    auto m = intersect(Cardinality::any(), Cardinality::exactly(1));
    ASSERT_TRUE(m);
    EXPECT_EQ(*m, Cardinality::exactly(1));
    m = intersect(Cardinality{2, std::nullopt}, Cardinality{0, 4});
    ASSERT_TRUE(m);
    EXPECT_EQ(*m, (Cardinality{2, 4}));
}

TEST(Cardinality, DisjointIntervalsHaveNoIntersection) {
    EXPECT_FALSE(intersect(Cardinality{3, std::nullopt}, Cardinality{0, 2}));
    EXPECT_FALSE(intersect(Cardinality::exactly(1), Cardinality::exactly(2)));
    EXPECT_TRUE(intersect(Cardinality{0, 0}, Cardinality::any()));
}

TEST(Cardinality, Validity) {
    EXPECT_TRUE(Cardinality::any().valid());
    EXPECT_TRUE((Cardinality{0, 0}).valid());
    EXPECT_FALSE((Cardinality{2, 1}).valid());
}
