#include "hvol/parallel.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <stdexcept>
#include <vector>

using namespace hvol;

TEST(Parallel, ThreadCountFromEnvironment) {
  setenv("HVOL_THREADS", "3", 1);
  EXPECT_EQ(thread_count(), 3u);
  setenv("HVOL_THREADS", "junk", 1);
  EXPECT_GE(thread_count(), 1u);
  unsetenv("HVOL_THREADS");
  EXPECT_GE(thread_count(), 1u);
}

TEST(Parallel, VisitsEveryIndexOnce) {
  for (const char* t : {"1", "4"}) {
    setenv("HVOL_THREADS", t, 1);
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) EXPECT_EQ(h, 1);
  }
  unsetenv("HVOL_THREADS");
}

TEST(Parallel, PropagatesExceptions) {
  setenv("HVOL_THREADS", "2", 1);
  EXPECT_THROW(parallel_for(50, [](std::size_t i) {
                 if (i == 17) throw std::runtime_error("boom");
               }),
               std::runtime_error);
  unsetenv("HVOL_THREADS");
}
