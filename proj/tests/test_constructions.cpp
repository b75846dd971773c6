#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oneplane/constructions.hpp"
#include "oneplane/io.hpp"
#include "oneplane/saturation.hpp"

using namespace oneplane;

TEST_CASE("base drawing census and classes") {
  Drawing d = gen_base();
  Census cen = census(d);
  CHECK(cen.n == 4);
  CHECK(cen.m == 6);
  CHECK(cen.c == 1);
  CHECK(cen.h == 0);
  CHECK(cen.t == 4);
  CHECK(validate(d, DrawingClass::IcPlane).ok);
  CHECK(is_maximal(d, DrawingClass::NicPlane));
}

TEST_CASE("standalone gadgets") {
  Census hs = census(gen_h_star());
  CHECK(hs.n == 6);
  CHECK(hs.m == 11);
  CHECK(hs.c == 1);
  CHECK(validate(gen_h_star(), DrawingClass::IcPlane).ok);

  Census ms = census(gen_m_star());
  CHECK(ms.n == 5);
  CHECK(ms.m == 8);
  CHECK(ms.c == 1);
  CHECK(validate(gen_m_star(), DrawingClass::NicPlane).ok);
}

TEST_CASE("recursive family counts for k = 1..10") {
  for (int k = 1; k <= 10; ++k) {
    Census h = census(gen_h(k));
    CHECK(h.n == 4 * k);
    CHECK(h.m == 10 * k - 4);
    CHECK(h.c == k);
    CHECK(h.h == 0);
    CHECK(h.t == 2 * k + 2);

    Census m = census(gen_m(k));
    CHECK(m.n == 3 * k + 1);
    CHECK(m.m == 7 * k - 1);
    CHECK(m.c == k);
    CHECK(m.h == 0);
    CHECK(m.t == 2 * k + 2);
  }
}

TEST_CASE("H_2 and M_2 match the worked examples") {
  Census h2 = census(gen_h(2));
  CHECK(h2.n == 8);
  CHECK(h2.m == 16);
  Census m2 = census(gen_m(2));
  CHECK(m2.n == 7);
  CHECK(m2.m == 13);
  CHECK_FALSE(validate(gen_m(2), DrawingClass::IcPlane).ok);
}

TEST_CASE("hermit insertion bookkeeping") {
  Drawing h1 = gen_base();
  int target = -1;
  for (const Face& f : h1.faces())
    if (!f.is_true && f.size() == 3) { target = f.id; break; }
  Drawing once = insert_hermit(h1, target);
  Census cen = census(once);
  CHECK(cen.n == 5);
  CHECK(cen.m == 8);
  CHECK(cen.c == 1);
  CHECK(cen.h == 1);
  CHECK(cen.t == 3);
  // One true 3-face and one false 4-face replace the target.
  int true3 = 0, false4 = 0;
  for (const Face& f : once.faces()) {
    if (f.is_true && f.size() == 3) ++true3;
    if (!f.is_true && f.size() == 4) ++false4;
  }
  CHECK(true3 == 1);
  CHECK(false4 == 1);
}

TEST_CASE("insert_hermit rejects non-false-3-faces") {
  Drawing k4 = fixtures::plane_k4();
  try {
    insert_hermit(k4, 0);  // a true 3-face
    FAIL("expected NotFalse3Face");
  } catch (const DrawingError& e) {
    CHECK(e.code() == ErrorCode::NotFalse3Face);
  }
}

TEST_CASE("hermit-augmented families: counts and tightness") {
  for (int k = 1; k <= 10; ++k) {
    Census base = census(gen_h(k));
    Census hp = census(gen_h_prime(k));
    CHECK(hp.n == base.n + base.t);
    CHECK(hp.m == base.m + 2 * base.t);
    CHECK(hp.n == 6 * k + 2);
    CHECK(hp.m == 14 * k);
    CHECK(hp.h == 2 * k + 2);
    CHECK(hp.t == 0);

    Census mb = census(gen_m(k));
    Census mp = census(gen_m_prime(k));
    CHECK(mp.n == mb.n + mb.t);
    CHECK(mp.m == mb.m + 2 * mb.t);
    CHECK(mp.n == 5 * k + 3);
    CHECK(mp.m == 11 * k + 3);
  }
}

TEST_CASE("family maximality via the saturation oracle") {
  for (int k = 1; k <= 5; ++k) {
    CHECK(is_maximal(gen_h(k), DrawingClass::IcPlane));
    CHECK(is_maximal(gen_m(k), DrawingClass::NicPlane));
    CHECK(is_maximal(gen_h_prime(k), DrawingClass::IcPlane));
    CHECK(is_maximal(gen_m_prime(k), DrawingClass::NicPlane));
  }
}

TEST_CASE("crossing endpoint sets: disjoint in H_k, near-disjoint in M_k") {
  for (int k = 2; k <= 6; ++k) {
    Drawing h = gen_h(k);
    for (int a = 0; a < h.crossing_count(); ++a)
      for (int b = a + 1; b < h.crossing_count(); ++b) {
        auto ka = h.crossing_endpoints(h.vertex_count() + a);
        auto kb = h.crossing_endpoints(h.vertex_count() + b);
        std::set<int> inter;
        for (int x : ka)
          if (std::count(kb.begin(), kb.end(), x)) inter.insert(x);
        CHECK(inter.empty());
      }

    Drawing m = gen_m(k);
    bool some_shared = false;
    for (int a = 0; a < m.crossing_count(); ++a)
      for (int b = a + 1; b < m.crossing_count(); ++b) {
        auto ka = m.crossing_endpoints(m.vertex_count() + a);
        auto kb = m.crossing_endpoints(m.vertex_count() + b);
        std::set<int> inter;
        for (int x : ka)
          if (std::count(kb.begin(), kb.end(), x)) inter.insert(x);
        CHECK(inter.size() <= 1);
        if (inter.size() == 1) some_shared = true;
      }
    CHECK(some_shared);
  }
}

TEST_CASE("M_k drawings contain 5-faces once the gadget chains") {
  Drawing m2 = gen_m(2);
  bool has5 = false;
  for (const Face& f : m2.faces())
    if (f.size() == 5) has5 = true;
  CHECK(has5);
}

TEST_CASE("family parameter must be positive") {
  CHECK_THROWS_AS(gen_h(0), DrawingError);
  CHECK_THROWS_AS(gen_m_prime(-1), DrawingError);
}

TEST_CASE("the second family member serializes to frozen bytes") {
  // Pins the gadget transcription, vertex numbering and mirror handling.
  const std::string golden =
      "DRAWING 1\n"
      "vertices 8\n"
      "crossings 2\n"
      "edge 0 0 1\n"
      "edge 1 1 2\n"
      "edge 2 2 3\n"
      "edge 3 0 3\n"
      "edge 4 0 2 x 8\n"
      "edge 5 1 3 x 8\n"
      "edge 6 0 4\n"
      "edge 7 0 5\n"
      "edge 8 1 5\n"
      "edge 9 1 4\n"
      "edge 10 4 5\n"
      "edge 11 5 6\n"
      "edge 12 6 7\n"
      "edge 13 4 7\n"
      "edge 14 4 6 x 9\n"
      "edge 15 5 7 x 9\n"
      "seg 0 0 1 0\n"
      "seg 1 1 2 1\n"
      "seg 2 2 3 2\n"
      "seg 3 0 3 3\n"
      "seg 4 0 8 4\n"
      "seg 5 8 2 4\n"
      "seg 6 1 8 5\n"
      "seg 7 8 3 5\n"
      "seg 8 0 4 6\n"
      "seg 9 0 5 7\n"
      "seg 10 1 5 8\n"
      "seg 11 1 4 9\n"
      "seg 12 4 5 10\n"
      "seg 13 5 6 11\n"
      "seg 14 6 7 12\n"
      "seg 15 4 7 13\n"
      "seg 16 4 9 14\n"
      "seg 17 9 6 14\n"
      "seg 18 5 9 15\n"
      "seg 19 9 7 15\n"
      "rot 0 0 18 16 8 6\n"
      "rot 1 2 12 22 20 1\n"
      "rot 2 4 11 3\n"
      "rot 3 7 15 5\n"
      "rot 4 24 30 32 23 17\n"
      "rot 5 36 26 25 19 21\n"
      "rot 6 35 28 27\n"
      "rot 7 29 39 31\n"
      "rot 8 10 14 9 13\n"
      "rot 9 37 33 38 34\n";
  CHECK(serialize_drawing(gen_h(2)) == golden);
}
