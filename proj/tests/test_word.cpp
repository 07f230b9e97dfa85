#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "racg/word.hpp"

using namespace racg;

namespace {

DefiningGraph square() {
  return DefiningGraph({"a", "b", "c", "d"},
                       {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}

DefiningGraph path3() {
  return DefiningGraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

}  // namespace

TEST_SUITE("word") {
  TEST_CASE("normalization regressions") {
    DefiningGraph g = path3();
    CHECK(NormalForm::parse(g, "c a b a").str() == "b c");
    CHECK(NormalForm::parse(g, "a a").str() == "");
    CHECK(NormalForm::parse(g, "").is_identity());
    CHECK(NormalForm::parse(g, "b a").str() == "a b");  // a, b commute

    DefiningGraph s = square();
    CHECK(NormalForm::parse(s, "a b a").str() == "b");
    CHECK(NormalForm::parse(s, "a c a c").str() == "a c a c");
    CHECK(NormalForm::parse(s, "d a").str() == "a d");
  }

  TEST_CASE("parse validates letters") {
    DefiningGraph g = path3();
    CHECK_THROWS_AS(NormalForm::parse(g, "a z"), Error);
    CHECK(NormalForm::parse(g, "  a   b  ").length() == 2);
  }

  TEST_CASE("group operations against the matrix model") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
      DefiningGraph g = oracle::random_connected_graph(rng, 5);
      std::vector<VertexId> wu = oracle::random_word(rng, g, 8);
      std::vector<VertexId> wv = oracle::random_word(rng, g, 8);
      NormalForm u = NormalForm::from_letters(g, wu);
      NormalForm v = NormalForm::from_letters(g, wv);

      // words and their normal forms have equal matrices
      CHECK(oracle::word_matrix(g, wu) == oracle::word_matrix(g, u.letters()));

      // multiplication, inversion, powers
      CHECK(oracle::word_matrix(g, multiply(u, v).letters()) ==
            oracle::mat_mul(oracle::word_matrix(g, wu),
                            oracle::word_matrix(g, wv)));
      CHECK(multiply(u, invert(u)).is_identity());
      CHECK(multiply(invert(u), u).is_identity());
      NormalForm u3 = power(u, 3);
      CHECK(u3 == multiply(u, multiply(u, u)));
      CHECK(power(u, -2) == invert(multiply(u, u)));
      CHECK(power(u, 0).is_identity());
      CHECK(conjugate(u, v) == multiply(u, multiply(v, invert(u))));
    }
  }

  TEST_CASE("canonical form is stable under commuting rewrites") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
      DefiningGraph g = oracle::random_connected_graph(rng, 6);
      std::vector<VertexId> w = oracle::random_word(rng, g, 10);
      NormalForm base = NormalForm::from_letters(g, w);
      std::vector<VertexId> letters(base.letters());
      oracle::random_commuting_swaps(rng, g, letters, 20);
      CHECK(NormalForm::from_letters(g, letters) == base);
    }
  }

  TEST_CASE("support and cyclic decomposition") {
    DefiningGraph g = square();
    VertexId a = g.require("a"), b = g.require("b");
    NormalForm w = NormalForm::parse(g, "b a c a");  // b (ac a) -> b a c a
    CHECK(support(w).contains(a));

    // in the square every letter commutes into b d, so the core is all of it
    NormalForm conj = NormalForm::parse(g, "a b d a");
    CyclicDecomposition cd = cyclic_decompose(conj);
    CHECK(multiply(cd.conjugator,
                   multiply(cd.core, invert(cd.conjugator))) == conj);
    CHECK(conj.length() == 2 * cd.conjugator.length() + cd.core.length());
    CHECK(csupp(conj) ==
          (VertexSet::single(b) | VertexSet::single(g.require("d"))));

    // a genuine conjugation on the path: a c a is c conjugated by a
    DefiningGraph p = path3();
    NormalForm aca = NormalForm::parse(p, "a c a");
    CHECK(aca.length() == 3);
    CyclicDecomposition pd = cyclic_decompose(aca);
    CHECK(pd.conjugator == NormalForm::parse(p, "a"));
    CHECK(pd.core == NormalForm::parse(p, "c"));
    CHECK(csupp(aca) == VertexSet::single(p.require("c")));

    // identity and single letters
    CHECK(csupp(NormalForm::identity(g)).empty());
    CHECK(csupp(NormalForm::parse(g, "a")) == VertexSet::single(a));
  }

  TEST_CASE("finite order is clique support") {
    DefiningGraph g = square();
    CHECK(is_finite_order(NormalForm::parse(g, "a")));
    CHECK(is_finite_order(NormalForm::parse(g, "a b")));    // (ab)^2 = 1
    CHECK(!is_finite_order(NormalForm::parse(g, "a c")));   // infinite
    CHECK(!is_finite_order(NormalForm::parse(g, "a b c")));
    CHECK(is_finite_order(NormalForm::identity(g)));
    // conjugates of finite-order elements
    CHECK(is_finite_order(NormalForm::parse(g, "c a b a c")));
  }

  TEST_CASE("special membership and retraction") {
    DefiningGraph g = square();
    VertexSet bd =
        VertexSet::single(g.require("b")) | VertexSet::single(g.require("d"));
    CHECK(special_membership(NormalForm::parse(g, "b d b"), bd));
    CHECK(!special_membership(NormalForm::parse(g, "b a"), bd));
    CHECK(special_membership(NormalForm::identity(g), bd));

    NormalForm mixed = NormalForm::parse(g, "b a d c b");
    NormalForm image = special_retract(mixed, bd);
    CHECK(special_membership(image, bd));
    CHECK(image == NormalForm::parse(g, "b d b"));
    // retraction fixes the subgroup pointwise
    NormalForm inside = NormalForm::parse(g, "d b d");
    CHECK(special_retract(inside, bd) == inside);
    // and is a homomorphism on samples
    std::mt19937_64 rng(99);
    for (int i = 0; i < 20; ++i) {
      NormalForm x = NormalForm::from_letters(g, oracle::random_word(rng, g, 6));
      NormalForm y = NormalForm::from_letters(g, oracle::random_word(rng, g, 6));
      CHECK(special_retract(multiply(x, y), bd) ==
            multiply(special_retract(x, bd), special_retract(y, bd)));
    }
  }

  TEST_CASE("minimal double coset representatives") {
    DefiningGraph g = square();
    VertexSet ac =
        VertexSet::single(g.require("a")) | VertexSet::single(g.require("c"));
    // b d G_{a,c}: the a tail is absorbed
    CHECK(min_double_coset(NormalForm::parse(g, "b d a"), VertexSet(), ac) ==
          NormalForm::parse(g, "b d"));
    // G_{a,c} (a b): the a head is absorbed
    CHECK(min_double_coset(NormalForm::parse(g, "a b"), ac, VertexSet()) ==
          NormalForm::parse(g, "b"));
    // double-sided
    CHECK(min_double_coset(NormalForm::parse(g, "a b c"), ac, ac)
              .is_identity() == false);
    CHECK(min_double_coset(NormalForm::parse(g, "a c"), ac, VertexSet())
              .is_identity());
  }

  TEST_CASE("coset distance is coset-invariant") {
    DefiningGraph g = square();
    VertexSet bd =
        VertexSet::single(g.require("b")) | VertexSet::single(g.require("d"));
    std::mt19937_64 rng(123);
    for (int i = 0; i < 20; ++i) {
      NormalForm x = NormalForm::from_letters(g, oracle::random_word(rng, g, 7));
      NormalForm h = special_retract(
          NormalForm::from_letters(g, oracle::random_word(rng, g, 7)), bd);
      // min length over G_bd * x equals min over G_bd * (h x)
      CHECK(min_double_coset(x, bd, VertexSet()).length() ==
            min_double_coset(multiply(h, x), bd, VertexSet()).length());
    }
  }

  TEST_CASE("product membership in star factors") {
    DefiningGraph g = square();
    VertexId a = g.require("a"), b = g.require("b");
    std::array<VertexSet, 2> factors = {g.star(a), g.star(b)};
    // ad * bc splits across St(a) St(b)
    CHECK(product_membership(NormalForm::parse(g, "a d b c"), factors));
    // c alone is in neither star, nor any two-factor product
    std::array<VertexSet, 2> tight = {VertexSet::single(a),
                                      VertexSet::single(b)};
    CHECK(!product_membership(NormalForm::parse(g, "c"), tight));
    CHECK(product_membership(NormalForm::parse(g, "a b a"), tight));
  }

  TEST_CASE("join and star subword windows") {
    DefiningGraph g = path3();
    // a c lies in the star of b; the whole group is generated by a path
    NormalForm w = NormalForm::parse(g, "a c a c");
    SubwordWindow win = max_join_subword(w);
    CHECK(win.length == 4);  // {a, c} spans a join (star of b)
    SubwordWindow star_win = max_star_subword(w);
    CHECK(star_win.length == 4);

    DefiningGraph line({"a", "b", "c", "d", "e"},
                       {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}});
    NormalForm long_word = NormalForm::parse(line, "a c e a c e");
    // {a, c, e} is not inside any join of the 5-path; windows must be shorter
    SubwordWindow lw = max_join_subword(long_word);
    CHECK(lw.length < long_word.length());
    CHECK(lw.length >= 2);
  }

  TEST_CASE("shortlex comparison orders ball elements") {
    DefiningGraph g = square();
    NormalForm e = NormalForm::identity(g);
    NormalForm a = NormalForm::parse(g, "a");
    NormalForm ac = NormalForm::parse(g, "a c");
    NormalForm ca = NormalForm::parse(g, "c a");
    CHECK(e < a);
    CHECK(a < ac);
    CHECK(ac < ca);
    CHECK(!(ca < ac));
  }
}
