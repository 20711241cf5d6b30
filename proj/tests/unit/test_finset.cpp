#include <doctest.h>

#include "mcat/errors.hpp"
#include "mcat/finset.hpp"
#include "test_oracles.hpp"

using namespace mcat;
using mcat::finset::components;
using mcat::finset::par_check_product;
using mcat::finset::par_decompose_coproduct;
using mcat::finset::par_search_product;
using mcat::finset::seq_decompose;

namespace {

const InstanceKey kCop{CategoryId::FinSet, ProductKind::Coproduct};
const InstanceKey kProd{CategoryId::FinSet, ProductKind::Product};

Object set_of(InstanceKey key, std::initializer_list<const char*> names) {
  std::vector<Label> labels;
  for (const char* name : names) labels.push_back(Label::atom(name));
  return Object::finite_set(key, std::move(labels));
}

// Replays the parallel-decomposition square: f . dom_iso = cod_iso . (f1 x f2).
void check_par_replay(const Morphism& f, const DecompositionOutcome& outcome) {
  REQUIRE(outcome.factors.has_value());
  REQUIRE(outcome.witness_isos.has_value());
  Morphism product = mproduct_mor(outcome.factors->first, outcome.factors->second);
  Morphism left = compose(f, outcome.witness_isos->first);
  Morphism right = compose(outcome.witness_isos->second, product);
  CHECK(left == right);
}

// Replays the factorization triangle: m . e = f.
void check_seq_replay(const Morphism& f, const DecompositionOutcome& outcome) {
  REQUIRE(outcome.factors.has_value());
  CHECK(compose(outcome.factors->second, outcome.factors->first) == f);
}

}  // namespace

TEST_SUITE("finset") {
  TEST_CASE("components of the worked two-element example") {
    Object a = set_of(kCop, {"a1", "a2"});
    Object b = set_of(kCop, {"b1", "b2"});
    Morphism f = Morphism::function(a, b, {0, 1});
    auto parts = components(f);
    REQUIRE(parts.blocks.size() == 2);
    CHECK(parts.isolated_cod.empty());
    CHECK(parts.blocks[0].dom == std::vector<std::size_t>{0});
    CHECK(parts.blocks[0].cod == std::vector<std::size_t>{0});
  }

  TEST_CASE("components of a constant map form one block") {
    Morphism f =
        Morphism::function(set_of(kCop, {"1", "2"}), set_of(kCop, {"x"}), {0, 0});
    auto parts = components(f);
    REQUIRE(parts.blocks.size() == 1);
    CHECK(parts.blocks[0].dom == std::vector<std::size_t>{0, 1});
    CHECK(parts.isolated_cod.empty());
  }

  TEST_CASE("components of the empty function are all isolated") {
    Morphism f = Morphism::function(set_of(kCop, {}), set_of(kCop, {"x", "y"}), {});
    auto parts = components(f);
    CHECK(parts.blocks.empty());
    CHECK(parts.isolated_cod == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("components invariants over random functions") {
    mcat_test::FunctionGen gen(2024);
    for (int t = 0; t < 200; ++t) {
      Morphism f = gen.next(5);
      auto parts = components(f);
      std::vector<bool> dom_seen(f.dom().size(), false);
      std::vector<bool> cod_seen(f.cod().size(), false);
      for (const auto& block : parts.blocks) {
        for (std::size_t i : block.dom) {
          CHECK_FALSE(dom_seen[i]);
          dom_seen[i] = true;
          // f never crosses blocks
          bool inside = false;
          for (std::size_t j : block.cod) inside = inside || j == f.table()[i];
          CHECK(inside);
        }
        for (std::size_t j : block.cod) {
          CHECK_FALSE(cod_seen[j]);
          cod_seen[j] = true;
        }
      }
      for (std::size_t j : parts.isolated_cod) {
        CHECK_FALSE(cod_seen[j]);
        cod_seen[j] = true;
      }
      for (bool seen : dom_seen) CHECK(seen);
      for (bool seen : cod_seen) CHECK(seen);
    }
  }

  TEST_CASE("sequential: constant function decomposes under every policy") {
    Object dom = set_of(kCop, {"1", "2"});
    Object cod = set_of(kCop, {"x", "y"});
    Morphism f = Morphism::function(dom, cod, {0, 0});

    for (Policy policy : {Policy::PaperLiteral, Policy::Nondegenerate}) {
      auto outcome = seq_decompose(f, policy);
      CHECK(outcome.verdict == Verdict::Decomposable);
      check_seq_replay(f, outcome);
      // image factorization: e onto {x}, m the inclusion
      CHECK(outcome.factors->first.cod().size() == 1);
      CHECK(outcome.factors->first.cod().elements()[0] == Label::atom("x"));
    }

    auto essential = seq_decompose(f, Policy::Essential);
    CHECK(essential.verdict == Verdict::Decomposable);
    check_seq_replay(f, essential);
    // the essential witness needs a 2-element intermediate
    CHECK(essential.factors->first.cod().size() == 2);
  }

  TEST_CASE("sequential: identities are not decomposable") {
    Morphism id_a = identity(set_of(kCop, {"a"}));
    for (Policy policy : {Policy::PaperLiteral, Policy::Nondegenerate, Policy::Essential})
      CHECK(seq_decompose(id_a, policy).verdict == Verdict::NotDecomposable);
  }

  TEST_CASE("sequential: bijections split under paper-literal but not essentially") {
    Object a = set_of(kCop, {"a1", "a2"});
    Object b = set_of(kCop, {"b1", "b2"});
    Morphism f = Morphism::function(a, b, {0, 1});

    auto literal = seq_decompose(f, Policy::PaperLiteral);
    CHECK(literal.verdict == Verdict::Decomposable);
    check_seq_replay(f, literal);
    CHECK(literal.factors->first.cod().size() == 2);  // factor through {c1,c2}

    CHECK(seq_decompose(f, Policy::Essential).verdict == Verdict::NotDecomposable);
  }

  TEST_CASE("sequential: empty-domain functions are degenerate-only by default") {
    Morphism f = Morphism::function(set_of(kCop, {}), set_of(kCop, {"x", "y"}), {});
    CHECK(seq_decompose(f, Policy::PaperLiteral).verdict == Verdict::Decomposable);
    CHECK(seq_decompose(f, Policy::Nondegenerate).verdict == Verdict::DegenerateOnly);
    CHECK(seq_decompose(f, Policy::Essential).verdict == Verdict::DegenerateOnly);
  }

  TEST_CASE("sequential verdicts agree with the definitional enumeration") {
    // exhaustive over small functions with nonempty codomain
    for (std::size_t n = 0; n <= 3; ++n) {
      for (std::size_t b = 1; b <= 3; ++b) {
        std::vector<Label> dom_labels, cod_labels;
        for (std::size_t i = 0; i < n; ++i) dom_labels.push_back(Label::atom("a" + std::to_string(i)));
        for (std::size_t j = 0; j < b; ++j) cod_labels.push_back(Label::atom("b" + std::to_string(j)));
        Object dom = Object::finite_set(kCop, dom_labels);
        Object cod = Object::finite_set(kCop, cod_labels);
        std::vector<std::size_t> table(n, 0);
        for (;;) {
          Morphism f = Morphism::function(dom, cod, table);
          auto existence = mcat_test::enumerate_seq_witnesses(f);
          for (Policy policy :
               {Policy::PaperLiteral, Policy::Nondegenerate, Policy::Essential}) {
            auto outcome = seq_decompose(f, policy);
            CHECK(outcome.verdict == mcat_test::verdict_from_existence(existence, policy));
            if (outcome.verdict == Verdict::Decomposable) check_seq_replay(f, outcome);
          }
          std::size_t pos = 0;
          while (pos < n) {
            if (++table[pos] < b) break;
            table[pos] = 0;
            ++pos;
          }
          if (pos == n) break;
        }
      }
    }
  }

  TEST_CASE("parallel over (+): the worked example decomposes") {
    Object a = set_of(kCop, {"a1", "a2"});
    Object b = set_of(kCop, {"b1", "b2"});
    Morphism f = Morphism::function(a, b, {0, 1});
    auto outcome = par_decompose_coproduct(f, Policy::Nondegenerate);
    REQUIRE(outcome.verdict == Verdict::Decomposable);
    check_par_replay(f, outcome);
    // f1(a1) = b1 and f2(a2) = b2 up to retagging
    const Morphism& f1 = outcome.factors->first;
    const Morphism& f2 = outcome.factors->second;
    CHECK(f1.dom().elements()[0] == Label::atom("a1"));
    CHECK(f1.cod().elements()[f1.table()[0]] == Label::atom("b1"));
    CHECK(f2.dom().elements()[0] == Label::atom("a2"));
    CHECK(f2.cod().elements()[f2.table()[0]] == Label::atom("b2"));
  }

  TEST_CASE("parallel over (+): identity is not decomposable") {
    Morphism id2 = identity(set_of(kCop, {"a1", "a2"}));
    CHECK(par_decompose_coproduct(id2, Policy::PaperLiteral).verdict ==
          Verdict::NotDecomposable);
  }

  TEST_CASE("parallel over (+): isolated codomain forces a degenerate factor") {
    Morphism f = Morphism::function(set_of(kCop, {"1"}), set_of(kCop, {"x", "y"}), {0});
    auto outcome = par_decompose_coproduct(f, Policy::Nondegenerate);
    CHECK(outcome.verdict == Verdict::DegenerateOnly);
    CHECK(par_decompose_coproduct(f, Policy::PaperLiteral).verdict == Verdict::Decomposable);
  }

  TEST_CASE("parallel over (+) requires the coproduct instance") {
    Morphism f = Morphism::function(set_of(kProd, {"1"}), set_of(kProd, {"x"}), {0});
    CHECK_THROWS_AS(par_decompose_coproduct(f, Policy::Nondegenerate), InstanceError);
  }

  TEST_CASE("parallel over (+) agrees with the brute-force enumerator") {
    mcat_test::FunctionGen gen(99);
    for (int t = 0; t < 300; ++t) {
      Morphism f = gen.next(4);
      auto existence = mcat_test::enumerate_coproduct_witnesses(f);
      for (Policy policy : {Policy::PaperLiteral, Policy::Nondegenerate, Policy::Essential}) {
        auto outcome = par_decompose_coproduct(f, policy);
        CHECK(outcome.verdict == mcat_test::verdict_from_existence(existence, policy));
        if (outcome.verdict == Verdict::Decomposable) check_par_replay(f, outcome);
      }
    }
  }

  TEST_CASE("parallel over (+) matches the enumerator on every tiny function") {
    for (std::size_t n = 0; n <= 3; ++n) {
      for (std::size_t m = 1; m <= 3; ++m) {
        std::vector<Label> dom_labels, cod_labels;
        for (std::size_t i = 0; i < n; ++i)
          dom_labels.push_back(Label::atom("a" + std::to_string(i)));
        for (std::size_t j = 0; j < m; ++j)
          cod_labels.push_back(Label::atom("b" + std::to_string(j)));
        Object dom = Object::finite_set(kCop, dom_labels);
        Object cod = Object::finite_set(kCop, cod_labels);
        std::vector<std::size_t> table(n, 0);
        for (;;) {
          Morphism f = Morphism::function(dom, cod, table);
          auto existence = mcat_test::enumerate_coproduct_witnesses(f);
          for (Policy policy :
               {Policy::PaperLiteral, Policy::Nondegenerate, Policy::Essential}) {
            CHECK(par_decompose_coproduct(f, policy).verdict ==
                  mcat_test::verdict_from_existence(existence, policy));
          }
          std::size_t pos = 0;
          while (pos < n) {
            if (++table[pos] < m) break;
            table[pos] = 0;
            ++pos;
          }
          if (pos == n) break;
        }
      }
    }
  }

  TEST_CASE("fixed product check: coordinatewise map splits") {
    Object bits = set_of(kProd, {"0", "1"});
    Object square = mproduct_obj(bits, bits);
    // f(a, b) = (1 - a, b) on the 4-element product, identity isos.
    std::vector<std::size_t> table(4);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) table[a * 2 + b] = (1 - a) * 2 + b;
    Morphism f = Morphism::function(square, square, table);
    auto outcome = par_check_product(f, {bits, bits}, {bits, bits}, identity(square),
                                     identity(square), Policy::Nondegenerate);
    // The induced pair is (negation, identity); an identity factor is never a
    // witness, but the factors are still reported.
    CHECK(outcome.verdict == Verdict::NotDecomposable);
    REQUIRE(outcome.factors.has_value());
    CHECK(outcome.factors->first.table() == std::vector<std::size_t>{1, 0});
    CHECK(outcome.factors->second.table() == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("fixed product check: XOR coupling is detected") {
    Object bits = set_of(kProd, {"0", "1"});
    Object square = mproduct_obj(bits, bits);
    std::vector<std::size_t> table(4);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) table[a * 2 + b] = (a ^ b) * 2 + b;
    Morphism f = Morphism::function(square, square, table);
    auto outcome = par_check_product(f, {bits, bits}, {bits, bits}, identity(square),
                                     identity(square), Policy::Nondegenerate);
    CHECK(outcome.verdict == Verdict::NotDecomposable);
    CHECK_FALSE(outcome.factors.has_value());
  }

  TEST_CASE("fixed product check: both coordinates moving decomposes") {
    Object bits = set_of(kProd, {"0", "1"});
    Object square = mproduct_obj(bits, bits);
    // f(a, b) = (1 - a, 1 - b): both factors are negations.
    std::vector<std::size_t> table(4);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) table[a * 2 + b] = (1 - a) * 2 + (1 - b);
    Morphism f = Morphism::function(square, square, table);
    auto outcome = par_check_product(f, {bits, bits}, {bits, bits}, identity(square),
                                     identity(square), Policy::Nondegenerate);
    CHECK(outcome.verdict == Verdict::Decomposable);
    check_par_replay(f, outcome);
    // Both negations are isomorphisms, so essentially it still fails.
    CHECK(par_check_product(f, {bits, bits}, {bits, bits}, identity(square), identity(square),
                            Policy::Essential)
              .verdict == Verdict::NotDecomposable);
  }

  TEST_CASE("fixed product check transports along explicit isos") {
    Object bits = set_of(kProd, {"0", "1"});
    Object square = mproduct_obj(bits, bits);
    // h(a, b) = (1 - a, 1 - b), then conjugate by a nontrivial relabeling of
    // the four product points; the transported map must still split.
    std::vector<std::size_t> table(4);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) table[a * 2 + b] = (1 - a) * 2 + (1 - b);
    Morphism h = Morphism::function(square, square, table);
    Morphism shuffle = Morphism::function(square, square, {2, 0, 3, 1});
    auto shuffle_inv = iso_check(Instance::finset_product(), shuffle);
    REQUIRE(shuffle_inv.has_value());
    Morphism f = compose(shuffle, compose(h, *shuffle_inv));

    auto outcome = par_check_product(f, {bits, bits}, {bits, bits}, shuffle, shuffle,
                                     Policy::Nondegenerate);
    CHECK(outcome.verdict == Verdict::Decomposable);
    check_par_replay(f, outcome);
    CHECK(outcome.factors->first.table() == std::vector<std::size_t>{1, 0});
    CHECK(outcome.factors->second.table() == std::vector<std::size_t>{1, 0});
  }

  TEST_CASE("fixed product check rejects non-bijective isos") {
    Object bits = set_of(kProd, {"0", "1"});
    Object square = mproduct_obj(bits, bits);
    Morphism collapse = Morphism::function(square, square, {0, 0, 0, 0});
    Morphism f = identity(square);
    CHECK_THROWS_AS(par_check_product(f, {bits, bits}, {bits, bits}, collapse,
                                      identity(square), Policy::Nondegenerate),
                    WitnessError);
  }

  TEST_CASE("product search: prime cardinality cannot split") {
    Object five = set_of(kProd, {"e0", "e1", "e2", "e3", "e4"});
    std::vector<std::size_t> table{1, 2, 3, 4, 0};
    Morphism f = Morphism::function(five, five, table);
    CHECK(par_search_product(f).verdict == Verdict::NotDecomposable);
  }

  TEST_CASE("product search finds the unstructured coordinatewise map") {
    Object four = set_of(kProd, {"e0", "e1", "e2", "e3"});
    // (a, b) packed as 2a + b, f(a, b) = (1 - a, b)
    Morphism f = Morphism::function(four, four, {2, 3, 0, 1});
    auto outcome = par_search_product(f);
    REQUIRE(outcome.verdict == Verdict::Decomposable);
    check_par_replay(f, outcome);
    CHECK(outcome.factors->first.dom().size() == 2);
  }

  TEST_CASE("product search recovers a scrambled 2x3 product") {
    Object c1 = set_of(kProd, {"u0", "u1"});
    Object c2 = set_of(kProd, {"v0", "v1", "v2"});
    Morphism g1 = Morphism::function(c1, c1, {1, 1});
    Morphism g2 = Morphism::function(c2, c2, {2, 0, 0});
    Morphism h = mproduct_mor(g1, g2);

    // Scramble both sides by fixed bijections onto plain 6-element objects.
    Object six = set_of(kProd, {"m0", "m1", "m2", "m3", "m4", "m5"});
    std::vector<std::size_t> shuffle{3, 0, 4, 1, 5, 2};  // product position -> six position
    Morphism to_six = Morphism::function(h.dom(), six, shuffle);
    auto from_six = iso_check(Instance::finset_product(), to_six);
    REQUIRE(from_six.has_value());
    Morphism to_six_cod = Morphism::function(h.cod(), six, shuffle);
    Morphism f = compose(compose(to_six_cod, h), *from_six);

    auto outcome = par_search_product(f);
    REQUIRE(outcome.verdict == Verdict::Decomposable);
    check_par_replay(f, outcome);
    CHECK(outcome.factors->first.dom().size() == 2);
    CHECK(outcome.factors->second.dom().size() == 3);
  }

  TEST_CASE("product search: constructed products always decompose") {
    mcat_test::FunctionGen gen(5150);
    for (int t = 0; t < 25; ++t) {
      const std::size_t sizes[][2] = {{2, 2}, {2, 3}, {2, 4}};
      const auto& pick = sizes[gen.next_index(3)];
      std::vector<Label> l1, l2;
      for (std::size_t i = 0; i < pick[0]; ++i) l1.push_back(Label::atom("x" + std::to_string(i)));
      for (std::size_t i = 0; i < pick[1]; ++i) l2.push_back(Label::atom("y" + std::to_string(i)));
      Object c1 = Object::finite_set(kProd, l1);
      Object c2 = Object::finite_set(kProd, l2);
      std::vector<std::size_t> t1(pick[0]), t2(pick[1]);
      bool id1 = true, id2 = true;
      for (std::size_t i = 0; i < t1.size(); ++i) {
        t1[i] = gen.next_index(pick[0]);
        id1 = id1 && t1[i] == i;
      }
      for (std::size_t i = 0; i < t2.size(); ++i) {
        t2[i] = gen.next_index(pick[1]);
        id2 = id2 && t2[i] == i;
      }
      if (id1 || id2) continue;  // the property quantifies over non-identity factors
      Morphism product =
          mproduct_mor(Morphism::function(c1, c1, t1), Morphism::function(c2, c2, t2));
      auto outcome = par_search_product(product);
      CHECK(outcome.verdict == Verdict::Decomposable);
      check_par_replay(product, outcome);
    }
  }

  TEST_CASE("product search enforces the cardinality cap") {
    std::vector<Label> labels;
    for (int i = 0; i < 9; ++i) labels.push_back(Label::atom("e" + std::to_string(i)));
    Object nine = Object::finite_set(kProd, labels);
    Morphism f = identity(nine);
    CHECK_THROWS_AS(par_search_product(f), SizeError);
    CHECK(par_search_product(f, 9).verdict == Verdict::Decomposable);
  }
}
