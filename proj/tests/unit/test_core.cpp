#include <doctest.h>

#include <cmath>

#include "mcat/errors.hpp"
#include "mcat/instance.hpp"
#include "mcat/lawcheck.hpp"

using namespace mcat;

namespace {

const InstanceKey kCop{CategoryId::FinSet, ProductKind::Coproduct};
const InstanceKey kProd{CategoryId::FinSet, ProductKind::Product};
const InstanceKey kTen{CategoryId::Vec, ProductKind::Tensor};

Object set_of(InstanceKey key, std::initializer_list<const char*> names) {
  std::vector<Label> labels;
  for (const char* name : names) labels.push_back(Label::atom(name));
  return Object::finite_set(key, std::move(labels));
}

// Pointwise evaluation oracle for the power maps: tables computed from
// integer arithmetic on the labels, never copied from the implementation.
Morphism power_map(const Object& dom, const Object& cod, int exponent) {
  std::vector<std::size_t> table;
  for (const auto& label : dom.elements()) {
    long long x = std::stoll(label.atom_name());
    long long y = 1;
    for (int e = 0; e < exponent; ++e) y *= x;
    auto index = cod.index_of(Label::atom(std::to_string(y)));
    REQUIRE(index.has_value());
    table.push_back(*index);
  }
  return Morphism::function(dom, cod, table);
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("identity tables and matrices") {
    Object a = set_of(kCop, {"a1", "a2"});
    Morphism id_a = identity(a);
    CHECK(id_a.table() == std::vector<std::size_t>{0, 1});
    CHECK(is_identity(id_a));

    Object h = Object::space(kTen, 2);
    Morphism id_h = identity(h);
    CHECK(id_h.matrix() == ComplexMatrix::identity(2));

    Object empty = Instance::finset_coproduct().unit();
    Morphism id_empty = identity(empty);
    CHECK(id_empty.table().empty());
    CHECK(is_identity(id_empty));
  }

  TEST_CASE("composition chains tables: x^2 then x^3 is x^6 pointwise") {
    Object dom = set_of(kCop, {"-1", "0", "2"});
    Object mid = set_of(kCop, {"0", "1", "4"});
    Object cod = set_of(kCop, {"0", "1", "64"});
    Morphism f = power_map(dom, mid, 2);
    Morphism g = power_map(mid, cod, 3);
    Morphism gf = compose(g, f);
    CHECK(gf == power_map(dom, cod, 6));
    // (g o f)(2) = 64
    CHECK(gf.cod().elements()[gf.table()[2]] == Label::atom("64"));

    CHECK(compose(identity(mid), f) == f);
    CHECK(compose(f, identity(dom)) == f);
  }

  TEST_CASE("composition against the hand-derived 2x2 inverse") {
    Object r2 = Object::space(kTen, 2);
    Morphism m = Morphism::linear(
        r2, r2, ComplexMatrix::from_rows({{1.0, 1.0}, {-1.0, 1.0}}));
    Morphism m_inv = Morphism::linear(
        r2, r2, ComplexMatrix::from_rows({{0.5, -0.5}, {0.5, 0.5}}));
    CHECK(ComplexMatrix::max_abs_diff(compose(m, m_inv).matrix(), ComplexMatrix::identity(2)) <=
          1e-12);
    CHECK(ComplexMatrix::max_abs_diff(compose(m_inv, m).matrix(), ComplexMatrix::identity(2)) <=
          1e-12);
  }

  TEST_CASE("object and morphism construction enforce the invariants") {
    // element labels must be pairwise distinct
    CHECK_THROWS_AS(Object::finite_set(kCop, {Label::atom("x"), Label::atom("x")}), Error);
    // payload kind must match the category
    CHECK_THROWS_AS(Object::finite_set(kTen, {Label::atom("x")}), InstanceError);
    CHECK_THROWS_AS(Object::space(kCop, 2), InstanceError);

    Object a = set_of(kCop, {"a1", "a2"});
    Object b = set_of(kCop, {"b1"});
    // tables must be total and land in the codomain
    CHECK_THROWS_AS(Morphism::function(a, b, {0}), Error);
    CHECK_THROWS_AS(Morphism::function(a, b, {0, 1}), Error);
    // endpoints must share one instance
    CHECK_THROWS_AS(Morphism::function(a, set_of(kProd, {"b1"}), {0, 0}), InstanceError);

    Object h2 = Object::space(kTen, 2);
    Object h3 = Object::space(kTen, 3);
    // matrix shape is (dim cod, dim dom), exactly
    CHECK_THROWS_AS(Morphism::linear(h2, h3, ComplexMatrix(2, 3)), ShapeError);
    CHECK_NOTHROW(Morphism::linear(h2, h3, ComplexMatrix(3, 2)));
    // entries must be finite
    ComplexMatrix nan_matrix(2, 2);
    nan_matrix(0, 0) = Complex(std::nan(""), 0.0);
    CHECK_THROWS_AS(Morphism::linear(h2, h2, nan_matrix), Error);

    // finset instances pin tolerance to zero; vec tolerance must be >= 0
    CHECK_THROWS_AS(Instance(CategoryId::FinSet, ProductKind::Coproduct, 1e-9), InstanceError);
    CHECK_THROWS_AS(Instance(CategoryId::Vec, ProductKind::Tensor, -1.0), InstanceError);
    CHECK_THROWS_AS(Instance(CategoryId::Vec, ProductKind::Coproduct, 0.0), InstanceError);
  }

  TEST_CASE("composition errors") {
    Object a = set_of(kCop, {"a"});
    Object b = set_of(kCop, {"b"});
    Morphism f = Morphism::function(a, b, {0});
    CHECK_THROWS_AS(compose(f, f), ComposeError);
    Morphism g = Morphism::function(set_of(kProd, {"a"}), set_of(kProd, {"b"}), {0});
    CHECK_THROWS_AS(compose(g, f), InstanceError);
  }

  TEST_CASE("monoidal product on objects") {
    Object a1 = set_of(kCop, {"a1"});
    Object a2 = set_of(kCop, {"a2"});
    Object sum = mproduct_obj(a1, a2);
    REQUIRE(sum.size() == 2);
    CHECK(sum.elements()[0] == Label::tagged(Label::atom("a1"), 1));
    CHECK(sum.elements()[1] == Label::tagged(Label::atom("a2"), 2));
    CHECK(sum.str() == "{(a1,1),(a2,2)}");

    CHECK(mproduct_obj(Object::space(kTen, 2), Object::space(kTen, 3)).dim() == 6);

    // A (+) empty is isomorphic but not identical to A: elements retagged.
    Object a = set_of(kCop, {"x", "y"});
    Object padded = mproduct_obj(a, Instance::finset_coproduct().unit());
    CHECK(padded.size() == a.size());
    CHECK_FALSE(padded == a);
    CHECK(padded.elements()[0] == Label::tagged(Label::atom("x"), 1));
  }

  TEST_CASE("monoidal product on morphisms") {
    // (f1 (+) f2)((a1,1)) = (b1,1), (f1 (+) f2)((a2,2)) = (b2,2)
    Object a1 = set_of(kCop, {"a1"}), a2 = set_of(kCop, {"a2"});
    Object b1 = set_of(kCop, {"b1"}), b2 = set_of(kCop, {"b2"});
    Morphism f1 = Morphism::function(a1, b1, {0});
    Morphism f2 = Morphism::function(a2, b2, {0});
    Morphism sum = mproduct_mor(f1, f2);
    REQUIRE(sum.dom().size() == 2);
    CHECK(sum.cod().elements()[sum.table()[0]] == Label::tagged(Label::atom("b1"), 1));
    CHECK(sum.cod().elements()[sum.table()[1]] == Label::tagged(Label::atom("b2"), 2));

    // Functor preserves identities.
    Object u = Object::space(kTen, 2), w = Object::space(kTen, 3);
    CHECK(mproduct_mor(identity(u), identity(w)) == identity(mproduct_obj(u, w)));

    // X (x) I2 exchanges the leading index blocks.
    Object q = Object::space(kTen, 2);
    Morphism x = Morphism::linear(q, q, ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
    Morphism xi = mproduct_mor(x, identity(q));
    ComplexMatrix expected = ComplexMatrix::from_rows({{0.0, 0.0, 1.0, 0.0},
                                                       {0.0, 0.0, 0.0, 1.0},
                                                       {1.0, 0.0, 0.0, 0.0},
                                                       {0.0, 1.0, 0.0, 0.0}});
    CHECK(ComplexMatrix::max_abs_diff(xi.matrix(), expected) == 0.0);
  }

  TEST_CASE("left unitor over the empty-set unit") {
    Object a = set_of(kCop, {"a1", "a2"});
    StructuralIso lam = left_unitor(a);
    REQUIRE(lam.forward.dom().size() == 2);
    CHECK(lam.forward.dom().elements()[0] == Label::tagged(Label::atom("a1"), 2));
    CHECK(lam.forward.cod() == a);
    CHECK(is_identity(compose(lam.backward, lam.forward)));
    CHECK(is_identity(compose(lam.forward, lam.backward)));
  }

  TEST_CASE("tensor associator is the identity matrix") {
    Object a = Object::space(kTen, 2), b = Object::space(kTen, 3), c = Object::space(kTen, 2);
    StructuralIso assoc = associator(a, b, c);
    CHECK(assoc.forward.matrix() == ComplexMatrix::identity(12));
    CHECK(assoc.forward.dom().dim() == 12);
  }

  TEST_CASE("product associator is the 8-element retagging bijection") {
    Object bits = set_of(kProd, {"0", "1"});
    StructuralIso assoc = associator(bits, bits, bits);
    REQUIRE(assoc.forward.dom().size() == 8);
    // Enumerate all 8 triples: position of ((a,b),c) must map to (a,(b,c)).
    std::size_t index = 0;
    for (const auto& a : bits.elements())
      for (const auto& b : bits.elements())
        for (const auto& c : bits.elements()) {
          CHECK(assoc.forward.dom().elements()[index] ==
                Label::pair(Label::pair(a, b), c));
          CHECK(assoc.forward.cod().elements()[assoc.forward.table()[index]] ==
                Label::pair(a, Label::pair(b, c)));
          ++index;
        }
    CHECK(is_identity(compose(assoc.backward, assoc.forward)));
  }

  TEST_CASE("iso_check inverts bijections and invertible matrices") {
    Instance cop = Instance::finset_coproduct();
    Object a = set_of(kCop, {"a1", "a2"});
    Object b = set_of(kCop, {"b1", "b2"});
    Morphism swap = Morphism::function(a, b, {1, 0});
    auto inverse = iso_check(cop, swap);
    REQUIRE(inverse.has_value());
    CHECK(inverse->table() == std::vector<std::size_t>{1, 0});
    CHECK(is_identity(compose(*inverse, swap)));

    Morphism constant = Morphism::function(a, set_of(kCop, {"x"}), {0, 0});
    CHECK_FALSE(iso_check(cop, constant).has_value());

    Instance ten = Instance::vec_tensor();
    Object r2 = Object::space(kTen, 2);
    Morphism m = Morphism::linear(r2, r2, ComplexMatrix::from_rows({{1.0, 1.0}, {-1.0, 1.0}}));
    auto m_inv = iso_check(ten, m);
    REQUIRE(m_inv.has_value());
    CHECK(ComplexMatrix::max_abs_diff(
              m_inv->matrix(), ComplexMatrix::from_rows({{0.5, -0.5}, {0.5, 0.5}})) <= 1e-12);

    Morphism singular =
        Morphism::linear(r2, r2, ComplexMatrix::from_rows({{1.0, 2.0}, {2.0, 4.0}}));
    CHECK_FALSE(iso_check(ten, singular).has_value());
  }

  TEST_CASE("states embed and extract") {
    Object b = set_of(kProd, {"b1", "b2"});
    Morphism point = state_embed(b, Label::atom("b1"));
    CHECK(point.dom() == Instance::finset_product().unit());
    CHECK(state_extract_element(point) == Label::atom("b1"));

    Object r2 = Object::space(kTen, 2);
    Morphism e0 = state_embed(r2, {1.0, 0.0});
    CHECK(e0.matrix().rows() == 2);
    CHECK(e0.matrix().cols() == 1);

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Object h4 = Object::space(kTen, 4);
    std::vector<Complex> bell{inv_sqrt2, 0.0, 0.0, inv_sqrt2};
    Morphism bell_state = state_embed(h4, bell);
    auto round_trip = state_extract_vector(bell_state);
    REQUIRE(round_trip.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(round_trip[i] == bell[i]);

    CHECK_THROWS_AS(state_embed(b, Label::atom("nope")), StateError);
    Morphism not_state = Morphism::function(b, b, {0, 1});
    CHECK_THROWS_AS(state_extract_element(not_state), StateError);
    Object cop_obj = set_of(kCop, {"x"});
    CHECK_THROWS_AS(state_embed(cop_obj, Label::atom("x")), StateError);
  }

  TEST_CASE("sampled category laws hold in all four instances") {
    for (const Instance& instance :
         {Instance::finset_coproduct(), Instance::finset_product(), Instance::vec_directsum(),
          Instance::vec_tensor()}) {
      lawcheck::SampleSpec spec;
      spec.seed = 7;
      spec.trial_count = 40;
      spec.max_size = instance.category() == CategoryId::FinSet ? 4 : 3;
      spec.min_size = instance.category() == CategoryId::FinSet ? 0 : 1;
      lawcheck::Sampler sampler(instance, spec);
      for (std::size_t t = 0; t < spec.trial_count; ++t) {
        auto chain = sampler.next_chain(3);
        Morphism f = sampler.next_morphism(chain[0], chain[1]);
        Morphism g = sampler.next_morphism(chain[1], chain[2]);
        CHECK(morphism_equal(instance, compose(g, f),
                             compose(compose(identity(chain[2]), g), f)));
        CHECK(morphism_equal(instance, compose(identity(chain[1]), f), f));
        CHECK(morphism_equal(instance, compose(f, identity(chain[0])), f));
      }
    }
  }

  TEST_CASE("structural isomorphisms invert on sampled objects") {
    for (const Instance& instance :
         {Instance::finset_coproduct(), Instance::finset_product(), Instance::vec_directsum(),
          Instance::vec_tensor()}) {
      lawcheck::SampleSpec spec;
      spec.seed = 21;
      spec.min_size = instance.category() == CategoryId::FinSet ? 0 : 1;
      spec.max_size = 3;
      lawcheck::Sampler sampler(instance, spec);
      for (int t = 0; t < 15; ++t) {
        Object a = sampler.next_object();
        Object b = sampler.next_object();
        Object c = sampler.next_object();
        for (const StructuralIso& iso :
             {associator(a, b, c), left_unitor(a), right_unitor(a)}) {
          CHECK(is_identity(compose(iso.backward, iso.forward), instance.tolerance()));
          CHECK(is_identity(compose(iso.forward, iso.backward), instance.tolerance()));
        }
      }
    }
  }

  TEST_CASE("state round trip over sampled vectors") {
    lawcheck::SampleSpec spec;
    spec.seed = 11;
    spec.min_size = 1;
    spec.max_size = 4;
    lawcheck::Sampler sampler(Instance::vec_tensor(), spec);
    for (int t = 0; t < 25; ++t) {
      Object h = sampler.next_object();
      std::vector<Complex> v(h.dim());
      for (auto& z : v) z = Complex(sampler.next_real(), sampler.next_real());
      auto extracted = state_extract_vector(state_embed(h, v));
      REQUIRE(extracted.size() == v.size());
      for (std::size_t i = 0; i < v.size(); ++i) CHECK(extracted[i] == v[i]);
    }
  }
}
