#include "mcat/lawcheck.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "mcat/errors.hpp"

namespace mcat::lawcheck {

const char* to_string(LawId law) {
  switch (law) {
    case LawId::Assoc: return "assoc";
    case LawId::Identity: return "identity";
    case LawId::Interchange: return "interchange";
    case LawId::NaturalityAssociator: return "naturality_associator";
    case LawId::NaturalityLeftUnitor: return "naturality_left_unitor";
    case LawId::NaturalityRightUnitor: return "naturality_right_unitor";
    case LawId::Triangle: return "triangle";
    case LawId::Pentagon: return "pentagon";
  }
  return "?";
}

Ops Ops::standard() {
  Ops ops;
  ops.identity = [](const Object& a) { return mcat::identity(a); };
  ops.compose = [](const Morphism& g, const Morphism& f) { return mcat::compose(g, f); };
  ops.mproduct_mor = [](const Morphism& f, const Morphism& g) { return mcat::mproduct_mor(f, g); };
  ops.associator = [](const Object& a, const Object& b, const Object& c) {
    return mcat::associator(a, b, c);
  };
  ops.left_unitor = [](const Object& a) { return mcat::left_unitor(a); };
  ops.right_unitor = [](const Object& a) { return mcat::right_unitor(a); };
  return ops;
}

// ---------------------------------------------------------------------------
// Sampler
// ---------------------------------------------------------------------------

Sampler::Sampler(Instance instance, SampleSpec spec)
    : instance_(std::move(instance)), spec_(spec), rng_(spec.seed) {
  const std::size_t cap = instance_.category() == CategoryId::FinSet ? 6 : 4;
  if (spec_.min_size > spec_.max_size)
    throw SampleSpecError("object size range is empty (min > max)");
  if (spec_.max_size > cap)
    throw SampleSpecError("object size cap for this instance is " + std::to_string(cap) +
                          ", got " + std::to_string(spec_.max_size));
  if (spec_.trial_count < 1) throw SampleSpecError("trial_count must be at least 1");
  if (spec_.exhaustive &&
      (instance_.category() != CategoryId::FinSet || spec_.max_size > 2))
    throw SampleSpecError("exhaustive mode covers finset instances with sizes <= 2");
}

std::uint64_t Sampler::next_u64() { return rng_(); }

std::size_t Sampler::next_index(std::size_t n) { return n == 0 ? 0 : next_u64() % n; }

double Sampler::next_real() {
  // 53 uniform bits onto [-1, 1]
  const double unit = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return 2.0 * unit - 1.0;
}

Object Sampler::next_object() {
  const std::size_t size = spec_.min_size + next_index(spec_.max_size - spec_.min_size + 1);
  return next_object_of_size(size);
}

Object Sampler::next_object_of_size(std::size_t size) {
  const std::size_t salt = object_counter_++;
  if (instance_.category() == CategoryId::FinSet) {
    std::vector<Label> labels;
    labels.reserve(size);
    for (std::size_t i = 0; i < size; ++i)
      labels.push_back(Label::atom("o" + std::to_string(salt) + "e" + std::to_string(i)));
    return Object::finite_set(instance_.key(), std::move(labels));
  }
  return Object::space(instance_.key(), size);
}

Morphism Sampler::next_morphism(const Object& dom, const Object& cod) {
  if (instance_.category() == CategoryId::FinSet) {
    std::vector<std::size_t> table(dom.size());
    for (auto& value : table) value = next_index(cod.size());
    return Morphism::function(dom, cod, std::move(table));
  }
  ComplexMatrix m(cod.dim(), dom.dim());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = Complex(next_real(), next_real());
  return Morphism::linear(dom, cod, std::move(m));
}

std::vector<Object> Sampler::next_chain(std::size_t length) {
  // Codomain first: a finset function into the empty set forces an empty
  // domain, so emptiness propagates right to left.
  std::vector<Object> chain(length, instance_.unit());
  for (std::size_t pos = length; pos-- > 0;) {
    const bool force_empty = instance_.category() == CategoryId::FinSet && pos + 1 < length &&
                             chain[pos + 1].size() == 0;
    chain[pos] = force_empty ? next_object_of_size(0) : next_object();
  }
  return chain;
}

// ---------------------------------------------------------------------------
// Trial plumbing
// ---------------------------------------------------------------------------

namespace {

constexpr double kMismatch = std::numeric_limits<double>::max();

struct Recorder {
  LawReport report;
  Instance instance;

  explicit Recorder(LawId law, const Instance& inst) : instance(inst) { report.law = law; }

  void compare(const std::string& inputs, const Morphism& left, const Morphism& right) {
    ++report.trials;
    double dev;
    double allowed = 0.0;
    if (!(left.dom() == right.dom()) || !(left.cod() == right.cod()) ||
        left.is_function() != right.is_function()) {
      dev = kMismatch;
    } else {
      dev = deviation(left, right);
      if (!left.is_function()) {
        const double scale = 1.0 + std::max(left.matrix().max_abs(), right.matrix().max_abs());
        allowed = instance.tolerance() * scale;
      }
    }
    report.max_deviation = std::max(report.max_deviation, dev);
    if (dev > allowed) {
      report.failures.push_back({inputs, left.str(), right.str(), dev});
    }
  }

  void record_exception(const std::string& inputs, const std::exception& e) {
    ++report.trials;
    report.max_deviation = kMismatch;
    report.failures.push_back({inputs, std::string("exception: ") + e.what(), "", kMismatch});
  }
};

bool exhaustive_mode(const Instance& instance, const SampleSpec& spec) {
  return spec.exhaustive && instance.category() == CategoryId::FinSet && spec.max_size <= 2;
}

std::vector<Object> exhaustive_objects(const Instance& instance, const SampleSpec& spec) {
  std::vector<Object> out;
  for (std::size_t size = spec.min_size; size <= spec.max_size; ++size) {
    std::vector<Label> labels;
    for (std::size_t i = 0; i < size; ++i) labels.push_back(Label::atom("x" + std::to_string(i)));
    out.push_back(Object::finite_set(instance.key(), std::move(labels)));
  }
  return out;
}

void for_each_function(const Object& dom, const Object& cod,
                       const std::function<void(const Morphism&)>& sink) {
  if (dom.size() > 0 && cod.size() == 0) return;  // no functions exist
  std::vector<std::size_t> table(dom.size(), 0);
  for (;;) {
    sink(Morphism::function(dom, cod, table));
    std::size_t pos = 0;
    while (pos < table.size()) {
      if (++table[pos] < cod.size()) break;
      table[pos] = 0;
      ++pos;
    }
    if (pos == table.size()) return;
  }
}

std::string describe(std::initializer_list<const Morphism*> morphisms) {
  std::ostringstream os;
  bool first = true;
  for (const auto* m : morphisms) {
    if (!first) os << " ; ";
    os << m->str();
    first = false;
  }
  return os.str();
}

std::string describe_objects(std::initializer_list<const Object*> objects) {
  std::ostringstream os;
  bool first = true;
  for (const auto* o : objects) {
    if (!first) os << " ; ";
    os << o->str();
    first = false;
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Law checks
// ---------------------------------------------------------------------------

std::vector<Morphism> sample_morphisms(const Instance& instance, const SampleSpec& spec) {
  Sampler sampler(instance, spec);
  std::vector<Morphism> out;
  out.reserve(spec.morphism_count);
  for (std::size_t i = 0; i < spec.morphism_count; ++i) {
    auto chain = sampler.next_chain(2);
    out.push_back(sampler.next_morphism(chain[0], chain[1]));
  }
  return out;
}

std::pair<LawReport, LawReport> check_category(const Instance& instance, const SampleSpec& spec,
                                               const Ops& ops) {
  Sampler sampler(instance, spec);
  Recorder assoc(LawId::Assoc, instance);
  Recorder ident(LawId::Identity, instance);

  auto assoc_trial = [&](const Morphism& f, const Morphism& g, const Morphism& h) {
    const std::string inputs = describe({&f, &g, &h});
    try {
      assoc.compare(inputs, ops.compose(h, ops.compose(g, f)),
                    ops.compose(ops.compose(h, g), f));
    } catch (const std::exception& e) {
      assoc.record_exception(inputs, e);
    }
  };
  auto ident_trial = [&](const Morphism& f) {
    const std::string inputs = describe({&f});
    try {
      ident.compare(inputs, ops.compose(f, ops.identity(f.dom())), f);
      ident.compare(inputs, ops.compose(ops.identity(f.cod()), f), f);
    } catch (const std::exception& e) {
      ident.record_exception(inputs, e);
    }
  };

  if (exhaustive_mode(instance, spec)) {
    const auto objects = exhaustive_objects(instance, spec);
    for (const auto& a : objects)
      for (const auto& b : objects)
        for (const auto& c : objects)
          for (const auto& d : objects)
            for_each_function(a, b, [&](const Morphism& f) {
              for_each_function(b, c, [&](const Morphism& g) {
                for_each_function(c, d, [&](const Morphism& h) { assoc_trial(f, g, h); });
              });
            });
    for (const auto& a : objects)
      for (const auto& b : objects)
        for_each_function(a, b, [&](const Morphism& f) { ident_trial(f); });
    return {assoc.report, ident.report};
  }

  for (std::size_t t = 0; t < spec.trial_count; ++t) {
    auto chain = sampler.next_chain(4);
    auto f = sampler.next_morphism(chain[0], chain[1]);
    auto g = sampler.next_morphism(chain[1], chain[2]);
    auto h = sampler.next_morphism(chain[2], chain[3]);
    assoc_trial(f, g, h);
    ident_trial(f);
  }
  return {assoc.report, ident.report};
}

LawReport check_interchange(const Instance& instance, const SampleSpec& spec, const Ops& ops) {
  Sampler sampler(instance, spec);
  Recorder rec(LawId::Interchange, instance);

  auto trial = [&](const Morphism& f1, const Morphism& g1, const Morphism& f2,
                   const Morphism& g2) {
    const std::string inputs = describe({&f1, &g1, &f2, &g2});
    try {
      rec.compare(inputs,
                  ops.compose(ops.mproduct_mor(g1, g2), ops.mproduct_mor(f1, f2)),
                  ops.mproduct_mor(ops.compose(g1, f1), ops.compose(g2, f2)));
      // Functor law on identities: id_A (x) id_B = id_{A (x) B}.
      rec.compare(inputs, ops.mproduct_mor(ops.identity(f1.dom()), ops.identity(f2.dom())),
                  ops.identity(mproduct_obj(f1.dom(), f2.dom())));
    } catch (const std::exception& e) {
      rec.record_exception(inputs, e);
    }
  };

  if (exhaustive_mode(instance, spec)) {
    const auto objects = exhaustive_objects(instance, spec);
    // Exhausting two independent composable pairs is too wide; exhaust the
    // first pair and sample the second.
    for (const auto& a : objects)
      for (const auto& b : objects)
        for (const auto& c : objects)
          for_each_function(a, b, [&](const Morphism& f1) {
            for_each_function(b, c, [&](const Morphism& g1) {
              auto chain = sampler.next_chain(3);
              auto f2 = sampler.next_morphism(chain[0], chain[1]);
              auto g2 = sampler.next_morphism(chain[1], chain[2]);
              trial(f1, g1, f2, g2);
            });
          });
    return rec.report;
  }

  for (std::size_t t = 0; t < spec.trial_count; ++t) {
    auto left = sampler.next_chain(3);
    auto right = sampler.next_chain(3);
    auto f1 = sampler.next_morphism(left[0], left[1]);
    auto g1 = sampler.next_morphism(left[1], left[2]);
    auto f2 = sampler.next_morphism(right[0], right[1]);
    auto g2 = sampler.next_morphism(right[1], right[2]);
    trial(f1, g1, f2, g2);
  }
  return rec.report;
}

std::array<LawReport, 3> check_naturality(const Instance& instance, const SampleSpec& spec,
                                          const Ops& ops) {
  Sampler sampler(instance, spec);
  Recorder nat_assoc(LawId::NaturalityAssociator, instance);
  Recorder nat_left(LawId::NaturalityLeftUnitor, instance);
  Recorder nat_right(LawId::NaturalityRightUnitor, instance);
  const Object unit = instance.unit();

  auto assoc_trial = [&](const Morphism& f, const Morphism& g, const Morphism& h) {
    const std::string inputs = describe({&f, &g, &h});
    try {
      auto lhs = ops.compose(ops.associator(f.cod(), g.cod(), h.cod()).forward,
                             ops.mproduct_mor(ops.mproduct_mor(f, g), h));
      auto rhs = ops.compose(ops.mproduct_mor(f, ops.mproduct_mor(g, h)),
                             ops.associator(f.dom(), g.dom(), h.dom()).forward);
      nat_assoc.compare(inputs, lhs, rhs);
    } catch (const std::exception& e) {
      nat_assoc.record_exception(inputs, e);
    }
  };
  auto unitor_trial = [&](const Morphism& f) {
    const std::string inputs = describe({&f});
    try {
      nat_left.compare(inputs,
                       ops.compose(ops.left_unitor(f.cod()).forward,
                                   ops.mproduct_mor(ops.identity(unit), f)),
                       ops.compose(f, ops.left_unitor(f.dom()).forward));
    } catch (const std::exception& e) {
      nat_left.record_exception(inputs, e);
    }
    try {
      nat_right.compare(inputs,
                        ops.compose(ops.right_unitor(f.cod()).forward,
                                    ops.mproduct_mor(f, ops.identity(unit))),
                        ops.compose(f, ops.right_unitor(f.dom()).forward));
    } catch (const std::exception& e) {
      nat_right.record_exception(inputs, e);
    }
  };

  if (exhaustive_mode(instance, spec)) {
    const auto objects = exhaustive_objects(instance, spec);
    for (const auto& a : objects)
      for (const auto& b : objects)
        for_each_function(a, b, [&](const Morphism& f) {
          unitor_trial(f);
          auto chain_g = sampler.next_chain(2);
          auto chain_h = sampler.next_chain(2);
          assoc_trial(f, sampler.next_morphism(chain_g[0], chain_g[1]),
                      sampler.next_morphism(chain_h[0], chain_h[1]));
        });
    return {nat_assoc.report, nat_left.report, nat_right.report};
  }

  for (std::size_t t = 0; t < spec.trial_count; ++t) {
    auto fc = sampler.next_chain(2);
    auto gc = sampler.next_chain(2);
    auto hc = sampler.next_chain(2);
    auto f = sampler.next_morphism(fc[0], fc[1]);
    auto g = sampler.next_morphism(gc[0], gc[1]);
    auto h = sampler.next_morphism(hc[0], hc[1]);
    assoc_trial(f, g, h);
    unitor_trial(f);
  }
  return {nat_assoc.report, nat_left.report, nat_right.report};
}

std::pair<LawReport, LawReport> check_coherence(const Instance& instance, const SampleSpec& spec,
                                                const Ops& ops) {
  Sampler sampler(instance, spec);
  Recorder triangle(LawId::Triangle, instance);
  Recorder pentagon(LawId::Pentagon, instance);
  const Object unit = instance.unit();

  auto triangle_trial = [&](const Object& a, const Object& b) {
    const std::string inputs = describe_objects({&a, &b});
    try {
      auto lhs = ops.compose(ops.mproduct_mor(ops.identity(a), ops.left_unitor(b).forward),
                             ops.associator(a, unit, b).forward);
      auto rhs = ops.mproduct_mor(ops.right_unitor(a).forward, ops.identity(b));
      triangle.compare(inputs, lhs, rhs);
    } catch (const std::exception& e) {
      triangle.record_exception(inputs, e);
    }
  };
  auto pentagon_trial = [&](const Object& a, const Object& b, const Object& c, const Object& d) {
    const std::string inputs = describe_objects({&a, &b, &c, &d});
    try {
      auto top = ops.compose(
          ops.mproduct_mor(ops.identity(a), ops.associator(b, c, d).forward),
          ops.compose(ops.associator(a, mproduct_obj(b, c), d).forward,
                      ops.mproduct_mor(ops.associator(a, b, c).forward, ops.identity(d))));
      auto bottom = ops.compose(ops.associator(a, b, mproduct_obj(c, d)).forward,
                                ops.associator(mproduct_obj(a, b), c, d).forward);
      pentagon.compare(inputs, top, bottom);
    } catch (const std::exception& e) {
      pentagon.record_exception(inputs, e);
    }
  };

  if (exhaustive_mode(instance, spec)) {
    const auto objects = exhaustive_objects(instance, spec);
    for (const auto& a : objects)
      for (const auto& b : objects) {
        triangle_trial(a, b);
        for (const auto& c : objects)
          for (const auto& d : objects) pentagon_trial(a, b, c, d);
      }
    return {triangle.report, pentagon.report};
  }

  for (std::size_t t = 0; t < spec.trial_count; ++t) {
    auto a = sampler.next_object();
    auto b = sampler.next_object();
    auto c = sampler.next_object();
    auto d = sampler.next_object();
    triangle_trial(a, b);
    pentagon_trial(a, b, c, d);
  }
  return {triangle.report, pentagon.report};
}

std::vector<LawReport> check_all(const Instance& instance, const SampleSpec& spec,
                                 const Ops& ops) {
  std::vector<LawReport> out;
  auto [assoc, ident] = check_category(instance, spec, ops);
  out.push_back(std::move(assoc));
  out.push_back(std::move(ident));
  out.push_back(check_interchange(instance, spec, ops));
  auto naturality = check_naturality(instance, spec, ops);
  for (auto& report : naturality) out.push_back(std::move(report));
  auto [tri, pent] = check_coherence(instance, spec, ops);
  out.push_back(std::move(tri));
  out.push_back(std::move(pent));
  return out;
}

}  // namespace mcat::lawcheck
