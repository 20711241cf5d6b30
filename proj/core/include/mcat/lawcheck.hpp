#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mcat/instance.hpp"

namespace mcat::lawcheck {

/**
 * Deterministic sampling bounds for law verification. Size bounds are
 * cardinalities for FinSet and per-factor dimensions for Vec; FinSet allows
 * up to 6, Vec up to 4. With `exhaustive` set (FinSet, max_size <= 2) trials
 * enumerate every input instead of sampling.
 */
struct SampleSpec {
  std::uint64_t seed = 1;
  std::size_t min_size = 0;
  std::size_t max_size = 4;
  std::size_t morphism_count = 8;  // batch size for the sample() generators
  std::size_t trial_count = 200;
  bool exhaustive = false;
};

enum class LawId {
  Assoc,
  Identity,
  Interchange,
  NaturalityAssociator,
  NaturalityLeftUnitor,
  NaturalityRightUnitor,
  Triangle,
  Pentagon,
};

const char* to_string(LawId law);

/** Outcome of checking one law: trial count plus any counterexamples. */
struct LawReport {
  LawId law = LawId::Assoc;
  std::size_t trials = 0;

  struct Failure {
    std::string inputs;  // compact description of the sampled inputs
    std::string left;    // left-path value
    std::string right;   // right-path value
    double deviation = 0.0;
  };
  std::vector<Failure> failures;
  double max_deviation = 0.0;

  bool passed() const { return failures.empty(); }
};

/**
 * Deterministic pseudo-random source of objects and morphisms; the same seed
 * always yields the same stream. Bounds are validated against the instance
 * caps (SampleSpecError).
 */
class Sampler {
 public:
  Sampler(Instance instance, SampleSpec spec);

  const Instance& instance() const { return instance_; }
  const SampleSpec& spec() const { return spec_; }

  Object next_object();
  /// Object with a forced size (used to respect empty-codomain constraints).
  Object next_object_of_size(std::size_t size);
  Morphism next_morphism(const Object& dom, const Object& cod);

  /// FinSet morphisms need a nonempty codomain unless the domain is empty;
  /// sampling composable chains draws codomains first and clamps.
  std::vector<Object> next_chain(std::size_t length);

  std::uint64_t next_u64();
  std::size_t next_index(std::size_t n);  // uniform in [0, n)
  double next_real();                     // uniform in [-1, 1]

 private:
  Instance instance_;
  SampleSpec spec_;
  std::mt19937_64 rng_;
  std::size_t object_counter_ = 0;
};

/**
 * The operations a law check routes through. Tests substitute corrupted
 * implementations here to verify that the checks actually detect broken
 * laws; everything else uses standard().
 */
struct Ops {
  std::function<Morphism(const Object&)> identity;
  std::function<Morphism(const Morphism&, const Morphism&)> compose;  // (g, f)
  std::function<Morphism(const Morphism&, const Morphism&)> mproduct_mor;
  std::function<StructuralIso(const Object&, const Object&, const Object&)> associator;
  std::function<StructuralIso(const Object&)> left_unitor;
  std::function<StructuralIso(const Object&)> right_unitor;

  static Ops standard();
};

/// One batch of the sampling generators: spec.morphism_count morphisms over
/// freshly drawn endpoints. Unit tests freeze transcripts of this stream.
std::vector<Morphism> sample_morphisms(const Instance& instance, const SampleSpec& spec);

/// Category laws: associativity and identities over sampled composable chains.
std::pair<LawReport, LawReport> check_category(const Instance& instance, const SampleSpec& spec,
                                               const Ops& ops = Ops::standard());

/// Bifunctoriality of the monoidal product: interchange and id (x) id = id.
LawReport check_interchange(const Instance& instance, const SampleSpec& spec,
                            const Ops& ops = Ops::standard());

/// Naturality squares of the structural isomorphisms alpha, lambda, rho
/// (in that order).
std::array<LawReport, 3> check_naturality(const Instance& instance, const SampleSpec& spec,
                                          const Ops& ops = Ops::standard());

/// Coherence: the triangle and pentagon diagrams.
std::pair<LawReport, LawReport> check_coherence(const Instance& instance, const SampleSpec& spec,
                                                const Ops& ops = Ops::standard());

/// All eight reports in LawId order.
std::vector<LawReport> check_all(const Instance& instance, const SampleSpec& spec,
                                 const Ops& ops = Ops::standard());

}  // namespace mcat::lawcheck
