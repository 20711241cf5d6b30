#include "mcat/run.hpp"

#include <algorithm>

#include "mcat/dot.hpp"
#include "mcat/errors.hpp"
#include "mcat/finset.hpp"
#include "mcat/linvec.hpp"

namespace mcat::doc {

using nlohmann::json;

namespace {

const Morphism& morphism_ref(const Document& document, const std::string& name,
                             const char* flag) {
  if (name.empty())
    throw UsageError(std::string("missing required --") + flag + " NAME");
  auto it = document.morphisms.find(name);
  if (it == document.morphisms.end())
    throw UsageError(std::string("--") + flag + ": unknown morphism '" + name + "'");
  return it->second;
}

const Object& object_ref(const Document& document, const std::string& name) {
  auto it = document.objects.find(name);
  if (it == document.objects.end()) throw UsageError("unknown object '" + name + "'");
  return it->second;
}

struct ResolvedSplit {
  Object dom1, dom2, cod1, cod2;
  std::optional<Morphism> dom_iso, cod_iso;
};

const Document::Split& split_ref(const Document& document, const std::string& name) {
  if (name.empty()) throw UsageError("this query requires --split NAME (a declared split)");
  auto it = document.splits.find(name);
  if (it == document.splits.end()) throw UsageError("--split: unknown split '" + name + "'");
  return it->second;
}

ResolvedSplit resolve_split(const Document& document, const std::string& name) {
  const Document::Split& split = split_ref(document, name);
  if (!split.dom) throw UsageError("split '" + name + "' declares no dom pair");
  if (!split.cod) throw UsageError("split '" + name + "' declares no cod pair");
  ResolvedSplit out{object_ref(document, split.dom->first),
                    object_ref(document, split.dom->second),
                    object_ref(document, split.cod->first),
                    object_ref(document, split.cod->second),
                    std::nullopt,
                    std::nullopt};
  if (split.dom_iso) out.dom_iso = morphism_ref(document, *split.dom_iso, "split");
  if (split.cod_iso) out.cod_iso = morphism_ref(document, *split.cod_iso, "split");
  return out;
}

// The decomposition square needs isomorphisms from the built product object. The
// document can only reference flat user objects, so a declared iso is read
// positionally: its domain must have |C1|*|C2| elements listed in row-major
// pair order. Without a declared iso the positions map straight across.
Morphism positional_iso(const Object& product, const Object& target,
                        const std::optional<Morphism>& declared, const char* side) {
  if (declared) {
    if (declared->dom().size() != product.size() || !(declared->cod() == target))
      throw WitnessError(std::string(side) +
                         " iso must map a " + std::to_string(product.size()) +
                         "-element object onto " + target.str());
    return Morphism::function(product, target, declared->table());
  }
  if (product.size() != target.size())
    throw WitnessError(std::string(side) + " split sizes " + std::to_string(product.size()) +
                       " do not match " + target.str() + "; declare an explicit iso");
  std::vector<std::size_t> table(product.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
  return Morphism::function(product, target, std::move(table));
}

std::string resolve_mode(const Instance& instance, const Command& command) {
  const std::string& mode = command.mode;
  switch (instance.product()) {
    case ProductKind::Coproduct:
      if (!mode.empty())
        throw UsageError("decompose-par over (finset, coproduct) takes no --mode");
      return "components";
    case ProductKind::Product:
      if (mode.empty()) return command.split.empty() ? "search" : "fixed";
      if (mode == "fixed" || mode == "search") return mode;
      throw UsageError("decompose-par over (finset, product) supports --mode fixed|search");
    case ProductKind::DirectSum:
      if (mode.empty()) return "fixed";
      if (mode == "fixed" || mode == "up-to-iso") return mode;
      throw UsageError("decompose-par over (vec, directsum) supports --mode fixed|up-to-iso");
    case ProductKind::Tensor:
      if (mode.empty() || mode == "fixed") return "fixed";
      throw UsageError(
          "decompose-par over (vec, tensor) supports only --mode fixed: with arbitrary witness "
          "isomorphisms every invertible operator decomposes, so the existential reading is not "
          "offered");
  }
  throw UsageError("unknown product kind");
}

int exit_for(const DecompositionOutcome& outcome) {
  return outcome.verdict == Verdict::Decomposable ? 0 : 1;
}

json solution_to_json(const std::vector<Complex>& values) {
  json out = json::array();
  for (const auto& z : values) out.push_back(json::array({z.real(), z.imag()}));
  return out;
}

json schmidt_to_json(const linvec::SchmidtDecomposition& schmidt) {
  json out;
  out["coefficients"] = schmidt.coefficients;
  out["rank"] = schmidt.rank;
  return out;
}

}  // namespace

Report run(const Command& command, const Document& document) {
  Instance instance = document.instance;
  if (command.tolerance_override) {
    if (instance.category() == CategoryId::FinSet && *command.tolerance_override != 0.0)
      throw UsageError("finset instances require tolerance 0");
    instance = Instance(instance.category(), instance.product(), *command.tolerance_override);
  }

  Report report;
  json& body = report.body;
  body["command"] = command.name;
  json instance_json;
  instance_json["category"] = to_string(instance.category());
  instance_json["product"] = to_string(instance.product());
  instance_json["tolerance"] = instance.tolerance();
  body["instance"] = std::move(instance_json);
  body["policy"] = to_string(command.policy);
  body["seed"] = command.seed;

  if (command.name == "check-laws") {
    lawcheck::SampleSpec spec;
    spec.seed = command.seed;
    spec.trial_count = command.trials;
    const bool finset = instance.category() == CategoryId::FinSet;
    spec.min_size = command.min_size.value_or(finset ? 0 : 1);
    spec.max_size = command.max_size.value_or(finset ? 4 : 3);
    auto reports = lawcheck::check_all(instance, spec);
    json laws = json::array();
    bool all_passed = true;
    for (const auto& law_report : reports) {
      all_passed = all_passed && law_report.passed();
      laws.push_back(law_report_to_json(law_report));
    }
    body["laws"] = std::move(laws);
    body["verdict"] = all_passed ? "pass" : "fail";
    body["trials"] = spec.trial_count;
    report.exit_code = all_passed ? 0 : 1;
    return report;
  }

  if (command.name == "decompose-seq") {
    const Morphism& f = morphism_ref(document, command.morphism, "morphism");
    body["morphism"] = command.morphism;
    DecompositionOutcome outcome =
        instance.category() == CategoryId::FinSet
            ? finset::seq_decompose(f, command.policy)
            : linvec::rank_factorization(f.matrix(), command.policy, instance.product());
    body["result"] = outcome_to_json(outcome);
    report.exit_code = exit_for(outcome);
    return report;
  }

  if (command.name == "decompose-par") {
    const Morphism& f = morphism_ref(document, command.morphism, "morphism");
    body["morphism"] = command.morphism;
    const std::string mode = resolve_mode(instance, command);
    body["mode"] = mode;

    DecompositionOutcome outcome;
    if (instance.product() == ProductKind::Coproduct) {
      outcome = finset::par_decompose_coproduct(f, command.policy);
    } else if (instance.product() == ProductKind::Product) {
      if (mode == "search") {
        outcome = finset::par_search_product(f, command.max_card);
      } else {
        ResolvedSplit split = resolve_split(document, command.split);
        Morphism dom_iso = positional_iso(mproduct_obj(split.dom1, split.dom2), f.dom(),
                                          split.dom_iso, "dom");
        Morphism cod_iso = positional_iso(mproduct_obj(split.cod1, split.cod2), f.cod(),
                                          split.cod_iso, "cod");
        outcome = finset::par_check_product(f, {split.dom1, split.dom2}, {split.cod1, split.cod2},
                                            dom_iso, cod_iso, command.policy);
      }
    } else if (instance.product() == ProductKind::DirectSum) {
      ResolvedSplit split = resolve_split(document, command.split);
      outcome = linvec::par_decompose_directsum(
          f.matrix(), {split.dom1.dim(), split.dom2.dim()}, {split.cod1.dim(), split.cod2.dim()},
          mode == "fixed" ? linvec::DirectSumMode::Fixed : linvec::DirectSumMode::UpToIso,
          command.policy, instance.tolerance());
    } else {
      ResolvedSplit split = resolve_split(document, command.split);
      linvec::TensorSplit tensor_split{split.dom1.dim(), split.dom2.dim(), split.cod1.dim(),
                                       split.cod2.dim()};
      if (tensor_split.dom_dim() != f.dom().dim() || tensor_split.cod_dim() != f.cod().dim())
        throw UsageError("split dimensions do not multiply to the morphism endpoints");
      outcome = linvec::strict_par_decompose_tensor(f.matrix(), tensor_split, command.policy);
    }
    body["result"] = outcome_to_json(outcome);
    report.exit_code = exit_for(outcome);
    return report;
  }

  if (command.name == "entangled") {
    const Morphism& state = morphism_ref(document, command.morphism, "morphism");
    body["morphism"] = command.morphism;
    if (instance.product() != ProductKind::Tensor)
      throw UsageError("entangled requires the (vec, tensor) instance");
    if (state.dom().dim() != 1)
      throw UsageError("entangled expects a state: a morphism from a dimension-1 object");
    const Document::Split& split = split_ref(document, command.split);
    if (!split.cod) throw UsageError("split '" + command.split + "' declares no cod pair");
    const std::size_t d1 = object_ref(document, split.cod->first).dim();
    const std::size_t d2 = object_ref(document, split.cod->second).dim();
    const auto& vector = state.matrix().entries();
    const bool entangled = linvec::is_entangled(vector, d1, d2, instance.tolerance());
    auto schmidt = linvec::state_schmidt(vector, d1, d2);
    body["result"] = schmidt_to_json(schmidt);
    body["result"]["entangled"] = entangled;
    body["result"]["verdict"] = entangled ? "entangled" : "product_state";
    report.exit_code = entangled ? 0 : 1;
    return report;
  }

  if (command.name == "coupling") {
    const Morphism& f = morphism_ref(document, command.morphism, "morphism");
    body["morphism"] = command.morphism;
    if (instance.product() != ProductKind::Tensor)
      throw UsageError("coupling requires the (vec, tensor) instance");
    const Document::Split& split = split_ref(document, command.split);
    if (!split.cod) throw UsageError("split '" + command.split + "' declares no cod pair");
    const std::size_t c1 = object_ref(document, split.cod->first).dim();
    const std::size_t c2 = object_ref(document, split.cod->second).dim();
    std::size_t d1 = 1, d2 = 1;
    if (split.dom) {
      d1 = object_ref(document, split.dom->first).dim();
      d2 = object_ref(document, split.dom->second).dim();
    } else if (f.dom().dim() != 1) {
      throw UsageError("split '" + command.split + "' declares no dom pair");
    }
    linvec::TensorSplit tensor_split{d1, d2, c1, c2};
    auto schmidt = linvec::operator_schmidt(f.matrix(), tensor_split);
    body["result"] = schmidt_to_json(schmidt);
    body["result"]["coupling"] = linvec::coupling_measure(f.matrix(), tensor_split);
    report.exit_code = 0;
    return report;
  }

  if (command.name == "solve") {
    const Morphism& m = morphism_ref(document, command.morphism, "morphism");
    body["morphism"] = command.morphism;
    if (instance.category() != CategoryId::Vec)
      throw UsageError("solve requires a vec instance");
    const Morphism& rhs = morphism_ref(document, command.rhs, "rhs");
    if (rhs.matrix().cols() != 1)
      throw UsageError("--rhs must name a column morphism (one-dimensional domain)");
    if (rhs.matrix().rows() != m.matrix().rows())
      throw UsageError("--rhs length does not match the morphism codomain");
    try {
      auto solution = linvec::solve(m.matrix(), rhs.matrix().entries());
      body["result"]["solution"] = solution_to_json(solution);
      body["result"]["verdict"] = "solved";
      report.exit_code = 0;
    } catch (const SingularMatrixError& e) {
      body["result"]["verdict"] = "singular";
      body["result"]["sigma_min"] = e.sigma_min();
      body["result"]["detail"] = e.what();
      report.exit_code = 1;
    }
    return report;
  }

  if (command.name == "diagram") {
    const std::string dot =
        emit_dot(document, command.morphism, command.show, command.policy);
    body["show"] = command.show;
    body["dot"] = dot;
    report.exit_code = 0;
    return report;
  }

  throw UsageError("unknown command '" + command.name +
                   "' (use check-laws, decompose-seq, decompose-par, entangled, coupling, solve, "
                   "or diagram)");
}

}  // namespace mcat::doc
