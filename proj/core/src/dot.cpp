#include "mcat/dot.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "mcat/errors.hpp"
#include "mcat/finset.hpp"
#include "mcat/linvec.hpp"

namespace mcat::doc {

namespace {

std::string escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

const char* product_symbol(ProductKind kind) {
  switch (kind) {
    case ProductKind::Coproduct: return "⊕";   // circled plus
    case ProductKind::Product: return "×";     // times
    case ProductKind::DirectSum: return "⊕";
    case ProductKind::Tensor: return "⊗";      // circled times
  }
  return "?";
}

struct Diagram {
  std::vector<std::string> nodes;  // rendered node lines
  std::vector<std::string> edges;  // rendered edge lines

  void node(const Object& object) {
    nodes.push_back("  \"" + escape(object.str()) + "\";");
  }
  void edge(const Object& from, const Object& to, const std::string& label) {
    edges.push_back("  \"" + escape(from.str()) + "\" -> \"" + escape(to.str()) + "\" [label=\"" +
                    escape(label) + "\"];");
  }

  std::string render() const {
    std::vector<std::string> node_lines = nodes;
    std::vector<std::string> edge_lines = edges;
    std::sort(node_lines.begin(), node_lines.end());
    node_lines.erase(std::unique(node_lines.begin(), node_lines.end()), node_lines.end());
    std::sort(edge_lines.begin(), edge_lines.end());
    edge_lines.erase(std::unique(edge_lines.begin(), edge_lines.end()), edge_lines.end());
    std::ostringstream os;
    os << "digraph process {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=box];\n";
    for (const auto& line : node_lines) os << line << "\n";
    for (const auto& line : edge_lines) os << line << "\n";
    os << "}\n";
    return os.str();
  }
};

}  // namespace

std::string emit_dot(const Document& document, const std::string& morphism_name,
                     const std::string& show, Policy policy) {
  auto it = document.morphisms.find(morphism_name);
  if (it == document.morphisms.end())
    throw UsageError("diagram: unknown morphism '" + morphism_name + "'");
  const Morphism& f = it->second;

  Diagram diagram;
  diagram.node(f.dom());
  diagram.node(f.cod());
  diagram.edge(f.dom(), f.cod(), morphism_name);

  if (show == "morphism") return diagram.render();

  if (show == "seq") {
    DecompositionOutcome outcome =
        document.instance.category() == CategoryId::FinSet
            ? finset::seq_decompose(f, policy)
            : linvec::rank_factorization(f.matrix(), policy, document.instance.product());
    if (outcome.decomposable() && outcome.factors) {
      const Morphism& first = outcome.factors->first;
      const Morphism& second = outcome.factors->second;
      diagram.node(first.cod());
      diagram.edge(first.dom(), first.cod(), morphism_name + "_1");
      diagram.edge(second.dom(), second.cod(), morphism_name + "_2");
    }
    return diagram.render();
  }

  if (show == "par") {
    if (!(document.instance.category() == CategoryId::FinSet &&
          document.instance.product() == ProductKind::Coproduct))
      throw UsageError(
          "diagram --show par renders the (finset, coproduct) square; use decompose-par for "
          "fixed-split instances");
    DecompositionOutcome outcome = finset::par_decompose_coproduct(f, policy);
    if (outcome.factors && outcome.witness_isos) {
      const Morphism& product = mproduct_mor(outcome.factors->first, outcome.factors->second);
      const std::string symbol = product_symbol(document.instance.product());
      diagram.node(product.dom());
      diagram.node(product.cod());
      diagram.edge(product.dom(), product.cod(),
                   morphism_name + "_1 " + symbol + " " + morphism_name + "_2");
      diagram.edge(outcome.witness_isos->first.dom(), outcome.witness_isos->first.cod(),
                   "∼");
      diagram.edge(outcome.witness_isos->second.dom(), outcome.witness_isos->second.cod(),
                   "∼");
    }
    return diagram.render();
  }

  throw UsageError("diagram: unknown --show '" + show + "' (use morphism, seq, or par)");
}

}  // namespace mcat::doc
