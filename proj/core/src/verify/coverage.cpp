#include "tambara/verify.hpp"

namespace tambara {

const std::vector<LawEntry>& coverage_manifest() {
  static const std::vector<LawEntry> m = {
      {"coproducts are disjoint and stable", "lccdc-axioms", "coproducts-disjoint"},
      {"slice over the empty set is trivial", "lccdc-axioms", "maps-into-empty"},
      {"maps from the initial object are epi only onto it", "lccdc-axioms", "epi-from-initial"},
      {"fold square is cartesian", "lccdc-axioms", "fold-square"},
      {"restriction commutes with coproduct inclusions", "lccdc-axioms", "inclusion-sum-square"},
      {"slices have disjoint coproducts", "lccdc-axioms", "slice-coproducts-disjoint"},
      {"slice over a coproduct splits as a product of slices", "lccdc-axioms", "slice-split-round-trip"},
      {"dependent product of the initial object", "lccdc-axioms", "dep-prod-of-empty"},

      {"triangle identities of both slice adjunctions", "adjunction-cartesian", "triangle-identities"},
      {"pullback is right adjoint to dependent sum", "adjunction-cartesian", "induction-hom-bijection"},
      {"dependent product is right adjoint to pullback", "adjunction-cartesian", "coinduction-hom-bijection"},
      {"adjunct maps are mutually inverse", "adjunction-cartesian", "adjuncts-round-trip"},
      {"products in a slice are pullbacks", "adjunction-cartesian", "sum-of-pullback-is-product"},
      {"dependent product preserves limits", "adjunction-cartesian", "pi-preserves-limits"},
      {"pullback preserves pullbacks", "adjunction-cartesian", "restriction-preserves-pullbacks"},
      {"induction unit and counit naturality squares are cartesian", "adjunction-cartesian",
       "unit-counit-squares-cartesian"},
      {"dependent sum preserves and reflects pullbacks", "adjunction-cartesian", "sum-preserves-reflects-pullbacks"},
      {"adjunct of a cartesian square is cartesian", "adjunction-cartesian", "adjunct-square-cartesian"},

      {"slice of a slice is a slice", "hoyer-appendix", "slice-of-slice-hom"},
      {"sliced induction adjunction", "hoyer-appendix", "sliced-adjunction"},
      {"sliced restriction composes", "hoyer-appendix", "sliced-composite"},
      {"pullback along the induction counit", "hoyer-appendix", "pullback-along-induction-counit"},
      {"objectwise norm restriction isomorphism", "hoyer-appendix", "norm-restriction-exchange"},
      {"span action is a monoid homomorphism", "hoyer-appendix", "action-is-additive"},

      {"span composition is associative", "lindner-laws", "span-associativity"},
      {"identity spans are units", "lindner-laws", "span-identity"},
      {"span composite apex is a fiber product", "lindner-laws", "composite-apex-is-fiber-product"},
      {"restriction past transfer", "lindner-laws", "restriction-transfer-exchange"},
      {"transfer after restriction normal form", "lindner-laws", "transfer-restriction-normal-form"},
      {"indexed spans are closed under composition", "lindner-laws", "indexed-spans-closed"},

      {"bispan composition is associative", "polynomial-laws", "bispan-associativity"},
      {"identity bispans are units", "polynomial-laws", "bispan-identity"},
      {"distributor rewrites a norm after a transfer", "polynomial-laws", "norm-after-transfer-distributes"},
      {"restriction past norm", "polynomial-laws", "restriction-past-norm"},
      {"normal form recomposes to the bispan", "polynomial-laws", "normal-form-recomposes"},
      {"bispan class equality is isomorphism", "polynomial-laws", "class-key-matches-iso-search"},
      {"semi-Tambara functor laws for representables", "polynomial-laws", "composite-acts-as-composed-action"},
      {"span embedding into bispans is a functor", "polynomial-laws", "embedding-is-functor"},

      {"coproduct is a product of spans", "product-universality", "span-product-pairing"},
      {"coproduct is a product of bispans", "product-universality", "bispan-product-pairing"},
      {"empty set is terminal for spans", "product-universality", "empty-is-terminal"},
      {"indexed categories have finite products", "product-universality", "indexed-products-complete"},

      {"addition through the fold", "mackey-factorization", "addition-through-fold"},
      {"Burnside ring desk values and non-additive norm", "mackey-factorization", "burnside-desk-values"},
      {"norm agrees through marks and through sections", "mackey-factorization", "norm-route-agreement"},
      {"marks determine a Burnside value", "mackey-factorization", "marks-round-trip"},
      {"group completion is a Mackey functor", "mackey-factorization", "group-completion"},
      {"Tambara levels are commutative semirings", "mackey-factorization", "tambara-semiring"},
      {"Burnside Tambara values match Burnside operations", "mackey-factorization", "tambara-matches-burnside"},

      {"transfer relations are indexing subcategories", "indexing-axioms", "relations-validate"},
      {"transfer relations form a lattice with trivial bottom", "indexing-axioms", "relation-lattice"},
      {"compatible pairs give bispan subcategories", "indexing-axioms", "compatible-pairs-closed"},
      {"slices of an index are indices", "indexing-axioms", "slice-index-compatible"},
      {"slice over an orbit is stabilizer sets", "indexing-axioms", "orbit-slice-is-stabilizer-sets"},
      {"dependent sum induces a functor on spans", "indexing-axioms", "sum-induced-on-spans"},
      {"dependent product induces a functor on spans", "indexing-axioms", "pi-induced-on-spans"},
      {"dependent sum induces a functor on bispans", "indexing-axioms", "sum-induced-on-bispans"},
      {"relations missing a restriction are rejected", "indexing-axioms", "broken-relation-rejected"},

      {"indices of finite groups are separable", "separability-mazur", "indices-separable"},
      {"norm of a summand is a summand", "separability-mazur", "norm-summand-sampled"},
      {"summand property on the window", "separability-mazur", "norm-summand-window"},
      {"norm of a sum splits off the norm of a part", "separability-mazur", "mazur-formula"},
      {"norm of minus one", "separability-mazur", "norm-of-minus-one"},

      {"key lemma on distributor decompositions", "main-theorem", "key-lemma"},
      {"t is natural", "main-theorem", "t-naturality"},
      {"omega through the unit", "main-theorem", "omega-round-trip"},
      {"omega is natural in the source", "main-theorem", "omega-natural-in-source"},
      {"coend relation is respected", "main-theorem", "comma-relation"},
      {"left Kan extension of a representable is the sum", "main-theorem", "lambda-bijective"},

      {"extended functor keeps zero", "mackey-preservation", "zero-preserved"},
      {"extended functor keeps invertibles", "mackey-preservation", "invertibles-preserved"},
      {"value along the empty map is the natural numbers", "mackey-preservation", "empty-source-value"},
      {"extension along a non-epi fails to be Mackey", "mackey-preservation", "empty-source-is-mackey"},

      {"forgetful functor to Mackey functors", "forgetful-cube", "tambara-to-mackey"},
      {"index inclusions preserve spans", "forgetful-cube", "mackey-index-inclusion"},
      {"forgetful and inclusion functors commute", "forgetful-cube", "cube-commutes"},
      {"restricted Tambara functor", "forgetful-cube", "restricted-functor"},
  };
  return m;
}

}  // namespace tambara
